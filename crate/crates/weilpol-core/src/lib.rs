//! Exact-arithmetic machinery for abelian varieties over prime fields in a
//! squarefree isogeny class: the étale algebra `L = Q[x]/(h)` with its CM
//! involution, orders and fractional ideals, unit groups, CM-types, the
//! generalized residual reflex condition, and principal polarizations.
//!
//! Everything is computed over exact integers and rationals; no decision in
//! the library is made with floating point. The crate is `no_std` (with
//! `alloc`); IO, file formats and the CLI live in the companion crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod arith;
pub mod etale;
pub mod nf;
pub mod orders;
pub mod units;
pub mod cmtypes;
pub mod padic;
pub mod pol;
pub mod fixtures;
pub mod pipeline;

pub use arith::{Int, Rat};
