//! Arbitrary-precision arithmetic substrate: integer matrices and their
//! normal forms, lattice reduction and enumeration, polynomials over Q,
//! factorization, and certified root isolation.

pub mod int;
pub mod matrix;
pub mod lll;
pub mod fincke;
pub mod fp;
pub mod poly;
pub mod factorq;
pub mod interval;
pub mod roots;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact integer used everywhere in the crate.
pub type Int = BigInt;
/// Exact rational used everywhere in the crate.
pub type Rat = BigRational;

use alloc::vec::Vec;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Common denominator of a slice of rationals (always positive).
pub fn common_denominator(xs: &[Rat]) -> Int {
    use num_integer::Integer as _;
    let mut d = Int::from(1);
    for x in xs {
        d = d.lcm(x.denom());
    }
    d
}

/// Scale rationals by their common denominator, returning (numerators, den).
pub fn clear_denominators(xs: &[Rat]) -> (Vec<Int>, Int) {
    let d = common_denominator(xs);
    let nums = xs
        .iter()
        .map(|x| x.numer() * (&d / x.denom()))
        .collect::<Vec<_>>();
    (nums, d)
}
