//! Splitting of a rational prime in a maximal order: the finite F_p-algebra
//! O/pO is decomposed by lifting idempotents along Frobenius, giving the
//! primes above p with their residue degrees; ramification indices and
//! valuations come from anti-uniformizer iteration.

use super::{order_coords, Lattice, Order};
use crate::arith::fp::{Fp, FpMat};
use crate::arith::{Int, Rat};
use crate::etale::{AlgElement, EtaleAlgebra};
use alloc::vec;
use alloc::vec::Vec;
use num_integer::Integer;
use num_traits::One;

/// A maximal ideal of a maximal order above p, with local invariants.
#[derive(Clone, Debug)]
pub struct PrimeIdeal {
    pub lat: Lattice,
    /// residue degree f
    pub residue_degree: usize,
    /// ramification index e = v(p)
    pub ramification: usize,
    /// an element of (O : P) \ O, used for valuations
    pub anti_uniformizer: AlgElement,
}

/// Multiplication table of O/pO on the order basis.
struct ResidueAlgebra {
    p: u64,
    dim: usize,
    /// table[i][j] = coords of b_i * b_j mod p
    table: Vec<Vec<Vec<u64>>>,
    one: Vec<u64>,
}

impl ResidueAlgebra {
    fn new(alg: &EtaleAlgebra, order: &Order, p: &Int) -> Self {
        let n = alg.dim();
        let pu = u64::try_from(p).expect("prime too large");
        let basis = order.lat.basis(alg);
        let mut table = vec![vec![vec![0u64; n]; n]; n];
        for i in 0..n {
            for j in i..n {
                let prod = alg.mul(&basis[i], &basis[j]);
                let coords = order_coords(alg, order, &prod).expect("order not closed");
                let row: Vec<u64> = coords
                    .iter()
                    .map(|c| u64::try_from(&c.mod_floor(p)).unwrap())
                    .collect();
                table[i][j] = row.clone();
                table[j][i] = row;
            }
        }
        let one = order_coords(alg, order, &alg.one())
            .expect("1 not in order")
            .iter()
            .map(|c| u64::try_from(&c.mod_floor(p)).unwrap())
            .collect();
        ResidueAlgebra {
            p: pu,
            dim: n,
            table,
            one,
        }
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let f = Fp::new(self.p);
        let mut out = vec![0u64; self.dim];
        for i in 0..self.dim {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.dim {
                if b[j] == 0 {
                    continue;
                }
                let c = f.mul(a[i], b[j]);
                for k in 0..self.dim {
                    let t = self.table[i][j][k];
                    if t != 0 {
                        out[k] = f.add(out[k], f.mul(c, t));
                    }
                }
            }
        }
        out
    }

    fn pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut r = self.one.clone();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        r
    }

    /// Frobenius power high enough to kill all nilpotents: x -> x^(p^m)
    /// with p^m >= dim.
    fn deep_frobenius(&self, a: &[u64]) -> Vec<u64> {
        let mut cur = a.to_vec();
        let mut size = 1u128;
        while size < self.dim as u128 {
            cur = self.pow(&cur, self.p);
            size *= self.p as u128;
        }
        cur
    }

    fn frobenius_matrix(&self) -> FpMat {
        let mut m = FpMat::zero(self.p, self.dim, self.dim);
        for i in 0..self.dim {
            let mut e = vec![0u64; self.dim];
            e[i] = 1;
            let fi = self.pow(&e, self.p);
            for j in 0..self.dim {
                m.set(i, j, fi[j]);
            }
        }
        m
    }
}

fn in_span(v: &[u64], rows: &[Vec<u64>], p: u64) -> bool {
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    if rows.is_empty() {
        return false;
    }
    let n = v.len();
    let mut m = FpMat::zero(p, rows.len(), n);
    for (i, r) in rows.iter().enumerate() {
        for j in 0..n {
            m.set(i, j, r[j]);
        }
    }
    m.solve_left(v).is_some()
}

/// Primes of a maximal order above p, in canonical lattice order.
pub fn primes_above(alg: &EtaleAlgebra, order: &Order, p: &Int) -> Vec<PrimeIdeal> {
    let n = alg.dim();
    let ra = ResidueAlgebra::new(alg, order, p);
    let frob = ra.frobenius_matrix();

    // radical of O/pO: kernel of the iterated Frobenius matrix
    let rad_basis: Vec<Vec<u64>> = {
        let mut fk = frob.clone();
        let mut size = ra.p as u128;
        while size < n as u128 {
            fk = fk.mul(&frob);
            size *= ra.p as u128;
        }
        fk.left_kernel()
    };

    // Frobenius-fixed subspace modulo the radical: x^p - x in rad-span
    let fixed: Vec<Vec<u64>> = {
        let f = Fp::new(ra.p);
        let mut stacked = FpMat::zero(ra.p, n + rad_basis.len(), n);
        for i in 0..n {
            for j in 0..n {
                let v = frob.at(i, j);
                stacked.set(i, j, if i == j { f.sub(v, 1) } else { v });
            }
        }
        for (i, row) in rad_basis.iter().enumerate() {
            for j in 0..n {
                stacked.set(n + i, j, row[j]);
            }
        }
        stacked
            .left_kernel()
            .into_iter()
            .map(|v| v[..n].to_vec())
            .collect()
    };

    // split the identity into primitive block idempotents
    let mut blocks: Vec<Vec<u64>> = vec![ra.one.clone()];
    loop {
        let mut split_done = true;
        let mut next: Vec<Vec<u64>> = Vec::new();
        'blocks: for e in &blocks {
            // subspace regarded as zero on the block
            let f = Fp::new(ra.p);
            let off_block: Vec<Vec<u64>> = {
                let one_minus_e: Vec<u64> = (0..n).map(|k| f.sub(ra.one[k], e[k])).collect();
                let mut s = rad_basis.clone();
                for i in 0..n {
                    let mut v = vec![0u64; n];
                    v[i] = 1;
                    s.push(ra.mul(&v, &one_minus_e));
                }
                s
            };
            let kernel_dim_on_block = |w: &[u64]| -> usize {
                // dim {x : x * w * e ∈ off_block}
                let mut stacked = FpMat::zero(ra.p, n + off_block.len(), n);
                for i in 0..n {
                    let mut v = vec![0u64; n];
                    v[i] = 1;
                    let img = ra.mul(&ra.mul(&v, w), e);
                    for j in 0..n {
                        stacked.set(i, j, img[j]);
                    }
                }
                for (i, row) in off_block.iter().enumerate() {
                    for j in 0..n {
                        stacked.set(n + i, j, f.neg(row[j]));
                    }
                }
                let kern = stacked.left_kernel();
                let mut proj = FpMat::zero(ra.p, kern.len(), n);
                for (i, row) in kern.iter().enumerate() {
                    for j in 0..n {
                        proj.set(i, j, row[j]);
                    }
                }
                proj.rank()
            };
            let d0 = kernel_dim_on_block(&ra.one);
            for v in &fixed {
                let ve = ra.mul(v, e);
                // eigenvalues of ve on the block: c with a kernel on the
                // semisimple block part
                let mut eigs: Vec<u64> = Vec::new();
                for c in 0..ra.p {
                    let mut d = ve.clone();
                    for k in 0..n {
                        d[k] = f.sub(d[k], f.mul(c, e[k]));
                    }
                    if kernel_dim_on_block(&d) > d0 {
                        eigs.push(c);
                    }
                }
                if eigs.len() >= 2 {
                    for &c in &eigs {
                        let mut acc = e.clone();
                        for &c2 in &eigs {
                            if c2 == c {
                                continue;
                            }
                            let mut t = ve.clone();
                            for k in 0..n {
                                t[k] = f.sub(t[k], f.mul(c2, e[k]));
                            }
                            let denom = f.inv(f.sub(c, c2));
                            let mut scaled = vec![0u64; n];
                            for k in 0..n {
                                scaled[k] = f.mul(t[k], denom);
                            }
                            acc = ra.mul(&acc, &scaled);
                        }
                        next.push(acc);
                    }
                    split_done = false;
                    continue 'blocks;
                }
            }
            next.push(e.clone());
        }
        blocks = next;
        if split_done {
            break;
        }
    }
    // Frobenius powering makes each block idempotent exact in O/pO
    for e in &mut blocks {
        *e = ra.deep_frobenius(e);
    }

    let basis = order.lat.basis(alg);
    let mut out = Vec::new();
    for e in &blocks {
        let f = Fp::new(ra.p);
        // maximal ideal of the block: x with x*e in radical + (1-e)-part
        let one_minus_e: Vec<u64> = (0..n).map(|k| f.sub(ra.one[k], e[k])).collect();
        let mut allowed: Vec<Vec<u64>> = rad_basis.clone();
        for i in 0..n {
            let mut v = vec![0u64; n];
            v[i] = 1;
            allowed.push(ra.mul(&v, &one_minus_e));
        }
        let mut stacked = FpMat::zero(ra.p, n + allowed.len(), n);
        for i in 0..n {
            let mut v = vec![0u64; n];
            v[i] = 1;
            let img = ra.mul(&v, e);
            for j in 0..n {
                stacked.set(i, j, img[j]);
            }
        }
        for (i, row) in allowed.iter().enumerate() {
            for j in 0..n {
                stacked.set(n + i, j, f.neg(row[j]));
            }
        }
        let kern = stacked.left_kernel();
        let m_dim = {
            let mut proj = FpMat::zero(ra.p, kern.len(), n);
            for (i, row) in kern.iter().enumerate() {
                for j in 0..n {
                    proj.set(i, j, row[j]);
                }
            }
            proj.rank()
        };
        let mut gens: Vec<AlgElement> = basis
            .iter()
            .map(|b| alg.scale(b, &Rat::from_integer(p.clone())))
            .collect();
        for row in &kern {
            let mut acc = alg.zero();
            for (i, c) in row[..n].iter().enumerate() {
                if *c != 0 {
                    acc = alg.add(
                        &acc,
                        &alg.scale(&basis[i], &Rat::from_integer(Int::from(*c))),
                    );
                }
            }
            gens.push(acc);
        }
        let lat = Lattice::from_elements(alg, &gens);
        let residue_degree = n - m_dim;
        let colon = order.lat.colon(alg, &lat);
        let mut anti = None;
        for b in colon.basis(alg) {
            if !order.lat.contains(&b) {
                anti = Some(b);
                break;
            }
        }
        let anti = anti.expect("prime of a maximal order must be invertible");
        let mut e_ram = 0usize;
        {
            let mut x = alg.from_rat(&Rat::from_integer(p.clone()));
            loop {
                let nx = alg.mul(&x, &anti);
                if order.lat.contains(&nx) {
                    e_ram += 1;
                    x = nx;
                } else {
                    break;
                }
                assert!(e_ram <= n, "runaway valuation");
            }
        }
        out.push(PrimeIdeal {
            lat,
            residue_degree,
            ramification: e_ram,
            anti_uniformizer: anti,
        });
    }
    out.sort_by(|a, b| a.lat.cmp(&b.lat));
    debug_assert_eq!(
        out.iter()
            .map(|q| q.residue_degree * q.ramification)
            .sum::<usize>(),
        n
    );
    out
}

/// Valuation of a nonzero element at a prime of the maximal order.
pub fn valuation_at(alg: &EtaleAlgebra, order: &Order, prime: &PrimeIdeal, x: &AlgElement) -> i64 {
    assert!(!x.is_zero());
    let p = alg.input.p.clone();
    let (nums, den) = crate::arith::clear_denominators(&x.coords);
    let y0 = AlgElement {
        coords: nums.iter().map(|c| Rat::from_integer(c.clone())).collect(),
    };
    let vd = if den.is_one() {
        0i64
    } else {
        crate::arith::int::valuation(&den, &p) as i64 * prime.ramification as i64
    };
    // force the element into the order by a p-power scaling if needed
    let mut extra = 0i64;
    let mut y = y0;
    while !order.lat.contains(&y) {
        y = alg.scale(&y, &Rat::from_integer(p.clone()));
        extra += prime.ramification as i64;
        assert!(extra < 10_000, "valuation scaling runaway");
    }
    let mut v = 0i64;
    loop {
        let ny = alg.mul(&y, &prime.anti_uniformizer);
        if order.lat.contains(&ny) {
            v += 1;
            y = ny;
        } else {
            break;
        }
        assert!(v < 100_000, "runaway valuation");
    }
    v - extra - vd
}

/// Valuation of a full-rank lattice at a prime: min over basis elements.
pub fn lattice_valuation_at(
    alg: &EtaleAlgebra,
    order: &Order,
    prime: &PrimeIdeal,
    lat: &Lattice,
) -> i64 {
    lat.basis(alg)
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| valuation_at(alg, order, prime, b))
        .min()
        .expect("empty lattice")
}

/// Factor an integral O-ideal into primes above the rational primes
/// dividing its norm (index in O).
pub fn factor_ideal(alg: &EtaleAlgebra, order: &Order, ideal: &Lattice) -> Vec<(PrimeIdeal, i64)> {
    let norm = order.lat.index_in(ideal);
    let mut out = Vec::new();
    if norm.is_one() {
        return out;
    }
    for (p, _) in crate::arith::int::factor(&norm) {
        for q in primes_above(alg, order, &p) {
            let v = lattice_valuation_at(alg, order, &q, ideal);
            if v != 0 {
                out.push((q, v));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::ZPoly;
    use crate::etale::make_algebra;
    use crate::orders::maximal_order;

    #[test]
    fn split_inert_ramified_quadratic() {
        // x^2+3 at p=3: ramified, one prime with e=2, f=1
        let alg = make_algebra(&ZPoly::from_i64(&[3, 0, 1]), &Int::from(3)).unwrap();
        let ol = maximal_order(&alg);
        let ps = primes_above(&alg, &ol, &Int::from(3));
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].ramification, 2);
        assert_eq!(ps[0].residue_degree, 1);
        // p=2 is inert in Q(sqrt(-3))
        let p2 = primes_above(&alg, &ol, &Int::from(2));
        assert_eq!(p2.len(), 1);
        assert_eq!(p2[0].ramification, 1);
        assert_eq!(p2[0].residue_degree, 2);
        // p=7 splits (-3 is a square mod 7)
        let p7 = primes_above(&alg, &ol, &Int::from(7));
        assert_eq!(p7.len(), 2);
        for q in &p7 {
            assert_eq!(q.ramification, 1);
            assert_eq!(q.residue_degree, 1);
        }
    }

    #[test]
    fn valuations_consistent() {
        let alg = make_algebra(&ZPoly::from_i64(&[3, 0, 1]), &Int::from(3)).unwrap();
        let ol = maximal_order(&alg);
        let q = &primes_above(&alg, &ol, &Int::from(3))[0];
        assert_eq!(valuation_at(&alg, &ol, q, &alg.pi()), 1);
        assert_eq!(
            valuation_at(&alg, &ol, q, &alg.from_rat(&crate::arith::rat(3))),
            2
        );
        assert_eq!(
            valuation_at(&alg, &ol, q, &alg.from_rat(&crate::arith::rat_frac(1, 3))),
            -2
        );
        assert_eq!(valuation_at(&alg, &ol, q, &alg.one()), 0);
    }

    #[test]
    fn x4_9_splitting_at_3() {
        // x^4+9 at p=3: one prime with e=2, f=2
        let alg = make_algebra(&ZPoly::from_i64(&[9, 0, 0, 0, 1]), &Int::from(3)).unwrap();
        let ol = maximal_order(&alg);
        let ps = primes_above(&alg, &ol, &Int::from(3));
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].ramification, 2);
        assert_eq!(ps[0].residue_degree, 2);
    }

    #[test]
    fn x8_16_splitting_at_2() {
        // Q[x]/(x^8+16) = Q(zeta_16): totally ramified at 2
        let alg =
            make_algebra(&ZPoly::from_i64(&[16, 0, 0, 0, 0, 0, 0, 0, 1]), &Int::from(2)).unwrap();
        let ol = maximal_order(&alg);
        let ps = primes_above(&alg, &ol, &Int::from(2));
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].ramification, 8);
        assert_eq!(ps[0].residue_degree, 1);
    }

    #[test]
    fn detailedlowprank_splitting_at_3() {
        // slopes {0, 1/2 x 4, 1}: there is a slope-0 place, a slope-1 place,
        // and the supersingular middle with slope 1/2
        let h = ZPoly::from_i64(&[27, -9, 18, -6, 6, -1, 1]);
        let alg = make_algebra(&h, &Int::from(3)).unwrap();
        let ol = maximal_order(&alg);
        let ps = primes_above(&alg, &ol, &Int::from(3));
        let mut slopes: Vec<(Rat, usize)> = ps
            .iter()
            .map(|q| {
                (
                    Rat::new(
                        Int::from(valuation_at(&alg, &ol, q, &alg.pi())),
                        Int::from(q.ramification as i64),
                    ),
                    q.ramification * q.residue_degree,
                )
            })
            .collect();
        slopes.sort();
        let total: usize = slopes.iter().map(|x| x.1).sum();
        assert_eq!(total, 6);
        use crate::arith::{rat, rat_frac};
        // slope multiset weighted by local degree: 0 (deg 1), 1/2 (deg 4), 1 (deg 1)
        let mut weighted: Vec<(Rat, usize)> = slopes.clone();
        weighted.sort();
        assert_eq!(weighted.first().unwrap().0, rat(0));
        assert_eq!(weighted.last().unwrap().0, rat(1));
        let mid: usize = weighted
            .iter()
            .filter(|(s, _)| *s == rat_frac(1, 2))
            .map(|x| x.1)
            .sum();
        assert_eq!(mid, 4);
    }

    #[test]
    fn factor_principal_ideal() {
        let alg = make_algebra(&ZPoly::from_i64(&[3, 0, 1]), &Int::from(3)).unwrap();
        let ol = maximal_order(&alg);
        // (pi) factors as the ramified prime to the first power
        let ideal = ol.lat.scale_elem(&alg, &alg.pi());
        let fac = factor_ideal(&alg, &ol, &ideal);
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].1, 1);
        assert_eq!(fac[0].0.ramification, 2);
    }
}
