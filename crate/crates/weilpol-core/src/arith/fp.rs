//! Arithmetic mod a small prime: polynomials (with factorization) and dense
//! linear algebra. Primes are assumed < 2^31 so products fit in u64/u128.

use super::int::XorShift;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "division by zero mod {}", self.p);
        self.pow(a % self.p, self.p - 2)
    }
}

/// Dense polynomial over F_p, low degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    pub p: u64,
    pub c: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in &mut c {
            *x %= p;
        }
        let mut r = FpPoly { p, c };
        r.normalize();
        r
    }
    pub fn zero(p: u64) -> Self {
        FpPoly { p, c: vec![] }
    }
    pub fn one(p: u64) -> Self {
        FpPoly { p, c: vec![1] }
    }
    pub fn x(p: u64) -> Self {
        FpPoly { p, c: vec![0, 1] }
    }
    fn normalize(&mut self) {
        while let Some(&0) = self.c.last() {
            self.c.pop();
        }
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.c.len() - 1
    }
    pub fn lc(&self) -> u64 {
        *self.c.last().expect("lc of zero")
    }
    fn f(&self) -> Fp {
        Fp::new(self.p)
    }

    pub fn add(&self, o: &Self) -> Self {
        let f = self.f();
        let n = self.c.len().max(o.c.len());
        let mut c = vec![0u64; n];
        for i in 0..n {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = o.c.get(i).copied().unwrap_or(0);
            c[i] = f.add(a, b);
        }
        FpPoly::new(self.p, c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let f = self.f();
        let n = self.c.len().max(o.c.len());
        let mut c = vec![0u64; n];
        for i in 0..n {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = o.c.get(i).copied().unwrap_or(0);
            c[i] = f.sub(a, b);
        }
        FpPoly::new(self.p, c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let f = self.f();
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                if b != 0 {
                    c[i + j] = f.add(c[i + j], f.mul(a, b));
                }
            }
        }
        FpPoly::new(self.p, c)
    }

    pub fn scale(&self, k: u64) -> Self {
        let f = self.f();
        FpPoly::new(self.p, self.c.iter().map(|&a| f.mul(a, k)).collect())
    }

    pub fn monic(&self) -> Self {
        assert!(!self.is_zero());
        self.scale(self.f().inv(self.lc()))
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        let f = self.f();
        let dl = d.lc();
        let dinv = f.inv(dl);
        let mut rem = self.c.clone();
        let dd = d.c.len() - 1;
        if rem.len() <= dd {
            return (Self::zero(self.p), self.clone());
        }
        let mut q = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let coef = f.mul(rem[i], dinv);
            if coef == 0 {
                continue;
            }
            q[i - dd] = coef;
            for j in 0..=dd {
                let v = f.mul(coef, d.c[j]);
                rem[i - dd + j] = f.sub(rem[i - dd + j], v);
            }
        }
        (FpPoly::new(self.p, q), FpPoly::new(self.p, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Self::zero(self.p);
        }
        let f = self.f();
        let c = (1..self.c.len())
            .map(|i| f.mul(self.c[i], (i as u64) % self.p))
            .collect();
        FpPoly::new(self.p, c)
    }

    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut r = Self::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        r
    }

    /// x^(p^k) mod m via repeated Frobenius.
    fn frob_power(&self, m: &Self, k: usize) -> Self {
        let mut r = self.rem(m);
        for _ in 0..k {
            r = r.pow_mod_big(self.p, m);
        }
        r
    }

    fn pow_mod_big(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut r = Self::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        r
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = self.f();
        let mut acc = 0u64;
        for &c in self.c.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// Full factorization into monic irreducibles with multiplicities.
    pub fn factor(&self, rng: &mut XorShift) -> Vec<(FpPoly, u64)> {
        assert!(!self.is_zero());
        let mut out: Vec<(FpPoly, u64)> = Vec::new();
        let mut work = vec![(self.monic(), 1u64)];
        while let Some((g, mult)) = work.pop() {
            if g.degree() == 0 {
                continue;
            }
            let d = g.derivative();
            if d.is_zero() {
                // g = h(x^p); take p-th root (Frobenius is identity on F_p)
                let mut c = Vec::new();
                let mut i = 0usize;
                while i < g.c.len() {
                    c.push(g.c[i]);
                    i += self.p as usize;
                }
                work.push((FpPoly::new(self.p, c), mult * self.p));
                continue;
            }
            let sf = g.gcd(&d);
            if sf.degree() > 0 {
                let (q, r) = g.divrem(&sf);
                debug_assert!(r.is_zero());
                work.push((q, mult));
                work.push((sf, mult));
                continue;
            }
            // g squarefree: distinct degree then equal degree
            for (h, deg) in g.distinct_degree() {
                for irr in h.equal_degree(deg, rng) {
                    let mut merged = false;
                    for e in out.iter_mut() {
                        if e.0 == irr {
                            e.1 += mult;
                            merged = true;
                            break;
                        }
                    }
                    if !merged {
                        out.push((irr, mult));
                    }
                }
            }
        }
        out.sort_by(|a, b| (a.0.c.len(), &a.0.c).cmp(&(b.0.c.len(), &b.0.c)));
        out
    }

    /// Distinct-degree split of a squarefree monic polynomial:
    /// returns (product of irreducibles of degree d, d).
    fn distinct_degree(&self) -> Vec<(FpPoly, usize)> {
        let mut out = Vec::new();
        let mut g = self.clone();
        let mut h = Self::x(self.p);
        let mut d = 0usize;
        while g.degree() >= 1 {
            d += 1;
            if 2 * d > g.degree() {
                out.push((g.clone(), g.degree()));
                break;
            }
            h = h.frob_power(&g, 1);
            let diff = h.sub(&Self::x(self.p));
            let f = g.gcd(&diff);
            if f.degree() > 0 {
                out.push((f.clone(), d));
                let (q, r) = g.divrem(&f);
                debug_assert!(r.is_zero());
                g = q;
                h = h.rem(&g);
            }
        }
        out
    }

    /// Cantor-Zassenhaus equal-degree splitting of a squarefree monic
    /// product of degree-d irreducibles.
    fn equal_degree(&self, d: usize, rng: &mut XorShift) -> Vec<FpPoly> {
        if self.degree() == d {
            return vec![self.clone()];
        }
        let n = self.degree();
        loop {
            // random polynomial of degree < n
            let mut c = vec![0u64; n];
            for x in c.iter_mut() {
                *x = rng.below(self.p);
            }
            let r = FpPoly::new(self.p, c);
            if r.is_zero() || r.degree() == 0 {
                continue;
            }
            let g0 = self.gcd(&r);
            let split = if g0.degree() > 0 {
                g0
            } else if self.p == 2 {
                // trace map over F_{2^d}
                let mut t = r.clone();
                let mut acc = r.clone();
                for _ in 1..d {
                    acc = acc.mul(&acc).rem(self);
                    t = t.add(&acc);
                }
                self.gcd(&t)
            } else {
                // r^((p^d-1)/2) mod self, computed as a chain to keep
                // exponents in u64 range for moderate p^d
                let e_high = d as u32;
                let mut acc = r.rem(self);
                // acc = r^(p^d) step by step, collecting r^((p^d-1)/2):
                // (p^d - 1)/2 = (p-1)/2 * (1 + p + p^2 + ... + p^(d-1))
                let half = (self.p - 1) / 2;
                let mut s = Self::one(self.p);
                for _ in 0..e_high {
                    s = s.mul(&acc).rem(self);
                    acc = acc.frob_power(self, 1);
                }
                let w = s.pow_mod_big(half, self);
                let w1 = w.sub(&Self::one(self.p));
                self.gcd(&w1)
            };
            if split.degree() > 0 && split.degree() < self.degree() {
                let (q, rem) = self.divrem(&split);
                debug_assert!(rem.is_zero());
                let mut out = split.equal_degree(d, rng);
                out.extend(q.equal_degree(d, rng));
                return out;
            }
        }
    }

    pub fn is_irreducible(&self, rng: &mut XorShift) -> bool {
        if self.is_zero() || self.degree() == 0 {
            return false;
        }
        let f = self.factor(rng);
        f.len() == 1 && f[0].1 == 1
    }
}

/// Dense matrix over F_p; vectors are rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMat {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl FpMat {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        FpMat {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }
    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let f = Fp::new(self.p);
        let mut out = Self::zero(self.p, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    let v = f.mul(a, o.at(k, j));
                    let idx = i * o.cols + j;
                    out.data[idx] = f.add(out.data[idx], v);
                }
            }
        }
        out
    }

    pub fn mul_row(&self, row: &[u64]) -> Vec<u64> {
        assert_eq!(row.len(), self.rows);
        let f = Fp::new(self.p);
        let mut out = vec![0u64; self.cols];
        for (i, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for j in 0..self.cols {
                out[j] = f.add(out[j], f.mul(c, self.at(i, j)));
            }
        }
        out
    }

    /// Row-reduce in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = Fp::new(self.p);
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let mut piv = None;
            for i in r..self.rows {
                if self.at(i, c) != 0 {
                    piv = Some(i);
                    break;
                }
            }
            let Some(pi) = piv else { continue };
            for j in 0..self.cols {
                self.data.swap(r * self.cols + j, pi * self.cols + j);
            }
            let inv = f.inv(self.at(r, c));
            for j in 0..self.cols {
                let v = f.mul(self.at(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && self.at(i, c) != 0 {
                    let factor = self.at(i, c);
                    for j in 0..self.cols {
                        let v = f.sub(self.at(i, j), f.mul(factor, self.at(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the left kernel {x : x * self = 0}, rows.
    pub fn left_kernel(&self) -> Vec<Vec<u64>> {
        // kernel of the transpose-action: row-reduce [self^T] and read free
        // relations; equivalently right-kernel of self^T
        let mut t = FpMat::zero(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j));
            }
        }
        t.right_kernel()
    }

    /// Basis of {x : self * x^T = 0}, returned as rows.
    pub fn right_kernel(&self) -> Vec<Vec<u64>> {
        let f = Fp::new(self.p);
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for c in 0..self.cols {
            if pivot_of_col[c].is_some() {
                continue;
            }
            let mut vec_ = vec![0u64; self.cols];
            vec_[c] = 1;
            for cc in 0..self.cols {
                if let Some(pr) = pivot_of_col[cc] {
                    vec_[cc] = f.neg(m.at(pr, c));
                }
            }
            basis.push(vec_);
        }
        basis
    }

    /// Solve x * self = target; None when inconsistent.
    pub fn solve_left(&self, target: &[u64]) -> Option<Vec<u64>> {
        // augment self^T | target^T and reduce
        let f = Fp::new(self.p);
        let mut aug = FpMat::zero(self.p, self.cols, self.rows + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(j, i, self.at(i, j));
            }
        }
        for j in 0..self.cols {
            aug.set(j, self.rows, target[j] % self.p);
        }
        let pivots = aug.rref();
        let mut x = vec![0u64; self.rows];
        for (r, &c) in pivots.iter().enumerate() {
            if c == self.rows {
                return None; // pivot in augmented column
            }
            x[c] = aug.at(r, self.rows);
        }
        // verify (handles rank-deficient consistent systems)
        let check = self.mul_row(&x);
        for j in 0..self.cols {
            if check[j] % self.p != target[j] % self.p {
                return None;
            }
        }
        let _ = f;
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_factor_simple() {
        let mut rng = XorShift::new(1);
        // x^2 + 1 mod 5 = (x+2)(x+3)
        let f = FpPoly::new(5, vec![1, 0, 1]);
        let fac = f.factor(&mut rng);
        assert_eq!(fac.len(), 2);
        let prod = fac.iter().fold(FpPoly::one(5), |acc, (g, e)| {
            let mut a = acc;
            for _ in 0..*e {
                a = a.mul(g);
            }
            a
        });
        assert_eq!(prod, f.monic());
    }

    #[test]
    fn poly_factor_char2() {
        let mut rng = XorShift::new(1);
        // x^4+x+1 irreducible over F_2; (x^2+x+1)^2 = x^4+x^2+1
        let f = FpPoly::new(2, vec![1, 1, 0, 0, 1]);
        assert!(f.is_irreducible(&mut rng));
        let g = FpPoly::new(2, vec![1, 0, 1, 0, 1]);
        let fac = g.factor(&mut rng);
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].1, 2);
        assert_eq!(fac[0].0, FpPoly::new(2, vec![1, 1, 1]));
    }

    #[test]
    fn poly_factor_multiplicities() {
        let mut rng = XorShift::new(9);
        // (x+1)^3 (x^2+x+2) mod 7
        let a = FpPoly::new(7, vec![1, 1]);
        let b = FpPoly::new(7, vec![2, 1, 1]);
        let f = a.mul(&a).mul(&a).mul(&b);
        let fac = f.factor(&mut rng);
        let mut total = FpPoly::one(7);
        for (g, e) in &fac {
            for _ in 0..*e {
                total = total.mul(g);
            }
        }
        assert_eq!(total, f.monic());
        assert!(fac.iter().any(|(g, e)| *e == 3 && g == &a.monic()));
    }

    #[test]
    fn linear_algebra() {
        let mut m = FpMat::zero(5, 3, 3);
        m.set(0, 0, 1);
        m.set(0, 1, 2);
        m.set(1, 1, 1);
        m.set(2, 0, 2);
        m.set(2, 1, 4);
        assert_eq!(m.rank(), 2);
        let k = m.left_kernel();
        assert_eq!(k.len(), 1);
        let prod = m.mul_row(&k[0]);
        assert!(prod.iter().all(|&x| x == 0));
    }
}
