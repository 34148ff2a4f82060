//! Dense univariate polynomials over Z and Q, with exact gcd, resultants,
//! squarefree decomposition and Newton power sums.

use super::int::is_prime;
#[cfg(test)]
use super::int::XorShift;
use super::matrix::IntMatrix;
use super::{clear_denominators, Int, Rat};
use alloc::vec;
use alloc::vec::Vec;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZPoly {
    pub c: Vec<Int>,
}

impl core::fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}*x")?,
                _ => write!(f, "{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl ZPoly {
    pub fn new(mut c: Vec<Int>) -> Self {
        while let Some(t) = c.last() {
            if t.is_zero() {
                c.pop();
            } else {
                break;
            }
        }
        ZPoly { c }
    }
    pub fn zero() -> Self {
        ZPoly { c: vec![] }
    }
    pub fn one() -> Self {
        ZPoly { c: vec![Int::one()] }
    }
    pub fn x() -> Self {
        ZPoly {
            c: vec![Int::zero(), Int::one()],
        }
    }
    pub fn constant(a: Int) -> Self {
        Self::new(vec![a])
    }
    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Int::from(x)).collect())
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.c.len() - 1
    }
    pub fn lc(&self) -> &Int {
        self.c.last().expect("lc of zero polynomial")
    }
    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lc().is_one()
    }
    pub fn coeff(&self, i: usize) -> Int {
        self.c.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn neg(&self) -> Self {
        ZPoly::new(self.c.iter().map(|a| -a.clone()).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut c = vec![Int::zero(); n];
        for i in 0..n {
            c[i] = self.coeff(i) + o.coeff(i);
        }
        ZPoly::new(c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut c = vec![Int::zero(); n];
        for i in 0..n {
            c[i] = self.coeff(i) - o.coeff(i);
        }
        ZPoly::new(c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return ZPoly::zero();
        }
        let mut c = vec![Int::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        ZPoly::new(c)
    }

    pub fn mul_scalar(&self, k: &Int) -> Self {
        ZPoly::new(self.c.iter().map(|a| a * k).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut r = ZPoly::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Division with remainder by a monic divisor.
    pub fn divrem_monic(&self, d: &Self) -> (Self, Self) {
        assert!(d.is_monic());
        let dd = d.degree();
        let mut rem = self.c.clone();
        if rem.len() <= dd {
            return (ZPoly::zero(), self.clone());
        }
        let mut q = vec![Int::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let coef = rem[i].clone();
            if coef.is_zero() {
                continue;
            }
            q[i - dd] = coef.clone();
            for j in 0..=dd {
                let v = &coef * &d.c[j];
                rem[i - dd + j] -= v;
            }
        }
        (ZPoly::new(q), ZPoly::new(rem))
    }

    /// Pseudo-remainder: lc(d)^(deg f - deg d + 1) * f = q*d + r, with the
    /// multiplier applied exactly (padding when leading terms cancel early).
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let dd = d.degree();
        if self.is_zero() || self.degree() < dd {
            return self.clone();
        }
        let l = d.lc().clone();
        let total = self.degree() - dd + 1;
        let mut steps = 0usize;
        let mut rem = self.clone();
        while !rem.is_zero() && rem.degree() >= dd {
            let k = rem.degree() - dd;
            let coef = rem.lc().clone();
            rem = rem.mul_scalar(&l);
            steps += 1;
            let mut c = vec![Int::zero(); k];
            c.extend(d.mul_scalar(&coef).c);
            rem = rem.sub(&ZPoly::new(c));
        }
        for _ in steps..total {
            rem = rem.mul_scalar(&l);
        }
        rem
    }

    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for a in &self.c {
            g = g.gcd(a);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        ZPoly::new(self.c.iter().map(|a| a / &g).collect())
    }

    /// Primitive-PRS gcd (primitive, positive leading coefficient).
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = o.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.primitive();
            }
            if r.degree() == 0 {
                return ZPoly::one();
            }
            a = b;
            b = r.primitive();
        }
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return ZPoly::zero();
        }
        ZPoly::new(
            (1..self.c.len())
                .map(|i| &self.c[i] * Int::from(i as u64))
                .collect(),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() == 0 {
            return true;
        }
        let g = self.gcd(&self.derivative());
        g.degree() == 0
    }

    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.primitive();
        }
        // exact division of primitive parts
        let (q, r) = divide_exact(&self.primitive(), &g);
        debug_assert!(r.is_zero());
        q.primitive()
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + Rat::from_integer(a.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for a in self.c.iter().rev() {
            acc = acc * x + int_to_f64(a);
        }
        acc
    }

    /// Substitute x -> x + a.
    pub fn shift(&self, a: &Int) -> Self {
        // Horner on (x + a)
        let mut acc = ZPoly::zero();
        let xa = ZPoly::new(vec![a.clone(), Int::one()]);
        for c in self.c.iter().rev() {
            acc = acc.mul(&xa).add(&ZPoly::constant(c.clone()));
        }
        acc
    }

    /// Substitute x -> k*x.
    pub fn scale_var(&self, k: &Int) -> Self {
        let mut c = self.c.clone();
        let mut f = Int::one();
        for a in c.iter_mut() {
            *a *= &f;
            f *= k;
        }
        ZPoly::new(c)
    }

    /// x^deg * f(1/x).
    pub fn reverse(&self) -> Self {
        let mut c = self.c.clone();
        c.reverse();
        ZPoly::new(c)
    }

    /// Cauchy root bound: all complex roots have |z| <= 1 + max|a_i / a_n|.
    pub fn cauchy_bound(&self) -> Rat {
        assert!(!self.is_zero());
        let lc = Rat::from_integer(self.lc().abs());
        let mut m = Rat::zero();
        for a in &self.c[..self.c.len() - 1] {
            let v = Rat::from_integer(a.abs()) / lc.clone();
            if v > m {
                m = v;
            }
        }
        m + Rat::one()
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.c.iter().map(|a| Rat::from_integer(a.clone())).collect())
    }

    /// Reduce coefficients mod p (into a dense FpPoly).
    pub fn mod_p(&self, p: u64) -> super::fp::FpPoly {
        let pi = Int::from(p);
        super::fp::FpPoly::new(
            p,
            self.c
                .iter()
                .map(|a| {
                    let r = a.mod_floor(&pi);
                    u64::try_from(r).unwrap()
                })
                .collect(),
        )
    }

    /// Newton power sums p_1..p_k of the roots of a monic polynomial.
    pub fn power_sums(&self, k: usize) -> Vec<Rat> {
        assert!(self.is_monic());
        let n = self.degree();
        let a = |i: usize| -> Rat { Rat::from_integer(self.coeff(i).clone()) };
        let mut p: Vec<Rat> = Vec::with_capacity(k + 1);
        p.push(Rat::from_integer(Int::from(n as u64))); // p_0
        for m in 1..=k {
            // p_m + sum_{i=1}^{m-1} a_{n-i} p_{m-i} + m a_{n-m} = 0 (m <= n)
            let mut s = Rat::zero();
            for i in 1..m.min(n + 1) {
                if n >= i {
                    s += a(n - i) * &p[m - i];
                }
            }
            if m <= n {
                s += Rat::from_integer(Int::from(m as u64)) * a(n - m);
            }
            p.push(-s);
        }
        p.remove(0);
        p
    }
}

/// Exact division in Z[x]; panics unless remainder is zero-compatible.
/// Returns (quotient, remainder) where remainder is zero when divisible.
pub fn divide_exact(f: &ZPoly, d: &ZPoly) -> (ZPoly, ZPoly) {
    assert!(!d.is_zero());
    if f.is_zero() {
        return (ZPoly::zero(), ZPoly::zero());
    }
    let dd = d.degree();
    let mut rem = f.c.clone();
    if rem.len() <= dd {
        return (ZPoly::zero(), f.clone());
    }
    let mut q = vec![Int::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let (qq, rr) = rem[i].div_rem(d.lc());
        if !rr.is_zero() {
            return (ZPoly::zero(), f.clone()); // not exactly divisible
        }
        q[i - dd] = qq.clone();
        for j in 0..=dd {
            let v = &qq * &d.c[j];
            rem[i - dd + j] -= v;
        }
    }
    (ZPoly::new(q), ZPoly::new(rem))
}

fn int_to_f64(a: &Int) -> f64 {
    use num_traits::ToPrimitive;
    a.to_f64().unwrap_or(if a.is_negative() { -1e300 } else { 1e300 })
}

/// Resultant of integer polynomials, exact with sign, via CRT over word
/// primes (each modular resultant by the Euclidean chain over F_p).
pub fn resultant(a: &ZPoly, b: &ZPoly) -> Int {
    if a.is_zero() || b.is_zero() {
        return Int::zero();
    }
    if a.degree() == 0 {
        return a.lc().pow(b.degree() as u32);
    }
    if b.degree() == 0 {
        return b.lc().pow(a.degree() as u32);
    }
    // Hadamard-style bound: |res| <= |a|_2^deg(b) * |b|_2^deg(a)
    let norm2_sq = |f: &ZPoly| -> Int { f.c.iter().map(|x| x * x).sum::<Int>() + Int::one() };
    let na = norm2_sq(a);
    let nb = norm2_sq(b);
    let mut bound = Int::one();
    for _ in 0..b.degree().div_ceil(2) + 1 {
        bound *= &na;
    }
    for _ in 0..a.degree().div_ceil(2) + 1 {
        bound *= &nb;
    }
    bound <<= 2;

    // fixed CRT prime pool (top of the 31-bit range), extended on demand
    const CRT_PRIMES: [u64; 48] = [
        2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
        2147483543, 2147483497, 2147483489, 2147483477, 2147483423, 2147483399,
        2147483353, 2147483323, 2147483269, 2147483249, 2147483237, 2147483179,
        2147483171, 2147483137, 2147483123, 2147483077, 2147483069, 2147483059,
        2147483053, 2147483033, 2147483029, 2147482951, 2147482949, 2147482943,
        2147482937, 2147482921, 2147482877, 2147482873, 2147482867, 2147482859,
        2147482819, 2147482817, 2147482811, 2147482801, 2147482763, 2147482739,
        2147482697, 2147482693, 2147482681, 2147482663, 2147482661, 2147482621,
    ];
    let mut primes: Vec<u64> = Vec::new();
    let mut acc = Int::one();
    let mut pool = CRT_PRIMES.iter();
    let mut p_dyn = 2147482619u64;
    while acc < bound {
        let p = match pool.next() {
            Some(&p) => p,
            None => {
                loop {
                    p_dyn -= 2;
                    if is_prime(&Int::from(p_dyn)) {
                        break;
                    }
                }
                p_dyn
            }
        };
        if (a.lc() % Int::from(p)).is_zero() || (b.lc() % Int::from(p)).is_zero() {
            continue;
        }
        primes.push(p);
        acc *= Int::from(p);
    }

    let mut res = Int::zero();
    let mut modulus = Int::one();
    for &p in &primes {
        let rp = resultant_mod_p(a, b, p);
        // CRT combine
        if modulus.is_one() {
            res = Int::from(rp);
            modulus = Int::from(p);
        } else {
            let pi = Int::from(p);
            let m_inv = mod_inverse(&modulus, &pi);
            let diff = (Int::from(rp) - &res).mod_floor(&pi);
            let t = (diff * m_inv).mod_floor(&pi);
            res += &modulus * t;
            modulus *= pi;
        }
    }
    // symmetric remainder
    let half = &modulus >> 1;
    if res > half {
        res -= &modulus;
    }
    res
}

fn mod_inverse(a: &Int, m: &Int) -> Int {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

fn resultant_mod_p(a: &ZPoly, b: &ZPoly, p: u64) -> u64 {
    use super::fp::{Fp, FpPoly};
    let f = Fp::new(p);
    let mut a = a.mod_p(p);
    let mut b = b.mod_p(p);
    let mut res = 1u64;
    let mut neg = false;
    // Res(a,b) with deg a >= deg b maintained
    if a.c.len() < b.c.len() {
        if (a.c.len() >= 2) && ((a.c.len() - 1) & 1 == 1) && ((b.c.len() - 1) & 1 == 1) {
            neg = !neg;
        }
        core::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.is_zero() {
            return 0;
        }
        if b.degree() == 0 {
            res = f.mul(res, f.pow(b.lc(), a.degree() as u64));
            break;
        }
        let r = a.rem(&b);
        let da = a.degree() as u64;
        let db = b.degree() as u64;
        if r.is_zero() {
            return 0;
        }
        let dr = r.degree() as u64;
        // Res(a,b) = (-1)^(da*db) lc(b)^(da-dr) Res(b,r)
        if (da * db) & 1 == 1 {
            neg = !neg;
        }
        res = f.mul(res, f.pow(b.lc(), da - dr));
        a = b;
        b = r;
    }
    let _ = FpPoly::zero;
    if neg {
        f.neg(res)
    } else {
        res
    }
}

/// Resultant via fraction-free elimination of the Sylvester matrix; slow
/// reference used by tests as an independent oracle.
pub fn resultant_sylvester(a: &ZPoly, b: &ZPoly) -> Int {
    if a.is_zero() || b.is_zero() {
        return Int::zero();
    }
    let m = a.degree();
    let n = b.degree();
    if m == 0 {
        return a.lc().pow(n as u32);
    }
    if n == 0 {
        return b.lc().pow(m as u32);
    }
    let size = m + n;
    let mut s = IntMatrix::zero(size, size);
    for i in 0..n {
        for j in 0..=m {
            *s.at_mut(i, i + j) = a.c[m - j].clone();
        }
    }
    for i in 0..m {
        for j in 0..=n {
            *s.at_mut(n + i, i + j) = b.c[n - j].clone();
        }
    }
    s.det()
}

pub fn discriminant(f: &ZPoly) -> Int {
    let n = f.degree();
    let r = resultant(f, &f.derivative());
    let sign = if (n * (n - 1) / 2) % 2 == 1 { -1 } else { 1 };
    let d = &r / f.lc();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Lagrange interpolation through exact rational points.
pub fn lagrange_interpolate(points: &[(Rat, Rat)]) -> QPoly {
    let mut acc = QPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut term = QPoly::new(vec![yi.clone()]);
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = xi - xj;
            term = term.mul(&QPoly::new(vec![-xj / &denom, Rat::one() / &denom]));
        }
        acc = acc.add(&term);
    }
    acc
}

/// Rational polynomial (thin layer over ZPoly + denominator).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    pub c: Vec<Rat>,
}

impl QPoly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while let Some(t) = c.last() {
            if t.is_zero() {
                c.pop();
            } else {
                break;
            }
        }
        QPoly { c }
    }
    pub fn zero() -> Self {
        QPoly { c: vec![] }
    }
    pub fn one() -> Self {
        QPoly { c: vec![Rat::one()] }
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero());
        self.c.len() - 1
    }
    pub fn coeff(&self, i: usize) -> Rat {
        self.c.get(i).cloned().unwrap_or_else(Rat::zero)
    }
    pub fn lc(&self) -> &Rat {
        self.c.last().expect("lc of zero")
    }
    pub fn monic(&self) -> Self {
        let l = self.lc().clone();
        QPoly::new(self.c.iter().map(|a| a / &l).collect())
    }
    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lc().is_one()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
    pub fn neg(&self) -> Self {
        QPoly::new(self.c.iter().map(|a| -a.clone()).collect())
    }
    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        QPoly::new(c)
    }
    pub fn mul_scalar(&self, k: &Rat) -> Self {
        QPoly::new(self.c.iter().map(|a| a * k).collect())
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        let dd = d.degree();
        let mut rem = self.c.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let coef = &rem[i] / d.lc();
            q[i - dd] = coef.clone();
            for j in 0..=dd {
                let v = &coef * &d.c[j];
                rem[i - dd + j] -= v;
            }
        }
        (QPoly::new(q), QPoly::new(rem))
    }

    pub fn gcd(&self, o: &Self) -> QPoly {
        let (za, _) = self.clear_denoms();
        let (zb, _) = o.clear_denoms();
        za.gcd(&zb).to_qpoly().monic()
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            (1..self.c.len())
                .map(|i| &self.c[i] * Rat::from_integer(Int::from(i as u64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// (primitive integer polynomial z, scale) with self = scale * z.
    pub fn clear_denoms(&self) -> (ZPoly, Rat) {
        if self.is_zero() {
            return (ZPoly::zero(), Rat::one());
        }
        let (nums, den) = clear_denominators(&self.c);
        let z = ZPoly::new(nums);
        let cont = z.content();
        let mut zc = z.primitive();
        let mut scale = Rat::new(cont, den);
        if z.lc().is_negative() {
            // primitive() flipped the sign
            scale = -scale;
            zc = zc.clone();
        }
        (zc, scale)
    }

    pub fn from_zpoly(z: &ZPoly) -> Self {
        z.to_qpoly()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_frac};

    #[test]
    fn arithmetic_and_division() {
        let f = ZPoly::from_i64(&[3, 0, 1]); // x^2+3
        let g = ZPoly::from_i64(&[9, 0, 0, 0, 1]); // x^4+9
        let prod = f.mul(&g);
        let (q, r) = prod.divrem_monic(&f);
        assert!(r.is_zero());
        assert_eq!(q, g);
    }

    #[test]
    fn gcd_of_powers() {
        let f = ZPoly::from_i64(&[3, 0, 1]);
        let f2 = f.mul(&f);
        let g = f2.mul(&ZPoly::from_i64(&[1, 1]));
        assert_eq!(f2.gcd(&g), f2.primitive());
        assert!(!f2.is_squarefree());
        assert!(f.is_squarefree());
        assert_eq!(f2.squarefree_part(), f);
    }

    #[test]
    fn resultant_matches_sylvester() {
        let mut rng = XorShift::new(17);
        for _ in 0..25 {
            let deg_a = 1 + (rng.below(5) as usize);
            let deg_b = 1 + (rng.below(4) as usize);
            let mk = |rng: &mut XorShift, d: usize| {
                let mut c: Vec<Int> = (0..=d)
                    .map(|_| Int::from(rng.next_u64() as i64 % 7))
                    .collect();
                if c[d].is_zero() {
                    c[d] = Int::one();
                }
                ZPoly::new(c)
            };
            let a = mk(&mut rng, deg_a);
            let b = mk(&mut rng, deg_b);
            assert_eq!(resultant(&a, &b), resultant_sylvester(&a, &b), "{a:?} {b:?}");
        }
    }

    #[test]
    fn resultant_known() {
        // Res(x^2+3, x) = 3 (norm of pi in Q[x]/(x^2+3))
        let h = ZPoly::from_i64(&[3, 0, 1]);
        let x = ZPoly::x();
        assert_eq!(resultant(&h, &x), Int::from(3));
        // disc(x^2+3) = -12
        assert_eq!(discriminant(&h), Int::from(-12));
        // disc(x^8+16) = 2^52 up to sign
        let f = ZPoly::from_i64(&[16, 0, 0, 0, 0, 0, 0, 0, 1]);
        let d = discriminant(&f);
        assert_eq!(d.abs(), Int::from(2u64).pow(52));
    }

    #[test]
    fn power_sums_newton() {
        // x^2 - 5x + 6: roots 2,3 -> p1 = 5, p2 = 13, p3 = 35
        let f = ZPoly::from_i64(&[6, -5, 1]);
        let p = f.power_sums(3);
        assert_eq!(p, alloc::vec![rat(5), rat(13), rat(35)]);
    }

    #[test]
    fn shifts_and_scales() {
        let f = ZPoly::from_i64(&[0, 0, 1]); // x^2
        let g = f.shift(&Int::from(1)); // (x+1)^2
        assert_eq!(g, ZPoly::from_i64(&[1, 2, 1]));
        let h = f.scale_var(&Int::from(3)); // 9x^2
        assert_eq!(h, ZPoly::from_i64(&[0, 0, 9]));
    }

    #[test]
    fn qpoly_roundtrip() {
        let q = QPoly::new(alloc::vec![rat_frac(1, 2), rat(0), rat_frac(3, 4)]);
        let (z, s) = q.clear_denoms();
        assert_eq!(z, ZPoly::from_i64(&[2, 0, 3]));
        assert_eq!(s, rat_frac(1, 4));
    }
}
