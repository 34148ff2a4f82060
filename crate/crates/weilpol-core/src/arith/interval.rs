//! Exact rational interval arithmetic (real and complex boxes) and a
//! certified rational enclosure of the natural logarithm. These are the only
//! "numerics" in the crate, and every endpoint is an exact rational.

use super::poly::ZPoly;
use super::{Int, Rat};
use alloc::vec::Vec;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "inverted interval");
        RatInterval { lo, hi }
    }
    pub fn point(x: Rat) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }
    pub fn zero() -> Self {
        Self::point(Rat::zero())
    }
    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(Int::from(2))
    }
    pub fn contains_zero(&self) -> bool {
        self.lo <= Rat::zero() && self.hi >= Rat::zero()
    }
    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }
    pub fn contains_interval(&self, o: &Self) -> bool {
        self.lo <= o.lo && o.hi <= self.hi
    }
    pub fn strictly_contains(&self, o: &Self) -> bool {
        self.lo < o.lo && o.hi < self.hi
    }
    /// Strict sign: Some(1) if > 0 everywhere, Some(-1) if < 0, None if 0 in
    /// the closure.
    pub fn sign(&self) -> Option<i32> {
        if self.lo > Rat::zero() {
            Some(1)
        } else if self.hi < Rat::zero() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        RatInterval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }
    pub fn sub(&self, o: &Self) -> Self {
        RatInterval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }
    pub fn neg(&self) -> Self {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }
    pub fn mul(&self, o: &Self) -> Self {
        let cands = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        RatInterval::new(lo, hi)
    }
    pub fn recip(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        Some(RatInterval::new(
            Rat::one() / self.hi.clone(),
            Rat::one() / self.lo.clone(),
        ))
    }
    pub fn intersect(&self, o: &Self) -> Option<Self> {
        let lo = if self.lo > o.lo { self.lo.clone() } else { o.lo.clone() };
        let hi = if self.hi < o.hi { self.hi.clone() } else { o.hi.clone() };
        if lo <= hi {
            Some(RatInterval::new(lo, hi))
        } else {
            None
        }
    }
    pub fn disjoint(&self, o: &Self) -> bool {
        self.hi < o.lo || o.hi < self.lo
    }
    pub fn abs(&self) -> Self {
        if self.lo >= Rat::zero() {
            self.clone()
        } else if self.hi <= Rat::zero() {
            self.neg()
        } else {
            let m = if -self.lo.clone() > self.hi {
                -self.lo.clone()
            } else {
                self.hi.clone()
            };
            RatInterval::new(Rat::zero(), m)
        }
    }
    pub fn to_f64(&self) -> f64 {
        self.mid().to_f64().unwrap_or(0.0)
    }
}

/// Axis-aligned complex box with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBox {
    pub re: RatInterval,
    pub im: RatInterval,
}

impl ComplexBox {
    pub fn new(re: RatInterval, im: RatInterval) -> Self {
        ComplexBox { re, im }
    }
    pub fn point(re: Rat, im: Rat) -> Self {
        ComplexBox {
            re: RatInterval::point(re),
            im: RatInterval::point(im),
        }
    }
    pub fn mid(&self) -> (Rat, Rat) {
        (self.re.mid(), self.im.mid())
    }
    pub fn width(&self) -> Rat {
        let w1 = self.re.width();
        let w2 = self.im.width();
        if w1 > w2 {
            w1
        } else {
            w2
        }
    }
    pub fn add(&self, o: &Self) -> Self {
        ComplexBox::new(self.re.add(&o.re), self.im.add(&o.im))
    }
    pub fn sub(&self, o: &Self) -> Self {
        ComplexBox::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }
    pub fn neg(&self) -> Self {
        ComplexBox::new(self.re.neg(), self.im.neg())
    }
    pub fn conj(&self) -> Self {
        ComplexBox::new(self.re.clone(), self.im.neg())
    }
    pub fn mul(&self, o: &Self) -> Self {
        let rr = self.re.mul(&o.re);
        let ii = self.im.mul(&o.im);
        let ri = self.re.mul(&o.im);
        let ir = self.im.mul(&o.re);
        ComplexBox::new(rr.sub(&ii), ri.add(&ir))
    }
    /// |z|^2 as an interval.
    pub fn norm_sq(&self) -> RatInterval {
        let a = self.re.mul(&self.re);
        let b = self.im.mul(&self.im);
        let s = a.add(&b);
        // norms are nonnegative
        RatInterval::new(
            if s.lo < Rat::zero() { Rat::zero() } else { s.lo },
            s.hi,
        )
    }
    pub fn recip(&self) -> Option<Self> {
        let n = self.norm_sq();
        if n.contains_zero() {
            return None;
        }
        let ninv = n.recip()?;
        Some(ComplexBox::new(self.re.mul(&ninv), self.im.neg().mul(&ninv)))
    }
    pub fn div(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.recip()?))
    }
    pub fn contains_value_of(&self, o: &Self) -> bool {
        self.re.contains_interval(&o.re) && self.im.contains_interval(&o.im)
    }
    pub fn strictly_contains(&self, o: &Self) -> bool {
        self.re.strictly_contains(&o.re) && self.im.strictly_contains(&o.im)
    }
    pub fn disjoint(&self, o: &Self) -> bool {
        self.re.disjoint(&o.re) || self.im.disjoint(&o.im)
    }
    pub fn intersect(&self, o: &Self) -> Option<Self> {
        Some(ComplexBox::new(
            self.re.intersect(&o.re)?,
            self.im.intersect(&o.im)?,
        ))
    }
}

/// Evaluate an integer polynomial on a complex box (interval Horner).
pub fn eval_box(f: &ZPoly, z: &ComplexBox) -> ComplexBox {
    let mut acc = ComplexBox::point(Rat::zero(), Rat::zero());
    for a in f.c.iter().rev() {
        acc = acc.mul(z).add(&ComplexBox::point(
            Rat::from_integer(a.clone()),
            Rat::zero(),
        ));
    }
    acc
}

/// Evaluate on a real interval.
pub fn eval_real(f: &ZPoly, x: &RatInterval) -> RatInterval {
    let mut acc = RatInterval::zero();
    for a in f.c.iter().rev() {
        acc = acc
            .mul(x)
            .add(&RatInterval::point(Rat::from_integer(a.clone())));
    }
    acc
}

/// Round a rational to a dyadic with `bits` fractional bits, direction down.
pub fn dyadic_floor(x: &Rat, bits: u32) -> Rat {
    use num_integer::Integer;
    let scale = Int::one() << bits as usize;
    let n = (x.numer() * &scale).div_floor(x.denom());
    Rat::new(n, scale)
}

pub fn dyadic_ceil(x: &Rat, bits: u32) -> Rat {
    use num_integer::Integer;
    let scale = Int::one() << bits as usize;
    let n = (x.numer() * &scale).div_ceil(x.denom());
    Rat::new(n, scale)
}

/// Shrink interval endpoints onto the dyadic grid, outward (sound).
pub fn dyadic_outward(iv: &RatInterval, bits: u32) -> RatInterval {
    RatInterval::new(dyadic_floor(&iv.lo, bits), dyadic_ceil(&iv.hi, bits))
}

fn ln2_enclosure(bits: u32) -> RatInterval {
    // ln 2 = 2 atanh(1/3) = 2 * sum t^(2k+1)/(2k+1), t = 1/3
    atanh_enclosure(&Rat::new(Int::one(), Int::from(3)), bits).mul(&RatInterval::point(
        Rat::from_integer(Int::from(2)),
    ))
}

/// Enclosure of atanh(t) for |t| <= 1/2 with about `bits` bits of accuracy.
/// Partial sums are rounded to a dyadic grid every step so the endpoint
/// denominators stay linear in the precision.
fn atanh_enclosure(t: &Rat, bits: u32) -> RatInterval {
    assert!(t.abs() <= Rat::new(Int::one(), Int::from(2)));
    let grid = bits + 16;
    let t2 = dyadic_floor(&(t * t), grid + 8).abs();
    let mut term = t.clone();
    let mut sum = Rat::zero();
    let mut slack = Rat::zero();
    let round_slack = Rat::new(Int::from(4), Int::one() << grid as usize);
    let mut k = 0u32;
    let eps = Rat::new(Int::one(), Int::one() << bits as usize);
    loop {
        sum += &term / Rat::from_integer(Int::from(2 * k as u64 + 1));
        sum = dyadic_floor(&sum, grid);
        slack += &round_slack;
        term = dyadic_floor(&(&term * &t2), grid + 8);
        k += 1;
        let tail =
            term.abs() / ((Rat::one() - &t2) * Rat::from_integer(Int::from(2 * k as u64 + 1)));
        if tail < eps {
            let widen = &tail + &slack + &eps;
            return RatInterval::new(&sum - &widen, &sum + &widen);
        }
        assert!(k < 10_000, "atanh series failed to converge");
    }
}


/// Certified enclosure of ln(x) for a positive rational, `bits` accuracy.
pub fn ln_enclosure(x: &Rat, bits: u32) -> RatInterval {
    assert!(x.is_positive(), "ln of non-positive rational");
    // write x = m * 2^e with m in [1, 2)
    let mut e: i64 = 0;
    let two = Rat::from_integer(Int::from(2));
    let one = Rat::one();
    let mut m = x.clone();
    while m >= two {
        m = m / &two;
        e += 1;
    }
    while m < one {
        m = m * &two;
        e -= 1;
    }
    // ln m = 2 atanh((m-1)/(m+1)), argument in [0, 1/3]
    let t = (&m - &one) / (&m + &one);
    let lnm = atanh_enclosure(&t, bits + 2).mul(&RatInterval::point(two.clone()));
    let ln2 = ln2_enclosure(bits + 2);
    let escaled = ln2.mul(&RatInterval::point(Rat::from_integer(Int::from(e))));
    let out = lnm.add(&escaled);
    // keep endpoint sizes manageable
    dyadic_outward(&out, bits + 8)
}

/// Enclosure of ln of an interval of positive rationals.
pub fn ln_interval(iv: &RatInterval, bits: u32) -> RatInterval {
    assert!(iv.lo.is_positive());
    let lo = ln_enclosure(&iv.lo, bits);
    let hi = ln_enclosure(&iv.hi, bits);
    RatInterval::new(lo.lo, hi.hi)
}

/// Interval determinant by naive expansion-free Gaussian elimination with
/// interval pivots; returns None if a pivot interval contains zero.
pub fn interval_det(m: &[Vec<RatInterval>]) -> Option<RatInterval> {
    let n = m.len();
    let mut a: Vec<Vec<RatInterval>> = m.to_vec();
    let mut det = RatInterval::point(Rat::one());
    for k in 0..n {
        let piv = a[k][k].clone();
        if piv.contains_zero() {
            return None;
        }
        det = det.mul(&piv);
        let pinv = piv.recip()?;
        for i in k + 1..n {
            let f = a[i][k].mul(&pinv);
            for j in k..n {
                let s = f.mul(&a[k][j]);
                a[i][j] = a[i][j].sub(&s);
            }
        }
    }
    Some(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_frac};

    #[test]
    fn interval_ops() {
        let a = RatInterval::new(rat(1), rat(2));
        let b = RatInterval::new(rat(-1), rat(1));
        assert_eq!(a.mul(&b), RatInterval::new(rat(-2), rat(2)));
        assert!(b.contains_zero());
        assert_eq!(a.sign(), Some(1));
        assert_eq!(b.recip(), None);
    }

    #[test]
    fn complex_mul() {
        // (1+i)^2 = 2i
        let z = ComplexBox::point(rat(1), rat(1));
        let sq = z.mul(&z);
        assert_eq!(sq.re, RatInterval::point(rat(0)));
        assert_eq!(sq.im, RatInterval::point(rat(2)));
    }

    #[test]
    fn ln_certified() {
        // ln 2 = 0.693147180559945...
        let l = ln_enclosure(&rat(2), 40);
        assert!(l.lo < rat_frac(693147181, 1000000000));
        assert!(l.hi > rat_frac(693147180, 1000000000));
        assert!(l.width() < rat_frac(1, 1 << 30));
        // ln 1 = 0
        let l1 = ln_enclosure(&rat(1), 40);
        assert!(l1.contains(&rat(0)));
        assert!(l1.width() < rat_frac(1, 1 << 30));
        // ln(1/3) = -ln 3
        let l3 = ln_enclosure(&rat(3), 40);
        let li = ln_enclosure(&rat_frac(1, 3), 40);
        let s = l3.add(&li);
        assert!(s.contains(&rat(0)));
    }
}
