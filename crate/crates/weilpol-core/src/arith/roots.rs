//! Certified root isolation: Sturm sequences over exact rationals for real
//! roots, and complex boxes certified by an exact-rational interval Newton
//! operator (float Aberth iterations are used only to seed the boxes; every
//! certificate is rational).

use super::interval::{dyadic_floor, eval_box, ComplexBox, RatInterval};
use super::poly::ZPoly;
use super::{Int, Rat};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Sturm chain of a squarefree polynomial. Remainders are computed over Q
/// and rescaled by positive rationals only, so every sign is coherent.
pub fn sturm_chain(f: &ZPoly) -> Vec<ZPoly> {
    assert!(!f.is_zero());
    let mut chain = vec![f.primitive(), f.derivative().primitive()];
    loop {
        let n = chain.len();
        let a = &chain[n - 2];
        let b = &chain[n - 1];
        if b.is_zero() {
            chain.pop();
            break;
        }
        if b.degree() == 0 {
            break;
        }
        let r = a.to_qpoly().divrem(&b.to_qpoly()).1.neg();
        if r.is_zero() {
            break;
        }
        // positive rescale to a primitive integer polynomial
        let (nums, _den) = crate::arith::clear_denominators(&r.c);
        let z = ZPoly::new(nums).primitive_keep_sign();
        chain.push(z);
    }
    chain
}

trait PrimitiveKeepSign {
    fn primitive_keep_sign(&self) -> Self;
}
impl PrimitiveKeepSign for ZPoly {
    fn primitive_keep_sign(&self) -> ZPoly {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.content();
        ZPoly::new(self.c.iter().map(|a| a / &g).collect())
    }
}

fn sign_variations_at(chain: &[ZPoly], x: &Rat) -> usize {
    let mut last = 0i32;
    let mut var = 0usize;
    for f in chain {
        let v = f.eval_rat(x);
        let s = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if last != 0 && s != last {
                var += 1;
            }
            last = s;
        }
    }
    var
}

fn sign_variations_at_neg_inf(chain: &[ZPoly]) -> usize {
    let mut last = 0i32;
    let mut var = 0usize;
    for f in chain {
        if f.is_zero() {
            continue;
        }
        let mut s = if f.lc().is_positive() { 1 } else { -1 };
        if f.degree() % 2 == 1 {
            s = -s;
        }
        if last != 0 && s != last {
            var += 1;
        }
        last = s;
    }
    var
}

fn sign_variations_at_pos_inf(chain: &[ZPoly]) -> usize {
    let mut last = 0i32;
    let mut var = 0usize;
    for f in chain {
        if f.is_zero() {
            continue;
        }
        let s = if f.lc().is_positive() { 1 } else { -1 };
        if last != 0 && s != last {
            var += 1;
        }
        last = s;
    }
    var
}

/// Number of real roots of squarefree f in the half-open interval (a, b].
pub fn count_roots_in(chain: &[ZPoly], a: &Rat, b: &Rat) -> usize {
    sign_variations_at(chain, a) - sign_variations_at(chain, b)
}

/// Total number of real roots of a squarefree polynomial.
pub fn count_real_roots(f: &ZPoly) -> usize {
    if f.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(f);
    sign_variations_at_neg_inf(&chain) - sign_variations_at_pos_inf(&chain)
}

/// Number of real roots in (-inf, 0].
pub fn count_roots_le_zero(f: &ZPoly) -> usize {
    if f.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(f);
    sign_variations_at_neg_inf(&chain) - sign_variations_at(&chain, &Rat::zero())
}

/// Isolating intervals for the real roots of a squarefree polynomial, each
/// either a point (rational root) or an interval with a strict sign change,
/// pairwise disjoint, sorted.
pub fn isolate_real_roots(f: &ZPoly) -> Vec<RatInterval> {
    assert!(f.is_squarefree(), "real isolation requires squarefree input");
    if f.degree() == 0 {
        return vec![];
    }
    let chain = sturm_chain(f);
    let bound = f.cauchy_bound() + Rat::one();
    let mut out: Vec<RatInterval> = Vec::new();
    let mut stack = vec![(-bound.clone(), bound.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = count_roots_in(&chain, &a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            // tighten the endpoint situation: if the root is exactly b
            if f.eval_rat(&b).is_zero() {
                out.push(RatInterval::point(b));
                continue;
            }
            // shrink a upward until f(a) != 0 (a is never a root of the
            // half-open interval but guard anyway) and emit a closed
            // interval with a strict sign change
            let mut lo = a.clone();
            let hi = b.clone();
            if f.eval_rat(&lo).is_zero() {
                // root at the open end; bisect a hair to the right
                lo = (&lo * Rat::from_integer(Int::from(3)) + &hi)
                    / Rat::from_integer(Int::from(4));
                if count_roots_in(&chain, &lo, &hi) == 0 || f.eval_rat(&lo).is_zero() {
                    stack.push((a, b));
                    continue;
                }
            }
            out.push(RatInterval::new(lo, hi));
            continue;
        }
        let mut m = (&a + &b) / Rat::from_integer(Int::from(2));
        if f.eval_rat(&m).is_zero() {
            // nudge the midpoint off the root
            m = (&a + &m) / Rat::from_integer(Int::from(2));
            if f.eval_rat(&m).is_zero() {
                m = (&a + &m) / Rat::from_integer(Int::from(2));
            }
        }
        stack.push((a, m.clone()));
        stack.push((m, b));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Bisection refinement of an isolating interval until width <= eps.
pub fn refine_real_root(f: &ZPoly, iv: &RatInterval, eps: &Rat) -> RatInterval {
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    if lo == hi {
        return iv.clone();
    }
    let mut slo = sign_of(&f.eval_rat(&lo));
    debug_assert!(slo != 0 && sign_of(&f.eval_rat(&hi)) == -slo);
    while &hi - &lo > *eps {
        let m = (&lo + &hi) / Rat::from_integer(Int::from(2));
        let sm = sign_of(&f.eval_rat(&m));
        if sm == 0 {
            return RatInterval::point(m);
        }
        if sm == slo {
            lo = m;
        } else {
            hi = m;
        }
        slo = sign_of(&f.eval_rat(&lo));
    }
    RatInterval::new(lo, hi)
}

fn sign_of(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

// ---------------------------------------------------------------------------
// complex isolation
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }
    fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }
    fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }
    fn mul(self, o: C64) -> C64 {
        C64::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
    fn div(self, o: C64) -> C64 {
        let d = o.re * o.re + o.im * o.im;
        C64::new(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )
    }
    fn abs(self) -> f64 {
        libm::hypot(self.re, self.im)
    }
}

fn eval_c64(c: &[f64], z: C64) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        acc = acc.mul(z).add(C64::new(a, 0.0));
    }
    acc
}

/// Aberth-Ehrlich simultaneous iteration; returns approximate roots.
fn aberth(f: &ZPoly) -> Vec<C64> {
    let n = f.degree();
    let cf: Vec<f64> = f.c.iter().map(|a| a.to_f64().unwrap_or(0.0)).collect();
    let df: Vec<f64> = f
        .derivative()
        .c
        .iter()
        .map(|a| a.to_f64().unwrap_or(0.0))
        .collect();
    let r = f.cauchy_bound().to_f64().unwrap_or(2.0).min(1e100);
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let ang = 2.0 * core::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            let rad = r * (0.5 + 0.5 * ((k % 3) as f64) / 3.0);
            C64::new(rad * libm::cos(ang), rad * libm::sin(ang))
        })
        .collect();
    for _ in 0..300 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let p = eval_c64(&cf, z[i]);
            let dp = eval_c64(&df, z[i]);
            if dp.abs() == 0.0 {
                continue;
            }
            let w = p.div(dp);
            let mut s = C64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = z[i].sub(z[j]);
                    if d.abs() > 1e-300 {
                        s = s.add(C64::new(1.0, 0.0).div(d));
                    }
                }
            }
            let denom = C64::new(1.0, 0.0).sub(w.mul(s));
            let corr = if denom.abs() > 1e-300 { w.div(denom) } else { w };
            z[i] = z[i].sub(corr);
            moved += corr.abs();
        }
        if moved < 1e-14 {
            break;
        }
    }
    z
}

fn rat_from_f64(x: f64, bits: u32) -> Rat {
    // dyadic approximation
    let scale = (1u64 << bits.min(52)) as f64;
    let v = libm::round(x * scale);
    if !v.is_finite() {
        return Rat::zero();
    }
    // f64 -> integer via string-free route
    let neg = v < 0.0;
    let mut a = if neg { -v } else { v };
    let mut num = Int::zero();
    let mut sh = 0u32;
    while a >= 1.0 {
        // peel 32 bits at a time
        let lo = (a % 4294967296.0) as u64;
        num += Int::from(lo) << sh as usize;
        a = libm::floor(a / 4294967296.0);
        sh += 32;
    }
    if neg {
        num = -num;
    }
    Rat::new(num, Int::one() << bits.min(52) as usize)
}

/// Number of bits needed to resolve the box width (plus margin).
fn grid_bits(x: &ComplexBox) -> u32 {
    let w = x.width();
    if !w.is_positive() {
        return 256;
    }
    let num_bits = w.numer().bits() as i64;
    let den_bits = w.denom().bits() as i64;
    ((den_bits - num_bits).max(0) as u32) + 8
}

/// One interval-Newton contraction step; returns the new enclosure if the
/// operator certifies (or keeps) a unique root inside. The result is
/// rounded outward onto a dyadic grid sized to its width so endpoint
/// denominators stay proportional to the precision.
fn newton_step(f: &ZPoly, fd: &ZPoly, x: &ComplexBox) -> Option<ComplexBox> {
    let gb = grid_bits(x) + 64;
    let (mr, mi) = x.mid();
    let mid = ComplexBox::point(dyadic_floor(&mr, gb), dyadic_floor(&mi, gb));
    let fm = eval_box(f, &mid);
    let fdx = eval_box(fd, x);
    let quot = fm.div(&fdx)?;
    let n = mid.sub(&quot);
    let meet = x.intersect(&n)?;
    let bits = grid_bits(&meet) + 32;
    Some(ComplexBox::new(
        super::interval::dyadic_outward(&meet.re, bits),
        super::interval::dyadic_outward(&meet.im, bits),
    ))
}

/// Certify that the box contains exactly one root: the Newton operator
/// image must land strictly inside the box.
fn certifies(f: &ZPoly, fd: &ZPoly, x: &ComplexBox) -> bool {
    let (mr, mi) = x.mid();
    let mid = ComplexBox::point(mr, mi);
    let fm = eval_box(f, &mid);
    let fdx = eval_box(fd, x);
    match fm.div(&fdx) {
        None => false,
        Some(q) => {
            let n = mid.sub(&q);
            x.strictly_contains(&n)
        }
    }
}

/// Exact rational Newton polish (dyadic-rounded) starting from a seed.
fn polish_rational(f: &ZPoly, fd: &ZPoly, seed: (Rat, Rat), iters: usize, bits: u32) -> (Rat, Rat) {
    let mut z = ComplexBox::point(seed.0, seed.1);
    for k in 0..iters {
        let fz = eval_box(f, &z);
        let fdz = eval_box(fd, &z);
        let Some(q) = fz.div(&fdz) else { break };
        let nz = z.sub(&q);
        let b = bits + (k as u32 + 1) * 16;
        z = ComplexBox::point(
            dyadic_floor(&nz.re.mid(), b),
            dyadic_floor(&nz.im.mid(), b),
        );
    }
    z.mid()
}

/// A certified isolated root of a squarefree integer polynomial.
#[derive(Clone, Debug)]
pub struct RootBox {
    pub z: ComplexBox,
    /// true when this box came from real isolation (imaginary part is
    /// exactly zero)
    pub is_real: bool,
}

/// Isolate all complex roots of a squarefree polynomial into disjoint
/// certified boxes of width at most `width`. Real roots come from Sturm
/// isolation (exact zero imaginary part); strictly complex roots are
/// certified by interval Newton and returned in exact conjugate pairs.
/// Output is sorted by (re.lo, im.lo).
pub fn isolate_complex_roots(f: &ZPoly, width: &Rat) -> Vec<RootBox> {
    assert!(f.is_squarefree(), "complex isolation requires squarefree input");
    let n = f.degree();
    if n == 0 {
        return vec![];
    }
    let fd = f.derivative();

    // real roots, exactly
    let real_ivs = isolate_real_roots(f);
    let nreal = real_ivs.len();
    let mut out: Vec<RootBox> = real_ivs
        .iter()
        .map(|iv| {
            let r = refine_real_root(f, iv, width);
            RootBox {
                z: ComplexBox::new(r, RatInterval::point(Rat::zero())),
                is_real: true,
            }
        })
        .collect();

    let nupper = (n - nreal) / 2;
    assert_eq!(nreal + 2 * nupper, n, "parity mismatch in root counts");
    if nupper == 0 {
        out.sort_by(|a, b| (&a.z.re.lo, &a.z.im.lo).cmp(&(&b.z.re.lo, &b.z.im.lo)));
        return out;
    }

    // seeds for the strictly-upper-half roots
    let approx = aberth(f);
    let mut upper_seeds: Vec<C64> = approx.into_iter().filter(|z| z.im > 0.0).collect();
    upper_seeds.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap_or(core::cmp::Ordering::Equal));

    let mut upper: Vec<ComplexBox> = Vec::new();
    'seed: for s in upper_seeds {
        let mut bits = 30u32;
        let mut seed = (rat_from_f64(s.re, bits), rat_from_f64(s.im, bits));
        for attempt in 0..8 {
            // radius shrinks with each attempt
            let rad = Rat::new(Int::one(), Int::one() << (8 + 6 * attempt) as usize);
            let cand = ComplexBox::new(
                RatInterval::new(&seed.0 - &rad, &seed.0 + &rad),
                RatInterval::new(&seed.1 - &rad, &seed.1 + &rad),
            );
            if certifies(f, &fd, &cand) {
                // contract to the requested width
                let mut cur = cand;
                let mut guard = 0;
                while cur.width() > *width {
                    match newton_step(f, &fd, &cur) {
                        Some(next) => {
                            if next.width() >= cur.width() {
                                // stalled; bisect via a fresh midpoint box
                                let (mr, mi) = cur.mid();
                                let half = cur.width() / Rat::from_integer(Int::from(3));
                                let tight = ComplexBox::new(
                                    RatInterval::new(&mr - &half, &mr + &half),
                                    RatInterval::new(&mi - &half, &mi + &half),
                                );
                                match cur.intersect(&tight) {
                                    Some(t) if certifies(f, &fd, &t) => cur = t,
                                    _ => {
                                        guard += 1;
                                    }
                                }
                            } else {
                                cur = next;
                            }
                        }
                        None => break,
                    }
                    guard += 1;
                    if guard > 500 {
                        break;
                    }
                }
                if cur.width() <= *width {
                    upper.push(cur);
                    continue 'seed;
                }
            }
            // polish the seed with exact Newton and retry
            bits += 24;
            seed = polish_rational(f, &fd, seed, 3, bits);
        }
        // certification failed for this seed; it will be caught by the
        // count check below
    }

    assert_eq!(
        upper.len(),
        nupper,
        "complex root certification failed to isolate all roots of {f:?}"
    );
    // disjointness among the upper boxes; contract further on overlap
    let mut guard = 0;
    loop {
        let mut overlap = None;
        'scan: for i in 0..upper.len() {
            for j in i + 1..upper.len() {
                if !upper[i].disjoint(&upper[j]) {
                    overlap = Some((i, j));
                    break 'scan;
                }
            }
        }
        match overlap {
            None => break,
            Some((i, j)) => {
                for k in [i, j] {
                    if let Some(nb) = newton_step(f, &fd, &upper[k]) {
                        upper[k] = nb;
                    }
                }
                guard += 1;
                assert!(guard < 200, "failed to separate root boxes");
            }
        }
    }
    // ensure strict positivity of the imaginary part
    for b in upper.iter_mut() {
        let mut guard = 0;
        while !b.im.lo.is_positive() {
            *b = newton_step(f, &fd, b).expect("upper root drifted to the real axis");
            guard += 1;
            assert!(guard < 200, "failed to certify strict imaginary sign");
        }
    }

    for b in &upper {
        out.push(RootBox {
            z: b.clone(),
            is_real: false,
        });
        out.push(RootBox {
            z: b.conj(),
            is_real: false,
        });
    }
    out.sort_by(|a, b| (&a.z.re.lo, &a.z.im.lo).cmp(&(&b.z.re.lo, &b.z.im.lo)));
    out
}

/// Refine a certified box (nested: the result is contained in the input).
pub fn refine_box(f: &ZPoly, b: &RootBox, width: &Rat) -> RootBox {
    if b.is_real {
        let r = refine_real_root(f, &b.z.re, width);
        return RootBox {
            z: ComplexBox::new(r, RatInterval::point(Rat::zero())),
            is_real: true,
        };
    }
    let fd = f.derivative();
    let mut cur = b.z.clone();
    let mut guard = 0;
    while cur.width() > *width {
        match newton_step(f, &fd, &cur) {
            Some(next) if next.width() < cur.width() => cur = next,
            Some(next) => {
                cur = next;
                let (mr, mi) = cur.mid();
                let q = cur.width() / Rat::from_integer(Int::from(4));
                let tight = ComplexBox::new(
                    RatInterval::new(&mr - &q, &mr + &q),
                    RatInterval::new(&mi - &q, &mi + &q),
                );
                if certifies(f, &fd, &tight) {
                    cur = cur.intersect(&tight).unwrap_or(cur);
                }
            }
            None => break,
        }
        guard += 1;
        if guard > 2000 {
            break;
        }
    }
    assert!(cur.width() <= *width, "box refinement stalled");
    RootBox {
        z: cur,
        is_real: false,
    }
}

fn rat_pow2(bits: i32) -> Rat {
    if bits >= 0 {
        Rat::from_integer(Int::one() << bits as usize)
    } else {
        Rat::new(Int::one(), Int::one() << (-bits) as usize)
    }
}

/// Default isolation width used by callers that only need later refinement.
pub fn default_width() -> Rat {
    rat_pow2(-24)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_frac};

    #[test]
    fn sturm_x2_minus_6() {
        // oracle: sign changes of f on a dyadic grid locate roots near
        // +-sqrt(6) ~ +-2.449
        let f = ZPoly::from_i64(&[-6, 0, 1]);
        let ivs = isolate_real_roots(&f);
        assert_eq!(ivs.len(), 2);
        let a = refine_real_root(&f, &ivs[0], &rat_frac(1, 1000));
        let b = refine_real_root(&f, &ivs[1], &rat_frac(1, 1000));
        assert!(a.lo < rat_frac(-2449, 1000) && a.hi > rat_frac(-245, 100));
        assert!(b.lo < rat_frac(2450, 1000) && b.hi > rat_frac(2449, 1000));
    }

    #[test]
    fn sturm_no_real_roots() {
        let f = ZPoly::from_i64(&[3, 0, 1]);
        assert_eq!(isolate_real_roots(&f).len(), 0);
        assert_eq!(count_real_roots(&f), 0);
    }

    #[test]
    fn sturm_root_at_zero() {
        let f = ZPoly::from_i64(&[0, 1]);
        let ivs = isolate_real_roots(&f);
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].contains(&rat(0)));
        assert_eq!(count_roots_le_zero(&f), 1);
    }

    #[test]
    fn sturm_grid_oracle() {
        // independent oracle: count sign changes of f on a fine dyadic grid
        let f = ZPoly::from_i64(&[-1, -5, 0, 1]); // x^3 - 5x - 1: 3 real roots
        let ivs = isolate_real_roots(&f);
        let mut grid_count = 0;
        let mut prev = f.eval_rat(&rat_frac(-4096, 1024));
        let mut k = -4095i64;
        while k <= 4096 {
            let x = rat_frac(k, 1024);
            let v = f.eval_rat(&x);
            if v.is_zero() || prev.is_zero() {
                prev = v;
                k += 1;
                continue;
            }
            if (v.is_positive()) != (prev.is_positive()) {
                grid_count += 1;
            }
            prev = v;
            k += 1;
        }
        assert_eq!(ivs.len(), grid_count);
        assert_eq!(ivs.len(), 3);
    }

    #[test]
    fn complex_x2_plus_3() {
        // roots +- i sqrt(3)
        let f = ZPoly::from_i64(&[3, 0, 1]);
        let roots = isolate_complex_roots(&f, &rat_frac(1, 1 << 20));
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| !r.is_real));
        // symmetric pair
        assert_eq!(roots[0].z, roots[1].z.conj());
        // 3 in |z|^2 enclosure
        for r in &roots {
            assert!(r.z.norm_sq().contains(&rat(3)));
        }
    }

    #[test]
    fn complex_x8_plus_16_on_circle() {
        // oracle: the Weil bound forces |z|^2 = 2*sqrt(2)^2 = ... here
        // |z| = 16^(1/8) = sqrt(2), so |z|^2 = 2
        let f = ZPoly::from_i64(&[16, 0, 0, 0, 0, 0, 0, 0, 1]);
        let roots = isolate_complex_roots(&f, &rat_frac(1, 1 << 24));
        assert_eq!(roots.len(), 8);
        for r in &roots {
            assert!(r.z.norm_sq().contains(&rat(2)), "{:?}", r.z.norm_sq());
        }
        // pairwise disjoint
        for i in 0..8 {
            for j in i + 1..8 {
                assert!(roots[i].z.disjoint(&roots[j].z));
            }
        }
    }

    #[test]
    fn degree_one_exact() {
        let f = ZPoly::from_i64(&[-7, 2]); // root 7/2
        let roots = isolate_complex_roots(&f, &rat_frac(1, 1024));
        assert_eq!(roots.len(), 1);
        assert!(roots[0].is_real);
        assert!(roots[0].z.re.contains(&rat_frac(7, 2)));
    }

    #[test]
    fn nested_refinement() {
        let f = ZPoly::from_i64(&[16, 0, 0, 0, 0, 0, 0, 0, 1]);
        let roots = isolate_complex_roots(&f, &rat_frac(1, 1 << 16));
        for r in roots.iter().take(2) {
            let mut prev = r.clone();
            for extra in [20u32, 28, 36] {
                let finer = refine_box(&f, &prev, &Rat::new(Int::one(), Int::one() << extra as usize));
                assert!(prev.z.contains_value_of(&finer.z), "refinement not nested");
                prev = finer;
            }
        }
    }
}
