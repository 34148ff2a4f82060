//! Number fields Q[y]/(f) with exact arithmetic, factorization of
//! polynomials over them (Trager's norm method), splitting-field towers,
//! and generator reduction. Used for the global splitting field M of h and
//! for root extraction inside the étale algebra.

use crate::arith::factorq::factor_z;
use crate::arith::matrix::{IntMatrix, RatMatrix};
use crate::arith::poly::{lagrange_interpolate, resultant, QPoly, ZPoly};
use crate::arith::{clear_denominators, Int, Rat};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

/// A number field presented by a monic irreducible integer polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    pub f: ZPoly,
}

/// Element: polynomial in the generator of degree < deg f.
pub type NfElem = QPoly;

impl NumberField {
    pub fn new(f: ZPoly) -> Self {
        assert!(f.is_monic());
        NumberField { f }
    }
    pub fn rationals() -> Self {
        NumberField { f: ZPoly::x() }
    }
    pub fn degree(&self) -> usize {
        self.f.degree()
    }
    pub fn gen(&self) -> NfElem {
        if self.degree() == 1 {
            // y = -f(0)
            QPoly::new(vec![Rat::from_integer(-self.f.coeff(0))])
        } else {
            QPoly::new(vec![Rat::zero(), Rat::one()])
        }
    }
    pub fn reduce(&self, x: &QPoly) -> NfElem {
        x.divrem(&self.f.to_qpoly()).1
    }
    pub fn add(&self, a: &NfElem, b: &NfElem) -> NfElem {
        a.add(b)
    }
    pub fn sub(&self, a: &NfElem, b: &NfElem) -> NfElem {
        a.sub(b)
    }
    pub fn mul(&self, a: &NfElem, b: &NfElem) -> NfElem {
        self.reduce(&a.mul(b))
    }
    pub fn inv(&self, a: &NfElem) -> NfElem {
        // extended euclid with f (a invertible since f is irreducible)
        let mut r0 = self.f.to_qpoly();
        let mut r1 = self.reduce(a);
        let mut s0 = QPoly::zero();
        let mut s1 = QPoly::one();
        while !r1.is_zero() && r1.degree() > 0 {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        assert!(!r1.is_zero(), "inverse of zero");
        let c = r1.lc().clone();
        self.reduce(&s1.mul_scalar(&(Rat::one() / c)))
    }

    /// Minimal polynomial of an element (over Q, monic, integral when the
    /// element is an algebraic integer).
    pub fn min_poly(&self, a: &NfElem) -> ZPoly {
        let n = self.degree();
        let (az, scale) = a.clear_denoms();
        let d = scale.denom().clone();
        let azs = az.mul_scalar(scale.numer());
        let mut pts = Vec::new();
        let mut k = Int::zero();
        while pts.len() < n + 1 {
            let shifted = ZPoly::constant(&k * &d).sub(&azs);
            let r = Rat::new(resultant(&self.f, &shifted), d.pow(n as u32));
            pts.push((Rat::from_integer(k.clone()), r));
            k += Int::one();
        }
        let char_poly = lagrange_interpolate(&pts);
        let (z, _) = char_poly.clear_denoms();
        z.squarefree_part()
    }

    /// Factor a squarefree polynomial with coefficients in this field into
    /// monic irreducible factors (Trager's method).
    pub fn factor_squarefree_poly(&self, g: &[NfElem]) -> Vec<Vec<NfElem>> {
        let gp = NfPoly::new(g.to_vec());
        if gp.degree() <= 1 {
            return vec![g.to_vec()];
        }
        if self.degree() == 1 {
            // base case: rational coefficients
            let root = self.gen();
            let q = QPoly::new(
                g.iter()
                    .map(|c| c.eval(&root.coeff(0)))
                    .collect::<Vec<_>>(),
            );
            let (_, fac) = crate::arith::factorq::factor_q(&q);
            return fac
                .into_iter()
                .map(|(p, e)| {
                    debug_assert_eq!(e, 1);
                    p.c.iter()
                        .map(|c| QPoly::new(vec![c.clone()]))
                        .collect::<Vec<NfElem>>()
                })
                .collect();
        }
        // find a shift s with squarefree norm
        let mut s = 0i64;
        loop {
            let shifted = gp.shift_by_generator(self, s);
            let norm = shifted.norm_poly(self);
            if norm.is_squarefree() {
                let factors = factor_z(&norm);
                if factors.len() == 1 {
                    return vec![g.to_vec()];
                }
                let mut out = Vec::new();
                let mut rem = shifted.clone();
                for (nf_factor, _) in factors {
                    // gcd(shifted, nf_factor(y)) over the field
                    let lifted = NfPoly::from_qpoly(&nf_factor.to_qpoly());
                    let gg = rem.gcd(self, &lifted);
                    if gg.degree() >= 1 {
                        let back = gg.shift_by_generator(self, -s);
                        out.push(back.monic(self).coeffs);
                        rem = rem.div_exact(self, &gg);
                    }
                }
                if rem.degree() >= 1 {
                    out.push(rem.shift_by_generator(self, -s).monic(self).coeffs);
                }
                debug_assert_eq!(
                    out.iter().map(|f| f.len() - 1).sum::<usize>(),
                    gp.degree()
                );
                return out;
            }
            s = if s >= 0 { -(s + 1) } else { -s };
            assert!(s.abs() < 200, "no squarefree shift found");
        }
    }

    /// Roots of a (not necessarily squarefree) polynomial in this field.
    pub fn roots_of(&self, g: &[NfElem]) -> Vec<NfElem> {
        let gp = NfPoly::new(g.to_vec());
        if gp.is_zero() {
            return vec![];
        }
        if gp.degree() == 0 {
            return vec![];
        }
        // make squarefree over the field: gcd with derivative
        let d = gp.derivative(self);
        let sf = if d.is_zero() {
            gp.clone()
        } else {
            let gcd = gp.gcd(self, &d);
            if gcd.degree() > 0 {
                gp.div_exact(self, &gcd)
            } else {
                gp.clone()
            }
        };
        let mut out = Vec::new();
        for f in self.factor_squarefree_poly(&sf.monic(self).coeffs) {
            if f.len() == 2 {
                // monic linear: y + c -> root -c
                let c = &f[0];
                let lc = &f[1];
                let lcinv = self.inv(lc);
                out.push(self.mul(&QPoly::new(vec![-Rat::one()]).mul(c), &lcinv));
            }
        }
        out
    }
}

/// Polynomial with NfElem coefficients (lowest first, normalized).
#[derive(Clone, Debug)]
pub struct NfPoly {
    pub coeffs: Vec<NfElem>,
}

impl NfPoly {
    pub fn new(mut coeffs: Vec<NfElem>) -> Self {
        while let Some(c) = coeffs.last() {
            if c.is_zero() {
                coeffs.pop();
            } else {
                break;
            }
        }
        NfPoly { coeffs }
    }
    pub fn from_qpoly(q: &QPoly) -> Self {
        NfPoly::new(q.c.iter().map(|c| QPoly::new(vec![c.clone()])).collect())
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero());
        self.coeffs.len() - 1
    }
    pub fn lc(&self) -> &NfElem {
        self.coeffs.last().unwrap()
    }

    pub fn monic(&self, k: &NumberField) -> NfPoly {
        let inv = k.inv(self.lc());
        NfPoly::new(self.coeffs.iter().map(|c| k.mul(c, &inv)).collect())
    }

    pub fn derivative(&self, _k: &NumberField) -> NfPoly {
        if self.coeffs.len() <= 1 {
            return NfPoly::new(vec![]);
        }
        NfPoly::new(
            (1..self.coeffs.len())
                .map(|i| {
                    self.coeffs[i].mul_scalar(&Rat::from_integer(Int::from(i as u64)))
                })
                .collect(),
        )
    }

    pub fn divrem(&self, k: &NumberField, d: &NfPoly) -> (NfPoly, NfPoly) {
        assert!(!d.is_zero());
        let dd = d.degree();
        let lcinv = k.inv(d.lc());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (NfPoly::new(vec![]), self.clone());
        }
        let mut q = vec![QPoly::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let coef = k.mul(&rem[i], &lcinv);
            q[i - dd] = coef.clone();
            for j in 0..=dd {
                let v = k.mul(&coef, &d.coeffs[j]);
                rem[i - dd + j] = rem[i - dd + j].sub(&v);
            }
        }
        (NfPoly::new(q), NfPoly::new(rem))
    }

    pub fn div_exact(&self, k: &NumberField, d: &NfPoly) -> NfPoly {
        let (q, r) = self.divrem(k, d);
        debug_assert!(r.is_zero(), "non-exact division");
        q
    }

    pub fn gcd(&self, k: &NumberField, o: &NfPoly) -> NfPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(k, &b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic(k)
        }
    }

    /// Substitute x -> x + s*theta (theta = field generator).
    pub fn shift_by_generator(&self, k: &NumberField, s: i64) -> NfPoly {
        if s == 0 {
            return self.clone();
        }
        let theta_s = k.gen().mul_scalar(&Rat::from_integer(Int::from(s)));
        // Horner in (x + s theta)
        let mut acc = NfPoly::new(vec![]);
        let shift_poly = NfPoly::new(vec![theta_s, QPoly::one()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(k, &shift_poly).add(&NfPoly::new(vec![c.clone()]));
        }
        acc
    }

    pub fn add(&self, o: &NfPoly) -> NfPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        NfPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(QPoly::zero);
                    let b = o.coeffs.get(i).cloned().unwrap_or_else(QPoly::zero);
                    a.add(&b)
                })
                .collect(),
        )
    }

    pub fn mul(&self, k: &NumberField, o: &NfPoly) -> NfPoly {
        if self.is_zero() || o.is_zero() {
            return NfPoly::new(vec![]);
        }
        let mut c = vec![QPoly::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add(&k.mul(a, b));
                }
            }
        }
        NfPoly::new(c)
    }

    /// Norm polynomial: Res_y(f(y), self(x)(y)) as a univariate integer
    /// polynomial in x, by evaluation/interpolation.
    pub fn norm_poly(&self, k: &NumberField) -> ZPoly {
        let deg_out = self.degree() * k.degree();
        // evaluate at integers x = t: Res_y(f, sum_i c_i(y) t^i)
        let mut pts: Vec<(Rat, Rat)> = Vec::new();
        let mut t = Int::zero();
        while pts.len() < deg_out + 1 {
            // build the univariate-in-y polynomial at x = t
            let mut acc = QPoly::zero();
            let mut tp = Rat::one();
            for c in &self.coeffs {
                acc = acc.add(&c.mul_scalar(&tp));
                tp *= Rat::from_integer(t.clone());
            }
            let (az, scale) = acc.clear_denoms();
            if az.is_zero() {
                pts.push((Rat::from_integer(t.clone()), Rat::zero()));
            } else {
                let r = resultant(&k.f, &az);
                let mut s = Rat::one();
                for _ in 0..k.degree() {
                    s *= &scale;
                }
                pts.push((Rat::from_integer(t.clone()), Rat::from_integer(r) * s));
            }
            t += Int::one();
        }
        let q = lagrange_interpolate(&pts);
        let (z, _) = q.clear_denoms();
        z
    }
}

/// A root of h inside a bigger field, tracked through tower extensions.
#[derive(Clone, Debug)]
pub struct SplittingField {
    pub field: NumberField,
    /// the roots of the input polynomial, as elements of `field`
    pub roots: Vec<NfElem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitError {
    DegreeCapExceeded(usize),
}

impl core::fmt::Display for SplitError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SplitError::DegreeCapExceeded(d) => {
                write!(f, "splitting field degree {d} exceeds the configured cap")
            }
        }
    }
}

/// Splitting field of a squarefree integer polynomial over Q, by iterated
/// factorization and primitive-element recombination; generators are
/// LLL-reduced at every step to keep coefficients small.
pub fn splitting_field(h: &ZPoly, degree_cap: usize) -> Result<SplittingField, SplitError> {
    assert!(h.is_squarefree());
    let mut field = NumberField::rationals();
    loop {
        // factor h over the field and collect roots
        let hp = NfPoly::from_qpoly(&h.to_qpoly());
        let factors = field.factor_squarefree_poly(&hp.coeffs);
        let mut roots = Vec::new();
        let mut nonlinear: Option<Vec<NfElem>> = None;
        for f in &factors {
            if f.len() == 2 {
                let c = &f[0];
                roots.push(field.mul(&c.neg(), &QPoly::one()));
            } else if nonlinear.is_none() {
                nonlinear = Some(f.clone());
            }
        }
        match nonlinear {
            None => {
                return Ok(SplittingField { field, roots });
            }
            Some(f) => {
                let new_deg = field.degree() * (f.len() - 1);
                if new_deg > degree_cap {
                    return Err(SplitError::DegreeCapExceeded(new_deg));
                }
                field = extend_by_factor(&field, &f);
            }
        }
    }
}

/// Extend K by a root of an irreducible monic NfPoly factor, returning the
/// new field with a reduced primitive generator. The polynomial is a factor
/// of a squarefree integer polynomial, so a primitive element of the form
/// (root + s*theta) exists for some small integer s.
fn extend_by_factor(k: &NumberField, factor: &[NfElem]) -> NumberField {
    let fp = NfPoly::new(factor.to_vec());
    if k.degree() == 1 {
        // the factor has rational coefficients
        let root = k.gen();
        let q = QPoly::new(fp.coeffs.iter().map(|c| c.eval(&root.coeff(0))).collect());
        let (z, _) = q.monic().clear_denoms();
        return NumberField::new(reduce_generator(&z));
    }
    let mut s = 1i64;
    loop {
        // minimal polynomial of (root of factor) + s * theta:
        // norm of factor(x - s*theta)
        let shifted = fp.shift_by_generator(k, -s);
        let norm = shifted.norm_poly(k);
        if norm.is_squarefree() {
            // norm is irreducible iff theta + ... let the factorization
            // decide; pick an irreducible factor of correct degree
            let target = k.degree() * fp.degree();
            let fac = factor_z(&norm);
            for (g, _) in fac {
                if g.degree() == target {
                    return NumberField::new(reduce_generator(&g));
                }
            }
        }
        s = if s > 0 { -s } else { -s + 1 };
        assert!(s.abs() < 200, "no primitive shift found");
    }
}

/// Reduce the generator of Q[y]/(g): search small combinations in the
/// equation order for a primitive element with a smaller minimal
/// polynomial; returns the (monic integral) defining polynomial to use.
pub fn reduce_generator(g: &ZPoly) -> ZPoly {
    let n = g.degree();
    if n <= 2 {
        return g.primitive();
    }
    let k = NumberField::new(g.primitive());
    // T2-like Gram on the equation order Z[y]/(g): use the trace pairing
    // Tr(b_i b_j) made positive via x -> sum over roots |.|^2 using
    // the complex embeddings: Gram_ij = sum_phi phi(b_i) conj(phi(b_j));
    // for a generator search the simpler power-basis LLL on coefficient
    // размер works well in practice: minimize the coefficient size of the
    // minimal polynomial among a few candidate elements.
    let mut best = g.primitive();
    let mut best_size = poly_size(&best);
    // candidates: y + c, y^2 mod g + c y, small combinations
    let mut cands: Vec<QPoly> = Vec::new();
    for c in -2i64..=2 {
        cands.push(QPoly::new(vec![
            Rat::from_integer(Int::from(c)),
            Rat::one(),
        ]));
    }
    let y2 = k.reduce(&QPoly::new(vec![Rat::zero(), Rat::zero(), Rat::one()]));
    for c in -1i64..=1 {
        let cand = y2.add(&QPoly::new(vec![Rat::zero(), Rat::from_integer(Int::from(c))]));
        cands.push(cand);
    }
    for cand in cands {
        let m = k.min_poly(&cand);
        if m.degree() == n {
            let s = poly_size(&m);
            if s < best_size {
                best_size = s;
                best = m;
            }
        }
    }
    best
}

fn poly_size(f: &ZPoly) -> usize {
    f.c.iter().map(|c| c.bits() as usize).sum()
}

/// Embed a number field element into the étale algebra given the image of
/// the field generator.
pub fn embed_nf_elem(
    alg: &crate::etale::EtaleAlgebra,
    x: &NfElem,
    gen_image: &crate::etale::AlgElement,
) -> crate::etale::AlgElement {
    let mut acc = alg.zero();
    let mut p = alg.one();
    for c in &x.c {
        if !c.is_zero() {
            acc = alg.add(&acc, &alg.scale(&p, c));
        }
        p = alg.mul(&p, gen_image);
    }
    acc
}

/// Quick certificate that X^ell = t has no solution in the component field
/// Q[x]/(hi): find a prime r and an irreducible factor g of hi mod r with
/// the image of t a nonzero non-ell-th-power in F_(r^deg g). Sound but not
/// complete (None = no certificate).
fn power_root_locally_impossible(hi: &ZPoly, ti: &QPoly, ell: u64) -> bool {
    use crate::arith::fp::{Fp, FpPoly};
    use crate::arith::int::XorShift;
    use num_integer::Integer as _;
    let mut rng = XorShift::new(0x5eed ^ ell);
    let (tz, scale) = ti.clear_denoms();
    let den = scale.denom().clone();
    let num_scale = scale.numer().clone();
    let mut tested = 0;
    let mut r = 2u64;
    while tested < 8 {
        r = crate::arith::factorq::next_prime_pub(r + 1);
        if r > 600 {
            break;
        }
        let ri = Int::from(r);
        if (hi.lc() % &ri).is_zero() || (&den % &ri).is_zero() || (&num_scale % &ri).is_zero() {
            continue;
        }
        let hmod = hi.mod_p(r);
        if hmod.gcd(&hmod.derivative()).degree() != 0 {
            continue;
        }
        tested += 1;
        for (g, _) in hmod.factor(&mut rng) {
            let d = g.degree() as u32;
            if d > 10 {
                continue;
            }
            let q = r.checked_pow(d);
            let Some(q) = q else { continue };
            let m = Int::from(q) - Int::one();
            let gcd_l = m.gcd(&Int::from(ell));
            if gcd_l.is_one() {
                continue; // everything is an ell-th power here
            }
            // image of t in F_q = F_r[x]/(g)
            let fp = Fp::new(r);
            let tmod = tz.mod_p(r).rem(&g);
            if tmod.is_zero() {
                continue;
            }
            let sc = {
                // multiply by the scale numerator / denominator mod r
                let dn = u64::try_from(&den.mod_floor(&ri)).unwrap();
                let nm = u64::try_from(&num_scale.mod_floor(&ri)).unwrap();
                fp.mul(nm, fp.inv(dn))
            };
            let timg = tmod.scale(sc);
            let e = u64::try_from(&(&m / &gcd_l)).unwrap_or(0);
            if e == 0 {
                continue;
            }
            let p = timg.pow_mod(e, &g);
            if !(p.c.len() == 1 && p.c[0] == 1) {
                return true; // certified: not an ell-th power locally
            }
        }
    }
    false
}

/// Roots of x^ell = t inside the étale algebra (componentwise field root
/// extraction glued by CRT); returns all solutions.
pub fn power_roots_in_algebra(
    alg: &crate::etale::EtaleAlgebra,
    t: &crate::etale::AlgElement,
    ell: u64,
) -> Vec<crate::etale::AlgElement> {
    // per component: roots of X^ell - t_i over L_i
    let mut per_comp: Vec<Vec<QPoly>> = Vec::new();
    for (i, hi) in alg.factors.iter().enumerate() {
        let k = NumberField::new(hi.clone());
        let ti = alg.component(t, i);
        if power_root_locally_impossible(hi, &ti, ell) {
            return vec![];
        }
        let mut coeffs = vec![QPoly::zero(); ell as usize + 1];
        coeffs[0] = ti.neg();
        coeffs[ell as usize] = QPoly::one();
        let roots = k.roots_of(&coeffs);
        if roots.is_empty() {
            return vec![];
        }
        per_comp.push(roots);
    }
    // CRT: all combinations
    let mut out: Vec<crate::etale::AlgElement> = vec![alg.zero()];
    for (i, roots) in per_comp.iter().enumerate() {
        let mut next = Vec::new();
        for base in &out {
            for r in roots {
                let lifted = alg.lift_component(r, i);
                next.push(alg.add(base, &lifted));
            }
        }
        out = next;
    }
    // exact verification
    out.retain(|w| alg.pow(w, ell as i64) == *t);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn factor_over_gaussian_field() {
        // over Q(i): x^2 + 1 splits
        let k = NumberField::new(ZPoly::from_i64(&[1, 0, 1]));
        let g = vec![
            QPoly::new(vec![rat(1)]),
            QPoly::zero(),
            QPoly::new(vec![rat(1)]),
        ];
        let fac = k.factor_squarefree_poly(&g);
        assert_eq!(fac.len(), 2);
        for f in &fac {
            assert_eq!(f.len(), 2);
        }
        let roots = k.roots_of(&g);
        assert_eq!(roots.len(), 2);
        // roots are +-i = +-y
        for r in &roots {
            let sq = k.mul(r, r);
            assert_eq!(sq, QPoly::new(vec![rat(-1)]));
        }
    }

    #[test]
    fn splitting_x2_3() {
        let sf = splitting_field(&ZPoly::from_i64(&[3, 0, 1]), 64).unwrap();
        assert_eq!(sf.field.degree(), 2);
        assert_eq!(sf.roots.len(), 2);
    }

    #[test]
    fn splitting_x4_9_is_quartic() {
        // x^4+9 is normal: the splitting field is the field itself
        let sf = splitting_field(&ZPoly::from_i64(&[9, 0, 0, 0, 1]), 64).unwrap();
        assert_eq!(sf.field.degree(), 4);
        assert_eq!(sf.roots.len(), 4);
        // all roots actually satisfy x^4 = -9
        for r in &sf.roots {
            let r2 = sf.field.mul(r, r);
            let r4 = sf.field.mul(&r2, &r2);
            assert_eq!(r4, QPoly::new(vec![rat(-9)]));
        }
    }

    #[test]
    fn splitting_product() {
        // (x^2+3)(x^4+9): splitting field degree 8
        let h = ZPoly::from_i64(&[3, 0, 1]).mul(&ZPoly::from_i64(&[9, 0, 0, 0, 1]));
        let sf = splitting_field(&h, 64).unwrap();
        assert_eq!(sf.roots.len(), 6);
        assert_eq!(sf.field.degree(), 8);
    }

    #[test]
    fn degree_cap() {
        let h = ZPoly::from_i64(&[3, 0, 1]).mul(&ZPoly::from_i64(&[9, 0, 0, 0, 1]));
        assert_eq!(
            splitting_field(&h, 4).unwrap_err(),
            SplitError::DegreeCapExceeded(8)
        );
    }

    #[test]
    fn power_roots() {
        // square roots of i*(5+2sqrt(6)) in Q[x]/(x^4+9) exist
        let alg = crate::etale::make_algebra(&ZPoly::from_i64(&[9, 0, 0, 0, 1]), &Int::from(3))
            .unwrap();
        let beta = alg.beta();
        let eps = alg.add(
            &alg.from_rat(&rat(5)),
            &alg.mul(&beta, &alg.from_rat(&rat(2))),
        );
        // i = pi^2/3
        let i_elem = alg.scale(&alg.mul(&alg.pi(), &alg.pi()), &crate::arith::rat_frac(1, 3));
        let t = alg.mul(&i_elem, &eps);
        let roots = power_roots_in_algebra(&alg, &t, 2);
        assert_eq!(roots.len(), 2);
        for w in &roots {
            assert_eq!(alg.mul(w, w), t);
        }
        // and no square root of eps itself
        let none = power_roots_in_algebra(&alg, &eps, 2);
        assert!(none.is_empty());
    }
}
