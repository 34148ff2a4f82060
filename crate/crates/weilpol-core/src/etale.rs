//! The étale algebra L = Q[x]/(h) of a squarefree Weil p-polynomial, with
//! its CM structure: the canonical involution pi -> p/pi, trace and norm,
//! the totally real subalgebra L_R = Q[beta] for beta = pi + p/pi, and
//! exact total-positivity tests.
//!
//! All elements live on the power basis 1, pi, ..., pi^(2g-1), even when L
//! splits; per-factor projections go through the CRT idempotents.

use crate::arith::factorq::factor_z;
use crate::arith::interval::{eval_box, ComplexBox, RatInterval};
use crate::arith::matrix::RatMatrix;
use crate::arith::poly::{lagrange_interpolate, resultant, QPoly, ZPoly};
use crate::arith::roots::{
    count_real_roots, count_roots_le_zero, isolate_complex_roots, refine_box, RootBox,
};
use crate::arith::{Int, Rat};
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    NotMonicIntegral,
    NotSquarefree,
    NotWeil,
    HasRealRoots,
    NotTotallyReal,
    NotTotallyImaginary,
    NotAUnit,
}

impl core::fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let s = match self {
            AlgebraError::NotMonicIntegral => {
                "polynomial is not monic with integer coefficients of even degree"
            }
            AlgebraError::NotSquarefree => "polynomial is not squarefree",
            AlgebraError::NotWeil => "some complex root fails |z|^2 = p",
            AlgebraError::HasRealRoots => "x^2 - p divides h (real Weil numbers excluded)",
            AlgebraError::NotTotallyReal => "element is not fixed by the involution",
            AlgebraError::NotTotallyImaginary => "element is not negated by the involution",
            AlgebraError::NotAUnit => "element is a zero divisor",
        };
        write!(f, "{s}")
    }
}

/// A validated squarefree Weil p-polynomial with its prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilInput {
    pub h: ZPoly,
    pub p: Int,
    pub g: usize,
}

/// Element of L on the power basis of pi; always length 2g.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlgElement {
    pub coords: Vec<Rat>,
}

impl core::fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl AlgElement {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
    pub fn as_qpoly(&self) -> QPoly {
        QPoly::new(self.coords.clone())
    }
    pub fn is_integral_coords(&self) -> bool {
        self.coords.iter().all(|c| c.denom().is_one())
    }
}

/// A certified complex root of one irreducible factor of h.
#[derive(Clone, Debug)]
pub struct LabeledRoot {
    /// index of the factor h_i this root belongs to
    pub factor: usize,
    /// index of this root within the factor (sorted canonical order)
    pub index: usize,
    pub root: RootBox,
    /// position in `roots` of the complex-conjugate root
    pub conj: usize,
}

pub struct EtaleAlgebra {
    pub input: WeilInput,
    /// irreducible monic factors of h, sorted canonically
    pub factors: Vec<ZPoly>,
    /// degree of each factor = 2 g_i
    pub factor_degrees: Vec<usize>,
    /// trace polynomial: h(x) = x^g q(x + p/x); L_R = Q[beta]/(q)
    pub trace_poly: ZPoly,
    /// all 2g complex roots, labeled by factor, in exact conjugate pairs
    pub roots: Vec<LabeledRoot>,
    involution: RatMatrix,
    /// beta = pi + p/pi on the power basis
    beta: AlgElement,
    /// rows = coords of beta^k, k = 0..g-1 (basis of L_R inside L)
    real_basis: RatMatrix,
    power_sums: Vec<Rat>,
    /// CRT idempotents, one per factor
    idempotents: Vec<AlgElement>,
    /// cache of refined root boxes (refinement is monotone and nested)
    root_cache: Rc<RefCell<Vec<RootBox>>>,
}

impl core::fmt::Debug for EtaleAlgebra {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "EtaleAlgebra(h = {:?}, p = {})", self.input.h, self.input.p)
    }
}

/// Trace polynomial q with h(x) = x^g q(x + p/x), via the recursion
/// P_0 = 2, P_1 = y, P_{i+1} = y P_i - p P_{i-1}; exists iff the Weil
/// functional equation holds on the coefficients.
pub fn trace_polynomial(h: &ZPoly, p: &Int) -> Option<ZPoly> {
    let n = h.degree();
    if n % 2 != 0 {
        return None;
    }
    let g = n / 2;
    for i in 0..g {
        if h.coeff(i) != p.pow((g - i) as u32) * h.coeff(2 * g - i) {
            return None;
        }
    }
    let mut p0 = ZPoly::constant(Int::from(2));
    let mut p1 = ZPoly::x();
    let mut q = ZPoly::constant(h.coeff(g));
    for i in 1..=g {
        q = q.add(&p1.mul_scalar(&h.coeff(g + i)));
        let next = ZPoly::x().mul(&p1).sub(&p0.mul_scalar(p));
        p0 = p1;
        p1 = next;
    }
    Some(q)
}

pub fn make_algebra(h: &ZPoly, p: &Int) -> Result<EtaleAlgebra, AlgebraError> {
    if h.is_zero() || !h.is_monic() || h.degree() == 0 || h.degree() % 2 != 0 {
        return Err(AlgebraError::NotMonicIntegral);
    }
    if !h.is_squarefree() {
        return Err(AlgebraError::NotSquarefree);
    }
    let n = h.degree();
    let g = n / 2;

    // real roots of a Weil polynomial over a prime field can only be
    // +-sqrt(p), i.e. x^2 - p | h
    if count_real_roots(h) > 0 {
        let x2p = ZPoly::new(vec![-p.clone(), Int::zero(), Int::one()]);
        let gcd = h.gcd(&x2p);
        if !gcd.is_zero() && gcd.degree() == 2 {
            return Err(AlgebraError::HasRealRoots);
        }
        return Err(AlgebraError::NotWeil);
    }
    let Some(q) = trace_polynomial(h, p) else {
        return Err(AlgebraError::NotWeil);
    };
    // q must be totally real with every root y satisfying y^2 < 4p
    if count_real_roots(&q) != g {
        return Err(AlgebraError::NotWeil);
    }
    {
        // r(w) = prod over roots (w - y^2); no roots allowed in [4p, inf)
        let mut pts = Vec::new();
        for k in 0..=(g as i64) {
            let kk = Int::from(k);
            let sub = ZPoly::new(vec![kk.clone(), Int::zero(), -Int::one()]);
            pts.push((
                Rat::from_integer(kk),
                Rat::from_integer(resultant(&q, &sub)),
            ));
        }
        let r = lagrange_interpolate(&pts);
        let (rz, _) = r.clear_denoms();
        let four_p = Rat::from_integer(Int::from(4) * p);
        if rz.eval_rat(&four_p).is_zero() {
            return Err(AlgebraError::HasRealRoots);
        }
        let sf = rz.squarefree_part();
        let chain = crate::arith::roots::sturm_chain(&sf);
        let big = sf.cauchy_bound() + Rat::one();
        if crate::arith::roots::count_roots_in(&chain, &four_p, &big) > 0 {
            return Err(AlgebraError::NotWeil);
        }
    }

    let factors: Vec<ZPoly> = factor_z(h)
        .into_iter()
        .map(|(f, e)| {
            debug_assert_eq!(e, 1);
            f
        })
        .collect();
    let factor_degrees: Vec<usize> = factors.iter().map(|f| f.degree()).collect();

    // involution pi -> p/pi; pi^{-1} = -(1/a_0)(a_1 + a_2 pi + ... + pi^{2g-1})
    let a0 = h.coeff(0);
    let mut inv_pi = vec![Rat::zero(); n];
    for k in 1..=n {
        inv_pi[k - 1] = -Rat::new(h.coeff(k), a0.clone());
    }
    let pibar = QPoly::new(inv_pi).mul_scalar(&Rat::from_integer(p.clone()));
    let hq = h.to_qpoly();
    let mut rows = Vec::with_capacity(n);
    let mut cur = QPoly::one();
    for _ in 0..n {
        let mut coords = vec![Rat::zero(); n];
        for (i, c) in cur.c.iter().enumerate() {
            coords[i] = c.clone();
        }
        rows.push(coords);
        cur = cur.mul(&pibar).divrem(&hq).1;
    }
    let involution = RatMatrix::from_rows(rows);

    // beta = pi + p/pi
    let beta = {
        let mut c = vec![Rat::zero(); n];
        let bp = QPoly::new(vec![Rat::zero(), Rat::one()]).add(&pibar);
        for (i, x) in bp.c.iter().enumerate() {
            c[i] = x.clone();
        }
        AlgElement { coords: c }
    };

    // root isolation per factor with exact conjugate pairing
    let width = crate::arith::roots::default_width();
    let mut roots: Vec<LabeledRoot> = Vec::new();
    for (fi, f) in factors.iter().enumerate() {
        let boxes = isolate_complex_roots(f, &width);
        let base = roots.len();
        for (j, b) in boxes.iter().enumerate() {
            let cb = b.z.conj();
            let mut conj = usize::MAX;
            for (k, other) in boxes.iter().enumerate() {
                if other.z == cb {
                    conj = base + k;
                    break;
                }
            }
            assert!(conj != usize::MAX, "conjugate pairing failed");
            roots.push(LabeledRoot {
                factor: fi,
                index: j,
                root: b.clone(),
                conj,
            });
        }
    }

    let power_sums = h.power_sums(2 * n);

    // real basis rows: beta^k for k < g
    let mut real_rows = Vec::with_capacity(g);
    {
        let mut cur = QPoly::one();
        let betap = beta.as_qpoly();
        for _ in 0..g {
            let mut coords = vec![Rat::zero(); n];
            for (i, c) in cur.c.iter().enumerate() {
                coords[i] = c.clone();
            }
            real_rows.push(coords);
            cur = cur.mul(&betap).divrem(&hq).1;
        }
    }
    let real_basis = RatMatrix::from_rows(real_rows);

    // CRT idempotents
    let mut idempotents = Vec::with_capacity(factors.len());
    for f in &factors {
        let fq = f.to_qpoly();
        let (cof, rem) = hq.divrem(&fq);
        debug_assert!(rem.is_zero());
        let inv = invert_mod(&cof, &fq);
        let e = cof.mul(&inv).divrem(&hq).1;
        let mut coords = vec![Rat::zero(); n];
        for (i, c) in e.c.iter().enumerate() {
            coords[i] = c.clone();
        }
        idempotents.push(AlgElement { coords });
    }

    let root_cache = Rc::new(RefCell::new(
        roots.iter().map(|r| r.root.clone()).collect::<Vec<_>>(),
    ));

    let alg = EtaleAlgebra {
        input: WeilInput {
            h: h.clone(),
            p: p.clone(),
            g,
        },
        factors,
        factor_degrees,
        trace_poly: q,
        roots,
        involution,
        beta,
        real_basis,
        power_sums,
        idempotents,
        root_cache,
    };
    debug_assert!({
        let pi = alg.pi();
        let prod = alg.mul(&pi, &alg.involve(&pi));
        prod == alg.from_rat(&Rat::from_integer(p.clone()))
    });
    Ok(alg)
}

/// Inverse of a mod m over Q[x] (a must be invertible mod m).
fn invert_mod(a: &QPoly, m: &QPoly) -> QPoly {
    let mut r0 = m.clone();
    let mut r1 = a.divrem(m).1;
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
    assert!(!r1.is_zero(), "element not invertible");
    let c = r1.lc().clone();
    s1.mul_scalar(&(Rat::one() / c))
}

impl EtaleAlgebra {
    pub fn dim(&self) -> usize {
        2 * self.input.g
    }
    pub fn g(&self) -> usize {
        self.input.g
    }
    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement {
            coords: vec![Rat::zero(); self.dim()],
        }
    }
    pub fn one(&self) -> AlgElement {
        self.from_rat(&Rat::one())
    }
    pub fn pi(&self) -> AlgElement {
        let mut c = vec![Rat::zero(); self.dim()];
        c[1] = Rat::one();
        AlgElement { coords: c }
    }
    pub fn beta(&self) -> AlgElement {
        self.beta.clone()
    }
    pub fn from_rat(&self, r: &Rat) -> AlgElement {
        let mut c = vec![Rat::zero(); self.dim()];
        c[0] = r.clone();
        AlgElement { coords: c }
    }
    pub fn from_int_vec(&self, v: &[Int]) -> AlgElement {
        assert_eq!(v.len(), self.dim());
        AlgElement {
            coords: v.iter().map(|x| Rat::from_integer(x.clone())).collect(),
        }
    }
    pub fn from_qpoly(&self, f: &QPoly) -> AlgElement {
        let r = f.divrem(&self.input.h.to_qpoly()).1;
        let mut c = vec![Rat::zero(); self.dim()];
        for (i, x) in r.c.iter().enumerate() {
            c[i] = x.clone();
        }
        AlgElement { coords: c }
    }
    pub fn idempotent(&self, i: usize) -> AlgElement {
        self.idempotents[i].clone()
    }

    pub fn add(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        AlgElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }
    pub fn sub(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        AlgElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }
    pub fn neg(&self, a: &AlgElement) -> AlgElement {
        AlgElement {
            coords: a.coords.iter().map(|x| -x.clone()).collect(),
        }
    }
    pub fn scale(&self, a: &AlgElement, k: &Rat) -> AlgElement {
        AlgElement {
            coords: a.coords.iter().map(|x| x * k).collect(),
        }
    }
    pub fn mul(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        self.from_qpoly(&a.as_qpoly().mul(&b.as_qpoly()))
    }

    pub fn is_unit(&self, a: &AlgElement) -> bool {
        if a.is_zero() {
            return false;
        }
        let (za, _) = a.as_qpoly().clear_denoms();
        za.gcd(&self.input.h).degree() == 0
    }

    pub fn inv(&self, a: &AlgElement) -> Option<AlgElement> {
        if !self.is_unit(a) {
            return None;
        }
        Some(self.from_qpoly(&invert_mod(&a.as_qpoly(), &self.input.h.to_qpoly())))
    }

    pub fn div(&self, a: &AlgElement, b: &AlgElement) -> Option<AlgElement> {
        Some(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &AlgElement, e: i64) -> AlgElement {
        if e < 0 {
            return self.pow(&self.inv(a).expect("negative power of non-unit"), -e);
        }
        let mut r = self.one();
        let mut base = a.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        r
    }

    pub fn involve(&self, a: &AlgElement) -> AlgElement {
        AlgElement {
            coords: self.involution.mul_row(&a.coords),
        }
    }

    pub fn is_totally_real(&self, a: &AlgElement) -> bool {
        self.involve(a) == *a
    }

    pub fn is_totally_imaginary(&self, a: &AlgElement) -> bool {
        self.involve(a) == self.neg(a)
    }

    pub fn trace(&self, a: &AlgElement) -> Rat {
        let mut t = Rat::from_integer(Int::from(self.dim() as u64)) * &a.coords[0];
        for k in 1..self.dim() {
            t += &a.coords[k] * &self.power_sums[k - 1];
        }
        t
    }

    pub fn norm(&self, a: &AlgElement) -> Rat {
        let (za, scale) = a.as_qpoly().clear_denoms();
        if za.is_zero() {
            return Rat::zero();
        }
        let r = resultant(&self.input.h, &za);
        let mut s = Rat::one();
        for _ in 0..self.dim() {
            s *= &scale;
        }
        Rat::from_integer(r) * s
    }

    /// Multiplication-by-a matrix on the power basis (row k = coords of
    /// a * pi^k).
    pub fn mult_matrix(&self, a: &AlgElement) -> RatMatrix {
        let n = self.dim();
        let hq = self.input.h.to_qpoly();
        let ap = a.as_qpoly();
        let mut rows = Vec::with_capacity(n);
        let mut basis_pow = QPoly::one();
        let xq = QPoly::new(vec![Rat::zero(), Rat::one()]);
        for _ in 0..n {
            let prod = ap.mul(&basis_pow).divrem(&hq).1;
            let mut coords = vec![Rat::zero(); n];
            for (i, c) in prod.c.iter().enumerate() {
                coords[i] = c.clone();
            }
            rows.push(coords);
            basis_pow = basis_pow.mul(&xq).divrem(&hq).1;
        }
        RatMatrix::from_rows(rows)
    }

    /// Coordinates over the beta-power basis of L_R; None when a is not
    /// totally real.
    pub fn real_coords(&self, a: &AlgElement) -> Option<Vec<Rat>> {
        if !self.is_totally_real(a) {
            return None;
        }
        let g = self.g();
        let n = self.dim();
        // find pivot columns of the real basis by Gaussian elimination, then
        // solve the induced square system
        let mut mat = self.real_basis.clone();
        let mut cols = Vec::new();
        {
            let mut r = 0usize;
            for c in 0..n {
                if r == g {
                    break;
                }
                let mut piv = None;
                for i in r..g {
                    if !mat.at(i, c).is_zero() {
                        piv = Some(i);
                        break;
                    }
                }
                let Some(p) = piv else { continue };
                for j in 0..n {
                    let tmp = mat.at(r, j).clone();
                    *mat.at_mut(r, j) = mat.at(p, j).clone();
                    *mat.at_mut(p, j) = tmp;
                }
                let pv = mat.at(r, c).clone();
                for j in 0..n {
                    *mat.at_mut(r, j) /= pv.clone();
                }
                for i in 0..g {
                    if i != r && !mat.at(i, c).is_zero() {
                        let f = mat.at(i, c).clone();
                        for j in 0..n {
                            let v = &f * mat.at(r, j);
                            *mat.at_mut(i, j) -= v;
                        }
                    }
                }
                cols.push(c);
                r += 1;
            }
            assert_eq!(r, g, "real basis is degenerate");
        }
        let mut sys = RatMatrix::zero(g, g);
        for i in 0..g {
            for (jj, &c) in cols.iter().enumerate() {
                *sys.at_mut(i, jj) = self.real_basis.at(i, c).clone();
            }
        }
        let inv = sys.inverse()?;
        let target: Vec<Rat> = cols.iter().map(|&c| a.coords[c].clone()).collect();
        let mut y = vec![Rat::zero(); g];
        for j in 0..g {
            let mut s = Rat::zero();
            for i in 0..g {
                s += &target[i] * inv.at(i, j);
            }
            y[j] = s;
        }
        let full = self.real_basis.mul_row(&y);
        if full != a.coords {
            return None;
        }
        Some(y)
    }

    /// Element of L_R from beta-power coordinates.
    pub fn from_real_coords(&self, c: &[Rat]) -> AlgElement {
        assert_eq!(c.len(), self.g());
        AlgElement {
            coords: self.real_basis.mul_row(c),
        }
    }

    /// Characteristic polynomial of a totally real element acting on L_R.
    pub fn real_char_poly(&self, a: &AlgElement) -> Option<QPoly> {
        let c = self.real_coords(a)?;
        let cp = QPoly::new(c);
        let g = self.g();
        let (cz, scale) = cp.clear_denoms();
        let d = scale.denom().clone();
        let czs = cz.mul_scalar(scale.numer());
        let mut pts = Vec::new();
        let mut k = Int::zero();
        while pts.len() < g + 1 {
            let shifted = ZPoly::constant(&k * &d).sub(&czs);
            let r = Rat::new(resultant(&self.trace_poly, &shifted), d.pow(g as u32));
            pts.push((Rat::from_integer(k.clone()), r));
            k += Int::one();
        }
        Some(lagrange_interpolate(&pts))
    }

    /// Exact total positivity of a totally real unit.
    pub fn is_totally_positive(&self, a: &AlgElement) -> Result<bool, AlgebraError> {
        if !self.is_totally_real(a) {
            return Err(AlgebraError::NotTotallyReal);
        }
        if !self.is_unit(a) {
            return Err(AlgebraError::NotAUnit);
        }
        let cp = self.real_char_poly(a).ok_or(AlgebraError::NotTotallyReal)?;
        let (z, _) = cp.clear_denoms();
        let sf = z.squarefree_part();
        Ok(count_roots_le_zero(&sf) == 0)
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Current (possibly refined) box of root k.
    pub fn root_box(&self, k: usize) -> RootBox {
        self.root_cache.borrow()[k].clone()
    }

    /// Refine root k to the given width, caching the result (nested).
    pub fn refine_root(&self, k: usize, width: &Rat) -> RootBox {
        let cur = self.root_cache.borrow()[k].clone();
        if cur.z.width() <= *width {
            return cur;
        }
        let f = &self.factors[self.roots[k].factor];
        let finer = if cur.is_real {
            crate::arith::roots::RootBox {
                z: ComplexBox::new(
                    crate::arith::roots::refine_real_root(f, &cur.z.re, width),
                    RatInterval::point(Rat::zero()),
                ),
                is_real: true,
            }
        } else {
            refine_box(f, &cur, width)
        };
        self.root_cache.borrow_mut()[k] = finer.clone();
        finer
    }

    /// Evaluate an element at root k as a complex interval, refining the
    /// root box until the value box has width below `target`.
    pub fn eval_at_root(&self, a: &AlgElement, k: usize, target: &Rat) -> ComplexBox {
        let (num, den) = crate::arith::clear_denominators(&a.coords);
        let zp = ZPoly::new(num);
        let dn = Rat::from_integer(den);
        let mut bits = 24u32;
        loop {
            let b = self.refine_root(k, &Rat::new(Int::one(), Int::one() << bits as usize));
            let v = eval_box(&zp, &b.z);
            let v = ComplexBox::new(
                RatInterval::new(&v.re.lo / &dn, &v.re.hi / &dn),
                RatInterval::new(&v.im.lo / &dn, &v.im.hi / &dn),
            );
            if v.width() < *target || bits > 2048 {
                return v;
            }
            bits += 64;
        }
    }

    /// Strict sign of Im(phi_k(a)); refines until the interval excludes 0.
    pub fn imag_sign_at_root(&self, a: &AlgElement, k: usize) -> i32 {
        let mut target = Rat::new(Int::one(), Int::from(1u64 << 20));
        for _ in 0..24 {
            let v = self.eval_at_root(a, k, &target);
            if let Some(s) = v.im.sign() {
                return s;
            }
            target = target / Rat::from_integer(Int::from(1u64 << 16));
        }
        panic!("imaginary-part sign could not be certified (value may be zero)");
    }

    /// Strict sign of the value of a totally real element at the conjugate
    /// pair containing root k.
    pub fn real_sign_at_root(&self, a: &AlgElement, k: usize) -> i32 {
        debug_assert!(self.is_totally_real(a));
        let mut target = Rat::new(Int::one(), Int::from(1u64 << 20));
        for _ in 0..24 {
            let v = self.eval_at_root(a, k, &target);
            debug_assert!(v.im.contains_zero());
            if let Some(s) = v.re.sign() {
                return s;
            }
            target = target / Rat::from_integer(Int::from(1u64 << 16));
        }
        panic!("real sign could not be certified (value may be zero)");
    }

    /// Project an element to factor i as a residue polynomial mod h_i.
    pub fn component(&self, a: &AlgElement, i: usize) -> QPoly {
        a.as_qpoly().divrem(&self.factors[i].to_qpoly()).1
    }

    /// Lift a residue polynomial on factor i to the element supported there
    /// (zero on the other components).
    pub fn lift_component(&self, f: &QPoly, i: usize) -> AlgElement {
        let e = self.idempotents[i].as_qpoly();
        self.from_qpoly(&f.mul(&e))
    }

    /// Lift a residue polynomial on factor i to a unit: f on component i,
    /// 1 elsewhere.
    pub fn lift_component_unit(&self, f: &QPoly, i: usize) -> AlgElement {
        let mut out = self.lift_component(f, i);
        for (j, _) in self.factors.iter().enumerate() {
            if j != i {
                out = self.add(&out, &self.idempotents[j]);
            }
        }
        out
    }

    /// Minimal polynomial of an element over Q (monic, integer when the
    /// element is integral).
    pub fn min_poly(&self, a: &AlgElement) -> ZPoly {
        let n = self.dim();
        let ap = a.as_qpoly();
        let (az, scale) = ap.clear_denoms();
        let d = scale.denom().clone();
        let azs = az.mul_scalar(scale.numer());
        let mut pts = Vec::new();
        let mut k = Int::zero();
        while pts.len() < n + 1 {
            let shifted = ZPoly::constant(&k * &d).sub(&azs);
            let r = Rat::new(resultant(&self.input.h, &shifted), d.pow(n as u32));
            pts.push((Rat::from_integer(k.clone()), r));
            k += Int::one();
        }
        let char_poly = lagrange_interpolate(&pts);
        let (z, _) = char_poly.clear_denoms();
        z.squarefree_part()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_frac};

    fn alg_x2_3() -> EtaleAlgebra {
        make_algebra(&ZPoly::from_i64(&[3, 0, 1]), &Int::from(3)).unwrap()
    }

    #[test]
    fn validation_examples() {
        let a = alg_x2_3();
        assert_eq!(a.g(), 1);
        assert_eq!(a.num_factors(), 1);
        assert_eq!(
            make_algebra(&ZPoly::from_i64(&[1, 0, 1]), &Int::from(3)).unwrap_err(),
            AlgebraError::NotWeil
        );
        let sq = ZPoly::from_i64(&[3, 0, 1]).mul(&ZPoly::from_i64(&[3, 0, 1]));
        assert_eq!(
            make_algebra(&sq, &Int::from(3)).unwrap_err(),
            AlgebraError::NotSquarefree
        );
        assert_eq!(
            make_algebra(&ZPoly::from_i64(&[-3, 0, 1]), &Int::from(3)).unwrap_err(),
            AlgebraError::HasRealRoots
        );
        assert_eq!(
            make_algebra(&ZPoly::from_i64(&[3, 0, 2]), &Int::from(3)).unwrap_err(),
            AlgebraError::NotMonicIntegral
        );
    }

    #[test]
    fn involution_examples() {
        let a = alg_x2_3();
        let pi = a.pi();
        // pi * (-pi) = 3 in Q[x]/(x^2+3) forces pibar = -pi
        assert_eq!(a.involve(&pi), a.neg(&pi));
        let r = a.from_rat(&rat_frac(7, 2));
        assert_eq!(a.involve(&r), r);
        let x = AlgElement {
            coords: alloc::vec![rat_frac(1, 3), rat(5)],
        };
        assert_eq!(a.involve(&a.involve(&x)), x);
    }

    #[test]
    fn totally_imaginary_examples() {
        let a = alg_x2_3();
        assert!(a.is_totally_imaginary(&a.pi()));
        assert!(!a.is_totally_imaginary(&a.one()));
        // in the quartic x^4+9 the element beta = pi + p/pi is a nonzero
        // fixed point of the involution
        let quartic = make_algebra(&ZPoly::from_i64(&[9, 0, 0, 0, 1]), &Int::from(3)).unwrap();
        assert!(quartic.is_totally_real(&quartic.beta()));
        assert!(!quartic.is_totally_imaginary(&quartic.beta()));
        // pi + p/pi is always fixed by the involution
        assert!(a.is_totally_real(&a.beta()));
    }

    #[test]
    fn trace_norm_examples() {
        let a = alg_x2_3();
        assert_eq!(a.trace(&a.one()), rat(2));
        assert_eq!(a.trace(&a.pi()), rat(0));
        // oracle: norm(pi) = constant term of h up to sign
        assert_eq!(a.norm(&a.pi()), rat(3));
        assert_eq!(a.norm(&a.one()), rat(1));
        assert_eq!(a.trace(&a.involve(&a.pi())), rat(0));
    }

    #[test]
    fn totally_positive_in_quartic() {
        // L = Q[x]/(x^4+9), p = 3; L_R = Q(sqrt(6)): beta^2 = 6
        let alg = make_algebra(&ZPoly::from_i64(&[9, 0, 0, 0, 1]), &Int::from(3)).unwrap();
        assert_eq!(alg.g(), 2);
        let beta = alg.beta();
        let b2 = alg.mul(&beta, &beta);
        assert_eq!(b2, alg.from_rat(&rat(6)));
        // oracle: 3 +- sqrt(6) > 0 while 1 - sqrt(6) < 0 (numeric check at
        // high precision backs these frozen expectations)
        let three_b = alg.add(&alg.from_rat(&rat(3)), &beta);
        let one_b = alg.add(&alg.one(), &beta);
        assert!(alg.is_totally_positive(&three_b).unwrap());
        assert!(!alg.is_totally_positive(&one_b).unwrap());
        assert!(alg.is_totally_positive(&alg.one()).unwrap());
        assert_eq!(
            alg.is_totally_positive(&alg.pi()).unwrap_err(),
            AlgebraError::NotTotallyReal
        );
    }

    #[test]
    fn product_algebra_components() {
        let h = ZPoly::from_i64(&[3, 0, 1]).mul(&ZPoly::from_i64(&[9, 0, 0, 0, 1]));
        let alg = make_algebra(&h, &Int::from(3)).unwrap();
        assert_eq!(alg.num_factors(), 2);
        assert_eq!(alg.g(), 3);
        let e0 = alg.idempotent(0);
        let e1 = alg.idempotent(1);
        assert_eq!(alg.add(&e0, &e1), alg.one());
        assert!(alg.mul(&e0, &e1).is_zero());
        assert_eq!(alg.mul(&e0, &e0), e0);
        assert!(!alg.is_unit(&e0));
        assert!(alg.is_unit(&alg.pi()));
    }

    #[test]
    fn imaginary_signs_at_roots() {
        let a = alg_x2_3();
        let pi = a.pi();
        let s0 = a.imag_sign_at_root(&pi, 0);
        let s1 = a.imag_sign_at_root(&pi, 1);
        assert_eq!(s0 * s1, -1);
        assert_eq!(a.roots[0].conj, 1);
        assert_eq!(a.roots[1].conj, 0);
    }

    #[test]
    fn detailedlowprank_algebra() {
        let h = ZPoly::from_i64(&[27, -9, 18, -6, 6, -1, 1]);
        let alg = make_algebra(&h, &Int::from(3)).unwrap();
        assert_eq!(alg.g(), 3);
        assert_eq!(alg.num_factors(), 2);
        assert_eq!(alg.num_roots(), 6);
    }

    #[test]
    fn min_poly_of_pi() {
        let a = alg_x2_3();
        assert_eq!(a.min_poly(&a.pi()), ZPoly::from_i64(&[3, 0, 1]));
        assert_eq!(a.min_poly(&a.one()), ZPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn mult_matrix_trace_agrees() {
        let alg = make_algebra(&ZPoly::from_i64(&[9, 0, 0, 0, 1]), &Int::from(3)).unwrap();
        let x = alg.add(&alg.pi(), &alg.from_rat(&rat(2)));
        let m = alg.mult_matrix(&x);
        let mut tr = Rat::zero();
        for i in 0..alg.dim() {
            tr += m.at(i, i);
        }
        assert_eq!(tr, alg.trace(&x));
    }
}
