//! Unit groups of orders in the CM algebra: torsion by exhaustive bounded
//! enumeration, a fundamental system for the free part by Fincke-Pohst
//! search with saturation, the transversal of T*/<v vbar>, the sign group
//! G_S, and the principal-polarization count.
//!
//! Certification strategy for fundamental units: candidate units are found
//! by short-vector enumeration under the exact T2 form; independence and
//! regulator intervals come from certified rational enclosures of logs; the
//! index of the found subgroup is bounded by comparing its log-covolume
//! with a lower bound on the full covolume obtained from a proven shortest
//! nonzero log vector (Pohst-style), and the group is then saturated at
//! every prime below that bound by complete ell-th-root searches.

use crate::arith::fincke::enumerate_short;
use crate::arith::interval::{interval_det, ln_interval, RatInterval};
use crate::arith::matrix::IntMatrix;
use crate::arith::{clear_denominators, Int, Rat};
use crate::etale::{AlgElement, EtaleAlgebra};
use crate::orders::resquo::{relation_lattice, ConductorQuotient};
use crate::orders::{Lattice, Order};
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnitError {
    UnitSearchExhausted,
    NotAUnitOfOrder,
}

impl core::fmt::Display for UnitError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            UnitError::UnitSearchExhausted => write!(f, "unit search exhausted its bound"),
            UnitError::NotAUnitOfOrder => write!(f, "element is not a unit of the order"),
        }
    }
}

/// Unit group of an order: independent torsion generators (their orders
/// multiply to the torsion size) and a fundamental system of the free part.
/// In a product algebra the torsion need not be cyclic, hence the list.
#[derive(Clone, Debug)]
pub struct UnitGroup {
    pub torsion: Vec<(AlgElement, u64)>,
    pub fundamental: Vec<AlgElement>,
}

impl UnitGroup {
    pub fn rank(&self) -> usize {
        self.fundamental.len()
    }
    pub fn torsion_order(&self) -> u64 {
        self.torsion.iter().map(|t| t.1).product()
    }
}

/// Exponents of a unit over the generators of a UnitGroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitExponents {
    pub tor: Vec<u64>,
    pub free: Vec<i64>,
}

/// T2 Gram form of a lattice basis: G_ij = Tr(b_i * conj(b_j)), returned as
/// an integer matrix and the common denominator.
fn t2_gram(alg: &EtaleAlgebra, lat: &Lattice) -> (IntMatrix, Int) {
    let b = lat.basis(alg);
    let n = b.len();
    let mut entries: Vec<Rat> = Vec::with_capacity(n * n);
    let conj: Vec<AlgElement> = b.iter().map(|x| alg.involve(x)).collect();
    for i in 0..n {
        for j in 0..n {
            entries.push(alg.trace(&alg.mul(&b[i], &conj[j])));
        }
    }
    let (nums, den) = clear_denominators(&entries);
    let mut m = IntMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            *m.at_mut(i, j) = nums[i * n + j].clone();
        }
    }
    (m, den)
}

/// All lattice elements with T2 <= bound, one per +- pair. The coefficient
/// lattice is LLL-reduced first so the enumeration tree stays small.
pub fn elements_of_bounded_t2(
    alg: &EtaleAlgebra,
    lat: &Lattice,
    bound: &Rat,
    cap: usize,
) -> Result<Vec<AlgElement>, UnitError> {
    let (gram, den) = t2_gram(alg, lat);
    let scaled = bound * Rat::from_integer(den);
    let reduced = crate::arith::lll::lll_reduce(&IntMatrix::identity(lat.dim()), &gram)
        .expect("T2 form must be positive definite");
    let coeffs = enumerate_short(&reduced, &gram, &scaled, cap)
        .map_err(|_| UnitError::UnitSearchExhausted)?;
    let b = lat.basis(alg);
    Ok(coeffs
        .into_iter()
        .map(|y| {
            let z = reduced.mul_row(&y);
            let mut acc = alg.zero();
            for (i, c) in z.iter().enumerate() {
                if !c.is_zero() {
                    acc = alg.add(&acc, &alg.scale(&b[i], &Rat::from_integer(c.clone())));
                }
            }
            acc
        })
        .collect())
}

/// Multiplicative order if it is a root of unity (bounded search).
fn torsion_order_of(alg: &EtaleAlgebra, x: &AlgElement) -> Option<u64> {
    let mut p = x.clone();
    for k in 1..=64u64 {
        if p == alg.one() {
            return Some(k);
        }
        p = alg.mul(&p, x);
    }
    None
}

/// The full torsion subgroup of the units of an order, as a list of all
/// elements; complete because roots of unity have T2 exactly 2g.
fn all_torsion_units(alg: &EtaleAlgebra, order: &Order) -> Vec<(AlgElement, u64)> {
    let bound = Rat::from_integer(Int::from(2 * alg.g() as u64));
    let cands = elements_of_bounded_t2(alg, &order.lat, &bound, 1 << 22)
        .expect("torsion enumeration exceeded cap");
    let mut out = Vec::new();
    for c in cands {
        for x in [c.clone(), alg.neg(&c)] {
            if let Some(k) = torsion_order_of(alg, &x) {
                out.push((x, k));
            }
        }
    }
    out
}

/// Independent generators of the torsion subgroup (greedy by order).
fn torsion_generators(alg: &EtaleAlgebra, all: &[(AlgElement, u64)]) -> Vec<(AlgElement, u64)> {
    let mut sorted: Vec<&(AlgElement, u64)> = all.iter().collect();
    sorted.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    let mut gens: Vec<(AlgElement, u64)> = Vec::new();
    let mut generated: BTreeMap<AlgElement, ()> = BTreeMap::new();
    generated.insert(alg.one(), ());
    for (x, k) in sorted {
        if generated.contains_key(x) {
            continue;
        }
        gens.push((x.clone(), *k));
        // close
        let mut frontier: Vec<AlgElement> = generated.keys().cloned().collect();
        while let Some(y) = frontier.pop() {
            let z = alg.mul(&y, x);
            if !generated.contains_key(&z) {
                generated.insert(z.clone(), ());
                frontier.push(z);
            }
        }
        if generated.len() == all.len() {
            break;
        }
    }
    debug_assert_eq!(
        generated.len(),
        all.len(),
        "torsion generators do not generate"
    );
    gens
}

/// Canonical representatives of the conjugate pairs of embeddings: the
/// root indices with strictly positive imaginary part, sorted.
pub fn pair_reps(alg: &EtaleAlgebra) -> Vec<usize> {
    let mut v: Vec<usize> = (0..alg.num_roots())
        .filter(|&k| {
            let b = alg.root_box(k);
            b.z.im.lo.is_positive()
        })
        .collect();
    v.sort();
    debug_assert_eq!(v.len(), alg.g());
    v
}

/// Certified log vector: ln|phi_k(x)| at each conjugate-pair representative.
pub fn log_vector(alg: &EtaleAlgebra, x: &AlgElement, bits: u32) -> Vec<RatInterval> {
    let reps = pair_reps(alg);
    let target = Rat::new(Int::one(), Int::one() << (bits as usize + 4));
    reps.iter()
        .map(|&k| {
            // |phi(x)|^2 interval, then ln / 2
            let mut t = target.clone();
            loop {
                let v = alg.eval_at_root(x, k, &t);
                let n2 = v.norm_sq();
                if n2.lo.is_positive() {
                    let l = ln_interval(&n2, bits + 2);
                    return RatInterval::new(
                        l.lo / Rat::from_integer(Int::from(2)),
                        l.hi / Rat::from_integer(Int::from(2)),
                    );
                }
                t = t / Rat::from_integer(Int::from(1 << 16));
            }
        })
        .collect()
}

/// Covolume (interval) of the span of the log vectors of the given units:
/// sqrt(det(Gram)). None if the interval Gram is singular-looking.
fn log_covolume(alg: &EtaleAlgebra, units: &[AlgElement], bits: u32) -> Option<RatInterval> {
    let r = units.len();
    if r == 0 {
        return Some(RatInterval::point(Rat::one()));
    }
    let logs: Vec<Vec<RatInterval>> = units.iter().map(|u| log_vector(alg, u, bits)).collect();
    let g = logs[0].len();
    let mut gram = vec![vec![RatInterval::point(Rat::zero()); r]; r];
    for i in 0..r {
        for j in 0..r {
            let mut acc = RatInterval::point(Rat::zero());
            for k in 0..g {
                acc = acc.add(&logs[i][k].mul(&logs[j][k]));
            }
            gram[i][j] = acc;
        }
    }
    let det = interval_det(&gram)?;
    if !det.lo.is_positive() {
        return None;
    }
    // sqrt enclosure via rational bounds
    Some(RatInterval::new(
        rat_sqrt_lower(&det.lo),
        rat_sqrt_upper(&det.hi),
    ))
}

fn rat_sqrt_upper(x: &Rat) -> Rat {
    if !x.is_positive() {
        return Rat::zero();
    }
    let f = x.to_f64().unwrap_or(1e300);
    let mut s = Rat::from_float(libm::sqrt(f) * 1.0000001).unwrap_or_else(|| Rat::one());
    let mut guard = 0;
    while &s * &s < *x {
        s = s * Rat::new(Int::from(1000001), Int::from(1000000));
        guard += 1;
        assert!(guard < 1000);
    }
    s
}

fn rat_sqrt_lower(x: &Rat) -> Rat {
    if !x.is_positive() {
        return Rat::zero();
    }
    let f = x.to_f64().unwrap_or(0.0);
    let mut s = Rat::from_float(libm::sqrt(f) * 0.9999999).unwrap_or_else(Rat::zero);
    if s.is_negative() {
        s = Rat::zero();
    }
    let mut guard = 0;
    while &s * &s > *x {
        s = s * Rat::new(Int::from(999999), Int::from(1000000));
        guard += 1;
        assert!(guard < 1000);
    }
    s
}

/// Hermite constants gamma_r^r is what matters; we store gamma_r upper
/// bounds for r <= 8.
fn hermite_upper(r: usize) -> Rat {
    let v: [(i64, i64); 8] = [
        (1, 1),
        (1155, 1000),
        (1260, 1000),
        (1415, 1000),
        (1516, 1000),
        (1666, 1000),
        (1812, 1000),
        (2, 1),
    ];
    if r == 0 {
        return Rat::one();
    }
    if r <= 8 {
        Rat::new(Int::from(v[r - 1].0), Int::from(v[r - 1].1))
    } else {
        Rat::new(Int::from(r as i64), Int::from(4))
    }
}

pub struct UnitSearchConfig {
    pub enum_cap: usize,
    pub initial_t2: i64,
    pub max_doublings: u32,
}

impl Default for UnitSearchConfig {
    fn default() -> Self {
        UnitSearchConfig {
            enum_cap: 1 << 22,
            initial_t2: 64,
            max_doublings: 18,
        }
    }
}

/// Unit group of the maximal order.
macro_rules! trace {
    ($($t:tt)*) => {
        #[cfg(feature = "std")]
        std::eprintln!($($t)*);
    };
}

pub fn unit_group_maximal(
    alg: &EtaleAlgebra,
    order: &Order,
    cfg: &UnitSearchConfig,
) -> Result<UnitGroup, UnitError> {
    trace!("[units] torsion search");
    let torsion_all = all_torsion_units(alg, order);
    let torsion = torsion_generators(alg, &torsion_all);
    let rank: usize = alg
        .factor_degrees
        .iter()
        .map(|d| d / 2 - 1)
        .sum();
    if rank == 0 {
        return Ok(UnitGroup {
            torsion,
            fundamental: vec![],
        });
    }

    trace!("[units] torsion done: {} elements", torsion_all.len());
    // the real unit lattice O ∩ L_R
    let real_lat = real_sublattice(alg, order);

    // find rank independent units by escalating T2 search
    let mut fundamental: Vec<AlgElement> = Vec::new();
    let mut bound = Rat::from_integer(Int::from(cfg.initial_t2));
    let mut tries = 0u32;
    while fundamental.len() < rank {
        let cands = elements_of_bounded_t2(alg, &real_lat, &bound, cfg.enum_cap)?;
        for c in cands {
            if fundamental.len() == rank {
                break;
            }
            if !alg.is_unit(&c) {
                continue;
            }
            let n = alg.norm(&c);
            if n != Rat::one() && n != -Rat::one() {
                continue;
            }
            if torsion_order_of(alg, &c).is_some() {
                continue;
            }
            let mut cand_set = fundamental.clone();
            cand_set.push(c.clone());
            let mut bits = 48u32;
            loop {
                match log_covolume(alg, &cand_set, bits) {
                    Some(_) => {
                        fundamental.push(c.clone());
                        break;
                    }
                    None => {
                        if bits > 400 {
                            break; // treat as dependent
                        }
                        bits += 96;
                    }
                }
            }
        }
        if fundamental.len() < rank {
            bound = bound * Rat::from_integer(Int::from(4));
            tries += 1;
            if tries > cfg.max_doublings {
                return Err(UnitError::UnitSearchExhausted);
            }
        }
    }

    trace!("[units] rank reached; reducing generators");
    // reduce the generators (mutual size-reduction on log vectors)
    reduce_generators(alg, &mut fundamental);
    trace!("[units] generators reduced");

    // Pohst lower bound on the covolume of the full unit lattice: prove a
    // shortest-log bound by exhausting T2 <= 2g * e^(2c)
    let g2 = 2 * alg.g() as i64;
    let c_target = 1.0f64;
    let t2_bound = Rat::from_float((g2 as f64) * libm::exp(2.0 * c_target) + 1.0).unwrap();
    trace!("[units] lambda1 search with t2 <= {:?}", t2_bound);
    let small = elements_of_bounded_t2(alg, &order.lat, &t2_bound, cfg.enum_cap)?;
    trace!("[units] lambda1 candidates: {}", small.len());
    let mut lambda1: Rat = Rat::from_float(c_target).unwrap();
    for x in &small {
        // norm test first: for a maximal order, integral + |norm| 1 is
        // exactly the unit condition
        let n = alg.norm(x);
        if n != Rat::one() && n != -Rat::one() {
            continue;
        }
        for y in [x.clone(), alg.neg(x)] {
            if torsion_order_of(alg, &y).is_some() {
                continue;
            }
            // certified lower bound on |log(y)|_2
            let lv = log_vector(alg, &y, 48);
            let mut norm_lo = Rat::zero();
            for l in &lv {
                let a = l.abs();
                norm_lo += &a.lo * &a.lo;
            }
            let nl = rat_sqrt_lower(&norm_lo);
            if nl < lambda1 {
                lambda1 = nl;
            }
        }
    }
    assert!(
        lambda1.is_positive(),
        "shortest-log bound degenerated; increase precision"
    );
    // covol_full >= (lambda1^2 / gamma_r)^(r/2); index <= covol_U / that
    let gamma = hermite_upper(rank);
    let ratio = &lambda1 * &lambda1 / gamma;
    let mut lower = Rat::one();
    // (ratio)^(r/2): compute rationally via sqrt bound when r is odd
    {
        let mut acc = Rat::one();
        for _ in 0..rank {
            acc *= &ratio;
        }
        lower = rat_sqrt_lower(&acc);
        if !lower.is_positive() {
            lower = Rat::new(Int::one(), Int::from(1000));
        }
    }
    let mut bits = 64u32;
    let covol_u = loop {
        match log_covolume(alg, &fundamental, bits) {
            Some(c) => break c,
            None => {
                bits += 96;
                assert!(bits < 2000, "regulator interval failed to converge");
            }
        }
    };
    let index_bound_rat = &covol_u.hi / &lower;
    let index_bound = index_bound_rat.to_f64().unwrap_or(1e9).min(1e6) as u64;
    trace!("[units] index bound {} (covol {:?} lower {:?})", index_bound, covol_u.to_f64(), lower.to_f64());

    // saturate at all primes <= index_bound (with torsion twists)
    let mut group = UnitGroup {
        torsion,
        fundamental,
    };
    let mut ell = 2u64;
    while ell <= index_bound.max(2) {
        if crate::arith::int::is_prime(&Int::from(ell)) {
            trace!("[units] saturating at {}", ell);
            while saturate_at(alg, order, &mut group, ell, cfg)? {
                trace!("[units] group grew at {}", ell);
            }
        }
        ell += 1;
    }
    Ok(group)
}

fn real_sublattice(alg: &EtaleAlgebra, order: &Order) -> Lattice {
    // {x in O : conj(x) = x}
    let n = alg.dim();
    let basis = order.lat.basis(alg);
    // build the rational matrix rows = coords(conj(b_i) - b_i)
    let mut entries: Vec<Rat> = Vec::new();
    for b in &basis {
        let d = alg.sub(&alg.involve(b), b);
        entries.extend(d.coords.iter().cloned());
    }
    let (nums, _den) = clear_denominators(&entries);
    let m = IntMatrix::from_rows(nums.chunks(n).map(|c| c.to_vec()).collect());
    let kern = m.left_kernel();
    let gens: Vec<AlgElement> = (0..kern.rows)
        .map(|i| {
            let mut acc = alg.zero();
            for (j, c) in kern.row(i).iter().enumerate() {
                if !c.is_zero() {
                    acc = alg.add(&acc, &alg.scale(&basis[j], &Rat::from_integer(c.clone())));
                }
            }
            acc
        })
        .collect();
    // the kernel has rank g; build the lattice in L
    LatticeExt::from_elements_rank(alg, &gens, alg.g())
}

trait LatticeExtT {
    fn from_elements_rank(alg: &EtaleAlgebra, gens: &[AlgElement], rank: usize) -> Lattice;
}
struct LatticeExt;
impl LatticeExt {
    fn from_elements_rank(alg: &EtaleAlgebra, gens: &[AlgElement], rank: usize) -> Lattice {
        let n = alg.dim();
        let mut all: Vec<Rat> = Vec::with_capacity(gens.len() * n);
        for g in gens {
            all.extend(g.coords.iter().cloned());
        }
        let (nums, den) = clear_denominators(&all);
        let m = IntMatrix::from_rows(nums.chunks(n).map(|c| c.to_vec()).collect());
        let (h, _) = m.hnf();
        let rows: Vec<Vec<Int>> = (0..h.rows)
            .filter(|&i| !h.row(i).iter().all(|x| x.is_zero()))
            .map(|i| h.row(i).to_vec())
            .collect();
        assert_eq!(rows.len(), rank, "unexpected rank");
        // keep as a rank-deficient "lattice": mat is rank x n
        Lattice {
            den,
            mat: IntMatrix::from_rows(rows),
        }
    }
}

/// Mutual size-reduction of unit generators on their log vectors.
fn reduce_generators(alg: &EtaleAlgebra, gens: &mut [AlgElement]) {
    let r = gens.len();
    if r < 2 {
        return;
    }
    let bits = 48;
    for _round in 0..4 {
        let mut changed = false;
        for i in 0..r {
            for j in 0..r {
                if i == j {
                    continue;
                }
                let li = log_vector(alg, &gens[i], bits);
                let lj = log_vector(alg, &gens[j], bits);
                let mut dot = 0f64;
                let mut nj = 0f64;
                for k in 0..li.len() {
                    let a = li[k].to_f64();
                    let b = lj[k].to_f64();
                    dot += a * b;
                    nj += b * b;
                }
                if nj <= 0.0 {
                    continue;
                }
                let q = libm::round(dot / nj);
                if q != 0.0 && q.abs() < 1e6 {
                    let e = q as i64;
                    let p = alg.pow(&gens[j], e);
                    let inv = alg.inv(&p).expect("unit");
                    let cand = alg.mul(&gens[i], &inv);
                    // keep only if it genuinely shrinks coordinates
                    let size = |x: &AlgElement| -> usize {
                        x.coords
                            .iter()
                            .map(|c| c.numer().bits() as usize + c.denom().bits() as usize)
                            .sum()
                    };
                    if size(&cand) < size(&gens[i]) {
                        gens[i] = cand;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
}

/// One saturation pass at a prime: returns true when the group grew.
fn saturate_at(
    alg: &EtaleAlgebra,
    order: &Order,
    group: &mut UnitGroup,
    ell: u64,
    cfg: &UnitSearchConfig,
) -> Result<bool, UnitError> {
    let r = group.fundamental.len();
    // torsion coset representatives modulo ell-th powers
    let torsion_reps: Vec<AlgElement> = {
        let mut all: Vec<AlgElement> = vec![alg.one()];
        for (t, k) in &group.torsion {
            let mut next = Vec::new();
            for a in &all {
                let mut cur = a.clone();
                for _ in 0..*k {
                    next.push(cur.clone());
                    cur = alg.mul(&cur, t);
                }
            }
            all = next;
        }
        // reduce modulo ell-th powers of torsion: keep one rep per coset
        let mut reps: Vec<AlgElement> = Vec::new();
        let ell_powers: Vec<AlgElement> = all.iter().map(|x| alg.pow(x, ell as i64)).collect();
        'outer: for x in &all {
            for rep in &reps {
                // x ~ rep iff x/rep is an ell-th power of a torsion elt
                let ratio = alg.div(x, rep).unwrap();
                if ell_powers.contains(&ratio) {
                    continue 'outer;
                }
            }
            reps.push(x.clone());
        }
        reps
    };

    // exponent classes up to scalar
    let mut exp_classes: Vec<Vec<u64>> = Vec::new();
    {
        let mut v = vec![0u64; r];
        loop {
            // advance odometer
            let mut i = 0;
            loop {
                if i == r {
                    break;
                }
                v[i] += 1;
                if v[i] < ell {
                    break;
                }
                v[i] = 0;
                i += 1;
            }
            if i == r {
                break;
            }
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            // scalar-normalize: first nonzero = 1
            let first = v.iter().position(|&x| x != 0).unwrap();
            if v[first] == 1 {
                exp_classes.push(v.clone());
            }
        }
        if r == 0 {
            exp_classes.clear();
        }
    }

    let cases: Vec<(AlgElement, Vec<u64>)> = if r == 0 {
        torsion_reps
            .iter()
            .filter(|t| **t != alg.one())
            .map(|t| (t.clone(), vec![]))
            .collect()
    } else {
        let mut cs = Vec::new();
        for e in &exp_classes {
            for t in &torsion_reps {
                cs.push((t.clone(), e.clone()));
            }
        }
        cs
    };

    for (tw, e) in cases {
        trace!("[units]   case e={:?}", e);
        // target = tw * prod u^e, then reduced by ell-th powers of units
        let mut target = tw.clone();
        for (i, &ei) in e.iter().enumerate() {
            if ei > 0 {
                target = alg.mul(&target, &alg.pow(&group.fundamental[i], ei as i64));
            }
        }
        // log-reduce target modulo ell * log-lattice (coefficient size)
        let target = reduce_by_unit_powers(alg, group, &target, ell);
        // exact ell-th roots in the algebra (componentwise field roots)
        for w in crate::nf::power_roots_in_algebra(alg, &target, ell) {
            if !order.lat.contains(&w) {
                continue;
            }
            if dlog(alg, group, &w).is_some() {
                continue;
            }
            if r == 0 {
                // torsion-twist root enlarging the torsion cannot occur:
                // the T2 = 2g enumeration is exhaustive
                panic!("unexpected torsion growth in saturation");
            }
            let j = e.iter().position(|&x| x % ell != 0).unwrap();
            group.fundamental[j] = w;
            reduce_generators(alg, &mut group.fundamental);
            return Ok(true);
        }
    }
    let _ = cfg;
    Ok(false)
}

/// Multiply by ell-th powers of the fundamental units to shrink the log
/// vector of x (Babai rounding; exactness not required, only size).
fn reduce_by_unit_powers(
    alg: &EtaleAlgebra,
    group: &UnitGroup,
    x: &AlgElement,
    ell: u64,
) -> AlgElement {
    let r = group.fundamental.len();
    if r == 0 {
        return x.clone();
    }
    let bits = 40;
    let lx: Vec<f64> = log_vector(alg, x, bits).iter().map(|i| i.to_f64()).collect();
    let lu: Vec<Vec<f64>> = group
        .fundamental
        .iter()
        .map(|u| log_vector(alg, u, bits).iter().map(|i| i.to_f64()).collect())
        .collect();
    // least squares solve lx ≈ sum c_i lu_i via normal equations (tiny r)
    let mut a = vec![vec![0f64; r]; r];
    let mut b = vec![0f64; r];
    let g = lx.len();
    for i in 0..r {
        for j in 0..r {
            for k in 0..g {
                a[i][j] += lu[i][k] * lu[j][k];
            }
        }
        for k in 0..g {
            b[i] += lu[i][k] * lx[k];
        }
    }
    // gaussian
    let mut c = b.clone();
    let mut m = a.clone();
    for col in 0..r {
        let mut piv = col;
        for i in col + 1..r {
            if m[i][col].abs() > m[piv][col].abs() {
                piv = i;
            }
        }
        m.swap(col, piv);
        c.swap(col, piv);
        if m[col][col].abs() < 1e-12 {
            return x.clone();
        }
        for i in 0..r {
            if i != col {
                let f = m[i][col] / m[col][col];
                for j in col..r {
                    m[i][j] -= f * m[col][j];
                }
                c[i] -= f * c[col];
            }
        }
    }
    let mut out = x.clone();
    for i in 0..r {
        let ki = libm::round(c[i] / m[i][i] / ell as f64);
        if ki != 0.0 && ki.abs() < 1e9 {
            let e = -(ki as i64) * ell as i64;
            out = alg.mul(&out, &alg.pow(&group.fundamental[i], e));
        }
    }
    out
}

/// Discrete log of a unit over the group generators; None if not a member.
pub fn dlog(alg: &EtaleAlgebra, group: &UnitGroup, x: &AlgElement) -> Option<UnitExponents> {
    if !alg.is_unit(x) {
        return None;
    }
    let r = group.fundamental.len();
    let free: Vec<i64> = if r == 0 {
        vec![]
    } else {
        let mut bits = 48u32;
        loop {
            let lx = log_vector(alg, x, bits);
            let lus: Vec<Vec<RatInterval>> = group
                .fundamental
                .iter()
                .map(|u| log_vector(alg, u, bits))
                .collect();
            // solve sum e_i lu_i = lx over the rationals using interval
            // Gaussian elimination on r independent coordinates
            match interval_solve(&lus, &lx) {
                Some(sol) => {
                    let mut es = Vec::with_capacity(r);
                    let mut ok = true;
                    for iv in &sol {
                        // unique integer in the interval?
                        let lo = iv.lo.to_f64().unwrap_or(f64::NAN);
                        let hi = iv.hi.to_f64().unwrap_or(f64::NAN);
                        let c = libm::round((lo + hi) / 2.0);
                        if !(lo - 0.5 < c && c < hi + 0.5) || (hi - lo) > 0.9 {
                            ok = false;
                            break;
                        }
                        es.push(c as i64);
                    }
                    if ok {
                        break es;
                    }
                }
                None => {}
            }
            bits += 96;
            if bits > 1600 {
                return None;
            }
        }
    };
    // y = x / prod u^e must be torsion
    let mut y = x.clone();
    for (i, &ei) in free.iter().enumerate() {
        if ei != 0 {
            y = alg.mul(&y, &alg.pow(&group.fundamental[i], -ei));
        }
    }
    // find torsion exponents by closure walk
    let mut tor = vec![0u64; group.torsion.len()];
    let mut found = y == alg.one();
    if !found {
        // enumerate the torsion group
        let mut all: Vec<(AlgElement, Vec<u64>)> = vec![(alg.one(), vec![0; group.torsion.len()])];
        for (gi, (t, k)) in group.torsion.iter().enumerate() {
            let mut next = Vec::new();
            for (a, v) in &all {
                let mut cur = a.clone();
                for e in 0..*k {
                    let mut v2 = v.clone();
                    v2[gi] = e;
                    next.push((cur.clone(), v2));
                    cur = alg.mul(&cur, t);
                }
            }
            all = next;
        }
        for (a, v) in all {
            if a == y {
                tor = v;
                found = true;
                break;
            }
        }
    }
    if !found {
        return None;
    }
    Some(UnitExponents { tor, free })
}

/// Interval linear solve: find x with sum x_i rows_i = target; rows are r
/// interval vectors of length g >= r. None when a pivot is ambiguous.
fn interval_solve(rows: &[Vec<RatInterval>], target: &[RatInterval]) -> Option<Vec<RatInterval>> {
    let r = rows.len();
    let g = target.len();
    // normal equations with interval arithmetic (conservative)
    let mut a = vec![vec![RatInterval::point(Rat::zero()); r]; r];
    let mut b = vec![RatInterval::point(Rat::zero()); r];
    for i in 0..r {
        for j in 0..r {
            let mut acc = RatInterval::point(Rat::zero());
            for k in 0..g {
                acc = acc.add(&rows[i][k].mul(&rows[j][k]));
            }
            a[i][j] = acc;
        }
        let mut acc = RatInterval::point(Rat::zero());
        for k in 0..g {
            acc = acc.add(&rows[i][k].mul(&target[k]));
        }
        b[i] = acc;
    }
    // interval gaussian elimination
    for col in 0..r {
        if a[col][col].contains_zero() {
            // try a row swap
            let mut piv = None;
            for i in col + 1..r {
                if !a[i][col].contains_zero() {
                    piv = Some(i);
                    break;
                }
            }
            let p = piv?;
            a.swap(col, p);
            b.swap(col, p);
        }
        let pinv = a[col][col].recip()?;
        for i in 0..r {
            if i != col && !(a[i][col].lo.is_zero() && a[i][col].hi.is_zero()) {
                let f = a[i][col].mul(&pinv);
                for j in col..r {
                    let s = f.mul(&a[col][j]);
                    a[i][j] = a[i][j].sub(&s);
                }
                let s = f.mul(&b[col]);
                b[i] = b[i].sub(&s);
            }
        }
    }
    let mut out = Vec::with_capacity(r);
    for i in 0..r {
        let pinv = a[i][i].recip()?;
        out.push(b[i].mul(&pinv));
    }
    Some(out)
}

/// Unit group of a (possibly non-maximal) order T, sieved from the unit
/// group of the maximal order through (O/f)^*/(T/f)^* with f = (T : O).
pub fn unit_group_of_order(
    alg: &EtaleAlgebra,
    maximal: &Order,
    maximal_units: &UnitGroup,
    t: &Order,
) -> UnitGroup {
    if t == maximal {
        return maximal_units.clone();
    }
    let f = t.lat.colon(alg, &maximal.lat);
    debug_assert!(t.lat.contains_lattice(&f));
    let cq = ConductorQuotient::new(alg, maximal, t, &f);
    // generators of O^*
    let mut gens: Vec<AlgElement> = Vec::new();
    let mut orders_of_torsion: Vec<u64> = Vec::new();
    for (tg, k) in &maximal_units.torsion {
        gens.push(tg.clone());
        orders_of_torsion.push(*k);
    }
    let s = orders_of_torsion.len();
    gens.extend(maximal_units.fundamental.iter().cloned());
    let m = gens.len();
    // BFS over the image subgroup of Q
    let keys: Vec<Vec<Int>> = gens
        .iter()
        .map(|g| cq.coords(g).expect("unit not integral"))
        .collect();
    let identity = cq.q_canonical(&cq.one());
    let (_sz, rel) = relation_lattice(identity, m, |k, gi| {
        let prod = cq.mul(k, &keys[gi]);
        cq.q_canonical(&prod)
    });
    // kernel lattice: relations + torsion orders
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for i in 0..rel.rows {
        rows.push(rel.row(i).to_vec());
    }
    for (i, k) in orders_of_torsion.iter().enumerate() {
        let mut v = vec![Int::zero(); m];
        v[i] = Int::from(*k);
        rows.push(v);
    }
    let kernel = IntMatrix::from_rows(rows).lattice_basis();
    // build T^*: elements prod gens^v for kernel basis rows
    let elems: Vec<AlgElement> = (0..kernel.rows)
        .map(|i| {
            let mut acc = alg.one();
            for (j, c) in kernel.row(i).iter().enumerate() {
                if !c.is_zero() {
                    let e = i64::try_from(c).expect("kernel exponent too large");
                    acc = alg.mul(&acc, &alg.pow(&gens[j], e));
                }
            }
            acc
        })
        .collect();
    for e in &elems {
        debug_assert!(t.lat.contains(e), "sieved unit not in T");
        debug_assert!(t.lat.contains(&alg.inv(e).unwrap()), "inverse not in T");
    }
    // torsion of T^*: torsion elements of O^* lying in T
    let torsion_all: Vec<(AlgElement, u64)> = {
        let mut all: Vec<(AlgElement, u64)> = Vec::new();
        let mut frontier: Vec<AlgElement> = vec![alg.one()];
        let mut seen: BTreeMap<AlgElement, ()> = BTreeMap::new();
        seen.insert(alg.one(), ());
        while let Some(x) = frontier.pop() {
            for (tg, _) in &maximal_units.torsion {
                let y = alg.mul(&x, tg);
                if !seen.contains_key(&y) {
                    seen.insert(y.clone(), ());
                    frontier.push(y);
                }
            }
        }
        for x in seen.keys() {
            if t.lat.contains(x) {
                if let Some(k) = torsion_order_of(alg, x) {
                    all.push((x.clone(), k));
                }
            }
        }
        all
    };
    let torsion = torsion_generators(alg, &torsion_all);
    // free part: rows of kernel with nonzero free components, reduced
    let mut fundamental: Vec<AlgElement> = Vec::new();
    {
        // project kernel rows to the free coordinates and HNF-reduce
        let free_rows: Vec<Vec<Int>> = (0..kernel.rows)
            .map(|i| kernel.row(i)[s..].to_vec())
            .collect();
        let fm = IntMatrix::from_rows(free_rows);
        let (h, u) = fm.hnf();
        for i in 0..h.rows {
            if h.row(i).iter().all(|x| x.is_zero()) {
                continue;
            }
            // the unit for this reduced row: combine original elems by u
            let mut acc = alg.one();
            for (j, c) in u.row(i).iter().enumerate() {
                if !c.is_zero() {
                    let e = i64::try_from(c).expect("exponent too large");
                    acc = alg.mul(&acc, &alg.pow(&elems[j], e));
                }
            }
            fundamental.push(acc);
        }
    }
    debug_assert_eq!(fundamental.len(), maximal_units.fundamental.len());
    reduce_generators(alg, &mut fundamental);
    UnitGroup {
        torsion,
        fundamental,
    }
}

/// All torsion elements of a unit group (the finite subgroup), enumerated.
pub fn torsion_elements(alg: &EtaleAlgebra, group: &UnitGroup) -> Vec<AlgElement> {
    let mut all: Vec<AlgElement> = vec![alg.one()];
    for (t, k) in &group.torsion {
        let mut next = Vec::new();
        for a in &all {
            let mut cur = a.clone();
            for _ in 0..*k {
                next.push(cur.clone());
                cur = alg.mul(&cur, t);
            }
        }
        all = next;
    }
    all
}

/// The transversal of T^*/<v vbar : v in T^*> together with the norm
/// subgroup data used for membership tests.
pub struct Transversal {
    pub reps: Vec<AlgElement>,
    /// dlog matrix rows: exponents of u_i * conj(u_i) over the group gens
    norm_free: IntMatrix,
    norm_tor: Vec<Vec<u64>>,
}

/// Compute the transversal of T^*/<v vbar>.
pub fn transversal(alg: &EtaleAlgebra, group: &UnitGroup) -> Transversal {
    let r = group.fundamental.len();
    let s = group.torsion.len();
    // norms of the free generators
    let mut free_rows: Vec<Vec<Int>> = Vec::new();
    let mut tor_rows: Vec<Vec<u64>> = Vec::new();
    for u in &group.fundamental {
        let n = alg.mul(u, &alg.involve(u));
        let e = dlog(alg, group, &n).expect("norm of unit escaped the group");
        free_rows.push(e.free.iter().map(|&x| Int::from(x)).collect());
        tor_rows.push(e.tor);
    }
    let norm_free = if r == 0 {
        IntMatrix::zero(0, 0)
    } else {
        IntMatrix::from_rows(free_rows.clone())
    };

    // quotient (⊕ Z/w_j) x Z^r / <(tor_i, free_i)>: present as Z^(s+r)
    // modulo relations: torsion orders and the norm rows
    let dim = s + r;
    let mut rel_rows: Vec<Vec<Int>> = Vec::new();
    for (j, (_, w)) in group.torsion.iter().enumerate() {
        let mut v = vec![Int::zero(); dim];
        v[j] = Int::from(*w);
        rel_rows.push(v);
    }
    for i in 0..r {
        let mut v = vec![Int::zero(); dim];
        for (j, t) in tor_rows[i].iter().enumerate() {
            v[j] = Int::from(*t);
        }
        for (j, c) in free_rows[i].iter().enumerate() {
            v[s + j] = c.clone();
        }
        rel_rows.push(v);
    }
    let rel = IntMatrix::from_rows(rel_rows);
    let (d, _u, v) = rel.snf();
    // quotient ≅ ⊕ Z/d_i via x -> x * V; enumerate representatives
    let mut diag: Vec<Int> = Vec::new();
    for i in 0..dim {
        let di = if i < d.rows { d.at(i, i).clone() } else { Int::zero() };
        assert!(!di.is_zero(), "transversal quotient is infinite");
        diag.push(di);
    }
    // reps: all y with 0 <= y_i < d_i, mapped back via x = y * V^{-1}
    let vinv = {
        let rv = crate::arith::matrix::RatMatrix::from_int(&v)
            .inverse()
            .expect("unimodular");
        let mut m = IntMatrix::zero(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                let x = rv.at(i, j);
                assert!(x.denom().is_one());
                *m.at_mut(i, j) = x.numer().clone();
            }
        }
        m
    };
    let mut reps: Vec<AlgElement> = Vec::new();
    let mut counters = vec![Int::zero(); dim];
    loop {
        // build element for current counters
        let x = vinv.mul_row(&counters);
        let mut acc = alg.one();
        for (j, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = i64::try_from(c).expect("exponent too large");
            let gen = if j < s {
                group.torsion[j].0.clone()
            } else {
                group.fundamental[j - s].clone()
            };
            acc = alg.mul(&acc, &alg.pow(&gen, e));
        }
        reps.push(acc);
        // advance odometer
        let mut i = 0;
        loop {
            if i == dim {
                break;
            }
            counters[i] += 1;
            if counters[i] < diag[i] {
                break;
            }
            counters[i] = Int::zero();
            i += 1;
        }
        if i == dim {
            break;
        }
    }
    Transversal {
        reps,
        norm_free,
        norm_tor: tor_rows,
    }
}

impl Transversal {
    pub fn len(&self) -> usize {
        self.reps.len()
    }
    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

/// Is x in <v vbar : v in T^*>? (x must be a unit of T).
pub fn in_norm_subgroup(alg: &EtaleAlgebra, group: &UnitGroup, x: &AlgElement) -> bool {
    let Some(e) = dlog(alg, group, x) else {
        return false;
    };
    let r = group.fundamental.len();
    let s = group.torsion.len();
    // x in <N_i> iff exponent vector of x is an integer combination of the
    // norm vectors modulo torsion orders
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for i in 0..r {
        let n = alg.mul(&group.fundamental[i], &alg.involve(&group.fundamental[i]));
        let en = dlog(alg, group, &n).expect("norm escaped group");
        let mut v = vec![Int::zero(); s + r];
        for (j, t) in en.tor.iter().enumerate() {
            v[j] = Int::from(*t);
        }
        for (j, c) in en.free.iter().enumerate() {
            v[s + j] = Int::from(*c);
        }
        rows.push(v);
    }
    for (j, (_, w)) in group.torsion.iter().enumerate() {
        let mut v = vec![Int::zero(); s + r];
        v[j] = Int::from(*w);
        rows.push(v);
    }
    let lat = IntMatrix::from_rows(rows);
    let (h, _) = lat.hnf();
    let rows: Vec<Vec<Int>> = (0..h.rows)
        .filter(|&i| !h.row(i).iter().all(|x| x.is_zero()))
        .map(|i| h.row(i).to_vec())
        .collect();
    if rows.len() < s + r {
        // the norm lattice has full rank only together with torsion
        // relations; if deficient, x must be exactly matched by BFS
        // (not expected for CM algebras)
        return false;
    }
    let basis = IntMatrix::from_rows(rows);
    let mut target = vec![Int::zero(); s + r];
    for (j, t) in e.tor.iter().enumerate() {
        target[j] = Int::from(*t);
    }
    for (j, c) in e.free.iter().enumerate() {
        target[s + j] = Int::from(*c);
    }
    basis.solve_left_int(&target).is_some()
}

/// Generators of the totally real unit subgroup T^*_R (including -1 type
/// torsion), via the conjugation action on exponents.
pub fn real_unit_subgroup(alg: &EtaleAlgebra, group: &UnitGroup) -> Vec<AlgElement> {
    let r = group.fundamental.len();
    let s = group.torsion.len();
    let dim = s + r;
    // conjugation matrix on exponents: conj(gen_j) = prod gen^c_j
    let mut con_rows: Vec<Vec<Int>> = Vec::new();
    for j in 0..dim {
        let gen = if j < s {
            group.torsion[j].0.clone()
        } else {
            group.fundamental[j - s].clone()
        };
        let c = dlog(alg, group, &alg.involve(&gen)).expect("conjugate escaped group");
        let mut v = vec![Int::zero(); dim];
        for (k, t) in c.tor.iter().enumerate() {
            v[k] = Int::from(*t);
        }
        for (k, f) in c.free.iter().enumerate() {
            v[s + k] = Int::from(*f);
        }
        con_rows.push(v);
    }
    let con = IntMatrix::from_rows(con_rows);
    // fixed subgroup: x with x*(C - I) ≡ 0 modulo torsion relations:
    // solve (x, y) * [C - I; W] = 0 where W = torsion order rows
    let mut cmi = IntMatrix::zero(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            let v = con.at(i, j).clone() - if i == j { Int::one() } else { Int::zero() };
            *cmi.at_mut(i, j) = v;
        }
    }
    let mut w_rows: Vec<Vec<Int>> = Vec::new();
    for (j, (_, w)) in group.torsion.iter().enumerate() {
        let mut v = vec![Int::zero(); dim];
        v[j] = Int::from(*w);
        w_rows.push(v);
    }
    let stacked = if w_rows.is_empty() {
        cmi.clone()
    } else {
        cmi.stack(&IntMatrix::from_rows(w_rows))
    };
    let kern = stacked.left_kernel();
    // x-part generates the fixed subgroup (plus torsion relations kernel)
    let mut out: Vec<AlgElement> = Vec::new();
    for i in 0..kern.rows {
        let x = &kern.row(i)[..dim];
        let mut acc = alg.one();
        for (j, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = i64::try_from(c).expect("exponent too large");
            let gen = if j < s {
                group.torsion[j].0.clone()
            } else {
                group.fundamental[j - s].clone()
            };
            acc = alg.mul(&acc, &alg.pow(&gen, e));
        }
        if alg.is_totally_real(&acc) && out.iter().all(|y| *y != acc) && acc != alg.one() {
            out.push(acc);
        }
    }
    // always include -1
    let minus_one = alg.neg(&alg.one());
    if out.iter().all(|y| *y != minus_one) {
        out.push(minus_one);
    }
    for u in &out {
        debug_assert!(alg.is_totally_real(u));
    }
    out
}

/// The sign group G_S = S^*_R / (S^* ∩ L^+): coset representatives over the
/// sign vectors at the real places, always including the identity first.
pub fn group_gs(alg: &EtaleAlgebra, group: &UnitGroup) -> Vec<AlgElement> {
    let gens = real_unit_subgroup(alg, group);
    let reps_idx = pair_reps(alg);
    let sign_vec = |x: &AlgElement| -> Vec<bool> {
        reps_idx
            .iter()
            .map(|&k| alg.real_sign_at_root(x, k) < 0)
            .collect()
    };
    // span the F2 space of sign vectors with coset representatives
    let mut basis: Vec<(Vec<bool>, AlgElement)> = Vec::new();
    for u in &gens {
        let mut s = sign_vec(u);
        let mut elem = u.clone();
        // reduce against current basis
        for (bs, be) in &basis {
            let pivot = bs.iter().position(|&b| b).unwrap();
            if s[pivot] {
                for i in 0..s.len() {
                    s[i] ^= bs[i];
                }
                elem = alg.mul(&elem, be);
            }
        }
        if s.iter().any(|&b| b) {
            basis.push((s, elem));
        }
    }
    // enumerate the subgroup generated
    let mut out: Vec<AlgElement> = vec![alg.one()];
    for (_, e) in &basis {
        let mut next = Vec::new();
        for x in &out {
            next.push(x.clone());
            next.push(alg.mul(x, e));
        }
        out = next;
    }
    out
}

/// [T^* ∩ L^+ : <v vbar>], the forced size of any nonempty set of
/// principal polarizations on an ideal with multiplicator ring T.
pub fn ppav_count(alg: &EtaleAlgebra, group: &UnitGroup) -> Int {
    // subgroup of totally positive units: kernel of the sign map on the
    // totally real subgroup; compute orders by enumeration over the
    // transversal of T^*/<v vbar> (finite): count reps that are totally
    // positive units: [U^+ : V] = #{u in T^*/V : u totally real and
    // totally positive}  (each coset contains at most one... not quite;
    // count cosets of V inside U^+ directly)
    let tv = transversal(alg, group);
    let mut count = 0usize;
    for u in &tv.reps {
        if alg.is_totally_real(u) {
            if let Ok(true) = alg.is_totally_positive(u) {
                count += 1;
            }
        }
    }
    let _ = &tv.norm_free;
    let _ = &tv.norm_tor;
    Int::from(count as u64)
}

/// The paper's literal count |T^*_R / <v vbar>| (recorded for comparison;
/// the enumeration in the polarization engine is the source of truth).
pub fn ppav_count_literal(alg: &EtaleAlgebra, group: &UnitGroup) -> Int {
    let tv = transversal(alg, group);
    let mut count = 0usize;
    for u in &tv.reps {
        if alg.is_totally_real(u) {
            count += 1;
        }
    }
    Int::from(count as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::ZPoly;
    use crate::etale::make_algebra;
    use crate::orders::{frobenius_order, maximal_order};

    fn quad() -> EtaleAlgebra {
        make_algebra(&ZPoly::from_i64(&[3, 0, 1]), &Int::from(3)).unwrap()
    }

    #[test]
    fn torsion_of_eisenstein_orders() {
        // oracle: algebraic integers of norm 1 with trace in [-2,2]:
        // O_L of Q(sqrt(-3)) has mu_6, Z[sqrt(-3)] has {+-1}
        let alg = quad();
        let ol = maximal_order(&alg);
        let rw = frobenius_order(&alg);
        let cfg = UnitSearchConfig::default();
        let u_ol = unit_group_maximal(&alg, &ol, &cfg).unwrap();
        assert_eq!(u_ol.torsion_order(), 6);
        assert_eq!(u_ol.rank(), 0);
        let u_rw = unit_group_of_order(&alg, &ol, &u_ol, &rw);
        assert_eq!(u_rw.torsion_order(), 2);
        assert_eq!(u_rw.rank(), 0);
    }

    #[test]
    fn transversal_examples() {
        let alg = quad();
        let ol = maximal_order(&alg);
        let rw = frobenius_order(&alg);
        let cfg = UnitSearchConfig::default();
        let u_ol = unit_group_maximal(&alg, &ol, &cfg).unwrap();
        let u_rw = unit_group_of_order(&alg, &ol, &u_ol, &rw);
        // T = Z[sqrt(-3)]: v vbar = 1 for all units, transversal = {+-1}
        let t_rw = transversal(&alg, &u_rw);
        assert_eq!(t_rw.len(), 2);
        // T = O_L: all six torsion units
        let t_ol = transversal(&alg, &u_ol);
        assert_eq!(t_ol.len(), 6);
        // identity coset present
        assert!(t_ol.reps.iter().any(|x| in_norm_subgroup(&alg, &u_ol, x)));
    }

    #[test]
    fn gs_for_imaginary_quadratic() {
        let alg = quad();
        let ol = maximal_order(&alg);
        let cfg = UnitSearchConfig::default();
        let u_ol = unit_group_maximal(&alg, &ol, &cfg).unwrap();
        // S^*_R = {+-1}, positives = {1}: G_S ≅ Z/2
        let gs = group_gs(&alg, &u_ol);
        assert_eq!(gs.len(), 2);
    }

    #[test]
    fn ppav_count_imaginary_quadratic() {
        let alg = quad();
        let ol = maximal_order(&alg);
        let rw = frobenius_order(&alg);
        let cfg = UnitSearchConfig::default();
        let u_ol = unit_group_maximal(&alg, &ol, &cfg).unwrap();
        let u_rw = unit_group_of_order(&alg, &ol, &u_ol, &rw);
        // elliptic curves: a unique principal polarization per class
        assert_eq!(ppav_count(&alg, &u_ol), Int::one());
        assert_eq!(ppav_count(&alg, &u_rw), Int::one());
        // the paper's literal formula gives 2 here; the discrepancy is
        // recorded, the enumeration is what the engine asserts against
        assert_eq!(ppav_count_literal(&alg, &u_ol), Int::from(2));
    }

    #[test]
    fn units_of_real_rank_one_quartic() {
        // L = Q[x]/(x^4+9): L_R = Q(sqrt(6)), fundamental unit 5 + 2 sqrt(6)
        let alg = make_algebra(&ZPoly::from_i64(&[9, 0, 0, 0, 1]), &Int::from(3)).unwrap();
        let ol = maximal_order(&alg);
        let cfg = UnitSearchConfig::default();
        let u = unit_group_maximal(&alg, &ol, &cfg).unwrap();
        assert_eq!(u.rank(), 1);
        // torsion contains i (mu_4): Q(i, sqrt(6))
        assert_eq!(u.torsion_order(), 4);
        // the Hasse unit index of Q(i, sqrt(6)) is 2: the fundamental unit w
        // satisfies w^2 = i * (5 + 2 sqrt(6)) up to torsion and inversion,
        // with eps = 5 + 2 sqrt(6) fundamental in the real subfield
        let fu = &u.fundamental[0];
        let beta = alg.beta();
        let eps = alg.add(
            &alg.from_rat(&crate::arith::rat(5)),
            &alg.mul(&beta, &alg.from_rat(&crate::arith::rat(2))),
        );
        let is_tors = |x: &AlgElement| torsion_order_of(&alg, x).is_some();
        let fu2 = alg.mul(fu, fu);
        let candidates = [
            alg.div(fu, &eps).unwrap(),
            alg.mul(fu, &eps),
            alg.div(&fu2, &eps).unwrap(),
            alg.mul(&fu2, &eps),
        ];
        assert!(
            candidates.iter().any(is_tors),
            "fundamental unit mismatch: {fu:?}"
        );
        // and the group does contain a square root of i*eps (index 2 jump)
        let i_eps = alg.mul(&alg.pow(&u.torsion[0].0, 1), &eps);
        let in_group = dlog(&alg, &u, &i_eps).is_some();
        assert!(in_group);
    }

    #[test]
    fn dlog_roundtrip() {
        let alg = make_algebra(&ZPoly::from_i64(&[9, 0, 0, 0, 1]), &Int::from(3)).unwrap();
        let ol = maximal_order(&alg);
        let cfg = UnitSearchConfig::default();
        let u = unit_group_maximal(&alg, &ol, &cfg).unwrap();
        let x = alg.mul(
            &alg.pow(&u.fundamental[0], -3),
            &alg.pow(&u.torsion[0].0, 2),
        );
        let e = dlog(&alg, &u, &x).unwrap();
        assert_eq!(e.free, alloc::vec![-3]);
        // reconstruct
        let mut y = alg.one();
        for (j, t) in e.tor.iter().enumerate() {
            y = alg.mul(&y, &alg.pow(&u.torsion[j].0, *t as i64));
        }
        for (j, f) in e.free.iter().enumerate() {
            y = alg.mul(&y, &alg.pow(&u.fundamental[j], *f));
        }
        assert_eq!(y, x);
        // non-member: pi is not a unit of the order
        assert!(dlog(&alg, &u, &alg.pi()).is_none());
    }
}
