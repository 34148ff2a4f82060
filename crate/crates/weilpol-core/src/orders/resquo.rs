//! The finite quotient O/f for an ideal f of the maximal order O, its unit
//! group, and the quotient Q = (O/f)^* / (T/f)^* for a suborder T with
//! f ⊆ T ⊆ O. These drive both the unit sieve T^* ⊆ O^* and the conductor
//! exact sequence for Pic(T).

use super::{order_coords, Lattice, Order};
use crate::arith::matrix::IntMatrix;
use crate::arith::{Int, Rat};
use crate::etale::{AlgElement, EtaleAlgebra};
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub struct ConductorQuotient<'a> {
    pub alg: &'a EtaleAlgebra,
    pub order: Order,
    pub sub: Order,
    /// the modulus ideal, an O-ideal contained in `sub`
    pub modulus: Lattice,
    /// modulus basis in O-coordinates (canonical lower-triangular HNF)
    f_in_o: IntMatrix,
    /// number of residues |O/f|
    pub size: Int,
    /// canonical unit residues of (T/f)^*
    t_units: Vec<Vec<Int>>,
}

impl<'a> ConductorQuotient<'a> {
    pub fn new(alg: &'a EtaleAlgebra, order: &Order, sub: &Order, modulus: &Lattice) -> Self {
        let n = alg.dim();
        let mut rows = Vec::with_capacity(n);
        for b in modulus.basis(alg) {
            rows.push(order_coords(alg, order, &b).expect("modulus not inside order"));
        }
        let f_in_o = IntMatrix::from_rows(rows).lattice_basis();
        let size = f_in_o.det().abs();
        let mut me = ConductorQuotient {
            alg,
            order: order.clone(),
            sub: sub.clone(),
            modulus: modulus.clone(),
            f_in_o,
            size,
            t_units: Vec::new(),
        };
        me.t_units = me.compute_t_units();
        me
    }

    /// Canonical representative mod f of an O-coordinate vector.
    pub fn reduce(&self, x: &[Int]) -> Vec<Int> {
        let n = x.len();
        let mut v = x.to_vec();
        for j in (0..n).rev() {
            let piv = self.f_in_o.at(j, j);
            let q = Int::div_floor(&v[j], piv);
            if !q.is_zero() {
                for jj in 0..=j {
                    let s = self.f_in_o.at(j, jj) * &q;
                    v[jj] -= s;
                }
            }
        }
        v
    }

    pub fn coords(&self, x: &AlgElement) -> Option<Vec<Int>> {
        order_coords(self.alg, &self.order, x).map(|c| self.reduce(&c))
    }

    pub fn to_elem(&self, x: &[Int]) -> AlgElement {
        let basis = self.order.lat.basis(self.alg);
        let mut acc = self.alg.zero();
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                acc = self
                    .alg
                    .add(&acc, &self.alg.scale(&basis[i], &Rat::from_integer(c.clone())));
            }
        }
        acc
    }

    pub fn one(&self) -> Vec<Int> {
        self.coords(&self.alg.one()).unwrap()
    }

    pub fn mul(&self, a: &[Int], b: &[Int]) -> Vec<Int> {
        let ea = self.to_elem(a);
        let eb = self.to_elem(b);
        let prod = self.alg.mul(&ea, &eb);
        self.coords(&prod).expect("product left the order")
    }

    /// Unit of O/f: 1 ∈ xO + f.
    pub fn is_unit(&self, a: &[Int]) -> bool {
        let x = self.to_elem(a);
        let mut gens: Vec<AlgElement> = self
            .order
            .lat
            .basis(self.alg)
            .iter()
            .map(|b| self.alg.mul(b, &x))
            .collect();
        gens.extend(self.modulus.basis(self.alg));
        let lat = Lattice::from_elements(self.alg, &gens);
        lat.contains(&self.alg.one())
    }

    /// Unit of T/f: 1 ∈ xT + f (for x in T).
    pub fn is_t_unit(&self, a: &[Int]) -> bool {
        let x = self.to_elem(a);
        if !self.sub.lat.contains(&x) {
            return false;
        }
        let mut gens: Vec<AlgElement> = self
            .sub
            .lat
            .basis(self.alg)
            .iter()
            .map(|b| self.alg.mul(b, &x))
            .collect();
        gens.extend(self.modulus.basis(self.alg));
        let lat = Lattice::from_elements(self.alg, &gens);
        lat.contains(&self.alg.one())
    }

    /// Enumerate all residues (box scan over the HNF diagonal).
    pub fn all_residues(&self) -> Vec<Vec<Int>> {
        let n = self.f_in_o.rows;
        let mut out: Vec<Vec<Int>> = vec![vec![]];
        for j in 0..n {
            let m = self.f_in_o.at(j, j).clone();
            let mut next = Vec::new();
            for e in &out {
                let mut v = Int::zero();
                while v < m {
                    let mut e2 = e.clone();
                    e2.push(v.clone());
                    next.push(e2);
                    v += 1;
                }
            }
            out = next;
        }
        out.into_iter().map(|v| self.reduce(&v)).collect()
    }

    fn compute_t_units(&self) -> Vec<Vec<Int>> {
        let n = self.alg.dim();
        let mut t_rows = Vec::with_capacity(n);
        for b in self.sub.lat.basis(self.alg) {
            t_rows.push(order_coords(self.alg, &self.order, &b).expect("sub not in order"));
        }
        let t_in_o = IntMatrix::from_rows(t_rows).lattice_basis();
        let mut f_rows = Vec::with_capacity(n);
        for i in 0..self.f_in_o.rows {
            let y = t_in_o
                .solve_left_int(self.f_in_o.row(i))
                .expect("modulus not inside sub");
            f_rows.push(y);
        }
        let f_in_t = IntMatrix::from_rows(f_rows).lattice_basis();
        let mut reps: Vec<Vec<Int>> = vec![vec![]];
        for j in 0..n {
            let m = f_in_t.at(j, j).clone();
            let mut next = Vec::new();
            for e in &reps {
                let mut v = Int::zero();
                while v < m {
                    let mut e2 = e.clone();
                    e2.push(v.clone());
                    next.push(e2);
                    v += 1;
                }
            }
            reps = next;
        }
        let mut out = Vec::new();
        for r in reps {
            let o_coords = t_in_o.mul_row(&r);
            let red = self.reduce(&o_coords);
            if self.is_t_unit(&red) {
                out.push(red);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn t_unit_count(&self) -> usize {
        self.t_units.len()
    }

    /// Canonical representative of the class of a unit residue in
    /// Q = (O/f)^* / (T/f)^*: lexicographic minimum over the coset.
    pub fn q_canonical(&self, a: &[Int]) -> Vec<Int> {
        let mut best: Option<Vec<Int>> = None;
        for t in &self.t_units {
            let prod = self.mul(a, t);
            best = match best {
                None => Some(prod),
                Some(b) => {
                    if prod < b {
                        Some(prod)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best.expect("(T/f)* is empty")
    }

    /// Full enumeration of Q.
    pub fn q_group(&self) -> QGroup {
        let mut elems: Vec<Vec<Int>> = Vec::new();
        let mut index: BTreeMap<Vec<Int>, usize> = BTreeMap::new();
        for r in self.all_residues() {
            if !self.is_unit(&r) {
                continue;
            }
            let c = self.q_canonical(&r);
            if !index.contains_key(&c) {
                index.insert(c.clone(), elems.len());
                elems.push(c);
            }
        }
        QGroup { elems, index }
    }

    pub fn q_index(&self, qg: &QGroup, a: &[Int]) -> usize {
        let c = self.q_canonical(a);
        *qg.index.get(&c).expect("residue not a unit class")
    }
}

/// The finite group Q = (O/f)^*/(T/f)^* as an explicit element list.
pub struct QGroup {
    pub elems: Vec<Vec<Int>>,
    index: BTreeMap<Vec<Int>, usize>,
}

impl QGroup {
    pub fn len(&self) -> usize {
        self.elems.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

/// Relations lattice of a list of generators inside a finite abelian group:
/// BFS over the generated subgroup recording one exponent vector per
/// element; every closing edge yields a relation. Returns (subgroup size,
/// HNF basis of the relation lattice).
pub fn relation_lattice<K: Ord + Clone, F: FnMut(&K, usize) -> K>(
    identity: K,
    num_gens: usize,
    mut step: F,
) -> (usize, IntMatrix) {
    let mut vec_of: BTreeMap<K, Vec<Int>> = BTreeMap::new();
    vec_of.insert(identity.clone(), vec![Int::zero(); num_gens]);
    let mut frontier = vec![identity];
    let mut relations: Vec<Vec<Int>> = Vec::new();
    while let Some(x) = frontier.pop() {
        let vx = vec_of.get(&x).unwrap().clone();
        for g in 0..num_gens {
            let y = step(&x, g);
            let mut vy = vx.clone();
            vy[g] += 1;
            match vec_of.get(&y) {
                None => {
                    vec_of.insert(y.clone(), vy);
                    frontier.push(y);
                }
                Some(old) => {
                    let rel: Vec<Int> = vy.iter().zip(old).map(|(a, b)| a - b).collect();
                    if rel.iter().any(|c| !c.is_zero()) {
                        relations.push(rel);
                    }
                }
            }
        }
    }
    let size = vec_of.len();
    let mat = if relations.is_empty() {
        IntMatrix::zero(0, num_gens)
    } else {
        let m = IntMatrix::from_rows(relations);
        let (h, _) = m.hnf();
        let rows: Vec<Vec<Int>> = (0..h.rows)
            .filter(|&i| !h.row(i).iter().all(|x| x.is_zero()))
            .map(|i| h.row(i).to_vec())
            .collect();
        if rows.is_empty() {
            IntMatrix::zero(0, num_gens)
        } else {
            IntMatrix::from_rows(rows)
        }
    };
    (size, mat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::ZPoly;
    use crate::etale::make_algebra;
    use crate::orders::{frobenius_order, maximal_order};

    #[test]
    fn quotient_of_conductor_quadratic() {
        let alg = make_algebra(&ZPoly::from_i64(&[3, 0, 1]), &Int::from(3)).unwrap();
        let rw = frobenius_order(&alg);
        let ol = maximal_order(&alg);
        let f = ol.lat.scale(&crate::arith::rat(2));
        assert!(rw.lat.contains_lattice(&f));
        let cq = ConductorQuotient::new(&alg, &ol, &rw, &f);
        assert_eq!(cq.size, Int::from(4));
        // 2 is inert in Q(sqrt(-3)): (O/2O)* = F_4^* has 3 elements
        let units: Vec<_> = cq
            .all_residues()
            .into_iter()
            .filter(|r| cq.is_unit(r))
            .collect();
        assert_eq!(units.len(), 3);
        let q = cq.q_group();
        assert_eq!(q.len() * cq.t_unit_count(), 3);
    }

    #[test]
    fn relation_lattice_cyclic() {
        let (size, rel) = relation_lattice(0u64, 1, |x, _g| (x + 1) % 6);
        assert_eq!(size, 6);
        assert_eq!(rel.rows, 1);
        assert_eq!(rel.at(0, 0).clone(), Int::from(6));
        let (size2, rel2) = relation_lattice((0u8, 0u8), 2, |x, g| {
            if g == 0 {
                ((x.0 + 1) % 2, x.1)
            } else {
                (x.0, (x.1 + 1) % 2)
            }
        });
        assert_eq!(size2, 4);
        assert_eq!(rel2.det().abs(), Int::from(4));
    }
}
