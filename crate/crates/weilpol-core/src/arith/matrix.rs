//! Exact integer and rational matrices, Hermite and Smith normal forms.
//!
//! The HNF convention is fixed once for the whole crate: row lattices are
//! canonicalized to a bottom-aligned echelon form which is lower-triangular
//! for square nonsingular input, with positive pivots and the entries below
//! each pivot reduced into `[0, pivot)`. Lattice equality is then equality
//! of canonical bases.

use super::{Int, Rat};
use alloc::vec;
use alloc::vec::Vec;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Int>,
}

impl core::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                write!(f, "{}{}", self.at(i, j), if j + 1 < self.cols { ", " } else { "" })?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_row(&self, row: &[Int]) -> Vec<Int> {
        assert_eq!(row.len(), self.rows);
        let mut out = vec![Int::zero(); self.cols];
        for (i, coeff) in row.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                out[j] += coeff * self.at(i, j);
            }
        }
        out
    }

    pub fn scale(&self, c: &Int) -> Self {
        let mut m = self.clone();
        for x in &mut m.data {
            *x *= c;
        }
        m
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Self) -> Self {
        assert_eq!(self.cols, below.cols);
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        IntMatrix {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn row_sub_mul(&mut self, dst: usize, src: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.at(src, j) * q;
            *self.at_mut(dst, j) -= v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.at(i, j).clone();
            *self.at_mut(i, j) = v;
        }
    }

    /// Hermite normal form of the row lattice: returns (H, U) with
    /// `H = U * self`, U unimodular. Zero rows of H (if any) come first;
    /// pivot rows are bottom-aligned with pivots moving right going down,
    /// each pivot positive and the entries below it reduced mod the pivot.
    pub fn hnf(&self) -> (IntMatrix, IntMatrix) {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        if self.rows == 0 {
            return (h, u);
        }
        let mut r = self.rows; // rows >= r are finished pivot rows
        for c in (0..self.cols).rev() {
            if r == 0 {
                break;
            }
            let target = r - 1;
            // gcd-reduce column c among rows 0..=target
            loop {
                let mut best: Option<usize> = None;
                for i in 0..=target {
                    if !h.at(i, c).is_zero() {
                        best = match best {
                            None => Some(i),
                            Some(b) => {
                                if h.at(i, c).abs() < h.at(b, c).abs() {
                                    Some(i)
                                } else {
                                    Some(b)
                                }
                            }
                        };
                    }
                }
                let Some(k) = best else { break };
                h.swap_rows(k, target);
                u.swap_rows(k, target);
                let mut done = true;
                for i in 0..target {
                    if !h.at(i, c).is_zero() {
                        let q = Int::div_floor(h.at(i, c), h.at(target, c));
                        h.row_sub_mul(i, target, &q);
                        u.row_sub_mul(i, target, &q);
                        if !h.at(i, c).is_zero() {
                            done = false;
                        }
                    }
                }
                if done {
                    break;
                }
            }
            if h.at(target, c).is_zero() {
                continue;
            }
            if h.at(target, c).is_negative() {
                h.negate_row(target);
                u.negate_row(target);
            }
            // reduce the entries below the new pivot
            for i in target + 1..self.rows {
                let q = Int::div_floor(h.at(i, c), h.at(target, c));
                h.row_sub_mul(i, target, &q);
                u.row_sub_mul(i, target, &q);
            }
            r = target;
        }
        (h, u)
    }

    /// Number of nonzero rows of the HNF (= rank of the row lattice).
    pub fn rank(&self) -> usize {
        let (h, _) = self.hnf();
        (0..h.rows).filter(|&i| !h.row(i).iter().all(|x| x.is_zero())).count()
    }

    /// Canonical square basis of a full-rank row lattice. Panics if the
    /// rows do not span a finite-index sublattice of Z^cols.
    pub fn lattice_basis(&self) -> IntMatrix {
        let (h, _) = self.hnf();
        let zero_rows = h.rows - self.cols;
        for i in 0..zero_rows {
            assert!(h.row(i).iter().all(|x| x.is_zero()), "lattice not full rank");
        }
        let mut rows = Vec::with_capacity(self.cols);
        for i in zero_rows..h.rows {
            assert!(!h.row(i).iter().all(|x| x.is_zero()), "lattice not full rank");
            rows.push(h.row(i).to_vec());
        }
        IntMatrix::from_rows(rows)
    }

    /// Basis of the left kernel {x : x * self = 0}.
    pub fn left_kernel(&self) -> IntMatrix {
        let (h, u) = self.hnf();
        let mut rows = Vec::new();
        for i in 0..h.rows {
            if h.row(i).iter().all(|x| x.is_zero()) {
                rows.push(u.row(i).to_vec());
            }
        }
        if rows.is_empty() {
            IntMatrix::zero(0, self.rows)
        } else {
            IntMatrix::from_rows(rows)
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                let mut found = None;
                for i in k + 1..n {
                    if !m.at(i, k).is_zero() {
                        found = Some(i);
                        break;
                    }
                }
                match found {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)).div_floor(&prev);
                    *m.at_mut(i, j) = v;
                }
                *m.at_mut(i, k) = Int::zero();
            }
            prev = m.at(k, k).clone();
        }
        let d = m.at(n - 1, n - 1).clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Solve y * basis = target over Z where `self` is a canonical
    /// (bottom-aligned echelon, square lower-triangular) full-rank basis.
    /// Returns None when target is not in the row lattice.
    pub fn solve_left_int(&self, target: &[Int]) -> Option<Vec<Int>> {
        assert!(self.is_square());
        let n = self.rows;
        assert_eq!(target.len(), n);
        let mut y = vec![Int::zero(); n];
        let mut rem: Vec<Int> = target.to_vec();
        for j in (0..n).rev() {
            // only rows i >= j touch column j
            let piv = self.at(j, j);
            if piv.is_zero() {
                return None;
            }
            let (q, r) = rem[j].div_rem(piv);
            if !r.is_zero() {
                return None;
            }
            y[j] = q;
            if !y[j].is_zero() {
                for jj in 0..=j {
                    let v = self.at(j, jj) * &y[j];
                    rem[jj] -= v;
                }
            }
        }
        if rem.iter().all(|x| x.is_zero()) {
            Some(y)
        } else {
            None
        }
    }

    /// Solve y * basis = target over Q (basis square lower-triangular
    /// full-rank canonical form).
    pub fn solve_left_rat(&self, target: &[Rat]) -> Option<Vec<Rat>> {
        assert!(self.is_square());
        let n = self.rows;
        let mut y = vec![Rat::zero(); n];
        let mut rem: Vec<Rat> = target.to_vec();
        for j in (0..n).rev() {
            let piv = self.at(j, j);
            if piv.is_zero() {
                return None;
            }
            let q = &rem[j] / Rat::from_integer(piv.clone());
            y[j] = q;
            if !y[j].is_zero() {
                for jj in 0..=j {
                    let v = Rat::from_integer(self.at(j, jj).clone()) * &y[j];
                    rem[jj] -= v;
                }
            }
        }
        if rem.iter().all(|x| x.is_zero()) {
            Some(y)
        } else {
            None
        }
    }

    /// Smith normal form: (D, U, V) with D = U * self * V diagonal,
    /// d_1 | d_2 | ..., U and V unimodular, diagonal nonnegative.
    pub fn snf(&self) -> (IntMatrix, IntMatrix, IntMatrix) {
        let mut d = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let n = self.rows.min(self.cols);

        fn col_sub_mul(m: &mut IntMatrix, dst: usize, src: usize, q: &Int) {
            if q.is_zero() {
                return;
            }
            for i in 0..m.rows {
                let x = m.at(i, src) * q;
                *m.at_mut(i, dst) -= x;
            }
        }
        fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
            if a == b {
                return;
            }
            for i in 0..m.rows {
                m.data.swap(i * m.cols + a, i * m.cols + b);
            }
        }

        for t in 0..n {
            loop {
                // find minimal nonzero entry in the remaining block
                let mut pos: Option<(usize, usize)> = None;
                for i in t..d.rows {
                    for j in t..d.cols {
                        if !d.at(i, j).is_zero() {
                            pos = match pos {
                                None => Some((i, j)),
                                Some((a, b)) => {
                                    if d.at(i, j).abs() < d.at(a, b).abs() {
                                        Some((i, j))
                                    } else {
                                        Some((a, b))
                                    }
                                }
                            };
                        }
                    }
                }
                let Some((pi, pj)) = pos else { break };
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                swap_cols(&mut d, t, pj);
                swap_cols(&mut v, t, pj);
                let mut dirty = false;
                for i in t + 1..d.rows {
                    if !d.at(i, t).is_zero() {
                        let q = Int::div_floor(d.at(i, t), d.at(t, t));
                        d.row_sub_mul(i, t, &q);
                        u.row_sub_mul(i, t, &q);
                        if !d.at(i, t).is_zero() {
                            dirty = true;
                        }
                    }
                }
                for j in t + 1..d.cols {
                    if !d.at(t, j).is_zero() {
                        let q = Int::div_floor(d.at(t, j), d.at(t, t));
                        col_sub_mul(&mut d, j, t, &q);
                        col_sub_mul(&mut v, j, t, &q);
                        if !d.at(t, j).is_zero() {
                            dirty = true;
                        }
                    }
                }
                if dirty {
                    continue;
                }
                // pivot divides the rest of the block?
                let mut bad: Option<usize> = None;
                'scan: for i in t + 1..d.rows {
                    for j in t + 1..d.cols {
                        if !(d.at(i, j) % d.at(t, t)).is_zero() {
                            bad = Some(i);
                            break 'scan;
                        }
                    }
                }
                match bad {
                    Some(i) => {
                        // add offending row to row t and restart
                        let q = -Int::one();
                        d.row_sub_mul(t, i, &q);
                        u.row_sub_mul(t, i, &q);
                    }
                    None => break,
                }
            }
            if d.at(t, t).is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
        }
        (d, u, v)
    }
}

/// Rational dense matrix, used for trace-form inversions and Q-linear solves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        RatMatrix { rows: r, cols: c, data }
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        RatMatrix {
            rows: m.rows,
            cols: m.cols,
            data: (0..m.rows)
                .flat_map(|i| m.row(i).iter().map(|x| Rat::from_integer(x.clone())))
                .collect(),
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a * other.at(k, j);
                    *out.at_mut(i, j) += v;
                }
            }
        }
        out
    }

    pub fn mul_row(&self, row: &[Rat]) -> Vec<Rat> {
        assert_eq!(row.len(), self.rows);
        let mut out = vec![Rat::zero(); self.cols];
        for (i, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let v = c * self.at(i, j);
                out[j] += v;
            }
        }
        out
    }

    /// Gaussian-elimination inverse; None if singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let mut piv = None;
            for i in col..n {
                if !a.at(i, col).is_zero() {
                    piv = Some(i);
                    break;
                }
            }
            let piv = piv?;
            for j in 0..n {
                a.data.swap(col * n + j, piv * n + j);
                inv.data.swap(col * n + j, piv * n + j);
            }
            let pv = a.at(col, col).clone();
            for j in 0..n {
                *a.at_mut(col, j) /= pv.clone();
                *inv.at_mut(col, j) /= pv.clone();
            }
            for i in 0..n {
                if i != col && !a.at(i, col).is_zero() {
                    let f = a.at(i, col).clone();
                    for j in 0..n {
                        let x = &f * a.at(col, j);
                        *a.at_mut(i, j) -= x;
                        let y = &f * inv.at(col, j);
                        *inv.at_mut(i, j) -= y;
                    }
                }
            }
        }
        Some(inv)
    }

    /// Right kernel basis {x column : self * x = 0}, returned as rows.
    pub fn right_kernel(&self) -> Vec<Vec<Rat>> {
        let mut a = self.clone();
        let n = a.cols;
        let mut pivots: Vec<Option<usize>> = vec![None; n];
        let mut r = 0usize;
        for c in 0..n {
            let mut piv = None;
            for i in r..a.rows {
                if !a.at(i, c).is_zero() {
                    piv = Some(i);
                    break;
                }
            }
            let Some(p) = piv else { continue };
            for j in 0..n {
                a.data.swap(r * n + j, p * n + j);
            }
            let pv = a.at(r, c).clone();
            for j in 0..n {
                *a.at_mut(r, j) /= pv.clone();
            }
            for i in 0..a.rows {
                if i != r && !a.at(i, c).is_zero() {
                    let f = a.at(i, c).clone();
                    for j in 0..n {
                        let x = &f * a.at(r, j);
                        *a.at_mut(i, j) -= x;
                    }
                }
            }
            pivots[c] = Some(r);
            r += 1;
            if r == a.rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for c in 0..n {
            if pivots[c].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); n];
            v[c] = Rat::one();
            for cc in 0..n {
                if let Some(pr) = pivots[cc] {
                    v[cc] = -a.at(pr, c).clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int::XorShift;

    fn random_matrix(rng: &mut XorShift, n: usize, bound: i64) -> IntMatrix {
        IntMatrix::from_rows(
            (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| Int::from(rng.next_u64() as i64 % bound))
                        .collect()
                })
                .collect(),
        )
    }

    fn random_unimodular(rng: &mut XorShift, n: usize) -> IntMatrix {
        // product of elementary row operations
        let mut u = IntMatrix::identity(n);
        for _ in 0..4 * n {
            let i = rng.below(n as u64) as usize;
            let j = rng.below(n as u64) as usize;
            if i == j {
                continue;
            }
            let q = Int::from(rng.next_u64() as i64 % 5);
            u.row_sub_mul(i, j, &q);
        }
        u
    }

    #[test]
    fn hnf_identity() {
        let id = IntMatrix::identity(4);
        let (h, u) = id.hnf();
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_sign_normalization() {
        let m = IntMatrix::from_i64(&[&[2, 0], &[0, -6]]);
        let (h, u) = m.hnf();
        assert_eq!(h, IntMatrix::from_i64(&[&[2, 0], &[0, 6]]));
        assert_eq!(u.mul(&m), h);
    }

    #[test]
    fn hnf_det_oracle() {
        // |det(H)| must equal |det(m)| computed by independent fraction-free
        // elimination.
        let mut rng = XorShift::new(42);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 4, 10);
            let d = m.det();
            if d.is_zero() {
                continue;
            }
            let (h, u) = m.hnf();
            assert_eq!(u.mul(&m), h);
            assert_eq!(u.det().abs(), Int::one());
            assert_eq!(h.det().abs(), d.abs());
        }
    }

    #[test]
    fn hnf_canonical_under_unimodular() {
        let mut rng = XorShift::new(7);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 4, 30);
            if m.det().is_zero() {
                continue;
            }
            let p = random_unimodular(&mut rng, 4);
            let (h1, _) = m.hnf();
            let (h2, _) = p.mul(&m).hnf();
            assert_eq!(h1, h2);
            // idempotent
            let (h3, _) = h1.hnf();
            assert_eq!(h3, h1);
        }
    }

    #[test]
    fn hnf_shape_lower_triangular() {
        let mut rng = XorShift::new(99);
        for _ in 0..10 {
            let m = random_matrix(&mut rng, 5, 50);
            if m.det().is_zero() {
                continue;
            }
            let (h, _) = m.hnf();
            for i in 0..5 {
                assert!(h.at(i, i) > &Int::zero());
                for j in i + 1..5 {
                    assert!(h.at(i, j).is_zero());
                }
                for ii in i + 1..5 {
                    assert!(h.at(ii, i) >= &Int::zero() && h.at(ii, i) < h.at(i, i));
                }
            }
        }
    }

    #[test]
    fn snf_examples() {
        let m = IntMatrix::from_i64(&[&[4, 0], &[0, 6]]);
        let (d, u, v) = m.snf();
        assert_eq!(d, IntMatrix::from_i64(&[&[2, 0], &[0, 12]]));
        assert_eq!(u.mul(&m).mul(&v), d);

        let id = IntMatrix::identity(3);
        assert_eq!(id.snf().0, id);

        let z = IntMatrix::zero(2, 3);
        assert_eq!(z.snf().0, z);
    }

    #[test]
    fn snf_divisibility_and_det() {
        let mut rng = XorShift::new(5);
        for _ in 0..20 {
            let m = random_matrix(&mut rng, 4, 12);
            let (d, u, v) = m.snf();
            assert_eq!(u.mul(&m).mul(&v), d);
            assert_eq!(u.det().abs(), Int::one());
            assert_eq!(v.det().abs(), Int::one());
            let mut prod = Int::one();
            for i in 0..3 {
                let a = d.at(i, i);
                let b = d.at(i + 1, i + 1);
                if !a.is_zero() && !b.is_zero() {
                    assert!((b % a).is_zero());
                }
                prod *= a;
            }
            prod *= d.at(3, 3);
            assert_eq!(prod.abs(), m.det().abs());
        }
    }

    #[test]
    fn solve_and_kernel() {
        let m = IntMatrix::from_i64(&[&[2, 0], &[1, 3]]);
        let b = m.lattice_basis();
        assert_eq!(b.solve_left_int(&[Int::from(3), Int::from(3)]), Some(vec![Int::from(1), Int::from(1)]));
        assert_eq!(b.solve_left_int(&[Int::from(1), Int::from(0)]), None);

        let s = IntMatrix::from_i64(&[&[1, 2], &[2, 4], &[3, 6]]);
        let k = s.left_kernel();
        assert_eq!(k.rows, 2);
        assert!(k.mul(&s).is_zero());
    }

    #[test]
    fn rat_inverse_roundtrip() {
        let m = RatMatrix::from_int(&IntMatrix::from_i64(&[&[2, 1], &[7, 4]]));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
    }
}
