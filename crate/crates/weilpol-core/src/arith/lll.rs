//! Exact-rational LLL reduction with respect to an integer Gram form.

use super::matrix::IntMatrix;
use super::{Int, Rat};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LllError {
    /// The supplied Gram form failed the rational Cholesky check on the
    /// span of the basis.
    NonPositiveDefinite,
}

impl core::fmt::Display for LllError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LllError::NonPositiveDefinite => write!(f, "gram matrix is not positive definite"),
        }
    }
}

fn inner(g: &IntMatrix, x: &[Int], y: &[Int]) -> Int {
    let mut acc = Int::zero();
    for i in 0..x.len() {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..y.len() {
            if !y[j].is_zero() {
                acc += &x[i] * g.at(i, j) * &y[j];
            }
        }
    }
    acc
}

/// Gram matrix of the basis rows under the coordinate form `g`.
pub fn basis_gram(basis: &IntMatrix, g: &IntMatrix) -> IntMatrix {
    let n = basis.rows;
    let mut out = IntMatrix::zero(n, n);
    for i in 0..n {
        for j in i..n {
            let v = inner(g, basis.row(i), basis.row(j));
            *out.at_mut(i, j) = v.clone();
            *out.at_mut(j, i) = v;
        }
    }
    out
}

/// Rational Cholesky check: true iff the symmetric matrix is positive
/// definite.
pub fn is_positive_definite(a: &IntMatrix) -> bool {
    let n = a.rows;
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| Rat::from_integer(a.at(i, j).clone())).collect())
        .collect();
    for k in 0..n {
        if m[k][k] <= Rat::zero() {
            return false;
        }
        for i in k + 1..n {
            let f = &m[i][k] / &m[k][k];
            for j in k..n {
                let v = &f * &m[k][j];
                m[i][j] -= v;
            }
        }
    }
    true
}

/// LLL-reduce the rows of `basis` with Lovász parameter 3/4 under the
/// positive-definite integer form `gram` on the coordinate space. The output
/// spans the same row lattice.
pub fn lll_reduce(basis: &IntMatrix, gram: &IntMatrix) -> Result<IntMatrix, LllError> {
    let bg = basis_gram(basis, gram);
    if !is_positive_definite(&bg) {
        return Err(LllError::NonPositiveDefinite);
    }
    let n = basis.rows;
    let mut b: Vec<Vec<Int>> = basis.rows_vec();
    if n <= 1 {
        return Ok(basis.clone());
    }

    let delta = Rat::new(Int::from(3), Int::from(4));

    // recompute GSO data from scratch (exact, fine at our dimensions)
    let gso = |b: &Vec<Vec<Int>>| -> (Vec<Vec<Rat>>, Vec<Rat>) {
        let mut mu = vec![vec![Rat::zero(); n]; n];
        let mut bstar_norm = vec![Rat::zero(); n];
        // bstar vectors as rational coordinate rows
        let mut bstar: Vec<Vec<Rat>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut cur: Vec<Rat> = b[i].iter().map(|x| Rat::from_integer(x.clone())).collect();
            for j in 0..i {
                // mu_ij = <b_i, b*_j> / |b*_j|^2
                let mut num = Rat::zero();
                for s in 0..cur.len() {
                    if b[i][s].is_zero() {
                        continue;
                    }
                    for t in 0..cur.len() {
                        if !bstar[j][t].is_zero() {
                            num += Rat::from_integer(&b[i][s] * gram.at(s, t)) * &bstar[j][t];
                        }
                    }
                }
                let m = &num / &bstar_norm[j];
                for t in 0..cur.len() {
                    let v = &m * &bstar[j][t];
                    cur[t] -= v;
                }
                mu[i][j] = m;
            }
            let mut norm = Rat::zero();
            for s in 0..cur.len() {
                if cur[s].is_zero() {
                    continue;
                }
                for t in 0..cur.len() {
                    if !cur[t].is_zero() {
                        norm += &cur[s] * Rat::from_integer(gram.at(s, t).clone()) * &cur[t];
                    }
                }
            }
            bstar_norm[i] = norm;
            bstar.push(cur);
        }
        (mu, bstar_norm)
    };

    let (mut mu, mut bnorm) = gso(&b);
    let mut k = 1usize;
    let mut guard = 0usize;
    while k < n {
        guard += 1;
        assert!(guard < 100_000, "LLL failed to terminate");
        // size-reduce b_k against b_{k-1}..b_0
        let mut changed = false;
        for j in (0..k).rev() {
            let m = &mu[k][j];
            if m.abs() > Rat::new(Int::one(), Int::from(2)) {
                let q = m.round().to_integer();
                for t in 0..b[k].len() {
                    let v = &q * &b[j][t];
                    b[k][t] -= v;
                }
                changed = true;
            }
        }
        if changed {
            let g = gso(&b);
            mu = g.0;
            bnorm = g.1;
        }
        // Lovász condition
        let lhs = &bnorm[k];
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &bnorm[k - 1];
        if *lhs >= rhs {
            k += 1;
        } else {
            b.swap(k, k - 1);
            let g = gso(&b);
            mu = g.0;
            bnorm = g.1;
            k = k.max(2) - 1;
        }
    }
    Ok(IntMatrix::from_rows(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn already_reduced_orthogonal_unchanged_up_to_sign() {
        let basis = IntMatrix::from_i64(&[&[1, 0], &[0, 1]]);
        let gram = IntMatrix::identity(2);
        let red = lll_reduce(&basis, &gram).unwrap();
        for i in 0..2 {
            let r = red.row(i);
            assert!(r.iter().map(|x| x * x).sum::<Int>() == Int::one());
        }
    }

    #[test]
    fn skewed_basis_reaches_shortest() {
        // oracle: exhaustive search over a small coefficient box
        let basis = IntMatrix::from_i64(&[&[1, 0], &[100, 1]]);
        let gram = IntMatrix::identity(2);
        let red = lll_reduce(&basis, &gram).unwrap();
        let norm = |v: &[Int]| v.iter().map(|x| x * x).sum::<Int>();
        let mut shortest: Option<Int> = None;
        for a in -120i64..=120 {
            for b in -3i64..=3 {
                if a == 0 && b == 0 {
                    continue;
                }
                let v = [
                    Int::from(a) + Int::from(100 * b),
                    Int::from(b),
                ];
                let nv = norm(&v);
                shortest = Some(match shortest {
                    None => nv,
                    Some(s) => s.min(nv),
                });
            }
        }
        let shortest = shortest.unwrap();
        assert!(norm(red.row(0)) <= Int::from(2) * &shortest);
        // same lattice
        assert_eq!(
            red.lattice_basis(),
            basis.lattice_basis()
        );
    }

    #[test]
    fn rank_one_returns_generator() {
        let basis = IntMatrix::from_i64(&[&[3, 6]]);
        let gram = IntMatrix::identity(2);
        let red = lll_reduce(&basis, &gram).unwrap();
        assert_eq!(red.rows, 1);
        assert_eq!(red.row(0).to_vec(), alloc::vec![Int::from(3), Int::from(6)]);
    }

    #[test]
    fn rejects_indefinite_gram() {
        let basis = IntMatrix::identity(2);
        let gram = IntMatrix::from_i64(&[&[1, 0], &[0, -1]]);
        assert_eq!(lll_reduce(&basis, &gram), Err(LllError::NonPositiveDefinite));
    }
}
