//! Fincke-Pohst enumeration of short lattice vectors under an exact
//! positive-definite form.

use super::matrix::IntMatrix;
use super::{Int, Rat};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumError {
    TooManyVectors(usize),
    NotPositiveDefinite,
}

impl core::fmt::Display for EnumError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EnumError::TooManyVectors(cap) => write!(f, "enumeration exceeded cap of {cap} vectors"),
            EnumError::NotPositiveDefinite => write!(f, "form is not positive definite"),
        }
    }
}

fn rat_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(if x.is_negative() { -1e300 } else { 1e300 })
}

/// Largest integer y with q*(y + t)^2 <= s (q > 0, s >= 0); assumes one
/// exists. Exact, with a float seed and rational fix-up.
fn upper_int(t: &Rat, q: &Rat, s: &Rat) -> Int {
    let bound = libm::sqrt((rat_f64(s) / rat_f64(q)).max(0.0));
    let mut y = Int::from(libm::floor(-rat_f64(t) + bound) as i64);
    let ok = |y: &Int| {
        let v = Rat::from_integer(y.clone()) + t;
        &(&v * &v) * q <= *s
    };
    while !ok(&y) {
        y -= 1;
    }
    loop {
        let y1 = &y + Int::one();
        if ok(&y1) {
            y = y1;
        } else {
            break;
        }
    }
    y
}

fn lower_int(t: &Rat, q: &Rat, s: &Rat) -> Int {
    // smallest integer y with q*(y+t)^2 <= s
    -upper_int(&(-t.clone()), q, s)
}

/// All nonzero lattice vectors x = y * basis with form-norm <= bound, one
/// representative per +/- pair (the last nonzero coefficient is positive).
/// Returned as coefficient vectors y.
pub fn enumerate_short(
    basis: &IntMatrix,
    gram: &IntMatrix,
    bound: &Rat,
    cap: usize,
) -> Result<Vec<Vec<Int>>, EnumError> {
    let n = basis.rows;
    let a = super::lll::basis_gram(basis, gram);
    // rational Cholesky: a = sum q_i (y_i + sum_{j>i} mu_ij y_j)^2
    let mut q = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            q[i][j] = Rat::from_integer(a.at(i, j).clone());
        }
    }
    for i in 0..n {
        if q[i][i] <= Rat::zero() {
            return Err(EnumError::NotPositiveDefinite);
        }
        for j in i + 1..n {
            let r = &q[i][j] / &q[i][i];
            q[j][i] = r;
        }
        for k in i + 1..n {
            for l in k..n {
                let v = &q[k][i] * &q[i][l];
                q[k][l] = &q[k][l] - v;
                if l != k {
                    q[l][k] = q[k][l].clone();
                }
            }
        }
        for j in i + 1..n {
            q[i][j] = &q[i][j] / &q[i][i];
        }
    }
    // now q[i][i] are the diagonal terms, q[i][j] (j>i) the mu coefficients
    let mut out: Vec<Vec<Int>> = Vec::new();
    let mut y = vec![Int::zero(); n];
    // depth-first from coordinate n-1 down to 0
    fn rec(
        level: usize,
        n: usize,
        q: &Vec<Vec<Rat>>,
        rem: &Rat,
        y: &mut Vec<Int>,
        out: &mut Vec<Vec<Int>>,
        cap: usize,
    ) -> Result<(), EnumError> {
        if level == usize::MAX {
            return Ok(());
        }
        let i = level;
        let mut t = Rat::zero();
        for j in i + 1..n {
            t += &q[i][j] * Rat::from_integer(y[j].clone());
        }
        let qi = &q[i][i];
        let lo = lower_int(&t, qi, rem);
        let hi = upper_int(&t, qi, rem);
        let mut yi = lo;
        while yi <= hi {
            y[i] = yi.clone();
            let v = Rat::from_integer(yi.clone()) + &t;
            let used = &(&v * &v) * qi;
            let rem2 = rem - &used;
            if rem2 >= Rat::zero() {
                if i == 0 {
                    if y.iter().any(|c| !c.is_zero()) {
                        // one representative per +/- pair
                        let last = y.iter().rposition(|c| !c.is_zero()).unwrap();
                        if y[last].is_positive() {
                            out.push(y.clone());
                            if out.len() > cap {
                                return Err(EnumError::TooManyVectors(cap));
                            }
                        }
                    }
                } else {
                    rec(i - 1, n, q, &rem2, y, out, cap)?;
                }
            }
            yi += 1;
        }
        y[i] = Int::zero();
        Ok(())
    }
    rec(n - 1, n, &q, bound, &mut y, &mut out, cap)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_counts() {
        let basis = IntMatrix::identity(2);
        let gram = IntMatrix::identity(2);
        // vectors of norm <= 4 in Z^2 up to sign: (0,1),(0,2),(1,0),(2,0),
        // (1,1),(-1,1),(1,2)... enumerate and compare against brute force
        let got = enumerate_short(&basis, &gram, &super::super::rat(4), 10_000).unwrap();
        let mut brute = 0;
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                if (a, b) == (0, 0) {
                    continue;
                }
                if a * a + b * b <= 4 {
                    brute += 1;
                }
            }
        }
        assert_eq!(got.len() * 2, brute);
    }

    #[test]
    fn skew_lattice() {
        let basis = IntMatrix::from_i64(&[&[1, 0], &[100, 1]]);
        let gram = IntMatrix::identity(2);
        let got = enumerate_short(&basis, &gram, &super::super::rat(2), 10_000).unwrap();
        // the basis is unimodular, so the lattice is all of Z^2; vectors of
        // norm <= 2 up to sign: (1,0),(0,1),(1,1),(1,-1)
        assert_eq!(got.len(), 4);
        for y in &got {
            let v = basis.mul_row(y);
            let norm: Int = v.iter().map(|x| x * x).sum();
            assert!(norm <= Int::from(2) && norm > Int::zero());
        }
    }
}
