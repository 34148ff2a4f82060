//! Integer utilities: primality, factorization, valuations, modular helpers.

use super::Int;
use alloc::vec;
use alloc::vec::Vec;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn pow(base: &Int, exp: u64) -> Int {
    base.pow(exp as u32)
}

/// v_p(n) for n != 0.
pub fn valuation(n: &Int, p: &Int) -> u64 {
    assert!(!n.is_zero());
    let mut n = n.abs();
    let mut v = 0u64;
    loop {
        let (q, r) = n.div_rem(p);
        if r.is_zero() {
            v += 1;
            n = q;
        } else {
            return v;
        }
    }
}

pub fn mod_pow(base: &Int, exp: &Int, m: &Int) -> Int {
    assert!(exp.sign() != num_bigint::Sign::Minus);
    base.modpow(exp, m)
}

/// Deterministic Miller-Rabin for |n| < 3.3e24, probabilistic (but with a
/// generous base set) beyond.
pub fn is_prime(n: &Int) -> bool {
    let n = n.abs();
    if n < Int::from(2) {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let s = Int::from(small);
        if n == s {
            return true;
        }
        if (&n % &s).is_zero() {
            return false;
        }
    }
    let n1 = &n - 1;
    let s = valuation(&n1, &Int::from(2));
    let d = &n1 >> (s as usize);
    'bases: for a in [
        2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 61, 73, 1662803,
    ] {
        let a = Int::from(a) % &n;
        if a.is_zero() {
            continue;
        }
        let mut x = mod_pow(&a, &d, &n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 0..s {
            x = (&x * &x) % &n;
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &Int, seed: u64) -> Option<Int> {
    // Brent's cycle variant of Pollard rho.
    let c = Int::from(seed | 1);
    let f = |x: &Int| (x * x + &c) % n;
    let mut x = Int::from(seed % 7 + 2);
    let mut y;
    let mut d = Int::one();
    let mut q = Int::one();
    let mut ys = x.clone();
    let m = 64usize;
    let mut r = 1usize;
    while d.is_one() {
        y = x.clone();
        for _ in 0..r {
            x = f(&x);
        }
        let mut k = 0usize;
        while k < r && d.is_one() {
            ys = x.clone();
            for _ in 0..m.min(r - k) {
                x = f(&x);
                let diff = if y > x { &y - &x } else { &x - &y };
                q = (&q * diff) % n;
            }
            d = q.gcd(n);
            k += m;
        }
        r *= 2;
        if r > 1 << 22 {
            return None;
        }
    }
    if d == *n {
        // backtrack
        loop {
            ys = f(&ys);
            let diff = if ys > x { &ys - &x } else { &x - &ys };
            d = diff.gcd(n);
            if !d.is_one() {
                break;
            }
        }
    }
    if d.is_one() || d == *n {
        None
    } else {
        Some(d)
    }
}

/// Factor |n| into primes, returned sorted with multiplicities.
pub fn factor(n: &Int) -> Vec<(Int, u64)> {
    let mut n = n.abs();
    assert!(!n.is_zero());
    let mut out: Vec<(Int, u64)> = Vec::new();
    let push = |p: Int, out: &mut Vec<(Int, u64)>| {
        for e in out.iter_mut() {
            if e.0 == p {
                e.1 += 1;
                return;
            }
        }
        out.push((p, 1));
    };
    // trial division
    let mut d = 2u64;
    while d < 100_000 && Int::from(d).pow(2) <= n {
        let di = Int::from(d);
        while (&n % &di).is_zero() {
            n = &n / &di;
            push(di.clone(), &mut out);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    // rho on the remaining part
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            push(m, &mut out);
            continue;
        }
        let mut found = None;
        for seed in 1..64u64 {
            if let Some(d) = pollard_brent(&m, seed.wrapping_mul(0x9e3779b9)) {
                found = Some(d);
                break;
            }
        }
        let d = found.expect("factorization failed: increase rho attempts");
        stack.push(&m / &d);
        stack.push(d);
    }
    out.sort();
    out
}

/// Integer square root check: Some(r) iff n = r^2, n >= 0.
pub fn perfect_sqrt(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Deterministic xorshift for algorithm-internal pseudo-randomness
/// (equal-degree splitting, shift search). Reproducible run-to-run.
#[derive(Clone)]
pub struct XorShift(pub u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed | 1)
    }
    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small() {
        let primes = [2u64, 3, 5, 7, 97, 257, 65537, 2147483647];
        for p in primes {
            assert!(is_prime(&Int::from(p)), "{p}");
        }
        for c in [1u64, 4, 9, 15, 91, 561, 65535, 4294967297] {
            assert!(!is_prime(&Int::from(c)), "{c}");
        }
    }

    #[test]
    fn factor_roundtrip() {
        for n in [2u64 * 3 * 3 * 17, 2u64.pow(31), 1000003, 600851475143] {
            let f = factor(&Int::from(n));
            let mut prod = Int::one();
            for (p, e) in &f {
                assert!(is_prime(p));
                prod *= p.pow(*e as u32);
            }
            assert_eq!(prod, Int::from(n));
        }
    }

    #[test]
    fn valuations() {
        assert_eq!(valuation(&Int::from(48), &Int::from(2)), 4);
        assert_eq!(valuation(&Int::from(-27), &Int::from(3)), 3);
        assert_eq!(valuation(&Int::from(5), &Int::from(3)), 0);
    }
}
