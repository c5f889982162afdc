//! Small number-theoretic helpers: gcd, divisors, Euler's totient and the
//! Möbius function.
//!
//! Everything here works by trial division; the moduli in this crate stay
//! at desk scale (n ≤ 64 in the sweeps), so a sieve would be overkill.

use alloc::vec::Vec;

/// Greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// All positive divisors of `n` in ascending order. Empty for `n = 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Prime factorization as `(prime, exponent)` pairs, ascending primes.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient φ(n); `phi(0) = 0`.
pub fn phi(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut result = n;
    for (p, _) in factorize(n) {
        result = result / p * (p - 1);
    }
    result
}

/// Möbius function μ(n): 0 if `n` has a squared prime factor, otherwise
/// (−1)^(number of prime factors). `moebius(1) = 1`.
pub fn moebius(n: u64) -> i64 {
    if n == 0 {
        return 0;
    }
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if factors.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Integer square root via Newton iteration; `None` if `n` is not a perfect
/// square.
pub fn perfect_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let n = n as u64;
    let mut r = (libm::sqrt(n as f64)) as u64;
    // Float sqrt can be off by one at the integer boundary.
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    if r * r == n {
        Some(r as i64)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basic() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(7, 0), 7);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(1, 999), 1);
    }

    #[test]
    fn divisors_ascending() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(7), vec![1, 7]);
    }

    #[test]
    fn phi_small_values() {
        let expected = [1u64, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(phi(i as u64 + 1), e);
        }
    }

    #[test]
    fn moebius_small_values() {
        let expected = [1i64, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(moebius(i as u64 + 1), e);
        }
    }

    #[test]
    fn totient_sums_over_divisors() {
        // Σ_{d|n} φ(d) = n
        for n in 1..=64u64 {
            let s: u64 = divisors(n).iter().map(|&d| phi(d)).sum();
            assert_eq!(s, n);
        }
    }

    #[test]
    fn perfect_sqrt_detects_squares() {
        assert_eq!(perfect_sqrt(0), Some(0));
        assert_eq!(perfect_sqrt(1), Some(1));
        assert_eq!(perfect_sqrt(4), Some(2));
        assert_eq!(perfect_sqrt(5), None);
        assert_eq!(perfect_sqrt(-1), None);
        assert_eq!(perfect_sqrt(10_000), Some(100));
    }
}
