use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::scalar::Scalar;

/// Euler's φ by trial-division factorization; `totient(0) = 0`.
pub fn totient(q: u64) -> u64 {
    let (mut n, mut out) = (q, q);
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// `φ(0..=q_max)` by sieve.
pub fn totients(q_max: u64) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=q_max).collect();
    for p in 2..=q_max as usize {
        if phi[p] == p as u64 {
            for m in (p..=q_max as usize).step_by(p) {
                phi[m] -= phi[m] / p as u64;
            }
        }
    }
    phi
}

/// `Σ_{q=1}^{Q} φ(q)`.
pub fn totient_sum(q_max: u64) -> u64 {
    totients(q_max).iter().skip(1).sum()
}

/// `Σ_{q=1}^{Q} φ(q)/q²`, exactly.
pub fn totient_sq_sum(q_max: u64) -> Scalar {
    let phi = totients(q_max);
    let mut acc = BigRational::zero();
    for (q, &f) in phi.iter().enumerate().skip(1) {
        let q = BigInt::from(q);
        acc += BigRational::new(BigInt::from(f), &q * &q);
    }
    Scalar::Exact(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn examples() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient_sum(4), 6);
        assert_eq!(totient_sq_sum(4), Scalar::ratio(115, 72));
    }

    #[test]
    fn sieve_matches_gcd_count() {
        let phi = totients(300);
        for q in 1..=300u64 {
            let brute = (1..=q).filter(|&p| gcd(p, q) == 1).count() as u64;
            assert_eq!(phi[q as usize], brute);
            assert_eq!(totient(q), brute);
        }
    }
}
