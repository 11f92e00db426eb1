//! Primality testing and integer factorization for elementary divisors.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // this witness set is deterministic for all u64
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Prime factors (with multiplicity collapsed) of a u64.
pub fn factor_u64(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13] {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
    }
    let mut d = 17u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 2;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Prime factors of a positive BigInt elementary divisor.
///
/// Divisors of the matrices handled here are small in practice; anything
/// that survives trial division must still fit u64 or the input is treated
/// as out of scope for exact prime bounding.
pub fn factor_bigint(n: &BigInt) -> Result<Vec<u64>> {
    if n.is_zero() {
        return Err(Error::Invalid("cannot factor zero divisor".into()));
    }
    let mut n = n.clone();
    if n < BigInt::zero() {
        n = -n;
    }
    let mut out = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let bp = BigInt::from(p);
        if (&n % &bp).is_zero() {
            out.push(p);
            while (&n % &bp).is_zero() {
                n /= &bp;
            }
        }
    }
    if n.is_one() {
        return Ok(out);
    }
    match u64::try_from(&n) {
        Ok(rest) => {
            out.extend(factor_u64(rest));
            Ok(out)
        }
        Err(_) => Err(Error::Invalid(format!(
            "elementary divisor cofactor {n} too large to factor"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(7919));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(!is_prime(561)); // Carmichael
        assert!(is_prime(2_147_483_647));
    }

    #[test]
    fn factoring() {
        assert_eq!(factor_u64(360), vec![2, 3, 5]);
        assert_eq!(factor_u64(97), vec![97]);
        let n = BigInt::from(2u64) * BigInt::from(3u64) * BigInt::from(1_000_003u64);
        assert_eq!(factor_bigint(&n).unwrap(), vec![2, 3, 1_000_003]);
    }
}
