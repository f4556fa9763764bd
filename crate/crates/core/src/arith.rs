//! Small exact-arithmetic helpers shared across modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Floor of the integer square root. Panics on negative input.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative number");
    n.sqrt()
}

/// Exact integer square root, or `None` if `n` is not a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
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

/// Exact square root of a nonnegative rational, if it exists.
pub fn exact_sqrt_rational(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let num = exact_sqrt(q.numer())?;
    let den = exact_sqrt(q.denom())?;
    Some(BigRational::new(num, den))
}

/// Largest integer `x` with `x <= q`.
pub fn rational_floor(q: &BigRational) -> BigInt {
    q.floor().to_integer()
}

/// Smallest integer `x` with `x >= q`.
pub fn rational_ceil(q: &BigRational) -> BigInt {
    q.ceil().to_integer()
}

/// Trial-division factorization; fine at desk scale. Returns (prime, exponent)
/// pairs of |n| in increasing prime order.
pub fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() || n.is_one() {
        return out;
    }
    let mut p = BigInt::from(2);
    while &(&p * &p) <= &n {
        if (&n % &p).is_zero() {
            let mut e = 0u32;
            while (&n % &p).is_zero() {
                n /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// Squarefree part of a nonzero integer (sign preserved).
pub fn squarefree_part(n: &BigInt) -> BigInt {
    assert!(!n.is_zero());
    let mut s = BigInt::from(n.signum());
    for (p, e) in factor(n) {
        if e % 2 == 1 {
            s *= p;
        }
    }
    s
}

pub fn is_squarefree(n: i64) -> bool {
    if n == 0 {
        return false;
    }
    squarefree_part(&BigInt::from(n)).abs() == BigInt::from(n).abs()
}

/// Deterministic primality by trial division; inputs are desk-scale primes.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2i64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Legendre symbol (a|p) for an odd prime p, via Euler's criterion.
pub fn legendre(a: &BigInt, p: i64) -> i32 {
    debug_assert!(p > 2 && is_prime(p));
    let pp = BigInt::from(p);
    let a = a.mod_floor(&pp);
    if a.is_zero() {
        return 0;
    }
    let e = BigInt::from((p - 1) / 2);
    let r = a.modpow(&e, &pp);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// Kronecker symbol (a|n) for n ≥ 1.
pub fn kronecker(a: &BigInt, n: i64) -> i32 {
    assert!(n >= 1);
    if n == 1 {
        return 1;
    }
    let mut sym = 1i32;
    for (p, e) in factor(&BigInt::from(n)) {
        let p_i64: i64 = p.to_string().parse().unwrap();
        let s = if p_i64 == 2 {
            // (a|2): 0 if a even, 1 if a ≡ ±1 mod 8, -1 if a ≡ ±3 mod 8
            let m = a.mod_floor(&BigInt::from(8));
            let m: i64 = m.to_string().parse().unwrap();
            match m {
                1 | 7 => 1,
                3 | 5 => -1,
                _ => 0,
            }
        } else {
            legendre(a, p_i64)
        };
        if s == 0 {
            return 0;
        }
        if e % 2 == 1 {
            sym *= s;
        }
    }
    sym
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: &BigInt) -> u32 {
    assert!(!n.is_zero());
    let mut n = n.clone();
    let mut v = 0;
    while (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

/// p-adic valuation of a nonzero rational (may be negative).
pub fn valuation_rational(q: &BigRational, p: &BigInt) -> i64 {
    assert!(!q.is_zero());
    valuation(q.numer(), p) as i64 - valuation(q.denom(), p) as i64
}

/// Unit part of a rational at p: q / p^v(q), reduced mod p^k as an integer.
/// The denominator is inverted modulo p^k.
pub fn unit_part_mod(q: &BigRational, p: &BigInt, k: u32) -> BigInt {
    let v = valuation_rational(q, p);
    let pk = p.pow(k);
    let pv = if v >= 0 {
        p.pow(v as u32)
    } else {
        BigInt::one()
    };
    let (num, den) = if v >= 0 {
        (q.numer() / &pv, q.denom().clone())
    } else {
        (q.numer().clone(), q.denom() / p.pow((-v) as u32))
    };
    let num = num.mod_floor(&pk);
    let den = den.mod_floor(&pk);
    let dinv = mod_inverse(&den, &pk).expect("denominator invertible");
    (num * dinv).mod_floor(&pk)
}

/// Modular inverse by extended gcd, if it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let (g, x, _) = extended_gcd(&a.mod_floor(m), m);
    if g.is_one() {
        Some(x.mod_floor(m))
    } else {
        None
    }
}

/// Returns (g, x, y) with a·x + b·y = g = gcd(a, b), g ≥ 0.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// All primes up to and including `n`, by sieve.
pub fn primes_up_to(n: i64) -> Vec<i64> {
    if n < 2 {
        return vec![];
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as i64).collect()
}

/// Bound-checked conversion of a desk-scale BigInt.
pub fn to_i64(n: &BigInt) -> Result<i64> {
    n.to_string()
        .parse()
        .map_err(|_| Error::BoundExceeded(format!("{n} does not fit in 64 bits")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_sqrt_detects_squares() {
        assert_eq!(exact_sqrt(&BigInt::from(144)), Some(BigInt::from(12)));
        assert_eq!(exact_sqrt(&BigInt::from(145)), None);
        assert_eq!(exact_sqrt(&BigInt::from(0)), Some(BigInt::zero()));
    }

    #[test]
    fn factor_small() {
        let f = factor(&BigInt::from(360));
        assert_eq!(
            f,
            vec![
                (BigInt::from(2), 3),
                (BigInt::from(3), 2),
                (BigInt::from(5), 1)
            ]
        );
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_part(&BigInt::from(18)), BigInt::from(2));
        assert_eq!(squarefree_part(&BigInt::from(-12)), BigInt::from(-3));
        assert!(is_squarefree(10));
        assert!(!is_squarefree(12));
    }

    #[test]
    fn legendre_matches_tables() {
        assert_eq!(legendre(&BigInt::from(2), 7), 1);
        assert_eq!(legendre(&BigInt::from(3), 7), -1);
        assert_eq!(legendre(&BigInt::from(5), 13), -1);
        assert_eq!(legendre(&BigInt::from(14), 7), 0);
    }

    #[test]
    fn extended_gcd_identity() {
        let (g, x, y) = extended_gcd(&BigInt::from(240), &BigInt::from(46));
        assert_eq!(g, BigInt::from(2));
        assert_eq!(BigInt::from(240) * x + BigInt::from(46) * y, g);
    }

    #[test]
    fn mod_inverse_works() {
        let inv = mod_inverse(&BigInt::from(3), &BigInt::from(8)).unwrap();
        assert_eq!((inv * 3) % 8, BigInt::one());
        assert!(mod_inverse(&BigInt::from(2), &BigInt::from(8)).is_none());
    }

    #[test]
    fn unit_part_of_rationals() {
        // 12/5 at p=2: 12 = 4·3, unit part 3/5; 5^{-1} mod 8 = 5; 3·5 = 15 ≡ 7.
        let q = BigRational::new(BigInt::from(12), BigInt::from(5));
        assert_eq!(unit_part_mod(&q, &BigInt::from(2), 3), BigInt::from(7));
    }
}
