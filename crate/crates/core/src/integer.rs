//! The ring of integers and small number-theoretic helpers.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::fp::PrimeField;
use crate::ring::{EuclideanDomain, Order, Ring};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_int(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

impl EuclideanDomain for Integers {
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> Option<(BigInt, BigInt)> {
        if b.is_zero() {
            return None;
        }
        Some(a.div_mod_floor(b))
    }
    fn unit_part(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn unit_inverse(&self, u: &BigInt) -> BigInt {
        u.clone()
    }
    fn gcd(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a.gcd(b)
    }
}

impl Order for Integers {
    type Residue = PrimeField;

    fn residue_field(&self, place: &BigInt) -> Result<PrimeField> {
        let p = place
            .to_u64()
            .ok_or_else(|| Error::BadPlace(format!("{place} is not a small positive prime")))?;
        PrimeField::new(p).map_err(|_| Error::BadPlace(format!("{p} is not prime")))
    }
    fn to_residue(&self, k: &PrimeField, a: &BigInt) -> u64 {
        k.reduce_big(a)
    }
    fn from_residue(&self, k: &PrimeField, a: &u64) -> BigInt {
        symmetric_mod(&BigInt::from(*a), &BigInt::from(k.p()))
    }
    fn reduce(&self, a: &BigInt, m: &BigInt) -> BigInt {
        symmetric_mod(a, m)
    }
    fn describe(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

/// Representative of `a mod m` in `(-m/2, m/2]`, for `m > 0`.
pub fn symmetric_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    let twice: BigInt = &r << 1;
    if &twice > m {
        r - m
    } else {
        r
    }
}

/// `floor(sqrt(n))` for `n >= 0`.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}

/// `floor(sqrt(n))` for `n >= 0`, and whether it is exact.
pub fn isqrt_exact(n: &BigInt) -> (BigInt, bool) {
    let s = isqrt(n);
    let exact = &s * &s == *n;
    (s, exact)
}

/// Nearest integer to `a / (c * sqrt(n))` for `c, n > 0`, halves rounded away
/// from zero.
pub fn round_div_sqrt(a: &BigInt, c: &BigInt, n: &BigInt) -> BigInt {
    debug_assert!(c.is_positive() && n.is_positive());
    let mag = a.magnitude();
    if mag.is_zero() {
        return BigInt::zero();
    }
    // floor(2y) = floor(sqrt(4 a^2 / (c^2 n))) and round(y) = floor((floor(2y) + 1) / 2)
    let num = BigInt::from_biguint(Sign::Plus, mag * mag) << 2;
    let den = c * c * n;
    let two_y = isqrt(&(num / den));
    let r: BigInt = (two_y + 1) >> 1;
    if a.is_negative() {
        -r
    } else {
        r
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes `>= start` in increasing order.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start.max(2)..).filter(|&n| is_prime_u64(n))
}

/// Distinct prime divisors of `n`, by trial division.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `(p, w)` with `q = p^w`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let ps = prime_divisors(q);
    if ps.len() != 1 {
        return None;
    }
    let p = ps[0];
    let mut w = 0;
    let mut m = q;
    while m > 1 {
        m /= p;
        w += 1;
    }
    Some((p, w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn symmetric_lift_examples() {
        assert_eq!(symmetric_mod(&bi(6), &bi(7)), bi(-1));
        assert_eq!(symmetric_mod(&bi(3), &bi(7)), bi(3));
        assert_eq!(symmetric_mod(&bi(-3), &bi(7)), bi(-3));
        assert_eq!(symmetric_mod(&bi(5), &bi(10)), bi(5));
        assert_eq!(symmetric_mod(&bi(6), &bi(10)), bi(-4));
    }

    #[test]
    fn rounding_against_sqrt() {
        // 10 / (1 * sqrt(2)) = 7.07..
        assert_eq!(round_div_sqrt(&bi(10), &bi(1), &bi(2)), bi(7));
        assert_eq!(round_div_sqrt(&bi(-10), &bi(1), &bi(2)), bi(-7));
        // 3 / (2 * sqrt(1)) = 1.5 rounds away from zero
        assert_eq!(round_div_sqrt(&bi(3), &bi(2), &bi(1)), bi(2));
        assert_eq!(round_div_sqrt(&bi(1), &bi(3), &bi(1)), bi(0));
        for a in -200i64..200 {
            let y = a as f64 / (3.0 * 5f64.sqrt());
            let expect = y.abs().round() * y.signum();
            assert_eq!(round_div_sqrt(&bi(a), &bi(3), &bi(5)), bi(expect as i64), "a={a}");
        }
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(binomial(15, 7), BigUint::from(6435u32));
    }
}
