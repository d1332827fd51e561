//! Coefficient ring abstractions.
//!
//! Rings are descriptor objects: elements are plain values and every
//! operation goes through the descriptor, so fields whose arithmetic depends
//! on run-time data (a prime, a modulus, Zech tables) fit the same interface
//! as the integers.

use std::fmt::Debug;

use num_bigint::BigUint;
use rand::Rng;

pub trait Ring: Clone + Debug {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn pow_big(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// A finite field of order `p^degree`, with a fixed `F_p`-basis used for
/// coordinates and a fixed enumeration of its elements.
pub trait FiniteField: Field {
    /// Degree over the prime field.
    fn degree(&self) -> usize;

    fn order(&self) -> BigUint;

    /// Bijection `0..order` onto the field. Index 0 is zero, index 1 is one.
    fn elem_from_index(&self, index: &BigUint) -> Self::Elem;

    fn index_of(&self, a: &Self::Elem) -> BigUint;

    /// Coordinates over the prime field, length `degree()`.
    fn to_prime_coords(&self, a: &Self::Elem) -> Vec<u64>;

    fn random<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem;

    /// Inverse Frobenius: the unique `b` with `b^p = a`.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        let p = BigUint::from(self.characteristic());
        let e = self.order() / p;
        self.pow_big(a, &e)
    }
}

/// Integral domain with division with remainder and a canonical choice of
/// associate ("unit normal" form).
pub trait EuclideanDomain: Ring {
    /// `None` when `b` is zero.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> Option<(Self::Elem, Self::Elem)>;

    /// Unit `u` such that `a / u` is unit normal. One for zero.
    fn unit_part(&self, a: &Self::Elem) -> Self::Elem;

    /// Inverse of a unit.
    fn unit_inverse(&self, u: &Self::Elem) -> Self::Elem;

    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        let (q, r) = self.div_rem(a, b)?;
        self.is_zero(&r).then_some(q)
    }

    fn normalize(&self, a: &Self::Elem) -> Self::Elem {
        let u = self.unit_part(a);
        self.mul(a, &self.unit_inverse(&u))
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut x = a.clone();
        let mut y = b.clone();
        while !self.is_zero(&y) {
            let (_, r) = self.div_rem(&x, &y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        self.normalize(&x)
    }

    /// Returns `(g, s, t)` with `s a + t b = g`, `g` unit normal.
    fn xgcd(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem, Self::Elem) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !self.is_zero(&r1) {
            let (q, r) = self.div_rem(&r0, &r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let u = self.unit_inverse(&self.unit_part(&r0));
        (self.mul(&r0, &u), self.mul(&s0, &u), self.mul(&t0, &u))
    }

    /// Inverse of `a` modulo `m`, if it exists.
    fn inv_mod(&self, a: &Self::Elem, m: &Self::Elem) -> Option<Self::Elem> {
        let (g, s, _) = self.xgcd(a, m);
        if !self.is_one(&g) {
            return None;
        }
        let (_, r) = self.div_rem(&s, m)?;
        Some(r)
    }
}

/// A ring of integers of a global field together with what Hensel lifting
/// needs from it: residue fields at places and canonical lifts.
pub trait Order: EuclideanDomain {
    type Residue: FiniteField;

    /// Residue field at `place`; fails when `place` is not prime/irreducible.
    fn residue_field(&self, place: &Self::Elem) -> crate::Result<Self::Residue>;

    fn to_residue(&self, k: &Self::Residue, a: &Self::Elem) -> <Self::Residue as Ring>::Elem;

    /// Canonical representative of a residue class.
    fn from_residue(&self, k: &Self::Residue, a: &<Self::Residue as Ring>::Elem) -> Self::Elem;

    /// Canonical representative of `a` modulo `m`: symmetric remainder for
    /// the integers, remainder of degree `< deg m` for polynomial rings.
    fn reduce(&self, a: &Self::Elem, m: &Self::Elem) -> Self::Elem;

    /// Human readable form used in diagnostics.
    fn describe(&self, a: &Self::Elem) -> String;
}
