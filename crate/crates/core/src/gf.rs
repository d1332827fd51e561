//! Table-driven finite fields `F_q = F_p[z]/(m(z))`.
//!
//! Nonzero elements are stored by their discrete logarithm with respect to a
//! primitive element, so multiplication is an index addition and addition
//! goes through a Zech logarithm table. The public coordinate view is the
//! vector of residue coefficients of `z^0..z^(w-1)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::ff_factor::{is_irreducible, nth_irreducible};
use crate::fp::PrimeField;
use crate::integer::prime_divisors;
use crate::poly::PolyRing;
use crate::ring::{Field, FiniteField, Ring};
use crate::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 22;

/// Element of a [`GaloisField`]. Only meaningful together with its field.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct GfElem(u32);

struct Tables {
    p: u64,
    w: usize,
    q: u64,
    /// Monic modulus over `F_p`, low to high, length `w + 1`.
    modulus: Vec<u64>,
    /// `exp[k]` = coordinate index of `g^k`.
    exp: Vec<u32>,
    /// coordinate index -> element.
    from_index: Vec<u32>,
    /// `zech[k]` = element `1 + g^k`.
    zech: Vec<u32>,
    neg_one_log: u32,
}

#[derive(Clone)]
pub struct GaloisField {
    t: Arc<Tables>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}, m={:?})", self.t.p, self.t.w, self.t.modulus)
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t)
            || (self.t.p == other.t.p && self.t.modulus == other.t.modulus)
    }
}
impl Eq for GaloisField {}

fn digits(mut idx: u64, p: u64, w: usize) -> Vec<u64> {
    let mut v = Vec::with_capacity(w);
    for _ in 0..w {
        v.push(idx % p);
        idx /= p;
    }
    v
}

fn undigits(v: &[u64], p: u64) -> u64 {
    v.iter().rev().fold(0, |acc, &d| acc * p + d)
}

impl GaloisField {
    /// `F_p` as a table field (modulus `z`).
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// `F_{p^w}` with the given monic irreducible modulus (low to high, over
    /// `F_p`), or the lexicographically smallest one when `None`.
    pub fn new(p: u64, w: usize, modulus: Option<Vec<u64>>) -> Result<Self> {
        let fp = PrimeField::new(p)?;
        if w == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(w as u32).filter(|&q| q <= MAX_ORDER as u128);
        let q = q.ok_or_else(|| {
            Error::InvalidField(format!("field order {p}^{w} exceeds {MAX_ORDER}"))
        })? as u64;
        let fpx = PolyRing::new(fp);
        let m = match modulus {
            Some(cs) => {
                let m = fpx.poly(cs.iter().map(|&c| c % p).collect());
                if m.deg() != w || !fpx.is_monic(&m) {
                    return Err(Error::InvalidField(format!("modulus must be monic of degree {w}")));
                }
                if !is_irreducible(&fpx, &m)? {
                    return Err(Error::InvalidField("modulus is not irreducible".into()));
                }
                m
            }
            None => nth_irreducible(&fp, w, 0)?,
        };
        let modulus = m.coeffs().to_vec();
        let mulmod = |a: &[u64], b: &[u64]| -> Vec<u64> {
            let pa = fpx.poly(a.to_vec());
            let pb = fpx.poly(b.to_vec());
            let r = fpx.rem(&fpx.mul(&pa, &pb), &m);
            let mut v = r.into_coeffs();
            v.resize(w, 0);
            v
        };
        let order = q - 1;
        let factors = prime_divisors(order);
        let pow = |a: &[u64], mut e: u64| -> Vec<u64> {
            let mut acc = digits(1, p, w);
            let mut base = a.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(&acc, &base);
                }
                base = mulmod(&base, &base);
                e >>= 1;
            }
            acc
        };
        let one = digits(1, p, w);
        let gen = (1..q)
            .map(|i| digits(i, p, w))
            .find(|c| factors.iter().all(|&l| pow(c, order / l) != one))
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut from_index = vec![0u32; q as usize];
        let mut cur = one.clone();
        for k in 0..order {
            let idx = undigits(&cur, p);
            exp.push(idx as u32);
            from_index[idx as usize] = (k + 1) as u32;
            cur = mulmod(&cur, &gen);
        }
        // 1 + g^k: add 1 to the constant coordinate.
        let zech = exp
            .iter()
            .map(|&idx| {
                let mut d = digits(idx as u64, p, w);
                d[0] = (d[0] + 1) % p;
                from_index[undigits(&d, p) as usize]
            })
            .collect();
        let neg_one_log = if p == 2 { 0 } else { (order / 2) as u32 };
        Ok(GaloisField {
            t: Arc::new(Tables { p, w, q, modulus, exp, from_index, zech, neg_one_log }),
        })
    }

    pub fn p(&self) -> u64 {
        self.t.p
    }
    pub fn w(&self) -> usize {
        self.t.w
    }
    pub fn q(&self) -> u64 {
        self.t.q
    }
    pub fn modulus(&self) -> &[u64] {
        &self.t.modulus
    }

    pub fn from_coords(&self, coords: &[u64]) -> GfElem {
        let mut v: Vec<u64> = coords.iter().map(|&c| c % self.t.p).collect();
        if v.len() > self.t.w {
            // reduce modulo m(z)
            let fpx = PolyRing::new(PrimeField::new(self.t.p).expect("prime"));
            let r = fpx.rem(&fpx.poly(v), &fpx.poly(self.t.modulus.clone()));
            v = r.into_coeffs();
        }
        v.resize(self.t.w, 0);
        GfElem(self.t.from_index[undigits(&v, self.t.p) as usize])
    }

    pub fn coords(&self, a: GfElem) -> Vec<u64> {
        digits(self.index(a), self.t.p, self.t.w)
    }

    /// Coordinate index `sum c_k p^k`.
    pub fn index(&self, a: GfElem) -> u64 {
        if a.0 == 0 {
            0
        } else {
            self.t.exp[(a.0 - 1) as usize] as u64
        }
    }

    pub fn from_index(&self, idx: u64) -> GfElem {
        GfElem(self.t.from_index[(idx % self.t.q) as usize])
    }

    /// Residue class of the generator symbol `z`.
    pub fn z(&self) -> GfElem {
        self.from_coords(&[0, 1])
    }

    /// All elements in coordinate-index order.
    pub fn elements(&self) -> impl Iterator<Item = GfElem> + '_ {
        (0..self.t.q).map(|i| self.from_index(i))
    }

    /// Wraps an element with its field for context-checked arithmetic.
    pub fn elem(&self, a: GfElem) -> FqElem {
        FqElem { field: self.clone(), value: a }
    }

    fn log(&self, a: GfElem) -> u64 {
        (a.0 - 1) as u64
    }
    fn from_log(&self, l: u64) -> GfElem {
        GfElem((l % (self.t.q - 1)) as u32 + 1)
    }
}

impl Ring for GaloisField {
    type Elem = GfElem;

    fn zero(&self) -> GfElem {
        GfElem(0)
    }
    fn one(&self) -> GfElem {
        GfElem(1)
    }
    fn is_zero(&self, a: &GfElem) -> bool {
        a.0 == 0
    }
    fn is_one(&self, a: &GfElem) -> bool {
        a.0 == 1
    }
    fn add(&self, a: &GfElem, b: &GfElem) -> GfElem {
        if a.0 == 0 {
            return *b;
        }
        if b.0 == 0 {
            return *a;
        }
        let order = self.t.q - 1;
        let (la, lb) = (self.log(*a), self.log(*b));
        let d = (lb + order - la) % order;
        let z = self.t.zech[d as usize];
        if z == 0 {
            GfElem(0)
        } else {
            self.from_log(la + (z - 1) as u64)
        }
    }
    fn sub(&self, a: &GfElem, b: &GfElem) -> GfElem {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &GfElem) -> GfElem {
        if a.0 == 0 {
            *a
        } else {
            self.from_log(self.log(*a) + self.t.neg_one_log as u64)
        }
    }
    fn mul(&self, a: &GfElem, b: &GfElem) -> GfElem {
        if a.0 == 0 || b.0 == 0 {
            GfElem(0)
        } else {
            self.from_log(self.log(*a) + self.log(*b))
        }
    }
    fn from_int(&self, n: i64) -> GfElem {
        let r = n.rem_euclid(self.t.p as i64) as u64;
        GfElem(self.t.from_index[r as usize])
    }
    fn characteristic(&self) -> u64 {
        self.t.p
    }
    fn pow(&self, a: &GfElem, e: u64) -> GfElem {
        if e == 0 {
            return GfElem(1);
        }
        if a.0 == 0 {
            return GfElem(0);
        }
        let order = self.t.q - 1;
        let l = (self.log(*a) as u128 * (e % order) as u128 % order as u128) as u64;
        self.from_log(l)
    }
}

impl Field for GaloisField {
    fn inv(&self, a: &GfElem) -> Option<GfElem> {
        if a.0 == 0 {
            return None;
        }
        let order = self.t.q - 1;
        Some(self.from_log(order - self.log(*a)))
    }
}

impl FiniteField for GaloisField {
    fn degree(&self) -> usize {
        self.t.w
    }
    fn order(&self) -> BigUint {
        BigUint::from(self.t.q)
    }
    fn elem_from_index(&self, index: &BigUint) -> GfElem {
        let i = (index % self.t.q).to_u64().expect("fits");
        self.from_index(i)
    }
    fn index_of(&self, a: &GfElem) -> BigUint {
        BigUint::from(self.index(*a))
    }
    fn to_prime_coords(&self, a: &GfElem) -> Vec<u64> {
        self.coords(*a)
    }
    fn random<G: Rng + ?Sized>(&self, rng: &mut G) -> GfElem {
        self.from_index(rng.gen_range(0..self.t.q))
    }
    fn pth_root(&self, a: &GfElem) -> GfElem {
        self.pow(a, self.t.q / self.t.p)
    }
}

/// An `F_q` element bundled with its field, for callers that want
/// arithmetic checked against mixing contexts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqElem {
    field: GaloisField,
    value: GfElem,
}

impl FqElem {
    pub fn field(&self) -> &GaloisField {
        &self.field
    }
    pub fn value(&self) -> GfElem {
        self.value
    }
    pub fn coords(&self) -> Vec<u64> {
        self.field.coords(self.value)
    }

    fn check(&self, other: &FqElem) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &FqElem) -> Result<FqElem> {
        self.check(other)?;
        Ok(self.field.elem(self.field.add(&self.value, &other.value)))
    }
    pub fn checked_sub(&self, other: &FqElem) -> Result<FqElem> {
        self.check(other)?;
        Ok(self.field.elem(self.field.sub(&self.value, &other.value)))
    }
    pub fn checked_mul(&self, other: &FqElem) -> Result<FqElem> {
        self.check(other)?;
        Ok(self.field.elem(self.field.mul(&self.value, &other.value)))
    }
    pub fn checked_div(&self, other: &FqElem) -> Result<FqElem> {
        self.check(other)?;
        let v = self.field.div(&self.value, &other.value).ok_or(Error::DivisionByZero)?;
        Ok(self.field.elem(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext::ExtField;

    #[test]
    fn default_moduli() {
        assert_eq!(GaloisField::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(GaloisField::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(GaloisField::new(5, 1, None).unwrap().modulus(), &[0, 1]);
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(GaloisField::new(4, 1, None).is_err());
        assert!(GaloisField::new(3, 2, Some(vec![2, 0, 1])).is_err());
        assert!(GaloisField::new(2, 30, None).is_err());
    }

    /// Table arithmetic against the generic `F_p[z]/(m)` implementation.
    #[test]
    fn matches_generic_extension() {
        for (p, w) in [(2, 1), (3, 1), (2, 2), (3, 2), (2, 3), (5, 2)] {
            let gf = GaloisField::new(p, w, None).unwrap();
            let fp = PrimeField::new(p).unwrap();
            let m = PolyRing::new(fp).poly(gf.modulus().to_vec());
            let ext = ExtField::new(fp, m).unwrap();
            let to_ext = |a: GfElem| ext.reduce(PolyRing::new(fp).poly(gf.coords(a)));
            for a in gf.elements() {
                for b in gf.elements() {
                    assert_eq!(to_ext(gf.add(&a, &b)), ext.add(&to_ext(a), &to_ext(b)));
                    assert_eq!(to_ext(gf.mul(&a, &b)), ext.mul(&to_ext(a), &to_ext(b)));
                    assert_eq!(to_ext(gf.sub(&a, &b)), ext.sub(&to_ext(a), &to_ext(b)));
                }
                if !gf.is_zero(&a) {
                    assert_eq!(gf.mul(&a, &gf.inv(&a).unwrap()), gf.one());
                }
                assert_eq!(gf.pow(&gf.pth_root(&a), p), a);
            }
        }
    }

    #[test]
    fn context_mismatch_is_reported() {
        let f4 = GaloisField::new(2, 2, None).unwrap();
        let f9 = GaloisField::new(3, 2, None).unwrap();
        let a = f4.elem(f4.z());
        let b = f9.elem(f9.z());
        assert_eq!(a.checked_add(&b), Err(Error::ContextMismatch));
        assert_eq!(a.checked_mul(&a).unwrap().coords(), vec![1, 1]);
        assert_eq!(a.checked_div(&f4.elem(f4.zero())), Err(Error::DivisionByZero));
    }
}
