//! Generic simple extensions `F[z]/(m(z))` of a finite field.
//!
//! Used for residue fields `F_q[t]/(v)` at places of degree > 1, and as an
//! independent reference implementation for the table fields.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rand::Rng;

use crate::ff_factor::is_irreducible;
use crate::poly::{Poly, PolyRing};
use crate::ring::{EuclideanDomain, Field, FiniteField, Order, Ring};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField<F: FiniteField> {
    ring: PolyRing<F>,
    modulus: Poly<F::Elem>,
}

impl<F: FiniteField> ExtField<F> {
    /// `modulus` must be monic and irreducible over the base field.
    pub fn new(base: F, modulus: Poly<F::Elem>) -> Result<Self> {
        let ring = PolyRing::new(base);
        if modulus.deg() == 0 || !ring.is_monic(&modulus) {
            return Err(Error::InvalidField("extension modulus must be monic and nonconstant".into()));
        }
        if !is_irreducible(&ring, &modulus)? {
            return Err(Error::InvalidField("extension modulus is not irreducible".into()));
        }
        Ok(ExtField { ring, modulus })
    }

    pub fn base(&self) -> &F {
        self.ring.base()
    }

    pub fn poly_ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn modulus(&self) -> &Poly<F::Elem> {
        &self.modulus
    }

    pub fn reduce(&self, a: Poly<F::Elem>) -> Poly<F::Elem> {
        if a.len() <= self.modulus.deg() {
            a
        } else {
            self.ring.div_rem_monic(&a, &self.modulus).1
        }
    }

    /// Embeds a base field element.
    pub fn embed(&self, c: F::Elem) -> Poly<F::Elem> {
        self.ring.constant(c)
    }
}

impl<F: FiniteField> Ring for ExtField<F> {
    type Elem = Poly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.ring.one()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.add(a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.sub(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.ring.neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.reduce(self.ring.mul(a, b))
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.ring.from_int(n)
    }
    fn characteristic(&self) -> u64 {
        self.ring.characteristic()
    }
}

impl<F: FiniteField> Field for ExtField<F> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.is_zero() {
            return None;
        }
        self.ring.inv_mod(a, &self.modulus)
    }
}

impl<F: FiniteField> FiniteField for ExtField<F> {
    fn degree(&self) -> usize {
        self.base().degree() * self.modulus.deg()
    }
    fn order(&self) -> BigUint {
        num_traits::pow(self.base().order(), self.modulus.deg())
    }
    fn elem_from_index(&self, index: &BigUint) -> Self::Elem {
        let q = self.base().order();
        let mut idx = index % self.order();
        let mut cs = Vec::with_capacity(self.modulus.deg());
        for _ in 0..self.modulus.deg() {
            let (d, r) = idx.div_rem(&q);
            cs.push(self.base().elem_from_index(&r));
            idx = d;
        }
        self.ring.poly(cs)
    }
    fn index_of(&self, a: &Self::Elem) -> BigUint {
        let q = self.base().order();
        a.coeffs()
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * &q + self.base().index_of(c))
    }
    fn to_prime_coords(&self, a: &Self::Elem) -> Vec<u64> {
        let zero = self.base().zero();
        (0..self.modulus.deg())
            .flat_map(|i| self.base().to_prime_coords(a.coeff(i).unwrap_or(&zero)))
            .collect()
    }
    fn random<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem {
        let cs = (0..self.modulus.deg()).map(|_| self.base().random(rng)).collect();
        self.ring.poly(cs)
    }
}

/// `F[t]` as the ring of integers of `F(t)`; places are monic irreducible
/// polynomials and the residue field at `v` is `F[t]/(v)`.
impl<F: FiniteField> Order for PolyRing<F> {
    type Residue = ExtField<F>;

    fn residue_field(&self, place: &Poly<F::Elem>) -> Result<ExtField<F>> {
        if place.deg() == 0 || !self.is_monic(place) {
            return Err(Error::BadPlace("a place must be monic of positive degree".into()));
        }
        ExtField::new(self.base().clone(), place.clone())
            .map_err(|_| Error::BadPlace(format!("{} is not irreducible", self.describe(place))))
    }
    fn to_residue(&self, k: &ExtField<F>, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        k.reduce(a.clone())
    }
    fn from_residue(&self, _k: &ExtField<F>, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        a.clone()
    }
    fn reduce(&self, a: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.len() <= m.deg() {
            a.clone()
        } else {
            self.rem(a, m)
        }
    }
    fn describe(&self, a: &Poly<F::Elem>) -> String {
        describe_poly(self.base(), a, "t")
    }
}

/// Plain text form of a polynomial over a finite field. Coefficients of a
/// prime field print as integers, others as their prime-field coordinates.
pub fn describe_poly<F: FiniteField>(k: &F, a: &Poly<F::Elem>, var: &str) -> String {
    if a.is_zero() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (i, c) in a.coeffs().iter().enumerate().rev() {
        if k.is_zero(c) {
            continue;
        }
        let cs = if k.degree() == 1 {
            k.index_of(c).to_string()
        } else {
            let v: Vec<String> = k.to_prime_coords(c).iter().map(|x| x.to_string()).collect();
            format!("({})", v.join(","))
        };
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        terms.push(match (k.is_one(c) && i > 0, mono.is_empty()) {
            (true, _) => mono,
            (false, true) => cs,
            (false, false) => format!("{cs}*{mono}"),
        });
    }
    terms.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::PrimeField;

    #[test]
    fn f4_arithmetic() {
        let f2 = PrimeField::new(2).unwrap();
        let r = PolyRing::new(f2);
        let f4 = ExtField::new(f2, r.poly(vec![1, 1, 1])).unwrap();
        let z = r.x();
        // z^2 = z + 1
        assert_eq!(f4.mul(&z, &z), r.poly(vec![1, 1]));
        assert_eq!(f4.mul(&z, &f4.inv(&z).unwrap()), f4.one());
        assert_eq!(f4.order(), BigUint::from(4u32));
        for i in 0u32..4 {
            let e = f4.elem_from_index(&BigUint::from(i));
            assert_eq!(f4.index_of(&e), BigUint::from(i));
        }
        assert!(ExtField::new(f2, r.poly(vec![1, 0, 1])).is_err());
    }
}
