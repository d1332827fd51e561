//! Polynomials over a field: Euclidean division, gcd, modular powers.

use num_bigint::BigUint;

use super::{Poly, PolyRing};
use crate::ring::{EuclideanDomain, Field, Ring};

impl<F: Field> PolyRing<F> {
    /// `None` for a zero divisor.
    pub fn divmod(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Option<(Poly<F::Elem>, Poly<F::Elem>)> {
        let lc = b.lc()?;
        let k = self.base().inv(lc)?;
        let bm = self.scale(b, &k);
        let (q, r) = self.div_rem_monic(a, &bm);
        Some((self.scale(&q, &k), r))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.divmod(a, b).expect("nonzero modulus").1
    }

    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.lc() {
            None => Poly::zero(),
            Some(c) => {
                let k = self.base().inv(c).expect("nonzero leading coefficient");
                self.scale(a, &k)
            }
        }
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd_monic(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    pub fn mul_mod(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.rem(&self.mul(a, b), m)
    }

    pub fn pow_mod(&self, a: &Poly<F::Elem>, e: &BigUint, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut acc = self.rem(&self.one(), m);
        let base = self.rem(a, m);
        for i in (0..e.bits()).rev() {
            acc = self.mul_mod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mul_mod(&acc, &base, m);
            }
        }
        acc
    }
}

impl<F: Field> EuclideanDomain for PolyRing<F> {
    fn div_rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Option<(Poly<F::Elem>, Poly<F::Elem>)> {
        self.divmod(a, b)
    }
    fn unit_part(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.lc() {
            Some(c) => self.constant(c.clone()),
            None => self.one(),
        }
    }
    fn unit_inverse(&self, u: &Poly<F::Elem>) -> Poly<F::Elem> {
        let c = u.lc().expect("unit is nonzero");
        self.constant(self.base().inv(c).expect("unit is invertible"))
    }
    fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.gcd_monic(a, b)
    }
}
