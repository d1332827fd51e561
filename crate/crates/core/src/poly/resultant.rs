use super::{Poly, PolyRing};
use crate::ring::EuclideanDomain;
use crate::{Error, Result};

impl<D: EuclideanDomain> PolyRing<D> {
    /// Resultant of `a` and `b` (the Sylvester determinant), computed with
    /// the subresultant algorithm.
    pub fn resultant(&self, a: &Poly<D::Elem>, b: &Poly<D::Elem>) -> Result<D::Elem> {
        let d = self.base();
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if a.deg() == 0 {
            return Ok(d.pow(&a.coeffs()[0], b.deg() as u64));
        }
        if b.deg() == 0 {
            return Ok(d.pow(&b.coeffs()[0], a.deg() as u64));
        }
        let ca = self.content(a);
        let cb = self.content(b);
        let mut a = self.div_scalar(a, &ca).expect("content divides");
        let mut b = self.div_scalar(b, &cb).expect("content divides");
        let scale = d.mul(&d.pow(&ca, b.deg() as u64), &d.pow(&cb, a.deg() as u64));
        let mut negate = false;
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
            if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
                negate = true;
            }
        }
        let mut g = d.one();
        let mut h = d.one();
        loop {
            let delta = (a.deg() - b.deg()) as u64;
            if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
                negate = !negate;
            }
            let r = self.pseudo_rem(&a, &b)?;
            a = b;
            let den = d.mul(&g, &d.pow(&h, delta));
            b = self.div_scalar(&r, &den).expect("subresultant division is exact");
            g = a.lc().expect("nonzero").clone();
            h = if delta == 0 {
                h
            } else {
                d.exact_div(&d.pow(&g, delta), &d.pow(&h, delta - 1)).expect("exact")
            };
            if b.is_zero() {
                return Ok(d.zero());
            }
            if b.deg() == 0 {
                break;
            }
        }
        let da = a.deg() as u64;
        let lb = b.coeffs()[0].clone();
        let hh = if da == 0 {
            h
        } else {
            d.exact_div(&d.pow(&lb, da), &d.pow(&h, da - 1)).expect("exact")
        };
        let res = d.mul(&scale, &hh);
        Ok(if negate { d.neg(&res) } else { res })
    }
}

#[cfg(test)]
mod tests {
    use crate::integer::Integers;
    use crate::poly::{Poly, PolyRing};
    use num_bigint::BigInt;

    #[test]
    fn resultant_examples() {
        let r = PolyRing::new(Integers);
        let p = Poly::from_i64s;
        assert_eq!(r.resultant(&p(&[-1, 0, 1]), &p(&[1, 1])).unwrap(), BigInt::from(0));
        assert_eq!(r.resultant(&p(&[1, 0, 1]), &p(&[1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(r.resultant(&p(&[0, 1]), &p(&[0, 1])).unwrap(), BigInt::from(0));
        assert!(r.resultant(&p(&[]), &p(&[1, 1])).is_err());
    }
}
