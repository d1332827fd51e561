//! Polynomials over a Euclidean domain `D`: content, pseudo-division,
//! subresultant gcd and squarefree decomposition in characteristic zero.

use super::{Poly, PolyRing};
use crate::ring::{EuclideanDomain, Ring};
use crate::{Error, Result};

/// `(factor, multiplicity)` pairs.
pub type SquarefreeDecomposition<E> = Vec<(Poly<E>, usize)>;

impl<D: EuclideanDomain> PolyRing<D> {
    /// Unit-normal gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self, p: &Poly<D::Elem>) -> D::Elem {
        let d = self.base();
        let mut g = d.zero();
        for c in p.coeffs() {
            g = d.gcd(&g, c);
            if d.is_one(&g) {
                break;
            }
        }
        g
    }

    /// `(c, q)` with `c * q = p`, `q` primitive and unit normal leading
    /// coefficient.
    pub fn content_primitive(&self, p: &Poly<D::Elem>) -> Result<(D::Elem, Poly<D::Elem>)> {
        let lc = p.lc().ok_or(Error::ZeroPolynomial)?;
        let d = self.base();
        let u = d.unit_part(lc);
        let c = d.mul(&self.content(p), &u);
        let q = self.poly(
            p.coeffs()
                .iter()
                .map(|a| d.exact_div(a, &c).expect("content divides every coefficient"))
                .collect(),
        );
        Ok((c, q))
    }

    pub fn primitive_part(&self, p: &Poly<D::Elem>) -> Poly<D::Elem> {
        if p.is_zero() {
            return Poly::zero();
        }
        self.content_primitive(p).expect("nonzero").1
    }

    /// Divides every coefficient exactly by `c`.
    pub fn div_scalar(&self, p: &Poly<D::Elem>, c: &D::Elem) -> Option<Poly<D::Elem>> {
        let d = self.base();
        p.coeffs()
            .iter()
            .map(|a| d.exact_div(a, c))
            .collect::<Option<Vec<_>>>()
            .map(|v| self.poly(v))
    }

    /// `lc(b)^(deg a - deg b + 1) a = q b + r` with `deg r < deg b`.
    pub fn pseudo_div_rem(
        &self,
        a: &Poly<D::Elem>,
        b: &Poly<D::Elem>,
    ) -> Result<(Poly<D::Elem>, Poly<D::Elem>)> {
        let lb = b.lc().ok_or(Error::DivisionByZero)?.clone();
        let d = self.base();
        let db = b.deg();
        if a.len() < b.len() {
            return Ok((Poly::zero(), a.clone()));
        }
        let mut r: Vec<D::Elem> = a.coeffs().to_vec();
        let steps = a.len() - db;
        let mut q = vec![d.zero(); steps];
        for k in (0..steps).rev() {
            let c = r[k + db].clone();
            for x in q.iter_mut() {
                *x = d.mul(x, &lb);
            }
            q[k] = c.clone();
            for x in r[..k + db].iter_mut() {
                *x = d.mul(x, &lb);
            }
            for (j, bj) in b.coeffs()[..db].iter().enumerate() {
                r[k + j] = d.sub(&r[k + j], &d.mul(&c, bj));
            }
            r.truncate(k + db);
        }
        Ok((self.poly(q), self.poly(r)))
    }

    pub fn pseudo_rem(&self, a: &Poly<D::Elem>, b: &Poly<D::Elem>) -> Result<Poly<D::Elem>> {
        Ok(self.pseudo_div_rem(a, b)?.1)
    }

    /// Exact quotient `a / b` in `D[X]`.
    pub fn exact_div_poly(&self, a: &Poly<D::Elem>, b: &Poly<D::Elem>) -> Result<Poly<D::Elem>> {
        let lb = b.lc().ok_or(Error::DivisionByZero)?;
        let d = self.base();
        let db = b.deg();
        if a.is_zero() {
            return Ok(Poly::zero());
        }
        if a.len() < b.len() {
            return Err(Error::InexactDivision);
        }
        let mut r: Vec<D::Elem> = a.coeffs().to_vec();
        let mut q = vec![d.zero(); a.len() - db];
        for k in (0..q.len()).rev() {
            let c = d.exact_div(&r[k + db], lb).ok_or(Error::InexactDivision)?;
            if d.is_zero(&c) {
                continue;
            }
            for (j, bj) in b.coeffs().iter().enumerate() {
                r[k + j] = d.sub(&r[k + j], &d.mul(&c, bj));
            }
            q[k] = c;
        }
        if r.iter().any(|c| !d.is_zero(c)) {
            return Err(Error::InexactDivision);
        }
        Ok(self.poly(q))
    }

    pub fn divides(&self, b: &Poly<D::Elem>, a: &Poly<D::Elem>) -> bool {
        self.exact_div_poly(a, b).is_ok()
    }

    /// gcd in `D[X]` by the subresultant remainder sequence; the result has
    /// unit normal leading coefficient.
    pub fn prs_gcd(&self, a: &Poly<D::Elem>, b: &Poly<D::Elem>) -> Poly<D::Elem> {
        let d = self.base();
        if a.is_zero() {
            return if b.is_zero() { Poly::zero() } else { self.normalize_poly(b) };
        }
        if b.is_zero() {
            return self.normalize_poly(a);
        }
        let (mut a, mut b) = if a.deg() >= b.deg() { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        let cont = d.gcd(&self.content(&a), &self.content(&b));
        a = self.primitive_part(&a);
        b = self.primitive_part(&b);
        let mut g = d.one();
        let mut h = d.one();
        loop {
            let delta = (a.deg() - b.deg()) as u64;
            let r = self.pseudo_rem(&a, &b).expect("nonzero divisor");
            if r.is_zero() {
                break;
            }
            if r.deg() == 0 {
                b = self.one();
                break;
            }
            a = b;
            let den = d.mul(&g, &d.pow(&h, delta));
            b = self.div_scalar(&r, &den).expect("subresultant division is exact");
            g = a.lc().expect("nonzero").clone();
            h = if delta == 0 {
                h
            } else {
                let num = d.pow(&g, delta);
                d.exact_div(&num, &d.pow(&h, delta - 1)).expect("exact")
            };
        }
        self.scale(&self.primitive_part(&b), &cont)
    }

    /// Scales so that the leading coefficient is unit normal.
    pub fn normalize_poly(&self, p: &Poly<D::Elem>) -> Poly<D::Elem> {
        match p.lc() {
            None => Poly::zero(),
            Some(lc) => {
                let d = self.base();
                let u = d.unit_inverse(&d.unit_part(lc));
                self.scale(p, &u)
            }
        }
    }

    /// Whether `gcd(p, p')` is constant. In positive characteristic a
    /// polynomial with vanishing derivative is reported inseparable.
    pub fn is_separable(&self, p: &Poly<D::Elem>) -> bool {
        let dp = self.derivative(p);
        if dp.is_zero() {
            return p.deg() == 0 && !p.is_zero();
        }
        self.prs_gcd(p, &dp).deg() == 0
    }

    /// Yun's algorithm for characteristic zero. Returns the unit-normal
    /// content-and-unit part and the decomposition of the primitive part.
    pub fn squarefree_char0(
        &self,
        f: &Poly<D::Elem>,
    ) -> Result<(D::Elem, SquarefreeDecomposition<D::Elem>)> {
        assert_eq!(self.characteristic(), 0, "Yun's algorithm needs characteristic zero");
        if f.deg() == 0 {
            return Err(if f.is_zero() { Error::ZeroPolynomial } else { Error::ConstantPolynomial });
        }
        let (c, f) = self.content_primitive(f)?;
        let df = self.derivative(&f);
        let g = self.primitive_part(&self.prs_gcd(&f, &df));
        let mut cc = self.exact_div_poly(&f, &g)?;
        let mut dd = self.sub(&self.exact_div_poly(&df, &g)?, &self.derivative(&cc));
        let mut out = Vec::new();
        let mut i = 1;
        while cc.deg() > 0 {
            let a = self.primitive_part(&self.prs_gcd(&cc, &dd));
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            cc = self.exact_div_poly(&cc, &a)?;
            dd = self.sub(&self.exact_div_poly(&dd, &a)?, &self.derivative(&cc));
            i += 1;
        }
        Ok((c, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integer::Integers;
    use num_bigint::BigInt;

    fn zx() -> PolyRing<Integers> {
        PolyRing::new(Integers)
    }
    fn p(cs: &[i64]) -> Poly<BigInt> {
        Poly::from_i64s(cs)
    }

    #[test]
    fn content_and_sign() {
        let r = zx();
        assert_eq!(r.content_primitive(&p(&[0, 4, 6])).unwrap(), (BigInt::from(2), p(&[0, 2, 3])));
        assert_eq!(r.content_primitive(&p(&[0, -3])).unwrap(), (BigInt::from(-3), p(&[0, 1])));
        assert_eq!(r.content_primitive(&p(&[5])).unwrap(), (BigInt::from(5), p(&[1])));
        assert_eq!(r.content_primitive(&p(&[])), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn gcd_examples() {
        let r = zx();
        assert_eq!(r.prs_gcd(&p(&[-1, 0, 1]), &p(&[1, -2, 1])), p(&[-1, 1]));
        assert_eq!(r.prs_gcd(&p(&[2, 0, 2]), &p(&[4, 4])), p(&[2]));
        let a = r.mul(&p(&[3, 0, 1]), &p(&[1, 2, 5]));
        let b = r.mul(&p(&[3, 0, 1]), &p(&[7, -1]));
        assert_eq!(r.prs_gcd(&a, &b), p(&[3, 0, 1]));
    }

    #[test]
    fn exact_division() {
        let r = zx();
        let a = r.mul(&p(&[1, 2]), &p(&[-3, 0, 4]));
        assert_eq!(r.exact_div_poly(&a, &p(&[1, 2])).unwrap(), p(&[-3, 0, 4]));
        assert_eq!(r.exact_div_poly(&p(&[1, 0, 1]), &p(&[1, 1])), Err(Error::InexactDivision));
        assert_eq!(r.exact_div_poly(&p(&[1, 1]), &p(&[0, 2])), Err(Error::InexactDivision));
        assert_eq!(r.exact_div_poly(&p(&[1]), &p(&[])), Err(Error::DivisionByZero));
    }

    #[test]
    fn yun_decomposition() {
        let r = zx();
        // (X-1)^2 (X+2)
        let f = r.mul(&r.pow_poly(&p(&[-1, 1]), 2), &p(&[2, 1]));
        let (c, parts) = r.squarefree_char0(&f).unwrap();
        assert_eq!(c, BigInt::from(1));
        assert_eq!(parts, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
        let (_, parts) = r.squarefree_char0(&p(&[1, 0, 1])).unwrap();
        assert_eq!(parts, vec![(p(&[1, 0, 1]), 1)]);
        assert_eq!(r.squarefree_char0(&p(&[3])).unwrap_err(), Error::ConstantPolynomial);
    }
}
