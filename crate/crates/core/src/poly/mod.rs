//! Dense univariate polynomials over an arbitrary coefficient ring.

mod domain;
mod field;
mod resultant;

pub use domain::SquarefreeDecomposition;

use num_bigint::BigInt;

use crate::integer::Integers;
use crate::ring::Ring;

/// Dense polynomial, `coeffs[i]` is the coefficient of `X^i`. Trailing zeros
/// are never stored, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Hash, Default, PartialOrd, Ord)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl Poly<BigInt> {
    /// Integer polynomial from low-to-high coefficients.
    pub fn from_i64s(cs: &[i64]) -> Self {
        PolyRing::new(Integers).poly(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Squared L2 norm of the coefficient vector.
    pub fn l2_norm_sq(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }
}

/// The polynomial ring `R[X]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<R> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// Builds a canonical polynomial, dropping trailing zeros.
    pub fn poly(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.poly(vec![c])
    }

    pub fn monomial(&self, c: R::Elem, k: usize) -> Poly<R::Elem> {
        if self.base.is_zero(&c) {
            return Poly::zero();
        }
        let mut v = vec![self.base.zero(); k];
        v.push(c);
        Poly { coeffs: v }
    }

    /// The variable `X`.
    pub fn x(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn coeff_or_zero(&self, p: &Poly<R::Elem>, i: usize) -> R::Elem {
        p.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn is_monic(&self, p: &Poly<R::Elem>) -> bool {
        p.lc().is_some_and(|c| self.base.is_one(c))
    }

    pub fn scale(&self, p: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.poly(p.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    pub fn shift(&self, p: &Poly<R::Elem>, k: usize) -> Poly<R::Elem> {
        if p.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![self.base.zero(); k];
        v.extend(p.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn derivative(&self, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.poly(
            p.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.base.mul(&self.base.from_int(i as i64), c))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, p: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        p.coeffs
            .iter()
            .rev()
            .fold(self.base.zero(), |acc, c| self.base.add(&self.base.mul(&acc, x), c))
    }

    /// `p(q(X))`.
    pub fn compose(&self, p: &Poly<R::Elem>, q: &Poly<R::Elem>) -> Poly<R::Elem> {
        p.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            self.add(&self.mul(&acc, q), &self.constant(c.clone()))
        })
    }

    pub fn map<S: Ring>(
        &self,
        p: &Poly<R::Elem>,
        target: &PolyRing<S>,
        f: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S::Elem> {
        target.poly(p.coeffs.iter().map(f).collect())
    }

    /// Division by a monic polynomial, valid over any ring.
    pub fn div_rem_monic(
        &self,
        a: &Poly<R::Elem>,
        b: &Poly<R::Elem>,
    ) -> (Poly<R::Elem>, Poly<R::Elem>) {
        debug_assert!(self.is_monic(b), "divisor must be monic");
        let db = b.deg();
        if a.len() < b.len() {
            return (Poly::zero(), a.clone());
        }
        let mut r = a.coeffs.clone();
        let mut q = vec![self.base.zero(); a.len() - db];
        for k in (0..q.len()).rev() {
            let c = r[k + db].clone();
            if self.base.is_zero(&c) {
                continue;
            }
            for (j, bj) in b.coeffs[..db].iter().enumerate() {
                r[k + j] = self.base.sub(&r[k + j], &self.base.mul(&c, bj));
            }
            r[k + db] = self.base.zero();
            q[k] = c;
        }
        r.truncate(db);
        (self.poly(q), self.poly(r))
    }

    pub fn pow_poly(&self, p: &Poly<R::Elem>, e: u64) -> Poly<R::Elem> {
        Ring::pow(self, p, e)
    }

    pub fn product<'a, I>(&self, items: I) -> Poly<R::Elem>
    where
        I: IntoIterator<Item = &'a Poly<R::Elem>>,
        R::Elem: 'a,
    {
        items.into_iter().fold(self.one(), |acc, p| self.mul(&acc, p))
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut v = long.coeffs.clone();
        for (x, y) in v.iter_mut().zip(&short.coeffs) {
            *x = self.base.add(x, y);
        }
        self.poly(v)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.base.sub(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => self.base.neg(y),
                (None, None) => unreachable!(),
            })
            .collect();
        self.poly(v)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.poly(a.coeffs.iter().map(|c| self.base.neg(c)).collect())
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![self.base.zero(); a.len() + b.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] = self.base.add(&v[i + j], &self.base.mul(x, y));
            }
        }
        self.poly(v)
    }
    fn from_int(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_int(n))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zx() -> PolyRing<Integers> {
        PolyRing::new(Integers)
    }

    #[test]
    fn canonical_form() {
        let p = Poly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert!(Poly::from_i64s(&[0, 0]).is_zero());
        assert_eq!(Poly::from_i64s(&[]).degree(), None);
    }

    #[test]
    fn difference_of_squares() {
        let r = zx();
        let a = Poly::from_i64s(&[1, 1]);
        let b = Poly::from_i64s(&[-1, 1]);
        assert_eq!(r.mul(&a, &b), Poly::from_i64s(&[-1, 0, 1]));
    }

    #[test]
    fn norms() {
        assert_eq!(Poly::from_i64s(&[-1, 0, 1]).l2_norm_sq(), BigInt::from(2));
        assert_eq!(Poly::from_i64s(&[]).l2_norm_sq(), BigInt::from(0));
        assert_eq!(Poly::from_i64s(&[4, 3]).l2_norm_sq(), BigInt::from(25));
    }

    #[test]
    fn derivative_of_cubic() {
        let r = zx();
        assert_eq!(r.derivative(&Poly::from_i64s(&[0, -1, 0, 1])), Poly::from_i64s(&[-1, 0, 3]));
    }

    #[test]
    fn monic_division() {
        let r = zx();
        let a = Poly::from_i64s(&[-1, 0, 0, 1]);
        let b = Poly::from_i64s(&[-1, 1]);
        let (q, rem) = r.div_rem_monic(&a, &b);
        assert_eq!(q, Poly::from_i64s(&[1, 1, 1]));
        assert!(rem.is_zero());
        assert_eq!(r.eval(&a, &BigInt::from(2)), BigInt::from(7));
    }
}
