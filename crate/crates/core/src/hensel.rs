//! Local factorizations at a place and quadratic Hensel lifting.
//!
//! Works over any [`Order`]: the integers with a prime `p`, or `F_q[t]` with
//! a monic irreducible `v(t)`. Coefficients modulo `place^ell` are stored as
//! canonical lifts (symmetric remainders, resp. remainders of `t`-degree
//! below `ell * deg v`).

use rand::Rng;

use crate::ff_factor::factor_ff;
use crate::poly::{Poly, PolyRing};
use crate::ring::{EuclideanDomain, Order, Ring};
use crate::{Error, Result};

type Elem<O> = <O as Ring>::Elem;
type RElem<O> = <<O as Order>::Residue as Ring>::Elem;

/// `f = leading * prod factors (mod place^ell)`, factors monic and
/// irreducible modulo the place.
#[derive(Clone, Debug)]
pub struct LocalFactorization<O: Order> {
    pub ring: O,
    pub residue: O::Residue,
    pub place: Elem<O>,
    pub ell: usize,
    pub modulus: Elem<O>,
    pub leading: Elem<O>,
    pub factors: Vec<Poly<Elem<O>>>,
    pub residue_factors: Vec<Poly<RElem<O>>>,
    pub source: Poly<Elem<O>>,
}

impl<O: Order> PartialEq for LocalFactorization<O> {
    fn eq(&self, other: &Self) -> bool {
        self.place == other.place
            && self.ell == other.ell
            && self.factors == other.factors
            && self.source == other.source
    }
}

/// Polynomial arithmetic over `O / m`.
#[derive(Clone, Debug)]
pub struct Quotient<'a, O: Order> {
    pub ring: &'a O,
    pub polys: PolyRing<O>,
    pub modulus: Elem<O>,
}

impl<'a, O: Order> Quotient<'a, O> {
    pub fn new(ring: &'a O, modulus: Elem<O>) -> Self {
        Quotient { ring, polys: PolyRing::new(ring.clone()), modulus }
    }

    pub fn reduce(&self, p: &Poly<Elem<O>>) -> Poly<Elem<O>> {
        self.polys.poly(p.coeffs().iter().map(|c| self.ring.reduce(c, &self.modulus)).collect())
    }

    pub fn add(&self, a: &Poly<Elem<O>>, b: &Poly<Elem<O>>) -> Poly<Elem<O>> {
        self.reduce(&self.polys.add(a, b))
    }

    pub fn sub(&self, a: &Poly<Elem<O>>, b: &Poly<Elem<O>>) -> Poly<Elem<O>> {
        self.reduce(&self.polys.sub(a, b))
    }

    pub fn mul(&self, a: &Poly<Elem<O>>, b: &Poly<Elem<O>>) -> Poly<Elem<O>> {
        self.reduce(&self.polys.mul(a, b))
    }

    pub fn scale(&self, a: &Poly<Elem<O>>, c: &Elem<O>) -> Poly<Elem<O>> {
        self.reduce(&self.polys.scale(a, c))
    }

    /// Division by a monic polynomial.
    pub fn div_rem(&self, a: &Poly<Elem<O>>, b: &Poly<Elem<O>>) -> (Poly<Elem<O>>, Poly<Elem<O>>) {
        let (q, r) = self.polys.div_rem_monic(&self.reduce(a), b);
        (self.reduce(&q), self.reduce(&r))
    }

    pub fn product<'b, I>(&self, items: I) -> Poly<Elem<O>>
    where
        I: IntoIterator<Item = &'b Poly<Elem<O>>>,
        Elem<O>: 'b,
    {
        items.into_iter().fold(self.polys.one(), |acc, p| self.mul(&acc, p))
    }

    pub fn inv(&self, c: &Elem<O>) -> Option<Elem<O>> {
        let i = self.ring.inv_mod(c, &self.modulus)?;
        Some(self.ring.reduce(&i, &self.modulus))
    }
}

/// Factors `f` modulo `place`. Fails with [`Error::BadPlace`] if the
/// leading coefficient vanishes at the place or the reduction is not
/// squarefree.
pub fn init_local<O: Order, G: Rng + ?Sized>(
    ring: &O,
    f: &Poly<Elem<O>>,
    place: &Elem<O>,
    rng: &mut G,
) -> Result<LocalFactorization<O>> {
    if f.deg() == 0 {
        return Err(if f.is_zero() { Error::ZeroPolynomial } else { Error::ConstantPolynomial });
    }
    let k = ring.residue_field(place)?;
    let kx = PolyRing::new(k.clone());
    let fbar = kx.poly(f.coeffs().iter().map(|c| ring.to_residue(&k, c)).collect());
    if fbar.deg() != f.deg() || fbar.is_zero() {
        return Err(Error::BadPlace(format!(
            "leading coefficient vanishes modulo {}",
            ring.describe(place)
        )));
    }
    let d = kx.derivative(&fbar);
    if d.is_zero() || kx.gcd_monic(&fbar, &d).deg() > 0 {
        return Err(Error::BadPlace(format!(
            "reduction modulo {} is not squarefree",
            ring.describe(place)
        )));
    }
    let fac = factor_ff(&kx, &fbar, rng)?;
    let residue_factors: Vec<_> = fac.factors.into_iter().map(|(g, _)| g).collect();
    let factors = residue_factors
        .iter()
        .map(|g| PolyRing::new(ring.clone()).poly(g.coeffs().iter().map(|c| ring.from_residue(&k, c)).collect()))
        .collect();
    Ok(LocalFactorization {
        ring: ring.clone(),
        residue: k,
        place: place.clone(),
        ell: 1,
        modulus: place.clone(),
        leading: f.lc().expect("nonzero").clone(),
        factors,
        residue_factors,
        source: f.clone(),
    })
}

impl<O: Order> LocalFactorization<O> {
    pub fn r(&self) -> usize {
        self.factors.len()
    }

    pub fn n(&self) -> usize {
        self.source.deg()
    }

    pub fn quotient(&self) -> Quotient<'_, O> {
        Quotient::new(&self.ring, self.modulus.clone())
    }

    /// Whether `leading * prod factors == source (mod place^ell)`.
    pub fn check_product(&self) -> bool {
        let q = self.quotient();
        let prod = q.scale(&q.product(&self.factors), &self.leading);
        prod == q.reduce(&self.source)
    }

    /// The same factorization reduced to a lower precision.
    pub fn truncate(&self, ell: usize) -> Result<Self> {
        if ell == 0 || ell > self.ell {
            return Err(Error::InvalidArgument(format!("cannot truncate precision {} to {ell}", self.ell)));
        }
        let modulus = self.ring.pow(&self.place, ell as u64);
        let q = Quotient::new(&self.ring, modulus.clone());
        let factors = self.factors.iter().map(|g| q.reduce(g)).collect();
        Ok(LocalFactorization { ell, modulus, factors, ..self.clone() })
    }

    /// The lifted factorization at precision `target`.
    pub fn lift_to(&self, target: usize) -> Result<Self> {
        if target < self.ell {
            return Err(Error::InvalidArgument(format!(
                "cannot lift from precision {} down to {target}",
                self.ell
            )));
        }
        if target == self.ell {
            return Ok(self.clone());
        }
        let ring = &self.ring;
        let modulus = ring.pow(&self.place, target as u64);
        let qt = Quotient::new(ring, modulus.clone());
        let lc_inv = qt
            .inv(&self.leading)
            .ok_or_else(|| Error::Internal("leading coefficient not invertible at the place".into()))?;
        let monic = qt.scale(&self.source, &lc_inv);
        let mut out = Vec::with_capacity(self.r());
        self.lift_node(&monic, 0, self.r(), target, &mut out)?;
        let lifted = LocalFactorization {
            ell: target,
            modulus,
            factors: out,
            ..self.clone()
        };
        if !lifted.check_product() {
            return Err(Error::Internal("Hensel lifting produced an inconsistent factorization".into()));
        }
        Ok(lifted)
    }

    /// Splits the monic `target_poly` (known modulo `place^target`) into the
    /// lifts of `factors[lo..hi]`.
    fn lift_node(
        &self,
        target_poly: &Poly<Elem<O>>,
        lo: usize,
        hi: usize,
        target: usize,
        out: &mut Vec<Poly<Elem<O>>>,
    ) -> Result<()> {
        if hi - lo == 1 {
            out.push(target_poly.clone());
            return Ok(());
        }
        let mid = (lo + hi) / 2;
        let ring = &self.ring;
        let q0 = self.quotient();
        let mut g = q0.product(&self.factors[lo..mid]);
        let mut h = q0.product(&self.factors[mid..hi]);
        let (mut s, mut t) = self.bezout(lo, mid, hi)?;
        // Bezout coefficients modulo place^ell from those modulo place
        let mut j = 1;
        while j < self.ell {
            j = (2 * j).min(self.ell);
            let qj = Quotient::new(ring, ring.pow(&self.place, j as u64));
            (s, t) = lift_bezout(&qj, &g, &h, &s, &t);
        }
        let mut j = self.ell;
        while j < target {
            j = (2 * j).min(target);
            let qj = Quotient::new(ring, ring.pow(&self.place, j as u64));
            let f = qj.reduce(target_poly);
            let e = qj.sub(&f, &qj.mul(&g, &h));
            let (qq, rr) = qj.div_rem(&qj.mul(&s, &e), &h);
            let g2 = qj.add(&g, &qj.add(&qj.mul(&t, &e), &qj.mul(&qq, &g)));
            let h2 = qj.add(&h, &rr);
            g = g2;
            h = h2;
            if j < target {
                (s, t) = lift_bezout(&qj, &g, &h, &s, &t);
            }
        }
        if !PolyRing::new(ring.clone()).is_monic(&g) || g.deg() + h.deg() != target_poly.deg() {
            return Err(Error::Internal("lifted factor lost monicity".into()));
        }
        self.lift_node(&g, lo, mid, target, out)?;
        self.lift_node(&h, mid, hi, target, out)
    }

    /// `(s, t)` with `s g + t h = 1` modulo the place, for the products of
    /// the residue factors in `[lo, mid)` and `[mid, hi)`.
    fn bezout(&self, lo: usize, mid: usize, hi: usize) -> Result<(Poly<Elem<O>>, Poly<Elem<O>>)> {
        let kx = PolyRing::new(self.residue.clone());
        let gb = kx.product(&self.residue_factors[lo..mid]);
        let hb = kx.product(&self.residue_factors[mid..hi]);
        let (d, s, t) = kx.xgcd(&gb, &hb);
        if !kx.is_one(&d) {
            return Err(Error::Internal("local factors are not coprime".into()));
        }
        let ox = PolyRing::new(self.ring.clone());
        let lift = |p: &Poly<RElem<O>>| {
            ox.poly(p.coeffs().iter().map(|c| self.ring.from_residue(&self.residue, c)).collect())
        };
        Ok((lift(&s), lift(&t)))
    }
}

/// Newton step for Bezout coefficients of `g`, `h` (both known to the
/// precision of `q`): returns `(s', t')` with `s' g + t' h = 1` in `q`.
fn lift_bezout<O: Order>(
    q: &Quotient<'_, O>,
    g: &Poly<Elem<O>>,
    h: &Poly<Elem<O>>,
    s: &Poly<Elem<O>>,
    t: &Poly<Elem<O>>,
) -> (Poly<Elem<O>>, Poly<Elem<O>>) {
    let one = q.polys.one();
    let g = q.reduce(g);
    let h = q.reduce(h);
    let b = q.sub(&q.add(&q.mul(s, &g), &q.mul(t, &h)), &one);
    let s1 = q.sub(s, &q.mul(s, &b));
    let t1 = q.sub(t, &q.mul(t, &b));
    let (c, d) = q.div_rem(&s1, &h);
    let t2 = q.add(&t1, &q.mul(&c, &g));
    (d, t2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::GaloisField;
    use crate::integer::Integers;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    #[test]
    fn init_examples() {
        let z = Integers;
        let lf = init_local(&z, &Poly::from_i64s(&[-1, 0, 1]), &BigInt::from(5), &mut rng()).unwrap();
        assert_eq!(lf.factors, vec![Poly::from_i64s(&[1, 1]), Poly::from_i64s(&[-1, 1])]);
        let err = init_local(&z, &Poly::from_i64s(&[1, 0, 1]), &BigInt::from(2), &mut rng());
        assert!(matches!(err, Err(Error::BadPlace(_))));

        let k = GaloisField::prime(3).unwrap();
        let kt = PolyRing::new(k.clone());
        let kx = PolyRing::new(kt.clone());
        let t = kt.x();
        let f = kx.poly(vec![kt.neg(&t), kt.zero(), kt.one()]);
        assert!(matches!(init_local(&kt, &f, &t, &mut rng()), Err(Error::BadPlace(_))));
    }

    #[test]
    fn lift_examples() {
        let z = Integers;
        let lf = init_local(&z, &Poly::from_i64s(&[-1, 0, 1]), &BigInt::from(5), &mut rng()).unwrap();
        let l2 = lf.lift_to(2).unwrap();
        // X + 24 is X - 1 in symmetric form
        assert_eq!(l2.factors, vec![Poly::from_i64s(&[1, 1]), Poly::from_i64s(&[-1, 1])]);
        assert_eq!(lf.lift_to(1).unwrap(), lf);

        let k = GaloisField::prime(3).unwrap();
        let kt = PolyRing::new(k.clone());
        let kx = PolyRing::new(kt.clone());
        let t = kt.x();
        let f = kx.poly(vec![kt.neg(&kt.mul(&t, &t)), kt.zero(), kt.one()]);
        let v = kt.poly(vec![k.one(), k.one()]);
        let lf = init_local(&kt, &f, &v, &mut rng()).unwrap().lift_to(3).unwrap();
        let mut got = lf.factors.clone();
        got.sort();
        let mut want = vec![kx.poly(vec![kt.neg(&t), kt.one()]), kx.poly(vec![t.clone(), kt.one()])];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn path_independence() {
        let z = Integers;
        let f = Poly::from_i64s(&[1, 0, -10, 0, 1]);
        let lf = init_local(&z, &f, &BigInt::from(7), &mut rng()).unwrap();
        let direct = lf.lift_to(8).unwrap();
        let stepped = lf.lift_to(2).unwrap().lift_to(4).unwrap().lift_to(8).unwrap();
        assert_eq!(direct, stepped);
        assert!(direct.check_product());
    }

    #[test]
    fn non_monic_source() {
        let z = Integers;
        let f = Poly::from_i64s(&[-3, 1, 0, 6]);
        let lf = init_local(&z, &f, &BigInt::from(5), &mut rng()).unwrap();
        for ell in [1, 3, 10] {
            assert!(lf.lift_to(ell).unwrap().check_product());
        }
    }
}
