//! Complete factorizations: content and squarefree preprocessing around the
//! recombination drivers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bivariate::{deflate, inflate, rings, squarefree_fqt};
use crate::config::{Config, PartStats};
use crate::gf::GaloisField;
use crate::integer::Integers;
use crate::knapsack_fqt::{bi_key, factor_fqt};
use crate::knapsack_q::factor_q;
use crate::poly::PolyRing;
use crate::ring::Ring;
use crate::{Error, FqBiPoly, FqPoly, IntPoly, Result};

/// `unit * prod factor^multiplicity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<U, P> {
    pub unit: U,
    pub factors: Vec<(P, usize)>,
    /// One entry per squarefree part handed to a driver.
    pub stats: Vec<PartStats>,
}

pub type QFactorization = Factorization<BigRational, IntPoly>;
pub type FqtFactorization = Factorization<FqPoly, FqBiPoly>;

impl<U, P> Factorization<U, P> {
    /// Stats of the largest part, the one that dominates the running time.
    pub fn main_stats(&self) -> Option<&PartStats> {
        self.stats.iter().max_by_key(|s| (s.degree, s.r))
    }
}

/// Polynomial with rational coefficients as `numerator / denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    numerator: IntPoly,
    denominator: BigInt,
}

impl RatPoly {
    pub fn new(numerator: IntPoly, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let zx = PolyRing::new(Integers);
        let sign = if denominator.is_negative() { BigInt::from(-1) } else { BigInt::one() };
        let g = zx.content(&numerator).gcd(&denominator);
        let g = if g.is_zero() { denominator.abs() } else { g };
        let num = zx.div_scalar(&zx.scale(&numerator, &sign), &g).expect("gcd divides");
        let den = (denominator.abs()) / &g;
        Ok(RatPoly { numerator: num, denominator: den })
    }

    pub fn from_int_poly(p: IntPoly) -> Self {
        RatPoly { numerator: p, denominator: BigInt::one() }
    }

    /// From coefficients low to high.
    pub fn from_coeffs(cs: &[BigRational]) -> Self {
        let den = cs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let zx = PolyRing::new(Integers);
        let num = zx.poly(cs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect());
        RatPoly::new(num, den).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        self.numerator
            .coeffs()
            .iter()
            .map(|c| BigRational::new(c.clone(), self.denominator.clone()))
            .collect()
    }
}

fn sort_q(factors: &mut [(IntPoly, usize)]) {
    factors.sort_by(|a, b| (a.0.len(), &a.0, a.1).cmp(&(b.0.len(), &b.0, b.1)));
}

/// Factors over `Q`. Factors are primitive in `Z[X]` with positive leading
/// coefficient; the unit absorbs content and denominator.
pub fn factor_rational(f: &RatPoly, config: &Config) -> Result<QFactorization> {
    let mut out = factor_integer(&f.numerator, config)?;
    out.unit /= BigRational::from_integer(f.denominator.clone());
    Ok(out)
}

pub fn factor_integer(f: &IntPoly, config: &Config) -> Result<QFactorization> {
    let zx = PolyRing::new(Integers);
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(Factorization { unit: BigRational::from_integer(f.coeffs()[0].clone()), factors: vec![], stats: vec![] });
    }
    let (content, parts) = zx.squarefree_char0(f)?;
    let mut factors = Vec::new();
    let mut stats = Vec::new();
    for (part, m) in parts {
        config.trace(|| format!("squarefree part of degree {} with multiplicity {m}", part.deg()));
        let res = factor_q(&part, config)?;
        if !res.content.is_one() {
            return Err(Error::Internal("squarefree part is not primitive".into()));
        }
        factors.extend(res.factors.into_iter().map(|g| (g, m)));
        stats.push(PartStats { multiplicity: m, ..res.stats });
    }
    sort_q(&mut factors);
    let out = Factorization { unit: BigRational::from_integer(content), factors, stats };
    if expand_q(&out) != *f {
        return Err(Error::Internal("factorization does not multiply back to the input".into()));
    }
    Ok(out)
}

/// `unit * prod factor^m` for an integral unit.
pub fn expand_q(fac: &QFactorization) -> IntPoly {
    let zx = PolyRing::new(Integers);
    let prod = fac.factors.iter().fold(zx.one(), |acc, (g, m)| zx.mul(&acc, &zx.pow_poly(g, *m as u64)));
    let num = zx.scale(&prod, fac.unit.numer());
    zx.div_scalar(&num, fac.unit.denom()).unwrap_or(num)
}

/// Factors over `F_q(t)`. Factors are primitive in `F_q[t][X]` with leading
/// coefficient monic in `t`; the unit is the `t`-content.
pub fn factor_bivariate(k: &GaloisField, f: &FqBiPoly, config: &Config) -> Result<FqtFactorization> {
    let (_, ktx) = rings(k);
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(Factorization { unit: f.coeffs()[0].clone(), factors: vec![], stats: vec![] });
    }
    let (unit, pp) = ktx.content_primitive(f)?;
    let mut factors = Vec::new();
    let mut stats = Vec::new();
    for part in squarefree_fqt(&ktx, &pp)? {
        let m = part.multiplicity;
        config.trace(|| {
            format!(
                "squarefree part of degree {} with multiplicity {m}{}",
                part.poly.deg(),
                if part.separable { "" } else { " (in X^p)" }
            )
        });
        if part.separable {
            let res = factor_fqt(k, &part.poly, config)?;
            factors.extend(res.factors.into_iter().map(|g| (g, m)));
            stats.push(PartStats { multiplicity: m, ..res.stats });
        } else {
            // each irreducible h of the deflated part gives an irreducible h(X^p)
            let inner = factor_bivariate(k, &deflate(&ktx, &part.poly), config)?;
            if inner.factors.iter().any(|(_, e)| *e != 1) {
                return Err(Error::Internal("deflated squarefree part has repeated factors".into()));
            }
            factors.extend(inner.factors.into_iter().map(|(h, _)| (inflate(&ktx, &h), m)));
            stats.extend(inner.stats.into_iter().map(|s| PartStats { multiplicity: m, ..s }));
        }
    }
    factors.sort_by_cached_key(|(g, m)| (bi_key(k, g), *m));
    let out = Factorization { unit, factors, stats };
    if expand_fqt(k, &out) != *f {
        return Err(Error::Internal("factorization does not multiply back to the input".into()));
    }
    Ok(out)
}

pub fn expand_fqt(k: &GaloisField, fac: &FqtFactorization) -> FqBiPoly {
    let (_, ktx) = rings(k);
    let prod = fac.factors.iter().fold(ktx.one(), |acc, (g, m)| ktx.mul(&acc, &ktx.pow_poly(g, *m as u64)));
    ktx.scale(&prod, &fac.unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn p(cs: &[i64]) -> IntPoly {
        Poly::from_i64s(cs)
    }

    #[test]
    fn rational_input() {
        // (x^2 - 1) / 6
        let f = RatPoly::new(p(&[-2, 0, 2]), BigInt::from(12)).unwrap();
        assert_eq!(f.denominator(), &BigInt::from(6));
        let fac = factor_rational(&f, &Config::default()).unwrap();
        assert_eq!(fac.unit, BigRational::new(BigInt::one(), BigInt::from(6)));
        assert_eq!(fac.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
    }

    #[test]
    fn multiplicities() {
        // -3 (x^2 - 1)^2 (x^2 + 1)
        let zx = PolyRing::new(Integers);
        let a = zx.pow_poly(&p(&[-1, 0, 1]), 2);
        let f = zx.scale(&zx.mul(&a, &p(&[1, 0, 1])), &BigInt::from(-3));
        let fac = factor_integer(&f, &Config::default()).unwrap();
        assert_eq!(fac.unit, BigRational::from_integer(BigInt::from(-3)));
        assert_eq!(fac.factors, vec![(p(&[-1, 1]), 2), (p(&[1, 1]), 2), (p(&[1, 0, 1]), 1)]);
        assert_eq!(expand_q(&fac), f);
    }

    #[test]
    fn constants() {
        let fac = factor_integer(&p(&[7]), &Config::default()).unwrap();
        assert!(fac.factors.is_empty());
        assert!(factor_integer(&p(&[]), &Config::default()).is_err());
    }

    #[test]
    fn bivariate_preprocessing() {
        let k = GaloisField::prime(2).unwrap();
        let (kt, ktx) = rings(&k);
        let t = kt.x();
        let x = |c: FqPoly, e: usize| ktx.monomial(c, e);
        // t (X^2 + t)^2 (X + 1)^2 (X + t): inseparable, square and separable parts
        let a = ktx.add(&x(kt.one(), 2), &x(t.clone(), 0));
        let b = ktx.add(&x(kt.one(), 1), &x(kt.one(), 0));
        let c = ktx.add(&x(kt.one(), 1), &x(t.clone(), 0));
        let f = ktx.scale(&ktx.product([&a, &a, &b, &b, &c]), &t);
        let fac = factor_bivariate(&k, &f, &Config::default()).unwrap();
        assert_eq!(fac.unit, t);
        let mut got = fac.factors.clone();
        got.sort_by_cached_key(|(g, _)| bi_key(&k, g));
        let mut want = vec![(a, 2), (b, 2), (c, 1)];
        want.sort_by_cached_key(|(g, _)| bi_key(&k, g));
        assert_eq!(got, want);
    }
}
