//! Factorization of univariate polynomials over finite fields and
//! enumeration of irreducible polynomials.
//!
//! The factorization pipeline is the classical one: squarefree
//! decomposition, distinct-degree splitting, then Cantor–Zassenhaus
//! equal-degree splitting with a caller-owned random number generator. The
//! output is sorted, so it does not depend on the generator state.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::poly::{Poly, PolyRing};
use crate::ring::{FiniteField, Ring};
use crate::{Error, Result};

/// `unit * prod factor^mult`, factors monic, irreducible and distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FFFactorization<E> {
    pub unit: E,
    pub factors: Vec<(Poly<E>, usize)>,
}

impl<E: Clone> FFFactorization<E> {
    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }
}

/// Sort key: degree first, then coefficient indices from the constant term up.
pub fn poly_key<F: FiniteField>(field: &F, p: &Poly<F::Elem>) -> (usize, Vec<BigUint>) {
    (p.len(), p.coeffs().iter().map(|c| field.index_of(c)).collect())
}

fn sort_polys<F: FiniteField>(field: &F, v: &mut [(Poly<F::Elem>, usize)]) {
    v.sort_by_cached_key(|(p, _)| poly_key(field, p));
}

/// Coefficientwise inverse Frobenius of a polynomial in `X^p`.
pub fn pth_root_poly<F: FiniteField>(r: &PolyRing<F>, f: &Poly<F::Elem>) -> Poly<F::Elem> {
    let p = r.characteristic() as usize;
    let k = r.base();
    r.poly(f.coeffs().iter().step_by(p).map(|c| k.pth_root(c)).collect())
}

/// Squarefree decomposition of a monic polynomial over a finite field.
pub fn squarefree_ff<F: FiniteField>(r: &PolyRing<F>, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let p = r.characteristic() as usize;
    let df = r.derivative(f);
    let mut c = r.gcd_monic(f, &df);
    let mut w = r.divmod(f, &c).expect("nonzero").0;
    let mut i = 1;
    while w.deg() > 0 {
        let y = r.gcd_monic(&w, &c);
        let z = r.divmod(&w, &y).expect("nonzero").0;
        if z.deg() > 0 {
            out.push((z, i));
        }
        i += 1;
        c = r.divmod(&c, &y).expect("nonzero").0;
        w = y;
    }
    if c.deg() > 0 {
        let root = pth_root_poly(r, &c);
        for (g, m) in squarefree_ff(r, &root) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a monic squarefree polynomial into `(product of all irreducible
/// factors of degree d, d)` pairs.
pub fn distinct_degree<F: FiniteField>(r: &PolyRing<F>, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
    let q = r.base().order();
    let x = r.x();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = r.rem(&x, &rest);
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = r.pow_mod(&h, &q, &rest);
        let g = r.gcd_monic(&r.sub(&h, &x), &rest);
        if g.deg() > 0 {
            rest = r.divmod(&rest, &g).expect("nonzero").0;
            h = r.rem(&h, &rest);
            out.push((g, d));
        }
    }
    if rest.deg() > 0 {
        let dr = rest.deg();
        out.push((rest, dr));
    }
    out
}

fn random_poly<F: FiniteField, G: Rng + ?Sized>(r: &PolyRing<F>, below: usize, rng: &mut G) -> Poly<F::Elem> {
    r.poly((0..below).map(|_| r.base().random(rng)).collect())
}

/// Cantor–Zassenhaus splitting of a monic squarefree product of
/// irreducibles of degree `d`.
pub fn equal_degree<F: FiniteField, G: Rng + ?Sized>(
    r: &PolyRing<F>,
    f: &Poly<F::Elem>,
    d: usize,
    rng: &mut G,
) -> Vec<Poly<F::Elem>> {
    if f.deg() == d {
        return vec![f.clone()];
    }
    let k = r.base();
    let p = k.characteristic();
    let qd = num_traits::pow(k.order(), d);
    loop {
        let a = random_poly(r, f.deg(), rng);
        if a.deg() == 0 {
            continue;
        }
        let b = if p == 2 {
            // absolute trace to F_2: a + a^2 + ... + a^(2^(kd-1))
            let steps = k.degree() * d;
            let mut acc = a.clone();
            let mut cur = a.clone();
            for _ in 1..steps {
                cur = r.mul_mod(&cur, &cur, f);
                acc = r.add(&acc, &cur);
            }
            acc
        } else {
            let e = (&qd - BigUint::one()) >> 1;
            r.sub(&r.pow_mod(&a, &e, f), &r.one())
        };
        let u = r.gcd_monic(&b, f);
        if u.deg() > 0 && u.deg() < f.deg() {
            let v = r.divmod(f, &u).expect("nonzero").0;
            let mut out = equal_degree(r, &u, d, rng);
            out.extend(equal_degree(r, &v, d, rng));
            return out;
        }
    }
}

/// Complete factorization over the coefficient field.
pub fn factor_ff<F: FiniteField, G: Rng + ?Sized>(
    r: &PolyRing<F>,
    f: &Poly<F::Elem>,
    rng: &mut G,
) -> Result<FFFactorization<F::Elem>> {
    if f.deg() == 0 {
        return Err(if f.is_zero() { Error::ZeroPolynomial } else { Error::ConstantPolynomial });
    }
    let unit = f.lc().expect("nonzero").clone();
    let monic = r.monic(f);
    let mut factors = Vec::new();
    for (part, mult) in squarefree_ff(r, &monic) {
        for (block, d) in distinct_degree(r, &part) {
            for g in equal_degree(r, &block, d, rng) {
                factors.push((g, mult));
            }
        }
    }
    sort_polys(r.base(), &mut factors);
    Ok(FFFactorization { unit, factors })
}

/// Irreducibility test: no factor of degree `<= n/2`.
pub fn is_irreducible<F: FiniteField>(r: &PolyRing<F>, f: &Poly<F::Elem>) -> Result<bool> {
    if f.deg() == 0 {
        return Err(if f.is_zero() { Error::ZeroPolynomial } else { Error::ConstantPolynomial });
    }
    let f = r.monic(f);
    let q = r.base().order();
    let x = r.x();
    let mut h = r.rem(&x, &f);
    for _ in 1..=f.deg() / 2 {
        h = r.pow_mod(&h, &q, &f);
        if r.gcd_monic(&r.sub(&h, &x), &f).deg() > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Monic polynomials of degree `d` in lexicographic order of their
/// coefficient indices, constant term most significant.
pub fn monic_polys<F: FiniteField>(field: &F, d: usize) -> impl Iterator<Item = Poly<F::Elem>> + '_ {
    let q = field.order();
    let mut digits: Option<Vec<BigUint>> = Some(vec![BigUint::zero(); d]);
    let ring = PolyRing::new(field.clone());
    std::iter::from_fn(move || {
        let cur = digits.as_mut()?;
        let mut cs: Vec<F::Elem> = cur.iter().map(|i| field.elem_from_index(i)).collect();
        cs.push(field.one());
        let out = ring.poly(cs);
        // odometer, least significant digit is the last coefficient
        let mut pos = d;
        loop {
            if pos == 0 {
                digits = None;
                break;
            }
            pos -= 1;
            cur[pos] += 1u32;
            if cur[pos] < q {
                break;
            }
            cur[pos] = BigUint::zero();
        }
        Some(out)
    })
}

/// Number of monic irreducible polynomials of degree `d` over a field of
/// order `q` (necklace formula).
pub fn count_irreducible(q: &BigUint, d: usize) -> BigUint {
    let mut total: num_bigint::BigInt = num_bigint::BigInt::zero();
    for k in 1..=d {
        if d % k == 0 {
            let mu = moebius((d / k) as u64);
            let term = num_bigint::BigInt::from(num_traits::pow(q.clone(), k));
            total += term * mu;
        }
    }
    (total / num_bigint::BigInt::from(d)).to_biguint().expect("nonnegative")
}

fn moebius(mut n: u64) -> i64 {
    let mut r = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            r = -r;
        }
        p += 1;
    }
    if n > 1 {
        r = -r;
    }
    r
}

/// The `index`-th (from zero) monic irreducible of degree `d` in the order of
/// [`monic_polys`].
pub fn nth_irreducible<F: FiniteField>(field: &F, d: usize, index: u64) -> Result<Poly<F::Elem>> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let count = count_irreducible(&field.order(), d);
    if BigUint::from(index) >= count {
        return Err(Error::IndexOutOfRange { index, count: count.to_u64().unwrap_or(u64::MAX) });
    }
    let ring = PolyRing::new(field.clone());
    let mut seen = 0u64;
    for cand in monic_polys(field, d) {
        if is_irreducible(&ring, &cand)? {
            if seen == index {
                return Ok(cand);
            }
            seen += 1;
        }
    }
    unreachable!("count of irreducibles is exact")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::PrimeField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fp(p: u64) -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(p).unwrap())
    }

    #[test]
    fn factor_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r5 = fp(5);
        let f = factor_ff(&r5, &r5.poly(vec![1, 0, 1]), &mut rng).unwrap();
        assert_eq!(f.factors, vec![(r5.poly(vec![2, 1]), 1), (r5.poly(vec![3, 1]), 1)]);
        let r2 = fp(2);
        let f = factor_ff(&r2, &r2.poly(vec![1, 0, 1]), &mut rng).unwrap();
        assert_eq!(f.factors, vec![(r2.poly(vec![1, 1]), 2)]);
        let f = factor_ff(&r2, &r2.poly(vec![1, 1, 1]), &mut rng).unwrap();
        assert_eq!(f.factors, vec![(r2.poly(vec![1, 1, 1]), 1)]);
        assert_eq!(factor_ff(&r2, &r2.poly(vec![1]), &mut rng).unwrap_err(), Error::ConstantPolynomial);
    }

    #[test]
    fn irreducibility_examples() {
        let r3 = fp(3);
        assert!(is_irreducible(&r3, &r3.x()).unwrap());
        assert!(!is_irreducible(&r3, &r3.poly(vec![2, 0, 1])).unwrap());
        assert!(is_irreducible(&r3, &r3.poly(vec![1, 0, 1])).unwrap());
        assert!(is_irreducible(&r3, &r3.poly(vec![1])).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let f3 = PrimeField::new(3).unwrap();
        let r3 = fp(3);
        assert_eq!(nth_irreducible(&f3, 1, 0).unwrap(), r3.poly(vec![0, 1]));
        assert_eq!(nth_irreducible(&f3, 1, 2).unwrap(), r3.poly(vec![2, 1]));
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(nth_irreducible(&f2, 2, 0).unwrap(), fp(2).poly(vec![1, 1, 1]));
        assert_eq!(
            nth_irreducible(&f2, 2, 1).unwrap_err(),
            Error::IndexOutOfRange { index: 1, count: 1 }
        );
        assert_eq!(count_irreducible(&BigUint::from(2u32), 4), BigUint::from(3u32));
    }
}
