//! Reading and writing polynomials in the input grammar.

use globfactor::ring::FiniteField;
use globfactor::{FqBiPoly, FqPoly, GaloisField, IntPoly, Poly, PolyRing, RatPoly, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::expr::{parse_expr, ParseError, Target};

/// The field of rationals, only used for reading input.
#[derive(Clone, Debug)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

fn reduce_mod(n: &BigInt, p: u64) -> i64 {
    n.mod_floor(&BigInt::from(p)).to_i64().expect("small prime")
}

/// A polynomial in `x` over `Q`.
pub fn parse_q(text: &str) -> Result<RatPoly, ParseError> {
    let node = parse_expr(text)?;
    let qx = PolyRing::new(Rationals);
    let int = |n: &BigInt| qx.constant(BigRational::from_integer(n.clone()));
    let ratio = |n: &BigInt, d: &BigInt| {
        (!d.is_zero()).then(|| qx.constant(BigRational::new(n.clone(), d.clone())))
    };
    let degree = |p: &Poly<BigRational>| p.deg();
    let target = Target {
        ring: &qx,
        vars: vec![('x', qx.x())],
        int: &int,
        ratio: Some(&ratio),
        degree: &degree,
        ring_name: "Q",
    };
    let p = target.eval(&node)?;
    Ok(RatPoly::from_coeffs(p.coeffs()))
}

/// A polynomial in `x` and `t` over `F_q`; `g` is the generator of `F_q`.
pub fn parse_fqt(text: &str, k: &GaloisField) -> Result<FqBiPoly, ParseError> {
    let node = parse_expr(text)?;
    let kt = PolyRing::new(k.clone());
    let ktx = PolyRing::new(kt.clone());
    let p = k.p();
    let int = |n: &BigInt| ktx.constant(kt.constant(k.from_int(reduce_mod(n, p))));
    let degree = |f: &FqBiPoly| f.deg() + f.coeffs().iter().map(|c| c.deg()).max().unwrap_or(0);
    let target = Target {
        ring: &ktx,
        vars: vec![('x', ktx.x()), ('t', ktx.constant(kt.x())), ('g', ktx.constant(kt.constant(k.z())))],
        int: &int,
        ratio: None,
        degree: &degree,
        ring_name: "Fq(t)",
    };
    target.eval(&node)
}

/// A polynomial over `F_q` in the variable `var` (`t` for places).
pub fn parse_fq_poly(text: &str, k: &GaloisField, var: char) -> Result<FqPoly, ParseError> {
    let node = parse_expr(text)?;
    let kt = PolyRing::new(k.clone());
    let p = k.p();
    let int = |n: &BigInt| kt.constant(k.from_int(reduce_mod(n, p)));
    let degree = |f: &FqPoly| f.deg();
    let mut vars = vec![(var, kt.x())];
    if k.w() > 1 {
        vars.push(('g', kt.constant(k.z())));
    }
    let target = Target { ring: &kt, vars, int: &int, ratio: None, degree: &degree, ring_name: "F_q[t]" };
    target.eval(&node)
}

/// One printed monomial: signed coefficient and variable powers.
type Term = (BigInt, Vec<(char, usize)>);

fn format_terms(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, vars)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut parts = Vec::new();
        let a = c.abs();
        let vars: Vec<&(char, usize)> = vars.iter().filter(|(_, e)| *e > 0).collect();
        if !a.is_one() || vars.is_empty() {
            parts.push(a.to_string());
        }
        for (v, e) in vars {
            parts.push(if *e == 1 { v.to_string() } else { format!("{v}^{e}") });
        }
        out.push_str(&parts.join("*"));
    }
    out
}

pub fn format_int_poly(f: &IntPoly) -> String {
    let terms: Vec<Term> = f
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (c.clone(), vec![('x', i)]))
        .collect();
    format_terms(&terms)
}

pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn symmetric(c: u64, p: u64) -> BigInt {
    if p > 2 && c > p / 2 {
        BigInt::from(c) - BigInt::from(p)
    } else {
        BigInt::from(c)
    }
}

fn fq_terms(k: &GaloisField, c: &globfactor::GfElem, rest: &[(char, usize)], out: &mut Vec<Term>) {
    let coords = k.to_prime_coords(c);
    for (e, &x) in coords.iter().enumerate().rev() {
        if x == 0 {
            continue;
        }
        let mut vars = Vec::with_capacity(rest.len() + 1);
        vars.push(('g', e));
        vars.extend_from_slice(rest);
        out.push((symmetric(x, k.p()), vars));
    }
}

pub fn format_fq_poly(k: &GaloisField, f: &FqPoly, var: char) -> String {
    let mut terms = Vec::new();
    for (a, c) in f.coeffs().iter().enumerate().rev() {
        fq_terms(k, c, &[(var, a)], &mut terms);
    }
    format_terms(&terms)
}

pub fn format_fqt(k: &GaloisField, f: &FqBiPoly) -> String {
    let mut terms = Vec::new();
    for (b, cx) in f.coeffs().iter().enumerate().rev() {
        for (a, c) in cx.coeffs().iter().enumerate().rev() {
            fq_terms(k, c, &[('t', a), ('x', b)], &mut terms);
        }
    }
    format_terms(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_examples() {
        let f = parse_q("x^4 - 10*x^2 + 1").unwrap();
        assert_eq!(f.numerator(), &Poly::from_i64s(&[1, 0, -10, 0, 1]));
        let f = parse_q("1/2*x - 3/4").unwrap();
        assert_eq!(f.numerator(), &Poly::from_i64s(&[-3, 2]));
        assert_eq!(f.denominator(), &BigInt::from(4));
        assert_eq!(parse_q("x^").unwrap_err().offset, 2);
        assert!(parse_q("x + t").is_err());
        assert!(parse_q("1/0").is_err());
        assert_eq!(format_int_poly(&Poly::from_i64s(&[1, 0, -10, 0, 1])), "x^4 - 10*x^2 + 1");
        assert_eq!(format_int_poly(&Poly::from_i64s(&[0, -1])), "-x");
    }

    #[test]
    fn fqt_examples() {
        let k = GaloisField::prime(3).unwrap();
        let kt = PolyRing::new(k.clone());
        let f = parse_fqt("x^2 - t", &k).unwrap();
        let want = vec![kt.poly(vec![k.zero(), k.from_int(-1)]), kt.zero(), kt.one()];
        assert_eq!(f.coeffs(), &want[..]);
        assert_eq!(format_fqt(&k, &f), "x^2 - t");
        assert!(parse_fqt("1/2", &k).is_err());
        let k4 = GaloisField::new(2, 2, None).unwrap();
        let f = parse_fqt("g*x + g^2*t", &k4).unwrap();
        assert_eq!(parse_fqt(&format_fqt(&k4, &f), &k4).unwrap(), f);
    }
}
