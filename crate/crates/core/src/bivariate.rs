//! Polynomials in `F_q[t][X]`: Newton polygons, `t`-derivatives, `p`-th
//! roots and squarefree decomposition in characteristic `p`.

use crate::gf::{GaloisField, GfElem};
use crate::poly::PolyRing;
use crate::ring::{FiniteField, Ring};
use crate::{Error, FqBiPoly, FqPoly, Result};

/// `F_q[t]`.
pub type FqT = PolyRing<GaloisField>;
/// `F_q[t][X]`.
pub type FqTX = PolyRing<FqT>;

pub fn rings(k: &GaloisField) -> (FqT, FqTX) {
    let kt = PolyRing::new(k.clone());
    let ktx = PolyRing::new(kt.clone());
    (kt, ktx)
}

/// Largest `t`-degree among the coefficients.
pub fn deg_t(f: &FqBiPoly) -> usize {
    f.coeffs().iter().map(|c| c.deg()).max().unwrap_or(0)
}

/// Largest `a + b` over the monomials `t^a X^b`.
pub fn total_degree(f: &FqBiPoly) -> usize {
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(b, c)| b + c.deg())
        .max()
        .unwrap_or(0)
}

/// Derivative with respect to `t`.
pub fn derivative_t(ktx: &FqTX, f: &FqBiPoly) -> FqBiPoly {
    let kt = ktx.base();
    ktx.poly(f.coeffs().iter().map(|c| kt.derivative(c)).collect())
}

/// Whether every monomial `t^a X^b` has `p | a` and `p | b`.
pub fn is_pth_power(ktx: &FqTX, f: &FqBiPoly) -> bool {
    let p = ktx.characteristic() as usize;
    f.coeffs().iter().enumerate().all(|(b, c)| {
        c.is_zero() || (b % p == 0 && c.coeffs().iter().enumerate().all(|(a, x)| a % p == 0 || ktx.base().base().is_zero(x)))
    })
}

/// The `p`-th root of a polynomial for which [`is_pth_power`] holds.
pub fn pth_root(ktx: &FqTX, f: &FqBiPoly) -> FqBiPoly {
    let p = ktx.characteristic() as usize;
    let kt = ktx.base();
    let k = kt.base();
    ktx.poly(
        f.coeffs()
            .iter()
            .step_by(p)
            .map(|c| kt.poly(c.coeffs().iter().step_by(p).map(|x| k.pth_root(x)).collect()))
            .collect(),
    )
}

/// `f(X^(1/p))` for `f` with vanishing `X`-derivative.
pub fn deflate(ktx: &FqTX, f: &FqBiPoly) -> FqBiPoly {
    let p = ktx.characteristic() as usize;
    ktx.poly(f.coeffs().iter().step_by(p).cloned().collect())
}

/// `f(X^p)`.
pub fn inflate(ktx: &FqTX, f: &FqBiPoly) -> FqBiPoly {
    let p = ktx.characteristic() as usize;
    let mut cs = vec![FqPoly::zero(); (f.len().max(1) - 1) * p + 1];
    for (i, c) in f.coeffs().iter().enumerate() {
        cs[i * p] = c.clone();
    }
    ktx.poly(cs)
}

/// Squarefree part of a decomposition over `F_q(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreePart {
    pub poly: FqBiPoly,
    pub multiplicity: usize,
    /// False for parts in `F_q(t)[X^p]`; these are squarefree with every
    /// irreducible factor of the form `h(X^p)`.
    pub separable: bool,
}

/// Repeated gcds with respect to one derivation. Returns the parts of
/// multiplicity `i` for the irreducible factors not killed by `d`, and the
/// leftover on which `d` vanishes.
fn musser(
    ktx: &FqTX,
    f: &FqBiPoly,
    d: impl Fn(&FqBiPoly) -> FqBiPoly,
) -> Result<(Vec<(FqBiPoly, usize)>, FqBiPoly)> {
    let mut out = Vec::new();
    let df = d(f);
    let mut c = ktx.primitive_part(&ktx.prs_gcd(f, &df));
    let mut w = ktx.exact_div_poly(f, &c)?;
    let mut i = 1;
    while w.deg() > 0 {
        let y = ktx.primitive_part(&ktx.prs_gcd(&w, &c));
        let z = ktx.exact_div_poly(&w, &y)?;
        if z.deg() > 0 {
            out.push((ktx.primitive_part(&z), i));
        }
        i += 1;
        c = ktx.exact_div_poly(&c, &y)?;
        w = y;
    }
    Ok((out, ktx.primitive_part(&c)))
}

/// Squarefree decomposition over `F_q(t)` of a polynomial primitive in `t`.
/// Parts are primitive with leading coefficient monic in `t`.
pub fn squarefree_fqt(ktx: &FqTX, f: &FqBiPoly) -> Result<Vec<SquarefreePart>> {
    if f.deg() == 0 {
        return Err(if f.is_zero() { Error::ZeroPolynomial } else { Error::ConstantPolynomial });
    }
    let mut out = Vec::new();
    sqf_rec(ktx, &ktx.primitive_part(f), 1, &mut out)?;
    Ok(out)
}

fn sqf_rec(ktx: &FqTX, f: &FqBiPoly, mult: usize, out: &mut Vec<SquarefreePart>) -> Result<()> {
    if f.deg() == 0 {
        return Ok(());
    }
    let p = ktx.characteristic() as usize;
    let c = if !ktx.derivative(f).is_zero() {
        let (parts, c) = musser(ktx, f, |g| ktx.derivative(g))?;
        for (z, i) in parts {
            out.push(SquarefreePart { poly: z, multiplicity: mult * i, separable: true });
        }
        c
    } else {
        f.clone()
    };
    if c.deg() == 0 {
        return Ok(());
    }
    // here the X-derivative vanishes
    let rest = if !derivative_t(ktx, &c).is_zero() {
        let (parts, rest) = musser(ktx, &c, |g| derivative_t(ktx, g))?;
        for (z, i) in parts {
            out.push(SquarefreePart { poly: z, multiplicity: mult * i, separable: false });
        }
        rest
    } else {
        c
    };
    if rest.deg() == 0 {
        return Ok(());
    }
    if !is_pth_power(ktx, &rest) {
        return Err(Error::Internal("leftover of squarefree decomposition is not a p-th power".into()));
    }
    sqf_rec(ktx, &ktx.primitive_part(&pth_root(ktx, &rest)), mult * p, out)
}

/// Convex hull of the support points `(deg_t, deg_X)`, counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<(i64, i64)>,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

impl NewtonPolygon {
    /// Hull of a point set by the monotone chain method.
    pub fn hull(mut pts: Vec<(i64, i64)>) -> Self {
        pts.sort();
        pts.dedup();
        if pts.len() <= 2 {
            return NewtonPolygon { vertices: pts };
        }
        let mut lower: Vec<(i64, i64)> = Vec::new();
        for &pt in &pts {
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], pt) <= 0 {
                lower.pop();
            }
            lower.push(pt);
        }
        let mut upper: Vec<(i64, i64)> = Vec::new();
        for &pt in pts.iter().rev() {
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], pt) <= 0 {
                upper.pop();
            }
            upper.push(pt);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        NewtonPolygon { vertices: lower }
    }

    pub fn contains(&self, pt: (i64, i64)) -> bool {
        let v = &self.vertices;
        match v.len() {
            0 => false,
            1 => v[0] == pt,
            2 => {
                cross(v[0], v[1], pt) == 0
                    && pt.0 >= v[0].0.min(v[1].0)
                    && pt.0 <= v[0].0.max(v[1].0)
                    && pt.1 >= v[0].1.min(v[1].1)
                    && pt.1 <= v[0].1.max(v[1].1)
            }
            _ => (0..v.len()).all(|i| cross(v[i], v[(i + 1) % v.len()], pt) >= 0),
        }
    }

    /// Minkowski sum.
    pub fn sum(&self, other: &NewtonPolygon) -> NewtonPolygon {
        let mut pts = Vec::new();
        for a in &self.vertices {
            for b in &other.vertices {
                pts.push((a.0 + b.0, a.1 + b.1));
            }
        }
        NewtonPolygon::hull(pts)
    }

    /// The horizontal section at height `y` as an interval of `x` given by
    /// fractions `(num, den)` with `den > 0`.
    fn section(&self, y: i64) -> Option<((i64, i64), (i64, i64))> {
        let v = &self.vertices;
        let mut lo: Option<(i64, i64)> = None;
        let mut hi: Option<(i64, i64)> = None;
        let mut push = |x: (i64, i64)| {
            let le = |a: (i64, i64), b: (i64, i64)| a.0 * b.1 <= b.0 * a.1;
            if lo.is_none_or(|l| le(x, l)) {
                lo = Some(x);
            }
            if hi.is_none_or(|h| le(h, x)) {
                hi = Some(x);
            }
        };
        for (i, &a) in v.iter().enumerate() {
            if a.1 == y {
                push((a.0, 1));
            }
            let b = v[(i + 1) % v.len()];
            if (a.1 < y && y < b.1) || (b.1 < y && y < a.1) {
                // x = a.0 + (y - a.1) (b.0 - a.0) / (b.1 - a.1)
                let mut den = b.1 - a.1;
                let mut num = a.0 * den + (y - a.1) * (b.0 - a.0);
                if den < 0 {
                    den = -den;
                    num = -num;
                }
                push((num, den));
            }
        }
        Some((lo?, hi?))
    }

    /// `sup { m in N : (m, y) in the polygon }`, if any such `m` exists.
    pub fn max_integer_at(&self, y: i64) -> Option<usize> {
        let ((ln, ld), (hn, hd)) = self.section(y)?;
        let lo = ln.div_euclid(ld) + i64::from(ln.rem_euclid(ld) != 0);
        let hi = hn.div_euclid(hd);
        let lo = lo.max(0);
        (lo <= hi).then_some(hi as usize)
    }
}

pub fn newton_polygon(f: &FqBiPoly) -> Result<NewtonPolygon> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut pts = Vec::new();
    for (j, c) in f.coeffs().iter().enumerate() {
        for (i, a) in c.coeffs().iter().enumerate() {
            if *a != GfElem::default() {
                pts.push((i as i64, j as i64));
            }
        }
    }
    Ok(NewtonPolygon::hull(pts))
}
