use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Lattice given by a list of basis vectors of equal dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    basis: Vec<Vec<BigInt>>,
    dim: usize,
}

impl IntLattice {
    pub fn new(basis: Vec<Vec<BigInt>>, dim: usize) -> Result<Self> {
        if basis.iter().any(|b| b.len() != dim) {
            return Err(Error::DimensionMismatch);
        }
        Ok(IntLattice { basis, dim })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let dim = rows.first().map_or(0, |r| r.len());
        let basis = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        IntLattice::new(basis, dim).expect("rows of equal length")
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<BigInt>> {
        self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Determinant of the Gram matrix (the squared covolume).
    pub fn gram_det(&self) -> Result<BigInt> {
        let g = gram_schmidt(self)?;
        let prod = g.bstar_norm_sq.iter().fold(BigRational::one(), |a, b| a * b);
        Ok(prod.to_integer())
    }
}

/// Exact Gram–Schmidt data: `b_i = b*_i + sum_{j<i} mu[i][j] b*_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSOData {
    pub mu: Vec<Vec<BigRational>>,
    pub bstar_norm_sq: Vec<BigRational>,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Gram–Schmidt orthogonalization over the rationals.
pub fn gram_schmidt(lat: &IntLattice) -> Result<GSOData> {
    let n = lat.rank();
    let mut mu = vec![Vec::new(); n];
    let mut norms: Vec<BigRational> = Vec::with_capacity(n);
    // r[i][j] = <b_i, b*_j>
    let mut r: Vec<Vec<BigRational>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..i {
            let mut v = BigRational::from_integer(dot(&lat.basis[i], &lat.basis[j]));
            for k in 0..j {
                v -= &mu[j][k] * &r[i][k];
            }
            mu[i].push(&v / &norms[j]);
            r[i].push(v);
        }
        let mut v = BigRational::from_integer(dot(&lat.basis[i], &lat.basis[i]));
        for k in 0..i {
            v -= &mu[i][k] * &r[i][k];
        }
        if v.is_zero() {
            return Err(Error::DependentBasis);
        }
        norms.push(v);
    }
    Ok(GSOData { mu, bstar_norm_sq: norms })
}

/// Nearest integer to `a / b` for `b > 0`, halves rounded up.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    (a * BigInt::from(2) + b).div_floor(&(b * BigInt::from(2)))
}

/// LLL reduction with parameter `gamma > 4/3`, i.e. Lovász constant
/// `delta = 1/4 + 1/gamma`. Integral version: all quantities are kept as
/// integers `d_i` (Gram determinants) and `lambda_ij = d_j mu_ij`.
pub fn lll_reduce(lat: &IntLattice, gamma: &BigRational) -> Result<(IntLattice, GSOData)> {
    let four_thirds = BigRational::new(BigInt::from(4), BigInt::from(3));
    if *gamma <= four_thirds {
        return Err(Error::InvalidArgument("gamma must exceed 4/3".into()));
    }
    let delta = BigRational::new(BigInt::from(1), BigInt::from(4)) + gamma.recip();
    let (da, db) = (delta.numer().clone(), delta.denom().clone());
    let n = lat.rank();
    if n == 0 {
        return Ok((lat.clone(), GSOData { mu: vec![], bstar_norm_sq: vec![] }));
    }
    // 1-based indices as in the textbook description; slot 0 unused
    let mut b: Vec<Vec<BigInt>> = std::iter::once(vec![]).chain(lat.basis.iter().cloned()).collect();
    let mut d = vec![BigInt::zero(); n + 1];
    let mut lam = vec![vec![BigInt::zero(); n + 1]; n + 1];
    d[0] = BigInt::one();
    d[1] = dot(&b[1], &b[1]);
    if d[1].is_zero() {
        return Err(Error::DependentBasis);
    }
    let mut k = 2;
    let mut kmax = 1;
    while k <= n {
        if k > kmax {
            kmax = k;
            for j in 1..=k {
                let mut u = dot(&b[k], &b[j]);
                for i in 1..j {
                    u = (&d[i] * &u - &lam[k][i] * &lam[j][i]) / &d[i - 1];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    if u.is_zero() {
                        return Err(Error::DependentBasis);
                    }
                    d[k] = u;
                }
            }
        }
        loop {
            red(&mut b, &mut lam, &d, k, k - 1);
            let lhs = &db * (&d[k] * &d[k - 2] + &lam[k][k - 1] * &lam[k][k - 1]);
            let rhs = &da * &d[k - 1] * &d[k - 1];
            if lhs < rhs {
                swap(&mut b, &mut lam, &mut d, k, kmax);
                if k > 2 {
                    k -= 1;
                }
            } else {
                for l in (1..k - 1).rev() {
                    red(&mut b, &mut lam, &d, k, l);
                }
                k += 1;
                break;
            }
        }
    }
    let mut mu = vec![Vec::new(); n];
    let mut norms = Vec::with_capacity(n);
    for i in 1..=n {
        for j in 1..i {
            mu[i - 1].push(BigRational::new(lam[i][j].clone(), d[j].clone()));
        }
        norms.push(BigRational::new(d[i].clone(), d[i - 1].clone()));
    }
    b.remove(0);
    Ok((IntLattice { basis: b, dim: lat.dim }, GSOData { mu, bstar_norm_sq: norms }))
}

fn red(b: &mut [Vec<BigInt>], lam: &mut [Vec<BigInt>], d: &[BigInt], k: usize, l: usize) {
    if (&lam[k][l] * BigInt::from(2)).abs() <= d[l] {
        return;
    }
    let q = round_div(&lam[k][l], &d[l]);
    let bl = b[l].clone();
    for (x, y) in b[k].iter_mut().zip(&bl) {
        *x -= &q * y;
    }
    lam[k][l] -= &q * &d[l];
    for i in 1..l {
        let t = &q * &lam[l][i];
        lam[k][i] -= t;
    }
}

fn swap(b: &mut [Vec<BigInt>], lam: &mut [Vec<BigInt>], d: &mut [BigInt], k: usize, kmax: usize) {
    b.swap(k, k - 1);
    for j in 1..k - 1 {
        let t = lam[k][j].clone();
        lam[k][j] = std::mem::replace(&mut lam[k - 1][j], t);
    }
    let l = lam[k][k - 1].clone();
    let bb = (&d[k - 2] * &d[k] + &l * &l) / &d[k - 1];
    for i in k + 1..=kmax {
        let t = lam[i][k].clone();
        lam[i][k] = (&d[k] * &lam[i][k - 1] - &l * &t) / &d[k - 1];
        lam[i][k - 1] = (&bb * &t + &l * &lam[i][k]) / &d[k];
    }
    d[k - 1] = bb;
}

/// Keeps the first `t` vectors, `t` minimal with `|b*_j|^2 > bound_sq` for
/// every `j > t`. Any lattice vector of squared length `<= bound_sq` lies in
/// the span of the kept vectors.
pub fn cutoff_split(lat: &IntLattice, gso: &GSOData, bound_sq: &BigRational) -> (IntLattice, usize) {
    let mut t = gso.bstar_norm_sq.len();
    while t > 0 && gso.bstar_norm_sq[t - 1] > *bound_sq {
        t -= 1;
    }
    let kept = IntLattice { basis: lat.basis[..t].to_vec(), dim: lat.dim };
    (kept, t)
}
