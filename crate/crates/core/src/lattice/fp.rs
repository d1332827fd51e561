use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::{Error, Result};

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv(a: u64, p: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, b, p);
        }
        b = mulm(b, b, p);
        e >>= 1;
    }
    r
}

/// Reduced row echelon form over `F_p`; zero rows are dropped. Returns the
/// rows and their pivot columns.
fn rref_with_pivots(mut rows: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let cols = rows.first().map_or(0, |r| r.len());
    for r in rows.iter_mut() {
        for x in r.iter_mut() {
            *x %= p;
        }
    }
    let mut rank = 0;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(pr) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(rank, pr);
        let iv = inv(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = mulm(*x, iv, p);
        }
        let prow = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (x, y) in row.iter_mut().zip(&prow) {
                *x = (*x + p - mulm(f, *y, p)) % p;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// Canonical basis (reduced row echelon form) of the span of `rows`.
pub fn rref_fp(rows: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    rref_with_pivots(rows, p).0
}

/// Reduced row echelon form over the rationals of integer vectors.
pub fn rref_rational(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pr) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(rank, pr);
        let iv = m[rank][col].recip();
        for x in m[rank].iter_mut() {
            *x *= &iv;
        }
        let prow = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    m
}

/// Subspace of `F_p^n` stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpSubspace {
    p: u64,
    ambient: usize,
    basis: Vec<Vec<u64>>,
}

impl FpSubspace {
    pub fn span(p: u64, ambient: usize, vectors: Vec<Vec<u64>>) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch);
        }
        Ok(FpSubspace { p, ambient, basis: rref_fp(vectors, p) })
    }

    pub fn full(p: u64, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| (0..ambient).map(|j| u64::from(i == j)).collect())
            .collect();
        FpSubspace { p, ambient, basis }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref_fp(rows, self.p).len() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &FpSubspace) -> bool {
        self.p == other.p && self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    /// `{y : <y, x> = 0 for all x}`.
    pub fn annihilator(&self) -> FpSubspace {
        fp_kernel(self.p, &self.basis, self.ambient)
    }
}

/// Kernel `{x : M x = 0}` of a matrix with `cols` columns given by rows.
pub fn fp_kernel(p: u64, rows: &[Vec<u64>], cols: usize) -> FpSubspace {
    let (r, pivots) = rref_with_pivots(rows.to_vec(), p);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = (p - row[free] % p) % p;
        }
        basis.push(v);
    }
    FpSubspace { p, ambient: cols, basis: rref_fp(basis, p) }
}

/// Intersection as the kernel of the stacked annihilators.
pub fn fp_intersect(a: &FpSubspace, b: &FpSubspace) -> Result<FpSubspace> {
    if a.p != b.p {
        return Err(Error::PrimeMismatch);
    }
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch);
    }
    let mut rows = a.annihilator().basis;
    rows.extend(b.annihilator().basis);
    Ok(fp_kernel(a.p, &rows, a.ambient))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_examples() {
        assert_eq!(fp_kernel(3, &[vec![0, 0], vec![0, 0]], 2).dim(), 2);
        assert_eq!(fp_kernel(3, &[vec![1, 0], vec![0, 1]], 2).dim(), 0);
        assert_eq!(fp_kernel(2, &[vec![1, 1]], 2).basis(), &[vec![1, 1]]);
    }

    #[test]
    fn rref_examples() {
        assert_eq!(rref_fp(vec![vec![1, 1], vec![0, 1]], 2), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(rref_fp(vec![], 5), Vec::<Vec<u64>>::new());
        let q = rref_rational(&[vec![BigInt::from(2), BigInt::from(2)]]);
        assert_eq!(q, vec![vec![BigRational::from_integer(1.into()), BigRational::from_integer(1.into())]]);
    }

    #[test]
    fn intersection() {
        let a = FpSubspace::span(5, 3, vec![vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let b = FpSubspace::span(5, 3, vec![vec![1, 1, 1], vec![0, 1, 0]]).unwrap();
        let c = fp_intersect(&a, &b).unwrap();
        assert_eq!(c.basis(), &[vec![0, 1, 0]]);
        assert!(c.is_subspace_of(&a) && c.is_subspace_of(&b));
        let d = FpSubspace::full(3, 3);
        assert_eq!(fp_intersect(&a, &d), Err(Error::PrimeMismatch));
    }
}
