use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Row Hermite normal form of the lattice generated by `gens`: an echelon
/// basis with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped, so the result is a basis.
pub fn hnf_basis(gens: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = gens.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let dim = gens.first().map_or(0, |r| r.len());
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    let mut pivots = Vec::new();
    for col in 0..dim {
        loop {
            // smallest nonzero entry in this column becomes the pivot candidate
            let best = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| !r[col].is_zero())
                .min_by(|a, b| a.1[col].abs().cmp(&b.1[col].abs()))
                .map(|(i, _)| i);
            let Some(bi) = best else { break };
            let piv = rows.swap_remove(bi);
            let mut done = true;
            for r in rows.iter_mut() {
                if r[col].is_zero() {
                    continue;
                }
                let q = r[col].div_floor(&piv[col]);
                for (x, y) in r.iter_mut().zip(&piv) {
                    *x -= &q * y;
                }
                if !r[col].is_zero() {
                    done = false;
                }
            }
            rows.retain(|r| r.iter().any(|x| !x.is_zero()));
            if done {
                let piv = if piv[col].is_negative() { piv.iter().map(|x| -x).collect() } else { piv };
                out.push(piv);
                pivots.push(col);
                break;
            }
            rows.push(piv);
        }
    }
    for i in 0..out.len() {
        let (c, p) = (pivots[i], out[i][pivots[i]].clone());
        for j in 0..i {
            let q = out[j][c].div_floor(&p);
            if q.is_zero() {
                continue;
            }
            let row = out[i].clone();
            for (x, y) in out[j].iter_mut().zip(&row) {
                *x -= &q * y;
            }
        }
    }
    out
}

/// Whether two generating sets span the same lattice.
pub fn same_lattice(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> bool {
    hnf_basis(a) == hnf_basis(b)
}

/// Integer coefficients `c` with `sum c_i basis_i = v`, when they exist.
/// `basis` must be linearly independent.
pub fn solve_integral(basis: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let k = basis.len();
    if k == 0 {
        return v.iter().all(|x| x.is_zero()).then(Vec::new);
    }
    let dim = v.len();
    // columns are the basis vectors, augmented by v; solve over Q then check
    let mut m: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| BigRational::from_integer(b[i].clone())).collect();
            row.push(BigRational::from_integer(v[i].clone()));
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..k {
        let Some(pr) = (rank..dim).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, pr);
        let inv = m[rank][col].recip();
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        let prow = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if m[rank..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut c = vec![BigInt::zero(); k];
    for (i, &col) in pivot_cols.iter().enumerate() {
        if !m[i][k].is_integer() {
            return None;
        }
        c[col] = m[i][k].to_integer();
    }
    Some(c)
}
