//! Exhaustive subset recombination of lifted local factors.

use crate::hensel::LocalFactorization;
use crate::poly::{Poly, PolyRing};
use crate::ring::{Order, Ring};
use crate::{Error, Result};

type Elem<O> = <O as Ring>::Elem;

/// Global factors together with the local factor indices of each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recombination<E> {
    pub factors: Vec<Poly<E>>,
    pub classes: Vec<Vec<usize>>,
}

/// Subsets of `remaining` by increasing cardinality, lexicographic within
/// one cardinality, up to half the size of `remaining`.
#[derive(Clone, Debug)]
pub struct SubsetState {
    pub remaining: Vec<usize>,
    cursor: Vec<usize>,
}

impl SubsetState {
    pub fn new(remaining: Vec<usize>) -> Self {
        SubsetState { remaining, cursor: Vec::new() }
    }

    /// Next subset as positions into `remaining`.
    pub fn next_subset(&mut self) -> Option<Vec<usize>> {
        let n = self.remaining.len();
        let k = self.cursor.len();
        // advance the current combination
        let mut i = k;
        while i > 0 && self.cursor[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i > 0 {
            self.cursor[i - 1] += 1;
            for j in i..k {
                self.cursor[j] = self.cursor[j - 1] + 1;
            }
        } else {
            let k = k + 1;
            if k > n / 2 {
                return None;
            }
            self.cursor = (0..k).collect();
        }
        Some(self.cursor.clone())
    }

    /// Drops the positions in `taken` and restarts at cardinality one.
    pub fn absorb(&mut self, taken: &[usize]) {
        let keep: Vec<usize> = self
            .remaining
            .iter()
            .enumerate()
            .filter(|(i, _)| !taken.contains(i))
            .map(|(_, &x)| x)
            .collect();
        self.remaining = keep;
        self.cursor.clear();
    }
}

/// If `lc(target) * prod_{i in class} f_i` (canonically lifted) has a
/// primitive part dividing `target`, returns that part and the cofactor.
pub fn try_class<O: Order>(
    lf: &LocalFactorization<O>,
    target: &Poly<Elem<O>>,
    class: &[usize],
) -> Option<(Poly<Elem<O>>, Poly<Elem<O>>)> {
    let ring = &lf.ring;
    let ox = PolyRing::new(ring.clone());
    let q = lf.quotient();
    let lc = target.lc()?;
    // constant term test before forming the full product
    let c0 = class.iter().fold(ring.reduce(lc, &lf.modulus), |acc, &i| {
        let fi0 = ox.coeff_or_zero(&lf.factors[i], 0);
        ring.reduce(&ring.mul(&acc, &fi0), &lf.modulus)
    });
    let t0 = ox.coeff_or_zero(target, 0);
    if !ring.is_zero(&t0) && (ring.is_zero(&c0) || ring.exact_div(&ring.mul(lc, &t0), &c0).is_none()) {
        return None;
    }
    let prod = q.scale(&q.product(class.iter().map(|&i| &lf.factors[i])), lc);
    if prod.deg() == 0 {
        return None;
    }
    let g = ox.primitive_part(&prod);
    let h = ox.exact_div_poly(target, &g).ok()?;
    Some((g, h))
}

/// Complete recombination by subset search. `lf.source` must be primitive
/// and the precision large enough for factors to be recovered from their
/// canonical lifts.
pub fn zassenhaus_factor<O: Order>(lf: &LocalFactorization<O>) -> Result<Recombination<O::Elem>> {
    let ox = PolyRing::new(lf.ring.clone());
    let mut target = ox.primitive_part(&lf.source);
    let mut state = SubsetState::new((0..lf.r()).collect());
    let mut out = Recombination { factors: Vec::new(), classes: Vec::new() };
    while let Some(pos) = state.next_subset() {
        let class: Vec<usize> = pos.iter().map(|&i| state.remaining[i]).collect();
        if let Some((g, h)) = try_class(lf, &target, &class) {
            out.factors.push(g);
            out.classes.push(class);
            target = h;
            state.absorb(&pos);
        }
    }
    if state.remaining.is_empty() {
        if target.deg() != 0 {
            return Err(Error::Internal("recombination left a nonconstant cofactor".into()));
        }
    } else {
        out.factors.push(ox.primitive_part(&target));
        out.classes.push(state.remaining.clone());
    }
    Ok(out)
}

/// Indicator vectors of the global factors in terms of local factors.
pub fn oracle_w<O: Order>(lf: &LocalFactorization<O>) -> Result<Vec<Vec<u8>>> {
    let rec = zassenhaus_factor(lf)?;
    let mut w: Vec<Vec<u8>> = rec
        .classes
        .iter()
        .map(|c| (0..lf.r()).map(|i| u8::from(c.contains(&i))).collect())
        .collect();
    w.sort();
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hensel::init_local;
    use crate::integer::Integers;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn local(cs: &[i64], p: i64, ell: usize) -> LocalFactorization<Integers> {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        init_local(&Integers, &Poly::from_i64s(cs), &BigInt::from(p), &mut rng)
            .unwrap()
            .lift_to(ell)
            .unwrap()
    }

    #[test]
    fn subset_order() {
        let mut s = SubsetState::new(vec![0, 1, 2, 3]);
        let mut seen = Vec::new();
        while let Some(x) = s.next_subset() {
            seen.push(x);
        }
        assert_eq!(seen.len(), 4 + 6);
        assert_eq!(seen[0], vec![0]);
        assert_eq!(seen[4], vec![0, 1]);
    }

    #[test]
    fn examples() {
        let rec = zassenhaus_factor(&local(&[-1, 0, 1], 5, 3)).unwrap();
        assert_eq!(rec.factors.len(), 2);
        assert_eq!(oracle_w(&local(&[-1, 0, 1], 5, 3)).unwrap(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(oracle_w(&local(&[1, 0, 1], 5, 3)).unwrap(), vec![vec![1, 1]]);
        let sd = local(&[1, 0, -10, 0, 1], 7, 6);
        assert_eq!(sd.r(), 2);
        assert_eq!(zassenhaus_factor(&sd).unwrap().factors, vec![Poly::from_i64s(&[1, 0, -10, 0, 1])]);
    }

    #[test]
    fn product_of_quadratics() {
        // (X^2 + 1)(X^2 - 2) splits into four linears mod 17
        let lf = local(&[-2, 0, -1, 0, 1], 17, 6);
        assert_eq!(lf.r(), 4);
        let rec = zassenhaus_factor(&lf).unwrap();
        let mut fs = rec.factors.clone();
        fs.sort();
        let mut want = vec![Poly::from_i64s(&[1, 0, 1]), Poly::from_i64s(&[-2, 0, 1])];
        want.sort();
        assert_eq!(fs, want);
    }
}
