//! Recombination over `F_q(t)`: the exponent lattice of the true factors is
//! cut out by linear conditions over `F_p` on the high `t`-coefficients of
//! the logarithmic derivatives of the local factors.

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bivariate::{deg_t, newton_polygon, rings, total_degree, FqT, FqTX};
use crate::config::{BoundMode, Config, PartStats, Strategy};
use crate::ext::describe_poly;
use crate::ff_factor::{is_irreducible, monic_polys, poly_key};
use crate::gf::GaloisField;
use crate::hensel::{init_local, LocalFactorization};
use crate::lattice::{fp_intersect, fp_kernel, FpSubspace};
use crate::ring::FiniteField;
use crate::zassenhaus::{try_class, zassenhaus_factor};
use crate::{Error, FqBiPoly, FqPoly, Result};

pub type FqtLocal = LocalFactorization<FqT>;

/// Upper bounds on `deg_t` of the `X^i` coefficient of `f g'/g` for every
/// factor `g`. `None` means no integer point of the Newton polygon lies at
/// that height, so the coefficient vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBounds {
    pub bi: Vec<Option<usize>>,
    /// Mode actually used (a total-degree request falls back to `TDeg` when
    /// it does not apply).
    pub mode: BoundMode,
    /// Above this `t`-degree of `v^ell` the kernel equals the exponent
    /// lattice of the true factors.
    pub termination: usize,
}

fn total_applies(f: &FqBiPoly) -> bool {
    total_degree(f) <= f.deg()
}

pub fn degree_bounds(f: &FqBiPoly, mode: BoundMode) -> Result<DegreeBounds> {
    let n = f.deg();
    if n == 0 {
        return Err(if f.is_zero() { Error::ZeroPolynomial } else { Error::ConstantPolynomial });
    }
    let dt = deg_t(f);
    let tdeg_term = (2 * n - 1) * dt;
    let total_term = total_applies(f).then(|| n * (n - 1));
    let (bi, mode, termination) = match mode {
        BoundMode::TDeg => (vec![Some(dt); n], BoundMode::TDeg, tdeg_term),
        BoundMode::Total if total_term.is_some() => {
            ((0..n).map(|i| Some(n - 1 - i)).collect(), BoundMode::Total, total_term.unwrap())
        }
        BoundMode::Total => (vec![Some(dt); n], BoundMode::TDeg, tdeg_term),
        BoundMode::Newton => {
            let np = newton_polygon(f)?;
            let bi = (0..n).map(|i| np.max_integer_at(i as i64 + 1)).collect();
            (bi, BoundMode::Newton, total_term.map_or(tdeg_term, |t| t.min(tdeg_term)))
        }
    };
    Ok(DegreeBounds { bi, mode, termination })
}

/// Smallest precision with `ell * deg v > bound`.
pub fn ell_above(deg_v: usize, bound: usize) -> usize {
    bound / deg_v + 1
}

/// Largest place degree tried during place selection.
pub fn place_degree_cap(f: &FqBiPoly, q: u64) -> usize {
    let x = (f.deg() * (1 + deg_t(f))) as f64;
    2 * (1 + x.log(q as f64).ceil().max(0.0) as usize)
}

/// First place `v` (by degree, then enumeration order) with `v` not
/// dividing the leading coefficient and a squarefree reduction.
pub fn select_place(f: &FqBiPoly, kt: &FqT, config: &Config) -> Result<FqtLocal> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    if let Some(v) = &config.place {
        return init_local(kt, f, v, &mut rng);
    }
    let k = kt.base();
    let cap = place_degree_cap(f, k.q());
    for d in 1..=cap {
        for v in monic_polys(k, d) {
            if !is_irreducible(kt, &v)? {
                continue;
            }
            match init_local(kt, f, &v, &mut rng) {
                Ok(lf) => return Ok(lf),
                Err(Error::BadPlace(_)) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    Err(Error::BadPlace(format!("no usable place of degree at most {cap}")))
}

/// `Phi(f_j) = (f / f_j) f_j'` modulo `v^ell`.
pub fn phi_fqt(lf: &FqtLocal, j: usize) -> Result<FqBiPoly> {
    let q = lf.quotient();
    let fj = lf.factors.get(j).ok_or(Error::IndexOutOfRange { index: j as u64, count: lf.r() as u64 })?;
    let (quo, rem) = q.div_rem(&lf.source, fj);
    if !rem.is_zero() {
        return Err(Error::InexactDivision);
    }
    Ok(q.mul(&quo, &q.polys.derivative(fj)))
}

/// The matrices over `F_p` whose common kernel is the knapsack subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMatrixSet {
    pub sigma: usize,
    pub p: u64,
    pub r: usize,
    /// One matrix per `X^i`; rows are `(t^k, F_p coordinate)` pairs for
    /// `k >= B_i + 1`, columns are local factors.
    pub matrices: Vec<Vec<Vec<u64>>>,
}

pub fn build_matrices(lf: &FqtLocal, bounds: &DegreeBounds) -> Result<CoeffMatrixSet> {
    let k = lf.ring.base();
    let sigma = lf.modulus.deg();
    let n = lf.n();
    let r = lf.r();
    let w = k.w();
    let phis = (0..r).map(|j| phi_fqt(lf, j)).collect::<Result<Vec<_>>>()?;
    let starts: Vec<usize> = bounds.bi.iter().map(|b| b.map_or(0, |b| b + 1)).collect();
    if starts.iter().all(|&m| m >= sigma) {
        return Err(Error::PrecisionTooLow(format!("t-degree {sigma} of v^ell does not exceed any bound")));
    }
    let zero = FqPoly::zero();
    let mut matrices = Vec::with_capacity(n);
    for (i, &m) in starts.iter().enumerate() {
        let mut rows = Vec::new();
        for deg in m..sigma {
            let mut block = vec![vec![0u64; r]; w];
            for (j, phi) in phis.iter().enumerate() {
                let a = phi.coeff(i).unwrap_or(&zero);
                if let Some(c) = a.coeff(deg) {
                    for (l, x) in k.to_prime_coords(c).into_iter().enumerate() {
                        block[l][j] = x;
                    }
                }
            }
            rows.extend(block);
        }
        matrices.push(rows);
    }
    Ok(CoeffMatrixSet { sigma, p: k.p(), r, matrices })
}

/// Intersection of the kernels of all matrices.
pub fn solve_kernels(set: &CoeffMatrixSet) -> Result<FpSubspace> {
    let mut acc = FpSubspace::full(set.p, set.r);
    for m in &set.matrices {
        if m.is_empty() {
            continue;
        }
        acc = fp_intersect(&acc, &fp_kernel(set.p, m, set.r))?;
    }
    Ok(acc)
}

/// Succeeds when the subspace is spanned by the indicator vectors of a
/// partition of the local factors, which then is its reduced echelon basis.
pub fn recover_partition_fp(space: &FpSubspace) -> Option<Vec<Vec<usize>>> {
    let r = space.ambient();
    if space.dim() == 0 {
        return None;
    }
    let mut seen = vec![false; r];
    let mut classes = Vec::with_capacity(space.dim());
    for b in space.basis() {
        if b.iter().any(|&x| x > 1) {
            return None;
        }
        let class: Vec<usize> = (0..r).filter(|&j| b[j] == 1).collect();
        for &j in &class {
            if seen[j] {
                return None;
            }
            seen[j] = true;
        }
        classes.push(class);
    }
    seen.iter().all(|&s| s).then_some(classes)
}

/// Trial division of the source by the lifted class products.
pub fn reconstruct_fqt(lf: &FqtLocal, classes: &[Vec<usize>]) -> Option<Vec<FqBiPoly>> {
    let ktx = FqTX::new(lf.ring.clone());
    let mut target = ktx.primitive_part(&lf.source);
    let mut out = Vec::with_capacity(classes.len());
    let mut order: Vec<&Vec<usize>> = classes.iter().collect();
    order.sort_by_key(|c| c.len());
    for class in order {
        let (g, h) = try_class(lf, &target, class)?;
        out.push(g);
        target = h;
    }
    (target.deg() == 0).then_some(out)
}

/// Sort key: `X`-degree, then the coefficients in enumeration order.
pub fn bi_key(k: &GaloisField, f: &FqBiPoly) -> (usize, Vec<(usize, Vec<BigUint>)>) {
    (f.len(), f.coeffs().iter().map(|c| poly_key(k, c)).collect())
}

/// Result of factoring one separable polynomial over `F_q(t)`.
#[derive(Clone, Debug)]
pub struct FqtResult {
    /// Irreducible factors, primitive in `t` with leading coefficient monic.
    pub factors: Vec<FqBiPoly>,
    pub classes: Vec<Vec<usize>>,
    pub local: Option<FqtLocal>,
    pub bounds: Option<DegreeBounds>,
    pub stats: PartStats,
}

/// Factors `f`, primitive in `t` and separable in `X`, over `F_q(t)`.
pub fn factor_fqt(k: &GaloisField, f: &FqBiPoly, config: &Config) -> Result<FqtResult> {
    let (kt, ktx) = rings(k);
    if f.deg() == 0 {
        return Err(if f.is_zero() { Error::ZeroPolynomial } else { Error::ConstantPolynomial });
    }
    let pp = ktx.primitive_part(f);
    let n = pp.deg();
    let mut stats = PartStats { degree: n, ..Default::default() };
    let trivial = |stats: &mut PartStats| {
        stats.s = 1;
        stats.r = stats.r.max(1);
        stats.strategy = "trivial".into();
    };
    if n == 1 {
        trivial(&mut stats);
        return Ok(FqtResult { factors: vec![pp], classes: vec![], local: None, bounds: None, stats });
    }
    let d = ktx.derivative(&pp);
    if d.is_zero() || ktx.prs_gcd(&pp, &d).deg() > 0 {
        return Err(Error::NotSeparable);
    }
    let lf1 = select_place(&pp, &kt, config)?;
    let r = lf1.r();
    let dv = lf1.place.deg();
    stats.place = describe_poly(k, &lf1.place, "t");
    stats.r = r;
    config.trace(|| format!("place v = {}, r = {r}", stats.place));
    if r == 1 {
        trivial(&mut stats);
        stats.ell_final = 1;
        stats.sigma = Some(dv);
        return Ok(FqtResult { factors: vec![pp], classes: vec![vec![0]], local: Some(lf1), bounds: None, stats });
    }
    let bounds = degree_bounds(&pp, config.bound_mode)?;
    let ell0 = ell_above(dv, deg_t(&pp));
    let ell_term = ell_above(dv, bounds.termination).max(ell0);
    let strategy = match config.strategy {
        Strategy::Auto if r <= config.zassenhaus_max_r => Strategy::Zassenhaus,
        Strategy::Auto => Strategy::Knapsack,
        s => s,
    };
    stats.strategy = strategy.name().into();
    let (factors, classes, lf) = match strategy {
        Strategy::Zassenhaus => {
            let lf = lf1.lift_to(ell0)?;
            config.trace(|| format!("subset search at ell = {ell0}"));
            let rec = zassenhaus_factor(&lf)?;
            (rec.factors, rec.classes, lf)
        }
        Strategy::AllCoeffs => {
            let lf = lf1.lift_to(ell_term)?;
            config.trace(|| format!("single kernel at ell = {ell_term}"));
            // no rows at all means no constraint, so the kernel is everything
            let space = match build_matrices(&lf, &bounds) {
                Ok(set) => solve_kernels(&set)?,
                Err(Error::PrecisionTooLow(_)) => FpSubspace::full(k.p(), r),
                Err(e) => return Err(e),
            };
            let classes = recover_partition_fp(&space)
                .ok_or_else(|| Error::Internal("kernel is not a partition space at the guaranteed precision".into()))?;
            let factors = reconstruct_fqt(&lf, &classes)
                .ok_or_else(|| Error::Internal("reconstruction failed at the guaranteed precision".into()))?;
            (factors, classes, lf)
        }
        _ => kernel_sweep(lf1, ell0, ell_term, &bounds, config, &mut stats)?,
    };
    stats.s = factors.len();
    stats.ell_final = lf.ell;
    stats.sigma = Some(lf.modulus.deg());
    let mut pairs: Vec<(FqBiPoly, Vec<usize>)> = factors.into_iter().zip(classes).collect();
    pairs.sort_by_cached_key(|a| bi_key(k, &a.0));
    let (factors, classes) = pairs.into_iter().unzip();
    Ok(FqtResult { factors, classes, local: Some(lf), bounds: Some(bounds), stats })
}

type Sweep = (Vec<FqBiPoly>, Vec<Vec<usize>>, FqtLocal);

fn kernel_sweep(
    lf1: FqtLocal,
    ell0: usize,
    ell_term: usize,
    bounds: &DegreeBounds,
    config: &Config,
    stats: &mut PartStats,
) -> Result<Sweep> {
    let r = lf1.r();
    let p = lf1.ring.base().p();
    let mut ell = ell0;
    let mut lf = lf1.lift_to(ell)?;
    let mut space = FpSubspace::full(p, r);
    loop {
        match build_matrices(&lf, bounds) {
            Ok(set) => space = fp_intersect(&space, &solve_kernels(&set)?)?,
            Err(Error::PrecisionTooLow(_)) => {}
            Err(e) => return Err(e),
        }
        config.trace(|| format!("ell = {ell}, sigma = {}: kernel dimension {}", lf.modulus.deg(), space.dim()));
        if space.dim() == 0 {
            return Err(Error::Internal("kernel lost the true factors".into()));
        }
        if let Some(c) = recover_partition_fp(&space) {
            if let Some(f) = reconstruct_fqt(&lf, &c) {
                return Ok((f, c, lf));
            }
        }
        if ell >= ell_term {
            return Err(Error::Internal("kernel did not reach the factor lattice at the guaranteed precision".into()));
        }
        ell = (2 * ell).min(ell_term);
        lf = lf.lift_to(ell)?;
        stats.escalations += 1;
        config.trace(|| format!("raising precision to ell = {ell}"));
    }
}

/// `F_p`-dimension of the kernel at the current precision, for diagnostics.
pub fn kernel_dimension(lf: &FqtLocal, bounds: &DegreeBounds) -> Result<usize> {
    match build_matrices(lf, bounds) {
        Ok(set) => Ok(solve_kernels(&set)?.dim()),
        Err(Error::PrecisionTooLow(_)) => Ok(lf.r()),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn setup(p: u64) -> (GaloisField, FqT, FqTX) {
        let k = GaloisField::prime(p).unwrap();
        let (kt, ktx) = rings(&k);
        (k, kt, ktx)
    }

    fn bi(k: &GaloisField, ktx: &FqTX, terms: &[(usize, usize, i64)]) -> FqBiPoly {
        let kt = ktx.base();
        let mut f = ktx.zero();
        for &(a, b, c) in terms {
            f = ktx.add(&f, &ktx.monomial(kt.monomial(k.from_int(c), a), b));
        }
        f
    }

    #[test]
    fn bounds_examples() {
        let (k, _, ktx) = setup(3);
        let f = bi(&k, &ktx, &[(0, 2, 1), (1, 0, -1)]);
        let b = degree_bounds(&f, BoundMode::TDeg).unwrap();
        assert_eq!(b.bi, vec![Some(1), Some(1)]);
        assert_eq!(b.termination, 3);
        let b = degree_bounds(&f, BoundMode::Total).unwrap();
        assert_eq!(b.bi, vec![Some(1), Some(0)]);
        assert_eq!(b.termination, 2);
        let b = degree_bounds(&f, BoundMode::Newton).unwrap();
        // segment from (1, 0) to (0, 2): height 1 has x = 1/2, height 2 has x = 0
        assert_eq!(b.bi, vec![None, Some(0)]);
    }

    #[test]
    fn place_selection() {
        let (k, kt, ktx) = setup(3);
        // X^2 - t: v = t is bad (reduction X^2), v = t + 1 gives X^2 + 1
        let f = bi(&k, &ktx, &[(0, 2, 1), (1, 0, -1)]);
        let lf = select_place(&f, &kt, &Config::default()).unwrap();
        assert_eq!(lf.place, kt.poly(vec![k.one(), k.one()]));
        assert_eq!(lf.r(), 1);
        // X^2 - t^2 - 1 at t reduces to (X - 1)(X + 1)
        let g = bi(&k, &ktx, &[(0, 2, 1), (2, 0, -1), (0, 0, -1)]);
        let lf = select_place(&g, &kt, &Config::default()).unwrap();
        assert_eq!(lf.place, kt.x());
    }

    #[test]
    fn kernel_shrinks_to_partition() {
        let (k, _, ktx) = setup(5);
        // (X^2 - t)(X^2 - t - 1)
        let a = bi(&k, &ktx, &[(0, 2, 1), (1, 0, -1)]);
        let b = bi(&k, &ktx, &[(0, 2, 1), (1, 0, -1), (0, 0, -1)]);
        let f = ktx.mul(&a, &b);
        let cfg = Config::default().with_strategy(Strategy::Knapsack);
        let res = factor_fqt(&k, &f, &cfg).unwrap();
        let mut want = vec![a, b];
        want.sort_by_cached_key(|g| bi_key(&k, g));
        assert_eq!(res.factors, want);
        let lf = res.local.unwrap();
        let bounds = res.bounds.unwrap();
        let mut dims = Vec::new();
        for ell in 1..=lf.ell {
            dims.push(kernel_dimension(&lf.truncate(ell).unwrap(), &bounds).unwrap());
        }
        assert!(dims.windows(2).all(|w| w[0] >= w[1]));
        assert_eq!(*dims.last().unwrap(), 2);
    }

    #[test]
    fn strategies_agree() {
        let (k, _, ktx) = setup(2);
        let a = bi(&k, &ktx, &[(0, 3, 1), (1, 1, 1), (0, 0, 1)]);
        let b = bi(&k, &ktx, &[(0, 2, 1), (2, 1, 1), (1, 0, 1)]);
        let f = ktx.mul(&a, &b);
        let mut outs = Vec::new();
        for s in [Strategy::Zassenhaus, Strategy::Knapsack, Strategy::AllCoeffs] {
            for m in [BoundMode::Newton, BoundMode::Total, BoundMode::TDeg] {
                let cfg = Config { strategy: s, bound_mode: m, ..Config::default() };
                outs.push(factor_fqt(&k, &f, &cfg).unwrap().factors);
            }
        }
        assert!(outs.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(outs[0].len(), 2);
    }

    #[test]
    fn partition_checks() {
        let s = FpSubspace::span(3, 3, vec![vec![1, 0, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(recover_partition_fp(&s), Some(vec![vec![0, 2], vec![1]]));
        let s = FpSubspace::span(3, 3, vec![vec![1, 2, 0]]).unwrap();
        assert_eq!(recover_partition_fp(&s), None);
        let s = FpSubspace::span(3, 3, vec![vec![1, 1, 0]]).unwrap();
        assert_eq!(recover_partition_fp(&s), None);
    }
}
