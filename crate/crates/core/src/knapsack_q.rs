//! Factoring over `Q`: local factors modulo `p^ell` are recombined by
//! lattice reduction on the coefficients of `Phi(g) = f g'/g`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::{Config, PartStats, Strategy};
use crate::hensel::{init_local, LocalFactorization};
use crate::integer::{binomial, isqrt_exact, primes_from, round_div_sqrt, Integers};
use crate::lattice::{cutoff_split, hnf_basis, lll_reduce, same_lattice, solve_integral, IntLattice};
use crate::poly::PolyRing;
use crate::ring::Ring;
use crate::zassenhaus::{try_class, zassenhaus_factor};
use crate::{Error, IntPoly, Result};

/// Number of candidate primes examined when choosing the place.
pub const PRIME_CANDIDATES: usize = 20;

/// Coefficients of `Phi(f_j) mod p^ell`, symmetric lifts, length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiImage {
    pub coeffs: Vec<BigInt>,
}

/// `Phi(f_j) = (f / f_j) f_j'` modulo `p^ell`.
pub fn phi_local(lf: &LocalFactorization<Integers>, j: usize) -> Result<PhiImage> {
    let q = lf.quotient();
    let fj = lf.factors.get(j).ok_or(Error::IndexOutOfRange { index: j as u64, count: lf.r() as u64 })?;
    let (quo, rem) = q.div_rem(&lf.source, fj);
    if !rem.is_zero() {
        return Err(Error::InexactDivision);
    }
    let phi = q.mul(&quo, &q.polys.derivative(fj));
    let n = lf.n();
    let mut coeffs = phi.into_coeffs();
    coeffs.resize(n, BigInt::zero());
    Ok(PhiImage { coeffs })
}

/// `f g'/g` over the integers, for `g` dividing `f`.
pub fn phi_exact(f: &IntPoly, g: &IntPoly) -> Result<IntPoly> {
    let zx = PolyRing::new(Integers);
    let d = zx.derivative(g);
    let fd = zx.mul(f, &d);
    zx.exact_div_poly(&fd, g)
}

/// Coefficient bounds for `Phi(g)`, `g | f`, with `M(f)` replaced by `|f|`.
/// Everything irrational is kept exactly: `B_i = scales[i] * sqrt(norm_sq)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffBounds {
    pub n: usize,
    pub r: usize,
    pub norm_sq: BigInt,
    /// `C(n-1, i) * n`.
    pub scales: Vec<BigInt>,
    /// `B(f)^2 = 4^(n-1) n^2 |f|^2`.
    pub bf_sq: BigInt,
    /// `B'^2 = r^2 + B(f)^2`.
    pub bprime_sq: BigInt,
}

impl CoeffBounds {
    /// Whether `|a| <= B_i`.
    pub fn within_bi(&self, i: usize, a: &BigInt) -> bool {
        a * a <= &self.scales[i] * &self.scales[i] * &self.norm_sq
    }

    /// Whether a polynomial of squared norm `norm_sq` satisfies `|.| <= B(f)`.
    pub fn within_bf(&self, norm_sq: &BigInt) -> bool {
        *norm_sq <= self.bf_sq
    }

    /// Approximate `B_i` for display.
    pub fn bi_approx(&self, i: usize) -> f64 {
        to_f64(&self.scales[i]) * to_f64(&self.norm_sq).sqrt()
    }
}

fn to_f64(x: &BigInt) -> f64 {
    x.to_string().parse().unwrap_or(f64::INFINITY)
}

pub fn coeff_bounds(f: &IntPoly, r: usize) -> CoeffBounds {
    let n = f.deg();
    let norm_sq = f.l2_norm_sq();
    let nn = BigInt::from(n);
    let scales = (0..n)
        .map(|i| BigInt::from(binomial(n as u64 - 1, i as u64)) * &nn)
        .collect();
    let bf_sq = (BigInt::one() << (2 * (n - 1))) * &nn * &nn * &norm_sq;
    let bprime_sq = BigInt::from(r * r) + &bf_sq;
    CoeffBounds { n, r, norm_sq, scales, bf_sq, bprime_sq }
}

/// Rational interval `[lo, hi]` around `sqrt(x)` of width `2^-bits`.
fn sqrt_interval(x: &BigInt, bits: usize) -> (BigRational, BigRational) {
    let s = BigInt::one() << bits;
    let (v, exact) = isqrt_exact(&(x * &s * &s));
    let lo = BigRational::new(v.clone(), s.clone());
    let hi = if exact { lo.clone() } else { BigRational::new(v + 1, s) };
    (lo, hi)
}

/// Smallest `ell >= 0` with `p^ell > x`.
fn ell_above(p: &BigInt, x: &BigRational) -> usize {
    let mut pow = BigRational::one();
    let pr = BigRational::from_integer(p.clone());
    let mut ell = 0;
    while pow <= *x {
        pow *= &pr;
        ell += 1;
    }
    ell
}

/// Smallest `ell` with `p^(ell/n) > |f| (2^(n-1) + n) B' (1 + B')`, the
/// precision at which the all-coefficients lattice yields the exponent
/// lattice in one pass.
pub fn required_ell_allcoeffs(f: &IntPoly, p: u64, bounds: &CoeffBounds) -> usize {
    let n = f.deg();
    let p = BigInt::from(p);
    let c = BigRational::from_integer((BigInt::one() << (n - 1)) + n);
    let q = BigRational::from_integer(bounds.bprime_sq.clone());
    let mut bits = 64;
    loop {
        let (n_lo, n_hi) = sqrt_interval(&bounds.norm_sq, bits);
        let (b_lo, b_hi) = sqrt_interval(&bounds.bprime_sq, bits);
        let lo = &n_lo * &c * (&b_lo + &q);
        let hi = &n_hi * &c * (&b_hi + &q);
        let e_lo = ell_above(&p, &num_traits::pow(lo, n));
        let e_hi = ell_above(&p, &num_traits::pow(hi, n));
        if e_lo == e_hi || bits >= 1 << 14 {
            return e_hi.max(1);
        }
        bits *= 2;
    }
}

/// Smallest `ell` with `p^ell > 2 * 2^n * |f| * |lc(f)|`: enough to read a
/// factor off its canonical lift.
pub fn initial_ell(f: &IntPoly, p: u64) -> usize {
    let n = f.deg();
    let lc = f.lc().expect("nonzero");
    let rhs = (BigInt::one() << (2 * n + 2)) * f.l2_norm_sq() * lc * lc;
    let p2 = BigInt::from(p) * BigInt::from(p);
    let mut pow = p2.clone();
    let mut ell = 1;
    while pow <= rhs {
        pow *= &p2;
        ell += 1;
    }
    ell
}

/// Sublattice of `Z^r` containing the exponent vectors of the true factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentLattice {
    r: usize,
    basis: Vec<Vec<BigInt>>,
}

impl ExponentLattice {
    pub fn full(r: usize) -> Self {
        let basis = (0..r)
            .map(|i| (0..r).map(|j| BigInt::from(u8::from(i == j))).collect())
            .collect();
        ExponentLattice { r, basis }
    }

    /// Lattice generated by arbitrary vectors of length `r`.
    pub fn generated_by(r: usize, gens: &[Vec<BigInt>]) -> Self {
        ExponentLattice { r, basis: hnf_basis(gens) }
    }

    pub fn from_indicators(r: usize, w: &[Vec<u8>]) -> Self {
        let gens: Vec<Vec<BigInt>> = w.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::generated_by(r, &gens)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        solve_integral(&self.basis, v).is_some()
    }

    pub fn same_as(&self, other: &ExponentLattice) -> bool {
        self.r == other.r && same_lattice(&self.basis, &other.basis)
    }
}

/// One step of the coefficient sweep: from `L_{i+1}` to `L_i` using the
/// `X^i` coefficients of the `Phi(f_j)`.
pub fn one_coeff_step(
    lf: &LocalFactorization<Integers>,
    phis: &[PhiImage],
    next: &ExponentLattice,
    i: usize,
    bounds: &CoeffBounds,
    gamma: &BigRational,
) -> Result<ExponentLattice> {
    let r = lf.r();
    let scale = &bounds.scales[i];
    let big_p = round_div_sqrt(&lf.modulus, scale, &bounds.norm_sq);
    if big_p.is_zero() {
        return Ok(next.clone());
    }
    let t: Vec<BigInt> = phis.iter().map(|ph| round_div_sqrt(&ph.coeffs[i], scale, &bounds.norm_sq)).collect();
    let mut rows: Vec<Vec<BigInt>> = next
        .basis
        .iter()
        .map(|e| {
            let a: BigInt = e.iter().zip(&t).map(|(x, y)| x * y).sum();
            let mut v = e.clone();
            v.push(a);
            v
        })
        .collect();
    let mut pv = vec![BigInt::zero(); r];
    pv.push(big_p);
    rows.push(pv);
    let lat = IntLattice::new(rows, r + 1)?;
    let (red, gso) = lll_reduce(&lat, gamma)?;
    let bound = BigRational::from_integer(BigInt::from((r + 2) * (r + 2)));
    let (kept, _) = cutoff_split(&red, &gso, &bound);
    let proj: Vec<Vec<BigInt>> = kept.basis().iter().map(|b| b[..r].to_vec()).collect();
    reduced_exponent_lattice(r, &proj, gamma)
}

fn reduced_exponent_lattice(r: usize, gens: &[Vec<BigInt>], gamma: &BigRational) -> Result<ExponentLattice> {
    let basis = hnf_basis(gens);
    let (red, _) = lll_reduce(&IntLattice::new(basis, r)?, gamma)?;
    Ok(ExponentLattice { r, basis: red.into_basis() })
}

/// The all-coefficients lattice: columns `(e_j, Phi(f_j))` together with
/// `p^ell` times the unit vectors in the coefficient block, reduced and cut
/// off at `B'`, projected onto the first `r` entries.
pub fn solve_all_coeffs(
    lf: &LocalFactorization<Integers>,
    phis: &[PhiImage],
    bounds: &CoeffBounds,
    gamma: &BigRational,
) -> Result<ExponentLattice> {
    let r = lf.r();
    let n = lf.n();
    let mut rows = Vec::with_capacity(r + n);
    for (j, ph) in phis.iter().enumerate() {
        let mut v: Vec<BigInt> = (0..r).map(|k| BigInt::from(u8::from(k == j))).collect();
        v.extend(ph.coeffs.iter().cloned());
        rows.push(v);
    }
    for k in 0..n {
        let mut v = vec![BigInt::zero(); r + n];
        v[r + k] = lf.modulus.clone();
        rows.push(v);
    }
    let lat = IntLattice::new(rows, r + n)?;
    let (red, gso) = lll_reduce(&lat, gamma)?;
    let (kept, _) = cutoff_split(&red, &gso, &BigRational::from_integer(bounds.bprime_sq.clone()));
    let proj: Vec<Vec<BigInt>> = kept.basis().iter().map(|b| b[..r].to_vec()).collect();
    if proj.is_empty() {
        return Ok(ExponentLattice { r, basis: vec![] });
    }
    reduced_exponent_lattice(r, &proj, gamma)
}

/// Groups indices whose entries agree in every basis vector. Succeeds when
/// the indicator vectors of the groups generate the lattice.
pub fn recover_partition(lat: &ExponentLattice) -> Option<Vec<Vec<usize>>> {
    let r = lat.r;
    if lat.rank() == 0 {
        return None;
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut keys: Vec<Vec<&BigInt>> = Vec::new();
    for j in 0..r {
        let key: Vec<&BigInt> = lat.basis.iter().map(|b| &b[j]).collect();
        match keys.iter().position(|k| *k == key) {
            Some(c) => classes[c].push(j),
            None => {
                keys.push(key);
                classes.push(vec![j]);
            }
        }
    }
    if classes.len() != lat.rank() {
        return None;
    }
    // basis vectors are constant on classes; the indicators generate the
    // same lattice iff the coefficient matrix is unimodular
    let m: Vec<Vec<BigRational>> = lat
        .basis
        .iter()
        .map(|b| classes.iter().map(|c| BigRational::from_integer(b[c[0]].clone())).collect())
        .collect();
    if det(m).abs() != BigRational::one() {
        return None;
    }
    Some(classes)
}

fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut d = BigRational::one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&r| !m[r][c].is_zero()) else { return BigRational::zero() };
        if pr != c {
            m.swap(pr, c);
            d = -d;
        }
        d *= &m[c][c];
        let prow = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &prow[c];
            for (x, y) in row.iter_mut().zip(&prow) {
                *x -= &f * y;
            }
        }
    }
    d
}

/// Trial division of the primitive source by the lifted class products.
pub fn reconstruct_factors(lf: &LocalFactorization<Integers>, classes: &[Vec<usize>]) -> Option<Vec<IntPoly>> {
    let zx = PolyRing::new(Integers);
    let mut target = zx.primitive_part(&lf.source);
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

/// Result of factoring one separable polynomial over `Q`.
#[derive(Clone, Debug)]
pub struct QResult {
    /// Content of the input (sign included).
    pub content: BigInt,
    /// Irreducible primitive factors with positive leading coefficient.
    pub factors: Vec<IntPoly>,
    /// Local factor indices of each factor (empty when no place was used).
    pub classes: Vec<Vec<usize>>,
    pub local: Option<LocalFactorization<Integers>>,
    pub stats: PartStats,
}

/// Chooses the prime among the first candidates that minimizes the number
/// of local factors.
pub fn select_prime(f: &IntPoly, config: &Config) -> Result<LocalFactorization<Integers>> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    if let Some(p) = config.prime {
        return init_local(&Integers, f, &BigInt::from(p), &mut rng);
    }
    let lc = f.lc().ok_or(Error::ZeroPolynomial)?;
    let mut best: Option<LocalFactorization<Integers>> = None;
    for (tried, p) in primes_from(5).enumerate() {
        if tried >= PRIME_CANDIDATES && best.is_some() {
            break;
        }
        let bp = BigInt::from(p);
        if (lc % &bp).is_zero() {
            continue;
        }
        match init_local(&Integers, f, &bp, &mut rng) {
            Ok(lf) => {
                config.trace(|| format!("prime {p}: r = {}", lf.r()));
                if best.as_ref().is_none_or(|b| lf.r() < b.r()) {
                    best = Some(lf);
                }
            }
            Err(Error::BadPlace(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(best.expect("some prime is valid for a separable polynomial"))
}

/// Factors a separable nonconstant `f` over `Q`.
pub fn factor_q(f: &IntPoly, config: &Config) -> Result<QResult> {
    let zx = PolyRing::new(Integers);
    if f.deg() == 0 {
        return Err(if f.is_zero() { Error::ZeroPolynomial } else { Error::ConstantPolynomial });
    }
    let (content, pp) = zx.content_primitive(f)?;
    let n = pp.deg();
    let mut stats = PartStats { degree: n, ..Default::default() };
    if n == 1 {
        stats.s = 1;
        stats.r = 1;
        stats.strategy = "trivial".into();
        return Ok(QResult { content, factors: vec![pp], classes: vec![], local: None, stats });
    }
    if zx.prs_gcd(&pp, &zx.derivative(&pp)).deg() > 0 {
        return Err(Error::NotSeparable);
    }
    let lf1 = select_prime(&pp, config)?;
    let p = lf1.place.clone();
    let pu: u64 = p.to_string().parse().expect("small prime");
    let r = lf1.r();
    stats.place = p.to_string();
    stats.r = r;
    config.trace(|| format!("place p = {p}, r = {r}"));
    if r == 1 {
        stats.s = 1;
        stats.ell_final = 1;
        stats.strategy = "trivial".into();
        return Ok(QResult { content, factors: vec![pp], classes: vec![(0..1).collect()], local: Some(lf1), stats });
    }
    let ell0 = initial_ell(&pp, pu);
    let bounds = coeff_bounds(&pp, r);
    let ell_g = required_ell_allcoeffs(&pp, pu, &bounds).max(ell0);
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
            let lf = lf1.lift_to(ell_g)?;
            config.trace(|| format!("all-coefficients lattice at ell = {ell_g}, dimension {}", r + n));
            let phis = (0..r).map(|j| phi_local(&lf, j)).collect::<Result<Vec<_>>>()?;
            let lat = solve_all_coeffs(&lf, &phis, &bounds, &config.gamma)?;
            let classes = recover_partition(&lat)
                .ok_or_else(|| Error::Internal("all-coefficients lattice is not a partition lattice".into()))?;
            let factors = reconstruct_factors(&lf, &classes)
                .ok_or_else(|| Error::Internal("reconstruction failed at the guaranteed precision".into()))?;
            (factors, classes, lf)
        }
        _ => knapsack_sweep(lf1, ell0, ell_g, &bounds, config, &mut stats)?,
    };
    stats.s = factors.len();
    stats.ell_final = lf.ell;
    let mut pairs: Vec<(IntPoly, Vec<usize>)> = factors.into_iter().zip(classes).collect();
    pairs.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let (factors, classes) = pairs.into_iter().unzip();
    Ok(QResult { content, factors, classes, local: Some(lf), stats })
}

type Sweep = (Vec<IntPoly>, Vec<Vec<usize>>, LocalFactorization<Integers>);

fn knapsack_sweep(
    lf1: LocalFactorization<Integers>,
    ell0: usize,
    ell_g: usize,
    bounds: &CoeffBounds,
    config: &Config,
    stats: &mut PartStats,
) -> Result<Sweep> {
    let r = lf1.r();
    let n = lf1.n();
    let mut ell = ell0;
    let mut lf = lf1.lift_to(ell)?;
    let mut lat = ExponentLattice::full(r);
    let attempt = |lf: &LocalFactorization<Integers>, lat: &ExponentLattice| {
        recover_partition(lat).and_then(|c| reconstruct_factors(lf, &c).map(|f| (f, c)))
    };
    if let Some((f, c)) = attempt(&lf, &lat) {
        return Ok((f, c, lf));
    }
    loop {
        let phis = (0..r).map(|j| phi_local(&lf, j)).collect::<Result<Vec<_>>>()?;
        for i in (0..n - 1).rev() {
            lat = one_coeff_step(&lf, &phis, &lat, i, bounds, &config.gamma)?;
            config.trace(|| format!("ell = {ell}, coefficient {i}: lattice rank {}", lat.rank()));
            if lat.rank() == 0 {
                return Err(Error::Internal("knapsack lattice lost the true factors".into()));
            }
            if let Some((f, c)) = attempt(&lf, &lat) {
                return Ok((f, c, lf));
            }
        }
        if ell >= ell_g {
            break;
        }
        ell = (2 * ell).min(ell_g);
        lf = lf.lift_to(ell)?;
        stats.escalations += 1;
        config.trace(|| format!("raising precision to ell = {ell}"));
    }
    config.trace(|| format!("all-coefficients pass at ell = {ell}"));
    stats.strategy = Strategy::AllCoeffs.name().into();
    let phis = (0..r).map(|j| phi_local(&lf, j)).collect::<Result<Vec<_>>>()?;
    let lat = solve_all_coeffs(&lf, &phis, bounds, &config.gamma)?;
    match attempt(&lf, &lat) {
        Some((f, c)) => Ok((f, c, lf)),
        None => Err(Error::Internal("all-coefficients pass did not produce a partition".into())),
    }
}
