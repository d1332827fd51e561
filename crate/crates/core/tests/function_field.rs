mod common;

use common::*;
use globfactor::bivariate::{deg_t, newton_polygon, rings, total_degree};
use globfactor::knapsack_fqt::{build_matrices, degree_bounds, factor_fqt, solve_kernels};
use globfactor::lattice::FpSubspace;
use globfactor::{factor_bivariate, BoundMode, Config, Error, GaloisField, Ring, Strategy as Method};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field() -> impl Strategy<Value = GaloisField> {
    prop_oneof![
        Just(GaloisField::prime(2).unwrap()),
        Just(GaloisField::prime(3).unwrap()),
        Just(GaloisField::prime(5).unwrap()),
        Just(GaloisField::new(2, 2, None).unwrap()),
    ]
}

fn mode() -> impl Strategy<Value = BoundMode> {
    prop_oneof![Just(BoundMode::Newton), Just(BoundMode::Total), Just(BoundMode::TDeg)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn newton_polygon_is_additive(k in field(), seed in any::<u64>()) {
        let (_, ktx) = rings(&k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = rand_bi_poly(&mut rng, &k, 3, 3);
        let h = rand_bi_poly(&mut rng, &k, 3, 3);
        let lhs = newton_polygon(&ktx.mul(&g, &h)).unwrap();
        let rhs = newton_polygon(&g).unwrap().sum(&newton_polygon(&h).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kernels_shrink_and_keep_true_factors(k in field(), seed in any::<u64>(), m in mode()) {
        let (_, ktx) = rings(&k);
        let it = fqt_corpus(&mut ChaCha8Rng::seed_from_u64(seed), &k, 1, 8, 5).remove(0);
        let f = ktx.primitive_part(&it.f);
        let config = Config { bound_mode: m, ..Config::default() };
        let res = factor_fqt(&k, &f, &config).unwrap();
        prop_assert_eq!(ktx.product(&res.factors), f.clone());
        let (Some(lf), Some(bounds)) = (res.local.as_ref(), res.bounds.as_ref()) else { return Ok(()) };
        let r = lf.r();
        let w: Vec<Vec<u64>> =
            res.classes.iter().map(|c| (0..r).map(|i| u64::from(c.contains(&i))).collect()).collect();
        let top = lf.lift_to(lf.ell.max(4)).unwrap();
        let mut space = FpSubspace::full(k.p(), r);
        let mut prev = r;
        for ell in 1..=top.ell {
            let at = top.truncate(ell).unwrap();
            match build_matrices(&at, bounds) {
                Ok(set) => {
                    let ker = solve_kernels(&set).unwrap();
                    prop_assert!(ker.dim() <= prev);
                    prev = ker.dim();
                    space = ker;
                }
                Err(Error::PrecisionTooLow(_)) => {}
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            }
            for v in &w {
                prop_assert!(space.contains(v));
            }
        }
        // a larger precision than the terminal one gives exactly the factor space
        let sigma = top.modulus.deg();
        if sigma > bounds.termination {
            prop_assert_eq!(space.dim(), w.len());
        }
    }

    #[test]
    fn degree_bounds_hold(k in field(), seed in any::<u64>()) {
        let (_, ktx) = rings(&k);
        let it = fqt_corpus(&mut ChaCha8Rng::seed_from_u64(seed), &k, 1, 8, 5).remove(0);
        let f = ktx.primitive_part(&it.f);
        let n = f.deg();
        for m in [BoundMode::Newton, BoundMode::Total, BoundMode::TDeg] {
            let b = degree_bounds(&f, m).unwrap();
            prop_assert_eq!(b.bi.len(), n);
            let tdeg = (2 * n - 1) * deg_t(&f);
            match b.mode {
                BoundMode::Total => prop_assert_eq!(b.termination, n * (n - 1)),
                _ => prop_assert!(b.termination <= tdeg),
            }
            if b.mode == BoundMode::Total {
                prop_assert!(total_degree(&f) <= n);
            }
            for g in &it.parts {
                let phi = ktx.exact_div_poly(&ktx.mul(&f, &ktx.derivative(g)), g).unwrap();
                for i in 0..n {
                    let c = ktx.coeff_or_zero(&phi, i);
                    match b.bi[i] {
                        None => prop_assert!(c.is_zero()),
                        Some(d) => prop_assert!(c.is_zero() || c.deg() <= d),
                    }
                }
            }
        }
    }

    #[test]
    fn strategies_agree(k in field(), seed in any::<u64>()) {
        let (_, ktx) = rings(&k);
        let it = fqt_corpus(&mut ChaCha8Rng::seed_from_u64(seed), &k, 1, 8, 5).remove(0);
        let mut prev = None;
        for s in [Method::Knapsack, Method::AllCoeffs, Method::Zassenhaus] {
            let fac = factor_bivariate(&k, &it.f, &Config::default().with_strategy(s)).unwrap();
            let back = fac.factors.iter().fold(ktx.constant(fac.unit.clone()), |a, (g, e)| ktx.mul(&a, &ktx.pow_poly(g, *e as u64)));
            prop_assert_eq!(&back, &it.f);
            if let Some(p) = &prev {
                prop_assert_eq!(p, &fac.factors);
            }
            prev = Some(fac.factors);
        }
    }
}
