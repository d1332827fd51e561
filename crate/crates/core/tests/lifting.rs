mod common;

use common::*;
use globfactor::bivariate::rings;
use globfactor::hensel::init_local;
use globfactor::knapsack_fqt::select_place;
use globfactor::{Config, GaloisField, Integers, Poly, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn separable_int() -> impl Strategy<Value = globfactor::IntPoly> {
    proptest::collection::vec(-30i64..30, 3..9)
        .prop_map(|cs| Poly::from_i64s(&cs))
        .prop_filter("separable", |f| f.deg() >= 2 && is_separable_int(f))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn integer_lifts(f in separable_int(), pi in 0usize..5, a in 1usize..6, b in 1usize..6) {
        let p = BigInt::from([5, 7, 11, 13, 17][pi]);
        let Ok(lf1) = init_local(&Integers, &f, &p, &mut ChaCha8Rng::seed_from_u64(0)) else {
            return Ok(());
        };
        let zx = zx();
        let target = a + b;
        let direct = lf1.lift_to(target).unwrap();
        let twice = lf1.lift_to(a).unwrap().lift_to(target).unwrap();
        prop_assert_eq!(&direct.factors, &twice.factors);
        let m = p.pow(target as u32);
        let diff = zx.sub(&zx.scale(&zx.product(&direct.factors), &direct.leading), &f);
        prop_assert!(diff.coeffs().iter().all(|c| c.is_multiple_of(&m)));
        for g in &direct.factors {
            prop_assert!(zx.is_monic(g));
            prop_assert!(g.coeffs().iter().all(|c| BigInt::from(2) * c.abs() <= m));
        }
        // truncating recovers the lower lift
        prop_assert_eq!(direct.truncate(a).unwrap().factors, lf1.lift_to(a).unwrap().factors);
    }

    #[test]
    fn function_field_lifts(seed in any::<u64>(), which in 0usize..2, a in 1usize..4, b in 1usize..4) {
        let k = [GaloisField::prime(3).unwrap(), GaloisField::new(2, 2, None).unwrap()][which].clone();
        let (kt, ktx) = rings(&k);
        let item = fqt_corpus(&mut ChaCha8Rng::seed_from_u64(seed), &k, 1, 5, 3).remove(0);
        let lf1 = select_place(&item.f, &kt, &Config::default()).unwrap();
        let target = a + b;
        let direct = lf1.lift_to(target).unwrap();
        let twice = lf1.lift_to(a).unwrap().lift_to(target).unwrap();
        prop_assert_eq!(&direct.factors, &twice.factors);
        let m = kt.pow(&lf1.place, target as u64);
        let diff = ktx.sub(&ktx.scale(&ktx.product(&direct.factors), &direct.leading), &item.f);
        prop_assert!(diff.coeffs().iter().all(|c| kt.rem(c, &m).is_zero()));
        for g in &direct.factors {
            prop_assert!(ktx.is_monic(g));
            prop_assert!(g.coeffs().iter().all(|c| c.is_zero() || c.deg() < m.deg()));
        }
    }
}
