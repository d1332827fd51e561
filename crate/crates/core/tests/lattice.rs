use globfactor::lattice::{cutoff_split, fp_intersect, fp_kernel, gram_schmidt, lll_reduce, same_lattice, FpSubspace, IntLattice};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn basis(d: usize) -> impl Strategy<Value = Vec<Vec<BigInt>>> {
    proptest::collection::vec(proptest::collection::vec(-40i64..40, d), d)
        .prop_map(|rows| rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
}

fn gamma() -> impl Strategy<Value = BigRational> {
    prop_oneof![
        Just(BigRational::from_integer(BigInt::from(2))),
        Just(BigRational::new(BigInt::from(3), BigInt::from(2))),
        Just(BigRational::from_integer(BigInt::from(4))),
    ]
}

fn subspace(p: u64, dim: usize) -> impl Strategy<Value = FpSubspace> {
    proptest::collection::vec(proptest::collection::vec(0..p, dim), 0..dim)
        .prop_map(move |vs| FpSubspace::span(p, dim, vs).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lll_is_reduced(d in 2usize..7, seed in any::<u64>(), g in gamma()) {
        let rows = {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            (0..d).map(|_| (0..d).map(|_| BigInt::from(rng.gen_range(-40i64..40))).collect()).collect::<Vec<_>>()
        };
        let lat = IntLattice::new(rows, d).unwrap();
        prop_assume!(gram_schmidt(&lat).is_ok());
        let (red, gso) = lll_reduce(&lat, &g).unwrap();
        prop_assert!(same_lattice(red.basis(), lat.basis()));
        prop_assert_eq!(red.gram_det().unwrap(), lat.gram_det().unwrap());
        prop_assert_eq!(&gram_schmidt(&red).unwrap(), &gso);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let delta = BigRational::new(BigInt::from(1), BigInt::from(4)) + g.recip();
        for i in 1..d {
            for j in 0..i {
                prop_assert!(gso.mu[i][j].abs() <= half);
            }
            let mu = &gso.mu[i][i - 1];
            prop_assert!(&gso.bstar_norm_sq[i] >= &((&delta - mu * mu) * &gso.bstar_norm_sq[i - 1]));
        }
    }

    #[test]
    fn cutoff_keeps_short_vectors(b in basis(4), bound in 1i64..4000) {
        let lat = IntLattice::new(b, 4).unwrap();
        prop_assume!(gram_schmidt(&lat).is_ok());
        let (red, gso) = lll_reduce(&lat, &BigRational::from_integer(BigInt::from(2))).unwrap();
        let bound = BigRational::from_integer(BigInt::from(bound));
        let (kept, t) = cutoff_split(&red, &gso, &bound);
        prop_assert_eq!(kept.rank(), t);
        // every short combination with coefficients in {-1, 0, 1} lies in the kept span
        let rb = red.basis();
        for code in 1..81u32 {
            let mut c = code;
            let coeffs: Vec<i64> = (0..4).map(|_| { let x = (c % 3) as i64 - 1; c /= 3; x }).collect();
            let v: Vec<BigInt> = (0..4).map(|k| (0..4).map(|j| BigInt::from(coeffs[j]) * &rb[j][k]).sum()).collect();
            let n: BigInt = v.iter().map(|x| x * x).sum();
            if n.is_zero() || BigRational::from_integer(n) > bound {
                continue;
            }
            let mut rows = kept.basis().to_vec();
            rows.push(v);
            prop_assert!(gram_schmidt(&IntLattice::new(rows, 4).unwrap()).is_err());
        }
    }

    #[test]
    fn intersection_is_contained(a in subspace(5, 5), b in subspace(5, 5)) {
        let c = fp_intersect(&a, &b).unwrap();
        prop_assert!(c.is_subspace_of(&a));
        prop_assert!(c.is_subspace_of(&b));
        prop_assert!(c.dim() + 5 >= a.dim() + b.dim());
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in proptest::collection::vec(proptest::collection::vec(0u64..7, 6), 0..5)) {
        let k = fp_kernel(7, &rows, 6);
        prop_assert_eq!(k.dim() + FpSubspace::span(7, 6, rows.clone()).unwrap().dim(), 6);
        for v in k.basis() {
            for r in &rows {
                prop_assert_eq!(r.iter().zip(v).map(|(a, b)| a * b).sum::<u64>() % 7, 0);
            }
        }
    }
}
