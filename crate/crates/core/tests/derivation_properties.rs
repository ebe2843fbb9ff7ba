mod common;

use std::sync::Arc;

use common::{random_nonzero_poly, random_poly, random_triangular, rat};
use lnd_core::derivation::{dixmier_decompose, dixmier_reconstruct, Derivation};
use lnd_core::invariants::{kernel_basis_bounded, TruncationSpec};
use lnd_core::poly::{poly_divides, Poly, RatFunc, VarTable};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn vars() -> Arc<VarTable> {
    VarTable::main_only(&["x", "y", "z"]).unwrap()
}

const ALL: [usize; 3] = [0, 1, 2];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn leibniz(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = vars();
        // arbitrary, not necessarily nilpotent
        let d = Derivation::new(&v, (0..3).map(|_| random_poly(&mut rng, &v, &ALL, 3, 2)).collect()).unwrap();
        let f = random_poly(&mut rng, &v, &ALL, 4, 3);
        let g = random_poly(&mut rng, &v, &ALL, 4, 3);
        let lhs = d.apply(&(&f * &g)).unwrap();
        let rhs = &(&f * &d.apply(&g).unwrap()) + &(&g * &d.apply(&f).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dividing_own_image_forces_zero(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = vars();
        let d = random_triangular(&mut rng, &v, 2);
        let f = random_nonzero_poly(&mut rng, &v, &ALL, 3, 3);
        let df = d.apply(&f).unwrap();
        if poly_divides(&f, &df).unwrap().is_some() {
            prop_assert!(df.is_zero(), "{} divides D({}) = {}", f, f, df);
        }
    }

    #[test]
    fn kernel_is_factorially_closed(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = vars();
        let d = random_triangular(&mut rng, &v, 1);
        let kernel = kernel_basis_bounded(&d, TruncationSpec::degree(2)).unwrap().basis;
        let k = kernel.iter().fold(Poly::zero(&v), |acc, b| &acc + &b.scale(&rat(rand::Rng::random_range(&mut rng, -3..=3))));
        let r = random_nonzero_poly(&mut rng, &v, &ALL, 3, 2);
        let s = random_nonzero_poly(&mut rng, &v, &ALL, 3, 2);
        for (f, g) in [(k.clone(), r.clone()), (r, s)] {
            if f.is_zero() || g.is_zero() {
                continue;
            }
            if d.apply(&(&f * &g)).unwrap().is_zero() {
                prop_assert!(d.apply(&f).unwrap().is_zero());
                prop_assert!(d.apply(&g).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn exp_is_an_automorphism(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = vars();
        let d = random_triangular(&mut rng, &v, 2);
        let f = random_poly(&mut rng, &v, &ALL, 3, 2);
        let g = random_poly(&mut rng, &v, &ALL, 3, 2);
        let ef = d.exp_map(&f).unwrap();
        let eg = d.exp_map(&g).unwrap();
        prop_assert_eq!(d.exp_map(&(&f * &g)).unwrap(), &ef * &eg);
        prop_assert_eq!(d.exp_map(&(&f + &g)).unwrap(), &ef + &eg);
        prop_assert_eq!(d.neg().exp_map(&ef).unwrap(), f);
    }

    #[test]
    fn dixmier_reconstructs_with_kernel_coefficients(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = VarTable::main_only(&["x", "y"]).unwrap();
        let b = random_poly(&mut rng, &v, &[0, 1], 5, 6);
        // partial in y with slice y, and y d/dx with slice x
        let cases = [
            (Derivation::partial(&v, 1, Poly::one(&v)), Poly::var(&v, 1)),
            (Derivation::partial(&v, 0, Poly::var(&v, 1)), Poly::var(&v, 0)),
        ];
        for (d, s) in cases {
            let coeffs = dixmier_decompose(&d, &s, &b).unwrap();
            let a = d.apply(&s).unwrap();
            prop_assert_eq!(dixmier_reconstruct(&coeffs, &s, &a).unwrap(), RatFunc::from_poly(b.clone()));
            for c in &coeffs {
                prop_assert!(d.apply_ratfunc(c).unwrap().is_zero());
            }
        }
    }
}
