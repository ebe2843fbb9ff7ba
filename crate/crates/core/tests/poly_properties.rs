mod common;

use std::sync::Arc;

use common::{nonzero_poly_strategy, poly_strategy};
use lnd_core::poly::{poly_divides, poly_gcd, Poly, RatFunc, VarTable};
use num_traits::Signed;
use proptest::prelude::*;

fn vars() -> Arc<VarTable> {
    VarTable::with_params(&["t"], &["x", "y"]).unwrap()
}

fn small() -> impl Strategy<Value = Poly> {
    poly_strategy(vars(), 3, 4)
}

fn small_nonzero() -> impl Strategy<Value = Poly> {
    nonzero_poly_strategy(vars(), 3, 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in small(), b in small(), c in small()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!((&a - &a).to_string(), "0");
        prop_assert_eq!((&a * &b).to_string(), (&b * &a).to_string());
    }

    #[test]
    fn gcd_divides_and_scales(a in small_nonzero(), b in small_nonzero(), c in small_nonzero()) {
        let g = poly_gcd(&a, &b).unwrap();
        prop_assert!(poly_divides(&g, &a).unwrap().is_some());
        prop_assert!(poly_divides(&g, &b).unwrap().is_some());
        let gc = poly_gcd(&(&a * &c), &(&b * &c)).unwrap();
        let expected = (&g * &c).integer_primitive();
        prop_assert_eq!(gc, expected);
    }

    #[test]
    fn ratfunc_matches_cross_multiplication(
        a in small(), b in small_nonzero(), c in small(), d in small_nonzero()
    ) {
        let f = RatFunc::new(a.clone(), b.clone()).unwrap();
        let g = RatFunc::new(c.clone(), d.clone()).unwrap();
        // unreduced oracle results as (num, den)
        let same = |r: &RatFunc, n: &Poly, m: &Poly| r.num() * m == r.den() * n;
        let sum = &f + &g;
        prop_assert!(same(&sum, &(&(&a * &d) + &(&c * &b)), &(&b * &d)));
        let diff = &f - &g;
        prop_assert!(same(&diff, &(&(&a * &d) - &(&c * &b)), &(&b * &d)));
        let prod = &f * &g;
        prop_assert!(same(&prod, &(&a * &c), &(&b * &d)));
        if !c.is_zero() {
            let quot = &f / &g;
            prop_assert!(same(&quot, &(&a * &d), &(&b * &c)));
        }
        // reduced form: coprime, positive leading denominator coefficient
        prop_assert!(sum.den().leading_coeff().is_positive());
        if !sum.is_zero() {
            prop_assert!(poly_gcd(sum.num(), sum.den()).unwrap().is_constant());
        }
    }
}
