mod common;

use std::sync::Arc;

use common::{nonzero_poly_strategy, rat};
use lnd_core::poly::{Poly, Rat, RatFunc, VarTable};
use lnd_core::valuation::{base_value, gauss_lex_value, BaseValuation, LexValue};
use num_traits::Zero;
use proptest::prelude::*;

fn vars() -> Arc<VarTable> {
    VarTable::with_params(&["a", "b"], &["x", "y"]).unwrap()
}

fn valuation() -> impl Strategy<Value = BaseValuation> {
    let v = vars();
    prop_oneof![
        Just(BaseValuation::Trivial),
        Just(BaseValuation::OrderAtInfinity { param: "a".into() }),
        (-2i64..=2).prop_map(|c| BaseValuation::OrderAtValue { param: "b".into(), value: rat(c) }),
        Just(BaseValuation::OrderAtIrreducible {
            poly: &Poly::var(&v, 0) * &Poly::var(&v, 0) + Poly::one(&v),
        }),
    ]
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (nonzero_poly_strategy(vars(), 3, 3), nonzero_poly_strategy(vars(), 2, 2))
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

/// Value of a polynomial univariate in `x` over ℚ(a, b): lowest power of `x`
/// and the base value of its coefficient, read directly off the terms.
fn lowest_term_oracle(v: &BaseValuation, p: &Poly) -> (i64, i64) {
    let vars = p.vars();
    let m = p.terms().map(|(mono, _)| mono.exps()[2]).min().unwrap();
    let coeff = Poly::from_terms(
        vars,
        p.terms().filter(|(mono, _)| mono.exps()[2] == m).map(|(mono, c)| {
            let mut e = mono.clone();
            e.0[2] = 0;
            (e, c.clone())
        }),
    );
    (m as i64, base_value(v, &RatFunc::from_poly(coeff)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn multiplicative(v in valuation(), f in ratfunc(), g in ratfunc()) {
        let lhs = gauss_lex_value(&v, &(&f * &g)).unwrap();
        let rhs = &gauss_lex_value(&v, &f).unwrap() + &gauss_lex_value(&v, &g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ultrametric(v in valuation(), f in ratfunc(), g in ratfunc()) {
        let s = &f + &g;
        prop_assume!(!s.is_zero());
        let (vf, vg) = (gauss_lex_value(&v, &f).unwrap(), gauss_lex_value(&v, &g).unwrap());
        let vs = gauss_lex_value(&v, &s).unwrap();
        let min: LexValue = vf.clone().min(vg.clone());
        prop_assert!(vs >= min);
        if vf != vg {
            prop_assert_eq!(vs, min);
        }
    }

    #[test]
    fn parameter_only_values_are_base_values(v in valuation(), p in nonzero_poly_strategy(vars(), 3, 3)) {
        // drop main variables
        let q = p.eval_var(2, &Rat::zero()).eval_var(3, &Rat::zero());
        prop_assume!(!q.is_zero());
        let f = RatFunc::from_poly(q);
        let val = gauss_lex_value(&v, &f).unwrap();
        prop_assert_eq!(val, LexValue { main: vec![0, 0], base: base_value(&v, &f).unwrap() });
    }

    #[test]
    fn univariate_matches_lowest_term(v in valuation(), p in nonzero_poly_strategy(vars(), 3, 4)) {
        let q = p.eval_var(3, &Rat::zero());
        prop_assume!(!q.is_zero());
        let val = gauss_lex_value(&v, &RatFunc::from_poly(q.clone())).unwrap();
        let (m, base) = lowest_term_oracle(&v, &q);
        prop_assert_eq!(val, LexValue { main: vec![m, 0], base });
    }
}
