mod common;

use std::sync::Arc;

use common::{nonzero_poly_strategy, poly_strategy};
use lnd_core::derivation::{Algebra, Derivation};
use lnd_core::dsl::{parse_model, parse_poly, print_model, Check, CheckKind, Expectation, Model, NamedDerivation};
use lnd_core::poly::VarTable;
use proptest::prelude::*;

fn vars() -> Arc<VarTable> {
    VarTable::with_params(&["t"], &["x", "y"]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_text_parses_back(p in poly_strategy(vars(), 4, 6)) {
        prop_assert_eq!(parse_poly(&vars(), &p.to_string()).unwrap(), p);
    }

    #[test]
    fn models_round_trip(
        gens in prop::collection::vec(nonzero_poly_strategy(vars(), 3, 3), 0..4),
        images in prop::collection::vec(poly_strategy(vars(), 3, 3), 3),
        element in poly_strategy(vars(), 3, 2),
        degree in 0u32..8,
    ) {
        let v = vars();
        let mut m = Model::new(&v);
        m.algebras.push(Algebra::new(&v, gens).unwrap().named("B"));
        m.derivations.push(NamedDerivation { name: "D".into(), derivation: Derivation::new(&v, images).unwrap() });
        let mut c = Check::new(CheckKind::Membership, Some("mem"));
        c.fields.algebra = Some("B".into());
        c.fields.element = Some(element);
        c.expect = vec![Expectation::bare("member")];
        m.checks.push(c);
        let mut k = Check::new(CheckKind::Kernel, None);
        k.fields.derivations = Some(vec!["D".into()]);
        k.fields.degree = Some(degree);
        m.checks.push(k);
        let text = print_model(&m);
        let back = parse_model(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(print_model(&back), text);
    }
}
