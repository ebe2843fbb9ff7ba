//! Worked example algebras with their derivations and scripted checks.

use serde::Serialize;

use crate::derivation::{Algebra, Derivation};
use crate::dsl::{print_model, Check, CheckKind, Expectation, Model, NamedDerivation};
use crate::error::CatalogError;
use crate::poly::{Poly, VarTable};
use crate::valuation::BaseValuation;

/// Default word length for catalog ML windows.
pub const DEFAULT_WORD_LENGTH: u32 = 4;
/// Default ambient degree for catalog kernel and plinth windows.
pub const DEFAULT_DEGREE: u32 = 6;

/// A catalog example. The model holds the single algebra `B`, the
/// derivations `D1, D2, …` and the scripted checks with expected outcomes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub provenance: String,
    pub model: Model,
}

impl CatalogEntry {
    pub fn algebra(&self) -> &Algebra {
        &self.model.algebras[0]
    }

    pub fn derivations(&self) -> Vec<&Derivation> {
        self.model.derivations.iter().map(|d| &d.derivation).collect()
    }

    pub fn checks(&self) -> &[Check] {
        &self.model.checks
    }

    /// Serialized form, prefixed by the provenance note as a comment.
    pub fn to_dsl(&self) -> String {
        let mut s = String::new();
        for line in self.provenance.lines() {
            s.push_str("# ");
            s.push_str(line);
            s.push('\n');
        }
        s.push_str(&print_model(&self.model));
        s
    }
}

fn check(kind: CheckKind, name: &str) -> Check {
    Check::new(kind, Some(name))
}

fn names(ds: &[&str]) -> Option<Vec<String>> {
    Some(ds.iter().map(|s| s.to_string()).collect())
}

fn stability_and_lnd(checks: &mut Vec<Check>, d: &str, max_index: i64, vars: &std::sync::Arc<VarTable>) {
    let mut s = check(CheckKind::Stability, &format!("stable_{d}"));
    s.fields.algebra = Some("B".into());
    s.fields.derivation = Some(d.into());
    s.expect = vec![Expectation::bare("stable")];
    checks.push(s);
    let mut l = check(CheckKind::Lnd, &format!("lnd_{d}"));
    l.fields.algebra = Some("B".into());
    l.fields.derivation = Some(d.into());
    l.expect = vec![Expectation::bare("nilpotent"), Expectation::new("max_index", vec![Poly::from_int(vars, max_index)])];
    checks.push(l);
}

fn named(vars: &std::sync::Arc<VarTable>, pairs: &[(&str, Poly)]) -> Derivation {
    Derivation::from_named(vars, pairs).expect("catalog variables exist")
}

/// `B = ℚ[x, y, r₁x, r₁y, …, r_m x, r_m y]` over parameters `r₁ … r_m`,
/// with `D1 = y ∂/∂x` and `D2 = x ∂/∂y`.
pub fn build_counterexample(m: i64) -> Result<CatalogEntry, CatalogError> {
    if m < 1 {
        return Err(CatalogError::InvalidParameter(m));
    }
    let params: Vec<String> = (1..=m).map(|i| format!("r{i}")).collect();
    let vars = VarTable::with_params(&params, &["x", "y"]).expect("distinct names");
    let x = Poly::var_named(&vars, "x").expect("x");
    let y = Poly::var_named(&vars, "y").expect("y");
    let mut gens = vec![x.clone(), y.clone()];
    for r in &params {
        let r = Poly::var_named(&vars, r).expect("param");
        gens.push(&r * &x);
        gens.push(&r * &y);
    }
    let b = Algebra::new(&vars, gens).expect("nonzero generators").named("B");
    let mut model = Model::new(&vars);
    model.algebras.push(b);
    model.derivations.push(NamedDerivation { name: "D1".into(), derivation: named(&vars, &[("x", y.clone())]) });
    model.derivations.push(NamedDerivation { name: "D2".into(), derivation: named(&vars, &[("y", x.clone())]) });

    let mut checks = Vec::new();
    stability_and_lnd(&mut checks, "D1", 3, &vars);
    stability_and_lnd(&mut checks, "D2", 3, &vars);
    let mut ml = check(CheckKind::Ml, "ml");
    ml.fields.algebra = Some("B".into());
    ml.fields.derivations = names(&["D1", "D2"]);
    ml.fields.word_length = Some(DEFAULT_WORD_LENGTH);
    ml.expect = vec![Expectation::bare("constants_only")];
    checks.push(ml);
    let mut rank = check(CheckKind::Rank, "rank");
    rank.fields.derivations = names(&["D1", "D2"]);
    rank.fields.elements = Some(vec![x.clone(), y.clone()]);
    rank.expect = vec![Expectation::new("det", vec![&x * &y])];
    checks.push(rank);
    let mut val = check(CheckKind::Valuation, "r1_not_in_B");
    val.fields.algebra = Some("B".into());
    val.fields.element = Some(Poly::var_named(&vars, "r1").expect("r1"));
    val.fields.valuation = Some(BaseValuation::OrderAtInfinity { param: "r1".into() });
    val.expect = vec![Expectation::bare("certificate")];
    checks.push(val);
    model.checks = checks;

    Ok(CatalogEntry {
        id: format!("counterexample(m={m})"),
        provenance: format!(
            "Counterexample family, m = {m}: B = k[x, y, r_i x, r_i y], D1 = y d/dx, D2 = x d/dy.\n\
             Frac B = K(x, y) with K = k(r_1, ..., r_m) is recorded here, not machine-checked."
        ),
        model,
    })
}

/// `B = ℚ[x, y, tx, ty] ⊂ ℚ[t, x, y]` with `D1 = y ∂/∂x`, `D2 = x ∂/∂y`,
/// `D3 = ∂/∂t`.
pub fn build_xytxty() -> CatalogEntry {
    let vars = VarTable::with_params(&["t"], &["x", "y"]).expect("distinct names");
    let v = |n: &str| Poly::var_named(&vars, n).expect("declared");
    let (t, x, y) = (v("t"), v("x"), v("y"));
    let b = Algebra::new(&vars, vec![x.clone(), y.clone(), &t * &x, &t * &y]).expect("nonzero").named("B");
    let mut model = Model::new(&vars);
    model.algebras.push(b);
    model.derivations.push(NamedDerivation { name: "D1".into(), derivation: named(&vars, &[("x", y.clone())]) });
    model.derivations.push(NamedDerivation { name: "D2".into(), derivation: named(&vars, &[("y", x.clone())]) });
    model.derivations.push(NamedDerivation { name: "D3".into(), derivation: named(&vars, &[("t", Poly::one(&vars))]) });

    let mut checks = Vec::new();
    for d in ["D1", "D2", "D3"] {
        stability_and_lnd(&mut checks, d, if d == "D3" { 2 } else { 3 }, &vars);
    }
    let mut ml = check(CheckKind::Ml, "ml");
    ml.fields.algebra = Some("B".into());
    ml.fields.derivations = names(&["D1", "D2", "D3"]);
    ml.fields.word_length = Some(DEFAULT_WORD_LENGTH);
    ml.expect = vec![Expectation::bare("constants_only")];
    checks.push(ml);
    let mut k3 = check(CheckKind::Ml, "kernel_D3");
    k3.fields.algebra = Some("B".into());
    k3.fields.derivations = names(&["D3"]);
    k3.fields.word_length = Some(2);
    k3.expect = vec![Expectation::bare("extra"), Expectation::new("within", vec![x.clone(), y.clone()])];
    checks.push(k3);
    let mut rank = check(CheckKind::Rank, "rank");
    rank.fields.derivations = names(&["D1", "D2", "D3"]);
    rank.fields.elements = Some(vec![x.clone(), y.clone(), &t * &x]);
    rank.expect = vec![Expectation::new("det", vec![&(&x * &x) * &y])];
    checks.push(rank);
    let mut find = check(CheckKind::FindRank, "find_rank");
    find.fields.derivations = names(&["D1", "D2", "D3"]);
    find.fields.algebra = Some("B".into());
    find.fields.cap = Some(2);
    find.expect = vec![Expectation::new("rank", vec![Poly::from_int(&vars, 3)]), Expectation::new("det", vec![&(&x * &x) * &y])];
    checks.push(find);
    let mut grading = check(CheckKind::Grading, "grading");
    grading.fields.algebra = Some("B".into());
    grading.fields.weights = Some(vec![("x".into(), 1), ("y".into(), 1), ("t".into(), -1)]);
    grading.expect = vec![Expectation::bare("graded_nonneg")];
    checks.push(grading);
    let mut val = check(CheckKind::Valuation, "t_not_in_B");
    val.fields.algebra = Some("B".into());
    val.fields.element = Some(t.clone());
    val.fields.valuation = Some(BaseValuation::OrderAtInfinity { param: "t".into() });
    val.expect = vec![
        Expectation::bare("certificate"),
        Expectation::new("value", vec![Poly::zero(&vars), Poly::zero(&vars), Poly::from_int(&vars, -1)]),
    ];
    checks.push(val);
    let mut mem = check(CheckKind::Membership, "t_non_member");
    mem.fields.algebra = Some("B".into());
    mem.fields.element = Some(t.clone());
    mem.expect = vec![Expectation::bare("non_member")];
    checks.push(mem);
    model.checks = checks;

    CatalogEntry {
        id: "xytxty".into(),
        provenance: "B = k[x, y, tx, ty] inside k[x, y, t], D1 = y d/dx, D2 = x d/dy, D3 = d/dt.\n\
                     Grading x, y in degree 1 and t in degree -1 puts B in nonnegative degrees."
            .into(),
        model,
    }
}

/// Looks up an entry by the name used in `use` lines.
pub fn entry_by_id(id: &str, args: &[(String, i64)]) -> Result<CatalogEntry, CatalogError> {
    match id {
        "counterexample" => {
            let mut m = None;
            for (k, v) in args {
                match k.as_str() {
                    "m" if m.is_none() => m = Some(*v),
                    _ => return Err(CatalogError::BadArgument(format!("unexpected `{k}`"))),
                }
            }
            build_counterexample(m.ok_or_else(|| CatalogError::BadArgument("missing `m`".into()))?)
        }
        "xytxty" => {
            if let Some((k, _)) = args.first() {
                return Err(CatalogError::BadArgument(format!("unexpected `{k}`")));
            }
            Ok(build_xytxty())
        }
        other => Err(CatalogError::UnknownEntry(other.to_string())),
    }
}

/// Entries run by `lndcert catalog`.
pub fn default_catalog() -> Vec<CatalogEntry> {
    vec![
        build_counterexample(1).expect("m >= 1"),
        build_counterexample(2).expect("m >= 1"),
        build_xytxty(),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum GradingOutcome {
    /// Weight of each generator.
    GradedNonneg { weights: Vec<i64> },
    Failure { generator: Poly, reason: String },
}

impl GradingOutcome {
    pub fn is_graded_nonneg(&self) -> bool {
        matches!(self, GradingOutcome::GradedNonneg { .. })
    }
}

/// Passes iff every generator is homogeneous of nonnegative weight, which
/// puts `B` in nonnegative degrees of the grading. `weights[i]` is the
/// weight of variable `i`.
pub fn grading_nonneg_check(b: &Algebra, weights: &[i64]) -> GradingOutcome {
    let mut out = Vec::with_capacity(b.generators().len());
    for g in b.generators() {
        let mut ws = g.terms().map(|(m, _)| m.exps().iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum::<i64>());
        let w = ws.next().unwrap_or(0);
        if ws.any(|other| other != w) {
            return GradingOutcome::Failure { generator: g.clone(), reason: "not homogeneous".into() };
        }
        if w < 0 {
            return GradingOutcome::Failure { generator: g.clone(), reason: format!("weight {w} is negative") };
        }
        out.push(w);
    }
    GradingOutcome::GradedNonneg { weights: out }
}
