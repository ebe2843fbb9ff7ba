//! Executes the checks of a model and assembles the report.

mod report;

pub use report::{CatalogReport, CatalogRun, CheckResult, CheckStatus, ExpectationResult, Report, Summary, FORMAT_VERSION};

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{grading_nonneg_check, CatalogEntry, DEFAULT_DEGREE, DEFAULT_WORD_LENGTH};
use crate::derivation::{
    check_lnd, check_stability, dixmier_decompose, dixmier_reconstruct, find_local_slice, Algebra, Derivation, Nilpotency,
    DEFAULT_ITER_BOUND,
};
use crate::dsl::{as_int, parse_base_valuation, parse_poly, print_model, Check, CheckKind, Expectation, Model};
use crate::error::{InvariantsError, RunError};
use crate::invariants::{
    canonical_basis, chain_certificate, find_rank_witness, find_rank_witness_in, kernel_intersection_bounded, ml_certificate,
    plinth_bounded, rank_witness, tightness_check, ChainLevel, MlOutcome, Tightness, TruncationSpec,
};
use crate::poly::{Poly, RatFunc};
use crate::valuation::{gauss_lex_value, non_membership_by_valuation, nonneg_certificate, NonnegOutcome, ValuationOutcome};

/// Default search degree for local slices.
pub const DEFAULT_SLICE_DEGREE: u32 = 2;
/// Default degree cap for rank-witness searches.
pub const DEFAULT_CAP: u32 = 2;

/// What to run. Every command except `Run` restricts the model's checks to
/// the matching kinds, and synthesizes checks when the model has none.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Run,
    CheckLnd,
    KernelBasis,
    MlCertificate,
    Plinth,
    Lndrank,
    Chain,
    Valuation,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Run => "run",
            Command::CheckLnd => "check-lnd",
            Command::KernelBasis => "kernel-basis",
            Command::MlCertificate => "ml-certificate",
            Command::Plinth => "plinth",
            Command::Lndrank => "lndrank",
            Command::Chain => "chain",
            Command::Valuation => "valuation",
        }
    }

    fn kinds(self) -> &'static [CheckKind] {
        match self {
            Command::Run => &CheckKind::ALL,
            Command::CheckLnd => &[CheckKind::Stability, CheckKind::Lnd],
            Command::KernelBasis => &[CheckKind::Kernel],
            Command::MlCertificate => &[CheckKind::Ml],
            Command::Plinth => &[CheckKind::Plinth],
            Command::Lndrank => &[CheckKind::Rank, CheckKind::FindRank],
            Command::Chain => &[CheckKind::Chain],
            Command::Valuation => &[CheckKind::Valuation, CheckKind::Nonneg],
        }
    }
}

/// Overrides and ad hoc inputs. Truncation overrides replace the values of
/// every selected check; the selectors only matter when checks are
/// synthesized.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub degree: Option<u32>,
    pub word_length: Option<u32>,
    pub iter_bound: Option<u32>,
    pub cap: Option<u32>,
    /// `lndrank`: search for a witness instead of checking given elements.
    pub find: bool,
    pub algebra: Option<String>,
    pub derivations: Option<Vec<String>>,
    /// Comma-separated polynomials.
    pub elements: Option<String>,
    pub element: Option<String>,
    pub valuation: Option<String>,
    /// Record wall-clock time per check (makes reports non-reproducible).
    pub timing: bool,
    /// Worker threads; `None` uses the available parallelism.
    pub threads: Option<usize>,
}

fn input(msg: impl Into<String>) -> RunError {
    RunError::Input(msg.into())
}

fn selected_algebras<'m>(model: &'m Model, opts: &RunOptions) -> Result<Vec<&'m Algebra>, RunError> {
    match &opts.algebra {
        Some(a) => Ok(vec![model.algebra(a).ok_or_else(|| RunError::Unknown { what: "algebra", name: a.clone() })?]),
        None => Ok(model.algebras.iter().collect()),
    }
}

fn selected_derivations(model: &Model, opts: &RunOptions) -> Result<Vec<String>, RunError> {
    match &opts.derivations {
        Some(ds) => {
            for d in ds {
                if model.derivation(d).is_none() {
                    return Err(RunError::Unknown { what: "derivation", name: d.clone() });
                }
            }
            Ok(ds.clone())
        }
        None => Ok(model.derivations.iter().map(|d| d.name.clone()).collect()),
    }
}

fn parse_list(model: &Model, text: &str) -> Result<Vec<Poly>, RunError> {
    text.split(',').map(|s| parse_poly(&model.vars, s.trim()).map_err(|e| input(format!("`{s}`: {e}")))).collect()
}

fn synthesize(model: &Model, command: Command, opts: &RunOptions) -> Result<Vec<Check>, RunError> {
    let algebras = selected_algebras(model, opts)?;
    let derivations = selected_derivations(model, opts)?;
    let alg_name = |a: &Algebra| a.name().map(str::to_string);
    let mut out = Vec::new();
    match command {
        Command::Run => {}
        Command::CheckLnd => {
            for a in &algebras {
                for d in &derivations {
                    let mut c = Check::new(CheckKind::Lnd, None);
                    c.fields.algebra = alg_name(a);
                    c.fields.derivation = Some(d.clone());
                    out.push(c);
                }
            }
        }
        Command::KernelBasis => {
            for d in &derivations {
                let mut c = Check::new(CheckKind::Kernel, None);
                c.fields.derivations = Some(vec![d.clone()]);
                out.push(c);
            }
        }
        Command::MlCertificate => {
            for a in &algebras {
                let mut c = Check::new(CheckKind::Ml, None);
                c.fields.algebra = alg_name(a);
                c.fields.derivations = Some(derivations.clone());
                out.push(c);
            }
        }
        Command::Plinth => {
            for d in &derivations {
                let mut c = Check::new(CheckKind::Plinth, None);
                c.fields.derivation = Some(d.clone());
                out.push(c);
            }
        }
        Command::Lndrank => {
            if opts.find {
                let mut c = Check::new(CheckKind::FindRank, None);
                c.fields.derivations = Some(derivations);
                c.fields.algebra = algebras.first().and_then(|a| alg_name(a));
                out.push(c);
            } else {
                let text = opts.elements.as_ref().ok_or_else(|| input("lndrank needs --elements or --find"))?;
                let mut c = Check::new(CheckKind::Rank, None);
                c.fields.derivations = Some(derivations);
                c.fields.elements = Some(parse_list(model, text)?);
                out.push(c);
            }
        }
        Command::Chain => return Err(input("the model declares no chain checks")),
        Command::Valuation => {
            let (Some(e), Some(v)) = (&opts.element, &opts.valuation) else {
                return Err(input("valuation needs --element and --valuation, or valuation checks in the model"));
            };
            let element = parse_poly(&model.vars, e).map_err(|err| input(format!("`{e}`: {err}")))?;
            let valuation = parse_base_valuation(&model.vars, v).map_err(|err| input(format!("`{v}`: {err}")))?;
            for a in &algebras {
                let mut c = Check::new(CheckKind::Valuation, None);
                c.fields.algebra = alg_name(a);
                c.fields.element = Some(element.clone());
                c.fields.valuation = Some(valuation.clone());
                out.push(c);
            }
        }
    }
    if out.is_empty() {
        return Err(input(format!("nothing to run for `{}`", command.name())));
    }
    Ok(out)
}

/// Makes truncation parameters explicit, so the embedded model reproduces
/// the run without the command-line overrides.
fn pin_parameters(c: &mut Check, opts: &RunOptions) {
    let f = &mut c.fields;
    let set = |slot: &mut Option<u32>, over: Option<u32>, default: u32| {
        *slot = Some(over.or(*slot).unwrap_or(default));
    };
    match c.kind {
        CheckKind::Lnd => set(&mut f.iter_bound, opts.iter_bound, DEFAULT_ITER_BOUND as u32),
        CheckKind::Kernel | CheckKind::Plinth => set(&mut f.degree, opts.degree, DEFAULT_DEGREE),
        CheckKind::Slice => set(&mut f.degree, opts.degree, DEFAULT_SLICE_DEGREE),
        CheckKind::Ml => {
            set(&mut f.word_length, opts.word_length, DEFAULT_WORD_LENGTH);
            set(&mut f.iter_bound, opts.iter_bound, DEFAULT_ITER_BOUND as u32);
        }
        CheckKind::FindRank => set(&mut f.cap, opts.cap, DEFAULT_CAP),
        _ => {}
    }
}

/// The checks `run` executes, with parameters pinned.
pub fn plan(model: &Model, command: Command, opts: &RunOptions) -> Result<Vec<Check>, RunError> {
    let kinds = command.kinds();
    let mut checks: Vec<Check> = model.checks.iter().filter(|c| kinds.contains(&c.kind)).cloned().collect();
    if checks.is_empty() {
        checks = synthesize(model, command, opts)?;
    }
    for c in &mut checks {
        pin_parameters(c, opts);
    }
    Ok(checks)
}

/// Runs the planned checks and builds the report. Input problems are
/// returned as errors; failures of individual checks are recorded in the
/// report.
pub fn run(model: &Model, command: Command, opts: &RunOptions) -> Result<Report, RunError> {
    let checks = plan(model, command, opts)?;
    let mut embedded = model.clone();
    embedded.checks = checks.clone();
    let text = print_model(&embedded);

    let slots: Vec<Mutex<Option<CheckResult>>> = checks.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = opts
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
        .clamp(1, checks.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= checks.len() {
                    break;
                }
                let r = run_check(&embedded, &checks[i], i, opts.timing);
                *slots[i].lock().expect("unpoisoned") = Some(r);
            });
        }
    });
    let results = slots.into_iter().map(|m| m.into_inner().expect("unpoisoned").expect("every check ran")).collect();
    Ok(Report::new(command.name(), text, results))
}

/// Parses and runs model text.
pub fn run_text(text: &str, command: Command, opts: &RunOptions) -> Result<Report, RunError> {
    let model = crate::dsl::parse_model(text).map_err(|e| input(e.to_string()))?;
    run(&model, command, opts)
}

/// Runs catalog entries from their serialized form alone: each entry is
/// printed to text, parsed back and run.
pub fn run_catalog(entries: &[CatalogEntry], opts: &RunOptions) -> Result<CatalogReport, RunError> {
    let mut runs = Vec::with_capacity(entries.len());
    for e in entries {
        let report = run_text(&e.to_dsl(), Command::Run, opts)?;
        runs.push(CatalogRun { id: e.id.clone(), provenance: e.provenance.clone(), report });
    }
    Ok(CatalogReport::new(runs))
}

fn run_check(model: &Model, check: &Check, position: usize, timing: bool) -> CheckResult {
    let start = Instant::now();
    let outcome = execute(model, check);
    let elapsed_ms = timing.then(|| start.elapsed().as_millis() as u64);
    let name = check.label(position);
    match outcome {
        Ok((certificate, met)) => {
            let expectations: Vec<ExpectationResult> = check
                .expect
                .iter()
                .zip(met)
                .map(|(e, met)| ExpectationResult { expect: e.to_string(), met })
                .collect();
            let status = if expectations.iter().all(|e| e.met) { CheckStatus::Pass } else { CheckStatus::Fail };
            CheckResult { name, kind: check.kind.keyword(), status, expectations, error: None, certificate: Some(certificate), elapsed_ms }
        }
        Err(message) => CheckResult {
            name,
            kind: check.kind.keyword(),
            status: CheckStatus::Error,
            expectations: check.expect.iter().map(|e| ExpectationResult { expect: e.to_string(), met: false }).collect(),
            error: Some(message),
            certificate: None,
            elapsed_ms,
        },
    }
}

type Outcome = Result<(Value, Vec<bool>), String>;

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("certificates serialize")
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn algebra<'m>(m: &'m Model, c: &Check) -> &'m Algebra {
    m.algebra(c.fields.algebra.as_deref().expect("schema")).expect("resolved at parse time")
}

fn derivation<'m>(m: &'m Model, name: &str) -> &'m Derivation {
    m.derivation(name).expect("resolved at parse time")
}

fn derivation_list(m: &Model, names: &[String]) -> Vec<Derivation> {
    names.iter().map(|n| derivation(m, n).clone()).collect()
}

/// Evaluates each expectation with `f`, which returns `None` for keywords it
/// does not know (never reached after parsing).
fn judge(expect: &[Expectation], f: impl Fn(&Expectation) -> Option<bool>) -> Vec<bool> {
    expect.iter().map(|e| f(e).unwrap_or(false)).collect()
}

fn same_span(m: &Model, a: &[Poly], b: &[Poly]) -> bool {
    canonical_basis(&m.vars, a) == canonical_basis(&m.vars, b)
}

fn execute(m: &Model, c: &Check) -> Outcome {
    let f = &c.fields;
    let e = &c.expect;
    match c.kind {
        CheckKind::Stability => {
            let s = check_stability(derivation(m, f.derivation.as_deref().expect("schema")), algebra(m, c)).map_err(err)?;
            let stable = s.is_stable();
            Ok((to_value(&s), judge(e, |x| match x.keyword.as_str() {
                "stable" => Some(stable),
                "unstable" => Some(!stable),
                _ => None,
            })))
        }
        CheckKind::Lnd => {
            let d = derivation(m, f.derivation.as_deref().expect("schema"));
            let b = algebra(m, c);
            let s = check_stability(d, b).map_err(err)?;
            if !s.is_stable() {
                return Ok((json!({ "stability": s }), judge(e, |_| Some(false))));
            }
            let st = check_lnd(d, b, f.iter_bound.unwrap_or(DEFAULT_ITER_BOUND as u32) as usize).map_err(err)?;
            let max = match &st.nilpotency {
                Nilpotency::Nilpotent { indices } => indices.iter().copied().max(),
                Nilpotency::Inconclusive { .. } => None,
            };
            Ok((json!({ "stability": s, "nilpotency": st.nilpotency }), judge(e, |x| match x.keyword.as_str() {
                "nilpotent" => Some(st.is_lnd()),
                "inconclusive" => Some(!st.is_lnd()),
                "max_index" => Some(matches!((max, as_int(&x.args[0])), (Some(a), Some(n)) if a as i64 <= n)),
                _ => None,
            })))
        }
        CheckKind::Membership => {
            let el = f.element.as_ref().expect("schema");
            let r = algebra(m, c).oracle().map_err(err)?.test(el).map_err(err)?;
            let member = r.is_member();
            Ok((json!({ "element": el, "membership": r }), judge(e, |x| match x.keyword.as_str() {
                "member" => Some(member),
                "non_member" => Some(!member),
                _ => None,
            })))
        }
        CheckKind::Kernel => {
            let ds = derivation_list(m, f.derivations.as_deref().expect("schema"));
            let spec = TruncationSpec::degree(f.degree.unwrap_or(DEFAULT_DEGREE));
            let k = kernel_intersection_bounded(&m.vars, &ds, spec).map_err(err)?;
            Ok((to_value(&k), judge(e, |x| match x.keyword.as_str() {
                "dim" => Some(as_int(&x.args[0]) == Some(k.dim() as i64)),
                "basis" => Some(same_span(m, &x.args, &k.basis)),
                _ => None,
            })))
        }
        CheckKind::Ml => {
            let ds = derivation_list(m, f.derivations.as_deref().expect("schema"));
            let spec = TruncationSpec::words(f.word_length.unwrap_or(DEFAULT_WORD_LENGTH));
            let bound = f.iter_bound.unwrap_or(DEFAULT_ITER_BOUND as u32) as usize;
            let cert = ml_certificate(algebra(m, c), &ds, spec, bound).map_err(err)?;
            Ok((to_value(&cert), judge(e, |x| match x.keyword.as_str() {
                "constants_only" => Some(cert.is_constants_only()),
                "extra" => Some(!cert.is_constants_only()),
                "within" => {
                    let allowed: Option<Vec<usize>> = x.args.iter().map(single_variable).collect();
                    let allowed = allowed?;
                    let elements = match &cert.outcome {
                        MlOutcome::ConstantsOnly => &[][..],
                        MlOutcome::ExtraElements(ps) => &ps[..],
                    };
                    Some(elements.iter().all(|p| p.support_vars().iter().all(|v| allowed.contains(v))))
                }
                _ => None,
            })))
        }
        CheckKind::Plinth => {
            let d = derivation(m, f.derivation.as_deref().expect("schema"));
            let spec = TruncationSpec::degree(f.degree.unwrap_or(DEFAULT_DEGREE));
            let pl = plinth_bounded(d, spec).map_err(err)?;
            let tight = tightness_check(d, spec).map_err(err)?;
            let is_tight = tight == Tightness::TightWithinWindow;
            Ok((json!({ "plinth": pl, "tightness": tight }), judge(e, |x| match x.keyword.as_str() {
                "basis" => Some(same_span(m, &x.args, &pl.basis)),
                "tight" => Some(is_tight),
                "violation" => Some(!is_tight),
                _ => None,
            })))
        }
        CheckKind::Rank => {
            let ds = derivation_list(m, f.derivations.as_deref().expect("schema"));
            let w = rank_witness(&ds, f.elements.as_deref().expect("schema")).map_err(err)?;
            let value = match &w {
                Some(w) => to_value(w),
                None => json!({ "determinant": "0" }),
            };
            Ok((value, judge(e, |x| match x.keyword.as_str() {
                "det" => Some(w.as_ref().map(|w| &w.determinant) == Some(&x.args[0])),
                "nonzero" => Some(w.is_some()),
                "zero" => Some(w.is_none()),
                _ => None,
            })))
        }
        CheckKind::FindRank => {
            let ds = derivation_list(m, f.derivations.as_deref().expect("schema"));
            let cap = f.cap.unwrap_or(DEFAULT_CAP);
            let w = match &f.algebra {
                Some(_) => find_rank_witness_in(algebra(m, c), &ds, cap),
                None => find_rank_witness(&m.vars, &ds, cap),
            }
            .map_err(err)?;
            let value = match &w {
                Some(w) => to_value(w),
                None => json!({ "rank": 0 }),
            };
            let rank = w.as_ref().map_or(0, |w| w.rank());
            Ok((value, judge(e, |x| match x.keyword.as_str() {
                "det" => Some(w.as_ref().map(|w| &w.determinant) == Some(&x.args[0])),
                "rank" => Some(as_int(&x.args[0]) == Some(rank as i64)),
                _ => None,
            })))
        }
        CheckKind::Chain => {
            let levels: Vec<ChainLevel> = f
                .levels
                .iter()
                .map(|l| ChainLevel {
                    generators: l.gens.clone(),
                    derivations: derivation_list(m, &l.derivations),
                    witness: l.witness.clone(),
                })
                .collect();
            match chain_certificate(&levels) {
                Ok(cert) => Ok((to_value(&cert), judge(e, |x| match x.keyword.as_str() {
                    "length" => Some(as_int(&x.args[0]) == Some(cert.length as i64)),
                    "rejected" => Some(false),
                    _ => None,
                }))),
                Err(InvariantsError::Chain { index, reason }) => {
                    Ok((json!({ "rejected": { "index": index, "reason": reason } }), judge(e, |x| match x.keyword.as_str() {
                        "length" => Some(false),
                        "rejected" => Some(as_int(&x.args[0]) == Some(index as i64)),
                        _ => None,
                    })))
                }
                Err(other) => Err(other.to_string()),
            }
        }
        CheckKind::Valuation => {
            let num = f.element.clone().expect("schema");
            let den = f.denominator.clone().unwrap_or_else(|| Poly::one(&m.vars));
            let alpha = RatFunc::new(num, den).map_err(err)?;
            let v = f.valuation.as_ref().expect("schema");
            let value = gauss_lex_value(v, &alpha).map_err(err)?;
            let out = non_membership_by_valuation(&alpha, algebra(m, c), v).map_err(err)?;
            let ok = out.is_certificate();
            let expected_value = |args: &[Poly]| -> Option<bool> {
                let ints: Option<Vec<i64>> = args.iter().map(as_int).collect();
                let ints = ints?;
                Some(ints.len() == value.main.len() + 1 && ints[..value.main.len()] == value.main[..] && ints[value.main.len()] == value.base)
            };
            let value_json = json!({ "element_value": value, "outcome": out });
            Ok((value_json, judge(e, |x| match x.keyword.as_str() {
                "certificate" => Some(ok),
                "inconclusive" => Some(matches!(out, ValuationOutcome::Inconclusive { .. })),
                "value" => expected_value(&x.args),
                _ => None,
            })))
        }
        CheckKind::Nonneg => {
            let out = nonneg_certificate(algebra(m, c), f.valuation.as_ref().expect("schema")).map_err(err)?;
            Ok((to_value(&out), judge(e, |x| match (x.keyword.as_str(), &out) {
                ("all_nonneg", o) => Some(matches!(o, NonnegOutcome::AllNonneg { .. })),
                ("violation", NonnegOutcome::Violation { generator, .. }) => Some(generator == &x.args[0]),
                ("violation", _) => Some(false),
                _ => None,
            })))
        }
        CheckKind::Grading => {
            let mut weights = vec![0i64; m.vars.len()];
            for (v, w) in f.weights.as_deref().expect("schema") {
                weights[m.vars.index_of(v).expect("resolved at parse time")] = *w;
            }
            let out = grading_nonneg_check(algebra(m, c), &weights);
            Ok((to_value(&out), judge(e, |x| match (x.keyword.as_str(), &out) {
                ("graded_nonneg", o) => Some(o.is_graded_nonneg()),
                ("failure", crate::catalog::GradingOutcome::Failure { generator, .. }) => Some(generator == &x.args[0]),
                ("failure", _) => Some(false),
                _ => None,
            })))
        }
        CheckKind::Slice => {
            let d = derivation(m, f.derivation.as_deref().expect("schema"));
            let s = find_local_slice(d, algebra(m, c), f.degree.unwrap_or(DEFAULT_SLICE_DEGREE)).map_err(err)?;
            let value = match &s {
                Some(s) => to_value(s),
                None => json!({ "slice": null }),
            };
            Ok((value, judge(e, |x| match x.keyword.as_str() {
                "found" => Some(s.is_some()),
                "none" => Some(s.is_none()),
                "slice" => Some(s.as_ref().map(|s| &s.s) == Some(&x.args[0])),
                _ => None,
            })))
        }
        CheckKind::Dixmier => {
            let d = derivation(m, f.derivation.as_deref().expect("schema"));
            let s = f.slice.as_ref().expect("schema");
            let b = f.element.as_ref().expect("schema");
            let a = d.apply(s).map_err(err)?;
            let coeffs = dixmier_decompose(d, s, b).map_err(err)?;
            let back = dixmier_reconstruct(&coeffs, s, &a).map_err(err)?;
            let reconstructs = back == RatFunc::from_poly(b.clone());
            let mut killed = true;
            for cn in &coeffs {
                killed &= d.apply_ratfunc(cn).map_err(err)?.is_zero();
            }
            Ok((
                json!({ "slice": s, "a": a, "coefficients": coeffs, "reconstructs": reconstructs, "coefficients_killed": killed }),
                judge(e, |x| match x.keyword.as_str() {
                    "exact" => Some(reconstructs && killed),
                    _ => None,
                }),
            ))
        }
    }
}

fn single_variable(p: &Poly) -> Option<usize> {
    let vars = p.support_vars();
    (vars.len() == 1 && *p == Poly::var(p.vars(), vars[0])).then(|| vars[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_xytxty;
    use crate::dsl::parse_model;

    const SMALL: &str = "vars { params: t; main: x, y; }
algebra B { gens: x, y, t*x, t*y; }
derivation D1 { x -> y; }
derivation D3 { t -> 1; }
";

    #[test]
    fn synthesized_lnd_checks() {
        let m = parse_model(SMALL).unwrap();
        let r = run(&m, Command::CheckLnd, &RunOptions::default()).unwrap();
        assert_eq!(r.summary.total, 2);
        assert!(r.all_passed());
        let cert = r.checks[0].certificate.as_ref().unwrap();
        assert_eq!(cert["nilpotency"]["result"], "nilpotent");
        assert!(matches!(run(&m, Command::Chain, &RunOptions::default()), Err(RunError::Input(_))));
    }

    #[test]
    fn find_rank_on_catalog_entry() {
        let m = build_xytxty().model;
        let opts = RunOptions { find: true, cap: Some(2), ..Default::default() };
        let r = run(&m, Command::Lndrank, &opts).unwrap();
        assert!(r.all_passed());
        let w = r.checks.iter().find(|c| c.kind == "find_rank").unwrap();
        assert_eq!(w.certificate.as_ref().unwrap()["determinant"], "x^2*y");
    }

    #[test]
    fn failing_expectation_and_reproducibility() {
        let text = format!("{SMALL}check kernel k {{ derivations: D3; degree: 2; expect: dim(5); }}\n");
        let m = parse_model(&text).unwrap();
        let a = run(&m, Command::Run, &RunOptions::default()).unwrap();
        assert_eq!(a.exit_code(), 1);
        assert_eq!(a.checks[0].status, CheckStatus::Fail);
        let b = run(&m, Command::Run, &RunOptions { threads: Some(1), ..Default::default() }).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        // the embedded model reruns to the same report
        let again = run_text(&a.model, Command::Run, &RunOptions::default()).unwrap();
        assert_eq!(again.to_json(), a.to_json());
    }
}
