use std::fmt;
use std::sync::Arc;

use crate::derivation::{Algebra, Derivation};
use crate::poly::{Poly, VarTable};
use crate::valuation::BaseValuation;

/// Parsed model file: one variable table, named algebras and derivations,
/// and the checks to run, all in declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    pub vars: Arc<VarTable>,
    pub algebras: Vec<Algebra>,
    pub derivations: Vec<NamedDerivation>,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedDerivation {
    pub name: String,
    pub derivation: Derivation,
}

impl Model {
    pub fn new(vars: &Arc<VarTable>) -> Self {
        Model { vars: vars.clone(), algebras: Vec::new(), derivations: Vec::new(), checks: Vec::new() }
    }

    pub fn algebra(&self, name: &str) -> Option<&Algebra> {
        self.algebras.iter().find(|a| a.name() == Some(name))
    }

    pub fn derivation(&self, name: &str) -> Option<&Derivation> {
        self.derivations.iter().find(|d| d.name == name).map(|d| &d.derivation)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name.as_deref() == Some(name))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Stability,
    Lnd,
    Membership,
    Kernel,
    Ml,
    Plinth,
    Rank,
    FindRank,
    Chain,
    Valuation,
    Nonneg,
    Grading,
    Slice,
    Dixmier,
}

impl CheckKind {
    pub const ALL: [CheckKind; 14] = [
        CheckKind::Stability,
        CheckKind::Lnd,
        CheckKind::Membership,
        CheckKind::Kernel,
        CheckKind::Ml,
        CheckKind::Plinth,
        CheckKind::Rank,
        CheckKind::FindRank,
        CheckKind::Chain,
        CheckKind::Valuation,
        CheckKind::Nonneg,
        CheckKind::Grading,
        CheckKind::Slice,
        CheckKind::Dixmier,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            CheckKind::Stability => "stability",
            CheckKind::Lnd => "lnd",
            CheckKind::Membership => "membership",
            CheckKind::Kernel => "kernel",
            CheckKind::Ml => "ml",
            CheckKind::Plinth => "plinth",
            CheckKind::Rank => "rank",
            CheckKind::FindRank => "find_rank",
            CheckKind::Chain => "chain",
            CheckKind::Valuation => "valuation",
            CheckKind::Nonneg => "nonneg",
            CheckKind::Grading => "grading",
            CheckKind::Slice => "slice",
            CheckKind::Dixmier => "dixmier",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.keyword() == s)
    }

    /// Required fields, then optional ones.
    pub(crate) fn schema(self) -> (&'static [Field], &'static [Field]) {
        use Field::*;
        match self {
            CheckKind::Stability => (&[Algebra, Derivation], &[]),
            CheckKind::Lnd => (&[Algebra, Derivation], &[IterBound]),
            CheckKind::Membership => (&[Algebra, Element], &[]),
            CheckKind::Kernel => (&[Derivations], &[Degree]),
            CheckKind::Ml => (&[Algebra, Derivations], &[WordLength, IterBound]),
            CheckKind::Plinth => (&[Derivation], &[Degree]),
            CheckKind::Rank => (&[Derivations, Elements], &[]),
            CheckKind::FindRank => (&[Derivations], &[Algebra, Cap]),
            CheckKind::Chain => (&[Level], &[]),
            CheckKind::Valuation => (&[Algebra, Element, Valuation], &[Denominator]),
            CheckKind::Nonneg => (&[Algebra, Valuation], &[]),
            CheckKind::Grading => (&[Algebra, Weights], &[]),
            CheckKind::Slice => (&[Algebra, Derivation], &[Degree]),
            CheckKind::Dixmier => (&[Derivation, Slice, Element], &[]),
        }
    }

    /// Accepted expectation keywords with their argument counts
    /// (`None` = any number).
    pub(crate) fn expectations(self) -> &'static [(&'static str, Option<usize>)] {
        match self {
            CheckKind::Stability => &[("stable", Some(0)), ("unstable", Some(0))],
            CheckKind::Lnd => &[("nilpotent", Some(0)), ("max_index", Some(1)), ("inconclusive", Some(0))],
            CheckKind::Membership => &[("member", Some(0)), ("non_member", Some(0))],
            CheckKind::Kernel => &[("dim", Some(1)), ("basis", None)],
            CheckKind::Ml => &[("constants_only", Some(0)), ("extra", Some(0)), ("within", None)],
            CheckKind::Plinth => &[("basis", None), ("tight", Some(0)), ("violation", Some(0))],
            CheckKind::Rank => &[("det", Some(1)), ("nonzero", Some(0)), ("zero", Some(0))],
            CheckKind::FindRank => &[("det", Some(1)), ("rank", Some(1))],
            CheckKind::Chain => &[("length", Some(1)), ("rejected", Some(1))],
            CheckKind::Valuation => &[("certificate", Some(0)), ("inconclusive", Some(0)), ("value", None)],
            CheckKind::Nonneg => &[("all_nonneg", Some(0)), ("violation", Some(1))],
            CheckKind::Grading => &[("graded_nonneg", Some(0)), ("failure", Some(1))],
            CheckKind::Slice => &[("found", Some(0)), ("slice", Some(1)), ("none", Some(0))],
            CheckKind::Dixmier => &[("exact", Some(0))],
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// Field keys of a check block, in printing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Field {
    Algebra,
    Derivation,
    Derivations,
    Elements,
    Element,
    Denominator,
    Slice,
    Valuation,
    Weights,
    Degree,
    WordLength,
    IterBound,
    Cap,
    Level,
}

impl Field {
    pub const ALL: [Field; 14] = [
        Field::Algebra,
        Field::Derivation,
        Field::Derivations,
        Field::Elements,
        Field::Element,
        Field::Denominator,
        Field::Slice,
        Field::Valuation,
        Field::Weights,
        Field::Degree,
        Field::WordLength,
        Field::IterBound,
        Field::Cap,
        Field::Level,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Field::Algebra => "algebra",
            Field::Derivation => "derivation",
            Field::Derivations => "derivations",
            Field::Elements => "elements",
            Field::Element => "element",
            Field::Denominator => "denominator",
            Field::Slice => "slice",
            Field::Valuation => "valuation",
            Field::Weights => "weights",
            Field::Degree => "degree",
            Field::WordLength => "word_length",
            Field::IterBound => "iter_bound",
            Field::Cap => "cap",
            Field::Level => "level",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.keyword() == s)
    }
}

/// Expected outcome such as `constants_only` or `det(x^2*y)`. Integer
/// arguments are stored as constant polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub keyword: String,
    pub args: Vec<Poly>,
}

impl Expectation {
    pub fn new(keyword: &str, args: Vec<Poly>) -> Self {
        Expectation { keyword: keyword.to_string(), args }
    }

    pub fn bare(keyword: &str) -> Self {
        Self::new(keyword, Vec::new())
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.keyword)?;
        if !self.args.is_empty() {
            let a: Vec<String> = self.args.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", a.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChainLevelSpec {
    pub gens: Vec<Poly>,
    pub derivations: Vec<String>,
    pub witness: Option<Poly>,
}

/// Inputs of a check. Which fields are required depends on the kind.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckFields {
    pub algebra: Option<String>,
    pub derivation: Option<String>,
    pub derivations: Option<Vec<String>>,
    pub elements: Option<Vec<Poly>>,
    pub element: Option<Poly>,
    pub denominator: Option<Poly>,
    pub slice: Option<Poly>,
    pub valuation: Option<BaseValuation>,
    /// `(variable, weight)`; unlisted variables weigh 0.
    pub weights: Option<Vec<(String, i64)>>,
    pub degree: Option<u32>,
    pub word_length: Option<u32>,
    pub iter_bound: Option<u32>,
    pub cap: Option<u32>,
    pub levels: Vec<ChainLevelSpec>,
}

impl CheckFields {
    pub(crate) fn has(&self, f: Field) -> bool {
        match f {
            Field::Algebra => self.algebra.is_some(),
            Field::Derivation => self.derivation.is_some(),
            Field::Derivations => self.derivations.is_some(),
            Field::Elements => self.elements.is_some(),
            Field::Element => self.element.is_some(),
            Field::Denominator => self.denominator.is_some(),
            Field::Slice => self.slice.is_some(),
            Field::Valuation => self.valuation.is_some(),
            Field::Weights => self.weights.is_some(),
            Field::Degree => self.degree.is_some(),
            Field::WordLength => self.word_length.is_some(),
            Field::IterBound => self.iter_bound.is_some(),
            Field::Cap => self.cap.is_some(),
            Field::Level => !self.levels.is_empty(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub kind: CheckKind,
    pub name: Option<String>,
    pub fields: CheckFields,
    pub expect: Vec<Expectation>,
}

impl Check {
    pub fn new(kind: CheckKind, name: Option<&str>) -> Self {
        Check { kind, name: name.map(str::to_string), fields: CheckFields::default(), expect: Vec::new() }
    }

    /// Name used in reports: the declared one, else `kind#position`.
    pub fn label(&self, position: usize) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format!("{}#{}", self.kind, position + 1),
        }
    }
}
