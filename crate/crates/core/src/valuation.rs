//! Gauss-lexicographic valuations on K(x₁, …, xₙ), K = ℚ(parameters), and
//! the non-membership certificates they produce.
//!
//! For a polynomial f the value is computed recursively in the main-variable
//! order: the lowest exponent m₁ of x₁, then the value of the coefficient of
//! x₁^m₁ in K(x₂, …, xₙ), and so on, ending with the base valuation of a
//! parameter-only coefficient. Values live in ℤⁿ × ℤ ordered
//! lexicographically.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use std::sync::Arc;

use serde::Serialize;

use crate::derivation::Algebra;
use crate::error::ValuationError;
use crate::poly::{text::format_rat, Poly, Rat, RatFunc, VarKind, VarTable};

/// Rank-one discrete valuation of ℚ(parameters), trivial on ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseValuation {
    Trivial,
    /// Order of vanishing at `param = value`.
    OrderAtValue { param: String, value: Rat },
    /// `-deg` in `param`.
    OrderAtInfinity { param: String },
    /// Order of divisibility by a nonconstant parameter polynomial, assumed
    /// irreducible (irreducibility is not checked).
    OrderAtIrreducible { poly: Poly },
}

fn param_index(vars: &VarTable, name: &str) -> Result<usize, ValuationError> {
    match vars.index_of(name) {
        Some(i) if vars.kind(i) == VarKind::Param => Ok(i),
        Some(_) => Err(ValuationError::InvalidDescriptor(format!("`{name}` is not a parameter"))),
        None => Err(ValuationError::InvalidDescriptor(format!("unknown parameter `{name}`"))),
    }
}

impl BaseValuation {
    /// Checks the descriptor against a variable table.
    pub fn validate(&self, vars: &VarTable) -> Result<(), ValuationError> {
        match self {
            BaseValuation::Trivial => Ok(()),
            BaseValuation::OrderAtValue { param, .. } | BaseValuation::OrderAtInfinity { param } => {
                param_index(vars, param).map(|_| ())
            }
            BaseValuation::OrderAtIrreducible { poly } => {
                if poly.is_constant() {
                    return Err(ValuationError::InvalidDescriptor("irreducible must be nonconstant".into()));
                }
                if let Some(i) = vars.mains().find(|&i| poly.involves(i)) {
                    return Err(ValuationError::InvolvesMain(vars.name(i).to_string()));
                }
                Ok(())
            }
        }
    }

    fn poly_value(&self, p: &Poly) -> Result<i64, ValuationError> {
        debug_assert!(!p.is_zero());
        let vars = p.vars();
        Ok(match self {
            BaseValuation::Trivial => 0,
            BaseValuation::OrderAtValue { param, value } => {
                let i = param_index(vars, param)?;
                let images: Vec<Poly> = (0..vars.len())
                    .map(|k| {
                        let x = Poly::var(vars, k);
                        if k == i {
                            &x + &Poly::constant(vars, value.clone())
                        } else {
                            x
                        }
                    })
                    .collect();
                p.compose(vars, &images)?.min_degree_in(i).unwrap_or(0) as i64
            }
            BaseValuation::OrderAtInfinity { param } => {
                let i = param_index(vars, param)?;
                -(p.degree_in(i).unwrap_or(0) as i64)
            }
            BaseValuation::OrderAtIrreducible { poly } => {
                let q = if poly.vars() == vars { poly.clone() } else { return Err(crate::error::PolyError::VarTableMismatch.into()) };
                let mut n = 0;
                let mut cur = p.clone();
                while let Some(next) = cur.div_exact(&q)? {
                    cur = next;
                    n += 1;
                }
                n
            }
        })
    }

    pub fn describe(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for BaseValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseValuation::Trivial => write!(f, "trivial"),
            BaseValuation::OrderAtValue { param, value } => write!(f, "order_at_value({param}, {})", format_rat(value)),
            BaseValuation::OrderAtInfinity { param } => write!(f, "order_at_infinity({param})"),
            BaseValuation::OrderAtIrreducible { poly } => write!(f, "order_at_irreducible({poly})"),
        }
    }
}

impl Serialize for BaseValuation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Element of ℤⁿ × ℤ, compared lexicographically: main part first (in
/// main-variable order), then the base part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LexValue {
    pub main: Vec<i64>,
    pub base: i64,
}

impl LexValue {
    pub fn zero(n: usize) -> Self {
        LexValue { main: vec![0; n], base: 0 }
    }

    pub fn is_negative(&self) -> bool {
        self.cmp(&LexValue::zero(self.main.len())) == Ordering::Less
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.is_negative()
    }
}

impl Add for &LexValue {
    type Output = LexValue;
    fn add(self, o: &LexValue) -> LexValue {
        LexValue { main: self.main.iter().zip(&o.main).map(|(a, b)| a + b).collect(), base: self.base + o.base }
    }
}

impl Sub for &LexValue {
    type Output = LexValue;
    fn sub(self, o: &LexValue) -> LexValue {
        LexValue { main: self.main.iter().zip(&o.main).map(|(a, b)| a - b).collect(), base: self.base - o.base }
    }
}

impl fmt::Display for LexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.main.iter().map(i64::to_string).collect();
        write!(f, "({}|{})", m.join(","), self.base)
    }
}

impl Serialize for LexValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Base valuation of a nonzero parameter-only rational function.
pub fn base_value(v: &BaseValuation, f: &RatFunc) -> Result<i64, ValuationError> {
    if f.is_zero() {
        return Err(ValuationError::Zero);
    }
    let vars = f.vars();
    v.validate(vars)?;
    for i in vars.mains() {
        if f.num().involves(i) || f.den().involves(i) {
            return Err(ValuationError::InvolvesMain(vars.name(i).to_string()));
        }
    }
    Ok(v.poly_value(f.num())? - v.poly_value(f.den())?)
}

fn poly_lex_value(v: &BaseValuation, p: &Poly, mains: &[usize]) -> Result<LexValue, ValuationError> {
    let vars = p.vars();
    let mut cur = p.clone();
    let mut main = Vec::with_capacity(mains.len());
    for &x in mains {
        let m = cur.min_degree_in(x).expect("nonzero");
        main.push(m as i64);
        // coefficient of x^m, viewed in the remaining variables
        cur = Poly::from_terms(
            vars,
            cur.terms().filter(|(mono, _)| mono.exps()[x] == m).map(|(mono, c)| {
                let mut e = mono.clone();
                e.0[x] = 0;
                (e, c.clone())
            }),
        );
    }
    Ok(LexValue { main, base: v.poly_value(&cur)? })
}

/// Gauss-lexicographic value `v̂(f)`.
pub fn gauss_lex_value(v: &BaseValuation, f: &RatFunc) -> Result<LexValue, ValuationError> {
    if f.is_zero() {
        return Err(ValuationError::Zero);
    }
    let vars = f.vars();
    v.validate(vars)?;
    let mains: Vec<usize> = vars.mains().collect();
    Ok(&poly_lex_value(v, f.num(), &mains)? - &poly_lex_value(v, f.den(), &mains)?)
}

pub fn gauss_lex_value_poly(v: &BaseValuation, f: &Poly) -> Result<LexValue, ValuationError> {
    gauss_lex_value(v, &RatFunc::from_poly(f.clone()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum NonnegOutcome {
    AllNonneg { values: Vec<LexValue> },
    Violation { generator: Poly, value: LexValue },
}

/// `v̂ ≥ 0` on every generator, hence on the algebra and its integral closure.
pub fn nonneg_certificate(b: &Algebra, v: &BaseValuation) -> Result<NonnegOutcome, ValuationError> {
    let mut values = Vec::with_capacity(b.generators().len());
    for g in b.generators() {
        let val = gauss_lex_value_poly(v, g)?;
        if val.is_negative() {
            return Ok(NonnegOutcome::Violation { generator: g.clone(), value: val });
        }
        values.push(val);
    }
    Ok(NonnegOutcome::AllNonneg { values })
}

#[derive(Debug, Clone, Serialize)]
pub struct NonMembershipCertificate {
    pub element: RatFunc,
    pub valuation: BaseValuation,
    pub element_value: LexValue,
    pub generators: Vec<Poly>,
    pub generator_values: Vec<LexValue>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum ValuationOutcome {
    Certificate(NonMembershipCertificate),
    Inconclusive { reason: String },
}

impl ValuationOutcome {
    pub fn is_certificate(&self) -> bool {
        matches!(self, ValuationOutcome::Certificate(_))
    }
}

/// Proves `α ∉ B` (and `α` outside the integral closure of `B`) by one
/// valuation that is nonnegative on the generators and negative at `α`.
pub fn non_membership_by_valuation(
    alpha: &RatFunc,
    b: &Algebra,
    v: &BaseValuation,
) -> Result<ValuationOutcome, ValuationError> {
    let element_value = gauss_lex_value(v, alpha)?;
    let generator_values = match nonneg_certificate(b, v)? {
        NonnegOutcome::AllNonneg { values } => values,
        NonnegOutcome::Violation { generator, value } => {
            return Ok(ValuationOutcome::Inconclusive {
                reason: format!("generator `{generator}` has negative value {value}"),
            })
        }
    };
    if element_value.is_nonnegative() {
        return Ok(ValuationOutcome::Inconclusive { reason: format!("element value {element_value} is not negative") });
    }
    Ok(ValuationOutcome::Certificate(NonMembershipCertificate {
        element: alpha.clone(),
        valuation: v.clone(),
        element_value,
        generators: b.generators().to_vec(),
        generator_values,
    }))
}

/// Convenience for building descriptors against a table.
pub fn order_at_infinity(vars: &Arc<VarTable>, param: &str) -> Result<BaseValuation, ValuationError> {
    let v = BaseValuation::OrderAtInfinity { param: param.to_string() };
    v.validate(vars)?;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_poly;
    use crate::poly::{rat, ratfunc_normalize};

    fn v() -> Arc<VarTable> {
        VarTable::with_params(&["t"], &["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(&v(), s).unwrap()
    }

    fn rf(n: &str, d: &str) -> RatFunc {
        ratfunc_normalize(p(n), p(d)).unwrap()
    }

    fn inf() -> BaseValuation {
        BaseValuation::OrderAtInfinity { param: "t".into() }
    }

    #[test]
    fn base_values() {
        assert_eq!(base_value(&inf(), &rf("t", "1")).unwrap(), -1);
        let at0 = BaseValuation::OrderAtValue { param: "t".into(), value: rat(0, 1) };
        assert_eq!(base_value(&at0, &rf("t^2", "t+1")).unwrap(), 2);
        let at1 = BaseValuation::OrderAtValue { param: "t".into(), value: rat(-1, 1) };
        assert_eq!(base_value(&at1, &rf("t^2", "t+1")).unwrap(), -1);
        assert_eq!(base_value(&BaseValuation::Trivial, &rf("t^3+5", "t")).unwrap(), 0);
        let irr = BaseValuation::OrderAtIrreducible { poly: p("t^2+1") };
        assert_eq!(base_value(&irr, &rf("(t^2+1)^2*t", "t-1")).unwrap(), 2);
        assert_eq!(base_value(&inf(), &rf("0", "1")), Err(ValuationError::Zero));
        assert_eq!(base_value(&inf(), &rf("x*t", "1")), Err(ValuationError::InvolvesMain("x".into())));
        assert!(BaseValuation::OrderAtInfinity { param: "x".into() }.validate(&v()).is_err());
    }

    #[test]
    fn lex_values() {
        let triv = BaseValuation::Trivial;
        assert_eq!(gauss_lex_value(&triv, &rf("x", "1")).unwrap().to_string(), "(1,0|0)");
        assert_eq!(gauss_lex_value(&triv, &rf("y", "1")).unwrap().to_string(), "(0,1|0)");
        let tx = gauss_lex_value(&inf(), &rf("t*x", "1")).unwrap();
        assert_eq!(tx.to_string(), "(1,0|-1)");
        assert!(tx.is_nonnegative());
        assert_eq!(gauss_lex_value(&triv, &rf("1", "x")).unwrap().to_string(), "(-1,0|0)");
        // lowest x-power first, then lowest y-power of its coefficient
        assert_eq!(gauss_lex_value(&inf(), &rf("x*y^2 + t^3*x*y + x^2", "1")).unwrap().to_string(), "(1,1|-3)");
    }

    #[test]
    fn certificates() {
        let b = Algebra::new(&v(), vec![p("x"), p("y"), p("t*x"), p("t*y")]).unwrap();
        assert!(matches!(nonneg_certificate(&b, &inf()).unwrap(), NonnegOutcome::AllNonneg { .. }));
        let bt = Algebra::new(&v(), vec![p("t")]).unwrap();
        assert!(matches!(nonneg_certificate(&bt, &inf()).unwrap(), NonnegOutcome::Violation { .. }));
        let c = non_membership_by_valuation(&rf("t", "1"), &b, &inf()).unwrap();
        match c {
            ValuationOutcome::Certificate(c) => assert_eq!(c.element_value.to_string(), "(0,0|-1)"),
            other => panic!("{other:?}"),
        }
        assert!(!non_membership_by_valuation(&rf("x", "1"), &b, &inf()).unwrap().is_certificate());
        let bx = Algebra::new(&v(), vec![p("x")]).unwrap();
        assert!(non_membership_by_valuation(&rf("1", "x"), &bx, &BaseValuation::Trivial).unwrap().is_certificate());
    }
}
