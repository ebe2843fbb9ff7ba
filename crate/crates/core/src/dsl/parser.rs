//! Model files.
//!
//! ```text
//! model      := (use | vars | algebra | derivation | check)*
//! use        := 'use' IDENT ['(' IDENT '=' INT (',' IDENT '=' INT)* ')'] [';']
//! vars       := 'vars' '{' (('params' | 'main') ':' idents ';')* '}'
//! algebra    := 'algebra' IDENT '{' 'gens' ':' polys ';' '}'
//! derivation := 'derivation' IDENT '{' (IDENT '->' expr ';')* '}'
//! check      := 'check' KIND [IDENT] '{' (field ';' | level)* '}'
//! level      := 'level' '{' ('gens' ':' polys ';' | 'derivations' ':' idents ';' | 'witness' ':' expr ';')* '}'
//! ```

use std::sync::Arc;

use super::expr::{describe, parse_expr, Cursor};
use super::lexer::{tokenize, Tok};
use super::model::{ChainLevelSpec, Check, CheckKind, Expectation, Field, Model, NamedDerivation};
use crate::catalog;
use crate::derivation::{Algebra, Derivation};
use crate::error::DslError;
use crate::poly::{Poly, Rat, VarTable};
use crate::valuation::BaseValuation;

/// Parses a model; errors carry the line and column of the offending token.
pub fn parse_model(src: &str) -> Result<Model, DslError> {
    let toks = tokenize(src)?;
    let mut cur = Cursor::new(&toks);
    let mut model: Option<Model> = None;
    loop {
        let (line, col) = (cur.here().line, cur.here().col);
        let kw = match cur.peek().clone() {
            Tok::Eof => break,
            Tok::Ident(s) => s,
            t => return Err(cur.error(format!("expected a declaration, found {}", describe(&t)))),
        };
        cur.bump();
        match kw.as_str() {
            "use" => {
                if model.is_some() {
                    return Err(DslError::at(line, col, "`use` must come before any other declaration"));
                }
                model = Some(parse_use(&mut cur, line, col)?);
            }
            "vars" => {
                if model.is_some() {
                    return Err(DslError::at(line, col, "variables are already declared"));
                }
                model = Some(Model::new(&parse_vars(&mut cur, line, col)?));
            }
            "algebra" | "derivation" | "check" => {
                let Some(m) = model.as_mut() else {
                    return Err(DslError::at(line, col, "variables must be declared first"));
                };
                match kw.as_str() {
                    "algebra" => parse_algebra(&mut cur, m)?,
                    "derivation" => parse_derivation(&mut cur, m)?,
                    _ => parse_check(&mut cur, m)?,
                }
            }
            other => return Err(DslError::at(line, col, format!("unknown declaration `{other}`"))),
        }
    }
    model.ok_or_else(|| cur.error("empty model: no variables declared"))
}

fn parse_use(cur: &mut Cursor<'_>, line: usize, col: usize) -> Result<Model, DslError> {
    let id = cur.expect_ident()?;
    let mut args: Vec<(String, i64)> = Vec::new();
    if cur.eat_sym("(") {
        loop {
            let k = cur.expect_ident()?;
            cur.expect_sym("=")?;
            args.push((k, cur.expect_int()?));
            if !cur.eat_sym(",") {
                break;
            }
        }
        cur.expect_sym(")")?;
    }
    cur.eat_sym(";");
    let entry = catalog::entry_by_id(&id, &args).map_err(|e| DslError::at(line, col, e.to_string()))?;
    Ok(entry.model)
}

fn parse_vars(cur: &mut Cursor<'_>, line: usize, col: usize) -> Result<Arc<VarTable>, DslError> {
    cur.expect_sym("{")?;
    let mut params: Vec<String> = Vec::new();
    let mut mains: Vec<String> = Vec::new();
    let (mut seen_p, mut seen_m) = (false, false);
    while !cur.eat_sym("}") {
        let (l, c) = (cur.here().line, cur.here().col);
        let key = cur.expect_ident()?;
        let (slot, seen) = match key.as_str() {
            "params" => (&mut params, &mut seen_p),
            "main" => (&mut mains, &mut seen_m),
            other => return Err(DslError::at(l, c, format!("expected `params` or `main`, found `{other}`"))),
        };
        if *seen {
            return Err(DslError::at(l, c, format!("`{key}` given twice")));
        }
        *seen = true;
        cur.expect_sym(":")?;
        *slot = parse_idents(cur)?;
        cur.expect_sym(";")?;
    }
    VarTable::with_params(&params, &mains).map_err(|e| DslError::at(line, col, e.to_string()))
}

fn parse_idents(cur: &mut Cursor<'_>) -> Result<Vec<String>, DslError> {
    let mut out = Vec::new();
    if cur.is_sym(";") {
        return Ok(out);
    }
    loop {
        out.push(cur.expect_ident()?);
        if !cur.eat_sym(",") {
            return Ok(out);
        }
    }
}

fn parse_polys(cur: &mut Cursor<'_>, vars: &Arc<VarTable>) -> Result<Vec<Poly>, DslError> {
    let mut out = Vec::new();
    if cur.is_sym(";") || cur.is_sym(")") {
        return Ok(out);
    }
    loop {
        out.push(parse_expr(cur, vars)?);
        if !cur.eat_sym(",") {
            return Ok(out);
        }
    }
}

fn name_taken(m: &Model, name: &str) -> bool {
    m.algebra(name).is_some() || m.derivation(name).is_some() || m.check(name).is_some()
}

fn declared_name(cur: &mut Cursor<'_>, m: &Model) -> Result<String, DslError> {
    let (l, c) = (cur.here().line, cur.here().col);
    let name = cur.expect_ident()?;
    if name_taken(m, &name) {
        return Err(DslError::at(l, c, format!("duplicate name `{name}`")));
    }
    Ok(name)
}

fn parse_algebra(cur: &mut Cursor<'_>, m: &mut Model) -> Result<(), DslError> {
    let name = declared_name(cur, m)?;
    cur.expect_sym("{")?;
    let (l, c) = (cur.here().line, cur.here().col);
    cur.expect_keyword("gens")?;
    cur.expect_sym(":")?;
    let gens = parse_polys(cur, &m.vars)?;
    cur.expect_sym(";")?;
    cur.expect_sym("}")?;
    let a = Algebra::new(&m.vars, gens).map_err(|e| DslError::at(l, c, e.to_string()))?;
    m.algebras.push(a.named(name));
    Ok(())
}

fn parse_derivation(cur: &mut Cursor<'_>, m: &mut Model) -> Result<(), DslError> {
    let name = declared_name(cur, m)?;
    cur.expect_sym("{")?;
    let mut images = vec![None; m.vars.len()];
    while !cur.eat_sym("}") {
        let (l, c) = (cur.here().line, cur.here().col);
        let v = cur.expect_ident()?;
        let i = m.vars.index_of(&v).ok_or_else(|| DslError::at(l, c, format!("unknown variable `{v}`")))?;
        if images[i].is_some() {
            return Err(DslError::at(l, c, format!("image of `{v}` given twice")));
        }
        cur.expect_sym("->")?;
        images[i] = Some(parse_expr(cur, &m.vars)?);
        cur.expect_sym(";")?;
    }
    let images = images.into_iter().map(|p| p.unwrap_or_else(|| Poly::zero(&m.vars))).collect();
    let derivation = Derivation::new(&m.vars, images).expect("images over the model table");
    m.derivations.push(NamedDerivation { name, derivation });
    Ok(())
}

fn parse_valuation(cur: &mut Cursor<'_>, vars: &Arc<VarTable>) -> Result<BaseValuation, DslError> {
    let (l, c) = (cur.here().line, cur.here().col);
    let kw = cur.expect_ident()?;
    let v = match kw.as_str() {
        "trivial" => BaseValuation::Trivial,
        "order_at_value" => {
            cur.expect_sym("(")?;
            let param = cur.expect_ident()?;
            cur.expect_sym(",")?;
            let at = cur.here().clone();
            let value = parse_expr(cur, vars)?;
            if !value.is_constant() {
                return Err(DslError::at(at.line, at.col, "expected a rational constant"));
            }
            cur.expect_sym(")")?;
            BaseValuation::OrderAtValue { param, value: value.constant_term() }
        }
        "order_at_infinity" => {
            cur.expect_sym("(")?;
            let param = cur.expect_ident()?;
            cur.expect_sym(")")?;
            BaseValuation::OrderAtInfinity { param }
        }
        "order_at_irreducible" => {
            cur.expect_sym("(")?;
            let poly = parse_expr(cur, vars)?;
            cur.expect_sym(")")?;
            BaseValuation::OrderAtIrreducible { poly }
        }
        other => return Err(DslError::at(l, c, format!("unknown valuation `{other}`"))),
    };
    v.validate(vars).map_err(|e| DslError::at(l, c, e.to_string()))?;
    Ok(v)
}

/// Parses a base valuation descriptor such as `order_at_infinity(t)`.
pub fn parse_base_valuation(vars: &Arc<VarTable>, src: &str) -> Result<BaseValuation, DslError> {
    let toks = tokenize(src)?;
    let mut cur = Cursor::new(&toks);
    let v = parse_valuation(&mut cur, vars)?;
    if *cur.peek() != Tok::Eof {
        return Err(cur.error(format!("unexpected {}", describe(cur.peek()))));
    }
    Ok(v)
}

fn resolve_derivation(m: &Model, name: &str, l: usize, c: usize) -> Result<(), DslError> {
    if m.derivation(name).is_none() {
        return Err(DslError::at(l, c, format!("unknown derivation `{name}`")));
    }
    Ok(())
}

fn parse_derivation_names(cur: &mut Cursor<'_>, m: &Model) -> Result<Vec<String>, DslError> {
    let (l, c) = (cur.here().line, cur.here().col);
    let names = parse_idents(cur)?;
    for n in &names {
        resolve_derivation(m, n, l, c)?;
    }
    Ok(names)
}

fn parse_u32(cur: &mut Cursor<'_>) -> Result<u32, DslError> {
    let (l, c) = (cur.here().line, cur.here().col);
    let v = cur.expect_int()?;
    u32::try_from(v).map_err(|_| DslError::at(l, c, "expected a nonnegative integer"))
}

fn parse_level(cur: &mut Cursor<'_>, m: &Model) -> Result<ChainLevelSpec, DslError> {
    cur.expect_sym("{")?;
    let mut level = ChainLevelSpec::default();
    while !cur.eat_sym("}") {
        let (l, c) = (cur.here().line, cur.here().col);
        let key = cur.expect_ident()?;
        cur.expect_sym(":")?;
        match key.as_str() {
            "gens" => level.gens = parse_polys(cur, &m.vars)?,
            "derivations" => level.derivations = parse_derivation_names(cur, m)?,
            "witness" => level.witness = Some(parse_expr(cur, &m.vars)?),
            other => return Err(DslError::at(l, c, format!("unknown level field `{other}`"))),
        }
        cur.expect_sym(";")?;
    }
    Ok(level)
}

fn parse_expectation(cur: &mut Cursor<'_>, m: &Model, kind: CheckKind) -> Result<Expectation, DslError> {
    let (l, c) = (cur.here().line, cur.here().col);
    let kw = cur.expect_ident()?;
    let args = if cur.eat_sym("(") {
        let a = parse_polys(cur, &m.vars)?;
        cur.expect_sym(")")?;
        a
    } else {
        Vec::new()
    };
    match kind.expectations().iter().find(|(k, _)| *k == kw) {
        None => {
            let allowed: Vec<&str> = kind.expectations().iter().map(|(k, _)| *k).collect();
            Err(DslError::at(l, c, format!("`{kw}` is not an outcome of `{kind}` (expected one of {})", allowed.join(", "))))
        }
        Some((_, Some(n))) if *n != args.len() => {
            Err(DslError::at(l, c, format!("`{kw}` takes {n} argument(s), got {}", args.len())))
        }
        Some(_) => Ok(Expectation { keyword: kw, args }),
    }
}

fn parse_check(cur: &mut Cursor<'_>, m: &mut Model) -> Result<(), DslError> {
    let (l0, c0) = (cur.here().line, cur.here().col);
    let kw = cur.expect_ident()?;
    let kind = CheckKind::from_keyword(&kw).ok_or_else(|| DslError::at(l0, c0, format!("unknown check kind `{kw}`")))?;
    let name = if matches!(cur.peek(), Tok::Ident(_)) { Some(declared_name(cur, m)?) } else { None };
    let mut check = Check::new(kind, name.as_deref());
    let (required, optional) = kind.schema();
    cur.expect_sym("{")?;
    let mut seen_expect = false;
    while !cur.eat_sym("}") {
        let (l, c) = (cur.here().line, cur.here().col);
        let key = cur.expect_ident()?;
        if key == "expect" {
            if seen_expect {
                return Err(DslError::at(l, c, "`expect` given twice"));
            }
            seen_expect = true;
            cur.expect_sym(":")?;
            loop {
                check.expect.push(parse_expectation(cur, m, kind)?);
                if !cur.eat_sym(",") {
                    break;
                }
            }
            cur.expect_sym(";")?;
            continue;
        }
        let field = Field::from_keyword(&key)
            .filter(|f| required.contains(f) || optional.contains(f))
            .ok_or_else(|| DslError::at(l, c, format!("`{key}` is not a field of `{kind}` checks")))?;
        if field == Field::Level {
            check.fields.levels.push(parse_level(cur, m)?);
            continue;
        }
        if check.fields.has(field) {
            return Err(DslError::at(l, c, format!("`{key}` given twice")));
        }
        cur.expect_sym(":")?;
        let f = &mut check.fields;
        match field {
            Field::Algebra => {
                let (l, c) = (cur.here().line, cur.here().col);
                let a = cur.expect_ident()?;
                if m.algebra(&a).is_none() {
                    return Err(DslError::at(l, c, format!("unknown algebra `{a}`")));
                }
                f.algebra = Some(a);
            }
            Field::Derivation => {
                let (l, c) = (cur.here().line, cur.here().col);
                let d = cur.expect_ident()?;
                resolve_derivation(m, &d, l, c)?;
                f.derivation = Some(d);
            }
            Field::Derivations => f.derivations = Some(parse_derivation_names(cur, m)?),
            Field::Elements => f.elements = Some(parse_polys(cur, &m.vars)?),
            Field::Element => f.element = Some(parse_expr(cur, &m.vars)?),
            Field::Denominator => f.denominator = Some(parse_expr(cur, &m.vars)?),
            Field::Slice => f.slice = Some(parse_expr(cur, &m.vars)?),
            Field::Valuation => f.valuation = Some(parse_valuation(cur, &m.vars)?),
            Field::Weights => {
                let mut w = Vec::new();
                loop {
                    let (l, c) = (cur.here().line, cur.here().col);
                    let v = cur.expect_ident()?;
                    if m.vars.index_of(&v).is_none() {
                        return Err(DslError::at(l, c, format!("unknown variable `{v}`")));
                    }
                    cur.expect_sym("=")?;
                    w.push((v, cur.expect_int()?));
                    if !cur.eat_sym(",") {
                        break;
                    }
                }
                f.weights = Some(w);
            }
            Field::Degree => f.degree = Some(parse_u32(cur)?),
            Field::WordLength => f.word_length = Some(parse_u32(cur)?),
            Field::IterBound => f.iter_bound = Some(parse_u32(cur)?),
            Field::Cap => f.cap = Some(parse_u32(cur)?),
            Field::Level => unreachable!(),
        }
        cur.expect_sym(";")?;
    }
    if let Some(missing) = required.iter().find(|f| !check.fields.has(**f)) {
        return Err(DslError::at(l0, c0, format!("`{kind}` check is missing `{}`", missing.keyword())));
    }
    m.checks.push(check);
    Ok(())
}

/// Integer value of a constant expectation argument.
pub(crate) fn as_int(p: &Poly) -> Option<i64> {
    use num_traits::ToPrimitive;
    if !p.is_constant() {
        return None;
    }
    let c: Rat = p.constant_term();
    if !c.is_integer() {
        return None;
    }
    c.to_integer().to_i64()
}
