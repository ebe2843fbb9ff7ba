use std::fmt::Write;

use super::model::{Check, Field, Model};
use crate::poly::Poly;

fn join_polys(ps: &[Poly]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

/// Canonical text of a model; `parse_model` reads it back unchanged.
pub fn print_model(m: &Model) -> String {
    let mut out = String::new();
    let params = m.vars.param_names();
    let mains = m.vars.main_names();
    out.push_str("vars {");
    if !params.is_empty() {
        let _ = write!(out, " params: {};", params.join(", "));
    }
    let _ = writeln!(out, " main: {}; }}", mains.join(", "));
    for a in &m.algebras {
        let _ = writeln!(out, "algebra {} {{ gens: {}; }}", a.name().unwrap_or("B"), join_polys(a.generators()));
    }
    for d in &m.derivations {
        let _ = write!(out, "derivation {} {{", d.name);
        for (i, img) in d.derivation.images().iter().enumerate() {
            let _ = write!(out, " {} -> {};", m.vars.name(i), img);
        }
        out.push_str(" }\n");
    }
    for c in &m.checks {
        out.push_str(&print_check(c));
        out.push('\n');
    }
    out
}

pub fn print_check(c: &Check) -> String {
    let mut out = format!("check {}", c.kind);
    if let Some(n) = &c.name {
        let _ = write!(out, " {n}");
    }
    out.push_str(" {");
    let f = &c.fields;
    for field in Field::ALL {
        if !f.has(field) {
            continue;
        }
        let value = match field {
            Field::Algebra => f.algebra.clone().unwrap(),
            Field::Derivation => f.derivation.clone().unwrap(),
            Field::Derivations => f.derivations.as_ref().unwrap().join(", "),
            Field::Elements => join_polys(f.elements.as_ref().unwrap()),
            Field::Element => f.element.as_ref().unwrap().to_string(),
            Field::Denominator => f.denominator.as_ref().unwrap().to_string(),
            Field::Slice => f.slice.as_ref().unwrap().to_string(),
            Field::Valuation => f.valuation.as_ref().unwrap().to_string(),
            Field::Weights => {
                f.weights.as_ref().unwrap().iter().map(|(v, w)| format!("{v} = {w}")).collect::<Vec<_>>().join(", ")
            }
            Field::Degree => f.degree.unwrap().to_string(),
            Field::WordLength => f.word_length.unwrap().to_string(),
            Field::IterBound => f.iter_bound.unwrap().to_string(),
            Field::Cap => f.cap.unwrap().to_string(),
            Field::Level => {
                for level in &f.levels {
                    let _ = write!(out, " level {{ gens: {}; derivations: {};", join_polys(&level.gens), level.derivations.join(", "));
                    if let Some(w) = &level.witness {
                        let _ = write!(out, " witness: {w};");
                    }
                    out.push_str(" }");
                }
                continue;
            }
        };
        let _ = write!(out, " {}: {};", field.keyword(), value);
    }
    if !c.expect.is_empty() {
        let e: Vec<String> = c.expect.iter().map(|e| e.to_string()).collect();
        let _ = write!(out, " expect: {};", e.join(", "));
    }
    out.push_str(" }");
    out
}
