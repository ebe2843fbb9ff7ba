use num_traits::{One, Signed};

use super::{Poly, Rat};

pub(crate) fn format_rat(c: &Rat) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text: terms in decreasing canonical order, `^` for powers and
/// explicit `*`, e.g. `3*t^2*x*y - 1/2*y`.
pub(crate) fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let vars = p.vars();
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if m.is_one() || !a.is_one() {
            factors.push(format_rat(&a));
        }
        for (i, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(vars.name(i).to_string()),
                _ => factors.push(format!("{}^{}", vars.name(i), e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}
