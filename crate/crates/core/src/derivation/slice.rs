use std::cmp::Ordering;

use serde::Serialize;

use super::{Algebra, Derivation, DEFAULT_ITER_BOUND};
use crate::error::{DerivationError, PolyError};
use crate::poly::{window_monomials, Poly, Rat, RatFunc};

/// `s ∈ B` with `a = D(s) ≠ 0` and `D(a) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalSlice {
    pub s: Poly,
    pub a: Poly,
    /// Exponent of each generator in the word that produced `s`.
    pub word: Vec<u32>,
}

fn word_value(b: &Algebra, word: &[u32]) -> Poly {
    word.iter()
        .zip(b.generators())
        .filter(|(e, _)| **e > 0)
        .fold(Poly::one(b.vars()), |acc, (e, g)| &acc * &g.pow(*e))
}

/// Searches generator words of increasing length up to `search_degree` for a
/// local slice. Among hits of the same length the one whose image `D(s)` is
/// largest in canonical order wins.
pub fn find_local_slice(d: &Derivation, b: &Algebra, search_degree: u32) -> Result<Option<LocalSlice>, PolyError> {
    let k = b.generators().len();
    let words = window_monomials(k, search_degree);
    for len in 1..=search_degree {
        let mut hits: Vec<LocalSlice> = Vec::new();
        for w in words.iter().filter(|w| w.degree() == len) {
            let s = word_value(b, w.exps());
            let a = d.apply(&s)?;
            if !a.is_zero() && d.apply(&a)?.is_zero() {
                hits.push(LocalSlice { s, a, word: w.exps().to_vec() });
            }
        }
        // stable sort keeps enumeration order among equal images
        hits.sort_by(|x, y| cmp_desc(&x.a, &y.a));
        if let Some(h) = hits.into_iter().next() {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Descending comparison of polynomials term by term from the top.
fn cmp_desc(x: &Poly, y: &Poly) -> Ordering {
    let mut xi = x.terms().rev().map(|(m, _)| m);
    let mut yi = y.terms().rev().map(|(m, _)| m);
    loop {
        match (xi.next(), yi.next()) {
            (Some(a), Some(b)) if a == b => continue,
            (Some(a), Some(b)) => return b.cmp(a),
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (None, None) => return Ordering::Equal,
        }
    }
}

/// Kernel coefficients of `b` in the local slice: with `σ = s/a`, returns
/// `c₀ … c_N` where `c_n = π(Dⁿ b)/n!` and
/// `π(f) = Σ_k (-1)ᵏ Dᵏ(f) σᵏ / k!`. Then `b = Σ c_n σⁿ` and every `c_n` is
/// killed by `D`.
pub fn dixmier_decompose(d: &Derivation, s: &Poly, b: &Poly) -> Result<Vec<RatFunc>, DerivationError> {
    d.ambient_nilpotency(DEFAULT_ITER_BOUND)?;
    let a = d.apply(s)?;
    if a.is_zero() {
        return Err(DerivationError::Precondition("D(s) must be nonzero".into()));
    }
    if !d.apply(&a)?.is_zero() {
        return Err(DerivationError::Precondition("D²(s) must vanish".into()));
    }
    let sigma = RatFunc::new(s.clone(), a)?;
    let mut iterates = Vec::new();
    let mut f = b.clone();
    while !f.is_zero() {
        iterates.push(f.clone());
        f = d.apply(&f)?;
    }
    let vars = b.vars();
    if iterates.is_empty() {
        return Ok(vec![RatFunc::zero(vars)]);
    }
    let mut sigma_pows = vec![RatFunc::one(vars)];
    for k in 1..iterates.len() {
        let next = &sigma_pows[k - 1] * &sigma;
        sigma_pows.push(next);
    }
    let mut fact = vec![Rat::from_integer(1.into())];
    for k in 1..iterates.len() {
        let next = &fact[k - 1] * Rat::from_integer(k.into());
        fact.push(next);
    }
    // π(Dⁿ b) only needs the iterates D^(n+k) b, already computed.
    let mut coeffs = Vec::with_capacity(iterates.len());
    for n in 0..iterates.len() {
        let mut acc = RatFunc::zero(vars);
        for k in 0..iterates.len() - n {
            let mut c = Rat::from_integer(1.into()) / &fact[k];
            if k % 2 == 1 {
                c = -c;
            }
            let term = &RatFunc::from_poly(iterates[n + k].scale(&c)) * &sigma_pows[k];
            acc = &acc + &term;
        }
        coeffs.push(acc.scale(&(Rat::from_integer(1.into()) / &fact[n])));
    }
    Ok(coeffs)
}

/// `Σ c_n σⁿ` with `σ = s/D(s)`.
pub fn dixmier_reconstruct(coeffs: &[RatFunc], s: &Poly, a: &Poly) -> Result<RatFunc, PolyError> {
    let sigma = RatFunc::new(s.clone(), a.clone())?;
    let mut acc = RatFunc::zero(s.vars());
    let mut pow = RatFunc::one(s.vars());
    for c in coeffs {
        acc = &acc + &(c * &pow);
        pow = &pow * &sigma;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_poly;
    use crate::poly::VarTable;
    use std::sync::Arc;

    fn v() -> Arc<VarTable> {
        VarTable::with_params(&["t"], &["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(&v(), s).unwrap()
    }

    fn der(images: &[(&str, &str)]) -> Derivation {
        let im: Vec<(&str, Poly)> = images.iter().map(|(x, s)| (*x, p(s))).collect();
        Derivation::from_named(&v(), &im).unwrap()
    }

    fn alg(gens: &[&str]) -> Algebra {
        Algebra::new(&v(), gens.iter().map(|s| p(s)).collect()).unwrap()
    }

    #[test]
    fn slice_examples() {
        let sl = find_local_slice(&der(&[("y", "1")]), &alg(&["x", "y"]), 3).unwrap().unwrap();
        assert_eq!((sl.s, sl.a), (p("y"), p("1")));
        let sl = find_local_slice(&der(&[("x", "y")]), &alg(&["x", "y"]), 3).unwrap().unwrap();
        assert_eq!((sl.s, sl.a), (p("x"), p("y")));
        let sl = find_local_slice(&der(&[("t", "1")]), &alg(&["x", "y", "t*x", "t*y"]), 2).unwrap().unwrap();
        assert_eq!((sl.s, sl.a), (p("t*x"), p("x")));
        assert_eq!(sl.word, vec![0, 0, 1, 0]);
        assert!(find_local_slice(&Derivation::zero(&v()), &alg(&["x"]), 3).unwrap().is_none());
    }

    #[test]
    fn dixmier_examples() {
        let c = dixmier_decompose(&der(&[("y", "1")]), &p("y"), &p("x+y^2")).unwrap();
        assert_eq!(c, vec![RatFunc::from_poly(p("x")), RatFunc::zero(&v()), RatFunc::from_poly(p("1"))]);
        let c = dixmier_decompose(&der(&[("x", "y")]), &p("x"), &p("x")).unwrap();
        assert_eq!(c, vec![RatFunc::zero(&v()), RatFunc::from_poly(p("y"))]);
        let c = dixmier_decompose(&der(&[("x", "y")]), &p("x"), &p("y^2+t")).unwrap();
        assert_eq!(c, vec![RatFunc::from_poly(p("y^2+t"))]);
        assert!(dixmier_decompose(&der(&[("x", "y")]), &p("y"), &p("x")).is_err());
    }

    #[test]
    fn reconstruction_identity() {
        let d = der(&[("x", "y")]);
        let b = p("x^3*y - 2*t*x^2 + y^4 + x");
        let c = dixmier_decompose(&d, &p("x"), &b).unwrap();
        assert_eq!(dixmier_reconstruct(&c, &p("x"), &p("y")).unwrap(), RatFunc::from_poly(b));
        for ci in &c {
            assert!(d.apply_ratfunc(ci).unwrap().is_zero());
        }
    }
}
