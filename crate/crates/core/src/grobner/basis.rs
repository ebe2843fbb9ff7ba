//! Buchberger's algorithm with the normal selection strategy and both
//! Buchberger criteria.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use super::MonomialOrder;
use crate::error::PolyError;
use crate::poly::{same_table, Monomial, Poly, Rat, VarTable};

/// Terms sorted ascending under some order; the leading term is last.
type Terms = Vec<(Monomial, Rat)>;

/// Reduced Gröbner basis: monic, auto-reduced, sorted by increasing leading
/// monomial.
#[derive(Debug, Clone, Serialize)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    #[serde(skip)]
    vars: Arc<VarTable>,
    generators: Vec<Poly>,
    #[serde(skip)]
    sorted: Vec<Terms>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    /// Leading monomials under the basis order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|t| t.last().expect("nonzero").0.clone()).collect()
    }

    pub fn normal_form(&self, f: &Poly) -> Result<Poly, PolyError> {
        if !same_table(f.vars(), &self.vars) {
            return Err(PolyError::VarTableMismatch);
        }
        let r = reduce(sorted_terms(f, self.order), &self.sorted, self.order);
        Ok(Poly::from_terms(&self.vars, r))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool, PolyError> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

fn sorted_terms(p: &Poly, ord: MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|a, b| ord.cmp(&a.0, &b.0));
    t
}

/// `f - c * m * g`, merging two ascending term lists.
fn sub_mul(f: &Terms, c: &Rat, m: &Monomial, g: &Terms, ord: MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut gi = g.iter().map(|(gm, gc)| (gm.mul(m), -(gc * c))).peekable();
    let mut fi = f.iter().cloned().peekable();
    loop {
        match (fi.peek(), gi.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(fi.next().unwrap()),
            (None, Some(_)) => out.push(gi.next().unwrap()),
            (Some(a), Some(b)) => match ord.cmp(&a.0, &b.0) {
                Ordering::Less => out.push(fi.next().unwrap()),
                Ordering::Greater => out.push(gi.next().unwrap()),
                Ordering::Equal => {
                    let (am, ac) = fi.next().unwrap();
                    let (_, bc) = gi.next().unwrap();
                    let s = ac + bc;
                    if !s.is_zero() {
                        out.push((am, s));
                    }
                }
            },
        }
    }
    out
}

fn lead(t: &Terms) -> &(Monomial, Rat) {
    t.last().expect("nonzero polynomial")
}

/// Full reduction of `f` modulo `basis`.
fn reduce(mut p: Terms, basis: &[Terms], ord: MonomialOrder) -> Terms {
    let mut rem: Terms = Vec::new();
    while let Some((m, c)) = p.last().cloned() {
        let divisor = basis.iter().find_map(|g| {
            let (gm, gc) = lead(g);
            gm.quotient_of(&m).map(|q| (g, q, gc))
        });
        match divisor {
            Some((g, q, gc)) => {
                let f = &c / gc;
                p = sub_mul(&p, &f, &q, g, ord);
            }
            None => {
                p.pop();
                rem.push((m, c));
            }
        }
    }
    rem.reverse();
    rem
}

fn make_monic(t: &mut Terms) {
    let inv = Rat::one() / &lead(t).1;
    for (_, c) in t.iter_mut() {
        *c = &*c * &inv;
    }
}

fn s_poly(f: &Terms, g: &Terms, ord: MonomialOrder) -> Terms {
    let (fm, fc) = lead(f);
    let (gm, gc) = lead(g);
    let l = fm.lcm(gm);
    let uf = fm.quotient_of(&l).unwrap();
    let ug = gm.quotient_of(&l).unwrap();
    let scaled_f = sub_mul(&Vec::new(), &(-Rat::one() / fc), &uf, f, ord);
    sub_mul(&scaled_f, &(Rat::one() / gc), &ug, g, ord)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(vars: &Arc<VarTable>, gens: &[Poly], order: MonomialOrder) -> Result<GroebnerBasis, PolyError> {
    for g in gens {
        if !same_table(g.vars(), vars) {
            return Err(PolyError::VarTableMismatch);
        }
    }
    let mut basis: Vec<Terms> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let mut t = sorted_terms(g, order);
        make_monic(&mut t);
        basis.push(t);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut pending: HashSet<(usize, usize)> = pairs.iter().copied().collect();

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let (idx, _) = pairs
            .iter()
            .enumerate()
            .map(|(k, &(i, j))| (k, lead(&basis[i]).0.lcm(&lead(&basis[j]).0)))
            .min_by(|a, b| order.cmp(&a.1, &b.1))
            .unwrap();
        let (i, j) = pairs.swap_remove(idx);
        pending.remove(&(i, j));
        let (mi, mj) = (&lead(&basis[i]).0, &lead(&basis[j]).0);
        if mi.is_coprime(mj) {
            continue;
        }
        let l = mi.lcm(mj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lead(&basis[k]).0.divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let mut h = reduce(s, &basis, order);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        let k = basis.len();
        basis.push(h);
        for i in 0..k {
            pairs.push((i, k));
            pending.insert((i, k));
        }
    }

    Ok(finish(vars, basis, order))
}

fn finish(vars: &Arc<VarTable>, mut basis: Vec<Terms>, order: MonomialOrder) -> GroebnerBasis {
    basis.sort_by(|a, b| order.cmp(&lead(a).0, &lead(b).0));
    // minimal basis: drop elements whose lead is divisible by an earlier one
    let mut minimal: Vec<Terms> = Vec::new();
    for t in basis {
        if !minimal.iter().any(|g| lead(g).0.divides(&lead(&t).0)) {
            minimal.push(t);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Terms> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, t)| t.clone()).collect();
        let mut t = minimal[k].clone();
        let top = t.pop().unwrap();
        let mut tail = reduce(t, &others, order);
        tail.push(top);
        make_monic(&mut tail);
        reduced.push(tail);
    }
    let generators = reduced.iter().map(|t| Poly::from_terms(vars, t.iter().cloned())).collect();
    GroebnerBasis { order, vars: vars.clone(), generators, sorted: reduced }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_poly;

    fn p(v: &Arc<VarTable>, s: &str) -> Poly {
        parse_poly(v, s).unwrap()
    }

    /// Independent check: every S-polynomial reduces to zero by plain
    /// division against the generator list.
    fn s_pairs_reduce(gb: &GroebnerBasis) -> bool {
        let g = gb.generators();
        let ord = gb.order();
        let sorted: Vec<Terms> = g.iter().map(|x| sorted_terms(x, ord)).collect();
        for j in 0..g.len() {
            for i in 0..j {
                let s = s_poly(&sorted[i], &sorted[j], ord);
                if !reduce(s, &sorted, ord).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn principal_ideal() {
        let v = VarTable::main_only(&["x", "y"]).unwrap();
        let gb = buchberger(&v, &[p(&v, "x")], MonomialOrder::Grevlex).unwrap();
        assert_eq!(gb.generators(), &[p(&v, "x")]);
    }

    #[test]
    fn lex_example_contains_eliminant() {
        let v = VarTable::main_only(&["x", "y"]).unwrap();
        let gb = buchberger(&v, &[p(&v, "x^2-y"), p(&v, "y^2-x")], MonomialOrder::Lex).unwrap();
        assert!(gb.generators().contains(&p(&v, "y^4-y")));
        assert!(gb.generators().contains(&p(&v, "x-y^2")));
        assert_eq!(gb.generators().len(), 2);
        assert!(s_pairs_reduce(&gb));
        // the basis still generates the input ideal
        assert!(gb.contains(&p(&v, "x^2-y")).unwrap());
        assert!(gb.contains(&p(&v, "y^2-x")).unwrap());
    }

    #[test]
    fn zero_ideal() {
        let v = VarTable::main_only(&["x"]).unwrap();
        let gb = buchberger(&v, &[], MonomialOrder::Grevlex).unwrap();
        assert!(gb.generators().is_empty());
        assert_eq!(gb.normal_form(&p(&v, "x+1")).unwrap(), p(&v, "x+1"));
        let gb = buchberger(&v, &[Poly::zero(&v)], MonomialOrder::Grevlex).unwrap();
        assert!(gb.generators().is_empty());
    }

    #[test]
    fn normal_form_examples() {
        let v = VarTable::main_only(&["x", "y"]).unwrap();
        let gb = buchberger(&v, &[p(&v, "x")], MonomialOrder::Grevlex).unwrap();
        assert!(gb.normal_form(&p(&v, "x^2")).unwrap().is_zero());
        assert_eq!(gb.normal_form(&p(&v, "y")).unwrap(), p(&v, "y"));
        let gb = buchberger(&v, &[p(&v, "x^2-y")], MonomialOrder::Grevlex).unwrap();
        assert!(gb.normal_form(&p(&v, "x^2-y")).unwrap().is_zero());
    }

    #[test]
    fn cyclic3_is_groebner() {
        let v = VarTable::main_only(&["a", "b", "c"]).unwrap();
        let gens = [p(&v, "a+b+c"), p(&v, "a*b+b*c+c*a"), p(&v, "a*b*c-1")];
        for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Block(1)] {
            let gb = buchberger(&v, &gens, ord).unwrap();
            assert!(s_pairs_reduce(&gb), "{ord:?}");
            for g in &gens {
                assert!(gb.contains(g).unwrap());
            }
        }
        let gb = buchberger(&v, &gens, MonomialOrder::Lex).unwrap();
        assert!(gb.generators().contains(&p(&v, "c^3-1")));
    }

    #[test]
    fn unit_ideal() {
        let v = VarTable::main_only(&["x"]).unwrap();
        let gb = buchberger(&v, &[p(&v, "x"), p(&v, "x+1")], MonomialOrder::Grevlex).unwrap();
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.generators(), &[p(&v, "1")]);
    }
}
