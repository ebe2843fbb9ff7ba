use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::derivation::Algebra;
use crate::linalg::{row_space, SparseRow};
use crate::poly::{window_monomials, Monomial, Poly, Rat, VarTable};

/// Finite window onto an infinite-dimensional space: `ambient_degree` caps
/// total degree in the ambient variables, `word_length` caps the number of
/// generator factors in subalgebra spanning sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TruncationSpec {
    pub ambient_degree: u32,
    pub word_length: u32,
}

impl TruncationSpec {
    pub fn new(ambient_degree: u32, word_length: u32) -> Self {
        TruncationSpec { ambient_degree, word_length }
    }

    pub fn degree(d: u32) -> Self {
        TruncationSpec { ambient_degree: d, word_length: 0 }
    }

    pub fn words(l: u32) -> Self {
        TruncationSpec { ambient_degree: 0, word_length: l }
    }
}

/// Column indexing of monomials, largest monomial first.
pub(crate) struct MonomialIndex {
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialIndex {
    pub fn from_polys<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Self {
        let set: BTreeSet<Monomial> = polys.into_iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
        let monos: Vec<Monomial> = set.into_iter().rev().collect();
        let index = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialIndex { monos, index }
    }

    pub fn row(&self, p: &Poly) -> SparseRow<Rat> {
        let mut r: SparseRow<Rat> = p.terms().map(|(m, c)| (self.index[m], c.clone())).collect();
        r.sort_by_key(|(c, _)| *c);
        r
    }

    pub fn poly(&self, vars: &Arc<VarTable>, row: &SparseRow<Rat>) -> Poly {
        Poly::from_terms(vars, row.iter().map(|(c, v)| (self.monos[*c].clone(), v.clone())))
    }
}

/// Canonical ℚ-basis of the span of `polys`: reduced row-echelon form over
/// monomials in decreasing order, returned by increasing leading monomial.
pub fn canonical_basis(vars: &Arc<VarTable>, polys: &[Poly]) -> Vec<Poly> {
    let idx = MonomialIndex::from_polys(polys);
    let rows: Vec<SparseRow<Rat>> = polys.iter().filter(|p| !p.is_zero()).map(|p| idx.row(p)).collect();
    let mut basis: Vec<Poly> = row_space(&rows).iter().map(|r| idx.poly(vars, r)).collect();
    basis.reverse();
    basis
}

/// Products `Σ c_j · spanning[j]` for each coefficient vector.
pub(crate) fn combinations(vars: &Arc<VarTable>, spanning: &[Poly], vectors: &[SparseRow<Rat>]) -> Vec<Poly> {
    vectors
        .iter()
        .map(|v| {
            v.iter()
                .filter(|(_, c)| !c.is_zero())
                .fold(Poly::zero(vars), |acc, (j, c)| &acc + &spanning[*j].scale(c))
        })
        .collect()
}

/// Spanning words and canonical basis of the window `B_{≤L}`.
#[derive(Debug, Clone, Serialize)]
pub struct SubalgebraWindow {
    pub word_length: u32,
    /// Exponent vectors over the generators, one per spanning element.
    pub words: Vec<Vec<u32>>,
    pub spanning: Vec<Poly>,
    pub basis: Vec<Poly>,
}

/// All products of at most `L` generators and a ℚ-basis of their span.
pub fn subalgebra_window(b: &Algebra, word_length: u32) -> SubalgebraWindow {
    let gens = b.generators();
    let words = window_monomials(gens.len(), word_length);
    let mut cache: HashMap<Vec<u32>, Poly> = HashMap::new();
    let mut spanning = Vec::with_capacity(words.len());
    for w in &words {
        // reuse the value of the word with one factor removed
        let value = match w.exps().iter().position(|&e| e > 0) {
            None => Poly::one(b.vars()),
            Some(i) => {
                let mut prev = w.exps().to_vec();
                prev[i] -= 1;
                &cache[&prev] * &gens[i]
            }
        };
        cache.insert(w.exps().to_vec(), value.clone());
        spanning.push(value);
    }
    let basis = canonical_basis(b.vars(), &spanning);
    SubalgebraWindow { word_length, words: words.into_iter().map(|m| m.0).collect(), spanning, basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_poly;

    fn alg(v: &Arc<VarTable>, gens: &[&str]) -> Algebra {
        Algebra::new(v, gens.iter().map(|s| parse_poly(v, s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn window_examples() {
        let v = VarTable::with_params(&["t"], &["x", "y"]).unwrap();
        let w = subalgebra_window(&alg(&v, &["x", "y"]), 2);
        let shown: Vec<String> = w.basis.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["1", "y", "x", "y^2", "x*y", "x^2"]);
        let w = subalgebra_window(&alg(&v, &["x", "x"]), 1);
        assert_eq!(w.spanning.len(), 3);
        assert_eq!(w.basis.len(), 2);
        // 1 + 4 generators + 9 distinct values of the 10 quadratic words
        let w = subalgebra_window(&alg(&v, &["x", "y", "t*x", "t*y"]), 2);
        assert_eq!(w.spanning.len(), 15);
        assert_eq!(w.basis.len(), 14);
    }

    #[test]
    fn canonical_basis_is_reduced() {
        let v = VarTable::main_only(&["x", "y"]).unwrap();
        let p = |s: &str| parse_poly(&v, s).unwrap();
        let b = canonical_basis(&v, &[p("x+y"), p("2*x-y"), p("x+y+1")]);
        assert_eq!(b, vec![p("1"), p("y"), p("x")]);
        assert!(canonical_basis(&v, &[p("0")]).is_empty());
    }
}
