use std::sync::Arc;

use serde::Serialize;

use crate::derivation::{Algebra, Derivation};
use crate::error::{InvariantsError, PolyError};
use crate::linalg::{poly_det, poly_rank};
use crate::poly::{same_table, window_monomials, Poly, Rat, VarTable};

/// `D₁…D_n`, `b₁…b_n` with `det(Dᵢ(b_j)) ≠ 0`, certifying `lndrk ≥ n` when
/// the `Dᵢ` are locally nilpotent.
#[derive(Debug, Clone, Serialize)]
pub struct RankWitness {
    /// Positions of the chosen derivations in the caller's list.
    pub derivation_indices: Vec<usize>,
    pub derivations: Vec<Derivation>,
    pub elements: Vec<Poly>,
    pub determinant: Poly,
}

impl RankWitness {
    pub fn rank(&self) -> usize {
        self.elements.len()
    }
}

fn matrix(ds: &[&Derivation], bs: &[Poly]) -> Result<Vec<Vec<Poly>>, PolyError> {
    ds.iter().map(|d| bs.iter().map(|b| d.apply(b)).collect()).collect()
}

/// Exact `det(Dᵢ(b_j))`; `None` when it vanishes (or `n = 0`).
pub fn rank_witness(ds: &[Derivation], bs: &[Poly]) -> Result<Option<RankWitness>, InvariantsError> {
    if ds.len() != bs.len() {
        return Err(InvariantsError::LengthMismatch { expected: ds.len(), got: bs.len() });
    }
    if ds.is_empty() {
        return Ok(None);
    }
    let refs: Vec<&Derivation> = ds.iter().collect();
    let det = poly_det(&matrix(&refs, bs)?).expect("nonempty square matrix");
    if det.is_zero() {
        return Ok(None);
    }
    Ok(Some(RankWitness {
        derivation_indices: (0..ds.len()).collect(),
        derivations: ds.to_vec(),
        elements: bs.to_vec(),
        determinant: det,
    }))
}

/// Greedy search over monomials of degree `≤ cap` (increasing degree, then
/// decreasing canonical order), keeping each monomial that raises the rank of
/// the matrix with columns `(Dᵢ(b))ᵢ`. A maximal square nonsingular minor is
/// then picked row by row.
pub fn find_rank_witness(vars: &Arc<VarTable>, ds: &[Derivation], cap: u32) -> Result<Option<RankWitness>, PolyError> {
    if ds.iter().any(|d| !same_table(d.vars(), vars)) {
        return Err(PolyError::VarTableMismatch);
    }
    let candidates = window_monomials(vars.len(), cap)
        .into_iter()
        .map(|m| Poly::term(vars, m, Rat::from_integer(1.into())));
    greedy(ds, candidates)
}

/// Same search over elements of `B`: products of at most `cap` generators,
/// enumerated like [`find_rank_witness`] with generators in place of
/// variables.
pub fn find_rank_witness_in(b: &Algebra, ds: &[Derivation], cap: u32) -> Result<Option<RankWitness>, PolyError> {
    if ds.iter().any(|d| !same_table(d.vars(), b.vars())) {
        return Err(PolyError::VarTableMismatch);
    }
    let gens = b.generators();
    let candidates = window_monomials(gens.len(), cap).into_iter().filter(|w| !w.is_one()).map(|w| {
        w.exps().iter().zip(gens).fold(Poly::one(b.vars()), |acc, (&e, g)| if e > 0 { &acc * &g.pow(e) } else { acc })
    });
    greedy(ds, candidates)
}

fn greedy(ds: &[Derivation], candidates: impl Iterator<Item = Poly>) -> Result<Option<RankWitness>, PolyError> {
    let all: Vec<&Derivation> = ds.iter().collect();
    let mut chosen: Vec<Poly> = Vec::new();
    for b in candidates {
        if chosen.len() == ds.len() {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(b);
        if poly_rank(&matrix(&all, &trial)?) > chosen.len() {
            chosen = trial;
        }
    }
    if chosen.is_empty() {
        return Ok(None);
    }
    let mut rows: Vec<usize> = Vec::new();
    for i in 0..ds.len() {
        if rows.len() == chosen.len() {
            break;
        }
        let mut trial = rows.clone();
        trial.push(i);
        let sel: Vec<&Derivation> = trial.iter().map(|&k| &ds[k]).collect();
        if poly_rank(&matrix(&sel, &chosen)?) > rows.len() {
            rows = trial;
        }
    }
    let sel: Vec<&Derivation> = rows.iter().map(|&k| &ds[k]).collect();
    let det = poly_det(&matrix(&sel, &chosen)?).expect("nonempty square matrix");
    debug_assert!(!det.is_zero());
    Ok(Some(RankWitness {
        derivation_indices: rows.clone(),
        derivations: sel.into_iter().cloned().collect(),
        elements: chosen,
        determinant: det,
    }))
}
