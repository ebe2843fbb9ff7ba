use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::window::{canonical_basis, combinations, TruncationSpec};
use crate::derivation::Derivation;
use crate::error::PolyError;
use crate::linalg::{nullspace, SparseRow};
use crate::poly::{same_table, window_monomials, Monomial, Poly, Rat, VarTable};

/// ℚ-basis of the polynomials of total degree `≤ d` killed by every
/// derivation in the set.
#[derive(Debug, Clone, Serialize)]
pub struct KernelBasis {
    pub derivations: Vec<Derivation>,
    pub spec: TruncationSpec,
    pub basis: Vec<Poly>,
}

impl KernelBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Elements of `span(spanning)` killed by every derivation, as coefficient
/// vectors over `spanning`.
pub(crate) fn joint_kernel_vectors(spanning: &[Poly], deltas: &[Derivation]) -> Result<Vec<SparseRow<Rat>>, PolyError> {
    let mut rows: HashMap<(usize, Monomial), SparseRow<Rat>> = HashMap::new();
    for (di, d) in deltas.iter().enumerate() {
        for (j, f) in spanning.iter().enumerate() {
            for (m, c) in d.apply(f)?.terms() {
                rows.entry((di, m.clone())).or_default().push((j, c.clone()));
            }
        }
    }
    // sort keys for a deterministic elimination order
    let mut keyed: Vec<_> = rows.into_iter().collect();
    keyed.sort_by(|a, b| a.0 .0.cmp(&b.0 .0).then_with(|| b.0 .1.cmp(&a.0 .1)));
    let rows: Vec<SparseRow<Rat>> = keyed.into_iter().map(|(_, r)| r).collect();
    Ok(nullspace(&rows, spanning.len()))
}

pub fn kernel_basis_bounded(d: &Derivation, spec: TruncationSpec) -> Result<KernelBasis, PolyError> {
    kernel_intersection_bounded(d.vars(), std::slice::from_ref(d), spec)
}

/// `A_Δ` truncated to total degree `spec.ambient_degree`. The empty set
/// gives the whole window.
pub fn kernel_intersection_bounded(
    vars: &Arc<VarTable>,
    deltas: &[Derivation],
    spec: TruncationSpec,
) -> Result<KernelBasis, PolyError> {
    if deltas.iter().any(|d| !same_table(d.vars(), vars)) {
        return Err(PolyError::VarTableMismatch);
    }
    let window: Vec<Poly> = window_monomials(vars.len(), spec.ambient_degree)
        .into_iter()
        .map(|m| Poly::term(vars, m, Rat::from_integer(1.into())))
        .collect();
    let vectors = joint_kernel_vectors(&window, deltas)?;
    let elements = combinations(vars, &window, &vectors);
    Ok(KernelBasis { derivations: deltas.to_vec(), spec, basis: canonical_basis(vars, &elements) })
}
