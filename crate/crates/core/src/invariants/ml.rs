use serde::Serialize;

use super::kernel::joint_kernel_vectors;
use super::window::{canonical_basis, combinations, subalgebra_window, TruncationSpec};
use crate::derivation::{lnd, Algebra, Derivation, Nilpotency};
use crate::error::InvariantsError;
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", content = "elements", rename_all = "snake_case")]
pub enum MlOutcome {
    ConstantsOnly,
    /// Non-constant basis elements of the window kernel.
    ExtraElements(Vec<Poly>),
}

/// Window statement about `A_Δ ∩ B_{≤L}`: it certifies what the kernel
/// intersection looks like inside the window and nothing beyond it.
#[derive(Debug, Clone, Serialize)]
pub struct MlCertificate {
    pub generators: Vec<Poly>,
    pub derivations: Vec<Derivation>,
    pub spec: TruncationSpec,
    pub window_dim: usize,
    /// Per derivation, nilpotency index of each generator.
    pub nilpotency_indices: Vec<Vec<usize>>,
    pub kernel_basis: Vec<Poly>,
    pub outcome: MlOutcome,
}

impl MlCertificate {
    pub fn is_constants_only(&self) -> bool {
        self.outcome == MlOutcome::ConstantsOnly
    }
}

/// Verifies every derivation is stable and locally nilpotent on `B`, then
/// intersects their kernels with the word-length window of `B`.
pub fn ml_certificate(
    b: &Algebra,
    deltas: &[Derivation],
    spec: TruncationSpec,
    iter_bound: usize,
) -> Result<MlCertificate, InvariantsError> {
    let oracle = b.oracle()?;
    let mut nilpotency_indices = Vec::with_capacity(deltas.len());
    for d in deltas {
        let status = lnd::check_lnd_with(d, b, &oracle, iter_bound)?;
        match status.nilpotency {
            Nilpotency::Nilpotent { indices } => nilpotency_indices.push(indices),
            Nilpotency::Inconclusive { bound } => {
                return Err(InvariantsError::Inconclusive { derivation: d.describe(), bound })
            }
        }
    }
    let window = subalgebra_window(b, spec.word_length);
    let vectors = joint_kernel_vectors(&window.basis, deltas)?;
    let elements = combinations(b.vars(), &window.basis, &vectors);
    let kernel_basis = canonical_basis(b.vars(), &elements);
    let extra: Vec<Poly> = kernel_basis.iter().filter(|p| !p.is_constant()).cloned().collect();
    let outcome = if extra.is_empty() { MlOutcome::ConstantsOnly } else { MlOutcome::ExtraElements(extra) };
    Ok(MlCertificate {
        generators: b.generators().to_vec(),
        derivations: deltas.to_vec(),
        spec,
        window_dim: window.basis.len(),
        nilpotency_indices,
        kernel_basis,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::DEFAULT_ITER_BOUND;
    use crate::dsl::parse_poly;
    use crate::error::DerivationError;
    use crate::poly::VarTable;

    #[test]
    fn ml_examples() {
        let v = VarTable::with_params(&["t"], &["x", "y"]).unwrap();
        let p = |s: &str| parse_poly(&v, s).unwrap();
        let b = Algebra::new(&v, vec![p("x"), p("y"), p("t*x"), p("t*y")]).unwrap();
        let d1 = Derivation::partial(&v, 1, p("y"));
        let d2 = Derivation::partial(&v, 2, p("x"));
        let d3 = Derivation::partial(&v, 0, p("1"));
        let c = ml_certificate(&b, &[d1.clone(), d2.clone()], TruncationSpec::new(6, 4), DEFAULT_ITER_BOUND).unwrap();
        assert!(c.is_constants_only());
        assert_eq!(c.nilpotency_indices, vec![vec![2, 1, 2, 1], vec![1, 2, 1, 2]]);
        let c = ml_certificate(&b, &[d1, d2, d3.clone()], TruncationSpec::words(3), DEFAULT_ITER_BOUND).unwrap();
        assert!(c.is_constants_only());

        // D₃ alone: the window kernel lives in ℚ[x, y]
        let c = ml_certificate(&b, &[d3], TruncationSpec::words(2), DEFAULT_ITER_BOUND).unwrap();
        match &c.outcome {
            MlOutcome::ExtraElements(e) => {
                assert_eq!(e.len(), 5);
                assert!(e.iter().all(|f| !f.involves(0)));
            }
            other => panic!("{other:?}"),
        }

        let w = VarTable::main_only(&["x", "y"]).unwrap();
        let q = |s: &str| parse_poly(&w, s).unwrap();
        let b = Algebra::new(&w, vec![q("x"), q("y")]).unwrap();
        let dx = Derivation::partial(&w, 0, q("1"));
        let c = ml_certificate(&b, &[dx], TruncationSpec::words(3), DEFAULT_ITER_BOUND).unwrap();
        assert_eq!(c.outcome, MlOutcome::ExtraElements(vec![q("y"), q("y^2"), q("y^3")]));
    }

    #[test]
    fn rejects_unstable_and_non_nilpotent() {
        let v = VarTable::with_params(&["t"], &["x"]).unwrap();
        let p = |s: &str| parse_poly(&v, s).unwrap();
        let b = Algebra::new(&v, vec![p("t*x")]).unwrap();
        let dt = Derivation::partial(&v, 0, p("1"));
        let e = ml_certificate(&b, &[dt], TruncationSpec::words(2), 64).unwrap_err();
        assert!(matches!(e, InvariantsError::Derivation(DerivationError::Unstable { .. })));
        let b = Algebra::new(&v, vec![p("x")]).unwrap();
        let euler = Derivation::partial(&v, 1, p("x"));
        let e = ml_certificate(&b, &[euler], TruncationSpec::words(2), 8).unwrap_err();
        assert!(matches!(e, InvariantsError::Inconclusive { bound: 8, .. }));
    }
}
