//! Subalgebra membership by the tag-variable normal-form test.
//!
//! For generators g₁…g_k of a subalgebra of ℚ[x], a Gröbner basis of
//! ⟨y₁ − g₁, …, y_k − g_k⟩ is computed in a block order with the ambient
//! variables dominating the tags. A polynomial f lies in ℚ[g₁…g_k] exactly
//! when its normal form involves tags only, and that normal form, read as a
//! polynomial in the tags, expresses f in the generators.

use std::sync::Arc;

use serde::Serialize;

use super::{buchberger, GroebnerBasis, MonomialOrder};
use crate::error::PolyError;
use crate::poly::{same_table, Poly, VarTable};

/// Polynomial expression in generator names `g1 … gk`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    expr: Poly,
}

impl Witness {
    pub fn expr(&self) -> &Poly {
        &self.expr
    }

    /// Substitutes the generators for their tags.
    pub fn evaluate(&self, generators: &[Poly], ambient: &Arc<VarTable>) -> Result<Poly, PolyError> {
        self.expr.compose(ambient, generators)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Membership {
    Member { witness: Witness },
    NonMember { normal_form: String },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Membership::Member { witness } => Some(witness),
            Membership::NonMember { .. } => None,
        }
    }
}

/// Reusable membership tester for one subalgebra.
#[derive(Debug, Clone)]
pub struct SubalgebraOracle {
    ambient: Arc<VarTable>,
    generators: Vec<Poly>,
    extended: Arc<VarTable>,
    tags: Arc<VarTable>,
    basis: GroebnerBasis,
}

impl SubalgebraOracle {
    pub fn new(ambient: &Arc<VarTable>, generators: &[Poly]) -> Result<Self, PolyError> {
        for g in generators {
            if !same_table(g.vars(), ambient) {
                return Err(PolyError::VarTableMismatch);
            }
        }
        let n = ambient.len();
        let k = generators.len();
        // internal tag names cannot clash with DSL identifiers
        let internal: Vec<String> = (1..=k).map(|i| format!("%g{i}")).collect();
        let extended = ambient.extended(&internal)?;
        let tag_names: Vec<String> = (1..=k).map(|i| format!("g{i}")).collect();
        let tags = VarTable::main_only(&tag_names)?;
        let lift: Vec<usize> = (0..n).collect();
        let ideal: Vec<Poly> = generators
            .iter()
            .enumerate()
            .map(|(i, g)| &Poly::var(&extended, n + i) - &g.embed(&extended, &lift))
            .collect();
        let basis = buchberger(&extended, &ideal, MonomialOrder::Block(n))?;
        Ok(SubalgebraOracle { ambient: ambient.clone(), generators: generators.to_vec(), extended, tags, basis })
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    pub fn test(&self, f: &Poly) -> Result<Membership, PolyError> {
        if !same_table(f.vars(), &self.ambient) {
            return Err(PolyError::VarTableMismatch);
        }
        let n = self.ambient.len();
        let lift: Vec<usize> = (0..n).collect();
        let nf = self.basis.normal_form(&f.embed(&self.extended, &lift))?;
        if (0..n).any(|i| nf.involves(i)) {
            return Ok(Membership::NonMember { normal_form: nf.to_string() });
        }
        let to_tags: Vec<usize> = (0..n).map(|_| 0).chain(0..self.generators.len()).collect();
        let expr = if self.generators.is_empty() {
            // only constants are members of ℚ
            Poly::constant(&self.tags, nf.constant_term())
        } else {
            nf.embed(&self.tags, &to_tags)
        };
        Ok(Membership::Member { witness: Witness { expr } })
    }
}

/// One-shot membership test of `f` in ℚ[generators].
pub fn subalgebra_membership(f: &Poly, generators: &[Poly]) -> Result<Membership, PolyError> {
    SubalgebraOracle::new(f.vars(), generators)?.test(f)
}
