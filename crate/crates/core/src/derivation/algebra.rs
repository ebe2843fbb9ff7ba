use std::sync::Arc;

use serde::Serialize;

use crate::error::{DerivationError, PolyError};
use crate::grobner::SubalgebraOracle;
use crate::poly::{same_table, Poly, VarTable};

/// Finitely generated ℚ-subalgebra ℚ[g₁, …, g_k] of the ambient ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Algebra {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(skip)]
    vars: Arc<VarTable>,
    generators: Vec<Poly>,
}

impl Algebra {
    pub fn new(vars: &Arc<VarTable>, generators: Vec<Poly>) -> Result<Self, DerivationError> {
        for (i, g) in generators.iter().enumerate() {
            if !same_table(g.vars(), vars) {
                return Err(PolyError::VarTableMismatch.into());
            }
            if g.is_zero() {
                return Err(DerivationError::ZeroGenerator(i));
            }
        }
        Ok(Algebra { name: None, vars: vars.clone(), generators })
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// The whole ambient polynomial ring, generated by its variables.
    pub fn ambient(vars: &Arc<VarTable>) -> Self {
        Algebra { name: None, vars: vars.clone(), generators: (0..vars.len()).map(|i| Poly::var(vars, i)).collect() }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn oracle(&self) -> Result<SubalgebraOracle, PolyError> {
        SubalgebraOracle::new(&self.vars, &self.generators)
    }
}
