use std::fmt;
use std::sync::Arc;

use crate::error::PolyError;

/// Role of an ambient variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarKind {
    /// Transcendental parameter of the coefficient field (r₁, …, t).
    Param,
    /// Main polynomial variable (x₁, …, xₙ).
    Main,
}

/// Ordered list of variable names with their parameter/main partition.
///
/// The order of the list is the variable order used by every monomial order
/// and by the valuation recursion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarTable {
    names: Vec<String>,
    kinds: Vec<VarKind>,
}

impl VarTable {
    pub fn new(vars: Vec<(String, VarKind)>) -> Result<Arc<Self>, PolyError> {
        let mut names = Vec::with_capacity(vars.len());
        let mut kinds = Vec::with_capacity(vars.len());
        for (name, kind) in vars {
            if names.contains(&name) {
                return Err(PolyError::DuplicateVariable(name));
            }
            names.push(name);
            kinds.push(kind);
        }
        Ok(Arc::new(VarTable { names, kinds }))
    }

    /// Parameters first, then main variables.
    pub fn with_params<S: AsRef<str>, T: AsRef<str>>(params: &[S], main: &[T]) -> Result<Arc<Self>, PolyError> {
        let vars = params
            .iter()
            .map(|p| (p.as_ref().to_string(), VarKind::Param))
            .chain(main.iter().map(|m| (m.as_ref().to_string(), VarKind::Main)))
            .collect();
        Self::new(vars)
    }

    /// Table whose variables are all main variables.
    pub fn main_only<S: AsRef<str>>(main: &[S]) -> Result<Arc<Self>, PolyError> {
        Self::with_params::<S, S>(&[], main)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn kind(&self, i: usize) -> VarKind {
        self.kinds[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn params(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.kinds[i] == VarKind::Param)
    }

    pub fn mains(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.kinds[i] == VarKind::Main)
    }

    pub fn param_names(&self) -> Vec<&str> {
        self.params().map(|i| self.name(i)).collect()
    }

    pub fn main_names(&self) -> Vec<&str> {
        self.mains().map(|i| self.name(i)).collect()
    }

    /// A new table consisting of this table's variables followed by `extra`
    /// (all main).
    pub fn extended(&self, extra: &[String]) -> Result<Arc<Self>, PolyError> {
        let vars = self
            .names
            .iter()
            .cloned()
            .zip(self.kinds.iter().copied())
            .chain(extra.iter().map(|n| (n.clone(), VarKind::Main)))
            .collect();
        Self::new(vars)
    }
}

impl fmt::Display for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "params: {}; main: {};",
            self.param_names().join(", "),
            self.main_names().join(", ")
        )
    }
}

pub(crate) fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
