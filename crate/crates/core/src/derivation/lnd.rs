use serde::Serialize;

use super::{Algebra, Derivation};
use crate::error::DerivationError;
use crate::grobner::{Membership, SubalgebraOracle, Witness};
use crate::poly::Poly;

/// Iteration cap per generator used when none is given.
pub const DEFAULT_ITER_BOUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Stability {
    /// `witnesses[i]` writes `D(gᵢ)` in the generators.
    Stable { witnesses: Vec<Witness> },
    Unstable { generator: usize, image: Poly },
}

impl Stability {
    pub fn is_stable(&self) -> bool {
        matches!(self, Stability::Stable { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Nilpotency {
    /// `indices[i]` is the least `n` with `Dⁿ(gᵢ) = 0`.
    Nilpotent { indices: Vec<usize> },
    Inconclusive { bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LndStatus {
    pub witnesses: Vec<Witness>,
    pub nilpotency: Nilpotency,
}

impl LndStatus {
    pub fn is_lnd(&self) -> bool {
        matches!(self.nilpotency, Nilpotency::Nilpotent { .. })
    }
}

/// Decides whether `D` maps `B` into itself, one exact membership test per
/// generator image.
pub fn check_stability(d: &Derivation, b: &Algebra) -> Result<Stability, DerivationError> {
    let oracle = b.oracle()?;
    stability_with(d, b, &oracle)
}

pub(crate) fn stability_with(d: &Derivation, b: &Algebra, oracle: &SubalgebraOracle) -> Result<Stability, DerivationError> {
    let mut witnesses = Vec::with_capacity(b.generators().len());
    for (i, g) in b.generators().iter().enumerate() {
        let image = d.apply(g)?;
        match oracle.test(&image)? {
            Membership::Member { witness } => witnesses.push(witness),
            Membership::NonMember { .. } => return Ok(Stability::Unstable { generator: i, image }),
        }
    }
    Ok(Stability::Stable { witnesses })
}

/// Stability plus nilpotency on every generator. The elements killed by a
/// power of `D` form a subalgebra, so nilpotency on the generators of a
/// stable pair proves local nilpotency on `B`; an exhausted bound is only
/// reported as inconclusive.
pub fn check_lnd(d: &Derivation, b: &Algebra, iter_bound: usize) -> Result<LndStatus, DerivationError> {
    let oracle = b.oracle()?;
    check_lnd_with(d, b, &oracle, iter_bound)
}

pub(crate) fn check_lnd_with(
    d: &Derivation,
    b: &Algebra,
    oracle: &SubalgebraOracle,
    iter_bound: usize,
) -> Result<LndStatus, DerivationError> {
    let witnesses = match stability_with(d, b, oracle)? {
        Stability::Stable { witnesses } => witnesses,
        Stability::Unstable { generator, image } => {
            return Err(DerivationError::Unstable {
                generator: b.generators()[generator].to_string(),
                image: image.to_string(),
            })
        }
    };
    let mut indices = Vec::with_capacity(b.generators().len());
    for g in b.generators() {
        match d.nilpotency_index(g, iter_bound)? {
            Some(n) => indices.push(n),
            None => return Ok(LndStatus { witnesses, nilpotency: Nilpotency::Inconclusive { bound: iter_bound } }),
        }
    }
    Ok(LndStatus { witnesses, nilpotency: Nilpotency::Nilpotent { indices } })
}
