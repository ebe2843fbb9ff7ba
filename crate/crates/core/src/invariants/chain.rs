use serde::Serialize;

use super::kernel::kernel_intersection_bounded;
use super::window::TruncationSpec;
use crate::derivation::Derivation;
use crate::error::InvariantsError;
use crate::grobner::{Membership, SubalgebraOracle, Witness};
use crate::poly::Poly;

/// One ring `A_i = ℚ[generators]` of a chain, with derivations that must
/// kill it and (for `i ≥ 1`) an element of `A_i ∖ A_{i-1}`.
#[derive(Debug, Clone, Serialize)]
pub struct ChainLevel {
    pub generators: Vec<Poly>,
    pub derivations: Vec<Derivation>,
    pub witness: Option<Poly>,
}

/// Verified chain `A_0 ⊂ A_1 ⊂ … ⊂ A_n`; `length = n` lower-bounds the height
/// of the poset of kernel intersections.
#[derive(Debug, Clone, Serialize)]
pub struct ChainCertificate {
    pub levels: Vec<ChainLevel>,
    /// Degree up to which each level was checked to contain the whole
    /// kernel intersection of its derivations in the ambient ring.
    pub window_degrees: Vec<u32>,
    /// `inclusions[i-1][k]` writes generator `k` of `A_{i-1}` in `A_i`.
    pub inclusions: Vec<Vec<Witness>>,
    /// `strictness[i-1]` writes `w_i` in the generators of `A_i`.
    pub strictness: Vec<Witness>,
    pub length: usize,
}

fn fail(index: usize, reason: String) -> InvariantsError {
    InvariantsError::Chain { index, reason }
}

pub fn chain_certificate(levels: &[ChainLevel]) -> Result<ChainCertificate, InvariantsError> {
    let Some(first) = levels.iter().flat_map(|l| l.generators.iter()).next().map(|p| p.vars().clone()).or_else(|| {
        levels.iter().flat_map(|l| l.derivations.iter()).next().map(|d| d.vars().clone())
    }) else {
        return Err(fail(0, "chain has no ambient ring".into()));
    };
    let vars = first;
    let mut oracles = Vec::with_capacity(levels.len());
    let mut window_degrees = Vec::with_capacity(levels.len());
    for (i, level) in levels.iter().enumerate() {
        for d in &level.derivations {
            for g in &level.generators {
                let img = d.apply(g)?;
                if !img.is_zero() {
                    return Err(fail(i, format!("generator `{g}` is not killed: image `{img}`")));
                }
            }
        }
        let oracle = SubalgebraOracle::new(&vars, &level.generators)?;
        // the level must contain the whole Δ-kernel of the ambient ring up to
        // its own degree, or it need not be a kernel intersection at all
        let degree = level.generators.iter().chain(&level.witness).filter_map(Poly::total_degree).max().unwrap_or(0).max(1);
        let window = kernel_intersection_bounded(&vars, &level.derivations, TruncationSpec::degree(degree))?;
        for k in &window.basis {
            if !oracle.test(k)?.is_member() {
                return Err(fail(i, format!("kernel element `{k}` (degree <= {degree}) is missing from level {i}")));
            }
        }
        window_degrees.push(degree);
        oracles.push(oracle);
    }
    let mut inclusions = Vec::new();
    let mut strictness = Vec::new();
    for i in 1..levels.len() {
        let mut inc = Vec::new();
        for g in &levels[i - 1].generators {
            match oracles[i].test(g)? {
                Membership::Member { witness } => inc.push(witness),
                Membership::NonMember { .. } => {
                    return Err(fail(i, format!("generator `{g}` of level {} is not in level {i}", i - 1)))
                }
            }
        }
        inclusions.push(inc);
        let w = levels[i].witness.as_ref().ok_or_else(|| fail(i, "missing strictness witness".into()))?;
        match oracles[i].test(w)? {
            Membership::Member { witness } => strictness.push(witness),
            Membership::NonMember { .. } => return Err(fail(i, format!("witness `{w}` is not in level {i}"))),
        }
        if oracles[i - 1].test(w)?.is_member() {
            return Err(fail(i, format!("witness `{w}` already lies in level {}", i - 1)));
        }
    }
    Ok(ChainCertificate { levels: levels.to_vec(), window_degrees, inclusions, strictness, length: levels.len().saturating_sub(1) })
}
