use serde::Serialize;

use super::kernel::joint_kernel_vectors;
use super::window::{canonical_basis, combinations, TruncationSpec};
use crate::derivation::Derivation;
use crate::error::PolyError;
use crate::grobner::{buchberger, MonomialOrder};
use crate::poly::{window_monomials, Monomial, Poly, Rat};

/// Window onto `pl(D) = D(B) ∩ ker D` for `B` the ambient ring: the
/// elements of `D(B_{≤d})` that `D` kills.
#[derive(Debug, Clone, Serialize)]
pub struct PlinthBasis {
    pub derivation: Derivation,
    pub spec: TruncationSpec,
    pub basis: Vec<Poly>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Tightness {
    TightWithinWindow,
    /// `D(monomial)` is outside the ideal generated by the plinth window.
    Violation { monomial: Poly, image: Poly },
}

fn window_images(d: &Derivation, spec: TruncationSpec) -> Result<Vec<(Monomial, Poly)>, PolyError> {
    let vars = d.vars();
    window_monomials(vars.len(), spec.ambient_degree)
        .into_iter()
        .map(|m| {
            let img = d.apply(&Poly::term(vars, m.clone(), Rat::from_integer(1.into())))?;
            Ok((m, img))
        })
        .collect()
}

pub fn plinth_bounded(d: &Derivation, spec: TruncationSpec) -> Result<PlinthBasis, PolyError> {
    let images: Vec<Poly> =
        window_images(d, spec)?.into_iter().map(|(_, p)| p).filter(|p| !p.is_zero()).collect();
    let vectors = joint_kernel_vectors(&images, std::slice::from_ref(d))?;
    let elements = combinations(d.vars(), &images, &vectors);
    Ok(PlinthBasis { derivation: d.clone(), spec, basis: canonical_basis(d.vars(), &elements) })
}

/// Checks `D(m) ∈ ⟨plinth window⟩` for every window monomial `m`.
pub fn tightness_check(d: &Derivation, spec: TruncationSpec) -> Result<Tightness, PolyError> {
    let plinth = plinth_bounded(d, spec)?;
    let gb = buchberger(d.vars(), &plinth.basis, MonomialOrder::Grevlex)?;
    for (m, img) in window_images(d, spec)? {
        if !gb.contains(&img)? {
            return Ok(Tightness::Violation {
                monomial: Poly::term(d.vars(), m, Rat::from_integer(1.into())),
                image: img,
            });
        }
    }
    Ok(Tightness::TightWithinWindow)
}
