//! Buchberger-based ideal engine over ℚ and subalgebra membership.

mod basis;
mod membership;
mod order;

pub use basis::{buchberger, GroebnerBasis};
pub use membership::{subalgebra_membership, Membership, SubalgebraOracle, Witness};
pub use order::MonomialOrder;

use crate::error::PolyError;
use crate::poly::Poly;

/// Remainder of `f` modulo the basis; zero iff `f` lies in the ideal.
pub fn normal_form(f: &Poly, gb: &GroebnerBasis) -> Result<Poly, PolyError> {
    gb.normal_form(f)
}
