//! Degree- and word-length-truncated computations of kernels, kernel
//! intersections, Makar-Limanov windows, plinth ideals, rank witnesses and
//! chain certificates.

mod chain;
mod kernel;
mod ml;
mod plinth;
mod rank;
mod window;

pub use chain::{chain_certificate, ChainCertificate, ChainLevel};
pub use kernel::{kernel_basis_bounded, kernel_intersection_bounded, KernelBasis};
pub use ml::{ml_certificate, MlCertificate, MlOutcome};
pub use plinth::{plinth_bounded, tightness_check, PlinthBasis, Tightness};
pub use rank::{find_rank_witness, find_rank_witness_in, rank_witness, RankWitness};
pub use window::{canonical_basis, subalgebra_window, SubalgebraWindow, TruncationSpec};
