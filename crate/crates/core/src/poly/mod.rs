//! Exact arithmetic foundation: rationals, sparse multivariate polynomials,
//! gcds and reduced rational functions.

mod gcd;
mod monomial;
#[allow(clippy::module_inception)]
mod poly;
mod ratfunc;
pub(crate) mod text;
mod vars;

pub use gcd::poly_gcd;
pub use monomial::{window_monomials, Monomial};
pub use poly::{poly_divides, ArithOp, Poly};
pub use ratfunc::{ratfunc_normalize, RatFunc};
pub use vars::{VarKind, VarTable};

pub(crate) use monomial::grevlex_slice as monomial_grevlex;
pub(crate) use vars::same_table;

/// Arbitrary-precision rational coefficient.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}
