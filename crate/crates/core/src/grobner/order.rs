use std::cmp::Ordering;

use serde::Serialize;

use crate::poly::monomial_grevlex;
use crate::poly::Monomial;

/// Monomial order used by Gröbner computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// The first `n` variables form a block that dominates the remaining
    /// ones; each block is compared by grevlex. Eliminates the first block.
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => a.grevlex_cmp(b),
            MonomialOrder::Lex => a.lex_cmp(b),
            MonomialOrder::Block(n) => monomial_grevlex(&a.0[..n], &b.0[..n])
                .then_with(|| monomial_grevlex(&a.0[n..], &b.0[n..])),
        }
    }
}
