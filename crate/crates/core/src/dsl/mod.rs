//! Input language: polynomial expressions and model files.

mod expr;
mod lexer;
mod model;
mod parser;
mod print;

pub use expr::{parse_poly, parse_rat};
pub use model::{ChainLevelSpec, Check, CheckFields, CheckKind, Expectation, Model, NamedDerivation};
pub use parser::{parse_base_valuation, parse_model};
pub(crate) use parser::as_int;
pub use print::{print_check, print_model};
