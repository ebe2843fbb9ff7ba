pub mod catalog;
pub mod derivation;
pub mod dsl;
pub mod error;
pub mod grobner;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod run;
pub mod valuation;
