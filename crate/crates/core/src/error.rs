use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operands live over different variable tables")]
    VarTableMismatch,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("algebra generators must be nonzero (generator {0})")]
    ZeroGenerator(usize),
    #[error("derivation does not map the algebra into itself: image of generator `{generator}` is `{image}`")]
    Unstable { generator: String, image: String },
    #[error("no nilpotency index found within {bound} iterations (variable or generator `{element}`)")]
    BoundExceeded { element: String, bound: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantsError {
    #[error(transparent)]
    Derivation(#[from] DerivationError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("expected {expected} elements, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("local nilpotency of `{derivation}` is inconclusive within bound {bound}")]
    Inconclusive { derivation: String, bound: usize },
    #[error("chain verification failed at index {index}: {reason}")]
    Chain { index: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValuationError {
    #[error("zero has no value")]
    Zero,
    #[error("element involves main variable `{0}`")]
    InvolvesMain(String),
    #[error("invalid valuation descriptor: {0}")]
    InvalidDescriptor(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("counterexample family needs m >= 1, got {0}")]
    InvalidParameter(i64),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("bad argument for catalog entry: {0}")]
    BadArgument(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("{line}:{col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
}

impl DslError {
    pub fn at(line: usize, col: usize, message: impl Into<String>) -> Self {
        DslError::Syntax { line, col, message: message.into() }
    }
}

/// Error surfaced by the check runner, tagged with the failing check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error("check `{check}`: {message}")]
    Check { check: String, message: String },
    #[error("unknown {what} `{name}`")]
    Unknown { what: &'static str, name: String },
    #[error("model declares no variables")]
    NoVariables,
    #[error("invalid input: {0}")]
    Input(String),
}
