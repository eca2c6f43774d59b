use thiserror::Error;

/// Problems building an [`Instance`](crate::Instance) from raw color counts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("duplicate color name `{0}`")]
    DuplicateColor(String),
    #[error("invalid color name `{0}`")]
    InvalidName(String),
}

/// Raised by the solvers when their preconditions do not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("instance is in {found} mode, this solver needs {expected} mode")]
    WrongMode {
        expected: &'static str,
        found: &'static str,
    },
    #[error("discrepancy {discrepancy} > 0: items cannot form a single sequence")]
    InfeasibleSequence { discrepancy: i64 },
    #[error("greedy alternation got stuck with {remaining} items left")]
    Stuck { remaining: usize },
    #[error("contract violation: {0}")]
    ContractViolation(&'static str),
}

/// Instance or packing text that could not be read.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `capacity: <n>` line")]
    MissingCapacity,
    #[error("invalid capacity `{0}`")]
    InvalidCapacity(String),
    #[error("invalid count `{0}`")]
    InvalidCount(String),
    #[error("invalid color name `{0}`")]
    InvalidName(String),
    #[error("duplicate color `{0}`")]
    DuplicateColor(String),
    #[error("expected `<name> <count>`, found `{0}`")]
    Malformed(String),
    #[error("structured packing: {0}")]
    Structured(String),
}

impl ParseError {
    pub(crate) fn new(line: usize, kind: ParseErrorKind) -> Self {
        Self { line, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance has {items} items, above the oracle limit of {limit}")]
    LimitExceeded { items: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("cannot generate a balanced instance with {colors} colors and {items} items")]
    Unsatisfiable { colors: usize, items: usize },
    #[error("at least one color is required")]
    NoColors,
    #[error("unknown skew `{0}` (expected uniform, max-heavy or balanced)")]
    UnknownSkew(String),
}
