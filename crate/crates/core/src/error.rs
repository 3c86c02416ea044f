use thiserror::Error;

/// First axiom violation found while validating a multiplication table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomFailure {
    /// table[i][j] is not an element index.
    Closure { i: usize, j: usize, value: usize },
    /// Element 0 does not act as a two-sided identity on `i`.
    Identity { i: usize },
    /// Element `i` has no two-sided inverse.
    Inverse { i: usize },
    /// (i*j)*k != i*(j*k).
    Associativity { i: usize, j: usize, k: usize },
}

impl std::fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            AxiomFailure::Closure { i, j, value } => {
                write!(f, "closure: table[{i}][{j}] = {value} is out of range")
            }
            AxiomFailure::Identity { i } => {
                write!(f, "identity: element 0 is not an identity at {i}")
            }
            AxiomFailure::Inverse { i } => write!(f, "inverse: element {i} has no inverse"),
            AxiomFailure::Associativity { i, j, k } => {
                write!(f, "associativity fails at ({i}, {j}, {k})")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("group axiom violated: {0}")]
    Axiom(AxiomFailure),

    #[error("{what}: {actual} exceeds cap {limit}")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("enumeration budget exceeded: {actual} candidates > budget {limit}")]
    BudgetExceeded { actual: u128, limit: u64 },

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("hypotheses not satisfied: {0}")]
    HypothesisFailed(&'static str),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
