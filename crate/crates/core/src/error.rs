use thiserror::Error;

use crate::lattice::LatticeViolation;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two relations (or a relation and a system) disagree on the carrier size.
    #[error("dimension mismatch: expected {expected} states, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("state index {index} out of range (system has {n_states} states)")]
    StateOutOfRange { index: usize, n_states: usize },

    #[error("label index {index} out of range ({n_labels} labels)")]
    LabelOutOfRange { index: usize, n_labels: usize },

    #[error("duplicate state name {0:?}")]
    DuplicateStateName(String),

    #[error("empty label text")]
    EmptyLabel,

    #[error("invalid lattice: {}", format_violations(.0))]
    InvalidLattice(Vec<LatticeViolation>),

    #[error("relation is not a progression: {0}")]
    NotAProgression(String),

    /// A brute-force routine was asked to enumerate beyond its hard cap.
    #[error("{what} too large for enumeration: {size} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    /// Input text could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("cannot resolve {0:?}")]
    Unresolved(String),
}

fn format_violations(v: &[LatticeViolation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
