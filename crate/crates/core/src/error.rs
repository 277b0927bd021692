use std::fmt;

use thiserror::Error;

use crate::algebra::Axiom;

/// Errors raised by algebra construction and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MvError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed table: {0}")]
    Format(String),

    #[error("axiom `{axiom}` fails at {}", WitnessNames(.witness))]
    AxiomViolation { axiom: Axiom, witness: Vec<String> },

    #[error("partial sum undefined: {0}")]
    UndefinedPartialSum(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{what} of size {size} exceeds the limit {limit}")]
    ResourceLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    #[error("theorem check failed: {0}")]
    TheoremViolation(String),
}

pub type Result<T, E = MvError> = std::result::Result<T, E>;

struct WitnessNames<'a>(&'a [String]);

impl fmt::Display for WitnessNames<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = ["x", "y", "z"];
        for (i, name) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}={}", labels.get(i).copied().unwrap_or("w"), name)?;
        }
        Ok(())
    }
}
