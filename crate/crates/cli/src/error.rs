use thiserror::Error;

/// Process exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("{location}: {message}")]
    Schema { location: String, message: String },

    #[error("{location}: {}", one_based(source))]
    Invalid {
        location: String,
        #[source]
        source: nccech::Error,
    },

    #[error("{0}")]
    Usage(String),

    /// Raised while computing on validated input.
    #[error("{0}")]
    Compute(#[from] nccech::Error),
}

fn shift(t: &[usize]) -> Vec<usize> {
    t.iter().map(|i| i + 1).collect()
}

/// The library reports covering indices 0-based; problem files count from 1.
fn one_based(e: &nccech::Error) -> String {
    use nccech::Error::*;
    match e {
        MissingRing { tuple } => MissingRing {
            tuple: shift(tuple),
        }
        .to_string(),
        MissingRestriction { from, to } => MissingRestriction {
            from: shift(from),
            to: shift(to),
        }
        .to_string(),
        RestrictionMismatch { from, to } => RestrictionMismatch {
            from: shift(from),
            to: shift(to),
        }
        .to_string(),
        NonCommuting {
            from,
            to,
            via_first,
            via_second,
        } => NonCommuting {
            from: shift(from),
            to: shift(to),
            via_first: shift(via_first),
            via_second: shift(via_second),
        }
        .to_string(),
        Naturality { smaller, larger } => Naturality {
            smaller: shift(smaller),
            larger: shift(larger),
        }
        .to_string(),
        other => other.to_string(),
    }
}

impl CliError {
    pub fn schema(location: &str, message: String) -> Self {
        CliError::Schema {
            location: if location.is_empty() {
                ".".into()
            } else {
                location.into()
            },
            message,
        }
    }

    pub fn invalid(location: &str, source: nccech::Error) -> Self {
        CliError::Invalid {
            location: location.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid {
                source: nccech::Error::DimensionCap { .. },
                ..
            }
            | CliError::Compute(nccech::Error::DimensionCap { .. }) => EXIT_CAP,
            CliError::Compute(_) => EXIT_VIOLATION,
            _ => EXIT_INPUT,
        }
    }
}
