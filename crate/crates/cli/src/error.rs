use std::fmt;

/// Failure classes with stable exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input or configuration. Exit 1.
    Input(String),
    /// A work budget ran out. Exit 2.
    Budget(String),
    /// An algebraic result disagreed with its oracle. Exit 3.
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Budget(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Budget(_) => "budget",
            CliError::Mismatch(_) => "mismatch",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Budget(m) | CliError::Mismatch(m) => m,
        }
    }

    pub fn input(msg: impl fmt::Display) -> Self {
        CliError::Input(msg.to_string())
    }
}

/// Single line `error[kind]: message`, newlines folded.
impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = self.message().replace(['\n', '\r'], " ");
        write!(f, "error[{}]: {}", self.kind(), msg)
    }
}

impl std::error::Error for CliError {}

impl From<monocount_core::walks::WalkError> for CliError {
    fn from(e: monocount_core::walks::WalkError) -> Self {
        use monocount_core::walks::WalkError as W;
        match e {
            W::Mismatch { .. } | W::Unsound(_) => CliError::Mismatch(e.to_string()),
            W::OracleCap(_) => CliError::Budget(e.to_string()),
            W::Hilbert(monocount_core::hilbert::HilbertError::Budget(_)) => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<monocount_core::boards::BoardError> for CliError {
    fn from(e: monocount_core::boards::BoardError) -> Self {
        use monocount_core::boards::BoardError as B;
        match e {
            B::Budget { .. } | B::Hilbert(monocount_core::hilbert::HilbertError::Budget(_)) => {
                CliError::Budget(e.to_string())
            }
            B::Mismatch { .. } | B::Unsound(_) => CliError::Mismatch(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<monocount_core::hilbert::HilbertError> for CliError {
    fn from(e: monocount_core::hilbert::HilbertError) -> Self {
        match e {
            monocount_core::hilbert::HilbertError::Budget(_) => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}
