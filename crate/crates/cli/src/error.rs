use std::fmt;
use std::process::ExitCode;

/// Failure classes, each with its own exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, config or input files: exit 2.
    Usage(String),
    /// The request is valid but too large to run: exit 3.
    Resource(String),
    /// A numerical check failed: exit 4.
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Verification(_) => 4,
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Resource(msg) => write!(f, "resource error: {msg}"),
            CliError::Verification(msg) => write!(f, "verification failed: {msg}"),
        }
    }
}

impl From<dtqw_core::Error> for CliError {
    fn from(e: dtqw_core::Error) -> Self {
        if e.is_resource() {
            CliError::Resource(e.to_string())
        } else if matches!(e, dtqw_core::Error::AncillaLeak { .. }) {
            CliError::Verification(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}
