use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("wire {wire} out of range for a {wires}-wire circuit")]
    WireOutOfRange { wire: usize, wires: usize },

    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error("stage {stage} out of range: the circuit has {packs} packs")]
    StageOutOfRange { stage: usize, packs: usize },

    #[error("{what} needs {wires} wires, above the limit of {limit}")]
    TooLarge {
        what: &'static str,
        wires: usize,
        limit: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid coin table: {0}")]
    InvalidCoins(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(
        "ancillas not restored after step {step} (probability {leak:e} outside the walker space)"
    )]
    AncillaLeak { step: usize, leak: f64 },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by a request that is too big to run, as opposed
    /// to a malformed one.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}
