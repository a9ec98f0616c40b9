use crate::ident::EntityId;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("validation: {0}")]
    Validation(String),

    /// A block with erased positions was handed to an operation that
    /// requires fully resolved symbols.
    #[error("distortion: {erased} erased position(s) present")]
    Distorted { erased: usize },

    #[error("framing: block length {len} is not divisible by repetition factor {repeat}")]
    Framing { len: usize, repeat: usize },

    /// Whole-TDU delivery probability underflowed to zero.
    #[error("unreachable link: delivery probability is zero")]
    UnreachableLink,

    #[error("energy exhausted at {node}: need {needed_j} J, have {have_j} J")]
    EnergyExhausted {
        node: EntityId,
        needed_j: f64,
        have_j: f64,
    },

    #[error("buffer overflow at {node}: {occupied_bits} + {incoming_bits} bits exceeds capacity {capacity_bits}")]
    BufferOverflow {
        node: EntityId,
        occupied_bits: u64,
        incoming_bits: u64,
        capacity_bits: u64,
    },

    #[error("no route for flow {flow}")]
    NoRoute { flow: EntityId },

    /// Malformed or inconsistent protocol state (e.g. fragment count
    /// mismatch, undecodable control message).
    #[error("protocol: {0}")]
    Protocol(String),

    /// Scenario parse or semantic validation failure. The message names the
    /// offending key.
    #[error("scenario: {0}")]
    Scenario(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn scenario(msg: impl Into<String>) -> Self {
        Error::Scenario(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
