//! Error type shared across the audit library.

use thiserror::Error;

/// Everything that can go wrong while building or running an audit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cipher key size must be at least 1 bit (got {0})")]
    InvalidKeyBits(u32),

    #[error("character set size must be at least 1 (got {0})")]
    InvalidSetSize(u64),

    #[error("passphrase length must be at least 1 (got {0})")]
    InvalidLength(u32),

    #[error("attack rate must be at least 1 key per second")]
    InvalidAttackRate,

    #[error("lifetime budget must be greater than zero")]
    ZeroBudget,

    #[error("duration must be non-negative")]
    NegativeDuration,

    #[error("duration denominator must be nonzero")]
    ZeroDenominator,

    #[error("invalid decimal number \"{0}\"")]
    InvalidDecimal(String),

    #[error("unknown character set \"{0}\"")]
    UnknownCharset(String),

    #[error("unknown protocol \"{0}\"")]
    UnknownProtocol(String),

    #[error("protocol \"{0}\" carries no effective key size and cannot be assessed as a cipher")]
    NotACipherProtocol(String),

    #[error("protocol \"{protocol}\" does not use {bits}-bit keys (known sizes: {allowed})")]
    UnsupportedKeyBits {
        protocol: String,
        bits: u32,
        allowed: String,
    },

    #[error("character set \"{name}\" must have exactly {size} distinct members (got {members})")]
    BadMemberList {
        name: String,
        size: u64,
        members: usize,
    },

    #[error("character set \"{0}\" has no explicit member list; enumeration requires one")]
    NoMembers(String),

    #[error("keyspace {space} exceeds the enumeration cap {cap}; use the analytic path instead")]
    EnumerationCapExceeded { space: String, cap: u64 },

    #[error("target \"{target}\" is not a length-{length} sequence over character set \"{charset}\"")]
    MalformedTarget {
        target: String,
        charset: String,
        length: u32,
    },

    #[error("measured throughput must be positive")]
    ZeroThroughput,

    #[error("security stack needs at least one cipher or passphrase component")]
    NoAssessableComponent,

    #[error("duplicate component id \"{0}\"")]
    DuplicateComponentId(String),

    #[error("config line {line}: {problem}")]
    Config { line: usize, problem: String },

    #[error("config: {0}")]
    ConfigIncomplete(String),

    #[error("unknown output format \"{0}\" (expected text, markdown, csv or json)")]
    UnknownFormat(String),

    #[error("unknown table \"{0}\" (expected 1, 2 or 3)")]
    UnknownTable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Wraps a parse-stage error with the config line it came from.
    pub(crate) fn at_line(self, line: usize) -> Error {
        match self {
            Error::Config { .. } => self,
            other => Error::Config {
                line,
                problem: other.to_string(),
            },
        }
    }
}
