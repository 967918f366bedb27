//! Desk-scale laboratory for the Y-00 quantum-noise stream cipher.
//!
//! The crate models an M-ary coherent-state stream cipher end to end: the
//! keyed transmitter/receiver pipeline ([`protocol`]), the quantum-detection
//! bounds that limit an eavesdropper ([`coherent`], [`detection`]), Monte
//! Carlo simulations of the standard attacks on the scheme ([`attacks`]),
//! Holevo-quantity key-rate estimates ([`keyrate`]), and a scenario-driven
//! CLI front end that emits deterministic CSV data ([`cli`]).
//!
//! All spectral quantities are computed in the span of the constellation
//! states, so mean photon numbers of 10^3..10^5 never require a Fock-space
//! cutoff. All randomness flows through explicitly seeded generators; a
//! fixed seed reproduces every simulation bit for bit, with or without the
//! `parallel` feature.

pub mod attacks;
pub mod cli;
pub mod coherent;
pub mod detection;
pub mod exec;
pub mod keyrate;
pub mod protocol;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A numerical routine (eigensolver, DFT spectrum) broke down.
    #[error("eigensolver failure: {0}")]
    Eigensolver(String),
    /// An argument violated a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An exhaustive search was requested above the supported key length.
    #[error("search refused: {0}")]
    SearchRefused(String),
    /// A scenario config file failed to parse or validate.
    #[error("config error (line {line}): {msg}")]
    Config { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn config(line: usize, msg: impl Into<String>) -> Self {
        Error::Config {
            line,
            msg: msg.into(),
        }
    }
}
