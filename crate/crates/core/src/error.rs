//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational literal `{0}`")]
    InvalidRational(String),
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
    #[error("binomial requires n >= 0, got n = {0}")]
    NegativeBinomial(String),
    #[error("polynomial parse error at byte {pos}: {msg}")]
    PolyParse { pos: usize, msg: String },
    #[error("polynomial division by zero")]
    DivisionByZeroPoly,
    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),
    #[error("unknown preset `{0}` (expected fibonacci, lucas, pell, chebyshev-u)")]
    UnknownPreset(String),
    #[error("matrix dimension must be at least 1")]
    ZeroDimension,
    #[error("series expansion needs a nonzero constant term in the denominator")]
    ZeroConstantTerm,
    #[error("series expansion needs an integer constant term in the denominator, found `{0}`")]
    SymbolicConstantTerm(String),
    #[error("pole: denominator vanishes at x = {0}")]
    Pole(String),
    #[error("expression still contains the symbols {0}")]
    SymbolicResidue(String),
    #[error("invalid JSON for {kind}: {msg}")]
    InvalidJson { kind: &'static str, msg: String },
}
