use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid Dyck path at step {position}: {reason}")]
    InvalidPath { position: usize, reason: String },
    #[error("invalid quadrant spec {input:?}: {reason}")]
    InvalidSpec { input: String, reason: String },
    #[error("position {position} out of range 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("{sigma} does not avoid {pattern}")]
    NotAvoiding { sigma: String, pattern: String },
    #[error("unsupported avoidance class {0} (expected 123 or 132)")]
    UnsupportedClass(String),
    #[error("ill-posed quadratic: {0}")]
    IllPosed(String),
    #[error("outside the regime of {theorem}: {reason}")]
    Regime { theorem: String, reason: String },
    #[error("no engine for {spec} over S_n({class}); {hint}")]
    NoEngine { class: String, spec: String, hint: String },
    #[error("unknown verification subject {0:?}")]
    UnknownSubject(String),
}
