use alloc::string::String;

/// Everything that can go wrong in the core crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ground sets differ: {left} vs {right}")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("label {label} is outside [1, {n}]")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("not a permutation of [1, {n}]: {reason}")]
    NotAPermutation { n: usize, reason: String },

    #[error("a transposition needs two distinct labels, got {0} twice")]
    DegenerateTransposition(usize),

    #[error("ground set size {0} is not supported")]
    InvalidSize(usize),

    #[error("n = {n} exceeds the resource cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("word is not a factorization of the long cycle: {0}")]
    NotInFn(String),

    #[error("structural violation at position {position}: |A_j| = {size}")]
    PhiViolation { position: usize, size: usize },

    #[error("chain element {position} is not a non-crossing partition")]
    NotNcElement { position: usize },

    #[error("move index {index} out of range (word has {len} letters)")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("letter {position} does not move label {label}")]
    LetterFixesLabel { position: usize, label: usize },

    #[error("word is already the star centered at {0}")]
    AlreadyStar(usize),

    #[error("not a non-crossing geometric tree: {0}")]
    NotATree(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),

    #[error("vertex {0} is not part of the graph")]
    UnknownVertex(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("path steps {step} and {next} are not adjacent")]
    NotAdjacent { step: usize, next: usize },

    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),

    #[error("parse error in item {item}: {reason}")]
    Parse { item: usize, reason: String },
}

pub type Result<T> = core::result::Result<T, Error>;
