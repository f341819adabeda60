use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A braid letter was zero, or a word failed structural validation.
    #[error("malformed word: {0}")]
    MalformedWord(String),

    /// Text input that could not be parsed; reports the offending token and
    /// its byte position in the input.
    #[error("invalid token `{token}` at position {position}: {message}")]
    Parse {
        token: String,
        position: usize,
        message: String,
    },

    /// The strand bound passed to a braid operation is too small for the word.
    #[error("strand bound {given} too small: word needs at least {required} strands")]
    StrandBound { required: u32, given: u32 },

    /// A generator or star index outside the valid range.
    #[error("index {index} out of range: {message}")]
    IndexRange { index: i64, message: String },

    /// A cycle with repeated or missing entries.
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    /// A map that is not a finite-support bijection.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// Thoma parameter constraints violated.
    #[error("invalid Thoma parameters: {0}")]
    InvalidThoma(crate::thoma::ThomaViolation),

    /// Tensor slot outside the model.
    #[error("slot {slot} out of range: model has slots 0..{sites}")]
    Slot { slot: u32, sites: u32 },

    /// Requested model dimension exceeds the configured cap.
    #[error("model dimension {dim} exceeds cap {cap}")]
    CapExceeded { dim: u128, cap: usize },

    /// Operator dimensions do not match.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A requested feature that is deliberately not provided.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A precondition on plain arguments failed.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A moment oracle failed; carries the offending word.
    #[error("oracle `{oracle}` failed on word {word}: {source}")]
    Oracle {
        oracle: String,
        word: String,
        #[source]
        source: Box<Error>,
    },

    /// An oracle returned eval(w*) != conj(eval(w)) during pre-flight.
    #[error("oracle `{oracle}` violates adjoint coherence on word {word}")]
    AdjointCoherence { oracle: String, word: String },

    /// A stronger distributional symmetry passed while a weaker one failed;
    /// this indicates a bug in the oracle or the checker, never a finding.
    #[error("hierarchy inversion: {stronger} passed but {weaker} failed")]
    HierarchyInversion { stronger: String, weaker: String },

    /// A Gram matrix that is not Hermitian within tolerance.
    #[error("Gram matrix not Hermitian: defect {defect}")]
    NotHermitian { defect: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
