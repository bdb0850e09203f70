use thiserror::Error;

/// Errors reported by the library.
///
/// `Invariant` signals that a structural fact the algorithms rely on was
/// contradicted at runtime; it indicates a bug (or a disproof) rather than
/// bad input, and the CLI maps it to its own exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),

    #[error("indecomposable length must be at least 1")]
    ZeroLength,

    #[error("{0} is not a summand of the given object")]
    NotASummand(String),

    #[error("expected exactly one summand of length {expected}, found {found}")]
    BadApex { expected: usize, found: usize },

    #[error("object is not rigid: {0}")]
    NotRigid(String),

    #[error("object has {found} summands, a maximal rigid object of rank {rank} needs {expected}")]
    WrongSummandCount {
        rank: usize,
        expected: usize,
        found: usize,
    },

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("no vertex labelled `{0}`")]
    UnknownVertex(String),

    #[error("vertex {0} carries a loop or 2-cycle, mutation is undefined there")]
    MutationUndefined(String),

    #[error("quiver violates membership axioms: {}", .0.join("; "))]
    NotInFamily(Vec<String>),

    #[error("inconsistent normal-form parameters: {0}")]
    BadNormalForm(String),

    #[error("path counting exceeded the cap, the algebra is not finite-dimensional")]
    PathCapExceeded,

    #[error("length {length} outside the admissible range {lo}..={hi}")]
    LengthOutOfRange { length: usize, lo: usize, hi: usize },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("invalid serialized data: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
