//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by library operations and file parsers.
#[derive(Debug, Error)]
pub enum Error {
    /// Two permutations (or a permutation pair) act on different edge counts.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// Permutations and dessins act on at least one edge.
    #[error("degree must be at least 1")]
    EmptyDomain,

    /// An image list that is not a bijection of {{0, ..., n-1}}.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// Vectors passed to linear algebra do not share a common length.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// Root finding and factorization are undefined for the zero polynomial.
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    /// Polynomial division by the zero polynomial.
    #[error("polynomial division by zero")]
    DivisionByZero,

    /// Branch permutations must compose to the identity.
    #[error("branch permutations do not compose to the identity")]
    ProductNotIdentity,

    /// The dessin is not irreducible where irreducibility is required.
    #[error("dessin is not irreducible: {0}")]
    NotIrreducible(String),

    /// A configured cap was exceeded; raising the cap may let the
    /// computation finish.
    #[error("{what} cap exceeded (cap {cap})")]
    CapExceeded { what: &'static str, cap: usize },

    /// An orbit table was asked about a dessin it does not cover.
    #[error("dessin not covered by the orbit table: {dessin}")]
    Uncovered { dessin: String },

    /// Orbit-table blocks must contain at least one dessin.
    #[error("orbit {name} has no members")]
    EmptyOrbit { name: String },

    /// Edge count outside the supported range.
    #[error("edge count {n} out of range (1..={max})")]
    EdgeCountOutOfRange { n: usize, max: usize },

    /// Malformed text input; `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A catalog header count disagrees with the number of body lines.
    #[error("catalog header count {header} does not match body count {body}")]
    CountMismatch { header: usize, body: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Rewrap a single-line parse error with the line number of the
    /// surrounding file.
    pub(crate) fn at_line(self, line: usize) -> Error {
        match self {
            Error::Parse { message, .. } => Error::Parse { line, message },
            other => Error::Parse {
                line,
                message: other.to_string(),
            },
        }
    }
}
