use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("empty pencil (n = 0)")]
    Empty,
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("row index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("I/O error: {0}")]
    Io(String),
    #[error("invalid document: {0}")]
    Document(String),

    #[error("pencil appears singular: det(A - zB) vanishes at every sample point")]
    SingularPencil,
    #[error("B is too ill-conditioned for the QR oracle (condition estimate {estimate:e})")]
    IllConditionedB { estimate: f64 },
    #[error("QR iteration did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("pencil dimension {n} exceeds the limit {limit} of this oracle")]
    TooLarge { n: usize, limit: usize },
    #[error("analytic spectrum undefined: 4 + 2b cos(k pi/(n+1)) vanishes for k = {k}")]
    InfiniteAnalyticEigenvalue { k: usize },

    #[error("cluster {cluster} expected {expected} eigenvalues but found {found}")]
    CountMismatch { cluster: usize, expected: usize, found: usize },

    #[error("diagonal of B-hat deviates from 1 at row {row} (value {value})")]
    NotNormalized { row: usize, value: String },
    #[error("row {row} of F has absolute row sum {sum} >= 1")]
    DominanceViolated { row: usize, sum: f64 },
    #[error("computed eigenvalue {index} is not simple (gap is zero)")]
    NotSimple { index: usize },
    #[error("disk {index} is not certified disjoint from the others")]
    Uncertified { index: usize },
    #[error("indices do not form an isolated cluster: {0}")]
    NotACluster(String),
}

impl Error {
    /// True for failures of a numerical algorithm, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::SingularPencil
                | Error::IllConditionedB { .. }
                | Error::NoConvergence { .. }
                | Error::InfiniteAnalyticEigenvalue { .. }
                | Error::CountMismatch { .. }
                | Error::NotSimple { .. }
                | Error::Uncertified { .. }
                | Error::NotACluster(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
