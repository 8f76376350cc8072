use thiserror::Error;

/// Every fallible operation in this crate returns one of these.
#[derive(Debug, Error)]
pub enum Error {
    #[error("node index {index} out of range for a graph on {n} nodes")]
    NodeOutOfRange { index: usize, n: usize },

    #[error("self-loop on node {node} is not allowed in a simple graph")]
    SelfLoop { node: usize },

    #[error("operation needs at least {min} nodes, got {n}")]
    TooFewNodes { n: usize, min: usize },

    #[error("{name} = {value} must lie in {range}")]
    ParamOutOfRange {
        name: &'static str,
        value: String,
        range: String,
    },

    #[error("spectra disagree on size: {left} vs {right} eigenvalues")]
    SizeMismatch { left: usize, right: usize },

    #[error("non-finite value at row {row}, column {col}")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("eigensolver did not converge within {sweeps} sweeps (residual {residual:.3e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("edge list line {line}: {message}")]
    EdgeListParse { line: usize, message: String },

    #[error("matrix line {line}: {message}")]
    MatrixParse { line: usize, message: String },

    #[error("matrix rows {row} and {col} break symmetry: {a} vs {b}")]
    Asymmetric { row: usize, col: usize, a: f64, b: f64 },

    #[error("matrix entry ({row},{col}) = {value} outside [0, 1]")]
    WeightOutOfRange { row: usize, col: usize, value: f64 },

    #[error("manifest line {line}: {message}")]
    ManifestParse { line: usize, message: String },

    #[error("{what} must not be empty")]
    Empty { what: &'static str },

    #[error("epoch {index}: {source}")]
    Epoch {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("sweep point {index} ({params}): {source}")]
    SweepPoint {
        index: usize,
        params: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True when the failure happened inside the numeric core (non-finite
    /// data reaching the eigensolver, or the solver not converging), as
    /// opposed to malformed input or bad parameters.
    pub fn is_numeric(&self) -> bool {
        match self {
            Error::NonFiniteEntry { .. } | Error::NoConvergence { .. } => true,
            Error::Epoch { source, .. } | Error::SweepPoint { source, .. } => source.is_numeric(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
