use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {context} (expected {expected}, found {found})")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },

    #[error("{op} index {index} out of range for a simplex of dimension {dim}")]
    IndexOutOfRange {
        op: &'static str,
        index: usize,
        dim: usize,
    },

    #[error("unknown cell `{0}`")]
    UnknownCell(String),

    #[error("invalid cell: {0}")]
    InvalidCell(String),

    #[error("presentation is infinite; enumeration needs a coordinate window")]
    WindowRequired,

    #[error("presentation is not finite")]
    NotFinite,

    #[error("group is not cocompact: translation lattice has rank {rank} in dimension {n}")]
    NotCocompact { rank: usize, n: usize },

    #[error("point is not in the simplex: {0}")]
    NotInSimplex(String),

    #[error("sample {index} lies outside the region")]
    SampleOutsideRegion { index: usize },

    #[error("region does not apply to this presentation: {0}")]
    UnsupportedRegion(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid group element: {0}")]
    InvalidElement(String),

    #[error("invalid ray: {0}")]
    InvalidRay(String),

    #[error("matrix is not orthogonal")]
    NotOrthogonal,

    #[error("column {column} has a negative entry; the map does not preserve the cone")]
    NotConePreserving { column: usize },

    #[error("column {column} is not a standard basis vector")]
    NotPermutation { column: usize },

    #[error("search bound exceeded: {0}")]
    SearchExhausted(String),

    #[error("{}", located(*line, message))]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),
}

fn located(line: usize, message: &str) -> String {
    if line == 0 {
        message.to_string()
    } else {
        format!("line {line}: {message}")
    }
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn dims(context: impl Into<String>, expected: usize, found: usize) -> Self {
        Error::DimensionMismatch {
            context: context.into(),
            expected,
            found,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
