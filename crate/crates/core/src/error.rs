use thiserror::Error;

/// Errors raised by graph construction, polynomial evaluation and the census drivers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {0} is outside 1..={max}", max = crate::graph::MAX_ORDER)]
    InvalidOrder(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} is out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertex set {bits:#x} is not contained in 0..{order}")]
    SetOutOfRange { bits: u64, order: usize },
    #[error("operation requires two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("{op}: order {order} exceeds the cap of {cap}")]
    OrderCap { op: &'static str, order: usize, cap: usize },
    #[error("graph has degeneracy {degeneracy}, which exceeds k = {k}")]
    NotDegenerate { degeneracy: usize, k: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown polynomial `{0}`")]
    UnknownPolynomial(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("invalid probability `{0}`: expected a rational strictly between 0 and 1")]
    InvalidProbability(String),
    #[error("malformed graph6 `{input}`: {reason}")]
    Graph6 { input: String, reason: String },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for rejections caused by a computation-cost guard.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::OrderCap { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
