use thiserror::Error;

/// Broad classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The caller passed arguments that violate an operation's contract.
    Usage,
    /// The arguments are well-formed but outside the mathematical domain.
    Domain,
    /// A size cap or enumeration budget was exceeded.
    Capacity,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graphs must have between 1 and 64 vertices, got {0}")]
    InvalidOrder(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    EdgePresent(usize, usize),
    #[error("edge {0}-{1} not present")]
    EdgeMissing(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("canonical form supports at most {cap} vertices, got {n}")]
    CanonicalCap { n: usize, cap: usize },
    #[error("enumeration budget allows n <= {cap}, requested n = {n}")]
    Budget { n: usize, cap: usize },
    #[error("invalid parameters for {family}: {reason} (valid: {valid})")]
    Family {
        family: &'static str,
        reason: String,
        valid: &'static str,
    },
    #[error("square root of zero has no inverse")]
    ZeroRadicand,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown closed form `{0}`")]
    UnknownClosedForm(String),
    #[error("closed form `{name}` undefined at n = {n}, m = {m}: {reason}")]
    ClosedFormRange {
        name: String,
        n: usize,
        m: usize,
        reason: &'static str,
    },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::VertexOutOfRange { .. }
            | Error::InvalidOrder(_)
            | Error::SelfLoop(_)
            | Error::EdgePresent(..)
            | Error::EdgeMissing(..)
            | Error::Graph6(_)
            | Error::UnknownClosedForm(_)
            | Error::ClosedFormRange { .. }
            | Error::Family { .. }
            | Error::Precondition(_) => ErrorKind::Usage,
            Error::Disconnected | Error::ZeroRadicand => ErrorKind::Domain,
            Error::CanonicalCap { .. } | Error::Budget { .. } => ErrorKind::Capacity,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
