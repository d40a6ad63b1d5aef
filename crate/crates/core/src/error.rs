use thiserror::Error;

/// Everything that can go wrong while building or querying structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order relation has a cycle through `{0}` and `{1}`")]
    Cycle(String, String),

    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(String, String, String),

    #[error("involution is not a total bijection: {0}")]
    NotAFunction(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("duplicate element name `{0}`")]
    DuplicateName(String),

    #[error("the poset carries no involution")]
    MissingInvolution,

    #[error("the poset has no {0}")]
    MissingBounds(&'static str),

    #[error("the involution is not a complementation (witness `{0}`)")]
    NotComplemented(String),

    #[error("not a lattice: `{0}` and `{1}` have no {2}")]
    NotALattice(String, String, &'static str),

    #[error("closed-set count exceeds the configured cap of {0}")]
    SizeLimitExceeded(usize),

    #[error("relative pseudocomplement of `{0}` with respect to `{1}` does not exist")]
    NoRelativePseudocomplement(String, String),

    #[error("horizontal-sum part {0} is not bounded or has fewer than two elements")]
    UnboundedPart(usize),

    #[error("horizontal-sum parts must all carry an involution or none may")]
    MixedInvolution,

    #[error("subset is not closed under the involution (`{0}` is in, `{1}` is not)")]
    NotComplementClosed(String, String),

    #[error("invalid Greechie diagram: {0}")]
    InvalidDiagram(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
