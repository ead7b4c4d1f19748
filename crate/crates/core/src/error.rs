use thiserror::Error;

/// Every failure the library can report. `kind()` gives the stable
/// identifier used in CLI output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge: self-loop at vertex {0}")]
    InvalidEdge(usize),
    #[error("vertex index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("format error: {0}")]
    Format(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("inconsistent property descriptor `{0}`")]
    InvalidDescriptor(String),
    #[error("input graph is not a member of `{0}`")]
    InputNotInClass(String),
    #[error("property `{0}` does not support this reduction: {1}")]
    DescriptorUnsupported(String, String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("generation failed: {0}")]
    GenerationFailed(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidEdge(_) => "InvalidEdge",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::Format(_) => "FormatError",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::TooLarge(_) => "TooLarge",
            Error::InvalidDescriptor(_) => "InvalidDescriptor",
            Error::InputNotInClass(_) => "InputNotInClass",
            Error::DescriptorUnsupported(..) => "DescriptorUnsupported",
            Error::InvalidWitness(_) => "InvalidWitness",
            Error::UnknownProperty(_) => "UnknownProperty",
            Error::GenerationFailed(_) => "GenerationFailed",
            Error::Internal(_) => "InternalError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
