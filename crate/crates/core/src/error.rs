use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The inputs violate a mathematical precondition.
    Domain,
    /// The request is well formed but exceeds a size budget.
    Resource,
    /// Output could not be produced from the given geometry.
    Render,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter `{0}` is not in the alphabet")]
    UnknownLetter(String),
    #[error("letter `{0}` appears twice in the alphabet")]
    DuplicateLetter(String),
    #[error(
        "morphism is not uniform: image of `{letter}` has length {found}, expected {expected}"
    )]
    NotUniform {
        letter: String,
        expected: usize,
        found: usize,
    },
    #[error("morphism is not prolongable on `{0}`: its image does not start with it")]
    NotProlongable(String),
    #[error("unknown built-in morphism `{0}`")]
    UnknownMorphism(String),
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u64),
    #[error("gcd({p}, {q}) = {gcd}, the block construction needs coprime parameters")]
    NotCoprime { p: u32, q: u32, gcd: u64 },
    #[error("block {chunk} matches neither the block word nor its letter swap")]
    BlockMismatch { chunk: usize },
    #[error("{0}")]
    Domain(String),
    #[error("size budget exceeded: {0}")]
    Resource(String),
    #[error("cannot render: {0}")]
    Render(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Resource(_) => ErrorKind::Resource,
            Error::Render(_) => ErrorKind::Render,
            _ => ErrorKind::Domain,
        }
    }
}
