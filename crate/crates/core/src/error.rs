use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("paths are not composable")]
    NotComposable,
    #[error("path is not a cycle")]
    NotACycle,
    #[error("path is not a subpath of any rotation of the cycle")]
    NotASubpath,
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation {0} mixes paths with different endpoints")]
    MixedEndpoints(usize),
    #[error("{0} is not a prime below 2^32")]
    InvalidModulus(u64),
    #[error("denominator is not invertible in the field")]
    NotInvertible,
    #[error("Groebner completion did not certify below degree {0}")]
    BoundExceeded(usize),
    #[error("result is inconclusive for an uncertified Groebner basis")]
    Inconclusive,
    #[error("relation {0} has a component of length below 2")]
    NotAdmissible(usize),
    #[error("quotient is not finite dimensional below degree {0}")]
    NotFiniteDimensional(usize),
    #[error("vectors are not linearly independent")]
    NotIndependent,
    #[error("cut arrow `{0}` has no socle partner")]
    NoCorrespondence(String),
    #[error("search limit reached: {0}")]
    SearchBoundExceeded(&'static str),
}
