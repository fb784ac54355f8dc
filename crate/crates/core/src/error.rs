use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("illegal root system type {0}")]
    IllegalType(String),
    #[error("root system is not irreducible")]
    NotIrreducible,
    #[error("invalid root data: {0}")]
    InvalidRootData(String),
    #[error("affine function is constant")]
    ConstantFunction,
    #[error("({direction:?}, {level}) is not an affine root: {reason}")]
    NotAnAffineRoot {
        direction: Vec<i64>,
        level: i64,
        reason: &'static str,
    },
    #[error("not a reflection: {0}")]
    NotAReflection(String),
    #[error("elements lie in different components of the extended group")]
    DifferentComponents,
    #[error("ball enumeration exceeds the cap of {cap} elements")]
    BallTooLarge { cap: usize },
    #[error("parabolic subgroup generated by {0} is infinite")]
    NotFinite(String),
    #[error("parabolic subset {0} is not admissible")]
    NotAdmissible(String),
    #[error("element is not in the relative group: {0}")]
    NotInRelativeGroup(String),
    #[error("element is not in N(Σ, Σ'): {0}")]
    NotANormalizerElement(String),
    #[error("facet type is not contained in the requested boundary type")]
    TypeNotContained,
    #[error("facet type {0} is not a proper subset of the nodes")]
    ImproperType(String),
    #[error("facet types differ")]
    TypesDiffer,
    #[error("orbit reaches the enumeration boundary at radius {radius}")]
    BallTooSmall { radius: usize },
    #[error("subspace is not an intersection of root hyperplanes")]
    NotRelevant,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("polynomial division by a linear form is not exact: {0}")]
    DivisionNotExact(String),
    #[error("standard module action is not triangular: {0}")]
    TriangularityViolated(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("unknown node index {0}")]
    UnknownNode(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
