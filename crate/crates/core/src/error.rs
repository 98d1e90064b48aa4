use crate::setalg::Cardinal;
use crate::zdgraph::VertexRejection;

/// Crate-wide error type. Every precondition named by an operation maps to one
/// variant so callers (and the CLI exit-code contract) can branch on it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed set description: {0}")]
    MalformedSet(String),

    #[error("malformed model description: {0}")]
    MalformedModel(String),

    #[error("malformed function literal: {0}")]
    MalformedFunction(String),

    #[error("set is not contained in the ground set")]
    NotWithinGround,

    #[error("requested {requested} members but the set has {available}")]
    InsufficientMembers {
        available: Cardinal,
        requested: usize,
    },

    #[error("point {point} is not in the locality region")]
    OutsideLocality { point: u64 },

    #[error("point {point} is not a member of the given set")]
    PointNotInSet { point: u64 },

    #[error("the graph is empty: the locality region holds {locality_size} of the 2 points needed")]
    EmptyGraph { locality_size: Cardinal },

    #[error("support is not a vertex class: {0}")]
    NotAVertex(VertexRejection),

    #[error("operands belong to different space models")]
    ModelMismatch,

    #[error("operands belong to different graph flavors")]
    FlavorMismatch,

    #[error("equal supports form a single class; pass the same-class tag to compare two functions of one class")]
    SameSupportNeedsTag,

    #[error("same-class comparison requires equal supports")]
    SupportsDiffer,

    #[error("function is not a member of the model's ring: {0}")]
    NotInRing(String),

    #[error("function vanishes at point {point}")]
    ZeroAtPoint { point: u64 },

    #[error("operation is not supported on this model: {0}")]
    UnsupportedModel(String),

    #[error("blow-up needs {required} vertices but the cap is {cap}")]
    CapExceeded { required: u64, cap: u64 },

    #[error("malformed blow-up request: {0}")]
    MalformedBlowup(String),

    #[error("graph is inconsistent with the claimed regime: {0}")]
    RegimeMismatch(String),

    #[error("vertex map is not a graph isomorphism: {0}")]
    NotAnIsomorphism(String),

    #[error("chromatic mismatch: {left} vs {right}")]
    ChromaticMismatch { left: u64, right: u64 },

    #[error("atom classes do not correspond under the vertex map: {0}")]
    AtomClassMismatch(String),

    #[error("malformed vertex-map file: {0}")]
    MalformedPsi(String),
}
