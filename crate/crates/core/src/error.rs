use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: a permutation needs at least one element")]
    EmptyInput,
    #[error("malformed token {token:?}: {reason}")]
    Parse { token: String, reason: String },
    #[error("not a bijection on 1..={n}: {detail}")]
    NotABijection { n: usize, detail: String },
    #[error("order {n} exceeds the maximum graph order {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("vertex list is not strictly increasing: {0:?}")]
    NotSorted(Vec<usize>),
    #[error("the given set does not dominate the graph")]
    NotDominating,
    #[error("missing table entry c({n}, {k})")]
    MissingTableEntry { n: usize, k: usize },
    #[error("order {n} is too small; at least {min} is required")]
    OrderTooSmall { n: usize, min: usize },
    #[error("order {0} is odd; an even order is required")]
    OddOrder(usize),
    #[error("the permutation graph is disconnected")]
    DisconnectedInput,
    #[error("no connected permutation graph on {n} vertices has domination number {k}")]
    InfeasibleGamma { n: usize, k: usize },
    #[error("enumeration of S_{n} exceeds the cap {cap}")]
    OrderCapExceeded { n: usize, cap: usize },
    #[error("no closed form is known for offset {0}")]
    UnsupportedOffset(usize),
    #[error("polynomial family for offset {0} is missing")]
    MissingLowerOffset(usize),
    #[error("the difference polynomial R(k) vanishes for offset {0}")]
    DegenerateR(usize),
    #[error("construction check failed: {0}")]
    ConstructionFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
