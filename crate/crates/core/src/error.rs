use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph would have {requested} vertices, above the cap of {cap}")]
    VertexCapExceeded { requested: u128, cap: usize },
    #[error("graph order overflows")]
    OrderOverflow,
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("not a permutation of the vertex set")]
    BadPermutation,
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("enumeration would visit {subsets} 4-subsets, above the cap of {cap}")]
    SubsetCapExceeded { subsets: u128, cap: u128 },
    #[error("counters disagree: enumeration = {enumeration}, diagonal = {diagonal}")]
    Disagreement { enumeration: u128, diagonal: u128 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{context}: {dividend} is not divisible by {divisor}")]
    InexactDivision {
        context: &'static str,
        dividend: String,
        divisor: String,
    },
    #[error("level {level} is above the formula cap of {cap}")]
    LevelAboveCap { level: u32, cap: u32 },
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error("invalid configuration: {0}")]
    Config(String),
}
