use thiserror::Error;

/// Errors produced by validation, solvers and structure builders.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),

    #[error("group table has no two-sided identity")]
    NoIdentity,

    #[error("no inverse for element {0}")]
    NoInverse(usize),

    #[error("ragged or malformed multiplication table: {0}")]
    MalformedTable(String),

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("group order {order} exceeds bound {bound}")]
    OrderBound { order: usize, bound: usize },

    #[error("unsupported cochain degree {0} for this operation")]
    UnsupportedDegree(usize),

    #[error("cochain is not a cocycle (first failing tuple {0:?})")]
    NotCocycle(Vec<usize>),

    #[error("groupoid cochain is not a 2-cocycle (witness {0:?})")]
    NotGroupoidCocycle(Vec<usize>),

    #[error("malformed spec: {0}")]
    BadSpec(String),

    #[error("cochain entry {value} not reduced modulo {modulus}")]
    EntryOutOfRange { value: u32, modulus: u32 },

    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),

    #[error("arrows are not composable: ({0},{1}) then ({2},{3})")]
    NotComposable(usize, usize, usize, usize),

    #[error("unknown basis label {0}")]
    UnknownBasisLabel(String),

    #[error("modular embedding requires p = 1 mod {n}, got p = {p}")]
    BadPrime { p: u64, n: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("structural error: {0}")]
    Structural(String),
}

pub type Result<T> = std::result::Result<T, Error>;
