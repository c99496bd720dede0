use thiserror::Error;

use crate::bitlattice::SubsetMask;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe of {n} elements exceeds the cap of {cap}")]
    UniverseTooLarge { n: usize, cap: usize },

    #[error("mask {mask} does not fit a universe of {n} elements")]
    MaskOutOfUniverse { mask: SubsetMask, n: usize },

    #[error("duplicate family member {0}")]
    DuplicateMember(SubsetMask),

    #[error("universe mismatch: expected {expected} elements, found {found}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("cannot push rank-{rank} mask {mask} while the frontier is at rank {current}")]
    FrontierRankViolation {
        mask: SubsetMask,
        rank: usize,
        current: usize,
    },

    #[error("dense table length {0} is not a power of two")]
    DenseLength(usize),

    #[error("dense transforms are limited to {cap} elements, got {n}")]
    DenseTooLarge { n: usize, cap: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("cannot pad neighbourhoods: {n} vertices but maximum degree {max_degree}")]
    PaddingImpossible { n: usize, max_degree: usize },

    #[error("{what} is limited to n <= {limit}, got n = {n}")]
    InstanceTooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("element {element} is covered {found} times, below the required {delta}")]
    CoverageBelowDelta {
        element: usize,
        found: usize,
        delta: usize,
    },

    #[error("brute-force budget exceeded: {needed} tuples > {budget}")]
    OracleBudget { needed: u128, budget: u128 },

    #[error("negative count at {0}; the frontier filter is not closed under taking supersets")]
    NegativeCount(SubsetMask),
}
