//! Exact counting of set covers, packings and partitions over the subset
//! lattice with trimmed zeta and Moebius transforms, plus Chromatic Number
//! and Domatic Number solvers built on them.
//!
//! The trimmed transforms visit only the upper closure of the input support,
//! one rank at a time, so the work done is proportional (up to a polynomial
//! factor) to the number of supersets of the family members rather than to
//! `2^n`.

pub mod bitlattice;
pub mod bounds;
pub mod counting;
pub mod error;
pub mod graphs;
pub mod oracle;
pub mod solvers;
pub mod transforms;

pub use bitlattice::{
    maximal_members, minimal_members, upper_closure, upper_closure_filtered, BigCount, PopOrder,
    RankFrontier, SetFamily, SparseTable, SubsetMask, Universe, MAX_UNIVERSE,
};
pub use counting::{
    cover_numbers, packing_numbers, partition_numbers, FrontierFilter, TupleCounts, TupleKind,
};
pub use error::{Error, Result};
pub use graphs::{Graph, NeighbourhoodCover};
pub use solvers::{ChromaticMethod, SolverReport};
pub use transforms::{trimmed_moebius, trimmed_ranked_zeta, trimmed_zeta, yates_transform, KernelSpec, Trimmed};
