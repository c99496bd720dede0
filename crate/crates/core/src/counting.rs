//! Cover, partition and packing numbers of ordered `k`-tuples drawn from a
//! set family, evaluated pointwise over the family's upper closure.
//!
//! * cover `c(X)`: tuples of members inside `X` whose union is `X`
//! * partition `d(X)`: covering tuples that are also pairwise disjoint
//! * packing `p(X)`: pairwise disjoint tuples inside `X`
//!
//! Covers come from Moebius-inverting `(fζ)^k`. Partitions split the zeta
//! transform by rank, raise the rank polynomial to the `k`-th power
//! (truncated at degree `n`), Moebius-invert each rank and read off rank
//! `|X|`. Packings are the zeta transform of the partition table.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use crate::bitlattice::{BigCount, PopOrder, SetFamily, SparseTable, SubsetMask};
use crate::error::{Error, Result};
use crate::transforms::{
    final_row, lattice_rows, ranked_seed, sweep, trimmed_zeta_with, Direction, LevelTable,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TupleKind {
    Cover,
    Partition,
    Packing,
}

impl fmt::Display for TupleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TupleKind::Cover => "cover",
            TupleKind::Partition => "partition",
            TupleKind::Packing => "packing",
        })
    }
}

/// A table of tuple counts together with the masks the sweep processed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleCounts {
    pub kind: TupleKind,
    pub k: usize,
    /// Covers and partitions hold every visited mask, zeros included.
    /// Packings hold nonzero values only.
    pub table: SparseTable<BigCount>,
    pub visited: Vec<SubsetMask>,
}

impl TupleCounts {
    /// Count at `mask`, zero when absent.
    pub fn get(&self, mask: SubsetMask) -> BigCount {
        self.table.value(mask)
    }

    pub fn visited_count(&self) -> usize {
        self.visited.len()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (SubsetMask, &BigCount)> {
        self.table.iter().filter(|(_, v)| !v.is_zero())
    }
}

/// Decides whether the sweep may enqueue a superset. Callers must only use
/// predicates that, once they reject a mask, also reject its supersets;
/// otherwise counts at masks reachable around the rejected one are wrong.
pub struct FrontierFilter<'a> {
    predicate: Option<Box<dyn Fn(SubsetMask) -> bool + 'a>>,
}

impl<'a> FrontierFilter<'a> {
    pub fn accept_all() -> Self {
        Self { predicate: None }
    }

    pub fn new(predicate: impl Fn(SubsetMask) -> bool + 'a) -> Self {
        Self {
            predicate: Some(Box::new(predicate)),
        }
    }

    pub fn accepts(&self, mask: SubsetMask) -> bool {
        self.predicate.as_ref().is_none_or(|p| p(mask))
    }
}

impl Default for FrontierFilter<'_> {
    fn default() -> Self {
        Self::accept_all()
    }
}

impl fmt::Debug for FrontierFilter<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.predicate.is_some() {
            "FrontierFilter(custom)"
        } else {
            "FrontierFilter(accept_all)"
        })
    }
}

fn degenerate(family: &SetFamily, kind: TupleKind) -> TupleCounts {
    // the empty tuple is the only 0-tuple; its union is ∅
    let mut table = SparseTable::new(family.universe());
    table.insert(SubsetMask::EMPTY, BigCount::one()).expect("∅ fits");
    TupleCounts {
        kind,
        k: 0,
        table,
        visited: Vec::new(),
    }
}

fn to_count(mask: SubsetMask, v: &BigInt) -> Result<BigCount> {
    match v.sign() {
        Sign::Minus => Err(Error::NegativeCount(mask)),
        _ => Ok(v.magnitude().clone()),
    }
}

fn indicator(family: &SetFamily, x: SubsetMask) -> BigInt {
    if family.contains(x) {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

struct CoverState {
    zeta: Vec<BigInt>,
    moebius: Vec<BigInt>,
}

/// `c(X)` for every visited `X` in the upper closure of `family`.
///
/// `k = 0` yields the single entry `c(∅) = 1`.
pub fn cover_numbers(family: &SetFamily, k: usize, filter: &FrontierFilter) -> Result<TupleCounts> {
    cover_numbers_with(family, k, filter, PopOrder::Ascending)
}

pub fn cover_numbers_with(
    family: &SetFamily,
    k: usize,
    filter: &FrontierFilter,
    order: PopOrder,
) -> Result<TupleCounts> {
    if k == 0 {
        return Ok(degenerate(family, TupleKind::Cover));
    }
    let universe = family.universe();
    let n = universe.size();
    let exponent = u32::try_from(k).map_err(|_| Error::InvalidArgument(format!("k = {k} too large")))?;
    let mut table = SparseTable::new(universe);
    let mut failure = None;
    let step = |x: SubsetMask, lower: &LevelTable<CoverState>| {
        let zeta = lattice_rows(x, n, vec![indicator(family, x)], Direction::Zeta, lower, |s| &s.zeta);
        let powered = final_row(&zeta, n)[0].pow(exponent);
        let moebius = lattice_rows(x, n, vec![powered], Direction::Moebius, lower, |s| &s.moebius);
        match to_count(x, &final_row(&moebius, n)[0]) {
            Ok(c) => {
                table.insert(x, c).expect("visited masks fit the universe");
            }
            Err(e) => {
                failure.get_or_insert(e);
            }
        }
        CoverState { zeta, moebius }
    };
    let visited = sweep(universe, family.iter(), order, |y| filter.accepts(y), step);
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(TupleCounts {
        kind: TupleKind::Cover,
        k,
        table,
        visited,
    })
}

struct PartitionState {
    zeta: Vec<BigInt>,
    moebius: Vec<BigInt>,
}

/// `k`-th power of a rank polynomial, truncated at degree `len - 1`:
/// `q(i, s) = Σ_{t ≤ s} q(i-1, s-t) g(t)`.
fn truncated_power(base: &[BigInt], k: usize) -> Vec<BigInt> {
    let mut q = base.to_vec();
    for _ in 1..k {
        let mut next = vec![BigInt::zero(); base.len()];
        for (s, slot) in next.iter_mut().enumerate() {
            for t in 0..=s {
                if !base[t].is_zero() && !q[s - t].is_zero() {
                    *slot += &q[s - t] * &base[t];
                }
            }
        }
        q = next;
    }
    q
}

/// `d(X)` for every visited `X` in the upper closure of `family`.
pub fn partition_numbers(family: &SetFamily, k: usize, filter: &FrontierFilter) -> Result<TupleCounts> {
    partition_numbers_with(family, k, filter, PopOrder::Ascending)
}

pub fn partition_numbers_with(
    family: &SetFamily,
    k: usize,
    filter: &FrontierFilter,
    order: PopOrder,
) -> Result<TupleCounts> {
    if k == 0 {
        return Ok(degenerate(family, TupleKind::Partition));
    }
    let universe = family.universe();
    let n = universe.size();
    let mut table = SparseTable::new(universe);
    let mut failure = None;
    let step = |x: SubsetMask, lower: &LevelTable<PartitionState>| {
        let seed = ranked_seed(n, x, indicator(family, x));
        let zeta = lattice_rows(x, n, seed, Direction::Zeta, lower, |s| &s.zeta);
        let q = truncated_power(final_row(&zeta, n), k);
        let moebius = lattice_rows(x, n, q, Direction::Moebius, lower, |s| &s.moebius);
        match to_count(x, &final_row(&moebius, n)[x.rank()]) {
            Ok(d) => {
                table.insert(x, d).expect("visited masks fit the universe");
            }
            Err(e) => {
                failure.get_or_insert(e);
            }
        }
        PartitionState { zeta, moebius }
    };
    let visited = sweep(universe, family.iter(), order, |y| filter.accepts(y), step);
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(TupleCounts {
        kind: TupleKind::Partition,
        k,
        table,
        visited,
    })
}

/// `p(X)` as the zeta transform of the partition table.
pub fn packing_numbers(family: &SetFamily, k: usize) -> Result<TupleCounts> {
    packing_numbers_with(family, k, PopOrder::Ascending)
}

pub fn packing_numbers_with(family: &SetFamily, k: usize, order: PopOrder) -> Result<TupleCounts> {
    let d = partition_numbers_with(family, k, &FrontierFilter::accept_all(), order)?;
    let signed = SparseTable::from_entries(
        family.universe(),
        d.table.iter().map(|(m, v)| (m, BigInt::from(v.clone()))),
    )?;
    let p = trimmed_zeta_with(&signed, order);
    let mut table = SparseTable::new(family.universe());
    for (m, v) in p.table.iter() {
        table.insert(m, to_count(m, v)?)?;
    }
    Ok(TupleCounts {
        kind: TupleKind::Packing,
        k,
        table,
        visited: p.visited,
    })
}
