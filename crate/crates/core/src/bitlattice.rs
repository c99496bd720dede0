//! Subset-lattice primitives: masks, set families, sparse tables and the
//! rank-bucketed frontier that drives every bottom-up sweep in this crate.
//!
//! Elements of an `n`-element universe are the bit positions `0..n`. When a
//! mask is displayed, elements are shown 1-based, so bit 0 prints as `1`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};

/// Largest supported universe; masks are single `u32` words.
pub const MAX_UNIVERSE: usize = 32;

/// Unbounded nonnegative tuple count.
pub type BigCount = BigUint;

/// The ground set `{0, .., n-1}` that masks, families and tables live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Universe {
    size: usize,
}

impl Universe {
    pub fn new(size: usize) -> Result<Self> {
        if size > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge {
                n: size,
                cap: MAX_UNIVERSE,
            });
        }
        Ok(Self { size })
    }

    pub fn size(self) -> usize {
        self.size
    }

    pub fn full(self) -> SubsetMask {
        if self.size == 32 {
            SubsetMask(u32::MAX)
        } else {
            SubsetMask((1u32 << self.size) - 1)
        }
    }

    pub fn contains(self, mask: SubsetMask) -> bool {
        mask.0 & !self.full().0 == 0
    }

    pub fn check(self, mask: SubsetMask) -> Result<()> {
        if self.contains(mask) {
            Ok(())
        } else {
            Err(Error::MaskOutOfUniverse { mask, n: self.size })
        }
    }

    /// Number of lattice points, `2^n`.
    pub fn lattice_size(self) -> u64 {
        1u64 << self.size
    }

    /// Every mask of the universe in ascending numeric order.
    pub fn masks(self) -> impl Iterator<Item = SubsetMask> {
        (0..self.lattice_size()).map(|b| SubsetMask(b as u32))
    }

    pub fn complement(self, mask: SubsetMask) -> SubsetMask {
        SubsetMask(!mask.0 & self.full().0)
    }
}

/// A subset of the universe as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    /// Builds a mask from 0-based element indices.
    ///
    /// # Panics
    /// If an index is 32 or larger.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut bits = 0u32;
        for e in elements {
            assert!(e < MAX_UNIVERSE, "element {e} outside any universe");
            bits |= 1 << e;
        }
        SubsetMask(bits)
    }

    pub fn singleton(element: usize) -> Self {
        Self::from_elements([element])
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn rank(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, element: usize) -> bool {
        element < MAX_UNIVERSE && self.0 & (1 << element) != 0
    }

    pub const fn with(self, element: usize) -> Self {
        SubsetMask(self.0 | (1 << element))
    }

    pub const fn without(self, element: usize) -> Self {
        SubsetMask(self.0 & !(1 << element))
    }

    pub const fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub const fn intersection(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub const fn difference(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    pub const fn is_disjoint(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    /// 0-based elements in ascending order.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// A duplicate-free family of subsets over a shared universe, kept in
/// ascending mask order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    universe: Universe,
    members: Vec<SubsetMask>,
}

impl SetFamily {
    pub fn empty(universe: Universe) -> Self {
        Self {
            universe,
            members: Vec::new(),
        }
    }

    /// Strict constructor: rejects duplicates and masks outside the universe.
    pub fn new<I: IntoIterator<Item = SubsetMask>>(universe: Universe, members: I) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for m in members {
            universe.check(m)?;
            if !seen.insert(m) {
                return Err(Error::DuplicateMember(m));
            }
        }
        Ok(Self {
            universe,
            members: seen.into_iter().collect(),
        })
    }

    /// Like [`SetFamily::new`] but silently coalesces duplicates.
    pub fn collect<I: IntoIterator<Item = SubsetMask>>(universe: Universe, members: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for m in members {
            universe.check(m)?;
            set.insert(m);
        }
        Ok(Self {
            universe,
            members: set.into_iter().collect(),
        })
    }

    /// Every subset of the universe accepted by `pred`.
    pub fn from_predicate(universe: Universe, mut pred: impl FnMut(SubsetMask) -> bool) -> Self {
        Self {
            universe,
            members: universe.masks().filter(|&m| pred(m)).collect(),
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mask: SubsetMask) -> bool {
        self.members.binary_search(&mask).is_ok()
    }
}

/// Within-rank pop order of a [`RankFrontier`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PopOrder {
    #[default]
    Ascending,
    Descending,
    Shuffled(u64),
}

/// The buckets `L(0), .., L(n)` of a bottom-up sweep.
///
/// Buckets deduplicate, and a mask that has been pushed once is never queued
/// again, so every mask is processed at most once.
#[derive(Debug)]
pub struct RankFrontier {
    levels: Vec<BTreeSet<SubsetMask>>,
    current: usize,
    seen: HashSet<SubsetMask>,
    order: PopOrder,
    rng: Option<StdRng>,
}

impl RankFrontier {
    pub fn new(universe: Universe) -> Self {
        Self::with_order(universe, PopOrder::Ascending)
    }

    pub fn with_order(universe: Universe, order: PopOrder) -> Self {
        let rng = match order {
            PopOrder::Shuffled(seed) => Some(StdRng::seed_from_u64(seed)),
            _ => None,
        };
        Self {
            levels: vec![BTreeSet::new(); universe.size() + 1],
            current: 0,
            seen: HashSet::new(),
            order,
            rng,
        }
    }

    pub fn current_rank(&self) -> usize {
        self.current
    }

    /// Queues `mask`; returns `false` if it was queued before.
    pub fn push(&mut self, mask: SubsetMask) -> Result<bool> {
        let rank = mask.rank();
        if rank < self.current || rank >= self.levels.len() {
            return Err(Error::FrontierRankViolation {
                mask,
                rank,
                current: self.current,
            });
        }
        if !self.seen.insert(mask) {
            return Ok(false);
        }
        self.levels[rank].insert(mask);
        Ok(true)
    }

    /// Removes a mask of the lowest nonempty rank, or `None` once exhausted.
    pub fn pop(&mut self) -> Option<SubsetMask> {
        while self.current < self.levels.len() {
            let bucket = &mut self.levels[self.current];
            let picked = match self.order {
                PopOrder::Ascending => bucket.pop_first(),
                PopOrder::Descending => bucket.pop_last(),
                PopOrder::Shuffled(_) if bucket.is_empty() => None,
                PopOrder::Shuffled(_) => {
                    let rng = self.rng.as_mut().expect("shuffled frontier owns an rng");
                    let idx = rng.gen_range(0..bucket.len());
                    let m = *bucket.iter().nth(idx).expect("index within bucket");
                    bucket.remove(&m);
                    Some(m)
                }
            };
            if picked.is_some() {
                return picked;
            }
            self.current += 1;
        }
        None
    }
}

/// A function on part of the lattice. Absent keys read as zero; keys may map
/// to zero explicitly, but the support only counts nonzero values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseTable<V> {
    universe: Universe,
    entries: BTreeMap<SubsetMask, V>,
}

impl<V> SparseTable<V> {
    pub fn new(universe: Universe) -> Self {
        Self {
            universe,
            entries: BTreeMap::new(),
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn insert(&mut self, mask: SubsetMask, value: V) -> Result<Option<V>> {
        self.universe.check(mask)?;
        Ok(self.entries.insert(mask, value))
    }

    pub fn get(&self, mask: SubsetMask) -> Option<&V> {
        self.entries.get(&mask)
    }

    pub fn contains_key(&self, mask: SubsetMask) -> bool {
        self.entries.contains_key(&mask)
    }

    /// Entries in ascending mask order.
    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, &V)> {
        self.entries.iter().map(|(m, v)| (*m, v))
    }

    pub fn keys(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.entries.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl<V: Zero + Clone> SparseTable<V> {
    pub fn from_entries<I: IntoIterator<Item = (SubsetMask, V)>>(universe: Universe, entries: I) -> Result<Self> {
        let mut t = Self::new(universe);
        for (m, v) in entries {
            t.insert(m, v)?;
        }
        Ok(t)
    }

    /// Value at `mask`, zero when absent.
    pub fn value(&self, mask: SubsetMask) -> V {
        self.entries.get(&mask).cloned().unwrap_or_else(V::zero)
    }

    pub fn support(&self) -> SetFamily {
        SetFamily {
            universe: self.universe,
            members: self
                .entries
                .iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(m, _)| *m)
                .collect(),
        }
    }

    /// Drops explicit zero entries.
    pub fn prune_zeros(&mut self) {
        self.entries.retain(|_, v| !v.is_zero());
    }
}

/// `↑family`: all supersets of members, by rank-by-rank frontier expansion.
pub fn upper_closure(family: &SetFamily) -> SetFamily {
    upper_closure_filtered(family, |_| true)
}

/// Frontier expansion from `family` that only enqueues a superset when
/// `accept` allows it. Members of `family` are always included.
pub fn upper_closure_filtered(family: &SetFamily, mut accept: impl FnMut(SubsetMask) -> bool) -> SetFamily {
    let universe = family.universe();
    let mut frontier = RankFrontier::new(universe);
    for m in family.iter() {
        frontier
            .push(m)
            .expect("family members fit the universe and rank is >= 0");
    }
    let mut out = Vec::new();
    while let Some(x) = frontier.pop() {
        out.push(x);
        for j in universe.complement(x).elements() {
            let y = x.with(j);
            if accept(y) {
                frontier.push(y).expect("superset has rank above current");
            }
        }
    }
    out.sort_unstable();
    SetFamily {
        universe,
        members: out,
    }
}

/// Members with no proper subset in the family.
pub fn minimal_members(family: &SetFamily) -> SetFamily {
    let members = family
        .iter()
        .filter(|&m| !family.iter().any(|o| o != m && o.is_subset_of(m)))
        .collect();
    SetFamily {
        universe: family.universe(),
        members,
    }
}

/// Members with no proper superset in the family.
pub fn maximal_members(family: &SetFamily) -> SetFamily {
    let members = family
        .iter()
        .filter(|&m| !family.iter().any(|o| o != m && m.is_subset_of(o)))
        .collect();
    SetFamily {
        universe: family.universe(),
        members,
    }
}
