//! Yates's algorithm and the trimmed pointwise zeta and Moebius transforms.
//!
//! The trimmed transforms only touch the upper closure of the input's
//! support. Masks are processed rank by rank; at mask `X` the values
//! `g_0(X), .., g_n(X)` are built with
//!
//! ```text
//! g_j(X) = g_{j-1}(X) ± [j ∈ X] g_{j-1}(X \ {j})
//! ```
//!
//! which only looks one rank down. Values below the closure are zero, so a
//! missing lower neighbour contributes nothing, and only the tables of the
//! previous and current rank are kept alive.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bitlattice::{PopOrder, RankFrontier, SparseTable, SubsetMask, Universe};
use crate::error::{Error, Result};

/// Dense transforms refuse universes larger than this.
pub const DENSE_MAX_UNIVERSE: usize = 24;

/// The 2x2 kernel `υ(x, y)` of a product transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSpec {
    values: [[f64; 2]; 2],
}

impl KernelSpec {
    /// `values[x][y] = υ(x, y)`.
    pub fn new(values: [[f64; 2]; 2]) -> Result<Self> {
        if values.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("kernel values must be finite".into()));
        }
        Ok(Self { values })
    }

    /// `υ(x, y) = [x = y]`.
    pub fn identity() -> Self {
        Self { values: [[1.0, 0.0], [0.0, 1.0]] }
    }

    /// `υ(x, y) = [y ≤ x]`.
    pub fn zeta() -> Self {
        Self { values: [[1.0, 0.0], [1.0, 1.0]] }
    }

    /// `υ(x, y) = [y ≤ x] (-1)^(x - y)`.
    pub fn moebius() -> Self {
        Self { values: [[1.0, 0.0], [-1.0, 1.0]] }
    }

    pub fn value(&self, x: bool, y: bool) -> f64 {
        self.values[x as usize][y as usize]
    }
}

fn dense_universe(len: usize) -> Result<usize> {
    if !len.is_power_of_two() {
        return Err(Error::DenseLength(len));
    }
    let n = len.trailing_zeros() as usize;
    if n > DENSE_MAX_UNIVERSE {
        return Err(Error::DenseTooLarge { n, cap: DENSE_MAX_UNIVERSE });
    }
    Ok(n)
}

/// Yates's algorithm: `f̂(X) = Σ_Y Π_j υ(x_j, y_j) f(Y)` for all `2^n` masks
/// in `O(2^n n)` combine steps. `f` is indexed by mask bits.
pub fn yates_transform(f: &[f64], kernel: &KernelSpec) -> Result<Vec<f64>> {
    let n = dense_universe(f.len())?;
    let mut g = f.to_vec();
    let [[v00, v01], [v10, v11]] = kernel.values;
    for j in 0..n {
        let bit = 1usize << j;
        for block in g.chunks_exact_mut(bit << 1) {
            let (lo, hi) = block.split_at_mut(bit);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (without, with) = (*a, *b);
                *a = v00 * without + v01 * with;
                *b = v10 * without + v11 * with;
            }
        }
    }
    Ok(g)
}

fn dense_pass(values: &mut [BigInt], negate: bool) -> Result<()> {
    let n = dense_universe(values.len())?;
    for j in 0..n {
        let bit = 1usize << j;
        for block in values.chunks_exact_mut(bit << 1) {
            let (lo, hi) = block.split_at_mut(bit);
            for (a, b) in lo.iter().zip(hi.iter_mut()) {
                if negate {
                    *b -= a;
                } else {
                    *b += a;
                }
            }
        }
    }
    Ok(())
}

/// Exact in-place zeta transform over the full lattice.
pub fn dense_zeta(values: &mut [BigInt]) -> Result<()> {
    dense_pass(values, false)
}

/// Exact in-place Moebius transform over the full lattice.
pub fn dense_moebius(values: &mut [BigInt]) -> Result<()> {
    dense_pass(values, true)
}

/// Values of the masks of one rank, keyed by mask.
pub(crate) type LevelTable<S> = HashMap<SubsetMask, S>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Direction {
    Zeta,
    Moebius,
}

/// Rows `0..=n` of width `width` at mask `x`, row 0 given. Row `j` adds (or
/// subtracts) row `j-1` of `x \ {j}` taken from the previous rank.
pub(crate) fn lattice_rows<S>(
    x: SubsetMask,
    n: usize,
    row0: Vec<BigInt>,
    direction: Direction,
    lower: &LevelTable<S>,
    project: impl Fn(&S) -> &[BigInt],
) -> Vec<BigInt> {
    let width = row0.len();
    let mut rows = Vec::with_capacity((n + 1) * width);
    rows.extend(row0);
    for j in 1..=n {
        let elem = j - 1;
        let start = (j - 1) * width;
        let below = if x.contains(elem) {
            lower.get(&x.without(elem)).map(|s| &project(s)[start..start + width])
        } else {
            None
        };
        for s in 0..width {
            let mut v = rows[start + s].clone();
            if let Some(b) = below {
                match direction {
                    Direction::Zeta => v += &b[s],
                    Direction::Moebius => v -= &b[s],
                }
            }
            rows.push(v);
        }
    }
    rows
}

/// Last row of a `lattice_rows` result.
pub(crate) fn final_row(rows: &[BigInt], n: usize) -> &[BigInt] {
    let width = rows.len() / (n + 1);
    &rows[n * width..]
}

/// Bottom-up sweep over the closure of `seeds`. `step` computes the state of
/// each popped mask from the previous rank's table; `accept` gates which
/// supersets are enqueued. Returns the visited masks in processing order.
pub(crate) fn sweep<S>(
    universe: Universe,
    seeds: impl IntoIterator<Item = SubsetMask>,
    order: PopOrder,
    mut accept: impl FnMut(SubsetMask) -> bool,
    mut step: impl FnMut(SubsetMask, &LevelTable<S>) -> S,
) -> Vec<SubsetMask> {
    let mut frontier = RankFrontier::with_order(universe, order);
    for s in seeds {
        frontier.push(s).expect("seed masks fit the universe");
    }
    let mut previous: LevelTable<S> = HashMap::new();
    let mut current: LevelTable<S> = HashMap::new();
    let mut current_rank: Option<usize> = None;
    let mut visited = Vec::new();
    while let Some(x) = frontier.pop() {
        let r = x.rank();
        if current_rank != Some(r) {
            if current_rank.is_some_and(|c| c + 1 == r) {
                previous = std::mem::take(&mut current);
            } else {
                previous.clear();
                current.clear();
            }
            current_rank = Some(r);
        }
        let state = step(x, &previous);
        current.insert(x, state);
        visited.push(x);
        for j in universe.complement(x).elements() {
            let y = x.with(j);
            if accept(y) {
                frontier.push(y).expect("supersets rank above the current rank");
            }
        }
    }
    visited
}

/// Result of a trimmed transform.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trimmed<V> {
    /// Nonzero output values.
    pub table: SparseTable<V>,
    /// Every processed mask, in processing order. With no filtering this is
    /// exactly the upper closure of the input support.
    pub visited: Vec<SubsetMask>,
}

impl<V> Trimmed<V> {
    pub fn visited_count(&self) -> usize {
        self.visited.len()
    }
}

fn trimmed_unranked(f: &SparseTable<BigInt>, direction: Direction, order: PopOrder) -> Trimmed<BigInt> {
    let universe = f.universe();
    let n = universe.size();
    let mut table = SparseTable::new(universe);
    let visited = sweep(universe, f.support().iter(), order, |_| true, |x, lower| {
        let rows = lattice_rows(x, n, vec![f.value(x)], direction, lower, |s: &Vec<BigInt>| s);
        let top = &final_row(&rows, n)[0];
        if !top.is_zero() {
            table.insert(x, top.clone()).expect("visited masks fit the universe");
        }
        rows
    });
    Trimmed { table, visited }
}

/// `(fζ)(X) = Σ_{Y ⊆ X} f(Y)` on the closure of `supp(f)`.
pub fn trimmed_zeta(f: &SparseTable<BigInt>) -> Trimmed<BigInt> {
    trimmed_zeta_with(f, PopOrder::Ascending)
}

pub fn trimmed_zeta_with(f: &SparseTable<BigInt>, order: PopOrder) -> Trimmed<BigInt> {
    trimmed_unranked(f, Direction::Zeta, order)
}

/// `(fμ)(X) = Σ_{Y ⊆ X} (-1)^{|X \ Y|} f(Y)` on the closure of `supp(f)`.
pub fn trimmed_moebius(f: &SparseTable<BigInt>) -> Trimmed<BigInt> {
    trimmed_moebius_with(f, PopOrder::Ascending)
}

pub fn trimmed_moebius_with(f: &SparseTable<BigInt>, order: PopOrder) -> Trimmed<BigInt> {
    trimmed_unranked(f, Direction::Moebius, order)
}

/// Rank-split zeta transform: at each `X` of the closure, the vector whose
/// entry `s` is `Σ_{Y ⊆ X, |Y| = s} f(Y)`. Every visited mask is reported.
pub fn trimmed_ranked_zeta(f: &SparseTable<BigInt>) -> Trimmed<Vec<BigInt>> {
    trimmed_ranked_zeta_with(f, PopOrder::Ascending)
}

pub fn trimmed_ranked_zeta_with(f: &SparseTable<BigInt>, order: PopOrder) -> Trimmed<Vec<BigInt>> {
    let universe = f.universe();
    let n = universe.size();
    let mut table = SparseTable::new(universe);
    let visited = sweep(universe, f.support().iter(), order, |_| true, |x, lower| {
        let rows = lattice_rows(x, n, ranked_seed(n, x, f.value(x)), Direction::Zeta, lower, |s: &Vec<BigInt>| s);
        table
            .insert(x, final_row(&rows, n).to_vec())
            .expect("visited masks fit the universe");
        rows
    });
    Trimmed { table, visited }
}

/// Width-`n+1` row holding `value` at position `|x|`.
pub(crate) fn ranked_seed(n: usize, x: SubsetMask, value: BigInt) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); n + 1];
    row[x.rank()] = value;
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(elems: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elems.iter().map(|e| e - 1))
    }

    fn table(n: usize, entries: &[(&[usize], i64)]) -> SparseTable<BigInt> {
        SparseTable::from_entries(
            Universe::new(n).unwrap(),
            entries.iter().map(|(s, v)| (set(s), BigInt::from(*v))),
        )
        .unwrap()
    }

    // f({4}) = f({1,2,4}) = 1, f({1,3}) = 2
    fn lattice_example() -> SparseTable<BigInt> {
        table(4, &[(&[4], 1), (&[1, 2, 4], 1), (&[1, 3], 2)])
    }

    #[test]
    fn identity_kernel_is_noop() {
        let f: Vec<f64> = (0..16).map(|i| (i * i) as f64 - 3.5).collect();
        assert_eq!(yates_transform(&f, &KernelSpec::identity()).unwrap(), f);
    }

    #[test]
    fn yates_zeta_on_lattice_example() {
        let mut f = vec![0.0; 16];
        f[set(&[4]).bits() as usize] = 1.0;
        f[set(&[1, 2, 4]).bits() as usize] = 1.0;
        f[set(&[1, 3]).bits() as usize] = 2.0;
        let z = yates_transform(&f, &KernelSpec::zeta()).unwrap();
        assert_eq!(z[15], 4.0);
        let back = yates_transform(&z, &KernelSpec::moebius()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn dense_guards() {
        assert_eq!(yates_transform(&[0.0; 3], &KernelSpec::zeta()), Err(Error::DenseLength(3)));
        assert!(KernelSpec::new([[f64::NAN, 0.0], [0.0, 1.0]]).is_err());
    }

    #[test]
    fn zeta_from_bottom() {
        let z = trimmed_zeta(&table(2, &[(&[], 5)]));
        assert_eq!(z.table.len(), 4);
        assert!(z.table.iter().all(|(_, v)| *v == BigInt::from(5)));
    }

    #[test]
    fn zeta_lattice_example() {
        let z = trimmed_zeta(&lattice_example());
        assert_eq!(z.table.value(set(&[1, 3])), BigInt::from(2));
        assert_eq!(z.table.value(set(&[1, 2, 4])), BigInt::from(2));
        assert_eq!(z.table.value(set(&[1, 2, 3, 4])), BigInt::from(4));
    }

    #[test]
    fn zeta_two_singletons() {
        let z = trimmed_zeta(&table(2, &[(&[1], 1), (&[2], 1)]));
        assert_eq!(z.table, table(2, &[(&[1], 1), (&[2], 1), (&[1, 2], 2)]));
        assert_eq!(z.visited_count(), 3);
    }

    #[test]
    fn moebius_from_bottom() {
        let m = trimmed_moebius(&table(2, &[(&[], 1)]));
        assert_eq!(m.table, table(2, &[(&[], 1), (&[1], -1), (&[2], -1), (&[1, 2], 1)]));
    }

    #[test]
    fn moebius_singleton_lattice() {
        let m = trimmed_moebius(&table(1, &[(&[1], 3)]));
        assert_eq!(m.table, table(1, &[(&[1], 3)]));
    }

    #[test]
    fn zero_values_are_visited_not_emitted() {
        // f = {1}->1, {1,2}->-1: (fζ)({1,2}) = 0
        let z = trimmed_zeta(&table(2, &[(&[1], 1), (&[1, 2], -1)]));
        assert_eq!(z.visited_count(), 2);
        assert_eq!(z.table, table(2, &[(&[1], 1)]));
    }

    #[test]
    fn ranked_zeta_examples() {
        let r = trimmed_ranked_zeta(&table(2, &[(&[1], 1), (&[1, 2], 1)]));
        let at = r.table.get(set(&[1, 2])).unwrap();
        assert_eq!(at, &vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)]);

        let r = trimmed_ranked_zeta(&table(3, &[(&[], 7)]));
        assert_eq!(r.table.len(), 8);
        for (_, v) in r.table.iter() {
            assert_eq!(v[0], BigInt::from(7));
            assert!(v[1..].iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn empty_input_visits_nothing() {
        let z = trimmed_zeta(&table(3, &[]));
        assert!(z.table.is_empty());
        assert_eq!(z.visited_count(), 0);
    }
}
