//! Brute-force reference implementations.
//!
//! Everything here works on raw `u32` bit patterns with its own loops and
//! predicates and shares no code with the transforms, counting engine or
//! graph enumerators it is used to check.

use num_bigint::{BigInt, BigUint};

use crate::bitlattice::SetFamily;
use crate::counting::TupleKind;
use crate::error::{Error, Result};
use crate::graphs::Graph;

pub const TRANSFORM_MAX_N: usize = 12;
pub const TUPLE_BUDGET: u128 = 10_000_000;
pub const CHROMATIC_MAX_N: usize = 9;
pub const DOMATIC_MAX_N: usize = 8;
pub const FAMILY_SCAN_MAX_N: usize = 16;

fn guard(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::InstanceTooLarge { what, n, limit });
    }
    Ok(())
}

fn dense_n(len: usize) -> Result<usize> {
    if !len.is_power_of_two() {
        return Err(Error::DenseLength(len));
    }
    let n = len.trailing_zeros() as usize;
    guard("brute-force transform", n, TRANSFORM_MAX_N)?;
    Ok(n)
}

/// `(fζ)(X) = Σ_{Y ⊆ X} f(Y)` by a double loop over all pairs.
pub fn brute_zeta(f: &[BigInt]) -> Result<Vec<BigInt>> {
    dense_n(f.len())?;
    Ok((0..f.len())
        .map(|x| {
            (0..f.len())
                .filter(|&y| y & !x == 0)
                .map(|y| &f[y])
                .sum()
        })
        .collect())
}

/// `(fμ)(X) = Σ_{Y ⊆ X} (-1)^{|X \ Y|} f(Y)` by a double loop.
pub fn brute_moebius(f: &[BigInt]) -> Result<Vec<BigInt>> {
    dense_n(f.len())?;
    Ok((0..f.len())
        .map(|x| {
            let mut acc = BigInt::from(0);
            for y in (0..f.len()).filter(|&y| y & !x == 0) {
                if (x & !y).count_ones() % 2 == 0 {
                    acc += &f[y];
                } else {
                    acc -= &f[y];
                }
            }
            acc
        })
        .collect())
}

/// Masks `T` with some member `S ⊆ T`, by scanning the whole lattice.
pub fn brute_upper_closure(family: &SetFamily) -> Vec<u32> {
    let members: Vec<u32> = family.iter().map(|m| m.bits()).collect();
    let n = family.universe().size();
    (0..(1u64 << n))
        .map(|t| t as u32)
        .filter(|&t| members.iter().any(|&s| s & !t == 0))
        .collect()
}

pub fn brute_minimal(family: &SetFamily) -> Vec<u32> {
    let members: Vec<u32> = family.iter().map(|m| m.bits()).collect();
    members
        .iter()
        .copied()
        .filter(|&a| !members.iter().any(|&b| b != a && b & !a == 0))
        .collect()
}

pub fn brute_maximal(family: &SetFamily) -> Vec<u32> {
    let members: Vec<u32> = family.iter().map(|m| m.bits()).collect();
    members
        .iter()
        .copied()
        .filter(|&a| !members.iter().any(|&b| b != a && a & !b == 0))
        .collect()
}

/// Counts by enumerating all `|family|^k` ordered tuples. Indexed by mask.
pub fn brute_tuple_counts(family: &SetFamily, k: usize, kind: TupleKind) -> Result<Vec<BigUint>> {
    let n = family.universe().size();
    guard("brute-force tuple counting", n, FAMILY_SCAN_MAX_N)?;
    let members: Vec<u32> = family.iter().map(|m| m.bits()).collect();
    let needed = (members.len() as u128)
        .checked_pow(k as u32)
        .unwrap_or(u128::MAX);
    if needed > TUPLE_BUDGET {
        return Err(Error::OracleBudget {
            needed,
            budget: TUPLE_BUDGET,
        });
    }
    let size = 1usize << n;
    let mut covering = vec![0u64; size];
    let mut disjoint_covering = vec![0u64; size];
    if k == 0 || !members.is_empty() {
        let mut idx = vec![0usize; k];
        loop {
            let mut union = 0u32;
            let mut disjoint = true;
            for &i in &idx {
                let s = members[i];
                if union & s != 0 {
                    disjoint = false;
                }
                union |= s;
            }
            covering[union as usize] += 1;
            if disjoint {
                disjoint_covering[union as usize] += 1;
            }
            // odometer
            let mut pos = 0;
            while pos < k {
                idx[pos] += 1;
                if idx[pos] < members.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
    }
    let counts: Vec<u64> = match kind {
        TupleKind::Cover => covering,
        TupleKind::Partition => disjoint_covering,
        TupleKind::Packing => (0..size)
            .map(|x| {
                (0..size)
                    .filter(|&y| y & !x == 0)
                    .map(|y| disjoint_covering[y])
                    .sum()
            })
            .collect(),
    };
    Ok(counts.into_iter().map(BigUint::from).collect())
}

fn raw_adjacency(g: &Graph) -> Vec<u32> {
    (0..g.n()).map(|v| g.neighbours(v).bits()).collect()
}

fn raw_dominates(adj: &[u32], x: u32) -> bool {
    (0..adj.len()).all(|v| x >> v & 1 == 1 || adj[v] & x != 0)
}

fn raw_independent(adj: &[u32], x: u32) -> bool {
    (0..adj.len()).all(|v| x >> v & 1 == 0 || adj[v] & x == 0)
}

/// Tries every split of `x` into two sides.
fn raw_bipartite(adj: &[u32], x: u32) -> bool {
    let mut side = x;
    loop {
        if raw_independent(adj, side) && raw_independent(adj, x & !side) {
            return true;
        }
        if side == 0 {
            return false;
        }
        side = (side - 1) & x;
    }
}

fn scan(g: &Graph, keep: impl Fn(&[u32], u32) -> bool) -> Result<Vec<u32>> {
    let n = g.n();
    guard("brute-force family scan", n, FAMILY_SCAN_MAX_N)?;
    let adj = raw_adjacency(g);
    Ok((0..(1u32 << n)).filter(|&x| keep(&adj, x)).collect())
}

pub fn brute_dominating_sets(g: &Graph) -> Result<Vec<u32>> {
    scan(g, raw_dominates)
}

pub fn brute_minimal_dominating(g: &Graph) -> Result<Vec<u32>> {
    scan(g, |adj, x| {
        raw_dominates(adj, x) && (0..adj.len()).all(|v| x >> v & 1 == 0 || !raw_dominates(adj, x & !(1 << v)))
    })
}

pub fn brute_maximal_independent(g: &Graph) -> Result<Vec<u32>> {
    scan(g, |adj, x| {
        raw_independent(adj, x) && (0..adj.len()).all(|v| x >> v & 1 == 1 || !raw_independent(adj, x | 1 << v))
    })
}

pub fn brute_maximal_bipartite(g: &Graph) -> Result<Vec<u32>> {
    scan(g, |adj, x| {
        raw_bipartite(adj, x) && (0..adj.len()).all(|v| x >> v & 1 == 1 || !raw_bipartite(adj, x | 1 << v))
    })
}

/// Calls `visit` with the block index of every vertex for each set
/// partition of `0..n` (restricted growth strings).
fn for_each_set_partition(n: usize, mut visit: impl FnMut(&[usize], usize)) {
    fn rec(pos: usize, blocks: usize, labels: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize], usize)) {
        if pos == labels.len() {
            visit(labels, blocks);
            return;
        }
        for b in 0..=blocks {
            labels[pos] = b;
            rec(pos + 1, blocks.max(b + 1), labels, visit);
        }
    }
    let mut labels = vec![0; n];
    rec(0, 0, &mut labels, &mut visit);
}

fn blocks_of(labels: &[usize], count: usize) -> Vec<u32> {
    let mut blocks = vec![0u32; count];
    for (v, &b) in labels.iter().enumerate() {
        blocks[b] |= 1 << v;
    }
    blocks
}

/// Fewest blocks over all set partitions into independent sets.
pub fn brute_chromatic(g: &Graph) -> Result<usize> {
    guard("brute-force chromatic number", g.n(), CHROMATIC_MAX_N)?;
    let adj = raw_adjacency(g);
    let mut best = usize::MAX;
    for_each_set_partition(g.n(), |labels, count| {
        if count < best && blocks_of(labels, count).iter().all(|&b| raw_independent(&adj, b)) {
            best = count;
        }
    });
    Ok(best)
}

/// Most blocks over all set partitions into dominating sets.
pub fn brute_domatic(g: &Graph) -> Result<usize> {
    guard("brute-force domatic number", g.n(), DOMATIC_MAX_N)?;
    let adj = raw_adjacency(g);
    let mut best = 0;
    for_each_set_partition(g.n(), |labels, count| {
        if count > best && blocks_of(labels, count).iter().all(|&b| raw_dominates(&adj, b)) {
            best = count;
        }
    });
    Ok(best)
}

pub fn brute_count_dominating(g: &Graph) -> Result<BigUint> {
    Ok(BigUint::from(brute_dominating_sets(g)?.len()))
}
