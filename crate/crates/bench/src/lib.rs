//! Seeded instances shared by the benchmarks.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use trimlat::graphs::enumerate_minimal_dominating;
use trimlat::graphs::generators::disjoint_cliques;
use trimlat::{Graph, SetFamily, SparseTable, SubsetMask, Universe};

/// A function on `n` elements with `support` random nonzero values in
/// `-9..=9`, concentrated on masks of rank at least `n / 2`.
pub fn sparse_function(n: usize, support: usize, seed: u64) -> SparseTable<BigInt> {
    let mut rng = StdRng::seed_from_u64(seed);
    let universe = Universe::new(n).expect("universe fits");
    let mut table = SparseTable::new(universe);
    while table.len() < support.min(1 << n) {
        let mut mask = SubsetMask::from_bits(rng.gen::<u32>() & universe.full().bits());
        while mask.rank() < n / 2 {
            mask = mask.with(rng.gen_range(0..n));
        }
        let value: i64 = rng.gen_range(1..=9) * if rng.gen() { 1 } else { -1 };
        table.insert(mask, BigInt::from(value)).expect("mask in universe");
    }
    table
}

/// The same function as a dense vector indexed by mask bits.
pub fn dense(f: &SparseTable<BigInt>) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); 1 << f.universe().size()];
    for (mask, value) in f.iter() {
        out[mask.bits() as usize] = value.clone();
    }
    out
}

/// `copies` disjoint copies of `K_4`.
pub fn k4_union(copies: usize) -> Graph {
    disjoint_cliques(copies, 4).expect("fits the universe")
}

/// Minimal dominating sets of `copies` disjoint copies of `K_4`.
pub fn k4_dominating_family(copies: usize) -> SetFamily {
    enumerate_minimal_dominating(&k4_union(copies))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances() {
        let f = sparse_function(12, 20, 7);
        assert_eq!(f.len(), 20);
        assert!(f.keys().all(|m| m.rank() >= 6));
        assert_eq!(dense(&f).iter().filter(|v| **v != BigInt::from(0)).count(), 20);
        assert_eq!(k4_dominating_family(2).len(), 16);
    }
}
