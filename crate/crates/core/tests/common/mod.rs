#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use trimlat::{SetFamily, SparseTable, SubsetMask, Universe};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn universe(n: usize) -> Universe {
    Universe::new(n).unwrap()
}

pub fn random_family(rng: &mut StdRng, n: usize, max_members: usize) -> SetFamily {
    let count = rng.gen_range(0..=max_members);
    let members = (0..count).map(|_| SubsetMask::from_bits(rng.gen_range(0..(1u32 << n))));
    SetFamily::collect(universe(n), members).unwrap()
}

/// Sparse function with up to `max_support` entries in `-5..=5`.
pub fn random_function(rng: &mut StdRng, n: usize, max_support: usize) -> SparseTable<BigInt> {
    let count = rng.gen_range(0..=max_support);
    let mut t = SparseTable::new(universe(n));
    for _ in 0..count {
        let m = SubsetMask::from_bits(rng.gen_range(0..(1u32 << n)));
        let v = rng.gen_range(-5i64..=5);
        t.insert(m, BigInt::from(v)).unwrap();
    }
    t.prune_zeros();
    t
}

pub fn dense(t: &SparseTable<BigInt>) -> Vec<BigInt> {
    t.universe().masks().map(|m| t.value(m)).collect()
}

pub fn dense_counts(t: &SparseTable<BigUint>) -> Vec<BigUint> {
    t.universe().masks().map(|m| t.value(m)).collect()
}
