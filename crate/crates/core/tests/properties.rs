mod common;

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;

use trimlat::bitlattice::{maximal_members, minimal_members, upper_closure, PopOrder, RankFrontier};
use trimlat::counting::{cover_numbers, cover_numbers_with, packing_numbers, partition_numbers, partition_numbers_with};
use trimlat::graphs::{
    closed_neighbourhoods, enumerate_maximal_bipartite, enumerate_maximal_independent,
    enumerate_minimal_dominating, is_dominating, pad_neighbourhoods,
};
use trimlat::oracle;
use trimlat::transforms::{
    dense_moebius, dense_zeta, trimmed_moebius, trimmed_ranked_zeta, trimmed_zeta, trimmed_zeta_with,
    yates_transform, KernelSpec,
};
use trimlat::{FrontierFilter, Graph, SetFamily, SparseTable, SubsetMask, TupleKind, Universe};

fn family_strategy(max_n: usize, max_members: usize) -> impl Strategy<Value = SetFamily> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0..(1u32 << n), 0..=max_members).prop_map(move |bits| {
            SetFamily::collect(Universe::new(n).unwrap(), bits.into_iter().map(SubsetMask::from_bits)).unwrap()
        })
    })
}

fn function_strategy(max_n: usize, max_support: usize) -> impl Strategy<Value = SparseTable<BigInt>> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..(1u32 << n), -4i64..=4), 0..=max_support).prop_map(move |entries| {
            let mut t = SparseTable::new(Universe::new(n).unwrap());
            for (m, v) in entries {
                t.insert(SubsetMask::from_bits(m), BigInt::from(v)).unwrap();
            }
            t.prune_zeros();
            t
        })
    })
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn bits(f: &SetFamily) -> Vec<u32> {
    f.iter().map(|m| m.bits()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_matches_full_scan_and_is_idempotent(f in family_strategy(12, 10)) {
        let up = upper_closure(&f);
        prop_assert_eq!(bits(&up), oracle::brute_upper_closure(&f));
        prop_assert_eq!(upper_closure(&up), up);
    }

    #[test]
    fn min_max_members(f in family_strategy(8, 12)) {
        let lo = minimal_members(&f);
        let hi = maximal_members(&f);
        prop_assert_eq!(bits(&lo), oracle::brute_minimal(&f));
        prop_assert_eq!(bits(&hi), oracle::brute_maximal(&f));
        prop_assert!(lo.iter().all(|m| f.contains(m)));
        prop_assert!(hi.iter().all(|m| f.contains(m)));
        prop_assert_eq!(upper_closure(&lo), upper_closure(&f));
    }

    #[test]
    fn frontier_pops_are_rank_monotone(masks in prop::collection::vec(0u32..256, 0..30), seed in any::<u64>()) {
        let mut fr = RankFrontier::with_order(Universe::new(8).unwrap(), PopOrder::Shuffled(seed));
        let distinct: BTreeSet<u32> = masks.iter().copied().collect();
        for m in &masks {
            fr.push(SubsetMask::from_bits(*m)).unwrap();
        }
        let mut popped = Vec::new();
        while let Some(m) = fr.pop() {
            popped.push(m);
        }
        prop_assert_eq!(popped.len(), distinct.len());
        prop_assert!(popped.windows(2).all(|w| w[0].rank() <= w[1].rank()));
    }

    #[test]
    fn yates_zeta_matches_direct_sum(values in prop::collection::vec(-8i32..=8, 1usize << 6)) {
        let f: Vec<f64> = values.iter().map(|&v| v as f64).collect();
        let z = yates_transform(&f, &KernelSpec::zeta()).unwrap();
        let big: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
        let expect = oracle::brute_zeta(&big).unwrap();
        for (a, b) in z.iter().zip(expect) {
            prop_assert_eq!(BigInt::from(*a as i64), b);
        }
        let mut exact = big.clone();
        dense_zeta(&mut exact).unwrap();
        dense_moebius(&mut exact).unwrap();
        prop_assert_eq!(exact, big);
    }

    #[test]
    fn trimmed_zeta_matches_yates_on_closure(f in function_strategy(10, 12)) {
        let dense: Vec<f64> = f.universe().masks().map(|m| {
            let v = f.value(m);
            i64::try_from(&v).unwrap() as f64
        }).collect();
        let full = yates_transform(&dense, &KernelSpec::zeta()).unwrap();
        let z = trimmed_zeta(&f);
        let closure = upper_closure(&f.support());
        let visited: BTreeSet<SubsetMask> = z.visited.iter().copied().collect();
        prop_assert_eq!(visited.len(), z.visited.len());
        prop_assert_eq!(visited.into_iter().collect::<Vec<_>>(), closure.members().to_vec());
        for m in closure.iter() {
            prop_assert_eq!(z.table.value(m), BigInt::from(full[m.bits() as usize] as i64));
        }
    }

    #[test]
    fn inversion_both_ways(f in function_strategy(10, 12)) {
        let zm = trimmed_moebius(&trimmed_zeta(&f).table).table;
        let mz = trimmed_zeta(&trimmed_moebius(&f).table).table;
        prop_assert_eq!(&zm, &f);
        prop_assert_eq!(&mz, &f);
    }

    #[test]
    fn zeta_is_pop_order_independent(f in function_strategy(9, 10), seed in any::<u64>()) {
        let a = trimmed_zeta(&f).table;
        prop_assert_eq!(&trimmed_zeta_with(&f, PopOrder::Descending).table, &a);
        prop_assert_eq!(&trimmed_zeta_with(&f, PopOrder::Shuffled(seed)).table, &a);
    }

    #[test]
    fn ranked_zeta_sums_to_zeta(f in function_strategy(9, 10)) {
        let ranked = trimmed_ranked_zeta(&f);
        let plain = trimmed_zeta(&f);
        prop_assert_eq!(ranked.visited.len(), plain.visited.len());
        for (m, v) in ranked.table.iter() {
            let total: BigInt = v.iter().sum();
            prop_assert_eq!(total, plain.table.value(m));
            for (s, entry) in v.iter().enumerate() {
                let direct: BigInt = f.iter()
                    .filter(|(y, _)| y.is_subset_of(m) && y.rank() == s)
                    .map(|(_, val)| val.clone())
                    .sum();
                prop_assert_eq!(entry, &direct);
            }
        }
    }

    #[test]
    fn counts_match_enumeration(f in family_strategy(8, 8), k in 1usize..=3) {
        let all = FrontierFilter::accept_all();
        let c = cover_numbers(&f, k, &all).unwrap();
        let d = partition_numbers(&f, k, &all).unwrap();
        let p = packing_numbers(&f, k).unwrap();
        let bc = oracle::brute_tuple_counts(&f, k, TupleKind::Cover).unwrap();
        let bd = oracle::brute_tuple_counts(&f, k, TupleKind::Partition).unwrap();
        let bp = oracle::brute_tuple_counts(&f, k, TupleKind::Packing).unwrap();
        for x in upper_closure(&f).iter() {
            let i = x.bits() as usize;
            prop_assert_eq!(c.get(x), bc[i].clone());
            prop_assert_eq!(d.get(x), bd[i].clone());
            prop_assert_eq!(p.get(x), bp[i].clone());
            prop_assert!(d.get(x) <= c.get(x));
            prop_assert!(d.get(x) <= p.get(x));
        }
    }

    #[test]
    fn counts_are_pop_order_independent(f in family_strategy(8, 8), k in 1usize..=3, seed in any::<u64>()) {
        let all = FrontierFilter::accept_all();
        let c = cover_numbers(&f, k, &all).unwrap();
        let d = partition_numbers(&f, k, &all).unwrap();
        prop_assert_eq!(cover_numbers_with(&f, k, &all, PopOrder::Shuffled(seed)).unwrap().table, c.table);
        prop_assert_eq!(partition_numbers_with(&f, k, &all, PopOrder::Descending).unwrap().table, d.table);
    }

    #[test]
    fn enumerators_match_power_set_scan(g in graph_strategy(9)) {
        prop_assert_eq!(bits(&enumerate_maximal_independent(&g)), oracle::brute_maximal_independent(&g).unwrap());
        prop_assert_eq!(bits(&enumerate_minimal_dominating(&g)), oracle::brute_minimal_dominating(&g).unwrap());
        prop_assert_eq!(bits(&enumerate_maximal_bipartite(&g)), oracle::brute_maximal_bipartite(&g).unwrap());
    }

    #[test]
    fn graph_family_relations(g in graph_strategy(9)) {
        for s in enumerate_maximal_independent(&g).iter() {
            prop_assert!(is_dominating(&g, s));
        }
        let dominating = oracle::brute_dominating_sets(&g).unwrap();
        prop_assert_eq!(bits(&upper_closure(&enumerate_minimal_dominating(&g))), dominating);
    }

    #[test]
    fn padded_cover_is_exact(g in graph_strategy(10)) {
        let delta = g.max_degree();
        prop_assume!(g.n() > delta);
        let padded = pad_neighbourhoods(&closed_neighbourhoods(&g), &g).unwrap();
        prop_assert_eq!(padded.total_size(), (delta + 1) * g.n());
        for u in 0..g.n() {
            prop_assert_eq!(padded.coverage(u), delta + 1);
            prop_assert!(padded.set(u).contains(u));
        }
    }

    #[test]
    fn filtered_runs_agree_where_they_overlap(g in graph_strategy(8), k in 1usize..=3) {
        let family = enumerate_minimal_dominating(&g);
        let u = g.universe();
        let filter = FrontierFilter::new(|y: SubsetMask| is_dominating(&g, u.complement(y)));
        let filtered = partition_numbers(&family, k, &filter).unwrap();
        let full = partition_numbers(&family, k, &FrontierFilter::accept_all()).unwrap();
        let full_visited: BTreeSet<SubsetMask> = full.visited.iter().copied().collect();
        for (x, v) in filtered.table.iter() {
            prop_assert!(full_visited.contains(&x));
            prop_assert_eq!(v, &full.get(x));
        }
    }
}

#[test]
fn cover_zeta_identity() {
    // (cζ)(Y) = ((fζ)(Y))^k on the closure
    let mut rng = common::rng(11);
    for _ in 0..40 {
        let n = 1 + (rand::Rng::gen_range(&mut rng, 0..8usize));
        let f = common::random_family(&mut rng, n, 8);
        let indicator = SparseTable::from_entries(f.universe(), f.iter().map(|m| (m, BigInt::from(1)))).unwrap();
        let fz = trimmed_zeta(&indicator).table;
        for k in 1..=3u32 {
            let c = cover_numbers(&f, k as usize, &FrontierFilter::accept_all()).unwrap();
            let signed = SparseTable::from_entries(
                f.universe(),
                c.table.iter().map(|(m, v)| (m, BigInt::from(v.clone()))),
            )
            .unwrap();
            let cz = trimmed_zeta(&signed).table;
            for y in upper_closure(&f).iter() {
                assert_eq!(cz.value(y), fz.value(y).pow(k));
            }
        }
    }
}

#[test]
fn packing_is_zeta_of_partition() {
    let mut rng = common::rng(12);
    for _ in 0..40 {
        let n = 1 + rand::Rng::gen_range(&mut rng, 0..8usize);
        let f = common::random_family(&mut rng, n, 8);
        for k in 1..=3 {
            let d = partition_numbers(&f, k, &FrontierFilter::accept_all()).unwrap();
            let p = packing_numbers(&f, k).unwrap();
            let dz: Vec<BigUint> = (0..1u32 << n)
                .map(|x| {
                    d.table
                        .iter()
                        .filter(|(y, _)| y.bits() & !x == 0)
                        .map(|(_, v)| v.clone())
                        .sum()
                })
                .collect();
            for (x, v) in dz.into_iter().enumerate() {
                assert_eq!(p.get(SubsetMask::from_bits(x as u32)), v);
            }
            assert!(p.table.iter().all(|(_, v)| !v.is_zero()));
        }
    }
}
