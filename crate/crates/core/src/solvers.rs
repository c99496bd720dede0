//! Chromatic Number and Domatic Number through the counting engine.
//!
//! * colourability with `k` colours: cover `V` with `k` maximal independent
//!   sets, or with `⌊k/2⌋` maximal bipartite sets (plus one independent
//!   remainder when `k` is odd)
//! * `k` disjoint dominating sets: partition some `X` into `k - 1` minimal
//!   dominating sets while `V \ X` still dominates; the sweep never enqueues
//!   a superset whose complement stops dominating

use std::collections::HashSet;

use num_traits::Zero;

use crate::bitlattice::{SetFamily, SubsetMask};
use crate::counting::{cover_numbers, partition_numbers, FrontierFilter, TupleCounts};
use crate::error::{Error, Result};
use crate::graphs::{
    closed_neighbourhoods, enumerate_maximal_bipartite, enumerate_maximal_independent,
    enumerate_minimal_dominating, is_dominating, is_independent, Graph,
};

/// Largest graph accepted by [`domatic_meet_in_middle`].
pub const MEET_IN_MIDDLE_MAX_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverReport<A> {
    pub answer: A,
    /// A mask certifying a positive answer, when one was found.
    pub witness: Option<SubsetMask>,
    /// Masks processed by the counting sweeps, summed over all runs.
    pub visited: usize,
    /// Size of the family the sweeps were seeded with.
    pub family_size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChromaticMethod {
    /// Covers by maximal independent sets.
    #[default]
    Mis,
    /// Covers by maximal induced-bipartite sets.
    Bipartite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DomaticStrategy {
    /// Partition `X` into `k - 1` minimal dominating sets with the sweep
    /// restricted to masks whose complement dominates.
    #[default]
    Filtered,
    /// Look for any `X` partitioned into `k` minimal dominating sets.
    Unfiltered,
}

fn require_positive(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    Ok(())
}

/// Whether `g` has `k` pairwise disjoint dominating sets.
pub fn domatic_packing_decision(g: &Graph, k: usize) -> Result<SolverReport<bool>> {
    domatic_packing_decision_with(g, k, DomaticStrategy::Filtered)
}

pub fn domatic_packing_decision_with(g: &Graph, k: usize, strategy: DomaticStrategy) -> Result<SolverReport<bool>> {
    require_positive(k)?;
    let family = enumerate_minimal_dominating(g);
    domatic_decision_on(g, &family, k, strategy)
}

fn domatic_decision_on(
    g: &Graph,
    min_dominating: &SetFamily,
    k: usize,
    strategy: DomaticStrategy,
) -> Result<SolverReport<bool>> {
    if k == 1 {
        // V itself dominates
        return Ok(SolverReport {
            answer: true,
            witness: Some(g.vertices()),
            visited: 0,
            family_size: 0,
        });
    }
    let universe = g.universe();
    let (counts, needs_dominating_rest) = match strategy {
        DomaticStrategy::Filtered => {
            let filter = FrontierFilter::new(|y: SubsetMask| is_dominating(g, universe.complement(y)));
            (partition_numbers(min_dominating, k - 1, &filter)?, true)
        }
        DomaticStrategy::Unfiltered => (partition_numbers(min_dominating, k, &FrontierFilter::accept_all())?, false),
    };
    // seeds are processed unfiltered, so the complement is checked again here
    let witness = counts
        .nonzero()
        .map(|(x, _)| x)
        .find(|&x| !needs_dominating_rest || is_dominating(g, universe.complement(x)));
    Ok(SolverReport {
        answer: witness.is_some(),
        witness,
        visited: counts.visited_count(),
        family_size: min_dominating.len(),
    })
}

/// Largest `k` such that `V` splits into `k` dominating sets.
pub fn domatic_number(g: &Graph) -> Result<SolverReport<usize>> {
    domatic_number_with(g, DomaticStrategy::Filtered)
}

pub fn domatic_number_with(g: &Graph, strategy: DomaticStrategy) -> Result<SolverReport<usize>> {
    let family = enumerate_minimal_dominating(g);
    let mut best = SolverReport {
        answer: 1,
        witness: Some(g.vertices()),
        visited: 0,
        family_size: family.len(),
    };
    // every dominating set meets each closed neighbourhood
    for k in 2..=g.min_degree() + 1 {
        let report = domatic_decision_on(g, &family, k, strategy)?;
        best.visited += report.visited;
        if !report.answer {
            break;
        }
        best.answer = k;
        best.witness = report.witness;
    }
    Ok(best)
}

fn covers_everything(counts: &TupleCounts, g: &Graph) -> bool {
    !counts.get(g.vertices()).is_zero()
}

/// Whether `V` is covered by `k` maximal independent sets.
pub fn chromatic_decision_mis(g: &Graph, k: usize) -> Result<SolverReport<bool>> {
    require_positive(k)?;
    let family = enumerate_maximal_independent(g);
    mis_decision_on(g, &family, k)
}

fn mis_decision_on(g: &Graph, family: &SetFamily, k: usize) -> Result<SolverReport<bool>> {
    let counts = cover_numbers(family, k, &FrontierFilter::accept_all())?;
    let answer = covers_everything(&counts, g);
    Ok(SolverReport {
        answer,
        witness: answer.then(|| g.vertices()),
        visited: counts.visited_count(),
        family_size: family.len(),
    })
}

/// Whether `g` is `k`-colourable, through covers by maximal bipartite sets.
pub fn chromatic_decision_bipartite(g: &Graph, k: usize) -> Result<SolverReport<bool>> {
    require_positive(k)?;
    let family = enumerate_maximal_bipartite(g);
    bipartite_decision_on(g, &family, k)
}

fn bipartite_decision_on(g: &Graph, family: &SetFamily, k: usize) -> Result<SolverReport<bool>> {
    if k == 1 {
        let answer = g.edge_count() == 0;
        return Ok(SolverReport {
            answer,
            witness: answer.then(|| g.vertices()),
            visited: 0,
            family_size: 0,
        });
    }
    let counts = cover_numbers(family, k / 2, &FrontierFilter::accept_all())?;
    let witness = if k.is_multiple_of(2) {
        covers_everything(&counts, g).then(|| g.vertices())
    } else {
        let universe = g.universe();
        counts
            .nonzero()
            .map(|(x, _)| x)
            .find(|&x| is_independent(g, universe.complement(x)))
    };
    Ok(SolverReport {
        answer: witness.is_some(),
        witness,
        visited: counts.visited_count(),
        family_size: family.len(),
    })
}

/// Smallest `k` with a positive colourability decision.
pub fn chromatic_number(g: &Graph, method: ChromaticMethod) -> Result<SolverReport<usize>> {
    let family = match method {
        ChromaticMethod::Mis => enumerate_maximal_independent(g),
        ChromaticMethod::Bipartite => enumerate_maximal_bipartite(g),
    };
    let mut visited = 0;
    // greedy colouring never needs more than Δ + 1 colours
    for k in 1..=g.max_degree() + 1 {
        let report = match method {
            ChromaticMethod::Mis => mis_decision_on(g, &family, k)?,
            ChromaticMethod::Bipartite => bipartite_decision_on(g, &family, k)?,
        };
        visited += report.visited;
        if report.answer {
            return Ok(SolverReport {
                answer: k,
                witness: report.witness,
                visited,
                family_size: family.len(),
            });
        }
    }
    unreachable!("every graph is (Δ + 1)-colourable")
}

/// Decides `domatic(g) >= d` for even `d` by splitting `V` into two halves
/// that each hold `d / 2` disjoint dominating sets.
pub fn domatic_meet_in_middle(g: &Graph, d: usize) -> Result<SolverReport<bool>> {
    domatic_meet_in_middle_with_limit(g, d, MEET_IN_MIDDLE_MAX_N)
}

pub fn domatic_meet_in_middle_with_limit(g: &Graph, d: usize, max_n: usize) -> Result<SolverReport<bool>> {
    if d == 0 || d % 2 == 1 {
        return Err(Error::InvalidArgument(format!("meet-in-the-middle needs an even d >= 2, got {d}")));
    }
    if g.n() > max_n {
        return Err(Error::InstanceTooLarge {
            what: "meet-in-the-middle domatic search",
            n: g.n(),
            limit: max_n,
        });
    }
    let universe = g.universe();
    let half = d / 2;
    let dominating = SetFamily::from_predicate(universe, |m| is_dominating(g, m));
    let cover = closed_neighbourhoods(g);
    // the other half must still meet every closed neighbourhood `half` times
    let filter = FrontierFilter::new(|y: SubsetMask| cover.sets().iter().all(|a| a.difference(y).rank() >= half));
    let counts = partition_numbers(&dominating, half, &filter)?;
    let halves: HashSet<SubsetMask> = counts.nonzero().map(|(x, _)| x).collect();
    let witness = counts
        .nonzero()
        .map(|(x, _)| x)
        .find(|&x| halves.contains(&universe.complement(x)));
    Ok(SolverReport {
        answer: witness.is_some(),
        witness,
        visited: counts.visited_count(),
        family_size: dominating.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::generators::*;

    #[test]
    fn domatic_decisions() {
        let k4 = complete(4).unwrap();
        assert!(domatic_packing_decision(&k4, 4).unwrap().answer);
        assert!(!domatic_packing_decision(&k4, 5).unwrap().answer);

        let c4 = cycle(4).unwrap();
        assert!(domatic_packing_decision(&c4, 2).unwrap().answer);
        assert!(!domatic_packing_decision(&c4, 3).unwrap().answer);

        // {centre} and the three leaves are disjoint dominating sets
        let star = star(3).unwrap();
        assert!(domatic_packing_decision(&star, 2).unwrap().answer);
        assert!(!domatic_packing_decision(&star, 3).unwrap().answer);
    }

    #[test]
    fn both_domatic_strategies_agree() {
        for g in [complete(4).unwrap(), cycle(5).unwrap(), star(3).unwrap(), petersen()] {
            for k in 1..=4 {
                let a = domatic_packing_decision_with(&g, k, DomaticStrategy::Filtered).unwrap();
                let b = domatic_packing_decision_with(&g, k, DomaticStrategy::Unfiltered).unwrap();
                assert_eq!(a.answer, b.answer, "k = {k}");
            }
        }
    }

    #[test]
    fn domatic_numbers() {
        assert_eq!(domatic_number(&complete(4).unwrap()).unwrap().answer, 4);
        assert_eq!(domatic_number(&cycle(5).unwrap()).unwrap().answer, 2);
        assert_eq!(domatic_number(&disjoint_cliques(2, 4).unwrap()).unwrap().answer, 4);
        assert_eq!(domatic_number(&edgeless(3).unwrap()).unwrap().answer, 1);
    }

    #[test]
    fn chromatic_mis_decisions() {
        let k4 = complete(4).unwrap();
        assert!(!chromatic_decision_mis(&k4, 3).unwrap().answer);
        assert!(chromatic_decision_mis(&k4, 4).unwrap().answer);
        let c5 = cycle(5).unwrap();
        assert!(!chromatic_decision_mis(&c5, 2).unwrap().answer);
        assert!(chromatic_decision_mis(&c5, 3).unwrap().answer);
        assert!(chromatic_decision_mis(&petersen(), 3).unwrap().answer);
    }

    #[test]
    fn chromatic_bipartite_decisions() {
        let c5 = cycle(5).unwrap();
        let r = chromatic_decision_bipartite(&c5, 3).unwrap();
        assert!(r.answer);
        let x = r.witness.unwrap();
        assert_eq!(x.rank(), 4);
        assert!(chromatic_decision_bipartite(&complete(4).unwrap(), 4).unwrap().answer);
        assert!(chromatic_decision_bipartite(&path(5).unwrap(), 2).unwrap().answer);
        assert!(!chromatic_decision_bipartite(&c5, 2).unwrap().answer);
        assert!(chromatic_decision_bipartite(&edgeless(3).unwrap(), 1).unwrap().answer);
    }

    #[test]
    fn chromatic_numbers() {
        for method in [ChromaticMethod::Mis, ChromaticMethod::Bipartite] {
            assert_eq!(chromatic_number(&edgeless(4).unwrap(), method).unwrap().answer, 1);
            assert_eq!(chromatic_number(&cycle(5).unwrap(), method).unwrap().answer, 3);
            assert_eq!(chromatic_number(&complete(4).unwrap(), method).unwrap().answer, 4);
            assert_eq!(chromatic_number(&petersen(), method).unwrap().answer, 3);
        }
    }

    #[test]
    fn meet_in_middle() {
        assert!(domatic_meet_in_middle(&complete(4).unwrap(), 4).unwrap().answer);
        assert!(domatic_meet_in_middle(&cycle(4).unwrap(), 2).unwrap().answer);
        assert!(domatic_meet_in_middle(&star(3).unwrap(), 2).unwrap().answer);
        assert!(!domatic_meet_in_middle(&cycle(5).unwrap(), 4).unwrap().answer);
        assert!(domatic_meet_in_middle(&cycle(4).unwrap(), 3).is_err());
        let big = edgeless(17).unwrap();
        assert!(matches!(
            domatic_meet_in_middle(&big, 2),
            Err(Error::InstanceTooLarge { limit: 16, .. })
        ));
    }

    #[test]
    fn zero_k_is_rejected() {
        let g = complete(3).unwrap();
        assert!(domatic_packing_decision(&g, 0).is_err());
        assert!(chromatic_decision_mis(&g, 0).is_err());
        assert!(chromatic_decision_bipartite(&g, 0).is_err());
    }
}
