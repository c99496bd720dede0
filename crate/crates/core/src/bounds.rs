//! Closed-form running-time bases and empirical checks of the counting
//! bounds for graphs of maximum degree `Δ`.
//!
//! A bound of the form `B^{n/(Δ+1)}` is compared against an exact count `c`
//! as `c^{Δ+1} <= B^n` in big integers, so no floating-point rounding enters
//! the verdict. The `f64` value is reported for display only.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bitlattice::{upper_closure, upper_closure_filtered, SetFamily, SubsetMask, Universe};
use crate::error::{Error, Result};
use crate::graphs::{count_dominating_sets, enumerate_maximal_bipartite, enumerate_minimal_dominating, is_dominating, Graph, NeighbourhoodCover};

pub const DOMINATING_BOUND_MAX_N: usize = 16;
pub const UPSET_BOUND_MAX_N: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundVariant {
    /// `2^{Δ+1} - 1`: all dominating sets.
    Dominating,
    /// `2^{Δ+1} - 2`: dominating sets whose complement also dominates.
    DominatingTrimmed,
    /// `2^{Δ+1} - Δ - 1`: supersets of maximal induced-bipartite sets.
    Chromatic,
}

impl BoundVariant {
    pub const ALL: [BoundVariant; 3] = [
        BoundVariant::Dominating,
        BoundVariant::DominatingTrimmed,
        BoundVariant::Chromatic,
    ];

    fn deficit(self, delta: usize) -> usize {
        match self {
            BoundVariant::Dominating => 1,
            BoundVariant::DominatingTrimmed => 2,
            BoundVariant::Chromatic => delta + 1,
        }
    }
}

impl fmt::Display for BoundVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundVariant::Dominating => "dom",
            BoundVariant::DominatingTrimmed => "dom_trimmed",
            BoundVariant::Chromatic => "chrom",
        })
    }
}

/// `B = 2^{Δ+1} - deficit` as an exact integer (zero if negative).
pub fn bound_numerator(delta: usize, variant: BoundVariant) -> BigUint {
    let full = BigUint::one() << (delta + 1);
    let deficit = BigUint::from(variant.deficit(delta));
    if full > deficit {
        full - deficit
    } else {
        BigUint::zero()
    }
}

/// Per-vertex base `B^{1/(Δ+1)}`; the bound on `n` vertices is `base^n`.
pub fn bound_base(delta: usize, variant: BoundVariant) -> f64 {
    let b = 2f64.powi(delta as i32 + 1) - variant.deficit(delta) as f64;
    b.max(0.0).powf(1.0 / (delta as f64 + 1.0))
}

/// `B^{n/(Δ+1)}` in floating point.
pub fn bound_value(n: usize, delta: usize, variant: BoundVariant) -> f64 {
    bound_base(delta, variant).powi(n as i32)
}

/// Exact test of `count <= B^{n/(Δ+1)}`.
pub fn within_bound(count: &BigUint, n: usize, delta: usize, variant: BoundVariant) -> bool {
    count.pow(delta as u32 + 1) <= bound_numerator(delta, variant).pow(n as u32)
}

/// Exact test of `count == B^{n/(Δ+1)}`.
pub fn meets_bound(count: &BigUint, n: usize, delta: usize, variant: BoundVariant) -> bool {
    count.pow(delta as u32 + 1) == bound_numerator(delta, variant).pow(n as u32)
}

/// Subsets `P_1, .., P_m` of a universe covering each element at least
/// `delta` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSystem {
    universe: Universe,
    parts: Vec<SubsetMask>,
    delta: usize,
}

impl CoverSystem {
    pub fn new(universe: Universe, parts: Vec<SubsetMask>, delta: usize) -> Result<Self> {
        for &p in &parts {
            universe.check(p)?;
        }
        for element in 0..universe.size() {
            let found = parts.iter().filter(|p| p.contains(element)).count();
            if found < delta {
                return Err(Error::CoverageBelowDelta { element, found, delta });
            }
        }
        Ok(Self { universe, parts, delta })
    }

    /// The padded closed neighbourhoods of a graph, `δ = Δ + 1`.
    pub fn from_neighbourhoods(g: &Graph, padded: &NeighbourhoodCover) -> Result<Self> {
        Self::new(g.universe(), padded.sets().to_vec(), g.max_degree() + 1)
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn parts(&self) -> &[SubsetMask] {
        &self.parts
    }

    pub fn delta(&self) -> usize {
        self.delta
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShearerReport {
    /// `|F|^δ`
    pub lhs: BigUint,
    /// `Π_ℓ |F_ℓ|` over the projections `F_ℓ = {F ∩ P_ℓ}`
    pub rhs: BigUint,
    pub holds: bool,
}

/// Evaluates both sides of `|F|^δ <= Π_ℓ |{F ∩ P_ℓ : F ∈ F}|`.
pub fn shearer_check(system: &CoverSystem, family: &SetFamily) -> Result<ShearerReport> {
    if family.universe() != system.universe {
        return Err(Error::UniverseMismatch {
            expected: system.universe.size(),
            found: family.universe().size(),
        });
    }
    let lhs = BigUint::from(family.len()).pow(system.delta as u32);
    let rhs = system
        .parts
        .iter()
        .map(|&p| {
            let projection = SetFamily::collect(system.universe, family.iter().map(|f| f.intersection(p)))
                .expect("projections stay inside the universe");
            BigUint::from(projection.len())
        })
        .product::<BigUint>();
    let holds = lhs <= rhs;
    Ok(ShearerReport { lhs, rhs, holds })
}

/// `Π_v (2^{a_v} - 1)` over the sets of a neighbourhood cover.
pub fn neighbourhood_product(cover: &NeighbourhoodCover) -> BigUint {
    cover
        .sizes()
        .into_iter()
        .map(|a| (BigUint::one() << a) - 1u8)
        .product()
}

#[derive(Debug, Clone, PartialEq)]
pub struct DominatingBoundReport {
    pub n: usize,
    pub max_degree: usize,
    pub count: BigUint,
    pub bound: f64,
    pub holds: bool,
    pub tight: bool,
}

fn guard(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::InstanceTooLarge { what, n, limit });
    }
    Ok(())
}

/// Number of dominating sets against `(2^{Δ+1} - 1)^{n/(Δ+1)}`.
pub fn verify_dominating_bound(g: &Graph) -> Result<DominatingBoundReport> {
    guard("dominating-set bound check", g.n(), DOMINATING_BOUND_MAX_N)?;
    let (n, delta) = (g.n(), g.max_degree());
    let count = count_dominating_sets(g);
    Ok(DominatingBoundReport {
        n,
        max_degree: delta,
        bound: bound_value(n, delta, BoundVariant::Dominating),
        holds: within_bound(&count, n, delta, BoundVariant::Dominating),
        tight: meets_bound(&count, n, delta, BoundVariant::Dominating),
        count,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct UpsetBoundReport {
    pub n: usize,
    pub max_degree: usize,
    /// `|↑ max B|`
    pub bipartite_upset: usize,
    pub chromatic_bound: f64,
    pub chromatic_holds: bool,
    /// Masks processed by the filtered domatic sweep, seeds included.
    pub domatic_visited: usize,
    /// Visited masks whose complement dominates; the seeds outside this
    /// region are not covered by the bound.
    pub domatic_region: usize,
    pub domatic_bound: f64,
    pub domatic_holds: bool,
}

/// Masks the filtered domatic sweep processes: the closure of the minimal
/// dominating sets, only growing through masks whose complement dominates.
pub fn filtered_domatic_visits(g: &Graph) -> SetFamily {
    let universe = g.universe();
    upper_closure_filtered(&enumerate_minimal_dominating(g), |y| is_dominating(g, universe.complement(y)))
}

/// `|↑ max B|` against `(2^{Δ+1} - Δ - 1)^{n/(Δ+1)}` and the trimmed
/// domatic region against `(2^{Δ+1} - 2)^{n/(Δ+1)}`.
pub fn verify_upset_bounds(g: &Graph) -> Result<UpsetBoundReport> {
    guard("upper-closure bound check", g.n(), UPSET_BOUND_MAX_N)?;
    let (n, delta) = (g.n(), g.max_degree());
    let universe = g.universe();
    let bipartite_upset = upper_closure(&enumerate_maximal_bipartite(g)).len();
    let visits = filtered_domatic_visits(g);
    let domatic_region = visits
        .iter()
        .filter(|&x| is_dominating(g, universe.complement(x)))
        .count();
    Ok(UpsetBoundReport {
        n,
        max_degree: delta,
        bipartite_upset,
        chromatic_bound: bound_value(n, delta, BoundVariant::Chromatic),
        chromatic_holds: within_bound(&BigUint::from(bipartite_upset), n, delta, BoundVariant::Chromatic),
        domatic_visited: visits.len(),
        domatic_region,
        domatic_bound: bound_value(n, delta, BoundVariant::DominatingTrimmed),
        domatic_holds: within_bound(&BigUint::from(domatic_region), n, delta, BoundVariant::DominatingTrimmed),
    })
}
