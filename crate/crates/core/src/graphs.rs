//! Simple undirected graphs on at most 32 vertices, the vertex predicates the
//! solvers need, closed-neighbourhood covers, and enumerators for the three
//! set families the counting engine consumes.
//!
//! Vertices are 0-based internally; the CLI and `Display` output are 1-based.

use std::collections::VecDeque;

use num_bigint::BigUint;
use rand::Rng;

use crate::bitlattice::{BigCount, SetFamily, SubsetMask, Universe};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    universe: Universe,
    adjacency: Vec<SubsetMask>,
}

impl Graph {
    /// Edgeless graph on `n >= 1` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let universe = Universe::new(n)?;
        Ok(Self {
            universe,
            adjacency: vec![SubsetMask::EMPTY; n],
        })
    }

    /// Builds a graph from 0-based edges; repeated edges collapse.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let fresh = !self.adjacency[u].contains(v);
        self.adjacency[u] = self.adjacency[u].with(v);
        self.adjacency[v] = self.adjacency[v].with(u);
        Ok(fresh)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn vertices(&self) -> SubsetMask {
        self.universe.full()
    }

    pub fn neighbours(&self, v: usize) -> SubsetMask {
        self.adjacency[v]
    }

    pub fn closed_neighbourhood(&self, v: usize) -> SubsetMask {
        self.adjacency[v].with(v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].rank()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(|a| a.rank()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(|a| a.rank()).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.rank()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adjacency[u]
                .elements()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = SubsetMask::singleton(0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in self.adjacency[v].difference(seen).elements() {
                seen = seen.with(w);
                stack.push(w);
            }
        }
        seen == self.vertices()
    }
}

/// Every vertex outside `x` has a neighbour in `x`.
pub fn is_dominating(g: &Graph, x: SubsetMask) -> bool {
    dominated_by(g, x) == g.vertices()
}

/// Vertices in `x` or adjacent to it.
pub fn dominated_by(g: &Graph, x: SubsetMask) -> SubsetMask {
    x.elements()
        .fold(x, |acc, v| acc.union(g.neighbours(v)))
}

/// No two vertices of `x` are adjacent.
pub fn is_independent(g: &Graph, x: SubsetMask) -> bool {
    x.elements().all(|v| g.neighbours(v).is_disjoint(x))
}

/// `G[x]` is bipartite, decided by BFS two-colouring.
pub fn induces_bipartite(g: &Graph, x: SubsetMask) -> bool {
    let mut side = [SubsetMask::EMPTY; 2];
    let mut unseen = x;
    let mut queue = VecDeque::new();
    while let Some(start) = unseen.elements().next() {
        unseen = unseen.without(start);
        side[0] = side[0].with(start);
        queue.push_back((start, 0usize));
        while let Some((v, s)) = queue.pop_front() {
            let nbrs = g.neighbours(v).intersection(x);
            if !nbrs.is_disjoint(side[s]) {
                return false;
            }
            for w in nbrs.intersection(unseen).elements() {
                unseen = unseen.without(w);
                side[1 - s] = side[1 - s].with(w);
                queue.push_back((w, 1 - s));
            }
        }
    }
    true
}

/// The sets `A_v`, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighbourhoodCover {
    sets: Vec<SubsetMask>,
}

impl NeighbourhoodCover {
    pub fn sets(&self) -> &[SubsetMask] {
        &self.sets
    }

    pub fn set(&self, v: usize) -> SubsetMask {
        self.sets[v]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.sets.iter().map(|s| s.rank()).collect()
    }

    pub fn total_size(&self) -> usize {
        self.sets.iter().map(|s| s.rank()).sum()
    }

    /// Number of sets containing `u`.
    pub fn coverage(&self, u: usize) -> usize {
        self.sets.iter().filter(|s| s.contains(u)).count()
    }
}

/// `A_v = {v} ∪ N(v)` for every vertex.
pub fn closed_neighbourhoods(g: &Graph) -> NeighbourhoodCover {
    NeighbourhoodCover {
        sets: (0..g.n()).map(|v| g.closed_neighbourhood(v)).collect(),
    }
}

/// Adds each vertex `u` of degree `d(u) < Δ` to the first `Δ - d(u)` sets
/// (ascending `v`) that do not yet contain it, so that every vertex lies in
/// exactly `Δ + 1` sets.
pub fn pad_neighbourhoods(cover: &NeighbourhoodCover, g: &Graph) -> Result<NeighbourhoodCover> {
    let n = g.n();
    let delta = g.max_degree();
    if n < delta + 1 {
        return Err(Error::PaddingImpossible { n, max_degree: delta });
    }
    let mut sets = cover.sets.clone();
    for u in 0..n {
        let mut missing = (delta + 1).saturating_sub(sets.iter().filter(|s| s.contains(u)).count());
        for set in sets.iter_mut() {
            if missing == 0 {
                break;
            }
            if !set.contains(u) {
                *set = set.with(u);
                missing -= 1;
            }
        }
        if missing > 0 {
            return Err(Error::PaddingImpossible { n, max_degree: delta });
        }
    }
    Ok(NeighbourhoodCover { sets })
}

/// `|D|` by a scan of all `2^n` vertex subsets.
pub fn count_dominating_sets(g: &Graph) -> BigCount {
    let full = g.vertices();
    let count = g
        .universe()
        .masks()
        .filter(|&m| dominated_by(g, m) == full)
        .count();
    BigUint::from(count)
}

/// All maximal independent sets, by Bron–Kerbosch with pivoting on the
/// complement graph.
pub fn enumerate_maximal_independent(g: &Graph) -> SetFamily {
    let u = g.universe();
    let non_nbrs: Vec<SubsetMask> = (0..g.n())
        .map(|v| u.complement(g.closed_neighbourhood(v)))
        .collect();
    let mut out = Vec::new();
    bron_kerbosch(&non_nbrs, SubsetMask::EMPTY, u.full(), SubsetMask::EMPTY, &mut out);
    debug_assert!(out.iter().all(|&s| is_maximal_independent(g, s)));
    SetFamily::new(u, out).expect("Bron–Kerbosch reports each clique once")
}

fn bron_kerbosch(
    nbrs: &[SubsetMask],
    r: SubsetMask,
    mut p: SubsetMask,
    mut x: SubsetMask,
    out: &mut Vec<SubsetMask>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .elements()
        .max_by_key(|&u| p.intersection(nbrs[u]).rank())
        .expect("p is nonempty");
    for v in p.difference(nbrs[pivot]).elements() {
        bron_kerbosch(nbrs, r.with(v), p.intersection(nbrs[v]), x.intersection(nbrs[v]), out);
        p = p.without(v);
        x = x.with(v);
    }
}

fn is_maximal_independent(g: &Graph, s: SubsetMask) -> bool {
    is_independent(g, s) && g.universe().complement(s).elements().all(|v| !is_independent(g, s.with(v)))
}

/// All inclusion-minimal dominating sets.
pub fn enumerate_minimal_dominating(g: &Graph) -> SetFamily {
    let mut out = Vec::new();
    let mut search = MinDomSearch { g, out: &mut out };
    search.branch(0, SubsetMask::EMPTY, SubsetMask::EMPTY);
    out.retain(|&d| is_minimal_dominating(g, d));
    SetFamily::new(g.universe(), out).expect("each leaf is a distinct vertex set")
}

struct MinDomSearch<'a> {
    g: &'a Graph,
    out: &'a mut Vec<SubsetMask>,
}

impl MinDomSearch<'_> {
    // Vertices below `next` are decided; `excluded` holds the decided-out ones.
    fn branch(&mut self, next: usize, chosen: SubsetMask, excluded: SubsetMask) {
        let g = self.g;
        let available = g.universe().complement(excluded);
        // some vertex can no longer be dominated
        if (0..g.n()).any(|w| g.closed_neighbourhood(w).is_disjoint(available)) {
            return;
        }
        // a chosen vertex without a private neighbour stays redundant forever
        for v in chosen.elements() {
            let others = dominated_by(g, chosen.without(v));
            if g.closed_neighbourhood(v).is_subset_of(others) {
                return;
            }
        }
        if next == g.n() {
            self.out.push(chosen);
            return;
        }
        self.branch(next + 1, chosen.with(next), excluded);
        self.branch(next + 1, chosen, excluded.with(next));
    }
}

fn is_minimal_dominating(g: &Graph, d: SubsetMask) -> bool {
    is_dominating(g, d) && d.elements().all(|v| !is_dominating(g, d.without(v)))
}

/// All vertex sets inducing a bipartite subgraph that are maximal under
/// inclusion among such sets.
pub fn enumerate_maximal_bipartite(g: &Graph) -> SetFamily {
    let mut out = Vec::new();
    max_bipartite_branch(g, 0, SubsetMask::EMPTY, SubsetMask::EMPTY, &mut out);
    out.retain(|&b| is_maximal_bipartite(g, b));
    SetFamily::new(g.universe(), out).expect("each leaf is a distinct vertex set")
}

fn max_bipartite_branch(
    g: &Graph,
    next: usize,
    chosen: SubsetMask,
    excluded: SubsetMask,
    out: &mut Vec<SubsetMask>,
) {
    // An excluded vertex with at most one neighbour left in reach can always
    // be added back, so the final set would not be maximal.
    let reachable = g.universe().complement(excluded);
    if excluded
        .elements()
        .any(|w| g.neighbours(w).intersection(reachable).rank() <= 1)
    {
        return;
    }
    if next == g.n() {
        out.push(chosen);
        return;
    }
    let with = chosen.with(next);
    if induces_bipartite(g, with) {
        max_bipartite_branch(g, next + 1, with, excluded, out);
    }
    max_bipartite_branch(g, next + 1, chosen, excluded.with(next), out);
}

fn is_maximal_bipartite(g: &Graph, b: SubsetMask) -> bool {
    induces_bipartite(g, b)
        && g.universe()
            .complement(b)
            .elements()
            .all(|v| !induces_bipartite(g, b.with(v)))
}

/// Small named graphs and random instance generators.
pub mod generators {
    use super::*;

    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::new(n)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Centre is vertex 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("Petersen graph is valid")
    }

    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        let n = parts.iter().map(Graph::n).sum();
        let mut g = Graph::new(n)?;
        let mut offset = 0;
        for p in parts {
            for (u, v) in p.edges() {
                g.add_edge(u + offset, v + offset)?;
            }
            offset += p.n();
        }
        Ok(g)
    }

    /// `copies` disjoint copies of `K_size`.
    pub fn disjoint_cliques(copies: usize, size: usize) -> Result<Graph> {
        let k = complete(size)?;
        disjoint_union(&vec![k; copies])
    }

    /// Each pair becomes an edge with probability `p`, skipped when either
    /// endpoint already has degree `max_degree`.
    pub fn random_bounded_degree<R: Rng + ?Sized>(n: usize, max_degree: usize, p: f64, rng: &mut R) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        shuffle(&mut pairs, rng);
        for (u, v) in pairs {
            if g.degree(u) < max_degree && g.degree(v) < max_degree && rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Random spanning tree plus independent extra edges with probability `p`.
    pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for v in 1..n {
            let parent = rng.gen_range(0..v);
            g.add_edge(parent, v)?;
        }
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v)?;
                }
            }
        }
        Ok(g)
    }

    fn shuffle<T, R: Rng + ?Sized>(items: &mut [T], rng: &mut R) {
        use rand::seq::SliceRandom;
        items.shuffle(rng);
    }
}

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;

    fn set(elems: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(elems.iter().map(|e| e - 1))
    }

    #[test]
    fn graph_validation() {
        assert_eq!(Graph::new(0), Err(Error::EmptyGraph));
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert!(g.add_edge(0, 1).unwrap());
        assert!(!g.add_edge(1, 0).unwrap());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn closed_neighbourhood_examples() {
        let k3 = complete(3).unwrap();
        assert!(closed_neighbourhoods(&k3).sets().iter().all(|&a| a == set(&[1, 2, 3])));
        let p3 = path(3).unwrap();
        assert_eq!(
            closed_neighbourhoods(&p3).sets(),
            &[set(&[1, 2]), set(&[1, 2, 3]), set(&[2, 3])]
        );
        assert_eq!(closed_neighbourhoods(&Graph::new(1).unwrap()).sets(), &[set(&[1])]);
    }

    #[test]
    fn padding_examples() {
        let c5 = cycle(5).unwrap();
        let cover = closed_neighbourhoods(&c5);
        assert_eq!(pad_neighbourhoods(&cover, &c5).unwrap(), cover);

        let p3 = path(3).unwrap();
        let padded = pad_neighbourhoods(&closed_neighbourhoods(&p3), &p3).unwrap();
        assert_eq!(padded.sets(), &[set(&[1, 2, 3]); 3]);
        assert_eq!(padded.sizes(), vec![3, 3, 3]);

        let k4 = complete(4).unwrap();
        let padded = pad_neighbourhoods(&closed_neighbourhoods(&k4), &k4).unwrap();
        assert_eq!(padded.total_size(), 16);
    }

    #[test]
    fn padding_gives_exact_coverage() {
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (4, 5)]).unwrap();
        let padded = pad_neighbourhoods(&closed_neighbourhoods(&g), &g).unwrap();
        let delta = g.max_degree();
        assert_eq!(padded.total_size(), (delta + 1) * g.n());
        assert!((0..g.n()).all(|u| padded.coverage(u) == delta + 1));
    }

    #[test]
    fn predicates() {
        let c5 = cycle(5).unwrap();
        assert!(is_dominating(&c5, c5.vertices()));
        assert!(!is_independent(&c5, set(&[1, 2])));
        assert!(is_independent(&c5, set(&[1, 3])));
        for v in 0..5 {
            assert!(induces_bipartite(&c5, c5.vertices().without(v)));
        }
        assert!(!induces_bipartite(&c5, c5.vertices()));
        assert!(induces_bipartite(&c5, SubsetMask::EMPTY));
    }

    #[test]
    fn maximal_independent_examples() {
        let k4 = complete(4).unwrap();
        let mis = enumerate_maximal_independent(&k4);
        assert_eq!(mis.members(), &[set(&[1]), set(&[2]), set(&[3]), set(&[4])]);

        let two_triangles = disjoint_cliques(2, 3).unwrap();
        assert_eq!(enumerate_maximal_independent(&two_triangles).len(), 9);
    }

    #[test]
    fn minimal_dominating_of_five_cycle() {
        // Only the five non-adjacent pairs dominate C5 minimally; an adjacent
        // pair {1,2} misses vertex 4.
        let c5 = cycle(5).unwrap();
        let md = enumerate_minimal_dominating(&c5);
        assert_eq!(md.len(), 5);
        assert!(md.iter().all(|d| d.rank() == 2 && is_independent(&c5, d)));
    }

    #[test]
    fn maximal_bipartite_of_small_graphs() {
        let k4 = complete(4).unwrap();
        let mb = enumerate_maximal_bipartite(&k4);
        assert_eq!(mb.len(), 6);
        assert!(mb.iter().all(|b| b.rank() == 2));

        let e = Graph::new(4).unwrap();
        assert_eq!(enumerate_maximal_bipartite(&e).members(), &[e.vertices()]);
    }

    #[test]
    fn dominating_counts() {
        assert_eq!(count_dominating_sets(&complete(5).unwrap()), BigUint::from(31u8));
        // 8 sets containing the centre, plus the set of all leaves
        assert_eq!(count_dominating_sets(&star(3).unwrap()), BigUint::from(9u8));
        assert_eq!(count_dominating_sets(&disjoint_cliques(2, 3).unwrap()), BigUint::from(49u8));
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert!(p.is_connected());
    }
}
