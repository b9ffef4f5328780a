//! One level of the container descent.
//!
//! Given an `(i+1)`-uniform hypergraph and an independent set `I`, the step
//! repeatedly picks the first vertex of `I` in the max-degree order of the
//! surviving hypergraph, adds that vertex's link to the new `i`-uniform level
//! hypergraph, and prunes the survivor: the whole initial segment up to the
//! pick is deleted, together with every edge containing an `ℓ`-set whose
//! degree in the level hypergraph has reached half of its threshold.
//!
//! Everything is deterministic in the inputs; ties in the max-degree order
//! are broken by ascending vertex id, which depends only on the vertex set.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::hypergraph::{subset_degrees, Edge, UniformHypergraph};
use crate::vertex_set::VertexSet;

/// Degree thresholds `Δ_ℓ^i` for `1 <= ℓ <= i <= k`.
///
/// The top row is the source hypergraph's maximum degrees; lower rows follow
/// `Δ_ℓ^i = max(2 Δ_{ℓ+1}^{i+1}, p Δ_ℓ^{i+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdTable {
    k: usize,
    p: Rational,
    // rows[i - 1][ell - 1]
    rows: Vec<Vec<Rational>>,
}

impl ThresholdTable {
    /// Builds the table from the top row `(Δ_1^k, …, Δ_k^k)`.
    pub fn from_base(base: Vec<Rational>, p: Rational) -> Result<Self> {
        if p <= Rational::zero() || p >= Rational::one() {
            return Err(Error::input(format!(
                "p must lie in (0, 1), got {}",
                exact::format_rational(&p)
            )));
        }
        let k = base.len();
        if k == 0 {
            return Err(Error::input("threshold table needs k >= 1"));
        }
        let mut rows = vec![Vec::new(); k];
        rows[k - 1] = base;
        let two = exact::int(2);
        for i in (1..k).rev() {
            let above = &rows[i];
            let row: Vec<Rational> = (1..=i)
                .map(|ell| {
                    let a = &two * &above[ell];
                    let b = &p * &above[ell - 1];
                    a.max(b)
                })
                .collect();
            rows[i - 1] = row;
        }
        Ok(ThresholdTable { k, p, rows })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    /// `Δ_ℓ^i`; panics outside `1 <= ℓ <= i <= k`.
    pub fn get(&self, ell: usize, i: usize) -> &Rational {
        assert!(
            ell >= 1 && ell <= i && i <= self.k,
            "Δ_{ell}^{i} outside table"
        );
        &self.rows[i - 1][ell - 1]
    }

    /// Smallest integer degree meeting `deg >= Δ_ℓ^i / 2`.
    pub(crate) fn half_ceiling(&self, ell: usize, i: usize) -> u64 {
        let half = self.get(ell, i) / exact::int(2);
        exact::ceil_to_u64(&half).unwrap_or(u64::MAX)
    }
}

/// Threshold table of `H` with base row `Δ_ℓ(H)`.
pub fn threshold_table(h: &UniformHypergraph, p: &Rational) -> Result<ThresholdTable> {
    let base = (1..=h.k())
        .map(|ell| {
            let top = subset_degrees(h, ell).into_values().max().unwrap_or(0);
            exact::from_u64(top)
        })
        .collect();
    ThresholdTable::from_base(base, p.clone())
}

/// Greedy removal order of a vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxDegreeOrder {
    order: Vec<u32>,
}

impl MaxDegreeOrder {
    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn position(&self, u: u32) -> Option<usize> {
        self.order.iter().position(|&x| x == u)
    }

    /// `W(u)`: the initial segment ending with `u`.
    pub fn segment(&self, u: u32) -> Option<&[u32]> {
        self.position(u).map(|j| &self.order[..=j])
    }
}

/// Max-degree order of `live` in `G[live]`: each vertex has maximum degree
/// among those not yet ordered, ties going to the smaller id.
pub fn max_degree_order(g: &UniformHypergraph, live: &VertexSet) -> Result<MaxDegreeOrder> {
    if !live.is_subset(g.vertices()) {
        return Err(Error::input("live set is not a subset of V(G)"));
    }
    let mut state = LiveEdges::new(g.edges(), g.capacity());
    for (ei, e) in g.edges().iter().enumerate() {
        if !live.contains_all(&e.vertices) {
            state.kill(ei);
        }
    }
    let order = state.greedy_prefix(live, |_| false);
    Ok(MaxDegreeOrder { order })
}

/// `M_ℓ^i(G)`: ℓ-sets with `deg_G(T) >= Δ_ℓ^i / 2`, in lexicographic order.
///
/// When `Δ_ℓ^i = 0` every ℓ-subset of `V(G)` qualifies.
pub fn high_degree_sets(
    g: &UniformHypergraph,
    ell: usize,
    table: &ThresholdTable,
    i: usize,
) -> Result<Vec<Vec<u32>>> {
    if g.k() != i || i > table.k() {
        return Err(Error::input(format!(
            "level hypergraph has uniformity {}, expected {i}",
            g.k()
        )));
    }
    if ell == 0 || ell > i {
        return Err(Error::input(format!("ℓ = {ell} outside [1, {i}]")));
    }
    if table.get(ell, i).is_zero() {
        return Ok(g.vertices().iter().combinations(ell).collect());
    }
    let need = table.half_ceiling(ell, i);
    let mut sets: Vec<Vec<u32>> = subset_degrees(g, ell)
        .into_iter()
        .filter(|(_, d)| *d >= need)
        .map(|(t, _)| t)
        .collect();
    sets.sort();
    Ok(sets)
}

/// Output of one level: `(A_i, B_i, H_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScytheResult {
    /// Vertices of the pruned hypergraph after the last iteration (`A_i`).
    pub remaining: VertexSet,
    /// Selected vertices `u_0, u_1, …` in selection order (`B_i`).
    pub selected: Vec<u32>,
    /// The `i`-uniform hypergraph `H_i` on `V(H)`.
    pub level: UniformHypergraph,
    /// True iff the step stopped because `I` missed the surviving vertices.
    pub stopped_early: bool,
    /// `|W(u_j)|` for every completed iteration.
    pub segment_lengths: Vec<usize>,
}

impl ScytheResult {
    pub fn selected_set(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.remaining.capacity());
        for &u in &self.selected {
            s.insert(u);
        }
        s
    }
}

/// Runs at most `b` iterations of the level step on `(H_{i+1}, I)`.
pub fn scythe_step(
    h_next: &UniformHypergraph,
    independent: &VertexSet,
    table: &ThresholdTable,
    b: usize,
    i: usize,
) -> Result<ScytheResult> {
    if i == 0 || i >= table.k() {
        return Err(Error::input(format!(
            "level {i} outside [1, {}]",
            table.k().saturating_sub(1)
        )));
    }
    if h_next.k() != i + 1 {
        return Err(Error::input(format!(
            "level {i} needs a {}-uniform hypergraph, got {}-uniform",
            i + 1,
            h_next.k()
        )));
    }
    if b == 0 {
        return Err(Error::input("b must be at least 1"));
    }
    if independent.capacity() != h_next.capacity() || !independent.is_subset(h_next.vertices()) {
        return Err(Error::input("I is not a subset of V(H)"));
    }
    if !h_next.is_independent(independent) {
        return Err(Error::contract("I is not independent in the input hypergraph"));
    }

    let base_vertices = h_next.vertices().clone();
    let need: Vec<u64> = (1..=i).map(|ell| table.half_ceiling(ell, i)).collect();

    let mut survivor = LiveEdges::new(h_next.edges(), h_next.capacity());
    let mut live = base_vertices.clone();
    let mut level_edges: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    let mut level_degrees: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut selected = Vec::with_capacity(b);
    let mut segment_lengths = Vec::with_capacity(b);

    for _ in 0..b {
        if !independent.intersects(&live) {
            // step (1): the level hypergraph is reset to the empty one
            return Ok(ScytheResult {
                remaining: VertexSet::empty(base_vertices.capacity()),
                selected,
                level: UniformHypergraph::edgeless(i, base_vertices),
                stopped_early: true,
                segment_lengths,
            });
        }

        let segment = survivor.greedy_prefix(&live, |u| independent.contains(u));
        let u = *segment.last().expect("I meets the live set");
        debug_assert!(independent.contains(u));
        selected.push(u);
        segment_lengths.push(segment.len());

        for &ei in &survivor.incidence[u as usize] {
            if !survivor.alive[ei] {
                continue;
            }
            let e = &survivor.edges[ei];
            let link: Vec<u32> = e.vertices.iter().copied().filter(|&x| x != u).collect();
            for size in 1..=i {
                for t in link.iter().copied().combinations(size) {
                    *level_degrees.entry(t).or_insert(0) += e.multiplicity;
                }
            }
            *level_edges.entry(link).or_insert(0) += e.multiplicity;
        }

        for &w in &segment {
            live.remove(w);
            for idx in 0..survivor.incidence[w as usize].len() {
                let ei = survivor.incidence[w as usize][idx];
                if survivor.alive[ei] {
                    survivor.kill(ei);
                }
            }
        }

        for ei in 0..survivor.edges.len() {
            if !survivor.alive[ei] {
                continue;
            }
            let verts = &survivor.edges[ei].vertices;
            let hit = (1..=i).any(|ell| {
                let threshold = need[ell - 1];
                verts
                    .iter()
                    .copied()
                    .combinations(ell)
                    .any(|t| level_degrees.get(&t).copied().unwrap_or(0) >= threshold)
            });
            if hit {
                survivor.kill(ei);
            }
        }
    }

    Ok(ScytheResult {
        remaining: live,
        selected,
        level: UniformHypergraph::from_canonical(i, base_vertices, level_edges),
        stopped_early: false,
        segment_lengths,
    })
}

/// Edge list with liveness flags and live degrees, indexed by vertex id.
struct LiveEdges<'a> {
    edges: &'a [Edge],
    alive: Vec<bool>,
    incidence: Vec<Vec<usize>>,
    degree: Vec<u64>,
}

impl<'a> LiveEdges<'a> {
    fn new(edges: &'a [Edge], capacity: u32) -> Self {
        let mut incidence = vec![Vec::new(); capacity as usize + 1];
        let mut degree = vec![0u64; capacity as usize + 1];
        for (ei, e) in edges.iter().enumerate() {
            for &v in &e.vertices {
                incidence[v as usize].push(ei);
                degree[v as usize] += e.multiplicity;
            }
        }
        LiveEdges {
            edges,
            alive: vec![true; edges.len()],
            incidence,
            degree,
        }
    }

    fn kill(&mut self, ei: usize) {
        debug_assert!(self.alive[ei]);
        self.alive[ei] = false;
        let e = &self.edges[ei];
        for &v in &e.vertices {
            self.degree[v as usize] -= e.multiplicity;
        }
    }

    /// Max-degree order of `live` over the live edges, cut after the first
    /// vertex satisfying `stop` (or run to completion).
    fn greedy_prefix(&self, live: &VertexSet, stop: impl Fn(u32) -> bool) -> Vec<u32> {
        let mut degree = self.degree.clone();
        let mut gone = vec![false; self.edges.len()];
        let mut remaining = live.clone();
        let mut order = Vec::new();
        loop {
            let mut best: Option<(u32, u64)> = None;
            for v in remaining.iter() {
                let d = degree[v as usize];
                if best.is_none_or(|(_, bd)| d > bd) {
                    best = Some((v, d));
                }
            }
            let Some((u, _)) = best else {
                return order;
            };
            order.push(u);
            if stop(u) {
                return order;
            }
            remaining.remove(u);
            for &ei in &self.incidence[u as usize] {
                if self.alive[ei] && !gone[ei] {
                    gone[ei] = true;
                    let e = &self.edges[ei];
                    for &w in &e.vertices {
                        degree[w as usize] -= e.multiplicity;
                    }
                }
            }
        }
    }
}
