//! Builders for the application hypergraphs and their density invariants.
//!
//! Vertex indexing is canonical and stable:
//!
//! * grid points of `[n]^ℓ` are numbered row-major, `(x_1, …, x_ℓ) ↦
//!   1 + Σ (x_d - 1) n^(ℓ-d)`;
//! * the t-subsets of `[n]` (edges of `K_n^t`) are numbered in lexicographic
//!   order of their ascending tuples;
//! * the edges of a blow-up `H(n)` are numbered by the index of the base edge
//!   `{a, b}` (`a < b`, in the graph's canonical edge order) and then the pair
//!   `(x, y)` in row-major order, `id = 1 + e·n² + (x - 1)·n + (y - 1)`.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::hypergraph::{subset_degrees, UniformHypergraph};
use crate::vertex_set::VertexSet;

/// A small simple t-uniform (hyper)graph on `[1, v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGraph {
    t: usize,
    v: u32,
    edges: Vec<Vec<u32>>,
}

impl SmallGraph {
    pub fn new<I, E>(t: usize, v: u32, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u32]>,
    {
        if t == 0 {
            return Err(Error::input("edge arity must be at least 1"));
        }
        let mut seen = BTreeSet::new();
        for e in edges {
            let mut e = e.as_ref().to_vec();
            e.sort_unstable();
            if e.len() != t {
                return Err(Error::input(format!("edge {e:?} does not have {t} vertices")));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::input(format!("edge {e:?} repeats a vertex")));
            }
            if e.iter().any(|&x| x == 0 || x > v) {
                return Err(Error::input(format!("edge {e:?} leaves [1, {v}]")));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::input(format!("edge {e:?} listed twice")));
            }
        }
        Ok(SmallGraph {
            t,
            v,
            edges: seen.into_iter().collect(),
        })
    }

    pub fn complete(v: u32) -> Self {
        Self::new(2, v, (1..=v).tuple_combinations().map(|(a, b)| [a, b])).expect("valid")
    }

    pub fn path(v: u32) -> Self {
        Self::new(2, v, (1..v).map(|a| [a, a + 1])).expect("valid")
    }

    pub fn cycle(v: u32) -> Self {
        Self::new(2, v, (1..=v).map(|a| [a, a % v + 1])).expect("valid")
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn vertex_count(&self) -> u32 {
        self.v
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    /// Same graph with vertices renamed by `perm` (`perm[i-1]` is the new id of `i`).
    pub fn relabel(&self, perm: &[u32]) -> Result<Self> {
        Self::new(
            self.t,
            self.v,
            self.edges
                .iter()
                .map(|e| e.iter().map(|&x| perm[x as usize - 1]).collect::<Vec<_>>()),
        )
    }

    /// Edge-list format: header `t v e`, then `e` lines of `t` ids.
    pub fn parse_text(text: &str) -> Result<Self> {
        let h = UniformHypergraph::parse_text(text)?;
        if h.edges().iter().any(|e| e.multiplicity > 1) {
            return Err(Error::input("small graphs must not repeat edges"));
        }
        Self::new(h.k(), h.capacity(), h.edges().iter().map(|e| e.vertices.clone()))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.t, self.v, self.edges.len());
        for e in &self.edges {
            out.push_str(&e.iter().join(" "));
            out.push('\n');
        }
        out
    }

    /// Number of vertex permutations that map the edge set onto itself.
    pub fn automorphism_count(&self) -> u64 {
        let edges: BTreeSet<Vec<u32>> = self.edges.iter().cloned().collect();
        (1..=self.v)
            .permutations(self.v as usize)
            .filter(|perm| {
                self.edges.iter().all(|e| {
                    let mut img: Vec<u32> = e.iter().map(|&x| perm[x as usize - 1]).collect();
                    img.sort_unstable();
                    edges.contains(&img)
                })
            })
            .count() as u64
    }

    fn induced_edge_count(&self, u: &[u32]) -> usize {
        self.edges
            .iter()
            .filter(|e| e.iter().all(|x| u.contains(x)))
            .count()
    }
}

/// k-term arithmetic progressions in `[n]`, one simple edge per `(a, d)`.
pub fn ap_hypergraph(n: u32, k: u32) -> Result<UniformHypergraph> {
    if k < 3 {
        return Err(Error::input(format!("progression length k = {k} must be at least 3")));
    }
    if n < k {
        return Err(Error::input(format!("n = {n} is smaller than k = {k}")));
    }
    progression_hypergraph(n, k - 1, 1)
}

/// `{a, a + d^r, …, a + k d^r}` in `[n]`; `(k+1)`-uniform.
pub fn poly_ap_hypergraph(n: u32, k: u32, r: u32) -> Result<UniformHypergraph> {
    if k < 1 || r < 1 {
        return Err(Error::input("polynomial progressions need k >= 1 and r >= 1"));
    }
    if n < k + 1 {
        return Err(Error::input(format!("n = {n} is smaller than k + 1 = {}", k + 1)));
    }
    progression_hypergraph(n, k, r)
}

fn progression_hypergraph(n: u32, steps: u32, r: u32) -> Result<UniformHypergraph> {
    let mut edges = Vec::new();
    let mut d: u64 = 1;
    loop {
        let step = d.checked_pow(r).unwrap_or(u64::MAX);
        if step.saturating_mul(steps as u64) >= n as u64 {
            break;
        }
        for a in 1..=(n as u64 - step * steps as u64) {
            edges.push((0..=steps as u64).map(|t| (a + t * step) as u32).collect::<Vec<_>>());
        }
        d += 1;
    }
    UniformHypergraph::from_edges(steps as usize + 1, n, edges)
}

/// Row-major id of a point of `[n]^dim`.
pub fn grid_index(point: &[i64], n: u32) -> Option<u32> {
    let mut id: u64 = 0;
    for &x in point {
        if x < 1 || x > n as i64 {
            return None;
        }
        id = id * n as u64 + (x as u64 - 1);
    }
    u32::try_from(id + 1).ok()
}

/// Inverse of [`grid_index`].
pub fn grid_point(id: u32, n: u32, dim: usize) -> Vec<i64> {
    let mut rest = (id - 1) as u64;
    let mut point = vec![0i64; dim];
    for d in (0..dim).rev() {
        point[d] = (rest % n as u64) as i64 + 1;
        rest /= n as u64;
    }
    point
}

/// Homothetic copies `a + bF ⊆ [n]^dim` of a configuration `F`, deduplicated
/// as sets.
pub fn homothetic_hypergraph(config: &[Vec<i64>], dim: usize, n: u32) -> Result<UniformHypergraph> {
    let distinct: BTreeSet<&Vec<i64>> = config.iter().collect();
    if distinct.len() < 2 {
        return Err(Error::input("configuration needs at least two distinct points"));
    }
    if dim == 0 || config.iter().any(|x| x.len() != dim) {
        return Err(Error::input(format!("every point must have {dim} coordinates")));
    }
    let cap = (n as u64)
        .checked_pow(dim as u32)
        .and_then(|c| u32::try_from(c).ok())
        .ok_or_else(|| Error::input("grid too large"))?;
    let points: Vec<&Vec<i64>> = distinct.into_iter().collect();
    let k = points.len();
    let n_i = n as i64;
    let mut edges: BTreeSet<Vec<u32>> = BTreeSet::new();
    for b in (-n_i..=n_i).filter(|&b| b != 0) {
        // feasible range of each translation coordinate
        let ranges: Vec<(i64, i64)> = (0..dim)
            .map(|d| {
                let lo = points.iter().map(|x| b * x[d]).min().unwrap();
                let hi = points.iter().map(|x| b * x[d]).max().unwrap();
                (1 - lo, n_i - hi)
            })
            .collect();
        if ranges.iter().any(|(lo, hi)| lo > hi) {
            continue;
        }
        for a in ranges.iter().map(|&(lo, hi)| lo..=hi).multi_cartesian_product() {
            let mut img: Vec<u32> = points
                .iter()
                .map(|x| {
                    let p: Vec<i64> = (0..dim).map(|d| a[d] + b * x[d]).collect();
                    grid_index(&p, n).expect("translation range keeps points in the grid")
                })
                .collect();
            img.sort_unstable();
            img.dedup();
            if img.len() == k {
                edges.insert(img);
            }
        }
    }
    UniformHypergraph::from_edges(k, cap, edges)
}

/// Lexicographic rank (1-based) of every t-subset of `[n]`.
pub fn subset_ids(n: u32, t: usize) -> BTreeMap<Vec<u32>, u32> {
    (1..=n)
        .combinations(t)
        .enumerate()
        .map(|(i, s)| (s, i as u32 + 1))
        .collect()
}

/// Hypergraph of copies of `hs` in `K_n^t`: vertices are the t-subsets of
/// `[n]`, edges the distinct edge sets of embedded copies.
pub fn copies_hypergraph(hs: &SmallGraph, n: u32) -> Result<UniformHypergraph> {
    if hs.edge_count() == 0 {
        return Err(Error::input("the forbidden graph needs at least one edge"));
    }
    if n < hs.vertex_count() {
        return Err(Error::input(format!(
            "n = {n} is smaller than v(H) = {}",
            hs.vertex_count()
        )));
    }
    let ids = subset_ids(n, hs.t());
    let cap = ids.len() as u32;
    let mut copies: BTreeSet<Vec<u32>> = BTreeSet::new();
    for image in (1..=n).permutations(hs.vertex_count() as usize) {
        let mut edge: Vec<u32> = hs
            .edges()
            .iter()
            .map(|e| {
                let mut s: Vec<u32> = e.iter().map(|&x| image[x as usize - 1]).collect();
                s.sort_unstable();
                ids[&s]
            })
            .collect();
        edge.sort_unstable();
        copies.insert(edge);
    }
    UniformHypergraph::from_edges(hs.edge_count(), cap, copies)
}

/// Canonical copies of a graph in its complete blow-up `H(n)`.
///
/// One edge per map sending vertex `i` into part `V_i`; maps that agree on
/// all non-isolated vertices give the same edge set and are kept as
/// multiplicity, so `e = n^v(H)` always.
pub fn blowup_copies_hypergraph(hs: &SmallGraph, n: u32) -> Result<UniformHypergraph> {
    if hs.t() != 2 {
        return Err(Error::input("blow-ups are defined for graphs (t = 2)"));
    }
    if n == 0 {
        return Err(Error::input("blow-up needs n >= 1"));
    }
    if hs.edge_count() == 0 {
        return Err(Error::input("the base graph needs at least one edge"));
    }
    let n2 = n as u64 * n as u64;
    let cap = u32::try_from(hs.edge_count() as u64 * n2).map_err(|_| Error::input("blow-up too large"))?;
    let mut edges: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for choice in (0..hs.vertex_count()).map(|_| 1..=n).multi_cartesian_product() {
        let mut edge: Vec<u32> = hs
            .edges()
            .iter()
            .enumerate()
            .map(|(ei, e)| {
                let (x, y) = (choice[e[0] as usize - 1], choice[e[1] as usize - 1]);
                (1 + ei as u64 * n2 + (x as u64 - 1) * n as u64 + (y as u64 - 1)) as u32
            })
            .collect();
        edge.sort_unstable();
        *edges.entry(edge).or_insert(0) += 1;
    }
    UniformHypergraph::from_weighted_edges(hs.edge_count(), VertexSet::full(cap), edges)
}

/// `m_2(H) = max (e(H') - 1)/(v(H') - 2)` over induced subgraphs on `>= 3` vertices.
pub fn two_density(hs: &SmallGraph) -> Result<Rational> {
    if hs.t() != 2 {
        return Err(Error::input("2-density is defined for graphs"));
    }
    t_density(hs, 2)
}

/// `m_t(H) = max (e(H') - 1)/(v(H') - t)` over vertex subsets of size `>= t + 1`.
///
/// A graph with a single edge has `m_t = 0`; an edgeless one is rejected.
pub fn t_density(hs: &SmallGraph, t: usize) -> Result<Rational> {
    if hs.t() != t {
        return Err(Error::input(format!(
            "graph is {}-uniform, density requested for t = {t}",
            hs.t()
        )));
    }
    if (hs.vertex_count() as usize) < t + 1 {
        return Err(Error::input(format!("t-density needs at least {} vertices", t + 1)));
    }
    if hs.edge_count() == 0 {
        return Err(Error::input("t-density of an edgeless graph is undefined"));
    }
    let mut best: Option<Rational> = None;
    for size in t + 1..=hs.vertex_count() as usize {
        for u in (1..=hs.vertex_count()).combinations(size) {
            let e = hs.induced_edge_count(&u) as i64;
            let val = exact::ratio(e - 1, (size - t) as i64);
            if best.as_ref().is_none_or(|b| val > *b) {
                best = Some(val);
            }
        }
    }
    Ok(best.expect("at least one subset"))
}

/// Smallest `c` with `Δ_ℓ(H) <= c p^(ℓ-1) e(H)/v(H)` for every `ℓ`.
pub fn minimal_degree_constant(h: &UniformHypergraph, p: &Rational) -> Result<Rational> {
    if h.edge_count() == 0 {
        return Err(Error::precondition("e(H) = 0"));
    }
    if *p <= Rational::zero() {
        return Err(Error::input("p must be positive"));
    }
    let v = exact::from_u64(h.vertex_count() as u64);
    let e = exact::from_u64(h.edge_count());
    let mut best = Rational::zero();
    for ell in 1..=h.k() {
        let top = subset_degrees(h, ell).into_values().max().unwrap_or(0);
        let c = exact::from_u64(top) * &v / (exact::pow(p, ell as u32 - 1) * &e);
        best = best.max(c);
    }
    Ok(best)
}
