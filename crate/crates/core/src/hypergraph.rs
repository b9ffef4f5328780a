//! k-uniform multihypergraphs on integer-indexed vertex sets.
//!
//! A hypergraph lives in the index space `[1, capacity]` and owns a vertex set
//! inside it; induced subhypergraphs keep the index space and shrink the vertex
//! set, so vertex ids are comparable across every hypergraph derived from one
//! source. Edges are stored as ascending id tuples with a multiplicity and are
//! frozen after construction.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// One distinct edge together with the number of times it occurs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub vertices: Vec<u32>,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformHypergraph {
    k: usize,
    vertices: VertexSet,
    edges: Vec<Edge>,
    total: u64,
}

impl UniformHypergraph {
    /// Edgeless `k`-uniform hypergraph on the given vertex set.
    pub fn edgeless(k: usize, vertices: VertexSet) -> Self {
        UniformHypergraph {
            k,
            vertices,
            edges: Vec::new(),
            total: 0,
        }
    }

    /// Hypergraph on `[1, v]` from a list of edges; repeated edges accumulate
    /// multiplicity.
    pub fn from_edges<I, E>(k: usize, v: u32, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[u32]>,
    {
        Self::from_weighted_edges(k, VertexSet::full(v), edges.into_iter().map(|e| (e, 1)))
    }

    /// General constructor: explicit vertex set and `(edge, multiplicity)` pairs.
    pub fn from_weighted_edges<I, E>(k: usize, vertices: VertexSet, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, u64)>,
        E: AsRef<[u32]>,
    {
        let mut acc: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for (e, m) in edges {
            let key = canonical_edge(k, &vertices, e.as_ref())?;
            if m == 0 {
                return Err(Error::input(format!("edge {key:?} has multiplicity 0")));
            }
            *acc.entry(key).or_insert(0) += m;
        }
        Ok(Self::from_canonical(k, vertices, acc))
    }

    /// Trusted constructor for already-validated canonical edges.
    pub(crate) fn from_canonical(k: usize, vertices: VertexSet, edges: BTreeMap<Vec<u32>, u64>) -> Self {
        let edges: Vec<Edge> = edges
            .into_iter()
            .map(|(vertices, multiplicity)| Edge {
                vertices,
                multiplicity,
            })
            .collect();
        let total = edges.iter().map(|e| e.multiplicity).sum();
        UniformHypergraph {
            k,
            vertices,
            edges,
            total,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Size of the id space `[1, capacity]`.
    pub fn capacity(&self) -> u32 {
        self.vertices.capacity()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    /// `v(H)`.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// `e(H)`, counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        self.total
    }

    pub fn distinct_edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn multiplicity(&self, edge: &[u32]) -> u64 {
        let mut key = edge.to_vec();
        key.sort_unstable();
        self.edges
            .binary_search_by(|e| e.vertices.as_slice().cmp(&key))
            .map(|i| self.edges[i].multiplicity)
            .unwrap_or(0)
    }

    fn check_subset(&self, t: &[u32]) -> Result<()> {
        for &v in t {
            if !self.vertices.contains(v) {
                return Err(Error::input(format!("vertex {v} is not in V(H)")));
            }
        }
        if t.iter().duplicates().next().is_some() {
            return Err(Error::input(format!("{t:?} has repeated vertices")));
        }
        Ok(())
    }

    /// `deg_H(T)`: number of edges (with multiplicity) containing `T`.
    pub fn degree(&self, t: &[u32]) -> Result<u64> {
        self.check_subset(t)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| t.iter().all(|v| e.vertices.binary_search(v).is_ok()))
            .map(|e| e.multiplicity)
            .sum())
    }

    /// `Δ_ℓ(H)`, aggregated over the ℓ-subsets of existing edges.
    pub fn max_degree(&self, ell: usize) -> Result<u64> {
        if ell == 0 || ell > self.k {
            return Err(Error::input(format!(
                "degree order {ell} outside [1, {}]",
                self.k
            )));
        }
        if self.vertex_count() < ell {
            return Err(Error::input(format!(
                "v(H) = {} has no {ell}-subsets",
                self.vertex_count()
            )));
        }
        Ok(subset_degrees(self, ell).into_values().max().unwrap_or(0))
    }

    /// `H[A]`: edges fully inside `A`, multiplicities kept, vertex set `A`.
    pub fn induced(&self, a: &VertexSet) -> Result<Self> {
        if !a.is_subset(&self.vertices) {
            return Err(Error::input("induced set is not a subset of V(H)"));
        }
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| a.contains_all(&e.vertices))
            .cloned()
            .collect();
        let total = edges.iter().map(|e| e.multiplicity).sum();
        Ok(UniformHypergraph {
            k: self.k,
            vertices: a.clone(),
            edges,
            total,
        })
    }

    /// True iff no edge lies inside `I`.
    pub fn is_independent(&self, i: &VertexSet) -> bool {
        !self.edges.iter().any(|e| i.contains_all(&e.vertices))
    }

    /// Multiset `{ e \ {u} : u ∈ e }`, in canonical edge order.
    pub fn vertex_link(&self, u: u32) -> Result<Vec<Edge>> {
        if !self.vertices.contains(u) {
            return Err(Error::input(format!("vertex {u} is not in V(H)")));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.vertices.binary_search(&u).is_ok())
            .map(|e| Edge {
                vertices: e.vertices.iter().copied().filter(|&x| x != u).collect(),
                multiplicity: e.multiplicity,
            })
            .collect())
    }

    /// Parses the text format: first non-comment line `k v e`, then `e` lines
    /// of `k` ids; `#` lines are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "missing `k v e` header".into(),
        })?;
        let nums = parse_numbers(hline, header)?;
        if nums.len() != 3 {
            return Err(Error::Parse {
                line: hline,
                message: format!("header needs 3 numbers, found {}", nums.len()),
            });
        }
        let (k, v, e) = (nums[0] as usize, nums[1], nums[2]);
        if k == 0 {
            return Err(Error::Parse {
                line: hline,
                message: "uniformity must be at least 1".into(),
            });
        }
        let v = u32::try_from(v).map_err(|_| Error::Parse {
            line: hline,
            message: "vertex count too large".into(),
        })?;
        let mut edges = Vec::with_capacity(e as usize);
        for (lineno, line) in lines {
            let ids = parse_numbers(lineno, line)?;
            if ids.len() != k {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected {k} vertex ids, found {}", ids.len()),
                });
            }
            let ids: Vec<u32> = ids.into_iter().map(|x| x as u32).collect();
            canonical_edge(k, &VertexSet::full(v), &ids).map_err(|err| Error::Parse {
                line: lineno,
                message: err.to_string(),
            })?;
            edges.push(ids);
        }
        if edges.len() as u64 != e {
            return Err(Error::Parse {
                line: 0,
                message: format!("header announces {e} edges, found {}", edges.len()),
            });
        }
        Self::from_edges(k, v, edges)
    }

    /// Writes the text format over the index space; multiplicity is expressed
    /// by repeating edge lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.k, self.capacity(), self.total);
        for e in &self.edges {
            let line = e.vertices.iter().join(" ");
            for _ in 0..e.multiplicity {
                out.push_str(&line);
                out.push('\n');
            }
        }
        out
    }
}

fn parse_numbers(line: usize, s: &str) -> Result<Vec<u64>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line,
                message: format!("not a nonnegative integer: {tok:?}"),
            })
        })
        .collect()
}

fn canonical_edge(k: usize, vertices: &VertexSet, e: &[u32]) -> Result<Vec<u32>> {
    if e.len() != k {
        return Err(Error::input(format!(
            "edge {e:?} has {} vertices, expected {k}",
            e.len()
        )));
    }
    let mut key = e.to_vec();
    key.sort_unstable();
    if key.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::input(format!("edge {e:?} repeats a vertex")));
    }
    if let Some(&bad) = key.iter().find(|&&x| !vertices.contains(x)) {
        return Err(Error::input(format!("edge {e:?} uses vertex {bad} outside V(H)")));
    }
    Ok(key)
}

/// Degrees of all ℓ-subsets that lie in some edge.
pub(crate) fn subset_degrees(h: &UniformHypergraph, ell: usize) -> HashMap<Vec<u32>, u64> {
    let mut map: HashMap<Vec<u32>, u64> = HashMap::new();
    for e in h.edges() {
        for t in e.vertices.iter().copied().combinations(ell) {
            *map.entry(t).or_insert(0) += e.multiplicity;
        }
    }
    map
}

/// Precomputed degrees of every subset (size `0..=k`) of every edge, so that
/// `deg_H(T)` becomes a single lookup.
#[derive(Clone, Debug)]
pub struct DegreeIndex {
    degrees: HashMap<Vec<u32>, u64>,
}

impl DegreeIndex {
    pub fn new(h: &UniformHypergraph) -> Self {
        let mut degrees = HashMap::new();
        for ell in 0..=h.k() {
            degrees.extend(subset_degrees(h, ell));
        }
        DegreeIndex { degrees }
    }

    pub fn degree(&self, t: &[u32]) -> u64 {
        let mut key = t.to_vec();
        key.sort_unstable();
        self.degrees.get(&key).copied().unwrap_or(0)
    }
}
