//! Brute-force ground truth.
//!
//! Every routine here is exhaustive and exact: independent sets are
//! enumerated over bit masks of the hypergraph's vertex positions, counts are
//! big integers and densities exact rationals. Hypergraphs above the
//! configured vertex limit are refused rather than sampled.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::hypergraph::UniformHypergraph;
use crate::instances::{copies_hypergraph, SmallGraph};
use crate::vertex_set::VertexSet;

pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 22;

/// Hard ceiling imposed by 64-bit masks.
const MASK_BITS: usize = 63;

/// Bit-mask view of a hypergraph: position `j` stands for the `j`-th smallest
/// vertex of `V(H)`.
#[derive(Clone, Debug)]
pub struct MaskedHypergraph {
    capacity: u32,
    positions: Vec<u32>,
    edges: Vec<(u64, u64)>,
    // edges grouped by their highest position, for incremental checks
    closing: Vec<Vec<u64>>,
}

impl MaskedHypergraph {
    pub fn new(h: &UniformHypergraph, limit: usize) -> Result<Self> {
        let v = h.vertex_count();
        if v > limit.min(MASK_BITS) {
            return Err(Error::LimitExceeded(format!(
                "v(H) = {v} exceeds the exhaustive limit {}",
                limit.min(MASK_BITS)
            )));
        }
        let positions: Vec<u32> = h.vertices().iter().collect();
        let mut pos_of = vec![usize::MAX; h.capacity() as usize + 1];
        for (j, &id) in positions.iter().enumerate() {
            pos_of[id as usize] = j;
        }
        let mut closing = vec![Vec::new(); v];
        let edges: Vec<(u64, u64)> = h
            .edges()
            .iter()
            .map(|e| {
                let mask = e.vertices.iter().fold(0u64, |m, &x| m | 1 << pos_of[x as usize]);
                (mask, e.multiplicity)
            })
            .collect();
        for &(mask, _) in &edges {
            closing[63 - mask.leading_zeros() as usize].push(mask);
        }
        Ok(MaskedHypergraph {
            capacity: h.capacity(),
            positions,
            edges,
            closing,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.positions.len()
    }

    pub fn positions(&self) -> &[u32] {
        &self.positions
    }

    pub fn to_set(&self, mask: u64) -> VertexSet {
        VertexSet::from_mask(self.capacity, &self.positions, mask)
    }

    pub fn to_mask(&self, set: &VertexSet) -> u64 {
        self.positions
            .iter()
            .enumerate()
            .filter(|(_, &id)| set.contains(id))
            .fold(0, |m, (j, _)| m | 1 << j)
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        self.edges.iter().all(|&(e, _)| e & !mask != 0)
    }

    /// `e(H[A])` with multiplicity.
    pub fn induced_edges(&self, mask: u64) -> u64 {
        self.edges
            .iter()
            .filter(|&&(e, _)| e & !mask == 0)
            .map(|&(_, m)| m)
            .sum()
    }

    /// Depth-first enumeration of independent sets, vertices added in
    /// increasing position order; `visit` returns false to prune below.
    pub fn for_each_independent(&self, mut visit: impl FnMut(u64) -> bool) {
        fn rec(g: &MaskedHypergraph, start: usize, cur: u64, visit: &mut dyn FnMut(u64) -> bool) {
            if !visit(cur) {
                return;
            }
            for j in start..g.vertex_count() {
                let next = cur | 1 << j;
                if g.closing[j].iter().all(|&e| e & !next != 0) {
                    rec(g, j + 1, next, visit);
                }
            }
        }
        rec(self, 0, 0, &mut visit);
    }

    /// Independent-set counts by size, via depth-first search.
    pub fn count_by_size(&self) -> Vec<BigUint> {
        let mut counts = vec![0u64; self.vertex_count() + 1];
        self.for_each_independent(|m| {
            counts[m.count_ones() as usize] += 1;
            true
        });
        counts.into_iter().map(BigUint::from).collect()
    }

    /// Independent-set counts by size, via a scan of all `2^v` masks.
    pub fn count_by_size_scan(&self) -> Vec<BigUint> {
        let mut counts = vec![0u64; self.vertex_count() + 1];
        for mask in 0..(1u64 << self.vertex_count()) {
            if self.is_independent(mask) {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        counts.into_iter().map(BigUint::from).collect()
    }

    pub fn independence_number(&self) -> usize {
        let v = self.vertex_count();
        let mut best = 0usize;
        self.for_each_independent(|m| {
            let size = m.count_ones() as usize;
            best = best.max(size);
            // every extension uses positions above the highest one in m
            let top = if m == 0 { 0 } else { 64 - m.leading_zeros() as usize };
            size + (v - top) > best
        });
        best
    }
}

/// All independent sets (optionally only those of size `m`), in depth-first order.
pub fn enumerate_independent_sets(
    h: &UniformHypergraph,
    m: Option<usize>,
    limit: usize,
) -> Result<Vec<VertexSet>> {
    let g = MaskedHypergraph::new(h, limit)?;
    let mut out = Vec::new();
    g.for_each_independent(|mask| {
        let size = mask.count_ones() as usize;
        if m.is_none_or(|m| m == size) {
            out.push(g.to_set(mask));
        }
        m.is_none_or(|m| size < m)
    });
    Ok(out)
}

/// Maximal independent sets (no vertex can be added).
pub fn maximal_independent_sets(h: &UniformHypergraph, limit: usize) -> Result<Vec<VertexSet>> {
    let g = MaskedHypergraph::new(h, limit)?;
    let full = if g.vertex_count() == 64 { u64::MAX } else { (1u64 << g.vertex_count()) - 1 };
    let mut out = Vec::new();
    g.for_each_independent(|mask| {
        let mut free = full & !mask;
        let mut maximal = true;
        while free != 0 {
            let bit = free & free.wrapping_neg();
            if g.is_independent(mask | bit) {
                maximal = false;
                break;
            }
            free &= free - 1;
        }
        if maximal {
            out.push(g.to_set(mask));
        }
        true
    });
    Ok(out)
}

/// `|I(H, m)|` for `m = 0..=v(H)`, with the parameters echoed.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CountReport {
    pub k: usize,
    pub vertices: usize,
    pub edges: u64,
    pub method: String,
    #[serde(serialize_with = "serialize_counts")]
    pub counts: Vec<BigUint>,
    /// Wall time is informational only and never serialized, so equal inputs
    /// give byte-identical reports.
    #[serde(skip)]
    pub wall_time_ms: u128,
}

fn serialize_counts<S: serde::Serializer>(counts: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(counts.len()))?;
    for (m, c) in counts.iter().enumerate() {
        seq.serialize_element(&serde_json::json!({ "m": m, "count": c.to_string() }))?;
    }
    seq.end()
}

impl CountReport {
    pub fn count(&self, m: usize) -> BigUint {
        self.counts.get(m).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// CSV with columns `m,count`, preceded by `#` parameter lines.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = format!(
            "# k={} v={} e={} method={}\n",
            self.k, self.vertices, self.edges, self.method
        );
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::input(format!("csv: {e}"));
        w.write_record(["m", "count"]).map_err(io)?;
        for (m, c) in self.counts.iter().enumerate() {
            w.write_record([m.to_string(), c.to_string()]).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::input(format!("csv: {e}")))?;
        out.push_str(&String::from_utf8(bytes).expect("ascii"));
        Ok(out)
    }
}

pub fn count_independent_sets(h: &UniformHypergraph, limit: usize) -> Result<CountReport> {
    let start = Instant::now();
    let g = MaskedHypergraph::new(h, limit)?;
    let counts = g.count_by_size();
    Ok(CountReport {
        k: h.k(),
        vertices: h.vertex_count(),
        edges: h.edge_count(),
        method: "brute".into(),
        counts,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

/// `α(H)`.
pub fn independence_number(h: &UniformHypergraph, limit: usize) -> Result<usize> {
    Ok(MaskedHypergraph::new(h, limit)?.independence_number())
}

/// `ex(n, H)`: the independence number of the copies hypergraph.
pub fn extremal_number(n: u32, hs: &SmallGraph, limit: usize) -> Result<usize> {
    if n < hs.vertex_count() {
        // no copy fits: every t-subset of [n] may be used
        return Ok(exact::binomial(n as u64, hs.t() as u64).to_usize().unwrap_or(usize::MAX));
    }
    independence_number(&copies_hypergraph(hs, n)?, limit)
}

/// `f_{n,m}(H)`: H-free t-graphs on `[n]` with exactly `m` edges.
pub fn count_free_graphs(n: u32, m: usize, hs: &SmallGraph, limit: usize) -> Result<BigUint> {
    if n < hs.vertex_count() {
        return Ok(exact::binomial(exact::binomial(n as u64, hs.t() as u64).to_u64().unwrap_or(u64::MAX), m as u64));
    }
    let h = copies_hypergraph(hs, n)?;
    let g = MaskedHypergraph::new(&h, limit)?;
    let mut count = 0u64;
    g.for_each_independent(|mask| {
        let size = mask.count_ones() as usize;
        if size == m {
            count += 1;
        }
        size < m
    });
    Ok(BigUint::from(count))
}

/// `min e(H[A]) / e(H)` over `|A| >= s`.
///
/// `e(H[A])` only grows with `A`, so the minimum is attained on sets of size
/// exactly `s` and only those are scanned.
pub fn density_epsilon(h: &UniformHypergraph, s: usize, limit: usize) -> Result<Rational> {
    if h.edge_count() == 0 {
        return Err(Error::precondition("e(H) = 0"));
    }
    let g = MaskedHypergraph::new(h, limit)?;
    let v = g.vertex_count();
    if s > v {
        return Err(Error::input(format!("s = {s} exceeds v(H) = {v}")));
    }
    let mut best = u64::MAX;
    for_each_k_subset(v, s, |mask| {
        best = best.min(g.induced_edges(mask));
        best > 0
    });
    Ok(Rational::new(best.into(), h.edge_count().into()))
}

/// Visits every `s`-subset of `0..v` as a mask (Gosper's hack); `visit`
/// returns false to stop.
pub fn for_each_k_subset(v: usize, s: usize, mut visit: impl FnMut(u64) -> bool) {
    if s > v {
        return;
    }
    if s == 0 {
        visit(0);
        return;
    }
    let limit = 1u64 << v;
    let mut mask = (1u64 << s) - 1;
    while mask < limit {
        if !visit(mask) {
            return;
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

/// Number of k-term progressions (`d >= 1`) inside `a`.
pub fn varnavides_count(a: &BTreeSet<u64>, k: usize) -> u64 {
    if k == 0 || a.len() < k {
        return 0;
    }
    let max = *a.iter().next_back().unwrap();
    let mut count = 0;
    for &x in a {
        let mut d = 1u64;
        while x + (k as u64 - 1) * d <= max {
            if (1..k as u64).all(|t| a.contains(&(x + t * d))) {
                count += 1;
            }
            d += 1;
        }
    }
    count
}

/// AP hypergraph of a finite integer set, as masks over its sorted elements.
fn progression_masks(elems: &[u64], k: usize) -> Vec<u64> {
    let set: BTreeSet<u64> = elems.iter().copied().collect();
    let pos = |x: u64| elems.binary_search(&x).ok();
    let mut masks = Vec::new();
    let Some(&max) = elems.last() else {
        return masks;
    };
    for &x in elems {
        let mut d = 1u64;
        while x + (k as u64 - 1) * d <= max {
            if (0..k as u64).all(|t| set.contains(&(x + t * d))) {
                masks.push((0..k as u64).fold(0u64, |m, t| m | 1 << pos(x + t * d).unwrap()));
            }
            d += 1;
        }
    }
    masks
}

/// True iff every subset of `a` of size `ceil(δ|A|)` contains a k-term AP.
///
/// Supersets of such subsets inherit the AP, so only the exact size is
/// examined; the search looks for an AP-free subset of that size and
/// backtracks as soon as a partial set closes a progression.
pub fn szemeredi_check(a: &BTreeSet<u64>, delta: &Rational, k: usize) -> Result<bool> {
    if *delta < Rational::zero() || *delta > Rational::one() {
        return Err(Error::input("δ must lie in [0, 1]"));
    }
    if a.len() > MASK_BITS {
        return Err(Error::LimitExceeded(format!(
            "|A| = {} exceeds {MASK_BITS}",
            a.len()
        )));
    }
    let s = exact::ceil_to_u64(&(delta * exact::from_u64(a.len() as u64))).unwrap() as usize;
    if s < k {
        return Ok(false);
    }
    let elems: Vec<u64> = a.iter().copied().collect();
    let masks = progression_masks(&elems, k);
    let mut closing = vec![Vec::new(); elems.len()];
    for &m in &masks {
        closing[63 - m.leading_zeros() as usize].push(m);
    }
    fn free_subset_exists(closing: &[Vec<u64>], start: usize, cur: u64, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if closing.len() - start < need {
            return false;
        }
        for j in start..closing.len() {
            let next = cur | 1 << j;
            if closing[j].iter().all(|&e| e & !next != 0)
                && free_subset_exists(closing, j + 1, next, need - 1)
            {
                return true;
            }
        }
        false
    }
    Ok(!free_subset_exists(&closing, 0, 0, s))
}

/// Outcome of a seeded Monte Carlo run of [`szemeredi_check`] on `[n]_p`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MonteCarloEstimate {
    pub n: u64,
    pub p: String,
    pub delta: String,
    pub k: usize,
    pub trials: u64,
    pub seed: u64,
    pub successes: u64,
    pub estimate: String,
    pub generator: String,
}

impl MonteCarloEstimate {
    pub fn fraction(&self) -> Rational {
        Rational::new(self.successes.into(), self.trials.into())
    }
}

/// Name of the per-trial generator, echoed in every estimate.
pub const MC_GENERATOR: &str = "ChaCha8Rng::seed_from_u64(seed ^ trial)";

/// Samples `[n]_p` independently per trial and reports how often it is
/// `(δ, k)`-Szemerédi. Trial `t` uses its own stream seeded with `seed ^ t`,
/// and membership of each element is decided exactly for rational `p`.
pub fn mc_szemeredi(
    n: u64,
    p: &Rational,
    delta: &Rational,
    k: usize,
    trials: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    if trials == 0 {
        return Err(Error::input("at least one trial is required"));
    }
    if *p < Rational::zero() || *p > Rational::one() {
        return Err(Error::input("p must lie in [0, 1]"));
    }
    let num = p.numer().to_u64().ok_or_else(|| Error::input("p numerator too large"))?;
    let den = p.denom().to_u64().ok_or_else(|| Error::input("p denominator too large"))?;
    let mut successes = 0;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ trial);
        let sample: BTreeSet<u64> = (1..=n).filter(|_| rng.random_range(0..den) < num).collect();
        if szemeredi_check(&sample, delta, k)? {
            successes += 1;
        }
    }
    let estimate = Rational::new(successes.into(), trials.into());
    Ok(MonteCarloEstimate {
        n,
        p: exact::format_rational(p),
        delta: exact::format_rational(delta),
        k,
        trials,
        seed,
        successes,
        estimate: exact::format_rational(&estimate),
        generator: MC_GENERATOR.into(),
    })
}

pub fn exact_binomial(a: u64, b: u64) -> BigUint {
    exact::binomial(a, b)
}

/// Verdicts for the four binomial estimates at one `(a, b, c)`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BinomialCheck {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    /// `C(a, b) <= (e a / b)^b`, checked with a rational lower bound on `e`.
    pub entropy_bound: bool,
    /// `C(b, c) <= (b/a)^c C(a, c)`.
    pub shrink_top: bool,
    /// `C(a, b - c) <= (b/(a - b))^c C(a, b)`.
    pub lower_bottom: bool,
    /// `C(a, c) <= ((a - c)/(b - c))^c C(b, c)`.
    pub grow_top: bool,
}

impl BinomialCheck {
    pub fn all_pass(&self) -> bool {
        self.entropy_bound && self.shrink_top && self.lower_bottom && self.grow_top
    }
}

/// Checks the four estimates for `a >= b >= c >= 0` in exact arithmetic.
///
/// A ratio with zero denominator raised to a positive power is treated as
/// `+∞` (the estimate holds vacuously); any base raised to the power `0`
/// is `1`.
pub fn check_binomial_inequalities(a: u64, b: u64, c: u64) -> Result<BinomialCheck> {
    if !(a >= b && b >= c) {
        return Err(Error::input(format!("need a >= b >= c, got ({a}, {b}, {c})")));
    }
    let bin = |n: u64, k: u64| exact::from_biguint(&exact::binomial(n, k));
    // (num/den)^e * rhs, None for +∞
    let scaled = |num: Rational, den: u64, e: u64, rhs: Rational| -> Option<Rational> {
        if e == 0 {
            return Some(rhs);
        }
        if den == 0 {
            return None;
        }
        Some(exact::pow(&(num / exact::from_u64(den)), e as u32) * rhs)
    };
    let holds = |lhs: Rational, rhs: Option<Rational>| rhs.is_none_or(|r| lhs <= r);

    let entropy_bound = holds(
        bin(a, b),
        scaled(exact::euler_lower_bound() * exact::from_u64(a), b, b, Rational::one()),
    );
    let shrink_top = holds(bin(b, c), scaled(exact::from_u64(b), a, c, bin(a, c)));
    let lower_bottom = holds(bin(a, b - c), scaled(exact::from_u64(b), a - b, c, bin(a, b)));
    let grow_top = holds(bin(a, c), scaled(exact::from_u64(a - c), b - c, c, bin(b, c)));
    Ok(BinomialCheck {
        a,
        b,
        c,
        entropy_bound,
        shrink_top,
        lower_bottom,
        grow_top,
    })
}
