//! Fingerprints and containers for independent sets.
//!
//! [`prop_fingerprint`] runs the level steps from uniformity `k - 1`
//! downwards and stops at the first level whose surviving vertex set has
//! shrunk by a `δ` fraction. [`build_container`] iterates that procedure on
//! the induced hypergraphs `H[A_j]` until the current set leaves the family
//! `F`; the union of the per-round fingerprints is `g(I)` and the final set
//! is the container `f(g(I))`.
//!
//! All constants are exact rationals. The only transcendental quantity,
//! `ln(1/ε)` in the fingerprint bound, is replaced by the rational upper
//! bound of [`exact::ln_upper_bound`] with [`LN_TERMS`] series terms.

mod audit;
mod family;
mod map;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::hypergraph::{subset_degrees, UniformHypergraph};
use crate::oracle;
use crate::scythe::{scythe_step, threshold_table};
use crate::vertex_set::VertexSet;

pub use audit::{LemmaAudit, Tally};
use audit::AuditContext;
pub use family::{parse_family, sample_monotonicity, DensityFamily, MinSize, NoSets, Upset};
pub use map::{
    container_count_bound, verify_containers, ContainerMap, ContainerParams, ContainerRecord,
    ContractResult, VerifyOptions, VerifyReport,
};

/// Series terms used for the rational upper bound on `ln(1/ε)`.
pub const LN_TERMS: u32 = 40;

/// Constants of the fingerprint procedure for a `k`-uniform hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropParams {
    pub c: Rational,
    pub p: Rational,
    pub k: usize,
}

impl PropParams {
    pub fn new(c: Rational, p: Rational, k: usize) -> Result<Self> {
        if c <= Rational::zero() {
            return Err(Error::input("c must be positive"));
        }
        if p <= Rational::zero() || p >= Rational::one() {
            return Err(Error::input(format!(
                "p must lie in (0, 1), got {}",
                exact::format_rational(&p)
            )));
        }
        if k == 0 {
            return Err(Error::input("k must be at least 1"));
        }
        Ok(PropParams { c, p, k })
    }

    fn base(&self) -> Rational {
        &self.c * exact::from_u64(self.k as u64) * exact::pow(&exact::int(2), self.k as u32 + 1)
    }

    /// `δ = (c k 2^(k+1))^(-k)`.
    pub fn delta(&self) -> Rational {
        exact::pow(&self.base(), self.k as u32).recip()
    }

    /// `c_i = (c k 2^(k+1))^(i-k)` for `1 <= i <= k`.
    pub fn c_level(&self, i: usize) -> Rational {
        assert!((1..=self.k).contains(&i), "level {i} outside [1, {}]", self.k);
        exact::pow(&self.base(), (self.k - i) as u32).recip()
    }

    /// `b = ceil(p v)`.
    pub fn b(&self, v: usize) -> usize {
        exact::ceil_to_u64(&(&self.p * exact::from_u64(v as u64))).expect("fits") as usize
    }
}

/// A fingerprint with its decomposition into rounds (or levels).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub parts: Vec<Vec<u32>>,
}

impl Fingerprint {
    pub fn set(&self, capacity: u32) -> VertexSet {
        let mut s = VertexSet::empty(capacity);
        for part in &self.parts {
            for &x in part {
                s.insert(x);
            }
        }
        s
    }
}

/// Output of [`prop_fingerprint`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropOutcome {
    /// `(B_{k-1}, …, B_q)`.
    pub fingerprint: Fingerprint,
    pub container: VertexSet,
    pub q: usize,
    pub r: usize,
}

/// Checks `Δ_ℓ(H) v(H) <= c p^(ℓ-1) e(H)` for every `ℓ`.
pub fn check_degree_condition(h: &UniformHypergraph, c: &Rational, p: &Rational) -> Result<()> {
    let v = exact::from_u64(h.vertex_count() as u64);
    let e = exact::from_u64(h.edge_count());
    for ell in 1..=h.k() {
        let top = subset_degrees(h, ell).into_values().max().unwrap_or(0);
        let lhs = exact::from_u64(top) * &v;
        let rhs = c * exact::pow(p, ell as u32 - 1) * &e;
        if lhs > rhs {
            return Err(Error::precondition(format!(
                "degree condition fails at ℓ = {ell}: Δ_ℓ·v = {} > c·p^(ℓ-1)·e = {}",
                exact::format_rational(&lhs),
                exact::format_rational(&rhs)
            )));
        }
    }
    Ok(())
}

fn check_independent(h: &UniformHypergraph, i: &VertexSet) -> Result<()> {
    if i.capacity() != h.capacity() || !i.is_subset(h.vertices()) {
        return Err(Error::input("I is not a subset of V(H)"));
    }
    if !h.is_independent(i) {
        return Err(Error::contract("I is not independent"));
    }
    Ok(())
}

/// Single application of the fingerprint procedure to `(H, I)`.
pub fn prop_fingerprint(
    h: &UniformHypergraph,
    independent: &VertexSet,
    params: &PropParams,
    mut audit: Option<&mut LemmaAudit>,
) -> Result<PropOutcome> {
    if params.k != h.k() {
        return Err(Error::input(format!(
            "parameters are for k = {}, hypergraph is {}-uniform",
            params.k,
            h.k()
        )));
    }
    if h.edge_count() == 0 {
        return Err(Error::precondition("e(H) = 0"));
    }
    check_degree_condition(h, &params.c, &params.p)?;
    check_independent(h, independent)?;

    let k = h.k();
    let v = h.vertex_count();
    let zero_degree = |g: &UniformHypergraph| {
        let mut f = g.vertices().clone();
        for e in g.edges() {
            f.remove(e.vertices[0]);
        }
        f
    };
    if k == 1 {
        return Ok(PropOutcome {
            fingerprint: Fingerprint { parts: Vec::new() },
            container: zero_degree(h),
            q: 1,
            r: 1,
        });
    }

    let b = params.b(v);
    let delta = params.delta();
    let stop_size = (Rational::one() - &delta) * exact::from_u64(v as u64);
    let table = threshold_table(h, &params.p)?;
    let c_levels: Vec<Rational> = std::iter::once(Rational::zero())
        .chain((1..=k).map(|i| params.c_level(i)))
        .collect();
    let ctx = AuditContext {
        top_edges: h.edge_count(),
        top_vertices: v,
        k,
        p: &params.p,
        c_levels: &c_levels,
    };

    let mut current = h.clone();
    let mut parts = Vec::with_capacity(k - 1);
    for i in (1..k).rev() {
        let out = scythe_step(&current, independent, &table, b, i)?;
        if let Some(a) = audit.as_deref_mut() {
            a.check_step(&ctx, &current, independent, &table, b, i, &out);
        }
        parts.push(out.selected.clone());
        if exact::from_u64(out.remaining.len() as u64) <= stop_size {
            return Ok(PropOutcome {
                fingerprint: Fingerprint { parts },
                container: out.remaining,
                q: i,
                r: i + 1,
            });
        }
        current = out.level;
    }
    debug_assert_eq!(current.k(), 1);
    Ok(PropOutcome {
        fingerprint: Fingerprint { parts },
        container: zero_degree(&current),
        q: 1,
        r: 1,
    })
}

/// Switches for [`build_container`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Re-check `|A_j| >= ε v(H)` and `e(H[A_j]) >= ε e(H)` for every member
    /// `A_j` met by the loop.
    pub verify_density: bool,
    /// Return the trivial container `(∅, V)` for an edgeless hypergraph
    /// instead of failing.
    pub allow_edgeless: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            verify_density: true,
            allow_edgeless: false,
        }
    }
}

/// `g(I)` with its rounds `S_1, …, S_J`, and the container `f(g(I))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainerOutcome {
    pub fingerprint: Fingerprint,
    pub container: VertexSet,
}

impl ContainerOutcome {
    pub fn fingerprint_set(&self) -> VertexSet {
        self.fingerprint.set(self.container.capacity())
    }

    pub fn rounds(&self) -> usize {
        self.fingerprint.parts.len()
    }
}

/// Constants derived from `(k, c, p, ε)` for the full construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremConstants {
    /// Parameters of each round: constant `c/ε`.
    pub round: PropParams,
    pub delta: Rational,
    /// `ln(1/ε)` upper bound.
    pub log_bound: Rational,
    /// `C = (k-1)((1/δ) ln(1/ε) + 1)`.
    pub big_c: Rational,
    /// `ceil((1/δ) ln(1/ε)) + 1`.
    pub round_cap: BigInt,
}

impl TheoremConstants {
    pub fn new(k: usize, c: &Rational, p: &Rational, epsilon: &Rational) -> Result<Self> {
        if *epsilon <= Rational::zero() || *epsilon > Rational::one() {
            return Err(Error::input("ε must lie in (0, 1]"));
        }
        let round = PropParams::new(c / epsilon, p.clone(), k)?;
        let delta = round.delta();
        let log_bound = exact::ln_upper_bound(&epsilon.recip(), LN_TERMS)?;
        let rounds = &log_bound / &delta;
        let big_c = exact::from_u64(k as u64 - 1) * (&rounds + Rational::one());
        let round_cap = rounds.ceil().to_integer() + BigInt::one();
        Ok(TheoremConstants {
            round,
            delta,
            log_bound,
            big_c,
            round_cap,
        })
    }

    /// `C p v + (k - 1) J` for a fingerprint built in `J` rounds; the second
    /// term absorbs rounding `b` up to an integer in each round.
    pub fn fingerprint_bound(&self, v: usize, rounds: usize) -> Rational {
        &self.big_c * &self.round.p * exact::from_u64(v as u64)
            + exact::from_u64(((self.round.k - 1) * rounds) as u64)
    }
}

/// Builds `(g(I), f(g(I)))` for one independent set.
pub fn build_container(
    h: &UniformHypergraph,
    independent: &VertexSet,
    family: &DensityFamily,
    c: &Rational,
    p: &Rational,
    opts: BuildOptions,
    audit: Option<&mut LemmaAudit>,
) -> Result<ContainerOutcome> {
    let constants = TheoremConstants::new(h.k(), c, p, family.epsilon())?;
    build_with(h, independent, family, c, &constants, opts, audit)
}

fn build_with(
    h: &UniformHypergraph,
    independent: &VertexSet,
    family: &DensityFamily,
    c: &Rational,
    constants: &TheoremConstants,
    opts: BuildOptions,
    mut audit: Option<&mut LemmaAudit>,
) -> Result<ContainerOutcome> {
    check_independent(h, independent)?;
    if h.edge_count() == 0 {
        if opts.allow_edgeless {
            return Ok(ContainerOutcome {
                fingerprint: Fingerprint { parts: Vec::new() },
                container: h.vertices().clone(),
            });
        }
        return Err(Error::precondition("e(H) = 0"));
    }
    check_degree_condition(h, c, &constants.round.p)?;

    let v = h.vertex_count();
    let eps = family.epsilon();
    let eps_v = eps * exact::from_u64(v as u64);
    let eps_e = eps * exact::from_u64(h.edge_count());
    let mut current = h.vertices().clone();
    let mut parts = Vec::new();
    while family.contains(&current) {
        family.check_floor(&current, v)?;
        let induced = h.induced(&current)?;
        if opts.verify_density {
            if exact::from_u64(current.len() as u64) < eps_v {
                return Err(Error::precondition(format!(
                    "density violated: member with {} vertices is below ε·v = {}",
                    current.len(),
                    exact::format_rational(&eps_v)
                )));
            }
            if exact::from_u64(induced.edge_count()) < eps_e {
                return Err(Error::precondition(format!(
                    "density violated: member {:?} induces {} edges, below ε·e(H) = {}",
                    current,
                    induced.edge_count(),
                    exact::format_rational(&eps_e)
                )));
            }
        }
        if BigInt::from(parts.len()) >= constants.round_cap {
            return Err(Error::precondition(
                "round cap exceeded: the density condition must be violated",
            ));
        }
        let part_i = independent.intersection(&current);
        let out = prop_fingerprint(&induced, &part_i, &constants.round, audit.as_deref_mut())
            .map_err(|e| match e {
                Error::Precondition(m) => Error::precondition(format!(
                    "round {} on a member with {} vertices: {m}",
                    parts.len() + 1,
                    current.len()
                )),
                other => other,
            })?;
        let mut part: Vec<u32> = out.fingerprint.parts.concat();
        part.sort_unstable();
        parts.push(part);
        current = out.container;
    }
    Ok(ContainerOutcome {
        fingerprint: Fingerprint { parts },
        container: current,
    })
}

/// Which independent sets a container family is built from.
#[derive(Clone, Debug)]
pub enum Source {
    /// Every independent set (exhaustive; bounded by the oracle limit).
    All { limit: usize },
    /// Maximal independent sets and their fingerprints.
    MaximalClosure { limit: usize },
    Sets(Vec<VertexSet>),
}

impl Source {
    pub fn describe(&self) -> &'static str {
        match self {
            Source::All { .. } => "all",
            Source::MaximalClosure { .. } => "maximal-closure",
            Source::Sets(_) => "sets",
        }
    }
}

/// Resolves a source into a concrete list of independent sets.
pub fn source_sets(
    h: &UniformHypergraph,
    family: &DensityFamily,
    c: &Rational,
    p: &Rational,
    source: &Source,
    opts: BuildOptions,
) -> Result<Vec<VertexSet>> {
    match source {
        Source::All { limit } => oracle::enumerate_independent_sets(h, None, *limit),
        Source::Sets(sets) => Ok(sets.clone()),
        Source::MaximalClosure { limit } => {
            let maximal = oracle::maximal_independent_sets(h, *limit)?;
            let constants = TheoremConstants::new(h.k(), c, p, family.epsilon())?;
            let prints: Vec<VertexSet> = maximal
                .par_iter()
                .map(|i| {
                    build_with(h, i, family, c, &constants, opts, None).map(|o| o.fingerprint_set())
                })
                .collect::<Result<_>>()?;
            let mut all: Vec<VertexSet> = maximal;
            all.extend(prints);
            let mut seen = std::collections::HashSet::new();
            all.retain(|s| seen.insert(s.clone()));
            Ok(all)
        }
    }
}

/// Builds containers for every set of the source and merges them into a
/// [`ContainerMap`]. Work is spread over the rayon pool; the result does not
/// depend on the number of threads.
pub fn build_container_family(
    h: &UniformHypergraph,
    family: &DensityFamily,
    c: &Rational,
    p: &Rational,
    source: &Source,
    opts: BuildOptions,
    audit: Option<&mut LemmaAudit>,
) -> Result<ContainerMap> {
    let sets = source_sets(h, family, c, p, source, opts)?;
    let (map, _) = build_for_sets(h, family, c, p, &sets, opts, audit)?;
    Ok(map)
}

/// Builds the map for explicit sets and also returns each set's outcome, in
/// input order.
pub fn build_for_sets(
    h: &UniformHypergraph,
    family: &DensityFamily,
    c: &Rational,
    p: &Rational,
    sets: &[VertexSet],
    opts: BuildOptions,
    audit: Option<&mut LemmaAudit>,
) -> Result<(ContainerMap, Vec<ContainerOutcome>)> {
    let constants = TheoremConstants::new(h.k(), c, p, family.epsilon())?;
    let want_audit = audit.is_some();
    let results: Vec<(ContainerOutcome, LemmaAudit)> = sets
        .par_iter()
        .map(|i| {
            let mut local = LemmaAudit::new();
            let out = build_with(
                h,
                i,
                family,
                c,
                &constants,
                opts,
                want_audit.then_some(&mut local),
            )?;
            Ok((out, local))
        })
        .collect::<Result<_>>()?;

    let mut records: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
    let mut outcomes = Vec::with_capacity(results.len());
    let mut merged = LemmaAudit::new();
    for (i, (out, local)) in sets.iter().zip(results) {
        merged.merge(&local);
        let key = out.fingerprint_set().to_vec();
        let value = out.container.to_vec();
        if let Some(prev) = records.get(&key) {
            if *prev != value {
                return Err(Error::contract(format!(
                    "fingerprint {key:?} received containers {prev:?} and {value:?} (second from I = {i:?})"
                )));
            }
        } else {
            records.insert(key, value);
        }
        outcomes.push(out);
    }
    if let Some(a) = audit {
        a.merge(&merged);
    }
    let map = ContainerMap::new(
        ContainerParams::new(h.k(), c, p, family, &constants),
        records
            .into_iter()
            .map(|(fingerprint, container)| ContainerRecord {
                fingerprint,
                container,
            })
            .collect(),
    );
    Ok((map, outcomes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use crate::instances::{ap_hypergraph, minimal_degree_constant};

    fn k3() -> UniformHypergraph {
        UniformHypergraph::from_edges(2, 3, [[1, 2], [1, 3], [2, 3]]).unwrap()
    }

    #[test]
    fn params_derivations() {
        let pp = PropParams::new(int(2), ratio(1, 2), 2).unwrap();
        assert_eq!(pp.delta(), ratio(1, 32 * 32));
        assert_eq!(pp.c_level(2), int(1));
        assert_eq!(pp.c_level(1), ratio(1, 32));
        assert_eq!(pp.b(3), 2);
        assert_eq!(pp.b(4), 2);
        assert!(PropParams::new(int(2), int(1), 2).is_err());
        assert!(PropParams::new(int(0), ratio(1, 2), 2).is_err());
    }

    #[test]
    fn empty_set_has_empty_fingerprint() {
        let h = k3();
        let pp = PropParams::new(int(2), ratio(1, 2), 2).unwrap();
        let out = prop_fingerprint(&h, &VertexSet::empty(3), &pp, None).unwrap();
        assert!(out.fingerprint.parts.concat().is_empty());
        assert!(out.container.is_empty());
        assert_eq!((out.q, out.r), (1, 2));
    }

    #[test]
    fn triangle_single_vertex() {
        let h = k3();
        let pp = PropParams::new(int(2), ratio(1, 2), 2).unwrap();
        let i = VertexSet::from_ids(3, [1]).unwrap();
        let out = prop_fingerprint(&h, &i, &pp, None).unwrap();
        assert_eq!(out.fingerprint.parts, vec![vec![1]]);
        assert!(out.container.is_empty());
        let again = prop_fingerprint(&h, &out.fingerprint.set(3), &pp, None).unwrap();
        assert_eq!(again, out);
    }

    #[test]
    fn prop_errors() {
        let h = k3();
        let pp = PropParams::new(int(2), ratio(1, 2), 2).unwrap();
        let bad = VertexSet::from_ids(3, [1, 2]).unwrap();
        assert!(matches!(prop_fingerprint(&h, &bad, &pp, None), Err(Error::Contract(_))));
        let tight = PropParams::new(ratio(1, 2), ratio(1, 2), 2).unwrap();
        let err = prop_fingerprint(&h, &VertexSet::empty(3), &tight, None).unwrap_err();
        assert!(matches!(&err, Error::Precondition(m) if m.contains("ℓ = 1")), "{err}");
        let empty = UniformHypergraph::edgeless(2, VertexSet::full(3));
        assert!(matches!(
            prop_fingerprint(&empty, &VertexSet::empty(3), &pp, None),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn one_uniform_container_is_zero_degree_vertices() {
        let h = UniformHypergraph::from_edges(1, 4, [[2], [3]]).unwrap();
        let pp = PropParams::new(int(2), ratio(1, 2), 1).unwrap();
        let i = VertexSet::from_ids(4, [1, 4]).unwrap();
        let out = prop_fingerprint(&h, &i, &pp, None).unwrap();
        assert_eq!(out.container.to_vec(), vec![1, 4]);
        assert!(out.fingerprint.parts.is_empty());
    }

    fn ap_setup(n: u32) -> (UniformHypergraph, DensityFamily, Rational, Rational) {
        let h = ap_hypergraph(n, 3).unwrap();
        let alpha = oracle::independence_number(&h, 22).unwrap();
        let eps = oracle::density_epsilon(&h, alpha + 1, 22).unwrap();
        let family = DensityFamily::min_size(alpha + 1, n as usize, eps).unwrap();
        let p = ratio(1, 3);
        let c = minimal_degree_constant(&h, &p).unwrap();
        (h, family, c, p)
    }

    #[test]
    fn cover_on_small_ap() {
        let (h, family, c, p) = ap_setup(9);
        let sets = oracle::enumerate_independent_sets(&h, None, 22).unwrap();
        let mut audit = LemmaAudit::new();
        let (map, outs) = build_for_sets(&h, &family, &c, &p, &sets, BuildOptions::default(), Some(&mut audit)).unwrap();
        assert_eq!(audit.total_violations(), 0, "{audit}");
        assert!(audit.cover.checked > 0);
        for (i, out) in sets.iter().zip(&outs) {
            let g = out.fingerprint_set();
            assert!(g.is_subset(i));
            assert!(i.difference(&g).is_subset(&out.container));
            assert!(!family.contains(&out.container));
        }
        assert!(map.records.len() <= sets.len());
    }

    #[test]
    fn empty_set_container_is_fixed() {
        let (h, family, c, p) = ap_setup(9);
        let a = build_container(&h, &VertexSet::empty(9), &family, &c, &p, BuildOptions::default(), None).unwrap();
        let b = build_container(&h, &VertexSet::empty(9), &family, &c, &p, BuildOptions::default(), None).unwrap();
        assert_eq!(a, b);
        assert!(a.fingerprint_set().is_empty());
    }

    #[test]
    fn whole_vertex_set_family_takes_one_round() {
        let h = ap_hypergraph(9, 3).unwrap();
        let family = DensityFamily::min_size(9, 9, int(1)).unwrap();
        let p = ratio(1, 3);
        let c = minimal_degree_constant(&h, &p).unwrap();
        let i = VertexSet::from_ids(9, [1, 2, 4]).unwrap();
        let out = build_container(&h, &i, &family, &c, &p, BuildOptions::default(), None).unwrap();
        assert_eq!(out.rounds(), 1);
        assert!(out.container.len() < 9);
    }

    #[test]
    fn empty_family_returns_everything() {
        let h = ap_hypergraph(9, 3).unwrap();
        let family = parse_family("none", 9, ratio(1, 2)).unwrap();
        let p = ratio(1, 3);
        let c = minimal_degree_constant(&h, &p).unwrap();
        let i = VertexSet::from_ids(9, [1, 2]).unwrap();
        let out = build_container(&h, &i, &family, &c, &p, BuildOptions::default(), None).unwrap();
        assert_eq!(out.rounds(), 0);
        assert_eq!(out.container, VertexSet::full(9));
    }

    #[test]
    fn edgeless_needs_opt_in() {
        let h = UniformHypergraph::edgeless(3, VertexSet::full(5));
        let family = DensityFamily::min_size(5, 5, int(1)).unwrap();
        let i = VertexSet::from_ids(5, [1, 2]).unwrap();
        let strict = build_container(&h, &i, &family, &int(1), &ratio(1, 2), BuildOptions::default(), None);
        assert!(matches!(strict, Err(Error::Precondition(_))));
        let opts = BuildOptions {
            allow_edgeless: true,
            ..BuildOptions::default()
        };
        let out = build_container(&h, &i, &family, &int(1), &ratio(1, 2), opts, None).unwrap();
        assert_eq!(out.container, VertexSet::full(5));
    }

    #[test]
    fn overstated_epsilon_is_reported() {
        let (h, _, c, p) = ap_setup(9);
        let family = DensityFamily::min_size(6, 9, ratio(1, 2)).unwrap();
        let sets = oracle::enumerate_independent_sets(&h, None, 22).unwrap();
        let errors: Vec<Error> = sets
            .iter()
            .filter_map(|i| build_container(&h, i, &family, &c, &p, BuildOptions::default(), None).err())
            .collect();
        assert!(!errors.is_empty());
        for err in errors {
            assert!(matches!(&err, Error::Precondition(m) if m.contains("density")), "{err}");
        }
    }

    #[test]
    fn theorem_constants() {
        let t = TheoremConstants::new(2, &int(1), &ratio(1, 2), &int(1)).unwrap();
        assert_eq!(t.log_bound, int(0));
        assert_eq!(t.big_c, int(1));
        assert_eq!(t.round_cap, BigInt::one());
        let t = TheoremConstants::new(3, &int(2), &ratio(1, 2), &ratio(1, 4)).unwrap();
        assert_eq!(t.round.c, int(8));
        assert!(t.big_c > int(2) * t.delta.recip());
    }
}
