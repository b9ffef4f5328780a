//! Container maps `S -> f(S)`, their counting bound and their verification.

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{build_for_sets, build_with, parse_family, BuildOptions, ContainerOutcome, DensityFamily, TheoremConstants};
use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::hypergraph::UniformHypergraph;
use crate::vertex_set::VertexSet;

mod rational_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exact::{self, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&exact::format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        exact::parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Parameters a map was built with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainerParams {
    pub k: usize,
    #[serde(with = "rational_string")]
    pub p: Rational,
    #[serde(with = "rational_string")]
    pub c: Rational,
    #[serde(with = "rational_string")]
    pub eps: Rational,
    #[serde(rename = "C", with = "rational_string")]
    pub big_c: Rational,
    pub family: String,
}

impl ContainerParams {
    pub(crate) fn new(
        k: usize,
        c: &Rational,
        p: &Rational,
        family: &DensityFamily,
        constants: &TheoremConstants,
    ) -> Self {
        ContainerParams {
            k,
            p: p.clone(),
            c: c.clone(),
            eps: family.epsilon().clone(),
            big_c: constants.big_c.clone(),
            family: family.describe(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainerRecord {
    pub fingerprint: Vec<u32>,
    pub container: Vec<u32>,
}

/// Fingerprint → container records, sorted by fingerprint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainerMap {
    pub params: ContainerParams,
    pub records: Vec<ContainerRecord>,
}

impl ContainerMap {
    pub fn new(params: ContainerParams, mut records: Vec<ContainerRecord>) -> Self {
        for r in &mut records {
            r.fingerprint.sort_unstable();
            r.container.sort_unstable();
        }
        records.sort_by(|a, b| a.fingerprint.cmp(&b.fingerprint));
        ContainerMap { params, records }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let map: ContainerMap =
            serde_json::from_str(text).map_err(|e| Error::input(format!("container map: {e}")))?;
        let sorted = map
            .records
            .windows(2)
            .all(|w| w[0].fingerprint < w[1].fingerprint);
        if !sorted {
            return Err(Error::input("container map records must be sorted with distinct fingerprints"));
        }
        Ok(map)
    }

    pub fn container_of(&self, fingerprint: &[u32]) -> Option<&[u32]> {
        self.records
            .binary_search_by(|r| r.fingerprint.as_slice().cmp(fingerprint))
            .ok()
            .map(|i| self.records[i].container.as_slice())
    }

    /// Recreates the family the map was built against.
    pub fn family(&self, v: usize) -> Result<DensityFamily> {
        parse_family(&self.params.family, v, self.params.eps.clone())
    }
}

/// `Σ_S C(|f(S)|, m - |S|)`, terms with `m < |S|` omitted.
pub fn container_count_bound(map: &ContainerMap, m: usize) -> BigUint {
    map.records
        .iter()
        .filter(|r| r.fingerprint.len() <= m)
        .map(|r| exact::binomial(r.container.len() as u64, (m - r.fingerprint.len()) as u64))
        .fold(BigUint::zero(), |acc, x| acc + x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContractResult {
    pub name: &'static str,
    pub checked: u64,
    pub violations: u64,
    pub first_failure: Option<String>,
}

impl ContractResult {
    fn new(name: &'static str) -> Self {
        ContractResult {
            name,
            checked: 0,
            violations: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub witnesses: usize,
    pub records: usize,
    pub contracts: Vec<ContractResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.contracts.iter().all(ContractResult::passed)
    }

    pub fn contract(&self, name: &str) -> Option<&ContractResult> {
        self.contracts.iter().find(|c| c.name == name)
    }

    pub fn summary(&self) -> String {
        let mut out = format!("{} witnesses, {} records\n", self.witnesses, self.records);
        for c in &self.contracts {
            out.push_str(&format!(
                "{:<17} {}  ({} checked, {} violations)\n",
                c.name,
                if c.passed() { "PASS" } else { "FAIL" },
                c.checked,
                c.violations
            ));
            if let Some(f) = &c.first_failure {
                out.push_str(&format!("    first failure: {f}\n"));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// All pairs are checked for consistency up to this many witnesses.
    pub exhaustive_pairs_up_to: usize,
    /// Number of random pairs checked above that size.
    pub sampled_pairs: u64,
    pub seed: u64,
    pub build: BuildOptions,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            exhaustive_pairs_up_to: 5000,
            sampled_pairs: 1_000_000,
            seed: 0,
            build: BuildOptions::default(),
        }
    }
}

/// Checks every guarantee of `map` against the given witnesses, which should
/// be the independent sets the map was built from.
///
/// Returns an error only for unusable input (mismatched hypergraph, bad
/// parameters, dependent witnesses); broken guarantees are report entries.
pub fn verify_containers(
    h: &UniformHypergraph,
    map: &ContainerMap,
    witnesses: &[VertexSet],
    opts: VerifyOptions,
) -> Result<VerifyReport> {
    if map.params.k != h.k() {
        return Err(Error::input(format!(
            "map was built for k = {}, hypergraph is {}-uniform",
            map.params.k,
            h.k()
        )));
    }
    let v = h.vertex_count();
    let family = map.family(v)?;
    let (c, p) = (&map.params.c, &map.params.p);
    let constants = TheoremConstants::new(h.k(), c, p, family.epsilon())?;
    let capacity = h.capacity();
    let to_set = |ids: &[u32]| VertexSet::from_ids(capacity, ids.iter().copied());

    let (rebuilt, outcomes) = match build_for_sets(h, &family, c, p, witnesses, opts.build, None) {
        Ok(x) => (Some(x.0), x.1),
        Err(Error::Contract(_)) => (None, per_witness(h, &family, c, &constants, witnesses, opts.build)?),
        Err(e) => return Err(e),
    };

    let mut cover = ContractResult::new("cover");
    for (i, out) in witnesses.iter().zip(&outcomes) {
        let g = out.fingerprint_set();
        let key = g.to_vec();
        let within = g.is_subset(i);
        cover.record(within, || format!("g(I) = {g:?} not inside I = {i:?}"));
        let rest = i.difference(&g);
        match map.container_of(&key) {
            None => cover.record(false, || format!("no record for fingerprint {key:?} of I = {i:?}")),
            Some(f) => {
                let f = to_set(f)?;
                cover.record(rest.is_subset(&f), || {
                    format!("I \\ g(I) = {rest:?} not inside f = {f:?}")
                });
            }
        }
    }

    let mut avoids = ContractResult::new("avoids-family");
    let mut size = ContractResult::new("fingerprint-size");
    for out in &outcomes {
        let len = out.fingerprint_set().len();
        let bound = constants.fingerprint_bound(v, out.rounds());
        size.record(exact::from_u64(len as u64) <= bound, || {
            format!("fingerprint {:?} exceeds C·p·v + (k-1)·J", out.fingerprint_set())
        });
    }
    for r in &map.records {
        let f = to_set(&r.container)?;
        avoids.record(!family.contains(&f), || {
            format!("container {f:?} of {:?} lies in {}", r.fingerprint, family.describe())
        });
    }

    let consistency = check_consistency(witnesses, &outcomes, opts);

    let mut idempotence = ContractResult::new("idempotence");
    let again: Vec<Result<ContainerOutcome>> = outcomes
        .par_iter()
        .map(|out| build_with(h, &out.fingerprint_set(), &family, c, &constants, opts.build, None))
        .collect();
    for (out, twice) in outcomes.iter().zip(again) {
        let twice = twice?;
        let ok = twice.fingerprint_set() == out.fingerprint_set() && twice.container == out.container;
        idempotence.record(ok, || format!("g(g(I)) differs from g(I) = {:?}", out.fingerprint_set()));
    }

    let mut determinism = ContractResult::new("determinism");
    determinism.record(constants.big_c == map.params.big_c, || "stored C differs from the recomputed value".into());
    match rebuilt {
        Some(m) => determinism.record(m.records == map.records, || {
            let diff = m
                .records
                .iter()
                .zip(&map.records)
                .find(|(a, b)| a != b)
                .map(|(a, _)| format!("first differing record: rebuilt {a:?}"))
                .unwrap_or_else(|| format!("{} rebuilt records vs {} stored", m.records.len(), map.records.len()));
            format!("rebuilt map differs: {diff}")
        }),
        None => determinism.record(false, || "two witnesses with equal fingerprints got different containers".into()),
    }

    Ok(VerifyReport {
        witnesses: witnesses.len(),
        records: map.records.len(),
        contracts: vec![cover, avoids, size, consistency, idempotence, determinism],
    })
}

fn per_witness(
    h: &UniformHypergraph,
    family: &DensityFamily,
    c: &Rational,
    constants: &TheoremConstants,
    witnesses: &[VertexSet],
    opts: BuildOptions,
) -> Result<Vec<ContainerOutcome>> {
    witnesses
        .par_iter()
        .map(|i| build_with(h, i, family, c, constants, opts, None))
        .collect()
}

fn check_consistency(witnesses: &[VertexSet], outcomes: &[ContainerOutcome], opts: VerifyOptions) -> ContractResult {
    let prints: Vec<VertexSet> = outcomes.iter().map(ContainerOutcome::fingerprint_set).collect();
    let pair_ok = |a: usize, b: usize| -> bool {
        let related = prints[a].is_subset(&witnesses[b]) && prints[b].is_subset(&witnesses[a]);
        !related || (prints[a] == prints[b] && outcomes[a].container == outcomes[b].container)
    };
    let mut result = ContractResult::new("consistency");
    let n = witnesses.len();
    let failures: Vec<(u64, Option<(usize, usize)>)> = if n <= opts.exhaustive_pairs_up_to {
        (0..n)
            .into_par_iter()
            .map(|a| {
                let mut bad = 0;
                let mut first = None;
                for b in a + 1..n {
                    if !pair_ok(a, b) {
                        bad += 1;
                        first.get_or_insert((a, b));
                    }
                }
                (bad, first)
            })
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let pairs: Vec<(usize, usize)> = (0..opts.sampled_pairs)
            .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
            .collect();
        pairs
            .par_iter()
            .map(|&(a, b)| if pair_ok(a, b) { (0, None) } else { (1, Some((a, b))) })
            .collect()
    };
    let checked = if n <= opts.exhaustive_pairs_up_to {
        (n as u64) * (n as u64).saturating_sub(1) / 2
    } else {
        opts.sampled_pairs
    };
    result.checked = checked;
    result.violations = failures.iter().map(|f| f.0).sum();
    result.first_failure = failures.iter().find_map(|f| f.1).map(|(a, b)| {
        format!(
            "I = {:?} and I' = {:?} have related but different fingerprints",
            witnesses[a], witnesses[b]
        )
    });
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::containers::{build_container_family, Source};
    use crate::exact::{int, ratio};
    use crate::instances::{ap_hypergraph, minimal_degree_constant};
    use crate::oracle;

    fn params() -> ContainerParams {
        ContainerParams {
            k: 3,
            p: ratio(1, 3),
            c: int(3),
            eps: ratio(1, 10),
            big_c: int(100),
            family: "min-size:4".into(),
        }
    }

    #[test]
    fn count_bound_examples() {
        let single = ContainerMap::new(params(), vec![ContainerRecord { fingerprint: vec![], container: vec![1, 2, 3, 4] }]);
        assert_eq!(container_count_bound(&single, 0), BigUint::from(1u32));
        assert_eq!(container_count_bound(&single, 2), BigUint::from(6u32));
        let two = ContainerMap::new(
            params(),
            vec![
                ContainerRecord { fingerprint: vec![2], container: vec![3, 4] },
                ContainerRecord { fingerprint: vec![], container: vec![1] },
            ],
        );
        assert_eq!(two.records[0].fingerprint, Vec::<u32>::new());
        assert_eq!(container_count_bound(&two, 0), BigUint::from(1u32));
        assert_eq!(container_count_bound(&two, 1), BigUint::from(2u32));
        assert_eq!(container_count_bound(&two, 2), BigUint::from(2u32));
        assert_eq!(container_count_bound(&two, 4), BigUint::zero());
    }

    #[test]
    fn json_round_trip() {
        let map = ContainerMap::new(params(), vec![ContainerRecord { fingerprint: vec![1], container: vec![2, 5] }]);
        let text = map.to_json();
        assert!(text.contains("\"C\": \"100/1\""));
        assert!(text.contains("\"p\": \"1/3\""));
        assert_eq!(ContainerMap::from_json(&text).unwrap(), map);
        assert_eq!(ContainerMap::from_json(&text).unwrap().to_json(), text);
    }

    fn ap10() -> (UniformHypergraph, ContainerMap, Vec<VertexSet>) {
        let h = ap_hypergraph(10, 3).unwrap();
        let alpha = oracle::independence_number(&h, 22).unwrap();
        let eps = oracle::density_epsilon(&h, alpha + 1, 22).unwrap();
        let family = DensityFamily::min_size(alpha + 1, 10, eps).unwrap();
        let p = ratio(1, 4);
        let c = minimal_degree_constant(&h, &p).unwrap();
        let map = build_container_family(&h, &family, &c, &p, &Source::All { limit: 22 }, BuildOptions::default(), None).unwrap();
        let sets = oracle::enumerate_independent_sets(&h, None, 22).unwrap();
        (h, map, sets)
    }

    #[test]
    fn fresh_map_verifies() {
        let (h, map, sets) = ap10();
        let report = verify_containers(&h, &map, &sets, VerifyOptions::default()).unwrap();
        assert!(report.passed(), "{}", report.summary());
        assert!(map.records.len() <= sets.len());
        for m in 0..=10 {
            let brute = oracle::count_independent_sets(&h, 22).unwrap().count(m);
            assert!(brute <= container_count_bound(&map, m));
        }
    }

    #[test]
    fn mutated_container_is_caught() {
        let (h, mut map, sets) = ap10();
        map.records[0].container = (1..=10).collect();
        let report = verify_containers(&h, &map, &sets, VerifyOptions::default()).unwrap();
        assert!(!report.contract("avoids-family").unwrap().passed());
        assert!(!report.passed());
    }

    #[test]
    fn deleted_fingerprint_vertex_is_caught() {
        let (h, mut map, sets) = ap10();
        let idx = map.records.iter().position(|r| !r.fingerprint.is_empty()).unwrap();
        map.records[idx].fingerprint.pop();
        let map = ContainerMap::new(map.params.clone(), map.records.clone());
        let report = verify_containers(&h, &map, &sets, VerifyOptions::default()).unwrap();
        assert!(!report.contract("cover").unwrap().passed(), "{}", report.summary());
    }

    #[test]
    fn source_of_empty_set_gives_one_record() {
        let h = ap_hypergraph(10, 3).unwrap();
        let eps = oracle::density_epsilon(&h, 6, 22).unwrap();
        let family = DensityFamily::min_size(6, 10, eps).unwrap();
        let p = ratio(1, 4);
        let c = minimal_degree_constant(&h, &p).unwrap();
        let map = build_container_family(&h, &family, &c, &p, &Source::Sets(vec![VertexSet::empty(10)]), BuildOptions::default(), None).unwrap();
        assert_eq!(map.records.len(), 1);
        assert!(map.records[0].fingerprint.is_empty());
    }

    #[test]
    fn size_bound_allows_rounding_of_b() {
        // one edge, ε = 1: C = k - 1 and a single round already takes ⌈pv⌉ > pv vertices
        let h = UniformHypergraph::from_edges(2, 7, [[3, 7]]).unwrap();
        let p = ratio(1, 2);
        let c = minimal_degree_constant(&h, &p).unwrap();
        let family = DensityFamily::min_size(7, 7, int(1)).unwrap();
        let witnesses = oracle::enumerate_independent_sets(&h, None, 22).unwrap();
        let map = build_container_family(&h, &family, &c, &p, &Source::Sets(witnesses.clone()), BuildOptions::default(), None).unwrap();
        let constants = TheoremConstants::new(2, &c, &p, &int(1)).unwrap();
        let longest = map.records.iter().map(|r| r.fingerprint.len()).max().unwrap();
        assert!(exact::from_u64(longest as u64) > constants.fingerprint_bound(7, 0));
        let report = verify_containers(&h, &map, &witnesses, VerifyOptions::default()).unwrap();
        assert!(report.passed(), "{}", report.summary());
    }
}
