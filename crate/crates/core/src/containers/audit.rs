//! Run-time checks of the level-step guarantees.
//!
//! When an audit is passed to the fingerprint procedure, every level step is
//! checked against the properties the construction relies on. Conditional
//! properties are only counted when their hypothesis holds.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::exact::{self, Rational};
use crate::hypergraph::{subset_degrees, UniformHypergraph};
use crate::scythe::{scythe_step, ScytheResult, ThresholdTable};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: u64,
    pub violated: u64,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.violated += 1;
        }
    }

    fn merge(&mut self, other: &Tally) {
        self.checked += other.checked;
        self.violated += other.violated;
    }
}

/// Counters for every property checked on level steps.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaAudit {
    pub steps: u64,
    /// `H_i` is `i`-uniform on `V(H)`.
    pub uniformity: Tally,
    /// `I` stays independent in `H_i`.
    pub independence: Tally,
    /// `B_i ⊆ I ⊆ A_i ∪ B_i`.
    pub cover: Tally,
    /// Rerunning the step on `B_i` alone reproduces `(A_i, B_i, H_i)`.
    pub replay: Tally,
    /// `Δ_{ℓ+1}(H_{i+1}) <= Δ_{ℓ+1}^{i+1}` implies `Δ_ℓ(H_i) <= Δ_ℓ^i`.
    pub degree_bound: Tally,
    /// Under the density and degree hypotheses, `H_i` keeps many edges or
    /// `A_i` is small.
    pub dense_or_small: Tally,
    /// First few violation descriptions, for reporting.
    pub examples: Vec<String>,
}

const MAX_EXAMPLES: usize = 8;

/// Quantities of the top hypergraph needed by the conditional checks.
pub(crate) struct AuditContext<'a> {
    pub top_edges: u64,
    pub top_vertices: usize,
    pub k: usize,
    pub p: &'a Rational,
    /// `c_i` for `i = 0..=k` (index 0 unused).
    pub c_levels: &'a [Rational],
}

impl LemmaAudit {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn total_violations(&self) -> u64 {
        [
            self.uniformity,
            self.independence,
            self.cover,
            self.replay,
            self.degree_bound,
            self.dense_or_small,
        ]
        .iter()
        .map(|t| t.violated)
        .sum()
    }

    pub fn merge(&mut self, other: &LemmaAudit) {
        self.steps += other.steps;
        self.uniformity.merge(&other.uniformity);
        self.independence.merge(&other.independence);
        self.cover.merge(&other.cover);
        self.replay.merge(&other.replay);
        self.degree_bound.merge(&other.degree_bound);
        self.dense_or_small.merge(&other.dense_or_small);
        for e in &other.examples {
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(e.clone());
            }
        }
    }

    fn note(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.examples.len() < MAX_EXAMPLES {
            self.examples.push(what());
        }
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn check_step(
        &mut self,
        ctx: &AuditContext<'_>,
        h_next: &UniformHypergraph,
        independent: &VertexSet,
        table: &ThresholdTable,
        b: usize,
        i: usize,
        out: &ScytheResult,
    ) {
        self.steps += 1;

        let uniform = out.level.k() == i && out.level.vertices() == h_next.vertices();
        self.uniformity.record(uniform);
        self.note(uniform, || format!("level {i}: H_i not {i}-uniform on V(H)"));

        let indep = out.level.is_independent(independent);
        self.independence.record(indep);
        self.note(indep, || format!("level {i}: I dependent in H_i"));

        let selected = out.selected_set();
        let cover = selected.is_subset(independent)
            && independent.is_subset(&out.remaining.union(&selected));
        self.cover.record(cover);
        self.note(cover, || format!("level {i}: B ⊆ I ⊆ A ∪ B fails for I = {independent:?}"));

        let replay = scythe_step(h_next, &selected, table, b, i).is_ok_and(|r| r == *out);
        self.replay.record(replay);
        self.note(replay, || format!("level {i}: replay on B = {selected:?} differs"));

        let next_max = max_degrees(h_next);
        let level_max = max_degrees(&out.level);
        for ell in 1..=i {
            if exact::from_u64(next_max[ell + 1]) <= *table.get(ell + 1, i + 1) {
                let ok = exact::from_u64(level_max[ell]) <= *table.get(ell, i);
                self.degree_bound.record(ok);
                self.note(ok, || format!("level {i}, ℓ = {ell}: Δ_ℓ(H_i) above threshold"));
            }
        }

        let e_top = exact::from_u64(ctx.top_edges);
        let v_top = exact::from_u64(ctx.top_vertices as u64);
        let dense_enough = exact::from_u64(h_next.edge_count())
            >= &ctx.c_levels[i + 1] * exact::pow(ctx.p, (ctx.k - i - 1) as u32) * &e_top;
        let bounded = (1..=i + 1).all(|ell| exact::from_u64(next_max[ell]) <= *table.get(ell, i + 1));
        if dense_enough && bounded && !ctx.c_levels[i].is_zero() {
            let many_edges = exact::from_u64(out.level.edge_count())
                >= &ctx.c_levels[i] * exact::pow(ctx.p, (ctx.k - i) as u32) * &e_top;
            let small = exact::from_u64(out.remaining.len() as u64)
                <= (Rational::from_integer(1.into()) - &ctx.c_levels[i]) * &v_top;
            let ok = many_edges || small;
            self.dense_or_small.record(ok);
            self.note(ok, || format!("level {i}: H_i sparse and A_i large"));
        }
    }
}

/// `Δ_ℓ(g)` for `ℓ = 0..=k` (index 0 unused).
fn max_degrees(g: &UniformHypergraph) -> Vec<u64> {
    let mut out = vec![0; g.k() + 1];
    for (ell, slot) in out.iter_mut().enumerate().skip(1) {
        *slot = subset_degrees(g, ell).into_values().max().unwrap_or(0);
    }
    out
}

impl fmt::Display for LemmaAudit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "level steps audited: {}", self.steps)?;
        for (name, t) in [
            ("uniformity", self.uniformity),
            ("independence", self.independence),
            ("cover", self.cover),
            ("replay", self.replay),
            ("degree bound", self.degree_bound),
            ("dense or small", self.dense_or_small),
        ] {
            writeln!(f, "  {name:<15} checked {:>8}  violated {}", t.checked, t.violated)?;
        }
        for e in &self.examples {
            writeln!(f, "  ! {e}")?;
        }
        Ok(())
    }
}
