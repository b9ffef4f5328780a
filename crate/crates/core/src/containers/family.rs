//! Increasing families `F` of vertex sets and their density guarantees.

use std::fmt::Debug;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::vertex_set::VertexSet;

/// Membership predicate of an increasing family.
pub trait Upset: Send + Sync + Debug {
    fn contains(&self, a: &VertexSet) -> bool;

    /// Text form accepted by [`parse_family`].
    fn describe(&self) -> String;
}

/// Sets with at least `s` elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinSize(pub usize);

impl Upset for MinSize {
    fn contains(&self, a: &VertexSet) -> bool {
        a.len() >= self.0
    }

    fn describe(&self) -> String {
        format!("min-size:{}", self.0)
    }
}

/// The empty family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NoSets;

impl Upset for NoSets {
    fn contains(&self, _: &VertexSet) -> bool {
        false
    }

    fn describe(&self) -> String {
        "none".into()
    }
}

/// An increasing family together with the density constant `ε` of the
/// hypergraph with respect to it and a declared size floor: every member has
/// at least `min_fraction * v(H)` vertices.
#[derive(Clone, Debug)]
pub struct DensityFamily {
    upset: Arc<dyn Upset>,
    epsilon: Rational,
    min_fraction: Rational,
}

impl DensityFamily {
    pub fn new(upset: Arc<dyn Upset>, epsilon: Rational, min_fraction: Rational) -> Result<Self> {
        if epsilon <= Rational::zero() || epsilon > Rational::one() {
            return Err(Error::input(format!(
                "ε must lie in (0, 1], got {}",
                exact::format_rational(&epsilon)
            )));
        }
        if min_fraction < epsilon {
            return Err(Error::input(format!(
                "family size floor {} is below ε = {}",
                exact::format_rational(&min_fraction),
                exact::format_rational(&epsilon)
            )));
        }
        Ok(DensityFamily {
            upset,
            epsilon,
            min_fraction,
        })
    }

    /// `{A : |A| >= s}` over a ground set of `v` vertices.
    pub fn min_size(s: usize, v: usize, epsilon: Rational) -> Result<Self> {
        if s == 0 || s > v {
            return Err(Error::input(format!("min-size {s} outside [1, {v}]")));
        }
        Self::new(Arc::new(MinSize(s)), epsilon, Rational::new(s.into(), v.into()))
    }

    pub fn contains(&self, a: &VertexSet) -> bool {
        self.upset.contains(a)
    }

    pub fn epsilon(&self) -> &Rational {
        &self.epsilon
    }

    pub fn min_fraction(&self) -> &Rational {
        &self.min_fraction
    }

    pub fn describe(&self) -> String {
        self.upset.describe()
    }

    /// Checks the declared size floor for a member `a` of a ground set of
    /// `v` vertices.
    pub fn check_floor(&self, a: &VertexSet, v: usize) -> Result<()> {
        if exact::from_u64(a.len() as u64) < &self.min_fraction * exact::from_u64(v as u64) {
            return Err(Error::precondition(format!(
                "member of {} with {} vertices is below the declared floor {}·{v}",
                self.describe(),
                a.len(),
                exact::format_rational(&self.min_fraction)
            )));
        }
        Ok(())
    }
}

/// Parses `min-size:<s>` or `none`.
pub fn parse_family(spec: &str, v: usize, epsilon: Rational) -> Result<DensityFamily> {
    let spec = spec.trim();
    if spec == "none" {
        return DensityFamily::new(Arc::new(NoSets), epsilon, Rational::one());
    }
    if let Some(s) = spec.strip_prefix("min-size:") {
        let s: usize = s
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("bad family size in {spec:?}")))?;
        return DensityFamily::min_size(s, v, epsilon);
    }
    Err(Error::input(format!(
        "unknown family {spec:?}; expected min-size:<s> or none"
    )))
}

/// Spot-checks monotonicity on random pairs `A ⊆ B` of subsets of `ground`.
/// Returns the first counterexample found.
pub fn sample_monotonicity(
    family: &DensityFamily,
    ground: &VertexSet,
    samples: usize,
    seed: u64,
) -> Option<(VertexSet, VertexSet)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ids = ground.to_vec();
    for _ in 0..samples {
        let mut a = VertexSet::empty(ground.capacity());
        let mut b = VertexSet::empty(ground.capacity());
        for &x in &ids {
            match rng.random_range(0..3u8) {
                0 => {
                    a.insert(x);
                    b.insert(x);
                }
                1 => b.insert(x),
                _ => {}
            }
        }
        if family.contains(&a) && !family.contains(&b) {
            return Some((a, b));
        }
    }
    None
}
