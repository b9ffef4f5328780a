//! Hypergraph containers for independent sets of k-uniform multihypergraphs.
//!
//! The crate builds fingerprints `g(I)` and containers `f(g(I))` for the
//! independent sets of a hypergraph satisfying the usual co-degree
//! conditions, and checks every guarantee of the construction against
//! brute-force oracles on small instances.
//!
//! * [`hypergraph`]: k-uniform multihypergraphs and degree queries.
//! * [`scythe`]: threshold tables, max-degree orders and the single-level step.
//! * [`containers`]: fingerprints, containers, container families and their verification.
//! * [`instances`]: arithmetic-progression, homothetic-copy and graph-copy hypergraphs.
//! * [`oracle`]: exhaustive enumeration and exact counting used as ground truth.

pub mod containers;
pub mod error;
pub mod exact;
pub mod hypergraph;
pub mod instances;
pub mod oracle;
pub mod scythe;
pub mod vertex_set;

pub use error::{Error, Result};
pub use exact::Rational;
pub use hypergraph::{Edge, UniformHypergraph};
pub use vertex_set::VertexSet;
