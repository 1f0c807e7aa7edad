//! Egalitarian orientations of undirected graphs.
//!
//! Given an undirected multigraph, the crate computes orientations that
//! spread indegree as evenly as the topology allows:
//!
//! - [`minlex`]: path-reversal search for the orientation whose decreasing
//!   indegree sequence is lexicographically minimum, plus the reversal
//!   calculus (path, weak and cycle reversals) and convex-cost evaluation.
//! - [`strong`]: a strongly connected orientation minimizing the maximum
//!   indegree, with the flow-based reversibility test, the subset lower
//!   bound and a polynomial optimality certificate.
//! - [`routing`]: ear decompositions of strong orientations and compact
//!   interval routing tables with one interval per arc, plus a message
//!   routing simulator.
//! - [`acyclic`]: min-degree stripping for acyclic orientations minimizing
//!   the maximum indegree.
//! - [`reduction`]: set-cover gadget reductions producing hard instances of
//!   acyclic orientation with few maximum-indegree vertices, with witness
//!   converters in both directions.
//! - [`oracle`]: exhaustive enumeration over all `2^m` orientations of small
//!   graphs, the ground truth every optimizer is tested against.
//!
//! The `parallel` feature (on by default) enables rayon-backed enumeration
//! in [`oracle`] and parallel all-pairs simulation in [`routing`]; without
//! it everything runs sequentially through the same API.

pub mod acyclic;
pub mod corpus;
pub mod graph;
pub mod minlex;
pub mod oracle;
pub mod reduction;
pub mod routing;
pub mod strong;

pub use graph::{DegreeSequence, EdgeId, Orientation, UndirectedGraph, VertexId};
