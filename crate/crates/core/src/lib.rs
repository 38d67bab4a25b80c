//! Exact vertex reliability of small graphs and single-edge insertion heuristics.
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`]: bitset graphs, paths, connectivity, canonical keys, file formats
//! * [`spectral`]: Laplacian, cyclic Jacobi eigensolver, Fiedler machinery
//! * [`reliability`]: connected induced subgraph counts, polynomial, exact score
//! * [`heuristics`]: the insertion rules and their post-hoc refinements
//! * [`generators`]: constrained ER/BA/WS datasets
//! * [`evaluation`]: RDI/MRDI, summaries, signed-rank tests, timing
//!
//! Per-graph work fans out over rayon when the `parallel` feature is on
//! (the default); without it the same code runs sequentially.

pub mod evaluation;
pub mod generators;
pub mod graph;
pub mod heuristics;
pub mod par;
pub mod reliability;
pub mod spectral;

pub use graph::{EdgeInsertion, GraphError, SimpleGraph};
