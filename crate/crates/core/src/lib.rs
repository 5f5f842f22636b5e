//! Connectivity-keeping trees in bipartite graphs.
//!
//! Given a k-connected bipartite graph `G` with minimum degree at least
//! `k + t`, look for a copy `T'` of a tree `T` such that `G − V(T')` is
//! still k-connected, where `t` is the larger side of `T`'s bipartition.

pub mod cli;
pub mod connectivity;
pub mod constructive;
pub mod graph;
pub mod harness;
pub mod keeper;
pub mod tree_shapes;

pub use connectivity::{vertex_connectivity, Connectivity};
pub use constructive::{EmbeddingMap, PathWitness};
pub use graph::{Graph, GraphError, Vertex};
pub use tree_shapes::{TreeShape, TreeSpec};
