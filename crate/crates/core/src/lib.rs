//! Domination in permutation graphs.
//!
//! The graph of a permutation π has an edge between `i < j` whenever `j`
//! precedes `i` in the one-line notation of π. This crate computes exact and
//! heuristic dominating sets of such graphs, evaluates closed-form and
//! recursive counts of graphs with given domination data, builds extremal
//! permutations, and checks all of it against exhaustive enumeration of `S_n`.

pub mod constructions;
pub mod counting;
pub mod domination;
pub mod error;
pub mod graph;
pub mod heuristic;
pub mod oracle;
pub mod perm;
pub mod polynomial;
pub mod sequences;
pub mod verify;
pub mod vertex_set;

pub use domination::{DominationResult, Method, NeighborClassification};
pub use error::{Error, Result};
pub use graph::{build_graph, PermutationGraph};
pub use perm::{parse_permutation, Permutation};
pub use vertex_set::{parse_vertex_list, VertexSet};
