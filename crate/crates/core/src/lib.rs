//! Exact algorithms and instance generators for the conflict-free cut
//! problem: given a connected graph and a conflict relation on its edges,
//! find an edge cut containing no conflicting pair.

pub mod cnf;
pub mod error;
pub mod format;
pub mod fpt;
pub mod generators;
pub mod model;
pub mod oracle;
mod par;
pub mod sat;
pub mod solve;

pub use error::{Error, Result};
pub use fpt::solve_fpt;
pub use model::{
    boundary, is_conflict_free, line_graph_conflicts, verify_cut, Bipartition, ConflictGraph,
    Cut, Edge, Instance, MultiGraph, Side, VerifyReport,
};
pub use oracle::{min_conflict_free_cut, scan_vertex_boundaries, solve_bruteforce};
pub use sat::{encode_symmetric, solve_sat_pipeline, Backend};
pub use solve::{solve, Algorithm, Answer, Method, SolveOptions};
