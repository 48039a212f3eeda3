//! Conflict-free cuts as non-constant satisfiability of a symmetric formula.

mod dpll;
mod encode;
mod pipeline;
mod schoening;
mod split;

pub use dpll::dpll_solve;
pub use encode::{effective_width, encode_symmetric};
pub use pipeline::{solve_sat_pipeline, Backend, PipelineOutcome, SatPipeline};
pub use schoening::{
    schoening_solve, SchoeningConfig, SchoeningOutcome, DEFAULT_BUDGET_CONSTANT,
};
pub use split::{simplify, split_nonconstant, SplitInstance};
