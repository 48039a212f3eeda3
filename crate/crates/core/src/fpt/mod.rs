//! Fixed-parameter algorithm in the vertex cover number.
//!
//! For a minimum vertex cover `X` every side assignment of `X` (the first
//! cover vertex pinned to A) is reduced by [`apply_rules`] and completed by
//! a 2-SAT formula over the independent remainder. Runs in `2^k * poly(n)`.

mod cover;
mod rules;
mod twosat;

pub use cover::{min_vertex_cover, vertex_cover_at_most};
pub use rules::{apply_rules, build_2sat, PartialPartition, RuleOutcome};
pub use twosat::{solve_2sat, TwoCnf};

use crate::cnf::Lit;
use crate::error::{Error, Result};
use crate::model::{boundary, Bipartition, Cut, Instance, Side};
use crate::par::first_some;

pub const DEFAULT_MAX_COVER: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FptSolver {
    /// Largest vertex cover accepted before giving up with a capacity error.
    pub max_cover: usize,
    pub jobs: usize,
}

impl Default for FptSolver {
    fn default() -> Self {
        FptSolver {
            max_cover: DEFAULT_MAX_COVER,
            jobs: 1,
        }
    }
}

impl FptSolver {
    pub fn solve(&self, inst: &Instance) -> Result<Option<Cut>> {
        inst.require_two_vertices()?;
        // smallest k first, so the cover found is minimum
        let cover = (0..=self.max_cover)
            .find_map(|k| vertex_cover_at_most(inst.graph(), k))
            .ok_or_else(|| Error::Capacity {
                what: "vertex cover number".into(),
                limit: self.max_cover,
            })?;
        Ok(self.solve_with_cover(inst, &cover))
    }

    /// Runs the search over a given vertex cover (not necessarily minimum).
    pub fn solve_with_cover(&self, inst: &Instance, cover: &[usize]) -> Option<Cut> {
        let n = inst.vertex_count();
        if cover.is_empty() {
            // no edges; a connected graph with two vertices always has some
            return None;
        }
        let count = 1u64 << (cover.len() - 1);
        first_some(count, self.jobs, |mask| {
            let sides: Vec<Side> = (0..cover.len())
                .map(|i| {
                    if i > 0 && mask >> (i - 1) & 1 == 1 {
                        Side::B
                    } else {
                        Side::A
                    }
                })
                .collect();
            let pp = PartialPartition::from_cover(n, cover, &sides);
            extend(inst, pp).map(|part| boundary(inst.graph(), &part))
        })
    }
}

pub fn solve_fpt(inst: &Instance) -> Result<Option<Cut>> {
    FptSolver::default().solve(inst)
}

/// Completes a partial partition to a proper bipartition with conflict-free
/// boundary, if possible.
pub fn extend(inst: &Instance, pp: PartialPartition) -> Option<Bipartition> {
    let RuleOutcome::Reduced(pp) = apply_rules(inst, pp) else {
        return None;
    };
    let (formula, free) = build_2sat(inst, &pp);
    let assemble = |values: &[bool]| {
        let mut sides: Vec<Side> = (0..pp.vertex_count())
            .map(|v| pp.side(v).unwrap_or(Side::A))
            .collect();
        for (i, &v) in free.iter().enumerate() {
            sides[v] = if values[i] { Side::B } else { Side::A };
        }
        sides
    };
    let values = solve_2sat(&formula)?;
    let sides = assemble(values.values());
    if let Ok(part) = Bipartition::new(sides) {
        return Some(part);
    }
    // One side came out empty. A proper extension must put some free vertex
    // on the side that has no placed vertex; try each one as a unit clause.
    let empty_side = if pp.on_side(Side::A).next().is_none() {
        Side::A
    } else {
        Side::B
    };
    (0..free.len()).find_map(|i| {
        let mut forced = formula.clone();
        forced.add_unit(match empty_side {
            Side::B => Lit::pos(i),
            Side::A => Lit::neg(i),
        });
        let values = solve_2sat(&forced)?;
        Bipartition::new(assemble(values.values())).ok()
    })
}
