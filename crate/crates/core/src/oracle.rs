//! Exhaustive ground truth.
//!
//! Every conflict-free cut contains the boundary of a component of the graph
//! left after removing it, and that boundary is conflict-free as well. So it
//! suffices to look at boundaries of proper bipartitions. Vertex 0 stays on
//! side A; the remaining vertices are walked in reflected Gray code order so
//! each step moves a single vertex and the number of violated conflict pairs
//! can be updated locally.

use crate::error::{Error, Result};
use crate::model::{boundary, vertex_boundary, Bipartition, Cut, Instance};

pub const DEFAULT_MAX_VERTICES: usize = 30;

/// Hard cap imposed by the 64-bit side mask.
const MASK_LIMIT: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForce {
    pub max_vertices: usize,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl BruteForce {
    pub fn new(max_vertices: usize) -> Self {
        BruteForce { max_vertices }
    }

    fn check(&self, inst: &Instance) -> Result<()> {
        inst.require_two_vertices()?;
        let limit = self.max_vertices.min(MASK_LIMIT);
        if inst.vertex_count() > limit {
            return Err(Error::Capacity {
                what: format!("brute force on {} vertices", inst.vertex_count()),
                limit,
            });
        }
        Ok(())
    }

    /// First conflict-free bipartition boundary in enumeration order.
    pub fn solve(&self, inst: &Instance) -> Result<Option<Cut>> {
        self.check(inst)?;
        let mut found = None;
        walk(inst, |mask, state| {
            if state.violations == 0 {
                found = Some(mask);
                false
            } else {
                true
            }
        });
        Ok(found.map(|mask| cut_of_mask(inst, mask)))
    }

    /// A conflict-free cut of minimum cardinality.
    pub fn min_cut(&self, inst: &Instance) -> Result<Option<Cut>> {
        self.check(inst)?;
        let mut best: Option<(usize, u64)> = None;
        walk(inst, |mask, state| {
            if state.violations == 0 && best.is_none_or(|(size, _)| state.cut_size < size) {
                best = Some((state.cut_size, mask));
            }
            true
        });
        Ok(best.map(|(_, mask)| cut_of_mask(inst, mask)))
    }

    /// Calls `visit` on every proper bipartition with its boundary. Stops when
    /// `visit` returns false.
    pub fn for_each_bipartition(
        &self,
        inst: &Instance,
        mut visit: impl FnMut(&Bipartition, &Cut, bool) -> bool,
    ) -> Result<()> {
        self.check(inst)?;
        walk(inst, |mask, state| {
            let part = Bipartition::from_mask(inst.vertex_count(), mask).expect("proper");
            let cut = boundary(inst.graph(), &part);
            visit(&part, &cut, state.violations == 0)
        });
        Ok(())
    }
}

pub fn solve_bruteforce(inst: &Instance) -> Result<Option<Cut>> {
    BruteForce::default().solve(inst)
}

pub fn min_conflict_free_cut(inst: &Instance) -> Result<Option<(Cut, usize)>> {
    Ok(BruteForce::default().min_cut(inst)?.map(|c| {
        let size = c.len();
        (c, size)
    }))
}

/// Lowest-index vertex whose boundary is conflict-free, with that boundary.
pub fn scan_vertex_boundaries(inst: &Instance) -> Option<(usize, Cut)> {
    if inst.vertex_count() < 2 {
        return None;
    }
    let g = inst.graph();
    let mut mark = vec![usize::MAX; g.edge_count()];
    (0..g.vertex_count()).find_map(|v| {
        for &e in g.incident(v) {
            mark[e] = v;
        }
        let clean = g.incident(v).iter().all(|&e| {
            inst.conflicts()
                .neighbors(e)
                .iter()
                .all(|&f| mark[f] != v)
        });
        clean.then(|| (v, vertex_boundary(g, v)))
    })
}

struct WalkState {
    violations: usize,
    cut_size: usize,
}

fn cut_of_mask(inst: &Instance, mask: u64) -> Cut {
    let part = Bipartition::from_mask(inst.vertex_count(), mask).expect("proper bipartition");
    boundary(inst.graph(), &part)
}

/// Gray code walk over all `2^(n-1) - 1` proper bipartitions with vertex 0
/// on side A. `visit` gets the side-B mask and the running counters.
fn walk(inst: &Instance, mut visit: impl FnMut(u64, &WalkState) -> bool) {
    let g = inst.graph();
    let conflicts = inst.conflicts();
    let n = g.vertex_count();
    let mut in_cut = vec![false; g.edge_count()];
    let mut state = WalkState {
        violations: 0,
        cut_size: 0,
    };
    let mut mask = 0u64;
    let steps = 1u64 << (n - 1);
    for step in 1..steps {
        let v = step.trailing_zeros() as usize + 1;
        mask ^= 1 << v;
        for &e in g.incident(v) {
            let entering = !in_cut[e];
            let clashes = conflicts
                .neighbors(e)
                .iter()
                .filter(|&&f| in_cut[f])
                .count();
            in_cut[e] = entering;
            if entering {
                state.violations += clashes;
                state.cut_size += 1;
            } else {
                state.violations -= clashes;
                state.cut_size -= 1;
            }
        }
        if !visit(mask, &state) {
            return;
        }
    }
}
