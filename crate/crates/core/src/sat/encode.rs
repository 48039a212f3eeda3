//! Symmetric clause encoding: variable `v` is vertex `v`, true meaning side B.
//! A non-constant satisfying assignment is exactly a proper bipartition
//! whose boundary is conflict-free.

use crate::cnf::{CnfFormula, Lit};
use crate::model::Instance;

/// One clause block per conflict pair, forbidding both edges from being cut.
///
/// Edges `wv`, `ws` sharing `w`: both are cut iff `v` and `s` sit opposite
/// `w`, excluded by `{x_w, ¬x_v, ¬x_s}` and its negation. Disjoint edges
/// `uv`, `rs` get the four clauses `{±x_u, ∓x_v, ±x_r, ∓x_s}`. Parallel
/// edges collapse to `{x_w, ¬x_v}` and `{¬x_w, x_v}`.
pub fn encode_symmetric(inst: &Instance) -> CnfFormula {
    let g = inst.graph();
    let mut f = CnfFormula::new(g.vertex_count());
    for &(i, j) in inst.conflicts().pairs() {
        let (e, h) = (g.edge(i), g.edge(j));
        match e.shared_endpoint(&h) {
            Some(w) => {
                let (v, s) = (e.other(w), h.other(w));
                f.add_clause([Lit::pos(w), Lit::neg(v), Lit::neg(s)]);
                f.add_clause([Lit::neg(w), Lit::pos(v), Lit::pos(s)]);
            }
            None => {
                let (u, v, r, s) = (e.u, e.v, h.u, h.v);
                for (pu, pr) in [(true, true), (true, false), (false, true), (false, false)] {
                    f.add_clause([
                        Lit::new(u, pu),
                        Lit::new(v, !pu),
                        Lit::new(r, pr),
                        Lit::new(s, !pr),
                    ]);
                }
            }
        }
    }
    f
}

/// 3 when every conflicting pair shares an endpoint (the encoding is then
/// 3-CNF), otherwise 4.
pub fn effective_width(inst: &Instance) -> usize {
    let g = inst.graph();
    let all_adjacent = inst
        .conflicts()
        .pairs()
        .iter()
        .all(|&(i, j)| g.edge(i).shared_endpoint(&g.edge(j)).is_some());
    if all_adjacent {
        3
    } else {
        4
    }
}
