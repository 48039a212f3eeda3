//! Forcing rules for a side assignment of the vertex cover, and the 2-SAT
//! formula deciding whether the remaining vertices can be placed.

use crate::cnf::Lit;
use crate::fpt::twosat::TwoCnf;
use crate::model::{Instance, Side};

/// Vertices placed on side A or B, and the still-free vertices `I` (which
/// form an independent set as long as the placed vertices contain a cover).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialPartition {
    sides: Vec<Option<Side>>,
}

impl PartialPartition {
    /// Places `cover[i]` on `sides_of_cover[i]`; all other vertices are free.
    pub fn from_cover(n: usize, cover: &[usize], sides_of_cover: &[Side]) -> Self {
        assert_eq!(cover.len(), sides_of_cover.len());
        let mut sides = vec![None; n];
        for (&v, &s) in cover.iter().zip(sides_of_cover) {
            sides[v] = Some(s);
        }
        PartialPartition { sides }
    }

    pub fn side(&self, v: usize) -> Option<Side> {
        self.sides[v]
    }

    pub fn place(&mut self, v: usize, side: Side) {
        self.sides[v] = Some(side);
    }

    pub fn on_side(&self, side: Side) -> impl Iterator<Item = usize> + '_ {
        (0..self.sides.len()).filter(move |&v| self.sides[v] == Some(side))
    }

    pub fn free(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.sides.len()).filter(move |&v| self.sides[v].is_none())
    }

    pub fn vertex_count(&self) -> usize {
        self.sides.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleOutcome {
    Rejected,
    Reduced(PartialPartition),
}

/// How an edge relates to the partial partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    /// endpoints on opposite sides: in every extension's cut
    Forced,
    /// endpoints on the same side: in no extension's cut
    Never,
    /// one endpoint placed on `side`, the other endpoint `free` undecided
    Open { side: Side, free: usize },
    /// both endpoints free; impossible while the placed set is a cover
    Unplaced,
}

fn edge_state(inst: &Instance, pp: &PartialPartition, e: usize) -> EdgeState {
    let edge = inst.graph().edge(e);
    match (pp.side(edge.u), pp.side(edge.v)) {
        (Some(a), Some(b)) if a == b => EdgeState::Never,
        (Some(_), Some(_)) => EdgeState::Forced,
        (Some(side), None) => EdgeState::Open { side, free: edge.v },
        (None, Some(side)) => EdgeState::Open { side, free: edge.u },
        (None, None) => EdgeState::Unplaced,
    }
}

/// Applies the decision rule and both reduction rules until none fires.
///
/// * A conflict pair with both edges between A and B rejects the partition.
/// * A free vertex with two conflicting edges into the same side joins that
///   side (otherwise both edges would be cut).
/// * A free vertex `v` with an edge `wv`, `w` placed, that conflicts with an
///   A-B edge joins the side of `w`.
pub fn apply_rules(inst: &Instance, pp: PartialPartition) -> RuleOutcome {
    let mut pp = pp;
    loop {
        let mut moved = false;
        for &(e, f) in inst.conflicts().pairs() {
            match (edge_state(inst, &pp, e), edge_state(inst, &pp, f)) {
                (EdgeState::Forced, EdgeState::Forced) => return RuleOutcome::Rejected,
                (EdgeState::Forced, EdgeState::Open { side, free })
                | (EdgeState::Open { side, free }, EdgeState::Forced) => {
                    pp.place(free, side);
                    moved = true;
                }
                (
                    EdgeState::Open { side: s1, free: v1 },
                    EdgeState::Open { side: s2, free: v2 },
                ) if v1 == v2 && s1 == s2 => {
                    pp.place(v1, s1);
                    moved = true;
                }
                _ => {}
            }
        }
        if !moved {
            return RuleOutcome::Reduced(pp);
        }
    }
}

/// The 2-SAT formula over the free vertices, with the vertex of each
/// variable. Variable `x_v` true means `v` joins side B.
///
/// An open edge `wv` is cut exactly when `x_v` differs from the side of `w`:
/// `x_v` if `w` is in A, `not x_v` if `w` is in B. Each conflict pair of two
/// open edges with distinct free ends `v`, `s` gets the clause "not both
/// cut". Every other pair is already settled at the rules' fixed point.
pub fn build_2sat(inst: &Instance, pp: &PartialPartition) -> (TwoCnf, Vec<usize>) {
    let free: Vec<usize> = pp.free().collect();
    let mut var_of = vec![usize::MAX; pp.vertex_count()];
    for (i, &v) in free.iter().enumerate() {
        var_of[v] = i;
    }
    let mut f = TwoCnf::new(free.len());
    let not_cut = |side: Side, v: usize| match side {
        Side::A => Lit::neg(var_of[v]),
        Side::B => Lit::pos(var_of[v]),
    };
    for &(e, g) in inst.conflicts().pairs() {
        let (EdgeState::Open { side: s1, free: v }, EdgeState::Open { side: s2, free: s }) =
            (edge_state(inst, pp, e), edge_state(inst, pp, g))
        else {
            continue;
        };
        if v == s {
            // same side was absorbed by the rules; opposite sides never
            // cut both edges
            debug_assert_ne!(s1, s2, "rules not at a fixed point");
            continue;
        }
        f.add_clause(not_cut(s1, v), not_cut(s2, s));
    }
    (f, free)
}
