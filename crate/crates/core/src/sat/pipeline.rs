//! Encode, split on vertex 0, solve the pieces, decode the first model.

use crate::cnf::Assignment;
use crate::error::Result;
use crate::model::{boundary, Bipartition, Cut, Instance};
use crate::par::first_some;
use crate::sat::dpll::dpll_solve;
use crate::sat::encode::{effective_width, encode_symmetric};
use crate::sat::schoening::{schoening_solve, SchoeningConfig, SchoeningOutcome};
use crate::sat::split::split_nonconstant;

#[derive(Debug, Clone, PartialEq)]
pub enum Backend {
    Dpll,
    /// Randomised walk; `max_width` in the config is overwritten with the
    /// instance's effective width.
    Schoening(SchoeningConfig),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineOutcome {
    pub cut: Option<Cut>,
    /// False when a negative answer came from the randomised backend.
    pub exact: bool,
    /// Clause width `k` the backend ran with.
    pub width: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SatPipeline {
    pub backend: Backend,
    pub jobs: usize,
}

impl Default for SatPipeline {
    fn default() -> Self {
        SatPipeline {
            backend: Backend::Dpll,
            jobs: 1,
        }
    }
}

impl SatPipeline {
    pub fn solve(&self, inst: &Instance) -> Result<PipelineOutcome> {
        inst.require_two_vertices()?;
        let width = effective_width(inst);
        let formula = encode_symmetric(inst);
        let pieces = split_nonconstant(&formula, 0)?;

        let schoening = match &self.backend {
            Backend::Dpll => None,
            Backend::Schoening(config) => Some(SchoeningConfig {
                max_width: width,
                ..config.clone()
            }),
        };
        if let Some(config) = &schoening {
            config.validate()?;
        }
        debug_assert!(formula.max_width() <= width);

        let solve_piece = |i: u64| -> Option<Assignment> {
            let piece = &pieces[i as usize];
            let mut values = match &schoening {
                None => dpll_solve(&piece.formula)?,
                Some(config) => {
                    let config = SchoeningConfig {
                        seed: mix(config.seed, i),
                        ..config.clone()
                    };
                    let outcome = schoening_solve(&piece.formula, &config)
                        .expect("clause widths never exceed the effective width");
                    match outcome {
                        SchoeningOutcome::Sat(a) => a,
                        SchoeningOutcome::ProbablyUnsat => return None,
                    }
                }
            };
            values.0[piece.pivot] = false;
            values.0[piece.chosen] = true;
            Some(values)
        };
        let model = first_some(pieces.len() as u64, self.jobs, solve_piece);

        let cut = model.map(|a| {
            debug_assert!(formula.is_satisfied_by(a.values()));
            let part = Bipartition::from_bools(a.values()).expect("pivot and chosen differ");
            boundary(inst.graph(), &part)
        });
        let exact = cut.is_some() || matches!(self.backend, Backend::Dpll);
        Ok(PipelineOutcome { cut, exact, width })
    }
}

pub fn solve_sat_pipeline(inst: &Instance, backend: Backend) -> Result<PipelineOutcome> {
    SatPipeline { backend, jobs: 1 }.solve(inst)
}

/// Per-piece seed derived from the run seed.
fn mix(seed: u64, index: u64) -> u64 {
    seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{line_graph_conflicts, verify_cut, ConflictGraph, MultiGraph};

    fn p3() -> Instance {
        let g = MultiGraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        Instance::new(g, ConflictGraph::new(2, [(0, 1)]).unwrap()).unwrap()
    }

    fn k4() -> Instance {
        let g = MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        let c = line_graph_conflicts(&g);
        Instance::new(g, c).unwrap()
    }

    #[test]
    fn path_with_conflict() {
        let inst = p3();
        let out = solve_sat_pipeline(&inst, Backend::Dpll).unwrap();
        let cut = out.cut.unwrap();
        assert_eq!(cut.len(), 1);
        assert!(verify_cut(&inst, &cut).unwrap().is_valid());
        assert!(out.exact);
        assert_eq!(out.width, 3);
    }

    #[test]
    fn k4_dpll_says_no() {
        let out = solve_sat_pipeline(&k4(), Backend::Dpll).unwrap();
        assert_eq!(out.cut, None);
        assert!(out.exact);
    }

    #[test]
    fn k4_split_pieces_are_all_unsat() {
        let f = encode_symmetric(&k4());
        let pieces = split_nonconstant(&f, 0).unwrap();
        assert_eq!(pieces.len(), 3);
        assert!(pieces.iter().all(|p| dpll_solve(&p.formula).is_none()));
    }

    #[test]
    fn schoening_negative_is_flagged() {
        let out = solve_sat_pipeline(&k4(), Backend::Schoening(SchoeningConfig::new(4, 3))).unwrap();
        assert_eq!(out.cut, None);
        assert!(!out.exact);
        assert_eq!(out.width, 3);
    }

    #[test]
    fn schoening_finds_path_cut() {
        let inst = p3();
        let out = solve_sat_pipeline(&inst, Backend::Schoening(SchoeningConfig::new(4, 3))).unwrap();
        assert!(verify_cut(&inst, &out.cut.unwrap()).unwrap().is_valid());
        assert!(out.exact);
    }
}
