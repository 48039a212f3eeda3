//! One entry point over all solvers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fpt::{vertex_cover_at_most, FptSolver};
use crate::model::{Cut, Instance};
use crate::oracle::{scan_vertex_boundaries, BruteForce};
use crate::sat::{Backend, SatPipeline};

/// `auto` uses brute force up to this many vertices.
pub const AUTO_BRUTE_MAX_VERTICES: usize = 20;
/// `auto` uses the fpt solver when the vertex cover number is at most this.
pub const AUTO_FPT_MAX_COVER: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Auto,
    Brute,
    Fpt,
    Sat,
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Algorithm::Auto),
            "brute" => Ok(Algorithm::Brute),
            "fpt" => Ok(Algorithm::Fpt),
            "sat" => Ok(Algorithm::Sat),
            other => Err(Error::InvalidParameter(format!("unknown algorithm `{other}`"))),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Auto => "auto",
            Algorithm::Brute => "brute",
            Algorithm::Fpt => "fpt",
            Algorithm::Sat => "sat",
        })
    }
}

/// What actually produced an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Scan,
    Brute,
    Fpt,
    Sat,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    pub algorithm: Algorithm,
    pub backend: Backend,
    pub brute_max_vertices: usize,
    pub fpt_max_cover: usize,
    pub jobs: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            algorithm: Algorithm::Auto,
            backend: Backend::Dpll,
            brute_max_vertices: BruteForce::default().max_vertices,
            fpt_max_cover: FptSolver::default().max_cover,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Answer {
    pub cut: Option<Cut>,
    /// False only for a negative answer of the randomised backend.
    pub exact: bool,
    pub method: Method,
}

pub fn solve(inst: &Instance, opts: &SolveOptions) -> Result<Answer> {
    inst.require_two_vertices()?;
    let brute = || -> Result<Answer> {
        Ok(Answer {
            cut: BruteForce::new(opts.brute_max_vertices).solve(inst)?,
            exact: true,
            method: Method::Brute,
        })
    };
    let fpt = |max_cover: usize| -> Result<Answer> {
        let solver = FptSolver {
            max_cover,
            jobs: opts.jobs,
        };
        Ok(Answer {
            cut: solver.solve(inst)?,
            exact: true,
            method: Method::Fpt,
        })
    };
    let sat = || -> Result<Answer> {
        let pipeline = SatPipeline {
            backend: opts.backend.clone(),
            jobs: opts.jobs,
        };
        let out = pipeline.solve(inst)?;
        Ok(Answer {
            cut: out.cut,
            exact: out.exact,
            method: Method::Sat,
        })
    };
    match opts.algorithm {
        Algorithm::Brute => brute(),
        Algorithm::Fpt => fpt(opts.fpt_max_cover),
        Algorithm::Sat => sat(),
        Algorithm::Auto => {
            if let Some((_, cut)) = scan_vertex_boundaries(inst) {
                return Ok(Answer {
                    cut: Some(cut),
                    exact: true,
                    method: Method::Scan,
                });
            }
            if inst.vertex_count() <= AUTO_BRUTE_MAX_VERTICES {
                brute()
            } else if vertex_cover_at_most(inst.graph(), AUTO_FPT_MAX_COVER).is_some() {
                fpt(AUTO_FPT_MAX_COVER)
            } else {
                sat()
            }
        }
    }
}
