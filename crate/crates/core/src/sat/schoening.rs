//! Randomised k-SAT by restarts of a bounded random walk. A `Sat` answer
//! always carries a model; `ProbablyUnsat` may be wrong with probability
//! shrinking exponentially in the number of tries.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cnf::{Assignment, CnfFormula};
use crate::error::{Error, Result};
use crate::par::first_some;

pub const DEFAULT_BUDGET_CONSTANT: f64 = 20.0;

#[derive(Debug, Clone, PartialEq)]
pub struct SchoeningConfig {
    /// Clause width bound `k`; wider clauses are an error.
    pub max_width: usize,
    /// Number of restarts; `None` means `ceil(c * (2 - 2/k)^n)`.
    pub tries: Option<u64>,
    /// Steps per restart; `None` means `3n`.
    pub walk_length: Option<usize>,
    /// The constant `c` of the default try budget.
    pub budget_constant: f64,
    pub seed: u64,
    pub jobs: usize,
}

impl SchoeningConfig {
    pub fn new(max_width: usize, seed: u64) -> Self {
        SchoeningConfig {
            max_width,
            tries: None,
            walk_length: None,
            budget_constant: DEFAULT_BUDGET_CONSTANT,
            seed,
            jobs: 1,
        }
    }

    pub fn tries_for(&self, num_vars: usize) -> u64 {
        self.tries.unwrap_or_else(|| {
            let k = self.max_width.max(2) as f64;
            let base = 2.0 - 2.0 / k;
            let t = (self.budget_constant * base.powi(num_vars as i32)).ceil();
            (t as u64).max(1)
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.tries == Some(0) || self.walk_length == Some(0) {
            return Err(Error::InvalidParameter(
                "tries and walk length must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn walk_length_for(&self, num_vars: usize) -> usize {
        self.walk_length.unwrap_or(3 * num_vars).max(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchoeningOutcome {
    Sat(Assignment),
    ProbablyUnsat,
}

pub fn schoening_solve(f: &CnfFormula, config: &SchoeningConfig) -> Result<SchoeningOutcome> {
    if let Some((clause, c)) = f
        .clauses()
        .iter()
        .enumerate()
        .find(|(_, c)| c.len() > config.max_width)
    {
        return Err(Error::ClauseTooWide {
            clause,
            width: c.len(),
            max: config.max_width,
        });
    }
    config.validate()?;
    if f.has_empty_clause() {
        return Ok(SchoeningOutcome::ProbablyUnsat);
    }
    let n = f.num_vars();
    let tries = config.tries_for(n);
    let steps = config.walk_length_for(n);
    let found = first_some(tries, config.jobs, |t| walk(f, config.seed, t, steps));
    Ok(match found {
        Some(values) => {
            assert!(f.is_satisfied_by(&values), "random walk returned a non-model");
            SchoeningOutcome::Sat(Assignment(values))
        }
        None => SchoeningOutcome::ProbablyUnsat,
    })
}

/// One restart. Randomness depends only on `(seed, try_index)`.
fn walk(f: &CnfFormula, seed: u64, try_index: u64, steps: usize) -> Option<Vec<bool>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(try_index);
    let mut values: Vec<bool> = (0..f.num_vars()).map(|_| rng.gen()).collect();
    for _ in 0..steps {
        let Some(clause) = f
            .clauses()
            .iter()
            .find(|c| !c.iter().any(|l| l.eval(&values)))
        else {
            return Some(values);
        };
        let flip = clause[rng.gen_range(0..clause.len())].var();
        values[flip] = !values[flip];
    }
    f.is_satisfied_by(&values).then_some(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::Lit;

    #[test]
    fn single_wide_clause() {
        let mut f = CnfFormula::new(3);
        f.add_clause([Lit::pos(0), Lit::pos(1), Lit::pos(2)]);
        let out = schoening_solve(&f, &SchoeningConfig::new(3, 1)).unwrap();
        let SchoeningOutcome::Sat(a) = out else {
            panic!("expected Sat")
        };
        assert!(f.is_satisfied_by(a.values()));
    }

    #[test]
    fn empty_clause_short_circuits() {
        let mut f = CnfFormula::new(2);
        f.add_clause([]);
        let config = SchoeningConfig {
            tries: Some(1),
            ..SchoeningConfig::new(3, 0)
        };
        assert_eq!(schoening_solve(&f, &config).unwrap(), SchoeningOutcome::ProbablyUnsat);
    }

    #[test]
    fn rejects_wide_clauses_and_zero_budgets() {
        let mut f = CnfFormula::new(4);
        f.add_clause([Lit::pos(0), Lit::pos(1), Lit::pos(2), Lit::pos(3)]);
        assert!(matches!(
            schoening_solve(&f, &SchoeningConfig::new(3, 0)),
            Err(Error::ClauseTooWide { width: 4, max: 3, .. })
        ));
        let config = SchoeningConfig {
            tries: Some(0),
            ..SchoeningConfig::new(4, 0)
        };
        assert!(schoening_solve(&f, &config).is_err());
    }

    #[test]
    fn unsat_formula_is_never_sat() {
        let mut f = CnfFormula::new(2);
        for (a, b) in [(true, true), (true, false), (false, true), (false, false)] {
            f.add_clause([Lit::new(0, a), Lit::new(1, b)]);
        }
        assert_eq!(
            schoening_solve(&f, &SchoeningConfig::new(2, 9)).unwrap(),
            SchoeningOutcome::ProbablyUnsat
        );
    }

    #[test]
    fn seed_determines_result_independent_of_jobs() {
        let mut f = CnfFormula::new(6);
        for v in 0..5 {
            f.add_clause([Lit::pos(v), Lit::neg(v + 1), Lit::pos((v + 3) % 6)]);
        }
        let serial = schoening_solve(&f, &SchoeningConfig::new(3, 42)).unwrap();
        let parallel = schoening_solve(
            &f,
            &SchoeningConfig {
                jobs: 3,
                ..SchoeningConfig::new(3, 42)
            },
        )
        .unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn default_budget() {
        let c = SchoeningConfig::new(4, 0);
        // 20 * 1.5^4 = 101.25
        assert_eq!(c.tries_for(4), 102);
        assert_eq!(c.walk_length_for(4), 12);
        assert_eq!(SchoeningConfig::new(3, 0).tries_for(0), 20);
    }
}
