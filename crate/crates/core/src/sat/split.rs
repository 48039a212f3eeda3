//! Reduction of non-constant satisfiability of a symmetric formula to plain
//! satisfiability of `n - 1` formulas.

use crate::cnf::{CnfFormula, Lit};
use crate::error::{Error, Result};

/// `formula` simplified under `pivot = false`, `chosen = true`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitInstance {
    pub pivot: usize,
    pub chosen: usize,
    pub formula: CnfFormula,
}

/// For every variable `y != pivot`, the formula with `pivot` false and `y`
/// true, satisfied clauses dropped and false literals removed. A symmetric
/// formula has a non-constant model iff one of these is satisfiable (swap
/// all values if the pivot came out true).
pub fn split_nonconstant(f: &CnfFormula, pivot: usize) -> Result<Vec<SplitInstance>> {
    let n = f.num_vars();
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "splitting needs at least 2 variables, formula has {n}"
        )));
    }
    if pivot >= n {
        return Err(Error::InvalidParameter(format!(
            "pivot {pivot} outside 0..{n}"
        )));
    }
    Ok((0..n)
        .filter(|&y| y != pivot)
        .map(|y| SplitInstance {
            pivot,
            chosen: y,
            formula: simplify(f, &[Lit::neg(pivot), Lit::pos(y)]),
        })
        .collect())
}

/// Sets every literal in `true_lits` to true and simplifies.
pub fn simplify(f: &CnfFormula, true_lits: &[Lit]) -> CnfFormula {
    let mut out = CnfFormula::new(f.num_vars());
    for clause in f.clauses() {
        if clause.iter().any(|l| true_lits.contains(l)) {
            continue;
        }
        out.add_clause(clause.iter().copied().filter(|l| !true_lits.contains(&!*l)));
    }
    out
}
