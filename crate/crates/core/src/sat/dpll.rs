//! Exact backend: DPLL with unit propagation, pure literal elimination and
//! branching on the most frequent unassigned variable.

use crate::cnf::{Assignment, CnfFormula, Lit};

/// A satisfying assignment iff one exists. Variables left open by the search
/// are set to false.
pub fn dpll_solve(f: &CnfFormula) -> Option<Assignment> {
    if f.has_empty_clause() {
        return None;
    }
    let mut solver = Dpll::new(f);
    if !solver.search() {
        return None;
    }
    let values: Vec<bool> = solver.value.iter().map(|v| v.unwrap_or(false)).collect();
    debug_assert!(f.is_satisfied_by(&values));
    Some(Assignment(values))
}

struct Dpll<'a> {
    clauses: &'a [Vec<Lit>],
    /// clause indices by literal code
    occurs: Vec<Vec<usize>>,
    value: Vec<Option<bool>>,
    trail: Vec<Lit>,
    queue_head: usize,
}

impl<'a> Dpll<'a> {
    fn new(f: &'a CnfFormula) -> Self {
        let mut occurs = vec![Vec::new(); 2 * f.num_vars()];
        for (ci, c) in f.clauses().iter().enumerate() {
            for l in c {
                occurs[l.code()].push(ci);
            }
        }
        Dpll {
            clauses: f.clauses(),
            occurs,
            value: vec![None; f.num_vars()],
            trail: Vec::new(),
            queue_head: 0,
        }
    }

    fn lit_value(&self, l: Lit) -> Option<bool> {
        self.value[l.var()].map(|v| v == l.is_positive())
    }

    fn assign(&mut self, l: Lit) {
        debug_assert!(self.value[l.var()].is_none());
        self.value[l.var()] = Some(l.is_positive());
        self.trail.push(l);
    }

    fn backtrack(&mut self, len: usize) {
        for l in self.trail.drain(len..) {
            self.value[l.var()] = None;
        }
        self.queue_head = self.queue_head.min(len);
    }

    /// Propagates every assignment on the trail not yet processed. Returns
    /// false on a falsified clause.
    fn propagate(&mut self) -> bool {
        // unit clauses of the input are picked up on the first call
        if self.queue_head == 0 && self.trail.is_empty() {
            for ci in 0..self.clauses.len() {
                if !self.examine(ci) {
                    return false;
                }
            }
        }
        while self.queue_head < self.trail.len() {
            let falsified = !self.trail[self.queue_head];
            self.queue_head += 1;
            for k in 0..self.occurs[falsified.code()].len() {
                let ci = self.occurs[falsified.code()][k];
                if !self.examine(ci) {
                    return false;
                }
            }
        }
        true
    }

    /// Checks one clause: conflict, unit (assigns), or nothing to do.
    fn examine(&mut self, ci: usize) -> bool {
        let mut open = None;
        let mut open_count = 0;
        for &l in &self.clauses[ci] {
            match self.lit_value(l) {
                Some(true) => return true,
                Some(false) => {}
                None => {
                    open_count += 1;
                    open = Some(l);
                }
            }
        }
        match (open_count, open) {
            (0, _) => false,
            (1, Some(l)) => {
                self.assign(l);
                true
            }
            _ => true,
        }
    }

    fn search(&mut self) -> bool {
        let mark = self.trail.len();
        if !self.propagate() {
            self.backtrack(mark);
            return false;
        }

        // literal counts over clauses not yet satisfied
        let mut count = vec![0usize; self.occurs.len()];
        for c in self.clauses {
            if c.iter().any(|&l| self.lit_value(l) == Some(true)) {
                continue;
            }
            for &l in c {
                if self.lit_value(l).is_none() {
                    count[l.code()] += 1;
                }
            }
        }

        // pure literals can be set without losing models; they only satisfy
        // clauses, so no propagation is needed afterwards
        for var in 0..self.value.len() {
            if self.value[var].is_some() {
                continue;
            }
            let (p, n) = (count[Lit::pos(var).code()], count[Lit::neg(var).code()]);
            if p > 0 && n == 0 {
                self.assign(Lit::pos(var));
            } else if n > 0 && p == 0 {
                self.assign(Lit::neg(var));
            }
        }
        self.queue_head = self.trail.len();

        let best = (0..self.value.len())
            .filter(|&v| self.value[v].is_none())
            .map(|v| {
                let (p, n) = (count[Lit::pos(v).code()], count[Lit::neg(v).code()]);
                (p + n, v, p >= n)
            })
            .filter(|&(total, _, _)| total > 0)
            .max_by_key(|&(total, v, _)| (total, std::cmp::Reverse(v)));
        let Some((_, var, positive_first)) = best else {
            // every remaining clause is satisfied
            return true;
        };

        let branch_mark = self.trail.len();
        for positive in [positive_first, !positive_first] {
            self.assign(Lit::new(var, positive));
            if self.search() {
                return true;
            }
            self.backtrack(branch_mark);
        }
        self.backtrack(mark);
        false
    }
}
