//! 2-SAT through the implication graph and its strongly connected
//! components (Kosaraju, iterative).

use crate::cnf::{Assignment, Lit};

/// A conjunction of two-literal clauses. A unit clause `l` is stored as
/// `(l, l)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TwoCnf {
    num_vars: usize,
    clauses: Vec<(Lit, Lit)>,
}

impl TwoCnf {
    pub fn new(num_vars: usize) -> Self {
        TwoCnf {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        assert!(a.var() < self.num_vars && b.var() < self.num_vars);
        self.clauses.push((a, b));
    }

    pub fn add_unit(&mut self, l: Lit) {
        self.add_clause(l, l);
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[(Lit, Lit)] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, values: &[bool]) -> bool {
        self.clauses.iter().all(|&(a, b)| a.eval(values) || b.eval(values))
    }
}

/// A satisfying assignment iff one exists.
pub fn solve_2sat(f: &TwoCnf) -> Option<Assignment> {
    let nodes = 2 * f.num_vars();
    let mut succ = vec![Vec::new(); nodes];
    let mut pred = vec![Vec::new(); nodes];
    for &(a, b) in f.clauses() {
        // (a or b) gives  not a -> b  and  not b -> a
        for (from, to) in [(!a, b), (!b, a)] {
            succ[from.code()].push(to.code());
            pred[to.code()].push(from.code());
        }
    }

    // first pass: finishing order on the implication graph
    let mut order = Vec::with_capacity(nodes);
    let mut visited = vec![false; nodes];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..nodes {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        stack.push((root, 0));
        while let Some(top) = stack.last_mut() {
            let (x, next) = *top;
            if let Some(&y) = succ[x].get(next) {
                top.1 += 1;
                if !visited[y] {
                    visited[y] = true;
                    stack.push((y, 0));
                }
            } else {
                order.push(x);
                stack.pop();
            }
        }
    }

    // second pass on the reverse graph; components come out in topological
    // order of the condensation
    const NONE: usize = usize::MAX;
    let mut comp = vec![NONE; nodes];
    let mut count = 0;
    let mut work = Vec::new();
    for &root in order.iter().rev() {
        if comp[root] != NONE {
            continue;
        }
        comp[root] = count;
        work.push(root);
        while let Some(x) = work.pop() {
            for &y in &pred[x] {
                if comp[y] == NONE {
                    comp[y] = count;
                    work.push(y);
                }
            }
        }
        count += 1;
    }

    let mut values = vec![false; f.num_vars()];
    for (v, value) in values.iter_mut().enumerate() {
        let pos = comp[Lit::pos(v).code()];
        let neg = comp[Lit::neg(v).code()];
        if pos == neg {
            return None;
        }
        // the literal whose component is later in topological order is true
        *value = pos > neg;
    }
    debug_assert!(f.is_satisfied_by(&values));
    Some(Assignment(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(f: &TwoCnf) -> bool {
        (0u32..1 << f.num_vars()).any(|mask| {
            let values: Vec<bool> = (0..f.num_vars()).map(|v| mask >> v & 1 == 1).collect();
            f.is_satisfied_by(&values)
        })
    }

    #[test]
    fn examples() {
        let (x, y) = (0, 1);
        let mut f = TwoCnf::new(2);
        f.add_clause(Lit::neg(x), Lit::neg(y));
        let a = solve_2sat(&f).unwrap();
        assert!(f.is_satisfied_by(a.values()));

        let mut f = TwoCnf::new(1);
        f.add_unit(Lit::pos(x));
        f.add_unit(Lit::neg(x));
        assert!(solve_2sat(&f).is_none());

        let mut f = TwoCnf::new(2);
        f.add_clause(Lit::pos(x), Lit::pos(y));
        f.add_clause(Lit::neg(x), Lit::pos(y));
        f.add_clause(Lit::pos(x), Lit::neg(y));
        f.add_clause(Lit::neg(x), Lit::neg(y));
        assert!(solve_2sat(&f).is_none());
    }

    #[test]
    fn empty_formula() {
        assert_eq!(solve_2sat(&TwoCnf::new(0)), Some(Assignment(vec![])));
        assert!(solve_2sat(&TwoCnf::new(3)).is_some());
    }

    fn arb_formula() -> impl Strategy<Value = TwoCnf> {
        (1usize..8).prop_flat_map(|n| {
            prop::collection::vec((0..2 * n, 0..2 * n), 0..20).prop_map(move |cls| {
                let mut f = TwoCnf::new(n);
                for (a, b) in cls {
                    f.add_clause(Lit::from_code(a), Lit::from_code(b));
                }
                f
            })
        })
    }

    proptest! {
        #[test]
        fn agrees_with_enumeration(f in arb_formula()) {
            match solve_2sat(&f) {
                Some(a) => prop_assert!(f.is_satisfied_by(a.values())),
                None => prop_assert!(!brute(&f)),
            }
        }
    }
}
