//! Clause sets over 0-based variables, shared by the 2-SAT step of the
//! vertex-cover algorithm and the SAT pipeline. DIMACS I/O is 1-based.

use std::fmt::{self, Write as _};
use std::ops::Not;

use crate::error::{Error, Result};

/// A literal: variable index plus polarity, packed as `2 * var + negated`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit(u32);

impl Lit {
    pub fn new(var: usize, positive: bool) -> Self {
        Lit((var as u32) << 1 | u32::from(!positive))
    }

    pub fn pos(var: usize) -> Self {
        Self::new(var, true)
    }

    pub fn neg(var: usize) -> Self {
        Self::new(var, false)
    }

    pub fn var(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    /// Dense index in `0..2 * num_vars`.
    pub fn code(self) -> usize {
        self.0 as usize
    }

    pub fn from_code(code: usize) -> Self {
        Lit(code as u32)
    }

    /// Value of the literal under `values[var]`.
    pub fn eval(self, values: &[bool]) -> bool {
        values[self.var()] == self.is_positive()
    }

    pub fn from_dimacs(x: i64) -> Option<Self> {
        if x == 0 {
            return None;
        }
        Some(Self::new((x.unsigned_abs() - 1) as usize, x > 0))
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var() as i64 + 1;
        if self.is_positive() {
            v
        } else {
            -v
        }
    }
}

impl Not for Lit {
    type Output = Lit;
    fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// A total truth assignment, indexed by variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    pub fn value(&self, var: usize) -> bool {
        self.0[var]
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }

    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Lit>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize) -> Self {
        CnfFormula {
            num_vars,
            clauses: Vec::new(),
        }
    }

    /// Adds a clause after sorting it and removing repeated literals.
    /// Tautologies are dropped; returns whether the clause was kept.
    /// An empty clause is kept and makes the formula unsatisfiable.
    pub fn add_clause(&mut self, lits: impl IntoIterator<Item = Lit>) -> bool {
        let mut clause: Vec<Lit> = lits.into_iter().collect();
        clause.sort_unstable();
        clause.dedup();
        if clause.windows(2).any(|w| w[0].var() == w[1].var()) {
            return false;
        }
        if let Some(l) = clause.last() {
            self.num_vars = self.num_vars.max(l.var() + 1);
        }
        self.clauses.push(clause);
        true
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn max_width(&self) -> usize {
        self.clauses.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_empty_clause(&self) -> bool {
        self.clauses.iter().any(Vec::is_empty)
    }

    pub fn is_satisfied_by(&self, values: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.eval(values)))
    }

    /// True when the negation of every clause is also a clause.
    pub fn is_symmetric(&self) -> bool {
        use std::collections::HashSet;
        let set: HashSet<&[Lit]> = self.clauses.iter().map(Vec::as_slice).collect();
        self.clauses.iter().all(|c| {
            let mut neg: Vec<Lit> = c.iter().map(|&l| !l).collect();
            neg.sort_unstable();
            set.contains(neg.as_slice())
        })
    }

    /// Writes DIMACS CNF, with optional leading comment lines.
    pub fn to_dimacs(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            writeln!(out, "c {c}").unwrap();
        }
        writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len()).unwrap();
        for clause in &self.clauses {
            for l in clause {
                write!(out, "{} ", l.to_dimacs()).unwrap();
            }
            out.push_str("0\n");
        }
        out
    }

    /// Parses DIMACS CNF and normalises every clause (see [`add_clause`]).
    ///
    /// [`add_clause`]: CnfFormula::add_clause
    pub fn from_dimacs(text: &str) -> Result<Self> {
        let raw = parse_dimacs_raw(text)?;
        let mut f = CnfFormula::new(raw.num_vars);
        for c in raw.clauses {
            f.add_clause(c);
        }
        Ok(f)
    }
}

/// DIMACS clauses exactly as written: literal order and repetitions kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawCnf {
    pub num_vars: usize,
    pub clauses: Vec<Vec<Lit>>,
}

pub fn parse_dimacs_raw(text: &str) -> Result<RawCnf> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    let mut last_line = 0;
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        last_line = ln;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(ln, "second `p` line"));
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 4 || toks[1] != "cnf" {
                return Err(Error::parse(ln, "expected `p cnf <vars> <clauses>`"));
            }
            let vars = toks[2]
                .parse()
                .map_err(|_| Error::parse(ln, "bad variable count"))?;
            let count = toks[3]
                .parse()
                .map_err(|_| Error::parse(ln, "bad clause count"))?;
            header = Some((vars, count));
            continue;
        }
        let (vars, _) = header.ok_or_else(|| Error::parse(ln, "clause before `p cnf` header"))?;
        for tok in line.split_whitespace() {
            let x: i64 = tok
                .parse()
                .map_err(|_| Error::parse(ln, format!("bad literal `{tok}`")))?;
            match Lit::from_dimacs(x) {
                None => clauses.push(std::mem::take(&mut current)),
                Some(l) if l.var() >= vars => {
                    return Err(Error::parse(ln, format!("literal {x} exceeds {vars} variables")))
                }
                Some(l) => current.push(l),
            }
        }
    }
    let (num_vars, count) = header.ok_or_else(|| Error::parse(last_line, "missing `p cnf` header"))?;
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != count {
        return Err(Error::parse(
            last_line,
            format!("declared {count} clauses, found {}", clauses.len()),
        ));
    }
    Ok(RawCnf { num_vars, clauses })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_packing() {
        let l = Lit::neg(4);
        assert_eq!(l.var(), 4);
        assert!(!l.is_positive());
        assert_eq!(!l, Lit::pos(4));
        assert_eq!(l.to_dimacs(), -5);
        assert_eq!(Lit::from_dimacs(-5), Some(l));
        assert_eq!(Lit::from_dimacs(0), None);
    }

    #[test]
    fn add_clause_normalises() {
        let mut f = CnfFormula::new(3);
        assert!(f.add_clause([Lit::pos(2), Lit::neg(0), Lit::pos(2)]));
        assert_eq!(f.clauses()[0], vec![Lit::neg(0), Lit::pos(2)]);
        assert!(!f.add_clause([Lit::pos(1), Lit::neg(1)]));
        assert!(f.add_clause([]));
        assert!(f.has_empty_clause());
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn dimacs_round_trip() {
        let text = "c hello\np cnf 3 2\n1 -2 0\n2 3\n-1 0\n";
        let f = CnfFormula::from_dimacs(text).unwrap();
        assert_eq!(f.num_vars(), 3);
        assert_eq!(f.len(), 2);
        assert_eq!(CnfFormula::from_dimacs(&f.to_dimacs(&[])).unwrap(), f);
    }

    #[test]
    fn dimacs_errors() {
        assert!(parse_dimacs_raw("1 2 0\n").is_err());
        assert!(parse_dimacs_raw("p cnf 2 1\n1 3 0\n").is_err());
        assert!(parse_dimacs_raw("p cnf 2 2\n1 2 0\n").is_err());
        assert!(parse_dimacs_raw("p cnf 2 1\n1 x 0\n").is_err());
    }

    #[test]
    fn raw_keeps_repetitions() {
        let raw = parse_dimacs_raw("p cnf 2 1\n1 1 -2 0\n").unwrap();
        assert_eq!(raw.clauses[0].len(), 3);
    }

    #[test]
    fn symmetry_check() {
        let mut f = CnfFormula::new(2);
        f.add_clause([Lit::pos(0), Lit::neg(1)]);
        assert!(!f.is_symmetric());
        f.add_clause([Lit::neg(0), Lit::pos(1)]);
        assert!(f.is_symmetric());
    }
}
