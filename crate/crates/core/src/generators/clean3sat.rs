//! Reduction from clean 3-CNF satisfiability.
//!
//! A formula is clean when every variable occurs exactly three times, at
//! least once with each sign, and every clause has two or three distinct
//! variables. After negating the variables that occur twice negatively,
//! every variable has two positive occurrences and one negative one.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cnf::{CnfFormula, Lit, RawCnf};
use crate::error::{Error, Result};
use crate::generators::certificate::{CertKind, ReductionCertificate, VarEdges};
use crate::generators::gadgets::expand_to_simple;
use crate::model::{ConflictGraph, Edge, Instance, MultiGraph};

/// A normalized clean formula. Clause literals are sorted by variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clean3Cnf {
    num_vars: usize,
    clauses: Vec<Vec<Lit>>,
    flipped: Vec<bool>,
}

impl Clean3Cnf {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Normalized clauses: each variable twice positive, once negative.
    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    /// `flipped[i]` is set when variable `i` was renamed to its negation.
    pub fn flipped(&self) -> &[bool] {
        &self.flipped
    }

    pub fn normalized_formula(&self) -> CnfFormula {
        self.formula(false)
    }

    /// The formula as given, before renaming.
    pub fn original_formula(&self) -> CnfFormula {
        self.formula(true)
    }

    fn formula(&self, undo: bool) -> CnfFormula {
        let mut f = CnfFormula::new(self.num_vars);
        for c in &self.clauses {
            f.add_clause(c.iter().map(|&l| {
                if undo && self.flipped[l.var()] {
                    !l
                } else {
                    l
                }
            }));
        }
        f
    }

    /// Maps an assignment of the normalized formula to the original one.
    pub fn denormalize(&self, values: &[bool]) -> Vec<bool> {
        values
            .iter()
            .zip(&self.flipped)
            .map(|(&v, &f)| v != f)
            .collect()
    }
}

fn not_clean(msg: impl Into<String>) -> Error {
    Error::NotClean(msg.into())
}

pub fn validate_clean(f: &RawCnf) -> Result<Clean3Cnf> {
    let n = f.num_vars;
    let mut pos = vec![0usize; n];
    let mut neg = vec![0usize; n];
    for (j, c) in f.clauses.iter().enumerate() {
        if c.len() < 2 || c.len() > 3 {
            return Err(not_clean(format!(
                "clause {} has {} literals, expected 2 or 3",
                j + 1,
                c.len()
            )));
        }
        for (a, l) in c.iter().enumerate() {
            if c[..a].iter().any(|k| k.var() == l.var()) {
                return Err(not_clean(format!(
                    "clause {} contains variable {} twice",
                    j + 1,
                    l.var() + 1
                )));
            }
            if l.is_positive() {
                pos[l.var()] += 1;
            } else {
                neg[l.var()] += 1;
            }
        }
    }
    for v in 0..n {
        if pos[v] + neg[v] != 3 {
            return Err(not_clean(format!(
                "variable {} occurs {} times, expected 3",
                v + 1,
                pos[v] + neg[v]
            )));
        }
        if pos[v] == 0 || neg[v] == 0 {
            return Err(not_clean(format!(
                "variable {} occurs with only one sign",
                v + 1
            )));
        }
    }
    let flipped: Vec<bool> = (0..n).map(|v| neg[v] == 2).collect();
    let clauses = f
        .clauses
        .iter()
        .map(|c| {
            let mut c: Vec<Lit> = c
                .iter()
                .map(|&l| if flipped[l.var()] { !l } else { l })
                .collect();
            c.sort_by_key(|l| l.var());
            c
        })
        .collect();
    Ok(Clean3Cnf {
        num_vars: n,
        clauses,
        flipped,
    })
}

/// A random clean formula on `n >= 2` variables, with random signs before
/// normalization.
pub fn gen_random_clean3cnf(n: usize, seed: u64) -> Result<Clean3Cnf> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "a clean formula needs at least 2 variables, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut occ: Vec<Lit> = (0..n)
            .flat_map(|v| {
                let flip = rng.gen::<bool>();
                [Lit::new(v, !flip), Lit::new(v, !flip), Lit::new(v, flip)]
            })
            .collect();
        occ.shuffle(&mut rng);
        let mut clauses = Vec::new();
        let mut rest = &occ[..];
        while !rest.is_empty() {
            // never leave a single literal behind
            let take = match rest.len() {
                2 | 3 => rest.len(),
                4 => 2,
                _ => rng.gen_range(2..=3),
            };
            clauses.push(rest[..take].to_vec());
            rest = &rest[take..];
        }
        let raw = RawCnf {
            num_vars: n,
            clauses,
        };
        if let Ok(f) = validate_clean(&raw) {
            return Ok(f);
        }
    }
}

/// Builds the multigraph instance: a conflict-free cut exists iff `f` is
/// satisfiable, and every conflict-free cut separates the two terminals.
///
/// Vertex 0 is `s`, vertex 1 is `t`. Each clause contributes an `s`-`t`
/// path whose `j`-th edge belongs to its `j`-th smallest variable. Every
/// pair of edges on a path gets a pair of conflicting parallel copies. The
/// edge of a negative occurrence `u v` becomes two paths `u a v` and
/// `u b v`, with `u a` and `u b` each conflicting with a fresh `s t` edge,
/// conflicting copies of `u a`, `a v` and of `u b`, `b v`, and `a v`, `b v`
/// conflicting with the first and second positive occurrence.
pub fn gen_from_clean3sat_multigraph(f: &Clean3Cnf) -> (Instance, ReductionCertificate) {
    let (s, t) = (0, 1);
    let mut n_vertices = 2;
    let mut edges: Vec<Edge> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    fn push(edges: &mut Vec<Edge>, u: usize, v: usize) -> usize {
        edges.push(Edge::new(u, v));
        edges.len() - 1
    }

    // (u, v) endpoints and main edge of every occurrence, per clause
    let mut occurrence_ends: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut positive: Vec<Vec<usize>> = vec![Vec::new(); f.num_vars];
    let mut negative: Vec<Option<(usize, usize)>> = vec![None; f.num_vars];
    let mut clause_edges = Vec::new();
    for c in &f.clauses {
        let mut prev = s;
        let mut ends = Vec::new();
        let mut on_path = Vec::new();
        for (j, l) in c.iter().enumerate() {
            let next = if j + 1 == c.len() {
                t
            } else {
                n_vertices += 1;
                n_vertices - 1
            };
            ends.push((prev, next));
            if l.is_positive() {
                let e = push(&mut edges, prev, next);
                positive[l.var()].push(e);
                on_path.push(e);
            } else {
                negative[l.var()] = Some((prev, next));
            }
            prev = next;
        }
        occurrence_ends.push(ends);
        clause_edges.push(on_path);
    }

    let mut vars = Vec::with_capacity(f.num_vars);
    for x in 0..f.num_vars {
        let (u, v) = negative[x].expect("clean formulas have a negative occurrence");
        let (a, b) = (n_vertices, n_vertices + 1);
        n_vertices += 2;
        let ua = push(&mut edges, u, a);
        let av = push(&mut edges, a, v);
        let ub = push(&mut edges, u, b);
        let bv = push(&mut edges, b, v);
        let st_a = push(&mut edges, s, t);
        let st_b = push(&mut edges, s, t);
        pairs.push((st_a, ua));
        pairs.push((st_b, ub));
        let ua_copy = push(&mut edges, u, a);
        let av_copy = push(&mut edges, a, v);
        pairs.push((ua_copy, av_copy));
        let ub_copy = push(&mut edges, u, b);
        let bv_copy = push(&mut edges, b, v);
        pairs.push((ub_copy, bv_copy));
        let (pos1, pos2) = (positive[x][0], positive[x][1]);
        pairs.push((pos1, av));
        pairs.push((pos2, bv));
        vars.push(VarEdges {
            pos1,
            pos2,
            nega: av,
            negb: bv,
        });
    }

    // clause paths in order; `u a` and `u b` sit right before `a v`, `b v`
    for (j, c) in f.clauses.iter().enumerate() {
        let mut path = Vec::new();
        let mut next_positive = clause_edges[j].iter();
        for l in c {
            if l.is_positive() {
                path.push(*next_positive.next().unwrap());
            } else {
                let v = &vars[l.var()];
                path.extend([v.nega - 1, v.nega, v.negb - 1, v.negb]);
            }
        }
        clause_edges[j] = path;
    }

    for ends in &occurrence_ends {
        for p in 0..ends.len() {
            for q in p + 1..ends.len() {
                let e = push(&mut edges, ends[p].0, ends[p].1);
                let g = push(&mut edges, ends[q].0, ends[q].1);
                pairs.push((e, g));
            }
        }
    }

    let m = edges.len();
    let graph = MultiGraph::new(n_vertices, edges).expect("vertices in range");
    let conflicts = ConflictGraph::new(m, pairs).expect("fresh pairs");
    let inst = Instance::new(graph, conflicts).expect("every vertex lies on an s-t path");

    let mut cert = ReductionCertificate::new(CertKind::Clean3Sat);
    cert.terminals = Some((s, t));
    cert.flipped = (0..f.num_vars).filter(|&x| f.flipped[x]).collect();
    cert.vars = vars;
    cert.clauses = clause_edges;
    (inst, cert)
}

/// The multigraph stage followed by [`expand_to_simple`]: simple, maximum
/// degree 5, 1-regular conflicts. Edge indices of the multigraph stage are
/// unchanged; terminals refer to the first vertex of their gadgets.
pub fn gen_from_clean3sat_simple(f: &Clean3Cnf) -> (Instance, ReductionCertificate) {
    let (multi, mut cert) = gen_from_clean3sat_multigraph(f);
    let (simple, gadget_cert) = expand_to_simple(&multi);
    let lo = |v: usize| gadget_cert.gadgets[v].lo;
    cert.terminals = cert.terminals.map(|(s, t)| (lo(s), lo(t)));
    cert.gadgets = gadget_cert.gadgets;
    (simple, cert)
}
