//! Reduction from multicolored independent set.
//!
//! Class `V_i` becomes an `s`-`t` path with one edge per class vertex, and
//! the conflict graph on path edges is a copy of `H`. Cutting the edge of
//! `v` selects `v`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::generators::certificate::{CertKind, MisEntry, ReductionCertificate};
use crate::model::{ConflictGraph, Edge, Instance, MultiGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MisInstance {
    graph: MultiGraph,
    classes: Vec<Vec<usize>>,
}

impl MisInstance {
    /// `classes` must partition the vertices of the simple graph `graph`
    /// into non-empty sets.
    pub fn new(graph: MultiGraph, classes: Vec<Vec<usize>>) -> Result<Self> {
        if !graph.is_simple() {
            return Err(Error::InvalidGraph("H must be simple".into()));
        }
        let n = graph.vertex_count();
        let mut class_of = vec![None; n];
        for (i, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::InvalidParameter(format!("class {} is empty", i + 1)));
            }
            for &v in class {
                if v >= n {
                    return Err(Error::InvalidParameter(format!(
                        "class {} names vertex {} outside 1..={n}",
                        i + 1,
                        v + 1
                    )));
                }
                if class_of[v].replace(i).is_some() {
                    return Err(Error::InvalidParameter(format!(
                        "vertex {} appears in more than one class",
                        v + 1
                    )));
                }
            }
        }
        if let Some(v) = class_of.iter().position(Option::is_none) {
            return Err(Error::InvalidParameter(format!(
                "vertex {} belongs to no class",
                v + 1
            )));
        }
        Ok(MisInstance { graph, classes })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    /// Adds the missing edges inside each class. Colorful independent sets
    /// are unchanged.
    pub fn normalized(&self) -> MisInstance {
        let mut pairs: BTreeSet<(usize, usize)> = self
            .graph
            .edges()
            .iter()
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect();
        for class in &self.classes {
            for (a, &u) in class.iter().enumerate() {
                for &v in &class[a + 1..] {
                    pairs.insert((u.min(v), u.max(v)));
                }
            }
        }
        let edges = pairs.into_iter().map(|(u, v)| Edge::new(u, v)).collect();
        MisInstance {
            graph: MultiGraph::new(self.graph.vertex_count(), edges).expect("same vertex set"),
            classes: self.classes.clone(),
        }
    }
}

/// Vertex 0 is `s`, vertex 1 is `t`; paths follow in class order. Edge `j`
/// of path `i` (from `s`) stands for `classes[i][j]`.
pub fn gen_from_mis(mi: &MisInstance) -> (Instance, ReductionCertificate) {
    let mi = mi.normalized();
    let (s, t) = (0, 1);
    let mut n_vertices = 2;
    let mut edges = Vec::new();
    let mut edge_of = vec![0; mi.graph.vertex_count()];
    let mut cert = ReductionCertificate::new(CertKind::Mis);
    cert.terminals = Some((s, t));
    for (i, class) in mi.classes.iter().enumerate() {
        let mut prev = s;
        for (j, &v) in class.iter().enumerate() {
            let next = if j + 1 == class.len() {
                t
            } else {
                n_vertices += 1;
                n_vertices - 1
            };
            edge_of[v] = edges.len();
            cert.mis.push(MisEntry {
                class: i,
                vertex: v,
                edge: edges.len(),
            });
            edges.push(Edge::new(prev, next));
            prev = next;
        }
    }
    let pairs = mi
        .graph
        .edges()
        .iter()
        .map(|e| (edge_of[e.u], edge_of[e.v]));
    let m = edges.len();
    let graph = MultiGraph::new(n_vertices, edges).expect("path vertices in range");
    let conflicts = ConflictGraph::new(m, pairs).expect("H is simple");
    let inst = Instance::new(graph, conflicts).expect("paths share s and t");
    (inst, cert)
}

/// Whether `H` has an independent set with exactly one vertex per class.
pub fn has_colorful_independent_set(mi: &MisInstance) -> bool {
    let n = mi.graph.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for e in mi.graph.edges() {
        adj[e.u][e.v] = true;
        adj[e.v][e.u] = true;
    }
    fn pick(i: usize, classes: &[Vec<usize>], adj: &[Vec<bool>], chosen: &mut Vec<usize>) -> bool {
        let Some(class) = classes.get(i) else {
            return true;
        };
        for &v in class {
            if chosen.iter().all(|&u| !adj[u][v]) {
                chosen.push(v);
                if pick(i + 1, classes, adj, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    pick(0, &mi.classes, &adj, &mut Vec::new())
}
