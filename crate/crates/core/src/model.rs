//! Instances, cuts and bipartitions, plus the elementary checks every solver
//! and generator relies on.
//!
//! Vertices and edges are 0-based. An edge is identified by its position in
//! the edge list, so parallel edges are distinct objects.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An undirected edge between two distinct vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        Edge { u, v }
    }

    /// The endpoint opposite to `x`. `x` must be an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            debug_assert_eq!(self.v, x);
            self.u
        }
    }

    pub fn has_endpoint(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// A common endpoint of the two edges, if any. For parallel edges the
    /// smaller endpoint is returned.
    pub fn shared_endpoint(&self, other: &Edge) -> Option<usize> {
        let (a, b) = (self.u.min(self.v), self.u.max(self.v));
        if other.has_endpoint(a) {
            Some(a)
        } else if other.has_endpoint(b) {
            Some(b)
        } else {
            None
        }
    }

    fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// Undirected multigraph on vertices `0..n`. Loops are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<Edge>,
    incidence: Vec<Vec<usize>>,
}

impl MultiGraph {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            if e.u >= n || e.v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {i} = {{{}, {}}} has an endpoint outside 0..{n}",
                    e.u, e.v
                )));
            }
            if e.u == e.v {
                return Err(Error::InvalidGraph(format!("edge {i} is a loop at {}", e.u)));
            }
            incidence[e.u].push(i);
            incidence[e.v].push(i);
        }
        Ok(MultiGraph {
            n,
            edges,
            incidence,
        })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, pairs.iter().map(|&(u, v)| Edge::new(u, v)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    /// Indices of the edges incident to `v` (ascending).
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// True when no two edges join the same pair of vertices.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.key()))
    }

    pub fn is_connected(&self) -> bool {
        is_connected(self)
    }

    /// Number of connected components after deleting the edges for which
    /// `removed` returns true.
    pub fn components_without(&self, removed: impl Fn(usize) -> bool) -> usize {
        let mut seen = vec![false; self.n];
        let mut stack = Vec::new();
        let mut count = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(x) = stack.pop() {
                for &ei in &self.incidence[x] {
                    if removed(ei) {
                        continue;
                    }
                    let y = self.edges[ei].other(x);
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }
}

/// True iff every pair of vertices is joined by a path. The empty graph and
/// a single vertex count as connected.
pub fn is_connected(graph: &MultiGraph) -> bool {
    graph.components_without(|_| false) <= 1
}

/// A graph on the edge indices `0..m` of a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictGraph {
    m: usize,
    pairs: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl ConflictGraph {
    /// Builds a conflict graph; pairs are normalised to `(small, large)`.
    /// Duplicate pairs, self pairs and out-of-range indices are rejected.
    pub fn new(m: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); m];
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::new();
        for (i, j) in pairs {
            if i >= m || j >= m {
                return Err(Error::InvalidConflicts(format!(
                    "pair {{{i}, {j}}} refers to an edge outside 0..{m}"
                )));
            }
            if i == j {
                return Err(Error::InvalidConflicts(format!("edge {i} conflicts with itself")));
            }
            let key = (i.min(j), i.max(j));
            if !seen.insert(key) {
                return Err(Error::InvalidConflicts(format!(
                    "pair {{{}, {}}} listed twice",
                    key.0, key.1
                )));
            }
            adjacency[i].push(j);
            adjacency[j].push(i);
            normalized.push(key);
        }
        Ok(ConflictGraph {
            m,
            pairs: normalized,
            adjacency,
        })
    }

    pub fn empty(m: usize) -> Self {
        ConflictGraph {
            m,
            pairs: Vec::new(),
            adjacency: vec![Vec::new(); m],
        }
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Edges conflicting with edge `e`.
    pub fn neighbors(&self, e: usize) -> &[usize] {
        &self.adjacency[e]
    }

    pub fn conflicts(&self, e: usize, f: usize) -> bool {
        self.adjacency[e].contains(&f)
    }

    /// `(max degree, min degree)`; `(0, 0)` for an empty host edge set.
    pub fn regularity(&self) -> (usize, usize) {
        let max = self.adjacency.iter().map(Vec::len).max().unwrap_or(0);
        let min = self.adjacency.iter().map(Vec::len).min().unwrap_or(0);
        (max, min)
    }

    pub fn is_one_regular(&self) -> bool {
        self.m > 0 && self.regularity() == (1, 1)
    }
}

/// A connected multigraph together with a conflict graph on its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: MultiGraph,
    conflicts: ConflictGraph,
}

impl Instance {
    pub fn new(graph: MultiGraph, conflicts: ConflictGraph) -> Result<Self> {
        if conflicts.edge_count() != graph.edge_count() {
            return Err(Error::InvalidConflicts(format!(
                "conflict graph covers {} edges but the graph has {}",
                conflicts.edge_count(),
                graph.edge_count()
            )));
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(Instance { graph, conflicts })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn conflicts(&self) -> &ConflictGraph {
        &self.conflicts
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub(crate) fn require_two_vertices(&self) -> Result<()> {
        if self.vertex_count() < 2 {
            return Err(Error::InvalidParameter(
                "a cut needs at least two vertices".into(),
            ));
        }
        Ok(())
    }
}

/// A set of edge indices, kept sorted and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Cut {
    edges: Vec<usize>,
}

impl Cut {
    pub fn new(edges: impl IntoIterator<Item = usize>) -> Self {
        let mut edges: Vec<usize> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        Cut { edges }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Checks that every index refers to an edge of `graph`.
    pub fn validate(&self, graph: &MultiGraph) -> Result<()> {
        match self.edges.last() {
            Some(&e) if e >= graph.edge_count() => Err(Error::InvalidCut(format!(
                "edge index {e} out of range 0..{}",
                graph.edge_count()
            ))),
            _ => Ok(()),
        }
    }

    fn membership(&self, m: usize) -> Vec<bool> {
        let mut mask = vec![false; m];
        for &e in &self.edges {
            mask[e] = true;
        }
        mask
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A proper two-sided vertex partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    sides: Vec<Side>,
}

impl Bipartition {
    pub fn new(sides: Vec<Side>) -> Result<Self> {
        let has_a = sides.contains(&Side::A);
        let has_b = sides.contains(&Side::B);
        if !(has_a && has_b) {
            return Err(Error::InvalidParameter(
                "bipartition needs two non-empty sides".into(),
            ));
        }
        Ok(Bipartition { sides })
    }

    /// Bit `i` of `mask` set means vertex `i` is on side B.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        Self::new(
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { Side::B } else { Side::A })
                .collect(),
        )
    }

    /// Side B is the set of vertices whose value is `true`.
    pub fn from_bools(values: &[bool]) -> Result<Self> {
        Self::new(
            values
                .iter()
                .map(|&b| if b { Side::B } else { Side::A })
                .collect(),
        )
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn vertex_count(&self) -> usize {
        self.sides.len()
    }
}

/// Edges with exactly one endpoint on each side.
pub fn boundary(graph: &MultiGraph, part: &Bipartition) -> Cut {
    debug_assert_eq!(graph.vertex_count(), part.vertex_count());
    Cut::new(
        graph
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| part.side(e.u) != part.side(e.v))
            .map(|(i, _)| i),
    )
}

/// Boundary of a single vertex.
pub fn vertex_boundary(graph: &MultiGraph, v: usize) -> Cut {
    Cut::new(graph.incident(v).iter().copied())
}

pub fn is_conflict_free(inst: &Instance, cut: &Cut) -> bool {
    let member = cut.membership(inst.edge_count());
    cut.edges()
        .iter()
        .all(|&e| inst.conflicts().neighbors(e).iter().all(|&f| !member[f]))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub disconnects: bool,
    pub conflict_free: bool,
    /// Conflict pairs `(i, j)`, `i < j`, with both edges in the cut.
    pub violating_pairs: Vec<(usize, usize)>,
    pub components_after_removal: usize,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.disconnects && self.conflict_free
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.disconnects {
            write!(f, "not-disconnecting")
        } else if let Some(&(i, j)) = self.violating_pairs.first() {
            write!(f, "conflicting-pair {} {}", i + 1, j + 1)
        } else {
            write!(f, "valid")
        }
    }
}

pub fn verify_cut(inst: &Instance, cut: &Cut) -> Result<VerifyReport> {
    cut.validate(inst.graph())?;
    let member = cut.membership(inst.edge_count());
    let components = inst.graph().components_without(|e| member[e]);
    let violating_pairs: Vec<(usize, usize)> = inst
        .conflicts()
        .pairs()
        .iter()
        .copied()
        .filter(|&(i, j)| member[i] && member[j])
        .collect();
    Ok(VerifyReport {
        disconnects: components >= 2,
        conflict_free: violating_pairs.is_empty(),
        violating_pairs,
        components_after_removal: components,
    })
}

/// Conflict graph of the matching cut problem: two edges conflict iff they
/// share an endpoint. Parallel edges share both and therefore conflict.
pub fn line_graph_conflicts(graph: &MultiGraph) -> ConflictGraph {
    let mut pairs = BTreeSet::new();
    for v in 0..graph.vertex_count() {
        let inc = graph.incident(v);
        for (a, &i) in inc.iter().enumerate() {
            for &j in &inc[a + 1..] {
                pairs.insert((i.min(j), i.max(j)));
            }
        }
    }
    ConflictGraph::new(graph.edge_count(), pairs).expect("line graph pairs are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> MultiGraph {
        MultiGraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn cycle4() -> MultiGraph {
        MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn k4() -> MultiGraph {
        MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&MultiGraph::new(1, vec![]).unwrap()));
        assert!(!is_connected(&MultiGraph::new(2, vec![]).unwrap()));
        assert!(is_connected(&path3()));
    }

    #[test]
    fn rejects_loops_and_bad_endpoints() {
        assert!(MultiGraph::from_pairs(2, &[(1, 1)]).is_err());
        assert!(MultiGraph::from_pairs(2, &[(0, 2)]).is_err());
        assert!(MultiGraph::from_pairs(2, &[(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn conflict_graph_validation() {
        assert!(ConflictGraph::new(2, [(0, 0)]).is_err());
        assert!(ConflictGraph::new(2, [(0, 2)]).is_err());
        assert!(ConflictGraph::new(3, [(0, 1), (1, 0)]).is_err());
        let c = ConflictGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(c.is_one_regular());
        assert_eq!(ConflictGraph::new(3, [(0, 1)]).unwrap().regularity(), (1, 0));
    }

    #[test]
    fn instance_requires_connectivity_and_matching_sizes() {
        let g = MultiGraph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            Instance::new(g.clone(), ConflictGraph::empty(2)),
            Err(Error::Disconnected)
        );
        assert!(Instance::new(path3(), ConflictGraph::empty(3)).is_err());
    }

    #[test]
    fn boundary_examples() {
        let p = Bipartition::new(vec![Side::A, Side::B, Side::B]).unwrap();
        assert_eq!(boundary(&path3(), &p).edges(), &[0]);

        let p = Bipartition::new(vec![Side::A, Side::A, Side::B, Side::B]).unwrap();
        assert_eq!(boundary(&cycle4(), &p).edges(), &[1, 3]);

        let p = Bipartition::from_mask(4, 0b1110).unwrap();
        assert_eq!(boundary(&k4(), &p).edges(), &[0, 1, 2]);
    }

    #[test]
    fn bipartition_must_be_proper() {
        assert!(Bipartition::new(vec![Side::A, Side::A]).is_err());
        assert!(Bipartition::from_mask(3, 0b111).is_err());
        assert!(Bipartition::from_bools(&[false, true]).is_ok());
    }

    #[test]
    fn conflict_free_examples() {
        let inst = Instance::new(path3(), ConflictGraph::new(2, [(0, 1)]).unwrap()).unwrap();
        assert!(is_conflict_free(&inst, &Cut::default()));
        assert!(is_conflict_free(&inst, &Cut::new([0])));
        assert!(!is_conflict_free(&inst, &Cut::new([0, 1])));
    }

    #[test]
    fn verify_examples() {
        let g = k4();
        let inst = Instance::new(g.clone(), line_graph_conflicts(&g)).unwrap();
        let r = verify_cut(&inst, &Cut::new([0])).unwrap();
        assert!(!r.disconnects);
        assert_eq!(r.components_after_removal, 1);

        let inst = Instance::new(path3(), ConflictGraph::empty(2)).unwrap();
        let r = verify_cut(&inst, &Cut::new([0])).unwrap();
        assert!(r.disconnects && r.conflict_free);
        assert!(r.is_valid());

        let inst =
            Instance::new(cycle4(), ConflictGraph::new(4, [(0, 1), (2, 3)]).unwrap()).unwrap();
        let r = verify_cut(&inst, &Cut::new([0, 1])).unwrap();
        assert!(r.disconnects);
        assert!(!r.conflict_free);
        assert_eq!(r.violating_pairs, vec![(0, 1)]);
        assert_eq!(r.to_string(), "conflicting-pair 1 2");
    }

    #[test]
    fn verify_rejects_out_of_range_cut() {
        let inst = Instance::new(path3(), ConflictGraph::empty(2)).unwrap();
        assert!(verify_cut(&inst, &Cut::new([5])).is_err());
    }

    #[test]
    fn line_graph_examples() {
        assert_eq!(line_graph_conflicts(&path3()).pairs(), &[(0, 1)]);
        let tri = MultiGraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(line_graph_conflicts(&tri).pair_count(), 3);
        let two = MultiGraph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(line_graph_conflicts(&two).pair_count(), 0);
    }

    #[test]
    fn line_graph_counts_parallel_edges_once() {
        // Two parallel edges plus a pendant edge: degrees 3, 2, 1.
        let g = MultiGraph::from_pairs(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let degree_sum: usize = (0..3).map(|v| g.degree(v) * (g.degree(v) - 1) / 2).sum();
        // the parallel pair is adjacent at both endpoints
        assert_eq!(line_graph_conflicts(&g).pair_count(), degree_sum - 1);
    }

    #[test]
    fn shared_endpoint() {
        assert_eq!(Edge::new(0, 1).shared_endpoint(&Edge::new(1, 2)), Some(1));
        assert_eq!(Edge::new(0, 1).shared_endpoint(&Edge::new(2, 3)), None);
        assert_eq!(Edge::new(1, 0).shared_endpoint(&Edge::new(0, 1)), Some(0));
    }
}
