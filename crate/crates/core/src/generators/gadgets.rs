//! Squares of cycles with conflicts between each cycle edge and the chord
//! leaving the same vertex, and the vertex-to-gadget expansion built on them.

use crate::error::{Error, Result};
use crate::generators::certificate::{CertKind, GadgetRange, ReductionCertificate};
use crate::model::{ConflictGraph, Edge, Instance, MultiGraph};

/// Square of the cycle on `len` vertices: cycle edges `e_i = {i, i+1}` at
/// index `i`, chords `c_i = {i, i+2}` at index `len + i`, and the conflict
/// pairs `{e_i, c_i}`.
fn cycle_square(len: usize) -> (Vec<Edge>, Vec<(usize, usize)>) {
    let mut edges: Vec<Edge> = (0..len).map(|i| Edge::new(i, (i + 1) % len)).collect();
    edges.extend((0..len).map(|i| Edge::new(i, (i + 2) % len)));
    let pairs = (0..len).map(|i| (i, len + i)).collect();
    (edges, pairs)
}

/// Endpoints of the two extra edges `{0, 3}` and `{half, half+3}`. Both
/// join the two colour classes of the even cycle.
fn extra_ends(half: usize) -> [usize; 4] {
    [0, 3, half, half + 3]
}

/// Edges and conflicts of the uncutable gadget on `2 * half` vertices: the
/// square of the cycle plus the two extra edges, which conflict with each
/// other.
pub(crate) fn uncutable_parts(half: usize) -> (Vec<Edge>, Vec<(usize, usize)>) {
    let len = 2 * half;
    let (mut edges, mut pairs) = cycle_square(len);
    let [a0, a1, b0, b1] = extra_ends(half);
    edges.push(Edge::new(a0, a1));
    edges.push(Edge::new(b0, b1));
    pairs.push((2 * len, 2 * len + 1));
    (edges, pairs)
}

/// Gadget vertices of degree 4, cycle-odd ones first. These take the
/// external edges when a vertex is expanded.
pub(crate) fn attachment_points(half: usize) -> Vec<usize> {
    let len = 2 * half;
    let extra = extra_ends(half);
    let odd = (1..len).step_by(2);
    let even = (0..len).step_by(2);
    odd.chain(even).filter(|v| !extra.contains(v)).collect()
}

/// The uncutable gadget on `2 * half` vertices, `half >= 4`. It has
/// `4 * half + 2` edges, a 1-regular conflict graph, and no conflict-free
/// cut.
pub fn gen_uncutable(half: usize) -> Result<Instance> {
    if half < 4 {
        return Err(Error::InvalidParameter(format!(
            "uncutable gadget needs half >= 4, got {half}"
        )));
    }
    let (edges, pairs) = uncutable_parts(half);
    let m = edges.len();
    Instance::new(MultiGraph::new(2 * half, edges)?, ConflictGraph::new(m, pairs)?)
}

/// Square of an odd cycle with the same conflict pattern and no extra
/// edges: `n` vertices, `2n` edges, no conflict-free cut.
pub fn gen_odd_square(n: usize) -> Result<Instance> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "odd square needs an odd cycle length >= 5, got {n}"
        )));
    }
    let (edges, pairs) = cycle_square(n);
    Instance::new(MultiGraph::new(n, edges)?, ConflictGraph::new(2 * n, pairs)?)
}

/// Replaces every vertex by an uncutable gadget so the result is simple.
///
/// A vertex of degree `d` becomes a gadget with `half = max(4, d)`; its
/// incident edges, in index order, move to distinct degree-4 gadget
/// vertices. Edge `i` of the input keeps index `i`; gadget edges follow,
/// gadget by gadget. Input conflicts are kept, gadget conflicts added.
pub fn expand_to_simple(inst: &Instance) -> (Instance, ReductionCertificate) {
    let g = inst.graph();
    let n = g.vertex_count();
    let mut offset = vec![0usize; n];
    let mut halves = vec![0usize; n];
    let mut total = 0;
    for v in 0..n {
        halves[v] = g.degree(v).max(4);
        offset[v] = total;
        total += 2 * halves[v];
    }

    // endpoint of edge i at v -> gadget vertex
    let mut next_slot = vec![0usize; n];
    let points: Vec<Vec<usize>> = halves.iter().map(|&h| attachment_points(h)).collect();
    let mut place = |v: usize| {
        let p = points[v][next_slot[v]];
        next_slot[v] += 1;
        offset[v] + p
    };
    // slots are handed out vertex by vertex in incident-edge order
    let mut ends = vec![(0, 0); g.edge_count()];
    for v in 0..n {
        for &ei in g.incident(v) {
            let slot = place(v);
            if g.edge(ei).u == v {
                ends[ei].0 = slot;
            } else {
                ends[ei].1 = slot;
            }
        }
    }
    let mut edges: Vec<Edge> = ends.iter().map(|&(a, b)| Edge::new(a, b)).collect();

    let mut pairs: Vec<(usize, usize)> = inst.conflicts().pairs().to_vec();
    let mut gadgets = Vec::with_capacity(n);
    for v in 0..n {
        let (gedges, gpairs) = uncutable_parts(halves[v]);
        let base = edges.len();
        edges.extend(gedges.iter().map(|e| Edge::new(e.u + offset[v], e.v + offset[v])));
        pairs.extend(gpairs.iter().map(|&(a, b)| (a + base, b + base)));
        gadgets.push(GadgetRange {
            vertex: v,
            lo: offset[v],
            hi: offset[v] + 2 * halves[v] - 1,
        });
    }

    let m = edges.len();
    let graph = MultiGraph::new(total, edges).expect("gadget vertices in range");
    let conflicts = ConflictGraph::new(m, pairs).expect("disjoint conflict blocks");
    let expanded = Instance::new(graph, conflicts).expect("expansion of a connected graph");
    let mut cert = ReductionCertificate::new(CertKind::Gadget);
    cert.gadgets = gadgets;
    (expanded, cert)
}
