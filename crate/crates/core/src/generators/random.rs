//! Seeded random instances and matching-cut instances.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{line_graph_conflicts, ConflictGraph, Edge, Instance, MultiGraph};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConflictModel {
    /// A random perfect matching on edge indices; one edge stays unpaired
    /// when `m` is odd.
    OneRegular,
    /// Each pair of edges conflicts independently with this probability.
    Density(f64),
}

/// Connected simple graph on `n` vertices with `m` edges: a random spanning
/// tree plus uniformly chosen extra edges. Reproducible from `seed`.
pub fn gen_random(n: usize, m: usize, model: ConflictModel, seed: u64) -> Result<Instance> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need at least 2 vertices, got {n}")));
    }
    let max = n * (n - 1) / 2;
    if m < n - 1 || m > max {
        return Err(Error::InvalidParameter(format!(
            "m = {m} outside {}..={max} for a connected simple graph on {n} vertices",
            n - 1
        )));
    }
    if let ConflictModel::Density(p) = model {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!("density {p} outside [0, 1]")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graph = random_connected_graph(n, m, &mut rng);
    let conflicts = random_conflicts(m, model, &mut rng);
    Instance::new(graph, conflicts)
}

fn random_connected_graph(n: usize, m: usize, rng: &mut ChaCha8Rng) -> MultiGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut present = HashSet::new();
    let mut edges = Vec::with_capacity(m);
    // edges are stored with the smaller endpoint first
    let ordered = |u: usize, v: usize| Edge::new(u.min(v), u.max(v));
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let e = ordered(parent, order[i]);
        present.insert(e);
        edges.push(e);
    }
    if m - edges.len() > (n * (n - 1) / 2 - edges.len()) / 2 {
        // dense: sample from the complement list instead of rejecting
        let mut rest: Vec<Edge> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
            .filter(|e| !present.contains(e))
            .collect();
        rest.shuffle(rng);
        let need = m - edges.len();
        edges.extend(rest.into_iter().take(need));
    } else {
        while edges.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && present.insert(ordered(u, v)) {
                edges.push(ordered(u, v));
            }
        }
    }
    MultiGraph::new(n, edges).expect("endpoints in range")
}

fn random_conflicts(m: usize, model: ConflictModel, rng: &mut ChaCha8Rng) -> ConflictGraph {
    let pairs: Vec<(usize, usize)> = match model {
        ConflictModel::OneRegular => {
            let mut idx: Vec<usize> = (0..m).collect();
            idx.shuffle(rng);
            idx.chunks_exact(2).map(|c| (c[0], c[1])).collect()
        }
        ConflictModel::Density(p) => (0..m)
            .flat_map(|e| (e + 1..m).map(move |f| (e, f)))
            .filter(|_| rng.gen_bool(p))
            .collect(),
    };
    ConflictGraph::new(m, pairs).expect("distinct pairs")
}

/// The graph with its line graph as conflict graph: conflict-free cuts are
/// exactly the matching cuts.
pub fn gen_matching_cut(graph: MultiGraph) -> Result<Instance> {
    let conflicts = line_graph_conflicts(&graph);
    Instance::new(graph, conflicts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::solve_bruteforce;

    #[test]
    fn structure() {
        let inst = gen_random(6, 8, ConflictModel::OneRegular, 1).unwrap();
        assert_eq!(inst.vertex_count(), 6);
        assert_eq!(inst.edge_count(), 8);
        assert!(inst.graph().is_simple());
        assert!(inst.graph().is_connected());
        assert_eq!(inst.conflicts().pair_count(), 4);
        assert!(inst.conflicts().is_one_regular());
    }

    #[test]
    fn bounds() {
        assert!(gen_random(5, 3, ConflictModel::OneRegular, 0).is_err());
        assert!(gen_random(5, 11, ConflictModel::OneRegular, 0).is_err());
        assert!(gen_random(5, 10, ConflictModel::OneRegular, 0).is_ok());
        assert!(gen_random(1, 0, ConflictModel::OneRegular, 0).is_err());
        assert!(gen_random(5, 6, ConflictModel::Density(1.5), 0).is_err());
    }

    #[test]
    fn odd_edge_count_leaves_one_unpaired() {
        let inst = gen_random(5, 7, ConflictModel::OneRegular, 3).unwrap();
        assert_eq!(inst.conflicts().pair_count(), 3);
        assert_eq!(inst.conflicts().regularity(), (1, 0));
    }

    #[test]
    fn deterministic() {
        for model in [ConflictModel::OneRegular, ConflictModel::Density(0.3)] {
            for seed in 0..5 {
                let a = gen_random(9, 14, model, seed).unwrap();
                assert_eq!(a, gen_random(9, 14, model, seed).unwrap());
            }
        }
        assert_ne!(
            gen_random(9, 14, ConflictModel::OneRegular, 0).unwrap(),
            gen_random(9, 14, ConflictModel::OneRegular, 1).unwrap()
        );
    }

    #[test]
    fn density_extremes() {
        let none = gen_random(6, 9, ConflictModel::Density(0.0), 2).unwrap();
        assert_eq!(none.conflicts().pair_count(), 0);
        let all = gen_random(6, 9, ConflictModel::Density(1.0), 2).unwrap();
        assert_eq!(all.conflicts().pair_count(), 36);
    }

    #[test]
    fn matching_cut_examples() {
        let c4 = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let cut = solve_bruteforce(&gen_matching_cut(c4).unwrap()).unwrap().unwrap();
        assert!(cut.edges() == [0, 2] || cut.edges() == [1, 3]);

        let k4 = MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert_eq!(solve_bruteforce(&gen_matching_cut(k4).unwrap()).unwrap(), None);

        let tree = MultiGraph::from_pairs(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert!(solve_bruteforce(&gen_matching_cut(tree).unwrap()).unwrap().is_some());

        let split = MultiGraph::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(gen_matching_cut(split), Err(Error::Disconnected)));
    }
}
