//! Minimum vertex cover by bounded search tree.

use crate::model::MultiGraph;

/// A minimum vertex cover, ascending. Isolated vertices never enter it.
pub fn min_vertex_cover(graph: &MultiGraph) -> Vec<usize> {
    (0..=graph.vertex_count())
        .find_map(|k| vertex_cover_at_most(graph, k))
        .expect("the full vertex set is a cover")
}

/// Some vertex cover of size at most `k`, if one exists.
///
/// Branches on an uncovered edge: one of its endpoints has to be in the
/// cover. The edge picked is one touching a vertex of maximum remaining
/// degree, which keeps the tree small without changing the `2^k` bound.
pub fn vertex_cover_at_most(graph: &MultiGraph, k: usize) -> Option<Vec<usize>> {
    let mut in_cover = vec![false; graph.vertex_count()];
    if branch(graph, k, &mut in_cover) {
        Some((0..graph.vertex_count()).filter(|&v| in_cover[v]).collect())
    } else {
        None
    }
}

fn branch(graph: &MultiGraph, budget: usize, in_cover: &mut [bool]) -> bool {
    // distinct neighbours outside the cover; parallel edges count once
    let residual_degree = |v: usize| {
        let mut nbrs: Vec<usize> = graph
            .incident(v)
            .iter()
            .map(|&e| graph.edge(e).other(v))
            .filter(|&u| !in_cover[u])
            .collect();
        nbrs.sort_unstable();
        nbrs.dedup();
        nbrs.len()
    };
    let pick = (0..graph.vertex_count())
        .filter(|&v| !in_cover[v])
        .map(|v| (residual_degree(v), v))
        .filter(|&(d, _)| d > 0)
        .max();
    let Some((degree, v)) = pick else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    // a vertex of residual degree above the budget must be taken
    let u = graph
        .incident(v)
        .iter()
        .map(|&e| graph.edge(e).other(v))
        .find(|&u| !in_cover[u])
        .expect("positive residual degree");
    let choices: &[usize] = if degree > budget { &[v] } else { &[v, u] };
    for &w in choices {
        in_cover[w] = true;
        if branch(graph, budget - 1, in_cover) {
            return true;
        }
        in_cover[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_cover(g: &MultiGraph, cover: &[usize]) -> bool {
        g.edges()
            .iter()
            .all(|e| cover.contains(&e.u) || cover.contains(&e.v))
    }

    /// Smallest cover size by trying every subset.
    fn exhaustive_min(g: &MultiGraph) -> usize {
        let n = g.vertex_count();
        (0u32..1 << n)
            .filter(|mask| {
                let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                is_cover(g, &set)
            })
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    #[test]
    fn examples() {
        let p3 = MultiGraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(min_vertex_cover(&p3), vec![1]);
        let k4 =
            MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(min_vertex_cover(&k4).len(), 3);
        let c5 = MultiGraph::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(exhaustive_min(&c5), 3);
        assert_eq!(min_vertex_cover(&c5).len(), 3);
        assert!(vertex_cover_at_most(&c5, 2).is_none());
    }

    #[test]
    fn parallel_edges_do_not_force_the_wrong_endpoint() {
        let g = MultiGraph::from_pairs(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(vertex_cover_at_most(&g, 1).map(|c| c.len()), Some(1));
    }

    #[test]
    fn isolated_vertices_excluded() {
        let g = MultiGraph::from_pairs(4, &[(0, 1), (0, 1)]).unwrap();
        let cover = min_vertex_cover(&g);
        assert_eq!(cover.len(), 1);
        assert!(!cover.contains(&2) && !cover.contains(&3));
    }

    #[test]
    fn matches_exhaustive_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..9);
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        pairs.push((u, v));
                    }
                }
            }
            let g = MultiGraph::from_pairs(n, &pairs).unwrap();
            let cover = min_vertex_cover(&g);
            assert!(is_cover(&g, &cover));
            assert_eq!(cover.len(), exhaustive_min(&g));
        }
    }
}
