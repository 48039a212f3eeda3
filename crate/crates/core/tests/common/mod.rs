//! Instance families and independent checks shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cfcut::cnf::{Lit, RawCnf};
use cfcut::generators::{validate_clean, Clean3Cnf, MisInstance};
use cfcut::{boundary, is_conflict_free, Bipartition, ConflictGraph, Edge, Instance, MultiGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Cut existence by recomputing the boundary of every side mask from
/// scratch, independent of the Gray code walk.
pub fn naive_cut_exists(inst: &Instance) -> bool {
    let n = inst.vertex_count();
    assert!(n <= 24, "naive oracle limited to 24 vertices");
    (1u64..1 << (n - 1)).any(|half| {
        let part = Bipartition::from_mask(n, half << 1).unwrap();
        is_conflict_free(inst, &boundary(inst.graph(), &part))
    })
}

type ClauseKey = Vec<(usize, bool)>;

fn canonical(clauses: &[Vec<(usize, bool)>], n: usize) -> Vec<ClauseKey> {
    let mut best: Option<Vec<ClauseKey>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let mut mapped: Vec<ClauseKey> = clauses
            .iter()
            .map(|c| {
                let mut c: ClauseKey = c.iter().map(|&(v, s)| (p[v], s)).collect();
                c.sort();
                c
            })
            .collect();
        mapped.sort();
        if best.as_ref().is_none_or(|b| mapped < *b) {
            best = Some(mapped);
        }
    });
    best.unwrap()
}

fn permutations(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// Every normalized clean formula on exactly `n` variables, one per class
/// under variable permutation.
pub fn all_clean_formulas(n: usize) -> Vec<Clean3Cnf> {
    let occ: Vec<(usize, bool)> = (0..n)
        .flat_map(|v| [(v, true), (v, true), (v, false)])
        .collect();
    let mut used = vec![false; occ.len()];
    let mut current: Vec<Vec<(usize, bool)>> = Vec::new();
    let mut seen = BTreeSet::new();
    partition(&occ, &mut used, &mut current, &mut |clauses| {
        seen.insert(canonical(clauses, n));
    });
    seen.into_iter()
        .map(|clauses| {
            let raw = RawCnf {
                num_vars: n,
                clauses: clauses
                    .iter()
                    .map(|c| c.iter().map(|&(v, s)| Lit::new(v, s)).collect())
                    .collect(),
            };
            validate_clean(&raw).expect("enumerated formulas are clean")
        })
        .collect()
}

fn partition(
    occ: &[(usize, bool)],
    used: &mut Vec<bool>,
    current: &mut Vec<Vec<(usize, bool)>>,
    visit: &mut impl FnMut(&[Vec<(usize, bool)>]),
) {
    let Some(first) = used.iter().position(|&u| !u) else {
        visit(current);
        return;
    };
    used[first] = true;
    let rest: Vec<usize> = (first + 1..occ.len())
        .filter(|&i| !used[i] && occ[i].0 != occ[first].0)
        .collect();
    for (a, &i) in rest.iter().enumerate() {
        used[i] = true;
        current.push(vec![occ[first], occ[i]]);
        partition(occ, used, current, visit);
        current.pop();
        for &j in &rest[a + 1..] {
            if occ[j].0 == occ[i].0 {
                continue;
            }
            used[j] = true;
            current.push(vec![occ[first], occ[i], occ[j]]);
            partition(occ, used, current, visit);
            current.pop();
            used[j] = false;
        }
        used[i] = false;
    }
    used[first] = false;
}

/// Connected simple graph whose vertex cover number is at most `k`:
/// vertices `0..k` form the cover, every other vertex has 1 to 3 neighbours
/// in it. Conflicts are a random 1-regular pattern, or (`dense`) a conflict
/// between two edges of every non-cover vertex plus random pairs.
pub fn planted_cover(n: usize, k: usize, dense: bool, seed: u64) -> Instance {
    assert!(k >= 1 && n > k);
    let mut rng = rng(seed);
    loop {
        let mut edges = BTreeSet::new();
        for u in 0..k {
            for v in u + 1..k {
                if rng.gen_bool(0.4) {
                    edges.insert((u, v));
                }
            }
        }
        let lo = if dense { 2.min(k) } else { 1 };
        for w in k..n {
            let d = rng.gen_range(lo..=3.min(k));
            let mut cover: Vec<usize> = (0..k).collect();
            cover.shuffle(&mut rng);
            for &c in &cover[..d] {
                edges.insert((c, w));
            }
        }
        let edges: Vec<Edge> = edges.into_iter().map(|(u, v)| Edge::new(u, v)).collect();
        let graph = MultiGraph::new(n, edges).unwrap();
        if !graph.is_connected() {
            continue;
        }
        let m = graph.edge_count();
        let pairs: BTreeSet<(usize, usize)> = if dense {
            let mut pairs = BTreeSet::new();
            for w in k..n {
                let at = graph.incident(w);
                if at.len() >= 2 {
                    pairs.insert((at[0].min(at[1]), at[0].max(at[1])));
                }
            }
            let p = rng.gen_range(0.1..0.3);
            for e in 0..m {
                for f in e + 1..m {
                    if rng.gen_bool(p) {
                        pairs.insert((e, f));
                    }
                }
            }
            pairs
        } else {
            let mut idx: Vec<usize> = (0..m).collect();
            idx.shuffle(&mut rng);
            idx.chunks_exact(2).map(|c| (c[0], c[1])).collect()
        };
        return Instance::new(graph, ConflictGraph::new(m, pairs).unwrap()).unwrap();
    }
}

/// Same instance with vertices and edges renumbered by a seeded permutation.
pub fn relabel(inst: &Instance, seed: u64) -> Instance {
    let mut rng = rng(seed);
    let g = inst.graph();
    let mut vperm: Vec<usize> = (0..g.vertex_count()).collect();
    vperm.shuffle(&mut rng);
    let mut eperm: Vec<usize> = (0..g.edge_count()).collect();
    eperm.shuffle(&mut rng);
    let mut edges = vec![Edge::new(0, 0); g.edge_count()];
    for (i, e) in g.edges().iter().enumerate() {
        edges[eperm[i]] = Edge::new(vperm[e.u], vperm[e.v]);
    }
    let pairs = inst.conflicts().pairs().iter().map(|&(a, b)| (eperm[a], eperm[b]));
    Instance::new(
        MultiGraph::new(g.vertex_count(), edges).unwrap(),
        ConflictGraph::new(g.edge_count(), pairs).unwrap(),
    )
    .unwrap()
}

/// Random simple `H` on `nh` vertices split into `k` non-empty classes.
pub fn random_mis(nh: usize, k: usize, p: f64, seed: u64) -> MisInstance {
    let mut rng = rng(seed);
    let mut order: Vec<usize> = (0..nh).collect();
    order.shuffle(&mut rng);
    let mut classes: Vec<Vec<usize>> = order[..k].iter().map(|&v| vec![v]).collect();
    for &v in &order[k..] {
        classes[rng.gen_range(0..k)].push(v);
    }
    let edges: Vec<Edge> = (0..nh)
        .flat_map(|u| (u + 1..nh).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .map(|(u, v)| Edge::new(u, v))
        .collect();
    MisInstance::new(MultiGraph::new(nh, edges).unwrap(), classes).unwrap()
}

/// All perfect matchings on `0..m` (`m` even).
pub fn perfect_matchings(m: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(rest: Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&a, tail)) = rest.split_first() else {
            out.push(acc.clone());
            return;
        };
        for i in 0..tail.len() {
            let mut next = tail.to_vec();
            let b = next.remove(i);
            acc.push((a, b));
            go(next, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go((0..m).collect(), &mut Vec::new(), &mut out);
    out
}

/// Connected multigraphs on 2 or 3 vertices with an even number of at most
/// `max_edges` edges, each with every 1-regular conflict pattern.
pub fn small_hosts(max_edges: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 2..=3 {
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for m in (2..=max_edges).step_by(2) {
            for mult in multiplicities(slots.len(), m) {
                let pairs: Vec<(usize, usize)> = slots
                    .iter()
                    .zip(&mult)
                    .flat_map(|(&e, &c)| std::iter::repeat_n(e, c))
                    .collect();
                let graph = MultiGraph::from_pairs(n, &pairs).unwrap();
                if !graph.is_connected() {
                    continue;
                }
                for matching in perfect_matchings(m) {
                    let c = ConflictGraph::new(m, matching).unwrap();
                    out.push(Instance::new(graph.clone(), c).unwrap());
                }
            }
        }
    }
    out
}

fn multiplicities(slots: usize, total: usize) -> Vec<Vec<usize>> {
    if slots == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            multiplicities(slots - 1, total - first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}
