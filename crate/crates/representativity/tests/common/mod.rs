//! Independent brute-force oracles. Nothing here shares code with the
//! solvers or the refinement machinery they certify.
#![allow(dead_code)] // each test target uses its own subset

use representativity::{CopyFamily, Graph, OrbitPartition, VertexSet};

/// Minimum hitting-set size by trying all 2^n vertex subsets.
pub fn subset_min_hitting(fam: &CopyFamily, n: usize) -> usize {
    assert!(n <= 20, "subset oracle is exponential");
    (0u64..1 << n)
        .filter(|&mask| {
            let x = VertexSet::from_bits(mask);
            fam.members.iter().all(|f| f.intersects(x))
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Minimum invariant hitting-set size by trying all 2^k orbit unions.
pub fn orbit_union_min_hitting(fam: &CopyFamily, orbits: &OrbitPartition) -> usize {
    let k = orbits.orbits.len();
    assert!(k <= 24);
    (0u64..1 << k)
        .filter_map(|mask| {
            let union = (0..k)
                .filter(|&j| mask >> j & 1 == 1)
                .fold(VertexSet::EMPTY, |acc, j| acc.union(orbits.orbits[j]));
            fam.members
                .iter()
                .all(|f| f.intersects(union))
                .then(|| union.len())
        })
        .min()
        .unwrap_or(0)
}

fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(perm, k + 1, f);
            perm.swap(k, i);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    rec(&mut perm, 0, f);
}

/// Orbit partition by testing all n! permutations for the automorphism
/// property and closing vertices under the ones that pass.
pub fn brute_orbit_partition(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] == v {
            v
        } else {
            let root = find(parent, parent[v]);
            parent[v] = root;
            root
        }
    }
    for_each_permutation(n, &mut |perm| {
        let is_auto = (0..n).all(|u| {
            (0..n).all(|v| g.has_edge(u, v) == g.has_edge(perm[u], perm[v]))
        });
        if is_auto {
            for v in 0..n {
                let a = find(&mut parent, v);
                let b = find(&mut parent, perm[v]);
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    });
    let mut orbits: Vec<VertexSet> = Vec::new();
    let mut index_of = vec![usize::MAX; n];
    for v in 0..n {
        let root = find(&mut parent, v);
        if index_of[root] == usize::MAX {
            index_of[root] = orbits.len();
            orbits.push(VertexSet::EMPTY);
        }
        orbits[index_of[root]].insert(v);
    }
    orbits
}

/// Canonical form as the minimum adjacency rows over all n! relabelings.
pub fn brute_canonical_key(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let edges = g.edges();
    let mut best: Option<Vec<u64>> = None;
    for_each_permutation(n, &mut |perm| {
        let mut rows = vec![0u64; n];
        for &(u, v) in &edges {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        if best.as_ref().map_or(true, |b| rows < *b) {
            best = Some(rows);
        }
    });
    best.unwrap_or_default()
}

/// Number of connected graphs on n vertices up to isomorphism, by filtering
/// all labeled graphs and bucketing by the n!-brute-force canonical form.
pub fn brute_connected_count(n: usize) -> usize {
    use std::collections::HashSet;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut classes: HashSet<Vec<u64>> = HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges);
        if g.is_connected() {
            classes.insert(brute_canonical_key(&g));
        }
    }
    classes.len()
}

/// Seeded G(n, p) sampler used by the randomized criteria.
pub fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}
