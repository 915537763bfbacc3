//! Backtracking isomorphism search shared by `Graph::is_isomorphic` and the
//! automorphism machinery. Pruning: equitable refinement colors plus exact
//! neighborhood matching against the mapped prefix.

use crate::graph::Graph;

/// Iterated color refinement. Colors are canonical ranks: two vertices (in the
/// same or in different graphs) that survive the same refinement history get
/// the same color, so isomorphisms must preserve colors.
pub fn refinement_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut distinct = 0;
    loop {
        // signature = (own color, sorted neighbor colors)
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let rank = |sig: &(usize, Vec<usize>)| sorted.binary_search(&sig).unwrap();
        let new_colors: Vec<usize> = sigs.iter().map(rank).collect();
        let new_distinct = sorted.len();
        if new_distinct == distinct {
            return new_colors;
        }
        distinct = new_distinct;
        colors = new_colors;
    }
}

/// Finds an edge-preserving bijection `g -> h` extending the given pinned
/// vertex pairs, or `None` if there is none. `find_isomorphism(g, g, pins)`
/// is an automorphism search with prescribed images.
pub fn find_isomorphism(g: &Graph, h: &Graph, pins: &[(usize, usize)]) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }

    let cg = refinement_colors(g);
    let ch = refinement_colors(h);
    let mut hist_g = vec![0usize; n];
    let mut hist_h = vec![0usize; n];
    for v in 0..n {
        hist_g[cg[v]] += 1;
        hist_h[ch[v]] += 1;
    }
    if hist_g != hist_h {
        return None;
    }

    // Pins must be consistent on their own before searching.
    for (i, &(a, b)) in pins.iter().enumerate() {
        if a >= n || b >= n || cg[a] != ch[b] {
            return None;
        }
        for &(c, d) in &pins[..i] {
            if a == c || b == d || g.has_edge(a, c) != h.has_edge(b, d) {
                return None;
            }
        }
    }

    // Static order: pinned sources first, then greedily the vertex with the
    // most already-ordered neighbors (ties to the smaller label).
    let mut order: Vec<usize> = pins.iter().map(|&(a, _)| a).collect();
    let mut placed = vec![false; n];
    for &v in &order {
        placed[v] = true;
    }
    while order.len() < n {
        let mut best = usize::MAX;
        let mut best_score = 0;
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let score = order.iter().filter(|&&u| g.has_edge(u, v)).count();
            if best == usize::MAX || score > best_score {
                best = v;
                best_score = score;
            }
        }
        placed[best] = true;
        order.push(best);
    }

    let mut mapping = vec![usize::MAX; n];
    let mut used: u64 = 0;
    let mut mapped_mask: u64 = 0;

    fn extend(
        g: &Graph,
        h: &Graph,
        cg: &[usize],
        ch: &[usize],
        order: &[usize],
        pins: &[(usize, usize)],
        pos: usize,
        mapping: &mut [usize],
        used: &mut u64,
        mapped_mask: &mut u64,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let u = order[pos];
        // Image of u's already-mapped neighborhood; a candidate must match it exactly.
        let mut required: u64 = 0;
        for w in g.neighbors(u).iter() {
            if mapping[w] != usize::MAX {
                required |= 1 << mapping[w];
            }
        }
        let n = g.n();
        let candidates: Box<dyn Iterator<Item = usize>> = if pos < pins.len() {
            Box::new(std::iter::once(pins[pos].1))
        } else {
            Box::new(0..n)
        };
        for w in candidates {
            if *used >> w & 1 == 1 || ch[w] != cg[u] {
                continue;
            }
            if h.neighbors(w).bits() & *mapped_mask != required {
                continue;
            }
            mapping[u] = w;
            *used |= 1 << w;
            *mapped_mask |= 1 << w;
            if extend(g, h, cg, ch, order, pins, pos + 1, mapping, used, mapped_mask) {
                return true;
            }
            mapping[u] = usize::MAX;
            *used &= !(1 << w);
            *mapped_mask &= !(1 << w);
        }
        false
    }

    if extend(
        g, h, &cg, &ch, &order, pins, 0, &mut mapping, &mut used, &mut mapped_mask,
    ) {
        Some(mapping)
    } else {
        None
    }
}
