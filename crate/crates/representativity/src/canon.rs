//! Canonical labeling for isomorphism-class deduplication: iterated color
//! refinement over ordered partitions, backtracking on the first smallest
//! non-singleton cell, taking the lexicographically smallest adjacency rows.

use crate::graph::Graph;

type Partition = Vec<Vec<usize>>;

/// Refines an ordered partition until equitable. Cells split by their
/// neighbor-count signature against every current cell; sub-cells are ordered
/// by ascending signature, which keeps the procedure isomorphism-invariant.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let mut changed = false;
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig: Vec<usize> = cells
                        .iter()
                        .map(|c| c.iter().filter(|&&u| g.has_edge(u, v)).count())
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut sub: Vec<usize> = vec![keyed[0].1];
            for w in keyed.windows(2) {
                if w[1].0 != w[0].0 {
                    next.push(std::mem::take(&mut sub));
                    changed = true;
                }
                sub.push(w[1].1);
            }
            next.push(sub);
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn first_smallest_nonsingleton(cells: &Partition) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, c) in cells.iter().enumerate() {
        if c.len() > 1 && best.is_none_or(|b| c.len() < cells[b].len()) {
            best = Some(i);
        }
    }
    best
}

fn relabeled_rows(g: &Graph, cells: &Partition) -> Vec<u64> {
    let n = g.n();
    let mut position = vec![0usize; n];
    for (pos, cell) in cells.iter().enumerate() {
        position[cell[0]] = pos;
    }
    let mut rows = vec![0u64; n];
    for (u, v) in g.edges() {
        rows[position[u]] |= 1 << position[v];
        rows[position[v]] |= 1 << position[u];
    }
    rows
}

fn search(g: &Graph, cells: Partition, best: &mut Option<Vec<u64>>) {
    match first_smallest_nonsingleton(&cells) {
        None => {
            let rows = relabeled_rows(g, &cells);
            if best.as_ref().is_none_or(|b| rows < *b) {
                *best = Some(rows);
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut split = Vec::with_capacity(cells.len() + 1);
                split.extend_from_slice(&cells[..i]);
                split.push(vec![v]);
                split.push(cells[i].iter().copied().filter(|&u| u != v).collect());
                split.extend_from_slice(&cells[i + 1..]);
                search(g, refine(g, split), best);
            }
        }
    }
}

/// Adjacency rows of the canonical relabeling; equal iff the graphs are isomorphic.
pub fn canonical_key(g: &Graph) -> Vec<u64> {
    if g.n() == 0 {
        return Vec::new();
    }
    let cells = refine(g, vec![(0..g.n()).collect()]);
    let mut best = None;
    search(g, cells, &mut best);
    best.unwrap()
}

pub fn canonical_graph(g: &Graph) -> Graph {
    Graph::from_rows(canonical_key(g))
}
