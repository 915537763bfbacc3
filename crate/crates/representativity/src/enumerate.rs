//! Built-in exhaustive enumeration of connected graphs up to isomorphism,
//! n <= 7. Larger corpora must be supplied as graph6 files.

use crate::canon::canonical_key;
use crate::error::{Error, Result};
use crate::graph::Graph;
use rayon::prelude::*;
use std::collections::HashSet;

/// Hard cap: 2^21 labeled graphs at n = 7 is the desk-scale budget.
pub const ENUMERATION_MAX_N: usize = 7;

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::edgeless(n);
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.add_edge(u, v);
        }
    }
    g
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in canonical-key order. Sweeps over all 2^(n choose 2) labeled
/// graphs, filtering by connectivity and bucketing by canonical form.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATION_MAX_N {
        return Err(Error::UnsupportedSize {
            n,
            limit: ENUMERATION_MAX_N,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let masks = 1u64 << pairs.len();
    let keys: HashSet<Vec<u64>> = (0..masks)
        .into_par_iter()
        .fold(HashSet::new, |mut acc, mask| {
            let g = graph_from_mask(n, &pairs, mask);
            if g.is_connected() {
                acc.insert(canonical_key(&g));
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut keys: Vec<Vec<u64>> = keys.into_iter().collect();
    keys.sort();
    Ok(keys.into_iter().map(Graph::from_rows).collect())
}
