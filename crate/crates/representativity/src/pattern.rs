//! Enumeration of subgraph copies of a pattern inside a host, deduplicated by
//! vertex set, plus the named-pattern grammar used on the command line.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::parse_graph6;
use std::collections::HashSet;

/// All vertex sets carrying at least one copy of a pattern in some host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopyFamily {
    /// Pairwise-distinct member sets, ordered by their sorted vertex lists.
    pub members: Vec<VertexSet>,
    pub pattern_size: usize,
    /// Largest member cardinality; 0 for the empty family.
    pub m: usize,
}

impl CopyFamily {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }
}

/// Copy semantics: a subgraph copy only needs the pattern's edges present;
/// an induced copy also forbids extra host edges inside the image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CopySemantics {
    #[default]
    Subgraph,
    Induced,
}

/// Static connectivity-respecting order: repeatedly the smallest-label
/// pattern vertex adjacent to the prefix, falling back to the smallest
/// unplaced label when a new component starts.
fn pattern_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    while order.len() < n {
        let adjacent = order
            .iter()
            .fold(VertexSet::EMPTY, |acc, &u| acc.union(pattern.neighbors(u)))
            .difference(placed);
        let next = adjacent
            .iter()
            .next()
            .unwrap_or_else(|| (0..n).find(|&v| !placed.contains(v)).unwrap());
        placed.insert(next);
        order.push(next);
    }
    order
}

struct CopySearch<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    semantics: CopySemantics,
    image: Vec<usize>,
    used: VertexSet,
    found: HashSet<u64>,
    early_exit: bool,
    hit: bool,
}

impl CopySearch<'_> {
    fn run(&mut self) {
        self.extend(0);
    }

    fn extend(&mut self, pos: usize) {
        if self.hit && self.early_exit {
            return;
        }
        if pos == self.order.len() {
            self.hit = true;
            self.found.insert(self.used.bits());
            return;
        }
        let u = self.order[pos];
        let deg_u = self.pattern.degree(u);
        for w in 0..self.host.n() {
            if self.used.contains(w) || self.host.degree(w) < deg_u {
                continue;
            }
            let ok = self.order[..pos].iter().all(|&u2| {
                let w2 = self.image[u2];
                match self.semantics {
                    CopySemantics::Subgraph => {
                        !self.pattern.has_edge(u, u2) || self.host.has_edge(w, w2)
                    }
                    CopySemantics::Induced => {
                        self.pattern.has_edge(u, u2) == self.host.has_edge(w, w2)
                    }
                }
            });
            if !ok {
                continue;
            }
            self.image[u] = w;
            self.used.insert(w);
            self.extend(pos + 1);
            self.used.remove(w);
            if self.hit && self.early_exit {
                return;
            }
        }
    }
}

pub fn enumerate_copies_with(host: &Graph, pattern: &Graph, semantics: CopySemantics) -> CopyFamily {
    assert!(pattern.n() >= 1, "pattern must have at least one vertex");
    let mut search = CopySearch {
        host,
        pattern,
        order: pattern_order(pattern),
        semantics,
        image: vec![usize::MAX; pattern.n()],
        used: VertexSet::EMPTY,
        found: HashSet::new(),
        early_exit: false,
        hit: false,
    };
    search.run();
    let mut members: Vec<VertexSet> = search.found.into_iter().map(VertexSet::from_bits).collect();
    members.sort_by_key(|s| s.to_vec());
    let m = members.iter().map(|s| s.len()).max().unwrap_or(0);
    CopyFamily {
        members,
        pattern_size: pattern.n(),
        m,
    }
}

/// The family of all subgraph copies of `pattern` in `host`, by vertex set.
pub fn enumerate_copies(host: &Graph, pattern: &Graph) -> CopyFamily {
    enumerate_copies_with(host, pattern, CopySemantics::Subgraph)
}

/// Early-exit test for at least one subgraph copy.
pub fn contains_copy(host: &Graph, pattern: &Graph) -> bool {
    let mut search = CopySearch {
        host,
        pattern,
        order: pattern_order(pattern),
        semantics: CopySemantics::Subgraph,
        image: vec![usize::MAX; pattern.n()],
        used: VertexSet::EMPTY,
        found: HashSet::new(),
        early_exit: true,
        hit: false,
    };
    search.run();
    search.hit
}

/// Members disjoint from `s`, labels unchanged.
pub fn family_after_deletion(fam: &CopyFamily, s: VertexSet) -> CopyFamily {
    let members: Vec<VertexSet> = fam
        .members
        .iter()
        .copied()
        .filter(|f| !f.intersects(s))
        .collect();
    let m = members.iter().map(|f| f.len()).max().unwrap_or(0);
    CopyFamily {
        members,
        pattern_size: fam.pattern_size,
        m,
    }
}

/// Parses a pattern or host description: `d5`, `k<n>`, `c<n>`, `p<n>`,
/// `petersen`, or a raw graph6 string. Returns the graph and a display label.
pub fn parse_graph_spec(spec: &str) -> Result<(Graph, String)> {
    let lower = spec.to_ascii_lowercase();
    if lower == "d5" {
        return Ok((Graph::chair_d5(), "d5".into()));
    }
    if lower == "petersen" {
        return Ok((Graph::petersen(), "petersen".into()));
    }
    if let Some(rest) = lower.strip_prefix(['k', 'c', 'p']) {
        if let Ok(n) = rest.parse::<usize>() {
            let g = match lower.as_bytes()[0] {
                b'k' => Graph::make_named(crate::graph::NamedKind::Complete, n)?,
                b'c' => Graph::make_named(crate::graph::NamedKind::Cycle, n)?,
                _ => Graph::make_named(crate::graph::NamedKind::Path, n)?,
            };
            return Ok((g, lower));
        }
    }
    let g = parse_graph6(spec).map_err(|e| {
        Error::InvalidParameter(format!(
            "{spec:?} is neither a named graph (d5, k<n>, c<n>, p<n>, petersen) nor valid graph6 ({e})"
        ))
    })?;
    Ok((g, spec.to_string()))
}
