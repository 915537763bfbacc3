//! Automorphism generators, group order, and vertex orbits.
//!
//! The generator search walks a stabilizer chain over the base points
//! 0, 1, 2, ...: at each level it finds, by pinned backtracking, one witness
//! automorphism per new orbit element of the base point within the group
//! fixing all earlier base points. The group order is the product of the
//! chain's orbit lengths, and the collected witnesses generate the full group.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::iso::{find_isomorphism, refinement_colors};
use num_bigint::BigUint;

/// A bijection on `0..n-1` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &w in &images {
            if w >= n || seen[w] {
                return Err(Error::InvalidParameter(
                    "image array is not a permutation".into(),
                ));
            }
            seen[w] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of a vertex set; errors if `s` reaches outside the domain.
    pub fn apply(&self, s: VertexSet) -> Result<VertexSet> {
        if !s.is_subset_of(VertexSet::full(self.degree())) {
            return Err(Error::Domain(format!(
                "set {s:?} not within the permutation domain 0..{}",
                self.degree()
            )));
        }
        Ok(s.iter().map(|v| self.images[v]).collect())
    }

    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.degree() == g.n()
            && g.edges()
                .iter()
                .all(|&(u, v)| g.has_edge(self.images[u], self.images[v]))
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Permutation({:?})", self.images)
    }
}

/// Generators of Aut(g) together with the exact group order.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub generators: Vec<Permutation>,
    pub group_order: BigUint,
}

/// The orbit decomposition of the vertex set under Aut(g).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Orbits ordered by smallest member.
    pub orbits: Vec<VertexSet>,
    /// `orbit_of[v]` indexes into `orbits`.
    pub orbit_of: Vec<usize>,
}

impl OrbitPartition {
    pub fn orbit_containing(&self, v: usize) -> VertexSet {
        self.orbits[self.orbit_of[v]]
    }

    pub fn n(&self) -> usize {
        self.orbit_of.len()
    }
}

fn close_orbit(start: usize, gens: &[Permutation]) -> VertexSet {
    let mut orbit = VertexSet::singleton(start);
    let mut frontier = vec![start];
    while let Some(v) = frontier.pop() {
        for p in gens {
            let w = p.image(v);
            if !orbit.contains(w) {
                orbit.insert(w);
                frontier.push(w);
            }
        }
    }
    orbit
}

pub fn automorphism_generators(g: &Graph) -> GeneratorSet {
    let n = g.n();
    let colors = refinement_colors(g);
    let mut generators: Vec<Permutation> = Vec::new();
    let mut group_order = BigUint::from(1u32);
    let mut pins: Vec<(usize, usize)> = Vec::new();

    for base in 0..n {
        let mut level_gens: Vec<Permutation> = Vec::new();
        let mut orbit = VertexSet::singleton(base);
        for target in base + 1..n {
            if orbit.contains(target) || colors[target] != colors[base] {
                continue;
            }
            pins.push((base, target));
            let found = find_isomorphism(g, g, &pins);
            pins.pop();
            if let Some(images) = found {
                level_gens.push(Permutation { images });
                orbit = close_orbit(base, &level_gens);
            }
        }
        group_order *= BigUint::from(orbit.len());
        generators.extend(level_gens);
        pins.push((base, base));
    }

    debug_assert!(generators.iter().all(|p| p.is_automorphism_of(g)));
    GeneratorSet { generators, group_order }
}

/// Union-find closure of the vertices under the generators.
pub fn orbit_partition(g: &Graph) -> OrbitPartition {
    orbit_partition_from(g.n(), &automorphism_generators(g).generators)
}

pub fn orbit_partition_from(n: usize, generators: &[Permutation]) -> OrbitPartition {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let root = find(parent, parent[v]);
            parent[v] = root;
        }
        parent[v]
    }
    for p in generators {
        for v in 0..n {
            let a = find(&mut parent, v);
            let b = find(&mut parent, p.image(v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: Vec<VertexSet> = Vec::new();
    let mut orbit_of = vec![usize::MAX; n];
    for v in 0..n {
        let root = find(&mut parent, v);
        if orbit_of[root] == usize::MAX {
            orbit_of[root] = orbits.len();
            orbits.push(VertexSet::EMPTY);
        }
        orbit_of[v] = orbit_of[root];
        let idx = orbit_of[v];
        orbits[idx].insert(v);
    }
    OrbitPartition { orbits, orbit_of }
}

pub fn is_vertex_transitive(g: &Graph) -> bool {
    g.n() >= 1 && orbit_partition(g).orbits.len() == 1
}

/// Every vertex of orbit `a` must see the same number of neighbors in orbit
/// `b`; returns that count, or `None` if regularity fails (which would mean
/// the generators do not generate an automorphism group).
pub fn orbit_regular_degree(g: &Graph, a: VertexSet, b: VertexSet) -> Option<usize> {
    let mut counts = a.iter().map(|v| g.neighbors(v).intersection(b).len());
    let first = counts.next()?;
    counts.all(|c| c == first).then_some(first)
}
