//! Exact solvers for the two representativity numbers and the invariant
//! symmetrization of a hitting set.
//!
//! Both solvers are deterministic branch-and-bound searches, exact by
//! exhaustion; the small-n subset oracles in the test suites certify them.

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::pattern::CopyFamily;
use crate::symmetry::OrbitPartition;

/// An optimal plain hitting set: `size` is the vertex representativity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingWitness {
    pub size: usize,
    pub witness: VertexSet,
}

/// An optimal invariant hitting set: `size` is the symmetric vertex
/// representativity and `witness` is the union of the chosen orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantWitness {
    pub size: usize,
    pub witness: VertexSet,
    pub orbit_indices: Vec<usize>,
}

/// True iff every family member intersects `x` (vacuously true when empty).
pub fn is_hitting(x: VertexSet, fam: &CopyFamily) -> bool {
    fam.members.iter().all(|f| f.intersects(x))
}

/// Greedy max-coverage upper bound: repeatedly the vertex hitting the most
/// uncovered members, ties to the smaller label.
fn greedy_hitting(members: &[VertexSet], n: usize) -> VertexSet {
    let mut chosen = VertexSet::EMPTY;
    let mut uncovered: Vec<VertexSet> = members.to_vec();
    while !uncovered.is_empty() {
        let best = (0..n)
            .max_by_key(|&v| {
                let hits = uncovered.iter().filter(|f| f.contains(v)).count();
                (hits, usize::MAX - v)
            })
            .unwrap();
        chosen.insert(best);
        uncovered.retain(|f| !f.contains(best));
    }
    chosen
}

/// Lower bound: size of a greedy packing of pairwise-disjoint uncovered members.
fn disjoint_packing_bound(uncovered: &[VertexSet]) -> usize {
    let mut taken = VertexSet::EMPTY;
    let mut count = 0;
    for &f in uncovered {
        if !f.intersects(taken) {
            taken = taken.union(f);
            count += 1;
        }
    }
    count
}

fn branch(
    uncovered: &[VertexSet],
    current: VertexSet,
    best: &mut VertexSet,
    best_size: &mut usize,
) {
    if uncovered.is_empty() {
        if current.len() < *best_size {
            *best_size = current.len();
            *best = current;
        }
        return;
    }
    if current.len() + disjoint_packing_bound(uncovered) >= *best_size {
        return;
    }
    // Branch on the vertices of a smallest uncovered member.
    let member = *uncovered
        .iter()
        .min_by_key(|f| f.len())
        .expect("non-empty uncovered list");
    for v in member.iter() {
        let remaining: Vec<VertexSet> = uncovered
            .iter()
            .copied()
            .filter(|f| !f.contains(v))
            .collect();
        let mut next = current;
        next.insert(v);
        branch(&remaining, next, best, best_size);
    }
}

/// Optimal hitting-set size for the family, with any optimal witness.
fn solve_size(members: &[VertexSet], n: usize) -> (usize, VertexSet) {
    if members.is_empty() {
        return (0, VertexSet::EMPTY);
    }
    let mut best = greedy_hitting(members, n);
    let mut best_size = best.len();
    branch(members, VertexSet::EMPTY, &mut best, &mut best_size);
    (best_size, best)
}

/// Exact minimum hitting set by branch-and-bound; the witness is the
/// lexicographically smallest optimum (on sorted vertex lists).
pub fn min_hitting_set(fam: &CopyFamily, n: usize) -> HittingWitness {
    let (size, _) = solve_size(&fam.members, n);
    if size == 0 {
        return HittingWitness { size: 0, witness: VertexSet::EMPTY };
    }
    // Lexicographic refinement: grow the witness smallest-vertex-first,
    // keeping each prefix feasible within the optimal budget.
    let mut witness = VertexSet::EMPTY;
    let mut uncovered: Vec<VertexSet> = fam.members.clone();
    let mut from = 0;
    while !uncovered.is_empty() {
        let budget = size - witness.len();
        for v in from..n {
            let remaining: Vec<VertexSet> = uncovered
                .iter()
                .copied()
                .filter(|f| !f.contains(v))
                .collect();
            let (rest, _) = solve_size(&remaining, n);
            if rest + 1 <= budget {
                witness.insert(v);
                uncovered = remaining;
                from = v + 1;
                break;
            }
        }
    }
    debug_assert_eq!(witness.len(), size);
    HittingWitness { size, witness }
}

/// Exact minimum invariant hitting set: a minimum-weight cover of the family
/// by orbits, each orbit weighing its cardinality. Every invariant vertex set
/// is a union of orbits, so this is the full search space.
pub fn min_invariant_hitting_set(fam: &CopyFamily, orbits: &OrbitPartition) -> InvariantWitness {
    if fam.members.is_empty() {
        return InvariantWitness {
            size: 0,
            witness: VertexSet::EMPTY,
            orbit_indices: Vec::new(),
        };
    }

    fn cover(
        members: &[VertexSet],
        orbits: &[VertexSet],
        covered: &[bool],
        chosen: &mut Vec<usize>,
        weight: usize,
        best: &mut (usize, Vec<usize>),
    ) {
        let first = match covered.iter().position(|&c| !c) {
            None => {
                if weight < best.0 {
                    *best = (weight, chosen.clone());
                }
                return;
            }
            Some(i) => i,
        };
        if weight >= best.0 {
            return;
        }
        for (j, &orbit) in orbits.iter().enumerate() {
            if chosen.contains(&j) || !orbit.intersects(members[first]) {
                continue;
            }
            let new_weight = weight + orbit.len();
            if new_weight >= best.0 {
                continue;
            }
            let mut next_covered = covered.to_vec();
            for (k, f) in members.iter().enumerate() {
                if f.intersects(orbit) {
                    next_covered[k] = true;
                }
            }
            chosen.push(j);
            cover(members, orbits, &next_covered, chosen, new_weight, best);
            chosen.pop();
        }
    }

    // All orbits touching the family always cover it, so start from that.
    let all: Vec<usize> = (0..orbits.orbits.len())
        .filter(|&j| fam.members.iter().any(|f| f.intersects(orbits.orbits[j])))
        .collect();
    let all_weight: usize = all.iter().map(|&j| orbits.orbits[j].len()).sum();
    let mut best = (all_weight, all);
    cover(
        &fam.members,
        &orbits.orbits,
        &vec![false; fam.members.len()],
        &mut Vec::new(),
        0,
        &mut best,
    );
    let (size, mut orbit_indices) = best;
    orbit_indices.sort_unstable();
    let witness = orbit_indices
        .iter()
        .fold(VertexSet::EMPTY, |acc, &j| acc.union(orbits.orbits[j]));
    debug_assert_eq!(witness.len(), size);
    InvariantWitness { size, witness, orbit_indices }
}

/// The invariant hitting set built from a plain one: the union of all orbits
/// O with |O ∩ x| >= |O| / m, where m is the largest member size. The result
/// is invariant, still hitting, and at most m times larger; all three
/// guarantees are re-checked before returning.
pub fn symmetrize(x: VertexSet, orbits: &OrbitPartition, fam: &CopyFamily) -> Result<VertexSet> {
    if fam.members.is_empty() {
        if !x.is_empty() {
            return Err(Error::Precondition(
                "symmetrize expects an empty input set for an empty family".into(),
            ));
        }
        return Ok(VertexSet::EMPTY);
    }
    if !is_hitting(x, fam) {
        return Err(Error::Precondition(
            "symmetrize input must hit every family member".into(),
        ));
    }
    let m = fam.m;
    let y = orbits
        .orbits
        .iter()
        .filter(|&&orbit| m * orbit.intersection(x).len() >= orbit.len())
        .fold(VertexSet::EMPTY, |acc, &orbit| acc.union(orbit));

    let invariant = orbits
        .orbits
        .iter()
        .all(|&orbit| orbit.is_subset_of(y) || !orbit.intersects(y));
    if !invariant {
        return Err(Error::Inconsistency("symmetrized set is not a union of orbits".into()));
    }
    if !is_hitting(y, fam) {
        return Err(Error::Inconsistency("symmetrized set fails to hit the family".into()));
    }
    if y.len() > m * x.len() {
        return Err(Error::Inconsistency(format!(
            "symmetrized set of size {} exceeds the m|X| = {} bound",
            y.len(),
            m * x.len()
        )));
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::pattern::enumerate_copies;
    use crate::symmetry::orbit_partition;

    fn d5_family(host: &Graph) -> CopyFamily {
        enumerate_copies(host, &Graph::chair_d5())
    }

    #[test]
    fn is_hitting_examples() {
        let empty = CopyFamily { members: vec![], pattern_size: 5, m: 0 };
        assert!(is_hitting(VertexSet::EMPTY, &empty));

        let fam = d5_family(&Graph::complete(5));
        assert!(is_hitting(VertexSet::singleton(0), &fam));
        assert!(!is_hitting(VertexSet::EMPTY, &fam));
    }

    #[test]
    fn min_hitting_examples() {
        let k5 = d5_family(&Graph::complete(5));
        assert_eq!(min_hitting_set(&k5, 5).size, 1);
        assert_eq!(min_hitting_set(&k5, 5).witness, VertexSet::singleton(0));

        let k6 = d5_family(&Graph::complete(6));
        let w = min_hitting_set(&k6, 6);
        assert_eq!(w.size, 2);
        assert_eq!(w.witness.to_vec(), vec![0, 1]);

        let c5 = d5_family(&Graph::cycle(5).unwrap());
        assert_eq!(min_hitting_set(&c5, 5), HittingWitness { size: 0, witness: VertexSet::EMPTY });
    }

    #[test]
    fn min_invariant_examples() {
        let k5 = Graph::complete(5);
        let w = min_invariant_hitting_set(&d5_family(&k5), &orbit_partition(&k5));
        assert_eq!(w.size, 5);
        assert_eq!(w.orbit_indices, vec![0]);

        let k6 = Graph::complete(6);
        assert_eq!(min_invariant_hitting_set(&d5_family(&k6), &orbit_partition(&k6)).size, 6);

        let two_k5 = Graph::disjoint_union(&[k5.clone(), k5]).unwrap();
        let w = min_invariant_hitting_set(&d5_family(&two_k5), &orbit_partition(&two_k5));
        assert_eq!(w.size, 10);
        assert_eq!(w.witness, VertexSet::full(10));
    }

    #[test]
    fn symmetrize_examples() {
        let k6 = Graph::complete(6);
        let fam = d5_family(&k6);
        let orbits = orbit_partition(&k6);
        let x: VertexSet = [0, 1].into_iter().collect();
        let y = symmetrize(x, &orbits, &fam).unwrap();
        assert_eq!(y, VertexSet::full(6));
        assert!(y.len() <= fam.m * x.len());

        // Tight family: one chosen vertex per K5 copy blows up to everything.
        let two_k5 = Graph::disjoint_union(&[Graph::complete(5), Graph::complete(5)]).unwrap();
        let fam2 = d5_family(&two_k5);
        let x2: VertexSet = [0, 5].into_iter().collect();
        let y2 = symmetrize(x2, &orbit_partition(&two_k5), &fam2).unwrap();
        assert_eq!(y2, VertexSet::full(10));
        assert_eq!(y2.len(), fam2.m * x2.len());

        // Invariant hitting inputs are fixed points.
        let y3 = symmetrize(y2, &orbit_partition(&two_k5), &fam2).unwrap();
        assert_eq!(y3, y2);
    }

    #[test]
    fn symmetrize_preconditions() {
        let k6 = Graph::complete(6);
        let fam = d5_family(&k6);
        let orbits = orbit_partition(&k6);
        assert!(matches!(
            symmetrize(VertexSet::singleton(0), &orbits, &fam),
            Err(Error::Precondition(_))
        ));

        let empty = CopyFamily { members: vec![], pattern_size: 5, m: 0 };
        assert_eq!(symmetrize(VertexSet::EMPTY, &orbits, &empty).unwrap(), VertexSet::EMPTY);
        assert!(symmetrize(VertexSet::singleton(1), &orbits, &empty).is_err());
    }
}
