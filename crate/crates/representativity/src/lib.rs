//! Exact computation of vertex representativity, its automorphism-invariant
//! counterpart, and the hitting-set symmetrization, together with executable
//! verification of the strict symmetry-price inequality on exhaustive
//! small-graph corpora.
//!
//! The narrative guide lives in `book/`; its code snippets compile as
//! doc-tests of this crate.

pub mod canon;
pub mod covers;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
mod iso;
pub mod lab;
pub mod pattern;
pub mod symmetry;

pub use covers::{
    is_hitting, min_hitting_set, min_invariant_hitting_set, symmetrize, HittingWitness,
    InvariantWitness,
};
pub use error::{Error, Result};
pub use graph::{Graph, NamedKind, NormalizationFlags, VertexSet, MAX_VERTICES};
pub use graph6::{parse_corpus, parse_graph6, to_graph6, CorpusLoad, GRAPH6_MAX_N};
pub use lab::{
    analyze, analyze_full, analyze_with, chess_demo, check_lemma_2_2, check_lemma_2_5, check_theorem_1_2,
    equality_family, revalidate, sweep_theorem_2_2, Certificate, Lemma22Report, SweepReport,
    Theorem12Report,
};
pub use pattern::{
    contains_copy, enumerate_copies, enumerate_copies_with, family_after_deletion,
    parse_graph_spec, CopyFamily, CopySemantics,
};
pub use symmetry::{
    automorphism_generators, is_vertex_transitive, orbit_partition, GeneratorSet, OrbitPartition,
    Permutation,
};

pub use enumerate::{enumerate_connected, ENUMERATION_MAX_N};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/symmetry.md")]
    mod symmetry {}
    #[doc = include_str!("../../../book/src/hitting.md")]
    mod hitting {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
