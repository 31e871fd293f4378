//! Verification and search toolkit for Ramsey and Turan problems on
//! 3-uniform Berge hypergraphs.
//!
//! The crate detects Berge cycles and cliques through matching certificates,
//! generates the classical extremal lower-bound colorings, and recomputes
//! small-case Ramsey and Turan numbers by exhaustive search with symmetry
//! pruning. Everything here is pure computation over `alloc`; the companion
//! `berge-cli` crate adds file IO, wall-clock timing, and worker threads.
//!
//! Vertices are dense integers `0..n` with `n <= 64`, so edges live in `u64`
//! bitmasks. The core types are r-generic, but every module past
//! [`hypergraph`] requires 3-uniform input and rejects anything else.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod berge;
pub mod constructions;
pub mod hypergraph;
pub mod matching;
pub mod search;
pub mod shadow;

pub use berge::{
    check_certificate, find_berge_clique, find_berge_copy, find_berge_cycle,
    find_berge_cycle_on_core, find_member, lift_shadow_clique, lift_shadow_cycle,
    BergeCertificate, CertificateDocument, CertificateViolation, FamilySpec, PatternGraph,
};
pub use constructions::{
    lower_bound_ccc, lower_bound_ck_general, lower_bound_ck_small, t3_count, turan_partite,
    ConstructionLayout,
};
pub use hypergraph::{Hypergraph, VertexSet};
pub use matching::{max_matching, sdr, BipartiteGraph, Matching, SdrOutcome, SetFamily};
pub use search::{
    decide_arrowing, ramsey_number, turan_max, ArrowingProblem, SearchOutcome, SearchStats,
    Strategy, Verdict,
};
pub use shadow::{shadow, shadow_with_threshold, ColoredHypergraph, ShadowGraph};
