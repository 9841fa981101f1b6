//! Analysis toolkit for plane graphs whose faces are all bounded by 5-cycles
//! (pentagulations).
//!
//! Graphs are stored as rotation systems: every vertex carries the cyclic,
//! counterclockwise order of its neighbors, which fixes an embedding in the
//! sphere. On top of that the crate provides
//!
//! * face tracing, structural checks and canonical codes ([`plane`]),
//! * distances, diameter and girth ([`metrics`]),
//! * cycle regions, domination, 4-cycle decompositions, dislocated pairs and a
//!   per-graph lemma suite ([`regions`]),
//! * face stars, k-chords and cycles under chords ([`chords`]),
//! * the named fixtures and the extremal family `G(Δ)` ([`constructions`]),
//! * isomorph-free exhaustive generation and a verification sweep
//!   ([`enumerate`]).

pub mod chords;
pub mod constructions;
pub mod enumerate;
mod error;
pub mod io;
pub mod metrics;
pub mod plane;
pub mod regions;

pub use chords::{
    cycle_under, face_star, is_minimal_chord, k_chords, short_chord_census, Chord, ChordCensus,
    CycleUnder, FaceStar,
};
pub use constructions::{
    build_extremal, build_named, named_graph, FamilyParams, NamedGraph, NAMED_GRAPHS,
};
pub use enumerate::{
    enumerate_pentagulations, enumerate_resumable, verify_graphs, verify_theorems,
    EnumerationConfig, Filters, TheoremTally, VerificationReport,
};
pub use error::{Error, Result};
pub use metrics::{bfs, diameter, girth, max_degree, DistanceTable};
pub use plane::{
    build_graph, canonical_code, check_graph, trace_faces, CanonicalCode, Dart, FaceId, FaceWalk,
    Faces, GraphCheckReport, PlaneGraph,
};
pub use regions::{
    dislocated_pairs, dominates, find_cycles, four_cycle_structure, is_jordan_separating,
    lemma_suite, partition_by_cycle, DislocatedPair, FourCycleDecomposition, LemmaCheck,
    LemmaReport, RegionPartition, Side,
};

/// Version tag carried by every JSON report.
pub const SCHEMA_VERSION: u32 = 1;
