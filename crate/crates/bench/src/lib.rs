//! Shared inputs for the benchmarks.

use pentaplane::{
    build_extremal, enumerate_pentagulations, EnumerationConfig, FamilyParams, PlaneGraph,
};

/// Every pentagulation on at most `max_n` vertices.
pub fn pentagulations(max_n: usize) -> Vec<PlaneGraph> {
    enumerate_pentagulations(&EnumerationConfig::new(max_n).with_jobs(1)).expect("within the cap")
}

/// `G(delta)` for an odd `delta >= 3`.
pub fn extremal(delta: usize) -> PlaneGraph {
    build_extremal(FamilyParams::new(delta).expect("odd delta"))
}

/// The largest graphs among the pentagulations on at most `max_n` vertices.
pub fn largest(max_n: usize, count: usize) -> Vec<PlaneGraph> {
    let mut all = pentagulations(max_n);
    all.sort_by_key(|g| std::cmp::Reverse(g.vertex_count()));
    all.truncate(count);
    all
}
