//! Cycles, the two sides of a cycle, and domination.
//!
//! The graph lives on the sphere, so "interior" only makes sense once a face
//! is designated as outer: the exterior of a cycle is the side containing
//! that face.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane::{FaceId, PlaneGraph};

mod dislocated;
mod four_cycle;
mod lemmas;

pub use dislocated::{dislocated_pairs, DislocatedPair};
pub use four_cycle::{four_cycle_structure, FourCycleDecomposition};
pub use lemmas::{lemma_suite, LemmaCheck, LemmaReport, Witness};

/// Longest cycle length supported by [`find_cycles`].
pub const MAX_CYCLE_LENGTH: usize = 8;

/// One side of a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Interior,
    Exterior,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Interior, Side::Exterior];

    pub fn opposite(self) -> Side {
        match self {
            Side::Interior => Side::Exterior,
            Side::Exterior => Side::Interior,
        }
    }
}

/// All simple cycles of exactly `length` vertices.
///
/// Each cycle is reported once, starting at its smallest vertex and oriented
/// so that the second vertex is smaller than the last. The list is sorted.
pub fn find_cycles(g: &PlaneGraph, length: usize) -> Result<Vec<Vec<usize>>> {
    if !(3..=MAX_CYCLE_LENGTH).contains(&length) {
        return Err(Error::LengthOutOfRange(length));
    }
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(length);
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        extend_cycles(g, length, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
        path.pop();
    }
    out.sort();
    Ok(out)
}

fn extend_cycles(
    g: &PlaneGraph,
    length: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let s = path[0];
    let last = *path.last().unwrap();
    if path.len() == length {
        if g.has_edge(last, s) && path[1] < last {
            out.push(path.clone());
        }
        return;
    }
    for w in g.neighbors(last) {
        if w > s && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend_cycles(g, length, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Split of the vertices and faces of a graph by a cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionPartition {
    pub cycle: Vec<usize>,
    pub interior_vertices: Vec<usize>,
    pub exterior_vertices: Vec<usize>,
    pub interior_faces: Vec<FaceId>,
    pub exterior_faces: Vec<FaceId>,
    pub outer_face: FaceId,
}

impl RegionPartition {
    pub fn vertices(&self, side: Side) -> &[usize] {
        match side {
            Side::Interior => &self.interior_vertices,
            Side::Exterior => &self.exterior_vertices,
        }
    }

    pub fn faces(&self, side: Side) -> &[FaceId] {
        match side {
            Side::Interior => &self.interior_faces,
            Side::Exterior => &self.exterior_faces,
        }
    }

    /// Vertices of the closed region: the cycle plus the open side.
    pub fn closed_vertices(&self, side: Side) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .cycle
            .iter()
            .chain(self.vertices(side))
            .copied()
            .collect();
        out.sort_unstable();
        out
    }

    pub fn side_of_face(&self, f: FaceId) -> Side {
        if self.interior_faces.binary_search(&f).is_ok() {
            Side::Interior
        } else {
            Side::Exterior
        }
    }

    /// The same split seen from the other side. `outer_face` must be an
    /// interior face of `self`.
    pub fn swapped(&self, outer_face: FaceId) -> RegionPartition {
        RegionPartition {
            cycle: self.cycle.clone(),
            interior_vertices: self.exterior_vertices.clone(),
            exterior_vertices: self.interior_vertices.clone(),
            interior_faces: self.exterior_faces.clone(),
            exterior_faces: self.interior_faces.clone(),
            outer_face,
        }
    }
}

/// Checks that `cycle` lists the vertices of a simple cycle of `g` in order.
pub(crate) fn validate_cycle(g: &PlaneGraph, cycle: &[usize]) -> Result<()> {
    if cycle.len() < 3 {
        return Err(Error::NotACycle(format!(
            "{cycle:?} has fewer than 3 vertices"
        )));
    }
    for &v in cycle {
        g.check_vertex(v)?;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NotACycle(format!("{cycle:?} repeats a vertex")));
    }
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        if !g.has_edge(a, b) {
            return Err(Error::NotACycle(format!("{a} and {b} are not adjacent")));
        }
    }
    Ok(())
}

/// Splits the faces of `g` into the side of `cycle` containing `outer_face`
/// (exterior) and the rest (interior).
///
/// Faces are flood-filled across every edge that is not a cycle edge, so
/// chords of the cycle simply land inside one side. A vertex off the cycle
/// belongs to the side of its incident faces.
pub fn partition_by_cycle(
    g: &PlaneGraph,
    cycle: &[usize],
    outer_face: FaceId,
) -> Result<RegionPartition> {
    validate_cycle(g, cycle)?;
    g.check_face(outer_face)?;
    Ok(partition_unchecked(g, cycle, outer_face))
}

pub(crate) fn partition_unchecked(
    g: &PlaneGraph,
    cycle: &[usize],
    outer_face: FaceId,
) -> RegionPartition {
    let faces = g.faces();
    let fod = &faces.face_of_dart;
    let mut blocked = vec![false; g.dart_count()];
    for i in 0..cycle.len() {
        let d = g
            .find_dart(cycle[i], cycle[(i + 1) % cycle.len()])
            .expect("cycle edge");
        blocked[d] = true;
        blocked[g.twin(d)] = true;
    }
    let f = faces.len();
    let mut adj = vec![Vec::new(); f];
    for d in 0..g.dart_count() {
        if !blocked[d] {
            adj[fod[d]].push(fod[g.twin(d)]);
        }
    }
    let mut outside = vec![false; f];
    outside[outer_face] = true;
    let mut queue = VecDeque::from([outer_face]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !outside[y] {
                outside[y] = true;
                queue.push_back(y);
            }
        }
    }
    let mut on_cycle = vec![false; g.vertex_count()];
    for &v in cycle {
        on_cycle[v] = true;
    }
    let mut p = RegionPartition {
        cycle: cycle.to_vec(),
        interior_vertices: Vec::new(),
        exterior_vertices: Vec::new(),
        interior_faces: Vec::new(),
        exterior_faces: Vec::new(),
        outer_face,
    };
    for (face, &out) in outside.iter().enumerate() {
        if out {
            p.exterior_faces.push(face);
        } else {
            p.interior_faces.push(face);
        }
    }
    for v in 0..g.vertex_count() {
        if on_cycle[v] || g.degree(v) == 0 {
            continue;
        }
        if outside[fod[g.dart_id(v, 0)]] {
            p.exterior_vertices.push(v);
        } else {
            p.interior_vertices.push(v);
        }
    }
    p
}

/// A cycle separates in the Jordan sense when both open sides contain a
/// vertex.
pub fn is_jordan_separating(p: &RegionPartition) -> bool {
    !p.interior_vertices.is_empty() && !p.exterior_vertices.is_empty()
}

/// True when every vertex of `region` has a neighbor in `dominators`.
pub fn dominates(g: &PlaneGraph, dominators: &[usize], region: &[usize]) -> bool {
    region
        .iter()
        .all(|&w| g.neighbors(w).any(|s| dominators.contains(&s)))
}

/// True when removing the vertices of `cycle` leaves a disconnected graph.
pub(crate) fn is_vertex_cut(g: &PlaneGraph, cycle: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut removed = vec![false; n];
    for &v in cycle {
        removed[v] = true;
    }
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return false;
    };
    let mut seen = removed.clone();
    seen[start] = true;
    let mut count = 1;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count < n - cycle.len()
}
