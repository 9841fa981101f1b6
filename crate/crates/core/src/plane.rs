//! Rotation-system representation of sphere-embedded graphs.
//!
//! Every vertex stores its neighbors in counterclockwise order. A dart is a
//! directed edge; the face of a dart is the face on its left, and the facial
//! walk continues from `u -> w` to `w -> x` where `x` precedes `u` in the
//! counterclockwise rotation at `w`.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod canon;

pub(crate) use canon::{
    best_roots, dart_ranks, patch_roots, relabel_by_root, sphere_roots, CanonRoot,
};
pub use canon::{canonical_code, CanonicalCode};

/// Index into [`Faces::walks`].
pub type FaceId = usize;

/// A directed edge `tail -> head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub tail: usize,
    pub head: usize,
}

impl Dart {
    pub fn new(tail: usize, head: usize) -> Self {
        Self { tail, head }
    }

    pub fn reversed(self) -> Self {
        Self {
            tail: self.head,
            head: self.tail,
        }
    }
}

/// One facial walk, listed so that the face lies on the left of every dart.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FaceWalk {
    pub darts: Vec<Dart>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Tails of the darts in walk order.
    pub fn vertices(&self) -> Vec<usize> {
        self.darts.iter().map(|d| d.tail).collect()
    }

    /// A walk is a simple cycle when it has at least three darts and never
    /// revisits a vertex.
    pub fn is_simple_cycle(&self) -> bool {
        if self.darts.len() < 3 {
            return false;
        }
        let mut seen: Vec<usize> = self.vertices();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.darts.iter().any(|d| d.tail == v)
    }
}

/// The full face set of an embedding together with the dart-to-face map.
#[derive(Debug, Clone)]
pub struct Faces {
    pub walks: Vec<FaceWalk>,
    /// Face id of every dart, indexed by dart id.
    pub face_of_dart: Vec<FaceId>,
}

impl Faces {
    pub fn len(&self) -> usize {
        self.walks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }
}

/// A simple connected graph with a rotation system describing an embedding
/// in the sphere.
///
/// Values are immutable once built. Faces are traced lazily on first use and
/// cached, so a graph can be shared freely between threads.
#[derive(Clone)]
pub struct PlaneGraph {
    rotations: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    tails: Vec<usize>,
    twin: Vec<usize>,
    faces: OnceLock<Faces>,
}

impl PartialEq for PlaneGraph {
    fn eq(&self, other: &Self) -> bool {
        self.rotations == other.rotations
    }
}

impl Eq for PlaneGraph {}

impl std::hash::Hash for PlaneGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rotations.hash(state);
    }
}

impl fmt::Debug for PlaneGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PlaneGraph")
            .field("n", &self.vertex_count())
            .field("rotations", &self.rotations)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    rotations: Vec<Vec<usize>>,
}

impl Serialize for PlaneGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawGraph {
            n: self.vertex_count(),
            rotations: self.rotations.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlaneGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawGraph::deserialize(d)?;
        build_graph(raw.n, raw.rotations).map_err(serde::de::Error::custom)
    }
}

/// Validates a rotation system and builds the graph.
///
/// Rejects out-of-range neighbors, loops, repeated neighbors, asymmetric
/// adjacency, disconnected graphs and rotation systems whose face count does
/// not satisfy Euler's formula for the sphere.
pub fn build_graph(vertex_count: usize, rotations: Vec<Vec<usize>>) -> Result<PlaneGraph> {
    if vertex_count == 0 {
        return Err(Error::EmptyGraph);
    }
    if rotations.len() != vertex_count {
        return Err(Error::RotationCountMismatch {
            expected: vertex_count,
            found: rotations.len(),
        });
    }
    for (v, rot) in rotations.iter().enumerate() {
        let mut sorted = rot.clone();
        sorted.sort_unstable();
        for &u in &sorted {
            if u >= vertex_count {
                return Err(Error::NeighborOutOfRange {
                    vertex: v,
                    neighbor: u,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(v));
            }
        }
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateNeighbor {
                vertex: v,
                neighbor: w[0],
            });
        }
    }
    for (v, rot) in rotations.iter().enumerate() {
        for &u in rot {
            if !rotations[u].contains(&v) {
                return Err(Error::AsymmetricRotation { from: v, to: u });
            }
        }
    }
    if !is_connected(&rotations) {
        return Err(Error::Disconnected);
    }
    let g = PlaneGraph::from_rotations_unchecked(rotations);
    let euler = g.euler_characteristic();
    if euler != 2 {
        return Err(Error::NotSpherical { euler });
    }
    Ok(g)
}

fn is_connected(rotations: &[Vec<usize>]) -> bool {
    let n = rotations.len();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &u in &rotations[v] {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                queue.push_back(u);
            }
        }
    }
    count == n
}

impl PlaneGraph {
    /// Builds the dart tables without validation. Callers guarantee a
    /// symmetric, loop-free rotation system.
    pub(crate) fn from_rotations_unchecked(rotations: Vec<Vec<usize>>) -> Self {
        let n = rotations.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut total = 0;
        for rot in &rotations {
            offsets.push(total);
            total += rot.len();
        }
        offsets.push(total);
        let mut twin = vec![usize::MAX; total];
        let mut tails = Vec::with_capacity(total);
        for v in 0..n {
            tails.extend(std::iter::repeat(v).take(rotations[v].len()));
            for (i, &u) in rotations[v].iter().enumerate() {
                let j = rotations[u]
                    .iter()
                    .position(|&x| x == v)
                    .expect("symmetric rotation");
                twin[offsets[v] + i] = offsets[u] + j;
            }
        }
        Self {
            rotations,
            offsets,
            tails,
            twin,
            faces: OnceLock::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.twin.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    /// Counterclockwise neighbor order of `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotations[v].iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rotations[u].contains(&v)
    }

    /// Every undirected edge once, as `(min, max)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (v, rot) in self.rotations.iter().enumerate() {
            for &u in rot {
                if v < u {
                    out.push((v, u));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    pub fn check_face(&self, f: FaceId) -> Result<()> {
        if f < self.face_count() {
            Ok(())
        } else {
            Err(Error::FaceOutOfRange(f))
        }
    }

    pub(crate) fn dart_id(&self, v: usize, i: usize) -> usize {
        self.offsets[v] + i
    }

    /// Dart id of `tail -> head`, if that edge exists.
    pub fn find_dart(&self, tail: usize, head: usize) -> Option<usize> {
        self.rotations[tail]
            .iter()
            .position(|&x| x == head)
            .map(|i| self.offsets[tail] + i)
    }

    pub(crate) fn dart_tail(&self, d: usize) -> usize {
        self.tails[d]
    }

    pub(crate) fn dart_index(&self, d: usize) -> usize {
        d - self.offsets[self.dart_tail(d)]
    }

    pub fn dart(&self, d: usize) -> Dart {
        let t = self.dart_tail(d);
        Dart::new(t, self.rotations[t][d - self.offsets[t]])
    }

    pub(crate) fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    /// The dart following `d` along the face on its left.
    pub(crate) fn next_in_face(&self, d: usize) -> usize {
        let t = self.twin[d];
        let w = self.dart_tail(t);
        let deg = self.rotations[w].len();
        let j = t - self.offsets[w];
        self.offsets[w] + (j + deg - 1) % deg
    }

    /// All faces, traced on first access.
    pub fn faces(&self) -> &Faces {
        self.faces.get_or_init(|| trace_darts(self))
    }

    /// Face on the left of `tail -> head`.
    pub fn face_left_of(&self, tail: usize, head: usize) -> Option<FaceId> {
        self.find_dart(tail, head)
            .map(|d| self.faces().face_of_dart[d])
    }

    /// Faces incident with `v`, without repetition, in rotation order.
    pub fn faces_at(&self, v: usize) -> Vec<FaceId> {
        let faces = self.faces();
        let mut out = Vec::with_capacity(self.degree(v));
        for i in 0..self.degree(v) {
            let f = faces.face_of_dart[self.offsets[v] + i];
            if !out.contains(&f) {
                out.push(f);
            }
        }
        out
    }

    pub(crate) fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// The same graph with every rotation reversed.
    pub fn mirrored(&self) -> PlaneGraph {
        let rotations = self
            .rotations
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        PlaneGraph::from_rotations_unchecked(rotations)
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> PlaneGraph {
        let n = self.vertex_count();
        let mut rotations = vec![Vec::new(); n];
        for v in 0..n {
            rotations[perm[v]] = self.rotations[v].iter().map(|&u| perm[u]).collect();
        }
        PlaneGraph::from_rotations_unchecked(rotations)
    }
}

fn trace_darts(g: &PlaneGraph) -> Faces {
    let total = g.dart_count();
    let mut face_of_dart = vec![usize::MAX; total];
    let mut walks = Vec::new();
    for start in 0..total {
        if face_of_dart[start] != usize::MAX {
            continue;
        }
        let id = walks.len();
        let mut darts = Vec::new();
        let mut d = start;
        loop {
            face_of_dart[d] = id;
            darts.push(g.dart(d));
            d = g.next_in_face(d);
            if d == start {
                break;
            }
        }
        walks.push(FaceWalk { darts });
    }
    if walks.is_empty() {
        // A single vertex still bounds one (empty) face.
        walks.push(FaceWalk { darts: Vec::new() });
    }
    Faces {
        walks,
        face_of_dart,
    }
}

/// All facial walks of `g`.
pub fn trace_faces(g: &PlaneGraph) -> Vec<FaceWalk> {
    g.faces().walks.clone()
}

/// Structural summary of an embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphCheckReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    /// No loops or repeated edges and a symmetric rotation system.
    pub is_simple_embedding: bool,
    /// Every facial walk is a simple cycle.
    pub is_two_connected: bool,
    /// Common length of all faces, when they agree.
    pub uniform_face_length: Option<usize>,
    pub is_pentagulation: bool,
    pub euler_ok: bool,
}

pub fn check_graph(g: &PlaneGraph) -> GraphCheckReport {
    let faces = g.faces();
    let is_simple_embedding = g.rotations.iter().enumerate().all(|(v, rot)| {
        let mut s = rot.clone();
        s.sort_unstable();
        s.windows(2).all(|w| w[0] != w[1])
            && rot.iter().all(|&u| u != v && g.rotations[u].contains(&v))
    });
    let is_two_connected = faces.walks.iter().all(FaceWalk::is_simple_cycle);
    let first = faces.walks[0].len();
    let uniform_face_length = faces
        .walks
        .iter()
        .all(|w| w.len() == first)
        .then_some(first);
    let is_pentagulation = is_two_connected && uniform_face_length == Some(5);
    GraphCheckReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        face_count: faces.len(),
        is_simple_embedding,
        is_two_connected,
        uniform_face_length,
        is_pentagulation,
        euler_ok: g.euler_characteristic() == 2,
    }
}

impl PlaneGraph {
    /// Shorthand for `check_graph(self).is_pentagulation`.
    pub fn is_pentagulation(&self) -> bool {
        let faces = self.faces();
        faces
            .walks
            .iter()
            .all(|w| w.len() == 5 && w.is_simple_cycle())
    }
}
