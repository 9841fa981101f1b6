//! Face stars, k-chords and the cycles they close with the center vertex.
//!
//! Fix a center `v`. The face star `F_v` is everything on the boundary of a
//! face incident with `v`. A k-chord is a path of length k between two
//! distinct vertices at distance 2 from `v` whose inner vertices avoid that
//! distance-2 shell and whose edges avoid `F_v`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::bfs_dist;
use crate::plane::{FaceId, PlaneGraph};
use crate::regions::{dominates, partition_by_cycle, RegionPartition};

/// Longest chord [`k_chords`] will search for.
pub const MAX_CHORD_LENGTH: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceStar {
    pub center: usize,
    pub vertices: Vec<usize>,
    /// Sorted `(min, max)` pairs.
    pub edges: Vec<(usize, usize)>,
}

impl FaceStar {
    pub fn contains_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// A chord with respect to `center`, stored with `path[0] < path[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Chord {
    pub center: usize,
    pub path: Vec<usize>,
    pub k: usize,
}

impl Chord {
    /// Builds a chord from a path in either direction.
    pub fn new(center: usize, mut path: Vec<usize>) -> Self {
        if path.first() > path.last() {
            path.reverse();
        }
        let k = path.len().saturating_sub(1);
        Self { center, path, k }
    }

    pub fn x(&self) -> usize {
        self.path[0]
    }

    pub fn y(&self) -> usize {
        *self.path.last().unwrap()
    }
}

/// A 1- or 2-chord closed into a cycle through the center.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleUnder {
    pub chord: Chord,
    pub u_x: usize,
    pub u_y: usize,
    /// The chord from x to y, then `u_y`, the center and `u_x`.
    pub cycle: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordCensus {
    pub center: usize,
    pub count_1chords: usize,
    pub count_2chords: usize,
}

pub fn face_star(g: &PlaneGraph, v: usize) -> Result<FaceStar> {
    g.check_vertex(v)?;
    let faces = g.faces();
    let mut vertices = vec![v];
    let mut edges = Vec::new();
    for f in g.faces_at(v) {
        for d in &faces.walks[f].darts {
            vertices.push(d.tail);
            edges.push((d.tail.min(d.head), d.tail.max(d.head)));
        }
    }
    vertices.sort_unstable();
    vertices.dedup();
    edges.sort_unstable();
    edges.dedup();
    Ok(FaceStar {
        center: v,
        vertices,
        edges,
    })
}

/// All k-chords with respect to `v`, each once up to reversal, sorted.
pub fn k_chords(g: &PlaneGraph, v: usize, k: usize) -> Result<Vec<Chord>> {
    if !(1..=MAX_CHORD_LENGTH).contains(&k) {
        return Err(Error::ChordLengthOutOfRange(k));
    }
    let star = face_star(g, v)?;
    let dist = bfs_dist(g, v);
    let in_shell = |w: usize| dist[w] == 2;
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    let mut path = Vec::with_capacity(k + 1);
    for x in (0..g.vertex_count()).filter(|&x| in_shell(x)) {
        path.push(x);
        on_path[x] = true;
        search(
            g,
            &star,
            &in_shell,
            k,
            &mut path,
            &mut on_path,
            &mut |p: &[usize]| {
                out.push(Chord::new(v, p.to_vec()));
            },
        );
        on_path[x] = false;
        path.pop();
    }
    out.sort();
    Ok(out)
}

fn search(
    g: &PlaneGraph,
    star: &FaceStar,
    in_shell: &dyn Fn(usize) -> bool,
    k: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    emit: &mut dyn FnMut(&[usize]),
) {
    let last = *path.last().unwrap();
    let final_step = path.len() == k;
    for w in g.neighbors(last) {
        if on_path[w] || star.contains_edge(last, w) {
            continue;
        }
        if final_step {
            if in_shell(w) && w > path[0] {
                path.push(w);
                emit(path);
                path.pop();
            }
        } else if !in_shell(w) {
            on_path[w] = true;
            path.push(w);
            search(g, star, in_shell, k, path, on_path, emit);
            path.pop();
            on_path[w] = false;
        }
    }
}

fn shell_neighbor(g: &PlaneGraph, v: usize, x: usize) -> Result<usize> {
    let mut common = g.neighbors(x).filter(|&u| g.has_edge(u, v));
    match (common.next(), common.next()) {
        (Some(u), None) => Ok(u),
        _ => Err(Error::NonUniqueShellNeighbor { vertex: x }),
    }
}

/// Closes a 1- or 2-chord into the cycle `x, ..., y, u_y, v, u_x`.
pub fn cycle_under(g: &PlaneGraph, chord: &Chord) -> Result<CycleUnder> {
    if chord.k != 1 && chord.k != 2 {
        return Err(Error::UnsupportedChordLength(chord.k));
    }
    g.check_vertex(chord.center)?;
    for &w in &chord.path {
        g.check_vertex(w)?;
    }
    if chord.path.len() != chord.k + 1 || chord.path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::InvalidChord(format!(
            "{:?} is not a path of the graph",
            chord.path
        )));
    }
    let v = chord.center;
    let u_x = shell_neighbor(g, v, chord.x())?;
    let u_y = shell_neighbor(g, v, chord.y())?;
    let mut cycle = chord.path.clone();
    cycle.extend([u_y, v, u_x]);
    let mut sorted = cycle.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidChord(format!(
            "{cycle:?} is not a simple cycle"
        )));
    }
    Ok(CycleUnder {
        chord: chord.clone(),
        u_x,
        u_y,
        cycle,
    })
}

/// A chord is minimal when its cycle dominates its interior and no chord of
/// the same length has a cycle whose interior faces form a proper subset.
pub fn is_minimal_chord(g: &PlaneGraph, c: &CycleUnder, outer_face: FaceId) -> Result<bool> {
    let p = partition_by_cycle(g, &c.cycle, outer_face)?;
    if !dominates(g, &c.cycle, &p.interior_vertices) {
        return Ok(false);
    }
    for other in k_chords(g, c.chord.center, c.chord.k)? {
        if other == c.chord {
            continue;
        }
        let Ok(under) = cycle_under(g, &other) else {
            continue;
        };
        let q = partition_by_cycle(g, &under.cycle, outer_face)?;
        if is_proper_subset(&q.interior_faces, &p.interior_faces) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_proper_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

/// The region bounded by a cycle under a chord.
pub fn chord_region(g: &PlaneGraph, c: &CycleUnder, outer_face: FaceId) -> Result<RegionPartition> {
    partition_by_cycle(g, &c.cycle, outer_face)
}

pub fn short_chord_census(g: &PlaneGraph, v: usize) -> Result<ChordCensus> {
    Ok(ChordCensus {
        center: v,
        count_1chords: k_chords(g, v, 1)?.len(),
        count_2chords: k_chords(g, v, 2)?.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::build_graph;

    fn c5() -> PlaneGraph {
        build_graph(5, (0..5).map(|i| vec![(i + 4) % 5, (i + 1) % 5]).collect()).unwrap()
    }

    #[test]
    fn c5_star_is_everything() {
        let g = c5();
        let s = face_star(&g, 0).unwrap();
        assert_eq!(s.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(s.edges, g.edges());
        assert_eq!(k_chords(&g, 0, 1).unwrap(), vec![]);
        let census = short_chord_census(&g, 3).unwrap();
        assert_eq!((census.count_1chords, census.count_2chords), (0, 0));
    }

    #[test]
    fn chord_length_limits() {
        let g = c5();
        assert_eq!(k_chords(&g, 0, 0), Err(Error::ChordLengthOutOfRange(0)));
        assert_eq!(k_chords(&g, 0, 5), Err(Error::ChordLengthOutOfRange(5)));
        let long = Chord::new(0, vec![1, 2, 3, 4]);
        assert_eq!(
            cycle_under(&g, &long),
            Err(Error::UnsupportedChordLength(3))
        );
    }

    #[test]
    fn chord_is_normalized() {
        let c = Chord::new(0, vec![7, 3, 2]);
        assert_eq!(c.path, vec![2, 3, 7]);
        assert_eq!((c.x(), c.y(), c.k), (2, 7, 2));
    }
}
