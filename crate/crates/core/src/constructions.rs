//! Named fixture graphs and the extremal family `G(Δ)`.
//!
//! Fixtures are described by vertex coordinates and edge lists, and their
//! rotation systems are read off the drawing: neighbors are sorted by the
//! angle at which their edge leaves the vertex. A curved edge carries
//! waypoints; its direction at either end is taken toward the nearest
//! waypoint.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane::{build_graph, FaceId, PlaneGraph};

/// Names accepted by [`build_named`].
pub const NAMED_GRAPHS: &[&str] = &[
    "c5",
    "k4",
    "script_h",
    "script_i",
    "girth5_counterexample",
    "dodecahedron",
    "theorem4_example",
    "disloc_g",
    "disloc_h",
    "chord_fixture",
];

/// A fixture with vertex labels and the face that is unbounded in its
/// drawing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedGraph {
    pub name: String,
    pub graph: PlaneGraph,
    pub labels: Vec<String>,
    pub outer_face: FaceId,
}

impl NamedGraph {
    /// Vertex id carrying `label`.
    ///
    /// # Panics
    /// If no vertex has that label.
    pub fn vertex(&self, label: &str) -> usize {
        self.labels
            .iter()
            .position(|l| l == label)
            .unwrap_or_else(|| panic!("{} has no vertex {label:?}", self.name))
    }

    pub fn vertices(&self, labels: &[&str]) -> Vec<usize> {
        labels.iter().map(|l| self.vertex(l)).collect()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }
}

type Point = (f64, f64);

fn polar(deg: f64, r: f64) -> Point {
    let t = deg * PI / 180.0;
    (r * t.cos(), r * t.sin())
}

#[derive(Default)]
struct Drawing {
    labels: Vec<String>,
    pos: Vec<Point>,
    edges: Vec<(usize, usize, Vec<Point>)>,
}

impl Drawing {
    fn vertex(&mut self, label: &str, p: Point) -> usize {
        self.labels.push(label.to_string());
        self.pos.push(p);
        self.pos.len() - 1
    }

    fn id(&self, label: &str) -> usize {
        self.labels
            .iter()
            .position(|l| l == label)
            .expect("label defined")
    }

    fn edge(&mut self, a: &str, b: &str) {
        self.curve(a, b, &[]);
    }

    fn path(&mut self, labels: &[&str]) {
        for w in labels.windows(2) {
            self.edge(w[0], w[1]);
        }
    }

    fn curve(&mut self, a: &str, b: &str, waypoints: &[Point]) {
        let (a, b) = (self.id(a), self.id(b));
        self.edges.push((a, b, waypoints.to_vec()));
    }

    fn angle(&self, from: usize, toward: Point) -> f64 {
        let (x, y) = self.pos[from];
        (toward.1 - y).atan2(toward.0 - x).rem_euclid(2.0 * PI)
    }

    fn finish(self, name: &str) -> NamedGraph {
        let n = self.pos.len();
        let mut incident: Vec<Vec<(f64, usize)>> = vec![Vec::new(); n];
        for (a, b, way) in &self.edges {
            let toward_b = way.first().copied().unwrap_or(self.pos[*b]);
            let toward_a = way.last().copied().unwrap_or(self.pos[*a]);
            incident[*a].push((self.angle(*a, toward_b), *b));
            incident[*b].push((self.angle(*b, toward_a), *a));
        }
        let rotations: Vec<Vec<usize>> = incident
            .iter_mut()
            .map(|inc| {
                inc.sort_by(|x, y| x.0.total_cmp(&y.0));
                inc.iter().map(|&(_, u)| u).collect()
            })
            .collect();
        let graph = build_graph(n, rotations).expect("fixture drawing is a plane graph");

        // The lowest vertex (leftmost among ties) sees the unbounded face
        // between its last and first neighbor in counterclockwise order.
        let low = (0..n)
            .min_by(|&i, &j| {
                let (pi, pj) = (self.pos[i], self.pos[j]);
                pi.1.total_cmp(&pj.1).then(pi.0.total_cmp(&pj.0))
            })
            .unwrap();
        let outer_face = match graph.rotation(low).last() {
            Some(&last) => graph.face_left_of(low, last).unwrap(),
            None => 0,
        };
        NamedGraph {
            name: name.to_string(),
            graph,
            labels: self.labels,
            outer_face,
        }
    }
}

fn c5() -> Drawing {
    let mut d = Drawing::default();
    for i in 0..5 {
        d.vertex(&format!("v{}", i + 1), polar(90.0 + 72.0 * i as f64, 2.0));
    }
    d.path(&["v1", "v2", "v3", "v4", "v5", "v1"]);
    d
}

fn k4() -> Drawing {
    let mut d = Drawing::default();
    d.vertex("a", (0.0, 0.0));
    d.vertex("b", (2.0, 0.0));
    d.vertex("c", (1.0, 2.0));
    d.vertex("d", (1.0, 0.7));
    d.path(&["a", "b", "c", "a", "d", "b"]);
    d.edge("c", "d");
    d
}

fn script_h() -> Drawing {
    let mut d = Drawing::default();
    for (i, l) in ["v1", "v2", "z1", "z2", "v4"].iter().enumerate() {
        d.vertex(l, polar(90.0 + 72.0 * i as f64, 2.0));
    }
    d.vertex("v3", (0.0, 0.0));
    d.vertex("w1", (0.0, 1.3));
    d.vertex("w2", (0.0, 0.66));
    d.path(&["v1", "w1", "w2", "v3"]);
    d.path(&["v2", "z1", "z2", "v4"]);
    d.path(&["v4", "v1", "v2"]);
    d.path(&["v4", "v3", "v2"]);
    d
}

fn script_i() -> Drawing {
    let mut d = Drawing::default();
    d.vertex("v1", (0.0, 2.0));
    d.vertex("v2", (1.0, 1.0));
    d.vertex("v3", (0.0, 0.0));
    d.vertex("v7", (-1.0, 1.0));
    d.vertex("v4", (1.0, -1.0));
    d.vertex("v5", (0.0, -2.0));
    d.vertex("v6", (-1.0, -1.0));
    d.vertex("w1", (0.0, 1.33));
    d.vertex("w2", (0.0, 0.66));
    d.vertex("z1", (0.0, -0.66));
    d.vertex("z2", (0.0, -1.33));
    d.path(&["v1", "v2", "v3", "v7", "v1"]);
    d.path(&["v3", "v4", "v5", "v6", "v3"]);
    d.path(&["v1", "w1", "w2", "v3", "z1", "z2", "v5"]);
    // Arc of radius 2 around v3, through the right half-plane.
    let arc: Vec<Point> = (1..6).map(|i| polar(90.0 - 30.0 * i as f64, 2.0)).collect();
    d.curve("v1", "v5", &arc);
    d
}

fn girth5_counterexample() -> Drawing {
    let mut d = Drawing::default();
    let coords = [
        (0.0, 0.0),
        (2.0, 0.0),
        (4.0, 0.0),
        (6.0, 0.0),
        (1.0, 1.0),
        (2.0, 2.0),
        (3.0, 3.0),
        (4.0, 2.0),
        (5.0, 1.0),
        (3.0, 1.5),
        (3.0, 4.5),
    ];
    for (i, &p) in coords.iter().enumerate() {
        d.vertex(&(i + 1).to_string(), p);
    }
    d.path(&["1", "5", "6", "7", "8", "9", "4", "3", "2", "1"]);
    for (a, b) in [
        ("10", "5"),
        ("10", "3"),
        ("10", "8"),
        ("11", "1"),
        ("11", "7"),
        ("11", "4"),
    ] {
        d.edge(a, b);
    }
    d
}

fn dodecahedron() -> Drawing {
    let mut d = Drawing::default();
    for i in 0..5 {
        d.vertex(&format!("a{i}"), polar(90.0 + 72.0 * i as f64, 3.0));
    }
    for j in 0..10 {
        d.vertex(&format!("b{j}"), polar(90.0 + 36.0 * j as f64, 2.0));
    }
    for i in 0..5 {
        d.vertex(&format!("c{i}"), polar(126.0 + 72.0 * i as f64, 1.0));
    }
    for i in 0..5 {
        d.edge(&format!("a{i}"), &format!("a{}", (i + 1) % 5));
        d.edge(&format!("c{i}"), &format!("c{}", (i + 1) % 5));
        d.edge(&format!("a{i}"), &format!("b{}", 2 * i));
        d.edge(&format!("b{}", 2 * i + 1), &format!("c{i}"));
    }
    for j in 0..10 {
        d.edge(&format!("b{j}"), &format!("b{}", (j + 1) % 10));
    }
    d
}

/// The square with poles v1, v3 carrying two length-3 paths and one
/// length-2 path, closed outside by a path v2, z1, z2, v4.
fn theorem4_example() -> Drawing {
    let mut d = Drawing::default();
    d.vertex("v1", (0.0, 4.0));
    d.vertex("v2", (2.0, 2.0));
    d.vertex("v3", (0.0, 0.0));
    d.vertex("v4", (-2.0, 2.0));
    d.vertex("a", (-0.8, 2.6));
    d.vertex("b", (-0.8, 1.4));
    d.vertex("w", (0.0, 2.0));
    d.vertex("d", (0.8, 2.6));
    d.vertex("e", (0.8, 1.4));
    d.vertex("z1", (1.5, -1.5));
    d.vertex("z2", (-1.5, -1.5));
    d.path(&["v1", "v2", "v3", "v4", "v1"]);
    d.path(&["v1", "a", "b", "v3", "w", "v1", "d", "e", "v3"]);
    d.path(&["v2", "z1", "z2", "v4"]);
    d
}

fn disloc_g() -> Drawing {
    let mut d = Drawing::default();
    d.vertex("u1", (0.0, 4.0));
    d.vertex("u2", (2.0, 2.0));
    d.vertex("u3", (0.0, 0.0));
    d.vertex("u4", (-2.0, 2.0));
    d.vertex("a", (-0.8, 2.6));
    d.vertex("b", (-0.8, 1.4));
    d.vertex("u5", (0.0, 2.0));
    d.vertex("d", (0.8, 2.6));
    d.vertex("e", (0.8, 1.4));
    d.vertex("s", (-2.0, 4.7));
    d.vertex("t", (2.0, 4.7));
    d.vertex("u", (-3.0, 2.0));
    d.vertex("v", (3.0, 2.0));
    d.vertex("w", (0.0, -1.0));
    d.path(&["u1", "u2", "u3", "u4", "u1"]);
    d.path(&["u1", "a", "b", "u3", "u5", "u1", "d", "e", "u3"]);
    d.path(&["u4", "s", "t", "u2"]);
    d.path(&["s", "u", "w"]);
    d.path(&["t", "v", "w"]);
    d.edge("u3", "w");
    d
}

fn disloc_h() -> Drawing {
    let mut d = Drawing::default();
    d.vertex("v2", (0.0, 2.0));
    d.vertex("v4", (0.0, -2.0));
    d.vertex("v3", (-0.8, 0.0));
    d.vertex("v1", (-2.5, 0.0));
    d.vertex("v6", (2.5, 0.0));
    d.vertex("v5", (0.8, 0.0));
    d.vertex("w1", (-1.8, 0.0));
    d.vertex("w2", (-1.3, 0.0));
    d.vertex("z1", (1.8, 0.0));
    d.vertex("z2", (1.3, 0.0));
    d.vertex("s", (-2.0, 2.7));
    d.vertex("t", (2.0, 2.7));
    d.vertex("u", (0.0, 0.7));
    d.vertex("v", (0.0, -0.7));
    d.path(&["v4", "v1", "v2", "v3", "v4", "v6", "v2", "v5", "v4"]);
    d.path(&["v1", "w1", "w2", "v3"]);
    d.path(&["v5", "z2", "z1", "v6"]);
    d.path(&["v1", "s", "t", "v6"]);
    d.path(&["v2", "u", "v", "v4"]);
    d
}

/// Neighborhood of a vertex `v` of degree 5 with its second shell, two
/// chords drawn as curves, and a path `u1, q, p, u5` closing the bottom.
fn chord_fixture() -> Drawing {
    let mut d = Drawing::default();
    d.vertex("v", (0.0, 0.0));
    for (i, deg) in [180.0, 135.0, 90.0, 45.0, 0.0].iter().enumerate() {
        d.vertex(&format!("u{}", i + 1), polar(*deg, 2.0));
    }
    for (i, deg) in [180.0, 160.0, 140.0, 120.0, 100.0, 80.0, 45.0, 0.0]
        .iter()
        .enumerate()
    {
        d.vertex(&format!("w{}", i + 1), polar(*deg, 4.0));
    }
    d.vertex("z", polar(50.0, 5.3));
    d.vertex("q", (-1.93, -2.3));
    d.vertex("p", (1.93, -2.3));
    for i in 1..=5 {
        d.edge("v", &format!("u{i}"));
    }
    for (u, w) in [
        ("u1", "w1"),
        ("u2", "w2"),
        ("u2", "w3"),
        ("u2", "w4"),
        ("u3", "w5"),
        ("u3", "w6"),
        ("u4", "w7"),
        ("u5", "w8"),
        ("w1", "w2"),
        ("w4", "w5"),
        ("w6", "w7"),
        ("w7", "w8"),
    ] {
        d.edge(u, w);
    }
    d.curve("w1", "w5", &[polar(150.0, 6.0), polar(130.0, 6.0)]);
    d.curve("w5", "z", &[polar(75.0, 5.0)]);
    d.curve("z", "w8", &[polar(25.0, 5.0)]);
    d.path(&["u1", "q", "p", "u5"]);
    d
}

/// Builds a named fixture with its labels and outer face.
pub fn named_graph(name: &str) -> Result<NamedGraph> {
    let drawing = match name {
        "c5" => c5(),
        "k4" => k4(),
        "script_h" => script_h(),
        "script_i" => script_i(),
        "girth5_counterexample" => girth5_counterexample(),
        "dodecahedron" => dodecahedron(),
        "theorem4_example" => theorem4_example(),
        "disloc_g" => disloc_g(),
        "disloc_h" => disloc_h(),
        "chord_fixture" => chord_fixture(),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(drawing.finish(name))
}

pub fn build_named(name: &str) -> Result<PlaneGraph> {
    named_graph(name).map(|g| g.graph)
}

/// Parameters of the extremal family: odd maximum degree `delta = 2k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    delta: usize,
    k: usize,
}

impl FamilyParams {
    pub fn new(delta: usize) -> Result<Self> {
        if delta < 3 {
            return Err(Error::DeltaTooSmall(delta));
        }
        if delta % 2 == 0 {
            return Err(Error::EvenDelta(delta));
        }
        Ok(Self {
            delta,
            k: (delta - 1) / 2,
        })
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        3 * self.delta - 1
    }
}

/// Builds `G(Δ)`.
///
/// Vertices 0..4 form the square v1, v2, v3, v4. Inside it, v1 and v3 are
/// joined by `2k - 1` paths whose lengths read 3, 2, 3, ..., 3 from the v2
/// side to the v4 side. Outside it, v2 and v4 are joined by the same bundle,
/// listed from the outermost path inward. Interior path vertices follow the
/// poles, inner bundle first.
pub fn build_extremal(p: FamilyParams) -> PlaneGraph {
    let paths = 2 * p.k - 1;
    let n = p.order();
    let (v1, v2, v3, v4) = (0, 1, 2, 3);
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut next = 4;

    // Lays out one bundle and returns each path's first and last inner vertex.
    let mut bundle = |rot: &mut Vec<Vec<usize>>, from: usize, to: usize| {
        let mut ends = Vec::with_capacity(paths);
        for i in 0..paths {
            let len = if i % 2 == 0 { 3 } else { 2 };
            let inner: Vec<usize> = (next..next + len - 1).collect();
            next += len - 1;
            let mut walk = vec![from];
            walk.extend(&inner);
            walk.push(to);
            for w in 1..walk.len() - 1 {
                rot[walk[w]] = vec![walk[w - 1], walk[w + 1]];
            }
            ends.push((inner[0], *inner.last().unwrap()));
        }
        ends
    };
    let inner = bundle(&mut rot, v1, v3);
    let outer = bundle(&mut rot, v2, v4);

    rot[v1] = std::iter::once(v2)
        .chain(inner.iter().map(|e| e.0))
        .chain([v4])
        .collect();
    rot[v3] = std::iter::once(v4)
        .chain(inner.iter().rev().map(|e| e.1))
        .chain([v2])
        .collect();
    rot[v2] = std::iter::once(v1)
        .chain(outer.iter().map(|e| e.0))
        .chain([v3])
        .collect();
    rot[v4] = outer.iter().rev().map(|e| e.1).chain([v1, v3]).collect();
    build_graph(n, rot).expect("extremal family is a plane graph")
}
