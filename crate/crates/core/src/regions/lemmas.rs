//! Per-graph checks of the structural facts known about pentagulations.
//!
//! Each check records whether it applies to the input (several only hold
//! for diameter 3 or girth 5), how many instances it examined and the first
//! counterexample, if any.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    dislocated_pairs, dominates, find_cycles, four_cycle_structure, is_jordan_separating,
    is_vertex_cut, partition_unchecked, RegionPartition, Side, MAX_CYCLE_LENGTH,
};
use crate::chords::{cycle_under, k_chords, short_chord_census, ChordCensus};
use crate::error::{Error, Result};
use crate::metrics::{distance_matrix, girth, max_degree};
use crate::plane::{FaceId, PlaneGraph};

/// Concrete counterexample to a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub cycle: Vec<usize>,
    pub side: Option<Side>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub name: String,
    pub applicable: bool,
    pub checked: usize,
    pub violations: usize,
    pub witness: Option<Witness>,
}

impl LemmaCheck {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub diameter: usize,
    pub girth: usize,
    pub checks: Vec<LemmaCheck>,
    /// Number of cycles of each length from 3 up, indexed by `length - 3`.
    pub cycle_census: Vec<usize>,
    /// Faces whose boundary vertices form a vertex cut.
    pub separating_face_cycles: Vec<FaceId>,
    pub dislocated_pair_count: usize,
    /// 1- and 2-chord counts at every vertex of maximum degree.
    pub chord_census: Vec<ChordCensus>,
}

impl LemmaReport {
    pub fn check(&self, name: &str) -> Option<&LemmaCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// True when no applicable check found a violation.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(LemmaCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LemmaCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

struct Ctx<'a> {
    g: &'a PlaneGraph,
    n: usize,
    delta: usize,
    diameter: usize,
    girth: usize,
    /// Cycles with their partitions, indexed by `length - 3`.
    cycles: Vec<Vec<RegionPartition>>,
}

impl Ctx<'_> {
    fn of_length(&self, len: usize) -> &[RegionPartition] {
        &self.cycles[len - 3]
    }
}

struct Tally {
    check: LemmaCheck,
}

impl Tally {
    fn new(name: &str, applicable: bool) -> Self {
        Self {
            check: LemmaCheck {
                name: name.to_string(),
                applicable,
                checked: 0,
                violations: 0,
                witness: None,
            },
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.check.checked += 1;
        if !ok {
            self.check.violations += 1;
            if self.check.witness.is_none() {
                self.check.witness = Some(witness());
            }
        }
    }

    fn done(self) -> LemmaCheck {
        self.check
    }
}

fn witness(p: &RegionPartition, side: Option<Side>, detail: impl Into<String>) -> Witness {
    Witness {
        cycle: p.cycle.clone(),
        side,
        detail: detail.into(),
    }
}

fn adjacent_pairs(c: &[usize]) -> impl Iterator<Item = [usize; 2]> + '_ {
    (0..c.len()).map(move |i| [c[i], c[(i + 1) % c.len()]])
}

fn has_neighbor_in(g: &PlaneGraph, v: usize, region: &[usize]) -> bool {
    g.neighbors(v).any(|w| region.binary_search(&w).is_ok())
}

fn no_triangles(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("no_triangles", cx.diameter == 3);
    if t.check.applicable {
        let tri = cx.of_length(3);
        t.record(tri.is_empty(), || {
            witness(&tri[0], None, "3-cycle in a diameter-3 graph")
        });
    }
    t.done()
}

fn short_cycles_jordan(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("short_cycles_jordan", cx.diameter == 3);
    if t.check.applicable {
        for p in cx.of_length(3).iter().chain(cx.of_length(4)) {
            t.record(is_jordan_separating(p), || {
                witness(p, None, "not Jordan separating")
            });
        }
    }
    t.done()
}

fn jordan_cycles_dominate_a_side(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("jordan_cycles_dominate_a_side", cx.diameter == 3);
    if t.check.applicable {
        for p in cx
            .cycles
            .iter()
            .flatten()
            .filter(|p| is_jordan_separating(p))
        {
            let ok = Side::BOTH
                .iter()
                .any(|&s| dominates(cx.g, &p.cycle, p.vertices(s)));
            t.record(ok, || witness(p, None, "dominates neither side"));
        }
    }
    t.done()
}

fn long_cycles_jordan(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("six_seven_cycles_jordan", true);
    for p in cx.of_length(6).iter().chain(cx.of_length(7)) {
        t.record(is_jordan_separating(p), || {
            witness(p, None, "not Jordan separating")
        });
    }
    t.done()
}

fn triangle_sides_undominated(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("triangle_sides_undominated", true);
    for p in cx.of_length(3) {
        for s in Side::BOTH {
            let ok = !dominates(cx.g, &p.cycle, p.vertices(s));
            t.record(ok, || witness(p, Some(s), "3-cycle dominates a side"));
        }
    }
    t.done()
}

fn weak_dominator(g: &PlaneGraph, p: &RegionPartition, s: Side) -> Option<Vec<usize>> {
    let region = p.vertices(s);
    for &v in &p.cycle {
        if dominates(g, &[v], region) {
            return Some(vec![v]);
        }
    }
    adjacent_pairs(&p.cycle)
        .find(|pair| dominates(g, pair, region))
        .map(|pair| pair.to_vec())
}

fn four_cycle_no_weak_dominator(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("four_cycle_no_weak_dominator", true);
    for p in cx.of_length(4) {
        for s in Side::BOTH {
            let found = weak_dominator(cx.g, p, s);
            t.record(found.is_none(), || {
                witness(
                    p,
                    Some(s),
                    format!("side dominated by {:?}", found.clone().unwrap()),
                )
            });
        }
    }
    t.done()
}

fn five_cycle_no_weak_dominator(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("five_cycle_no_weak_dominator", true);
    for p in cx.of_length(5).iter().filter(|p| is_jordan_separating(p)) {
        for s in Side::BOTH {
            let found = weak_dominator(cx.g, p, s);
            t.record(found.is_none(), || {
                witness(
                    p,
                    Some(s),
                    format!("side dominated by {:?}", found.clone().unwrap()),
                )
            });
        }
    }
    t.done()
}

/// Sides of 4-cycles that the cycle dominates.
fn dominated_four_sides<'a>(cx: &'a Ctx) -> impl Iterator<Item = (&'a RegionPartition, Side)> + 'a {
    cx.of_length(4).iter().flat_map(move |p| {
        Side::BOTH
            .into_iter()
            .filter(move |&s| dominates(cx.g, &p.cycle, p.vertices(s)))
            .map(move |s| (p, s))
    })
}

fn four_cycle_one_sided_contact(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("four_cycle_one_sided_contact", true);
    for (p, s) in dominated_four_sides(cx) {
        let region = p.vertices(s);
        let bad = adjacent_pairs(&p.cycle)
            .find(|&[a, b]| has_neighbor_in(cx.g, a, region) && has_neighbor_in(cx.g, b, region));
        t.record(bad.is_none(), || {
            witness(
                p,
                Some(s),
                format!("adjacent {:?} both reach the side", bad.unwrap()),
            )
        });
    }
    t.done()
}

fn four_cycle_interior_degree_two(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("four_cycle_interior_degree_two", true);
    for (p, s) in dominated_four_sides(cx) {
        let bad = p.vertices(s).iter().find(|&&w| cx.g.degree(w) != 2);
        t.record(bad.is_none(), || {
            let w = *bad.unwrap();
            witness(
                p,
                Some(s),
                format!("vertex {w} has degree {}", cx.g.degree(w)),
            )
        });
    }
    t.done()
}

/// `p` re-oriented so that `side` is its interior.
pub(crate) fn oriented(p: &RegionPartition, side: Side) -> RegionPartition {
    match side {
        Side::Interior => p.clone(),
        Side::Exterior => p.swapped(p.interior_faces[0]),
    }
}

fn induced_edges(g: &PlaneGraph, vertices: &[usize]) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|(a, b)| vertices.binary_search(a).is_ok() && vertices.binary_search(b).is_ok())
        .collect()
}

fn four_cycle_decomposition(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("four_cycle_decomposition", true);
    for (p, s) in dominated_four_sides(cx) {
        let q = oriented(p, s);
        let result = four_cycle_structure(cx.g, &q).and_then(|d| {
            // Diagonals drawn on the other side do not belong to the region.
            let outside: Vec<(usize, usize)> = chords_on_side(cx.g, &q, Side::Exterior)
                .into_iter()
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            let mut want = induced_edges(cx.g, &q.closed_vertices(Side::Interior));
            want.retain(|e| !outside.contains(e));
            if d.induced_edges() == want {
                Ok(d)
            } else {
                Err(Error::StructureViolation("region has extra edges".into()))
            }
        });
        t.record(result.is_ok(), || {
            witness(p, Some(s), result.unwrap_err().to_string())
        });
    }
    t.done()
}

/// Chords of the cycle (edges joining two non-consecutive cycle vertices)
/// that lie on `side`.
fn chords_on_side(g: &PlaneGraph, p: &RegionPartition, side: Side) -> Vec<(usize, usize)> {
    let c = &p.cycle;
    let m = c.len();
    let fod = &g.faces().face_of_dart;
    let faces = p.faces(side);
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 2..m {
            if i == 0 && j == m - 1 {
                continue;
            }
            if let Some(d) = g.find_dart(c[i], c[j]) {
                if faces.binary_search(&fod[d]).is_ok() {
                    out.push((c[i], c[j]));
                }
            }
        }
    }
    out
}

fn common_neighbor_in(g: &PlaneGraph, a: usize, b: usize, region: &[usize]) -> bool {
    region.iter().any(|&w| g.has_edge(w, a) && g.has_edge(w, b))
}

fn six_cycle_common_neighbor(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("six_cycle_common_neighbor", true);
    for p in cx.of_length(6) {
        for s in Side::BOTH {
            let region = p.vertices(s);
            for i in 0..3 {
                let (a, b) = (p.cycle[i], p.cycle[i + 3]);
                if !dominates(cx.g, &[a, b], region) {
                    continue;
                }
                let chords = chords_on_side(cx.g, p, s);
                let ok = chords.is_empty() && common_neighbor_in(cx.g, a, b, region);
                t.record(ok, || {
                    witness(
                        p,
                        Some(s),
                        format!("opposite pair {a}, {b}; chords on side {chords:?}"),
                    )
                });
            }
        }
    }
    t.done()
}

fn five_cycle_common_neighbor(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("five_cycle_common_neighbor", true);
    for p in cx.of_length(5).iter().filter(|p| is_jordan_separating(p)) {
        for s in Side::BOTH {
            let region = p.vertices(s);
            for i in 0..5 {
                let (a, b) = (p.cycle[i], p.cycle[(i + 2) % 5]);
                if dominates(cx.g, &[a, b], region) {
                    let ok = common_neighbor_in(cx.g, a, b, region);
                    t.record(ok, || {
                        witness(p, Some(s), format!("pair {a}, {b} has no common neighbor"))
                    });
                }
            }
        }
    }
    t.done()
}

fn dominating_four_cycle_bound(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("dominating_four_cycle_bound", cx.delta >= 3);
    if t.check.applicable {
        for p in cx.of_length(4) {
            let rest: Vec<usize> = (0..cx.n).filter(|v| !p.cycle.contains(v)).collect();
            if dominates(cx.g, &p.cycle, &rest) {
                let ok = cx.n < 3 * cx.delta;
                t.record(ok, || {
                    witness(
                        p,
                        None,
                        format!(
                            "dominating 4-cycle with n = {}, max degree {}",
                            cx.n, cx.delta
                        ),
                    )
                });
            }
        }
    }
    t.done()
}

fn girth5_shells(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("girth5_shells", cx.girth == 5);
    if !t.check.applicable {
        return t.done();
    }
    let g = cx.g;
    for v in 0..cx.n {
        let nv: Vec<usize> = g.neighbors(v).collect();
        let independent = nv.iter().all(|&a| nv.iter().all(|&b| !g.has_edge(a, b)));
        let dist = crate::metrics::bfs_dist(g, v);
        let unique = (0..cx.n)
            .filter(|&x| dist[x] == 2)
            .all(|x| g.neighbors(x).filter(|&u| dist[u] == 1).count() == 1);
        let reach = nv.iter().all(|&u| g.neighbors(u).any(|w| dist[w] == 2));
        let ok = independent && unique && reach;
        t.record(ok, || Witness {
            cycle: vec![v],
            side: None,
            detail: format!("independent {independent}, unique {unique}, outward {reach}"),
        });
    }
    t.done()
}

fn girth5_no_adjacent_degree_two(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("girth5_no_adjacent_degree_two", cx.girth == 5 && cx.n != 5);
    if t.check.applicable {
        for (a, b) in cx.g.edges() {
            let ok = cx.g.degree(a) != 2 || cx.g.degree(b) != 2;
            t.record(ok, || Witness {
                cycle: vec![a, b],
                side: None,
                detail: "adjacent degree-2 vertices".into(),
            });
        }
    }
    t.done()
}

fn girth5_diameter3_degree_bound(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new(
        "girth5_diameter3_degree_bound",
        cx.girth == 5 && cx.diameter == 3,
    );
    if t.check.applicable {
        t.record(cx.delta <= 7, || Witness {
            cycle: vec![],
            side: None,
            detail: format!("maximum degree {}", cx.delta),
        });
    }
    t.done()
}

fn chord_cycles_separate(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("chord_cycles_separate", cx.girth == 5 && cx.delta >= 8);
    if !t.check.applicable {
        return t.done();
    }
    let outer = 0;
    for v in (0..cx.n).filter(|&v| cx.g.degree(v) >= 8) {
        for k in 1..=2 {
            for chord in k_chords(cx.g, v, k).unwrap_or_default() {
                let ok = match cycle_under(cx.g, &chord) {
                    Ok(c) => {
                        c.u_x != c.u_y
                            && is_jordan_separating(&partition_unchecked(cx.g, &c.cycle, outer))
                    }
                    Err(_) => false,
                };
                t.record(ok, || Witness {
                    cycle: chord.path.clone(),
                    side: None,
                    detail: format!("chord at {v} does not close a separating cycle"),
                });
            }
        }
    }
    t.done()
}

fn order_bound(cx: &Ctx) -> LemmaCheck {
    let mut t = Tally::new("order_bound", cx.diameter == 3 && cx.delta >= 8);
    if t.check.applicable {
        t.record(cx.n < 3 * cx.delta, || Witness {
            cycle: vec![],
            side: None,
            detail: format!("n = {} exceeds 3 * {} - 1", cx.n, cx.delta),
        });
    }
    t.done()
}

type CheckFn = fn(&Ctx) -> LemmaCheck;

const CHECKS: &[CheckFn] = &[
    no_triangles,
    short_cycles_jordan,
    jordan_cycles_dominate_a_side,
    long_cycles_jordan,
    triangle_sides_undominated,
    four_cycle_no_weak_dominator,
    five_cycle_no_weak_dominator,
    four_cycle_one_sided_contact,
    four_cycle_interior_degree_two,
    four_cycle_decomposition,
    six_cycle_common_neighbor,
    five_cycle_common_neighbor,
    dominating_four_cycle_bound,
    girth5_shells,
    girth5_no_adjacent_degree_two,
    girth5_diameter3_degree_bound,
    chord_cycles_separate,
    order_bound,
];

/// Runs every structural check on a pentagulation. Sides of cycles are
/// named relative to `outer_face`; no check depends on that choice.
pub fn lemma_suite(g: &PlaneGraph, outer_face: FaceId) -> Result<LemmaReport> {
    if !g.is_pentagulation() {
        return Err(Error::NotPentagulation);
    }
    g.check_face(outer_face)?;
    let n = g.vertex_count();
    let dm = distance_matrix(g);
    let diameter = dm.iter().flatten().copied().max().unwrap_or(0);
    let delta = max_degree(g);
    let gi = girth(g)?;
    let cycles: Vec<Vec<RegionPartition>> = (3..=MAX_CYCLE_LENGTH)
        .into_par_iter()
        .map(|len| {
            find_cycles(g, len)
                .expect("length in range")
                .iter()
                .map(|c| partition_unchecked(g, c, outer_face))
                .collect()
        })
        .collect();
    let cx = Ctx {
        g,
        n,
        delta,
        diameter,
        girth: gi,
        cycles,
    };
    let checks: Vec<LemmaCheck> = CHECKS.par_iter().map(|f| f(&cx)).collect();

    let faces = g.faces();
    let separating_face_cycles = (0..faces.len())
        .filter(|&f| is_vertex_cut(g, &faces.walks[f].vertices()))
        .collect();
    let chord_census = (0..n)
        .filter(|&v| g.degree(v) == delta)
        .map(|v| short_chord_census(g, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(LemmaReport {
        vertex_count: n,
        edge_count: g.edge_count(),
        max_degree: delta,
        diameter,
        girth: gi,
        cycle_census: cx.cycles.iter().map(Vec::len).collect(),
        checks,
        separating_face_cycles,
        dislocated_pair_count: dislocated_pairs(g, outer_face)?.len(),
        chord_census,
    })
}
