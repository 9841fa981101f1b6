//! Disks built from pentagons and the face-gluing move between them.
//!
//! A patch is a plane graph together with a designated outer face such that
//! every other face is bounded by a 5-cycle and the outer face is bounded by
//! a simple cycle. A child glues one new pentagon onto a path of 1 to 4
//! boundary edges; a patch with a 5-cycle boundary also closes into a
//! sphere by reading its outer face as the last pentagon.
//!
//! Children are accepted only when the new face lies in the automorphism
//! orbit of the canonical removable face, which makes the search tree
//! contain each isomorphism class exactly once.

use std::collections::HashSet;

use crate::plane::{
    best_roots, dart_ranks, patch_roots, relabel_by_root, sphere_roots, CanonRoot, FaceId,
    PlaneGraph,
};

#[derive(Debug, Clone)]
pub(crate) struct Patch {
    pub g: PlaneGraph,
    /// A dart whose left face is the outer face.
    pub outer: usize,
}

pub(crate) enum Child {
    Disk(Patch),
    Sphere { graph: PlaneGraph, code: Vec<u32> },
}

impl Patch {
    /// A single pentagon.
    pub fn root() -> Patch {
        let rotations = (0..5).map(|i| vec![(i + 4) % 5, (i + 1) % 5]).collect();
        let g = PlaneGraph::from_rotations_unchecked(rotations);
        let outer = g.find_dart(1, 0).unwrap();
        Patch { g, outer }
    }

    fn outer_face(&self) -> FaceId {
        self.g.faces().face_of_dart[self.outer]
    }

    /// Boundary darts in walk order, starting at the outer dart.
    fn boundary(&self) -> Vec<usize> {
        let mut out = vec![self.outer];
        let mut d = self.g.next_in_face(self.outer);
        while d != self.outer {
            out.push(d);
            d = self.g.next_in_face(d);
        }
        out
    }
}

/// Lower bound on the vertices still needed to close a patch whose boundary
/// has length `b`, indexed by `b`.
pub(crate) fn closing_cost(max_boundary: usize) -> Vec<usize> {
    let inf = usize::MAX / 2;
    let mut cost = vec![inf; max_boundary + 1];
    cost[5] = 0;
    loop {
        let mut changed = false;
        for b in 3..=max_boundary {
            for l in 1..=4usize {
                if l >= b {
                    break;
                }
                let nb = b + 5 - 2 * l;
                if nb < 3 || nb > max_boundary {
                    continue;
                }
                let c = cost[nb] + 4 - l;
                if c < cost[b] {
                    cost[b] = c;
                    changed = true;
                }
            }
        }
        if !changed {
            return cost;
        }
    }
}

/// Rank-based key of face `f` under `root`: the smallest emission rank of
/// its darts, read through twins when the root is mirrored.
fn face_key(g: &PlaneGraph, ranks: &[u32], root: CanonRoot, face_darts: &[usize]) -> u32 {
    face_darts
        .iter()
        .map(|&d| {
            if root.mirrored {
                ranks[g.twin(d)]
            } else {
                ranks[d]
            }
        })
        .min()
        .unwrap()
}

fn darts_by_face(g: &PlaneGraph) -> Vec<Vec<usize>> {
    let fod = &g.faces().face_of_dart;
    let mut out = vec![Vec::new(); g.face_count()];
    for (d, &f) in fod.iter().enumerate() {
        out[f].push(d);
    }
    out
}

/// Faces of a patch that can be peeled off leaving a patch: those meeting
/// the boundary in one path of 1 to 4 edges and nowhere else. Each comes
/// with an isomorphism-invariant signature; smaller signatures are
/// preferred as the canonical face.
fn removable_faces(p: &Patch) -> Vec<(FaceId, u64)> {
    let g = &p.g;
    let faces = g.faces();
    let outer = p.outer_face();
    let mut on_boundary = vec![false; g.vertex_count()];
    for d in p.boundary() {
        on_boundary[g.dart_tail(d)] = true;
    }
    let mut out = Vec::new();
    for f in 0..faces.len() {
        if f == outer {
            continue;
        }
        let walk = &faces.walks[f];
        let m = walk.len();
        let ext: Vec<bool> = walk
            .darts
            .iter()
            .map(|d| faces.face_of_dart[g.find_dart(d.head, d.tail).unwrap()] == outer)
            .collect();
        let count = ext.iter().filter(|&&e| e).count();
        if count == 0 || count > 4 {
            continue;
        }
        let runs = (0..m).filter(|&j| ext[j] && !ext[(j + m - 1) % m]).count();
        if runs != 1 {
            continue;
        }
        let touching = walk.darts.iter().filter(|d| on_boundary[d.tail]).count();
        if touching != count + 1 {
            continue;
        }
        let mut degs: Vec<usize> = walk.darts.iter().map(|d| g.degree(d.tail)).collect();
        degs.sort_unstable();
        let sig = degs
            .iter()
            .fold((5 - count) as u64, |acc, &x| (acc << 8) | x.min(255) as u64);
        out.push((f, sig));
    }
    out
}

/// True when `new_face` is equivalent to the canonical face among `ties`.
fn is_canonical_move(
    g: &PlaneGraph,
    winners: &[CanonRoot],
    ties: &[FaceId],
    new_face: FaceId,
) -> bool {
    let by_face = darts_by_face(g);
    let first = dart_ranks(g, winners[0]);
    let best = ties
        .iter()
        .map(|&f| face_key(g, &first, winners[0], &by_face[f]))
        .min()
        .unwrap();
    if face_key(g, &first, winners[0], &by_face[new_face]) == best {
        return true;
    }
    winners[1..].iter().any(|&r| {
        let ranks = dart_ranks(g, r);
        face_key(g, &ranks, r, &by_face[new_face]) == best
    })
}

/// Patch roots whose dart joins the highest-degree pair of boundary
/// vertices. Patch codes never leave this module, so any invariant
/// restriction of the roots keeps them canonical.
fn strongest_roots(p: &Patch) -> Vec<CanonRoot> {
    let g = &p.g;
    let roots = patch_roots(g, p.outer_face());
    let weight = |r: &CanonRoot| {
        (
            g.degree(g.dart_tail(r.dart)),
            g.degree(g.dart_tail(g.twin(r.dart))),
        )
    };
    let best = roots.iter().map(weight).max().unwrap();
    roots.into_iter().filter(|r| weight(r) == best).collect()
}

/// Faces of the closed sphere with the smallest sorted degree sequence,
/// or `None` when the outer face is not among them.
fn closing_ties(p: &Patch) -> Option<Vec<FaceId>> {
    let g = &p.g;
    let sigs: Vec<Vec<usize>> = g
        .faces()
        .walks
        .iter()
        .map(|w| {
            let mut d: Vec<usize> = w.darts.iter().map(|d| g.degree(d.tail)).collect();
            d.sort_unstable();
            d
        })
        .collect();
    let best = sigs.iter().min().unwrap();
    let outer = p.outer_face();
    if &sigs[outer] != best {
        return None;
    }
    Some((0..sigs.len()).filter(|&f| &sigs[f] == best).collect())
}

/// Accepted children of `p` with at most `max_n` vertices.
pub(crate) fn children(p: &Patch, max_n: usize, cost: &[usize]) -> Vec<Child> {
    let g = &p.g;
    let n = g.vertex_count();
    let ds = p.boundary();
    let b = ds.len();
    let bv: Vec<usize> = ds.iter().map(|&d| g.dart_tail(d)).collect();
    let mut out = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    if n > max_n {
        return out;
    }

    if b == 5 {
        if let Some(ties) = closing_ties(p) {
            let (code, winners) = best_roots(g, &sphere_roots(g));
            let outer = p.outer_face();
            if ties.len() == 1 || is_canonical_move(g, &winners, &ties, outer) {
                let graph = relabel_by_root(g, winners[0]);
                out.push(Child::Sphere { graph, code });
            }
        }
    }

    for i in 0..b {
        for l in 1..=4usize {
            if l >= b {
                break;
            }
            let nb = b + 5 - 2 * l;
            let added = 4 - l;
            if n + added > max_n || nb >= cost.len() || n + added + cost[nb] > max_n {
                continue;
            }
            let start = bv[i];
            let end = bv[(i + l) % b];
            if l == 4 && g.has_edge(start, end) {
                continue;
            }
            let before_end = bv[(i + l - 1) % b];
            let after_start = bv[(i + 1) % b];

            let mut rot: Vec<Vec<usize>> = g.rotations().to_vec();
            let fresh: Vec<usize> = (n..n + added).collect();
            // Path from `end` back to `start` through the fresh vertices.
            let mut sigma = vec![end];
            sigma.extend(&fresh);
            sigma.push(start);
            for (j, &x) in fresh.iter().enumerate() {
                rot.push(vec![sigma[j], sigma[j + 2]]);
                debug_assert_eq!(rot.len() - 1, x);
            }
            let first = sigma[1];
            let last = sigma[sigma.len() - 2];
            let pos = rot[end].iter().position(|&x| x == before_end).unwrap();
            rot[end].insert(pos, first);
            let pos = rot[start].iter().position(|&x| x == after_start).unwrap();
            rot[start].insert(pos + 1, last);

            let child_g = PlaneGraph::from_rotations_unchecked(rot);
            let outer = child_g.find_dart(start, last).unwrap();
            let child = Patch { g: child_g, outer };
            let new_face = child.g.face_left_of(start, after_start).unwrap();

            let removable = removable_faces(&child);
            let best = removable.iter().map(|r| r.1).min().unwrap();
            let ties: Vec<FaceId> = removable
                .iter()
                .filter(|r| r.1 == best)
                .map(|r| r.0)
                .collect();
            if !ties.contains(&new_face) {
                continue;
            }
            let (code, winners) = best_roots(&child.g, &strongest_roots(&child));
            if seen.contains(&code) {
                continue;
            }
            if ties.len() == 1 || is_canonical_move(&child.g, &winners, &ties, new_face) {
                seen.insert(code);
                out.push(Child::Disk(child));
            }
        }
    }
    out
}
