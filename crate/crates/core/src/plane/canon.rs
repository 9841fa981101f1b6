//! Canonical codes for embedded graphs.
//!
//! A code is the breadth-first listing of a graph from a root dart: the root
//! tail gets label 1, vertices are processed in label order, and each vertex
//! lists the labels of its neighbors starting at the dart it was discovered
//! through, followed by a 0. Unseen neighbors are labeled on the fly. The
//! minimum over all roots (and both orientations) is an isomorphism invariant
//! of the embedding.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{FaceId, PlaneGraph};

/// Totally ordered byte string identifying an embedding up to relabeling and
/// reflection.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode(pub Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    fn from_words(words: &[u32]) -> Self {
        Self(words.iter().flat_map(|w| w.to_be_bytes()).collect())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

/// Starting dart and orientation of one breadth-first listing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct CanonRoot {
    pub dart: usize,
    pub mirrored: bool,
}

pub(crate) fn sphere_roots(g: &PlaneGraph) -> Vec<CanonRoot> {
    (0..g.dart_count())
        .flat_map(|d| {
            [
                CanonRoot {
                    dart: d,
                    mirrored: false,
                },
                CanonRoot {
                    dart: d,
                    mirrored: true,
                },
            ]
        })
        .collect()
}

/// Roots that keep `outer` as the face left of the root dart in the listed
/// orientation, so that only isomorphisms fixing `outer` are compared.
pub(crate) fn patch_roots(g: &PlaneGraph, outer: FaceId) -> Vec<CanonRoot> {
    let fod = &g.faces().face_of_dart;
    let mut out = Vec::new();
    for d in 0..g.dart_count() {
        if fod[d] == outer {
            out.push(CanonRoot {
                dart: d,
                mirrored: false,
            });
        }
        if fod[g.twin(d)] == outer {
            out.push(CanonRoot {
                dart: d,
                mirrored: true,
            });
        }
    }
    out
}

struct Scratch {
    label: Vec<u32>,
    start: Vec<usize>,
    order: Vec<usize>,
    buf: Vec<u32>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self {
            label: vec![0; n],
            start: vec![0; n],
            order: Vec::with_capacity(n),
            buf: Vec::new(),
        }
    }
}

/// Walks the listing for `root`, calling `visit(v, i, word)` for every
/// emitted neighbor at rotation index `i` of `v`. Stops early when `visit`
/// returns false.
fn walk(
    g: &PlaneGraph,
    root: CanonRoot,
    s: &mut Scratch,
    mut visit: impl FnMut(usize, usize, u32) -> bool,
) -> bool {
    s.label.iter_mut().for_each(|l| *l = 0);
    s.order.clear();
    let r = g.dart_tail(root.dart);
    s.label[r] = 1;
    s.start[r] = g.dart_index(root.dart);
    s.order.push(r);
    let mut next_label = 2;
    let mut head = 0;
    while head < s.order.len() {
        let v = s.order[head];
        head += 1;
        let rot = g.rotation(v);
        let deg = rot.len();
        for step in 0..deg {
            let i = if root.mirrored {
                (s.start[v] + deg - step) % deg
            } else {
                (s.start[v] + step) % deg
            };
            let w = rot[i];
            if s.label[w] == 0 {
                s.label[w] = next_label;
                next_label += 1;
                s.start[w] = g.dart_index(g.twin(g.dart_id(v, i)));
                s.order.push(w);
            }
            if !visit(v, i, s.label[w]) {
                return false;
            }
        }
        if !visit(v, usize::MAX, 0) {
            return false;
        }
    }
    true
}

/// Listing of `g` from `root`, compared against `best` with early exit.
/// Returns `Greater` as soon as the listing exceeds `best`.
fn listing(g: &PlaneGraph, root: CanonRoot, best: Option<&[u32]>, s: &mut Scratch) -> Ordering {
    let mut buf = std::mem::take(&mut s.buf);
    buf.clear();
    buf.push(g.vertex_count() as u32);
    buf.push(g.edge_count() as u32);
    let mut state = Ordering::Equal;
    if let Some(b) = best {
        state = buf[..2].cmp(&b[..2]);
    }
    if state == Ordering::Greater {
        s.buf = buf;
        return state;
    }
    walk(g, root, s, |_, _, word| {
        if state == Ordering::Equal {
            if let Some(b) = best {
                match word.cmp(&b[buf.len()]) {
                    Ordering::Greater => {
                        state = Ordering::Greater;
                        return false;
                    }
                    Ordering::Less => state = Ordering::Less,
                    Ordering::Equal => {}
                }
            }
        }
        buf.push(word);
        true
    });
    s.buf = buf;
    state
}

/// Minimum listing over `roots` and every root attaining it.
pub(crate) fn best_roots(g: &PlaneGraph, roots: &[CanonRoot]) -> (Vec<u32>, Vec<CanonRoot>) {
    let mut s = Scratch::new(g.vertex_count());
    let mut best: Option<Vec<u32>> = None;
    let mut winners = Vec::new();
    for &root in roots {
        match listing(g, root, best.as_deref(), &mut s) {
            Ordering::Greater => {}
            Ordering::Equal if best.is_some() => winners.push(root),
            _ => {
                best = Some(s.buf.clone());
                winners.clear();
                winners.push(root);
            }
        }
    }
    (best.unwrap_or_default(), winners)
}

/// Emission rank of every dart under `root`.
pub(crate) fn dart_ranks(g: &PlaneGraph, root: CanonRoot) -> Vec<u32> {
    let mut s = Scratch::new(g.vertex_count());
    let mut rank = vec![u32::MAX; g.dart_count()];
    let mut k = 0;
    walk(g, root, &mut s, |v, i, _| {
        if i != usize::MAX {
            rank[g.dart_id(v, i)] = k;
            k += 1;
        }
        true
    });
    rank
}

/// Relabels `g` by its listing from `root`; the result lists every rotation
/// from the discovering dart, reversed when the root is mirrored.
pub(crate) fn relabel_by_root(g: &PlaneGraph, root: CanonRoot) -> PlaneGraph {
    let n = g.vertex_count();
    let mut s = Scratch::new(n);
    let mut rotations: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut pending: Vec<(usize, usize)> = Vec::with_capacity(g.dart_count());
    walk(g, root, &mut s, |v, i, _| {
        if i != usize::MAX {
            pending.push((v, g.rotation(v)[i]));
        }
        true
    });
    for (v, w) in pending {
        rotations[s.label[v] as usize - 1].push(s.label[w] as usize - 1);
    }
    PlaneGraph::from_rotations_unchecked(rotations)
}

/// Canonical code of the embedding, invariant under relabeling, choice of
/// rotation starting points and reflection.
pub fn canonical_code(g: &PlaneGraph) -> CanonicalCode {
    if g.dart_count() == 0 {
        return CanonicalCode::from_words(&[g.vertex_count() as u32, 0, 0]);
    }
    let (words, _) = best_roots(g, &sphere_roots(g));
    CanonicalCode::from_words(&words)
}

impl PlaneGraph {
    pub fn canonical_code(&self) -> CanonicalCode {
        canonical_code(self)
    }

    /// Isomorphic copy of `self` in canonical labeling. Two graphs have the
    /// same canonical form exactly when their canonical codes agree.
    pub fn canonical_form(&self) -> PlaneGraph {
        if self.dart_count() == 0 {
            return self.clone();
        }
        let (_, winners) = best_roots(self, &sphere_roots(self));
        relabel_by_root(self, winners[0])
    }
}
