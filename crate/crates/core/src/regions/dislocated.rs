use serde::{Deserialize, Serialize};

use super::{dominates, find_cycles, partition_unchecked, RegionPartition, Side};
use crate::error::Result;
use crate::plane::{FaceId, PlaneGraph};

/// Two 4-cycles whose chosen sides are dominated by different vertex pairs
/// and share neither a face nor a vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DislocatedPair {
    pub cycle1: Vec<usize>,
    pub cycle2: Vec<usize>,
    pub region1: Side,
    pub region2: Side,
    pub dom1: [usize; 2],
    pub dom2: [usize; 2],
}

struct Candidate<'a> {
    side: Side,
    dom: [usize; 2],
    faces: &'a [FaceId],
    vertices: &'a [usize],
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// All dislocated pairs of 4-cycles, one witness per unordered pair of
/// cycles. Sides are named relative to `outer_face`.
///
/// For each pair, the witness is the first admissible choice when sides are
/// tried interior first and dominating pairs in lexicographic order.
pub fn dislocated_pairs(g: &PlaneGraph, outer_face: FaceId) -> Result<Vec<DislocatedPair>> {
    g.check_face(outer_face)?;
    let cycles = find_cycles(g, 4)?;
    let parts: Vec<RegionPartition> = cycles
        .iter()
        .map(|c| partition_unchecked(g, c, outer_face))
        .collect();
    let candidates: Vec<Vec<Candidate>> = parts
        .iter()
        .map(|p| {
            let mut pairs: Vec<[usize; 2]> = Vec::with_capacity(6);
            for i in 0..4 {
                for j in i + 1..4 {
                    let (a, b) = (p.cycle[i], p.cycle[j]);
                    pairs.push([a.min(b), a.max(b)]);
                }
            }
            pairs.sort_unstable();
            let mut out = Vec::new();
            for side in Side::BOTH {
                for &dom in &pairs {
                    if dominates(g, &dom, p.vertices(side)) {
                        out.push(Candidate {
                            side,
                            dom,
                            faces: p.faces(side),
                            vertices: p.vertices(side),
                        });
                    }
                }
            }
            out
        })
        .collect();

    let mut out = Vec::new();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let found = candidates[i].iter().find_map(|a| {
                candidates[j]
                    .iter()
                    .find(|b| {
                        a.dom != b.dom
                            && disjoint(a.faces, b.faces)
                            && disjoint(a.vertices, b.vertices)
                    })
                    .map(|b| (a, b))
            });
            if let Some((a, b)) = found {
                out.push(DislocatedPair {
                    cycle1: cycles[i].clone(),
                    cycle2: cycles[j].clone(),
                    region1: a.side,
                    region2: b.side,
                    dom1: a.dom,
                    dom2: b.dom,
                });
            }
        }
    }
    Ok(out)
}
