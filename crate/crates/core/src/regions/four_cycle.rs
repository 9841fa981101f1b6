use serde::{Deserialize, Serialize};

use super::{dominates, RegionPartition};
use crate::error::{Error, Result};
use crate::plane::PlaneGraph;

/// Structure of the interior of a 4-cycle that dominates it: two opposite
/// poles joined by internally disjoint paths of lengths 3 and 2, which
/// alternate around the poles starting and ending with a length-3 path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourCycleDecomposition {
    pub cycle: Vec<usize>,
    pub pole_u: usize,
    pub pole_v: usize,
    pub k: usize,
    /// Paths of length 3, each listed from `pole_u` to `pole_v`.
    pub paths3: Vec<Vec<usize>>,
    /// Paths of length 2, each listed from `pole_u` to `pole_v`.
    pub paths2: Vec<Vec<usize>>,
    /// All paths in rotation order around `pole_u`.
    pub cyclic_order: Vec<Vec<usize>>,
}

impl FourCycleDecomposition {
    /// Edges of the cycle plus the pole paths, as sorted `(min, max)` pairs.
    pub fn induced_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut push = |a: usize, b: usize| out.push((a.min(b), a.max(b)));
        for i in 0..4 {
            push(self.cycle[i], self.cycle[(i + 1) % 4]);
        }
        for path in &self.cyclic_order {
            for w in path.windows(2) {
                push(w[0], w[1]);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of vertices strictly inside the cycle.
    pub fn interior_order(&self) -> usize {
        2 * self.paths3.len() + self.paths2.len()
    }
}

/// Recovers the pole-path structure of the interior of a 4-cycle.
///
/// Fails with [`Error::NotDominated`] if the cycle does not dominate its
/// interior and with [`Error::StructureViolation`] if the interior is not a
/// bundle of alternating pole paths.
pub fn four_cycle_structure(g: &PlaneGraph, p: &RegionPartition) -> Result<FourCycleDecomposition> {
    let c = &p.cycle;
    if c.len() != 4 {
        return Err(Error::LengthOutOfRange(c.len()));
    }
    super::validate_cycle(g, c)?;
    if !g.is_pentagulation() {
        return Err(Error::NotPentagulation);
    }
    let interior = &p.interior_vertices;
    if !dominates(g, c, interior) {
        return Err(Error::NotDominated);
    }
    let violation = |msg: String| Err(Error::StructureViolation(msg));
    if interior.is_empty() {
        return violation("interior has no vertices".into());
    }
    let inside = |w: usize| interior.binary_search(&w).is_ok();

    let contacts: Vec<usize> = (0..4).filter(|&i| g.neighbors(c[i]).any(inside)).collect();
    if contacts.len() != 2 || contacts[1] - contacts[0] != 2 {
        return violation(format!(
            "cycle vertices with interior neighbors: {contacts:?}"
        ));
    }
    let (iu, iv) = (contacts[0], contacts[1]);
    let (pole_u, pole_v) = (c[iu].min(c[iv]), c[iu].max(c[iv]));

    for &w in interior {
        if g.degree(w) != 2 {
            return violation(format!("interior vertex {w} has degree {}", g.degree(w)));
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if j - i == 2 && g.has_edge(c[i], c[j]) {
                let d = g.find_dart(c[i], c[j]).unwrap();
                let fod = &g.faces().face_of_dart;
                if p.interior_faces.binary_search(&fod[d]).is_ok() {
                    return violation(format!("diagonal {}-{} lies inside", c[i], c[j]));
                }
            }
        }
    }

    // Interior neighbors of pole_u in rotation order, read between its two
    // cycle neighbors on the interior side.
    let rot = g.rotation(pole_u);
    let deg = rot.len();
    let start = (0..deg)
        .find(|&i| c.contains(&rot[i]) && inside(rot[(i + 1) % deg]))
        .ok_or_else(|| Error::StructureViolation("pole has no interior arc".into()))?;
    let mut ordered = Vec::new();
    for step in 1..deg {
        let w = rot[(start + step) % deg];
        if !inside(w) {
            break;
        }
        ordered.push(w);
    }
    let total_inside = rot.iter().filter(|&&w| inside(w)).count();
    if ordered.len() != total_inside {
        return violation(format!(
            "interior neighbors of {pole_u} are not consecutive"
        ));
    }

    let mut used = vec![false; g.vertex_count()];
    let mut cyclic_order = Vec::new();
    for &first in &ordered {
        let mut path = vec![pole_u];
        let (mut prev, mut cur) = (pole_u, first);
        while inside(cur) {
            if used[cur] {
                return violation(format!("vertex {cur} lies on two pole paths"));
            }
            used[cur] = true;
            path.push(cur);
            let next = g.neighbors(cur).find(|&x| x != prev).unwrap();
            prev = cur;
            cur = next;
            if path.len() > 4 {
                return violation(format!("pole path from {first} is too long"));
            }
        }
        if cur != pole_v {
            return violation(format!(
                "path from {first} ends at {cur}, not at the other pole"
            ));
        }
        path.push(cur);
        if !(3..=4).contains(&path.len()) {
            return violation(format!("pole path {path:?} has length {}", path.len() - 1));
        }
        cyclic_order.push(path);
    }
    if interior.iter().any(|&w| !used[w]) {
        return violation("some interior vertex lies on no pole path".into());
    }
    let m = cyclic_order.len();
    for (i, path) in cyclic_order.iter().enumerate() {
        let want = if i % 2 == 0 { 4 } else { 3 };
        if path.len() != want || m % 2 == 0 {
            let lengths: Vec<usize> = cyclic_order.iter().map(|p| p.len() - 1).collect();
            return violation(format!(
                "path lengths {lengths:?} do not alternate 3, 2, ..., 3"
            ));
        }
    }
    let paths3: Vec<Vec<usize>> = cyclic_order
        .iter()
        .filter(|p| p.len() == 4)
        .cloned()
        .collect();
    let paths2: Vec<Vec<usize>> = cyclic_order
        .iter()
        .filter(|p| p.len() == 3)
        .cloned()
        .collect();
    Ok(FourCycleDecomposition {
        cycle: c.clone(),
        pole_u,
        pole_v,
        k: paths3.len(),
        paths3,
        paths2,
        cyclic_order,
    })
}
