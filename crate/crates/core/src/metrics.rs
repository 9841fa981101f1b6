//! Distances, eccentricities, diameter, girth and degrees.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane::PlaneGraph;

/// Breadth-first distances from one source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceTable {
    pub source: usize,
    pub dist: Vec<usize>,
}

impl DistanceTable {
    pub fn eccentricity(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// Vertices at distance exactly `i` from the source.
    pub fn shell(&self, i: usize) -> Vec<usize> {
        (0..self.dist.len())
            .filter(|&u| self.dist[u] == i)
            .collect()
    }
}

pub fn bfs(g: &PlaneGraph, v: usize) -> Result<DistanceTable> {
    g.check_vertex(v)?;
    Ok(DistanceTable {
        source: v,
        dist: bfs_dist(g, v),
    })
}

pub(crate) fn bfs_dist(g: &PlaneGraph, v: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs distances, row `v` holding distances from `v`.
pub fn distance_matrix(g: &PlaneGraph) -> Vec<Vec<usize>> {
    (0..g.vertex_count()).map(|v| bfs_dist(g, v)).collect()
}

pub fn diameter(g: &PlaneGraph) -> usize {
    (0..g.vertex_count())
        .map(|v| bfs_dist(g, v).into_iter().max().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

/// Length of a shortest cycle.
///
/// Runs a breadth-first search from every vertex; each non-tree edge `uw`
/// closes a walk of length `d(u) + d(w) + 1`, and the minimum over all
/// sources is the girth.
pub fn girth(g: &PlaneGraph) -> Result<usize> {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Err(Error::Acyclic)
    } else {
        Ok(best)
    }
}

pub fn max_degree(g: &PlaneGraph) -> usize {
    (0..g.vertex_count())
        .map(|v| g.degree(v))
        .max()
        .unwrap_or(0)
}
