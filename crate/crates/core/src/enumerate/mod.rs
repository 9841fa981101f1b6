//! Exhaustive generation of pentagulations up to a vertex bound.
//!
//! Graphs are grown one pentagon at a time from a single face, keeping a
//! disk with a simple boundary at every step, and closed into a sphere when
//! the boundary is a 5-cycle. Canonical augmentation keeps exactly one
//! representative per isomorphism class of plane embeddings, where mirror
//! images count as the same class.
//!
//! The search tree is cut at a fixed depth and the resulting subtrees are
//! explored in parallel. Results are sorted by order and canonical code, so
//! output does not depend on the number of workers.

mod patch;
mod resume;
mod verify;

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::{diameter, girth, max_degree};
use crate::plane::PlaneGraph;
use patch::{children, closing_cost, Child, Patch};

pub use verify::{verify_graphs, verify_theorems, TallyWitness, TheoremTally, VerificationReport};

/// Largest `max_n` accepted unless the caller raises the cap.
pub const DEFAULT_CAP: usize = 17;

const FRONTIER_DEPTH: usize = 4;

/// Output filters. Every set field must hold for a graph to be reported.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filters {
    pub diameter: Option<usize>,
    pub girth_min: Option<usize>,
    pub delta_min: Option<usize>,
}

impl Filters {
    pub fn accepts(&self, g: &PlaneGraph) -> bool {
        if let Some(d) = self.delta_min {
            if max_degree(g) < d {
                return false;
            }
        }
        if let Some(m) = self.girth_min {
            if girth(g).map_or(true, |x| x < m) {
                return false;
            }
        }
        if let Some(d) = self.diameter {
            if diameter(g) != d {
                return false;
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationConfig {
    pub max_n: usize,
    pub filters: Filters,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    pub cap: usize,
}

impl EnumerationConfig {
    pub fn new(max_n: usize) -> Self {
        Self {
            max_n,
            filters: Filters::default(),
            jobs: 0,
            cap: DEFAULT_CAP,
        }
    }

    pub fn with_filters(mut self, filters: Filters) -> Self {
        self.filters = filters;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    fn check(&self) -> Result<()> {
        if self.max_n > self.cap {
            return Err(Error::CapExceeded {
                max_n: self.max_n,
                cap: self.cap,
            });
        }
        Ok(())
    }

    fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?;
        Ok(pool.install(f))
    }
}

/// Every pentagulation with at most `cfg.max_n` vertices passing the
/// filters, in canonical form, sorted by order and then canonical code.
pub fn enumerate_pentagulations(cfg: &EnumerationConfig) -> Result<Vec<PlaneGraph>> {
    cfg.check()?;
    let all = cfg.install(|| Search::new(cfg.max_n).run_all())?;
    Ok(finish(all, &cfg.filters))
}

/// Like [`enumerate_pentagulations`], but records finished subtrees in
/// `state` and skips them when the same file is passed again.
pub fn enumerate_resumable(cfg: &EnumerationConfig, state: &Path) -> Result<Vec<PlaneGraph>> {
    cfg.check()?;
    let all = cfg.install(|| resume::run(&Search::new(cfg.max_n), state))??;
    Ok(finish(all, &cfg.filters))
}

/// Number of graphs of each order up to `max_n`, without filters.
pub fn count_by_order(graphs: &[PlaneGraph]) -> std::collections::BTreeMap<usize, usize> {
    let mut out = std::collections::BTreeMap::new();
    for g in graphs {
        *out.entry(g.vertex_count()).or_insert(0) += 1;
    }
    out
}

fn finish(mut all: Vec<(Vec<u32>, PlaneGraph)>, filters: &Filters) -> Vec<PlaneGraph> {
    all.sort_by(|a, b| a.0.cmp(&b.0));
    all.into_par_iter()
        .filter(|(_, g)| filters.accepts(g))
        .map(|(_, g)| g)
        .collect()
}

pub(crate) struct Search {
    max_n: usize,
    cost: Vec<usize>,
}

impl Search {
    pub fn new(max_n: usize) -> Self {
        Self {
            max_n,
            cost: closing_cost(3 * max_n + 8),
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Spheres found above the cut and the disks at the cut, in search order.
    pub fn frontier(&self) -> (Vec<(Vec<u32>, PlaneGraph)>, Vec<Patch>) {
        let mut spheres = Vec::new();
        let mut level = vec![Patch::root()];
        for _ in 0..FRONTIER_DEPTH {
            let mut next = Vec::new();
            for p in &level {
                for c in children(p, self.max_n, &self.cost) {
                    match c {
                        Child::Disk(d) => next.push(d),
                        Child::Sphere { graph, code } => spheres.push((code, graph)),
                    }
                }
            }
            level = next;
        }
        (spheres, level)
    }

    pub fn subtree(&self, p: &Patch, out: &mut Vec<(Vec<u32>, PlaneGraph)>) {
        for c in children(p, self.max_n, &self.cost) {
            match c {
                Child::Disk(d) => self.subtree(&d, out),
                Child::Sphere { graph, code } => out.push((code, graph)),
            }
        }
    }

    fn run_all(&self) -> Vec<(Vec<u32>, PlaneGraph)> {
        let (mut spheres, level) = self.frontier();
        let below: Vec<Vec<_>> = level
            .par_iter()
            .map(|p| {
                let mut out = Vec::new();
                self.subtree(p, &mut out);
                out
            })
            .collect();
        spheres.extend(below.into_iter().flatten());
        spheres
    }
}
