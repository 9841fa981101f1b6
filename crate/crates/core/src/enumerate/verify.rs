//! Runs the per-graph lemma suite over an enumeration and tallies results.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{count_by_order, enumerate_pentagulations, EnumerationConfig, Filters};
use crate::error::Result;
use crate::plane::PlaneGraph;
use crate::regions::{lemma_suite, LemmaReport, Witness};
use crate::SCHEMA_VERSION;

const CHUNK: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TallyWitness {
    pub graph: PlaneGraph,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremTally {
    pub name: String,
    /// Graphs the check applied to.
    pub graphs_checked: usize,
    /// Cycles, chords or vertices examined across those graphs.
    pub instances_checked: usize,
    /// Graphs with at least one violation.
    pub violations: usize,
    pub witness: Option<TallyWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub max_n: usize,
    pub filters: Filters,
    pub graphs_checked: usize,
    pub by_order: BTreeMap<usize, usize>,
    pub diameter3: usize,
    pub girth5_diameter3: usize,
    pub max_degree_girth5_diameter3: Option<usize>,
    pub tallies: Vec<TheoremTally>,
    /// Set when checking stopped early at the first violating graph.
    pub halted: bool,
}

impl VerificationReport {
    pub fn tally(&self, name: &str) -> Option<&TheoremTally> {
        self.tallies.iter().find(|t| t.name == name)
    }

    pub fn is_clean(&self) -> bool {
        self.tallies.iter().all(|t| t.violations == 0)
    }
}

/// Enumerates under `cfg` and checks every reported graph.
pub fn verify_theorems(cfg: &EnumerationConfig) -> Result<VerificationReport> {
    let graphs = enumerate_pentagulations(cfg)?;
    cfg.install(|| verify_graphs(&graphs, cfg))?
}

/// Checks `graphs` in order, stopping after the first chunk that contains
/// a violation.
pub fn verify_graphs(graphs: &[PlaneGraph], cfg: &EnumerationConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport {
        schema_version: SCHEMA_VERSION,
        max_n: cfg.max_n,
        filters: cfg.filters,
        graphs_checked: 0,
        by_order: count_by_order(graphs),
        diameter3: 0,
        girth5_diameter3: 0,
        max_degree_girth5_diameter3: None,
        tallies: Vec::new(),
        halted: false,
    };
    for chunk in graphs.chunks(CHUNK) {
        let reports: Vec<LemmaReport> = chunk
            .par_iter()
            .map(|g| lemma_suite(g, 0))
            .collect::<Result<_>>()?;
        for (g, r) in chunk.iter().zip(&reports) {
            absorb(&mut report, g, r);
        }
        if !report.is_clean() {
            report.halted = report.graphs_checked < graphs.len();
            break;
        }
    }
    Ok(report)
}

fn absorb(report: &mut VerificationReport, g: &PlaneGraph, r: &LemmaReport) {
    report.graphs_checked += 1;
    if r.diameter == 3 {
        report.diameter3 += 1;
        if r.girth == 5 {
            report.girth5_diameter3 += 1;
            let m = report.max_degree_girth5_diameter3.get_or_insert(0);
            *m = (*m).max(r.max_degree);
        }
    }
    for c in &r.checks {
        let t = match report.tallies.iter_mut().position(|t| t.name == c.name) {
            Some(i) => &mut report.tallies[i],
            None => {
                report.tallies.push(TheoremTally {
                    name: c.name.clone(),
                    graphs_checked: 0,
                    instances_checked: 0,
                    violations: 0,
                    witness: None,
                });
                report.tallies.last_mut().unwrap()
            }
        };
        if !c.applicable {
            continue;
        }
        t.graphs_checked += 1;
        t.instances_checked += c.checked;
        if c.violations > 0 {
            t.violations += 1;
            if t.witness.is_none() {
                t.witness = Some(TallyWitness {
                    graph: g.clone(),
                    witness: c.witness.clone(),
                });
            }
        }
    }
}
