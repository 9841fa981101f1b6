//! Resume journal for long enumerations.
//!
//! The file holds one JSON header line and then one line per finished
//! subtree. The frontier itself is recomputed on every run, so the header
//! only records enough to detect a mismatch.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::Path;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Search, FRONTIER_DEPTH};
use crate::error::{Error, Result};
use crate::plane::{build_graph, PlaneGraph};
use crate::SCHEMA_VERSION;

/// Canonical codes paired with their graphs.
type Coded = Vec<(Vec<u32>, PlaneGraph)>;

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
struct Header {
    schema_version: u32,
    max_n: usize,
    depth: usize,
    subtrees: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct Found {
    code: Vec<u32>,
    rotations: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct Record {
    index: usize,
    found: Vec<Found>,
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Io(e.to_string())
}

fn load(path: &Path, header: &Header) -> Result<HashMap<usize, Vec<Found>>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(HashMap::new()),
        Err(e) => return Err(io_err(e)),
    };
    let mut lines = text.lines().filter(|l| !l.trim().is_empty()).peekable();
    let Some(first) = lines.next() else {
        return Ok(HashMap::new());
    };
    let found: Header = serde_json::from_str(first).map_err(|e| Error::Parse(e.to_string()))?;
    if &found != header {
        return Err(Error::ResumeMismatch(format!(
            "file has {found:?}, run needs {header:?}"
        )));
    }
    let mut done = HashMap::new();
    while let Some(line) = lines.next() {
        match serde_json::from_str::<Record>(line) {
            Ok(r) if r.index < header.subtrees => {
                done.insert(r.index, r.found);
            }
            Ok(r) => {
                return Err(Error::ResumeMismatch(format!(
                    "subtree {} out of range",
                    r.index
                )))
            }
            // A torn final line from an interrupted run is dropped.
            Err(_) if lines.peek().is_none() => {}
            Err(e) => return Err(Error::Parse(e.to_string())),
        }
    }
    Ok(done)
}

fn rewrite(path: &Path, header: &Header, done: &HashMap<usize, Vec<Found>>) -> Result<()> {
    let tmp = path.with_extension("tmp");
    {
        let mut w = BufWriter::new(File::create(&tmp).map_err(io_err)?);
        writeln!(w, "{}", serde_json::to_string(header).unwrap()).map_err(io_err)?;
        let mut keys: Vec<_> = done.keys().copied().collect();
        keys.sort_unstable();
        for index in keys {
            let r = RecordRef {
                index,
                found: &done[&index],
            };
            writeln!(w, "{}", serde_json::to_string(&r).unwrap()).map_err(io_err)?;
        }
        w.flush().map_err(io_err)?;
    }
    fs::rename(&tmp, path).map_err(io_err)
}

#[derive(Serialize)]
struct RecordRef<'a> {
    index: usize,
    found: &'a [Found],
}

fn to_found(list: &[(Vec<u32>, PlaneGraph)]) -> Vec<Found> {
    list.iter()
        .map(|(code, g)| Found {
            code: code.clone(),
            rotations: g.rotations().to_vec(),
        })
        .collect()
}

fn from_found(list: Vec<Found>) -> Result<Coded> {
    list.into_iter()
        .map(|f| Ok((f.code, build_graph(f.rotations.len(), f.rotations)?)))
        .collect()
}

pub(super) fn run(search: &Search, path: &Path) -> Result<Coded> {
    let (mut spheres, level) = search.frontier();
    let header = Header {
        schema_version: SCHEMA_VERSION,
        max_n: search.max_n(),
        depth: FRONTIER_DEPTH,
        subtrees: level.len(),
    };
    let mut done = load(path, &header)?;
    rewrite(path, &header, &done)?;
    let journal = Mutex::new(OpenOptions::new().append(true).open(path).map_err(io_err)?);

    let fresh: Vec<Result<(usize, Coded)>> = level
        .par_iter()
        .enumerate()
        .filter(|(i, _)| !done.contains_key(i))
        .map(|(index, p)| {
            let mut out = Vec::new();
            search.subtree(p, &mut out);
            let line = serde_json::to_string(&Record {
                index,
                found: to_found(&out),
            })
            .unwrap();
            let mut f = journal.lock().unwrap();
            writeln!(f, "{line}")
                .and_then(|_| f.flush())
                .map_err(io_err)?;
            Ok((index, out))
        })
        .collect();

    let mut by_index: HashMap<usize, Vec<(Vec<u32>, PlaneGraph)>> = HashMap::new();
    for r in fresh {
        let (i, out) = r?;
        by_index.insert(i, out);
    }
    for (i, list) in done.drain() {
        by_index.insert(i, from_found(list)?);
    }
    for i in 0..level.len() {
        spheres.extend(by_index.remove(&i).unwrap_or_default());
    }
    Ok(spheres)
}
