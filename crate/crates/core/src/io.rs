//! Reading and writing graphs.
//!
//! Two formats are supported. JSON is `{"n":N,"rotations":[[...],...]}` on a
//! single line. The text format has one line per vertex listing its
//! neighbors in counterclockwise order, separated by single spaces. Both
//! writers end with a newline and reproduce their input byte for byte.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::plane::{build_graph, PlaneGraph};

/// Parses either format; input starting with `{` is read as JSON.
pub fn parse_graph(input: &str) -> Result<PlaneGraph> {
    if input.trim_start().starts_with('{') {
        from_json(input)
    } else {
        from_text(input)
    }
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    rotations: Vec<Vec<usize>>,
}

pub fn from_json(input: &str) -> Result<PlaneGraph> {
    let raw: RawGraph = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
    build_graph(raw.n, raw.rotations)
}

pub fn to_json(g: &PlaneGraph) -> String {
    let mut s = serde_json::to_string(g).expect("graph serializes");
    s.push('\n');
    s
}

pub fn from_text(input: &str) -> Result<PlaneGraph> {
    if input.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let body = input.strip_suffix('\n').unwrap_or(input);
    let mut rotations = Vec::new();
    for (lineno, line) in body.split('\n').enumerate() {
        let line = line.strip_suffix('\r').unwrap_or(line);
        let rot = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| {
                    Error::Parse(format!("line {}: bad vertex id {tok:?}", lineno + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rotations.push(rot);
    }
    build_graph(rotations.len(), rotations)
}

pub fn to_text(g: &PlaneGraph) -> String {
    let mut s = String::new();
    for rot in g.rotations() {
        let line: Vec<String> = rot.iter().map(usize::to_string).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}
