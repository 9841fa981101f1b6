use thiserror::Error;

/// Errors produced by graph construction and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("expected {expected} rotation lists, found {found}")]
    RotationCountMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} lists neighbor {neighbor}, which is out of range")]
    NeighborOutOfRange { vertex: usize, neighbor: usize },
    #[error("vertex {0} lists itself as a neighbor")]
    SelfLoop(usize),
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    DuplicateNeighbor { vertex: usize, neighbor: usize },
    #[error("vertex {from} lists {to}, but {to} does not list {from}")]
    AsymmetricRotation { from: usize, to: usize },
    #[error("the underlying graph is disconnected")]
    Disconnected,
    #[error("rotation system does not embed in the sphere (n - e + f = {euler})")]
    NotSpherical { euler: i64 },

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("face {0} is out of range")]
    FaceOutOfRange(usize),
    #[error("graph has no cycle")]
    Acyclic,

    #[error("cycle length {0} is outside the supported range 3..=8")]
    LengthOutOfRange(usize),
    #[error("not a simple cycle of the graph: {0}")]
    NotACycle(String),
    #[error("the cycle does not dominate the selected region")]
    NotDominated,
    #[error("dominated region has no alternating path structure: {0}")]
    StructureViolation(String),
    #[error("graph is not a pentagulation")]
    NotPentagulation,

    #[error("chord length {0} is outside the supported range 1..=4")]
    ChordLengthOutOfRange(usize),
    #[error("cycles under chords exist only for chords of length 1 or 2 (got {0})")]
    UnsupportedChordLength(usize),
    #[error("vertex {vertex} does not have a unique neighbor next to the chord center")]
    NonUniqueShellNeighbor { vertex: usize },
    #[error("invalid chord: {0}")]
    InvalidChord(String),

    #[error("unknown named graph {0:?}")]
    UnknownName(String),
    #[error("the extremal family needs odd maximum degree (got {0})")]
    EvenDelta(usize),
    #[error("the extremal family needs maximum degree at least 3 (got {0})")]
    DeltaTooSmall(usize),

    #[error("max_n = {max_n} exceeds the enumeration cap {cap}")]
    CapExceeded { max_n: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("resume file does not match this run: {0}")]
    ResumeMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
