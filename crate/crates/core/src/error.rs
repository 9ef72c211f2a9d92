use thiserror::Error;

/// Errors raised by graph construction, parsing, solvers and constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("arcs ({0},{1}) and ({1},{0}) are both present")]
    SymmetricArcPair(usize, usize),
    #[error("duplicate arc ({0},{1})")]
    DuplicateArc(usize, usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("instance too large for exhaustive search: {free} free vertices exceed the limit of {limit}")]
    InstanceTooLarge { free: usize, limit: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tournament")]
    NotATournament,
    #[error("graph is not a cactus")]
    NotACactus,
    #[error("underlying graph is not a tree")]
    NotATree,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("labeling is not an isometric hypercube embedding")]
    LabelingNotIsometric,
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("stable side is not a maximal stable set (vertex {0} could join it)")]
    StableNotMaximal(usize),
    #[error("clique side needs at least two vertices")]
    CliqueTooSmall,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("invalid set cover instance: {0}")]
    InvalidInstance(String),
    #[error("set is not a geodetic set")]
    NotGeodetic,
    #[error("cycle is truly satisfactory and carries no certificate")]
    CycleIsTsc,
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
