use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed instance: {0}")]
    Malformed(String),

    #[error("vertex id {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("part id {part} of vertex {vertex} is not below r = {r}")]
    PartOutOfRange { vertex: usize, part: usize, r: usize },

    #[error("same-partite edge ({0}, {1})")]
    SamePartiteEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid generator parameters: {0}")]
    InvalidSeedSpec(String),

    #[error("ordering is not a bijection on 0..{n}: {reason}")]
    InvalidOrdering { n: usize, reason: String },

    #[error("ordering covers {ordering} vertices but the graph has {graph}")]
    SizeMismatch { graph: usize, ordering: usize },

    #[error("model has {model} intervals but the graph has {graph} vertices")]
    MissingInterval { graph: usize, model: usize },

    #[error("invalid interval for vertex {vertex}: {reason}")]
    InvalidInterval { vertex: usize, reason: String },

    #[error("bipartite-only operation (graph declares r = {0})")]
    BipartiteOnly(usize),

    #[error("instance above oracle cap (n = {n}, cap = {cap})")]
    AboveOracleCap { n: usize, cap: usize },

    #[error("instance too large for ordering search (n = {n}, limit = {limit})")]
    AboveSearchLimit { n: usize, limit: usize },

    #[error("certificate rejected: {0}")]
    CertificateRejected(String),
}
