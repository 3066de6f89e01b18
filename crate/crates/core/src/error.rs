use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("total domination is undefined: vertex {vertex} is isolated")]
    IsolatedVertex { vertex: usize },

    #[error("hyperedge {index} is empty")]
    EmptyHyperedge { index: usize },

    #[error("hypergraph is not Sperner: hyperedge {contained} is contained in hyperedge {container}")]
    NotSperner { contained: usize, container: usize },

    #[error("graph has {n} vertices, above the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("domination number is {actual}, expected {expected}")]
    GammaMismatch { expected: usize, actual: usize },

    #[error("lexicographic product is trivial: factors have {g} and {h} vertices")]
    TrivialProduct { g: usize, h: usize },

    #[error("vertex {vertex} is not a member of the set")]
    NotAMember { vertex: usize },

    #[error("{0}")]
    InvalidArgument(String),
}
