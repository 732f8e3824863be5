//! Compositions of labeled graphs.
//!
//! A composition of a graph `G` is a partition of its vertex set into blocks
//! that each induce a connected subgraph. Since the induced subgraph on a
//! block is unique, a composition is identified with its vertex partition and
//! `C(G)` counts those partitions.
//!
//! The general counter is a subset dynamic program, exponential in the vertex
//! count and guarded by a cap. [`reduce_and_count`] first splits the graph
//! into blocks, where counts multiply, so large graphs with small blocks stay
//! cheap. Closed forms for paths, trees, complete graphs, `K_n` minus an edge,
//! cycles and ladders live in [`family`].

use thiserror::Error;

mod count;
pub mod family;
mod graph;
pub mod random;
mod reduce;

pub use count::{
    count_compositions_graph, count_compositions_graph_with_cap, enumerate_graph_compositions,
    GraphComposition, DEFAULT_CAP, MAX_CAP, ORACLE_MAX_VERTICES,
};
pub use family::{build_family, family_count, ladder_binet, GraphFamily};
pub use graph::{
    connected_components, is_connected, parse_edge_list, LabeledGraph, ParseProblem, VertexSubset,
};
pub use reduce::{
    block_decomposition, reduce_and_count, reduce_and_count_with_cap, BlockDecomposition,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {problem}")]
    Parse { line: usize, problem: ParseProblem },
    #[error("vertex {vertex} outside 0..{vertex_count}")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("connectivity of an empty vertex subset is undefined")]
    EmptySubset,
    #[error(
        "graph has {vertices} vertices, above the subset-DP cap of {cap}; \
         raise --cap or split the graph with reduce_and_count"
    )]
    CapExceeded { vertices: usize, cap: usize },
    #[error("cap {cap} exceeds the supported maximum of {max}")]
    InvalidCap { cap: usize, max: usize },
    #[error("explicit enumeration is limited to {max} vertices, graph has {vertices}")]
    OracleTooLarge { vertices: usize, max: usize },
    #[error("{family} graphs need n >= {min}, got {n}")]
    BelowFamilyMinimum {
        family: &'static str,
        n: u64,
        min: u64,
    },
}
