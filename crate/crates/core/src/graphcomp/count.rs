use std::fmt;

use super::graph::{is_connected, LabeledGraph, VertexSubset};
use super::GraphError;
use crate::exactnum::BigCount;

/// Default vertex limit for the subset dynamic program.
pub const DEFAULT_CAP: usize = 24;

/// Largest cap accepted. Bitmasks are `u64` and `B_32 < 2^128`, so no
/// intermediate count can overflow below this.
pub const MAX_CAP: usize = 32;

/// Vertex limit for [`enumerate_graph_compositions`].
pub const ORACLE_MAX_VERTICES: usize = 10;

/// A partition of the vertex set into blocks that each induce a connected
/// subgraph. Blocks are ordered by least vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphComposition {
    blocks: Vec<VertexSubset>,
}

impl GraphComposition {
    pub fn blocks(&self) -> &[VertexSubset] {
        &self.blocks
    }
}

impl fmt::Display for GraphComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// `C(G)` with the default cap.
pub fn count_compositions_graph(g: &LabeledGraph) -> Result<BigCount, GraphError> {
    count_compositions_graph_with_cap(g, DEFAULT_CAP)
}

/// `C(G)`: the number of partitions of `V(G)` into blocks that each induce a
/// connected subgraph.
///
/// Subset dynamic program: `c(S) = Σ c(S \ T)` over connected `T ⊆ S`
/// containing the least vertex of `S`, with `c(∅) = 1`. Time is `O(3^n)` and
/// memory `O(2^n)`, so graphs above `cap` vertices are refused.
pub fn count_compositions_graph_with_cap(
    g: &LabeledGraph,
    cap: usize,
) -> Result<BigCount, GraphError> {
    if cap > MAX_CAP {
        return Err(GraphError::InvalidCap { cap, max: MAX_CAP });
    }
    let n = g.vertex_count();
    if n > cap {
        return Err(GraphError::CapExceeded { vertices: n, cap });
    }
    let connected = connected_masks(g);
    let full = (1u64 << n) - 1;
    let mut ways = vec![0u128; 1 << n];
    ways[0] = 1;
    for set in 1..=full {
        let low = set & set.wrapping_neg();
        let rest = set ^ low;
        let mut total = 0u128;
        let mut sub = rest;
        loop {
            let block = sub | low;
            if connected[block as usize] {
                total += ways[(set ^ block) as usize];
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        ways[set as usize] = total;
    }
    Ok(BigCount::from(ways[full as usize]))
}

// connected[S] for every S ⊆ V, built upward: S is connected iff it is a
// singleton or S \ {v} is connected and v has a neighbour in it for some v.
fn connected_masks(g: &LabeledGraph) -> Vec<bool> {
    let n = g.vertex_count();
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let mut connected = vec![false; 1 << n];
    for set in 1u64..(1u64 << n) {
        if set.is_power_of_two() {
            connected[set as usize] = true;
            continue;
        }
        let mut bits = set;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let without = set & !(1 << v);
            if connected[without as usize] && adj[v] & without != 0 {
                connected[set as usize] = true;
                break;
            }
        }
    }
    connected
}

/// Lists every composition of `g` by filtering all set partitions of its
/// vertices. Intended as a reference for small graphs.
pub fn enumerate_graph_compositions(g: &LabeledGraph) -> Result<Vec<GraphComposition>, GraphError> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(GraphError::OracleTooLarge {
            vertices: n,
            max: ORACLE_MAX_VERTICES,
        });
    }
    let mut out = Vec::new();
    // Restricted growth strings: labels[i] <= 1 + max(labels[..i]).
    let mut labels = vec![0usize; n];
    fn go(
        i: usize,
        blocks_used: usize,
        labels: &mut [usize],
        g: &LabeledGraph,
        out: &mut Vec<GraphComposition>,
    ) {
        let n = labels.len();
        if i == n {
            let mut blocks = vec![VertexSubset::empty(n); blocks_used];
            for (v, &b) in labels.iter().enumerate() {
                blocks[b].insert(v);
            }
            if blocks
                .iter()
                .all(|b| is_connected(g, b).expect("blocks are nonempty"))
            {
                out.push(GraphComposition { blocks });
            }
            return;
        }
        for b in 0..=blocks_used {
            labels[i] = b;
            go(i + 1, blocks_used.max(b + 1), labels, g, out);
        }
    }
    go(0, 0, &mut labels, g, &mut out);
    Ok(out)
}
