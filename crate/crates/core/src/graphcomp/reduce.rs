use super::count::{count_compositions_graph_with_cap, DEFAULT_CAP};
use super::graph::LabeledGraph;
use super::GraphError;
use crate::exactnum::BigCount;

/// A graph split into its blocks (maximal biconnected pieces).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Blocks with at least two edges, each relabelled `0..len`.
    pub blocks: Vec<LabeledGraph>,
    /// Original vertex labels of each entry in `blocks`.
    pub block_vertices: Vec<Vec<usize>>,
    /// Single-edge blocks.
    pub bridges: Vec<(usize, usize)>,
    /// Vertices with no incident edge.
    pub isolated: Vec<usize>,
}

/// Splits `g` at connected components, cut vertices and bridges.
///
/// Uses Tarjan's edge-stack algorithm, run iteratively so deep paths do not
/// exhaust the call stack.
pub fn block_decomposition(g: &LabeledGraph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut disc: Vec<Option<usize>> = vec![None; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut isolated = Vec::new();

    for root in 0..n {
        if disc[root].is_some() {
            continue;
        }
        if g.neighbors(root).is_empty() {
            isolated.push(root);
            disc[root] = Some(timer);
            timer += 1;
            continue;
        }
        disc[root] = Some(timer);
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbour index)
        let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(frame) = frames.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if let Some(&w) = g.neighbors(v).get(frame.2) {
                frame.2 += 1;
                if w == parent {
                    continue;
                }
                match disc[w] {
                    None => {
                        edge_stack.push((v, w));
                        disc[w] = Some(timer);
                        low[w] = timer;
                        timer += 1;
                        frames.push((w, v, 0));
                    }
                    Some(dw) if dw < disc[v].unwrap() => {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(dw);
                    }
                    Some(_) => {}
                }
                continue;
            }
            frames.pop();
            if let Some(&(u, _, _)) = frames.last() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u].unwrap() {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == (u, v) {
                            break;
                        }
                    }
                    raw_blocks.push(block);
                }
            }
        }
    }

    let mut out = BlockDecomposition {
        blocks: Vec::new(),
        block_vertices: Vec::new(),
        bridges: Vec::new(),
        isolated,
    };
    for edges in raw_blocks {
        if let [(u, v)] = edges[..] {
            out.bridges.push((u.min(v), u.max(v)));
            continue;
        }
        let mut vertices: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        out.blocks.push(g.induced(&vertices));
        out.block_vertices.push(vertices);
    }
    out.bridges.sort_unstable();
    out
}

/// `C(G)` via multiplicativity, with the default cap on each block.
pub fn reduce_and_count(g: &LabeledGraph) -> Result<BigCount, GraphError> {
    reduce_and_count_with_cap(g, DEFAULT_CAP)
}

/// `C(G)` as the product of block counts. Pieces that are disjoint or share
/// one vertex multiply, and each bridge doubles the count, so only the
/// biconnected blocks need the subset dynamic program.
pub fn reduce_and_count_with_cap(g: &LabeledGraph, cap: usize) -> Result<BigCount, GraphError> {
    let parts = block_decomposition(g);
    let mut total = BigCount::pow2(parts.bridges.len() as u64);
    for block in &parts.blocks {
        total *= &count_compositions_graph_with_cap(block, cap)?;
    }
    Ok(total)
}
