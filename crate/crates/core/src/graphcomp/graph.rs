use std::collections::BTreeSet;
use std::fmt;

use super::GraphError;

/// A set of vertices `0..universe`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSubset {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSubset {
    pub fn empty(universe: usize) -> Self {
        VertexSubset {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Panics if a vertex lies outside `0..universe`.
    pub fn from_vertices(universe: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Builds a subset from the low `universe` bits of `mask`.
    #[cfg(test)]
    pub(crate) fn from_mask(universe: usize, mask: u64) -> Self {
        let mut s = Self::empty(universe);
        if universe > 0 {
            s.words[0] = mask;
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside 0..{}", self.universe);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(|&v| self.contains(v))
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl LabeledGraph {
    pub fn edgeless(vertex_count: usize) -> Self {
        LabeledGraph {
            vertex_count,
            edges: BTreeSet::new(),
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    /// Rejects loops and out-of-range endpoints; repeated edges collapse.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Self::edgeless(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        for w in [u, v] {
            if w >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    vertex_count: self.vertex_count,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop { vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Ok(false);
        }
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adjacency[a];
            let pos = list.partition_point(|&x| x < b);
            list.insert(pos, b);
        }
        Ok(true)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// The subgraph induced by `vertices`, relabelled `0..len` in the given
    /// order.
    pub fn induced(&self, vertices: &[usize]) -> LabeledGraph {
        let mut index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut sub = LabeledGraph::edgeless(vertices.len());
        for (u, v) in self.edges() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                sub.add_edge(index[u], index[v])
                    .expect("relabelled edge is valid");
            }
        }
        sub
    }

    /// Writes the edge-list file format: vertex count, then one `u v` per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LabeledGraph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

/// What went wrong on one line of an edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseProblem {
    MissingVertexCount,
    BadVertexCount(String),
    Malformed(String),
    OutOfRange { label: usize, vertex_count: usize },
    Loop { vertex: usize },
}

impl fmt::Display for ParseProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseProblem::MissingVertexCount => f.write_str("missing vertex count"),
            ParseProblem::BadVertexCount(s) => write!(f, "invalid vertex count {s:?}"),
            ParseProblem::Malformed(s) => write!(f, "expected \"u v\", found {s:?}"),
            ParseProblem::OutOfRange {
                label,
                vertex_count,
            } => write!(f, "vertex {label} outside 0..{vertex_count}"),
            ParseProblem::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
        }
    }
}

/// Parses the edge-list format.
///
/// The first nonblank, non-comment line holds the vertex count; every later
/// nonblank line holds one edge `u v`. Lines whose first non-space character
/// is `#` are comments. Both LF and CRLF line endings are accepted. Repeated
/// edges collapse.
pub fn parse_edge_list(text: &str) -> Result<LabeledGraph, GraphError> {
    let err = |line: usize, problem: ParseProblem| GraphError::Parse { line, problem };
    let mut graph: Option<LabeledGraph> = None;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(g) = graph.as_mut() else {
            let n: usize = line
                .parse()
                .map_err(|_| err(line_no, ParseProblem::BadVertexCount(line.to_string())))?;
            graph = Some(LabeledGraph::edgeless(n));
            continue;
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(err(line_no, ParseProblem::Malformed(line.to_string())));
        };
        let parse_label = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(line_no, ParseProblem::Malformed(line.to_string())))
        };
        let (u, v) = (parse_label(u)?, parse_label(v)?);
        match g.add_edge(u, v) {
            Ok(_) => {}
            Err(GraphError::VertexOutOfRange {
                vertex,
                vertex_count,
            }) => {
                return Err(err(
                    line_no,
                    ParseProblem::OutOfRange {
                        label: vertex,
                        vertex_count,
                    },
                ))
            }
            Err(GraphError::Loop { vertex }) => {
                return Err(err(line_no, ParseProblem::Loop { vertex }))
            }
            Err(other) => return Err(other),
        }
    }
    graph.ok_or_else(|| err(last_line.max(1), ParseProblem::MissingVertexCount))
}

/// True iff the subgraph induced by `subset` is connected.
pub fn is_connected(g: &LabeledGraph, subset: &VertexSubset) -> Result<bool, GraphError> {
    let Some(start) = subset.min() else {
        return Err(GraphError::EmptySubset);
    };
    let mut seen = VertexSubset::empty(g.vertex_count());
    seen.insert(start);
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if subset.contains(w) && !seen.contains(w) {
                seen.insert(w);
                reached += 1;
                stack.push(w);
            }
        }
    }
    Ok(reached == subset.len())
}

/// Vertex sets of the connected components, each sorted, ordered by least
/// vertex.
pub fn connected_components(g: &LabeledGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut comp = vec![root];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let g = parse_edge_list("3\n0 1\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        assert_eq!(
            parse_edge_list("2\n0 0\n"),
            Err(GraphError::Parse {
                line: 2,
                problem: ParseProblem::Loop { vertex: 0 }
            })
        );

        let g = parse_edge_list("4\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 0));
    }

    #[test]
    fn parse_comments_blank_lines_and_crlf() {
        let text = "# a triangle\r\n\r\n3\r\n  # edges follow\r\n0 1\r\n1\t2\r\n2 0\r\n1 0\r\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn parse_reports_line_numbers() {
        let e = parse_edge_list("3\n0 1\n\n1 5\n").unwrap_err();
        assert_eq!(
            e,
            GraphError::Parse {
                line: 4,
                problem: ParseProblem::OutOfRange {
                    label: 5,
                    vertex_count: 3
                }
            }
        );
        assert!(e.to_string().contains("line 4"));

        let e = parse_edge_list("3\n0 1 2\n").unwrap_err();
        assert!(matches!(
            e,
            GraphError::Parse {
                line: 2,
                problem: ParseProblem::Malformed(_)
            }
        ));
        let e = parse_edge_list("x\n").unwrap_err();
        assert!(matches!(
            e,
            GraphError::Parse {
                line: 1,
                problem: ParseProblem::BadVertexCount(_)
            }
        ));
        let e = parse_edge_list("# nothing\n\n").unwrap_err();
        assert!(matches!(
            e,
            GraphError::Parse {
                problem: ParseProblem::MissingVertexCount,
                ..
            }
        ));
        let e = parse_edge_list("3\n0 -1\n").unwrap_err();
        assert!(matches!(
            e,
            GraphError::Parse {
                line: 2,
                problem: ParseProblem::Malformed(_)
            }
        ));
    }

    #[test]
    fn edge_list_round_trips() {
        let g = LabeledGraph::new(5, [(3, 1), (0, 4), (2, 1)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "5\n0 4\n1 2\n1 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn connectivity_examples() {
        let path = LabeledGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        let ends = VertexSubset::from_vertices(3, [0, 2]);
        assert!(!is_connected(&path, &ends).unwrap());
        assert!(is_connected(&path, &VertexSubset::from_vertices(3, [2])).unwrap());
        let tri = LabeledGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(is_connected(&tri, &VertexSubset::full(3)).unwrap());
        assert_eq!(
            is_connected(&tri, &VertexSubset::empty(3)),
            Err(GraphError::EmptySubset)
        );
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(
            LabeledGraph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 2,
                vertex_count: 2
            })
        );
        assert_eq!(
            LabeledGraph::new(2, [(1, 1)]),
            Err(GraphError::Loop { vertex: 1 })
        );
        let mut g = LabeledGraph::edgeless(3);
        assert!(g.add_edge(0, 1).unwrap());
        assert!(!g.add_edge(1, 0).unwrap());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn components_and_induced() {
        let g = LabeledGraph::new(6, [(0, 3), (3, 5), (1, 2)]).unwrap();
        assert_eq!(
            connected_components(&g),
            vec![vec![0, 3, 5], vec![1, 2], vec![4]]
        );
        let sub = g.induced(&[5, 3, 1]);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn subset_display_and_bits() {
        let s = VertexSubset::from_vertices(70, [1, 65, 3]);
        assert_eq!(s.to_string(), "{1,3,65}");
        assert_eq!(s.len(), 3);
        assert!(s.contains(65) && !s.contains(64));
        assert_eq!(VertexSubset::from_mask(4, 0b1010).to_string(), "{1,3}");
    }
}
