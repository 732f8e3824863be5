use rand::seq::SliceRandom;
use rand::Rng;

use super::graph::LabeledGraph;

/// A uniformly random labeled tree on `n` vertices, decoded from a random
/// Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> LabeledGraph {
    if n < 2 {
        return LabeledGraph::edgeless(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &code {
        degree[v] += 1;
    }
    let mut g = LabeledGraph::edgeless(n);
    for &v in &code {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf exists");
        g.add_edge(leaf, v).expect("Prüfer edge is valid");
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    g.add_edge(last[0], last[1])
        .expect("final Prüfer edge is valid");
    g
}

/// A random connected graph: a random spanning tree plus each remaining pair
/// with probability `numer / denom`.
pub fn random_connected_graph<R: Rng + ?Sized>(
    n: usize,
    (numer, denom): (u32, u32),
    rng: &mut R,
) -> LabeledGraph {
    let mut g = random_tree(n, rng);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_ratio(numer, denom) {
                g.add_edge(u, v).expect("valid pair");
            }
        }
    }
    g
}

/// An Erdős–Rényi graph `G(n, p)` with `p = numer / denom`.
pub fn random_graph<R: Rng + ?Sized>(
    n: usize,
    (numer, denom): (u32, u32),
    rng: &mut R,
) -> LabeledGraph {
    let mut g = LabeledGraph::edgeless(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_ratio(numer, denom) {
                g.add_edge(u, v).expect("valid pair");
            }
        }
    }
    g
}

/// Adds one uniformly chosen missing edge, if any remain.
pub fn add_random_edge<R: Rng + ?Sized>(
    g: &mut LabeledGraph,
    rng: &mut R,
) -> Option<(usize, usize)> {
    let n = g.vertex_count();
    let missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let &(u, v) = missing.choose(rng)?;
    g.add_edge(u, v).expect("missing edge is valid");
    Some((u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcomp::graph::connected_components;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trees_are_spanning_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 0..20 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.edge_count(), n.saturating_sub(1));
            assert!(connected_components(&t).len() <= 1);
        }
    }

    #[test]
    fn connected_graphs_are_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..12 {
            let g = random_connected_graph(n, (3, 10), &mut rng);
            assert_eq!(connected_components(&g).len(), 1);
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = random_graph(9, (2, 5), &mut ChaCha8Rng::seed_from_u64(3));
        let b = random_graph(9, (2, 5), &mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(a, b);
    }

    #[test]
    fn add_edge_until_complete() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut g = LabeledGraph::edgeless(4);
        for _ in 0..6 {
            assert!(add_random_edge(&mut g, &mut rng).is_some());
        }
        assert_eq!(add_random_edge(&mut g, &mut rng), None);
    }
}
