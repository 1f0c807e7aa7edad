//! Named graph builders, exhaustive small-graph enumeration and seeded
//! random generators. This is the instance supply for the oracle-backed test
//! suites and the benchmarks.

use rand::Rng;

use crate::graph::{UndirectedGraph, VertexId};
use crate::strong::find_bridge;

pub fn cycle(n: usize) -> UndirectedGraph {
    assert!(n >= 3, "a simple cycle needs at least 3 vertices");
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    UndirectedGraph::new(n, edges).expect("cycle edges are valid")
}

pub fn complete(n: usize) -> UndirectedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    UndirectedGraph::new(n, edges).expect("complete graph edges are valid")
}

pub fn path(n: usize) -> UndirectedGraph {
    let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    UndirectedGraph::new(n, edges).expect("path edges are valid")
}

/// Star with `leaves` leaves around center 0.
pub fn star(leaves: usize) -> UndirectedGraph {
    let edges = (1..=leaves).map(|v| (0, v)).collect();
    UndirectedGraph::new(leaves + 1, edges).expect("star edges are valid")
}

/// Two vertices joined by `count` parallel edges.
pub fn parallel_edges(count: usize) -> UndirectedGraph {
    UndirectedGraph::new(2, vec![(0, 1); count]).expect("parallel edges are valid")
}

/// Two triangles sharing vertex 0 (the bowtie graph).
pub fn bowtie() -> UndirectedGraph {
    UndirectedGraph::new(5, vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        .expect("bowtie edges are valid")
}

pub fn is_connected(g: &UndirectedGraph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut count = 1;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for &(_, w) in g.incidence(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Every labeled simple connected graph with `1..=max_n` vertices.
pub fn all_connected_graphs(max_n: usize) -> Vec<UndirectedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        for mask in 0u32..(1u32 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = UndirectedGraph::new(n, edges).expect("enumerated edges are valid");
            if is_connected(&g) {
                out.push(g);
            }
        }
    }
    out
}

/// Every labeled simple connected bridgeless graph with `1..=max_n` vertices.
pub fn all_bridgeless_connected_graphs(max_n: usize) -> Vec<UndirectedGraph> {
    all_connected_graphs(max_n)
        .into_iter()
        .filter(|g| find_bridge(g).is_none())
        .collect()
}

/// Random multigraph on `n` vertices with exactly `m` edges (no self-loops,
/// parallel edges allowed). May be disconnected.
pub fn random_multigraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> UndirectedGraph {
    assert!(n >= 2 || m == 0);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = rng.random_range(0..n);
        let d = rng.random_range(0..n - 1);
        edges.push((u, (u + 1 + d) % n));
    }
    UndirectedGraph::new(n, edges).expect("random edges are valid")
}

/// Random connected bridgeless multigraph: a spanning cycle (or a doubled
/// edge for n = 2) plus `extra` random chords. Every edge lies on a cycle,
/// so the result is always bridgeless.
pub fn random_bridgeless<R: Rng>(rng: &mut R, n: usize, extra: usize) -> UndirectedGraph {
    assert!(n >= 2);
    let mut edges: Vec<(VertexId, VertexId)> = if n == 2 {
        vec![(0, 1), (0, 1)]
    } else {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    };
    for _ in 0..extra {
        let u = rng.random_range(0..n);
        let d = rng.random_range(0..n - 1);
        edges.push((u, (u + 1 + d) % n));
    }
    let g = UndirectedGraph::new(n, edges).expect("random edges are valid");
    debug_assert!(is_connected(&g) && find_bridge(&g).is_none());
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts_are_the_known_ones() {
        // labeled connected simple graphs: 1, 1, 4, 38, 728 for n = 1..=5
        let per_n = |n: usize| {
            all_connected_graphs(n)
                .iter()
                .filter(|g| g.n() == n)
                .count()
        };
        assert_eq!(per_n(1), 1);
        assert_eq!(per_n(2), 1);
        assert_eq!(per_n(3), 4);
        assert_eq!(per_n(4), 38);
        assert_eq!(per_n(5), 728);
    }

    #[test]
    fn bridgeless_filter_keeps_cycles_only() {
        let gs = all_bridgeless_connected_graphs(3);
        // K1 (trivially bridgeless) and the triangle
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0].n(), 1);
        assert_eq!(gs[1].m(), 3);
    }

    #[test]
    fn random_bridgeless_is_bridgeless() {
        use rand::rngs::StdRng;
        use rand::SeedableRng;
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..50 {
            let n = rng.random_range(2..=6);
            let extra = rng.random_range(0..5);
            let g = random_bridgeless(&mut rng, n, extra);
            assert!(is_connected(&g));
            assert!(find_bridge(&g).is_none());
        }
    }
}
