//! Acyclic orientations minimizing the maximum indegree via min-degree
//! stripping: repeatedly remove a minimum-degree vertex and orient its
//! remaining edges into it. The peak removal degree equals the graph's
//! degeneracy and is the optimum over all acyclic orientations.

use std::collections::BTreeSet;

use crate::graph::{Orientation, UndirectedGraph, VertexId};

/// Removal order produced by stripping plus the peak indegree it creates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrippingOrder {
    pub order: Vec<VertexId>,
    pub peak: usize,
}

/// Strips `g` to an acyclic orientation with minimum possible maximum
/// indegree. Ties among minimum-degree vertices break to the lowest id, so
/// the output is reproducible. Bucket queue over remaining degrees.
pub fn stripping(g: &UndirectedGraph) -> (StrippingOrder, Orientation<'_>) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut buckets: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); g.max_degree() + 1];
    for v in 0..n {
        buckets[deg[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut position = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut peak = 0;
    let mut cur = 0;
    for step in 0..n {
        while buckets[cur].is_empty() {
            cur += 1;
        }
        let v = *buckets[cur].iter().next().expect("bucket not empty");
        buckets[cur].remove(&v);
        peak = peak.max(cur);
        removed[v] = true;
        position[v] = step;
        order.push(v);
        for &(_, w) in g.incidence(v) {
            if !removed[w] {
                buckets[deg[w]].remove(&w);
                deg[w] -= 1;
                buckets[deg[w]].insert(w);
                // parallel edges can drop a neighbor several buckets at once
                cur = cur.min(deg[w]);
            }
        }
    }
    // each edge points at whichever endpoint was removed first
    let head = g
        .edges()
        .iter()
        .map(|&(u, v)| if position[u] < position[v] { u } else { v })
        .collect();
    let o = Orientation::from_heads(g, head).expect("endpoints are valid heads");
    debug_assert!(verify_acyclic(&o));
    debug_assert_eq!(o.max_indegree(), peak);
    (StrippingOrder { order, peak }, o)
}

/// True iff the orientation admits a topological order (Kahn peeling).
pub fn verify_acyclic(o: &Orientation<'_>) -> bool {
    let n = o.graph().n();
    let mut indeg = o.indegrees().to_vec();
    let mut queue: Vec<VertexId> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop() {
        seen += 1;
        for (_, h) in o.out_arcs(v) {
            indeg[h] -= 1;
            if indeg[h] == 0 {
                queue.push(h);
            }
        }
    }
    seen == n
}

/// True iff stripping peaks at indegree at most `t` (equivalently, every
/// nonempty subgraph has a vertex of degree at most `t`).
pub fn is_t_strippable(g: &UndirectedGraph, t: usize) -> bool {
    stripping(g).0.peak <= t
}
