//! Path-reversal search for minimum-lexicographic orientations, plus the
//! reversal calculus: path reversals, weak reversals, cycle reversals, and
//! convex-cost evaluation.
//!
//! A directed u-to-v path is *reversible* when `indeg(u) < indeg(v) - 1`;
//! reversing it strictly improves the decreasing indegree sequence. The
//! search repeatedly reverses the reversible path ending at the vertex of
//! highest indegree until none remains, which is a lexicographic optimum.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{EdgeId, Orientation, UndirectedGraph, VertexId};

/// A directed path in an orientation; `arcs` chain head-to-tail from `start`
/// to `end`. An empty arc list is the trivial path at a single vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedPath {
    pub start: VertexId,
    pub end: VertexId,
    pub arcs: Vec<EdgeId>,
}

impl DirectedPath {
    pub fn trivial(v: VertexId) -> Self {
        Self {
            start: v,
            end: v,
            arcs: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

/// One iteration of a reversal algorithm: the reversed path ran from `start`
/// to `end`, whose indegree was `end_indegree` just before the reversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reversal {
    pub start: VertexId,
    pub end: VertexId,
    pub end_indegree: usize,
}

/// Starting orientation for the search: larger-id heads by default, or a
/// seeded uniformly random orientation.
pub fn arbitrary_orientation(g: &UndirectedGraph, seed: Option<u64>) -> Orientation<'_> {
    match seed {
        Some(s) => Orientation::random(g, s),
        None => Orientation::toward_larger(g),
    }
}

/// Reverses every arc of `p`, raising `indeg(start)` by one and lowering
/// `indeg(end)` by one. Panics if `p` is not a directed path in `o`.
pub fn reverse_path(o: &mut Orientation<'_>, p: &DirectedPath) {
    let mut cur = p.start;
    for &e in &p.arcs {
        assert_eq!(o.tail(e), cur, "arc {} does not chain at vertex {}", e, cur);
        cur = o.head(e);
    }
    assert_eq!(cur, p.end, "path does not end at {}", p.end);
    if p.arcs.is_empty() {
        assert_eq!(p.start, p.end, "trivial path must identify one vertex");
    }
    for &e in &p.arcs {
        o.flip(e);
    }
}

/// Finds a reversible path whose end vertex has the highest indegree among
/// all reversible-path endpoints, or `None` when no reversible path exists.
///
/// Candidate end vertices are scanned in decreasing indegree (ties by
/// ascending id); for each, a backward breadth-first search with neighbor
/// order by ascending vertex id returns the first qualifying source, so the
/// result is deterministic and the path is shortest.
pub fn find_reversible_path(o: &Orientation<'_>) -> Option<DirectedPath> {
    let n = o.graph().n();
    let deg = o.indegrees();
    let min_deg = deg.iter().copied().min().unwrap_or(0);
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_unstable_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    for &v in &order {
        if deg[v] < 2 || min_deg >= deg[v] - 1 {
            // ends are scanned in decreasing indegree, so no later v can work
            break;
        }
        if let Some(path) = backward_bfs(o, v, deg[v] - 1) {
            return Some(path);
        }
    }
    None
}

/// Backward BFS from `v`; returns a path from the first discovered vertex
/// with indegree strictly below `threshold` to `v`.
fn backward_bfs(o: &Orientation<'_>, v: VertexId, threshold: usize) -> Option<DirectedPath> {
    let n = o.graph().n();
    let deg = o.indegrees();
    let mut visited = vec![false; n];
    let mut parent: Vec<Option<EdgeId>> = vec![None; n];
    let mut queue = VecDeque::new();
    visited[v] = true;
    queue.push_back(v);
    while let Some(x) = queue.pop_front() {
        let mut preds: Vec<(VertexId, EdgeId)> = o.in_arcs(x).map(|(e, t)| (t, e)).collect();
        preds.sort_unstable();
        for (t, e) in preds {
            if visited[t] {
                continue;
            }
            visited[t] = true;
            parent[t] = Some(e);
            if deg[t] < threshold {
                let mut arcs = Vec::new();
                let mut cur = t;
                while cur != v {
                    let e = parent[cur].expect("parent chain reaches v");
                    arcs.push(e);
                    cur = o.head(e);
                }
                return Some(DirectedPath {
                    start: t,
                    end: v,
                    arcs,
                });
            }
            queue.push_back(t);
        }
    }
    None
}

/// Runs the reversal loop from the default orientation; the result admits no
/// reversible path and its indegree sequence is the lexicographic minimum
/// over all orientations. The trace records one entry per reversal.
pub fn path_reversal(g: &UndirectedGraph) -> (Orientation<'_>, Vec<Reversal>) {
    path_reversal_from(Orientation::toward_larger(g))
}

/// Same search from a caller-supplied starting orientation.
pub fn path_reversal_from(mut o: Orientation<'_>) -> (Orientation<'_>, Vec<Reversal>) {
    let m = o.graph().m();
    let mut trace = Vec::new();
    while let Some(p) = find_reversible_path(&o) {
        trace.push(Reversal {
            start: p.start,
            end: p.end,
            end_indegree: o.indegree(p.end),
        });
        reverse_path(&mut o, &p);
        assert!(
            trace.len() <= m,
            "internal error: more than m = {} reversals; the phase bound is violated",
            m
        );
    }
    o.debug_validate();
    (o, trace)
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("indegree mismatch at vertex {vertex}: {left} vs {right}")]
pub struct DegreeMismatch {
    pub vertex: VertexId,
    pub left: usize,
    pub right: usize,
}

/// Decomposes the arcs on which `o1` and `o2` disagree into arc-disjoint
/// directed cycles of `o1` (closed walks, Euler-style); reversing each cycle
/// in order transforms `o1` into `o2` exactly.
///
/// Requires the same underlying graph and identical per-vertex indegrees;
/// under those preconditions the difference digraph is Eulerian per
/// component and the peeling below always closes its walks.
pub fn cycle_reversal_sequence(
    o1: &Orientation<'_>,
    o2: &Orientation<'_>,
) -> Result<Vec<Vec<EdgeId>>, DegreeMismatch> {
    let g = o1.graph();
    assert_eq!(
        g,
        o2.graph(),
        "orientations must share one underlying graph"
    );
    for v in 0..g.n() {
        if o1.indegree(v) != o2.indegree(v) {
            return Err(DegreeMismatch {
                vertex: v,
                left: o1.indegree(v),
                right: o2.indegree(v),
            });
        }
    }
    // Out-adjacency of the difference digraph, in o1's direction.
    let mut out: Vec<Vec<EdgeId>> = vec![Vec::new(); g.n()];
    let mut remaining = 0usize;
    for e in 0..g.m() {
        if o1.head(e) != o2.head(e) {
            out[o1.tail(e)].push(e);
            remaining += 1;
        }
    }
    let mut cursor = vec![0usize; g.n()];
    let mut cycles = Vec::new();
    for start in 0..g.n() {
        while cursor[start] < out[start].len() {
            let mut cycle = Vec::new();
            let mut cur = start;
            loop {
                let e = out[cur][cursor[cur]];
                cursor[cur] += 1;
                cycle.push(e);
                cur = o1.head(e);
                if cur == start {
                    break;
                }
                assert!(
                    cursor[cur] < out[cur].len(),
                    "difference digraph is not balanced at vertex {}",
                    cur
                );
            }
            remaining -= cycle.len();
            cycles.push(cycle);
        }
    }
    assert_eq!(remaining, 0, "cycle peeling left arcs uncovered");
    Ok(cycles)
}

/// Reverses every arc of a directed cycle (closed walk); indegrees are
/// unchanged. Panics if the arcs do not chain into a closed walk in `o`.
pub fn apply_cycle_reversal(o: &mut Orientation<'_>, cycle: &[EdgeId]) {
    if cycle.is_empty() {
        return;
    }
    let start = o.tail(cycle[0]);
    let mut cur = start;
    for &e in cycle {
        assert_eq!(o.tail(e), cur, "cycle arc {} does not chain at {}", e, cur);
        cur = o.head(e);
    }
    assert_eq!(cur, start, "cycle does not close");
    let before = o.indegrees().to_vec();
    for &e in cycle {
        o.flip(e);
    }
    debug_assert_eq!(
        o.indegrees(),
        &before[..],
        "cycle reversal changed indegrees"
    );
}

/// All ordered pairs `(u, v)` joined by a directed path with
/// `indeg(u) = indeg(v) - 1`; reversing such a path permutes indegrees
/// without changing the degree multiset.
pub fn weak_reversal_candidates(o: &Orientation<'_>) -> Vec<(VertexId, VertexId)> {
    let n = o.graph().n();
    let deg = o.indegrees();
    let mut pairs = Vec::new();
    for u in 0..n {
        // forward reachability from u
        let mut seen = vec![false; n];
        seen[u] = true;
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            for (_, h) in o.out_arcs(x) {
                if !seen[h] {
                    seen[h] = true;
                    stack.push(h);
                }
            }
        }
        for v in 0..n {
            if v != u && seen[v] && deg[v] >= 1 && deg[u] == deg[v] - 1 {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

#[derive(Debug, Error, PartialEq)]
pub enum ConvexCostError {
    #[error("cost table must cover at least indegree 0")]
    Empty,
    #[error("not increasing at index {0}")]
    NotIncreasing(usize),
    #[error("not strictly convex at index {0}")]
    NotStrictlyConvex(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cost undefined at indegree {indegree} (domain goes up to {max})")]
pub struct CostDomainError {
    pub indegree: usize,
    pub max: usize,
}

/// An increasing, strictly convex cost table over indegrees `0..=max`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexCost {
    values: Vec<f64>,
}

impl ConvexCost {
    pub fn from_values(values: Vec<f64>) -> Result<Self, ConvexCostError> {
        if values.is_empty() {
            return Err(ConvexCostError::Empty);
        }
        for i in 1..values.len() {
            if values[i] <= values[i - 1] {
                return Err(ConvexCostError::NotIncreasing(i));
            }
        }
        for i in 1..values.len().saturating_sub(1) {
            if values[i + 1] - values[i] <= values[i] - values[i - 1] {
                return Err(ConvexCostError::NotStrictlyConvex(i));
            }
        }
        Ok(Self { values })
    }

    /// f(x) = x^2 over `0..=max`.
    pub fn square(max: usize) -> Self {
        Self::from_values((0..=max).map(|x| (x * x) as f64).collect())
            .expect("x^2 is increasing and strictly convex on 0..")
    }

    /// f(x) = 2^x over `0..=max`.
    pub fn pow2(max: usize) -> Self {
        Self::from_values((0..=max).map(|x| (1u64 << x) as f64).collect())
            .expect("2^x is increasing and strictly convex")
    }

    pub fn max_indegree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn eval(&self, indegree: usize) -> Result<f64, CostDomainError> {
        self.values.get(indegree).copied().ok_or(CostDomainError {
            indegree,
            max: self.max_indegree(),
        })
    }
}

/// Total cost `sum_v f(indeg(v))`.
pub fn convex_cost(o: &Orientation<'_>, f: &ConvexCost) -> Result<f64, CostDomainError> {
    o.indegrees().iter().map(|&d| f.eval(d)).sum()
}
