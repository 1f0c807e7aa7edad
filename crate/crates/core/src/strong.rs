//! Strongly connected orientations minimizing the maximum indegree.
//!
//! The search keeps a strongly connected orientation and repeatedly reverses
//! a path from a low-indegree vertex into a maximum-indegree vertex, where
//! the path comes from a 2-unit flow decomposition so the reversal provably
//! preserves strong connectivity. Termination is certified by the subset
//! lower bound `max_U ceil((m(U) + c(U)) / |U|)` and by the one-arc
//! structure of components outside the witness set.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{EdgeId, Orientation, UndirectedGraph, VertexId};
use crate::minlex::{reverse_path, DirectedPath, Reversal};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NotStronglyOrientable {
    #[error("bridge {u}-{v}")]
    Bridge { u: VertexId, v: VertexId },
    #[error("disconnected: vertex {0} unreachable from vertex 0")]
    Disconnected(VertexId),
}

/// Smallest bridge of `g` under (min endpoint, max endpoint) ordering, or
/// `None` if bridgeless. Lowpoint computation, iterative, parallel-edge
/// aware (parallel copies never count as bridges).
pub fn find_bridge(g: &UndirectedGraph) -> Option<(VertexId, VertexId)> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut bridges = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // stack entries: (vertex, incidence cursor, edge used to enter)
        let mut stack: Vec<(VertexId, usize, Option<EdgeId>)> = vec![(root, 0, None)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (v, ref mut i, entry)) = stack.last_mut() {
            if *i < g.incidence(v).len() {
                let (e, w) = g.incidence(v)[*i];
                *i += 1;
                if Some(e) == entry {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, 0, Some(e)));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        bridges.push((parent.min(v), parent.max(v)));
                    }
                }
            }
        }
    }
    bridges.into_iter().min()
}

/// Robbins precondition: connected and bridgeless.
pub fn check_strongly_orientable(g: &UndirectedGraph) -> Result<(), NotStronglyOrientable> {
    let n = g.n();
    if n > 1 {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &(_, w) in g.incidence(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(NotStronglyOrientable::Disconnected(v));
        }
    }
    if let Some((u, v)) = find_bridge(g) {
        return Err(NotStronglyOrientable::Bridge { u, v });
    }
    Ok(())
}

/// Depth-first strong orientation rooted at vertex 0: tree edges point away
/// from the root, non-tree edges point back up.
pub fn initial_strong_orientation(
    g: &UndirectedGraph,
) -> Result<Orientation<'_>, NotStronglyOrientable> {
    check_strongly_orientable(g)?;
    let n = g.n();
    let mut head: Vec<VertexId> = g.edges().iter().map(|&(_, v)| v).collect();
    let mut oriented = vec![false; g.m()];
    if n > 0 {
        let mut disc = vec![false; n];
        let mut stack: Vec<(VertexId, usize)> = vec![(0, 0)];
        disc[0] = true;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < g.incidence(v).len() {
                let (e, w) = g.incidence(v)[*i];
                *i += 1;
                if oriented[e] {
                    continue;
                }
                oriented[e] = true;
                head[e] = w; // tree arcs go down, back arcs go up to the ancestor
                if !disc[w] {
                    disc[w] = true;
                    stack.push((w, 0));
                }
            } else {
                stack.pop();
            }
        }
    }
    let o = Orientation::from_heads(g, head).expect("heads are endpoints");
    debug_assert!(is_strongly_connected(&o));
    Ok(o)
}

/// True iff one strongly connected component spans all vertices (vacuously
/// true for n <= 1).
pub fn is_strongly_connected(o: &Orientation<'_>) -> bool {
    let n = o.graph().n();
    if n <= 1 {
        return true;
    }
    reaches_all(o, false) && reaches_all(o, true)
}

fn reaches_all(o: &Orientation<'_>, backward: bool) -> bool {
    let n = o.graph().n();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut count = 1;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        let step =
            |w: VertexId, seen: &mut Vec<bool>, stack: &mut Vec<VertexId>, count: &mut usize| {
                if !seen[w] {
                    seen[w] = true;
                    *count += 1;
                    stack.push(w);
                }
            };
        if backward {
            for (_, t) in o.in_arcs(v) {
                step(t, &mut seen, &mut stack, &mut count);
            }
        } else {
            for (_, h) in o.out_arcs(v) {
                step(h, &mut seen, &mut stack, &mut count);
            }
        }
    }
    count == n
}

/// Result of the capped unit-capacity max-flow between two vertices: the
/// flow value in {0, 1, 2} and arc-disjoint source-to-sink paths realizing
/// it (simple, loops shortcut out of the decomposition walks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowResult {
    pub value: usize,
    pub paths: Vec<DirectedPath>,
}

/// `min(2, max u-to-v flow)` in the unit-capacity digraph of `o`, by at most
/// two augmenting-path rounds. `u` two-reaches `v` iff the value is 2.
pub fn two_reaches(o: &Orientation<'_>, u: VertexId, v: VertexId) -> FlowResult {
    assert_ne!(u, v, "two-reachability needs distinct endpoints");
    let g = o.graph();
    let n = g.n();
    let m = g.m();
    let mut flow = vec![false; m];
    let mut value = 0;
    for _round in 0..2 {
        // BFS over the residual graph: unflowed arcs forward, flowed arcs
        // backward. prev[x] = (edge, was_forward).
        let mut prev: Vec<Option<(EdgeId, bool)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[u] = true;
        let mut queue = VecDeque::new();
        queue.push_back(u);
        'bfs: while let Some(x) = queue.pop_front() {
            for &(e, w) in g.incidence(x) {
                let forward = o.head(e) == w && !flow[e];
                let backward = o.head(e) == x && flow[e];
                if (forward || backward) && !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((e, forward));
                    if w == v {
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
        if !seen[v] {
            break;
        }
        let mut x = v;
        while x != u {
            let (e, forward) = prev[x].expect("augmenting path reaches u");
            flow[e] = forward;
            x = if forward { o.tail(e) } else { o.head(e) };
        }
        value += 1;
    }
    // Decompose the flow into `value` arc-disjoint u-to-v walks and shortcut
    // each to a simple path (flow conservation guarantees the walks reach v).
    let mut out: Vec<Vec<EdgeId>> = vec![Vec::new(); n];
    for e in 0..m {
        if flow[e] {
            out[o.tail(e)].push(e);
        }
    }
    let mut cursor = vec![0usize; n];
    let mut paths = Vec::new();
    for _ in 0..value {
        let mut verts = vec![u];
        let mut arcs: Vec<EdgeId> = Vec::new();
        let mut cur = u;
        while cur != v || arcs.is_empty() {
            let e = out[cur][cursor[cur]];
            cursor[cur] += 1;
            arcs.push(e);
            cur = o.head(e);
            if let Some(pos) = verts.iter().position(|&x| x == cur) {
                verts.truncate(pos + 1);
                arcs.truncate(pos);
            } else {
                verts.push(cur);
            }
        }
        paths.push(DirectedPath {
            start: u,
            end: v,
            arcs,
        });
    }
    FlowResult { value, paths }
}

/// With `k` the current maximum indegree, returns one path of a 2-flow
/// decomposition from a vertex `u` with `indeg(u) < k - 1` to a vertex of
/// indegree `k` that `u` two-reaches, or `None` when no such pair exists.
/// Reversing the returned path preserves strong connectivity.
///
/// Scan order: maximum-indegree ends ascending by id; sources ascending by
/// (indegree, id).
pub fn find_strongly_reversible_path(o: &Orientation<'_>) -> Option<DirectedPath> {
    debug_assert!(
        is_strongly_connected(o),
        "caller must keep the orientation strong"
    );
    let n = o.graph().n();
    let deg = o.indegrees();
    let k = o.max_indegree();
    if k < 2 {
        return None;
    }
    let mut sources: Vec<VertexId> = (0..n).filter(|&u| deg[u] < k - 1).collect();
    sources.sort_unstable_by(|&a, &b| deg[a].cmp(&deg[b]).then(a.cmp(&b)));
    if sources.is_empty() {
        return None;
    }
    for v in (0..n).filter(|&v| deg[v] == k) {
        for &u in &sources {
            let fr = two_reaches(o, u, v);
            if fr.value == 2 {
                return Some(fr.paths[0].clone());
            }
        }
    }
    None
}

/// Finds a strongly connected orientation whose maximum indegree is minimum
/// over all strongly connected orientations (it always meets
/// [`sc_lower_bound`]). The trace records one entry per reversal.
pub fn sc_path_reversal(
    g: &UndirectedGraph,
) -> Result<(Orientation<'_>, Vec<Reversal>), NotStronglyOrientable> {
    let mut o = initial_strong_orientation(g)?;
    let m = g.m();
    let mut trace = Vec::new();
    while let Some(p) = find_strongly_reversible_path(&o) {
        trace.push(Reversal {
            start: p.start,
            end: p.end,
            end_indegree: o.indegree(p.end),
        });
        reverse_path(&mut o, &p);
        debug_assert!(
            is_strongly_connected(&o),
            "reversal must keep the orientation strong"
        );
        assert!(
            trace.len() <= m,
            "internal error: more than m = {} reversals; the phase bound is violated",
            m
        );
    }
    o.debug_validate();
    Ok((o, trace))
}

/// Subset enumeration refuses above this vertex count; use
/// [`check_one_edge_structure`] as the certificate instead.
pub const MAX_BOUND_VERTICES: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
#[error(
    "subset enumeration refused for n = {n} > {max}; \
     use the structural certificate instead"
)]
pub struct BoundTooLarge {
    pub n: usize,
    pub max: usize,
}

/// `max` over all nonempty vertex subsets `U` of
/// `ceil((m(U) + c(U)) / |U|)`, where `m(U)` counts edges inside `G[U]` and
/// `c(U)` counts connected components of `G[V \ U]`. Exponential; guarded
/// by [`MAX_BOUND_VERTICES`].
pub fn sc_lower_bound(g: &UndirectedGraph) -> Result<usize, BoundTooLarge> {
    let n = g.n();
    if n > MAX_BOUND_VERTICES {
        return Err(BoundTooLarge {
            n,
            max: MAX_BOUND_VERTICES,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut best = 0;
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        let inside = |v: VertexId| mask >> v & 1 == 1;
        let mut edges_within = 0;
        for &(u, v) in g.edges() {
            if inside(u) && inside(v) {
                edges_within += 1;
            }
        }
        let components = outside_components(g, inside).len();
        best = best.max((edges_within + components).div_ceil(size));
    }
    Ok(best)
}

/// Connected components of `G[V \ U]` where `in_u` selects U; each component
/// is returned as a sorted vertex list.
fn outside_components(g: &UndirectedGraph, in_u: impl Fn(VertexId) -> bool) -> Vec<Vec<VertexId>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if in_u(start) || seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(_, w) in g.incidence(v) {
                if !in_u(w) && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// The polynomial certificate that an orientation's maximum indegree is
/// optimal among strongly connected orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    /// Maximum indegree `k` of the checked orientation.
    pub max_indegree: usize,
    /// The witness set `U`: a maximum-indegree vertex plus everything that
    /// two-reaches it, sorted.
    pub witness: Vec<VertexId>,
    /// Edges of `G[U]`.
    pub edges_within: usize,
    /// Components of `G[V \ U]`.
    pub outside_components: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructuralViolation {
    #[error("vertex {vertex} in the witness set has indegree {indegree}, expected {k} or {k}-1")]
    IndegreeOutOfBand {
        vertex: VertexId,
        indegree: usize,
        k: usize,
    },
    #[error("outside component containing {representative} sends {count} arcs into U, expected 1")]
    ComponentArcCount {
        representative: VertexId,
        count: usize,
    },
    #[error("certified bound {bound} does not match maximum indegree {k}")]
    BoundMismatch { bound: usize, k: usize },
}

/// Verifies the terminal structure of a strongly connected search result:
/// with `v` a maximum-indegree vertex and `U = {u : u two-reaches v} + v`,
/// every vertex of `U` has indegree `k` or `k - 1` and every component of
/// `G[V \ U]` sends exactly one arc into `U`. Together these certify
/// `ceil((m(U) + c(U)) / |U|) = k`, matching the subset lower bound without
/// enumeration. A violation indicates an implementation bug upstream.
pub fn check_one_edge_structure(
    o: &Orientation<'_>,
) -> Result<StructureReport, StructuralViolation> {
    let g = o.graph();
    let n = g.n();
    if n == 0 {
        return Ok(StructureReport {
            max_indegree: 0,
            witness: Vec::new(),
            edges_within: 0,
            outside_components: 0,
        });
    }
    let k = o.max_indegree();
    let v = (0..n)
        .max_by_key(|&x| (o.indegree(x), n - x))
        .expect("n > 0");
    debug_assert_eq!(o.indegree(v), k);
    let mut in_u = vec![false; n];
    in_u[v] = true;
    for u in 0..n {
        if u != v && two_reaches(o, u, v).value == 2 {
            in_u[u] = true;
        }
    }
    for u in 0..n {
        if in_u[u] {
            let d = o.indegree(u);
            if d != k && (k == 0 || d != k - 1) {
                return Err(StructuralViolation::IndegreeOutOfBand {
                    vertex: u,
                    indegree: d,
                    k,
                });
            }
        }
    }
    let components = outside_components(g, |x| in_u[x]);
    for comp in &components {
        let mut arcs_in = 0;
        for &c in comp {
            for (_, h) in o.out_arcs(c) {
                if in_u[h] {
                    arcs_in += 1;
                }
            }
        }
        if arcs_in != 1 {
            return Err(StructuralViolation::ComponentArcCount {
                representative: comp[0],
                count: arcs_in,
            });
        }
    }
    let edges_within = g
        .edges()
        .iter()
        .filter(|&&(a, b)| in_u[a] && in_u[b])
        .count();
    let size = in_u.iter().filter(|&&x| x).count();
    let bound = (edges_within + components.len()).div_ceil(size);
    if bound != k {
        return Err(StructuralViolation::BoundMismatch { bound, k });
    }
    Ok(StructureReport {
        max_indegree: k,
        witness: (0..n).filter(|&x| in_u[x]).collect(),
        edges_within,
        outside_components: components.len(),
    })
}
