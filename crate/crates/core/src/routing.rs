//! Compact interval routing over strong orientations.
//!
//! An ear decomposition splits the arcs of a strongly connected digraph into
//! an initial directed cycle and directed paths (or cycles) meeting earlier
//! ears only at their endpoints. Walking the ears, a cyclic vertex ordering
//! and one interval per arc are maintained so that at every vertex the
//! intervals on its labeled out-arcs partition everything but the vertex
//! itself; a message then follows the unique out-arc whose interval contains
//! its destination. The symbolic open/closed intervals are converted to
//! closed numeric cyclic intervals only once the ordering is final.

use thiserror::Error;

use crate::graph::{EdgeId, Orientation, UndirectedGraph, VertexId};
use crate::strong::{is_strongly_connected, sc_path_reversal, NotStronglyOrientable};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RoutingError {
    #[error("orientation is not strongly connected")]
    NotStronglyConnected,
    #[error("ear decomposition needs at least 2 vertices and 2 arcs")]
    TooSmall,
    #[error("invalid ear decomposition: {0}")]
    InvalidEars(String),
    #[error("internal routing inconsistency: {0}")]
    Internal(String),
    #[error("no out-arc interval at vertex {vertex} contains destination {dest}")]
    NoMatchingInterval { vertex: VertexId, dest: VertexId },
    #[error("multiple out-arc intervals at vertex {vertex} contain destination {dest}")]
    AmbiguousInterval { vertex: VertexId, dest: VertexId },
    #[error("hop cap {cap} exceeded routing {src} -> {dest}")]
    HopCapExceeded {
        src: VertexId,
        dest: VertexId,
        cap: usize,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TablePipelineError {
    #[error(transparent)]
    Orient(#[from] NotStronglyOrientable),
    #[error(transparent)]
    Routing(#[from] RoutingError),
}

/// One ear: a directed walk `vertices[0] -> ... -> vertices[last]` realized
/// by `arcs`, simple except that a cycle ear repeats its first vertex last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ear {
    pub vertices: Vec<VertexId>,
    pub arcs: Vec<EdgeId>,
}

impl Ear {
    pub fn is_cycle(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }
}

/// Ears partitioning the arcs of a strong orientation; ear 0 is a simple
/// directed cycle, later ears meet earlier ones exactly at their endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarDecomposition {
    pub ears: Vec<Ear>,
}

/// Checks the full ear-decomposition contract against `o`.
pub fn validate_ears(o: &Orientation<'_>, ears: &EarDecomposition) -> Result<(), RoutingError> {
    let g = o.graph();
    let bad = |msg: String| Err(RoutingError::InvalidEars(msg));
    if ears.ears.is_empty() {
        return bad("no ears".into());
    }
    let mut arc_seen = vec![false; g.m()];
    let mut vertex_seen = vec![false; g.n()];
    for (i, ear) in ears.ears.iter().enumerate() {
        if ear.vertices.len() != ear.arcs.len() + 1 {
            return bad(format!("ear {}: vertex/arc length mismatch", i));
        }
        if ear.arcs.is_empty() {
            return bad(format!("ear {}: empty", i));
        }
        for (j, &e) in ear.arcs.iter().enumerate() {
            if o.tail(e) != ear.vertices[j] || o.head(e) != ear.vertices[j + 1] {
                return bad(format!(
                    "ear {}: arc {} does not chain at position {}",
                    i, e, j
                ));
            }
            if arc_seen[e] {
                return bad(format!("arc {} appears in two ears", e));
            }
            arc_seen[e] = true;
        }
        let interior = &ear.vertices[1..ear.vertices.len() - 1];
        let mut distinct = interior.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != interior.len() {
            return bad(format!("ear {}: repeated interior vertex", i));
        }
        let first = ear.vertices[0];
        let last = *ear.vertices.last().expect("nonempty");
        if interior.contains(&first) || interior.contains(&last) {
            return bad(format!("ear {}: endpoint repeated in interior", i));
        }
        if i == 0 {
            if first != last {
                return bad("ear 0 must be a directed cycle".into());
            }
        } else {
            if !vertex_seen[first] || !vertex_seen[last] {
                return bad(format!("ear {}: endpoint not on an earlier ear", i));
            }
            for &v in interior {
                if vertex_seen[v] {
                    return bad(format!(
                        "ear {}: interior vertex {} on an earlier ear",
                        i, v
                    ));
                }
            }
        }
        for &v in &ear.vertices {
            vertex_seen[v] = true;
        }
    }
    if let Some(e) = arc_seen.iter().position(|&s| !s) {
        return bad(format!("arc {} not covered by any ear", e));
    }
    Ok(())
}

/// Ear decomposition of a strong orientation: ear 0 is a directed cycle
/// through vertex 0 (the first out-arc of 0 plus a shortest path back), and
/// each later ear extends from the earliest decomposed vertex with an unused
/// out-arc along fresh vertices until it re-enters the decomposition.
pub fn ear_decomposition(o: &Orientation<'_>) -> Result<EarDecomposition, RoutingError> {
    let g = o.graph();
    let n = g.n();
    if !is_strongly_connected(o) {
        return Err(RoutingError::NotStronglyConnected);
    }
    if n < 2 || g.m() < 2 {
        return Err(RoutingError::TooSmall);
    }
    let mut used = vec![false; g.m()];
    let mut in_decomp = vec![false; n];
    let mut ears = Vec::new();

    // P0: first out-arc of vertex 0, then a shortest directed path back.
    let (e0, x0) = o
        .out_arcs(0)
        .next()
        .expect("strong orientation has out-arcs");
    let back = shortest_path(o, x0, 0).expect("strong connectivity");
    let mut vertices = vec![0, x0];
    let mut arcs = vec![e0];
    for &e in &back {
        arcs.push(e);
        vertices.push(o.head(e));
    }
    for &e in &arcs {
        used[e] = true;
    }
    for &v in &vertices {
        in_decomp[v] = true;
    }
    ears.push(Ear { vertices, arcs });

    let mut used_count = ears[0].arcs.len();
    while used_count < g.m() {
        let (w, e, x) = next_unused_arc(o, &used, &in_decomp).ok_or_else(|| {
            RoutingError::Internal("unused arcs but none leaves the decomposition".into())
        })?;
        let mut vertices = vec![w, x];
        let mut arcs = vec![e];
        if !in_decomp[x] {
            // walk from x through fresh vertices until re-entering
            let segment = fresh_path_to_decomp(o, x, &in_decomp).ok_or_else(|| {
                RoutingError::Internal("fresh vertex cannot reach the decomposition".into())
            })?;
            for &e in &segment {
                arcs.push(e);
                vertices.push(o.head(e));
            }
        }
        for &e in &arcs {
            debug_assert!(!used[e]);
            used[e] = true;
        }
        used_count += arcs.len();
        for &v in &vertices {
            in_decomp[v] = true;
        }
        ears.push(Ear { vertices, arcs });
    }
    let decomp = EarDecomposition { ears };
    debug_assert!(validate_ears(o, &decomp).is_ok());
    Ok(decomp)
}

/// Shortest directed path from `s` to `t` as an arc list (BFS, edge-id
/// tie-break).
fn shortest_path(o: &Orientation<'_>, s: VertexId, t: VertexId) -> Option<Vec<EdgeId>> {
    let n = o.graph().n();
    if s == t {
        return Some(Vec::new());
    }
    let mut prev: Vec<Option<EdgeId>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for (e, h) in o.out_arcs(x) {
            if !seen[h] {
                seen[h] = true;
                prev[h] = Some(e);
                if h == t {
                    let mut arcs = Vec::new();
                    let mut cur = t;
                    while cur != s {
                        let e = prev[cur].expect("chain reaches s");
                        arcs.push(e);
                        cur = o.tail(e);
                    }
                    arcs.reverse();
                    return Some(arcs);
                }
                queue.push_back(h);
            }
        }
    }
    None
}

fn next_unused_arc(
    o: &Orientation<'_>,
    used: &[bool],
    in_decomp: &[bool],
) -> Option<(VertexId, EdgeId, VertexId)> {
    for w in 0..o.graph().n() {
        if !in_decomp[w] {
            continue;
        }
        for (e, h) in o.out_arcs(w) {
            if !used[e] {
                return Some((w, e, h));
            }
        }
    }
    None
}

/// BFS over fresh vertices (every arc leaving a fresh vertex is unused) until
/// any decomposed vertex is reached.
fn fresh_path_to_decomp(
    o: &Orientation<'_>,
    from: VertexId,
    in_decomp: &[bool],
) -> Option<Vec<EdgeId>> {
    let n = o.graph().n();
    let mut prev: Vec<Option<EdgeId>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = std::collections::VecDeque::from([from]);
    let mut hit: Option<(EdgeId, VertexId)> = None;
    'bfs: while let Some(x) = queue.pop_front() {
        for (e, h) in o.out_arcs(x) {
            if in_decomp[h] {
                hit = Some((e, x));
                break 'bfs;
            }
            if !seen[h] {
                seen[h] = true;
                prev[h] = Some(e);
                queue.push_back(h);
            }
        }
    }
    let (last_arc, mut cur) = hit?;
    let mut arcs = vec![last_arc];
    while cur != from {
        let e = prev[cur].expect("chain reaches the start");
        arcs.push(e);
        cur = o.tail(e);
    }
    arcs.reverse();
    Some(arcs)
}

/// A dynamic cyclic vertex ordering supporting O(1) insertion-after and
/// successor/predecessor queries. The anchor (first initialized vertex)
/// fixes position 0 of the final numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicOrdering {
    next: Vec<usize>,
    prev: Vec<usize>,
    present: Vec<bool>,
    anchor: VertexId,
    len: usize,
}

const ABSENT: usize = usize::MAX;

impl CyclicOrdering {
    /// Initializes with the given distinct vertices in cyclic order.
    pub fn new(n: usize, initial: &[VertexId]) -> Self {
        assert!(!initial.is_empty());
        let mut ord = Self {
            next: vec![ABSENT; n],
            prev: vec![ABSENT; n],
            present: vec![false; n],
            anchor: initial[0],
            len: initial.len(),
        };
        let k = initial.len();
        for (i, &v) in initial.iter().enumerate() {
            assert!(!ord.present[v], "vertex {} inserted twice", v);
            ord.present[v] = true;
            ord.next[v] = initial[(i + 1) % k];
            ord.prev[v] = initial[(i + k - 1) % k];
        }
        ord
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.present[v]
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn succ(&self, v: VertexId) -> VertexId {
        debug_assert!(self.present[v]);
        self.next[v]
    }

    pub fn pred(&self, v: VertexId) -> VertexId {
        debug_assert!(self.present[v]);
        self.prev[v]
    }

    pub fn insert_after(&mut self, after: VertexId, v: VertexId) {
        assert!(self.present[after], "insertion point {} absent", after);
        assert!(!self.present[v], "vertex {} inserted twice", v);
        let nxt = self.next[after];
        self.next[after] = v;
        self.prev[v] = after;
        self.next[v] = nxt;
        self.prev[nxt] = v;
        self.present[v] = true;
        self.len += 1;
    }

    /// Vertices from the anchor forward around the cycle.
    pub fn to_vec(&self) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.len);
        let mut cur = self.anchor;
        loop {
            out.push(cur);
            cur = self.next[cur];
            if cur == self.anchor {
                break;
            }
        }
        out
    }

    /// Position of every present vertex in anchor-relative order.
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![ABSENT; self.present.len()];
        for (i, v) in self.to_vec().into_iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Symbolic interval over the cyclic ordering, from `lo` forward to `hi`
/// with independent endpoint closedness. `(a, a)` open-open denotes all
/// vertices except `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolicInterval {
    pub lo: VertexId,
    pub hi: VertexId,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl SymbolicInterval {
    fn punctured(a: VertexId) -> Self {
        Self {
            lo: a,
            hi: a,
            lo_closed: false,
            hi_closed: false,
        }
    }

    /// Membership given anchor-relative positions of the current ordering.
    fn contains(&self, w: VertexId, pos: &[usize], len: usize) -> bool {
        if w == self.lo || w == self.hi {
            return (w == self.lo && self.lo_closed) || (w == self.hi && self.hi_closed);
        }
        if self.lo == self.hi {
            // (a, a): everything except a
            return true;
        }
        let off = |x: VertexId| (pos[x] + len - pos[self.lo]) % len;
        off(w) < off(self.hi)
    }
}

/// Per-arc assignment during table construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcLabel {
    /// Not yet on a processed ear.
    Unassigned,
    /// Single-edge ear: the arc is not needed for routing.
    Unused,
    Interval(SymbolicInterval),
}

/// Runs the Routing procedure over the ears: initializes the cyclic ordering
/// with ear 0 and labels its arcs `(a, a)`; for every later ear inserts the
/// interior vertices after the first vertex, labels internal out-arcs
/// `(v, v)`, splits the first vertex's unique `(v1, a)` interval into
/// `[b, a)` plus `(v1, b)` where `b` follows the last interior vertex, and
/// skips single-edge ears (their arcs become `Unused`). The per-vertex
/// partition invariant is verified after every ear.
pub fn build_routing(
    o: &Orientation<'_>,
    ears: &EarDecomposition,
) -> Result<(CyclicOrdering, Vec<ArcLabel>), RoutingError> {
    validate_ears(o, ears)?;
    let g = o.graph();
    let p0 = &ears.ears[0];
    if p0.arcs.len() < 2 {
        return Err(RoutingError::TooSmall);
    }
    let cycle_vertices = &p0.vertices[..p0.vertices.len() - 1];
    let mut ord = CyclicOrdering::new(g.n(), cycle_vertices);
    let mut labels = vec![ArcLabel::Unassigned; g.m()];
    for (j, &e) in p0.arcs.iter().enumerate() {
        labels[e] = ArcLabel::Interval(SymbolicInterval::punctured(p0.vertices[j]));
    }
    check_partition(o, &ord, &labels)?;

    for ear in &ears.ears[1..] {
        if ear.arcs.len() == 1 {
            labels[ear.arcs[0]] = ArcLabel::Unused;
            continue;
        }
        let v1 = ear.vertices[0];
        let interior = &ear.vertices[1..ear.vertices.len() - 1];
        let mut after = v1;
        for &v in interior {
            ord.insert_after(after, v);
            after = v;
        }
        // internal out-arcs (v_j, v_j) for j = 2..=p; arcs[j] leaves vertices[j]
        for j in 1..ear.arcs.len() {
            labels[ear.arcs[j]] = ArcLabel::Interval(SymbolicInterval::punctured(ear.vertices[j]));
        }
        // the unique out-arc of v1 whose interval starts open at v1
        let mut v1u: Option<EdgeId> = None;
        for (e, _) in o.out_arcs(v1) {
            if let ArcLabel::Interval(si) = labels[e] {
                if si.lo == v1 && !si.lo_closed {
                    if v1u.is_some() {
                        return Err(RoutingError::Internal(format!(
                            "two intervals starting at ({},",
                            v1
                        )));
                    }
                    v1u = Some(e);
                }
            }
        }
        let v1u =
            v1u.ok_or_else(|| RoutingError::Internal(format!("no interval starting at ({},", v1)))?;
        let a = match labels[v1u] {
            ArcLabel::Interval(si) => {
                if si.hi_closed {
                    return Err(RoutingError::Internal(
                        "closed upper endpoint on a (v1, a) interval".into(),
                    ));
                }
                si.hi
            }
            _ => unreachable!("selected as an interval"),
        };
        let v_p = *interior
            .last()
            .expect("multi-arc ear has interior vertices");
        let b = ord.succ(v_p);
        labels[v1u] = ArcLabel::Interval(SymbolicInterval {
            lo: b,
            hi: a,
            lo_closed: true,
            hi_closed: false,
        });
        labels[ear.arcs[0]] = ArcLabel::Interval(SymbolicInterval {
            lo: v1,
            hi: b,
            lo_closed: false,
            hi_closed: false,
        });
        check_partition(o, &ord, &labels)?;
    }
    Ok((ord, labels))
}

/// Partition invariant: for every vertex in the ordering, the intervals on
/// its labeled out-arcs are disjoint and cover every other ordered vertex
/// exactly once.
pub fn check_partition(
    o: &Orientation<'_>,
    ord: &CyclicOrdering,
    labels: &[ArcLabel],
) -> Result<(), RoutingError> {
    let pos = ord.positions();
    let len = ord.len();
    let members = ord.to_vec();
    for &v in &members {
        let intervals: Vec<SymbolicInterval> = o
            .out_arcs(v)
            .filter_map(|(e, _)| match labels[e] {
                ArcLabel::Interval(si) => Some(si),
                _ => None,
            })
            .collect();
        for &w in &members {
            if w == v {
                continue;
            }
            let count = intervals
                .iter()
                .filter(|si| si.contains(w, &pos, len))
                .count();
            if count != 1 {
                return Err(RoutingError::Internal(format!(
                    "vertex {} covered {} times from vertex {}",
                    w, count, v
                )));
            }
        }
    }
    Ok(())
}

/// Finalized numeric routing tables: the cyclic vertex numbering and one
/// closed cyclic interval (or `Unused`) per arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoutingTables {
    /// Position -> vertex, starting at the anchor.
    pub order: Vec<VertexId>,
    /// Vertex -> position.
    pub number: Vec<usize>,
    /// Per edge id: the oriented arc and its interval in position space.
    pub arcs: Vec<ArcEntry>,
    out: Vec<Vec<EdgeId>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcEntry {
    pub tail: VertexId,
    pub head: VertexId,
    /// Closed cyclic interval `[lo, hi]` of destination numbers, or `None`
    /// for arcs skipped as single-edge ears.
    pub interval: Option<(usize, usize)>,
}

impl RoutingTables {
    /// Number of table entries (out-arcs) at the busiest vertex.
    pub fn max_table_size(&self) -> usize {
        self.out.iter().map(|v| v.len()).max().unwrap_or(0)
    }

    /// Number of labeled intervals at the busiest vertex.
    pub fn max_used_intervals(&self) -> usize {
        self.out
            .iter()
            .map(|arcs| {
                arcs.iter()
                    .filter(|&&e| self.arcs[e].interval.is_some())
                    .count()
            })
            .max()
            .unwrap_or(0)
    }

    pub fn out_arcs_of(&self, v: VertexId) -> &[EdgeId] {
        &self.out[v]
    }

    fn interval_contains(&self, interval: (usize, usize), x: usize) -> bool {
        let (lo, hi) = interval;
        if lo <= hi {
            lo <= x && x <= hi
        } else {
            x >= lo || x <= hi
        }
    }
}

/// Converts the symbolic labels to closed cyclic numeric intervals under the
/// final ordering (position i = i-th vertex after the anchor): open ends
/// shrink inward, so `(a, b)` becomes `[succ(a), pred(b)]` and `(a, a)`
/// becomes `[succ(a), pred(a)]`.
pub fn finalize_numeric(
    o: &Orientation<'_>,
    ord: &CyclicOrdering,
    labels: &[ArcLabel],
) -> Result<RoutingTables, RoutingError> {
    let g = o.graph();
    if ord.len() != g.n() {
        return Err(RoutingError::Internal(
            "ordering does not cover every vertex".into(),
        ));
    }
    let order = ord.to_vec();
    let mut number = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        number[v] = i;
    }
    let mut arcs = Vec::with_capacity(g.m());
    for e in 0..g.m() {
        let interval = match labels[e] {
            ArcLabel::Unused => None,
            ArcLabel::Unassigned => {
                return Err(RoutingError::Internal(format!("arc {} never labeled", e)));
            }
            ArcLabel::Interval(si) => {
                if si.lo == si.hi && (si.lo_closed || si.hi_closed) {
                    return Err(RoutingError::Internal(format!(
                        "degenerate half-closed interval on arc {}",
                        e
                    )));
                }
                if si.lo != si.hi && !si.lo_closed && !si.hi_closed && ord.succ(si.lo) == si.hi {
                    return Err(RoutingError::Internal(format!(
                        "interval on arc {} closes to empty",
                        e
                    )));
                }
                let lo = if si.lo_closed { si.lo } else { ord.succ(si.lo) };
                let hi = if si.hi_closed { si.hi } else { ord.pred(si.hi) };
                Some((number[lo], number[hi]))
            }
        };
        arcs.push(ArcEntry {
            tail: o.tail(e),
            head: o.head(e),
            interval,
        });
    }
    let mut out = vec![Vec::new(); g.n()];
    for (e, entry) in arcs.iter().enumerate() {
        out[entry.tail].push(e);
    }
    Ok(RoutingTables {
        order,
        number,
        arcs,
        out,
    })
}

/// Forwards a message from `s` to `t` hop by hop: at each vertex follow the
/// unique out-arc whose interval contains `t`'s number. Returns the arc walk.
/// The hop cap `n * m` turns any feasibility bug into a clean error.
pub fn route(
    tables: &RoutingTables,
    s: VertexId,
    t: VertexId,
) -> Result<Vec<EdgeId>, RoutingError> {
    assert_ne!(s, t, "routing needs distinct endpoints");
    let cap = tables.order.len() * tables.arcs.len();
    let target = tables.number[t];
    let mut walk = Vec::new();
    let mut cur = s;
    while cur != t {
        if walk.len() >= cap {
            return Err(RoutingError::HopCapExceeded {
                src: s,
                dest: t,
                cap,
            });
        }
        let mut chosen = None;
        for &e in &tables.out[cur] {
            if let Some(iv) = tables.arcs[e].interval {
                if tables.interval_contains(iv, target) {
                    if chosen.is_some() {
                        return Err(RoutingError::AmbiguousInterval {
                            vertex: cur,
                            dest: t,
                        });
                    }
                    chosen = Some(e);
                }
            }
        }
        let e = chosen.ok_or(RoutingError::NoMatchingInterval {
            vertex: cur,
            dest: t,
        })?;
        walk.push(e);
        cur = tables.arcs[e].head;
    }
    Ok(walk)
}

/// All-pairs delivery summary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimSummary {
    pub pairs: usize,
    pub max_hops: usize,
}

/// Routes every ordered pair and reports the worst hop count. Runs the pairs
/// in parallel when the `parallel` feature is enabled.
pub fn simulate_all_pairs(tables: &RoutingTables) -> Result<SimSummary, RoutingError> {
    let n = tables.order.len();
    #[cfg(feature = "parallel")]
    {
        let max_hops = (0..n)
            .into_par_iter()
            .map(|s| source_max_hops(tables, s))
            .try_reduce(|| 0, |a, b| Ok(a.max(b)))?;
        Ok(SimSummary {
            pairs: n * n.saturating_sub(1),
            max_hops,
        })
    }
    #[cfg(not(feature = "parallel"))]
    {
        simulate_all_pairs_sequential(tables)
    }
}

/// Sequential all-pairs simulation, independent of the `parallel` feature.
pub fn simulate_all_pairs_sequential(tables: &RoutingTables) -> Result<SimSummary, RoutingError> {
    let n = tables.order.len();
    let mut max_hops = 0;
    for s in 0..n {
        max_hops = max_hops.max(source_max_hops(tables, s)?);
    }
    Ok(SimSummary {
        pairs: n * n.saturating_sub(1),
        max_hops,
    })
}

fn source_max_hops(tables: &RoutingTables, s: VertexId) -> Result<usize, RoutingError> {
    let n = tables.order.len();
    let mut worst = 0;
    for t in 0..n {
        if t != s {
            worst = worst.max(route(tables, s, t)?.len());
        }
    }
    Ok(worst)
}

/// Full pipeline: strongly orient `g` minimizing the maximum outdegree
/// (reverse of the min-max-indegree orientation), ear-decompose, and build
/// numeric tables. The busiest table then has exactly the minimum possible
/// number of entries.
pub fn min_outdegree_routing(g: &UndirectedGraph) -> Result<RoutingTables, TablePipelineError> {
    let (mut o, _) = sc_path_reversal(g)?;
    o.reverse_all();
    let ears = ear_decomposition(&o)?;
    let (ord, labels) = build_routing(&o, &ears)?;
    Ok(finalize_numeric(&o, &ord, &labels)?)
}
