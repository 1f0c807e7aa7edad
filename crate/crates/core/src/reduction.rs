//! Set-cover gadget reduction: builds graphs on which acyclic orientations
//! with few maximum-indegree vertices encode small set covers, and converts
//! witnesses in both directions.
//!
//! For an odd parameter k, the gadget `H_l` (1 <= l < k) consists of two
//! k-cliques, a root of degree `k - l`, an extra vertex for even `l`, and a
//! matching topping every non-root vertex up to degree exactly k. The
//! reduction graph glues one `H_1` per set and one `H_(f_x)` per element
//! (f_x = frequency of x) by joining set roots to the roots of the elements
//! they contain.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::acyclic::{stripping, verify_acyclic};
use crate::graph::{Orientation, UndirectedGraph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetCoverError {
    #[error("line {line}: expected \"{expected}\"")]
    Malformed { line: usize, expected: &'static str },
    #[error("element {element} out of range (universe size {universe})")]
    ElementOutOfRange { element: usize, universe: usize },
    #[error("expected {expected} sets, found {found}")]
    SetCount { expected: usize, found: usize },
    #[error("set {set} is empty")]
    EmptySet { set: usize },
    #[error("set {set} repeats element {element}")]
    DuplicateElement { set: usize, element: usize },
    #[error("element {element} is not covered by any set")]
    Uncovered { element: usize },
    #[error("universe is empty")]
    EmptyUniverse,
}

/// A set-cover instance: elements `0..universe_size` and a family of sets
/// whose union is the whole universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    universe_size: usize,
    sets: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    pub fn new(universe_size: usize, sets: Vec<Vec<usize>>) -> Result<Self, SetCoverError> {
        if universe_size == 0 {
            return Err(SetCoverError::EmptyUniverse);
        }
        let mut covered = vec![false; universe_size];
        for (i, set) in sets.iter().enumerate() {
            if set.is_empty() {
                return Err(SetCoverError::EmptySet { set: i });
            }
            let mut seen = BTreeSet::new();
            for &x in set {
                if x >= universe_size {
                    return Err(SetCoverError::ElementOutOfRange {
                        element: x,
                        universe: universe_size,
                    });
                }
                if !seen.insert(x) {
                    return Err(SetCoverError::DuplicateElement { set: i, element: x });
                }
                covered[x] = true;
            }
        }
        if let Some(x) = covered.iter().position(|&c| !c) {
            return Err(SetCoverError::Uncovered { element: x });
        }
        Ok(Self {
            universe_size,
            sets,
        })
    }

    /// Parses the set-cover format: a `"u s"` header, then `s` lines of
    /// space-separated element ids. `#`-prefixed and blank lines ignored.
    pub fn parse(text: &str) -> Result<Self, SetCoverError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(SetCoverError::Malformed {
            line: 1,
            expected: "u s",
        })?;
        let mut it = header.split_whitespace();
        let parse_tok = |tok: Option<&str>| tok.and_then(|t| t.parse::<usize>().ok());
        let (universe, count) = match (parse_tok(it.next()), parse_tok(it.next()), it.next()) {
            (Some(u), Some(s), None) => (u, s),
            _ => {
                return Err(SetCoverError::Malformed {
                    line,
                    expected: "u s",
                })
            }
        };
        let mut sets = Vec::with_capacity(count);
        for (line, content) in lines {
            if sets.len() == count {
                return Err(SetCoverError::SetCount {
                    expected: count,
                    found: count + 1,
                });
            }
            let set: Result<Vec<usize>, _> = content
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect();
            let set = set.map_err(|_| SetCoverError::Malformed {
                line,
                expected: "elements",
            })?;
            sets.push(set);
        }
        if sets.len() != count {
            return Err(SetCoverError::SetCount {
                expected: count,
                found: sets.len(),
            });
        }
        Self::new(universe, sets)
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// How many sets contain each element.
    pub fn frequencies(&self) -> Vec<usize> {
        let mut freq = vec![0; self.universe_size];
        for set in &self.sets {
            for &x in set {
                freq[x] += 1;
            }
        }
        freq
    }

    /// True iff the listed set indices cover the whole universe.
    pub fn covers(&self, chosen: &[usize]) -> bool {
        let mut covered = vec![false; self.universe_size];
        for &i in chosen {
            for &x in &self.sets[i] {
                covered[x] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }
}

/// Smallest odd integer strictly greater than every set size and every
/// element frequency.
pub fn choose_k(inst: &SetCoverInstance) -> usize {
    let max_set = inst.sets.iter().map(|s| s.len()).max().unwrap_or(0);
    let max_freq = inst.frequencies().into_iter().max().unwrap_or(0);
    let bound = max_set.max(max_freq);
    if bound % 2 == 0 {
        bound + 1
    } else {
        bound + 2
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GadgetError {
    #[error("k must be odd and at least 3, got {0}")]
    BadK(usize),
    #[error("l must satisfy 1 <= l < k, got l = {l} for k = {k}")]
    BadL { k: usize, l: usize },
    #[error("gadget property violated: {0}")]
    PropertyViolation(String),
}

/// The building block `H_l`: every vertex has degree k except the root,
/// whose degree is `k - l`; removing the root keeps it connected; and it is
/// (k-1)-strippable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub graph: UndirectedGraph,
    pub root: VertexId,
    pub extra: Option<VertexId>,
    pub k: usize,
    pub ell: usize,
}

/// Layout of one gadget inside a larger graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct GadgetSpan {
    start: usize,
    k: usize,
    ell: usize,
}

impl GadgetSpan {
    fn len(&self) -> usize {
        if self.ell % 2 == 1 {
            2 * self.k + 1
        } else {
            2 * self.k + 2
        }
    }

    fn root(&self) -> VertexId {
        self.start + 2 * self.k
    }

    fn extra(&self) -> Option<VertexId> {
        (self.ell % 2 == 0).then(|| self.start + 2 * self.k + 1)
    }

    fn left(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.k
    }

    fn right(&self) -> std::ops::Range<usize> {
        self.start + self.k..self.start + 2 * self.k
    }

    fn vertices(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len()
    }
}

/// Edges of `H_l` with vertex ids offset by `span.start`. Layout: left
/// clique, right clique, then root (and extra vertex) attachments to the
/// lowest-id clique vertices, then the matching over the remaining
/// degree-(k-1) vertices in ascending order.
fn gadget_edges(span: GadgetSpan) -> Vec<(VertexId, VertexId)> {
    let GadgetSpan { k, ell, .. } = span;
    let left: Vec<_> = span.left().collect();
    let right: Vec<_> = span.right().collect();
    let r = span.root();
    let mut edges = Vec::new();
    for clique in [&left, &right] {
        for i in 0..k {
            for j in i + 1..k {
                edges.push((clique[i], clique[j]));
            }
        }
    }
    if ell % 2 == 1 {
        let c = (k - ell) / 2;
        for &v in &left[..c] {
            edges.push((r, v));
        }
        for &v in &right[..c] {
            edges.push((r, v));
        }
        for (&a, &b) in left[c..].iter().zip(&right[c..]) {
            edges.push((a, b));
        }
    } else {
        let s = span.extra().expect("even l has an extra vertex");
        for &v in &left[..k - ell] {
            edges.push((r, v));
        }
        for &v in &left[k - ell..k - ell + ell / 2] {
            edges.push((s, v));
        }
        for &v in &right[..k - ell / 2] {
            edges.push((s, v));
        }
        for (&a, &b) in left[k - ell + ell / 2..].iter().zip(&right[k - ell / 2..]) {
            edges.push((a, b));
        }
    }
    edges
}

/// Builds `H_l` and validates all four gadget properties.
pub fn build_gadget(k: usize, ell: usize) -> Result<Gadget, GadgetError> {
    if k < 3 || k % 2 == 0 {
        return Err(GadgetError::BadK(k));
    }
    if ell == 0 || ell >= k {
        return Err(GadgetError::BadL { k, l: ell });
    }
    let span = GadgetSpan { start: 0, k, ell };
    let edges = gadget_edges(span);
    let graph = UndirectedGraph::new(span.len(), edges).expect("gadget edges are valid");
    let gadget = Gadget {
        graph,
        root: span.root(),
        extra: span.extra(),
        k,
        ell,
    };
    validate_gadget(&gadget)?;
    Ok(gadget)
}

fn validate_gadget(gadget: &Gadget) -> Result<(), GadgetError> {
    let g = &gadget.graph;
    let (k, ell, r) = (gadget.k, gadget.ell, gadget.root);
    for v in 0..g.n() {
        let expected = if v == r { k - ell } else { k };
        if g.degree(v) != expected {
            return Err(GadgetError::PropertyViolation(format!(
                "vertex {} has degree {}, expected {}",
                v,
                g.degree(v),
                expected
            )));
        }
    }
    // connectivity without the root
    let n = g.n();
    let start = (0..n)
        .find(|&v| v != r)
        .expect("gadget has non-root vertices");
    let mut seen = vec![false; n];
    seen[start] = true;
    seen[r] = true; // excluded
    let mut count = 1;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(_, w) in g.incidence(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    if count != n - 1 {
        return Err(GadgetError::PropertyViolation(
            "gadget minus root is disconnected".into(),
        ));
    }
    let peak = stripping(g).0.peak;
    if peak > k - 1 {
        return Err(GadgetError::PropertyViolation(format!(
            "gadget strips to peak {}, expected at most {}",
            peak,
            k - 1
        )));
    }
    Ok(())
}

/// Which gadget a reduction-graph vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetRef {
    Set(usize),
    Element(usize),
}

/// The reduction graph: one `H_1` per set, one `H_(f_x)` per element, and an
/// edge between the roots of set i and element x for every x in S_i. Every
/// vertex has degree k except set roots, which have degree `k + |S_i| - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub graph: UndirectedGraph,
    pub k: usize,
    pub set_roots: Vec<VertexId>,
    pub element_roots: Vec<VertexId>,
    pub gadget_of: Vec<GadgetRef>,
    instance: SetCoverInstance,
    set_spans: Vec<GadgetSpan>,
    element_spans: Vec<GadgetSpan>,
}

/// Assembles the reduction graph for a validated instance.
pub fn build_reduction(inst: &SetCoverInstance) -> ReductionInstance {
    let k = choose_k(inst);
    let freq = inst.frequencies();
    for (x, &f) in freq.iter().enumerate() {
        assert!(
            f >= 1 && f < k,
            "element {} has frequency {} outside [1, k)",
            x,
            f
        );
    }
    let mut edges = Vec::new();
    let mut gadget_of = Vec::new();
    let mut offset = 0;
    let mut set_spans = Vec::new();
    for (i, set) in inst.sets().iter().enumerate() {
        assert!(set.len() < k, "set {} larger than k", i);
        let span = GadgetSpan {
            start: offset,
            k,
            ell: 1,
        };
        edges.extend(gadget_edges(span));
        gadget_of.extend(std::iter::repeat_n(GadgetRef::Set(i), span.len()));
        offset += span.len();
        set_spans.push(span);
    }
    let mut element_spans = Vec::new();
    for (x, &f) in freq.iter().enumerate() {
        let span = GadgetSpan {
            start: offset,
            k,
            ell: f,
        };
        edges.extend(gadget_edges(span));
        gadget_of.extend(std::iter::repeat_n(GadgetRef::Element(x), span.len()));
        offset += span.len();
        element_spans.push(span);
    }
    for (i, set) in inst.sets().iter().enumerate() {
        for &x in set {
            edges.push((set_spans[i].root(), element_spans[x].root()));
        }
    }
    let graph = UndirectedGraph::new(offset, edges).expect("reduction edges are valid");
    let ri = ReductionInstance {
        k,
        set_roots: set_spans.iter().map(|s| s.root()).collect(),
        element_roots: element_spans.iter().map(|s| s.root()).collect(),
        gadget_of,
        instance: inst.clone(),
        set_spans,
        element_spans,
        graph,
    };
    ri.validate();
    ri
}

impl ReductionInstance {
    pub fn instance(&self) -> &SetCoverInstance {
        &self.instance
    }

    fn validate(&self) {
        let g = &self.graph;
        let mut expected = vec![self.k; g.n()];
        for (i, set) in self.instance.sets().iter().enumerate() {
            expected[self.set_roots[i]] = self.k + set.len() - 1;
        }
        for v in 0..g.n() {
            assert_eq!(
                g.degree(v),
                expected[v],
                "reduction degree profile broken at vertex {}",
                v
            );
        }
        let peak = stripping(g).0.peak;
        assert_eq!(
            peak, self.k,
            "reduction graph must be k-strippable with peak k"
        );
    }

    /// The designated high-indegree vertex of a chosen set gadget: the
    /// lowest-id clique vertex not adjacent to the root.
    fn designated_vertex(&self, set: usize) -> VertexId {
        let span = self.set_spans[set];
        span.start + (span.k - 1) / 2
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("set index {0} out of range")]
    BadSetIndex(usize),
    #[error("element {element} is not covered by the chosen sets")]
    NotACover { element: usize },
}

/// Orients the reduction graph acyclically so that only one designated
/// vertex per chosen set gadget reaches indegree k.
///
/// Removal order: the designated vertices first (taking all their edges),
/// then each chosen set gadget (the designated vertex's clique, the other
/// clique, then its root), then every element gadget, then the remaining set
/// gadgets; inside each stage vertices leave in min-remaining-degree order.
pub fn cover_to_orientation<'r>(
    ri: &'r ReductionInstance,
    cover: &[usize],
) -> Result<Orientation<'r>, CoverError> {
    let sets = ri.instance.sets();
    for &i in cover {
        if i >= sets.len() {
            return Err(CoverError::BadSetIndex(i));
        }
    }
    let chosen: BTreeSet<usize> = cover.iter().copied().collect();
    let mut covered = vec![false; ri.instance.universe_size()];
    for &i in &chosen {
        for &x in &sets[i] {
            covered[x] = true;
        }
    }
    if let Some(x) = covered.iter().position(|&c| !c) {
        return Err(CoverError::NotACover { element: x });
    }

    let mut stages: Vec<Vec<VertexId>> = Vec::new();
    let designated: Vec<VertexId> = chosen.iter().map(|&i| ri.designated_vertex(i)).collect();
    stages.push(designated.clone());
    for &i in &chosen {
        let span = ri.set_spans[i];
        let w = ri.designated_vertex(i);
        stages.push(span.left().filter(|&v| v != w).collect());
        stages.push(span.right().collect());
        stages.push(vec![span.root()]);
    }
    for x in 0..ri.instance.universe_size() {
        stages.push(ri.element_spans[x].vertices().collect());
    }
    for (j, span) in ri.set_spans.iter().enumerate() {
        if !chosen.contains(&j) {
            stages.push(span.vertices().collect());
        }
    }

    let order = strip_in_stages(&ri.graph, &stages, ri.k);
    let mut position = vec![0usize; ri.graph.n()];
    for (step, &v) in order.iter().enumerate() {
        position[v] = step;
    }
    let head = ri
        .graph
        .edges()
        .iter()
        .map(|&(u, v)| if position[u] < position[v] { u } else { v })
        .collect();
    let o = Orientation::from_heads(&ri.graph, head).expect("endpoints are valid heads");
    debug_assert!(verify_acyclic(&o));
    let high = (0..ri.graph.n()).filter(|&v| o.indegree(v) >= ri.k).count();
    assert!(
        high <= chosen.len(),
        "construction produced {} indegree-k vertices for a cover of {}",
        high,
        chosen.len()
    );
    Ok(o)
}

/// Removes stage 0 at full degree (exactly k each), then every later stage
/// in min-(remaining degree, id) order, asserting the k-1 ceiling that the
/// gadget structure guarantees.
fn strip_in_stages(g: &UndirectedGraph, stages: &[Vec<VertexId>], k: usize) -> Vec<VertexId> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let remove = |v: VertexId, deg: &mut Vec<usize>, removed: &mut Vec<bool>| {
        removed[v] = true;
        for &(_, w) in g.incidence(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    };
    for (si, stage) in stages.iter().enumerate() {
        if si == 0 {
            for &v in stage {
                assert_eq!(
                    deg[v], k,
                    "designated vertex {} must still have full degree",
                    v
                );
                remove(v, &mut deg, &mut removed);
                order.push(v);
            }
            continue;
        }
        let mut pending: BTreeSet<(usize, VertexId)> = stage.iter().map(|&v| (deg[v], v)).collect();
        while let Some(&(d, v)) = pending.iter().next() {
            pending.remove(&(d, v));
            debug_assert_eq!(d, deg[v]);
            assert!(
                d <= k - 1,
                "stage {} vertex {} still has degree {} > k - 1",
                si,
                v,
                d
            );
            remove(v, &mut deg, &mut removed);
            order.push(v);
            // refresh the keys of stage-mates that lost degree
            let updated: Vec<_> = pending
                .iter()
                .copied()
                .filter(|&(dd, w)| dd != deg[w])
                .collect();
            for (dd, w) in updated {
                pending.remove(&(dd, w));
                pending.insert((deg[w], w));
            }
        }
    }
    assert_eq!(order.len(), n, "stages must partition the vertices");
    order
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("orientation is cyclic")]
pub struct CyclicOrientation;

/// The subcollection read off an acyclic orientation plus its validity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionReport {
    pub cover: Vec<usize>,
    pub is_cover: bool,
    /// Vertices with indegree at least k.
    pub high_indegree_vertices: usize,
}

/// Reads a subcollection off an acyclic orientation: every set whose gadget
/// contains an indegree-k vertex, plus, for each element gadget containing
/// one, the lowest-index set containing that element. Its size never exceeds
/// the number of indegree-k vertices, and it is always a cover.
///
/// Vertices with indegree above k (possible only at set roots) are treated
/// as indegree-k witnesses so extraction stays sound on suboptimal
/// orientations.
pub fn orientation_to_cover(
    ri: &ReductionInstance,
    o: &Orientation<'_>,
) -> Result<ExtractionReport, CyclicOrientation> {
    if !verify_acyclic(o) {
        return Err(CyclicOrientation);
    }
    let k = ri.k;
    let mut chosen = BTreeSet::new();
    let mut high = 0;
    let mut element_hit = vec![false; ri.instance.universe_size()];
    for v in 0..ri.graph.n() {
        if o.indegree(v) >= k {
            high += 1;
            match ri.gadget_of[v] {
                GadgetRef::Set(i) => {
                    chosen.insert(i);
                }
                GadgetRef::Element(x) => {
                    element_hit[x] = true;
                }
            }
        }
    }
    for (x, &hit) in element_hit.iter().enumerate() {
        if hit {
            let set = ri
                .instance
                .sets()
                .iter()
                .position(|s| s.contains(&x))
                .expect("instance union covers every element");
            chosen.insert(set);
        }
    }
    let cover: Vec<usize> = chosen.into_iter().collect();
    assert!(
        cover.len() <= high,
        "extraction must not exceed the witness count"
    );
    let is_cover = ri.instance.covers(&cover);
    Ok(ExtractionReport {
        cover,
        is_cover,
        high_indegree_vertices: high,
    })
}
