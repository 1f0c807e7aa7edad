//! Graph and orientation data model: vertex-indexed multigraphs with stable
//! edge ids, per-edge orientations with cached indegrees, and the decreasing
//! indegree sequences the optimizers compare.

use std::cmp::Ordering;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
}

/// Errors from the line-oriented graph and orientation file formats.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected \"{expected}\"")]
    Malformed { line: usize, expected: &'static str },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("self-loop at line {line}")]
    SelfLoop { line: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("line {line}: unexpected trailing content")]
    Trailing { line: usize },
    #[error("line {line}: edge {edge} joins {u} and {v}")]
    EndpointMismatch {
        line: usize,
        edge: EdgeId,
        u: VertexId,
        v: VertexId,
    },
}

/// An undirected multigraph on vertices `0..n` with positional edge ids.
///
/// Parallel edges are permitted; self-loops are rejected. Edge ids follow
/// construction (file) order and key every per-edge structure in the crate,
/// so parallel edges stay distinguishable. Graphs are immutable once built
/// and can be shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    incidence: Vec<Vec<(EdgeId, VertexId)>>,
}

impl UndirectedGraph {
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self, GraphError> {
        let mut incidence = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            for &x in &[u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            incidence[u].push((id, v));
            incidence[v].push((id, u));
        }
        Ok(Self {
            n,
            edges,
            incidence,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if v == a {
            b
        } else {
            debug_assert_eq!(v, b);
            a
        }
    }

    /// Edges incident to `v` as `(edge id, other endpoint)`, in edge-id order.
    pub fn incidence(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Parses the edge-list format: a `"n m"` header, then `m` lines `"u v"`.
    /// Lines starting with `#` and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = significant_lines(text);
        let (line_no, header) = lines.next().ok_or(ParseError::Malformed {
            line: 1,
            expected: "n m",
        })?;
        let (n, m) = parse_pair(header).ok_or(ParseError::Malformed {
            line: line_no,
            expected: "n m",
        })?;
        let mut edges = Vec::with_capacity(m);
        for (line_no, content) in lines {
            if edges.len() == m {
                return Err(ParseError::Trailing { line: line_no });
            }
            let (u, v) = parse_pair(content).ok_or(ParseError::Malformed {
                line: line_no,
                expected: "u v",
            })?;
            for &x in &[u, v] {
                if x >= n {
                    return Err(ParseError::VertexOutOfRange {
                        line: line_no,
                        vertex: x,
                        n,
                    });
                }
            }
            if u == v {
                return Err(ParseError::SelfLoop { line: line_no });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(ParseError::EdgeCount {
                expected: m,
                found: edges.len(),
            });
        }
        Ok(Self::new(n, edges).expect("validated during parse"))
    }

    /// Serializes back to the edge-list format parsed by [`Self::parse`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u, v));
        }
        out
    }
}

/// A direction assignment over every edge of an [`UndirectedGraph`].
///
/// Stores the head endpoint per edge and a cached indegree per vertex,
/// updated incrementally on every flip. Orientations are mutable and meant
/// to be owned by one thread at a time; the underlying graph is shared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation<'g> {
    graph: &'g UndirectedGraph,
    head: Vec<VertexId>,
    indegree: Vec<usize>,
}

impl<'g> Orientation<'g> {
    pub fn from_heads(graph: &'g UndirectedGraph, head: Vec<VertexId>) -> Result<Self, GraphError> {
        assert_eq!(head.len(), graph.m(), "one head per edge");
        let mut indegree = vec![0; graph.n()];
        for (e, &h) in head.iter().enumerate() {
            let (u, v) = graph.endpoints(e);
            if h != u && h != v {
                return Err(GraphError::VertexOutOfRange {
                    vertex: h,
                    n: graph.n(),
                });
            }
            indegree[h] += 1;
        }
        Ok(Self {
            graph,
            head,
            indegree,
        })
    }

    /// Deterministic default orientation: every edge points at its larger-id
    /// endpoint.
    pub fn toward_larger(graph: &'g UndirectedGraph) -> Self {
        let head = graph.edges().iter().map(|&(u, v)| u.max(v)).collect();
        Self::from_heads(graph, head).expect("endpoints are valid heads")
    }

    /// Uniformly random orientation from a seeded generator.
    pub fn random(graph: &'g UndirectedGraph, seed: u64) -> Self {
        let mut rng = StdRng::seed_from_u64(seed);
        let head = graph
            .edges()
            .iter()
            .map(|&(u, v)| if rng.random::<bool>() { u } else { v })
            .collect();
        Self::from_heads(graph, head).expect("endpoints are valid heads")
    }

    pub fn graph(&self) -> &'g UndirectedGraph {
        self.graph
    }

    pub fn head(&self, e: EdgeId) -> VertexId {
        self.head[e]
    }

    pub fn tail(&self, e: EdgeId) -> VertexId {
        self.graph.other_endpoint(e, self.head[e])
    }

    pub fn heads(&self) -> &[VertexId] {
        &self.head
    }

    pub fn indegree(&self, v: VertexId) -> usize {
        self.indegree[v]
    }

    pub fn indegrees(&self) -> &[usize] {
        &self.indegree
    }

    pub fn max_indegree(&self) -> usize {
        self.indegree.iter().copied().max().unwrap_or(0)
    }

    /// Reverses a single edge, updating the cached indegrees.
    pub fn flip(&mut self, e: EdgeId) {
        let old = self.head[e];
        let new = self.graph.other_endpoint(e, old);
        self.head[e] = new;
        self.indegree[old] -= 1;
        self.indegree[new] += 1;
    }

    /// Reverses every edge.
    pub fn reverse_all(&mut self) {
        for e in 0..self.graph.m() {
            self.flip(e);
        }
    }

    /// Arcs leaving `v` as `(edge id, head)`, in edge-id order.
    pub fn out_arcs(&self, v: VertexId) -> impl Iterator<Item = (EdgeId, VertexId)> + '_ {
        self.graph
            .incidence(v)
            .iter()
            .copied()
            .filter(move |&(e, other)| self.head[e] == other)
    }

    /// Arcs entering `v` as `(edge id, tail)`, in edge-id order.
    pub fn in_arcs(&self, v: VertexId) -> impl Iterator<Item = (EdgeId, VertexId)> + '_ {
        self.graph
            .incidence(v)
            .iter()
            .copied()
            .filter(move |&(e, _)| self.head[e] == v)
    }

    pub fn outdegree(&self, v: VertexId) -> usize {
        self.out_arcs(v).count()
    }

    pub fn indegree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_indegrees(&self.indegree)
    }

    /// One `"tail head"` line per edge in edge-id order.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for e in 0..self.graph.m() {
            out.push_str(&format!("{} {}\n", self.tail(e), self.head(e)));
        }
        out
    }

    /// Parses an orientation file (`m` lines `"tail head"`, line i describing
    /// edge id i; `#`-prefixed and blank lines ignored) against `graph`.
    pub fn parse(graph: &'g UndirectedGraph, text: &str) -> Result<Self, ParseError> {
        let mut head = Vec::with_capacity(graph.m());
        for (line_no, content) in significant_lines(text) {
            if head.len() == graph.m() {
                return Err(ParseError::Trailing { line: line_no });
            }
            let (t, h) = parse_pair(content).ok_or(ParseError::Malformed {
                line: line_no,
                expected: "tail head",
            })?;
            let e = head.len();
            let (u, v) = graph.endpoints(e);
            if (t, h) != (u, v) && (t, h) != (v, u) {
                return Err(ParseError::EndpointMismatch {
                    line: line_no,
                    edge: e,
                    u,
                    v,
                });
            }
            head.push(h);
        }
        if head.len() != graph.m() {
            return Err(ParseError::EdgeCount {
                expected: graph.m(),
                found: head.len(),
            });
        }
        Ok(Self::from_heads(graph, head).expect("validated during parse"))
    }

    /// Recounts indegrees from the head array; guards the cache in debug
    /// builds after every mutation-heavy routine.
    pub fn debug_validate(&self) {
        if cfg!(debug_assertions) {
            let mut recount = vec![0; self.graph.n()];
            for (e, &h) in self.head.iter().enumerate() {
                let (u, v) = self.graph.endpoints(e);
                assert!(h == u || h == v, "head of edge {} is not an endpoint", e);
                recount[h] += 1;
            }
            assert_eq!(recount, self.indegree, "cached indegrees diverged");
        }
    }
}

/// Indegrees of an orientation sorted in decreasing order; the optimization
/// objective, compared lexicographically (smaller is more egalitarian).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn from_indegrees(indegrees: &[usize]) -> Self {
        let mut values = indegrees.to_vec();
        values.sort_unstable_by(|a, b| b.cmp(a));
        Self(values)
    }

    /// Builds from an already decreasing list; panics if not sorted.
    pub fn from_sorted(values: Vec<usize>) -> Self {
        assert!(values.windows(2).all(|w| w[0] >= w[1]), "not decreasing");
        Self(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Lexicographic comparison of equal-length sequences; `Less` is
    /// preferred. Length mismatch is a contract violation.
    pub fn lex_compare(&self, other: &Self) -> Ordering {
        assert_eq!(
            self.0.len(),
            other.0.len(),
            "sequences compare only on the same graph"
        );
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for DegreeSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DegreeSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", v)?;
            first = false;
        }
        Ok(())
    }
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let mut it = s.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}
