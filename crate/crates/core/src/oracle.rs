//! Exhaustive ground truth over all `2^m` orientations of a small graph.
//!
//! Every orientation is enumerated by edge-id binary counting (bit e clear
//! means edge e keeps its as-listed direction), filtered by an optional
//! structural constraint and scored under one objective. The witness is the
//! first optimum in counting order, so results are deterministic; shards of
//! the index range can therefore be evaluated independently and merged by
//! (value, index), which is what the parallel path does.

use thiserror::Error;

use crate::graph::{DegreeSequence, Orientation, UndirectedGraph, VertexId};
use crate::minlex::ConvexCost;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Enumeration refuses beyond this edge count.
pub const MAX_ORACLE_EDGES: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("graph has {m} edges; oracle enumeration is capped at {max}")]
pub struct OracleTooLarge {
    pub m: usize,
    pub max: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    None,
    StronglyConnected,
    Acyclic,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Objective {
    MinMaxIndegree,
    MinLexSequence,
    MinConvexCost(ConvexCost),
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleQuery {
    pub constraint: Constraint,
    pub objective: Objective,
}

/// Optimal objective value, mirroring the query's objective.
#[derive(Debug, Clone, PartialEq)]
pub enum OracleValue {
    MaxIndegree(usize),
    LexSequence(DegreeSequence),
    ConvexCost(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum OracleOutcome<'g> {
    Optimal {
        value: OracleValue,
        witness: Orientation<'g>,
    },
    /// The constraint admits no orientation at all.
    Infeasible,
}

/// Internal comparable score; ordered by (score, mask) with the lowest mask
/// winning ties so shard merges are deterministic.
#[derive(Debug, Clone, PartialEq)]
enum Score {
    Max(usize),
    Lex(Vec<usize>),
    Cost(f64),
}

impl Score {
    fn better_than(&self, other: &Score) -> bool {
        match (self, other) {
            (Score::Max(a), Score::Max(b)) => a < b,
            (Score::Lex(a), Score::Lex(b)) => a < b,
            (Score::Cost(a), Score::Cost(b)) => a < b,
            _ => unreachable!("scores from one query share a variant"),
        }
    }
}

struct Shard {
    scratch_indeg: Vec<usize>,
    scratch_sorted: Vec<usize>,
    best: Option<(Score, u64)>,
}

impl Shard {
    fn new(n: usize) -> Self {
        Self {
            scratch_indeg: vec![0; n],
            scratch_sorted: Vec::with_capacity(n),
            best: None,
        }
    }

    fn consider(&mut self, g: &UndirectedGraph, q: &OracleQuery, mask: u64) {
        self.scratch_indeg.fill(0);
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let head = if mask >> e & 1 == 0 { v } else { u };
            self.scratch_indeg[head] += 1;
        }
        let feasible = match q.constraint {
            Constraint::None => true,
            Constraint::StronglyConnected => strongly_connected_mask(g, mask, &self.scratch_indeg),
            Constraint::Acyclic => acyclic_mask(g, mask, &self.scratch_indeg),
        };
        if !feasible {
            return;
        }
        let score = match &q.objective {
            Objective::MinMaxIndegree => {
                Score::Max(self.scratch_indeg.iter().copied().max().unwrap_or(0))
            }
            Objective::MinLexSequence => {
                self.scratch_sorted.clear();
                self.scratch_sorted.extend_from_slice(&self.scratch_indeg);
                self.scratch_sorted.sort_unstable_by(|a, b| b.cmp(a));
                Score::Lex(self.scratch_sorted.clone())
            }
            Objective::MinConvexCost(f) => {
                let mut total = 0.0;
                for &d in &self.scratch_indeg {
                    total += f.eval(d).expect("cost table sized to the maximum degree");
                }
                Score::Cost(total)
            }
        };
        match &self.best {
            Some((cur, _)) if !score.better_than(cur) => {}
            _ => self.best = Some((score, mask)),
        }
    }
}

fn head_of(g: &UndirectedGraph, mask: u64, e: usize) -> VertexId {
    let (u, v) = g.edges()[e];
    if mask >> e & 1 == 0 {
        v
    } else {
        u
    }
}

fn strongly_connected_mask(g: &UndirectedGraph, mask: u64, indeg: &[usize]) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    // quick reject: a vertex with no in-arc or no out-arc cannot be on a cycle
    for v in 0..n {
        if indeg[v] == 0 || indeg[v] == g.degree(v) {
            return false;
        }
    }
    for backward in [false, true] {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut count = 1;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &(e, w) in g.incidence(x) {
                let head = head_of(g, mask, e);
                let can = if backward { head == x } else { head == w };
                if can && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        if count != n {
            return false;
        }
    }
    true
}

fn acyclic_mask(g: &UndirectedGraph, mask: u64, indeg: &[usize]) -> bool {
    let n = g.n();
    let mut deg = indeg.to_vec();
    let mut stack: Vec<VertexId> = (0..n).filter(|&v| deg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &(e, w) in g.incidence(v) {
            if head_of(g, mask, e) == w {
                deg[w] -= 1;
                if deg[w] == 0 {
                    stack.push(w);
                }
            }
        }
    }
    seen == n
}

fn merge(a: Option<(Score, u64)>, b: Option<(Score, u64)>) -> Option<(Score, u64)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            if y.0.better_than(&x.0) || (y.0 == x.0 && y.1 < x.1) {
                Some(y)
            } else {
                Some(x)
            }
        }
    }
}

fn outcome_from<'g>(g: &'g UndirectedGraph, best: Option<(Score, u64)>) -> OracleOutcome<'g> {
    match best {
        None => OracleOutcome::Infeasible,
        Some((score, mask)) => {
            let head = (0..g.m()).map(|e| head_of(g, mask, e)).collect();
            let witness = Orientation::from_heads(g, head).expect("mask heads are endpoints");
            let value = match score {
                Score::Max(k) => OracleValue::MaxIndegree(k),
                Score::Lex(seq) => OracleValue::LexSequence(DegreeSequence::from_sorted(seq)),
                Score::Cost(c) => OracleValue::ConvexCost(c),
            };
            OracleOutcome::Optimal { value, witness }
        }
    }
}

fn check_size(g: &UndirectedGraph, q: &OracleQuery) -> Result<(), OracleTooLarge> {
    if g.m() > MAX_ORACLE_EDGES {
        return Err(OracleTooLarge {
            m: g.m(),
            max: MAX_ORACLE_EDGES,
        });
    }
    if let Objective::MinConvexCost(f) = &q.objective {
        assert!(
            f.max_indegree() >= g.max_degree(),
            "cost table must cover the maximum possible indegree"
        );
    }
    Ok(())
}

/// Enumerates every orientation, filters by the constraint, and returns the
/// optimum with its first witness, or `Infeasible`. Runs sharded in parallel
/// when the `parallel` feature is enabled.
pub fn solve<'g>(
    g: &'g UndirectedGraph,
    q: &OracleQuery,
) -> Result<OracleOutcome<'g>, OracleTooLarge> {
    check_size(g, q)?;
    #[cfg(feature = "parallel")]
    {
        let total: usize = 1usize << g.m();
        let best = (0..total)
            .into_par_iter()
            .with_min_len(1 << 10)
            .fold(
                || Shard::new(g.n()),
                |mut shard, mask| {
                    shard.consider(g, q, mask as u64);
                    shard
                },
            )
            .map(|shard| shard.best)
            .reduce(|| None, merge);
        Ok(outcome_from(g, best))
    }
    #[cfg(not(feature = "parallel"))]
    {
        solve_sequential(g, q)
    }
}

/// Single-threaded enumeration; always available and used as the benchmark
/// baseline for the parallel path.
pub fn solve_sequential<'g>(
    g: &'g UndirectedGraph,
    q: &OracleQuery,
) -> Result<OracleOutcome<'g>, OracleTooLarge> {
    check_size(g, q)?;
    let mut shard = Shard::new(g.n());
    for mask in 0..(1u64 << g.m()) {
        shard.consider(g, q, mask);
    }
    Ok(outcome_from(g, shard.best))
}

/// Convenience accessors for tests and the CLI.
impl<'g> OracleOutcome<'g> {
    pub fn expect_optimal(self) -> (OracleValue, Orientation<'g>) {
        match self {
            OracleOutcome::Optimal { value, witness } => (value, witness),
            OracleOutcome::Infeasible => panic!("oracle reported infeasible"),
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, OracleOutcome::Infeasible)
    }
}

impl OracleValue {
    pub fn as_max(&self) -> usize {
        match self {
            OracleValue::MaxIndegree(k) => *k,
            _ => panic!("not a max-indegree value"),
        }
    }

    pub fn as_sequence(&self) -> &DegreeSequence {
        match self {
            OracleValue::LexSequence(s) => s,
            _ => panic!("not a sequence value"),
        }
    }

    pub fn as_cost(&self) -> f64 {
        match self {
            OracleValue::ConvexCost(c) => *c,
            _ => panic!("not a cost value"),
        }
    }
}
