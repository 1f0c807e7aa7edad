//! Acceptance suite: every optimizer is held against the exhaustive oracle
//! and the structural checks at desk scale. Each test prints one PASS line
//! (run with `cargo test --test acceptance -- --nocapture` to see them all).

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use egal_orient::acyclic::{stripping, verify_acyclic};
use egal_orient::corpus;
use egal_orient::graph::{EdgeId, Orientation, UndirectedGraph};
use egal_orient::minlex::{
    apply_cycle_reversal, convex_cost, cycle_reversal_sequence, path_reversal, path_reversal_from,
    ConvexCost, Reversal,
};
use egal_orient::oracle::{self, Constraint, Objective, OracleQuery};
use egal_orient::reduction::{
    build_gadget, build_reduction, cover_to_orientation, orientation_to_cover, SetCoverInstance,
};
use egal_orient::routing::{
    build_routing, check_partition, ear_decomposition, finalize_numeric, min_outdegree_routing,
    route, simulate_all_pairs, validate_ears, ArcLabel, Ear, EarDecomposition, SymbolicInterval,
};
use egal_orient::strong::{
    check_one_edge_structure, sc_lower_bound, sc_path_reversal, two_reaches,
};

fn pass(criterion: usize, name: &str, detail: String, start: Instant) {
    println!(
        "criterion {:>2} ({}): PASS — {} [{:.2?}]",
        criterion,
        name,
        detail,
        start.elapsed()
    );
}

/// Criterion 1 corpus: every labeled connected graph with n <= 5 plus 200
/// seeded random multigraphs with m <= 14.
fn minlex_corpus() -> Vec<UndirectedGraph> {
    let mut graphs = corpus::all_connected_graphs(5);
    let mut rng = StdRng::seed_from_u64(0xE6A1_0001);
    for _ in 0..200 {
        let n = rng.random_range(2..=7);
        let m = rng.random_range(1..=14);
        graphs.push(corpus::random_multigraph(&mut rng, n, m));
    }
    graphs
}

/// Criterion 4 corpus: every labeled bridgeless connected graph with n <= 5
/// plus 100 seeded random bridgeless multigraphs with m <= 12.
fn bridgeless_corpus() -> Vec<UndirectedGraph> {
    let mut graphs = corpus::all_bridgeless_connected_graphs(5);
    let mut rng = StdRng::seed_from_u64(0xE6A1_0004);
    for _ in 0..100 {
        let n = rng.random_range(2..=6);
        let extra = rng.random_range(0..=(12usize.saturating_sub(n.max(3))));
        let g = corpus::random_bridgeless(&mut rng, n, extra);
        assert!(g.m() <= 12);
        graphs.push(g);
    }
    graphs
}

#[test]
fn criterion_01_minlex_optimality() {
    let start = Instant::now();
    let graphs = minlex_corpus();
    let q = OracleQuery {
        constraint: Constraint::None,
        objective: Objective::MinLexSequence,
    };
    for g in &graphs {
        let (o, _) = path_reversal(g);
        let (value, _) = oracle::solve(g, &q).unwrap().expect_optimal();
        assert_eq!(
            o.indegree_sequence(),
            *value.as_sequence(),
            "min-lex mismatch on n={} m={} edges={:?}",
            g.n(),
            g.m(),
            g.edges()
        );
    }
    pass(
        1,
        "min-lex optimality",
        format!("{} graphs", graphs.len()),
        start,
    );
}

#[test]
fn criterion_02_convex_cost_optimality() {
    let start = Instant::now();
    let graphs: Vec<_> = minlex_corpus()
        .into_iter()
        .filter(|g| g.m() <= 10)
        .collect();
    let mut checked = 0;
    for g in &graphs {
        let (o, _) = path_reversal(g);
        for f in [
            ConvexCost::square(g.max_degree()),
            ConvexCost::pow2(g.max_degree()),
        ] {
            let achieved = convex_cost(&o, &f).unwrap();
            let q = OracleQuery {
                constraint: Constraint::None,
                objective: Objective::MinConvexCost(f),
            };
            let (value, _) = oracle::solve(g, &q).unwrap().expect_optimal();
            assert_eq!(
                achieved,
                value.as_cost(),
                "convex cost mismatch on {:?}",
                g.edges()
            );
            checked += 1;
        }
    }
    pass(
        2,
        "convex-cost optimality",
        format!("{} graph/cost pairs", checked),
        start,
    );
}

/// A directed cycle of the orientation found by DFS, if one exists.
fn find_directed_cycle(o: &Orientation<'_>, start_at: usize) -> Option<Vec<EdgeId>> {
    let n = o.graph().n();
    if n == 0 {
        return None;
    }
    let mut color = vec![0u8; n]; // 0 fresh, 1 on stack, 2 done
    for shift in 0..n {
        let root = (start_at + shift) % n;
        if color[root] != 0 {
            continue;
        }
        // iterative DFS keeping the arc stack
        let mut stack: Vec<(usize, Vec<(EdgeId, usize)>)> =
            vec![(root, o.out_arcs(root).collect())];
        let mut path: Vec<EdgeId> = Vec::new();
        color[root] = 1;
        while let Some((v, arcs)) = stack.last_mut() {
            if let Some((e, h)) = arcs.pop() {
                if color[h] == 1 {
                    // found a cycle: arcs on the path from h to v, plus e
                    let mut cycle = Vec::new();
                    let mut collecting = false;
                    for &pe in &path {
                        if o.tail(pe) == h {
                            collecting = true;
                        }
                        if collecting {
                            cycle.push(pe);
                        }
                    }
                    cycle.push(e);
                    return Some(cycle);
                }
                if color[h] == 0 {
                    color[h] = 1;
                    path.push(e);
                    let next: Vec<_> = o.out_arcs(h).collect();
                    stack.push((h, next));
                }
            } else {
                color[*v] = 2;
                stack.pop();
                path.pop();
            }
        }
    }
    None
}

#[test]
fn criterion_03_cycle_reversal_transform() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0xE6A1_0003);
    let mut done = 0;
    while done < 100 {
        let n = rng.random_range(3..=6);
        let extra = rng.random_range(0..=5);
        let g = corpus::random_bridgeless(&mut rng, n, extra);
        let o1 = Orientation::random(&g, rng.random());
        let mut o2 = o1.clone();
        for _ in 0..rng.random_range(1..=3) {
            if let Some(cycle) = find_directed_cycle(&o2, rng.random_range(0..g.n())) {
                apply_cycle_reversal(&mut o2, &cycle);
            }
        }
        for v in 0..g.n() {
            assert_eq!(o1.indegree(v), o2.indegree(v));
        }
        let cycles = cycle_reversal_sequence(&o1, &o2).unwrap();
        let mut cur = o1.clone();
        for c in &cycles {
            apply_cycle_reversal(&mut cur, c);
        }
        assert_eq!(cur, o2, "transform failed on {:?}", g.edges());
        done += 1;
    }
    pass(
        3,
        "cycle-reversal transform",
        format!("{}/100 pairs", done),
        start,
    );
}

#[test]
fn criterion_04_sc_minmax_triple_equality() {
    let start = Instant::now();
    let graphs = bridgeless_corpus();
    let q = OracleQuery {
        constraint: Constraint::StronglyConnected,
        objective: Objective::MinMaxIndegree,
    };
    for g in &graphs {
        let (o, _) = sc_path_reversal(g).unwrap();
        let achieved = o.max_indegree();
        let (value, _) = oracle::solve(g, &q).unwrap().expect_optimal();
        let bound = sc_lower_bound(g).unwrap();
        assert_eq!(
            achieved,
            value.as_max(),
            "oracle mismatch on {:?}",
            g.edges()
        );
        assert_eq!(achieved, bound, "lower-bound mismatch on {:?}", g.edges());
    }
    pass(
        4,
        "sc min-max triple equality",
        format!("{} graphs", graphs.len()),
        start,
    );
}

#[test]
fn criterion_05_structural_certificate() {
    let start = Instant::now();
    let graphs = bridgeless_corpus();
    for g in &graphs {
        let (o, _) = sc_path_reversal(g).unwrap();
        let report = check_one_edge_structure(&o)
            .unwrap_or_else(|e| panic!("certificate failed on {:?}: {}", g.edges(), e));
        assert_eq!(report.max_indegree, o.max_indegree());
    }
    pass(
        5,
        "structural certificate",
        format!("{} graphs", graphs.len()),
        start,
    );
}

#[test]
fn criterion_06_routing_feasibility() {
    let start = Instant::now();
    let graphs = bridgeless_corpus();
    let mut routed_graphs = 0;
    for g in &graphs {
        if g.n() < 2 {
            continue; // no ordered pairs to route
        }
        let (o, _) = sc_path_reversal(g).unwrap();
        let ears = ear_decomposition(&o).unwrap();
        validate_ears(&o, &ears).unwrap();
        // build_routing re-checks the partition invariant after every ear
        let (ord, labels) = build_routing(&o, &ears).unwrap();
        check_partition(&o, &ord, &labels).unwrap();
        // every arc of a multi-edge ear has exactly one interval; single-edge
        // ears are the only Unused entries
        let mut single_edge_arcs = vec![false; g.m()];
        for ear in &ears.ears[1..] {
            if ear.arcs.len() == 1 {
                single_edge_arcs[ear.arcs[0]] = true;
            }
        }
        for e in 0..g.m() {
            match labels[e] {
                ArcLabel::Interval(_) => assert!(!single_edge_arcs[e]),
                ArcLabel::Unused => assert!(single_edge_arcs[e]),
                ArcLabel::Unassigned => panic!("arc {} left unassigned", e),
            }
        }
        let tables = finalize_numeric(&o, &ord, &labels).unwrap();
        let summary = simulate_all_pairs(&tables)
            .unwrap_or_else(|e| panic!("delivery failed on {:?}: {}", g.edges(), e));
        assert_eq!(summary.pairs, g.n() * (g.n() - 1));
        routed_graphs += 1;
    }

    // the worked 8-vertex instance reproduces the documented labels
    let g = UndirectedGraph::new(
        8,
        vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (3, 5),
            (5, 6),
            (6, 7),
            (7, 0),
        ],
    )
    .unwrap();
    let o = Orientation::from_heads(&g, vec![1, 2, 3, 4, 0, 5, 6, 7, 0]).unwrap();
    let ears = EarDecomposition {
        ears: vec![
            Ear {
                vertices: vec![0, 1, 2, 3, 4, 0],
                arcs: vec![0, 1, 2, 3, 4],
            },
            Ear {
                vertices: vec![3, 5, 6, 7, 0],
                arcs: vec![5, 6, 7, 8],
            },
        ],
    };
    validate_ears(&o, &ears).unwrap();
    let (ord, labels) = build_routing(&o, &ears).unwrap();
    assert_eq!(
        ord.to_vec(),
        vec![0, 1, 2, 3, 5, 6, 7, 4],
        "final ordering A,B,C,D,F,G,H,E"
    );
    assert_eq!(
        labels[3],
        ArcLabel::Interval(SymbolicInterval {
            lo: 4,
            hi: 3,
            lo_closed: true,
            hi_closed: false
        }),
        "arc D->E relabeled [E, D)"
    );
    assert_eq!(
        labels[5],
        ArcLabel::Interval(SymbolicInterval {
            lo: 3,
            hi: 4,
            lo_closed: false,
            hi_closed: false
        }),
        "arc D->F labeled (D, E)"
    );
    let tables = finalize_numeric(&o, &ord, &labels).unwrap();
    assert_eq!(simulate_all_pairs(&tables).unwrap().pairs, 56);
    assert!(
        route(&tables, 5, 1).unwrap().ends_with(&[0]),
        "F-to-B exits to the first ear"
    );

    pass(
        6,
        "routing feasibility",
        format!("{} graphs all-pairs + worked instance", routed_graphs),
        start,
    );
}

#[test]
fn criterion_07_table_compactness() {
    let start = Instant::now();
    let graphs = bridgeless_corpus();
    let q = OracleQuery {
        constraint: Constraint::StronglyConnected,
        objective: Objective::MinMaxIndegree,
    };
    let mut checked = 0;
    for g in &graphs {
        if g.n() < 2 {
            continue;
        }
        let tables = min_outdegree_routing(g).unwrap();
        let (value, _) = oracle::solve(g, &q).unwrap().expect_optimal();
        assert_eq!(
            tables.max_table_size(),
            value.as_max(),
            "table size differs from the oracle optimum on {:?}",
            g.edges()
        );
        checked += 1;
    }
    pass(
        7,
        "table compactness",
        format!("{} graphs vs oracle", checked),
        start,
    );
}

#[test]
fn criterion_08_stripping_optimality() {
    let start = Instant::now();
    let graphs: Vec<_> = minlex_corpus()
        .into_iter()
        .filter(|g| g.m() <= 12)
        .collect();
    let q = OracleQuery {
        constraint: Constraint::Acyclic,
        objective: Objective::MinMaxIndegree,
    };
    for g in &graphs {
        let (so, o) = stripping(g);
        assert!(verify_acyclic(&o));
        let (value, _) = oracle::solve(g, &q).unwrap().expect_optimal();
        assert_eq!(
            so.peak,
            value.as_max(),
            "stripping peak mismatch on {:?}",
            g.edges()
        );
    }
    // pinned instances
    assert_eq!(stripping(&corpus::complete(4)).0.peak, 3);
    assert_eq!(stripping(&corpus::cycle(4)).0.peak, 2);
    assert_eq!(stripping(&corpus::star(3)).0.peak, 1);
    assert_eq!(stripping(&corpus::path(5)).0.peak, 1);
    pass(
        8,
        "stripping optimality",
        format!("{} graphs + pinned", graphs.len()),
        start,
    );
}

#[test]
fn criterion_09_gadget_validity() {
    let start = Instant::now();
    let mut built = 0;
    let mut subgraphs = 0;
    for k in [3usize, 5, 7] {
        for ell in 1..k {
            let gadget =
                build_gadget(k, ell).unwrap_or_else(|e| panic!("H_{} k={}: {}", ell, k, e));
            let g = &gadget.graph;
            // properties 1 and 2: degrees
            for v in 0..g.n() {
                let expected = if v == gadget.root { k - ell } else { k };
                assert_eq!(g.degree(v), expected);
            }
            // property 4 on the whole gadget
            assert!(stripping(g).0.peak <= k - 1);
            built += 1;
            // gadget minus any one vertex stays (k-1)-strippable
            for drop in 0..g.n() {
                let mut map = vec![usize::MAX; g.n()];
                let mut next = 0;
                for v in 0..g.n() {
                    if v != drop {
                        map[v] = next;
                        next += 1;
                    }
                }
                let edges: Vec<_> = g
                    .edges()
                    .iter()
                    .filter(|&&(u, v)| u != drop && v != drop)
                    .map(|&(u, v)| (map[u], map[v]))
                    .collect();
                let sub = UndirectedGraph::new(next, edges).unwrap();
                assert!(
                    stripping(&sub).0.peak <= k - 1,
                    "H_{} (k={}) minus vertex {} exceeds k-1",
                    ell,
                    k,
                    drop
                );
                subgraphs += 1;
            }
        }
    }
    pass(
        9,
        "gadget validity",
        format!("{} gadgets, {} vertex-deleted runs", built, subgraphs),
        start,
    );
}

#[test]
fn criterion_10_reduction_round_trip() {
    let start = Instant::now();
    // the worked instance: universe {a..e}, S1={a,b,d,e}, S2={a,c,e}, S3={b,c,e}
    let inst =
        SetCoverInstance::new(5, vec![vec![0, 1, 3, 4], vec![0, 2, 4], vec![1, 2, 4]]).unwrap();
    let ri = build_reduction(&inst);
    assert_eq!(ri.k, 5);
    assert_eq!(ri.graph.n(), 91);
    for (i, set) in inst.sets().iter().enumerate() {
        assert_eq!(ri.graph.degree(ri.set_roots[i]), 5 + set.len() - 1);
    }
    let o = cover_to_orientation(&ri, &[0, 2]).unwrap();
    assert!(verify_acyclic(&o));
    let high = (0..ri.graph.n()).filter(|&v| o.indegree(v) >= 5).count();
    assert!(
        high <= 2,
        "cover of 2 produced {} indegree-5 vertices",
        high
    );
    let report = orientation_to_cover(&ri, &o).unwrap();
    assert!(report.is_cover);
    assert!(report.cover.len() <= 2);

    // micro-instances: enumeration agrees with the constructive direction
    let micros = vec![
        SetCoverInstance::new(1, vec![vec![0]]).unwrap(),
        SetCoverInstance::new(2, vec![vec![0, 1]]).unwrap(),
        SetCoverInstance::new(2, vec![vec![0], vec![1]]).unwrap(),
        SetCoverInstance::new(2, vec![vec![0, 1], vec![1]]).unwrap(),
        SetCoverInstance::new(2, vec![vec![0], vec![0, 1]]).unwrap(),
        SetCoverInstance::new(2, vec![vec![0, 1], vec![0, 1]]).unwrap(),
    ];
    for inst in &micros {
        let ri = build_reduction(inst);
        let s = inst.sets().len();
        let mut min_cover = usize::MAX;
        let mut best_constructive = usize::MAX;
        for mask in 1u32..(1 << s) {
            let chosen: Vec<usize> = (0..s).filter(|&i| mask >> i & 1 == 1).collect();
            if inst.covers(&chosen) {
                min_cover = min_cover.min(chosen.len());
                let o = cover_to_orientation(&ri, &chosen).unwrap();
                assert!(verify_acyclic(&o));
                let high = (0..ri.graph.n()).filter(|&v| o.indegree(v) >= ri.k).count();
                assert!(high <= chosen.len());
                best_constructive = best_constructive.min(high);
                let report = orientation_to_cover(&ri, &o).unwrap();
                assert!(report.is_cover);
                assert!(report.cover.len() <= chosen.len());
            }
        }
        assert_eq!(
            best_constructive, min_cover,
            "constructive optimum differs from enumerated cover minimum"
        );
    }
    pass(
        10,
        "reduction round-trip",
        format!("worked instance + {} micro-instances", micros.len()),
        start,
    );
}

fn assert_monotone_trace(trace: &[Reversal], m: usize, what: &str) {
    assert!(
        trace.len() <= m,
        "{}: {} reversals exceed m = {}",
        what,
        trace.len(),
        m
    );
    for w in trace.windows(2) {
        assert!(
            w[0].end_indegree >= w[1].end_indegree,
            "{}: end indegree rose from {} to {}",
            what,
            w[0].end_indegree,
            w[1].end_indegree
        );
    }
}

#[test]
fn criterion_11_phase_monotonicity() {
    let start = Instant::now();
    let mut traced = 0;
    for g in &minlex_corpus() {
        let (_, trace) = path_reversal(g);
        assert_monotone_trace(&trace, g.m(), "path reversal");
        traced += 1;
        // a random start exercises different phases
        let (_, trace) = path_reversal_from(Orientation::random(g, 0x11));
        assert_monotone_trace(&trace, g.m(), "path reversal (random start)");
        traced += 1;
    }
    for g in &bridgeless_corpus() {
        let (_, trace) = sc_path_reversal(g).unwrap();
        assert_monotone_trace(&trace, g.m(), "sc path reversal");
        traced += 1;
    }
    pass(
        11,
        "phase monotonicity",
        format!("{} traced runs", traced),
        start,
    );
}

/// Supporting spot-check promised alongside the strong module: two-reach
/// membership is what the certificate's witness set is built from, so the
/// tightness of criterion 4 plus this keeps `two_reaches` honest on the
/// corpus.
#[test]
fn witness_members_two_reach_the_max_vertex() {
    let graphs = corpus::all_bridgeless_connected_graphs(4);
    for g in &graphs {
        if g.n() < 2 {
            continue;
        }
        let (o, _) = sc_path_reversal(g).unwrap();
        let report = check_one_edge_structure(&o).unwrap();
        let v = *report
            .witness
            .iter()
            .find(|&&u| o.indegree(u) == report.max_indegree)
            .unwrap();
        for &u in &report.witness {
            if u != v {
                assert_eq!(two_reaches(&o, u, v).value, 2);
            }
        }
    }
}
