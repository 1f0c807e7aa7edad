//! `egal-orient`: command-line front end over the orientation toolkit.
//!
//! Exit codes: 0 on success, 1 on domain errors (bridged input, refused
//! sizes, invalid covers), 2 on usage and file-parse errors. Output is
//! line-oriented and deterministic given the flags and seed.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use egal_orient::graph::{Orientation, UndirectedGraph};
use egal_orient::minlex::{self, ConvexCost, Reversal};
use egal_orient::oracle::{self, Constraint, Objective, OracleOutcome, OracleQuery, OracleValue};
use egal_orient::reduction::{self, SetCoverInstance};
use egal_orient::routing;
use egal_orient::strong;

#[derive(Parser)]
#[command(
    name = "egal-orient",
    version,
    about = "Egalitarian graph orientations"
)]
struct Cli {
    /// Suppress orientation bodies and per-pair routes; print headlines only.
    #[arg(long, global = true)]
    quiet: bool,
    /// Seed for the randomized starting orientation where one is used.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Minimum-lexicographic orientation via path reversal.
    Minlex {
        graph: PathBuf,
        /// Print one "reversal <u> <v> <end-indegree>" line per iteration.
        #[arg(long)]
        trace: bool,
    },
    /// Strongly connected orientation minimizing the maximum indegree.
    ScMinmax {
        graph: PathBuf,
        #[arg(long)]
        trace: bool,
        /// Print the witness set certifying optimality.
        #[arg(long)]
        certificate: bool,
        /// Experimental: also print the achieved indegree sequence and, on
        /// small inputs, the oracle's strongly connected minimum; no
        /// optimality of the sequence is claimed.
        #[arg(long)]
        compare_lex: bool,
    },
    /// Lower bounds.
    Bound {
        #[command(subcommand)]
        what: BoundCmd,
    },
    /// Minimum-outdegree interval routing tables.
    RouteTables { graph: PathBuf },
    /// Build tables and simulate message delivery.
    RouteSim {
        graph: PathBuf,
        /// "all" or "s,t".
        #[arg(long, default_value = "all")]
        pairs: String,
    },
    /// Acyclic orientation minimizing the maximum indegree.
    Strip { graph: PathBuf },
    /// Exhaustive enumeration over all orientations (m <= 24).
    Oracle {
        graph: PathBuf,
        /// none | sc | acyclic
        #[arg(long)]
        constraint: String,
        /// minmax | minlex | convex:square | convex:pow2
        #[arg(long)]
        objective: String,
    },
    /// Set-cover reduction tooling.
    Gadget {
        #[command(subcommand)]
        what: GadgetCmd,
    },
}

#[derive(Subcommand)]
enum BoundCmd {
    /// Subset lower bound on the strongly connected min-max indegree
    /// (refuses n > 20).
    Sc { graph: PathBuf },
}

#[derive(Subcommand)]
enum GadgetCmd {
    /// Emit the gadget H_l as a graph file with # metadata.
    Build { k: usize, l: usize },
    /// Emit the reduction graph for a set-cover file, with a # sidecar line
    /// mapping roots.
    Reduce { setcover: PathBuf },
    /// Orient the reduction graph from a cover (comma-separated set
    /// indices); reports the indegree-k count and acyclicity.
    Verify { setcover: PathBuf, cover: String },
    /// Recover a cover from an orientation file of the reduction graph.
    Extract {
        setcover: PathBuf,
        orientation: PathBuf,
    },
}

enum AppError {
    /// Bad usage or unparseable input files: exit 2.
    Usage(String),
    /// Well-formed input outside an algorithm's domain: exit 1.
    Domain(String),
}

impl AppError {
    fn usage(e: impl std::fmt::Display) -> Self {
        AppError::Usage(e.to_string())
    }

    fn domain(e: impl std::fmt::Display) -> Self {
        AppError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{}", output);
            ExitCode::SUCCESS
        }
        Err(AppError::Domain(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path) -> Result<UndirectedGraph, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::usage(format!("{}: {}", path.display(), e)))?;
    UndirectedGraph::parse(&text).map_err(AppError::usage)
}

fn read_setcover(path: &Path) -> Result<SetCoverInstance, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::usage(format!("{}: {}", path.display(), e)))?;
    SetCoverInstance::parse(&text).map_err(AppError::usage)
}

fn push_trace(out: &mut String, trace: &[Reversal]) {
    for r in trace {
        writeln!(out, "reversal {} {} {}", r.start, r.end, r.end_indegree).unwrap();
    }
}

fn run(cli: Cli) -> Result<String, AppError> {
    let mut out = String::new();
    match cli.cmd {
        Cmd::Minlex { graph, trace } => {
            let g = read_graph(&graph)?;
            let start = minlex::arbitrary_orientation(&g, cli.seed);
            let (o, steps) = minlex::path_reversal_from(start);
            if trace {
                push_trace(&mut out, &steps);
            }
            writeln!(out, "sequence: {}", o.indegree_sequence()).unwrap();
            if !cli.quiet {
                out.push_str(&o.serialize());
            }
        }
        Cmd::ScMinmax {
            graph,
            trace,
            certificate,
            compare_lex,
        } => {
            let g = read_graph(&graph)?;
            let (o, steps) = strong::sc_path_reversal(&g).map_err(AppError::domain)?;
            if trace {
                push_trace(&mut out, &steps);
            }
            writeln!(out, "max indegree: {}", o.max_indegree()).unwrap();
            if certificate {
                let report = strong::check_one_edge_structure(&o).map_err(AppError::domain)?;
                let witness: Vec<String> = report.witness.iter().map(|v| v.to_string()).collect();
                writeln!(out, "certificate: {}", witness.join(" ")).unwrap();
                writeln!(
                    out,
                    "certificate detail: |U| = {}, m(U) = {}, c(U) = {}",
                    report.witness.len(),
                    report.edges_within,
                    report.outside_components
                )
                .unwrap();
            }
            if compare_lex {
                writeln!(out, "sequence: {}", o.indegree_sequence()).unwrap();
                if g.m() <= 18 {
                    let q = OracleQuery {
                        constraint: Constraint::StronglyConnected,
                        objective: Objective::MinLexSequence,
                    };
                    match oracle::solve(&g, &q).map_err(AppError::domain)? {
                        OracleOutcome::Optimal { value, .. } => {
                            writeln!(out, "oracle sc minlex: {}", value.as_sequence()).unwrap();
                        }
                        OracleOutcome::Infeasible => {
                            writeln!(out, "oracle sc minlex: infeasible").unwrap();
                        }
                    }
                } else {
                    writeln!(out, "oracle sc minlex: skipped (m > 18)").unwrap();
                }
            }
            if !cli.quiet {
                out.push_str(&o.serialize());
            }
        }
        Cmd::Bound {
            what: BoundCmd::Sc { graph },
        } => {
            let g = read_graph(&graph)?;
            strong::check_strongly_orientable(&g).map_err(AppError::domain)?;
            let bound = strong::sc_lower_bound(&g).map_err(AppError::domain)?;
            writeln!(out, "sc lower bound: {}", bound).unwrap();
        }
        Cmd::RouteTables { graph } => {
            let g = read_graph(&graph)?;
            let tables = routing::min_outdegree_routing(&g).map_err(AppError::domain)?;
            write_tables(&mut out, &tables);
        }
        Cmd::RouteSim { graph, pairs } => {
            let g = read_graph(&graph)?;
            let tables = routing::min_outdegree_routing(&g).map_err(AppError::domain)?;
            let n = tables.order.len();
            let mut max_hops = 0;
            let mut routed = 0;
            let pair_list: Vec<(usize, usize)> = if pairs == "all" {
                (0..n)
                    .flat_map(|s| (0..n).filter(move |&t| t != s).map(move |t| (s, t)))
                    .collect()
            } else {
                let (s, t) = pairs
                    .split_once(',')
                    .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                    .ok_or_else(|| AppError::usage("--pairs expects \"all\" or \"s,t\""))?;
                if s >= n || t >= n || s == t {
                    return Err(AppError::usage("pair endpoints must be distinct vertices"));
                }
                vec![(s, t)]
            };
            for (s, t) in pair_list {
                let walk = routing::route(&tables, s, t).map_err(AppError::domain)?;
                max_hops = max_hops.max(walk.len());
                routed += 1;
                if !cli.quiet {
                    let mut verts = vec![s.to_string()];
                    verts.extend(walk.iter().map(|&e| tables.arcs[e].head.to_string()));
                    writeln!(out, "route {} {}: {}", s, t, verts.join(" ")).unwrap();
                }
            }
            writeln!(out, "pairs: {}", routed).unwrap();
            writeln!(out, "max hops: {}", max_hops).unwrap();
            writeln!(out, "max table size: {}", tables.max_table_size()).unwrap();
        }
        Cmd::Strip { graph } => {
            let g = read_graph(&graph)?;
            let (so, o) = egal_orient::acyclic::stripping(&g);
            let order: Vec<String> = so.order.iter().map(|v| v.to_string()).collect();
            writeln!(out, "order: {}", order.join(" ")).unwrap();
            writeln!(out, "peak: {}", so.peak).unwrap();
            if !cli.quiet {
                out.push_str(&o.serialize());
            }
        }
        Cmd::Oracle {
            graph,
            constraint,
            objective,
        } => {
            let g = read_graph(&graph)?;
            let constraint = match constraint.as_str() {
                "none" => Constraint::None,
                "sc" => Constraint::StronglyConnected,
                "acyclic" => Constraint::Acyclic,
                other => {
                    return Err(AppError::usage(format!(
                        "unknown constraint \"{}\" (none | sc | acyclic)",
                        other
                    )))
                }
            };
            let objective = match objective.as_str() {
                "minmax" => Objective::MinMaxIndegree,
                "minlex" => Objective::MinLexSequence,
                "convex:square" => Objective::MinConvexCost(ConvexCost::square(g.max_degree())),
                "convex:pow2" => Objective::MinConvexCost(ConvexCost::pow2(g.max_degree())),
                other => {
                    return Err(AppError::usage(format!(
                        "unknown objective \"{}\" (minmax | minlex | convex:square | convex:pow2)",
                        other
                    )))
                }
            };
            let q = OracleQuery {
                constraint,
                objective,
            };
            match oracle::solve(&g, &q).map_err(AppError::domain)? {
                OracleOutcome::Infeasible => {
                    writeln!(out, "infeasible").unwrap();
                }
                OracleOutcome::Optimal { value, witness } => {
                    match value {
                        OracleValue::MaxIndegree(k) => {
                            writeln!(out, "max indegree: {}", k).unwrap()
                        }
                        OracleValue::LexSequence(s) => writeln!(out, "sequence: {}", s).unwrap(),
                        OracleValue::ConvexCost(c) => writeln!(out, "cost: {}", c).unwrap(),
                    }
                    if !cli.quiet {
                        out.push_str(&witness.serialize());
                    }
                }
            }
        }
        Cmd::Gadget { what } => run_gadget(&mut out, what, cli.quiet)?,
    }
    Ok(out)
}

fn write_tables(out: &mut String, tables: &routing::RoutingTables) {
    let order: Vec<String> = tables.order.iter().map(|v| v.to_string()).collect();
    writeln!(out, "ordering: {}", order.join(" ")).unwrap();
    for entry in &tables.arcs {
        match entry.interval {
            Some((lo, hi)) => writeln!(out, "{} {} {} {}", entry.tail, entry.head, lo, hi).unwrap(),
            None => writeln!(out, "{} {} UNUSED", entry.tail, entry.head).unwrap(),
        }
    }
}

fn run_gadget(out: &mut String, cmd: GadgetCmd, quiet: bool) -> Result<(), AppError> {
    match cmd {
        GadgetCmd::Build { k, l } => {
            let gadget = reduction::build_gadget(k, l).map_err(AppError::domain)?;
            writeln!(out, "# k {}", gadget.k).unwrap();
            writeln!(out, "# l {}", gadget.ell).unwrap();
            writeln!(out, "# root {}", gadget.root).unwrap();
            if let Some(s) = gadget.extra {
                writeln!(out, "# extra {}", s).unwrap();
            }
            out.push_str(&gadget.graph.to_edge_list());
        }
        GadgetCmd::Reduce { setcover } => {
            let inst = read_setcover(&setcover)?;
            let ri = reduction::build_reduction(&inst);
            let roots = |v: &[usize]| {
                v.iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            writeln!(
                out,
                "# sidecar {{\"k\":{},\"universe_size\":{},\"set_roots\":[{}],\"element_roots\":[{}]}}",
                ri.k,
                inst.universe_size(),
                roots(&ri.set_roots),
                roots(&ri.element_roots),
            )
            .unwrap();
            out.push_str(&ri.graph.to_edge_list());
        }
        GadgetCmd::Verify { setcover, cover } => {
            let inst = read_setcover(&setcover)?;
            let ri = reduction::build_reduction(&inst);
            let chosen: Result<Vec<usize>, _> = cover
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect();
            let chosen =
                chosen.map_err(|_| AppError::usage("cover must be comma-separated set indices"))?;
            let o = reduction::cover_to_orientation(&ri, &chosen).map_err(AppError::domain)?;
            let high = (0..ri.graph.n()).filter(|&v| o.indegree(v) >= ri.k).count();
            writeln!(out, "# k {}", ri.k).unwrap();
            writeln!(out, "# indegree-k {}", high).unwrap();
            writeln!(
                out,
                "# acyclic {}",
                egal_orient::acyclic::verify_acyclic(&o)
            )
            .unwrap();
            if !quiet {
                out.push_str(&o.serialize());
            }
        }
        GadgetCmd::Extract {
            setcover,
            orientation,
        } => {
            let inst = read_setcover(&setcover)?;
            let ri = reduction::build_reduction(&inst);
            let text = std::fs::read_to_string(&orientation)
                .map_err(|e| AppError::usage(format!("{}: {}", orientation.display(), e)))?;
            let o = Orientation::parse(&ri.graph, &text).map_err(AppError::usage)?;
            let report = reduction::orientation_to_cover(&ri, &o).map_err(AppError::domain)?;
            let cover: Vec<String> = report.cover.iter().map(|i| i.to_string()).collect();
            writeln!(out, "cover: {}", cover.join(" ")).unwrap();
            writeln!(out, "size: {}", report.cover.len()).unwrap();
            writeln!(out, "valid: {}", report.is_cover).unwrap();
        }
    }
    Ok(())
}
