//! Command-line driver behind the `indminor` binary.
//!
//! Every command prints one JSON report. Exit codes: 0 when every result is
//! positive (isomorphic, property holds, expression valid), 1 when some
//! result is a clean negative, 2 on usage errors, budget exhaustion or any
//! other failure.

use std::io::Read;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cwx::{self, CwExpression};
use crate::dichotomy::{self, check_verdict, classify};
use crate::error::{Error, Result};
use crate::gen::{self, Family, DEFAULT_SEED};
use crate::graph::io::{parse_graph, to_graph6};
use crate::graph::{named, ColoredGraph, Graph};
use crate::iso::{self, IsoOutcome};
use crate::oracles;
use crate::reductions::{self, Reduction};
use crate::structure;

pub const SCHEMA: &str = "indminor/1";
/// Largest output of the reductions the `--oracle` mode cross-checks by brute force.
const ORACLE_CHECK_N: usize = 24;
/// Largest graph the `--oracle` mode hands to the brute-force induced-minor search.
const ORACLE_MINOR_N: usize = 16;

#[derive(Debug, Parser)]
#[command(name = "indminor", version, about = "Induced-minor-free graph classes")]
pub struct Cli {
    /// Cross-check every answer against the brute-force oracles.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Indent the JSON report.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Isomorphism and clique-width status of the class excluding a pattern.
    Classify {
        /// graph6 string, file of graphs (one per line, or an edge list), or `-` for stdin.
        pattern: String,
    },
    /// Decide isomorphism; files pair their graphs line by line.
    Iso {
        g1: String,
        g2: String,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
    },
    /// Map a graph into a restricted class, preserving isomorphism.
    Reduce {
        input: String,
        #[arg(long, value_enum)]
        target: Target,
    },
    /// Test a property: k3uk1-free, p4-free, cobipartite, restricted-split,
    /// compact-minor:T, induced-minor:H (H a graph6 string, file or graph name).
    Check {
        input: String,
        #[arg(long)]
        property: String,
    },
    /// Build or verify a clique-width expression.
    Cw {
        #[arg(long, value_enum, conflicts_with = "verify", requires = "input")]
        build: Option<CwBuild>,
        /// Expression (text or file) and graph.
        #[arg(long, num_args = 2, value_names = ["EXPR", "GRAPH"])]
        verify: Option<Vec<String>>,
        input: Option<String>,
    },
    /// Generate random instances as graph6.
    Gen {
        /// random[:p], cograph, gemfree-suture, k3uk1-free-via-reduction, multipartite:AxB
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    /// Cograph certificates when both graphs are P4-free, else the general engine.
    Auto,
    Gem,
    Cop32k1,
    Cograph,
    General,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Split,
    Cobipartite,
    K3uk1Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CwBuild {
    Cograph,
    Gemfree,
}

#[derive(Debug, Default, Serialize)]
pub struct Counters {
    pub oracle_calls: u64,
    pub fallbacks: u64,
    pub budgets_hit: u64,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema: &'static str,
    pub command: Vec<String>,
    pub results: Vec<Value>,
    pub counters: Counters,
    pub wall_ms: u64,
}

#[derive(Default)]
struct Tally {
    oracle_calls: AtomicU64,
    fallbacks: AtomicU64,
    budgets_hit: AtomicU64,
}

impl Tally {
    fn bump(counter: &AtomicU64) {
        counter.fetch_add(1, Ordering::Relaxed);
    }
}

struct Ctx {
    oracle: bool,
    seed: u64,
    tally: Tally,
}

/// One instance: positive or negative answer with its payload.
type Outcome = Result<(bool, Value)>;

/// Parses `args` (program name first), runs the command and returns the
/// exit code and the text to print.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let echo: Vec<String> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    let start = Instant::now();
    let ctx = Ctx { oracle: cli.oracle, seed: cli.seed, tally: Tally::default() };
    let outcomes = match dispatch(&cli.command, &ctx) {
        Ok(o) => o,
        Err(e) => vec![Err(e)],
    };
    let mut code = 0;
    let mut results = Vec::with_capacity(outcomes.len());
    for o in outcomes {
        match o {
            Ok((positive, value)) => {
                if !positive && code == 0 {
                    code = 1;
                }
                results.push(value);
            }
            Err(e) => {
                if matches!(e, Error::BudgetExhausted(_)) {
                    Tally::bump(&ctx.tally.budgets_hit);
                }
                code = 2;
                results.push(json!({ "error": e.to_string() }));
            }
        }
    }
    let report = RunReport {
        schema: SCHEMA,
        command: echo,
        results,
        counters: Counters {
            oracle_calls: ctx.tally.oracle_calls.load(Ordering::Relaxed),
            fallbacks: ctx.tally.fallbacks.load(Ordering::Relaxed),
            budgets_hit: ctx.tally.budgets_hit.load(Ordering::Relaxed),
        },
        wall_ms: start.elapsed().as_millis() as u64,
    };
    let text = if cli.pretty {
        serde_json::to_string_pretty(&report)
    } else {
        serde_json::to_string(&report)
    }
    .expect("report serializes");
    (code, text)
}

fn dispatch(cmd: &Command, ctx: &Ctx) -> Result<Vec<Outcome>> {
    Ok(match cmd {
        Command::Classify { pattern } => par_map(read_graphs(pattern)?, |h| cmd_classify(&h, ctx)),
        Command::Iso { g1, g2, algo } => {
            let a = read_graphs(g1)?;
            let b = read_graphs(g2)?;
            if a.len() != b.len() {
                return Err(Error::Precondition(format!("{} graphs against {}", a.len(), b.len())));
            }
            par_map(a.into_iter().zip(b).collect(), |(x, y)| cmd_iso(&x, &y, *algo, ctx))
        }
        Command::Reduce { input, target } => par_map(read_graphs(input)?, |g| cmd_reduce(&g, *target, ctx)),
        Command::Check { input, property } => {
            let prop = Property::parse(property)?;
            par_map(read_graphs(input)?, |g| cmd_check(&g, &prop, ctx))
        }
        Command::Cw { build, verify, input } => match (build, verify, input) {
            (Some(kind), None, Some(input)) => par_map(read_graphs(input)?, |g| cmd_cw_build(&g, *kind)),
            (None, Some(pair), None) => vec![cmd_cw_verify(&pair[0], &pair[1])],
            _ => return Err(Error::Precondition("use either --build KIND GRAPH or --verify EXPR GRAPH".into())),
        },
        Command::Gen { family, n, count } => {
            let fam = Family::parse(family)?;
            par_map((0..*count as u64).collect(), |i| cmd_gen(&fam, *n, ctx.seed.wrapping_add(i)))
        }
    })
}

/// Parallel map that keeps input order.
fn par_map<T: Send, F: Fn(T) -> Outcome + Sync + Send>(items: Vec<T>, f: F) -> Vec<Outcome> {
    items.into_par_iter().map(f).collect()
}

/// A graph6 string, a named graph (`gem`, `C5`, `K4`, ...), `-` for stdin,
/// or a file: one graph6 per line, or a single edge list.
pub fn read_graphs(arg: &str) -> Result<Vec<Graph>> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        s
    } else if std::path::Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))?
    } else {
        // Names like `gem` or `C5` are never valid graph6, so they only
        // apply once parsing has failed.
        return match parse_graph(arg) {
            Ok(g) => Ok(vec![g]),
            Err(e) => named::by_name(arg).map(|g| vec![g]).ok_or(e),
        };
    };
    let t = text.trim_start();
    if t.starts_with(|c: char| c.is_ascii_digit() || c == '#') {
        return Ok(vec![parse_graph(t)?]);
    }
    t.lines().map(str::trim).filter(|l| !l.is_empty()).map(parse_graph).collect()
}

fn read_one(arg: &str) -> Result<Graph> {
    let mut gs = read_graphs(arg)?;
    if gs.len() != 1 {
        return Err(Error::Precondition(format!("expected one graph in {arg}, found {}", gs.len())));
    }
    Ok(gs.remove(0))
}

fn cmd_classify(h: &Graph, ctx: &Ctx) -> Outcome {
    let verdict = classify(h)?;
    if ctx.oracle {
        Tally::bump(&ctx.tally.oracle_calls);
        check_verdict(h, &verdict).map_err(|e| Error::Precondition(format!("oracle rejects verdict: {e}")))?;
    }
    Ok((true, json!({ "graph6": to_graph6(h), "n": h.n(), "verdict": verdict })))
}

fn cmd_iso(g1: &Graph, g2: &Graph, algo: Algo, ctx: &Ctx) -> Outcome {
    let (c1, c2): (ColoredGraph, ColoredGraph) = (g1.into(), g2.into());
    let mut mapping = None;
    let outcome = match algo {
        Algo::Gem => iso::gem_free_iso(&c1, &c2)?,
        Algo::Cop32k1 => iso::cop32k1_free_iso(&c1, &c2)?,
        Algo::Cograph => by_certificate(&c1, &c2)?,
        Algo::General => {
            let mut o = IsoOutcome::new("general");
            o.isomorphic = iso::general_iso(&c1, &c2)?;
            o
        }
        Algo::Oracle => {
            Tally::bump(&ctx.tally.oracle_calls);
            let mut o = IsoOutcome::new("oracle");
            mapping = oracles::iso_bruteforce(&c1, &c2)?;
            o.isomorphic = mapping.is_some();
            o
        }
        Algo::Auto => {
            if oracles::is_p4_free(g1) && oracles::is_p4_free(g2) {
                by_certificate(&c1, &c2)?
            } else {
                let mut o = IsoOutcome::new("general");
                o.isomorphic = iso::general_iso(&c1, &c2)?;
                o
            }
        }
    };
    if outcome.fallback {
        Tally::bump(&ctx.tally.fallbacks);
    }
    if ctx.oracle && algo != Algo::Oracle {
        Tally::bump(&ctx.tally.oracle_calls);
        let expected = oracles::iso_bruteforce(&c1, &c2)?.is_some();
        if expected != outcome.isomorphic {
            return Err(Error::Precondition(format!(
                "{} answered {}, oracle answered {expected}",
                outcome.algorithm, outcome.isomorphic
            )));
        }
    }
    let mut value = serde_json::to_value(&outcome).expect("outcome serializes");
    if let Some(m) = mapping {
        value["mapping"] = json!(m.image);
    }
    Ok((outcome.isomorphic, value))
}

fn by_certificate(c1: &ColoredGraph, c2: &ColoredGraph) -> Result<IsoOutcome> {
    let mut o = IsoOutcome::new("cograph");
    o.isomorphic = iso::cograph_certificate(c1)? == iso::cograph_certificate(c2)?;
    Ok(o)
}

fn cmd_reduce(g: &Graph, target: Target, ctx: &Ctx) -> Outcome {
    let (r, certificate): (Reduction, Value) = match target {
        Target::Split => {
            let r = reductions::reduce_to_restricted_split(g)?;
            let cert = reductions::restricted_split_certificate(&r);
            let ok = reductions::check_restricted_split(&r.graph, &cert);
            (r, json!({ "partition": cert, "valid": ok }))
        }
        Target::Cobipartite => {
            let r = reductions::reduce_to_cobipartite(g)?;
            let (a, b) = (r.originals(), r.subdivisions());
            let ok = reductions::check_two_cliques(&r.graph, &a, &b);
            (r, json!({ "cliques": [a, b], "valid": ok }))
        }
        Target::K3uk1Free => {
            let r = reductions::reduce_to_k3uk1_free(g)?;
            let ok = structure::k3uk1_induced_minor_free(&r.graph);
            let cert = json!({ "originals": r.originals(), "forest_check": ok, "valid": ok });
            (r, cert)
        }
    };
    let mut value = json!({
        "input": to_graph6(g),
        "graph6": to_graph6(&r.graph),
        "n": r.graph.n(),
        "m": r.graph.m(),
        "certificate": certificate,
    });
    if ctx.oracle {
        let holds = match target {
            _ if r.graph.n() > ORACLE_CHECK_N => None,
            Target::Split if r.graph.n() <= dichotomy::CLASSIFY_CAP => Some(
                dichotomy::enumerate_split_partitions(&r.graph)?
                    .iter()
                    .any(|p| p.independent.iter().all(|&v| r.graph.degree(v) <= 2)),
            ),
            Target::Split => None,
            Target::Cobipartite => Some(two_cliques_bruteforce(&r.graph)),
            Target::K3uk1Free if r.graph.n() <= ORACLE_MINOR_N => {
                Some(oracles::is_induced_minor_free(&r.graph, &named::k3_k1())?)
            }
            Target::K3uk1Free => None,
        };
        if let Some(holds) = holds {
            Tally::bump(&ctx.tally.oracle_calls);
            value["oracle_agrees"] = json!(holds);
        }
        value["oracle_checked"] = json!(holds.is_some());
    }
    let valid = value["certificate"]["valid"].as_bool().unwrap_or(false);
    if !valid || value.get("oracle_agrees").is_some_and(|v| v == false) {
        return Err(Error::Precondition("reduction output failed its certificate check".into()));
    }
    Ok((true, value))
}

#[derive(Debug, Clone)]
enum Property {
    K3uk1Free,
    P4Free,
    Cobipartite,
    RestrictedSplit,
    CompactMinor(usize),
    InducedMinor(Graph),
}

impl Property {
    fn parse(s: &str) -> Result<Property> {
        let (name, arg) = s.split_once(':').map_or((s, None), |(a, b)| (a, Some(b)));
        Ok(match (name, arg) {
            ("k3uk1-free", None) => Property::K3uk1Free,
            ("p4-free", None) => Property::P4Free,
            ("cobipartite", None) => Property::Cobipartite,
            ("restricted-split", None) => Property::RestrictedSplit,
            ("compact-minor", Some(t)) => Property::CompactMinor(
                t.parse().map_err(|_| Error::Parse(format!("bad clique order '{t}'")))?,
            ),
            ("induced-minor", Some(h)) => Property::InducedMinor(read_one(h)?),
            _ => return Err(Error::Parse(format!("unknown property '{s}'"))),
        })
    }
}

fn cmd_check(g: &Graph, prop: &Property, ctx: &Ctx) -> Outcome {
    let (holds, witness) = match prop {
        Property::K3uk1Free => match structure::k3uk1_certificate(g) {
            None => (true, Value::Null),
            Some((u, cycle)) => (false, json!({ "vertex": u, "cycle": cycle })),
        },
        Property::P4Free => {
            let holds = oracles::is_p4_free(g);
            let witness = if holds { Value::Null } else { json!(oracles::find_induced_p4_bruteforce(g)) };
            (holds, witness)
        }
        Property::Cobipartite => match dichotomy::cobipartition(g) {
            Ok(side) => (true, json!({ "side": side })),
            Err(cycle) => (false, json!({ "complement_odd_cycle": cycle })),
        },
        Property::RestrictedSplit => match dichotomy::restricted_split_partition(g) {
            Some(p) => (true, json!(p)),
            None => (false, Value::Null),
        },
        Property::CompactMinor(t) => match structure::find_compact_clique_minor(g, *t)? {
            Some(m) => (true, json!(m)),
            None => (false, Value::Null),
        },
        Property::InducedMinor(h) => match oracles::induced_minor_bruteforce(g, h)? {
            Some(m) => (true, json!(m)),
            None => (false, Value::Null),
        },
    };
    let mut value = json!({ "graph6": to_graph6(g), "holds": holds, "witness": witness });
    if ctx.oracle {
        let expected = match prop {
            Property::K3uk1Free if g.n() <= ORACLE_MINOR_N => {
                Some(oracles::is_induced_minor_free(g, &named::k3_k1())?)
            }
            Property::P4Free => Some(oracles::find_induced_p4_bruteforce(g).is_none()),
            Property::CompactMinor(t) if holds => {
                let m: oracles::MinorModel = serde_json::from_value(value["witness"].clone()).expect("model");
                Some(oracles::validate_model(g, &Graph::complete(*t), &m).is_ok())
            }
            Property::Cobipartite if g.n() <= ORACLE_CHECK_N => Some(two_cliques_bruteforce(g)),
            Property::RestrictedSplit if g.n() <= dichotomy::CLASSIFY_CAP => Some(
                dichotomy::enumerate_split_partitions(g)?
                    .iter()
                    .any(|p| p.independent.iter().all(|&v| g.degree(v) <= 2)),
            ),
            _ => None,
        };
        if let Some(expected) = expected {
            Tally::bump(&ctx.tally.oracle_calls);
            if expected != holds {
                return Err(Error::Precondition(format!("oracle answered {expected}, fast path {holds}")));
            }
        }
        value["oracle_checked"] = json!(expected.is_some());
    }
    Ok((holds, value))
}

/// Tries every split of the vertices into two sides.
fn two_cliques_bruteforce(g: &Graph) -> bool {
    let n = g.n();
    (0u64..1 << n).any(|mask| {
        g.vertices().all(|a| g.vertices().all(|b| a == b || (mask >> a & 1) != (mask >> b & 1) || g.has_edge(a, b)))
    })
}

fn cmd_cw_build(g: &Graph, kind: CwBuild) -> Outcome {
    let e = match kind {
        CwBuild::Cograph => cwx::cograph_expression(g)?,
        CwBuild::Gemfree => cwx::gem_free_expression(g)?,
    };
    let verified = cwx::verify(&e, g);
    if !verified {
        return Err(Error::Expression("built expression does not verify".into()));
    }
    let mut value = json!({ "graph6": to_graph6(g), "width": e.width(), "verified": verified, "expression": e.to_string() });
    if kind == CwBuild::Gemfree {
        value["width_bound"] = json!(cwx::W_GEM);
    }
    Ok((true, value))
}

fn cmd_cw_verify(expr: &str, graph: &str) -> Outcome {
    let text = if std::path::Path::new(expr).is_file() {
        std::fs::read_to_string(expr).map_err(|e| Error::Parse(format!("{expr}: {e}")))?
    } else {
        expr.to_string()
    };
    let e: CwExpression = text.trim().parse()?;
    let g = read_one(graph)?;
    let valid = cwx::verify(&e, &g);
    Ok((valid, json!({ "graph6": to_graph6(&g), "valid": valid, "width": e.width() })))
}

fn cmd_gen(family: &Family, n: usize, seed: u64) -> Outcome {
    let mut rng = gen::rng(seed);
    let g = gen::generate(family, n, &mut rng)?;
    Ok((true, json!({ "seed": seed, "graph6": to_graph6(&g), "n": g.n(), "m": g.m() })))
}
