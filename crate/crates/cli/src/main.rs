//! `domblocker`: generate formulas, build the gadget graphs, solve
//! contraction-blocker questions and run the verification suites.
//!
//! Exit codes: 0 success, 1 a verdict failed, 2 usage or input error,
//! 3 a search exceeded its node budget.

use std::fs;
use std::io::{self, IsTerminal, Read, Write};
use std::num::NonZeroU64;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use domblocker::cnf::{gen_1in3, gen_3sat, parse_dimacs, parse_formula_json, Cnf, Flavor, FormulaDoc};
use domblocker::domination::{BlockerReport, Witnesses};
use domblocker::graph::{emit_dot, emit_edge_list_json, emit_graph6, parse_edge_list_json, parse_graph6_lines};
use domblocker::reductions::{build_clawfree, build_p7free, build_subcubic};
use domblocker::verify::suites::{self, Named, SuiteConfig};
use domblocker::verify::{summarize, ClaimVerdict};
use domblocker::{LabeledGraph, SolveError, Solver};

#[derive(Parser, Debug)]
#[command(
    name = "domblocker",
    version,
    about = "Domination-number contraction blockers and their hardness gadgets"
)]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RunConfig {
    /// Input file, or "-" for stdin.
    #[arg(short, long, global = true)]
    input: Option<String>,
    /// Output file, or "-" for stdout.
    #[arg(short, long, global = true, default_value = "-")]
    output: String,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true)]
    format: Option<Format>,
    /// Seed for generators and random corpora.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Search-node budget per exact solve.
    #[arg(long, global = true, env = "DOMBLOCKER_BUDGET")]
    budget: Option<NonZeroU64>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Single-threaded search with deterministic witnesses.
    #[arg(long, global = true)]
    canonical: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a random formula (DIMACS by default).
    Gen {
        #[arg(long, value_enum)]
        flavor: GenFlavor,
        /// Number of variables.
        #[arg(short = 'n', long = "num-vars")]
        num_vars: usize,
        /// Clause count for 3sat (defaults to the number of variables).
        #[arg(long)]
        clauses: Option<usize>,
    },
    /// Build a gadget graph from a formula (or a graph for clawfree).
    Build {
        #[arg(long, value_enum)]
        target: Target,
        /// Write the reduction map as JSON to this path.
        #[arg(long)]
        map: Option<String>,
        /// Also write DOT to this path.
        #[arg(long)]
        dot: Option<String>,
    },
    /// Answer domination and contraction questions about a graph.
    Solve {
        #[arg(long, value_enum, default_value_t = What::All)]
        what: What,
    },
    /// Run a verification suite and print verdicts as JSON.
    Verify(VerifyArgs),
    /// Convert a graph or formula between formats.
    Export {
        #[arg(long, value_enum, default_value_t = Kind::Graph)]
        kind: Kind,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Largest exhaustive graph order for fact1.
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// Random connected graphs for fact1.
    #[arg(long, default_value_t = 200)]
    random_graphs: usize,
    /// Generated 1-in-3 formulas for claim1, claim2 and observations.
    #[arg(long, default_value_t = 10)]
    random_formulas: usize,
    /// Random degree-{2,3} graphs for claim3 and observations.
    #[arg(long, default_value_t = 5)]
    random_degree23: usize,
    /// Minimum dominating sets inspected per instance by observations.
    #[arg(long)]
    mds_limit: Option<usize>,
    /// Print the per-claim summary table to stderr even when it is not a
    /// terminal.
    #[arg(long)]
    summary: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Graph6,
    Json,
    Dot,
    Dimacs,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GenFlavor {
    #[value(name = "1in3")]
    OneInThree,
    #[value(name = "3sat")]
    ThreeSat,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Target {
    Subcubic,
    Clawfree,
    P7free,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum What {
    Gamma,
    Blocker,
    Ct,
    AllEfficient,
    AllIndependent,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Graph,
    Formula,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Claim1,
    Claim2,
    Claim3,
    Claims45,
    Fact1,
    Observations,
    All,
}

/// Failure classes mapped to exit codes.
#[derive(Debug)]
enum Exit {
    Failed,
    Error(anyhow::Error),
    Budget(anyhow::Error),
}

impl From<anyhow::Error> for Exit {
    fn from(e: anyhow::Error) -> Self {
        if e.chain()
            .any(|c| matches!(c.downcast_ref(), Some(SolveError::BudgetExceeded(_))))
        {
            Exit::Budget(e)
        } else {
            Exit::Error(e)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit::Failed) => ExitCode::from(1),
        Err(Exit::Error(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Exit::Budget(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Exit> {
    let cfg = &cli.run;
    let threads = if cfg.canonical { Some(1) } else { cfg.threads };
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let mut solver = Solver {
        budget: cfg.budget.map(NonZeroU64::get),
        ..Solver::default()
    };
    if cfg.canonical {
        solver = solver.canonical();
    }
    match &cli.command {
        Command::Gen {
            flavor,
            num_vars,
            clauses,
        } => Ok(cmd_gen(cfg, *flavor, *num_vars, *clauses)?),
        Command::Build { target, map, dot } => Ok(cmd_build(cfg, *target, map.as_deref(), dot.as_deref())?),
        Command::Solve { what } => Ok(cmd_solve(cfg, &solver, *what)?),
        Command::Verify(args) => cmd_verify(cfg, &solver, args),
        Command::Export { kind } => Ok(cmd_export(cfg, *kind)?),
    }
}

fn read_input(path: Option<&str>) -> Result<String> {
    match path {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {p}")),
    }
}

fn write_to(path: &str, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    if path == "-" {
        let mut out = io::stdout().lock();
        out.write_all(text.as_bytes()).context("writing stdout")?;
        out.flush().context("writing stdout")
    } else {
        fs::write(path, text).with_context(|| format!("writing {path}"))
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

/// A JSON array with one element per line.
fn to_json_lines<T: Serialize>(items: &[T]) -> String {
    if items.is_empty() {
        return "[]".into();
    }
    let body: Vec<String> = items.iter().map(to_json).collect();
    format!("[\n{}\n]", body.join(",\n"))
}

/// Edge-list JSON if the text starts with `{`, otherwise a single graph6
/// line.
fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let mut graphs = parse_graphs(text)?;
    if graphs.len() != 1 {
        bail!("expected one graph, found {}", graphs.len());
    }
    Ok(graphs.pop().expect("one graph"))
}

fn parse_graphs(text: &str) -> Result<Vec<LabeledGraph>> {
    if text.trim_start().starts_with('{') {
        Ok(vec![parse_edge_list_json(text).context("parsing edge-list JSON")?])
    } else {
        parse_graph6_lines(text).context("parsing graph6")
    }
}

/// Formula JSON if the text starts with `{`, otherwise DIMACS. A JSON
/// flavor must match `want`.
fn parse_formula(text: &str, want: Option<Flavor>) -> Result<(Option<Flavor>, Cnf)> {
    if text.trim_start().starts_with('{') {
        let (flavor, cnf) = parse_formula_json(text).context("parsing formula JSON")?;
        if let Some(w) = want.filter(|&w| w != flavor) {
            bail!("formula flavor is {flavor:?}, expected {w:?}");
        }
        Ok((Some(flavor), cnf))
    } else {
        Ok((want, parse_dimacs(text).context("parsing DIMACS")?))
    }
}

fn emit_graph(g: &LabeledGraph, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(emit_edge_list_json(g)),
        Format::Graph6 => emit_graph6(g).context("encoding graph6"),
        Format::Dot => Ok(emit_dot(g)),
        Format::Dimacs => bail!("dimacs is a formula format"),
    }
}

fn emit_formula(cnf: &Cnf, flavor: Flavor, format: Format) -> Result<String> {
    match format {
        Format::Dimacs => {
            let tag = match flavor {
                Flavor::OneInThree => "flavor 1in3",
                Flavor::ThreeSat => "flavor 3sat",
            };
            Ok(cnf.to_dimacs(Some(tag)))
        }
        Format::Json => Ok(FormulaDoc::new(cnf, flavor).to_json()),
        Format::Graph6 | Format::Dot => bail!("{format:?} is a graph format"),
    }
}

fn cmd_gen(cfg: &RunConfig, flavor: GenFlavor, n: usize, clauses: Option<usize>) -> Result<()> {
    let (cnf, flavor) = match flavor {
        GenFlavor::OneInThree => {
            if clauses.is_some() {
                bail!("--clauses applies to 3sat only; 1in3 instances have one clause per variable");
            }
            (gen_1in3(n, cfg.seed)?.to_cnf(), Flavor::OneInThree)
        }
        GenFlavor::ThreeSat => (gen_3sat(n, clauses.unwrap_or(n), cfg.seed)?.to_cnf(), Flavor::ThreeSat),
    };
    let text = emit_formula(&cnf, flavor, cfg.format.unwrap_or(Format::Dimacs))?;
    write_to(&cfg.output, &text)
}

fn cmd_build(cfg: &RunConfig, target: Target, map_path: Option<&str>, dot_path: Option<&str>) -> Result<()> {
    let text = read_input(cfg.input.as_deref())?;
    let (g, map) = match target {
        Target::Subcubic => {
            let (_, cnf) = parse_formula(&text, Some(Flavor::OneInThree))?;
            let (g, map) = build_subcubic(&cnf.into_1in3())?;
            (g, to_json(&map))
        }
        Target::Clawfree => {
            let (g, map) = build_clawfree(&parse_graph(&text)?)?;
            (g, to_json(&map))
        }
        Target::P7free => {
            let (_, cnf) = parse_formula(&text, Some(Flavor::ThreeSat))?;
            let (g, map) = build_p7free(&cnf.into_3sat())?;
            (g, to_json(&map))
        }
    };
    if let Some(p) = map_path {
        write_to(p, &map)?;
    }
    if let Some(p) = dot_path {
        write_to(p, &emit_dot(&g))?;
    }
    write_to(&cfg.output, &emit_graph(&g, cfg.format.unwrap_or(Format::Json))?)
}

fn cmd_solve(cfg: &RunConfig, solver: &Solver, what: What) -> Result<()> {
    let g = parse_graph(&read_input(cfg.input.as_deref())?)?;
    if g.is_empty() {
        return Err(SolveError::EmptyGraph.into());
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected.into());
    }
    if let Some(f) = cfg.format.filter(|&f| f != Format::Json) {
        bail!("solve writes JSON, not {f:?}");
    }
    let report = if let What::All = what {
        solver.blocker_report(&g)?
    } else {
        let gr = solver.domination_number(&g)?;
        let mut r = BlockerReport {
            gamma: gr.gamma,
            one_contraction: None,
            all_efficient: None,
            all_independent: None,
            ct_gamma: None,
            witnesses: Witnesses {
                mds: Some(gr.witness),
                ..Witnesses::default()
            },
        };
        match what {
            What::Gamma | What::All => {}
            What::Blocker => {
                let c = solver.one_contraction_decision(&g)?;
                r.one_contraction = Some(c.is_yes().into());
                r.witnesses.contraction_edge = c.edge().map(|(u, v)| [u, v]);
            }
            What::Ct => r.ct_gamma = Some(solver.ct_gamma(&g, 3)?),
            What::AllEfficient => {
                let v = solver.all_efficient_md(&g)?;
                r.all_efficient = Some(v.is_yes().into());
                r.witnesses.non_efficient_mds = v.witness().cloned();
            }
            What::AllIndependent => {
                let v = solver.all_independent_md(&g)?;
                r.all_independent = Some(v.is_yes().into());
                r.witnesses.non_independent_mds = v.witness().cloned();
            }
        }
        r
    };
    write_to(&cfg.output, &to_json(&report))
}

fn cmd_export(cfg: &RunConfig, kind: Kind) -> Result<()> {
    let text = read_input(cfg.input.as_deref())?;
    let out = match kind {
        Kind::Graph => emit_graph(&parse_graph(&text)?, cfg.format.unwrap_or(Format::Json))?,
        Kind::Formula => {
            let (flavor, cnf) = parse_formula(&text, None)?;
            let flavor = flavor
                .or_else(|| dimacs_flavor(&text))
                .ok_or_else(|| anyhow!("DIMACS input has no \"c flavor 1in3\" or \"c flavor 3sat\" comment"))?;
            emit_formula(&cnf, flavor, cfg.format.unwrap_or(Format::Json))?
        }
    };
    write_to(&cfg.output, &out)
}

/// Flavor from a `c flavor …` comment line.
fn dimacs_flavor(text: &str) -> Option<Flavor> {
    text.lines().find_map(|l| match l.trim() {
        "c flavor 1in3" => Some(Flavor::OneInThree),
        "c flavor 3sat" => Some(Flavor::ThreeSat),
        _ => None,
    })
}

fn named<T>(prefix: &str, items: Vec<T>) -> Vec<Named<T>> {
    if items.len() == 1 {
        return items.into_iter().map(|t| (prefix.to_string(), t)).collect();
    }
    items
        .into_iter()
        .enumerate()
        .map(|(i, t)| (format!("{prefix}#{i}"), t))
        .collect()
}

fn cmd_verify(cfg: &RunConfig, solver: &Solver, args: &VerifyArgs) -> Result<(), Exit> {
    let suite_cfg = SuiteConfig {
        max_n: args.max_n,
        random_graphs: args.random_graphs,
        random_formulas: args.random_formulas,
        random_degree23: args.random_degree23,
        seed: cfg.seed,
        mds_limit: args.mds_limit.unwrap_or(usize::MAX),
        ..SuiteConfig::default()
    };
    if args.max_n > 7 {
        return Err(anyhow!("--max-n is limited to 7").into());
    }
    let verdicts = match &cfg.input {
        None => run_default_suite(solver, args.suite, &suite_cfg),
        Some(path) => run_on_input(solver, args.suite, path, suite_cfg.mds_limit)?,
    };
    write_to(&cfg.output, &to_json_lines(&verdicts))?;
    if args.summary || io::stderr().is_terminal() {
        print_summary(&verdicts);
    }
    if verdicts.iter().any(ClaimVerdict::is_fail) {
        Err(Exit::Failed)
    } else if verdicts.iter().any(ClaimVerdict::is_budget_skip) {
        Err(Exit::Budget(anyhow!(
            "some instances exceeded the node budget and were skipped"
        )))
    } else {
        Ok(())
    }
}

fn run_default_suite(solver: &Solver, suite: Suite, cfg: &SuiteConfig) -> Vec<ClaimVerdict> {
    let mut out = Vec::new();
    let want = |s: Suite| suite == s || suite == Suite::All;
    if want(Suite::Fact1) {
        out.extend(suites::run_fact1(solver, &suites::fact1_corpus(cfg)));
    }
    if want(Suite::Claim1) {
        out.extend(suites::run_claim1(solver, &suites::formula_corpus_1in3(cfg)));
    }
    if want(Suite::Claim2) {
        out.extend(suites::run_claim2(solver, &suites::formula_corpus_1in3(cfg)));
    }
    if want(Suite::Claim3) {
        out.extend(suites::run_claim3(solver, &suites::clawfree_corpus(cfg)));
    }
    if want(Suite::Claims45) {
        out.extend(suites::run_claims45(solver, &suites::formula_corpus_3sat()));
    }
    if want(Suite::Observations) {
        out.extend(suites::run_observations(
            solver,
            &suites::formula_corpus_1in3(cfg),
            &suites::clawfree_corpus(cfg),
            cfg.mds_limit,
        ));
    }
    out
}

/// Graph suites read graph6 lines or edge-list JSON; formula suites read
/// DIMACS or formula JSON; observations accepts either.
fn run_on_input(solver: &Solver, suite: Suite, path: &str, mds_limit: usize) -> Result<Vec<ClaimVerdict>> {
    let text = read_input(Some(path))?;
    let name = if path == "-" { "stdin" } else { path };
    Ok(match suite {
        Suite::All => bail!("suite \"all\" runs on the bundled fixtures only"),
        Suite::Fact1 => suites::run_fact1(solver, &named(name, parse_graphs(&text)?)),
        Suite::Claim3 => suites::run_claim3(solver, &named(name, parse_graphs(&text)?)),
        Suite::Claim1 | Suite::Claim2 => {
            let (_, cnf) = parse_formula(&text, Some(Flavor::OneInThree))?;
            let fs = named(name, vec![cnf.into_1in3()]);
            if suite == Suite::Claim1 {
                suites::run_claim1(solver, &fs)
            } else {
                suites::run_claim2(solver, &fs)
            }
        }
        Suite::Claims45 => {
            let (_, cnf) = parse_formula(&text, Some(Flavor::ThreeSat))?;
            suites::run_claims45(solver, &named(name, vec![cnf.into_3sat()]))
        }
        Suite::Observations => match parse_formula(&text, Some(Flavor::OneInThree)) {
            Ok((_, cnf)) => suites::run_observations(solver, &named(name, vec![cnf.into_1in3()]), &[], mds_limit),
            Err(_) => suites::run_observations(solver, &[], &named(name, parse_graphs(&text)?), mds_limit),
        },
    })
}

fn print_summary(verdicts: &[ClaimVerdict]) {
    let mut err = io::stderr().lock();
    let _ = writeln!(err, "{:<18} {:>6} {:>6} {:>8}", "claim", "pass", "fail", "skipped");
    for (claim, t) in summarize(verdicts) {
        let _ = writeln!(
            err,
            "{:<18} {:>6} {:>6} {:>8}",
            claim.to_string(),
            t.pass,
            t.fail,
            t.skipped
        );
    }
}
