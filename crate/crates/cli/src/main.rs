//! Command-line front end: exact layout parameters, completion frontiers,
//! the width/cost tradeoff procedure, witness graphs, and search-strategy
//! derivation and validation.
//!
//! Exit codes: 0 success, 1 property/validation failure, 2 input error,
//! 3 capacity exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use widthfill::ic::{self, IcTrace, TradeoffReport};
use widthfill::search::{self, Flavor, SearchStrategy, StrategyMetrics, ValidateOptions};
use widthfill::solvers;
use widthfill::witness::{self, WitnessSpec};
use widthfill::{
    CanonicalRepr, Graph, IcError, Limits, ParetoFrontier, SearchError, SolverError, Vertex,
    VertexOrdering, VertexSet, WitnessError,
};

#[derive(Parser)]
#[command(
    name = "widthfill",
    version,
    about = "Exact width/cost layout parameters, completion frontiers, tradeoff completions, witness graphs, and search strategies"
)]
struct Cli {
    /// Accept graphs up to this many vertices (defaults: 20 for single
    /// parameters, 15 for frontier sweeps; hard memory caps still apply).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_n: Option<u64>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one layout parameter exactly.
    Solve {
        /// Graph file: header "n m", then one "u v" line per edge.
        graph: PathBuf,
        /// Parameter to minimize.
        #[arg(long, value_enum)]
        parameter: Parameter,
    },
    /// Pareto frontier of completions: cap one parameter, minimize added edges.
    Frontier {
        graph: PathBuf,
        /// ppm caps interval width, tfm caps the clique size of a chordal
        /// completion; both minimize total edges under the cap.
        #[arg(long, value_enum)]
        problem: Problem,
    },
    /// Interval completion steered by the width/cost tradeoff parameter.
    Ic {
        graph: PathBuf,
        /// Tradeoff parameter; sweeps t = 1..=iwid when omitted.
        #[arg(long)]
        t: Option<usize>,
        /// Emit one record per splice iteration plus the representations.
        #[arg(long)]
        trace: bool,
    },
    /// Build the three-block witness graph and verify both frontiers spread.
    Witness {
        a: usize,
        b: usize,
        c: usize,
        /// Exhaustively enumerate fill subsets, up to this many candidates.
        #[arg(long, value_name = "LIMIT")]
        enumerate: Option<u128>,
    },
    /// Derive a strategy from an optimal layout, or validate a strategy file.
    #[command(group = ArgGroup::new("mode").required(true).args(["derive", "validate"]))]
    Strategy {
        /// Graph file the strategy clears.
        graph: PathBuf,
        /// Derive: active from the cost-optimal representation, inert from
        /// the fill-optimal elimination.
        #[arg(long, value_enum)]
        derive: Option<FlavorArg>,
        /// Validate this strategy file instead of deriving.
        #[arg(long, value_name = "FILE", requires = "flavor")]
        validate: Option<PathBuf>,
        /// Flavor of the strategy file being validated.
        #[arg(long, value_enum, requires = "validate")]
        flavor: Option<FlavorArg>,
        /// Also demand the searched vertex be guarded in its own step.
        #[arg(long)]
        strict_axioms: bool,
        /// Literal path rule: guards block only interior vertices of a path,
        /// so a guarded neighbor is itself still reachable.
        #[arg(long)]
        literal_paths: bool,
    },
    /// Emit one seeded random graph in the edge-list format.
    Gen {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Edge probability, in percent.
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u8).range(0..=100))]
        density: u8,
        /// RNG seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Parameter {
    Profile,
    Pathwidth,
    Treewidth,
    Fillin,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Ppm,
    Tfm,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Active,
    Inert,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Active => Flavor::Active,
            FlavorArg::Inert => Flavor::Inert,
        }
    }
}

/// A failed run: the message goes to stderr, the code to the shell.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }
}

impl From<widthfill::ParseError> for Failure {
    fn from(e: widthfill::ParseError) -> Failure {
        Failure::new(2, e.to_string())
    }
}

impl From<SolverError> for Failure {
    fn from(e: SolverError) -> Failure {
        Failure::new(3, e.to_string())
    }
}

impl From<IcError> for Failure {
    fn from(e: IcError) -> Failure {
        match e {
            IcError::Solver(inner) => inner.into(),
            other => Failure::new(2, other.to_string()),
        }
    }
}

impl From<WitnessError> for Failure {
    fn from(e: WitnessError) -> Failure {
        match e {
            WitnessError::Solver(inner) => inner.into(),
            WitnessError::EnumerationTooLarge { .. } => Failure::new(3, e.to_string()),
            other => Failure::new(2, other.to_string()),
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Failure {
        Failure::new(2, e.to_string())
    }
}

fn main() -> ExitCode {
    // dying on a closed pipe (`widthfill ... | head`) is a normal exit for
    // a filter, not a panic
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let limits = match cli.max_n {
        Some(n) => Limits::uniform(n as usize),
        None => Limits::default(),
    };
    let format = cli.format;
    match cli.command {
        Command::Solve { graph, parameter } => {
            cmd_solve(&read_graph(&graph)?, parameter, &limits, format)
        }
        Command::Frontier { graph, problem } => {
            cmd_frontier(&read_graph(&graph)?, problem, &limits, format)
        }
        Command::Ic { graph, t, trace } => cmd_ic(&read_graph(&graph)?, t, trace, &limits, format),
        Command::Witness { a, b, c, enumerate } => {
            cmd_witness(a, b, c, enumerate, &limits, format)
        }
        Command::Strategy { graph, derive, validate, flavor, strict_axioms, literal_paths } => {
            let g = read_graph(&graph)?;
            let opts = ValidateOptions { strict: strict_axioms, literal_paths };
            match (derive, validate) {
                (Some(f), None) => cmd_strategy_derive(&g, f.into(), opts, &limits, format),
                (None, Some(file)) => {
                    let flavor = flavor.expect("clap enforces --flavor with --validate");
                    cmd_strategy_validate(&g, &file, flavor.into(), opts, format)
                }
                _ => unreachable!("clap enforces exactly one of --derive/--validate"),
            }
        }
        Command::Gen { n, density, seed } => cmd_gen(n, density, seed, format),
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(2, format!("{}: {}", path.display(), e)))?;
    text.parse::<Graph>()
        .map_err(|e| Failure::new(2, format!("{}: {}", path.display(), e)))
}

fn cmd_solve(g: &Graph, parameter: Parameter, limits: &Limits, format: Format) -> Result<(), Failure> {
    let (name, res) = match parameter {
        Parameter::Profile => ("profile", solvers::profile_exact(g, limits)?),
        Parameter::Pathwidth => ("pathwidth", solvers::pathwidth_exact(g, limits)?),
        Parameter::Treewidth => ("treewidth", solvers::treewidth_exact(g, limits)?),
        Parameter::Fillin => ("fillin", solvers::fillin_exact(g, limits)?),
    };
    match format {
        Format::Table => {
            println!("{} = {}", name, res.value);
            println!("ordering: {}", res.witness);
            if let Some(r) = &res.representation {
                println!("representation:");
                print!("{}", r);
            }
        }
        Format::Csv => {
            println!("parameter,value,ordering");
            println!("{},{},{}", name, res.value, res.witness);
        }
        Format::Json => {
            let mut v = json!({
                "parameter": name,
                "value": res.value,
                "ordering": res.witness.as_slice(),
            });
            if let Some(r) = &res.representation {
                v["representation"] = repr_json(r);
            }
            println!("{}", v);
        }
    }
    Ok(())
}

fn cmd_frontier(g: &Graph, problem: Problem, limits: &Limits, format: Format) -> Result<(), Failure> {
    let (name, frontier) = match problem {
        Problem::Ppm => ("ppm", solvers::width_cost_frontier(g, limits)?),
        Problem::Tfm => ("tfm", solvers::clique_fill_frontier(g, limits)?),
    };
    let cap = match problem {
        Problem::Ppm => "width",
        Problem::Tfm => "clique",
    };
    match format {
        Format::Table => {
            println!("{} frontier ({} cap vs. edges): {} point(s)", name, cap, frontier.points.len());
            for p in &frontier.points {
                println!("k={} cost={} ordering: {}", p.k, p.cost, p.witness);
            }
        }
        Format::Csv => {
            println!("k,cost");
            for p in &frontier.points {
                println!("{},{}", p.k, p.cost);
            }
        }
        Format::Json => println!("{}", frontier_json(name, &frontier)),
    }
    Ok(())
}

fn cmd_ic(
    g: &Graph,
    t: Option<usize>,
    trace: bool,
    limits: &Limits,
    format: Format,
) -> Result<(), Failure> {
    let ts: Vec<usize> = match t {
        Some(t) => vec![t],
        None => (1..=solvers::iwid_exact(g, limits)?.value).collect(),
    };
    let mut runs = Vec::new();
    for &t in &ts {
        let (repr, tr) = ic::run_ic(g, t, limits)?;
        let report = ic::check_tradeoff(g, t, &repr, limits)?;
        runs.push((repr, tr, report));
    }
    match format {
        Format::Table => {
            for (repr, tr, report) in &runs {
                println!("{}", report_line(report));
                if trace {
                    print_trace(tr);
                    println!("final representation:");
                    print!("{}", repr);
                }
            }
        }
        Format::Csv => {
            println!("t,wid,wid_bound,cost,cost_bound,satisfied");
            for (_, _, r) in &runs {
                println!(
                    "{},{},{},{},{},{}",
                    r.t, r.wid_actual, r.wid_bound, r.cost_actual, r.cost_bound,
                    r.satisfied()
                );
            }
        }
        Format::Json => {
            let items: Vec<_> = runs
                .iter()
                .map(|(repr, tr, r)| {
                    let mut v = json!({
                        "t": r.t,
                        "width_target": r.width_target,
                        "profile": r.profile,
                        "wid": {
                            "actual": r.wid_actual,
                            "bound": { "num": r.wid_bound.num(), "den": r.wid_bound.den() },
                            "ok": r.wid_ok,
                        },
                        "cost": {
                            "actual": r.cost_actual,
                            "bound": r.cost_bound,
                            "ok": r.cost_ok,
                        },
                        "satisfied": r.satisfied(),
                    });
                    if trace {
                        v["trace"] = trace_json(tr);
                        v["representation"] = repr_json(repr);
                    }
                    v
                })
                .collect();
            println!("{}", json!(items));
        }
    }
    if runs.iter().any(|(_, _, r)| !r.satisfied()) {
        return Err(Failure::new(1, "tradeoff bound violated"));
    }
    Ok(())
}

fn cmd_witness(
    a: usize,
    b: usize,
    c: usize,
    enumerate: Option<u128>,
    limits: &Limits,
    format: Format,
) -> Result<(), Failure> {
    let spec = WitnessSpec::new(a, b, c)?;
    let w = witness::build_witness(spec);
    let report = witness::verify_orthogonality(spec, limits)?;
    let enum_report = match enumerate {
        Some(limit) => Some(witness::verify_all_or_nothing(&w, limit)?),
        None => None,
    };
    match format {
        Format::Table => {
            println!("witness {}: n={} m={}", spec, report.n, report.m);
            println!("ppm frontier: {}", pairs_line(&report.interval_frontier));
            println!("tfm frontier: {}", pairs_line(&report.chordal_frontier));
            println!("orthogonal: {}", yes_no(report.holds()));
            if let Some(er) = &enum_report {
                println!(
                    "enumeration: {} candidate(s), {} chordal, {} minimal",
                    er.candidates, er.chordal, er.minimal
                );
                println!("all-or-nothing blocks: {}", yes_no(er.all_or_nothing_holds));
                println!(
                    "minimal completions are the two canonical ones: {}",
                    yes_no(er.minimal_are_the_two_completions)
                );
            }
            println!("graph:");
            print!("{}", w.graph());
        }
        Format::Csv => {
            println!("problem,k,cost");
            for p in &report.interval_frontier.points {
                println!("ppm,{},{}", p.k, p.cost);
            }
            for p in &report.chordal_frontier.points {
                println!("tfm,{},{}", p.k, p.cost);
            }
        }
        Format::Json => {
            let mut v = json!({
                "spec": { "a": spec.a(), "b": spec.b(), "c": spec.c() },
                "n": report.n,
                "m": report.m,
                "graph": graph_json(w.graph()),
                "ppm_frontier": frontier_json("ppm", &report.interval_frontier),
                "tfm_frontier": frontier_json("tfm", &report.chordal_frontier),
                "orthogonal": report.holds(),
            });
            if let Some(er) = &enum_report {
                v["enumeration"] = json!({
                    "candidates": er.candidates,
                    "chordal": er.chordal,
                    "minimal": er.minimal,
                    "all_or_nothing_holds": er.all_or_nothing_holds,
                    "minimal_are_the_two_completions": er.minimal_are_the_two_completions,
                });
            }
            println!("{}", v);
        }
    }
    if !report.holds() {
        return Err(Failure::new(1, "no width/cost gap: one completion attains both optima"));
    }
    if let Some(er) = &enum_report {
        if !er.all_or_nothing_holds || !er.minimal_are_the_two_completions {
            return Err(Failure::new(1, "enumeration contradicts the block structure"));
        }
    }
    Ok(())
}

fn cmd_strategy_derive(
    g: &Graph,
    flavor: Flavor,
    opts: ValidateOptions,
    limits: &Limits,
    format: Format,
) -> Result<(), Failure> {
    let (s, ref_name, ref_value) = match flavor {
        Flavor::Active => {
            let res = solvers::profile_exact(g, limits)?;
            let r = res.representation.as_ref().expect("profile result carries a representation");
            (search::active_from_representation(g, r)?, "profile", res.value)
        }
        Flavor::Inert => {
            let res = solvers::fillin_exact(g, limits)?;
            let s = search::inert_from_elimination(g, &res.witness)?;
            (s, "edges+fillin", g.m() + res.value)
        }
    };
    let m = search::metrics(&s);
    let report = search::validate_strategy(g, &s, opts);
    match format {
        Format::Table => {
            println!("flavor: {}", s.flavor);
            print_metrics(&m, Some((ref_name, ref_value)));
            print!("validation: {}", report);
            println!("strategy:");
            print!("{}", s);
        }
        Format::Csv => print_steps_csv(&s),
        Format::Json => {
            let v = json!({
                "flavor": s.flavor.to_string(),
                "metrics": metrics_json(&m),
                "reference": { "name": ref_name, "value": ref_value },
                "valid": report.is_valid(),
                "steps": steps_json(&s),
            });
            println!("{}", v);
        }
    }
    if !report.is_valid() {
        return Err(Failure::new(1, "derived strategy failed validation"));
    }
    Ok(())
}

fn cmd_strategy_validate(
    g: &Graph,
    file: &Path,
    flavor: Flavor,
    opts: ValidateOptions,
    format: Format,
) -> Result<(), Failure> {
    let text = fs::read_to_string(file)
        .map_err(|e| Failure::new(2, format!("{}: {}", file.display(), e)))?;
    let s = SearchStrategy::parse(&text, flavor)
        .map_err(|e| Failure::new(2, format!("{}: {}", file.display(), e)))?;
    let report = search::validate_strategy(g, &s, opts);
    let m = search::metrics(&s);
    match format {
        Format::Table => {
            print!("{}", report);
            print_metrics(&m, None);
        }
        Format::Csv => {
            println!("field,value");
            println!("valid,{}", report.is_valid());
            for v in &report.violations {
                println!("violation,\"{}\"", v.to_string().replace('"', "\"\""));
            }
            for n in &report.notes {
                println!("note,\"{}\"", n.replace('"', "\"\""));
            }
        }
        Format::Json => {
            let v = json!({
                "valid": report.is_valid(),
                "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "notes": &report.notes,
                "metrics": metrics_json(&m),
            });
            println!("{}", v);
        }
    }
    if !report.is_valid() {
        return Err(Failure::new(1, "strategy failed validation"));
    }
    Ok(())
}

fn cmd_gen(n: usize, density: u8, seed: u64, format: Format) -> Result<(), Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if rng.gen_range(0..100) < density as u32 {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, &edges).map_err(|e| Failure::new(2, e.to_string()))?;
    match format {
        Format::Table => print!("{}", g),
        Format::Csv => {
            println!("u,v");
            for (u, v) in g.edges() {
                println!("{},{}", u, v);
            }
        }
        Format::Json => println!("{}", graph_json(&g)),
    }
    Ok(())
}

// ---- output helpers ----

fn yes_no(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

/// One tradeoff report with the rational bound shown exactly and as a decimal.
fn report_line(r: &TradeoffReport) -> String {
    let bound = if r.wid_bound.den() == 1 {
        format!("{}", r.wid_bound.num())
    } else {
        format!(
            "{} (~{:.3})",
            r.wid_bound,
            r.wid_bound.num() as f64 / r.wid_bound.den() as f64
        )
    };
    format!(
        "t={}: wid {} <= {} ({}); icost {} <= {} ({})",
        r.t,
        r.wid_actual,
        bound,
        if r.wid_ok { "ok" } else { "VIOLATED" },
        r.cost_actual,
        r.cost_bound,
        if r.cost_ok { "ok" } else { "VIOLATED" },
    )
}

fn print_trace(tr: &IcTrace) {
    println!("width target {}: {} iteration(s)", tr.width_target, tr.iterations.len());
    println!("initial representation:");
    print!("{}", tr.initial);
    for (idx, it) in tr.iterations.iter().enumerate() {
        println!(
            "iteration {}: q={} i={} j={} p={} window=[{}]",
            idx + 1,
            it.scan_from,
            it.run_start,
            it.run_end,
            it.anchor_count,
            vertex_list(&it.window_vertices),
        );
        println!("window representation:");
        print!("{}", it.window_repr);
        println!("spliced representation:");
        print!("{}", it.spliced);
    }
}

fn print_metrics(m: &StrategyMetrics, reference: Option<(&str, usize)>) {
    match reference {
        Some((name, value)) => println!("cost: {} ({} {})", m.cost, name, value),
        None => println!("cost: {}", m.cost),
    }
    println!("searchers: {} ({} held between moves)", m.peak_searchers, m.searchers);
    println!("monotone: {}", yes_no(m.monotone));
}

fn print_steps_csv(s: &SearchStrategy) {
    println!("i,cleared,guarded");
    for (i, step) in s.steps.iter().enumerate() {
        println!("{},{},{}", i, vertex_list(&step.cleared.to_vec()), vertex_list(&step.guarded.to_vec()));
    }
}

fn vertex_list(vs: &[Vertex]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn pairs_line(f: &ParetoFrontier) -> String {
    f.pairs()
        .iter()
        .map(|(k, c)| format!("({}, {})", k, c))
        .collect::<Vec<_>>()
        .join(" ")
}

// ---- JSON builders (schemas documented in the README) ----

fn repr_json(r: &CanonicalRepr) -> serde_json::Value {
    let items: Vec<_> = r
        .intervals()
        .map(|(v, l, rt)| json!({ "vertex": v, "left": l, "right": rt }))
        .collect();
    json!(items)
}

fn ordering_json(o: &VertexOrdering) -> serde_json::Value {
    json!(o.as_slice())
}

fn graph_json(g: &Graph) -> serde_json::Value {
    json!({
        "n": g.n(),
        "m": g.m(),
        "edges": g.edges(),
    })
}

fn frontier_json(name: &str, f: &ParetoFrontier) -> serde_json::Value {
    let points: Vec<_> = f
        .points
        .iter()
        .map(|p| json!({ "k": p.k, "cost": p.cost, "ordering": ordering_json(&p.witness) }))
        .collect();
    json!({ "problem": name, "points": points })
}

fn trace_json(tr: &IcTrace) -> serde_json::Value {
    let iterations: Vec<_> = tr
        .iterations
        .iter()
        .map(|it| {
            json!({
                "q": it.scan_from,
                "i": it.run_start,
                "j": it.run_end,
                "p": it.anchor_count,
                "window_vertices": &it.window_vertices,
                "window_repr": repr_json(&it.window_repr),
                "spliced": repr_json(&it.spliced),
            })
        })
        .collect();
    json!({
        "width_target": tr.width_target,
        "initial": repr_json(&tr.initial),
        "iterations": iterations,
    })
}

fn metrics_json(m: &StrategyMetrics) -> serde_json::Value {
    json!({
        "cost": m.cost,
        "searchers": m.peak_searchers,
        "settled_guards": m.searchers,
        "monotone": m.monotone,
    })
}

fn steps_json(s: &SearchStrategy) -> serde_json::Value {
    let steps: Vec<_> = s
        .steps
        .iter()
        .enumerate()
        .map(|(i, st)| {
            json!({
                "i": i,
                "cleared": set_json(st.cleared),
                "guarded": set_json(st.guarded),
            })
        })
        .collect();
    json!(steps)
}

fn set_json(s: VertexSet) -> serde_json::Value {
    json!(s.to_vec())
}
