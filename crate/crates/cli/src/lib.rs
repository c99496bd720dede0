//! Command-line front end: graph and family ingestion, solver commands and
//! structured output.

pub mod parse;
pub mod record;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use trimlat::bounds::{bound_base, bound_value, BoundVariant};
use trimlat::graphs::generators::{disjoint_cliques, random_bounded_degree};
use trimlat::graphs::{
    count_dominating_sets, enumerate_maximal_bipartite, enumerate_maximal_independent, enumerate_minimal_dominating,
    is_dominating,
};
use trimlat::solvers::{
    chromatic_decision_bipartite, chromatic_number, domatic_meet_in_middle_with_limit, domatic_number_with,
    domatic_packing_decision_with, DomaticStrategy, SolverReport, MEET_IN_MIDDLE_MAX_N,
};
use trimlat::transforms::{trimmed_moebius, trimmed_zeta};
use trimlat::{
    cover_numbers, packing_numbers, partition_numbers, ChromaticMethod, FrontierFilter, Graph, SetFamily, TupleCounts,
    MAX_UNIVERSE,
};

pub use parse::{parse_edge_list, parse_family, parse_function, parse_graph, EdgeList};
pub use record::{Record, RecordError, Value};

/// Environment variable that raises the size guards.
pub const MAX_N_ENV: &str = "TRIMLAT_MAX_N";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("refused: n = {n} exceeds the {guard} guard (n <= {limit}){hint}")]
    Refused { guard: &'static str, n: usize, limit: usize, hint: &'static str },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] trimlat::Error),
}

#[derive(Debug, Parser)]
#[command(name = "trimlat", version, about = "Exact graph solvers over trimmed subset lattices")]
pub struct Cli {
    /// Emit one JSON object per line instead of key=value records.
    #[arg(long, global = true)]
    pub json: bool,
    /// Lift the size guards up to the largest supported universe.
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chromatic number of a graph.
    Chromatic {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Mis)]
        method: MethodArg,
    },
    /// Domatic number of a graph, or a meet-in-the-middle decision.
    Domatic {
        graph: PathBuf,
        /// Decide whether the domatic number is at least this even value.
        #[arg(long, value_name = "D")]
        meet_in_middle: Option<usize>,
        /// Sweep without the complement-dominates filter.
        #[arg(long)]
        unfiltered: bool,
    },
    /// Cover, partition or packing numbers of a set family.
    Count(CountArgs),
    /// Trimmed zeta or Moebius transform of a sparse function.
    Transform {
        function: PathBuf,
        #[arg(long, value_enum, default_value_t = DirectionArg::Zeta)]
        direction: DirectionArg,
    },
    /// Bound bases for a range of maximum degrees.
    Bounds {
        /// A degree or an inclusive range such as `3..8`.
        #[arg(long, default_value = "3..8", value_parser = parse_delta_range)]
        delta: RangeInclusive<usize>,
    },
    /// Visited-mask counts against the bounds on generated instances.
    Bench {
        #[arg(long, value_enum, default_value_t = BenchFamily::Cliques)]
        family: BenchFamily,
        #[arg(long, default_value_t = 3)]
        delta: usize,
        #[arg(long, value_delimiter = ',', default_value = "8,12,16")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_enum, default_value_t = KindArg::Cover)]
    pub kind: KindArg,
    #[arg(short, long)]
    pub k: usize,
    /// Family file: `universe <n>` then one set per line.
    #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
    pub family: Option<PathBuf>,
    /// Derive the family from a graph instead.
    #[arg(long, requires = "from")]
    pub graph: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub from: Option<SourceArg>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MethodArg {
    Mis,
    Bipartite,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DirectionArg {
    Zeta,
    Moebius,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Cover,
    Partition,
    Packing,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SourceArg {
    Dominating,
    MinDominating,
    MaxIndependent,
    MaxBipartite,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BenchFamily {
    Cliques,
    Random,
}

fn parse_delta_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad degree `{t}`"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => (parse(text)?, parse(text)?),
    };
    if lo == 0 || hi < lo || hi > MAX_UNIVERSE - 2 {
        return Err(format!("degrees must satisfy 1 <= lo <= hi <= {}", MAX_UNIVERSE - 2));
    }
    Ok(lo..=hi)
}

/// Size limits for one invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    pub lattice: usize,
    pub meet_in_middle: usize,
}

impl Guards {
    /// Defaults, raised by `force` or by a numeric `env_value`. Nothing goes
    /// past the largest representable universe.
    pub fn new(force: bool, env_value: Option<&str>) -> Result<Self, CliError> {
        let mut guards = Guards { lattice: MAX_UNIVERSE, meet_in_middle: MEET_IN_MIDDLE_MAX_N };
        if let Some(v) = env_value {
            let raised: usize = v
                .trim()
                .parse()
                .map_err(|_| CliError::Invalid(format!("{MAX_N_ENV} must be a number, found `{v}`")))?;
            guards.meet_in_middle = guards.meet_in_middle.max(raised.min(MAX_UNIVERSE));
        }
        if force {
            guards.meet_in_middle = MAX_UNIVERSE;
        }
        Ok(guards)
    }

    fn check(guard: &'static str, n: usize, limit: usize) -> Result<(), CliError> {
        if n <= limit {
            return Ok(());
        }
        let hint = if limit >= MAX_UNIVERSE {
            ", the largest supported universe"
        } else {
            "; pass --force or set TRIMLAT_MAX_N"
        };
        Err(CliError::Refused { guard, n, limit, hint })
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        return std::io::read_to_string(std::io::stdin()).map_err(|source| CliError::Io { path: path.into(), source });
    }
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn load_graph(path: &Path, guards: &Guards) -> Result<Graph, CliError> {
    let edges = parse_edge_list(&read(path)?)?;
    Guards::check("lattice", edges.n, guards.lattice)?;
    edges.into_graph()
}

/// Header of a file whose first meaningful line is `universe <n>`, checked
/// before the body is parsed.
fn universe_guard(text: &str, guards: &Guards) -> Result<(), CliError> {
    let header = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    if let Some(n) = header.and_then(|h| h.strip_prefix("universe")).and_then(|n| n.trim().parse().ok()) {
        Guards::check("lattice", n, guards.lattice)?;
    }
    Ok(())
}

struct Output<'a> {
    out: &'a mut dyn Write,
    json: bool,
}

impl Output<'_> {
    fn record(&mut self, record: &Record) -> std::io::Result<()> {
        writeln!(self.out, "{}", record.render(self.json))
    }

    /// A bare answer line, shown only in key=value mode.
    fn answer(&mut self, answer: impl std::fmt::Display) -> std::io::Result<()> {
        if self.json {
            return Ok(());
        }
        writeln!(self.out, "{answer}")
    }
}

fn solver_record<A: Into<Value> + Clone>(name: &str, g: &Graph, report: &SolverReport<A>) -> Record {
    let mut record = Record::new(name)
        .with("n", g.n())
        .with("max_degree", g.max_degree())
        .with("answer", report.answer.clone())
        .with("family_size", report.family_size)
        .with("visited", report.visited);
    if let Some(w) = report.witness {
        record = record.with("witness", w);
    }
    record
}

/// Rounded up to four decimals, so a printed base never understates the bound.
fn ceil4(x: f64) -> f64 {
    (x * 1e4 - 1e-9).ceil() / 1e4
}

fn count_table(args: &CountArgs, guards: &Guards) -> Result<(SetFamily, TupleCounts), CliError> {
    let family = match (&args.family, &args.graph, args.from) {
        (Some(path), _, _) => {
            let text = read(path)?;
            universe_guard(&text, guards)?;
            parse_family(&text)?
        }
        (None, Some(path), Some(source)) => {
            let g = load_graph(path, guards)?;
            match source {
                SourceArg::Dominating => SetFamily::from_predicate(g.universe(), |x| is_dominating(&g, x)),
                SourceArg::MinDominating => enumerate_minimal_dominating(&g),
                SourceArg::MaxIndependent => enumerate_maximal_independent(&g),
                SourceArg::MaxBipartite => enumerate_maximal_bipartite(&g),
            }
        }
        _ => return Err(CliError::Invalid("give --family FILE or --graph FILE --from SOURCE".into())),
    };
    let all = FrontierFilter::accept_all();
    let counts = match args.kind {
        KindArg::Cover => cover_numbers(&family, args.k, &all)?,
        KindArg::Partition => partition_numbers(&family, args.k, &all)?,
        KindArg::Packing => packing_numbers(&family, args.k)?,
    };
    Ok((family, counts))
}

struct BenchRow {
    n: usize,
    max_degree: usize,
    algorithm: &'static str,
    visited: usize,
    bound: f64,
}

fn bench_instance(family: BenchFamily, delta: usize, n: usize, seed: u64) -> Result<Graph, CliError> {
    Ok(match family {
        BenchFamily::Cliques => {
            let copies = n / (delta + 1);
            if copies == 0 {
                return Err(CliError::Invalid(format!("n = {n} is smaller than a single K_{}", delta + 1)));
            }
            disjoint_cliques(copies, delta + 1)?
        }
        BenchFamily::Random => {
            let mut rng = StdRng::seed_from_u64(seed ^ (n as u64).rotate_left(32));
            random_bounded_degree(n, delta, 0.5, &mut rng)?
        }
    })
}

fn bench_rows(g: &Graph) -> Result<Vec<BenchRow>, CliError> {
    let (n, delta) = (g.n(), g.max_degree());
    let domatic = domatic_packing_decision_with(g, g.min_degree() + 1, DomaticStrategy::Filtered)?;
    let chromatic = chromatic_decision_bipartite(g, delta + 1)?;
    Ok(vec![
        BenchRow {
            n,
            max_degree: delta,
            algorithm: "domatic_filtered",
            visited: domatic.visited,
            bound: bound_value(n, delta, BoundVariant::DominatingTrimmed),
        },
        BenchRow {
            n,
            max_degree: delta,
            algorithm: "chromatic_bipartite",
            visited: chromatic.visited,
            bound: bound_value(n, delta, BoundVariant::Chromatic),
        },
    ])
}

fn execute(cli: Cli, guards: Guards, out: &mut Output<'_>) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: "<stdout>".into(), source };
    match cli.command {
        Command::Chromatic { graph, method } => {
            let g = load_graph(&graph, &guards)?;
            let (method, name, variant) = match method {
                MethodArg::Mis => (ChromaticMethod::Mis, "mis", BoundVariant::Dominating),
                MethodArg::Bipartite => (ChromaticMethod::Bipartite, "bipartite", BoundVariant::Chromatic),
            };
            let report = chromatic_number(&g, method)?;
            out.answer(report.answer).map_err(io)?;
            let record = solver_record("chromatic", &g, &report)
                .with("method", name)
                .with("bound", bound_value(g.n(), g.max_degree(), variant));
            out.record(&record).map_err(io)?;
        }
        Command::Domatic { graph, meet_in_middle: Some(d), .. } => {
            let g = load_graph(&graph, &guards)?;
            Guards::check("meet-in-middle", g.n(), guards.meet_in_middle)?;
            let report = domatic_meet_in_middle_with_limit(&g, d, guards.meet_in_middle)?;
            out.answer(report.answer).map_err(io)?;
            out.record(&solver_record("domatic_meet_in_middle", &g, &report).with("d", d)).map_err(io)?;
        }
        Command::Domatic { graph, meet_in_middle: None, unfiltered } => {
            let g = load_graph(&graph, &guards)?;
            let (strategy, name, variant) = if unfiltered {
                (DomaticStrategy::Unfiltered, "unfiltered", BoundVariant::Dominating)
            } else {
                (DomaticStrategy::Filtered, "filtered", BoundVariant::DominatingTrimmed)
            };
            let report = domatic_number_with(&g, strategy)?;
            out.answer(report.answer).map_err(io)?;
            let record = solver_record("domatic", &g, &report)
                .with("strategy", name)
                .with("bound", bound_value(g.n(), g.max_degree(), variant))
                .with("dominating_sets", count_dominating_sets(&g));
            out.record(&record).map_err(io)?;
        }
        Command::Count(args) => {
            let (family, counts) = count_table(&args, &guards)?;
            let kind = counts.kind.to_string();
            for (mask, value) in counts.table.iter() {
                let record = Record::new("count")
                    .with("kind", kind.as_str())
                    .with("k", args.k)
                    .with("mask", mask)
                    .with("value", value.clone());
                out.record(&record).map_err(io)?;
            }
            let summary = Record::new("count_summary")
                .with("kind", kind.as_str())
                .with("k", args.k)
                .with("n", family.universe().size())
                .with("family_size", family.len())
                .with("visited", counts.visited_count())
                .with("entries", counts.table.len())
                .with("nonzero", counts.nonzero().count());
            out.record(&summary).map_err(io)?;
        }
        Command::Transform { function, direction } => {
            let text = read(&function)?;
            universe_guard(&text, &guards)?;
            let f = parse_function(&text)?;
            let (result, name) = match direction {
                DirectionArg::Zeta => (trimmed_zeta(&f), "zeta"),
                DirectionArg::Moebius => (trimmed_moebius(&f), "moebius"),
            };
            for (mask, value) in result.table.iter() {
                let record = Record::new("transform").with("direction", name).with("mask", mask).with("value", value.clone());
                out.record(&record).map_err(io)?;
            }
            let summary = Record::new("transform_summary")
                .with("direction", name)
                .with("n", f.universe().size())
                .with("support", f.len())
                .with("visited", result.visited_count())
                .with("nonzero", result.table.len());
            out.record(&summary).map_err(io)?;
        }
        Command::Bounds { delta } => {
            for d in delta {
                let mut record = Record::new("bounds").with("delta", d);
                for variant in BoundVariant::ALL {
                    record = record.with(&variant.to_string(), ceil4(bound_base(d, variant)));
                }
                out.record(&record).map_err(io)?;
            }
        }
        Command::Bench { family, delta, sizes, seed } => {
            for &n in &sizes {
                Guards::check("lattice", n, guards.lattice)?;
            }
            let graphs = sizes
                .iter()
                .map(|&n| bench_instance(family, delta, n, seed))
                .collect::<Result<Vec<_>, _>>()?;
            let results: Vec<Result<Vec<BenchRow>, CliError>> = std::thread::scope(|scope| {
                let handles: Vec<_> = graphs.iter().map(|g| scope.spawn(move || bench_rows(g))).collect();
                handles.into_iter().map(|h| h.join().expect("bench worker panicked")).collect()
            });
            let instance = match family {
                BenchFamily::Cliques => "cliques",
                BenchFamily::Random => "random",
            };
            for rows in results {
                for row in rows? {
                    let record = Record::new("bench")
                        .with("instance", instance)
                        .with("n", row.n)
                        .with("max_degree", row.max_degree)
                        .with("algorithm", row.algorithm)
                        .with("visited", row.visited)
                        .with("bound", row.bound)
                        .with("ratio", row.visited as f64 / row.bound);
                    out.record(&record).map_err(io)?;
                }
            }
        }
    }
    Ok(())
}

/// Runs one invocation. Returns 0 when the computation completed, 1 when it
/// was refused or failed, 2 on a usage error.
pub fn run<I, T>(args: I, env_max_n: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = Guards::new(cli.force, env_max_n).and_then(|guards| {
        let mut output = Output { out, json: cli.json };
        execute(cli, guards, &mut output)
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "trimlat: {e}");
            1
        }
    }
}
