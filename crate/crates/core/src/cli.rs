//! The `maxtrans` command line.
//!
//! Relation-producing commands (`maximal`, `maximum`, `closure`, `encode`)
//! write their result to `--output` or standard output and their report to
//! standard error. `check`, `experiment` and `bench` write the report itself
//! as the result.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{run_bench, Density};
use crate::cnf::encode_mts_to_cnf;
use crate::error::Error;
use crate::extremal::{random_triangle_free_graph, run_balance_experiment, ExperimentParams};
use crate::format::{parse_relation, serialize, Format};
use crate::maximal::{is_maximal_transitive, Algorithm};
use crate::maximum::{
    brute_force_max_dicut, brute_force_mts, local_search_dicut, quarter_approx, DicutResult, Side,
    DEFAULT_ARC_BUDGET, DEFAULT_VERTEX_BUDGET,
};
use crate::relation::Relation;
use crate::report::{self, RunReport};

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    /// Bad flags or parameters (clap also exits with 2).
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const BUDGET: i32 = 4;
    /// A requested check failed on the computed output.
    pub const VERIFY: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(
    name = "maxtrans",
    version,
    about = "Maximal and maximum transitive sub-relations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Input relation, edge list or 0/1 matrix (`-` for standard input).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// Where to write the result (default: standard output).
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Run invariant checks on the output and fail if any does not hold.
    #[arg(long, global = true)]
    pub verify: bool,

    /// Emit reports as JSON instead of `key=value` records.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    V1,
    V2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MaximumMode {
    Exact,
    Quarter,
    DicutExact,
    DicutLocal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DensityArg {
    Sparse,
    Dense,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximal transitive sub-relation.
    Maximal {
        #[arg(long, value_enum, default_value_t = AlgorithmArg::V2)]
        algorithm: AlgorithmArg,
    },
    /// Maximum transitive sub-relation, exact or approximate.
    Maximum {
        #[arg(long, value_enum, default_value_t = MaximumMode::Quarter)]
        mode: MaximumMode,
        /// Enumeration budget: arcs for `exact`, vertices for `dicut-exact`.
        #[arg(long)]
        budget: Option<usize>,
        /// Move limit for `dicut-local`.
        #[arg(long, default_value_t = 100_000)]
        max_rounds: usize,
    },
    /// Transitive closure.
    Closure,
    /// Report structural properties of the input.
    Check,
    /// DIMACS CNF whose max-ones solutions are maximum transitive sub-relations.
    Encode,
    /// Random orientations of a random bipartite graph, with balance statistics.
    Experiment {
        #[arg(long = "n")]
        n: usize,
        #[arg(long = "m")]
        m: usize,
        #[arg(long)]
        trials: usize,
        /// Cut size threshold (default: ⌈m/4⌉).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        delta: f64,
        #[arg(long, default_value_t = 1.0)]
        cprime: f64,
    },
    /// Time both maximal algorithms on seeded random relations.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_enum, default_value_t = DensityArg::Sparse)]
        density: DensityArg,
        #[arg(long, default_value_t = 5)]
        repetitions: usize,
    },
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: exit::USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => exit::PARSE,
            Error::BudgetExceeded { .. } => exit::BUDGET,
            _ => exit::USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError {
            code: exit::IO,
            message: e.to_string(),
        }
    }
}

/// Runs one command; returns the exit status. Diagnostics go to `err`.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Maximal { algorithm } => cmd_maximal(cli, *algorithm, out, err),
        Command::Maximum {
            mode,
            budget,
            max_rounds,
        } => cmd_maximum(cli, *mode, *budget, *max_rounds, out, err),
        Command::Closure => cmd_closure(cli, out, err),
        Command::Check => cmd_check(cli, out),
        Command::Encode => cmd_encode(cli, out, err),
        Command::Experiment {
            n,
            m,
            trials,
            k,
            delta,
            cprime,
        } => {
            let params = ExperimentParams {
                trials: *trials,
                k: k.unwrap_or(m.div_ceil(4)),
                delta: *delta,
                seed: cli.seed,
                cprime: *cprime,
            };
            cmd_experiment(cli, *n, *m, params, out)
        }
        Command::Bench {
            sizes,
            density,
            repetitions,
        } => cmd_bench(cli, sizes, *density, *repetitions, out),
    }
}

fn read_input(cli: &Cli) -> Result<(Relation, Format), CliError> {
    let path = cli
        .input
        .as_deref()
        .ok_or_else(|| CliError::usage("this command needs --input PATH"))?;
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError {
            code: exit::IO,
            message: format!("{}: {e}", path.display()),
        })?
    };
    Ok(parse_relation(&text)?)
}

fn write_result(cli: &Cli, out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => fs::write(path, text).map_err(|e| CliError {
            code: exit::IO,
            message: format!("{}: {e}", path.display()),
        }),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn render(cli: &Cli, report: &RunReport) -> String {
    if cli.json {
        report.to_json() + "\n"
    } else {
        report.to_record() + "\n"
    }
}

fn finish(cli: &Cli, report: &RunReport, sink: &mut dyn Write) -> Result<i32, CliError> {
    sink.write_all(render(cli, report).as_bytes())?;
    Ok(if report.all_passed() {
        exit::OK
    } else {
        exit::VERIFY
    })
}

fn verify_subrelation(report: &mut RunReport, host: &Relation, t: &Relation) {
    report.check("transitive", t.is_transitive());
    report.check("subrelation", t.is_subrelation(host).unwrap_or(false));
}

pub fn cmd_maximal(
    cli: &Cli,
    algorithm: AlgorithmArg,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let (r, format) = read_input(cli)?;
    let alg = match algorithm {
        AlgorithmArg::V1 => Algorithm::V1,
        AlgorithmArg::V2 => Algorithm::V2,
    };
    let start = Instant::now();
    let t = alg.run_untraced(&r);
    let elapsed = start.elapsed();

    let mut report = RunReport::new("maximal", r.n(), r.arc_count());
    report.property("algorithm", if alg == Algorithm::V1 { "v1" } else { "v2" });
    report.result_size = t.arc_count();
    report.wall_time_ns = elapsed.as_nanos();
    if cli.verify {
        verify_subrelation(&mut report, &r, &t);
        let maximal = matches!(is_maximal_transitive(&r, &t), Ok(true));
        report.check("maximal", maximal);
    }
    write_result(cli, out, &serialize(&t, format))?;
    finish(cli, &report, err)
}

fn forward_arcs(r: &Relation, cut: &DicutResult) -> Relation {
    let p = &cut.partition;
    Relation::from_arcs(
        r.n(),
        r.iter_arcs()
            .filter(|&(i, j)| p.side(i) == Side::U && p.side(j) == Side::V),
    )
}

pub fn cmd_maximum(
    cli: &Cli,
    mode: MaximumMode,
    budget: Option<usize>,
    max_rounds: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let (r, format) = read_input(cli)?;
    let mut report = RunReport::new("maximum", r.n(), r.arc_count());
    let start = Instant::now();
    let (t, mode_name) = match mode {
        MaximumMode::Exact => (
            brute_force_mts(&r, budget.unwrap_or(DEFAULT_ARC_BUDGET))?,
            "exact",
        ),
        MaximumMode::Quarter => (quarter_approx(&r), "quarter"),
        MaximumMode::DicutExact => {
            let cut = brute_force_max_dicut(&r, budget.unwrap_or(DEFAULT_VERTEX_BUDGET))?;
            report.property("backward", cut.backward);
            (forward_arcs(&r, &cut), "dicut-exact")
        }
        MaximumMode::DicutLocal => {
            let cut = local_search_dicut(&r, cli.seed, max_rounds)?;
            report.property("backward", cut.backward);
            (forward_arcs(&r, &cut), "dicut-local")
        }
    };
    report.wall_time_ns = start.elapsed().as_nanos();
    report.property("mode", mode_name);
    report.result_size = t.arc_count();
    if mode == MaximumMode::Quarter {
        report.check(
            "quarter_floor",
            4 * t.arc_count() >= r.arc_count() - r.loop_count(),
        );
    }
    if cli.verify {
        verify_subrelation(&mut report, &r, &t);
    }
    write_result(cli, out, &serialize(&t, format))?;
    finish(cli, &report, err)
}

pub fn cmd_closure(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let (r, format) = read_input(cli)?;
    let start = Instant::now();
    let c = r.transitive_closure();
    let mut report = RunReport::new("closure", r.n(), r.arc_count());
    report.wall_time_ns = start.elapsed().as_nanos();
    report.result_size = c.arc_count();
    if cli.verify {
        report.check("transitive", c.is_transitive());
        report.check("extensive", r.is_subrelation(&c).unwrap_or(false));
    }
    write_result(cli, out, &serialize(&c, format))?;
    finish(cli, &report, err)
}

pub fn cmd_check(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let (r, format) = read_input(cli)?;
    let start = Instant::now();
    let g = r.underlying_graph();
    let mut report = RunReport::new("check", r.n(), r.arc_count());
    report.property(
        "format",
        if format == Format::Matrix {
            "matrix"
        } else {
            "edge-list"
        },
    );
    report.property("transitive", r.is_transitive());
    report.property("triangle_free", g.is_triangle_free());
    report.property("path_length_two", r.has_path_length_two());
    report.property("underlying_edges", g.edge_count());
    report.result_size = r.arc_count();
    report.wall_time_ns = start.elapsed().as_nanos();
    write_result(cli, out, &render(cli, &report))?;
    Ok(exit::OK)
}

pub fn cmd_encode(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let (r, _) = read_input(cli)?;
    let start = Instant::now();
    let f = encode_mts_to_cnf(&r);
    let mut report = RunReport::new("encode", r.n(), r.arc_count());
    report.wall_time_ns = start.elapsed().as_nanos();
    report.result_size = f.clauses.len();
    report.property("num_vars", f.num_vars);
    write_result(cli, out, &f.to_dimacs())?;
    finish(cli, &report, err)
}

pub fn cmd_experiment(
    cli: &Cli,
    n: usize,
    m: usize,
    params: ExperimentParams,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if params.trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    if n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let g = random_triangle_free_graph(n, m, params.seed)?;
    let e = run_balance_experiment(&g, params)?;
    let text = if cli.json {
        report::experiment_json(&e)
    } else {
        report::experiment_text(&e)
    };
    write_result(cli, out, &text)?;
    Ok(exit::OK)
}

pub fn cmd_bench(
    cli: &Cli,
    sizes: &[usize],
    density: DensityArg,
    repetitions: usize,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if repetitions == 0 {
        return Err(CliError::usage("--repetitions must be at least 1"));
    }
    if sizes.iter().any(|&n| n < 2) || !sizes.windows(2).all(|w| w[0] < w[1]) {
        return Err(CliError::usage("--sizes must be ascending and at least 2"));
    }
    let density = match density {
        DensityArg::Sparse => Density::Sparse,
        DensityArg::Dense => Density::Dense,
    };
    let rows = run_bench(sizes, density, repetitions, cli.seed);
    let text = if cli.json {
        report::bench_json(&rows)
    } else {
        report::bench_text(&rows)
    };
    write_result(cli, out, &text)?;
    Ok(exit::OK)
}
