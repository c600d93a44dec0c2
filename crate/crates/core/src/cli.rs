//! The `p2f` command-line tool.
//!
//! Exit codes: 0 success, 1 `verify` rejected the report, 2 bad input,
//! 3 over budget, 4 internal failure or an unsatisfied bound.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::config::Budgets;
use crate::deficiency::compute_f;
use crate::driver::{report_certificate, solve, validate, BoundMode, SolveReportJson, Violation};
use crate::error::{Error, Result};
use crate::generators::GeneratorSpec;
use crate::graph::Graph;
use crate::io::{parse_edge_list, write_edge_list};
use crate::oracle::{oracle_max_two_regular, oracle_min_non_cycle};

#[derive(Debug, Parser)]
#[command(
    name = "p2f",
    version,
    about = "Pseudo 2-factors with few non-cycle components"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a pseudo 2-factor and report it as JSON.
    Solve {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Mode::Certificate)]
        mode: Mode,
        /// In exact-f mode, fall back to the certificate bound instead of
        /// failing when f(G) is over budget.
        #[arg(long)]
        allow_fallback: bool,
        #[command(flatten)]
        budget: BudgetArg,
        #[command(flatten)]
        out: Out,
        /// Write every applied move as a JSON line to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Check a solve report against its graph.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Report written by `solve`.
        #[arg(long)]
        report: PathBuf,
        #[command(flatten)]
        out: Out,
    },
    /// Compute f(G), α(G), δ(G) and a witness set.
    F {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        budget: BudgetArg,
        #[command(flatten)]
        out: Out,
    },
    /// Compare the solver with the exact oracles on one graph.
    Oracle {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        budget: BudgetArg,
        #[command(flatten)]
        out: Out,
    },
    /// Print a generated graph as an edge list.
    Gen {
        /// Generator spec, e.g. `g2:k=2,l=4`.
        #[arg(long = "gen")]
        spec: GeneratorSpec,
        /// Replace the seed of a random family.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        out: Out,
    },
    /// Tabulate bounds and counts over generator ranges as CSV.
    ///
    /// Integer parameters accept inclusive ranges: `g2:k=1..5`,
    /// `g1:h=k1,p=2..5`, `forest:n=10,seed=0..9`.
    Sweep {
        #[arg(long = "gen", required = true)]
        specs: Vec<String>,
        #[command(flatten)]
        budget: BudgetArg,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    ExactF,
    Certificate,
}

impl From<Mode> for BoundMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::ExactF => BoundMode::ExactF,
            Mode::Certificate => BoundMode::CertificateOnly,
        }
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Edge-list file, `-` for stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Generator spec, e.g. `fig3` or `random:n=10,p=1/2,seed=7`.
    #[arg(long = "gen")]
    spec: Option<GeneratorSpec>,
}

#[derive(Debug, Args)]
pub struct BudgetArg {
    /// Vertex limit for exact f(G) and the subset oracles.
    #[arg(long = "budget-n", value_parser = clap::value_parser!(u64).range(1..))]
    budget_n: Option<u64>,
}

impl BudgetArg {
    fn budgets(&self) -> Budgets {
        let mut b = Budgets::default();
        if let Some(n) = self.budget_n {
            b.exact_n = n as usize;
            b.oracle_n = n as usize;
        }
        b
    }
}

#[derive(Debug, Args)]
pub struct Out {
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Out {
    fn write(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(p) => fs::write(p, text)?,
            None => io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

impl Source {
    fn load(&self) -> Result<Graph> {
        match (&self.input, &self.spec) {
            (Some(p), _) => parse_edge_list(&read_text(p)?),
            (None, Some(s)) => s.build(),
            (None, None) => unreachable!("clap requires one source"),
        }
    }
}

fn json_line<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string(v)? + "\n")
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("p2f: {e}");
            e.exit_code()
        }
    }
}

fn execute(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Solve {
            source,
            mode,
            allow_fallback,
            budget,
            out,
            trace,
        } => {
            let g = source.load()?;
            let budgets = budget.budgets();
            let report = solve(&g, mode.into(), &budgets)?;
            if report.fell_back && !allow_fallback {
                return Err(Error::Budget {
                    what: "exact f",
                    n: g.n(),
                    limit: budgets.exact_n,
                });
            }
            if let Some(path) = trace {
                let mut lines = String::new();
                for m in &report.moves {
                    lines += &json_line(m)?;
                }
                fs::write(path, lines)?;
            }
            out.write(&json_line(&report.to_json())?)?;
            if !report.satisfied {
                eprintln!("p2f: count exceeds the bound");
                return Ok(4);
            }
            Ok(0)
        }
        Command::Verify {
            source,
            report,
            out,
        } => {
            let g = source.load()?;
            let parsed: SolveReportJson = serde_json::from_str(&read_text(&report)?)?;
            let verdict = verify_report(&g, &parsed);
            out.write(&json_line(&verdict)?)?;
            Ok(if verdict.ok() { 0 } else { 1 })
        }
        Command::F {
            source,
            budget,
            out,
        } => {
            let g = source.load()?;
            out.write(&json_line(&compute_f(&g, &budget.budgets())?)?)?;
            Ok(0)
        }
        Command::Oracle {
            source,
            budget,
            out,
        } => {
            let g = source.load()?;
            let row = oracle_row(&g, &budget.budgets())?;
            out.write(&json_line(&row)?)?;
            Ok(0)
        }
        Command::Gen { spec, seed, out } => {
            let spec = match seed {
                Some(s) => with_seed(spec, s),
                None => spec,
            };
            out.write(&write_edge_list(&spec.build()?))?;
            Ok(0)
        }
        Command::Sweep { specs, budget, out } => {
            let budgets = budget.budgets();
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "family",
                "params",
                "f",
                "classical_bound",
                "solver_count",
                "oracle_count",
            ])
            .map_err(csv_error)?;
            for raw in &specs {
                for spec in expand_ranges(raw)? {
                    let row = sweep_row(&spec, &budgets)?;
                    w.write_record(&row).map_err(csv_error)?;
                }
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            out.write(&String::from_utf8(bytes).expect("csv output is utf-8"))?;
            Ok(0)
        }
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(io::Error::other(e))
}

/// Outcome of `verify`.
#[derive(Debug, Serialize)]
pub struct Verdict {
    pub valid: bool,
    pub violations: Vec<Violation>,
    /// Whether the carried witness reproduces `bound`; `None` without one.
    pub certificate_ok: Option<bool>,
    pub within_bound: bool,
}

impl Verdict {
    pub fn ok(&self) -> bool {
        self.valid && self.certificate_ok != Some(false) && self.within_bound
    }
}

pub fn verify_report(g: &Graph, report: &SolveReportJson) -> Verdict {
    let v = validate(g, &report.factor());
    let certificate_ok = report_certificate(g, report);
    // A report without a witness claims a 2-factor.
    let bound = if certificate_ok.is_some() {
        report.bound.max(0)
    } else {
        0
    };
    Verdict {
        valid: v.is_valid(),
        violations: v.violations,
        certificate_ok,
        within_bound: report.non_cycle_count as i64 <= bound,
    }
}

/// One row of `oracle`.
#[derive(Debug, Serialize)]
pub struct OracleRow {
    pub n: usize,
    pub m: usize,
    pub solver_count: usize,
    pub oracle_count: usize,
    pub f: i64,
    pub classical_bound: i64,
    pub max_two_regular: usize,
    pub optimal_cycle_cover_sizes: Vec<usize>,
}

pub fn oracle_row(g: &Graph, budgets: &Budgets) -> Result<OracleRow> {
    let bound = compute_f(g, budgets)?;
    let best = oracle_min_non_cycle(g, budgets)?;
    let (max_two_regular, _) = oracle_max_two_regular(g, budgets)?;
    let solved = solve(g, BoundMode::CertificateOnly, budgets)?;
    Ok(OracleRow {
        n: g.n(),
        m: g.m(),
        solver_count: solved.factor.non_cycle_count,
        oracle_count: best.count,
        f: bound.f_value,
        classical_bound: bound.classical_bound,
        max_two_regular,
        optimal_cycle_cover_sizes: best.optimal_cycle_cover_sizes,
    })
}

fn sweep_row(spec: &GeneratorSpec, budgets: &Budgets) -> Result<[String; 6]> {
    let g = spec.build()?;
    let over = |r: Result<String>| match r {
        Err(Error::Budget { .. }) => Ok(String::new()),
        other => other,
    };
    let (f, classical) = match compute_f(&g, budgets) {
        Ok(b) => (b.f_value.to_string(), b.classical_bound.to_string()),
        Err(Error::Budget { .. }) => (String::new(), String::new()),
        Err(e) => return Err(e),
    };
    let solver = solve(&g, BoundMode::CertificateOnly, budgets)?
        .factor
        .non_cycle_count;
    let oracle = over(oracle_min_non_cycle(&g, budgets).map(|o| o.count.to_string()))?;
    Ok([
        spec.family().to_string(),
        spec.params(),
        f,
        classical,
        solver.to_string(),
        oracle,
    ])
}

fn with_seed(spec: GeneratorSpec, seed: u64) -> GeneratorSpec {
    match spec {
        GeneratorSpec::RandomGraph {
            n, p_num, p_den, ..
        } => GeneratorSpec::RandomGraph {
            n,
            p_num,
            p_den,
            seed,
        },
        GeneratorSpec::RandomForest { n, .. } => GeneratorSpec::RandomForest { n, seed },
        GeneratorSpec::RandomTree { n, .. } => GeneratorSpec::RandomTree { n, seed },
        other => other,
    }
}

/// Expands every `a..b` (inclusive) parameter of a generator spec, last
/// parameter varying fastest.
pub fn expand_ranges(raw: &str) -> Result<Vec<GeneratorSpec>> {
    let bad = |msg: &str| Error::Generator {
        spec: raw.to_string(),
        msg: msg.to_string(),
    };
    let (family, rest) = raw.split_once(':').unwrap_or((raw, ""));
    let mut partials = vec![Vec::<String>::new()];
    for item in rest.split(',').filter(|s| !s.is_empty()) {
        let (key, value) = match item.split_once('=') {
            Some((k, v)) => (Some(k), v),
            None => (None, item),
        };
        let values: Vec<String> = match value.split_once("..") {
            None => vec![value.to_string()],
            Some((a, b)) => {
                let (a, b): (u64, u64) = match (a.parse(), b.parse()) {
                    (Ok(a), Ok(b)) => (a, b),
                    _ => return Err(bad("range bounds must be integers")),
                };
                if a > b {
                    return Err(bad("empty range"));
                }
                (a..=b).map(|x| x.to_string()).collect()
            }
        };
        partials = partials
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(match key {
                        Some(k) => format!("{k}={v}"),
                        None => v.clone(),
                    });
                    q
                })
            })
            .collect();
    }
    partials
        .into_iter()
        .map(|items| {
            if items.is_empty() {
                family.parse()
            } else {
                format!("{family}:{}", items.join(",")).parse()
            }
        })
        .collect()
}
