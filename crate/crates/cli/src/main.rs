//! Batch frontend for the cogrowth library: expand sequence prefixes,
//! profile obstruction counts, export factor graphs, and run the lemma
//! suite. Every command echoes its resolved configuration and writes
//! byte-identical output for identical configuration.
//!
//! Exit codes: 0 success, 1 property violation, 2 usage error, 3 data
//! error, 4 line-digraph budget exhausted.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cogrowth::digraph::{to_dot, DEFAULT_LINE_BUDGET};
use cogrowth::factors::extract_factors;
use cogrowth::obstructions::cogrowth_profile;
use cogrowth::rauzy::{build_rauzy, check_proposition1};
use cogrowth::verify::{
    check_corollary_er, check_theorem, run_corollary_main_corpus,
    run_lemma_del_edge_corpus, run_lemma_evol_corpus, run_main_lemma_corpus,
    CorpusConfig, LemmaReport,
};
use cogrowth::words::SequenceSpec;
use cogrowth::{Error, Exec};

#[derive(Parser)]
#[command(
    name = "cogrowth",
    version,
    about = "Minimal forbidden words, factor graphs and entropy regulators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a prefix of the sequence as plain a/b text.
    Generate {
        /// Built-in name, periodic:<word>, or a path to a JSON spec.
        #[arg(long)]
        spec: String,
        /// Prefix length in letters.
        #[arg(long)]
        n: usize,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Profile obstruction counts against log3(n) as CSV.
    Cogrowth {
        #[arg(long)]
        spec: String,
        /// Largest obstruction length to count.
        #[arg(long)]
        n_max: usize,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the order-k factor graph in DOT format.
    Rauzy {
        #[arg(long)]
        spec: String,
        /// Order of the graph: vertices are the length-k factors.
        #[arg(long)]
        k: usize,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run lemma checkers and print a JSON report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Which check to run.
    #[arg(long, value_enum)]
    lemma: Lemma,
    /// Sequence spec for the sequence-based checks.
    #[arg(long, default_value = "fibonacci")]
    spec: String,
    /// Corpus seed. Defaults per lemma: evol 42, del-edge 7, main 13,
    /// corollary-main 11.
    #[arg(long)]
    seed: Option<u64>,
    /// Corpus size. Defaults per lemma: evol/del-edge 300, main 50,
    /// corollary-main 20.
    #[arg(long)]
    count: Option<usize>,
    /// Vertex cap for corpus graphs. Defaults: evol/del-edge 12, the
    /// iterate-heavy checks 6.
    #[arg(long)]
    max_vertices: Option<usize>,
    /// Largest obstruction length for corollary-er (default 20) and
    /// theorem (default 100).
    #[arg(long)]
    n_max: Option<usize>,
    /// First factor-graph order for prop1 (default 1).
    #[arg(long)]
    k_min: Option<usize>,
    /// Last factor-graph order for prop1 (default 10).
    #[arg(long)]
    k_max: Option<usize>,
    /// Run corpus items sequentially instead of data-parallel.
    #[arg(long)]
    sequential: bool,
    /// Write the JSON report to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Lemma {
    Evol,
    DelEdge,
    Main,
    CorollaryEr,
    CorollaryMain,
    Prop1,
    Theorem,
    All,
}

impl Lemma {
    fn as_str(self) -> &'static str {
        match self {
            Lemma::Evol => "evol",
            Lemma::DelEdge => "del-edge",
            Lemma::Main => "main",
            Lemma::CorollaryEr => "corollary-er",
            Lemma::CorollaryMain => "corollary-main",
            Lemma::Prop1 => "prop1",
            Lemma::Theorem => "theorem",
            Lemma::All => "all",
        }
    }
}

/// A terminating condition with its process exit code.
enum Failure {
    /// Bad arguments, unreadable or malformed spec.
    Usage(String),
    /// Checks ran and found violations; the report is already printed.
    Violation,
    /// Input outside an operation's domain, or extraction failure.
    Data(String),
    /// Line-digraph iterate too large for the configured budget.
    Budget(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        let (code, msg) = match self {
            Failure::Usage(m) => (2, Some(m)),
            Failure::Violation => (1, None),
            Failure::Data(m) => (3, Some(m)),
            Failure::Budget(m) => (4, Some(m)),
        };
        if let Some(m) = msg {
            eprintln!("error: {m}");
        }
        ExitCode::from(code)
    }
}

fn from_core(e: Error) -> Failure {
    match e {
        Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
        _ => Failure::Data(e.to_string()),
    }
}

/// Built-in name, periodic:<word>, or a readable JSON file.
fn resolve_spec(arg: &str) -> Result<SequenceSpec, Failure> {
    if let Some(built) = SequenceSpec::builtin(arg) {
        return built.map_err(|e| Failure::Usage(e.to_string()));
    }
    let text = fs::read_to_string(arg)
        .map_err(|e| Failure::Usage(format!("cannot read spec \"{arg}\": {e}")))?;
    SequenceSpec::from_json(&text).map_err(|e| Failure::Usage(e.to_string()))
}

fn budget_from_env() -> Result<usize, Failure> {
    match std::env::var("COGROWTH_BUDGET") {
        Ok(s) => s.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "COGROWTH_BUDGET must be a positive integer, got \"{s}\""
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_LINE_BUDGET),
        Err(e) => Err(Failure::Usage(format!("COGROWTH_BUDGET: {e}"))),
    }
}

fn emit(out: &Option<PathBuf>, payload: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, payload)
            .map_err(|e| Failure::Data(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.exit(),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate { spec, n, out } => cmd_generate(&spec, n, &out),
        Command::Cogrowth { spec, n_max, out } => cmd_cogrowth(&spec, n_max, &out),
        Command::Rauzy { spec, k, out } => cmd_rauzy(&spec, k, &out),
        Command::Verify(args) => cmd_verify(&args),
    }
}

fn cmd_generate(spec_arg: &str, n: usize, out: &Option<PathBuf>) -> Result<(), Failure> {
    let spec = resolve_spec(spec_arg)?;
    let config = json!({"command": "generate", "spec": spec_arg, "n": n});
    // The payload is the bare word, so the config echo goes to stderr.
    eprintln!("# config: {config}");
    let w = spec.expand_prefix(n).map_err(from_core)?;
    emit(out, &format!("{}\n", spec.alphabet().render(&w)))
}

// Explicit prefixes and non-primitive fixed points yield counts the
// scan cannot certify complete; the output says so rather than passing
// them off as exact.
fn uncertified_marker(certified: bool) -> &'static str {
    if certified {
        ""
    } else {
        " uncertified"
    }
}

fn cmd_cogrowth(spec_arg: &str, n_max: usize, out: &Option<PathBuf>) -> Result<(), Failure> {
    let spec = resolve_spec(spec_arg)?;
    let config = json!({"command": "cogrowth", "spec": spec_arg, "n_max": n_max});
    let profile = cogrowth_profile(&spec, n_max).map_err(from_core)?;
    let comment = format!("config: {config}{}", uncertified_marker(profile.certified));
    emit(out, &profile.to_csv(Some(&comment)))
}

fn cmd_rauzy(spec_arg: &str, k: usize, out: &Option<PathBuf>) -> Result<(), Failure> {
    let spec = resolve_spec(spec_arg)?;
    let config = json!({"command": "rauzy", "spec": spec_arg, "k": k});
    let fl = extract_factors(&spec, k + 1).map_err(from_core)?;
    let r = build_rauzy(&fl, k).map_err(from_core)?;
    let dot = to_dot(r.graph(), &format!("rauzy_k{k}"));
    let marker = uncertified_marker(fl.certified());
    emit(out, &format!("// config: {config}{marker}\n{dot}"))
}

/// One entry of the verify report: a lemma name, its verdict, and the
/// checker's own report as the detail.
fn entry(lemma: &str, pass: bool, detail: Value) -> Value {
    json!({"lemma": lemma, "pass": pass, "detail": detail})
}

fn corpus_entry(report: &LemmaReport) -> Value {
    entry(
        &report.lemma,
        report.pass(),
        serde_json::to_value(report).expect("reports serialize"),
    )
}

struct VerifyPlan {
    exec: Exec,
    budget: usize,
    spec: String,
    seed: Option<u64>,
    count: Option<usize>,
    max_vertices: Option<usize>,
    n_max: Option<usize>,
    k_min: Option<usize>,
    k_max: Option<usize>,
}

impl VerifyPlan {
    fn corpus(&self, seed: u64, count: usize, max_vertices: usize) -> CorpusConfig {
        CorpusConfig {
            seed: self.seed.unwrap_or(seed),
            count: self.count.unwrap_or(count),
            max_vertices: self.max_vertices.unwrap_or(max_vertices),
        }
    }

    fn run(&self, lemma: Lemma) -> Result<Vec<Value>, Failure> {
        let one = |v: Value| Ok(vec![v]);
        match lemma {
            Lemma::Evol => {
                let cfg = self.corpus(42, 300, 12);
                let report = run_lemma_evol_corpus(&cfg, self.exec).map_err(from_core)?;
                one(corpus_entry(&report))
            }
            Lemma::DelEdge => {
                let cfg = self.corpus(7, 300, 12);
                let report =
                    run_lemma_del_edge_corpus(&cfg, self.exec).map_err(from_core)?;
                one(corpus_entry(&report))
            }
            Lemma::Main => {
                let cfg = self.corpus(13, 50, 6);
                let report = run_main_lemma_corpus(&cfg, self.exec, self.budget)
                    .map_err(from_core)?;
                one(corpus_entry(&report))
            }
            Lemma::CorollaryMain => {
                let cfg = self.corpus(11, 20, 6);
                let report = run_corollary_main_corpus(&cfg, self.exec, self.budget)
                    .map_err(from_core)?;
                one(corpus_entry(&report))
            }
            Lemma::CorollaryEr => {
                let spec = resolve_spec(&self.spec)?;
                let report = check_corollary_er(&spec, self.n_max.unwrap_or(20))
                    .map_err(from_core)?;
                one(entry(
                    "corollary-er",
                    report.all_pass,
                    serde_json::to_value(&report).expect("reports serialize"),
                ))
            }
            Lemma::Prop1 => {
                let spec = resolve_spec(&self.spec)?;
                let report = check_proposition1(
                    &spec,
                    self.k_min.unwrap_or(1),
                    self.k_max.unwrap_or(10),
                )
                .map_err(from_core)?;
                one(entry(
                    "prop1",
                    report.all_pass,
                    serde_json::to_value(&report).expect("reports serialize"),
                ))
            }
            Lemma::Theorem => {
                let spec = resolve_spec(&self.spec)?;
                let phi_trend = spec.name() == "fibonacci";
                let report = check_theorem(&spec, self.n_max.unwrap_or(100), phi_trend)
                    .map_err(from_core)?;
                one(entry(
                    "theorem",
                    report.threshold_met != Some(false),
                    serde_json::to_value(&report).expect("reports serialize"),
                ))
            }
            Lemma::All => {
                let mut entries = Vec::new();
                for l in [
                    Lemma::Evol,
                    Lemma::DelEdge,
                    Lemma::Main,
                    Lemma::CorollaryMain,
                    Lemma::CorollaryEr,
                    Lemma::Prop1,
                    Lemma::Theorem,
                ] {
                    entries.extend(self.run(l)?);
                }
                Ok(entries)
            }
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let budget = budget_from_env()?;
    let plan = VerifyPlan {
        exec: if args.sequential { Exec::Sequential } else { Exec::Auto },
        budget,
        spec: args.spec.clone(),
        seed: args.seed,
        count: args.count,
        max_vertices: args.max_vertices,
        n_max: args.n_max,
        k_min: args.k_min,
        k_max: args.k_max,
    };
    let config = json!({
        "command": "verify",
        "lemma": args.lemma.as_str(),
        "spec": args.spec,
        "seed": args.seed,
        "count": args.count,
        "max_vertices": args.max_vertices,
        "n_max": args.n_max,
        "k_min": args.k_min,
        "k_max": args.k_max,
        "budget": budget,
        "sequential": args.sequential,
    });
    let reports = plan.run(args.lemma)?;
    let pass = reports
        .iter()
        .all(|r| r["pass"].as_bool().unwrap_or(false));
    let document = json!({"config": config, "reports": reports, "pass": pass});
    let payload = format!(
        "{}\n",
        serde_json::to_string_pretty(&document).expect("report serializes")
    );
    emit(&args.out, &payload)?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}
