//! Command-line front end for `rmlab`.
//!
//! Exit codes: 0 success / claim holds, 1 claim failed, 2 invalid parameters
//! or unmet hypothesis (and I/O errors), 3 enumeration cap exceeded.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use rmlab::harness::{self, coset_census, CensusOptions, Method, Sampling, Scope, Verdict};
use rmlab::krawtchouk::{central_column, central_k, kraw_column, kraw_direct};
use rmlab::rmcodes::{coset_weight_distribution, rm_weight_distribution};
use rmlab::spectral::{parseval_check, wht};
use rmlab::transforms::{coset_distribution_via_dual, rm_distribution_via_dual};
use rmlab::{
    AnfMonomialSet, CosetSpec, Error, Limits, RmParams, TruthTable, WeightDistribution, CAP_DIM_ENV,
};

#[derive(Parser)]
#[command(
    name = "rmlab",
    version,
    about = "Exact Reed-Muller weight distributions and coset censuses"
)]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Largest code dimension enumerated word by word (log2 of the word count).
    #[arg(long, global = true, env = CAP_DIM_ENV)]
    cap_dim: Option<u32>,
    /// Report elapsed_ms as 0 so verdicts are byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Krawtchouk values K_j(i, n).
    Kraw(KrawArgs),
    /// Weight distribution of RM(k, m).
    Weightdist(WeightdistArgs),
    /// Weight distribution of a coset RM(k, m) + f.
    Cosetdist(CosetdistArgs),
    /// Walsh-Hadamard spectrum of a function.
    Wht(WhtArgs),
    /// Check a statement about balanced words over a family of cosets.
    Verify(VerifyArgs),
    /// Balanced-word count of every nontrivial coset.
    Census(CensusArgs),
}

#[derive(Args)]
struct KrawArgs {
    #[arg(long)]
    n: u64,
    /// Degree j of the polynomial.
    #[arg(long, conflicts_with = "central")]
    j: Option<u64>,
    /// Use j = n / 2.
    #[arg(long)]
    central: bool,
    /// Evaluation point i.
    #[arg(long, conflicts_with = "all")]
    i: Option<u64>,
    /// Evaluate at every i in 0..=n.
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct CodeArgs {
    /// Order k of RM(k, m).
    #[arg(short = 'k')]
    k: u32,
    /// Number of variables m; the code length is 2^m.
    #[arg(short = 'm')]
    m: u32,
}

#[derive(Args)]
struct FunctionArgs {
    /// Truth table as hex, most significant digit first.
    #[arg(long, conflicts_with = "anf", required_unless_present = "anf")]
    rep: Option<String>,
    /// Algebraic normal form such as `Y1Y2+Y3+1`.
    #[arg(long)]
    anf: Option<String>,
}

impl FunctionArgs {
    fn table(&self, m: u32) -> rmlab::Result<TruthTable> {
        match (&self.rep, &self.anf) {
            (Some(hex), _) => TruthTable::from_hex(m, hex),
            (None, Some(anf)) => TruthTable::from_anf(&AnfMonomialSet::parse(m, anf)?),
            (None, None) => Err(Error::InvalidParams("give --rep or --anf".into())),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DistMethod {
    Brute,
    Macwilliams,
}

#[derive(Args)]
struct WeightdistArgs {
    #[command(flatten)]
    code: CodeArgs,
    #[arg(long, value_enum, default_value = "brute")]
    method: DistMethod,
}

#[derive(Clone, Copy, ValueEnum)]
enum CosetMethod {
    Brute,
    Transform,
}

#[derive(Args)]
struct CosetdistArgs {
    #[command(flatten)]
    code: CodeArgs,
    #[command(flatten)]
    function: FunctionArgs,
    #[arg(long, value_enum, default_value = "brute")]
    method: CosetMethod,
}

#[derive(Args)]
struct WhtArgs {
    #[arg(short = 'm')]
    m: u32,
    #[command(flatten)]
    function: FunctionArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimArg {
    Theorem5,
    Conjecture,
    Rm1,
    Oddweight,
    Equidist,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Transform,
    Spectral,
    Auto,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Brute => Method::Brute,
            MethodArg::Transform => Method::Transform,
            MethodArg::Spectral => Method::Spectral,
            MethodArg::Auto => Method::Auto,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    claim: ClaimArg,
    #[arg(short = 'k')]
    k: Option<u32>,
    #[arg(short = 'm')]
    m: u32,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    /// rm1: test every function (one per coset for m = 4).
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    /// rm1: number of seeded random functions.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Progress file for resumable censuses.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    /// All cosets in the full space.
    Full,
    /// Cosets inside RM(k + 1, m).
    Next,
}

#[derive(Args)]
struct CensusArgs {
    #[command(flatten)]
    code: CodeArgs,
    #[arg(long, value_enum, default_value = "full")]
    scope: ScopeArg,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    #[arg(long)]
    checkpoint: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("rmlab: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => 3,
                _ => 2,
            })
        }
    }
}

fn run(cli: &Cli) -> rmlab::Result<ExitCode> {
    if let Some(n) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::InvalidParams(format!("--workers: {e}")))?;
    }
    let mut limits = Limits::default();
    if let Some(cap) = cli.cap_dim {
        limits = limits.with_max_dim(cap);
    }
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let code = match &cli.command {
        Command::Kraw(a) => {
            kraw(a, cli.format.unwrap_or(Format::Table), &mut out)?;
            ExitCode::SUCCESS
        }
        Command::Weightdist(a) => {
            let p = RmParams::new(a.code.k, a.code.m)?;
            let d = match a.method {
                DistMethod::Brute => rm_weight_distribution(&p, &limits)?,
                DistMethod::Macwilliams => rm_distribution_via_dual(&p, &limits)?,
            };
            write_distribution(&d, cli.format.unwrap_or(Format::Json), &mut out)?;
            ExitCode::SUCCESS
        }
        Command::Cosetdist(a) => {
            let p = RmParams::new(a.code.k, a.code.m)?;
            let rep = a.function.table(a.code.m)?;
            let d = match a.method {
                CosetMethod::Brute => coset_weight_distribution(&p, &rep, &limits)?,
                CosetMethod::Transform => {
                    coset_distribution_via_dual(&CosetSpec::new(p, rep)?, &limits)?
                }
            };
            write_distribution(&d, cli.format.unwrap_or(Format::Json), &mut out)?;
            ExitCode::SUCCESS
        }
        Command::Wht(a) => {
            let f = a.function.table(a.m)?;
            let s = wht(&f);
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => {
                    let v = json!({
                        "m": a.m,
                        "values": s.values(),
                        "zero_count": s.zero_count(),
                        "parseval": parseval_check(&s),
                    });
                    writeln!(out, "{}", serde_json::to_string(&v)?)?;
                }
                Format::Csv => {
                    writeln!(out, "omega,value")?;
                    for (omega, v) in s.values().iter().enumerate() {
                        writeln!(out, "{omega},{v}")?;
                    }
                }
                Format::Table => writeln!(out, "{}", join(s.values()))?,
            }
            ExitCode::SUCCESS
        }
        Command::Verify(a) => {
            let v = verify(a, &limits)?;
            let v = if cli.no_timing { v.without_timing() } else { v };
            write_verdict(&v, cli.format.unwrap_or(Format::Json), &mut out)?;
            if v.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Census(a) => {
            let p = RmParams::new(a.code.k, a.code.m)?;
            let scope = match a.scope {
                ScopeArg::Full => Scope::FullSpace,
                ScopeArg::Next => Scope::WithinNextOrder,
            };
            let options = CensusOptions {
                method: Some(a.method.into()),
                checkpoint: a.checkpoint.clone(),
            };
            let census = coset_census(&p, scope, &options, &limits)?;
            match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => census.write_csv(&mut out)?,
                Format::Json => {
                    let entries: Vec<_> = census
                        .entries
                        .iter()
                        .map(|e| json!({ "rep_hex": e.rep.to_hex(), "balanced_count": e.balanced.to_string() }))
                        .collect();
                    let v = json!({
                        "k": a.code.k,
                        "m": a.code.m,
                        "scope": census.scope,
                        "method": census.method,
                        "code_balanced_count": census.code_balanced_count.to_string(),
                        "entries": entries,
                    });
                    writeln!(out, "{}", serde_json::to_string(&v)?)?;
                }
                Format::Table => {
                    writeln!(out, "{:<12} {}", "code", census.code_balanced_count)?;
                    for e in &census.entries {
                        writeln!(out, "{:<12} {}", e.rep.to_hex(), e.balanced)?;
                    }
                }
            }
            ExitCode::SUCCESS
        }
    };
    out.flush()?;
    Ok(code)
}

fn join<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn kraw(a: &KrawArgs, format: Format, out: &mut dyn Write) -> rmlab::Result<()> {
    let values: Vec<BigInt> = match (a.central, a.j, a.i, a.all) {
        (true, _, Some(i), _) => vec![central_k(i, a.n)?],
        (true, _, None, true) => central_column(a.n)?,
        (false, Some(j), Some(i), _) => vec![kraw_direct(j, i, a.n)?],
        (false, Some(j), None, true) => kraw_column(j, a.n)?,
        (false, None, _, _) => return Err(Error::InvalidParams("give --j or --central".into())),
        (_, _, None, false) => return Err(Error::InvalidParams("give --i or --all".into())),
    };
    match format {
        Format::Table => writeln!(out, "{}", join(&values))?,
        Format::Json => {
            let strings: Vec<String> = values.iter().map(BigInt::to_string).collect();
            writeln!(out, "{}", serde_json::to_string(&strings)?)?;
        }
        Format::Csv => {
            writeln!(out, "i,value")?;
            let first = a.i.unwrap_or(0);
            for (offset, v) in values.iter().enumerate() {
                writeln!(out, "{},{v}", first + offset as u64)?;
            }
        }
    }
    Ok(())
}

fn write_distribution(
    d: &WeightDistribution,
    format: Format,
    out: &mut dyn Write,
) -> rmlab::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(d)?)?,
        Format::Csv => {
            writeln!(out, "weight,count")?;
            for (w, c) in d.nonzero() {
                writeln!(out, "{w},{c}")?;
            }
        }
        Format::Table => {
            let rows: Vec<(String, String)> = d
                .nonzero()
                .map(|(w, c)| (w.to_string(), c.to_string()))
                .collect();
            let width = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max(5);
            writeln!(out, "{:>6}  {:>width$}", "weight", "count")?;
            for (w, c) in rows {
                writeln!(out, "{w:>6}  {c:>width$}")?;
            }
        }
    }
    Ok(())
}

fn verify(a: &VerifyArgs, limits: &Limits) -> rmlab::Result<Verdict> {
    let need_k = || {
        a.k.ok_or_else(|| Error::InvalidParams("this claim needs -k".into()))
    };
    let options = CensusOptions {
        method: Some(a.method.into()),
        checkpoint: a.checkpoint.clone(),
    };
    match a.claim {
        ClaimArg::Theorem5 => harness::verify_theorem_basic(need_k()?, a.m, &options, limits),
        ClaimArg::Conjecture => {
            harness::verify_quotient_conjecture(need_k()?, a.m, &options, limits)
        }
        ClaimArg::Rm1 => {
            let sampling = match a.samples {
                Some(count) => Sampling::Sampled {
                    count,
                    seed: a.seed,
                },
                None if a.exhaustive || a.m <= 4 => Sampling::Exhaustive,
                None => Sampling::Sampled {
                    count: 10_000,
                    seed: a.seed,
                },
            };
            harness::verify_rm1_proposition(a.m, sampling, limits)
        }
        ClaimArg::Oddweight => harness::verify_oddweight_cosets(a.m, a.method.into(), limits),
        ClaimArg::Equidist => {
            harness::verify_hamming_coset_equidistribution(a.m, a.method.into(), limits)
        }
    }
}

fn cell(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn write_verdict(v: &Verdict, format: Format, out: &mut dyn Write) -> rmlab::Result<()> {
    let value = serde_json::to_value(v)?;
    let fields = value.as_object().expect("verdict serializes to an object");
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&value)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(fields.keys())
                .and_then(|_| w.write_record(fields.values().map(cell)))
                .map_err(|e| Error::Io(io::Error::other(e)))?;
            w.flush()?;
        }
        Format::Table => {
            for (key, v) in fields {
                writeln!(out, "{key:<12} {}", cell(v))?;
            }
        }
    }
    Ok(())
}
