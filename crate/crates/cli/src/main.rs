//! Command-line front end: select or load a braiding, run a verification
//! suite, emit a text or JSON report. Exit status 0 = all identities hold,
//! 1 = an identity check failed, 2 = usage or resource error.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qmads_core::algebra::{self, AlgebraKind, AlgebraPresentation};
use qmads_core::braiding::{self, baxterize, Braiding, GKind};
use qmads_core::charpoly;
use qmads_core::dsred::{self, VectorMode};
use qmads_core::freealg::Strategy;
use qmads_core::report::VerificationReport;
use qmads_core::scalar::{parse_scalar, Scalar};
use qmads_core::yangian::{self, CurrentKind};
use qmads_core::{Error, DEFAULT_SPECIALIZATION_SEED};

#[derive(Parser)]
#[command(name = "qmads", version, about = "Exact verification of quantum matrix algebra identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect and validate R-matrices.
    Rmat {
        #[command(subcommand)]
        action: RmatAction,
    },
    /// Run identity verification suites.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
}

#[derive(Subcommand)]
enum RmatAction {
    /// Validate: Yang-Baxter, classification, skew-inverse, bi-rank probe.
    Check(RmatArgs),
    /// Print the skew-inverse and the trace matrix.
    SkewInverse(RmatArgs),
    /// Print classification, bi-rank and skew-symmetrizer ranks.
    Info(RmatArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// Built-in braiding: a name and a dimension, e.g. `--builtin uq-gl 2`.
    #[arg(long, num_args = 2, value_names = ["NAME", "N"])]
    builtin: Option<Vec<String>>,
    /// R-matrix file (plain structured text).
    #[arg(long, value_name = "FILE")]
    rmatrix: Option<String>,
    /// Hecke parameter expression for file-loaded matrices (default: q).
    #[arg(long, value_name = "EXPR")]
    q_param: Option<String>,
}

#[derive(Args)]
struct ReportArgs {
    /// Report format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
    /// Write the report to a file instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
}

#[derive(Args)]
struct RmatArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    report: ReportArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Exact,
    Random,
}

#[derive(Args)]
struct StrategyArgs {
    /// Membership strategy (default: exact for N <= 2, random otherwise).
    #[arg(long, value_enum)]
    strategy: Option<StrategyArg>,
    /// Seed of the random-specialization strategy.
    #[arg(long, default_value_t = DEFAULT_SPECIALIZATION_SEED)]
    seed: u64,
    /// Number of specialization trials.
    #[arg(long, default_value_t = 5)]
    trials: u32,
}

impl StrategyArgs {
    fn resolve(&self) -> Option<Strategy> {
        self.strategy.map(|s| match s {
            StrategyArg::Exact => Strategy::ExactSymbolic,
            StrategyArg::Random => Strategy::RandomSpecialization {
                seed: self.seed,
                trials: self.trials,
            },
        })
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum AlgebraArg {
    Re,
    Rtt,
    Mre,
    Ugl,
}

impl AlgebraArg {
    fn kind(&self) -> AlgebraKind {
        match self {
            AlgebraArg::Re => AlgebraKind::Re,
            AlgebraArg::Rtt => AlgebraKind::Rtt,
            AlgebraArg::Mre => AlgebraKind::ModifiedRe,
            AlgebraArg::Ugl => AlgebraKind::Ugl,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Rational,
    Hecke,
}

#[derive(Subcommand)]
enum VerifyAction {
    /// Cayley-Hamilton identity of a constant algebra (re, mre, ugl).
    Ch {
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        /// Dimension for --algebra ugl (no braiding involved).
        #[arg(long)]
        n: Option<u32>,
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Centrality of the elementary symmetric elements in the RE algebra.
    Centrality {
        /// Check e_k for k = 1..=kmax.
        #[arg(long, default_value_t = 2)]
        kmax: u32,
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Commutativity of power sums in the RE (or RTT) algebra.
    PsumCommute {
        #[arg(long, value_enum, default_value_t = AlgebraArg::Re)]
        algebra: AlgebraArg,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
        /// Degree at which the random strategy takes over from exact.
        #[arg(long, default_value_t = 5)]
        degree_switch: usize,
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Power-sum and quantum-power simplification identities (RE vs RTT).
    Simplifications {
        #[arg(long, default_value_t = 3)]
        kmax: u32,
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Companion-form similarity C·X = X_can·C of a constant algebra.
    Ds {
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        #[arg(long)]
        n: Option<u32>,
        /// Vector choice: `symbolic` or a comma-separated scalar list.
        #[arg(long, default_value = "symbolic")]
        v: String,
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Cayley-Hamilton identity for the generating series of a braided
    /// Yangian, coefficientwise up to an order.
    ChYangian {
        #[arg(long, value_enum)]
        kind: FlavorArg,
        /// Highest u-order checked.
        #[arg(long, default_value_t = 3)]
        order: usize,
        /// Series truncation / relation level cap.
        #[arg(long, default_value_t = 4)]
        trunc: u32,
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Companion-form similarity for the generating series of a braided
    /// Yangian.
    DsYangian {
        #[arg(long, value_enum)]
        kind: FlavorArg,
        #[arg(long, default_value_t = 3)]
        order: usize,
        #[arg(long, default_value_t = 4)]
        trunc: u32,
        #[arg(long, default_value = "symbolic")]
        v: String,
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        strategy: StrategyArgs,
        #[command(flatten)]
        report: ReportArgs,
    },
}

fn load_braiding(src: &SourceArgs) -> Result<Braiding, Error> {
    match (&src.builtin, &src.rmatrix) {
        (Some(pair), None) => {
            let name = pair[0].as_str();
            let n: u32 = pair[1]
                .parse()
                .map_err(|_| Error::Parse(format!("bad dimension {:?}", pair[1])))?;
            match name {
                "flip" => braiding::builtin_flip(n),
                "uq-gl" => braiding::builtin_hecke_standard(n),
                other => Err(Error::Parse(format!(
                    "unknown builtin {other:?} (available: flip, uq-gl)"
                ))),
            }
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
            let op = braiding::file::parse(&text)?;
            let q = match &src.q_param {
                Some(expr) => Some(parse_scalar(expr)?),
                None => Some(Scalar::q()),
            };
            let mut b = braiding::validate(op, q)?;
            b.set_name(path);
            Ok(b)
        }
        _ => Err(Error::Parse(
            "exactly one of --builtin and --rmatrix is required".into(),
        )),
    }
}

fn parse_vector(arg: &str) -> Result<VectorMode, Error> {
    if arg == "symbolic" {
        return Ok(VectorMode::Symbolic);
    }
    let entries = arg
        .split(',')
        .map(parse_scalar)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VectorMode::Rational(entries))
}

fn present(kind: AlgebraKind, src: &SourceArgs, n: Option<u32>) -> Result<AlgebraPresentation, Error> {
    if kind == AlgebraKind::Ugl {
        let n = match n {
            Some(n) => n,
            None => match &src.builtin {
                Some(pair) => pair[1]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad dimension {:?}", pair[1])))?,
                None => return Err(Error::Parse("--algebra ugl needs --n <N>".into())),
            },
        };
        return algebra::present_ugl(n);
    }
    let b = load_braiding(src)?;
    algebra::present(kind, Some(&b), b.n())
}

fn current_presentation(
    flavor: FlavorArg,
    src: &SourceArgs,
    trunc: u32,
) -> Result<qmads_core::CurrentPresentation, Error> {
    let b = load_braiding(src)?;
    let current = baxterize(&b);
    let expected = match flavor {
        FlavorArg::Rational => GKind::Rational,
        FlavorArg::Hecke => GKind::Hecke,
    };
    if current.g_kind() != expected {
        return Err(Error::NotSymmetry(format!(
            "--kind {} needs {} braiding, got {}",
            match flavor {
                FlavorArg::Rational => "rational",
                FlavorArg::Hecke => "hecke",
            },
            match expected {
                GKind::Rational => "an involutive",
                GKind::Hecke => "a Hecke",
            },
            b.kind()
        )));
    }
    yangian::current_relations(&current, CurrentKind::Braided, trunc)
}

fn emit(report: &VerificationReport, fmt: ReportFormat, out: &Option<String>) -> Result<(), Error> {
    let rendered = match fmt {
        ReportFormat::Text => report.render_text(),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report)
                .map_err(|e| Error::Internal(format!("report serialization: {e}")))?;
            s.push('\n');
            s
        }
    };
    match out {
        None => {
            print!("{rendered}");
            Ok(())
        }
        Some(path) => fs::write(path, rendered)
            .map_err(|e| Error::Internal(format!("cannot write {path}: {e}"))),
    }
}

fn emit_plain(text: String, out: &Option<String>) -> Result<(), Error> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            fs::write(path, text).map_err(|e| Error::Internal(format!("cannot write {path}: {e}")))
        }
    }
}

fn rmat_check_report(src: &SourceArgs) -> Result<VerificationReport, Error> {
    use qmads_core::report::{ReportItem, Verdict};
    use std::time::Instant;
    let start = Instant::now();
    match load_braiding(src) {
        Ok(b) => {
            let items = vec![
                ReportItem::new("yang-baxter", Verdict::ZeroExact).timed(start),
                ReportItem::new("classification", Verdict::ZeroExact)
                    .with_detail(b.kind().to_string()),
                ReportItem::new("skew-inverse", Verdict::ZeroExact),
                ReportItem::new(format!("bi-rank({}|0)", b.birank()), Verdict::ZeroExact),
            ];
            Ok(VerificationReport::new(
                b.descriptor(),
                "braiding validation",
                "R-matrix validation",
                "rmat-check",
                items,
            ))
        }
        Err(e @ (Error::NotYangBaxter { .. }
        | Error::NotSymmetry(_)
        | Error::NotSkewInvertible
        | Error::Birank(_))) => {
            let items = vec![ReportItem::new("validation", Verdict::NonzeroWitness)
                .with_detail(e.to_string())
                .timed(start)];
            Ok(VerificationReport::new(
                "invalid input",
                "braiding validation",
                "R-matrix validation",
                "rmat-check",
                items,
            ))
        }
        Err(e) => Err(e),
    }
}

fn run() -> Result<bool, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Rmat { action } => match action {
            RmatAction::Check(args) => {
                let rep = rmat_check_report(&args.source)?;
                emit(&rep, args.report.report, &args.report.out)?;
                Ok(rep.passed())
            }
            RmatAction::SkewInverse(args) => {
                let b = load_braiding(&args.source)?;
                let mut text = String::new();
                text.push_str(&format!("braiding : {}\n", b.descriptor()));
                text.push_str("skew-inverse (i j k l value):\n");
                text.push_str(&braiding::file::serialize(b.psi()));
                text.push_str("trace matrix D (i j value):\n");
                for (&(r, c), v) in b.d().iter() {
                    text.push_str(&format!("{} {} {}\n", r + 1, c + 1, v));
                }
                emit_plain(text, &args.report.out)?;
                Ok(true)
            }
            RmatAction::Info(args) => {
                let b = load_braiding(&args.source)?;
                let tower = qmads_core::skewsym::SkewSymmetrizerTower::build(&b, b.birank() + 1)?;
                let mut text = String::new();
                text.push_str(&format!("braiding : {}\n", b.descriptor()));
                text.push_str(&format!("kind     : {}\n", b.kind()));
                text.push_str(&format!("bi-rank  : ({}|0)\n", b.birank()));
                for k in 1..=b.birank() + 1 {
                    text.push_str(&format!(
                        "rank A^({k}) = {}{}\n",
                        tower.rank(k),
                        if tower.op(k).is_zero() { " (zero operator)" } else { "" }
                    ));
                }
                emit_plain(text, &args.report.out)?;
                Ok(true)
            }
        },
        Command::Verify { action } => match action {
            VerifyAction::Ch { algebra, n, source, strategy, report } => {
                let kind = algebra.kind();
                if kind == AlgebraKind::Rtt {
                    return Err(Error::Parse(
                        "the Cayley-Hamilton driver applies to re, mre and ugl".into(),
                    ));
                }
                let a = present(kind, &source, n)?;
                let rep = charpoly::verify_ch(&a, strategy.resolve())?;
                emit(&rep, report.report, &report.out)?;
                Ok(rep.passed())
            }
            VerifyAction::Centrality { kmax, source, strategy, report } => {
                let a = present(AlgebraKind::Re, &source, None)?;
                let mut items = Vec::new();
                let mut meta = None;
                for k in 1..=kmax {
                    let rep = charpoly::verify_centrality(&a, k, strategy.resolve())?;
                    meta.get_or_insert((rep.braiding.clone(), rep.algebra.clone()));
                    items.extend(rep.items);
                }
                let (braiding_desc, algebra_desc) =
                    meta.unwrap_or_else(|| ("none".into(), a.descriptor()));
                let rep = VerificationReport::new(
                    braiding_desc,
                    algebra_desc,
                    format!("centrality of e_k, k <= {kmax}"),
                    "centrality/re",
                    items,
                );
                emit(&rep, report.report, &report.out)?;
                Ok(rep.passed())
            }
            VerifyAction::PsumCommute {
                algebra,
                kmax,
                degree_switch,
                source,
                strategy,
                report,
            } => {
                let a = present(algebra.kind(), &source, None)?;
                let low = strategy.resolve().unwrap_or(Strategy::ExactSymbolic);
                let high = Strategy::RandomSpecialization {
                    seed: strategy.seed,
                    trials: strategy.trials,
                };
                let rep = charpoly::verify_powersum_commutativity(
                    &a,
                    kmax,
                    low,
                    high,
                    degree_switch,
                )?;
                emit(&rep, report.report, &report.out)?;
                Ok(rep.passed())
            }
            VerifyAction::Simplifications { kmax, source, report } => {
                let b = load_braiding(&source)?;
                let re = algebra::present_re(&b)?;
                let rtt = algebra::present_rtt(&b)?;
                let rep = charpoly::verify_simplifications(&re, &rtt, kmax)?;
                emit(&rep, report.report, &report.out)?;
                Ok(rep.passed())
            }
            VerifyAction::Ds { algebra, n, v, source, strategy, report } => {
                let kind = algebra.kind();
                if kind == AlgebraKind::Rtt {
                    return Err(Error::Parse(
                        "the similarity driver applies to re, mre and ugl".into(),
                    ));
                }
                let a = present(kind, &source, n)?;
                let v_mode = parse_vector(&v)?;
                let rep = dsred::verify_similarity_constant(&a, &v_mode, strategy.resolve())?;
                emit(&rep, report.report, &report.out)?;
                Ok(rep.passed())
            }
            VerifyAction::ChYangian { kind, order, trunc, source, strategy, report } => {
                let p = current_presentation(kind, &source, trunc)?;
                let rep = yangian::verify_ch_yangian(&p, order, strategy.resolve())?;
                emit(&rep, report.report, &report.out)?;
                Ok(rep.passed())
            }
            VerifyAction::DsYangian { kind, order, trunc, v, source, strategy, report } => {
                let p = current_presentation(kind, &source, trunc)?;
                let v_mode = parse_vector(&v)?;
                let rep = dsred::verify_similarity_yangian(&p, &v_mode, order, strategy.resolve())?;
                emit(&rep, report.report, &report.out)?;
                Ok(rep.passed())
            }
        },
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
