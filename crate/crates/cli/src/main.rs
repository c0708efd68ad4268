use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dyadgen::analytics::{log_spaced, AvgDegreeCurve, DegreeStats, RegimeReport};
use dyadgen::arrows::{
    build_hasse, class_label, enumerate_closed_classes, enumerate_deletion_invariant,
    transitive_closure, ArrowSet, ArrowType, CompositionTable,
};
use dyadgen::dorpa::{sample_dorpa_events, sample_dorpa_sequential, PopOrder};
use dyadgen::network::{
    read_network, sample_parallel, sample_sequential, write_network, Model, ModelParams,
    NetworkMeta, RunManifest,
};
use dyadgen::rng::RandomSource;
use dyadgen::verify::{Level, Suite, CRITERIA};
use dyadgen::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_VERIFY: u8 = 3;

/// Default worker count for `sample --model dapa` when `--workers` is absent.
const WORKERS_ENV: &str = "DYADGEN_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "dyadgen",
    version,
    about = "Causal-arrow algebra and growing-network samplers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the 96 deletion-invariant arrow sets, or the 21 closed classes.
    Enumerate {
        /// Print the closed classes instead.
        #[arg(long)]
        closed: bool,
        /// Write the Hasse diagram of the closed classes as DOT.
        #[arg(long, value_name = "PATH")]
        hasse: Option<PathBuf>,
        /// Write the composition table as CSV.
        #[arg(long, value_name = "PATH")]
        table: Option<PathBuf>,
    },
    /// Transitive closure of an arrow set, e.g. `Hub,Path`.
    Closure { arrows: String },
    /// Sample a network and write the edge list plus a run manifest.
    Sample(SampleArgs),
    /// Degree statistics and a regime report for an edge-list file.
    Analyze {
        input: PathBuf,
        /// Directory for the CSV outputs.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Run the acceptance checks.
    Verify {
        #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
        level: LevelArg,
        /// Comma-separated criterion numbers; all when omitted.
        #[arg(long, value_delimiter = ',')]
        criteria: Vec<u8>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModelArg {
    Dapa,
    Dorpa,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    Fifo,
    Lifo,
    Random,
}

#[derive(Debug, clap::Args)]
struct SampleArgs {
    #[arg(long, value_enum, default_value_t = ModelArg::Dapa)]
    model: ModelArg,
    #[arg(long)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    #[arg(long)]
    theta_in: f64,
    #[arg(long)]
    theta_out: f64,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Parallel DAPA workers (default from DYADGEN_WORKERS, else sequential).
    #[arg(long)]
    workers: Option<usize>,
    /// Node block size for the parallel sampler (default ceil(n / workers)).
    #[arg(long)]
    block_size: Option<u32>,
    /// Use the event-driven DORPA sampler.
    #[arg(long)]
    events: bool,
    /// Pop order of the event sampler; `random` is seeded from --seed.
    #[arg(long, value_enum, default_value_t = OrderArg::Fifo)]
    pop_order: OrderArg,
    /// Edge-list output path.
    #[arg(long, short)]
    out: PathBuf,
    /// Manifest path (default: <out>.manifest).
    #[arg(long)]
    manifest: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Validation(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Enumerate {
            closed,
            hasse,
            table,
        } => enumerate(closed, hasse, table),
        Command::Closure { arrows } => closure(&arrows),
        Command::Sample(args) => sample(args),
        Command::Analyze { input, out_dir } => analyze(&input, &out_dir),
        Command::Verify { level, criteria } => verify(level, &criteria),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_VALIDATION)
        }
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY),
    }
}

fn write_file(path: &Path, contents: &str) -> CmdResult {
    fs::write(path, contents)
        .map_err(|e| Failure::Validation(format!("cannot write {}: {e}", path.display())))
}

fn enumerate(closed: bool, hasse: Option<PathBuf>, table_out: Option<PathBuf>) -> CmdResult {
    if let (Some(h), Some(t)) = (&hasse, &table_out) {
        if h == t {
            return Err(Failure::Usage(
                "--hasse and --table must name different files".into(),
            ));
        }
    }
    let table = CompositionTable::derive(6)?;
    let mut out = String::new();
    if closed {
        for class in enumerate_closed_classes(&table) {
            out.push_str(&class_label(class.arrows, &table));
            out.push('\n');
        }
    } else {
        for class in enumerate_deletion_invariant() {
            let closure = transitive_closure(class.arrows, &table);
            out.push_str(&format!(
                "{}\t{}\n",
                class_label(class.arrows, &table),
                class_label(closure, &table)
            ));
        }
    }
    print!("{out}");
    if let Some(path) = hasse {
        let poset = build_hasse(&enumerate_closed_classes(&table))?;
        write_file(&path, &poset.to_dot(&table))?;
    }
    if let Some(path) = table_out {
        write_file(&path, &table.to_csv())?;
    }
    Ok(())
}

fn closure(arrows: &str) -> CmdResult {
    let set: ArrowSet = arrows.parse()?;
    let table = CompositionTable::derive(6)?;
    let closed = transitive_closure(set, &table).without(ArrowType::SelfArrow);
    println!("{closed}\t{}", class_label(closed, &table));
    Ok(())
}

fn env_workers() -> Result<Option<usize>, Failure> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) if !v.trim().is_empty() => v.trim().parse().map(Some).map_err(|_| {
            Failure::Usage(format!(
                "{WORKERS_ENV} must be a positive integer, got `{v}`"
            ))
        }),
        _ => Ok(None),
    }
}

fn sample(args: SampleArgs) -> CmdResult {
    let params = ModelParams::new(args.alpha, args.beta, args.theta_in, args.theta_out)?;
    let model = match args.model {
        ModelArg::Dapa => Model::Dapa,
        ModelArg::Dorpa => Model::Dorpa,
    };
    match model {
        Model::Dapa if args.events => {
            return Err(Failure::Usage(
                "--events applies to --model dorpa only".into(),
            ));
        }
        Model::Dorpa if args.workers.is_some() || args.block_size.is_some() => {
            return Err(Failure::Usage(
                "--workers/--block-size apply to --model dapa only".into(),
            ));
        }
        _ => {}
    }
    if args.block_size.is_some() && args.workers.is_none() {
        return Err(Failure::Usage("--block-size needs --workers".into()));
    }
    let rng = RandomSource::new(args.seed);
    let meta = NetworkMeta {
        model,
        params,
        seed: args.seed,
    };
    let mut manifest = RunManifest::new(&meta, args.n);
    let net = match model {
        Model::Dapa => {
            let workers = match args.workers {
                Some(w) => Some(w),
                None => env_workers()?,
            };
            match workers {
                Some(0) => return Err(Failure::Usage("--workers must be >= 1".into())),
                Some(w) => {
                    let block = args
                        .block_size
                        .unwrap_or_else(|| args.n.div_ceil(w as u32).max(1));
                    let (net, schedule) = sample_parallel(&params, args.n, &rng, w, block)?;
                    manifest.set("sampler", "parallel");
                    manifest.set("workers", w);
                    manifest.set("block_size", block);
                    manifest.set("rounds", schedule.rounds);
                    net
                }
                None => {
                    manifest.set("sampler", "sequential");
                    sample_sequential(&params, args.n, &rng)?
                }
            }
        }
        Model::Dorpa => {
            let (net, stats) = if args.events {
                let order = match args.pop_order {
                    OrderArg::Fifo => PopOrder::Fifo,
                    OrderArg::Lifo => PopOrder::Lifo,
                    OrderArg::Random => PopOrder::Random(args.seed),
                };
                manifest.set("sampler", "events");
                manifest.set("pop_order", format!("{:?}", args.pop_order).to_lowercase());
                sample_dorpa_events(&params, args.n, &rng, order)?
            } else {
                manifest.set("sampler", "sequential");
                sample_dorpa_sequential(&params, args.n, &rng)?
            };
            manifest.set("trigger_draws", stats.total_draws());
            manifest.set("triggers_fired", stats.fired);
            net
        }
    };
    manifest.set("edges", net.edge_count());
    write_network(&net, &args.out)
        .map_err(|e| Failure::Validation(format!("cannot write {}: {e}", args.out.display())))?;
    let manifest_path = args.manifest.unwrap_or_else(|| {
        let mut p = args.out.clone().into_os_string();
        p.push(".manifest");
        PathBuf::from(p)
    });
    write_file(&manifest_path, &manifest.to_text())?;
    println!(
        "wrote {} edges on {} nodes to {}",
        net.edge_count(),
        net.n(),
        args.out.display()
    );
    Ok(())
}

fn analyze(input: &Path, out_dir: &Path) -> CmdResult {
    let net = read_network(input)
        .map_err(|e| Failure::Validation(format!("{}: {e}", input.display())))?;
    fs::create_dir_all(out_dir)
        .map_err(|e| Failure::Validation(format!("cannot create {}: {e}", out_dir.display())))?;
    let stats = DegreeStats::from_network(&net);
    let checkpoints = log_spaced(1, net.n().max(1), 25);
    let curve = AvgDegreeCurve::from_network(&net, &checkpoints)?;
    let report = RegimeReport::from_network(&net);
    write_file(&out_dir.join("degree_hist.csv"), &stats.histogram_csv())?;
    write_file(&out_dir.join("ccdf.csv"), &stats.ccdf_csv())?;
    write_file(&out_dir.join("avg_degree.csv"), &curve.to_csv())?;
    let report_csv = report.to_csv();
    write_file(&out_dir.join("regime_report.csv"), &report_csv)?;
    print!("{report_csv}");
    Ok(())
}

fn verify(level: LevelArg, criteria: &[u8]) -> CmdResult {
    if let Some(bad) = criteria
        .iter()
        .find(|id| !CRITERIA.iter().any(|(c, _)| c == *id))
    {
        return Err(Failure::Usage(format!(
            "no criterion {bad} (valid: 1-{})",
            CRITERIA.len()
        )));
    }
    let level = match level {
        LevelArg::Fast => Level::Fast,
        LevelArg::Full => Level::Full,
    };
    let suite = Suite::new(level)?;
    let report = suite.run(criteria, |outcome| {
        println!("{outcome}");
        let _ = std::io::stdout().flush();
    });
    let passed = report.outcomes.iter().filter(|o| o.passed).count();
    println!("{passed} of {} criteria passed", report.outcomes.len());
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}
