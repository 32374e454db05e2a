//! Thin command-line front end over the library; every operation is a
//! direct call into `factorkit`.
//!
//! Exit codes: 0 on success (all checks pass / factor exists), 1 when a
//! check fails or no factor exists, 2 on usage or input errors.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use factorkit::factors::{
    cp_criterion_capped, find_factor_capped, fractional_tutte_capped, CriterionDecision,
};
use factorkit::generate::{generate, GeneratorSpec};
use factorkit::harness::checks::DEFAULT_SEED;
use factorkit::harness::{enumerate_exceptions, sweep, verify_paper, CorpusSpec, VerifyOptions};
use factorkit::parameters::{compute_capped, Parameter};
use factorkit::{edgelist, Graph};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "factorkit",
    about = "Exact toughness, isolated toughness, binding number, and factors into edges and odd cycles"
)]
struct Cli {
    /// Worker threads; results are identical at any count.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one vulnerability parameter of a graph file.
    Compute(ComputeArgs),
    /// Decide factor existence and construct a certificate.
    Factor(FactorArgs),
    /// Generate a graph family member as an edge-list file.
    Gen(GenArgs),
    /// Run the built-in claim-verification suite.
    VerifyPaper(VerifyArgs),
    /// Enumerate the order-7 exception graphs exhaustively.
    Exceptions(ExceptionsArgs),
    /// Tabulate all four parameters and the factor decision over a corpus.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ParamFlag {
    T,
    I,
    Iprime,
    Bind,
}

impl From<ParamFlag> for Parameter {
    fn from(p: ParamFlag) -> Parameter {
        match p {
            ParamFlag::T => Parameter::Toughness,
            ParamFlag::I => Parameter::IsolatedToughness,
            ParamFlag::Iprime => Parameter::IsolatedToughnessVariant,
            ParamFlag::Bind => Parameter::BindingNumber,
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// Graph file in the edge-list format.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    param: ParamFlag,
    /// Enumeration cap; orders above it are an error, never an approximation.
    #[arg(long, default_value_t = factorkit::parameters::DEFAULT_ENUMERATION_CAP)]
    cap: usize,
    /// Also write the result as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct FactorArgs {
    #[arg(long)]
    input: PathBuf,
    /// 5 allows edges and odd cycles of length >= 5; 3 also allows triangles.
    #[arg(long, default_value_t = 5)]
    min_cycle: usize,
    #[arg(long, default_value_t = factorkit::parameters::DEFAULT_ENUMERATION_CAP)]
    cap: usize,
    /// Separate cap for the backtracking construction.
    #[arg(long, default_value_t = factorkit::factors::DEFAULT_CONSTRUCTION_CAP)]
    construction_cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyFlag {
    Complete,
    Path,
    Cycle,
    Gm,
    Hm,
    Random,
    Cactus,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyFlag,
    /// Order, for complete/path/cycle/random.
    #[arg(long)]
    n: Option<usize>,
    /// Family parameter for gm/hm.
    #[arg(long)]
    m: Option<usize>,
    /// Edge probability for random.
    #[arg(long)]
    p: Option<f64>,
    /// Triangle count for cactus.
    #[arg(long)]
    blocks: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest m for the order-(4m-1) family.
    #[arg(long, default_value_t = 5)]
    m_max: usize,
    /// Random graphs per order in the small corpus (2000 reproduces the
    /// full acceptance configuration).
    #[arg(long, default_value_t = 2000)]
    corpus_size: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = factorkit::parameters::DEFAULT_ENUMERATION_CAP)]
    cap: usize,
    /// Write the machine-readable report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Skip the order-7 exception enumeration (the slowest block).
    #[arg(long)]
    skip_exceptions: bool,
}

#[derive(Args)]
struct ExceptionsArgs {
    /// Only 7 is supported; the enumeration is hard-coded to that order.
    #[arg(long, default_value_t = 7)]
    order: usize,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated list of orders.
    #[arg(long, value_delimiter = ',', default_value = "5,6,7,8,9")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 50)]
    per_size: usize,
    /// Comma-separated edge probabilities, cycled over replicates.
    #[arg(long, value_delimiter = ',', default_value = "0.15,0.3,0.5,0.7,0.85")]
    probs: Vec<f64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = factorkit::parameters::DEFAULT_ENUMERATION_CAP)]
    cap: usize,
    /// Output CSV file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    edgelist::parse(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

fn write_or_print(path: &Option<PathBuf>, content: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, content).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run_compute(args: &ComputeArgs) -> Result<ExitCode> {
    let graph = read_graph(&args.input)?;
    let parameter: Parameter = args.param.into();
    let result = compute_capped(&graph, parameter, args.cap)?;
    println!("{}", result.value);
    if result.value.is_finite() {
        let witness: Vec<String> = result.witness.iter().map(|v| v.to_string()).collect();
        println!("witness: {}", witness.join(" "));
    }
    if let Some(json_path) = &args.json {
        let witness: Vec<usize> = result.witness.iter().collect();
        let payload = serde_json::json!({
            "parameter": parameter.selector(),
            "value": result.value.to_string(),
            "witness": witness,
        });
        std::fs::write(json_path, serde_json::to_string_pretty(&payload)?)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn run_factor(args: &FactorArgs) -> Result<ExitCode> {
    let graph = read_graph(&args.input)?;
    let decision = match args.min_cycle {
        5 => cp_criterion_capped(&graph, args.cap)?,
        3 => fractional_tutte_capped(&graph, args.cap)?,
        other => bail!("minimum cycle length must be 3 or 5, got {other}"),
    };
    match decision {
        CriterionDecision::HasFactor => {
            println!("FACTOR");
            if graph.order() <= args.construction_cap {
                let built = find_factor_capped(&graph, args.min_cycle, args.construction_cap)?
                    .expect("criterion and construction agree");
                println!("{built}");
            } else {
                println!(
                    "decomposition not constructed: order {} above construction cap {}",
                    graph.order(),
                    args.construction_cap
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        CriterionDecision::NoFactor(v) => {
            println!("NO-FACTOR");
            let label = if args.min_cycle == 5 { "c_tc" } else { "iso" };
            println!(
                "violating set {} with {label} = {} > |S| = {}",
                v.set,
                v.count,
                v.set.len()
            );
            Ok(ExitCode::from(1))
        }
    }
}

fn run_gen(args: &GenArgs) -> Result<ExitCode> {
    let need = |opt: Option<usize>, flag: &str| -> Result<usize> {
        opt.with_context(|| format!("this family requires --{flag}"))
    };
    let spec = match args.family {
        FamilyFlag::Complete => GeneratorSpec::Complete { n: need(args.n, "n")? },
        FamilyFlag::Path => GeneratorSpec::Path { n: need(args.n, "n")? },
        FamilyFlag::Cycle => GeneratorSpec::Cycle { n: need(args.n, "n")? },
        FamilyFlag::Gm => GeneratorSpec::Gm { m: need(args.m, "m")? },
        FamilyFlag::Hm => GeneratorSpec::Hm { m: need(args.m, "m")? },
        FamilyFlag::Random => GeneratorSpec::Random {
            n: need(args.n, "n")?,
            p: args.p.context("random requires --p")?,
            seed: args.seed,
        },
        FamilyFlag::Cactus => GeneratorSpec::Cactus {
            blocks: need(args.blocks, "blocks")?,
            seed: args.seed,
        },
    };
    let graph = generate(&spec)?;
    let mut text = edgelist::serialize(&graph);
    if !text.ends_with('\n') {
        text.push('\n');
    }
    write_or_print(&args.output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let defaults = VerifyOptions::default();
    let opts = VerifyOptions {
        hm_max: args.m_max,
        corpus: CorpusSpec {
            per_size: args.corpus_size,
            seed: args.seed,
            ..defaults.corpus
        },
        large_corpus: CorpusSpec {
            seed: args.seed.wrapping_add(1),
            ..defaults.large_corpus
        },
        include_exceptions: !args.skip_exceptions,
        cap: args.cap,
        ..defaults
    };
    let report = verify_paper(&opts);
    print!("{}", report.render_text());
    if let Some(json_path) = &args.json {
        std::fs::write(json_path, report.to_json())?;
    }
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_exceptions(args: &ExceptionsArgs) -> Result<ExitCode> {
    let report = enumerate_exceptions(args.order)?;
    println!(
        "order {}: {} labeled graphs scanned, {} without a factor, {} with variant above 4, {} isomorphism classes",
        report.order,
        report.total_labeled,
        report.no_factor_labeled,
        report.surviving_labeled,
        report.classes.len()
    );
    for (i, class) in report.classes.iter().enumerate() {
        println!(
            "class {}: I' = {}, {}, {} labeled graphs",
            i + 1,
            class.iso_variant,
            if class.connected { "connected" } else { "disconnected" },
            class.labeled_count
        );
        for line in class.canonical.lines() {
            println!("  {line}");
        }
    }
    if let Some(json_path) = &args.json {
        let classes: Vec<serde_json::Value> = report
            .classes
            .iter()
            .map(|c| {
                serde_json::json!({
                    "canonical": c.canonical,
                    "iso_variant": c.iso_variant.to_string(),
                    "connected": c.connected,
                    "labeled_count": c.labeled_count,
                })
            })
            .collect();
        let payload = serde_json::json!({
            "order": report.order,
            "total_labeled": report.total_labeled,
            "no_factor_labeled": report.no_factor_labeled,
            "surviving_labeled": report.surviving_labeled,
            "classes": classes,
        });
        std::fs::write(json_path, serde_json::to_string_pretty(&payload)?)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn run_sweep(args: &SweepArgs) -> Result<ExitCode> {
    if args.probs.is_empty() || args.sizes.is_empty() {
        bail!("sweep needs at least one size and one probability");
    }
    let spec = CorpusSpec {
        sizes: args.sizes.clone(),
        per_size: args.per_size,
        probabilities: args.probs.clone(),
        seed: args.seed,
    };
    let table = sweep(&spec, args.cap);
    write_or_print(&args.output, &table.to_csv())?;
    Ok(ExitCode::SUCCESS)
}

fn dispatch(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Compute(args) => run_compute(args),
        Command::Factor(args) => run_factor(args),
        Command::Gen(args) => run_gen(args),
        Command::VerifyPaper(args) => run_verify(args),
        Command::Exceptions(args) => run_exceptions(args),
        Command::Sweep(args) => run_sweep(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    };
    match cli.jobs {
        Some(jobs) if jobs > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map(|pool| pool.install(run))
            .unwrap_or_else(|e| {
                eprintln!("error: building worker pool: {e}");
                ExitCode::from(2)
            }),
        _ => run(),
    }
}
