//! Command-line front end: model analysis reports, oracle cross-checks,
//! blow-up export, and ring-isomorphism reconstruction runs.
//!
//! Exit codes are a stable contract: 0 success, 1 discrepancy or failed
//! verification, 2 bad input, 3 empty graph (a locality region with fewer
//! than two points).

mod config;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use config::{RawConfig, RunConfig};
use zdgamma::blowup::crosscheck::{self, CrossCheckOptions};
use zdgamma::blowup::{generate, BlowupSpec};
use zdgamma::isorecon::{self, identity_psi};
use zdgamma::zdgraph::{diameter_and_radius, dominating_set};
use zdgamma::{Error, GraphReport};

#[derive(Parser)]
#[command(
    name = "zdgamma",
    about = "Zero-divisor graphs of support-constrained function rings: closed forms, oracles, reconstruction",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form graph report for a model
    Analyze(ModelArgs),
    /// Cross-check every closed form against the brute-force oracle
    Verify(VerifyArgs),
    /// Export a blow-up as DOT and JSON adjacency documents
    Export(ModelArgs),
    /// Reconstruct a ring isomorphism from a vertex bijection between two blow-ups
    Iso(IsoArgs),
}

#[derive(Args, Clone, Default)]
struct ModelArgs {
    /// Key-value config file; flags override its entries
    #[arg(long)]
    config: Option<PathBuf>,
    /// Ground set: `finite:N` or `countable`
    #[arg(long)]
    ground: Option<String>,
    /// Ideal of closed sets: `all`, `finite`, or `powerset:{..}`
    #[arg(long)]
    ideal: Option<String>,
    /// Graph flavor: `cp` (support in the ideal) or `cpinf` (level sets in the ideal)
    #[arg(long)]
    flavor: Option<String>,
    /// Blow-up window: a finite set literal or a point count
    #[arg(long)]
    window: Option<String>,
    /// Blow-up alphabet: comma-separated nonzero rationals
    #[arg(long)]
    alphabet: Option<String>,
    /// Seed for sampled verification
    #[arg(long)]
    seed: Option<u64>,
    /// Output path (report JSON, or export base name)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Run only the named check families (comma separated)
    #[arg(long)]
    only: Option<String>,
    /// Fault injection: corrupt one adjacency and expect a discrepancy
    #[arg(long)]
    mutate: bool,
}

#[derive(Args)]
struct IsoArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Second model's ground set (defaults to the first)
    #[arg(long)]
    ground2: Option<String>,
    /// Second model's ideal (defaults to the first)
    #[arg(long)]
    ideal2: Option<String>,
    /// Second model's flavor
    #[arg(long)]
    flavor2: Option<String>,
    /// Second model's window
    #[arg(long)]
    window2: Option<String>,
    /// Second model's alphabet
    #[arg(long)]
    alphabet2: Option<String>,
    /// Vertex bijection: a JSON file of [from, to] pairs, or `identity`
    #[arg(long, default_value = "identity")]
    psi: String,
    /// Number of random pairs for ring-law verification
    #[arg(long, default_value_t = 500)]
    samples: usize,
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::EmptyGraph { .. } => 3,
            _ => 2,
        };
        CliError { code, message: err.to_string() }
    }
}

impl From<String> for CliError {
    fn from(message: String) -> Self {
        CliError::input(message)
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message);
            err.code
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(resolve(&args)?),
        Command::Verify(args) => {
            let mut raw = raw_from_flags(&args.model);
            raw.only = args.only.clone().or(raw.only);
            raw.mutate = if args.mutate { Some("true".into()) } else { raw.mutate };
            let cfg = resolve_raw(raw, &args.model.config)?;
            cmd_verify(cfg)
        }
        Command::Export(args) => cmd_export(resolve(&args)?),
        Command::Iso(args) => cmd_iso(args),
    }
}

fn raw_from_flags(args: &ModelArgs) -> RawConfig {
    RawConfig {
        ground: args.ground.clone(),
        ideal: args.ideal.clone(),
        flavor: args.flavor.clone(),
        window: args.window.clone(),
        alphabet: args.alphabet.clone(),
        seed: args.seed.map(|s| s.to_string()),
        out: args.out.as_ref().map(|p| p.display().to_string()),
        only: None,
        mutate: None,
    }
}

fn resolve_raw(flags: RawConfig, config_path: &Option<PathBuf>) -> Result<RunConfig, CliError> {
    let merged = match config_path {
        Some(path) => flags.or(config::read_config_file(path)?),
        None => flags,
    };
    Ok(RunConfig::resolve(merged)?)
}

fn resolve(args: &ModelArgs) -> Result<RunConfig, CliError> {
    resolve_raw(raw_from_flags(args), &args.config)
}

fn cmd_analyze(cfg: RunConfig) -> Result<i32, CliError> {
    let model = cfg.model()?;
    let report = GraphReport::for_model(&model, cfg.flavor)?;
    let profile = diameter_and_radius(&model, cfg.flavor)?;
    let dominating = dominating_set(&model, cfg.flavor)?;

    let json = serde_json::to_string_pretty(&report).expect("report serialises");
    if let Some(path) = &cfg.out {
        std::fs::write(path, &json)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))?;
    }
    println!("{json}");
    println!();
    println!("model                  {model}");
    println!("flavor                 {}", cfg.flavor);
    println!("diameter               {}", report.diameter);
    println!("radius                 {} (center: {})", report.radius, profile.center);
    println!("girth                  {}", report.girth);
    println!("triangulated           {}", report.triangulated);
    println!("hypertriangulated      {}", report.hypertriangulated);
    println!("complemented           {}", report.complemented);
    println!("uniquely complemented  {}", report.uniquely_complemented);
    println!("clique                 {}", report.clique);
    println!("chromatic              {}", report.chromatic);
    println!("dominating bound       {}", report.dominating_upper_bound);
    println!("dominating family      {}", dominating.canonical_set_description);
    Ok(0)
}

fn cmd_verify(cfg: RunConfig) -> Result<i32, CliError> {
    let specs: Vec<BlowupSpec> = if cfg.model_explicit {
        vec![cfg.blowup_spec()?]
    } else {
        crosscheck::default_matrix()
    };
    let opts = CrossCheckOptions { only: cfg.only.clone(), mutate: cfg.mutate };
    let report = crosscheck::run_matrix(&specs, &opts)?;
    print!("{}", report.render());
    println!(
        "{} checks across {} blow-ups: {}",
        report.total_checks(),
        specs.len(),
        if report.passed() { "PASS" } else { "FAIL" }
    );
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_export(cfg: RunConfig) -> Result<i32, CliError> {
    let spec = cfg.blowup_spec()?;
    let graph = generate(&spec)?;
    let base = cfg.out.clone().unwrap_or_else(|| PathBuf::from("blowup"));
    let dot_path = base.with_extension("dot");
    let json_path = base.with_extension("json");
    std::fs::write(&dot_path, graph.to_dot())
        .map_err(|e| CliError::input(format!("cannot write {}: {e}", dot_path.display())))?;
    std::fs::write(&json_path, graph.to_document().to_json())
        .map_err(|e| CliError::input(format!("cannot write {}: {e}", json_path.display())))?;
    println!(
        "wrote {} and {} ({} vertices, {} edges)",
        dot_path.display(),
        json_path.display(),
        graph.vertex_count(),
        graph.edges().len()
    );
    Ok(0)
}

fn read_psi(arg: &str, n: usize) -> Result<Vec<(usize, usize)>, CliError> {
    if arg == "identity" {
        return Ok(identity_psi(n));
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| CliError::input(format!("cannot read vertex map {arg}: {e}")))?;
    let pairs: Vec<(usize, usize)> = serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("malformed vertex map: {e}")))?;
    Ok(pairs)
}

fn cmd_iso(args: IsoArgs) -> Result<i32, CliError> {
    let primary_raw = raw_from_flags(&args.model);
    let secondary_raw = RawConfig {
        ground: args.ground2.clone(),
        ideal: args.ideal2.clone(),
        flavor: args.flavor2.clone(),
        window: args.window2.clone(),
        alphabet: args.alphabet2.clone(),
        ..Default::default()
    }
    .or(primary_raw.clone());

    let cfg_x = resolve_raw(primary_raw, &args.model.config)?;
    let cfg_y = resolve_raw(secondary_raw, &args.model.config)?;
    let gx = generate(&cfg_x.blowup_spec()?)?;
    let gy = generate(&cfg_y.blowup_spec()?)?;
    let psi = read_psi(&args.psi, gx.vertex_count())?;

    let desc = isorecon::reconstruct(&gx, &gy, &psi)?;
    let outcome = isorecon::verify_ring_iso(&desc, args.samples, cfg_x.seed);
    let doc = serde_json::json!({
        "phi": desc.pairs(),
        "verified": outcome.pass,
        "checks": outcome.checks,
        "counterexample": outcome.counterexample,
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("document serialises"));
    Ok(if outcome.pass { 0 } else { 1 })
}
