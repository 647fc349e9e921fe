//! CSV front end for the syndrome-based channel estimators.
//!
//! Four subcommands cover the standard experiment sweeps: `sweep-rho`
//! (crossover estimator moments vs the true crossover probability),
//! `sweep-dm` (MSE and Cramér-Rao bound over a grid of check counts and
//! degrees), `sweep-gamma` (clamped SNR estimator moments) and `simulate`
//! (one Monte-Carlo run). Output is plain CSV with `# key=value` metadata
//! lines; identical invocations produce byte-identical output.
//!
//! Exit codes: 0 success, 1 invalid configuration, 2 I/O failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};
use std::fmt::Write as _;
use std::path::PathBuf;
use synest::analysis::{bsc_report, estimator_moments_snr, PmfMode};
use synest::codes::{build_regular_ldpc, load_alist, ParityCheckMatrix};
use synest::montecarlo::{
    run_awgn_trials, run_bsc_trials, ChannelModel, CodeSource, SampleStats, SimConfig,
    SyndromeSource,
};
use synest::rng::derive_seed;
use synest::{CrossoverProb, QMapVariant, SnrClamp, SnrDb};

#[derive(Parser)]
#[command(
    name = "synest",
    version,
    about = "Syndrome-based channel estimation sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Crossover estimator moments over a list or range of rho, at fixed
    /// check degree and check count.
    SweepRho(SweepRhoArgs),
    /// MSE, Cramér-Rao bound and inverse Fisher information over a
    /// (m, d) grid at fixed rho.
    SweepDm(SweepDmArgs),
    /// Clamped SNR estimator moments over gamma, check-count and degree
    /// lists.
    SweepGamma(SweepGammaArgs),
    /// One Monte-Carlo run, reported as a single statistics row.
    Simulate(SimulateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Poisson,
    Gaussian,
    Auto,
}

impl ModeArg {
    fn to_mode(self) -> PmfMode {
        match self {
            ModeArg::Exact => PmfMode::Exact,
            ModeArg::Poisson => PmfMode::Poisson,
            ModeArg::Gaussian => PmfMode::Gaussian,
            ModeArg::Auto => PmfMode::Auto,
        }
    }

    fn label(self) -> &'static str {
        match self {
            ModeArg::Exact => "exact",
            ModeArg::Poisson => "poisson",
            ModeArg::Gaussian => "gaussian",
            ModeArg::Auto => "auto",
        }
    }
}

fn mode_label(mode: PmfMode) -> &'static str {
    match mode {
        PmfMode::Exact => "exact",
        PmfMode::Poisson => "poisson",
        PmfMode::Gaussian => "gaussian",
        PmfMode::Auto => "auto",
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QMapArg {
    Paper,
    Physical,
}

impl QMapArg {
    fn to_variant(self) -> QMapVariant {
        match self {
            QMapArg::Paper => QMapVariant::Paper,
            QMapArg::Physical => QMapVariant::Physical,
        }
    }

    fn label(self) -> &'static str {
        match self {
            QMapArg::Paper => "paper",
            QMapArg::Physical => "physical",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SourceArg {
    Code,
    Iid,
}

impl SourceArg {
    fn to_source(self) -> SyndromeSource {
        match self {
            SourceArg::Code => SyndromeSource::Code,
            SourceArg::Iid => SyndromeSource::Iid,
        }
    }

    fn label(self) -> &'static str {
        match self {
            SourceArg::Code => "code",
            SourceArg::Iid => "iid",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChannelArg {
    Bsc,
    Biawgn,
}

#[derive(Args)]
struct SweepRhoArgs {
    /// Check node degree.
    #[arg(long)]
    d: usize,
    /// Number of check nodes.
    #[arg(long)]
    m: usize,
    /// Explicit crossover probability; repeat for a list.
    #[arg(long, conflicts_with = "rho_range")]
    rho: Vec<f64>,
    /// Crossover range start:stop:step (inclusive).
    #[arg(long, value_name = "START:STOP:STEP")]
    rho_range: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
    /// Append Monte-Carlo columns per row.
    #[arg(long)]
    simulate: bool,
    #[command(flatten)]
    sim: SimArgs,
    /// Output path; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SimArgs {
    /// Trials per simulated point.
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    /// Master seed for the trial streams.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = SourceArg::Code)]
    syndrome_source: SourceArg,
    /// Code length; defaults to m*d/dv.
    #[arg(long)]
    n: Option<usize>,
    /// Variable node degree of the constructed code.
    #[arg(long, default_value_t = 3)]
    dv: usize,
    /// Seed of the code construction (independent of trial seeds).
    #[arg(long, default_value_t = 1)]
    code_seed: u64,
}

#[derive(Args)]
struct SweepDmArgs {
    /// Crossover probability.
    #[arg(long)]
    rho: f64,
    /// Check node degree; repeat for a list.
    #[arg(long, required = true)]
    d: Vec<usize>,
    /// Number of check nodes; repeat for a list.
    #[arg(long, required = true)]
    m: Vec<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SweepGammaArgs {
    /// Check node degree; repeat for a list.
    #[arg(long, required = true)]
    d: Vec<usize>,
    /// Number of check nodes; repeat for a list.
    #[arg(long, required = true)]
    m: Vec<usize>,
    /// Explicit SNR in dB; repeat for a list.
    #[arg(long, conflicts_with = "gamma_range", allow_negative_numbers = true)]
    gamma: Vec<f64>,
    /// SNR range start:stop:step in dB (inclusive).
    #[arg(long, value_name = "START:STOP:STEP", allow_hyphen_values = true)]
    gamma_range: Option<String>,
    #[arg(long, default_value_t = -10.0, allow_negative_numbers = true)]
    gamma_min: f64,
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    gamma_max: f64,
    #[arg(long, value_enum, default_value_t = QMapArg::Paper)]
    qmap: QMapArg,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
    /// Append Monte-Carlo columns per row.
    #[arg(long)]
    simulate: bool,
    #[command(flatten)]
    sim: SimArgs,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long, value_enum)]
    channel: ChannelArg,
    /// BSC crossover probability.
    #[arg(long)]
    rho: Option<f64>,
    /// BI-AWGN SNR in dB.
    #[arg(long, allow_negative_numbers = true)]
    gamma: Option<f64>,
    #[arg(long, default_value_t = -10.0, allow_negative_numbers = true)]
    gamma_min: f64,
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    gamma_max: f64,
    #[arg(long, value_enum, default_value_t = QMapArg::Paper)]
    qmap: QMapArg,
    /// Parity-check matrix in alist format.
    #[arg(long)]
    alist: Option<PathBuf>,
    /// Code length for on-the-fly construction.
    #[arg(long)]
    n: Option<usize>,
    /// Variable node degree for on-the-fly construction.
    #[arg(long, default_value_t = 3)]
    dv: usize,
    /// Check node degree.
    #[arg(long)]
    d: Option<usize>,
    /// Number of check nodes (with --syndrome-source iid).
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 1)]
    code_seed: u64,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = SourceArg::Code)]
    syndrome_source: SourceArg,
    #[arg(long)]
    output: Option<PathBuf>,
}

enum CliError {
    Config(String),
    Io(String),
}

impl From<synest::Error> for CliError {
    fn from(e: synest::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
        }
    };
    let (document, output) = match execute(cli.command) {
        Ok(pair) => pair,
        Err(CliError::Config(msg)) => {
            eprintln!("error: {msg}");
            return 1;
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    match write_output(&document, output.as_deref()) {
        Ok(()) => 0,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn execute(command: Command) -> Result<(String, Option<PathBuf>), CliError> {
    match command {
        Command::SweepRho(args) => {
            let out = args.output.clone();
            cmd_sweep_rho(args).map(|doc| (doc, out))
        }
        Command::SweepDm(args) => {
            let out = args.output.clone();
            cmd_sweep_dm(args).map(|doc| (doc, out))
        }
        Command::SweepGamma(args) => {
            let out = args.output.clone();
            cmd_sweep_gamma(args).map(|doc| (doc, out))
        }
        Command::Simulate(args) => {
            let out = args.output.clone();
            cmd_simulate(args).map(|doc| (doc, out))
        }
    }
}

fn write_output(document: &str, path: Option<&std::path::Path>) -> Result<(), String> {
    match path {
        Some(p) => {
            std::fs::write(p, document).map_err(|e| format!("cannot write {}: {e}", p.display()))
        }
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(document.as_bytes())
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
    }
}

// ---------------------------------------------------------------------------
// Value formatting
// ---------------------------------------------------------------------------

/// Full-precision float cell: 17 significant digits, '.' decimal point.
fn cell(x: f64) -> String {
    format!("{:.16e}", x)
}

/// Optional cell; divergent quantities stay empty.
fn opt_cell(x: Option<f64>) -> String {
    match x {
        Some(v) if v.is_finite() => cell(v),
        _ => String::new(),
    }
}

fn parse_range(spec: &str, what: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Config(format!(
            "{what} range must be START:STOP:STEP, got '{spec}'"
        )));
    }
    let nums: Result<Vec<f64>, _> = parts.iter().map(|p| p.parse::<f64>()).collect();
    let nums = nums.map_err(|e| CliError::Config(format!("bad {what} range '{spec}': {e}")))?;
    let (start, stop, step) = (nums[0], nums[1], nums[2]);
    if step <= 0.0 || !step.is_finite() {
        return Err(CliError::Config(format!(
            "{what} range step must be positive, got {step}"
        )));
    }
    if stop < start {
        return Err(CliError::Config(format!(
            "{what} range stop {stop} below start {start}"
        )));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize;
    Ok((0..=count).map(|i| start + i as f64 * step).collect())
}

fn crossover(v: f64) -> Result<CrossoverProb, CliError> {
    CrossoverProb::new(v).map_err(Into::into)
}

fn snr(v: f64) -> Result<SnrDb, CliError> {
    SnrDb::new(v).map_err(Into::into)
}

// ---------------------------------------------------------------------------
// Simulation plumbing shared by the sweep commands
// ---------------------------------------------------------------------------

/// Code description and hash lines for the metadata header.
fn describe_code(code: &CodeSource) -> Result<(String, Option<String>), CliError> {
    match code {
        CodeSource::Regular { n, dv, d, seed } => {
            let h = build_regular_ldpc(*n, *dv, *d, *seed)?;
            Ok((
                format!("regular(n={n},dv={dv},d={d},seed={seed})"),
                Some(alist_hash(&h)),
            ))
        }
        CodeSource::Matrix(h) => Ok((
            format!("matrix(m={},n={})", h.num_checks(), h.num_variables()),
            Some(alist_hash(h)),
        )),
        CodeSource::Profile { m, d } => Ok((format!("profile(m={m},d={d})"), None)),
    }
}

fn alist_hash(h: &ParityCheckMatrix) -> String {
    let digest = Sha256::digest(h.to_alist().as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

/// Builds the code source for a sweep row with `m` checks of degree `d`.
fn sweep_code_source(sim: &SimArgs, m: usize, d: usize) -> Result<CodeSource, CliError> {
    match sim.syndrome_source {
        SourceArg::Iid => Ok(CodeSource::Profile { m, d }),
        SourceArg::Code => {
            if sim.dv == 0 {
                return Err(CliError::Config("--dv must be at least 1".into()));
            }
            let n = match sim.n {
                Some(n) => n,
                None => {
                    if !(m * d).is_multiple_of(sim.dv) {
                        return Err(CliError::Config(format!(
                            "m*d = {} is not divisible by dv = {}; pass --n explicitly",
                            m * d,
                            sim.dv
                        )));
                    }
                    m * d / sim.dv
                }
            };
            if n * sim.dv != m * d {
                return Err(CliError::Config(format!(
                    "code (n={n}, dv={}) provides {} edges, but m={m} checks of degree {d} need {}",
                    sim.dv,
                    n * sim.dv,
                    m * d
                )));
            }
            Ok(CodeSource::Regular {
                n,
                dv: sim.dv,
                d,
                seed: sim.code_seed,
            })
        }
    }
}

fn sim_metadata(meta: &mut String, sim: &SimArgs, code: &CodeSource) -> Result<(), CliError> {
    let (descr, hash) = describe_code(code)?;
    let _ = writeln!(meta, "# simulate=true");
    let _ = writeln!(meta, "# syndrome_source={}", sim.syndrome_source.label());
    let _ = writeln!(meta, "# trials={}", sim.trials);
    let _ = writeln!(meta, "# seed={}", sim.seed);
    let _ = writeln!(meta, "# code={descr}");
    if let Some(hash) = hash {
        let _ = writeln!(meta, "# code_hash={hash}");
    }
    Ok(())
}

fn sim_columns(stats: &SampleStats) -> String {
    format!(
        ",{},{},{},{},{}",
        cell(stats.mean),
        cell(stats.std),
        cell(stats.mse),
        stats.trials,
        stats.seed
    )
}

// ---------------------------------------------------------------------------
// sweep-rho
// ---------------------------------------------------------------------------

fn cmd_sweep_rho(args: SweepRhoArgs) -> Result<String, CliError> {
    if args.d == 0 || args.m == 0 {
        return Err(CliError::Config("--d and --m must be at least 1".into()));
    }
    let rhos: Vec<f64> = match &args.rho_range {
        Some(spec) => parse_range(spec, "rho")?,
        None if !args.rho.is_empty() => args.rho.clone(),
        None => return Err(CliError::Config("pass --rho values or --rho-range".into())),
    };
    for &r in &rhos {
        crossover(r)?;
    }

    let mut doc = String::new();
    let _ = writeln!(doc, "# command=sweep-rho");
    let _ = writeln!(doc, "# d={}", args.d);
    let _ = writeln!(doc, "# m={}", args.m);
    let _ = writeln!(doc, "# mode={}", args.mode.label());
    let _ = writeln!(doc, "# normalization=true_param");
    let code = if args.simulate {
        let code = sweep_code_source(&args.sim, args.m, args.d)?;
        sim_metadata(&mut doc, &args.sim, &code)?;
        Some(code)
    } else {
        None
    };

    doc.push_str("rho,mean,bias,mse,crb_bound,fisher,norm_mean,norm_std,mode_used");
    if args.simulate {
        doc.push_str(",sim_mean,sim_std,sim_mse,trials,seed");
    }
    doc.push('\n');

    for (idx, &r) in rhos.iter().enumerate() {
        let rho = crossover(r)?;
        let report = bsc_report(args.d, rho, args.m, args.mode.to_mode());
        let variance = (report.mse - report.bias * report.bias).max(0.0);
        let (norm_mean, norm_std) = if r > 0.0 {
            (Some(report.mean / r), Some(variance.sqrt() / r))
        } else {
            (None, None)
        };
        let _ = write!(
            doc,
            "{},{},{},{},{},{},{},{},{}",
            cell(r),
            cell(report.mean),
            cell(report.bias),
            cell(report.mse),
            opt_cell(report.crb_mse_bound),
            opt_cell(report.fisher),
            opt_cell(norm_mean),
            opt_cell(norm_std),
            mode_label(report.mode)
        );
        if let Some(code) = &code {
            let stats = run_bsc_trials(&SimConfig {
                code: code.clone(),
                channel: ChannelModel::Bsc { rho },
                trials: args.sim.trials,
                seed: derive_seed(args.sim.seed, idx as u64),
                syndrome_source: args.sim.syndrome_source.to_source(),
            })?;
            doc.push_str(&sim_columns(&stats));
        }
        doc.push('\n');
    }
    Ok(doc)
}

// ---------------------------------------------------------------------------
// sweep-dm
// ---------------------------------------------------------------------------

fn cmd_sweep_dm(args: SweepDmArgs) -> Result<String, CliError> {
    let rho = crossover(args.rho)?;
    if args.d.contains(&0) || args.m.contains(&0) {
        return Err(CliError::Config("--d and --m must be at least 1".into()));
    }

    let mut doc = String::new();
    let _ = writeln!(doc, "# command=sweep-dm");
    let _ = writeln!(doc, "# rho={}", cell(args.rho));
    let _ = writeln!(doc, "# mode={}", args.mode.label());
    doc.push_str("m,d,mse,crb_bound,fisher_inverse\n");

    for &d in &args.d {
        for &m in &args.m {
            let report = bsc_report(d, rho, m, args.mode.to_mode());
            let _ = writeln!(
                doc,
                "{m},{d},{},{},{}",
                cell(report.mse),
                opt_cell(report.crb_mse_bound),
                opt_cell(report.fisher.map(|i| 1.0 / i))
            );
        }
    }
    Ok(doc)
}

// ---------------------------------------------------------------------------
// sweep-gamma
// ---------------------------------------------------------------------------

fn cmd_sweep_gamma(args: SweepGammaArgs) -> Result<String, CliError> {
    if args.d.contains(&0) || args.m.contains(&0) {
        return Err(CliError::Config("--d and --m must be at least 1".into()));
    }
    let gammas: Vec<f64> = match &args.gamma_range {
        Some(spec) => parse_range(spec, "gamma")?,
        None if !args.gamma.is_empty() => args.gamma.clone(),
        None => {
            return Err(CliError::Config(
                "pass --gamma values or --gamma-range".into(),
            ))
        }
    };
    let clamp = SnrClamp::new(snr(args.gamma_min)?, snr(args.gamma_max)?)?;
    let variant = args.qmap.to_variant();

    let mut doc = String::new();
    let _ = writeln!(doc, "# command=sweep-gamma");
    let _ = writeln!(doc, "# qmap={}", args.qmap.label());
    let _ = writeln!(doc, "# gamma_min={}", cell(args.gamma_min));
    let _ = writeln!(doc, "# gamma_max={}", cell(args.gamma_max));
    let _ = writeln!(doc, "# mode={}", args.mode.label());
    if args.simulate {
        // Describe the code of the first grid point; per-row codes follow
        // the same construction with the row's (m, d).
        let code = sweep_code_source(&args.sim, args.m[0], args.d[0])?;
        sim_metadata(&mut doc, &args.sim, &code)?;
    }

    doc.push_str("gamma,m,d,mean,bias,mse,std");
    if args.simulate {
        doc.push_str(",sim_mean,sim_std,sim_mse,trials,seed");
    }
    doc.push('\n');

    let mut idx = 0u64;
    for &g in &gammas {
        let gamma = snr(g)?;
        for &m in &args.m {
            for &d in &args.d {
                let report =
                    estimator_moments_snr(d, gamma, m, variant, clamp, args.mode.to_mode());
                let std = (report.mse - report.bias * report.bias).max(0.0).sqrt();
                let _ = write!(
                    doc,
                    "{},{m},{d},{},{},{},{}",
                    cell(g),
                    cell(report.mean),
                    cell(report.bias),
                    cell(report.mse),
                    cell(std)
                );
                if args.simulate {
                    let code = sweep_code_source(&args.sim, m, d)?;
                    let stats = run_awgn_trials(&SimConfig {
                        code,
                        channel: ChannelModel::BiAwgn {
                            gamma,
                            variant,
                            clamp,
                        },
                        trials: args.sim.trials,
                        seed: derive_seed(args.sim.seed, idx),
                        syndrome_source: args.sim.syndrome_source.to_source(),
                    })?;
                    doc.push_str(&sim_columns(&stats));
                }
                doc.push('\n');
                idx += 1;
            }
        }
    }
    Ok(doc)
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

fn cmd_simulate(args: SimulateArgs) -> Result<String, CliError> {
    let code = simulate_code_source(&args)?;
    let (descr, hash) = describe_code(&code)?;

    let mut doc = String::new();
    let _ = writeln!(doc, "# command=simulate");

    let (channel, truth_line) = match args.channel {
        ChannelArg::Bsc => {
            let r = args
                .rho
                .ok_or_else(|| CliError::Config("--channel bsc requires --rho".into()))?;
            (
                ChannelModel::Bsc { rho: crossover(r)? },
                format!("# channel=bsc\n# rho={}\n", cell(r)),
            )
        }
        ChannelArg::Biawgn => {
            let g = args
                .gamma
                .ok_or_else(|| CliError::Config("--channel biawgn requires --gamma".into()))?;
            let clamp = SnrClamp::new(snr(args.gamma_min)?, snr(args.gamma_max)?)?;
            (
                ChannelModel::BiAwgn {
                    gamma: snr(g)?,
                    variant: args.qmap.to_variant(),
                    clamp,
                },
                format!(
                    "# channel=biawgn\n# gamma={}\n# qmap={}\n# gamma_min={}\n# gamma_max={}\n",
                    cell(g),
                    args.qmap.label(),
                    cell(args.gamma_min),
                    cell(args.gamma_max)
                ),
            )
        }
    };
    doc.push_str(&truth_line);
    let _ = writeln!(doc, "# syndrome_source={}", args.syndrome_source.label());
    let _ = writeln!(doc, "# code={descr}");
    if let Some(hash) = hash {
        let _ = writeln!(doc, "# code_hash={hash}");
    }
    let _ = writeln!(doc, "# trials={}", args.trials);
    let _ = writeln!(doc, "# seed={}", args.seed);

    let config = SimConfig {
        code,
        channel,
        trials: args.trials,
        seed: args.seed,
        syndrome_source: args.syndrome_source.to_source(),
    };
    let stats = match args.channel {
        ChannelArg::Bsc => run_bsc_trials(&config)?,
        ChannelArg::Biawgn => run_awgn_trials(&config)?,
    };

    doc.push_str("trials,mean,std,mse,min,max,seed\n");
    let _ = writeln!(
        doc,
        "{},{},{},{},{},{},{}",
        stats.trials,
        cell(stats.mean),
        cell(stats.std),
        cell(stats.mse),
        cell(stats.min),
        cell(stats.max),
        stats.seed
    );
    Ok(doc)
}

fn simulate_code_source(args: &SimulateArgs) -> Result<CodeSource, CliError> {
    if let Some(path) = &args.alist {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        let h = load_alist(&text)?;
        if let Some(n) = args.n {
            if n != h.num_variables() {
                return Err(CliError::Config(format!(
                    "alist matrix has n={} variables, but --n is {n}",
                    h.num_variables()
                )));
            }
        }
        if let Some(m) = args.m {
            if m != h.num_checks() {
                return Err(CliError::Config(format!(
                    "alist matrix has m={} checks, but --m is {m}",
                    h.num_checks()
                )));
            }
        }
        if let Some(d) = args.d {
            if h.degree_profile().regular_degree() != Some(d) {
                return Err(CliError::Config(format!(
                    "alist matrix is not check-regular with degree {d}"
                )));
            }
        }
        return Ok(CodeSource::Matrix(h));
    }

    let d = args
        .d
        .ok_or_else(|| CliError::Config("pass --d (or --alist)".into()))?;
    if let Some(n) = args.n {
        if args.dv == 0 || d == 0 {
            return Err(CliError::Config("--dv and --d must be at least 1".into()));
        }
        if let (Some(m), true) = (args.m, (n * args.dv).is_multiple_of(d)) {
            if m != n * args.dv / d {
                return Err(CliError::Config(format!(
                    "code (n={n}, dv={}, d={d}) has {} check nodes, but --m is {m}",
                    args.dv,
                    n * args.dv / d
                )));
            }
        }
        return Ok(CodeSource::Regular {
            n,
            dv: args.dv,
            d,
            seed: args.code_seed,
        });
    }
    match (args.m, args.syndrome_source) {
        (Some(m), SourceArg::Iid) => Ok(CodeSource::Profile { m, d }),
        (Some(m), SourceArg::Code) => {
            if !(m * d).is_multiple_of(args.dv) {
                return Err(CliError::Config(format!(
                    "m*d = {} is not divisible by dv = {}; pass --n explicitly",
                    m * d,
                    args.dv
                )));
            }
            Ok(CodeSource::Regular {
                n: m * d / args.dv,
                dv: args.dv,
                d,
                seed: args.code_seed,
            })
        }
        (None, _) => Err(CliError::Config(
            "pass --n (code construction), --m (dimensions), or --alist".into(),
        )),
    }
}
