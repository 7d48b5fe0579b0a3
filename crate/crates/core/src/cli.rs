//! Command-line front end. The `qldpc-window` binary parses [`Cli`] and
//! hands it to [`run`]; everything else lives here so it can be tested.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bposd::{BpVariant, DecoderConfig, OsdMode};
use crate::codes::{
    base_matrix, distance_upper_bound, generate_regular_ldpc, hgp, load_code, store_code, CodeSource, CssCode,
    RegularLdpcOptions,
};
use crate::error::{Error, Result};
use crate::gf2::alist::write_alist;
use crate::gf2::BinaryVector;
use crate::lifetime::{decoding_volume, run_trials, LifetimeConfig, LifetimeEstimate, DEFAULT_IDEAL_P};
use crate::noise::{sample_round, synthesize_syndrome, NoiseParams, StreamKey};
use crate::window::{SingleShotDecoder, WindowConfig, WindowDecoder};

/// Version of the result schema written to CSV, JSON lines and sidecars.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "qldpc-window", version, about = "Sliding-window BP-OSD decoding of quantum LDPC codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a hypergraph-product code (or export a fixture) as alist files.
    GenHgp(GenHgpArgs),
    /// Print parameters of a code.
    CodeInfo(CodeInfoArgs),
    /// Run one window decode and print every intermediate step.
    DecodeOnce(DecodeOnceArgs),
    /// Run a lifetime sweep described by a config file.
    Lifetime(LifetimeArgs),
    /// Tabulate decoding volumes W(n-k)/2.
    Volume(VolumeArgs),
}

#[derive(Args, Debug)]
pub struct GenHgpArgs {
    /// Export this fixture instead of generating a random base code.
    #[arg(long, conflicts_with_all = ["m", "n", "r", "s", "seed"])]
    pub fixture: Option<String>,
    /// Base-matrix rows.
    #[arg(long, required_unless_present = "fixture")]
    pub m: Option<usize>,
    /// Base-matrix columns.
    #[arg(long, required_unless_present = "fixture")]
    pub n: Option<usize>,
    /// Column weight.
    #[arg(long, required_unless_present = "fixture")]
    pub r: Option<usize>,
    /// Row weight.
    #[arg(long, required_unless_present = "fixture")]
    pub s: Option<usize>,
    #[arg(long, required_unless_present = "fixture")]
    pub seed: Option<u64>,
    /// Reject base matrices whose Tanner graph girth is below this.
    #[arg(long)]
    pub min_girth: Option<usize>,
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
    /// File stem; defaults to the code name.
    #[arg(long)]
    pub stem: Option<String>,
    /// Random information sets tried for the distance bound.
    #[arg(long, default_value_t = 20)]
    pub distance_trials: usize,
}

#[derive(Args, Debug)]
pub struct CodeInfoArgs {
    /// Fixture name, `alist:HX,HZ`, `base:PATH` or `gen:m,n,r,s,seed`.
    #[arg(long)]
    pub code: String,
    #[arg(long, default_value_t = 20)]
    pub distance_trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct DecodeOnceArgs {
    #[arg(long)]
    pub code: String,
    /// Window as `WxF`.
    #[arg(long, default_value = "3x1")]
    pub window: String,
    /// Error rate used for sampling and as the decoder prior.
    #[arg(long, default_value_t = 0.007)]
    pub p: f64,
    /// Seed of the sampled instance.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Instead of sampling, flip these data qubits in round 1 and nothing else.
    #[arg(long, value_delimiter = ',', conflicts_with = "syndromes")]
    pub inject: Option<Vec<usize>>,
    /// Read the W raw syndromes from a file, one bit string per line.
    #[arg(long)]
    pub syndromes: Option<PathBuf>,
    /// Decode with the standalone single-shot decoder (window must be 1x1).
    #[arg(long)]
    pub single_shot: bool,
    /// Decode on H_X instead of H_Z.
    #[arg(long, value_enum, default_value_t = Side::X)]
    pub side: Side,
}

#[derive(Args, Debug)]
pub struct LifetimeArgs {
    /// Sweep description (TOML key = value pairs).
    #[arg(long)]
    pub config: PathBuf,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub max_cycles: Option<usize>,
    /// Worker threads; 0 uses every core.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Output file; `-` for standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Also write one CSV row per trial to this file.
    #[arg(long)]
    pub trial_log: Option<PathBuf>,
    /// Suppress progress messages.
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Args, Debug)]
pub struct VolumeArgs {
    /// Code sources; repeat for several codes.
    #[arg(long = "code", required = true)]
    pub codes: Vec<String>,
    /// Window widths, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub width: Vec<usize>,
}

/// Which error type is simulated: `x` decodes X errors on `H_Z`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    #[default]
    X,
    Z,
}

impl Side {
    pub fn orient(self, code: CssCode) -> CssCode {
        match self {
            Side::X => code,
            Side::Z => code.swapped(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BpVariantName {
    #[default]
    ProductSum,
    MinSum,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OsdName {
    #[default]
    Cs,
    Osd0,
    Off,
}

fn default_max_cycles() -> usize {
    100_000
}
fn default_min_sum_scale() -> f64 {
    1.0
}
fn default_lambda() -> usize {
    40
}
fn default_clamp() -> f64 {
    DecoderConfig::default().message_clamp
}
fn default_ideal_p() -> f64 {
    DEFAULT_IDEAL_P
}
fn default_copies() -> usize {
    1
}

/// A lifetime sweep: every combination of `p` and `windows` becomes one record.
///
/// Read from a TOML file of top-level `key = value` pairs. `code`, `p`,
/// `windows`, `trials` and `seed` are required.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub code: String,
    pub p: Vec<f64>,
    /// Windows as `WxF` strings.
    pub windows: Vec<String>,
    pub trials: usize,
    pub seed: u64,
    #[serde(default = "default_max_cycles")]
    pub max_cycles: usize,
    #[serde(default)]
    pub side: Side,
    #[serde(default = "default_copies")]
    pub copies: usize,
    #[serde(default)]
    pub bp_variant: BpVariantName,
    #[serde(default = "default_min_sum_scale")]
    pub min_sum_scale: f64,
    #[serde(default)]
    pub osd: OsdName,
    #[serde(default = "default_lambda")]
    pub lambda: usize,
    /// BP iteration cap; absent means the number of decoding variables.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_iterations: Option<usize>,
    #[serde(default = "default_clamp")]
    pub message_clamp: f64,
    #[serde(default = "default_ideal_p")]
    pub ideal_p: f64,
    /// Settings below do not change results and are left out of the hash.
    #[serde(default, skip_serializing)]
    pub workers: usize,
    #[serde(default, skip_serializing)]
    pub output: Option<PathBuf>,
    #[serde(default, skip_serializing)]
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let config: RunConfig = toml::from_str(text).map_err(|e| {
            let msg = e.message().to_string();
            // Missing and unknown keys are named in the message; anything else
            // is located by the span of the offending value.
            let named = (msg.starts_with("missing field") || msg.starts_with("unknown field"))
                .then(|| msg.split('`').nth(1).map(str::to_string))
                .flatten();
            let field = named
                .or_else(|| e.span().map(|s| key_at(text, s.start)))
                .unwrap_or_else(|| "config".into());
            Error::config(field, msg)
        })?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::File {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<()> {
        self.code.parse::<CodeSource>()?;
        if self.p.is_empty() {
            return Err(Error::config("p", "needs at least one error rate"));
        }
        if let Some(p) = self.p.iter().find(|&&p| !(p > 0.0 && p < 1.0)) {
            return Err(Error::config("p", format!("{p} is outside (0, 1)")));
        }
        self.window_configs()?;
        if self.trials == 0 {
            return Err(Error::config("trials", "must be at least 1"));
        }
        self.lifetime_config(WindowConfig::single_shot()).validate()
    }

    pub fn window_configs(&self) -> Result<Vec<WindowConfig>> {
        if self.windows.is_empty() {
            return Err(Error::config("windows", "needs at least one WxF entry"));
        }
        self.windows
            .iter()
            .map(|w| w.parse().map_err(|e: Error| Error::config("windows", e.to_string())))
            .collect()
    }

    pub fn decoder_config(&self) -> DecoderConfig {
        DecoderConfig {
            max_iterations: self.max_iterations,
            bp_variant: match self.bp_variant {
                BpVariantName::ProductSum => BpVariant::ProductSum,
                BpVariantName::MinSum => BpVariant::MinSum,
            },
            min_sum_scale: self.min_sum_scale,
            osd_mode: match self.osd {
                OsdName::Cs => OsdMode::CombinationSweep,
                OsdName::Osd0 => OsdMode::Osd0,
                OsdName::Off => OsdMode::Off,
            },
            lambda: self.lambda,
            message_clamp: self.message_clamp,
        }
    }

    pub fn lifetime_config(&self, window: WindowConfig) -> LifetimeConfig {
        LifetimeConfig {
            window,
            decoder: self.decoder_config(),
            ideal_p: self.ideal_p,
            max_cycles: self.max_cycles,
            copies: self.copies,
        }
    }

    /// Settings that determine results, as TOML. Loading this text back
    /// reproduces the same records.
    pub fn canonical(&self) -> String {
        let mut text = format!("# schema {SCHEMA_VERSION}\n");
        text.push_str(&toml::to_string(self).expect("config serializes"));
        text
    }

    /// First 16 hex digits of the SHA-256 of [`RunConfig::canonical`].
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(self.canonical().as_bytes());
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Name of the key on the line containing byte `offset`.
fn key_at(text: &str, offset: usize) -> String {
    let start = text[..offset.min(text.len())].rfind('\n').map_or(0, |i| i + 1);
    text[start..]
        .split(['=', '\n'])
        .next()
        .map(|k| k.trim().to_string())
        .filter(|k| !k.is_empty())
        .unwrap_or_else(|| "config".into())
}

/// One data row of a lifetime sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub code: String,
    pub n: usize,
    pub k: usize,
    pub p: f64,
    #[serde(rename = "W")]
    pub w: usize,
    #[serde(rename = "F")]
    pub f: usize,
    pub trials: usize,
    pub censored: usize,
    #[serde(rename = "mean_T")]
    pub mean_t: Option<f64>,
    pub std_err: Option<f64>,
    pub volume: Option<usize>,
    pub seed: u64,
    pub config_hash: String,
    /// Reported on standard error only, so data rows stay reproducible.
    #[serde(skip)]
    pub wall_time_seconds: f64,
}

impl ResultRecord {
    pub fn from_estimate(source: &str, estimate: &LifetimeEstimate, config_hash: &str, wall_time_seconds: f64) -> Self {
        let window = estimate.config.window;
        Self {
            code: source.to_string(),
            n: estimate.n,
            k: estimate.k,
            p: estimate.p,
            w: window.width(),
            f: window.offset(),
            trials: estimate.trials,
            censored: estimate.censored,
            mean_t: estimate.mean_t,
            std_err: estimate.std_error,
            volume: decoding_volume(window.width(), estimate.n, estimate.k).ok(),
            seed: estimate.master_seed,
            config_hash: config_hash.to_string(),
            wall_time_seconds,
        }
    }
}

/// Outcome of one trial of a sweep. `T` is empty for censored trials.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub code: String,
    pub p: f64,
    #[serde(rename = "W")]
    pub w: usize,
    #[serde(rename = "F")]
    pub f: usize,
    pub copies: usize,
    pub seed: u64,
    pub trial: u64,
    #[serde(rename = "T")]
    pub t: Option<usize>,
    pub rounds: usize,
}

/// Everything a sweep produced.
#[derive(Clone, Debug)]
pub struct Sweep {
    pub code: CssCode,
    pub records: Vec<ResultRecord>,
    pub trials: Vec<TrialRecord>,
}

/// Runs every grid point of `config` in order (`p` outer, windows inner).
pub fn run_sweep(config: &RunConfig, mut progress: impl FnMut(&str)) -> Result<Sweep> {
    config.validate()?;
    let source: CodeSource = config.code.parse()?;
    let code = config.side.orient(load_code(&source)?);
    let hash = config.hash();
    let mut records = Vec::new();
    let mut trials = Vec::new();
    for &p in &config.p {
        for window in config.window_configs()? {
            let lifetime = config.lifetime_config(window);
            let start = Instant::now();
            let outcomes = run_trials(&code, p, lifetime, config.trials, config.seed, config.workers, None)?;
            let estimate = LifetimeEstimate::from_outcomes(&code, p, lifetime, config.seed, &outcomes);
            let record = ResultRecord::from_estimate(&config.code, &estimate, &hash, start.elapsed().as_secs_f64());
            progress(&describe(&estimate, record.wall_time_seconds));
            records.push(record);
            trials.extend(outcomes.iter().zip(0u64..).map(|(o, trial)| TrialRecord {
                code: config.code.clone(),
                p,
                w: window.width(),
                f: window.offset(),
                copies: lifetime.copies,
                seed: config.seed,
                trial,
                t: o.lifetime(),
                rounds: o.rounds_simulated,
            }));
        }
    }
    Ok(Sweep { code, records, trials })
}

pub fn write_trial_records(trials: &[TrialRecord], out: &mut dyn Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for t in trials {
        w.serialize(t).map_err(|e| Error::Io(std::io::Error::other(e)))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_trial_records(path: &Path) -> Result<Vec<TrialRecord>> {
    let file = std::fs::File::open(path).map_err(|source| Error::File {
        path: path.to_path_buf(),
        source,
    })?;
    csv::Reader::from_reader(file)
        .deserialize()
        .enumerate()
        .map(|(i, row)| row.map_err(|e| Error::Parse { line: i + 2, msg: e.to_string() }))
        .collect()
}

fn describe(e: &LifetimeEstimate, seconds: f64) -> String {
    let mut s = format!("{} p={} W={} F={}: ", e.code, e.p, e.config.window.width(), e.config.window.offset());
    match (e.mean_t, e.std_error) {
        (Some(m), Some(se)) => s.push_str(&format!("<T> = {m:.2} ± {se:.2}")),
        _ => s.push_str("<T> undefined"),
    }
    if e.censored > 0 {
        s.push_str(&format!(
            ", {} of {} censored (mean with censored at cap >= {:.2})",
            e.censored,
            e.trials,
            e.lower_bound.unwrap_or(0.0)
        ));
    }
    if e.single_observation {
        s.push_str(", warning: single uncensored trial, std_err set to 0");
    }
    s.push_str(&format!(" [{seconds:.1}s]"));
    s
}

pub fn write_records(records: &[ResultRecord], format: OutputFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(r).map_err(|e| Error::Io(std::io::Error::other(e)))?;
            }
            if records.is_empty() {
                w.write_record(CSV_HEADER).map_err(|e| Error::Io(std::io::Error::other(e)))?;
            }
            w.flush()?;
        }
        OutputFormat::Jsonl => {
            for r in records {
                serde_json::to_writer(&mut *out, r).map_err(|e| Error::Io(std::io::Error::other(e)))?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

pub const CSV_HEADER: [&str; 13] = [
    "code", "n", "k", "p", "W", "F", "trials", "censored", "mean_T", "std_err", "volume", "seed", "config_hash",
];

pub fn cmd_lifetime(args: &LifetimeArgs, out: &mut dyn Write) -> Result<()> {
    let mut config = RunConfig::load(&args.config)?;
    if let Some(t) = args.trials {
        config.trials = t;
    }
    if let Some(s) = args.seed {
        config.seed = s;
    }
    if let Some(c) = args.max_cycles {
        config.max_cycles = c;
    }
    if let Some(w) = args.workers {
        config.workers = w;
    }
    if let Some(o) = &args.output {
        config.output = Some(o.clone());
    }
    if let Some(f) = args.format {
        config.format = f;
    }
    config.validate()?;
    let quiet = args.quiet;
    let Sweep { records, trials, .. } = run_sweep(&config, |line| {
        if !quiet {
            eprintln!("{line}");
        }
    })?;
    if let Some(path) = &args.trial_log {
        let file = std::fs::File::create(path).map_err(|source| Error::File {
            path: path.to_path_buf(),
            source,
        })?;
        let mut writer = std::io::BufWriter::new(file);
        write_trial_records(&trials, &mut writer)?;
        writer.flush()?;
    }
    match config.output.as_deref() {
        None => write_records(&records, config.format, out),
        Some(p) if p == Path::new("-") => write_records(&records, config.format, out),
        Some(path) => {
            let file = std::fs::File::create(path).map_err(|source| Error::File {
                path: path.to_path_buf(),
                source,
            })?;
            let mut writer = std::io::BufWriter::new(file);
            write_records(&records, config.format, &mut writer)?;
            writer.flush()?;
            let sidecar = sidecar_path(path);
            std::fs::write(&sidecar, config.canonical()).map_err(|source| Error::File { path: sidecar, source })?;
            Ok(())
        }
    }
}

/// Where the canonical config of an output file is stored: `<output>.config.toml`.
pub fn sidecar_path(output: &Path) -> PathBuf {
    let mut name = output.file_name().unwrap_or_default().to_os_string();
    name.push(".config.toml");
    output.with_file_name(name)
}

pub fn cmd_gen_hgp(args: &GenHgpArgs, out: &mut dyn Write) -> Result<()> {
    let (name, base) = match &args.fixture {
        Some(name) => (name.clone(), base_matrix(name)?),
        None => {
            let (m, n, r, s, seed) = (
                args.m.unwrap_or(0),
                args.n.unwrap_or(0),
                args.r.unwrap_or(0),
                args.s.unwrap_or(0),
                args.seed.unwrap_or(0),
            );
            let options = RegularLdpcOptions {
                min_girth: args.min_girth,
                ..Default::default()
            };
            let base = generate_regular_ldpc(m, n, r, s, seed, options)?;
            (format!("hgp_{m}x{n}_r{r}s{s}_seed{seed}"), base.matrix)
        }
    };
    let code = hgp(&base)?.with_name(name.clone());
    std::fs::create_dir_all(&args.out).map_err(|source| Error::File {
        path: args.out.clone(),
        source,
    })?;
    let stem = args.stem.clone().unwrap_or(name);
    let source = store_code(&code, &args.out, &stem)?;
    let base_path = args.out.join(format!("{stem}.base.alist"));
    write_alist(&base_path, &base)?;
    writeln!(out, "code    {}", code.name())?;
    writeln!(out, "base    {} x {}, rank {}", base.rows(), base.cols(), base.rank())?;
    writeln!(out, "n       {}", code.n())?;
    writeln!(out, "k       {}", code.k())?;
    match distance_upper_bound(&code, args.distance_trials, 0) {
        Some(d) => writeln!(out, "d <=    {d}")?,
        None => writeln!(out, "d       undefined (k = 0)")?,
    }
    writeln!(out, "source  {source}")?;
    writeln!(out, "base    {}", base_path.display())?;
    Ok(())
}

pub fn cmd_code_info(args: &CodeInfoArgs, out: &mut dyn Write) -> Result<()> {
    let code = load_code(&args.code.parse()?)?;
    let range = |v: Vec<usize>| {
        let lo = v.iter().min().copied().unwrap_or(0);
        let hi = v.iter().max().copied().unwrap_or(0);
        if lo == hi {
            format!("{lo}")
        } else {
            format!("{lo}..{hi}")
        }
    };
    writeln!(out, "code           {}", code.name())?;
    writeln!(out, "n              {}", code.n())?;
    writeln!(out, "k              {}", code.k())?;
    for (label, h) in [("H_X", code.hx()), ("H_Z", code.hz())] {
        writeln!(
            out,
            "{label}            {} x {}, rank {}, row weight {}, column weight {}",
            h.rows(),
            h.cols(),
            h.rank(),
            range(h.row_weights()),
            range(h.column_weights())
        )?;
    }
    match distance_upper_bound(&code, args.distance_trials, args.seed) {
        Some(d) => writeln!(out, "distance       <= {d} ({} random information sets)", args.distance_trials)?,
        None => writeln!(out, "distance       undefined (k = 0)")?,
    }
    match decoding_volume(1, code.n(), code.k()) {
        Ok(v) => writeln!(out, "volume (W=1)   {v}")?,
        Err(e) => writeln!(out, "volume (W=1)   {e}")?,
    }
    Ok(())
}

pub fn cmd_volume(args: &VolumeArgs, out: &mut dyn Write) -> Result<()> {
    if let Some(&w) = args.width.iter().find(|&&w| w == 0) {
        return Err(Error::config("width", format!("{w}: widths start at 1")));
    }
    let codes = args
        .codes
        .iter()
        .map(|c| Ok((c.clone(), load_code(&c.parse()?)?)))
        .collect::<Result<Vec<_>>>()?;
    writeln!(out, "{:<16} {:>6} {:>5} {:>4} {:>8}", "code", "n", "k", "W", "V")?;
    for (name, code) in &codes {
        for &w in &args.width {
            let v = decoding_volume(w, code.n(), code.k())?;
            writeln!(out, "{:<16} {:>6} {:>5} {:>4} {:>8}", name, code.n(), code.k(), w, v)?;
        }
    }
    Ok(())
}

/// Machine-readable summary of a `decode-once` run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecodeOnceReport {
    pub code: String,
    #[serde(rename = "W")]
    pub w: usize,
    #[serde(rename = "F")]
    pub f: usize,
    pub commit: Vec<usize>,
    pub bp_converged: bool,
    pub iterations: usize,
    pub osd_used: bool,
    pub retained_weights: Vec<usize>,
}

fn support_text(v: &BinaryVector) -> String {
    if v.is_zero() {
        "0".into()
    } else {
        format!("{:?}", v.support())
    }
}

fn read_syndromes(path: &Path, m: usize) -> Result<Vec<BinaryVector>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::File {
        path: path.to_path_buf(),
        source,
    })?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            let bits = l
                .trim()
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::Parse {
                        line: i + 1,
                        msg: format!("unexpected character `{c}`"),
                    }),
                })
                .collect::<Result<Vec<bool>>>()?;
            if bits.len() != m {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("syndrome has {} bits, the code has {m} checks", bits.len()),
                });
            }
            Ok(BinaryVector::from_bits(&bits))
        })
        .collect()
}

pub fn cmd_decode_once(args: &DecodeOnceArgs, out: &mut dyn Write) -> Result<DecodeOnceReport> {
    let code = args.side.orient(load_code(&args.code.parse()?)?);
    let window: WindowConfig = args.window.parse()?;
    let params = NoiseParams::new(args.p)?;
    let h = code.hz();
    let (n, m) = (h.cols(), h.rows());

    let syndromes: Vec<BinaryVector> = if let Some(path) = &args.syndromes {
        read_syndromes(path, m)?
    } else if let Some(qubits) = &args.inject {
        let e = BinaryVector::from_support(n, qubits.clone())?;
        vec![h.mat_vec(&e)?; window.width()]
    } else {
        let mut cumulative = BinaryVector::zeros(n);
        (0..window.width() as u64)
            .map(|round| {
                let sample = sample_round(n, m, params, &mut StreamKey::new(args.seed, 0, round).rng());
                cumulative.add_assign(&sample.e)?;
                synthesize_syndrome(h, &cumulative, &sample.u)
            })
            .collect::<Result<_>>()?
    };
    if syndromes.len() != window.width() {
        return Err(Error::InvalidParameter(format!(
            "window {window} needs {} syndromes, got {}",
            window.width(),
            syndromes.len()
        )));
    }

    writeln!(out, "code {} (n = {n}, m = {m}), window {window}, p = {}", code.name(), args.p)?;
    if args.single_shot {
        if window != WindowConfig::single_shot() {
            return Err(Error::InvalidParameter("--single-shot needs --window 1x1".into()));
        }
        let mut decoder = SingleShotDecoder::new(h, args.p, DecoderConfig::default())?;
        let xi = decoder.step(&syndromes[0])?;
        writeln!(out, "single-shot decoder on [H | I]")?;
        writeln!(out, "commit xi: {}", support_text(&xi))?;
        let report = DecodeOnceReport {
            code: code.name().to_string(),
            w: 1,
            f: 1,
            commit: xi.support().to_vec(),
            bp_converged: false,
            iterations: 0,
            osd_used: false,
            retained_weights: vec![],
        };
        writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
        return Ok(report);
    }

    let mut decoder = WindowDecoder::new(h, window, args.p, DecoderConfig::default())?;
    let mut state = decoder.new_state();
    let trace = decoder.cycle_traced(&mut state, &syndromes)?;
    for (t, (s, d)) in trace.window_syndromes.iter().zip(&trace.differenced).enumerate() {
        writeln!(out, "round {:>2}: |sigma| = {:>3}  |diff| = {:>3}", t + 1, s.weight(), d.weight())?;
    }
    let d = &trace.decode;
    writeln!(
        out,
        "BP: {} after {} iterations",
        if d.bp_converged { "converged" } else { "did not converge" },
        d.iterations
    )?;
    if d.osd_used {
        let mut order: Vec<usize> = (0..d.reliabilities.len()).collect();
        order.sort_by(|&a, &b| d.reliabilities[a].total_cmp(&d.reliabilities[b]).then(a.cmp(&b)));
        let label = |v: usize| {
            let split = window.width() * n;
            if v < split {
                format!("e{}[{}]", v / n + 1, v % n)
            } else {
                format!("u{}[{}]", (v - split) / m + 1, (v - split) % m)
            }
        };
        let head: Vec<String> = order.iter().take(10).map(|&v| format!("{}:{:.2}", label(v), d.reliabilities[v])).collect();
        writeln!(out, "OSD ranking (first 10): {}", head.join(" "))?;
    }
    for (t, (e, u)) in trace.e_estimate.iter().zip(&trace.u_estimate).enumerate() {
        writeln!(out, "estimate round {:>2}: e = {}  u = {}", t + 1, support_text(e), support_text(u))?;
    }
    writeln!(out, "commit xi: {}", support_text(&trace.commit))?;
    let retained: Vec<usize> = trace.retained.iter().map(|s| s.weight()).collect();
    writeln!(out, "retained syndrome weights: {retained:?}")?;
    let report = DecodeOnceReport {
        code: code.name().to_string(),
        w: window.width(),
        f: window.offset(),
        commit: trace.commit.support().to_vec(),
        bp_converged: d.bp_converged,
        iterations: d.iterations,
        osd_used: d.osd_used,
        retained_weights: retained,
    };
    writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
    Ok(report)
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::GenHgp(a) => cmd_gen_hgp(&a, out),
        Command::CodeInfo(a) => cmd_code_info(&a, out),
        Command::DecodeOnce(a) => cmd_decode_once(&a, out).map(|_| ()),
        Command::Lifetime(a) => cmd_lifetime(&a, out),
        Command::Volume(a) => cmd_volume(&a, out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "code = \"hgp_625\"\np = [0.007]\nwindows = [\"1x1\", \"3x1\"]\ntrials = 10\nseed = 5\n";

    #[test]
    fn parses_minimal_config() {
        let c = RunConfig::parse(MINIMAL).unwrap();
        assert_eq!(c.window_configs().unwrap().len(), 2);
        assert_eq!(c.max_cycles, 100_000);
        assert_eq!(c.decoder_config(), DecoderConfig::default());
        assert_eq!(c.copies, 1);
    }

    fn field_of(text: &str) -> String {
        match RunConfig::parse(text).unwrap_err() {
            Error::Config { field, .. } => field,
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn errors_name_the_field() {
        assert_eq!(field_of(&MINIMAL.replace("trials = 10", "trials = 0")), "trials");
        assert_eq!(field_of(&MINIMAL.replace("seed = 5\n", "")), "seed");
        assert_eq!(field_of(&MINIMAL.replace("\"3x1\"", "\"1x3\"")), "windows");
        assert_eq!(field_of(&MINIMAL.replace("[0.007]", "[1.5]")), "p");
        assert_eq!(field_of(&format!("{MINIMAL}lambada = 3\n")), "lambada");
        assert_eq!(field_of(&format!("{MINIMAL}osd = \"osd9\"\n")), "osd");
        assert_eq!(field_of(&format!("{MINIMAL}max_cycles = 0\n")), "max_cycles");
        assert_eq!(field_of(&MINIMAL.replace("trials = 10", "trials = \"ten\"")), "trials");
    }

    #[test]
    fn hash_ignores_plumbing_settings() {
        let a = RunConfig::parse(MINIMAL).unwrap();
        let b = RunConfig::parse(&format!("{MINIMAL}workers = 3\nformat = \"jsonl\"\noutput = \"x.csv\"\n")).unwrap();
        assert_eq!(a.hash(), b.hash());
        let c = RunConfig::parse(&format!("{MINIMAL}lambda = 10\n")).unwrap();
        assert_ne!(a.hash(), c.hash());
        assert_eq!(RunConfig::parse(&a.canonical()).unwrap(), a);
        assert_eq!(a.hash().len(), 16);
    }

    #[test]
    fn csv_header_is_fixed() {
        let record = ResultRecord {
            code: "alist:a,b".into(),
            n: 625,
            k: 25,
            p: 0.007,
            w: 3,
            f: 1,
            trials: 2,
            censored: 2,
            mean_t: None,
            std_err: None,
            volume: Some(900),
            seed: 1,
            config_hash: "00".into(),
            wall_time_seconds: 1.0,
        };
        let mut buf = Vec::new();
        write_records(std::slice::from_ref(&record), OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(lines.next().unwrap(), "\"alist:a,b\",625,25,0.007,3,1,2,2,,,900,1,00");
        let mut buf = Vec::new();
        write_records(&[record], OutputFormat::Jsonl, &mut buf).unwrap();
        let json: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        let keys: Vec<&str> = json.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        let mut expected = CSV_HEADER.to_vec();
        expected.sort();
        let mut keys_sorted = keys.clone();
        keys_sorted.sort();
        assert_eq!(keys_sorted, expected);
        assert!(json["mean_T"].is_null());
    }

    #[test]
    fn volume_table() {
        let args = VolumeArgs {
            codes: vec!["hgp_625".into(), "hgp_2500".into()],
            width: vec![1, 4],
        };
        let mut buf = Vec::new();
        cmd_volume(&args, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.lines().any(|l| l.starts_with("hgp_625") && l.ends_with(" 4     1200")));
        assert!(text.lines().any(|l| l.starts_with("hgp_2500") && l.ends_with(" 1     1200")));
        let zero = VolumeArgs {
            codes: vec!["hgp_625".into()],
            width: vec![0],
        };
        assert!(cmd_volume(&zero, &mut Vec::new()).is_err());
    }
}
