//! Monte Carlo estimation of the logical memory lifetime.
//!
//! A trial runs noisy syndrome rounds through a window decoder until the
//! residual error left after the committed corrections can no longer be
//! cleaned up by an ideal decoder working on its noiseless syndrome. Failure
//! at cycle `N` gives lifetime `T = (N - 1) · F`.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::bposd::{BpOsdDecoder, DecoderConfig, OsdMode};
use crate::codes::CssCode;
use crate::error::{Error, Result};
use crate::gf2::BinaryVector;
use crate::noise::{sample_round, synthesize_syndrome, NoiseParams, StreamKey};
use crate::window::{WindowConfig, WindowDecoder};

/// Default prior of the ideal decoder.
pub const DEFAULT_IDEAL_P: f64 = 1e-2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LifetimeConfig {
    pub window: WindowConfig,
    pub decoder: DecoderConfig,
    /// Prior used by the ideal decoder on the data variables.
    pub ideal_p: f64,
    /// Trials stop, censored, after this many cycles without failure.
    pub max_cycles: usize,
    /// Independent code blocks per trial; the trial ends at the first block
    /// failure.
    pub copies: usize,
}

impl LifetimeConfig {
    pub fn new(window: WindowConfig, max_cycles: usize) -> Self {
        Self {
            window,
            decoder: DecoderConfig::default(),
            ideal_p: DEFAULT_IDEAL_P,
            max_cycles,
            copies: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.decoder.validate()?;
        if self.max_cycles == 0 {
            return Err(Error::config("max_cycles", "must be at least 1"));
        }
        if self.copies == 0 {
            return Err(Error::config("copies", "must be at least 1"));
        }
        if !(self.ideal_p > 0.0 && self.ideal_p < 1.0) {
            return Err(Error::config("ideal_p", format!("{} is outside (0, 1)", self.ideal_p)));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrialOutcome {
    /// First cycle after which failure was detected; `None` when censored.
    pub failed_at_cycle: Option<usize>,
    pub rounds_simulated: usize,
    pub seed_key: StreamKey,
    pub offset: usize,
}

impl TrialOutcome {
    pub fn is_censored(&self) -> bool {
        self.failed_at_cycle.is_none()
    }

    /// `T = (N - 1) · F`, or `None` when censored.
    pub fn lifetime(&self) -> Option<usize> {
        self.failed_at_cycle.map(|n| (n - 1) * self.offset)
    }
}

/// Reusable per-worker simulator: one window decoder and one ideal decoder.
#[derive(Clone, Debug)]
pub struct LifetimeSimulator {
    code: CssCode,
    params: NoiseParams,
    config: LifetimeConfig,
    window: WindowDecoder,
    ideal: BpOsdDecoder,
}

impl LifetimeSimulator {
    /// Simulates X errors against `H_Z`; pass `code.swapped()` for the Z side.
    pub fn new(code: &CssCode, p: f64, config: LifetimeConfig) -> Result<Self> {
        config.validate()?;
        if !(p > 0.0 && p <= 1.0) {
            return Err(Error::config("p", format!("{p} is outside (0, 1]")));
        }
        let params = NoiseParams::new(p)?;
        let window = WindowDecoder::new(code.hz(), config.window, p, config.decoder)?;
        let ideal = BpOsdDecoder::uniform(code.hz(), config.ideal_p, config.decoder)?;
        Ok(Self {
            code: code.clone(),
            params,
            config,
            window,
            ideal,
        })
    }

    pub fn config(&self) -> &LifetimeConfig {
        &self.config
    }

    /// Whether the ideal decoder fails to return `r` to the codespace trivially.
    pub fn is_uncorrectable(&mut self, residual: &BinaryVector) -> Result<bool> {
        if residual.is_zero() {
            return Ok(false);
        }
        let syndrome = self.code.hz().mat_vec(residual)?;
        let decoded = self.ideal.decode(&syndrome)?;
        if !decoded.syndrome_consistent {
            // Only reachable with OSD disabled: no correction was found.
            debug_assert_eq!(self.config.decoder.osd_mode, OsdMode::Off);
            return Ok(true);
        }
        self.code.is_logical_failure(&residual.add(&decoded.estimate)?)
    }

    /// Runs one code block until failure or `max_cycles`.
    pub fn run_block(&mut self, key: StreamKey) -> Result<TrialOutcome> {
        Ok(self.run_block_until(key, self.config.max_cycles)?.unwrap_or_else(|| self.censored(key)))
    }

    fn censored(&self, key: StreamKey) -> TrialOutcome {
        TrialOutcome {
            failed_at_cycle: None,
            rounds_simulated: self.config.max_cycles * self.config.window.offset(),
            seed_key: key,
            offset: self.config.window.offset(),
        }
    }

    /// Simulates at most `limit` cycles; `None` if the block survives them.
    fn run_block_until(&mut self, key: StreamKey, limit: usize) -> Result<Option<TrialOutcome>> {
        let (n, m) = (self.code.n(), self.code.hz().rows());
        let h = self.code.hz().clone();
        let window = self.config.window;
        let mut state = self.window.new_state();
        let mut cumulative = BinaryVector::zeros(n);
        // Cumulative true error at each sampled but not yet committed round.
        let mut pending: VecDeque<BinaryVector> = VecDeque::with_capacity(window.width());
        let mut round = 0u64;
        for cycle in 1..=limit {
            let count = state.syndromes_needed();
            let mut syndromes = Vec::with_capacity(count);
            for _ in 0..count {
                let sample = sample_round(n, m, self.params, &mut StreamKey { round, ..key }.rng());
                round += 1;
                cumulative.add_assign(&sample.e)?;
                syndromes.push(synthesize_syndrome(&h, &cumulative, &sample.u)?);
                pending.push_back(cumulative.clone());
            }
            self.window.cycle(&mut state, &syndromes)?;
            let mut committed = None;
            for _ in 0..window.offset() {
                committed = pending.pop_front();
            }
            let mut residual = committed.expect("offset is at least 1");
            residual.add_assign(state.cumulative_correction())?;
            if self.is_uncorrectable(&residual)? {
                return Ok(Some(TrialOutcome {
                    failed_at_cycle: Some(cycle),
                    rounds_simulated: round as usize,
                    seed_key: key,
                    offset: window.offset(),
                }));
            }
        }
        Ok(None)
    }

    /// Trial `trial` of a run seeded by `master_seed`. With several copies the
    /// trial fails at the earliest block failure (ties go to the lower copy).
    /// Later blocks are only simulated up to the current earliest failure.
    pub fn run_trial(&mut self, master_seed: u64, trial: u64) -> Result<TrialOutcome> {
        let copies = self.config.copies as u64;
        let mut best: Option<TrialOutcome> = None;
        for c in 0..copies {
            let key = StreamKey::new(master_seed, trial * copies + c, 0);
            let limit = match best.as_ref().and_then(|b| b.failed_at_cycle) {
                Some(a) => a - 1,
                None => self.config.max_cycles,
            };
            if let Some(block) = self.run_block_until(key, limit)? {
                best = Some(block);
            } else if best.is_none() {
                best = Some(self.censored(key));
            }
        }
        Ok(best.expect("copies is at least 1"))
    }
}

/// Runs a single trial on block `seed_key` (one copy).
pub fn run_trial(
    code: &CssCode,
    p: f64,
    window: WindowConfig,
    decoder: DecoderConfig,
    seed_key: StreamKey,
    max_cycles: usize,
) -> Result<TrialOutcome> {
    let config = LifetimeConfig {
        decoder,
        ..LifetimeConfig::new(window, max_cycles)
    };
    LifetimeSimulator::new(code, p, config)?.run_block(seed_key)
}

/// Aggregate of a lifetime run.
#[derive(Clone, Debug, PartialEq)]
pub struct LifetimeEstimate {
    pub code: String,
    pub n: usize,
    pub k: usize,
    pub p: f64,
    pub config: LifetimeConfig,
    pub master_seed: u64,
    pub trials: usize,
    pub censored: usize,
    /// Mean of `T` over uncensored trials; `None` when every trial was censored.
    pub mean_t: Option<f64>,
    /// Standard error of `mean_t`; 0 with a single uncensored trial.
    pub std_error: Option<f64>,
    /// Mean with censored trials counted at `max_cycles · F`; present when
    /// anything was censored, and a lower bound on the true mean.
    pub lower_bound: Option<f64>,
    /// Set when the standard error rests on a single observation.
    pub single_observation: bool,
}

impl LifetimeEstimate {
    pub fn from_outcomes(code: &CssCode, p: f64, config: LifetimeConfig, master_seed: u64, outcomes: &[TrialOutcome]) -> Self {
        let observed: Vec<f64> = outcomes.iter().filter_map(|o| o.lifetime()).map(|t| t as f64).collect();
        let censored = outcomes.len() - observed.len();
        let (mean_t, std_error) = mean_and_std_error(&observed).unzip();
        let lower_bound = (censored > 0 && !outcomes.is_empty()).then(|| {
            let cap = (config.max_cycles * config.window.offset()) as f64;
            (observed.iter().sum::<f64>() + cap * censored as f64) / outcomes.len() as f64
        });
        Self {
            code: code.name().to_string(),
            n: code.n(),
            k: code.k(),
            p,
            config,
            master_seed,
            trials: outcomes.len(),
            censored,
            mean_t,
            std_error,
            lower_bound,
            single_observation: observed.len() == 1,
        }
    }
}

/// Sample mean and standard error (`s / √n`, `s` with `n - 1` denominator).
pub fn mean_and_std_error(values: &[f64]) -> Option<(f64, f64)> {
    let n = values.len();
    if n == 0 {
        return None;
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    if n == 1 {
        return Some((mean, 0.0));
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
    Some((mean, (var / n as f64).sqrt()))
}

/// Runs `trials` independent trials on `workers` threads (0 = all cores).
/// Outcomes come back in trial order, so the estimate does not depend on the
/// worker count.
pub fn run_trials(
    code: &CssCode,
    p: f64,
    config: LifetimeConfig,
    trials: usize,
    master_seed: u64,
    workers: usize,
    progress: Option<&(dyn Fn(usize) + Sync)>,
) -> Result<Vec<TrialOutcome>> {
    if trials == 0 {
        return Err(Error::config("trials", "must be at least 1"));
    }
    let template = LifetimeSimulator::new(code, p, config)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::config("workers", e.to_string()))?;
    let done = std::sync::atomic::AtomicUsize::new(0);
    pool.install(|| {
        (0..trials as u64)
            .into_par_iter()
            .map_init(
                || template.clone(),
                |sim, t| {
                    let out = sim.run_trial(master_seed, t);
                    if let Some(report) = progress {
                        report(done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1);
                    }
                    out
                },
            )
            .collect()
    })
}

pub fn estimate_lifetime(
    code: &CssCode,
    p: f64,
    config: LifetimeConfig,
    trials: usize,
    master_seed: u64,
    workers: usize,
) -> Result<LifetimeEstimate> {
    let outcomes = run_trials(code, p, config, trials, master_seed, workers, None)?;
    Ok(LifetimeEstimate::from_outcomes(code, p, config, master_seed, &outcomes))
}

/// Syndrome bits processed per window: `W (n - k) / 2`.
pub fn decoding_volume(width: usize, n: usize, k: usize) -> Result<usize> {
    if width == 0 {
        return Err(Error::InvalidParameter("window width must be at least 1".into()));
    }
    if n <= k {
        return Err(Error::InvalidParameter(format!("n = {n} must exceed k = {k}")));
    }
    if (n - k) % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "n - k = {} is odd; the volume assumes equal X and Z check counts",
            n - k
        )));
    }
    Ok(width * (n - k) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{fixture, hgp};
    use crate::gf2::BinaryMatrix;

    fn small_code() -> CssCode {
        // Product of the 4-bit cyclic repetition code: [[32, 2]].
        let a = BinaryMatrix::from_dense(&[
            vec![1u8, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
            vec![1, 0, 0, 1],
        ])
        .unwrap();
        hgp(&a).unwrap()
    }

    #[test]
    fn volumes() {
        assert_eq!(decoding_volume(4, 625, 25).unwrap(), 1200);
        assert_eq!(decoding_volume(1, 2500, 100).unwrap(), 1200);
        assert_eq!(decoding_volume(1, 7, 5).unwrap(), 1);
        assert!(decoding_volume(1, 8, 5).is_err());
        assert!(decoding_volume(0, 625, 25).is_err());
        assert!(decoding_volume(1, 5, 5).is_err());
    }

    #[test]
    fn statistics() {
        assert_eq!(mean_and_std_error(&[]), None);
        assert_eq!(mean_and_std_error(&[4.0]), Some((4.0, 0.0)));
        let (m, se) = mean_and_std_error(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(m, 2.5);
        assert!((se - (5.0f64 / 3.0 / 4.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn high_noise_fails_immediately() {
        let code = small_code();
        let out = run_trial(&code, 0.5, WindowConfig::single_shot(), DecoderConfig::default(), StreamKey::new(1, 0, 0), 50).unwrap();
        assert!(out.failed_at_cycle.is_some());
        assert_eq!(out.lifetime(), Some(out.failed_at_cycle.unwrap() - 1));
    }

    #[test]
    fn tiny_noise_is_censored() {
        let code = fixture("hgp_625").unwrap();
        let window = WindowConfig::new(3, 1).unwrap();
        let out = run_trial(&code, 1e-6, window, DecoderConfig::default(), StreamKey::new(5, 0, 0), 100).unwrap();
        assert!(out.is_censored());
        assert_eq!(out.rounds_simulated, 100);
        assert_eq!(out.lifetime(), None);
    }

    #[test]
    fn trials_are_deterministic() {
        let code = small_code();
        let window = WindowConfig::new(2, 1).unwrap();
        let a = run_trial(&code, 0.05, window, DecoderConfig::default(), StreamKey::new(9, 3, 0), 200).unwrap();
        let b = run_trial(&code, 0.05, window, DecoderConfig::default(), StreamKey::new(9, 3, 0), 200).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let code = small_code();
        let config = LifetimeConfig::new(WindowConfig::new(3, 1).unwrap(), 200);
        let one = estimate_lifetime(&code, 0.04, config, 12, 21, 1).unwrap();
        let three = estimate_lifetime(&code, 0.04, config, 12, 21, 3).unwrap();
        assert_eq!(one, three);
        assert_eq!(one.trials, 12);
    }

    #[test]
    fn all_censored_reports_lower_bound() {
        let code = fixture("hgp_625").unwrap();
        let config = LifetimeConfig::new(WindowConfig::new(2, 2).unwrap(), 5);
        let est = estimate_lifetime(&code, 1e-6, config, 3, 0, 1).unwrap();
        assert_eq!(est.censored, 3);
        assert_eq!(est.mean_t, None);
        assert_eq!(est.lower_bound, Some(10.0));
    }

    #[test]
    fn single_trial_flags_warning() {
        let code = small_code();
        let config = LifetimeConfig::new(WindowConfig::single_shot(), 1000);
        let est = estimate_lifetime(&code, 0.2, config, 1, 4, 1).unwrap();
        assert_eq!(est.std_error, Some(0.0));
        assert!(est.single_observation);
    }

    #[test]
    fn copies_take_the_earliest_failure() {
        let code = small_code();
        let mut config = LifetimeConfig::new(WindowConfig::single_shot(), 1000);
        let mut single = LifetimeSimulator::new(&code, 0.05, config).unwrap();
        config.copies = 3;
        let mut multi = LifetimeSimulator::new(&code, 0.05, config).unwrap();
        for t in 0..5 {
            let blocks: Vec<TrialOutcome> = (0..3).map(|c| single.run_trial(8, 3 * t + c).unwrap()).collect();
            let earliest = blocks.iter().filter_map(|b| b.failed_at_cycle).min();
            let expected = blocks.iter().find(|b| b.failed_at_cycle == earliest).unwrap();
            assert_eq!(&multi.run_trial(8, t).unwrap(), expected);
        }
    }

    #[test]
    fn verdict_is_stable_and_stabilizer_invariant() {
        let code = fixture("hgp_625").unwrap();
        let config = LifetimeConfig::new(WindowConfig::single_shot(), 1);
        let mut sim = LifetimeSimulator::new(&code, 0.01, config).unwrap();
        let mut rng = StreamKey::new(3, 0, 0).rng();
        for i in 0..20 {
            let r = sample_round(625, 0, NoiseParams::new(0.004 * (1 + i % 5) as f64).unwrap(), &mut rng).e;
            let verdict = sim.is_uncorrectable(&r).unwrap();
            assert_eq!(sim.is_uncorrectable(&r).unwrap(), verdict);
            let shifted = r.add(&code.hx().row_vector(i * 7 % code.hx().rows())).unwrap();
            // The noiseless syndrome is unchanged, so the decode is too; the
            // verdict can only move if the stabilizer shift is mistaken for a logical.
            assert_eq!(sim.is_uncorrectable(&shifted).unwrap(), verdict);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let code = small_code();
        let config = LifetimeConfig::new(WindowConfig::single_shot(), 10);
        assert!(estimate_lifetime(&code, 0.01, config, 0, 0, 1).is_err());
        assert!(estimate_lifetime(&code, 0.0, config, 1, 0, 1).is_err());
        let bad = LifetimeConfig { max_cycles: 0, ..config };
        assert!(estimate_lifetime(&code, 0.01, bad, 1, 0, 1).is_err());
    }
}
