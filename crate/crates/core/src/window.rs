//! Sliding-window `(W, F)` decoding.
//!
//! Each cycle decodes the last `W` rounds of syndromes against
//! `H_win = [I_W ⊗ H | B ⊗ I_m]`, commits the data-error estimate of the
//! first `F` rounds and keeps the remaining `W - F` syndromes, updated by the
//! committed correction, for the next cycle. Corrections are tracked in
//! software: the state accumulates them and every syndrome entering the
//! window is shifted by `H · cumulative_correction`.

use crate::bposd::{BpOsdDecoder, DecodeResult, DecoderConfig};
use crate::error::{Error, Result};
use crate::gf2::{BinaryMatrix, BinaryVector};

/// Smallest prior handed to BP; keeps LLRs finite when `p` is 0 or 1.
pub(crate) const PRIOR_FLOOR: f64 = 1e-12;

pub(crate) fn clamp_prior(p: f64) -> f64 {
    p.clamp(PRIOR_FLOOR, 1.0 - PRIOR_FLOOR)
}

/// Width `W` (rounds per decode) and offset `F` (rounds committed per cycle).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WindowConfig {
    width: usize,
    offset: usize,
}

impl WindowConfig {
    pub fn new(width: usize, offset: usize) -> Result<Self> {
        if offset == 0 || offset > width {
            return Err(Error::InvalidParameter(format!(
                "window ({width},{offset}) needs 1 <= F <= W"
            )));
        }
        Ok(Self { width, offset })
    }

    pub fn single_shot() -> Self {
        Self { width: 1, offset: 1 }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn is_overlapping(&self) -> bool {
        self.offset < self.width
    }
}

impl std::fmt::Display for WindowConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.width, self.offset)
    }
}

impl std::str::FromStr for WindowConfig {
    type Err = Error;

    /// Accepts `WxF`, `W,F` or `(W,F)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (w, f) = t
            .split_once(['x', ','])
            .ok_or_else(|| Error::InvalidParameter(format!("window `{s}`: expected WxF")))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("window `{s}`: `{v}` is not a count")))
        };
        Self::new(parse(w)?, parse(f)?)
    }
}

/// The windowed check matrix for a base check matrix `H` (m × n).
///
/// Columns are `e_1..e_W` (n each) followed by `u_1..u_W` (m each); rows are
/// the differenced syndromes `σ_1, σ_2 + σ_1, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowMatrix {
    width: usize,
    n: usize,
    m: usize,
    matrix: BinaryMatrix,
}

impl WindowMatrix {
    pub fn matrix(&self) -> &BinaryMatrix {
        &self.matrix
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Concatenates per-round data and measurement errors into one variable vector.
    pub fn variables(&self, e: &[BinaryVector], u: &[BinaryVector]) -> Result<BinaryVector> {
        if e.len() != self.width || u.len() != self.width {
            return Err(Error::dims(format!(
                "{} data and {} measurement rounds for width {}",
                e.len(),
                u.len(),
                self.width
            )));
        }
        if e.iter().any(|v| v.len() != self.n) || u.iter().any(|v| v.len() != self.m) {
            return Err(Error::dims("round vector length does not match H".to_string()));
        }
        let mut parts = e.to_vec();
        parts.extend_from_slice(u);
        Ok(BinaryVector::concat(&parts))
    }

    /// Splits a variable vector into per-round `(e, u)` blocks.
    pub fn split(&self, x: &BinaryVector) -> Result<(Vec<BinaryVector>, Vec<BinaryVector>)> {
        if x.len() != self.matrix.cols() {
            return Err(Error::dims(format!(
                "vector of length {} for {} window variables",
                x.len(),
                self.matrix.cols()
            )));
        }
        let split = self.width * self.n;
        let e = x.slice(0, split)?.chunks(self.n.max(1))?;
        let u = x.slice(split, x.len())?.chunks(self.m.max(1))?;
        Ok((pad_rounds(e, self.width, self.n), pad_rounds(u, self.width, self.m)))
    }
}

// `chunks` of an empty vector yields no blocks; keep one per round.
fn pad_rounds(mut blocks: Vec<BinaryVector>, width: usize, len: usize) -> Vec<BinaryVector> {
    blocks.resize(width, BinaryVector::zeros(len));
    blocks
}

/// The `W × W` matrix with ones on the diagonal and the first subdiagonal.
pub fn difference_matrix(width: usize) -> BinaryMatrix {
    let rows = (0..width)
        .map(|i| if i == 0 { vec![0] } else { vec![i - 1, i] })
        .collect();
    BinaryMatrix::from_sorted_unchecked(width, width, rows)
}

pub fn build_window_matrix(h: &BinaryMatrix, width: usize) -> Result<WindowMatrix> {
    if width == 0 {
        return Err(Error::InvalidParameter("window width must be at least 1".into()));
    }
    let data = BinaryMatrix::identity(width).kron(h);
    let meas = difference_matrix(width).kron(&BinaryMatrix::identity(h.rows()));
    Ok(WindowMatrix {
        width,
        n: h.cols(),
        m: h.rows(),
        matrix: BinaryMatrix::hstack(&[&data, &meas])?,
    })
}

/// `(σ_1, σ_2 + σ_1, …, σ_W + σ_{W-1})`.
pub fn diff_syndromes(sigmas: &[BinaryVector]) -> Result<Vec<BinaryVector>> {
    let mut out = Vec::with_capacity(sigmas.len());
    for (t, s) in sigmas.iter().enumerate() {
        out.push(if t == 0 { s.clone() } else { s.add(&sigmas[t - 1])? });
    }
    Ok(out)
}

/// Prefix sums over GF(2); inverts [`diff_syndromes`].
pub fn cumulative_sums(vs: &[BinaryVector]) -> Result<Vec<BinaryVector>> {
    let mut out: Vec<BinaryVector> = Vec::with_capacity(vs.len());
    for v in vs {
        out.push(match out.last() {
            Some(prev) => prev.add(v)?,
            None => v.clone(),
        });
    }
    Ok(out)
}

/// Persistent state between cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowState {
    config: WindowConfig,
    buffered: Vec<BinaryVector>,
    cumulative_correction: BinaryVector,
    rounds_elapsed: usize,
    cycles: usize,
}

impl WindowState {
    pub fn new(n: usize, config: WindowConfig) -> Self {
        Self {
            config,
            buffered: Vec::new(),
            cumulative_correction: BinaryVector::zeros(n),
            rounds_elapsed: 0,
            cycles: 0,
        }
    }

    pub fn config(&self) -> WindowConfig {
        self.config
    }

    /// Updated syndromes of the rounds after the last committed one.
    pub fn buffered_syndromes(&self) -> &[BinaryVector] {
        &self.buffered
    }

    pub fn cumulative_correction(&self) -> &BinaryVector {
        &self.cumulative_correction
    }

    /// Rounds covered by committed corrections (`cycles · F`).
    pub fn rounds_elapsed(&self) -> usize {
        self.rounds_elapsed
    }

    pub fn cycles(&self) -> usize {
        self.cycles
    }

    /// Raw syndromes the next cycle expects: `W` first, then `F`.
    pub fn syndromes_needed(&self) -> usize {
        if self.cycles == 0 {
            self.config.width
        } else {
            self.config.offset
        }
    }
}

/// Intermediate values of one cycle.
#[derive(Clone, Debug)]
pub struct CycleTrace {
    /// Window syndromes after the frame update, oldest first.
    pub window_syndromes: Vec<BinaryVector>,
    pub differenced: Vec<BinaryVector>,
    pub decode: DecodeResult,
    pub e_estimate: Vec<BinaryVector>,
    pub u_estimate: Vec<BinaryVector>,
    pub commit: BinaryVector,
    /// Syndromes carried to the next cycle.
    pub retained: Vec<BinaryVector>,
}

/// BP-OSD window decoder for one base check matrix, window and error rate.
#[derive(Clone, Debug)]
pub struct WindowDecoder {
    h: BinaryMatrix,
    config: WindowConfig,
    window: WindowMatrix,
    decoder: BpOsdDecoder,
}

impl WindowDecoder {
    /// Priors are `p` (clamped away from 0 and 1) on every data and
    /// measurement variable of the window.
    pub fn new(h: &BinaryMatrix, config: WindowConfig, p: f64, decoder_config: DecoderConfig) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!("error rate {p} is outside [0, 1]")));
        }
        let window = build_window_matrix(h, config.width)?;
        let decoder = BpOsdDecoder::uniform(window.matrix(), clamp_prior(p), decoder_config)?;
        Ok(Self {
            h: h.clone(),
            config,
            window,
            decoder,
        })
    }

    pub fn config(&self) -> WindowConfig {
        self.config
    }

    pub fn window_matrix(&self) -> &WindowMatrix {
        &self.window
    }

    pub fn check_matrix(&self) -> &BinaryMatrix {
        &self.h
    }

    pub fn new_state(&self) -> WindowState {
        WindowState::new(self.h.cols(), self.config)
    }

    /// Runs one cycle on freshly measured (raw) syndromes and returns the
    /// committed correction `ξ`.
    pub fn cycle(&mut self, state: &mut WindowState, new_syndromes: &[BinaryVector]) -> Result<BinaryVector> {
        Ok(self.cycle_traced(state, new_syndromes)?.commit)
    }

    pub fn cycle_traced(&mut self, state: &mut WindowState, new_syndromes: &[BinaryVector]) -> Result<CycleTrace> {
        if state.config != self.config || state.cumulative_correction.len() != self.h.cols() {
            return Err(Error::InvalidParameter("window state belongs to a different decoder".into()));
        }
        let needed = state.syndromes_needed();
        if new_syndromes.len() != needed {
            return Err(Error::InvalidParameter(format!(
                "cycle {} needs {needed} syndromes, got {}",
                state.cycles + 1,
                new_syndromes.len()
            )));
        }
        let frame = self.h.mat_vec(&state.cumulative_correction)?;
        let mut window_syndromes = state.buffered.clone();
        for s in new_syndromes {
            if s.len() != self.h.rows() {
                return Err(Error::dims(format!(
                    "syndrome of length {} for {} checks",
                    s.len(),
                    self.h.rows()
                )));
            }
            window_syndromes.push(s.add(&frame)?);
        }
        let differenced = diff_syndromes(&window_syndromes)?;
        let decode = self.decoder.decode(&BinaryVector::concat(&differenced))?;
        let (e_estimate, u_estimate) = self.window.split(&decode.estimate)?;

        let mut commit = BinaryVector::zeros(self.h.cols());
        for e in &e_estimate[..self.config.offset] {
            commit.add_assign(e)?;
        }
        let shift = self.h.mat_vec(&commit)?;
        let retained = window_syndromes[self.config.offset..]
            .iter()
            .map(|s| s.add(&shift))
            .collect::<Result<Vec<_>>>()?;

        state.buffered = retained.clone();
        state.cumulative_correction.add_assign(&commit)?;
        state.rounds_elapsed += self.config.offset;
        state.cycles += 1;
        Ok(CycleTrace {
            window_syndromes,
            differenced,
            decode,
            e_estimate,
            u_estimate,
            commit,
            retained,
        })
    }
}

/// `Σ history + cumulative_correction`: the data error left after the
/// committed corrections, at the last committed round.
pub fn residual_error(state: &WindowState, history: &[BinaryVector]) -> Result<BinaryVector> {
    if history.len() != state.rounds_elapsed {
        return Err(Error::dims(format!(
            "error history of {} rounds for {} committed rounds",
            history.len(),
            state.rounds_elapsed
        )));
    }
    let mut r = state.cumulative_correction.clone();
    for e in history {
        r.add_assign(e)?;
    }
    Ok(r)
}

/// Single-shot decoding written directly against `[H | I_m]`, independent of
/// the window machinery.
#[derive(Clone, Debug)]
pub struct SingleShotDecoder {
    h: BinaryMatrix,
    decoder: BpOsdDecoder,
    correction: BinaryVector,
}

impl SingleShotDecoder {
    pub fn new(h: &BinaryMatrix, p: f64, decoder_config: DecoderConfig) -> Result<Self> {
        let augmented = BinaryMatrix::hstack(&[h, &BinaryMatrix::identity(h.rows())])?;
        Ok(Self {
            h: h.clone(),
            decoder: BpOsdDecoder::uniform(&augmented, clamp_prior(p), decoder_config)?,
            correction: BinaryVector::zeros(h.cols()),
        })
    }

    pub fn correction(&self) -> &BinaryVector {
        &self.correction
    }

    /// Decodes one raw syndrome and returns the data correction for it.
    pub fn step(&mut self, raw_syndrome: &BinaryVector) -> Result<BinaryVector> {
        let sigma = raw_syndrome.add(&self.h.mat_vec(&self.correction)?)?;
        let estimate = self.decoder.decode(&sigma)?.estimate;
        let xi = estimate.slice(0, self.h.cols())?;
        self.correction.add_assign(&xi)?;
        Ok(xi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::fixture;
    use crate::noise::{sample_round, synthesize_syndrome, NoiseParams, StreamKey};
    use proptest::prelude::*;
    use rand::Rng;

    fn random_h(seed: u64, m: usize, n: usize) -> BinaryMatrix {
        let mut rng = StreamKey::new(seed, 0, 0).rng();
        let dense: Vec<Vec<u8>> = (0..m).map(|_| (0..n).map(|_| rng.gen_bool(0.4) as u8).collect()).collect();
        BinaryMatrix::from_dense(&dense).unwrap()
    }

    #[test]
    fn config_parsing() {
        assert_eq!("3x1".parse::<WindowConfig>().unwrap(), WindowConfig::new(3, 1).unwrap());
        assert_eq!("(16,16)".parse::<WindowConfig>().unwrap(), WindowConfig::new(16, 16).unwrap());
        assert!("1x2".parse::<WindowConfig>().is_err());
        assert!("0x0".parse::<WindowConfig>().is_err());
        assert!("3".parse::<WindowConfig>().is_err());
        assert_eq!(WindowConfig::new(5, 1).unwrap().to_string(), "(5,1)");
    }

    #[test]
    fn width_one_is_h_with_identity() {
        let h = random_h(1, 4, 6);
        let w = build_window_matrix(&h, 1).unwrap();
        let expected = BinaryMatrix::hstack(&[&h, &BinaryMatrix::identity(4)]).unwrap();
        assert_eq!(w.matrix(), &expected);
        assert!(build_window_matrix(&h, 0).is_err());
    }

    #[test]
    fn width_three_layout() {
        let h = random_h(2, 4, 6);
        let w = build_window_matrix(&h, 3).unwrap();
        let hw = w.matrix();
        assert_eq!((hw.rows(), hw.cols()), (12, 30));
        // u_1 hits row blocks 1 and 2 only.
        for col in 18..22 {
            let rows: Vec<usize> = (0..12).filter(|&r| hw.get(r, col)).collect();
            assert_eq!(rows, vec![col - 18, col - 18 + 4]);
        }
        // u_3 hits only the last block.
        for col in 26..30 {
            let rows: Vec<usize> = (0..12).filter(|&r| hw.get(r, col)).collect();
            assert_eq!(rows, vec![col - 18]);
        }
        assert_eq!(hw.rank(), 12);
    }

    #[test]
    fn diff_cases() {
        let s = BinaryVector::from_bits(&[1u8, 0, 1]);
        let d = diff_syndromes(&[s.clone(), s.clone(), s.clone()]).unwrap();
        assert_eq!(d, vec![s.clone(), BinaryVector::zeros(3), BinaryVector::zeros(3)]);
        assert_eq!(diff_syndromes(std::slice::from_ref(&s)).unwrap(), vec![s.clone()]);
        assert!(diff_syndromes(&[s, BinaryVector::zeros(2)]).is_err());
    }

    #[test]
    fn noiseless_cycles_commit_nothing() {
        let code = fixture("hgp_625").unwrap();
        let mut dec = WindowDecoder::new(code.hz(), WindowConfig::new(3, 1).unwrap(), 0.01, DecoderConfig::default()).unwrap();
        let mut state = dec.new_state();
        let zero = BinaryVector::zeros(300);
        assert!(dec.cycle(&mut state, &[zero.clone()]).is_err());
        let xi = dec.cycle(&mut state, &vec![zero.clone(); 3]).unwrap();
        assert!(xi.is_zero());
        for _ in 0..3 {
            assert!(dec.cycle(&mut state, std::slice::from_ref(&zero)).unwrap().is_zero());
            assert_eq!(state.buffered_syndromes(), &[zero.clone(), zero.clone()]);
        }
        assert_eq!(state.rounds_elapsed(), 4);
    }

    #[test]
    fn single_data_error_is_committed() {
        let code = fixture("hgp_625").unwrap();
        let h = code.hz();
        let mut dec = WindowDecoder::new(h, WindowConfig::new(3, 1).unwrap(), 0.01, DecoderConfig::default()).unwrap();
        for q in [0, 17, 312, 624] {
            let e = BinaryVector::unit(625, q).unwrap();
            let sigma = h.mat_vec(&e).unwrap();
            let mut state = dec.new_state();
            let trace = dec.cycle_traced(&mut state, &vec![sigma.clone(); 3]).unwrap();
            assert_eq!(trace.commit, e);
            assert!(trace.retained.iter().all(|s| s.is_zero()));
            // Replaying the corrected history gives the retained syndromes.
            let r = residual_error(&state, std::slice::from_ref(&e)).unwrap();
            assert!(r.is_zero());
            let next = dec.cycle(&mut state, std::slice::from_ref(&sigma)).unwrap();
            assert!(next.is_zero());
        }
    }

    #[test]
    fn residual_checks_history_length() {
        let state = WindowState::new(5, WindowConfig::new(2, 1).unwrap());
        assert!(residual_error(&state, &[]).unwrap().is_zero());
        assert!(residual_error(&state, &[BinaryVector::zeros(5)]).is_err());
    }

    /// Simulates `cycles` cycles, checking window consistency and syndrome
    /// update soundness along the way; returns the commits.
    fn simulate(h: &BinaryMatrix, config: WindowConfig, p: f64, seed: u64, cycles: usize) -> Vec<BinaryVector> {
        let (m, n) = (h.rows(), h.cols());
        let mut dec = WindowDecoder::new(h, config, p, DecoderConfig::default()).unwrap();
        let mut state = dec.new_state();
        let params = NoiseParams::new(p).unwrap();
        let mut history: Vec<BinaryVector> = Vec::new();
        let mut cumulative = BinaryVector::zeros(n);
        let mut us = Vec::new();
        let mut commits = Vec::new();
        let mut round = 0u64;
        for c in 0..cycles {
            let count = if c == 0 { config.width() } else { config.offset() };
            let mut raw = Vec::new();
            for _ in 0..count {
                let sample = sample_round(n, m, params, &mut StreamKey::new(seed, 0, round).rng());
                round += 1;
                cumulative.add_assign(&sample.e).unwrap();
                raw.push(synthesize_syndrome(h, &cumulative, &sample.u).unwrap());
                history.push(sample.e);
                us.push(sample.u);
            }
            let trace = dec.cycle_traced(&mut state, &raw).unwrap();
            // Window consistency: H·Σ_{j≤t} ẽ_j + ũ_t = σ_t.
            let sums = cumulative_sums(&trace.e_estimate).unwrap();
            for t in 0..config.width() {
                let lhs = h.mat_vec(&sums[t]).unwrap().add(&trace.u_estimate[t]).unwrap();
                assert_eq!(lhs, trace.window_syndromes[t]);
            }
            // Retained syndromes equal those of the corrected true history.
            let committed = state.rounds_elapsed();
            let mut corrected = state.cumulative_correction().clone();
            for e in &history[..committed] {
                corrected.add_assign(e).unwrap();
            }
            for (i, s) in state.buffered_syndromes().iter().enumerate() {
                corrected.add_assign(&history[committed + i]).unwrap();
                let expected = synthesize_syndrome(h, &corrected, &us[committed + i]).unwrap();
                assert_eq!(s, &expected);
            }
            assert_eq!(state.buffered_syndromes().len(), config.width() - config.offset());
            let r = residual_error(&state, &history[..committed]).unwrap();
            let mut independent = BinaryVector::zeros(n);
            for e in history[..committed].iter().chain(&commits).chain(std::iter::once(&trace.commit)) {
                independent.add_assign(e).unwrap();
            }
            assert_eq!(r, independent);
            commits.push(trace.commit);
        }
        commits
    }

    #[test]
    fn window_invariants_on_small_codes() {
        for (seed, (w, f)) in [(1, (1, 1)), (2, (3, 1)), (3, (4, 2)), (4, (3, 3)), (5, (5, 1))] {
            let h = random_h(seed, 5, 8);
            simulate(&h, WindowConfig::new(w, f).unwrap(), 0.1, seed, 6);
        }
    }

    #[test]
    fn window_invariants_on_625() {
        let code = fixture("hgp_625").unwrap();
        simulate(code.hz(), WindowConfig::new(3, 1).unwrap(), 0.005, 9, 4);
    }

    #[test]
    fn unit_window_matches_single_shot() {
        let code = fixture("hgp_625").unwrap();
        let h = code.hz();
        let p = 0.01;
        let mut win = WindowDecoder::new(h, WindowConfig::single_shot(), p, DecoderConfig::default()).unwrap();
        let mut state = win.new_state();
        let mut ss = SingleShotDecoder::new(h, p, DecoderConfig::default()).unwrap();
        let params = NoiseParams::new(p).unwrap();
        let mut cumulative = BinaryVector::zeros(625);
        for round in 0..10 {
            let sample = sample_round(625, 300, params, &mut StreamKey::new(77, 0, round).rng());
            cumulative.add_assign(&sample.e).unwrap();
            let sigma = synthesize_syndrome(h, &cumulative, &sample.u).unwrap();
            let a = win.cycle(&mut state, std::slice::from_ref(&sigma)).unwrap();
            let b = ss.step(&sigma).unwrap();
            assert_eq!(a, b);
        }
        assert_eq!(state.cumulative_correction(), ss.correction());
    }

    proptest! {
        #[test]
        fn window_matrix_matches_difference_oracle(seed in any::<u64>(), width in 1usize..=5) {
            let h = random_h(seed, 4, 6);
            let wm = build_window_matrix(&h, width).unwrap();
            let mut rng = StreamKey::new(seed, 1, 0).rng();
            let e: Vec<BinaryVector> = (0..width).map(|_| BinaryVector::from_bits(&(0..6).map(|_| rng.gen_bool(0.5) as u8).collect::<Vec<_>>())).collect();
            let u: Vec<BinaryVector> = (0..width).map(|_| BinaryVector::from_bits(&(0..4).map(|_| rng.gen_bool(0.5) as u8).collect::<Vec<_>>())).collect();
            let mut cumulative = BinaryVector::zeros(6);
            let mut sigmas = Vec::new();
            for t in 0..width {
                cumulative.add_assign(&e[t]).unwrap();
                sigmas.push(synthesize_syndrome(&h, &cumulative, &u[t]).unwrap());
            }
            let x = wm.variables(&e, &u).unwrap();
            let got = wm.matrix().mat_vec(&x).unwrap();
            prop_assert_eq!(got, BinaryVector::concat(&diff_syndromes(&sigmas).unwrap()));
            prop_assert_eq!(wm.split(&x).unwrap(), (e, u));
            prop_assert_eq!(wm.matrix().rank(), 4 * width);
        }

        #[test]
        fn cumulative_sums_invert_differences(bits in prop::collection::vec(prop::collection::vec(any::<bool>(), 7), 1..6)) {
            let vs: Vec<BinaryVector> = bits.iter().map(|b| BinaryVector::from_bits(b)).collect();
            prop_assert_eq!(cumulative_sums(&diff_syndromes(&vs).unwrap()).unwrap(), vs.clone());
            prop_assert_eq!(diff_syndromes(&cumulative_sums(&vs).unwrap()).unwrap(), vs);
        }
    }
}
