//! Belief propagation with ordered-statistics post-processing (BP-OSD).
//!
//! BP runs a flooding schedule on the Tanner graph of an arbitrary sparse
//! check matrix: all check-to-variable messages are computed from the previous
//! variable-to-check messages (checks in ascending order), then all variables
//! update (ascending order). Messages are log-likelihood ratios, positive
//! meaning "probably no error".
//!
//! When the BP hard decision does not reproduce the syndrome, OSD ranks the
//! columns from most to least likely in error, row-reduces in that order and
//! solves on the resulting information set. The combination sweep then tries
//! every single flip of a non-pivot column and every pair among the first
//! `lambda` non-pivot columns, keeping the cheapest syndrome-consistent
//! candidate.

use crate::error::{Error, Result};
use crate::gf2::{gauss_jordan, BinaryMatrix, BinaryVector, BitMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BpVariant {
    ProductSum,
    MinSum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OsdMode {
    Off,
    Osd0,
    CombinationSweep,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecoderConfig {
    /// BP iteration cap; `None` uses the number of variables (columns).
    pub max_iterations: Option<usize>,
    pub bp_variant: BpVariant,
    /// Multiplier applied to min-sum check messages.
    pub min_sum_scale: f64,
    pub osd_mode: OsdMode,
    /// Number of leading non-pivot columns paired in the combination sweep.
    pub lambda: usize,
    /// Magnitude bound on every BP message.
    pub message_clamp: f64,
}

impl Default for DecoderConfig {
    fn default() -> Self {
        Self {
            max_iterations: None,
            bp_variant: BpVariant::ProductSum,
            min_sum_scale: 1.0,
            osd_mode: OsdMode::CombinationSweep,
            lambda: 40,
            message_clamp: 50.0,
        }
    }
}

impl DecoderConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_iterations == Some(0) {
            return Err(Error::InvalidParameter("max_iterations must be at least 1".into()));
        }
        if !(self.min_sum_scale > 0.0 && self.min_sum_scale <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "min_sum_scale {} is outside (0, 1]",
                self.min_sum_scale
            )));
        }
        if !(self.message_clamp > 0.0 && self.message_clamp.is_finite()) {
            return Err(Error::InvalidParameter("message_clamp must be positive and finite".into()));
        }
        Ok(())
    }

    fn iteration_budget(&self, variables: usize) -> usize {
        self.max_iterations.unwrap_or(variables).max(1)
    }
}

/// Output of a decoder call.
#[derive(Clone, Debug, PartialEq)]
pub struct DecodeResult {
    pub estimate: BinaryVector,
    /// Whether `H · estimate` equals the input syndrome.
    pub syndrome_consistent: bool,
    pub bp_converged: bool,
    /// BP iterations actually run.
    pub iterations: usize,
    /// Posterior LLR per variable from the last BP iteration.
    pub reliabilities: Vec<f64>,
    /// Whether the estimate came from OSD rather than BP.
    pub osd_used: bool,
}

/// Tanner graph in compressed form: edges are numbered check-major.
#[derive(Clone, Debug)]
struct TannerGraph {
    checks: usize,
    variables: usize,
    check_start: Vec<usize>,
    edge_var: Vec<usize>,
    var_start: Vec<usize>,
    var_edges: Vec<usize>,
}

impl TannerGraph {
    fn new(h: &BinaryMatrix) -> Self {
        let mut check_start = Vec::with_capacity(h.rows() + 1);
        let mut edge_var = Vec::with_capacity(h.nnz());
        check_start.push(0);
        for i in 0..h.rows() {
            edge_var.extend_from_slice(h.row(i));
            check_start.push(edge_var.len());
        }
        let mut degree = vec![0usize; h.cols()];
        for &v in &edge_var {
            degree[v] += 1;
        }
        let mut var_start = Vec::with_capacity(h.cols() + 1);
        var_start.push(0);
        for d in &degree {
            var_start.push(var_start.last().unwrap() + d);
        }
        let mut fill = var_start.clone();
        let mut var_edges = vec![0; edge_var.len()];
        for (e, &v) in edge_var.iter().enumerate() {
            var_edges[fill[v]] = e;
            fill[v] += 1;
        }
        Self {
            checks: h.rows(),
            variables: h.cols(),
            check_start,
            edge_var,
            var_start,
            var_edges,
        }
    }

    fn check_vars(&self, c: usize) -> &[usize] {
        &self.edge_var[self.check_start[c]..self.check_start[c + 1]]
    }

    /// Packed rows of the check matrix with columns permuted so that position
    /// `i` holds column `order[i]`, plus one trailing column for `rhs`.
    fn packed_permuted(&self, position_of: &[usize], rhs: &[bool]) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.checks, self.variables + 1);
        for c in 0..self.checks {
            for &v in self.check_vars(c) {
                m.set(c, position_of[v], true);
            }
            if rhs[c] {
                m.set(c, self.variables, true);
            }
        }
        m
    }
}

/// A BP-OSD decoder bound to one check matrix and one set of priors.
///
/// Holds per-call scratch buffers, so one instance serves one caller at a
/// time; build separate instances for concurrent use.
#[derive(Clone, Debug)]
pub struct BpOsdDecoder {
    graph: TannerGraph,
    config: DecoderConfig,
    prior_llr: Vec<f64>,
    /// OSD cost of setting each variable: `ln((1 - p) / p)`, or 1 when all priors agree.
    cost: Vec<f64>,
    v2c: Vec<f64>,
    /// Copy of `v2c` used to detect periodic message states.
    snapshot: Vec<f64>,
    scratch: Vec<f64>,
    skip_cycles: bool,
    c2v: Vec<f64>,
    posterior: Vec<f64>,
    hard: Vec<bool>,
    syndrome_bits: Vec<bool>,
}

impl BpOsdDecoder {
    pub fn new(h: &BinaryMatrix, priors: &[f64], config: DecoderConfig) -> Result<Self> {
        config.validate()?;
        if priors.len() != h.cols() {
            return Err(Error::dims(format!(
                "{} priors for {} variables",
                priors.len(),
                h.cols()
            )));
        }
        if let Some(p) = priors.iter().find(|&&p| !(p > 0.0 && p < 1.0)) {
            return Err(Error::InvalidParameter(format!("prior {p} is outside (0, 1)")));
        }
        let prior_llr: Vec<f64> = priors.iter().map(|&p| ((1.0 - p) / p).ln()).collect();
        let uniform = priors.windows(2).all(|w| w[0] == w[1]);
        let cost = if uniform {
            vec![1.0; priors.len()]
        } else {
            prior_llr.clone()
        };
        let graph = TannerGraph::new(h);
        let edges = graph.edge_var.len();
        let max_degree = (0..graph.checks).map(|c| graph.check_vars(c).len()).max().unwrap_or(0);
        Ok(Self {
            config,
            prior_llr,
            cost,
            v2c: vec![0.0; edges],
            snapshot: vec![0.0; edges],
            scratch: vec![0.0; max_degree],
            skip_cycles: true,
            c2v: vec![0.0; edges],
            posterior: vec![0.0; graph.variables],
            hard: vec![false; graph.variables],
            syndrome_bits: vec![false; graph.checks],
            graph,
        })
    }

    /// Same priors for every variable.
    pub fn uniform(h: &BinaryMatrix, p: f64, config: DecoderConfig) -> Result<Self> {
        Self::new(h, &vec![p; h.cols()], config)
    }

    pub fn config(&self) -> &DecoderConfig {
        &self.config
    }

    pub fn variables(&self) -> usize {
        self.graph.variables
    }

    pub fn checks(&self) -> usize {
        self.graph.checks
    }

    fn load_syndrome(&mut self, syndrome: &BinaryVector) -> Result<()> {
        if syndrome.len() != self.graph.checks {
            return Err(Error::dims(format!(
                "syndrome of length {} for {} checks",
                syndrome.len(),
                self.graph.checks
            )));
        }
        self.syndrome_bits.iter_mut().for_each(|b| *b = false);
        for &i in syndrome.support() {
            self.syndrome_bits[i] = true;
        }
        Ok(())
    }

    fn hard_matches_syndrome(&self) -> bool {
        (0..self.graph.checks).all(|c| {
            let parity = self.graph.check_vars(c).iter().filter(|&&v| self.hard[v]).count() % 2 == 1;
            parity == self.syndrome_bits[c]
        })
    }

    fn update_checks(&mut self) {
        let clamp = self.config.message_clamp;
        // Largest |tanh| product whose atanh stays finite.
        const MAX_PRODUCT: f64 = 1.0 - 1e-15;
        for c in 0..self.graph.checks {
            let range = self.graph.check_start[c]..self.graph.check_start[c + 1];
            let flip = self.syndrome_bits[c];
            let v2c = &self.v2c[range.clone()];
            let c2v = &mut self.c2v[range];
            match self.config.bp_variant {
                BpVariant::ProductSum => {
                    let ts = &mut self.scratch[..v2c.len()];
                    for (t, &m) in ts.iter_mut().zip(v2c) {
                        // tanh(m / 2) = (1 - e^-|m|) / (1 + e^-|m|) · sign(m)
                        let x = (-m.abs()).exp();
                        let mag = (1.0 - x) / (1.0 + x);
                        *t = if m < 0.0 { -mag } else { mag };
                    }
                    // Leave-one-out products via prefix then suffix sweeps.
                    let mut acc = 1.0;
                    for (out, &t) in c2v.iter_mut().zip(ts.iter()) {
                        *out = acc;
                        acc *= t;
                    }
                    let mut acc = 1.0;
                    for (out, &t) in c2v.iter_mut().zip(ts.iter()).rev() {
                        let prod = (*out * acc).clamp(-MAX_PRODUCT, MAX_PRODUCT);
                        acc *= t;
                        // 2 atanh(x) = ln((1 + x) / (1 - x))
                        let msg = ((1.0 + prod) / (1.0 - prod)).ln().clamp(-clamp, clamp);
                        *out = if flip { -msg } else { msg };
                    }
                }
                BpVariant::MinSum => {
                    let mut negative = flip;
                    let (mut min1, mut min2, mut argmin) = (f64::INFINITY, f64::INFINITY, usize::MAX);
                    for (i, &m) in v2c.iter().enumerate() {
                        negative ^= m < 0.0;
                        let a = m.abs();
                        if a < min1 {
                            min2 = min1;
                            min1 = a;
                            argmin = i;
                        } else if a < min2 {
                            min2 = a;
                        }
                    }
                    let scale = self.config.min_sum_scale;
                    for (i, (out, &m)) in c2v.iter_mut().zip(v2c).enumerate() {
                        let mag = scale * if i == argmin { min2 } else { min1 };
                        let neg = negative ^ (m < 0.0);
                        let mag = mag.min(clamp);
                        *out = if neg { -mag } else { mag };
                    }
                }
            }
        }
    }

    /// Returns whether any variable-to-check message changed.
    fn update_variables(&mut self) -> bool {
        let clamp = self.config.message_clamp;
        let mut changed = false;
        for v in 0..self.graph.variables {
            let edges = &self.graph.var_edges[self.graph.var_start[v]..self.graph.var_start[v + 1]];
            let total = self.prior_llr[v] + edges.iter().map(|&e| self.c2v[e]).sum::<f64>();
            self.posterior[v] = total;
            self.hard[v] = total < 0.0;
            for &e in edges {
                let msg = (total - self.c2v[e]).clamp(-clamp, clamp);
                changed |= msg.to_bits() != self.v2c[e].to_bits();
                self.v2c[e] = msg;
            }
        }
        changed
    }

    fn estimate_from_hard(&self) -> BinaryVector {
        BinaryVector::from_bits(&self.hard)
    }

    /// Runs BP until the hard decision reproduces the syndrome or the
    /// iteration budget is spent.
    pub fn bp_decode(&mut self, syndrome: &BinaryVector) -> Result<DecodeResult> {
        self.load_syndrome(syndrome)?;
        let clamp = self.config.message_clamp;
        for e in 0..self.graph.edge_var.len() {
            self.v2c[e] = self.prior_llr[self.graph.edge_var[e]].clamp(-clamp, clamp);
        }
        for v in 0..self.graph.variables {
            self.posterior[v] = self.prior_llr[v];
            self.hard[v] = self.prior_llr[v] < 0.0;
        }
        let mut iterations = 0;
        let mut converged = self.hard_matches_syndrome();
        let budget = self.config.iteration_budget(self.graph.variables);
        // The message update is a deterministic map on `v2c`. Once the state
        // repeats exactly (Brent's cycle search), the hard decision can never
        // match, and the state at the end of the budget is the one reached
        // after `remaining mod period` further iterations.
        let (mut power, mut lambda) = (1usize, 1usize);
        self.snapshot.copy_from_slice(&self.v2c);
        while !converged && iterations < budget {
            self.update_checks();
            let changed = self.update_variables();
            iterations += 1;
            converged = self.hard_matches_syndrome();
            if converged {
                break;
            }
            if self.skip_cycles && !changed {
                // Fixed point: every further iteration reproduces this state.
                iterations = budget;
                break;
            }
            if self.skip_cycles && same_bits(&self.v2c, &self.snapshot) {
                for _ in 0..(budget - iterations) % lambda {
                    self.update_checks();
                    self.update_variables();
                }
                iterations = budget;
                break;
            }
            if power == lambda {
                self.snapshot.copy_from_slice(&self.v2c);
                power *= 2;
                lambda = 0;
            }
            lambda += 1;
        }
        Ok(DecodeResult {
            estimate: self.estimate_from_hard(),
            syndrome_consistent: converged,
            bp_converged: converged,
            iterations,
            reliabilities: self.posterior.clone(),
            osd_used: false,
        })
    }

    /// OSD on the given soft values (lower = more likely in error).
    pub fn osd_post_process(&mut self, syndrome: &BinaryVector, reliabilities: &[f64]) -> Result<DecodeResult> {
        self.load_syndrome(syndrome)?;
        if reliabilities.len() != self.graph.variables {
            return Err(Error::dims(format!(
                "{} reliabilities for {} variables",
                reliabilities.len(),
                self.graph.variables
            )));
        }
        let estimate = osd_solve(
            &self.graph,
            &self.syndrome_bits,
            reliabilities,
            &self.cost,
            self.config.osd_mode,
            self.config.lambda,
        )?;
        Ok(DecodeResult {
            estimate,
            syndrome_consistent: true,
            bp_converged: false,
            iterations: 0,
            reliabilities: reliabilities.to_vec(),
            osd_used: true,
        })
    }

    /// BP, falling back to OSD on BP's posteriors when BP does not converge.
    pub fn decode(&mut self, syndrome: &BinaryVector) -> Result<DecodeResult> {
        let bp = self.bp_decode(syndrome)?;
        if bp.bp_converged || self.config.osd_mode == OsdMode::Off {
            return Ok(bp);
        }
        let mut out = self.osd_post_process(syndrome, &bp.reliabilities)?;
        out.iterations = bp.iterations;
        Ok(out)
    }
}

fn same_bits(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x.to_bits() == y.to_bits())
}

fn osd_solve(
    graph: &TannerGraph,
    syndrome: &[bool],
    reliabilities: &[f64],
    cost: &[f64],
    mode: OsdMode,
    lambda: usize,
) -> Result<BinaryVector> {
    let n = graph.variables;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| reliabilities[a].total_cmp(&reliabilities[b]).then(a.cmp(&b)));
    let mut position_of = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        position_of[v] = pos;
    }

    let mut m = graph.packed_permuted(&position_of, syndrome);
    let positions: Vec<usize> = (0..n).collect();
    let pivots = gauss_jordan(&mut m, &positions);
    let rank = pivots.len();
    if (rank..graph.checks).any(|r| m.get(r, n)) {
        return Err(Error::Inconsistent);
    }

    // OSD-0: pivot i takes the reduced syndrome bit of row i; non-pivots are 0.
    let base: Vec<bool> = (0..rank).map(|i| m.get(i, n)).collect();
    let pivot_cost: Vec<f64> = pivots.iter().map(|&pos| cost[order[pos]]).collect();
    let mut flips: Vec<usize> = Vec::new();
    let mut pivot_bits = base.clone();

    if mode == OsdMode::CombinationSweep && rank < n {
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&p| !is_pivot[p]).collect();
        let mut column_index = vec![usize::MAX; n];
        for (k, &p) in free.iter().enumerate() {
            column_index[p] = k;
        }
        // Reduced non-pivot columns restricted to the pivot rows, packed by row.
        let words = rank.div_ceil(64);
        let mut columns = vec![0u64; free.len() * words];
        for r in 0..rank {
            for pos in m.ones_in_row(r) {
                if pos < n && column_index[pos] != usize::MAX {
                    columns[column_index[pos] * words + r / 64] |= 1 << (r % 64);
                }
            }
        }
        let mut base_words = vec![0u64; words];
        for (r, &b) in base.iter().enumerate() {
            if b {
                base_words[r / 64] |= 1 << (r % 64);
            }
        }
        let candidate_cost = |bits: &[u64], extra: f64| -> f64 {
            let mut total = extra;
            for (wi, &w) in bits.iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    total += pivot_cost[wi * 64 + w.trailing_zeros() as usize];
                    w &= w - 1;
                }
            }
            total
        };
        let column = |k: usize| &columns[k * words..(k + 1) * words];
        let free_cost = |k: usize| cost[order[free[k]]];

        let mut best_cost = candidate_cost(&base_words, 0.0);
        let mut best: Vec<usize> = Vec::new();
        let mut scratch = vec![0u64; words];
        for k in 0..free.len() {
            for ((s, b), c) in scratch.iter_mut().zip(&base_words).zip(column(k)) {
                *s = b ^ c;
            }
            let c = candidate_cost(&scratch, free_cost(k));
            if c < best_cost {
                best_cost = c;
                best = vec![k];
            }
        }
        let depth = lambda.min(free.len());
        for a in 0..depth {
            for b in a + 1..depth {
                for (((s, x), y), z) in scratch.iter_mut().zip(&base_words).zip(column(a)).zip(column(b)) {
                    *s = x ^ y ^ z;
                }
                let c = candidate_cost(&scratch, free_cost(a) + free_cost(b));
                if c < best_cost {
                    best_cost = c;
                    best = vec![a, b];
                }
            }
        }
        for &k in &best {
            for (r, bit) in pivot_bits.iter_mut().enumerate() {
                if column(k)[r / 64] >> (r % 64) & 1 == 1 {
                    *bit = !*bit;
                }
            }
        }
        flips = best.iter().map(|&k| free[k]).collect();
    }

    let mut support: Vec<usize> = pivots
        .iter()
        .zip(&pivot_bits)
        .filter(|(_, &b)| b)
        .map(|(&pos, _)| order[pos])
        .chain(flips.iter().map(|&pos| order[pos]))
        .collect();
    support.sort_unstable();
    Ok(BinaryVector::from_sorted_unchecked(n, support))
}

pub fn bp_decode(
    h: &BinaryMatrix,
    syndrome: &BinaryVector,
    priors: &[f64],
    config: DecoderConfig,
) -> Result<DecodeResult> {
    BpOsdDecoder::new(h, priors, config)?.bp_decode(syndrome)
}

/// OSD with Hamming-weight candidate costs.
pub fn osd_post_process(
    h: &BinaryMatrix,
    syndrome: &BinaryVector,
    reliabilities: &[f64],
    config: DecoderConfig,
) -> Result<DecodeResult> {
    BpOsdDecoder::uniform(h, 0.5 * f64::EPSILON.sqrt(), config)?.osd_post_process(syndrome, reliabilities)
}

pub fn decode(
    h: &BinaryMatrix,
    syndrome: &BinaryVector,
    priors: &[f64],
    config: DecoderConfig,
) -> Result<DecodeResult> {
    BpOsdDecoder::new(h, priors, config)?.decode(syndrome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{fixture, hgp, CssCode};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cfg(mode: OsdMode) -> DecoderConfig {
        DecoderConfig {
            osd_mode: mode,
            ..Default::default()
        }
    }

    fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, density: f64) -> BinaryMatrix {
        let dense: Vec<Vec<u8>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_bool(density) as u8).collect())
            .collect();
        BinaryMatrix::from_dense(&dense).unwrap()
    }

    #[test]
    fn config_validation() {
        let mut c = DecoderConfig::default();
        assert!(c.validate().is_ok());
        c.max_iterations = Some(0);
        assert!(c.validate().is_err());
        c = DecoderConfig {
            min_sum_scale: 0.0,
            ..Default::default()
        };
        assert!(c.validate().is_err());
        let h = BinaryMatrix::identity(3);
        assert!(BpOsdDecoder::new(&h, &[0.1, 0.1], DecoderConfig::default()).is_err());
        assert!(BpOsdDecoder::new(&h, &[0.1, 0.0, 0.1], DecoderConfig::default()).is_err());
        assert!(BpOsdDecoder::new(&h, &[0.1, 1.0, 0.1], DecoderConfig::default()).is_err());
    }

    #[test]
    fn zero_syndrome_gives_zero_estimate() {
        let code = fixture("hgp_625").unwrap();
        let r = bp_decode(code.hz(), &BinaryVector::zeros(300), &[0.01; 625], DecoderConfig::default()).unwrap();
        assert!(r.estimate.is_zero() && r.bp_converged);
        assert!(r.iterations <= 1);
        let r = decode(code.hz(), &BinaryVector::zeros(300), &[0.01; 625], DecoderConfig::default()).unwrap();
        assert!(r.estimate.is_zero() && !r.osd_used);
    }

    #[test]
    fn bp_exact_on_tree() {
        // Path-shaped Tanner graph: repetition code checks x_i + x_{i+1}.
        let n = 7;
        let rows: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
        let h = BinaryMatrix::new(n - 1, n, rows).unwrap();
        for variant in [BpVariant::ProductSum, BpVariant::MinSum] {
            let config = DecoderConfig {
                bp_variant: variant,
                ..Default::default()
            };
            for i in 0..n {
                let e = BinaryVector::unit(n, i).unwrap();
                let r = bp_decode(&h, &h.mat_vec(&e).unwrap(), &vec![0.05; n], config).unwrap();
                assert!(r.bp_converged);
                assert_eq!(r.estimate, e, "{variant:?} single error at {i}");
            }
        }
    }

    #[test]
    fn single_errors_on_625_converge_under_bp() {
        let code = fixture("hgp_625").unwrap();
        let mut dec = BpOsdDecoder::uniform(code.hz(), 0.01, cfg(OsdMode::Off)).unwrap();
        for q in 0..625 {
            let e = BinaryVector::unit(625, q).unwrap();
            let s = code.hz().mat_vec(&e).unwrap();
            let r = dec.bp_decode(&s).unwrap();
            assert!(r.syndrome_consistent, "qubit {q}");
            assert_eq!(code.hz().mat_vec(&r.estimate).unwrap(), s);
        }
    }

    #[test]
    fn osd_picks_matching_column() {
        let h = BinaryMatrix::from_dense(&[vec![1u8, 1, 0, 1], vec![0, 1, 1, 0], vec![1, 0, 1, 0]]).unwrap();
        // Column 3 alone explains a single fired check 0.
        let s = BinaryVector::from_bits(&[1u8, 0, 0]);
        for mode in [OsdMode::Osd0, OsdMode::CombinationSweep] {
            let r = osd_post_process(&h, &s, &[0.0; 4], cfg(mode)).unwrap();
            assert_eq!(h.mat_vec(&r.estimate).unwrap(), s);
            if mode == OsdMode::CombinationSweep {
                assert_eq!(r.estimate.support(), &[3]);
            }
        }
    }

    #[test]
    fn osd_inconsistent_syndrome() {
        let h = BinaryMatrix::from_dense(&[vec![1u8, 1], vec![1, 1]]).unwrap();
        let s = BinaryVector::from_bits(&[1u8, 0]);
        assert!(matches!(
            osd_post_process(&h, &s, &[0.0, 0.0], cfg(OsdMode::Osd0)),
            Err(Error::Inconsistent)
        ));
    }

    /// All error patterns of a code, by brute force.
    fn min_weight_explanation(h: &BinaryMatrix, s: &BinaryVector) -> usize {
        let n = h.cols();
        (0u32..1 << n)
            .filter_map(|mask| {
                let e = BinaryVector::from_support(n, (0..n).filter(|i| mask >> i & 1 == 1).collect()).unwrap();
                (h.mat_vec(&e).unwrap() == *s).then_some(e.weight())
            })
            .min()
            .unwrap()
    }

    fn check_ml_equivalence(code: &CssCode) {
        let n = code.n();
        let h = code.hz();
        let mut errors = vec![BinaryVector::zeros(n)];
        for i in 0..n {
            errors.push(BinaryVector::unit(n, i).unwrap());
            for j in i + 1..n {
                errors.push(BinaryVector::from_support(n, vec![i, j]).unwrap());
            }
        }
        let mut dec = BpOsdDecoder::uniform(h, 0.05, DecoderConfig::default()).unwrap();
        for e in errors {
            let s = h.mat_vec(&e).unwrap();
            let r = dec.decode(&s).unwrap();
            assert_eq!(h.mat_vec(&r.estimate).unwrap(), s);
            assert_eq!(r.estimate.weight(), min_weight_explanation(h, &s), "error {:?}", e.support());
        }
    }

    #[test]
    fn osd_matches_exhaustive_ml_on_small_products() {
        check_ml_equivalence(&hgp(&BinaryMatrix::from_dense(&[vec![1u8, 1]]).unwrap()).unwrap());
        // 3-bit repetition checks: n = 9 + 4 = 13 qubits.
        check_ml_equivalence(&hgp(&BinaryMatrix::from_dense(&[vec![1u8, 1, 0], vec![0, 1, 1]]).unwrap()).unwrap());
    }

    #[test]
    fn low_weight_errors_on_625_never_fail() {
        let code = fixture("hgp_625").unwrap();
        let mut dec = BpOsdDecoder::uniform(code.hz(), 0.01, DecoderConfig::default()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..300 {
            let w = rng.gen_range(1..=3);
            let support = rand::seq::index::sample(&mut rng, 625, w).into_vec();
            let e = BinaryVector::from_support(625, support).unwrap();
            let s = code.hz().mat_vec(&e).unwrap();
            let r = dec.decode(&s).unwrap();
            let residual = r.estimate.add(&e).unwrap();
            assert!(!code.is_logical_failure(&residual).unwrap());
        }
    }

    #[test]
    fn determinism() {
        let code = fixture("hgp_625").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let e = BinaryVector::from_bits(&(0..625).map(|_| rng.gen_bool(0.03) as u8).collect::<Vec<_>>());
        let s = code.hz().mat_vec(&e).unwrap();
        let a = decode(code.hz(), &s, &[0.03; 625], DecoderConfig::default()).unwrap();
        let b = decode(code.hz(), &s, &[0.03; 625], DecoderConfig::default()).unwrap();
        assert_eq!(a, b);
        assert!(a.syndrome_consistent);
    }

    #[test]
    fn low_priors_are_avoided() {
        // Columns 4 and 5 duplicate columns 0 and 1; making them very unlikely
        // must steer the decoder to the original columns.
        let h = BinaryMatrix::from_dense(&[
            vec![1u8, 0, 1, 0, 1, 0],
            vec![1, 1, 0, 0, 1, 1],
            vec![0, 1, 1, 1, 0, 1],
        ])
        .unwrap();
        let mut priors = vec![0.2; 6];
        priors[4] = 1e-9;
        priors[5] = 1e-9;
        for mode in [OsdMode::Osd0, OsdMode::CombinationSweep] {
            for mask in 1u32..8 {
                let s = BinaryVector::from_support(3, (0..3).filter(|i| mask >> i & 1 == 1).collect()).unwrap();
                let config = DecoderConfig {
                    max_iterations: Some(1),
                    ..cfg(mode)
                };
                let mut dec = BpOsdDecoder::new(&h, &priors, config).unwrap();
                let bp = dec.bp_decode(&s).unwrap();
                let r = dec.osd_post_process(&s, &bp.reliabilities).unwrap();
                assert_eq!(h.mat_vec(&r.estimate).unwrap(), s);
                assert!(!r.estimate.get(4) && !r.estimate.get(5), "{mode:?} mask {mask}: {:?}", r.estimate);
            }
        }
    }

    #[test]
    fn cycle_skipping_is_exact() {
        let code = fixture("hgp_625").unwrap();
        let h = BinaryMatrix::hstack(&[code.hz(), &BinaryMatrix::identity(300)]).unwrap();
        let mut fast = BpOsdDecoder::uniform(&h, 0.007, DecoderConfig::default()).unwrap();
        let mut slow = fast.clone();
        slow.skip_cycles = false;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut unconverged = 0;
        for _ in 0..60 {
            let e = BinaryVector::from_bits(&(0..925).map(|_| rng.gen_bool(0.012) as u8).collect::<Vec<_>>());
            let s = h.mat_vec(&e).unwrap();
            let a = fast.bp_decode(&s).unwrap();
            let b = slow.bp_decode(&s).unwrap();
            assert_eq!(a, b);
            unconverged += !a.bp_converged as usize;
        }
        assert!(unconverged > 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn sweep_never_worse_than_osd0(seed in any::<u64>(), rows in 3usize..12, extra in 1usize..10) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let cols = rows + extra;
            let h = random_matrix(&mut rng, rows, cols, 0.3);
            let e = BinaryVector::from_bits(&(0..cols).map(|_| rng.gen_bool(0.3) as u8).collect::<Vec<_>>());
            let s = h.mat_vec(&e).unwrap();
            let rel: Vec<f64> = (0..cols).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let osd0 = osd_post_process(&h, &s, &rel, cfg(OsdMode::Osd0)).unwrap();
            let sweep = osd_post_process(&h, &s, &rel, cfg(OsdMode::CombinationSweep)).unwrap();
            prop_assert_eq!(h.mat_vec(&osd0.estimate).unwrap(), s.clone());
            prop_assert_eq!(h.mat_vec(&sweep.estimate).unwrap(), s);
            prop_assert!(sweep.estimate.weight() <= osd0.estimate.weight());
        }

        #[test]
        fn decode_is_syndrome_consistent(seed in any::<u64>(), variant in prop::sample::select(vec![BpVariant::ProductSum, BpVariant::MinSum])) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let h = random_matrix(&mut rng, 10, 18, 0.25);
            let e = BinaryVector::from_bits(&(0..18).map(|_| rng.gen_bool(0.2) as u8).collect::<Vec<_>>());
            let s = h.mat_vec(&e).unwrap();
            let config = DecoderConfig { bp_variant: variant, min_sum_scale: 0.75, ..Default::default() };
            let r = decode(&h, &s, &[0.1; 18], config).unwrap();
            prop_assert!(r.syndrome_consistent);
            prop_assert_eq!(h.mat_vec(&r.estimate).unwrap(), s);
        }
    }
}
