//! Phenomenological noise: independent data-qubit X flips and syndrome-bit
//! flips each round, and exact syndrome synthesis.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf2::{BinaryMatrix, BinaryVector};

/// Flip probability shared by data qubits and measurement outcomes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseParams {
    p: f64,
}

impl NoiseParams {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!("error rate {p} is outside [0, 1]")));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub(crate) fn data_rate(&self) -> f64 {
        self.p
    }

    pub(crate) fn measurement_rate(&self) -> f64 {
        self.p
    }
}

/// Errors drawn for one round: data flips `e` and measurement flips `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundSample {
    pub e: BinaryVector,
    pub u: BinaryVector,
}

/// Key of an independent random stream. Streams for distinct keys are
/// independent and do not depend on the order in which they are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StreamKey {
    pub master_seed: u64,
    pub trial: u64,
    pub round: u64,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl StreamKey {
    pub fn new(master_seed: u64, trial: u64, round: u64) -> Self {
        Self {
            master_seed,
            trial,
            round,
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut seed = [0u8; 32];
        let words = [
            splitmix64(self.master_seed),
            splitmix64(self.trial ^ 0x5851_f42d_4c95_7f2d),
            splitmix64(self.round ^ 0x1405_7b7e_f767_814f),
            splitmix64(self.master_seed ^ self.trial.rotate_left(21) ^ self.round.rotate_left(42)),
        ];
        for (chunk, w) in seed.chunks_mut(8).zip(words) {
            chunk.copy_from_slice(&w.to_le_bytes());
        }
        ChaCha8Rng::from_seed(seed)
    }
}

fn bernoulli_vector<R: Rng + ?Sized>(len: usize, p: f64, rng: &mut R) -> BinaryVector {
    let support = (0..len).filter(|_| rng.gen_bool(p)).collect();
    BinaryVector::from_sorted_unchecked(len, support)
}

/// Draws one round of noise on `n` data qubits and `m` syndrome bits.
pub fn sample_round<R: Rng + ?Sized>(n: usize, m: usize, params: NoiseParams, rng: &mut R) -> RoundSample {
    let e = bernoulli_vector(n, params.data_rate(), rng);
    let u = bernoulli_vector(m, params.measurement_rate(), rng);
    RoundSample { e, u }
}

/// `σ = H · cumulative_error + u` over GF(2).
pub fn synthesize_syndrome(
    h: &BinaryMatrix,
    cumulative_error: &BinaryVector,
    u: &BinaryVector,
) -> Result<BinaryVector> {
    if u.len() != h.rows() {
        return Err(Error::dims(format!(
            "measurement error of length {} for {} checks",
            u.len(),
            h.rows()
        )));
    }
    h.mat_vec(cumulative_error)?.add(u)
}
