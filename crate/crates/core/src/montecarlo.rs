//! Monte-Carlo validation of the i.i.d.-syndrome analysis.
//!
//! Trials either run the full pipeline on a real code — sample channel
//! errors for the all-zero codeword, compute the syndrome, estimate — or
//! draw the syndrome weight directly from the binomial law of the i.i.d.
//! model. Comparing the two quantifies how much syndrome-bit correlation
//! in a real code inflates the estimator spread.
//!
//! Transmitting the all-zero codeword is sufficient: the code is linear
//! and both channels are symmetric, so estimator statistics do not depend
//! on the codeword.

use crate::bitvec::BitVector;
use crate::channels::{
    crossover_from_snr, sample_biawgn_hard, sample_bsc_errors, CrossoverProb, QMapVariant, SnrDb,
};
use crate::codes::{build_regular_ldpc, ParityCheckMatrix};
use crate::error::{Error, Result};
use crate::estimators::{check_violation_prob, crossover_from_weight, snr_from_weight, SnrClamp};
use crate::rng::{derive_seed, rng_from_seed, SimRng};
use rand_distr::Distribution;
use rayon::prelude::*;

/// Where the parity-check structure comes from.
#[derive(Clone, Debug)]
pub enum CodeSource {
    /// An explicit matrix (must be check-regular).
    Matrix(ParityCheckMatrix),
    /// Parameters for [`build_regular_ldpc`]; the matrix is built once per
    /// run from its own seed, independent of the trial streams.
    Regular {
        n: usize,
        dv: usize,
        d: usize,
        seed: u64,
    },
    /// Check profile only — enough for i.i.d. syndrome draws, which never
    /// touch a matrix.
    Profile { m: usize, d: usize },
}

/// Channel the trials run over.
#[derive(Clone, Copy, Debug)]
pub enum ChannelModel {
    Bsc {
        rho: CrossoverProb,
    },
    BiAwgn {
        gamma: SnrDb,
        variant: QMapVariant,
        clamp: SnrClamp,
    },
}

/// Whether syndromes come from the code or from the i.i.d. model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SyndromeSource {
    /// Full pipeline: channel sample, syndrome of the real code, weight.
    Code,
    /// Weight drawn directly from Binomial(m, q).
    Iid,
}

/// One simulation run.
#[derive(Clone, Debug)]
pub struct SimConfig {
    pub code: CodeSource,
    pub channel: ChannelModel,
    pub trials: u64,
    pub seed: u64,
    pub syndrome_source: SyndromeSource,
}

/// Aggregated trial statistics.
///
/// `std` is the unbiased sample standard deviation; `mse` averages squared
/// deviations from the *true* channel parameter, not from the sample mean.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleStats {
    pub trials: u64,
    pub mean: f64,
    pub std: f64,
    pub mse: f64,
    pub min: f64,
    pub max: f64,
    pub seed: u64,
}

/// Trials per independently seeded chunk. Fixed, so the partition — and
/// with it every statistic — is independent of thread count.
const TRIALS_PER_CHUNK: u64 = 4096;

/// Running moments of one chunk, merged pairwise across chunks.
#[derive(Clone, Copy, Debug)]
struct MomentAccum {
    count: u64,
    mean: f64,
    m2: f64,
    sse_truth: f64,
    min: f64,
    max: f64,
}

impl MomentAccum {
    fn empty() -> Self {
        MomentAccum {
            count: 0,
            mean: 0.0,
            m2: 0.0,
            sse_truth: 0.0,
            min: f64::INFINITY,
            max: f64::NEG_INFINITY,
        }
    }

    fn push(&mut self, x: f64, truth: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
        let dev = x - truth;
        self.sse_truth += dev * dev;
        self.min = self.min.min(x);
        self.max = self.max.max(x);
    }

    fn merge(a: Self, b: Self) -> Self {
        if a.count == 0 {
            return b;
        }
        if b.count == 0 {
            return a;
        }
        let count = a.count + b.count;
        let delta = b.mean - a.mean;
        let mean = a.mean + delta * (b.count as f64 / count as f64);
        let m2 = a.m2 + b.m2 + delta * delta * (a.count as f64 * b.count as f64 / count as f64);
        MomentAccum {
            count,
            mean,
            m2,
            sse_truth: a.sse_truth + b.sse_truth,
            min: a.min.min(b.min),
            max: a.max.max(b.max),
        }
    }

    fn finalize(self, seed: u64) -> SampleStats {
        let std = if self.count >= 2 {
            (self.m2 / (self.count - 1) as f64).max(0.0).sqrt()
        } else {
            0.0
        };
        SampleStats {
            trials: self.count,
            mean: self.mean,
            std,
            mse: self.sse_truth / self.count as f64,
            min: self.min,
            max: self.max,
            seed,
        }
    }
}

/// Runs `trials` chunks in parallel and merges them in chunk order.
fn run_chunked<F>(trials: u64, seed: u64, truth: f64, trial_fn: F) -> SampleStats
where
    F: Fn(&mut SimRng) -> f64 + Sync,
{
    let chunks = trials.div_ceil(TRIALS_PER_CHUNK);
    let accums: Vec<MomentAccum> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = rng_from_seed(derive_seed(seed, chunk));
            let count = TRIALS_PER_CHUNK.min(trials - chunk * TRIALS_PER_CHUNK);
            let mut acc = MomentAccum::empty();
            for _ in 0..count {
                acc.push(trial_fn(&mut rng), truth);
            }
            acc
        })
        .collect();
    accums
        .into_iter()
        .fold(MomentAccum::empty(), MomentAccum::merge)
        .finalize(seed)
}

/// Resolved code structure: `(m, d, matrix if the source provides one)`.
struct ResolvedCode {
    m: usize,
    d: usize,
    matrix: Option<ParityCheckMatrix>,
}

fn resolve_code(config: &SimConfig) -> Result<ResolvedCode> {
    let need_matrix = config.syndrome_source == SyndromeSource::Code;
    match &config.code {
        CodeSource::Matrix(h) => {
            let d = h
                .degree_profile()
                .regular_degree()
                .ok_or_else(|| Error::config("simulation requires a check-regular matrix"))?;
            Ok(ResolvedCode {
                m: h.num_checks(),
                d,
                matrix: Some(h.clone()),
            })
        }
        CodeSource::Regular { n, dv, d, seed } => {
            let matrix = if need_matrix {
                Some(build_regular_ldpc(*n, *dv, *d, *seed)?)
            } else {
                if *d == 0 || *dv == 0 || n.checked_mul(*dv).is_none_or(|e| e % d != 0) {
                    return Err(Error::config(format!(
                        "invalid regular code parameters (n={n}, dv={dv}, d={d})"
                    )));
                }
                None
            };
            Ok(ResolvedCode {
                m: n * dv / d,
                d: *d,
                matrix,
            })
        }
        CodeSource::Profile { m, d } => {
            if need_matrix {
                return Err(Error::config(
                    "code syndrome source requires a matrix or construction parameters",
                ));
            }
            if *m == 0 || *d == 0 {
                return Err(Error::config("profile dimensions must be positive"));
            }
            Ok(ResolvedCode {
                m: *m,
                d: *d,
                matrix: None,
            })
        }
    }
}

fn validate_trials(config: &SimConfig) -> Result<()> {
    if config.trials == 0 {
        return Err(Error::config("at least one trial is required"));
    }
    Ok(())
}

/// Runs BSC trials: per trial, an error pattern is sampled (or an i.i.d.
/// weight drawn), the syndrome weight computed, and the crossover
/// probability estimated. Deterministic for a fixed config.
pub fn run_bsc_trials(config: &SimConfig) -> Result<SampleStats> {
    validate_trials(config)?;
    let rho = match config.channel {
        ChannelModel::Bsc { rho } => rho,
        ChannelModel::BiAwgn { .. } => {
            return Err(Error::config("run_bsc_trials expects a BSC channel"))
        }
    };
    let code = resolve_code(config)?;
    let (m, d) = (code.m, code.d);
    let truth = rho.value();

    let stats = match config.syndrome_source {
        SyndromeSource::Code => {
            let h = code.matrix.expect("matrix resolved for code source");
            let n = h.num_variables();
            run_chunked(config.trials, config.seed, truth, |rng| {
                let errors = sample_bsc_errors(n, rho, rng);
                let w = h.syndrome(&errors).expect("length matches").weight();
                crossover_from_weight(w, m, d).value()
            })
        }
        SyndromeSource::Iid => {
            let q = check_violation_prob(rho, d);
            let binom = rand_distr::Binomial::new(m as u64, q)
                .expect("violation probability is a valid probability");
            run_chunked(config.trials, config.seed, truth, |rng| {
                let w = binom.sample(rng) as usize;
                crossover_from_weight(w, m, d).value()
            })
        }
    };
    Ok(stats)
}

/// Runs BI-AWGN trials: per trial, hard decisions are sampled (or an
/// i.i.d. weight drawn) and the clamped SNR estimated, in dB.
pub fn run_awgn_trials(config: &SimConfig) -> Result<SampleStats> {
    validate_trials(config)?;
    let (gamma, variant, clamp) = match config.channel {
        ChannelModel::BiAwgn {
            gamma,
            variant,
            clamp,
        } => (gamma, variant, clamp),
        ChannelModel::Bsc { .. } => {
            return Err(Error::config("run_awgn_trials expects a BI-AWGN channel"))
        }
    };
    let code = resolve_code(config)?;
    let (m, d) = (code.m, code.d);
    let truth = gamma.db();

    let stats = match config.syndrome_source {
        SyndromeSource::Code => {
            let h = code.matrix.expect("matrix resolved for code source");
            let zeros = BitVector::zeros(h.num_variables());
            run_chunked(config.trials, config.seed, truth, |rng| {
                let decisions = sample_biawgn_hard(&zeros, gamma, variant, rng);
                let w = h.syndrome(&decisions).expect("length matches").weight();
                snr_from_weight(w, m, d, variant, clamp).db()
            })
        }
        SyndromeSource::Iid => {
            let q = check_violation_prob(crossover_from_snr(gamma, variant), d);
            let binom = rand_distr::Binomial::new(m as u64, q)
                .expect("violation probability is a valid probability");
            run_chunked(config.trials, config.seed, truth, |rng| {
                let w = binom.sample(rng) as usize;
                snr_from_weight(w, m, d, variant, clamp).db()
            })
        }
    };
    Ok(stats)
}
