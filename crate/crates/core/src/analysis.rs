//! Exact and approximate moments of the syndrome-based estimators.
//!
//! Under the i.i.d. syndrome model, the syndrome weight `W` of `m` checks
//! is binomial with parameter `q = (1 - (1-2 rho)^d)/2`. Everything here
//! is an expectation over that weight distribution: estimator mean, bias
//! and MSE on the crossover side, their SNR-domain counterparts for the
//! clamped estimator, the Fisher information the syndrome carries about
//! `rho`, and the resulting biased Cramér-Rao lower bound on the MSE.

use crate::channels::{crossover_from_snr, CrossoverProb, QMapVariant, SnrDb};
use crate::error::{Error, Result};
use crate::estimators::{check_violation_prob, snr_from_weight, SnrClamp};

/// How the syndrome weight distribution is evaluated.
///
/// `Exact` is the log-domain binomial (practical up to `m` around 1e6).
/// `Poisson` and `Gaussian` are the classical approximations for small and
/// large `m*q`; `Auto` switches between all three.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PmfMode {
    Exact,
    Poisson,
    Gaussian,
    Auto,
}

impl PmfMode {
    /// Resolves `Auto` for a given `(m, q)`: exact up to `m = 2e4`, then
    /// Poisson while `m*q <= 50`, Gaussian beyond.
    pub fn resolve(self, m: usize, q: f64) -> PmfMode {
        match self {
            PmfMode::Auto => {
                if m <= 20_000 {
                    PmfMode::Exact
                } else if m as f64 * q <= 50.0 {
                    PmfMode::Poisson
                } else {
                    PmfMode::Gaussian
                }
            }
            other => other,
        }
    }
}

/// Distribution of the syndrome weight over `0..=m`.
#[derive(Clone, Debug)]
pub struct WeightPmf {
    probs: Vec<f64>,
    mode: PmfMode,
}

impl WeightPmf {
    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// The mode actually used (never `Auto`).
    pub fn mode(&self) -> PmfMode {
        self.mode
    }
}

/// Weight distribution for `m` checks with violation probability `q`.
///
/// All modes renormalize so the probabilities sum to 1 within 1e-12; the
/// approximations are additionally truncated to `0..=m`.
pub fn syndrome_weight_pmf(m: usize, q: f64, mode: PmfMode) -> WeightPmf {
    assert!((0.0..=0.5).contains(&q), "q = {q} outside [0, 1/2]");
    assert!(m >= 1);
    let resolved = mode.resolve(m, q);
    let mut probs = vec![0.0; m + 1];
    match resolved {
        PmfMode::Exact => {
            if q == 0.0 {
                probs[0] = 1.0;
            } else {
                let mf = m as f64;
                let ln_q = q.ln();
                let ln_1mq = (-q).ln_1p();
                let ln_fact_m = libm::lgamma(mf + 1.0);
                for (w, p) in probs.iter_mut().enumerate() {
                    let wf = w as f64;
                    let ln_coef = ln_fact_m - libm::lgamma(wf + 1.0) - libm::lgamma(mf - wf + 1.0);
                    *p = (ln_coef + wf * ln_q + (mf - wf) * ln_1mq).exp();
                }
            }
        }
        PmfMode::Poisson => {
            let lambda = m as f64 * q;
            if lambda == 0.0 {
                probs[0] = 1.0;
            } else {
                let ln_lambda = lambda.ln();
                for (w, p) in probs.iter_mut().enumerate() {
                    let wf = w as f64;
                    *p = (-lambda + wf * ln_lambda - libm::lgamma(wf + 1.0)).exp();
                }
            }
        }
        PmfMode::Gaussian => {
            let mean = m as f64 * q;
            let var = mean * (1.0 - q);
            if var == 0.0 {
                probs[0] = 1.0;
            } else {
                let sd = var.sqrt();
                for (w, p) in probs.iter_mut().enumerate() {
                    *p = gaussian_cell(w as f64, mean, sd);
                }
            }
        }
        PmfMode::Auto => unreachable!("resolved above"),
    }
    let total: f64 = probs.iter().sum();
    for p in &mut probs {
        *p /= total;
    }
    WeightPmf {
        probs,
        mode: resolved,
    }
}

/// Probability mass of the cell `[w - 1/2, w + 1/2]` under a normal law,
/// evaluated through the tail that stays numerically stable.
fn gaussian_cell(w: f64, mean: f64, sd: f64) -> f64 {
    use crate::channels::std_normal_tail;
    let a = (w - 0.5 - mean) / sd;
    let b = (w + 0.5 - mean) / sd;
    if a >= 0.0 {
        std_normal_tail(a) - std_normal_tail(b)
    } else if b <= 0.0 {
        std_normal_tail(-b) - std_normal_tail(-a)
    } else {
        1.0 - std_normal_tail(b) - std_normal_tail(-a)
    }
}

/// Mean of the crossover estimator:
/// `1/2 - 1/2 sum_{w=0}^{floor(m/2)} P(w) (1 - 2w/m)^(1/d)`.
pub fn estimator_mean_bsc(d: usize, rho: CrossoverProb, m: usize, mode: PmfMode) -> f64 {
    if rho.value() == 0.0 {
        return 0.0;
    }
    let q = check_violation_prob(rho, d);
    let pmf = syndrome_weight_pmf(m, q, mode);
    mean_from_pmf(d, m, pmf.probs())
}

fn mean_from_pmf(d: usize, m: usize, probs: &[f64]) -> f64 {
    let exponent = 1.0 / d as f64;
    let mf = m as f64;
    let mut acc = 0.0;
    for (w, &p) in probs.iter().enumerate().take(m / 2 + 1) {
        let t = 1.0 - 2.0 * (w as f64 / mf);
        acc += p * t.powf(exponent);
    }
    0.5 - 0.5 * acc
}

/// Bias of the crossover estimator: mean minus the true parameter.
pub fn estimator_bias_bsc(d: usize, rho: CrossoverProb, m: usize, mode: PmfMode) -> f64 {
    estimator_mean_bsc(d, rho, m, mode) - rho.value()
}

/// Mean squared error of the crossover estimator, evaluated through the
/// expanded form
/// `1/4 - 2 rho mu + rho^2
///  + 1/4 sum_{w=0}^{floor(m/2)} P(w) ((1-2w/m)^(2/d) - 2 (1-2w/m)^(1/d))`.
pub fn estimator_mse_bsc(d: usize, rho: CrossoverProb, m: usize, mode: PmfMode) -> f64 {
    if rho.value() == 0.0 {
        return 0.0;
    }
    let q = check_violation_prob(rho, d);
    let pmf = syndrome_weight_pmf(m, q, mode);
    let mu = mean_from_pmf(d, m, pmf.probs());
    mse_from_pmf(d, rho, m, pmf.probs(), mu)
}

fn mse_from_pmf(d: usize, rho: CrossoverProb, m: usize, probs: &[f64], mu: f64) -> f64 {
    let exponent = 1.0 / d as f64;
    let mf = m as f64;
    let r = rho.value();
    let mut acc = 0.0;
    for (w, &p) in probs.iter().enumerate().take(m / 2 + 1) {
        let t = 1.0 - 2.0 * (w as f64 / mf);
        let root = t.powf(exponent);
        acc += p * (root * root - 2.0 * root);
    }
    0.25 - 2.0 * r * mu + r * r + 0.25 * acc
}

/// Fisher information the syndrome carries about the crossover
/// probability: `4 m d^2 (1-2 rho)^(2d-2) / (1 - (1-2 rho)^(2d))`.
///
/// Diverges as `rho -> 0`. At `rho = 1/2` the limit is 0 for `d >= 2`;
/// for `d = 1` the expression is returned as divergent.
pub fn fisher_information(d: usize, rho: CrossoverProb, m: usize) -> Result<f64> {
    let r = rho.value();
    if r == 0.0 {
        return Err(Error::Divergence(
            "Fisher information is unbounded at rho = 0".into(),
        ));
    }
    if r == 0.5 {
        return if d >= 2 {
            Ok(0.0)
        } else {
            Err(Error::Divergence(
                "Fisher information expression is indeterminate at rho = 1/2 for d = 1".into(),
            ))
        };
    }
    let s = 1.0 - 2.0 * r;
    let df = d as f64;
    // 1 - s^(2d) evaluated as -expm1(2d ln s) to survive rho near 0.
    let denom = -f64::exp_m1(2.0 * df * s.ln());
    let numer = 4.0 * m as f64 * df * df * s.powi(2 * d as i32 - 2);
    Ok(numer / denom)
}

/// Derivative of the estimator mean with respect to the true crossover
/// probability, computed analytically through the pmf score function:
/// `dP(w)/dq = P(w) (w - mq) / (q (1-q))` and `dq/drho = d (1-2 rho)^(d-1)`.
pub fn mean_derivative(d: usize, rho: CrossoverProb, m: usize, mode: PmfMode) -> Result<f64> {
    let r = rho.value();
    if r == 0.0 {
        return Err(Error::Divergence(
            "mean derivative is evaluated on the open interval (0, 1/2)".into(),
        ));
    }
    if r == 0.5 && d == 1 {
        return Err(Error::Divergence(
            "mean derivative is indeterminate at rho = 1/2 for d = 1".into(),
        ));
    }
    let q = check_violation_prob(rho, d);
    let s = 1.0 - 2.0 * r;
    let dq_drho = d as f64 * s.powi(d as i32 - 1);
    let pmf = syndrome_weight_pmf(m, q, mode);
    let mf = m as f64;
    let exponent = 1.0 / d as f64;
    let score_scale = q * (1.0 - q);
    let mut acc = 0.0;
    for (w, &p) in pmf.probs().iter().enumerate().take(m / 2 + 1) {
        let t = 1.0 - 2.0 * (w as f64 / mf);
        let score = (w as f64 - mf * q) / score_scale;
        acc += p * score * t.powf(exponent);
    }
    Ok(-0.5 * dq_drho * acc)
}

/// Biased Cramér-Rao lower bound on the MSE:
/// `(d mu / d rho)^2 / I(rho) + bias^2`.
pub fn biased_crb_mse_bound(d: usize, rho: CrossoverProb, m: usize, mode: PmfMode) -> Result<f64> {
    let info = fisher_information(d, rho, m)?;
    if info == 0.0 {
        return Err(Error::Divergence(
            "Cramér-Rao bound is indeterminate where the Fisher information vanishes".into(),
        ));
    }
    let slope = mean_derivative(d, rho, m, mode)?;
    let bias = estimator_bias_bsc(d, rho, m, mode);
    Ok(slope * slope / info + bias * bias)
}

/// Moments of an estimator at one parameter point.
#[derive(Clone, Copy, Debug)]
pub struct MomentReport {
    pub mean: f64,
    pub bias: f64,
    pub mse: f64,
    /// Fisher information, absent where it diverges.
    pub fisher: Option<f64>,
    /// Biased Cramér-Rao MSE bound, absent where it diverges.
    pub crb_mse_bound: Option<f64>,
    /// Pmf mode actually used.
    pub mode: PmfMode,
}

/// Full BSC-side report: mean, bias, MSE, Fisher information and CRB
/// bound, sharing a single pmf evaluation.
pub fn bsc_report(d: usize, rho: CrossoverProb, m: usize, mode: PmfMode) -> MomentReport {
    let q = check_violation_prob(rho, d);
    let resolved = mode.resolve(m, q);
    if rho.value() == 0.0 {
        return MomentReport {
            mean: 0.0,
            bias: 0.0,
            mse: 0.0,
            fisher: None,
            crb_mse_bound: None,
            mode: resolved,
        };
    }
    let pmf = syndrome_weight_pmf(m, q, resolved);
    let mean = mean_from_pmf(d, m, pmf.probs());
    let mse = mse_from_pmf(d, rho, m, pmf.probs(), mean);
    let fisher = fisher_information(d, rho, m).ok();
    let crb = biased_crb_mse_bound(d, rho, m, resolved).ok();
    MomentReport {
        mean,
        bias: mean - rho.value(),
        mse,
        fisher,
        crb_mse_bound: crb,
        mode: pmf.mode(),
    }
}

/// Moments of the clamped SNR estimator at a true SNR `gamma`.
///
/// The weight distribution uses `q` for the crossover probability the
/// variant assigns to `gamma`; the estimate for each weight follows the
/// clamped estimator. Exact mode sums over every weight with nonzero mass.
pub fn estimator_moments_snr(
    d: usize,
    gamma: SnrDb,
    m: usize,
    variant: QMapVariant,
    clamp: SnrClamp,
    mode: PmfMode,
) -> MomentReport {
    let rho = crossover_from_snr(gamma, variant);
    let q = check_violation_prob(rho, d);
    let pmf = syndrome_weight_pmf(m, q, mode);
    let g = gamma.db();
    let mut mean = 0.0;
    let mut mse = 0.0;
    for (w, &p) in pmf.probs().iter().enumerate() {
        if p == 0.0 {
            continue;
        }
        let est = snr_from_weight(w, m, d, variant, clamp).db();
        mean += p * est;
        mse += p * (est - g) * (est - g);
    }
    MomentReport {
        mean,
        bias: mean - g,
        mse,
        fisher: None,
        crb_mse_bound: None,
        mode: pmf.mode(),
    }
}
