//! Maximum-likelihood channel estimators based on the syndrome weight.
//!
//! A degree-`d` parity check over a BSC with crossover probability `rho` is
//! violated with probability `q = (1 - (1-2 rho)^d) / 2`. The syndrome
//! weight `w` of `m` checks is (approximately) binomial in `q`, so `w/m`
//! estimates `q` and the map inverts in closed form to an estimate of
//! `rho`. The SNR estimator chains the crossover estimate through the
//! inverse Gaussian tail and clamps the result.

use crate::channels::{snr_from_crossover, CrossoverProb, QMapVariant, SnrDb};
use crate::codes::{DegreeProfile, ParityCheckMatrix};
use crate::error::{Error, Result};
use crate::BitVector;

/// Probability that a parity check of degree `d` is violated:
/// `(1 - (1-2 rho)^d) / 2`.
pub fn check_violation_prob(rho: CrossoverProb, d: usize) -> f64 {
    assert!(d >= 1, "check degree must be at least 1");
    let base = 1.0 - 2.0 * rho.value();
    0.5 * (1.0 - powi_clamped(base, d))
}

/// Inverse of [`check_violation_prob`] in `rho`:
/// `(1 - (1-2q)^(1/d)) / 2` for `q` in `[0, 1/2]`.
pub fn crossover_from_violation_prob(q: f64, d: usize) -> Result<CrossoverProb> {
    assert!(d >= 1, "check degree must be at least 1");
    if !(0.0..=0.5).contains(&q) {
        return Err(Error::Domain(format!(
            "violation probability must lie in [0, 1/2], got {q}"
        )));
    }
    let root = (1.0 - 2.0 * q).powf(1.0 / d as f64);
    Ok(CrossoverProb::clamped(0.5 * (1.0 - root)))
}

fn powi_clamped(base: f64, d: usize) -> f64 {
    debug_assert!(d <= i32::MAX as usize);
    base.powi(d as i32)
}

/// Syndrome weight observation together with the check-degree profile
/// it was measured against.
#[derive(Clone, Debug)]
pub struct SyndromeObservation {
    weight: usize,
    len: usize,
    profile: DegreeProfile,
    per_degree_weights: Option<Vec<usize>>,
}

impl SyndromeObservation {
    /// Observation for a check-regular code: weight `w` out of `m` checks
    /// of degree `d`.
    pub fn regular(w: usize, m: usize, d: usize) -> Self {
        assert!(w <= m, "syndrome weight {w} exceeds length {m}");
        SyndromeObservation {
            weight: w,
            len: m,
            profile: DegreeProfile::regular(d, m),
            per_degree_weights: None,
        }
    }

    /// Observation with per-degree syndrome weights aligned with `profile`.
    pub fn irregular(profile: DegreeProfile, per_degree_weights: Vec<usize>) -> Result<Self> {
        if per_degree_weights.len() != profile.entries().len() {
            return Err(Error::config(format!(
                "{} weights for {} degree classes",
                per_degree_weights.len(),
                profile.entries().len()
            )));
        }
        for (&w_j, &(d_j, m_j)) in per_degree_weights.iter().zip(profile.entries()) {
            if w_j > m_j {
                return Err(Error::config(format!(
                    "weight {w_j} exceeds count {m_j} for degree {d_j}"
                )));
            }
        }
        Ok(SyndromeObservation {
            weight: per_degree_weights.iter().sum(),
            len: profile.total_checks(),
            profile,
            per_degree_weights: Some(per_degree_weights),
        })
    }

    /// Splits a syndrome into per-degree weights against its matrix.
    pub fn from_syndrome(h: &ParityCheckMatrix, s: &BitVector) -> Result<Self> {
        if s.len() != h.num_checks() {
            return Err(Error::Dimension(format!(
                "syndrome length {} does not match {} checks",
                s.len(),
                h.num_checks()
            )));
        }
        let profile = h.degree_profile();
        let mut weights = vec![0usize; profile.entries().len()];
        for (j, row) in h.rows().enumerate() {
            if s.get(j) {
                let class = profile
                    .entries()
                    .iter()
                    .position(|&(d, _)| d == row.len())
                    .expect("row degree present in profile");
                weights[class] += 1;
            }
        }
        SyndromeObservation::irregular(profile, weights)
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Syndrome length (total number of checks).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn profile(&self) -> &DegreeProfile {
        &self.profile
    }

    pub fn per_degree_weights(&self) -> Option<&[usize]> {
        self.per_degree_weights.as_deref()
    }
}

/// ML estimate of the check violation probability: `w / m`.
pub fn estimate_violation_prob(obs: &SyndromeObservation) -> f64 {
    obs.weight as f64 / obs.len as f64
}

/// Closed-form ML estimate of the crossover probability for a
/// check-regular code:
/// `(1 - (1 - 2w/m)^(1/d)) / 2` for `w/m <= 1/2`, and `1/2` beyond.
pub fn estimate_crossover(obs: &SyndromeObservation, d: usize) -> CrossoverProb {
    debug_assert_eq!(obs.profile.regular_degree(), Some(d), "regular profile");
    crossover_from_weight(obs.weight, obs.len, d)
}

pub(crate) fn crossover_from_weight(w: usize, m: usize, d: usize) -> CrossoverProb {
    if 2 * w > m {
        return CrossoverProb::half();
    }
    let ratio = w as f64 / m as f64;
    let root = (1.0 - 2.0 * ratio).powf(1.0 / d as f64);
    CrossoverProb::clamped(0.5 * (1.0 - root))
}

/// Log-likelihood evaluation guard: the optimizer never evaluates the
/// logarithms at the exact boundary.
const RHO_GUARD: f64 = 1e-15;

/// Numeric ML estimate of the crossover probability for an irregular
/// check-degree profile.
///
/// Maximizes `sum_j w_j ln f_dj(rho) + (m_j - w_j) ln(1 - f_dj(rho))` over
/// `[0, 1/2]` with a 1001-point grid scan refined by golden-section search
/// to an absolute tolerance of 1e-10; the boundary candidates are compared
/// explicitly.
pub fn estimate_crossover_irregular(obs: &SyndromeObservation) -> Result<CrossoverProb> {
    let weights = obs.per_degree_weights().ok_or_else(|| {
        Error::config("irregular estimation requires per-degree syndrome weights")
    })?;
    let entries = obs.profile.entries();

    // Boundary maximizers, decided on the integer data.
    if weights.iter().all(|&w| w == 0) {
        return Ok(CrossoverProb::zero());
    }
    if weights
        .iter()
        .zip(entries)
        .all(|(&w_j, &(_, m_j))| 2 * w_j >= m_j)
    {
        return Ok(CrossoverProb::half());
    }

    let log_likelihood = |rho: f64| -> f64 {
        let rho = rho.clamp(RHO_GUARD, 0.5 - RHO_GUARD);
        let rho = CrossoverProb::clamped(rho);
        let mut ll = 0.0;
        for (&w_j, &(d_j, m_j)) in weights.iter().zip(entries) {
            let f = check_violation_prob(rho, d_j);
            if w_j > 0 {
                ll += w_j as f64 * f.ln();
            }
            if w_j < m_j {
                ll += (m_j - w_j) as f64 * (1.0 - f).ln();
            }
        }
        ll
    };

    // Grid scan.
    const GRID: usize = 1000;
    let mut best_i = 0;
    let mut best_ll = f64::NEG_INFINITY;
    for i in 0..=GRID {
        let rho = 0.5 * i as f64 / GRID as f64;
        let ll = log_likelihood(rho);
        if ll > best_ll {
            best_ll = ll;
            best_i = i;
        }
    }

    // Golden-section refinement on the bracketing interval.
    let mut a = 0.5 * best_i.saturating_sub(1) as f64 / GRID as f64;
    let mut b = 0.5 * (best_i + 1).min(GRID) as f64 / GRID as f64;
    let inv_phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = log_likelihood(x1);
    let mut f2 = log_likelihood(x2);
    while b - a > 1e-12 {
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = log_likelihood(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = log_likelihood(x2);
        }
    }
    let interior = 0.5 * (a + b);
    let interior_ll = log_likelihood(interior);

    // Exact boundary log-likelihoods under the 0*ln(0) = 0 convention.
    let m_total: usize = entries.iter().map(|&(_, m_j)| m_j).sum();
    let ll_zero = if weights.iter().all(|&w| w == 0) {
        0.0
    } else {
        f64::NEG_INFINITY
    };
    let ll_half = -(m_total as f64) * std::f64::consts::LN_2;

    let mut best = (interior, interior_ll);
    if ll_zero > best.1 {
        best = (0.0, ll_zero);
    }
    if ll_half > best.1 {
        best = (0.5, ll_half);
    }
    Ok(CrossoverProb::clamped(best.0))
}

/// Interval the SNR estimate is clamped into.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SnrClamp {
    gamma_min: SnrDb,
    gamma_max: SnrDb,
}

impl SnrClamp {
    pub fn new(gamma_min: SnrDb, gamma_max: SnrDb) -> Result<Self> {
        if gamma_min.db() >= gamma_max.db() {
            return Err(Error::config(format!(
                "empty SNR clamp [{}, {}]",
                gamma_min.db(),
                gamma_max.db()
            )));
        }
        Ok(SnrClamp {
            gamma_min,
            gamma_max,
        })
    }

    pub fn gamma_min(self) -> SnrDb {
        self.gamma_min
    }

    pub fn gamma_max(self) -> SnrDb {
        self.gamma_max
    }
}

/// Clamped ML estimate of the SNR from a syndrome weight observation.
///
/// The unclamped estimate is the inverse Q-map of the crossover estimate;
/// it diverges for `w = 0` (to `+inf`, clamped to `gamma_max`) and for
/// `w >= m/2` (to `-inf`, clamped to `gamma_min`).
pub fn estimate_snr_db(
    obs: &SyndromeObservation,
    d: usize,
    variant: QMapVariant,
    clamp: SnrClamp,
) -> SnrDb {
    debug_assert_eq!(obs.profile.regular_degree(), Some(d), "regular profile");
    snr_from_weight(obs.weight, obs.len, d, variant, clamp)
}

pub(crate) fn snr_from_weight(
    w: usize,
    m: usize,
    d: usize,
    variant: QMapVariant,
    clamp: SnrClamp,
) -> SnrDb {
    if w == 0 {
        return clamp.gamma_max;
    }
    if 2 * w >= m {
        return clamp.gamma_min;
    }
    let rho = crossover_from_weight(w, m, d);
    match snr_from_crossover(rho, variant) {
        Ok(gamma) => {
            let clamped = gamma.db().clamp(clamp.gamma_min.db(), clamp.gamma_max.db());
            SnrDb::new(clamped).expect("clamped value is finite")
        }
        // rho estimate collapsed to a boundary despite 0 < w < m/2;
        // only reachable through floating-point rounding of w/m.
        Err(_) => {
            if 2 * w < m {
                clamp.gamma_max
            } else {
                clamp.gamma_min
            }
        }
    }
}
