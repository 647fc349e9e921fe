//! Channel models: BSC, hard-decided BI-AWGN, and the SNR ↔ crossover map.

use crate::bitvec::BitVector;
use crate::error::{Error, Result};
use rand::distr::{Bernoulli, Distribution};
use rand::Rng;
use rand_distr::StandardNormal;

/// SNR in dB: `gamma = 10 log10(Es / (2 sigma^2))`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct SnrDb(f64);

impl SnrDb {
    pub fn new(db: f64) -> Result<Self> {
        if !db.is_finite() {
            return Err(Error::Domain(format!("SNR must be finite, got {db}")));
        }
        Ok(SnrDb(db))
    }

    pub fn db(self) -> f64 {
        self.0
    }

    /// Linear-scale SNR, `10^(gamma/10)`.
    pub fn linear(self) -> f64 {
        10f64.powf(self.0 / 10.0)
    }
}

/// Crossover probability of a binary symmetric channel, restricted to
/// `[0, 1/2]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct CrossoverProb(f64);

impl CrossoverProb {
    pub fn new(value: f64) -> Result<Self> {
        if !(0.0..=0.5).contains(&value) {
            return Err(Error::Domain(format!(
                "crossover probability must lie in [0, 1/2], got {value}"
            )));
        }
        Ok(CrossoverProb(value))
    }

    /// Clamps into `[0, 1/2]` instead of failing.
    pub fn clamped(value: f64) -> Self {
        CrossoverProb(value.clamp(0.0, 0.5))
    }

    pub fn zero() -> Self {
        CrossoverProb(0.0)
    }

    pub fn half() -> Self {
        CrossoverProb(0.5)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Which map is used between SNR and hard-decision error probability.
///
/// `Paper` evaluates the Gaussian tail at the linear SNR itself, so the
/// matching signal model is a BSC with exactly that flip probability.
/// `Physical` is the textbook antipodal-signaling error rate
/// `Q(sqrt(2 * 10^(gamma/10)))` backed by true Gaussian noise samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QMapVariant {
    Paper,
    Physical,
}

/// Upper tail of the standard normal distribution,
/// `integral of phi(t) from x to infinity`, via the complementary error
/// function (absolute accuracy well below 1e-12).
pub fn std_normal_tail(x: f64) -> f64 {
    0.5 * libm::erfc(x / std::f64::consts::SQRT_2)
}

/// Hard-decision error probability for a given SNR.
pub fn crossover_from_snr(gamma: SnrDb, variant: QMapVariant) -> CrossoverProb {
    let linear = gamma.linear();
    let arg = match variant {
        QMapVariant::Paper => linear,
        QMapVariant::Physical => (2.0 * linear).sqrt(),
    };
    CrossoverProb::clamped(std_normal_tail(arg))
}

/// Search bracket for the SNR inversion, in dB.
const SNR_BRACKET: (f64, f64) = (-60.0, 60.0);

/// Inverse of [`crossover_from_snr`] for the same variant.
///
/// Bisection on the monotone map over [-60, 60] dB down to 1e-12 dB,
/// followed by two Newton polish steps. Round-trips within 1e-9 dB over
/// the operating range. Fails for `rho = 0` and `rho >= 1/2`, where the
/// estimate diverges.
pub fn snr_from_crossover(rho: CrossoverProb, variant: QMapVariant) -> Result<SnrDb> {
    let target = rho.value();
    if target <= 0.0 {
        return Err(Error::Divergence(
            "SNR diverges to +infinity as the crossover probability reaches 0".into(),
        ));
    }
    if target >= 0.5 {
        return Err(Error::Divergence(
            "SNR diverges to -infinity as the crossover probability reaches 1/2".into(),
        ));
    }

    let f = |g: f64| crossover_from_snr(SnrDb(g), variant).value() - target;
    let (mut lo, mut hi) = SNR_BRACKET;
    // f is decreasing: f(lo) >= 0 >= f(hi) for targets inside the bracket
    // range; extreme targets converge to the nearest endpoint.
    let mut iter = 0;
    while hi - lo > 1e-12 && iter < 200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iter += 1;
    }
    let mut gamma = 0.5 * (lo + hi);

    // Newton polish. d(rho)/d(gamma) through the chain rule; factor ln(10)/10
    // from the dB scale, halved for the amplitude variant.
    for _ in 0..2 {
        let linear = 10f64.powf(gamma / 10.0);
        let (arg, darg_dgamma) = match variant {
            QMapVariant::Paper => (linear, linear * std::f64::consts::LN_10 / 10.0),
            QMapVariant::Physical => {
                let a = (2.0 * linear).sqrt();
                (a, a * std::f64::consts::LN_10 / 20.0)
            }
        };
        let pdf = (-0.5 * arg * arg).exp() / (2.0 * std::f64::consts::PI).sqrt();
        let deriv = -pdf * darg_dgamma;
        if deriv == 0.0 || !deriv.is_finite() {
            break;
        }
        let candidate = gamma - f(gamma) / deriv;
        if candidate.is_finite()
            && (SNR_BRACKET.0..=SNR_BRACKET.1).contains(&candidate)
            && f(candidate).abs() <= f(gamma).abs()
        {
            gamma = candidate;
        }
    }
    Ok(SnrDb(gamma))
}

/// Samples `n` independent Bernoulli(rho) error indicators.
pub fn sample_bsc_errors<R: Rng>(n: usize, rho: CrossoverProb, rng: &mut R) -> BitVector {
    let dist = Bernoulli::new(rho.value()).expect("crossover probability is a valid probability");
    let mut v = BitVector::zeros(n);
    for i in 0..n {
        if dist.sample(rng) {
            v.set(i, true);
        }
    }
    v
}

/// Transmits `bits` over the hard-decided BI-AWGN channel and returns the
/// hard decisions.
///
/// Under the `Physical` variant, bit 0 maps to `+A` and bit 1 to `-A` with
/// `A = sqrt(2 * 10^(gamma/10))`, unit-variance Gaussian noise is added and
/// the sign is sliced. Under the `Paper` variant there is no concrete
/// signal-space model behind the map, so the channel is realized as a BSC
/// with flip probability [`crossover_from_snr`] — which keeps the sampler
/// and the estimator consistent within the variant.
pub fn sample_biawgn_hard<R: Rng>(
    bits: &BitVector,
    gamma: SnrDb,
    variant: QMapVariant,
    rng: &mut R,
) -> BitVector {
    match variant {
        QMapVariant::Paper => {
            let rho = crossover_from_snr(gamma, variant);
            let flips = sample_bsc_errors(bits.len(), rho, rng);
            bits ^ &flips
        }
        QMapVariant::Physical => {
            let amplitude = (2.0 * gamma.linear()).sqrt();
            let mut out = BitVector::zeros(bits.len());
            for i in 0..bits.len() {
                let signal = if bits.get(i) { -amplitude } else { amplitude };
                let noise: f64 = StandardNormal.sample(rng);
                out.set(i, signal + noise < 0.0);
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;

    #[test]
    fn normal_tail_at_zero_is_half() {
        assert_eq!(std_normal_tail(0.0), 0.5);
    }

    #[test]
    fn normal_tail_underflows_for_large_arguments() {
        assert_eq!(std_normal_tail(40.0), 0.0);
    }

    #[test]
    fn normal_tail_matches_quadrature_oracle() {
        // Composite Simpson integration of the standard normal density
        // over [1, 40]; the tail beyond 40 is below 1e-300.
        let density = |t: f64| (-0.5 * t * t).exp() / (2.0 * std::f64::consts::PI).sqrt();
        let (a, b) = (1.0f64, 40.0f64);
        let panels = 1 << 20;
        let h = (b - a) / panels as f64;
        let mut sum = density(a) + density(b);
        for i in 1..panels {
            let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
            sum += weight * density(a + i as f64 * h);
        }
        let oracle = sum * h / 3.0;
        assert!((oracle - 0.158_655_253_931_457_05).abs() < 1e-12);
        assert!((std_normal_tail(1.0) - oracle).abs() < 1e-12);
    }

    #[test]
    fn crossover_at_zero_db_paper() {
        // Tail of the standard normal at 1.0.
        let rho = crossover_from_snr(SnrDb::new(0.0).unwrap(), QMapVariant::Paper);
        assert!((rho.value() - 0.158_655_253_931_457_05).abs() < 1e-12);
    }

    #[test]
    fn crossover_limits() {
        for variant in [QMapVariant::Paper, QMapVariant::Physical] {
            let hi = crossover_from_snr(SnrDb::new(100.0).unwrap(), variant);
            assert_eq!(hi.value(), 0.0);
            let lo = crossover_from_snr(SnrDb::new(-100.0).unwrap(), variant);
            assert!(lo.value() > 0.4999 && lo.value() <= 0.5);
        }
    }

    #[test]
    fn snr_inversion_recovers_zero_db() {
        let rho = CrossoverProb::new(std_normal_tail(1.0)).unwrap();
        let gamma = snr_from_crossover(rho, QMapVariant::Paper).unwrap();
        assert!(gamma.db().abs() < 1e-9, "gamma = {}", gamma.db());
    }

    #[test]
    fn snr_inversion_diverges_at_boundaries() {
        for variant in [QMapVariant::Paper, QMapVariant::Physical] {
            assert!(matches!(
                snr_from_crossover(CrossoverProb::zero(), variant),
                Err(Error::Divergence(_))
            ));
            assert!(matches!(
                snr_from_crossover(CrossoverProb::half(), variant),
                Err(Error::Divergence(_))
            ));
        }
    }

    #[test]
    fn snr_round_trip_on_db_grid() {
        for variant in [QMapVariant::Paper, QMapVariant::Physical] {
            let mut g = -10.0;
            while g <= 10.0 {
                let gamma = SnrDb::new(g).unwrap();
                let back = snr_from_crossover(crossover_from_snr(gamma, variant), variant).unwrap();
                assert!(
                    (back.db() - g).abs() <= 1e-9,
                    "{variant:?} at {g} dB: {}",
                    back.db()
                );
                g += 0.25;
            }
        }
    }

    #[test]
    fn crossover_is_strictly_decreasing_in_snr() {
        for variant in [QMapVariant::Paper, QMapVariant::Physical] {
            let mut prev = f64::INFINITY;
            let mut g = -10.0;
            while g <= 10.0 {
                let r = crossover_from_snr(SnrDb::new(g).unwrap(), variant).value();
                assert!(r < prev, "{variant:?} not decreasing at {g} dB");
                prev = r;
                g += 0.1;
            }
        }
    }

    #[test]
    fn bsc_sampling_matches_rate() {
        let mut rng = rng_from_seed(11);
        let zero = sample_bsc_errors(1000, CrossoverProb::zero(), &mut rng);
        assert_eq!(zero.weight(), 0);

        let n = 1_000_000;
        for rho in [0.5, 0.11] {
            let v = sample_bsc_errors(n, CrossoverProb::new(rho).unwrap(), &mut rng);
            let rate = v.weight() as f64 / n as f64;
            let sigma = (rho * (1.0 - rho) / n as f64).sqrt();
            assert!(
                (rate - rho).abs() < 5.0 * sigma,
                "rho {rho}: rate {rate} outside 5 sigma"
            );
        }
    }

    #[test]
    fn biawgn_noiseless_is_identity() {
        let mut rng = rng_from_seed(3);
        let mut bits = BitVector::zeros(500);
        for i in (0..500).step_by(7) {
            bits.set(i, true);
        }
        for variant in [QMapVariant::Paper, QMapVariant::Physical] {
            let out = sample_biawgn_hard(&bits, SnrDb::new(60.0).unwrap(), variant, &mut rng);
            assert_eq!(out, bits);
        }
    }

    #[test]
    fn biawgn_flip_rate_matches_qmap() {
        let n = 1_000_000;
        let zeros = BitVector::zeros(n);
        let mut rng = rng_from_seed(17);
        for variant in [QMapVariant::Physical, QMapVariant::Paper] {
            let gamma = SnrDb::new(0.0).unwrap();
            let rho = crossover_from_snr(gamma, variant).value();
            let out = sample_biawgn_hard(&zeros, gamma, variant, &mut rng);
            let rate = out.weight() as f64 / n as f64;
            let sigma = (rho * (1.0 - rho) / n as f64).sqrt();
            assert!(
                (rate - rho).abs() < 5.0 * sigma,
                "{variant:?}: rate {rate} vs rho {rho}"
            );
        }
    }
}
