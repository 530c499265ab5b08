//! Discrete power-law fitting for degree distributions.
//!
//! Maximum-likelihood estimate of the exponent of P(k) ~ k^-gamma, with the
//! lower cutoff xmin chosen to minimize the Kolmogorov-Smirnov distance
//! between the empirical tail and the fitted model.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct PowerLawFit {
    pub gamma: f64,
    pub xmin: usize,
    pub ks_stat: f64,
    /// Set when the tail has too little variety for the fit to mean much.
    pub degenerate: bool,
}

const MIN_OBSERVATIONS: usize = 50;
const MIN_TAIL: usize = 10;
const GAMMA_LO: f64 = 1.05;
const GAMMA_HI: f64 = 6.0;

/// Hurwitz zeta sum_{j>=0} (q+j)^-s, for s > 1, q >= 1.
///
/// Direct summation of the head plus an Euler-Maclaurin tail correction.
pub fn hurwitz_zeta(s: f64, q: f64) -> f64 {
    const HEAD: usize = 40;
    let mut sum = 0.0;
    for j in 0..HEAD {
        sum += (q + j as f64).powf(-s);
    }
    let m = q + HEAD as f64;
    // integral tail + boundary + two Euler-Maclaurin derivative corrections
    sum + m.powf(1.0 - s) / (s - 1.0) + 0.5 * m.powf(-s) + s * m.powf(-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * m.powf(-s - 3.0) / 720.0
}

fn log_likelihood(gamma: f64, xmin: f64, n: f64, sum_log: f64) -> f64 {
    -n * hurwitz_zeta(gamma, xmin).ln() - gamma * sum_log
}

fn mle_gamma(xmin: f64, n: f64, sum_log: f64) -> f64 {
    // golden-section maximization; the likelihood is unimodal in gamma
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (GAMMA_LO, GAMMA_HI);
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    let mut fc = log_likelihood(c, xmin, n, sum_log);
    let mut fd = log_likelihood(d, xmin, n, sum_log);
    for _ in 0..80 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = log_likelihood(c, xmin, n, sum_log);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = log_likelihood(d, xmin, n, sum_log);
        }
    }
    0.5 * (a + b)
}

fn ks_distance(tail: &[usize], gamma: f64, xmin: usize) -> f64 {
    let n = tail.len() as f64;
    let z = hurwitz_zeta(gamma, xmin as f64);
    let mut ks = 0.0f64;
    let mut seen = 0usize;
    let mut i = 0usize;
    while i < tail.len() {
        let k = tail[i];
        let mut j = i;
        while j < tail.len() && tail[j] == k {
            j += 1;
        }
        seen += j - i;
        let ecdf = seen as f64 / n;
        let model = 1.0 - hurwitz_zeta(gamma, (k + 1) as f64) / z;
        ks = ks.max((ecdf - model).abs());
        i = j;
    }
    ks
}

/// Fit P(k) ~ k^-gamma over the observed degrees.
pub fn fit_power_law(degrees: &[usize]) -> Result<PowerLawFit> {
    let mut data: Vec<usize> = degrees.iter().copied().filter(|&k| k >= 1).collect();
    if data.len() < MIN_OBSERVATIONS {
        return Err(Error::InsufficientData(format!(
            "power-law fit needs >= {MIN_OBSERVATIONS} positive degrees, got {}",
            data.len()
        )));
    }
    data.sort_unstable();
    let mut candidates: Vec<usize> = data.to_vec();
    candidates.dedup();
    if candidates.len() < 2 {
        // flat degree sequence: no tail to fit
        return Ok(PowerLawFit {
            gamma: f64::NAN,
            xmin: candidates[0],
            ks_stat: f64::NAN,
            degenerate: true,
        });
    }
    // cap the scan for very wide degree ranges
    if candidates.len() > 200 {
        let step = candidates.len() as f64 / 200.0;
        candidates = (0..200)
            .map(|i| candidates[(i as f64 * step) as usize])
            .collect();
        candidates.dedup();
    }

    let mut best: Option<PowerLawFit> = None;
    for &xmin in &candidates {
        let start = data.partition_point(|&k| k < xmin);
        let tail = &data[start..];
        if tail.len() < MIN_TAIL {
            break;
        }
        if tail.first() == tail.last() {
            continue;
        }
        let n = tail.len() as f64;
        let sum_log: f64 = tail.iter().map(|&k| (k as f64).ln()).sum();
        let gamma = mle_gamma(xmin as f64, n, sum_log);
        let ks = ks_distance(tail, gamma, xmin);
        if best.as_ref().is_none_or(|b| ks < b.ks_stat) {
            best = Some(PowerLawFit {
                gamma,
                xmin,
                ks_stat: ks,
                degenerate: false,
            });
        }
    }
    Ok(best.unwrap_or(PowerLawFit {
        gamma: f64::NAN,
        xmin: data[0],
        ks_stat: f64::NAN,
        degenerate: true,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Inverse-CDF sampler for the exact discrete zeta(s) law.
    fn zeta_sample(s: f64, n: usize, seed: u64) -> Vec<usize> {
        let z = hurwitz_zeta(s, 1.0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| {
                let u: f64 = rng.gen::<f64>() * z;
                let mut cum = 0.0;
                let mut k = 1usize;
                loop {
                    cum += (k as f64).powf(-s);
                    if cum >= u || k > 2_000_000 {
                        return k;
                    }
                    k += 1;
                }
            })
            .collect()
    }

    #[test]
    fn hurwitz_zeta_matches_reference() {
        // zeta(2) = pi^2/6
        let z = hurwitz_zeta(2.0, 1.0);
        assert!((z - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-10, "{z}");
        // zeta(3) = 1.2020569...
        assert!((hurwitz_zeta(3.0, 1.0) - 1.2020569031595942).abs() < 1e-10);
        // shifted: zeta(2, 2) = zeta(2) - 1
        assert!((hurwitz_zeta(2.0, 2.0) - (z - 1.0)).abs() < 1e-10);
    }

    #[test]
    fn recovers_synthetic_exponent() {
        let sample = zeta_sample(2.5, 10_000, 7);
        let fit = fit_power_law(&sample).unwrap();
        assert!(!fit.degenerate);
        assert!(
            (fit.gamma - 2.5).abs() < 0.1,
            "gamma {} xmin {}",
            fit.gamma,
            fit.xmin
        );
    }

    #[test]
    fn too_few_observations() {
        assert!(fit_power_law(&[3; 10]).is_err());
    }

    #[test]
    fn flat_degrees_flagged_degenerate() {
        let fit = fit_power_law(&[4; 100]).unwrap();
        assert!(fit.degenerate);
    }
}
