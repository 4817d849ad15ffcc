//! Standard normal CDF and quantiles.
//!
//! The planner replaces inverse-CDF calls with precomputed constants, one per
//! probability level. Quantiles are found by bisection on an erf-based CDF so
//! the crate needs no special-function dependency.

const FRAC_2_SQRT_PI: f64 = 1.128_379_167_095_512_6;

/// Error function via its Maclaurin series; accurate to ~1e-15 for |x| <= 2.
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    for n in 1..200 {
        term *= -x2 / n as f64;
        let add = term / (2 * n + 1) as f64;
        sum += add;
        if add.abs() < 1e-17 * sum.abs().max(1e-300) {
            break;
        }
    }
    FRAC_2_SQRT_PI * sum
}

/// erfc for x >= 2 via the Legendre continued fraction, evaluated bottom-up.
fn erfc_cf(x: f64) -> f64 {
    let mut t = 0.0;
    for k in (1..=120).rev() {
        t = (k as f64 / 2.0) / (x + t);
    }
    (-x * x).exp() / (x + t) * (FRAC_2_SQRT_PI / 2.0)
}

/// Complementary error function, accurate to roughly machine precision.
pub fn erfc(x: f64) -> f64 {
    let z = x.abs();
    let tail = if z < 2.0 { 1.0 - erf_series(z) } else { erfc_cf(z) };
    if x >= 0.0 {
        tail
    } else {
        2.0 - tail
    }
}

/// CDF of the standard normal distribution.
pub fn cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

/// Quantile of the standard normal distribution, by bisection on [`cdf`].
///
/// Accurate to the accuracy of the CDF itself; panics only on p outside (0,1).
pub fn quantile(p: f64) -> f64 {
    assert!(p > 0.0 && p < 1.0, "quantile requires p in (0,1), got {p}");
    let (mut lo, mut hi) = (-40.0_f64, 40.0_f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if cdf(mid) < p {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-13 {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Precomputed `phi^{-1}(1 - eps)` for a fixed list of probability levels.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantileTable {
    levels: Vec<f64>,
    quantiles: Vec<f64>,
}

impl QuantileTable {
    /// Build the table for the given epsilon levels (each in (0, 0.5)).
    pub fn for_levels(epsilons: &[f64]) -> Self {
        let quantiles = epsilons.iter().map(|&e| quantile(1.0 - e)).collect();
        QuantileTable {
            levels: epsilons.to_vec(),
            quantiles,
        }
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    /// `phi^{-1}(1 - eps)` for level index `p`.
    pub fn quantile_at(&self, p: usize) -> f64 {
        self.quantiles[p]
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}
