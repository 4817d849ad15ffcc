//! Linear dynamics model with per-weight uncertainty.

use nalgebra::{DMatrix, DVector};

use super::buffer::TrainingBuffer;
use crate::error::{Error, Result};
use crate::plant::{ControlVector, StateVector};

/// Mean dynamics x' = A_bar x + B_bar u with a standard deviation per
/// coefficient of the stacked [A_bar | B_bar] matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearDelta {
    pub a_bar: DMatrix<f64>,
    pub b_bar: DMatrix<f64>,
    /// n x (n+m): columns 0..n are state-coefficient sigmas, n.. are input.
    pub sigma: DMatrix<f64>,
}

impl LinearDelta {
    pub fn new(a_bar: DMatrix<f64>, b_bar: DMatrix<f64>, sigma: DMatrix<f64>) -> Result<Self> {
        let n = a_bar.nrows();
        let m = b_bar.ncols();
        if a_bar.ncols() != n || b_bar.nrows() != n {
            return Err(Error::dimension("A_bar must be n x n and B_bar n x m".into()));
        }
        if sigma.nrows() != n || sigma.ncols() != n + m {
            return Err(Error::dimension(format!(
                "sigma must be {n} x {}, got {} x {}",
                n + m,
                sigma.nrows(),
                sigma.ncols()
            )));
        }
        if sigma.iter().any(|&s| !(s >= 0.0)) {
            return Err(Error::config("sigma entries must be >= 0".into()));
        }
        Ok(LinearDelta { a_bar, b_bar, sigma })
    }

    /// Model with zero dynamics and zero uncertainty.
    pub fn zeros(n: usize, m: usize) -> Self {
        LinearDelta {
            a_bar: DMatrix::zeros(n, n),
            b_bar: DMatrix::zeros(n, m),
            sigma: DMatrix::zeros(n, n + m),
        }
    }

    pub fn state_dim(&self) -> usize {
        self.a_bar.nrows()
    }

    pub fn input_dim(&self) -> usize {
        self.b_bar.ncols()
    }

    pub fn predict(&self, x: &StateVector, u: &ControlVector) -> Result<StateVector> {
        if x.len() != self.state_dim() || u.len() != self.input_dim() {
            return Err(Error::dimension(format!(
                "predict got ({}, {}), model is ({}, {})",
                x.len(),
                u.len(),
                self.state_dim(),
                self.input_dim()
            )));
        }
        Ok(&self.a_bar * x + &self.b_bar * u)
    }

    /// Adds nominal matrices to the mean; sigma is unchanged (the nominal
    /// part is known exactly, uncertainty lives in the learned displacement).
    pub fn shifted_by(&self, a0: &DMatrix<f64>, b0: &DMatrix<f64>) -> Result<LinearDelta> {
        if a0.shape() != self.a_bar.shape() || b0.shape() != self.b_bar.shape() {
            return Err(Error::dimension("nominal matrices do not match model".into()));
        }
        Ok(LinearDelta {
            a_bar: &self.a_bar + a0,
            b_bar: &self.b_bar + b0,
            sigma: self.sigma.clone(),
        })
    }

    /// Predictive standard deviation per output dimension at input [x; u],
    /// treating coefficients as independent Gaussians.
    pub fn predictive_std(&self, x: &StateVector, u: &ControlVector) -> DVector<f64> {
        let n = self.state_dim();
        let mut out = DVector::zeros(n);
        for d in 0..n {
            let mut acc = 0.0;
            for j in 0..n {
                acc += self.sigma[(d, j)].powi(2) * x[j].powi(2);
            }
            for j in 0..self.input_dim() {
                acc += self.sigma[(d, n + j)].powi(2) * u[j].powi(2);
            }
            out[d] = acc.sqrt();
        }
        out
    }
}

/// Least-squares fit of next-states against stacked [state; control] inputs
/// with the default rank-deficient sigma prior of 1.0.
pub fn fit_linear_delta(buffer: &TrainingBuffer) -> Result<LinearDelta> {
    fit_linear_delta_with_prior(buffer, 1.0)
}

/// As [`fit_linear_delta`], with an explicit sigma prior for the
/// rank-deficient case.
///
/// Full-rank regressors give the ordinary least-squares solution with
/// coefficient standard errors; otherwise the minimum-norm solution is
/// returned and every sigma entry is set to `sigma_prior`.
pub fn fit_linear_delta_with_prior(buffer: &TrainingBuffer, sigma_prior: f64) -> Result<LinearDelta> {
    let (n, m) = buffer
        .dims()
        .ok_or_else(|| Error::NoModel("cannot fit an empty buffer".into()))?;
    let p = n + m;
    let rows = buffer.len();

    let mut x = DMatrix::zeros(rows, p);
    let mut y = DMatrix::zeros(rows, n);
    for (k, t) in buffer.iter().enumerate() {
        for j in 0..n {
            x[(k, j)] = t.state[j];
        }
        for j in 0..m {
            x[(k, n + j)] = t.control[j];
        }
        for d in 0..n {
            y[(k, d)] = t.next_state[d];
        }
    }

    let svd = x.clone().svd(true, true);
    let max_sv = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let rank_eps = (rows.max(p) as f64) * f64::EPSILON * max_sv.max(1e-300);
    let rank = svd.singular_values.iter().filter(|&&s| s > rank_eps).count();

    // Minimum-norm least squares via the pseudo-inverse.
    let w = svd
        .solve(&y, rank_eps)
        .map_err(|e| Error::numeric(format!("least squares failed: {e}")))?;

    let coeffs = w.transpose(); // n x p, row d = coefficients of output d
    let a_bar = coeffs.columns(0, n).into_owned();
    let b_bar = coeffs.columns(n, m).into_owned();

    let sigma = if rank < p || rows < p {
        DMatrix::from_element(n, p, sigma_prior)
    } else {
        // OLS standard errors: se(w_dj) = sqrt(s2_d * (X^T X)^-1_jj).
        let xtx = x.transpose() * &x;
        match xtx.try_inverse() {
            Some(g) => {
                let resid = &x * &w - &y;
                let dof = (rows - p).max(1) as f64;
                let mut sigma = DMatrix::zeros(n, p);
                for d in 0..n {
                    let rss: f64 = (0..rows).map(|k| resid[(k, d)].powi(2)).sum();
                    let s2 = rss / dof;
                    for j in 0..p {
                        sigma[(d, j)] = (s2 * g[(j, j)].max(0.0)).sqrt();
                    }
                }
                sigma
            }
            None => DMatrix::from_element(n, p, sigma_prior),
        }
    };

    LinearDelta::new(a_bar, b_bar, sigma)
}
