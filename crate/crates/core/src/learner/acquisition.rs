//! Acquisition scores for active learning.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use super::buffer::TrainingBuffer;
use super::linear::LinearDelta;
use crate::error::{Error, Result};
use crate::plant::{ControlVector, StateVector};

/// Diversity of a candidate (control, predicted next state) against the
/// stored transitions:
///
/// sum_i [ sum_d |u_d - u_d^(i)| + beta * sum_d |x_d^pred - x_d^(i)| ]
///
/// where x^(i) is the stored next-state of sample i. Empty buffer scores 0.
pub fn diversity_score(
    buffer: &TrainingBuffer,
    u_candidate: &ControlVector,
    x_predicted: &StateVector,
    beta: f64,
) -> f64 {
    let mut score = 0.0;
    for t in buffer.iter() {
        for d in 0..u_candidate.len() {
            score += (u_candidate[d] - t.control[d]).abs();
        }
        if beta != 0.0 {
            for d in 0..x_predicted.len() {
                score += beta * (x_predicted[d] - t.next_state[d]).abs();
            }
        }
    }
    score
}

/// Monte Carlo expected model change at (x, u): candidate labels are sampled
/// from the model's predictive Gaussian and the squared-error loss gradient
/// norm at each label is averaged.
///
/// For the linear model the gradient of ||y - W xi||^2 in W has Frobenius
/// norm 2 * ||y - W xi|| * ||xi||.
pub fn model_change(
    model: &LinearDelta,
    x: &StateVector,
    u: &ControlVector,
    mc_samples: usize,
    seed: u64,
) -> Result<f64> {
    if mc_samples == 0 {
        return Err(Error::config("model_change needs mc_samples >= 1".into()));
    }
    let mean = model.predict(x, u)?;
    let std = model.predictive_std(x, u);
    let xi_norm = (x.norm_squared() + u.norm_squared()).sqrt();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = 0.0;
    for _ in 0..mc_samples {
        let mut resid_sq = 0.0;
        for d in 0..mean.len() {
            if std[d] > 0.0 {
                let dist = Normal::new(0.0, std[d])
                    .map_err(|e| Error::numeric(format!("label distribution: {e}")))?;
                let r: f64 = dist.sample(&mut rng);
                resid_sq += r * r;
            }
        }
        acc += 2.0 * resid_sq.sqrt() * xi_norm;
    }
    Ok(acc / mc_samples as f64)
}
