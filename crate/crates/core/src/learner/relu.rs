//! Small feed-forward network: one ReLU layer, then two linear layers.

use nalgebra::{DMatrix, DVector};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use super::buffer::TrainingBuffer;
use crate::error::{Error, Result};
use crate::plant::{ControlVector, StateVector};

/// Weights of the network. The stacked input is [x; u] of length n+m:
///
/// hidden  = relu(w0^T input)      (H)
/// middle  = w1^T hidden           (H2)
/// output  = w2^T middle           (n)
#[derive(Debug, Clone, PartialEq)]
pub struct ReluNet {
    /// (n+m) x H
    pub w0: DMatrix<f64>,
    /// H x H2
    pub w1: DMatrix<f64>,
    /// H2 x n
    pub w2: DMatrix<f64>,
}

impl ReluNet {
    pub fn new(w0: DMatrix<f64>, w1: DMatrix<f64>, w2: DMatrix<f64>) -> Result<Self> {
        if w0.ncols() != w1.nrows() || w1.ncols() != w2.nrows() {
            return Err(Error::dimension(format!(
                "layer shapes do not chain: {:?} {:?} {:?}",
                w0.shape(),
                w1.shape(),
                w2.shape()
            )));
        }
        if w0.iter().chain(w1.iter()).chain(w2.iter()).any(|v| !v.is_finite()) {
            return Err(Error::numeric("network weights must be finite".into()));
        }
        Ok(ReluNet { w0, w1, w2 })
    }

    pub fn input_dim(&self) -> usize {
        self.w0.nrows()
    }

    pub fn output_dim(&self) -> usize {
        self.w2.ncols()
    }

    pub fn hidden_dims(&self) -> (usize, usize) {
        (self.w0.ncols(), self.w1.ncols())
    }

    pub fn forward(&self, input: &DVector<f64>) -> DVector<f64> {
        let pre = self.w0.transpose() * input;
        let hidden = pre.map(|v| v.max(0.0));
        let middle = self.w1.transpose() * hidden;
        self.w2.transpose() * middle
    }

    /// Point prediction of the next state from (x, u).
    pub fn predict(&self, x: &StateVector, u: &ControlVector) -> Result<StateVector> {
        if x.len() + u.len() != self.input_dim() {
            return Err(Error::dimension(format!(
                "predict got {} inputs, net expects {}",
                x.len() + u.len(),
                self.input_dim()
            )));
        }
        let mut input = DVector::zeros(self.input_dim());
        for (i, v) in x.iter().enumerate() {
            input[i] = *v;
        }
        for (i, v) in u.iter().enumerate() {
            input[x.len() + i] = *v;
        }
        Ok(self.forward(&input))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ReluTrainConfig {
    pub hidden: usize,
    pub hidden2: usize,
    pub epochs: usize,
    pub learning_rate: f64,
    pub seed: u64,
}

impl Default for ReluTrainConfig {
    fn default() -> Self {
        ReluTrainConfig {
            hidden: 16,
            hidden2: 8,
            epochs: 1500,
            learning_rate: 0.02,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReluFit {
    pub net: ReluNet,
    pub final_mse: f64,
    pub epochs_run: usize,
}

struct Adam {
    m: DMatrix<f64>,
    v: DMatrix<f64>,
    t: f64,
}

impl Adam {
    fn new(rows: usize, cols: usize) -> Self {
        Adam {
            m: DMatrix::zeros(rows, cols),
            v: DMatrix::zeros(rows, cols),
            t: 0.0,
        }
    }

    fn step(&mut self, w: &mut DMatrix<f64>, grad: &DMatrix<f64>, lr: f64) {
        const B1: f64 = 0.9;
        const B2: f64 = 0.999;
        const EPS: f64 = 1e-8;
        self.t += 1.0;
        for i in 0..w.nrows() {
            for j in 0..w.ncols() {
                let g = grad[(i, j)];
                self.m[(i, j)] = B1 * self.m[(i, j)] + (1.0 - B1) * g;
                self.v[(i, j)] = B2 * self.v[(i, j)] + (1.0 - B2) * g * g;
                let mh = self.m[(i, j)] / (1.0 - B1.powf(self.t));
                let vh = self.v[(i, j)] / (1.0 - B2.powf(self.t));
                w[(i, j)] -= lr * mh / (vh.sqrt() + EPS);
            }
        }
    }
}

/// Full-batch gradient fit of the one-step prediction error (mean squared
/// error over the buffer). Deterministic for a fixed seed.
pub fn fit_relu_net(buffer: &TrainingBuffer, config: &ReluTrainConfig) -> Result<ReluFit> {
    let (n, m) = buffer
        .dims()
        .ok_or_else(|| Error::NoModel("cannot fit an empty buffer".into()))?;
    let p = n + m;
    let (h, h2) = (config.hidden.max(1), config.hidden2.max(1));
    let samples = buffer.len() as f64;

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut init = |rows: usize, cols: usize| -> DMatrix<f64> {
        let scale = (6.0 / (rows + cols) as f64).sqrt();
        DMatrix::from_fn(rows, cols, |_, _| rng.random_range(-scale..scale))
    };
    let mut w0 = init(p, h);
    let mut w1 = init(h, h2);
    let mut w2 = init(h2, n);

    let inputs: Vec<DVector<f64>> = buffer
        .iter()
        .map(|t| {
            let mut v = DVector::zeros(p);
            for (i, s) in t.state.iter().enumerate() {
                v[i] = *s;
            }
            for (i, c) in t.control.iter().enumerate() {
                v[n + i] = *c;
            }
            v
        })
        .collect();
    let targets: Vec<DVector<f64>> = buffer.iter().map(|t| t.next_state.clone()).collect();

    let mut adam0 = Adam::new(p, h);
    let mut adam1 = Adam::new(h, h2);
    let mut adam2 = Adam::new(h2, n);
    let mut mse = f64::INFINITY;

    for epoch in 0..config.epochs {
        let mut g0 = DMatrix::zeros(p, h);
        let mut g1 = DMatrix::zeros(h, h2);
        let mut g2 = DMatrix::zeros(h2, n);
        let mut loss = 0.0;
        for (input, target) in inputs.iter().zip(&targets) {
            let pre = w0.transpose() * input;
            let hidden = pre.map(|v| v.max(0.0));
            let middle = w1.transpose() * &hidden;
            let out = w2.transpose() * &middle;
            let err = &out - target;
            loss += err.norm_squared();

            // d loss / d out = 2 err (per sample).
            let d_out = err * (2.0 / samples);
            g2 += &middle * d_out.transpose();
            let d_middle = &w2 * &d_out;
            g1 += &hidden * d_middle.transpose();
            let mut d_hidden = &w1 * d_middle;
            for i in 0..h {
                if pre[i] <= 0.0 {
                    d_hidden[i] = 0.0;
                }
            }
            g0 += input * d_hidden.transpose();
        }
        mse = loss / samples;
        if !mse.is_finite() {
            return Err(Error::Training {
                epoch,
                message: format!("loss became non-finite ({mse})"),
            });
        }
        adam0.step(&mut w0, &g0, config.learning_rate);
        adam1.step(&mut w1, &g1, config.learning_rate);
        adam2.step(&mut w2, &g2, config.learning_rate);
    }

    // Final loss at the returned weights.
    let net = ReluNet::new(w0, w1, w2)?;
    let mut loss = 0.0;
    for (input, target) in inputs.iter().zip(&targets) {
        loss += (net.forward(input) - target).norm_squared();
    }
    mse = loss / samples;
    if !mse.is_finite() {
        return Err(Error::Training {
            epoch: config.epochs,
            message: "final loss non-finite".into(),
        });
    }
    Ok(ReluFit {
        net,
        final_mse: mse,
        epochs_run: config.epochs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DVector;

    fn v(vals: &[f64]) -> DVector<f64> {
        DVector::from_row_slice(vals)
    }

    fn pass_through_net() -> ReluNet {
        // One hidden neuron, all weights 1, scalar input/output.
        ReluNet::new(
            DMatrix::from_element(1, 1, 1.0),
            DMatrix::from_element(1, 1, 1.0),
            DMatrix::from_element(1, 1, 1.0),
        )
        .unwrap()
    }

    #[test]
    fn relu_clamps_negative_input() {
        let net = pass_through_net();
        let out = net.forward(&v(&[-1.0]));
        assert_eq!(out[0], 0.0);
    }

    #[test]
    fn relu_passes_positive_input() {
        let net = pass_through_net();
        let out = net.forward(&v(&[2.0]));
        assert_eq!(out[0], 2.0);
    }

    #[test]
    fn single_triple_interpolated() {
        let mut buf = TrainingBuffer::new(4);
        buf.push(v(&[0.5]), v(&[0.3]), v(&[0.8])).unwrap();
        let cfg = ReluTrainConfig {
            hidden: 4,
            hidden2: 4,
            epochs: 800,
            learning_rate: 0.05,
            seed: 1,
        };
        let fit = fit_relu_net(&buf, &cfg).unwrap();
        let pred = fit.net.predict(&v(&[0.5]), &v(&[0.3])).unwrap();
        assert!((pred[0] - 0.8).abs() < 1e-3, "pred = {}", pred[0]);
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let mut buf = TrainingBuffer::new(8);
        for i in 0..6 {
            let x = 0.1 * i as f64;
            buf.push(v(&[x]), v(&[1.0 - x]), v(&[0.5 * x + 0.2])).unwrap();
        }
        let cfg = ReluTrainConfig {
            epochs: 50,
            seed: 42,
            ..Default::default()
        };
        let a = fit_relu_net(&buf, &cfg).unwrap();
        let b = fit_relu_net(&buf, &cfg).unwrap();
        assert_eq!(a.net, b.net);
        assert_eq!(a.final_mse, b.final_mse);
    }

    #[test]
    fn learns_linear_map_to_small_mse() {
        // Inputs kept in a positive region so a linear map is exactly
        // representable through the ReLU layer.
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = 2;
        let m = 1;
        let a = DMatrix::<f64>::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0));
        let b = DMatrix::<f64>::from_fn(n, m, |_, _| rng.random_range(-1.0..1.0));
        let mut buf = TrainingBuffer::new(64);
        let mut var_acc = Vec::new();
        for _ in 0..40 {
            let x = DVector::from_fn(n, |_, _| rng.random_range(0.2..1.5));
            let u = DVector::from_fn(m, |_, _| rng.random_range(0.2..1.5));
            let y = &a * &x + &b * &u;
            var_acc.extend(y.iter().cloned());
            buf.push(x, u, y).unwrap();
        }
        let mean = var_acc.iter().sum::<f64>() / var_acc.len() as f64;
        let out_var =
            var_acc.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / var_acc.len() as f64;

        let cfg = ReluTrainConfig {
            hidden: n + m,
            hidden2: n + m,
            epochs: 4000,
            learning_rate: 0.02,
            seed: 7,
        };
        let fit = fit_relu_net(&buf, &cfg).unwrap();
        assert!(
            fit.final_mse <= 1e-3 * out_var,
            "mse {} vs variance {}",
            fit.final_mse,
            out_var
        );
    }
}
