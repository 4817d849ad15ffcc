//! Discrete-time linear plant simulation with scheduled damage events.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};

pub type StateVector = DVector<f64>;
pub type ControlVector = DVector<f64>;

/// True simulated dynamics: x' = A x + B u + w,  w ~ N(0, diag(noise_std^2)).
#[derive(Debug, Clone, PartialEq)]
pub struct PlantModel {
    pub a: DMatrix<f64>,
    pub b: DMatrix<f64>,
    pub noise_std: DVector<f64>,
    /// Step duration in seconds.
    pub dt: f64,
}

impl PlantModel {
    pub fn new(a: DMatrix<f64>, b: DMatrix<f64>, noise_std: DVector<f64>, dt: f64) -> Result<Self> {
        let n = a.nrows();
        if a.ncols() != n {
            return Err(Error::dimension(format!(
                "A must be square, got {}x{}",
                a.nrows(),
                a.ncols()
            )));
        }
        if b.nrows() != n {
            return Err(Error::dimension(format!(
                "B has {} rows but A is {n}x{n}",
                b.nrows()
            )));
        }
        if noise_std.len() != n {
            return Err(Error::dimension(format!(
                "noise_std has length {} but state dimension is {n}",
                noise_std.len()
            )));
        }
        if a.iter().chain(b.iter()).chain(noise_std.iter()).any(|v| !v.is_finite()) {
            return Err(Error::numeric("plant matrices must be finite"));
        }
        if noise_std.iter().any(|&s| s < 0.0) {
            return Err(Error::config("noise_std entries must be >= 0"));
        }
        if !(dt > 0.0) {
            return Err(Error::config(format!("dt must be > 0, got {dt}")));
        }
        Ok(PlantModel { a, b, noise_std, dt })
    }

    pub fn state_dim(&self) -> usize {
        self.a.nrows()
    }

    pub fn input_dim(&self) -> usize {
        self.b.ncols()
    }

    /// One simulation step. Noise is drawn from `rng`; with zero noise_std the
    /// result is the exact noiseless propagation.
    pub fn step<R: Rng>(&self, x: &StateVector, u: &ControlVector, rng: &mut R) -> Result<StateVector> {
        if x.len() != self.state_dim() {
            return Err(Error::dimension(format!(
                "state has length {} but plant expects {}",
                x.len(),
                self.state_dim()
            )));
        }
        if u.len() != self.input_dim() {
            return Err(Error::dimension(format!(
                "control has length {} but plant expects {}",
                u.len(),
                self.input_dim()
            )));
        }
        let mut next = &self.a * x + &self.b * u;
        for (i, s) in self.noise_std.iter().enumerate() {
            if *s > 0.0 {
                let dist = Normal::new(0.0, *s)
                    .map_err(|e| Error::numeric(format!("noise distribution: {e}")))?;
                next[i] += dist.sample(rng);
            }
        }
        if next.iter().any(|v| !v.is_finite()) {
            return Err(Error::numeric("plant step produced a non-finite state"));
        }
        Ok(next)
    }

    /// Returns a plant with the event's matrices; `self` is unchanged.
    pub fn inject_damage(&self, event: &DamageEvent) -> Result<PlantModel> {
        if event.new_a.shape() != self.a.shape() || event.new_b.shape() != self.b.shape() {
            return Err(Error::dimension(format!(
                "damage matrices {:?}/{:?} do not match plant {:?}/{:?}",
                event.new_a.shape(),
                event.new_b.shape(),
                self.a.shape(),
                self.b.shape()
            )));
        }
        PlantModel::new(
            event.new_a.clone(),
            event.new_b.clone(),
            self.noise_std.clone(),
            self.dt,
        )
    }
}

/// Scheduled swap of the plant matrices at `trigger_time` seconds.
#[derive(Debug, Clone, PartialEq)]
pub struct DamageEvent {
    pub trigger_time: f64,
    pub new_a: DMatrix<f64>,
    pub new_b: DMatrix<f64>,
}

impl DamageEvent {
    pub fn new(trigger_time: f64, new_a: DMatrix<f64>, new_b: DMatrix<f64>) -> Result<Self> {
        if !(trigger_time >= 0.0) {
            return Err(Error::config(format!(
                "damage trigger_time must be >= 0, got {trigger_time}"
            )));
        }
        if new_a.iter().chain(new_b.iter()).any(|v| !v.is_finite()) {
            return Err(Error::numeric("damage matrices must be finite"));
        }
        Ok(DamageEvent {
            trigger_time,
            new_a,
            new_b,
        })
    }
}

/// Per-dimension reference signal h(d, t).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReferenceSignal {
    Constant(f64),
    /// offset + rate * t
    Ramp { offset: f64, rate: f64 },
}

impl ReferenceSignal {
    pub fn at(&self, t: f64) -> f64 {
        match *self {
            ReferenceSignal::Constant(c) => c,
            ReferenceSignal::Ramp { offset, rate } => offset + rate * t,
        }
    }
}

/// Time-varying reference center, one signal per state dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceTrajectory {
    pub signals: Vec<ReferenceSignal>,
}

impl ReferenceTrajectory {
    pub fn constant(values: &[f64]) -> Self {
        ReferenceTrajectory {
            signals: values.iter().map(|&v| ReferenceSignal::Constant(v)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.signals.len()
    }

    /// Reference value of dimension `d` at time `t` seconds.
    pub fn value(&self, d: usize, t: f64) -> f64 {
        self.signals[d].at(t)
    }

    /// Full reference state at time `t`.
    pub fn at(&self, t: f64) -> StateVector {
        DVector::from_iterator(self.signals.len(), self.signals.iter().map(|s| s.at(t)))
    }
}
