//! Bounded buffer of training transitions.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::plant::{ControlVector, StateVector};

/// One observed transition (x_k, u_k, x_{k+1}).
#[derive(Debug, Clone, PartialEq)]
pub struct Triple {
    pub state: StateVector,
    pub control: ControlVector,
    pub next_state: StateVector,
}

/// Ordered transition store with oldest-first eviction.
#[derive(Debug, Clone)]
pub struct TrainingBuffer {
    triples: VecDeque<Triple>,
    capacity: usize,
}

/// Nominal buffer capacity when none is configured.
pub const DEFAULT_CAPACITY: usize = 3;

impl Default for TrainingBuffer {
    fn default() -> Self {
        TrainingBuffer::new(DEFAULT_CAPACITY)
    }
}

impl TrainingBuffer {
    pub fn new(capacity: usize) -> Self {
        TrainingBuffer {
            triples: VecDeque::with_capacity(capacity.min(1024)),
            capacity: capacity.max(1),
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// State/control dimensions of the stored triples, if any.
    pub fn dims(&self) -> Option<(usize, usize)> {
        self.triples
            .front()
            .map(|t| (t.state.len(), t.control.len()))
    }

    pub fn push(&mut self, state: StateVector, control: ControlVector, next_state: StateVector) -> Result<()> {
        if state.len() != next_state.len() {
            return Err(Error::dimension(format!(
                "state ({}) and next_state ({}) lengths differ",
                state.len(),
                next_state.len()
            )));
        }
        if let Some((n, m)) = self.dims() {
            if state.len() != n || control.len() != m {
                return Err(Error::dimension(format!(
                    "triple dims ({}, {}) do not match buffer ({n}, {m})",
                    state.len(),
                    control.len()
                )));
            }
        }
        if self.triples.len() == self.capacity {
            self.triples.pop_front();
        }
        self.triples.push_back(Triple {
            state,
            control,
            next_state,
        });
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    /// The most recent `n` triples as a fresh buffer (order preserved).
    pub fn recent(&self, n: usize) -> TrainingBuffer {
        let skip = self.triples.len().saturating_sub(n);
        let mut out = TrainingBuffer::new(n.max(1));
        for t in self.triples.iter().skip(skip) {
            out.triples.push_back(t.clone());
        }
        out
    }

    /// New buffer with each target replaced by `f(triple)`; inputs unchanged.
    /// Used to residualize targets against a nominal model before fitting.
    pub fn map_targets(&self, mut f: impl FnMut(&Triple) -> StateVector) -> TrainingBuffer {
        let mut out = TrainingBuffer::new(self.capacity);
        for t in self.triples.iter() {
            let next = f(t);
            out.triples.push_back(Triple {
                state: t.state.clone(),
                control: t.control.clone(),
                next_state: next,
            });
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DVector;

    fn v(vals: &[f64]) -> DVector<f64> {
        DVector::from_row_slice(vals)
    }

    #[test]
    fn evicts_oldest_first() {
        let mut buf = TrainingBuffer::new(2);
        for i in 0..3 {
            buf.push(v(&[i as f64]), v(&[0.0]), v(&[0.0])).unwrap();
        }
        assert_eq!(buf.len(), 2);
        let states: Vec<f64> = buf.iter().map(|t| t.state[0]).collect();
        assert_eq!(states, vec![1.0, 2.0]);
    }

    #[test]
    fn rejects_inconsistent_dims() {
        let mut buf = TrainingBuffer::new(4);
        buf.push(v(&[0.0, 0.0]), v(&[0.0]), v(&[1.0, 1.0])).unwrap();
        assert!(buf.push(v(&[0.0]), v(&[0.0]), v(&[1.0])).is_err());
        assert!(buf.push(v(&[0.0, 0.0]), v(&[0.0, 0.0]), v(&[1.0, 1.0])).is_err());
    }

    #[test]
    fn recent_keeps_latest() {
        let mut buf = TrainingBuffer::new(5);
        for i in 0..5 {
            buf.push(v(&[i as f64]), v(&[0.0]), v(&[0.0])).unwrap();
        }
        let r = buf.recent(2);
        let states: Vec<f64> = r.iter().map(|t| t.state[0]).collect();
        assert_eq!(states, vec![3.0, 4.0]);
    }
}
