//! Safe active-learning model predictive control for damaged plants.
//!
//! The crate provides the pieces of a recovery control stack:
//!
//! - [`plant`]: a discrete-time linear plant simulator with Gaussian noise,
//!   scheduled damage events and time-indexed reference trajectories.
//! - [`learner`]: online identification of the dynamics change after damage
//!   (linear model with per-weight uncertainty, a small ReLU network, and
//!   acquisition scores for active learning).
//! - [`milp`]: a self-contained mixed-integer linear programming solver
//!   (dense bounded-variable simplex inside best-bound branch and bound).
//! - [`planner`]: the safe information-seeking trajectory optimizer; builds
//!   a MILP trading off data diversity against chance-constrained envelope
//!   re-entry and extracts an action plan.
//! - [`mpc`]: a nominal L1 tracking controller on top of the LP solver.
//! - [`supervisor`]: the closed loop — detect model mismatch, switch to safe
//!   active learning, refit, hand control back to nominal MPC.
//! - [`scenario`]: JSON scenario files tying all configuration together.

pub mod error;
pub mod learner;
pub mod milp;
pub mod mpc;
pub mod normal;
pub mod plant;
pub mod planner;
pub mod scenario;
pub mod supervisor;

pub use error::{Error, Result};
