//! Online identification of the dynamics change after damage.
//!
//! The buffer stores raw (state, control, next-state) triples. Fitting
//! regresses next-states on stacked [state; control] inputs; the supervisor
//! residualizes against the nominal model so that only the displacement from
//! nominal is learned. Acquisition scores rank candidate actions by how much
//! a new sample would teach the model.

mod acquisition;
mod buffer;
mod ensemble;
mod linear;
mod relu;
mod snapshot;

pub use acquisition::{diversity_score, model_change};
pub use buffer::{TrainingBuffer, Triple};
pub use ensemble::{bootstrap_ensemble, epistemic_uncertainty, Ensemble, Uncertainty};
pub use linear::{fit_linear_delta, fit_linear_delta_with_prior, LinearDelta};
pub use relu::{fit_relu_net, ReluFit, ReluNet, ReluTrainConfig};
pub use snapshot::{ModelSnapshot, SnapshotMeta, SnapshotModel};
