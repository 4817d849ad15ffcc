//! Mixed-integer linear programming: model builders, a dense bounded-variable
//! simplex for LP relaxations, and best-bound branch and bound on binaries.

pub mod branch;
pub mod enumerate;
pub mod model;
pub mod simplex;
pub mod verify;

pub use branch::{solve, MilpSolution, SolveStatus, SolverParams};
pub use enumerate::solve_by_enumeration;
pub use model::{ConstraintId, LinExpr, MilpModel, Relation, Sense, VarId, Variable};
pub use simplex::{solve_lp, LpSolution, LpStatus};
pub use verify::verify_assignment;
