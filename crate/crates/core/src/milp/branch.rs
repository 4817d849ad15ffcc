//! Best-bound branch and bound over binary variables.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::time::Instant;

use super::model::{MilpModel, Sense};
use super::simplex::{solve_lp_with_bounds, LpOptions, LpStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    Unbounded,
    /// Stopped before the gap target (node limit or a numerical failure on
    /// some subproblem); the incumbent, if any, is still feasible.
    GapLimit,
    TimeLimit,
}

#[derive(Debug, Clone)]
pub struct MilpSolution {
    pub status: SolveStatus,
    /// Best feasible assignment found, in model-variable order.
    pub assignment: Option<Vec<f64>>,
    /// Objective of the assignment (model sense); NaN without an incumbent.
    pub objective: f64,
    /// Proven bound on the optimum (model sense).
    pub bound: f64,
    /// Relative gap between bound and incumbent at termination.
    pub gap: f64,
    pub nodes_explored: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct SolverParams {
    pub feasibility_tol: f64,
    pub integrality_tol: f64,
    pub relative_gap: f64,
    pub node_limit: Option<usize>,
    pub time_limit: Option<f64>,
}

impl Default for SolverParams {
    fn default() -> Self {
        SolverParams {
            feasibility_tol: 1e-7,
            integrality_tol: 1e-6,
            relative_gap: 1e-6,
            node_limit: None,
            time_limit: None,
        }
    }
}

struct Node {
    lower: Vec<f64>,
    upper: Vec<f64>,
    /// Parent LP score (canonical maximize sense); a valid bound for the node.
    bound: f64,
    creation: usize,
}

/// Heap entry ordered by bound (desc), then creation index (asc).
struct HeapEntry(Node);

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.0.bound == other.0.bound && self.0.creation == other.0.creation
    }
}
impl Eq for HeapEntry {}
impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.0.bound.partial_cmp(&other.0.bound) {
            Some(Ordering::Equal) | None => other.0.creation.cmp(&self.0.creation),
            Some(ord) => ord,
        }
    }
}

/// Most fractional binary, ties broken on the lowest variable index.
fn pick_branch_var(model: &MilpModel, values: &[f64], int_tol: f64) -> Option<(usize, f64)> {
    let mut best: Option<(usize, f64)> = None;
    for (j, var) in model.vars.iter().enumerate() {
        if !var.integral {
            continue;
        }
        let v = values[j];
        let frac_dist = (v - v.round()).abs();
        if frac_dist <= int_tol {
            continue;
        }
        // Distance to the nearest integer measures "most fractional".
        match best {
            Some((_, d)) if frac_dist <= d + 1e-15 => {}
            _ => best = Some((j, frac_dist)),
        }
    }
    best.map(|(j, _)| (j, values[j]))
}

/// Solves the mixed-integer program by best-bound branch and bound with
/// depth-first plunging. Branching is on fractional binaries only.
pub fn solve(model: &MilpModel, params: &SolverParams) -> MilpSolution {
    let start = Instant::now();
    let sgn = match model.sense() {
        Sense::Maximize => 1.0,
        Sense::Minimize => -1.0,
    };
    let lp_opts = LpOptions {
        feasibility_tol: params.feasibility_tol,
        ..LpOptions::default()
    };

    let lower0: Vec<f64> = model.vars.iter().map(|v| v.lower).collect();
    let upper0: Vec<f64> = model.vars.iter().map(|v| v.upper).collect();

    let mut heap: BinaryHeap<HeapEntry> = BinaryHeap::new();
    let mut dive: Vec<Node> = Vec::new();
    let mut creation = 0usize;
    let mut nodes_explored = 0usize;
    let mut incumbent: Option<Vec<f64>> = None;
    let mut incumbent_score = f64::NEG_INFINITY;
    let mut saw_numerical_failure = false;

    dive.push(Node {
        lower: lower0,
        upper: upper0,
        bound: f64::INFINITY,
        creation,
    });
    creation += 1;

    let prune_slack = |score: f64| params.relative_gap * score.abs().max(1.0);

    let finish = |status: SolveStatus,
                  incumbent: Option<Vec<f64>>,
                  incumbent_score: f64,
                  bound_score: f64,
                  nodes: usize| {
        let objective = incumbent
            .as_ref()
            .map(|a| model.objective_value(a))
            .unwrap_or(f64::NAN);
        let gap = if incumbent.is_some() {
            ((bound_score - incumbent_score) / incumbent_score.abs().max(1.0)).max(0.0)
        } else {
            f64::INFINITY
        };
        MilpSolution {
            status,
            assignment: incumbent,
            objective,
            bound: sgn * bound_score,
            gap,
            nodes_explored: nodes,
        }
    };

    loop {
        // Current global bound over all open nodes.
        let open_bound = dive
            .iter()
            .map(|n| n.bound)
            .chain(heap.peek().map(|e| e.0.bound))
            .fold(f64::NEG_INFINITY, f64::max);

        if incumbent.is_some() && open_bound - incumbent_score <= prune_slack(incumbent_score) {
            let status = if saw_numerical_failure {
                SolveStatus::GapLimit
            } else {
                SolveStatus::Optimal
            };
            return finish(
                status,
                incumbent,
                incumbent_score,
                open_bound.max(incumbent_score),
                nodes_explored,
            );
        }

        let node = match dive.pop() {
            Some(n) => n,
            None => match heap.pop() {
                Some(e) => e.0,
                None => {
                    return if incumbent.is_some() {
                        let status = if saw_numerical_failure {
                            SolveStatus::GapLimit
                        } else {
                            SolveStatus::Optimal
                        };
                        finish(status, incumbent, incumbent_score, incumbent_score, nodes_explored)
                    } else if saw_numerical_failure {
                        finish(
                            SolveStatus::GapLimit,
                            None,
                            f64::NEG_INFINITY,
                            f64::INFINITY,
                            nodes_explored,
                        )
                    } else {
                        finish(
                            SolveStatus::Infeasible,
                            None,
                            f64::NEG_INFINITY,
                            f64::NEG_INFINITY,
                            nodes_explored,
                        )
                    };
                }
            },
        };

        // Bound-based pruning using the parent bound before paying for an LP.
        if incumbent.is_some() && node.bound - incumbent_score <= prune_slack(incumbent_score) {
            continue;
        }

        if let Some(limit) = params.time_limit {
            if start.elapsed().as_secs_f64() > limit {
                let bound = node
                    .bound
                    .max(open_bound)
                    .max(incumbent_score);
                return finish(SolveStatus::TimeLimit, incumbent, incumbent_score, bound, nodes_explored);
            }
        }
        if let Some(limit) = params.node_limit {
            if nodes_explored >= limit {
                let bound = node.bound.max(open_bound).max(incumbent_score);
                return finish(SolveStatus::GapLimit, incumbent, incumbent_score, bound, nodes_explored);
            }
        }

        nodes_explored += 1;
        let lp = solve_lp_with_bounds(model, &node.lower, &node.upper, &lp_opts);
        match lp.status {
            LpStatus::Infeasible => continue,
            LpStatus::Unbounded => {
                if nodes_explored == 1 {
                    return finish(
                        SolveStatus::Unbounded,
                        None,
                        f64::NEG_INFINITY,
                        f64::INFINITY,
                        nodes_explored,
                    );
                }
                // A bounded-root child cannot be unbounded; be conservative.
                saw_numerical_failure = true;
                continue;
            }
            LpStatus::NumericalFailure => {
                saw_numerical_failure = true;
                continue;
            }
            LpStatus::Optimal => {}
        }
        let score = sgn * lp.objective;
        if incumbent.is_some() && score - incumbent_score <= prune_slack(incumbent_score) {
            continue;
        }

        match pick_branch_var(model, &lp.values, params.integrality_tol) {
            None => {
                // Integer feasible.
                if score > incumbent_score {
                    incumbent_score = score;
                    incumbent = Some(lp.values);
                }
            }
            Some((j, v)) => {
                // Children: binary fixed down / up. Plunge into the side the
                // fractional value leans toward; queue the other.
                let mut down = Node {
                    lower: node.lower.clone(),
                    upper: node.upper.clone(),
                    bound: score,
                    creation,
                };
                creation += 1;
                down.upper[j] = v.floor();
                let mut up = Node {
                    lower: node.lower,
                    upper: node.upper,
                    bound: score,
                    creation,
                };
                creation += 1;
                up.lower[j] = v.ceil();

                let frac = v - v.floor();
                if frac >= 0.5 {
                    heap.push(HeapEntry(down));
                    dive.push(up);
                } else {
                    heap.push(HeapEntry(up));
                    dive.push(down);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milp::model::{LinExpr, Relation};

    #[test]
    fn knapsack_two_items() {
        // max 5a + 4b s.t. 2a + 3b <= 4, a,b binary -> a=1, b=0, obj 5.
        let mut m = MilpModel::new();
        let a = m.add_binary("a");
        let b = m.add_binary("b");
        let mut con = LinExpr::new();
        con.add_term(a, 2.0).add_term(b, 3.0);
        m.add_constraint(&con, Relation::Le, 4.0).unwrap();
        let mut obj = LinExpr::new();
        obj.add_term(a, 5.0).add_term(b, 4.0);
        m.set_objective(&obj, Sense::Maximize).unwrap();
        let sol = solve(&m, &SolverParams::default());
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!((sol.objective - 5.0).abs() < 1e-8);
        let x = sol.assignment.unwrap();
        assert!((x[0] - 1.0).abs() < 1e-6);
        assert!(x[1].abs() < 1e-6);
    }

    #[test]
    fn continuous_model_matches_lp() {
        let mut m = MilpModel::new();
        let x = m.add_variable("x", 0.0, 3.0).unwrap();
        let y = m.add_variable("y", 0.0, 2.0).unwrap();
        let mut con = LinExpr::new();
        con.add_term(x, 1.0).add_term(y, 1.0);
        m.add_constraint(&con, Relation::Le, 4.0).unwrap();
        let mut obj = LinExpr::new();
        obj.add_term(x, 1.0).add_term(y, 2.0);
        m.set_objective(&obj, Sense::Maximize).unwrap();
        let milp = solve(&m, &SolverParams::default());
        let lp = crate::milp::simplex::solve_lp(&m);
        assert_eq!(milp.status, SolveStatus::Optimal);
        assert!((milp.objective - lp.objective).abs() < 1e-9);
        assert_eq!(milp.nodes_explored, 1);
    }

    #[test]
    fn infeasible_binary_model() {
        let mut m = MilpModel::new();
        let a = m.add_binary("a");
        let b = m.add_binary("b");
        let mut con = LinExpr::new();
        con.add_term(a, 1.0).add_term(b, 1.0);
        m.add_constraint(&con, Relation::Ge, 3.0).unwrap();
        m.set_objective(&LinExpr::term(a, 1.0), Sense::Maximize).unwrap();
        let sol = solve(&m, &SolverParams::default());
        assert_eq!(sol.status, SolveStatus::Infeasible);
        assert!(sol.assignment.is_none());
    }

    #[test]
    fn minimize_sense() {
        // min a + b s.t. a + b >= 1, binaries -> objective 1.
        let mut m = MilpModel::new();
        let a = m.add_binary("a");
        let b = m.add_binary("b");
        let mut con = LinExpr::new();
        con.add_term(a, 1.0).add_term(b, 1.0);
        m.add_constraint(&con, Relation::Ge, 1.0).unwrap();
        m.set_objective(&con, Sense::Minimize).unwrap();
        let sol = solve(&m, &SolverParams::default());
        assert_eq!(sol.status, SolveStatus::Optimal);
        assert!((sol.objective - 1.0).abs() < 1e-8);
    }

    #[test]
    fn deterministic_resolve() {
        let mut m = MilpModel::new();
        let vars: Vec<_> = (0..6).map(|i| m.add_binary(format!("b{i}"))).collect();
        let mut con = LinExpr::new();
        for (i, &v) in vars.iter().enumerate() {
            con.add_term(v, 1.0 + i as f64);
        }
        m.add_constraint(&con, Relation::Le, 7.0).unwrap();
        let mut obj = LinExpr::new();
        for (i, &v) in vars.iter().enumerate() {
            obj.add_term(v, 2.0 + (i as f64) * 0.7);
        }
        m.set_objective(&obj, Sense::Maximize).unwrap();
        let s1 = solve(&m, &SolverParams::default());
        let s2 = solve(&m, &SolverParams::default());
        assert_eq!(s1.assignment, s2.assignment);
        assert_eq!(s1.objective, s2.objective);
        assert_eq!(s1.nodes_explored, s2.nodes_explored);
    }
}
