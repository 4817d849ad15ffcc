//! Independent feasibility verifier for solver output.

use super::model::{MilpModel, Relation};

/// Checks an assignment against every constraint, variable bound and
/// integrality flag. Returns the list of violations (empty means feasible).
pub fn verify_assignment(
    model: &MilpModel,
    assignment: &[f64],
    feasibility_tol: f64,
    integrality_tol: f64,
) -> Vec<String> {
    let mut violations = Vec::new();
    if assignment.len() != model.num_vars() {
        violations.push(format!(
            "assignment has {} values for {} variables",
            assignment.len(),
            model.num_vars()
        ));
        return violations;
    }
    for (j, var) in model.vars.iter().enumerate() {
        let v = assignment[j];
        if v < var.lower - feasibility_tol || v > var.upper + feasibility_tol {
            violations.push(format!(
                "variable {} = {v} outside [{}, {}]",
                var.name, var.lower, var.upper
            ));
        }
        if var.integral && (v - v.round()).abs() > integrality_tol {
            violations.push(format!("variable {} = {v} not integral", var.name));
        }
    }
    for (i, con) in model.constraints.iter().enumerate() {
        let lhs: f64 = con.coeffs.iter().map(|&(v, c)| c * assignment[v]).sum();
        let scale = 1.0 + con.coeffs.iter().map(|&(_, c)| c.abs()).sum::<f64>() + con.rhs.abs();
        let tol = feasibility_tol * scale;
        let ok = match con.relation {
            Relation::Le => lhs <= con.rhs + tol,
            Relation::Ge => lhs >= con.rhs - tol,
            Relation::Eq => (lhs - con.rhs).abs() <= tol,
        };
        if !ok {
            violations.push(format!("constraint #{i}: lhs {lhs} vs rhs {}", con.rhs));
        }
    }
    violations
}
