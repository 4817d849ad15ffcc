//! Reference brute-force solver: exhaustive enumeration over binary
//! assignments with an LP over the continuous remainder.
//!
//! Exponential in the binary count; used as an independent oracle in tests
//! and for debugging small models. Does not share any code path with the
//! branch-and-bound search.

use super::model::{MilpModel, Sense};
use super::simplex::{solve_lp_with_bounds, LpOptions, LpStatus};

/// Best objective and assignment over all binary completions, or None if
/// every completion is infeasible. Panics if the model has more than
/// `max_binaries` binaries (guard against accidental blowup).
pub fn solve_by_enumeration(model: &MilpModel, max_binaries: usize) -> Option<(f64, Vec<f64>)> {
    let binaries: Vec<usize> = model
        .vars
        .iter()
        .enumerate()
        .filter(|(_, v)| v.integral)
        .map(|(j, _)| j)
        .collect();
    assert!(
        binaries.len() <= max_binaries,
        "enumeration oracle limited to {max_binaries} binaries"
    );
    let sgn = match model.sense() {
        Sense::Maximize => 1.0,
        Sense::Minimize => -1.0,
    };
    let lower0: Vec<f64> = model.vars.iter().map(|v| v.lower).collect();
    let upper0: Vec<f64> = model.vars.iter().map(|v| v.upper).collect();
    let opts = LpOptions::default();

    let mut best: Option<(f64, Vec<f64>)> = None;
    for mask in 0u64..(1u64 << binaries.len()) {
        let mut lower = lower0.clone();
        let mut upper = upper0.clone();
        for (k, &j) in binaries.iter().enumerate() {
            let bit = ((mask >> k) & 1) as f64;
            // Respect the variable's own bounds (a binary may be pre-fixed).
            if bit < lower[j] || bit > upper[j] {
                lower[j] = 1.0;
                upper[j] = 0.0; // infeasible marker
            } else {
                lower[j] = bit;
                upper[j] = bit;
            }
        }
        if lower.iter().zip(&upper).any(|(l, u)| l > u) {
            continue;
        }
        let lp = solve_lp_with_bounds(model, &lower, &upper, &opts);
        if lp.status == LpStatus::Optimal {
            let score = sgn * lp.objective;
            match &best {
                Some((b, _)) if *b >= score => {}
                _ => best = Some((score, lp.values)),
            }
        }
    }
    best.map(|(score, vals)| (sgn * score, vals))
}
