//! Randomized cross-checks of the branch-and-bound solver against exhaustive
//! binary enumeration, plus feasibility/bound sanity on every solve.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use regain_core::milp::{
    solve, solve_by_enumeration, solve_lp, verify_assignment, LinExpr, MilpModel, Relation, Sense,
    SolveStatus, SolverParams,
};

/// Random small MILP with bounded variables and mixed relations.
fn random_model(rng: &mut ChaCha8Rng, max_binaries: usize, max_continuous: usize) -> MilpModel {
    let n_bin = rng.random_range(0..=max_binaries);
    let n_cont = rng.random_range(1..=max_continuous);
    let mut m = MilpModel::new();
    let mut vars = Vec::new();
    for i in 0..n_bin {
        vars.push(m.add_binary(format!("b{i}")));
    }
    for i in 0..n_cont {
        let lo = rng.random_range(-5.0..0.0);
        let hi = lo + rng.random_range(0.5..8.0);
        vars.push(m.add_variable(format!("x{i}"), lo, hi).unwrap());
    }
    let n_rows = rng.random_range(1..=8);
    for _ in 0..n_rows {
        let mut expr = LinExpr::new();
        let mut any = false;
        for &v in &vars {
            if rng.random_bool(0.6) {
                expr.add_term(v, rng.random_range(-4.0..4.0));
                any = true;
            }
        }
        if !any {
            expr.add_term(vars[0], 1.0);
        }
        let rel = match rng.random_range(0..3) {
            0 => Relation::Le,
            1 => Relation::Ge,
            _ => Relation::Eq,
        };
        // Keep equality rows satisfiable more often by using a loose rhs.
        let rhs = rng.random_range(-6.0..6.0);
        let rel = if rng.random_bool(0.85) && rel == Relation::Eq {
            if rng.random_bool(0.5) {
                Relation::Le
            } else {
                Relation::Ge
            }
        } else {
            rel
        };
        m.add_constraint(&expr, rel, rhs).unwrap();
    }
    let mut obj = LinExpr::new();
    for &v in &vars {
        obj.add_term(v, rng.random_range(-3.0..3.0));
    }
    let sense = if rng.random_bool(0.5) {
        Sense::Maximize
    } else {
        Sense::Minimize
    };
    m.set_objective(&obj, sense).unwrap();
    m
}

#[test]
fn branch_and_bound_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let params = SolverParams::default();
    let mut solved = 0;
    for case in 0..300 {
        let model = random_model(&mut rng, 8, 6);
        let got = solve(&model, &params);
        let want = solve_by_enumeration(&model, 12);
        match (got.status, want) {
            (SolveStatus::Optimal, Some((obj, _))) => {
                let rel = (got.objective - obj).abs() / obj.abs().max(1.0);
                assert!(
                    rel < 1e-6,
                    "case {case}: solver {} vs oracle {obj}\n{}",
                    got.objective,
                    model.write_lp()
                );
                let assignment = got.assignment.expect("optimal must carry assignment");
                let violations = verify_assignment(&model, &assignment, 1e-6, 1e-5);
                assert!(violations.is_empty(), "case {case}: {violations:?}");
                solved += 1;
            }
            (SolveStatus::Infeasible, None) => {}
            (s, w) => panic!(
                "case {case}: solver says {s:?}, oracle says {}\n{}",
                if w.is_some() { "feasible" } else { "infeasible" },
                model.write_lp()
            ),
        }
    }
    assert!(solved > 100, "too few feasible cases: {solved}");
}

#[test]
fn relaxation_bounds_the_milp() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let params = SolverParams::default();
    for _ in 0..150 {
        let model = random_model(&mut rng, 6, 4);
        let milp = solve(&model, &params);
        if milp.status != SolveStatus::Optimal {
            continue;
        }
        let lp = solve_lp(&model);
        assert_eq!(lp.status, regain_core::milp::LpStatus::Optimal);
        let slack = 1e-7 * milp.objective.abs().max(1.0);
        match model.sense() {
            Sense::Maximize => assert!(lp.objective >= milp.objective - slack),
            Sense::Minimize => assert!(lp.objective <= milp.objective + slack),
        }
    }
}

#[test]
fn identical_inputs_identical_solutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let params = SolverParams::default();
    for _ in 0..40 {
        let model = random_model(&mut rng, 7, 5);
        let a = solve(&model, &params);
        let b = solve(&model, &params);
        assert_eq!(a.status, b.status);
        assert_eq!(a.assignment, b.assignment);
        assert_eq!(a.nodes_explored, b.nodes_explored);
    }
}
