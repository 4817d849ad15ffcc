//! Dense tableau simplex for LP relaxations.
//!
//! Two-phase primal simplex with implicit variable bounds (upper-bounded
//! variables handled by complementing, so every nonbasic variable sits at
//! zero). Dantzig pricing by default, switching permanently to Bland's rule
//! after a run of degenerate steps so termination is guaranteed. Determinism:
//! all ties break on the lowest column index.

use super::model::{MilpModel, Relation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
    /// Iteration cap or failed post-check; never reported as optimal.
    NumericalFailure,
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Values in model-variable order (empty unless optimal).
    pub values: Vec<f64>,
    /// Objective in the model's own sense (includes the constant term).
    pub objective: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct LpOptions {
    pub feasibility_tol: f64,
    pub reduced_cost_tol: f64,
    pub pivot_tol: f64,
    /// Degenerate steps tolerated before switching to Bland's rule.
    pub degenerate_switch: usize,
}

impl Default for LpOptions {
    fn default() -> Self {
        LpOptions {
            feasibility_tol: 1e-7,
            reduced_cost_tol: 1e-9,
            pivot_tol: 1e-9,
            degenerate_switch: 64,
        }
    }
}

/// How a model variable maps onto internal nonnegative columns.
#[derive(Debug, Clone, Copy)]
enum ColMap {
    /// x = shift + sign * col  (sign is +1 or -1)
    Shifted { col: usize, shift: f64, sign: f64 },
    /// Free variable split x = pos - neg.
    Split { pos: usize, neg: usize },
}

struct Tableau {
    m: usize,
    cols: usize,
    /// Row-major m x cols constraint coefficients (current basis view).
    a: Vec<f64>,
    /// Current basic variable values (all nonbasic at zero).
    rhs: Vec<f64>,
    basis: Vec<usize>,
    /// Column widths (upper bound of the internal variable; may be +inf).
    width: Vec<f64>,
    /// Complement state: value = width - internal once flipped.
    flipped: Vec<bool>,
    artificial: Vec<bool>,
    /// Reduced-cost rows for phase 1 and phase 2 objectives.
    obj1: Vec<f64>,
    obj2: Vec<f64>,
    in_basis: Vec<bool>,
    scratch: Vec<f64>,
}

enum StepOutcome {
    PhaseDone,
    Unbounded,
    Progress { degenerate: bool },
}

impl Tableau {
    #[inline]
    fn row(&self, i: usize) -> &[f64] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.cols + j]
    }

    fn enterable(&self, j: usize, phase1: bool) -> bool {
        if self.in_basis[j] || self.width[j] <= 0.0 {
            return false;
        }
        if self.artificial[j] {
            // Artificials start basic and never re-enter.
            return false;
        }
        let _ = phase1;
        true
    }

    /// One simplex step on the given objective row. Returns what happened.
    fn step(&mut self, phase1: bool, bland: bool, opts: &LpOptions) -> StepOutcome {
        let obj = if phase1 { &self.obj1 } else { &self.obj2 };
        // Pricing.
        let mut entering = None;
        if bland {
            for j in 0..self.cols {
                if self.enterable(j, phase1) && obj[j] > opts.reduced_cost_tol {
                    entering = Some(j);
                    break;
                }
            }
        } else {
            let mut best = opts.reduced_cost_tol;
            for j in 0..self.cols {
                if self.enterable(j, phase1) && obj[j] > best {
                    best = obj[j];
                    entering = Some(j);
                }
            }
        }
        let Some(j) = entering else {
            return StepOutcome::PhaseDone;
        };

        // Ratio test: entering column j increases from 0.
        let mut best_t = self.width[j]; // bound-flip limit (may be inf)
        let mut leaving: Option<(usize, bool)> = None; // (row, leaves_at_upper)
        for i in 0..self.m {
            let v = self.at(i, j);
            if v > opts.pivot_tol {
                let t = self.rhs[i] / v;
                if t < best_t - 1e-12
                    || (t < best_t + 1e-12
                        && match leaving {
                            Some((r, _)) => {
                                // Tie: prefer larger pivot magnitude, then lower basis index.
                                let cur = self.at(r, j).abs();
                                if bland {
                                    self.basis[i] < self.basis[r]
                                } else {
                                    v.abs() > cur + 1e-12
                                        || (v.abs() > cur - 1e-12 && self.basis[i] < self.basis[r])
                                }
                            }
                            None => true,
                        })
                {
                    best_t = t.max(0.0);
                    leaving = Some((i, false));
                }
            } else if v < -opts.pivot_tol {
                let wb = self.width[self.basis[i]];
                if wb.is_finite() {
                    let t = (wb - self.rhs[i]) / (-v);
                    if t < best_t - 1e-12
                        || (t < best_t + 1e-12
                            && match leaving {
                                Some((r, _)) => {
                                    let cur = self.at(r, j).abs();
                                    if bland {
                                        self.basis[i] < self.basis[r]
                                    } else {
                                        v.abs() > cur + 1e-12
                                            || (v.abs() > cur - 1e-12
                                                && self.basis[i] < self.basis[r])
                                    }
                                }
                                None => true,
                            })
                    {
                        best_t = t.max(0.0);
                        leaving = Some((i, true));
                    }
                }
            }
        }

        match leaving {
            None => {
                if best_t.is_infinite() {
                    return StepOutcome::Unbounded;
                }
                // Bound flip: entering variable jumps to its upper bound.
                self.flip_column(j);
                StepOutcome::Progress { degenerate: false }
            }
            Some((r, at_upper)) => {
                let degenerate = best_t <= 1e-11;
                if at_upper {
                    self.complement_basic(r);
                }
                self.pivot(r, j);
                StepOutcome::Progress { degenerate }
            }
        }
    }

    /// Complement a nonbasic column (bound flip): x := width - x.
    fn flip_column(&mut self, j: usize) {
        let w = self.width[j];
        for i in 0..self.m {
            let v = self.a[i * self.cols + j];
            if v != 0.0 {
                self.rhs[i] -= v * w;
                if self.rhs[i].abs() < 1e-11 {
                    self.rhs[i] = 0.0;
                }
                self.a[i * self.cols + j] = -v;
            }
        }
        self.obj1[j] = -self.obj1[j];
        self.obj2[j] = -self.obj2[j];
        self.flipped[j] = !self.flipped[j];
    }

    /// Complement the basic variable of row r (it is leaving at its upper
    /// bound). Only row r is affected because the basic column is unit.
    fn complement_basic(&mut self, r: usize) {
        let l = self.basis[r];
        let w = self.width[l];
        let row = &mut self.a[r * self.cols..(r + 1) * self.cols];
        for (c, v) in row.iter_mut().enumerate() {
            if c != l {
                *v = -*v;
            }
        }
        self.rhs[r] = w - self.rhs[r];
        if self.rhs[r].abs() < 1e-11 {
            self.rhs[r] = 0.0;
        }
        self.flipped[l] = !self.flipped[l];
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let cols = self.cols;
        let piv = self.a[r * cols + j];
        debug_assert!(piv.abs() > 1e-12);
        let inv = 1.0 / piv;
        {
            let row = &mut self.a[r * cols..(r + 1) * cols];
            for v in row.iter_mut() {
                *v *= inv;
            }
            row[j] = 1.0;
        }
        self.rhs[r] *= inv;
        if self.rhs[r].abs() < 1e-11 {
            self.rhs[r] = 0.0;
        }
        self.scratch.clear();
        self.scratch.extend_from_slice(&self.a[r * cols..(r + 1) * cols]);
        let pivot_rhs = self.rhs[r];
        for i in 0..self.m {
            if i == r {
                continue;
            }
            let f = self.a[i * cols + j];
            if f == 0.0 {
                continue;
            }
            let row = &mut self.a[i * cols..(i + 1) * cols];
            for (v, p) in row.iter_mut().zip(&self.scratch) {
                *v -= f * *p;
            }
            row[j] = 0.0;
            self.rhs[i] -= f * pivot_rhs;
            if self.rhs[i].abs() < 1e-11 {
                self.rhs[i] = 0.0;
            }
        }
        for obj in [&mut self.obj1, &mut self.obj2] {
            let f = obj[j];
            if f != 0.0 {
                for (v, p) in obj.iter_mut().zip(&self.scratch) {
                    *v -= f * *p;
                }
                obj[j] = 0.0;
            }
        }
        self.in_basis[self.basis[r]] = false;
        self.in_basis[j] = true;
        self.basis[r] = j;
    }

    fn artificial_sum(&self) -> f64 {
        (0..self.m)
            .filter(|&i| self.artificial[self.basis[i]])
            .map(|i| self.rhs[i])
            .sum()
    }
}

/// Solves the LP relaxation of `model` with per-variable bound overrides
/// (used by branch and bound). `lower`/`upper` must have one entry per model
/// variable.
pub fn solve_lp_with_bounds(
    model: &MilpModel,
    lower: &[f64],
    upper: &[f64],
    opts: &LpOptions,
) -> LpSolution {
    let nvars = model.num_vars();
    debug_assert_eq!(lower.len(), nvars);
    debug_assert_eq!(upper.len(), nvars);

    for j in 0..nvars {
        if lower[j] > upper[j] {
            return LpSolution {
                status: LpStatus::Infeasible,
                values: Vec::new(),
                objective: f64::NAN,
            };
        }
    }

    // Column mapping: every internal column lives in [0, width].
    let mut maps = Vec::with_capacity(nvars);
    let mut width: Vec<f64> = Vec::new();
    for j in 0..nvars {
        let (l, u) = (lower[j], upper[j]);
        if l.is_finite() {
            maps.push(ColMap::Shifted {
                col: width.len(),
                shift: l,
                sign: 1.0,
            });
            width.push(u - l);
        } else if u.is_finite() {
            maps.push(ColMap::Shifted {
                col: width.len(),
                shift: u,
                sign: -1.0,
            });
            width.push(f64::INFINITY);
        } else {
            maps.push(ColMap::Split {
                pos: width.len(),
                neg: width.len() + 1,
            });
            width.push(f64::INFINITY);
            width.push(f64::INFINITY);
        }
    }
    let n_structural = width.len();

    // Assemble rows over internal columns; Ge rows are negated to Le.
    let m = model.num_constraints();
    let mut row_coeffs: Vec<Vec<(usize, f64)>> = Vec::with_capacity(m);
    let mut row_rhs: Vec<f64> = Vec::with_capacity(m);
    let mut row_eq: Vec<bool> = Vec::with_capacity(m);
    for con in &model.constraints {
        let neg = matches!(con.relation, Relation::Ge);
        let mut rhs = if neg { -con.rhs } else { con.rhs };
        let mut coeffs = Vec::with_capacity(con.coeffs.len() + 1);
        for &(v, c) in &con.coeffs {
            let c = if neg { -c } else { c };
            match maps[v] {
                ColMap::Shifted { col, shift, sign } => {
                    rhs -= c * shift;
                    coeffs.push((col, c * sign));
                }
                ColMap::Split { pos, neg: ncol } => {
                    coeffs.push((pos, c));
                    coeffs.push((ncol, -c));
                }
            }
        }
        row_coeffs.push(coeffs);
        row_rhs.push(rhs);
        row_eq.push(matches!(con.relation, Relation::Eq));
    }

    // Slack per inequality row, then normalize rhs >= 0, then artificials.
    let mut slack_col: Vec<Option<usize>> = vec![None; m];
    let mut next = n_structural;
    for i in 0..m {
        if !row_eq[i] {
            slack_col[i] = Some(next);
            width.push(f64::INFINITY);
            next += 1;
        }
    }
    let mut negated = vec![false; m];
    for i in 0..m {
        if row_rhs[i] < 0.0 {
            negated[i] = true;
            row_rhs[i] = -row_rhs[i];
            for c in row_coeffs[i].iter_mut() {
                c.1 = -c.1;
            }
        }
    }
    let mut art_col: Vec<Option<usize>> = vec![None; m];
    let mut artificial_flags = vec![false; width.len()];
    for i in 0..m {
        let needs_artificial = row_eq[i] || negated[i];
        if needs_artificial {
            art_col[i] = Some(next);
            width.push(f64::INFINITY);
            artificial_flags.push(true);
            next += 1;
        }
    }
    artificial_flags.resize(width.len(), false);
    // (flags for slack columns default to false via the resize above)
    let cols = width.len();

    // Dense tableau.
    let mut a = vec![0.0; m * cols];
    let mut basis = vec![0usize; m];
    for i in 0..m {
        for &(c, v) in &row_coeffs[i] {
            a[i * cols + c] += v;
        }
        if let Some(s) = slack_col[i] {
            a[i * cols + s] = if negated[i] { -1.0 } else { 1.0 };
        }
        if let Some(ar) = art_col[i] {
            a[i * cols + ar] = 1.0;
            basis[i] = ar;
        } else {
            basis[i] = slack_col[i].expect("row without slack must have artificial");
        }
    }

    // Objective rows. Canonical sense: maximize.
    let sense_factor = match model.sense() {
        super::model::Sense::Maximize => 1.0,
        super::model::Sense::Minimize => -1.0,
    };
    let mut obj2 = vec![0.0; cols];
    for j in 0..nvars {
        let c = sense_factor * model.objective_coeff(j);
        if c == 0.0 {
            continue;
        }
        match maps[j] {
            ColMap::Shifted { col, sign, .. } => obj2[col] += c * sign,
            ColMap::Split { pos, neg } => {
                obj2[pos] += c;
                obj2[neg] -= c;
            }
        }
    }
    // Phase-1 reduced costs: maximize -sum(artificials), priced out against
    // the artificial basis rows.
    let mut obj1 = vec![0.0; cols];
    let mut have_artificials = false;
    for i in 0..m {
        if art_col[i].is_some() {
            have_artificials = true;
            for jj in 0..cols {
                obj1[jj] += a[i * cols + jj];
            }
        }
    }
    for (j, flag) in artificial_flags.iter().enumerate() {
        if *flag {
            obj1[j] -= 1.0;
        }
    }

    let mut in_basis = vec![false; cols];
    for &b in &basis {
        in_basis[b] = true;
    }

    let mut tab = Tableau {
        m,
        cols,
        a,
        rhs: row_rhs,
        basis,
        width,
        flipped: vec![false; cols],
        artificial: artificial_flags,
        obj1,
        obj2,
        in_basis,
        scratch: Vec::with_capacity(cols),
    };

    let max_iters = 20_000 + 60 * (m + cols);
    let mut iters = 0usize;
    let mut bland = false;
    let mut degen_run = 0usize;

    // Phase 1.
    if have_artificials {
        loop {
            iters += 1;
            if iters > max_iters {
                return failure();
            }
            match tab.step(true, bland, opts) {
                StepOutcome::PhaseDone => break,
                StepOutcome::Unbounded => return failure(), // cannot happen: obj1 <= 0
                StepOutcome::Progress { degenerate } => {
                    if degenerate {
                        degen_run += 1;
                        if degen_run > opts.degenerate_switch {
                            bland = true;
                        }
                    } else {
                        degen_run = 0;
                    }
                }
            }
        }
        if tab.artificial_sum() > opts.feasibility_tol {
            return LpSolution {
                status: LpStatus::Infeasible,
                values: Vec::new(),
                objective: f64::NAN,
            };
        }
        // Drive basic artificials out on degenerate pivots where possible.
        for r in 0..tab.m {
            if !tab.artificial[tab.basis[r]] {
                continue;
            }
            let mut pivot_col = None;
            for j in 0..tab.cols {
                if !tab.artificial[j] && !tab.in_basis[j] && tab.at(r, j).abs() > 1e-8 {
                    pivot_col = Some(j);
                    break;
                }
            }
            if let Some(j) = pivot_col {
                tab.pivot(r, j);
            }
            // Otherwise the row is redundant; the artificial stays basic at 0
            // and no structural column can ever move it.
        }
    }

    // Phase 2.
    loop {
        iters += 1;
        if iters > max_iters {
            return failure();
        }
        match tab.step(false, bland, opts) {
            StepOutcome::PhaseDone => break,
            StepOutcome::Unbounded => {
                return LpSolution {
                    status: LpStatus::Unbounded,
                    values: Vec::new(),
                    objective: f64::NAN,
                }
            }
            StepOutcome::Progress { degenerate } => {
                if degenerate {
                    degen_run += 1;
                    if degen_run > opts.degenerate_switch {
                        bland = true;
                    }
                } else {
                    degen_run = 0;
                }
            }
        }
    }

    // Any basic artificial must still be at zero.
    if tab.artificial_sum() > opts.feasibility_tol {
        return failure();
    }

    // Recover internal values, then model values.
    let mut internal = vec![0.0; tab.cols];
    for i in 0..tab.m {
        internal[tab.basis[i]] = tab.rhs[i];
    }
    for j in 0..tab.cols {
        if tab.flipped[j] {
            internal[j] = tab.width[j] - internal[j];
        }
    }
    let mut values = vec![0.0; nvars];
    for j in 0..nvars {
        values[j] = match maps[j] {
            ColMap::Shifted { col, shift, sign } => shift + sign * internal[col],
            ColMap::Split { pos, neg } => internal[pos] - internal[neg],
        };
        // Clean tiny bound violations from roundoff.
        values[j] = values[j].clamp(lower[j], upper[j]);
    }

    // Independent feasibility check; never report a wrong optimum.
    let check_tol = opts.feasibility_tol.max(1e-9) * 100.0;
    for con in &model.constraints {
        let lhs: f64 = con.coeffs.iter().map(|&(v, c)| c * values[v]).sum();
        let scale = 1.0 + con.coeffs.iter().map(|&(_, c)| c.abs()).sum::<f64>() + con.rhs.abs();
        let viol = match con.relation {
            Relation::Le => lhs - con.rhs,
            Relation::Ge => con.rhs - lhs,
            Relation::Eq => (lhs - con.rhs).abs(),
        };
        if viol > check_tol * scale {
            return failure();
        }
    }

    let objective = model.objective_value(&values);
    LpSolution {
        status: LpStatus::Optimal,
        values,
        objective,
    }
}

fn failure() -> LpSolution {
    LpSolution {
        status: LpStatus::NumericalFailure,
        values: Vec::new(),
        objective: f64::NAN,
    }
}

/// Solves the LP relaxation (integrality flags ignored).
pub fn solve_lp(model: &MilpModel) -> LpSolution {
    let lower: Vec<f64> = model.vars.iter().map(|v| v.lower).collect();
    let upper: Vec<f64> = model.vars.iter().map(|v| v.upper).collect();
    solve_lp_with_bounds(model, &lower, &upper, &LpOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::milp::model::{LinExpr, Sense};

    #[test]
    fn single_variable_box() {
        // max x s.t. x <= 3, x >= 0
        let mut m = MilpModel::new();
        let x = m.add_variable("x", 0.0, f64::INFINITY).unwrap();
        m.add_constraint(&LinExpr::term(x, 1.0), Relation::Le, 3.0)
            .unwrap();
        m.set_objective(&LinExpr::term(x, 1.0), Sense::Maximize).unwrap();
        let sol = solve_lp(&m);
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.values[0] - 3.0).abs() < 1e-9);
        assert!((sol.objective - 3.0).abs() < 1e-9);
    }

    #[test]
    fn two_variable_budget() {
        // max x + y s.t. x + y <= 1
        let mut m = MilpModel::new();
        let x = m.add_variable("x", 0.0, f64::INFINITY).unwrap();
        let y = m.add_variable("y", 0.0, f64::INFINITY).unwrap();
        let mut e = LinExpr::new();
        e.add_term(x, 1.0).add_term(y, 1.0);
        m.add_constraint(&e, Relation::Le, 1.0).unwrap();
        m.set_objective(&e, Sense::Maximize).unwrap();
        let sol = solve_lp(&m);
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.objective - 1.0).abs() < 1e-9);
    }

    #[test]
    fn infeasible_detected() {
        // x >= 2 and x <= 1
        let mut m = MilpModel::new();
        let x = m.add_variable("x", 0.0, f64::INFINITY).unwrap();
        m.add_constraint(&LinExpr::term(x, 1.0), Relation::Ge, 2.0)
            .unwrap();
        m.add_constraint(&LinExpr::term(x, 1.0), Relation::Le, 1.0)
            .unwrap();
        m.set_objective(&LinExpr::term(x, 1.0), Sense::Maximize).unwrap();
        assert_eq!(solve_lp(&m).status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        let mut m = MilpModel::new();
        let x = m.add_variable("x", 0.0, f64::INFINITY).unwrap();
        m.set_objective(&LinExpr::term(x, 1.0), Sense::Maximize).unwrap();
        assert_eq!(solve_lp(&m).status, LpStatus::Unbounded);
    }

    #[test]
    fn negative_bounds_and_minimization() {
        // min x + 2y s.t. x + y >= -1, x in [-5, 5], y in [-5, 5]
        let mut m = MilpModel::new();
        let x = m.add_variable("x", -5.0, 5.0).unwrap();
        let y = m.add_variable("y", -5.0, 5.0).unwrap();
        let mut con = LinExpr::new();
        con.add_term(x, 1.0).add_term(y, 1.0);
        m.add_constraint(&con, Relation::Ge, -1.0).unwrap();
        let mut obj = LinExpr::new();
        obj.add_term(x, 1.0).add_term(y, 2.0);
        m.set_objective(&obj, Sense::Minimize).unwrap();
        let sol = solve_lp(&m);
        assert_eq!(sol.status, LpStatus::Optimal);
        // Optimal: y as small as possible given x+y >= -1 and x free to 5:
        // minimize x + 2y -> x = 4? check: objective x + 2y with x + y >= -1.
        // Take y = -5, then x >= 4, objective = 4 - 10 = -6.
        assert!((sol.objective - (-6.0)).abs() < 1e-8, "obj={}", sol.objective);
    }

    #[test]
    fn free_variable_split() {
        // min y s.t. y >= x - 2, y >= -x, x free
        let mut m = MilpModel::new();
        let x = m
            .add_variable("x", f64::NEG_INFINITY, f64::INFINITY)
            .unwrap();
        let y = m
            .add_variable("y", f64::NEG_INFINITY, f64::INFINITY)
            .unwrap();
        let mut c1 = LinExpr::new();
        c1.add_term(y, 1.0).add_term(x, -1.0);
        m.add_constraint(&c1, Relation::Ge, -2.0).unwrap();
        let mut c2 = LinExpr::new();
        c2.add_term(y, 1.0).add_term(x, 1.0);
        m.add_constraint(&c2, Relation::Ge, 0.0).unwrap();
        m.set_objective(&LinExpr::term(y, 1.0), Sense::Minimize).unwrap();
        let sol = solve_lp(&m);
        assert_eq!(sol.status, LpStatus::Optimal);
        // min max(x-2, -x) at x = 1 -> y = -1.
        assert!((sol.objective - (-1.0)).abs() < 1e-8);
    }

    #[test]
    fn equality_rows() {
        // max x + y s.t. x + y = 2, x - y = 0 -> x = y = 1
        let mut m = MilpModel::new();
        let x = m.add_variable("x", 0.0, 10.0).unwrap();
        let y = m.add_variable("y", 0.0, 10.0).unwrap();
        let mut c1 = LinExpr::new();
        c1.add_term(x, 1.0).add_term(y, 1.0);
        m.add_constraint(&c1, Relation::Eq, 2.0).unwrap();
        let mut c2 = LinExpr::new();
        c2.add_term(x, 1.0).add_term(y, -1.0);
        m.add_constraint(&c2, Relation::Eq, 0.0).unwrap();
        let mut obj = LinExpr::new();
        obj.add_term(x, 1.0).add_term(y, 1.0);
        m.set_objective(&obj, Sense::Maximize).unwrap();
        let sol = solve_lp(&m);
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.values[0] - 1.0).abs() < 1e-8);
        assert!((sol.values[1] - 1.0).abs() < 1e-8);
    }

    #[test]
    fn fixed_variable() {
        let mut m = MilpModel::new();
        let x = m.add_variable("x", 2.0, 2.0).unwrap();
        let y = m.add_variable("y", 0.0, 10.0).unwrap();
        let mut c = LinExpr::new();
        c.add_term(x, 1.0).add_term(y, 1.0);
        m.add_constraint(&c, Relation::Le, 5.0).unwrap();
        m.set_objective(&LinExpr::term(y, 1.0), Sense::Maximize).unwrap();
        let sol = solve_lp(&m);
        assert_eq!(sol.status, LpStatus::Optimal);
        assert!((sol.values[0] - 2.0).abs() < 1e-12);
        assert!((sol.values[1] - 3.0).abs() < 1e-8);
    }
}
