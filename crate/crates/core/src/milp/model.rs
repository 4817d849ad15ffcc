//! Mixed-integer linear program representation and builders.

use crate::error::{Error, Result};

/// Handle to a declared variable; stable for the model's lifetime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(pub(crate) usize);

impl VarId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Handle to a constraint row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstraintId(pub(crate) usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone)]
pub struct Variable {
    pub name: String,
    pub lower: f64,
    pub upper: f64,
    pub integral: bool,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    /// Sorted by variable index, one entry per variable (duplicates summed).
    pub coeffs: Vec<(usize, f64)>,
    pub relation: Relation,
    pub rhs: f64,
}

/// Linear expression `sum coeff * var + constant`, used by builders.
#[derive(Debug, Clone, Default)]
pub struct LinExpr {
    pub terms: Vec<(VarId, f64)>,
    pub constant: f64,
}

impl LinExpr {
    pub fn new() -> Self {
        LinExpr::default()
    }

    pub fn constant(c: f64) -> Self {
        LinExpr {
            terms: Vec::new(),
            constant: c,
        }
    }

    pub fn term(var: VarId, coeff: f64) -> Self {
        LinExpr {
            terms: vec![(var, coeff)],
            constant: 0.0,
        }
    }

    pub fn add_term(&mut self, var: VarId, coeff: f64) -> &mut Self {
        self.terms.push((var, coeff));
        self
    }

    pub fn add_constant(&mut self, c: f64) -> &mut Self {
        self.constant += c;
        self
    }

    /// Adds `scale * other` to this expression.
    pub fn add_scaled(&mut self, other: &LinExpr, scale: f64) -> &mut Self {
        for &(v, c) in &other.terms {
            self.terms.push((v, c * scale));
        }
        self.constant += other.constant * scale;
        self
    }

    pub fn scaled(&self, scale: f64) -> LinExpr {
        let mut out = LinExpr::constant(self.constant * scale);
        for &(v, c) in &self.terms {
            out.terms.push((v, c * scale));
        }
        out
    }

    /// Evaluates the expression against a dense assignment.
    pub fn eval(&self, assignment: &[f64]) -> f64 {
        self.constant
            + self
                .terms
                .iter()
                .map(|&(v, c)| c * assignment[v.0])
                .sum::<f64>()
    }

    /// Collapses duplicate variables, dropping exact zeros.
    fn canonical_terms(&self) -> Vec<(usize, f64)> {
        let mut terms: Vec<(usize, f64)> = self.terms.iter().map(|&(v, c)| (v.0, c)).collect();
        terms.sort_by_key(|&(v, _)| v);
        let mut out: Vec<(usize, f64)> = Vec::with_capacity(terms.len());
        for (v, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += c,
                _ => out.push((v, c)),
            }
        }
        out.retain(|&(_, c)| c != 0.0);
        out
    }
}

/// A mixed-integer linear program under construction or ready to solve.
#[derive(Debug, Clone, Default)]
pub struct MilpModel {
    pub(crate) vars: Vec<Variable>,
    pub(crate) constraints: Vec<Constraint>,
    pub(crate) objective: Vec<f64>,
    pub(crate) objective_constant: f64,
    pub(crate) sense: Sense,
}

impl Default for Sense {
    fn default() -> Self {
        Sense::Maximize
    }
}

impl MilpModel {
    pub fn new() -> Self {
        MilpModel::default()
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn num_binaries(&self) -> usize {
        self.vars.iter().filter(|v| v.integral).count()
    }

    pub fn var(&self, id: VarId) -> &Variable {
        &self.vars[id.0]
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    /// Declares a continuous variable with inclusive bounds (may be infinite).
    pub fn add_variable(&mut self, name: impl Into<String>, lower: f64, upper: f64) -> Result<VarId> {
        let name = name.into();
        if lower.is_nan() || upper.is_nan() {
            return Err(Error::config(format!("variable {name}: NaN bound")));
        }
        if lower > upper {
            return Err(Error::config(format!(
                "variable {name}: lower bound {lower} exceeds upper bound {upper}"
            )));
        }
        self.vars.push(Variable {
            name,
            lower,
            upper,
            integral: false,
        });
        Ok(VarId(self.vars.len() - 1))
    }

    /// Declares a binary variable (bounds [0,1], integral).
    pub fn add_binary(&mut self, name: impl Into<String>) -> VarId {
        self.vars.push(Variable {
            name: name.into(),
            lower: 0.0,
            upper: 1.0,
            integral: true,
        });
        VarId(self.vars.len() - 1)
    }

    fn check_expr(&self, expr: &LinExpr) -> Result<()> {
        for &(v, c) in &expr.terms {
            if v.0 >= self.vars.len() {
                return Err(Error::config(format!("unknown variable handle #{}", v.0)));
            }
            if !c.is_finite() {
                return Err(Error::numeric(format!(
                    "non-finite coefficient {c} on variable {}",
                    self.vars[v.0].name
                )));
            }
        }
        if !expr.constant.is_finite() {
            return Err(Error::numeric("non-finite constant in expression"));
        }
        Ok(())
    }

    /// Adds `expr relation rhs`; the expression's constant folds into the rhs.
    pub fn add_constraint(&mut self, expr: &LinExpr, relation: Relation, rhs: f64) -> Result<ConstraintId> {
        self.check_expr(expr)?;
        if !rhs.is_finite() {
            return Err(Error::numeric("non-finite constraint rhs"));
        }
        self.constraints.push(Constraint {
            coeffs: expr.canonical_terms(),
            relation,
            rhs: rhs - expr.constant,
        });
        Ok(ConstraintId(self.constraints.len() - 1))
    }

    /// Replaces the objective; the expression's constant is reported back in
    /// solution objective values.
    pub fn set_objective(&mut self, expr: &LinExpr, sense: Sense) -> Result<()> {
        self.check_expr(expr)?;
        let mut dense = vec![0.0; self.vars.len()];
        for &(v, c) in &expr.terms {
            dense[v.0] += c;
        }
        self.objective = dense;
        self.objective_constant = expr.constant;
        self.sense = sense;
        Ok(())
    }

    pub(crate) fn objective_coeff(&self, var: usize) -> f64 {
        self.objective.get(var).copied().unwrap_or(0.0)
    }

    /// Objective value of an assignment (including the constant term).
    pub fn objective_value(&self, assignment: &[f64]) -> f64 {
        self.objective_constant
            + self
                .objective
                .iter()
                .zip(assignment)
                .map(|(c, x)| c * x)
                .sum::<f64>()
    }

    /// LP-style text dump for debugging.
    pub fn write_lp(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{}",
            match self.sense {
                Sense::Maximize => "Maximize",
                Sense::Minimize => "Minimize",
            }
        );
        let mut line = String::from(" obj:");
        for (j, &c) in self.objective.iter().enumerate() {
            if c != 0.0 {
                let _ = write!(line, " {:+} {}", c, self.vars[j].name);
            }
        }
        if self.objective_constant != 0.0 {
            let _ = write!(line, " {:+}", self.objective_constant);
        }
        let _ = writeln!(s, "{line}");
        let _ = writeln!(s, "Subject To");
        for (i, con) in self.constraints.iter().enumerate() {
            let mut line = format!(" c{i}:");
            for &(v, c) in &con.coeffs {
                let _ = write!(line, " {:+} {}", c, self.vars[v].name);
            }
            let rel = match con.relation {
                Relation::Le => "<=",
                Relation::Eq => "=",
                Relation::Ge => ">=",
            };
            let _ = writeln!(s, "{line} {rel} {}", con.rhs);
        }
        let _ = writeln!(s, "Bounds");
        for v in &self.vars {
            let _ = writeln!(s, " {} <= {} <= {}", v.lower, v.name, v.upper);
        }
        let binaries: Vec<&str> = self
            .vars
            .iter()
            .filter(|v| v.integral)
            .map(|v| v.name.as_str())
            .collect();
        if !binaries.is_empty() {
            let _ = writeln!(s, "Binaries");
            let _ = writeln!(s, " {}", binaries.join(" "));
        }
        let _ = writeln!(s, "End");
        s
    }
}
