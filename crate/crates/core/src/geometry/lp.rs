//! Exact two-phase simplex over the rationals.
//!
//! Dense tableau, Bland's rule for both the entering and the leaving variable,
//! so the pivot sequence (and therefore every returned certificate) is a pure
//! function of the input. Sizes here are desk scale: tens of rows and columns.

use num_traits::{One, Signed, Zero};

use super::vector::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { point: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn optimal(self) -> Option<(Vec<Rational>, Rational)> {
        match self {
            LpOutcome::Optimal { point, value } => Some((point, value)),
            _ => None,
        }
    }
}

/// `maximize objective·x` subject to the constraints. Variables are
/// nonnegative unless marked free.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    free: Vec<bool>,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            free: vec![false; num_vars],
            objective: vec![Rational::zero(); num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.free.len()
    }

    pub fn set_free(&mut self, var: usize) -> &mut Self {
        self.free[var] = true;
        self
    }

    pub fn set_objective(&mut self, objective: Vec<Rational>) -> &mut Self {
        assert_eq!(objective.len(), self.num_vars());
        self.objective = objective;
        self
    }

    pub fn maximize_var(&mut self, var: usize) -> &mut Self {
        let mut obj = vec![Rational::zero(); self.num_vars()];
        obj[var] = Rational::one();
        self.objective = obj;
        self
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars());
        self.constraints.push(Constraint { coeffs, relation, rhs });
        self
    }

    /// Sparse form of [`add`](Self::add): `(variable, coefficient)` terms.
    pub fn add_terms(&mut self, terms: &[(usize, Rational)], relation: Relation, rhs: Rational) -> &mut Self {
        let mut coeffs = vec![Rational::zero(); self.num_vars()];
        for (var, c) in terms {
            coeffs[*var] += c;
        }
        self.add(coeffs, relation, rhs)
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).solve(self)
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Column offset of each original variable's positive part, and of its
    /// negative part when free.
    var_cols: Vec<(usize, Option<usize>)>,
    artificial_start: usize,
    width: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let mut var_cols = Vec::with_capacity(lp.num_vars());
        let mut col = 0;
        for &free in &lp.free {
            if free {
                var_cols.push((col, Some(col + 1)));
                col += 2;
            } else {
                var_cols.push((col, None));
                col += 1;
            }
        }
        let structural = col;
        let slack_count = lp.constraints.iter().filter(|c| c.relation != Relation::Eq).count();
        // Every row whose slack cannot start in the basis gets an artificial.
        let normalized: Vec<(Vec<Rational>, Relation, Rational)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let rel = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|x| -x).collect(), rel, -c.rhs.clone())
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();
        let artificial_count = normalized.iter().filter(|(_, r, _)| *r != Relation::Le).count();
        let artificial_start = structural + slack_count;
        let width = artificial_start + artificial_count;

        let mut rows = Vec::with_capacity(normalized.len());
        let mut basis = Vec::with_capacity(normalized.len());
        let mut slack = structural;
        let mut artificial = artificial_start;
        for (coeffs, relation, rhs) in normalized {
            let mut row = vec![Rational::zero(); width + 1];
            for (var, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (pos, neg) = var_cols[var];
                row[pos] = c.clone();
                if let Some(neg) = neg {
                    row[neg] = -c;
                }
            }
            row[width] = rhs;
            match relation {
                Relation::Le => {
                    row[slack] = Rational::one();
                    basis.push(slack);
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -Rational::one();
                    slack += 1;
                    row[artificial] = Rational::one();
                    basis.push(artificial);
                    artificial += 1;
                }
                Relation::Eq => {
                    row[artificial] = Rational::one();
                    basis.push(artificial);
                    artificial += 1;
                }
            }
            rows.push(row);
        }
        Tableau { rows, basis, var_cols, artificial_start, width }
    }

    fn solve(mut self, lp: &LinearProgram) -> LpOutcome {
        if self.artificial_start < self.width {
            let mut cost = vec![Rational::zero(); self.width];
            for c in cost.iter_mut().skip(self.artificial_start) {
                *c = -Rational::one();
            }
            let allowed = vec![true; self.width];
            // Phase one is bounded above by zero.
            let _ = self.run(&cost, &allowed);
            let value = self.objective_value(&cost);
            if value.is_negative() {
                return LpOutcome::Infeasible;
            }
            self.drive_out_artificials();
        }
        let mut cost = vec![Rational::zero(); self.width];
        for (var, c) in lp.objective.iter().enumerate() {
            let (pos, neg) = self.var_cols[var];
            cost[pos] = c.clone();
            if let Some(neg) = neg {
                cost[neg] = -c;
            }
        }
        let allowed: Vec<bool> = (0..self.width).map(|j| j < self.artificial_start).collect();
        if !self.run(&cost, &allowed) {
            return LpOutcome::Unbounded;
        }
        let value = self.objective_value(&cost);
        let mut column_values = vec![Rational::zero(); self.width];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            column_values[b] = row[self.width].clone();
        }
        let point = self
            .var_cols
            .iter()
            .map(|&(pos, neg)| match neg {
                Some(neg) => &column_values[pos] - &column_values[neg],
                None => column_values[pos].clone(),
            })
            .collect();
        LpOutcome::Optimal { point, value }
    }

    fn objective_value(&self, cost: &[Rational]) -> Rational {
        self.rows
            .iter()
            .zip(&self.basis)
            .fold(Rational::zero(), |acc, (row, &b)| acc + &cost[b] * &row[self.width])
    }

    /// Maximizes `cost` from the current basic feasible solution. Returns
    /// false if the objective is unbounded.
    fn run(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        let mut reduced: Vec<Rational> = (0..self.width)
            .map(|j| {
                let mut d = cost[j].clone();
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    if !cost[b].is_zero() && !row[j].is_zero() {
                        d -= &cost[b] * &row[j];
                    }
                }
                d
            })
            .collect();
        loop {
            let Some(enter) = (0..self.width).find(|&j| allowed[j] && reduced[j].is_positive()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[self.width] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((leave_row, _)) = leave else {
                return false;
            };
            self.pivot(leave_row, enter);
            let factor = reduced[enter].clone();
            if !factor.is_zero() {
                let pivot_row = &self.rows[leave_row];
                for (d, p) in reduced.iter_mut().zip(pivot_row.iter()) {
                    if !p.is_zero() {
                        *d -= &factor * p;
                    }
                }
            }
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for x in self.rows[row].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[row]);
        for (i, other) in self.rows.iter_mut().enumerate() {
            if i == row || other.is_empty() || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (o, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *o -= &factor * p;
                }
            }
        }
        self.rows[row] = pivot_row;
        self.basis[row] = col;
    }

    fn drive_out_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.artificial_start {
                match (0..self.artificial_start).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(j) => {
                        self.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        // Redundant equality.
                        self.rows.remove(i);
                        self.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
    }
}
