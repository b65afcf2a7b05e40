//! Exact rational linear programming: phase-1 feasibility and a small
//! phase-2 optimizer, dense tableau with Bland's rule. No tolerances
//! anywhere; every pivot is an exact rational operation.
//!
//! Standard form here is `A x = b`, `x >= 0`. Callers encode shifted or
//! free variables themselves (free = difference of two nonnegatives).

use num::traits::{Signed, Zero};

use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    /// Optimal value and a maximizer.
    Optimal(Rat, Vec<Rat>),
    Unbounded,
    Infeasible,
}

struct Tableau {
    // m x (n + 1); last column is the rhs.
    rows: Vec<Vec<Rat>>,
    basis: Vec<usize>,
    n: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let piv = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x = &*x / &piv;
        }
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let factor = self.rows[i][c].clone();
            for j in 0..=self.n {
                let sub = &factor * &self.rows[r][j];
                self.rows[i][j] = &self.rows[i][j] - &sub;
            }
        }
        self.basis[r] = c;
    }

    fn solution(&self) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); self.n];
        for (i, &b) in self.basis.iter().enumerate() {
            x[b] = self.rows[i][self.n].clone();
        }
        x
    }

    /// Maximizes c^T x from the current basic feasible solution.
    /// `allowed` restricts entering variables (used to bar artificials).
    fn optimize(&mut self, c: &[Rat], allowed: &[bool]) -> LpOutcome {
        loop {
            // Reduced costs z_j - c_j computed from the basis.
            let mut entering = None;
            'cols: for j in 0..self.n {
                if !allowed[j] || self.basis.contains(&j) {
                    continue;
                }
                let mut red = c[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    let sub = &c[b] * &self.rows[i][j];
                    red = &red - &sub;
                }
                if red.is_positive() {
                    entering = Some(j);
                    break 'cols; // Bland: smallest improving index
                }
            }
            let Some(j) = entering else {
                let x = self.solution();
                let val = c.iter().zip(&x).map(|(a, b)| a * b).sum();
                return LpOutcome::Optimal(val, x);
            };
            // Ratio test; Bland tie-break on smallest basis variable.
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][j].is_positive() {
                    continue;
                }
                let ratio = &self.rows[i][self.n] / &self.rows[i][j];
                match &leave {
                    None => leave = Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
            let Some((r, _)) = leave else {
                return LpOutcome::Unbounded;
            };
            self.pivot(r, j);
        }
    }
}

/// Maximize `objective . x` subject to `a x = b`, `x >= 0`.
pub fn maximize(a: &[Vec<Rat>], b: &[Rat], objective: &[Rat]) -> LpOutcome {
    let m = a.len();
    let n = objective.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);

    // Phase 1 with artificial variables; flip rows to make rhs >= 0.
    let total = n + m;
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<Rat> = Vec::with_capacity(total + 1);
        for j in 0..n {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { Rat::one_value() } else { Rat::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis: (n..n + m).collect(),
        n: total,
    };
    let mut phase1_obj = vec![Rat::zero(); total];
    for c in phase1_obj.iter_mut().skip(n) {
        *c = -Rat::one_value();
    }
    let allowed = vec![true; total];
    match t.optimize(&phase1_obj, &allowed) {
        LpOutcome::Optimal(v, _) if v.is_zero() => {}
        LpOutcome::Optimal(..) => return LpOutcome::Infeasible,
        LpOutcome::Unbounded => unreachable!("phase-1 objective is bounded above by 0"),
        LpOutcome::Infeasible => unreachable!(),
    }
    // Drive remaining artificial variables out of the basis when possible;
    // rows with no real pivot are redundant equalities and can be ignored
    // because their rhs is zero at optimum.
    for i in 0..t.rows.len() {
        if t.basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, j);
            }
        }
    }

    // Phase 2: bar artificials from entering.
    let mut allowed = vec![true; total];
    for a in allowed.iter_mut().skip(n) {
        *a = false;
    }
    let mut phase2_obj = vec![Rat::zero(); total];
    phase2_obj[..n].clone_from_slice(objective);
    match t.optimize(&phase2_obj, &allowed) {
        LpOutcome::Optimal(v, x) => LpOutcome::Optimal(v, x[..n].to_vec()),
        other => other,
    }
}

/// Does `a x = b`, `x >= 0` admit a solution?
pub fn feasible(a: &[Vec<Rat>], b: &[Rat]) -> bool {
    let n = a.first().map_or(0, |r| r.len());
    if a.is_empty() {
        return true;
    }
    let zero_obj = vec![Rat::zero(); n];
    !matches!(maximize(a, b, &zero_obj), LpOutcome::Infeasible)
}

/// One feasible point of `a x = b`, `x >= 0`, if any.
pub fn feasible_point(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.first().map_or(0, |r| r.len());
    let zero_obj = vec![Rat::zero(); n];
    match maximize(a, b, &zero_obj) {
        LpOutcome::Optimal(_, x) => Some(x),
        _ => None,
    }
}

trait RatOne {
    fn one_value() -> Rat;
}
impl RatOne for Rat {
    fn one_value() -> Rat {
        use num::One;
        Rat::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn simple_feasible_system() {
        // x + y = 2, x - y = 0 with x,y >= 0 -> x = y = 1
        let a = vec![
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(1), rat_int(-1)],
        ];
        let b = vec![rat_int(2), rat_int(0)];
        let x = feasible_point(&a, &b).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(1)]);
    }

    #[test]
    fn infeasible_system() {
        // x = -1 with x >= 0
        let a = vec![vec![rat_int(1)]];
        let b = vec![rat_int(-1)];
        assert!(!feasible(&a, &b));
    }

    #[test]
    fn maximization_with_optimum() {
        // max x + y s.t. x + 2y = 4, x,y >= 0 -> x = 4, y = 0, value 4
        let a = vec![vec![rat_int(1), rat_int(2)]];
        let b = vec![rat_int(4)];
        match maximize(&a, &b, &[rat_int(1), rat_int(1)]) {
            LpOutcome::Optimal(v, x) => {
                assert_eq!(v, rat_int(4));
                assert_eq!(x, vec![rat_int(4), rat_int(0)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unbounded_detected() {
        // max x s.t. x - y = 0: x can grow with y.
        let a = vec![vec![rat_int(1), rat_int(-1)]];
        let b = vec![rat_int(0)];
        assert_eq!(
            maximize(&a, &b, &[rat_int(1), rat_int(0)]),
            LpOutcome::Unbounded
        );
    }

    #[test]
    fn exact_fractions_survive() {
        // x = 1/3 forced by 3x = 1.
        let a = vec![vec![rat_int(3)]];
        let b = vec![rat_int(1)];
        let x = feasible_point(&a, &b).unwrap();
        assert_eq!(x[0], rat(1, 3));
    }

    #[test]
    fn redundant_rows_ok() {
        // Duplicate equations should not confuse phase 1.
        let a = vec![
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(1), rat_int(1)],
            vec![rat_int(2), rat_int(2)],
        ];
        let b = vec![rat_int(2), rat_int(2), rat_int(4)];
        assert!(feasible(&a, &b));
    }
}
