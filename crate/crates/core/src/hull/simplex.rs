//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Solves `min c·λ  s.t.  A·λ = b, λ ≥ 0`. Sized for the local problems
//! that arise in integral convexity: at most a few dozen columns and
//! `n + 1` rows.

use num_traits::{One, Signed, Zero};

use crate::lattice::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal {
        value: Rational,
        solution: Vec<Rational>,
    },
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    /// Reduced costs; the last entry holds minus the objective value.
    obj: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.obj.len() - 1
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c];
        for v in self.rows[r].iter_mut() {
            *v /= p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row[c];
            if !factor.is_zero() {
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= factor * pv;
                }
            }
        }
        let factor = self.obj[c];
        if !factor.is_zero() {
            for (v, pv) in self.obj.iter_mut().zip(&pivot_row) {
                *v -= factor * pv;
            }
        }
        self.basis[r] = c;
    }

    /// Runs Bland's rule over the columns `0..allowed`. Returns `false`
    /// when the objective is unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        let rhs = self.rhs();
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.obj[j].is_negative()) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[enter].is_positive() {
                    let ratio = row[rhs] / row[enter];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return false,
            }
        }
    }
}

/// Minimizes `c·λ` subject to `A·λ = b`, `λ ≥ 0`.
pub fn minimize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let k = c.len();
    debug_assert_eq!(b.len(), m);
    debug_assert!(a.iter().all(|row| row.len() == k));

    // Columns: k structural, m artificial, then the right-hand side.
    let width = k + m + 1;
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = vec![Rational::zero(); width];
        for j in 0..k {
            row[j] = if flip { -a[i][j] } else { a[i][j] };
        }
        row[k + i] = Rational::one();
        row[width - 1] = if flip { -b[i] } else { b[i] };
        rows.push(row);
    }
    let mut obj = vec![Rational::zero(); width];
    for row in &rows {
        for j in 0..k {
            obj[j] -= row[j];
        }
        obj[width - 1] -= row[width - 1];
    }
    let mut t = Tableau {
        rows,
        obj,
        basis: (k..k + m).collect(),
    };
    t.optimize(k + m);
    if !t.obj[width - 1].is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive artificial variables out of the basis; drop redundant rows.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= k {
            match (0..k).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => {
                    t.pivot(r, j);
                    r += 1;
                }
                None => {
                    t.rows.remove(r);
                    t.basis.remove(r);
                }
            }
        } else {
            r += 1;
        }
    }

    // Phase two on the structural columns.
    let rhs = width - 1;
    let mut obj = vec![Rational::zero(); width];
    obj[..k].copy_from_slice(c);
    for (row, &bv) in t.rows.iter().zip(&t.basis) {
        let cb = c[bv];
        if !cb.is_zero() {
            for j in 0..k {
                obj[j] -= cb * row[j];
            }
            obj[rhs] -= cb * row[rhs];
        }
    }
    t.obj = obj;
    if !t.optimize(k) {
        return LpOutcome::Unbounded;
    }
    let mut solution = vec![Rational::zero(); k];
    for (row, &bv) in t.rows.iter().zip(&t.basis) {
        solution[bv] = row[rhs];
    }
    LpOutcome::Optimal {
        value: -t.obj[rhs],
        solution,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{int, rat};

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn convex_combination_hitting_midpoint() {
        // columns (0,0), (1,1); target (1/2, 1/2)
        let a = vec![q(&[0, 1]), q(&[0, 1]), q(&[1, 1])];
        let b = vec![rat(1, 2), rat(1, 2), int(1)];
        let out = minimize(&a, &b, &q(&[0, 1]));
        assert_eq!(
            out,
            LpOutcome::Optimal {
                value: rat(1, 2),
                solution: vec![rat(1, 2), rat(1, 2)]
            }
        );
    }

    #[test]
    fn infeasible_system() {
        let a = vec![q(&[1, 1])];
        let b = vec![int(-1)];
        assert_eq!(minimize(&a, &b, &q(&[0, 0])), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_system() {
        // x1 - x2 = 0, minimize -x1
        let a = vec![q(&[1, -1])];
        let b = vec![int(0)];
        assert_eq!(minimize(&a, &b, &q(&[-1, 0])), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_are_dropped() {
        let a = vec![q(&[1, 1, 0]), q(&[2, 2, 0]), q(&[0, 0, 1])];
        let b = vec![int(2), int(4), int(1)];
        let out = minimize(&a, &b, &q(&[3, 1, 0]));
        match out {
            LpOutcome::Optimal { value, solution } => {
                assert_eq!(value, int(2));
                assert_eq!(solution, q(&[0, 2, 1]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's classic cycling instance, in equality form with slacks.
        let a = vec![
            vec![rat(1, 4), int(-8), int(-1), int(9), int(1), int(0), int(0)],
            vec![rat(1, 2), int(-12), rat(-1, 2), int(3), int(0), int(1), int(0)],
            vec![int(0), int(0), int(1), int(0), int(0), int(0), int(1)],
        ];
        let b = vec![int(0), int(0), int(1)];
        let c = vec![rat(-3, 4), int(20), rat(-1, 2), int(6), int(0), int(0), int(0)];
        match minimize(&a, &b, &c) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(-5, 4)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
