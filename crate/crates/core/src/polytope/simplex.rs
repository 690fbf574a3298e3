//! Phase-1 primal simplex over exact rationals, dense tableau, Bland's rule.
//!
//! Decides feasibility of `A q = b, q >= 0` with `b >= 0`. On success the
//! basic feasible point is returned; on failure the simplex multipliers give a
//! Farkas vector `y` with `y^T A <= 0` componentwise and `y^T b > 0`.

use crate::rational::Rational;

pub(crate) enum Phase1 {
    /// A feasible `q` (length = number of columns of `A`).
    Feasible(Vec<Rational>),
    /// A Farkas certificate `y` (length = number of rows of `A`).
    Infeasible(Vec<Rational>),
}

/// Runs phase 1 on `A q = b`, `q >= 0`. Requires `b >= 0` componentwise
/// (callers pass probability tables, which satisfy this by construction).
pub(crate) fn feasibility(a: &[Vec<Rational>], b: &[Rational]) -> Phase1 {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert!(b.len() == m);
    debug_assert!(b.iter().all(|v| !v.is_negative()));

    let width = n + m + 1; // structural | artificial | rhs
    let rhs = n + m;

    // Tableau rows [B^-1 A | B^-1 | B^-1 b], starting from basis = artificials.
    let mut rows: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = Vec::with_capacity(width);
            row.extend(a[i].iter().cloned());
            for k in 0..m {
                row.push(if k == i { Rational::one() } else { Rational::zero() });
            }
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Objective row: reduced costs of min sum(artificials), and -w in the rhs
    // slot. Initially r_j = -sum_i A_ij for structural j, 0 for artificials.
    let mut zrow: Vec<Rational> = vec![Rational::zero(); width];
    for j in 0..n {
        let mut s = Rational::zero();
        for row in &rows {
            if !row[j].is_zero() {
                s = s + row[j].clone();
            }
        }
        zrow[j] = -s;
    }
    let mut w = Rational::zero();
    for v in b {
        w = w + v.clone();
    }
    zrow[rhs] = -w;

    loop {
        // Bland: entering column is the lowest index with a negative reduced cost.
        let Some(pc) = (0..n + m).find(|&j| zrow[j].is_negative()) else {
            break;
        };

        // Ratio test; ties broken by the lowest basic-variable index (Bland).
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if rows[i][pc].is_negative() || rows[i][pc].is_zero() {
                continue;
            }
            let ratio = &rows[i][rhs] / &rows[i][pc];
            match &leave {
                None => leave = Some((i, ratio)),
                Some((best_i, best_ratio)) => {
                    if ratio < *best_ratio
                        || (ratio == *best_ratio && basis[i] < basis[*best_i])
                    {
                        leave = Some((i, ratio));
                    }
                }
            }
        }
        // The phase-1 objective is bounded below by 0, so a pivot row exists.
        let (pr, _) = leave.expect("phase-1 column with negative reduced cost has a pivot row");

        // Normalize the pivot row.
        let pivot = rows[pr][pc].clone();
        if !pivot.is_one() {
            let inv = pivot.recip().expect("pivot is nonzero");
            for v in rows[pr].iter_mut() {
                if !v.is_zero() {
                    *v = &*v * &inv;
                }
            }
        }

        // Eliminate the pivot column from the other rows and the objective row.
        let pivot_row = rows[pr].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == pr || row[pc].is_zero() {
                continue;
            }
            let factor = row[pc].clone();
            for (v, p) in row.iter_mut().zip(pivot_row.iter()) {
                if !p.is_zero() {
                    *v = &*v - &(&factor * p);
                }
            }
        }
        if !zrow[pc].is_zero() {
            let factor = zrow[pc].clone();
            for (v, p) in zrow.iter_mut().zip(pivot_row.iter()) {
                if !p.is_zero() {
                    *v = &*v - &(&factor * p);
                }
            }
        }
        basis[pr] = pc;
    }

    let w = -zrow[rhs].clone();
    if w.is_zero() {
        let mut q = vec![Rational::zero(); n];
        for (i, &var) in basis.iter().enumerate() {
            if var < n {
                q[var] = rows[i][rhs].clone();
            }
        }
        Phase1::Feasible(q)
    } else {
        // Simplex multipliers: pi_i = c_i^art - r_i^art = 1 - r_{n+i}.
        let y = (0..m)
            .map(|i| Rational::one() - zrow[n + i].clone())
            .collect();
        Phase1::Infeasible(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn feasible_system_returns_exact_solution() {
        // q0 + q1 = 1, q0 - q1 = 0 has q = (1/2, 1/2).
        // Rewritten with nonnegative rhs: q0 + q1 = 1; q0 + 2 q1 = 3/2.
        let a = vec![
            vec![r(1, 1), r(1, 1)],
            vec![r(1, 1), r(2, 1)],
        ];
        let b = vec![r(1, 1), r(3, 2)];
        match feasibility(&a, &b) {
            Phase1::Feasible(q) => {
                assert_eq!(q, vec![r(1, 2), r(1, 2)]);
            }
            Phase1::Infeasible(_) => panic!("system is feasible"),
        }
    }

    #[test]
    fn infeasible_system_yields_farkas_certificate() {
        // q0 = 1 and q0 = 2 cannot both hold.
        let a = vec![vec![r(1, 1)], vec![r(1, 1)]];
        let b = vec![r(1, 1), r(2, 1)];
        match feasibility(&a, &b) {
            Phase1::Feasible(_) => panic!("system is infeasible"),
            Phase1::Infeasible(y) => {
                // y^T A <= 0 componentwise and y^T b > 0.
                let col = &y[0] + &y[1];
                assert!(col.is_zero() || col.is_negative());
                let val = &(&y[0] * &b[0]) + &(&y[1] * &b[1]);
                assert!(!val.is_negative() && !val.is_zero());
            }
        }
    }

    #[test]
    fn nonnegativity_makes_negative_targets_infeasible() {
        // q0 - can't reach: 2 q0 = 1 and q0 = 1 conflict.
        let a = vec![vec![r(2, 1)], vec![r(1, 1)]];
        let b = vec![r(1, 1), r(1, 1)];
        match feasibility(&a, &b) {
            Phase1::Feasible(_) => panic!("system is infeasible"),
            Phase1::Infeasible(y) => {
                let col = &(&y[0] * &r(2, 1)) + &y[1];
                assert!(col.is_zero() || col.is_negative());
                let val = &y[0] + &y[1];
                assert!(!val.is_negative() && !val.is_zero());
            }
        }
    }

    #[test]
    fn redundant_constraints_stay_feasible() {
        let a = vec![
            vec![r(1, 1), r(1, 1)],
            vec![r(1, 1), r(1, 1)],
            vec![r(2, 1), r(2, 1)],
        ];
        let b = vec![r(1, 1), r(1, 1), r(2, 1)];
        match feasibility(&a, &b) {
            Phase1::Feasible(q) => {
                assert_eq!(&q[0] + &q[1], r(1, 1));
            }
            Phase1::Infeasible(_) => panic!("system is feasible"),
        }
    }
}
