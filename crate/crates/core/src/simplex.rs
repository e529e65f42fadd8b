//! Dense primal simplex for `max c.x  s.t.  A x <= b, x >= 0` with `b >= 0`.
//!
//! The right-hand sides we feed it are all ones, so the slack basis is
//! feasible and no phase-1 is needed. Entering column by Dantzig's rule
//! (most negative reduced cost); after a long degenerate stall the rule
//! switches to Bland's, which cannot cycle. Leaving row by minimum ratio,
//! ties broken toward the lowest basis index.
//!
//! Duals come out of the objective row under the slack columns, so the
//! caller gets the optimal `y` of `min b.y  s.t.  A^T y >= c, y >= 0` for
//! free.

/// Reduced costs / pivot entries below this are treated as zero. Our
/// matrices hold multiplier powers of magnitude `O(1)`–`O(100)`, so an
/// absolute cutoff is adequate.
const EPS: f64 = 1e-10;

/// Consecutive non-improving pivots tolerated before Bland's rule takes
/// over.
const STALL_LIMIT: usize = 64;

#[derive(Debug, Clone)]
pub(crate) struct LpOutcome {
    pub objective: f64,
    pub x: Vec<f64>,
    /// One multiplier per constraint row.
    pub duals: Vec<f64>,
    pub pivots: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum LpError {
    Unbounded,
    IterationCap,
}

pub(crate) fn solve_max_leq(
    c: &[f64],
    rows: &[Vec<f64>],
    b: &[f64],
    pivot_cap: usize,
) -> Result<LpOutcome, LpError> {
    let m = rows.len();
    let n = c.len();
    assert_eq!(b.len(), m, "one rhs entry per row");
    for row in rows {
        assert_eq!(row.len(), n, "ragged constraint matrix");
    }
    debug_assert!(b.iter().all(|&bi| bi >= 0.0), "slack start needs b >= 0");

    let width = n + m + 1;
    let rhs = n + m;
    let mut t = vec![vec![0.0f64; width]; m + 1];
    for (i, row) in rows.iter().enumerate() {
        t[i][..n].copy_from_slice(row);
        t[i][n + i] = 1.0;
        t[i][rhs] = b[i];
    }
    for j in 0..n {
        t[m][j] = -c[j];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    let mut pivots = 0usize;
    let mut stall = 0usize;
    let mut bland = false;
    let mut last_obj = 0.0f64;

    loop {
        // Entering column.
        let entering = if bland {
            (0..n + m).find(|&j| t[m][j] < -EPS)
        } else {
            let mut best = None;
            let mut best_val = -EPS;
            for (j, &v) in t[m][..n + m].iter().enumerate() {
                if v < best_val {
                    best_val = v;
                    best = Some(j);
                }
            }
            best
        };
        let Some(e) = entering else {
            let objective = t[m][rhs];
            let mut x = vec![0.0; n];
            for (i, &bi) in basis.iter().enumerate() {
                if bi < n {
                    x[bi] = t[i][rhs];
                }
            }
            let duals = (0..m).map(|i| t[m][n + i].max(0.0)).collect();
            return Ok(LpOutcome {
                objective,
                x,
                duals,
                pivots,
            });
        };

        // Leaving row: minimum ratio, lowest basis index on ties.
        let mut leave: Option<usize> = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..m {
            if t[i][e] > EPS {
                let ratio = t[i][rhs] / t[i][e];
                let better = match leave {
                    None => true,
                    Some(l) => {
                        ratio < best_ratio - EPS
                            || (ratio < best_ratio + EPS && basis[i] < basis[l])
                    }
                };
                if better {
                    best_ratio = ratio.min(best_ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(r) = leave else {
            return Err(LpError::Unbounded);
        };

        // Pivot on (r, e).
        let pv = t[r][e];
        for v in t[r].iter_mut() {
            *v /= pv;
        }
        for i in 0..=m {
            if i == r {
                continue;
            }
            let factor = t[i][e];
            if factor != 0.0 {
                // Two rows of `t` at once; an index loop sidesteps the borrow.
                #[allow(clippy::needless_range_loop)]
                for j in 0..width {
                    t[i][j] -= factor * t[r][j];
                }
                t[i][e] = 0.0;
            }
        }
        basis[r] = e;
        pivots += 1;
        if pivots >= pivot_cap {
            return Err(LpError::IterationCap);
        }

        let obj = t[m][rhs];
        if obj > last_obj + EPS {
            stall = 0;
            last_obj = obj;
        } else {
            stall += 1;
            if stall >= STALL_LIMIT {
                bland = true;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_vertex() {
        // max x + y : x + 2y <= 4, 3x + y <= 6 -> x = 8/5, y = 6/5.
        let out = solve_max_leq(
            &[1.0, 1.0],
            &[vec![1.0, 2.0], vec![3.0, 1.0]],
            &[4.0, 6.0],
            1000,
        )
        .unwrap();
        assert!((out.objective - 2.8).abs() < 1e-12);
        assert!((out.x[0] - 1.6).abs() < 1e-12);
        assert!((out.x[1] - 1.2).abs() < 1e-12);
        assert!((out.duals[0] - 0.4).abs() < 1e-12);
        assert!((out.duals[1] - 0.2).abs() < 1e-12);
    }

    #[test]
    fn strong_duality_holds() {
        let c = [2.0, 3.0, 1.0];
        let rows = vec![
            vec![1.0, 1.0, 1.0],
            vec![2.0, 1.0, 0.0],
            vec![0.0, 1.0, 3.0],
        ];
        let b = [10.0, 8.0, 9.0];
        let out = solve_max_leq(&c, &rows, &b, 1000).unwrap();
        let dual_obj: f64 = out.duals.iter().zip(&b).map(|(y, bi)| y * bi).sum();
        assert!((out.objective - dual_obj).abs() < 1e-9);
        // Dual feasibility: A^T y >= c.
        for j in 0..3 {
            let lhs: f64 = (0..3).map(|i| rows[i][j] * out.duals[i]).sum();
            assert!(lhs >= c[j] - 1e-9);
        }
    }

    #[test]
    fn unbounded_detected() {
        let err = solve_max_leq(&[1.0, 0.0], &[vec![-1.0, 1.0]], &[1.0], 1000).unwrap_err();
        assert_eq!(err, LpError::Unbounded);
    }

    #[test]
    fn beale_degenerate_instance() {
        // Classic cycling example for naive pivoting; the stall guard must
        // still reach the optimum 1/20 at x = (1/25, 0, 1, 0).
        let c = [0.75, -150.0, 0.02, -6.0];
        let rows = vec![
            vec![0.25, -60.0, -0.04, 9.0],
            vec![0.5, -90.0, -0.02, 3.0],
            vec![0.0, 0.0, 1.0, 0.0],
        ];
        let b = [0.0, 0.0, 1.0];
        let out = solve_max_leq(&c, &rows, &b, 10_000).unwrap();
        assert!((out.objective - 0.05).abs() < 1e-9, "got {}", out.objective);
        assert!((out.x[0] - 0.04).abs() < 1e-9);
        assert!((out.x[2] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn all_ones_game_row() {
        // One constraint sum x_j <= 1 with unit costs: objective 1, dual 1.
        let out = solve_max_leq(&[1.0; 5], &[vec![1.0; 5]], &[1.0], 100).unwrap();
        assert!((out.objective - 1.0).abs() < 1e-12);
        assert!((out.duals[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn iteration_cap_reported() {
        let err = solve_max_leq(
            &[1.0, 1.0],
            &[vec![1.0, 2.0], vec![3.0, 1.0]],
            &[4.0, 6.0],
            1,
        )
        .unwrap_err();
        assert_eq!(err, LpError::IterationCap);
    }
}
