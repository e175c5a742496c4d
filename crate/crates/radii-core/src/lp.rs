//! Dense two-phase primal simplex for the small linear programs behind
//! Chebyshev centers, section inradii and feasibility certificates.
//!
//! Variables are free (internally split into positive parts), constraints are
//! `normal·x ≤ offset`. Pivoting follows Bland's rule on both the entering
//! and the leaving choice, so the solver is deterministic and cannot cycle.

use crate::error::{Error, Result};
use crate::linalg::Vector;

/// Maximize `objective·x` subject to `normals[k]·x ≤ offsets[k]`, x free.
#[derive(Debug, Clone)]
pub struct LpProblem {
    pub objective: Vector,
    pub normals: Vec<Vector>,
    pub offsets: Vec<f64>,
}

const LP_TOL: f64 = 1e-9;
// pivoting on entries below this floor would amplify a row by > 1e9 and wreck
// the reduced costs
const PIVOT_TOL: f64 = 1e-9;

/// Row-major dense tableau with an inline cost row.
struct Tableau {
    m: usize,
    ncols: usize,
    /// m rows of coefficients, then the cost row; each row has ncols + 1
    /// entries, the last being the rhs (resp. the negated objective value).
    data: Vec<f64>,
    basis: Vec<usize>,
}

impl Tableau {
    fn at(&self, r: usize, c: usize) -> f64 {
        self.data[r * (self.ncols + 1) + c]
    }

    fn rhs(&self, r: usize) -> f64 {
        self.at(r, self.ncols)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let w = self.ncols + 1;
        let p = self.at(row, col);
        let (start, end) = (row * w, (row + 1) * w);
        for k in start..end {
            self.data[k] /= p;
        }
        for r in 0..=self.m {
            if r == row {
                continue;
            }
            let f = self.at(r, col);
            if f == 0.0 {
                continue;
            }
            for c in 0..w {
                let v = self.data[row * w + c];
                self.data[r * w + c] -= f * v;
            }
            // keep the pivot column exactly unit
            self.data[r * w + col] = 0.0;
        }
        self.basis[row] = col;
    }

    /// Price the cost row from scratch for costs `c` (length ncols).
    fn set_costs(&mut self, c: &[f64]) {
        let w = self.ncols + 1;
        for j in 0..w {
            self.data[self.m * w + j] = if j < self.ncols { c[j] } else { 0.0 };
        }
        for r in 0..self.m {
            let cb = c[self.basis[r]];
            if cb == 0.0 {
                continue;
            }
            for j in 0..w {
                let v = self.data[r * w + j];
                self.data[self.m * w + j] -= cb * v;
            }
        }
    }

    /// Run simplex iterations until optimality or unboundedness. Columns with
    /// index ≥ `blocked_from` may not enter the basis.
    fn run(&mut self, blocked_from: usize) -> SimplexEnd {
        let w = self.ncols + 1;
        loop {
            // Bland: entering column = lowest index with positive reduced cost
            let mut enter = None;
            for j in 0..blocked_from.min(self.ncols) {
                if self.data[self.m * w + j] > LP_TOL {
                    enter = Some(j);
                    break;
                }
            }
            let Some(col) = enter else {
                return SimplexEnd::Optimal;
            };
            // ratio test; ties by lowest basis variable index (Bland)
            let mut leave: Option<(usize, f64)> = None;
            for r in 0..self.m {
                let a = self.at(r, col);
                if a > PIVOT_TOL {
                    let ratio = self.rhs(r) / a;
                    match leave {
                        None => leave = Some((r, ratio)),
                        Some((lr, lratio)) => {
                            if ratio < lratio - 1e-12
                                || (ratio < lratio + 1e-12 && self.basis[r] < self.basis[lr])
                            {
                                leave = Some((r, ratio));
                            }
                        }
                    }
                }
            }
            let Some((row, _)) = leave else {
                return SimplexEnd::Unbounded;
            };
            self.pivot(row, col);
        }
    }

    fn objective_value(&self) -> f64 {
        // cost row rhs holds -(current objective)
        -self.rhs(self.m)
    }

    fn basic_solution(&self) -> Vec<f64> {
        let mut x = vec![0.0; self.ncols];
        for r in 0..self.m {
            x[self.basis[r]] = self.rhs(r);
        }
        x
    }
}

enum SimplexEnd {
    Optimal,
    Unbounded,
}

/// Solve the LP; returns (optimum, argmax).
pub fn solve_lp(p: &LpProblem) -> Result<(f64, Vector)> {
    let d = p.objective.len();
    let m = p.normals.len();
    if p.offsets.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: p.offsets.len(),
        });
    }
    for a in &p.normals {
        if a.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: a.len(),
            });
        }
    }
    if d > 20 || m > 500 {
        return Err(Error::InvalidInput(format!(
            "LP size out of range ({m} constraints, {d} variables)"
        )));
    }

    // columns: u_0..u_{d-1}, w_0..w_{d-1} (x = u - w), slacks s_0..s_{m-1},
    // then artificials for rows whose rhs had to be negated
    let nstruct = 2 * d + m;
    let mut flip = vec![false; m];
    let nart = p.offsets.iter().filter(|&&b| b < 0.0).count();
    let ncols = nstruct + nart;
    let w = ncols + 1;
    let mut data = vec![0.0; (m + 1) * w];
    let mut basis = vec![0usize; m];
    let mut art = 0usize;
    for k in 0..m {
        let s = if p.offsets[k] < 0.0 { -1.0 } else { 1.0 };
        flip[k] = s < 0.0;
        for j in 0..d {
            data[k * w + j] = s * p.normals[k][j];
            data[k * w + d + j] = -s * p.normals[k][j];
        }
        data[k * w + 2 * d + k] = s;
        data[k * w + ncols] = s * p.offsets[k];
        if flip[k] {
            data[k * w + nstruct + art] = 1.0;
            basis[k] = nstruct + art;
            art += 1;
        } else {
            basis[k] = 2 * d + k;
        }
    }
    let mut tab = Tableau {
        m,
        ncols,
        data,
        basis,
    };

    if nart > 0 {
        let mut phase1 = vec![0.0; ncols];
        for j in nstruct..ncols {
            phase1[j] = -1.0;
        }
        tab.set_costs(&phase1);
        // the phase-1 objective is bounded by 0, so an "unbounded" outcome is
        // reduced-cost drift on a near-zero column; the objective value still
        // decides feasibility
        let _ = tab.run(ncols);
        if tab.objective_value() < -LP_TOL {
            return Err(Error::Infeasible);
        }
        drive_out_artificials(&mut tab, nstruct);
    }

    let mut cost = vec![0.0; ncols];
    for j in 0..d {
        cost[j] = p.objective[j];
        cost[d + j] = -p.objective[j];
    }
    tab.set_costs(&cost);
    match tab.run(nstruct) {
        SimplexEnd::Optimal => {}
        SimplexEnd::Unbounded => return Err(Error::Unbounded),
    }
    let z = tab.basic_solution();
    let x = Vector::from_fn(d, |j, _| z[j] - z[d + j]);
    Ok((p.objective.dot(&x), x))
}

fn drive_out_artificials(tab: &mut Tableau, art_start: usize) {
    let w = tab.ncols + 1;
    for r in 0..tab.m {
        if tab.basis[r] >= art_start {
            let mut pivot_col = None;
            for j in 0..art_start {
                if tab.at(r, j).abs() > PIVOT_TOL {
                    pivot_col = Some(j);
                    break;
                }
            }
            match pivot_col {
                Some(j) => tab.pivot(r, j),
                None => {
                    // redundant row: zero it so later pivots cannot move it
                    for j in 0..art_start {
                        tab.data[r * w + j] = 0.0;
                    }
                    tab.data[r * w + tab.ncols] = 0.0;
                }
            }
        }
    }
}

/// Find λ ≥ 0 with Σ λ_j cols[j] = rhs, as a basic feasible solution (at most
/// `rhs.len()` nonzero entries). Returns `None` when infeasible.
pub fn solve_eq_feasibility(cols: &[Vector], rhs: &Vector) -> Option<Vec<f64>> {
    let m = rhs.len();
    let n = cols.len();
    if n == 0 {
        return if rhs.norm() <= LP_TOL {
            Some(vec![])
        } else {
            None
        };
    }
    let ncols = n + m;
    let w = ncols + 1;
    let mut data = vec![0.0; (m + 1) * w];
    let mut basis = vec![0usize; m];
    for k in 0..m {
        let s = if rhs[k] < 0.0 { -1.0 } else { 1.0 };
        for j in 0..n {
            data[k * w + j] = s * cols[j][k];
        }
        data[k * w + n + k] = 1.0;
        data[k * w + ncols] = s * rhs[k];
        basis[k] = n + k;
    }
    let mut tab = Tableau {
        m,
        ncols,
        data,
        basis,
    };
    let mut phase1 = vec![0.0; ncols];
    for j in n..ncols {
        phase1[j] = -1.0;
    }
    tab.set_costs(&phase1);
    let _ = tab.run(ncols);
    if tab.objective_value() < -LP_TOL {
        return None;
    }
    drive_out_artificials(&mut tab, n);
    let z = tab.basic_solution();
    Some(z[..n].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vec_from;
    use approx::assert_abs_diff_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn lp(objective: &[f64], rows: &[(&[f64], f64)]) -> LpProblem {
        LpProblem {
            objective: vec_from(objective),
            normals: rows.iter().map(|(a, _)| vec_from(a)).collect(),
            offsets: rows.iter().map(|&(_, b)| b).collect(),
        }
    }

    #[test]
    fn one_dimensional_box() {
        let (v, x) = solve_lp(&lp(&[1.0], &[(&[1.0], 1.0), (&[-1.0], 0.0)])).unwrap();
        assert_abs_diff_eq!(v, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(x[0], 1.0, epsilon = 1e-9);
    }

    #[test]
    fn square_corner() {
        let rows: Vec<(&[f64], f64)> = vec![
            (&[1.0, 0.0], 1.0),
            (&[-1.0, 0.0], 1.0),
            (&[0.0, 1.0], 1.0),
            (&[0.0, -1.0], 1.0),
        ];
        let (v, x) = solve_lp(&lp(&[1.0, 1.0], &rows)).unwrap();
        assert_abs_diff_eq!(v, 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(x[0], 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(x[1], 1.0, epsilon = 1e-9);
    }

    #[test]
    fn infeasible_pair() {
        let r = solve_lp(&lp(&[1.0], &[(&[1.0], 1.0), (&[-1.0], -2.0)]));
        assert_eq!(r, Err(Error::Infeasible));
    }

    #[test]
    fn unbounded_ray() {
        let r = solve_lp(&lp(&[1.0], &[(&[-1.0], 0.0)]));
        assert_eq!(r, Err(Error::Unbounded));
    }

    #[test]
    fn negative_offsets_need_phase_one() {
        // feasible set is [2, 3]; origin infeasible
        let (v, x) = solve_lp(&lp(&[-1.0], &[(&[-1.0], -2.0), (&[1.0], 3.0)])).unwrap();
        assert_abs_diff_eq!(v, -2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(x[0], 2.0, epsilon = 1e-9);
    }

    #[test]
    fn eq_feasibility_basic_solution() {
        // 0 = combination of square corners, and sum of weights = 1
        let cols = vec![
            vec_from(&[1.0, 1.0, 1.0]),
            vec_from(&[-1.0, 1.0, 1.0]),
            vec_from(&[1.0, -1.0, 1.0]),
            vec_from(&[-1.0, -1.0, 1.0]),
        ];
        let rhs = vec_from(&[0.0, 0.0, 1.0]);
        let lam = solve_eq_feasibility(&cols, &rhs).unwrap();
        let nz = lam.iter().filter(|&&l| l > 1e-9).count();
        assert!(nz <= 3);
        let mut acc = vec_from(&[0.0, 0.0, 0.0]);
        for (l, c) in lam.iter().zip(&cols) {
            assert!(*l >= -1e-12);
            acc += c * *l;
        }
        assert!((acc - rhs).norm() < 1e-9);
    }

    #[test]
    fn eq_feasibility_detects_impossible() {
        let cols = vec![vec_from(&[1.0, 0.0])];
        assert!(solve_eq_feasibility(&cols, &vec_from(&[0.0, 1.0])).is_none());
    }

    /// Brute-force LP oracle: enumerate all vertices of the feasible polygon
    /// (pairwise constraint intersections) and take the best feasible one.
    fn oracle_2d(p: &LpProblem) -> Option<(f64, Vector)> {
        let m = p.normals.len();
        let mut best: Option<(f64, Vector)> = None;
        for i in 0..m {
            for j in (i + 1)..m {
                let (a, b) = (&p.normals[i], &p.normals[j]);
                let det = a[0] * b[1] - a[1] * b[0];
                if det.abs() < 1e-10 {
                    continue;
                }
                let x = vec_from(&[
                    (p.offsets[i] * b[1] - a[1] * p.offsets[j]) / det,
                    (a[0] * p.offsets[j] - p.offsets[i] * b[0]) / det,
                ]);
                let feasible = (0..m).all(|k| p.normals[k].dot(&x) <= p.offsets[k] + 1e-8);
                if feasible {
                    let v = p.objective.dot(&x);
                    if best.as_ref().map_or(true, |(bv, _)| v > *bv) {
                        best = Some((v, x));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn matches_vertex_enumeration_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut solved = 0;
        for _ in 0..200 {
            let m = rng.gen_range(3..9);
            let mut normals = Vec::new();
            let mut offsets = Vec::new();
            for _ in 0..m {
                let a = vec_from(&[rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)]);
                if a.norm() < 1e-3 {
                    continue;
                }
                normals.push(a.normalize());
                offsets.push(rng.gen_range(-0.3..1.0));
            }
            let p = LpProblem {
                objective: vec_from(&[rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)]),
                normals,
                offsets,
            };
            let ours = solve_lp(&p);
            match (ours, oracle_2d(&p)) {
                (Ok((v, x)), Some((ov, _))) => {
                    assert!((v - ov).abs() < 1e-7, "value {v} vs oracle {ov}");
                    for k in 0..p.normals.len() {
                        assert!(p.normals[k].dot(&x) <= p.offsets[k] + 1e-9);
                    }
                    solved += 1;
                }
                (Err(Error::Infeasible), None) => {}
                (Err(Error::Unbounded), _) => {} // oracle cannot see rays
                (a, b) => panic!("mismatch: {a:?} vs oracle {b:?}"),
            }
        }
        assert!(solved > 50);
    }
}
