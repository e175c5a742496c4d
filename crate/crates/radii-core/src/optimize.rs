//! Multi-start Nelder–Mead over frame charts.
//!
//! Objectives on the set of i-dimensional subspaces (min-ball radius of a
//! projection, section inradius LPs) are continuous but only piecewise
//! smooth, which is why a derivative-free simplex search is used. Every run
//! is deterministic: starts are the coordinate frames followed by seeded
//! random frames, and ties between equal-valued frames break lexicographically.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{frame_from_chart, orthonormalize, Frame, Vector};

/// Search configuration shared by all Grassmannian optimizations.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    /// Total multi-start budget (coordinate frames plus random frames).
    pub starts: usize,
    /// Seed mixed into the per-start random frames.
    pub seed: u64,
    /// Iteration cap per Nelder–Mead run.
    pub max_iters: usize,
    /// Convergence threshold on the simplex diameter.
    pub tol: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            starts: 64,
            seed: 0,
            max_iters: 400,
            tol: 1e-8,
        }
    }
}

/// Minimize `f` from `x0` with initial step `step`. Returns (argmin, value,
/// converged-by-diameter).
pub fn nelder_mead(
    f: &mut impl FnMut(&[f64]) -> f64,
    x0: &[f64],
    step: f64,
    max_iters: usize,
    tol: f64,
) -> (Vec<f64>, f64, bool) {
    let d = x0.len();
    if d == 0 {
        let v = f(x0);
        return (x0.to_vec(), v, true);
    }
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(d + 1);
    simplex.push((x0.to_vec(), f(x0)));
    for j in 0..d {
        let mut x = x0.to_vec();
        x[j] += step;
        let v = f(&x);
        simplex.push((x, v));
    }
    let mut converged = false;
    for _ in 0..max_iters {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let diam = simplex[1..]
            .iter()
            .map(|(x, _)| {
                x.iter()
                    .zip(&simplex[0].0)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0f64, f64::max);
        if diam < tol {
            converged = true;
            break;
        }
        let worst = simplex[d].1;
        let second = simplex[d - 1].1;
        let best = simplex[0].1;
        let mut centroid = vec![0.0; d];
        for (x, _) in &simplex[..d] {
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c += xi / d as f64;
            }
        }
        let shifted = |coef: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&simplex[d].0)
                .map(|(c, w)| c + coef * (c - w))
                .collect()
        };
        let xr = shifted(1.0);
        let fr = f(&xr);
        if fr < best {
            let xe = shifted(2.0);
            let fe = f(&xe);
            if fe < fr {
                simplex[d] = (xe, fe);
            } else {
                simplex[d] = (xr, fr);
            }
        } else if fr < second {
            simplex[d] = (xr, fr);
        } else {
            let (xc, fc) = if fr < worst {
                let xc = shifted(0.5);
                let fc = f(&xc);
                (xc, fc)
            } else {
                let xc = shifted(-0.5);
                let fc = f(&xc);
                (xc, fc)
            };
            if fc < worst.min(fr) {
                simplex[d] = (xc, fc);
            } else {
                // shrink toward the best vertex
                let x0v = simplex[0].0.clone();
                for k in 1..=d {
                    let x: Vec<f64> = simplex[k]
                        .0
                        .iter()
                        .zip(&x0v)
                        .map(|(xi, bi)| bi + 0.5 * (xi - bi))
                        .collect();
                    let v = f(&x);
                    simplex[k] = (x, v);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, v) = simplex.swap_remove(0);
    (x, v, converged)
}

/// All strictly increasing i-subsets of 0..n in lexicographic order.
pub fn coordinate_axis_subsets(n: usize, i: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut buf = vec![0usize; i];
    fn rec(n: usize, i: usize, depth: usize, start: usize, buf: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if depth == i {
            out.push(buf.clone());
            return;
        }
        for k in start..n {
            buf[depth] = k;
            rec(n, i, depth + 1, k + 1, buf, out);
        }
    }
    rec(n, i, 0, 0, &mut buf, &mut out);
    out
}

/// Deterministic start frames: the C(n, i) coordinate frames first, then
/// seeded random orthonormal frames up to `count`.
pub fn start_frames(n: usize, i: usize, count: usize, seed: u64) -> Vec<Frame> {
    let mut frames: Vec<Frame> = coordinate_axis_subsets(n, i)
        .into_iter()
        .map(|axes| Frame::coordinate(n, &axes))
        .collect();
    frames.truncate(count.max(1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while frames.len() < count {
        let cols: Vec<Vector> = (0..i)
            .map(|_| Vector::from_fn(n, |_, _| rng.sample::<f64, _>(StandardNormal)))
            .collect();
        if let Ok(f) = orthonormalize(&cols) {
            frames.push(f);
        }
    }
    frames
}

/// Outcome of a multi-start frame optimization.
#[derive(Debug, Clone)]
pub struct FrameSearch {
    pub value: f64,
    pub frame: Frame,
    pub starts_used: usize,
    pub converged: bool,
}

/// Minimize `objective` over i-frames in ℝⁿ by multi-start Nelder–Mead on
/// chart coordinates (use `-objective` to maximize). `extra_starts` are
/// prepended to the deterministic start list.
pub fn minimize_over_frames(
    n: usize,
    i: usize,
    objective: &dyn Fn(&Frame) -> f64,
    extra_starts: &[Frame],
    config: &SearchConfig,
) -> FrameSearch {
    let dim = i * (n - i);
    let mut starts = Vec::with_capacity(config.starts + extra_starts.len());
    starts.extend_from_slice(extra_starts);
    starts.extend(start_frames(n, i, config.starts.max(1), config.seed));
    let mut best: Option<(f64, Frame, bool)> = None;
    for base in &starts {
        let (value, frame, converged) = if dim == 0 {
            (objective(base), base.clone(), true)
        } else {
            let mut eval = |params: &[f64]| objective(&frame_from_chart(base, params));
            let (p1, _, c1) = nelder_mead(&mut eval, &vec![0.0; dim], 0.15, config.max_iters, config.tol);
            // one restart from the found point with a finer simplex
            let mid = frame_from_chart(base, &p1);
            let mut eval2 = |params: &[f64]| objective(&frame_from_chart(&mid, params));
            let (p2, v2, c2) =
                nelder_mead(&mut eval2, &vec![0.0; dim], 0.015, config.max_iters / 2, config.tol);
            (v2, frame_from_chart(&mid, &p2), c1 || c2)
        };
        let better = match &best {
            None => true,
            Some((bv, bf, _)) => {
                value < *bv || (value == *bv && frame.lex_cmp(bf) == std::cmp::Ordering::Less)
            }
        };
        if better {
            best = Some((value, frame, converged));
        }
    }
    let (value, frame, converged) = best.expect("at least one start");
    FrameSearch {
        value,
        frame,
        starts_used: starts.len(),
        converged,
    }
}
