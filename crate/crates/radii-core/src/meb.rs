//! Minimum enclosing ball by Welzl's algorithm with move-to-front reordering.

use nalgebra::DMatrix;

use crate::linalg::Vector;

/// Smallest ball containing a point set, plus the support points whose
/// circumsphere it is (at most n+1 of them).
#[derive(Debug, Clone)]
pub struct BallResult {
    pub center: Vector,
    pub radius: f64,
    pub support: Vec<usize>,
}

/// Compute the minimum enclosing ball. The input must be nonempty.
pub fn min_enclosing_ball(points: &[Vector]) -> BallResult {
    assert!(!points.is_empty(), "min_enclosing_ball needs at least one point");
    let n = points[0].len();
    let mut order: Vec<usize> = (0..points.len()).collect();
    let mut boundary: Vec<usize> = Vec::with_capacity(n + 1);
    let mut ball = welzl_mtf(points, &mut order, points.len(), &mut boundary, n);
    // verification sweep: enforce the containment invariant exactly
    let worst = points
        .iter()
        .map(|p| (p - &ball.center).norm())
        .fold(0.0f64, f64::max);
    if worst > ball.radius {
        ball.radius = worst;
    }
    ball
}

fn welzl_mtf(
    points: &[Vector],
    order: &mut Vec<usize>,
    t: usize,
    boundary: &mut Vec<usize>,
    dim: usize,
) -> BallResult {
    let mut ball = ball_from_boundary(points, boundary, dim);
    if boundary.len() == dim + 1 {
        return ball;
    }
    let mut k = 0;
    while k < t {
        let idx = order[k];
        if !contains(&ball, &points[idx]) {
            boundary.push(idx);
            ball = welzl_mtf(points, order, k, boundary, dim);
            boundary.pop();
            order[..=k].rotate_right(1);
        }
        k += 1;
    }
    ball
}

fn contains(ball: &BallResult, p: &Vector) -> bool {
    if ball.radius < 0.0 {
        return false;
    }
    let d2 = (p - &ball.center).norm_squared();
    let r2 = ball.radius * ball.radius;
    d2 <= r2 * (1.0 + 4e-13) + 1e-26
}

/// Ball with all `boundary` points on its sphere and center in their affine
/// hull; this is the unique smallest such ball.
fn ball_from_boundary(points: &[Vector], boundary: &[usize], dim: usize) -> BallResult {
    match boundary.len() {
        0 => BallResult {
            center: Vector::zeros(dim),
            radius: -1.0,
            support: vec![],
        },
        1 => BallResult {
            center: points[boundary[0]].clone(),
            radius: 0.0,
            support: boundary.to_vec(),
        },
        k => {
            let p0 = &points[boundary[0]];
            let diffs: Vec<Vector> = boundary[1..].iter().map(|&i| &points[i] - p0).collect();
            let mut gram = DMatrix::<f64>::zeros(k - 1, k - 1);
            for a in 0..(k - 1) {
                for b in 0..(k - 1) {
                    gram[(a, b)] = 2.0 * diffs[a].dot(&diffs[b]);
                }
            }
            let rhs = Vector::from_fn(k - 1, |a, _| diffs[a].norm_squared());
            let alpha = match gram.clone().lu().solve(&rhs) {
                Some(a) => a,
                None => gram
                    .svd(true, true)
                    .solve(&rhs, 1e-12)
                    .unwrap_or_else(|_| Vector::zeros(k - 1)),
            };
            let mut center = p0.clone();
            for (a, d) in alpha.iter().zip(&diffs) {
                center += d * *a;
            }
            let radius = (p0 - &center).norm();
            BallResult {
                center,
                radius,
                support: boundary.to_vec(),
            }
        }
    }
}
