//! Convex body representations and generators: V-polytopes, H-polytopes,
//! ellipsoids, the canonical extremal bodies, seeded random polytopes, and
//! the V↔H conversions used by the inradius LPs.

use nalgebra::DMatrix;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{hash_f64s, vec_from, Frame, Vector};
use crate::lp::{solve_lp, LpProblem};

/// Polytope as the convex hull of explicit vertices.
#[derive(Debug, Clone)]
pub struct VPolytope {
    pub vertices: Vec<Vector>,
    pub symmetric: bool,
}

/// Polytope as an intersection of half-spaces `normal·x ≤ offset` with unit
/// normals.
#[derive(Debug, Clone)]
pub struct HPolytope {
    pub normals: Vec<Vector>,
    pub offsets: Vec<f64>,
}

/// Ellipsoid `center + orientation · diag(semiaxes) · B`, semiaxes descending.
#[derive(Debug, Clone)]
pub struct Ellipsoid {
    pub semiaxes: Vec<f64>,
    pub orientation: DMatrix<f64>,
    pub center: Vector,
}

/// A convex body in one of the supported representations.
#[derive(Debug, Clone)]
pub enum Body {
    VPolytope(VPolytope),
    HPolytope(HPolytope),
    Ellipsoid(Ellipsoid),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalKind {
    Ball,
    Cube,
    Crosspolytope,
    RegularSimplex,
}

impl VPolytope {
    pub fn new(vertices: Vec<Vector>, symmetric: bool) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidInput("polytope needs vertices".into()));
        }
        let n = vertices[0].len();
        if n == 0 || n > 5 {
            return Err(Error::BadDimension(n));
        }
        for v in &vertices {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
            if v.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidInput("non-finite vertex coordinate".into()));
            }
        }
        if symmetric {
            for v in &vertices {
                let neg = -v;
                if !vertices.iter().any(|w| (w - &neg).norm() < 1e-12) {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(VPolytope {
            vertices,
            symmetric,
        })
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].len()
    }

    /// Affine dimension of the vertex set (rank of centered coordinates).
    pub fn affine_rank(&self) -> usize {
        affine_rank(&self.vertices)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_rank() == self.dim()
    }
}

impl HPolytope {
    pub fn new(normals: Vec<Vector>, offsets: Vec<f64>) -> Result<Self> {
        if normals.len() != offsets.len() {
            return Err(Error::DimensionMismatch {
                expected: normals.len(),
                got: offsets.len(),
            });
        }
        let mut unit_normals = Vec::with_capacity(normals.len());
        for a in normals {
            let norm = a.norm();
            if norm < 1e-12 {
                return Err(Error::InvalidInput("zero facet normal".into()));
            }
            unit_normals.push(a / norm);
        }
        Ok(HPolytope {
            normals: unit_normals,
            offsets,
        })
    }

    pub fn dim(&self) -> usize {
        self.normals.first().map_or(0, |a| a.len())
    }

    /// Support function `max { u·x : x ∈ H }` via one LP.
    pub fn support(&self, u: &Vector) -> Result<f64> {
        let (v, _) = solve_lp(&LpProblem {
            objective: u.clone(),
            normals: self.normals.clone(),
            offsets: self.offsets.clone(),
        })?;
        Ok(v)
    }

    /// Verify boundedness by solving the 2n coordinate support LPs.
    pub fn validate_bounded(&self) -> Result<()> {
        let n = self.dim();
        for k in 0..n {
            for s in [-1.0, 1.0] {
                let mut u = Vector::zeros(n);
                u[k] = s;
                self.support(&u)?;
            }
        }
        Ok(())
    }

    pub fn contains(&self, p: &Vector, slack: f64) -> bool {
        self.normals
            .iter()
            .zip(&self.offsets)
            .all(|(a, &b)| a.dot(p) <= b + slack)
    }

    /// True when the constraint set is closed under (a, b) → (−a, b).
    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.normals.iter().zip(&self.offsets).all(|(a, &b)| {
            self.normals
                .iter()
                .zip(&self.offsets)
                .any(|(a2, &b2)| (a2 + a).norm() < tol && (b2 - b).abs() < tol)
        })
    }
}

impl Ellipsoid {
    pub fn new(semiaxes: Vec<f64>, orientation: DMatrix<f64>, center: Vector) -> Result<Self> {
        let n = semiaxes.len();
        if n == 0 || n > 5 {
            return Err(Error::BadDimension(n));
        }
        if semiaxes.iter().any(|&s| !(s > 0.0)) {
            return Err(Error::InvalidInput("semiaxes must be positive".into()));
        }
        if semiaxes.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput("semiaxes must be descending".into()));
        }
        if orientation.nrows() != n || orientation.ncols() != n || center.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: orientation.nrows(),
            });
        }
        let dev = (orientation.transpose() * &orientation - DMatrix::<f64>::identity(n, n))
            .abs()
            .max();
        if dev >= 1e-12 {
            return Err(Error::InvalidInput(format!(
                "orientation is not orthogonal (deviation {dev:.3e})"
            )));
        }
        Ok(Ellipsoid {
            semiaxes,
            orientation,
            center,
        })
    }

    pub fn unit_ball(n: usize) -> Self {
        Ellipsoid {
            semiaxes: vec![1.0; n],
            orientation: DMatrix::identity(n, n),
            center: Vector::zeros(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.semiaxes.len()
    }

    /// Linear shape map A with E = center + A·B.
    pub fn shape_matrix(&self) -> DMatrix<f64> {
        let n = self.dim();
        let mut d = DMatrix::zeros(n, n);
        for k in 0..n {
            d[(k, k)] = self.semiaxes[k];
        }
        &self.orientation * d
    }

    pub fn is_centered(&self, tol: f64) -> bool {
        self.center.norm() <= tol
    }
}

impl Body {
    pub fn dim(&self) -> usize {
        match self {
            Body::VPolytope(p) => p.dim(),
            Body::HPolytope(h) => h.dim(),
            Body::Ellipsoid(e) => e.dim(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        match self {
            Body::VPolytope(p) => p.symmetric,
            Body::HPolytope(h) => h.is_symmetric(1e-9),
            Body::Ellipsoid(e) => e.is_centered(1e-12),
        }
    }

    /// H-representation; available for polytopes with n ≤ 4.
    pub fn to_hrep(&self) -> Result<HPolytope> {
        match self {
            Body::VPolytope(p) => hrep_from_vrep(p),
            Body::HPolytope(h) => Ok(h.clone()),
            Body::Ellipsoid(_) => Err(Error::UnsupportedDimension),
        }
    }

    /// Vertex set; enumerated for H-polytopes with n ≤ 3.
    pub fn to_vertices(&self) -> Result<Vec<Vector>> {
        match self {
            Body::VPolytope(p) => Ok(p.vertices.clone()),
            Body::HPolytope(h) => Ok(vrep_from_hrep(h)?.vertices),
            Body::Ellipsoid(_) => Err(Error::UnsupportedDimension),
        }
    }

    /// Deterministic content hash, used to derive search seeds.
    pub fn content_hash(&self) -> u64 {
        match self {
            Body::VPolytope(p) => hash_f64s(
                1 + p.symmetric as u64,
                p.vertices.iter().flat_map(|v| v.iter().copied()),
            ),
            Body::HPolytope(h) => hash_f64s(
                3,
                h.normals
                    .iter()
                    .flat_map(|a| a.iter().copied())
                    .chain(h.offsets.iter().copied()),
            ),
            Body::Ellipsoid(e) => hash_f64s(
                4,
                e.semiaxes
                    .iter()
                    .copied()
                    .chain(e.orientation.iter().copied())
                    .chain(e.center.iter().copied()),
            ),
        }
    }
}

fn affine_rank(points: &[Vector]) -> usize {
    if points.len() < 2 {
        return 0;
    }
    let p0 = &points[0];
    let diffs: Vec<Vector> = points[1..].iter().map(|p| p - p0).collect();
    let m = DMatrix::from_columns(&diffs);
    let sv = m.svd(false, false).singular_values;
    let scale = sv.iter().cloned().fold(1.0f64, f64::max);
    sv.iter().filter(|&&s| s > 1e-9 * scale).count()
}

/// Canonical bodies: unit ball, cube [−1,1]ⁿ, crosspolytope conv{±eᵢ} and the
/// regular simplex with circumradius 1 centered at the origin.
pub fn make_canonical(kind: CanonicalKind, n: usize) -> Result<Body> {
    if n == 0 || n > 5 {
        return Err(Error::BadDimension(n));
    }
    match kind {
        CanonicalKind::Ball => Ok(Body::Ellipsoid(Ellipsoid::unit_ball(n))),
        CanonicalKind::Cube => {
            let mut vertices = Vec::with_capacity(1 << n);
            for mask in 0..(1u32 << n) {
                let v = Vector::from_fn(n, |k, _| if mask >> k & 1 == 1 { 1.0 } else { -1.0 });
                vertices.push(v);
            }
            Ok(Body::VPolytope(VPolytope::new(vertices, true)?))
        }
        CanonicalKind::Crosspolytope => {
            let mut vertices = Vec::with_capacity(2 * n);
            for k in 0..n {
                for s in [1.0, -1.0] {
                    let mut v = Vector::zeros(n);
                    v[k] = s;
                    vertices.push(v);
                }
            }
            Ok(Body::VPolytope(VPolytope::new(vertices, true)?))
        }
        CanonicalKind::RegularSimplex => {
            // n+1 unit vectors with pairwise inner product −1/n, built in the
            // hyperplane 1⊥ of ℝ^{n+1} and expressed in an orthonormal basis
            let ones = Vector::from_element(n + 1, 1.0 / ((n + 1) as f64).sqrt());
            let axis = crate::linalg::orthonormalize(&[ones])?;
            let basis = axis.complement();
            let scale = ((n + 1) as f64 / n as f64).sqrt();
            let center = Vector::from_element(n + 1, 1.0 / (n + 1) as f64);
            let mut vertices = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let mut f = Vector::zeros(n + 1);
                f[k] = 1.0;
                vertices.push(basis.project(&(f - &center)) * scale);
            }
            Ok(Body::VPolytope(VPolytope::new(vertices, false)?))
        }
    }
}

/// Non-regular triangular antiprism conv{±v₁, ±v₂, ±v₃} whose projection onto
/// the e₁-e₂ plane is a regular hexagon with planar inradius 1.
pub fn make_antiprism_p(eps: f64) -> Result<Body> {
    if !(eps > 0.0) {
        return Err(Error::InvalidInput("eps must be positive".into()));
    }
    let s3 = 3.0f64.sqrt();
    let vs = [
        vec_from(&[1.0 / s3, 1.0, eps]),
        vec_from(&[1.0 / s3, -1.0, eps]),
        vec_from(&[-2.0 / s3, 0.0, eps]),
    ];
    let mut vertices = Vec::with_capacity(6);
    for v in &vs {
        vertices.push(v.clone());
    }
    for v in &vs {
        vertices.push(-v);
    }
    Ok(Body::VPolytope(VPolytope::new(vertices, true)?))
}

/// Tetrahedron with vertices (±1, 0, ε) and (0, ±1, −ε); the equality body of
/// the √2 bound between the two inner radius sequences.
pub fn make_remark_simplex(eps: f64) -> Result<Body> {
    if !(eps > 0.0) {
        return Err(Error::InvalidInput("eps must be positive".into()));
    }
    let vertices = vec![
        vec_from(&[1.0, 0.0, eps]),
        vec_from(&[-1.0, 0.0, eps]),
        vec_from(&[0.0, 1.0, -eps]),
        vec_from(&[0.0, -1.0, -eps]),
    ];
    Ok(Body::VPolytope(VPolytope::new(vertices, false)?))
}

/// Random polytope with vertices drawn uniformly on the unit sphere from a
/// counter-based generator keyed by `seed`. In the symmetric case the draw is
/// mirrored, so the result has 2·m vertices. Degenerate draws are retried a
/// bounded number of times.
pub fn random_polytope(n: usize, m: usize, symmetric: bool, seed: u64) -> Result<Body> {
    if n == 0 || n > 5 {
        return Err(Error::BadDimension(n));
    }
    let effective = if symmetric { 2 * m } else { m };
    if effective < n + 1 {
        return Err(Error::InvalidInput(format!(
            "need at least {} effective vertices in dimension {n}",
            n + 1
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const RETRIES: usize = 64;
    for _ in 0..RETRIES {
        let mut vertices: Vec<Vector> = Vec::with_capacity(effective);
        for _ in 0..m {
            let v = loop {
                let raw = Vector::from_fn(n, |_, _| rng.sample::<f64, _>(StandardNormal));
                let norm = raw.norm();
                if norm > 1e-6 {
                    break raw / norm;
                }
            };
            vertices.push(v);
        }
        if symmetric {
            let mirrored: Vec<Vector> = vertices.iter().map(|v| -v).collect();
            vertices.extend(mirrored);
        }
        if affine_rank(&vertices) == n {
            return Ok(Body::VPolytope(VPolytope::new(vertices, symmetric)?));
        }
    }
    Err(Error::DegenerateAfterRetries(RETRIES))
}

/// Generalized cross product: the vector orthogonal to the d−1 rows of `diffs`
/// in ℝᵈ (cofactor expansion).
fn normal_from_diffs(diffs: &[Vector]) -> Vector {
    let d = diffs[0].len();
    debug_assert_eq!(diffs.len(), d - 1);
    let mut normal = Vector::zeros(d);
    for j in 0..d {
        // minor with column j deleted
        let mut minor = DMatrix::zeros(d - 1, d - 1);
        for (r, diff) in diffs.iter().enumerate() {
            let mut cc = 0;
            for c in 0..d {
                if c == j {
                    continue;
                }
                minor[(r, cc)] = diff[c];
                cc += 1;
            }
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        normal[j] = sign * small_det(&minor);
    }
    normal
}

fn small_det(m: &DMatrix<f64>) -> f64 {
    match m.nrows() {
        0 => 1.0,
        1 => m[(0, 0)],
        2 => m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)],
        3 => {
            m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
                - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
                + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)])
        }
        _ => m.clone().lu().determinant(),
    }
}

/// Facet enumeration by exhaustive search over n-subsets of vertices.
///
/// Each affinely independent subset spans a hyperplane; it is kept (oriented
/// outward) iff all vertices lie on its non-positive side. Brute force over
/// C(m, n) subsets is the documented desk-scale choice (m ≤ 40, n ≤ 4).
pub fn hrep_from_vrep(p: &VPolytope) -> Result<HPolytope> {
    let n = p.dim();
    if n > 4 {
        return Err(Error::UnsupportedDimension);
    }
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let verts = &p.vertices;
    let m = verts.len();
    let mut normals: Vec<Vector> = Vec::new();
    let mut offsets: Vec<f64> = Vec::new();
    let mut subset = vec![0usize; n];
    enumerate_subsets(m, n, &mut subset, 0, 0, &mut |idx: &[usize]| {
        let p0 = &verts[idx[0]];
        let diffs: Vec<Vector> = idx[1..].iter().map(|&i| &verts[i] - p0).collect();
        let scale = diffs.iter().map(|d| d.norm()).fold(1.0f64, f64::max);
        let normal = normal_from_diffs(&diffs);
        let len = normal.norm();
        if len <= 1e-10 * scale {
            return;
        }
        let unit = normal / len;
        let b0 = unit.dot(p0);
        let sides: Vec<f64> = verts.iter().map(|v| unit.dot(v) - b0).collect();
        let max_side = sides.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let min_side = sides.iter().cloned().fold(f64::INFINITY, f64::min);
        let (u, b) = if max_side <= 1e-9 {
            (unit, b0)
        } else if min_side >= -1e-9 {
            (-unit, -b0)
        } else {
            return;
        };
        let dup = normals
            .iter()
            .zip(&offsets)
            .any(|(a, &c)| (a - &u).amax() <= 1e-8 && (c - b).abs() <= 1e-8);
        if !dup {
            normals.push(u);
            offsets.push(b);
        }
    });
    // keep only facets with at least n incident vertices
    let mut keep_normals = Vec::new();
    let mut keep_offsets = Vec::new();
    for (a, &b) in normals.iter().zip(&offsets) {
        let incident = verts.iter().filter(|v| (a.dot(v) - b).abs() <= 1e-8).count();
        if incident >= n {
            keep_normals.push(a.clone());
            keep_offsets.push(b);
        }
    }
    if keep_normals.is_empty() {
        return Err(Error::NotFullDimensional);
    }
    Ok(HPolytope {
        normals: keep_normals,
        offsets: keep_offsets,
    })
}

fn enumerate_subsets(
    m: usize,
    k: usize,
    buf: &mut Vec<usize>,
    depth: usize,
    start: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if depth == k {
        f(buf);
        return;
    }
    for i in start..m {
        buf[depth] = i;
        enumerate_subsets(m, k, buf, depth + 1, i + 1, f);
    }
}

/// Vertex enumeration for H-polytopes in dimension ≤ 3 by brute force over
/// d-subsets of constraints.
pub fn vrep_from_hrep(h: &HPolytope) -> Result<VPolytope> {
    let d = h.dim();
    if d == 0 || d > 3 {
        return Err(Error::UnsupportedDimension);
    }
    let m = h.normals.len();
    let mut vertices: Vec<Vector> = Vec::new();
    let mut subset = vec![0usize; d];
    enumerate_subsets(m, d, &mut subset, 0, 0, &mut |idx: &[usize]| {
        let a = DMatrix::from_fn(d, d, |r, c| h.normals[idx[r]][c]);
        let rhs = Vector::from_fn(d, |r, _| h.offsets[idx[r]]);
        if small_det(&a).abs() < 1e-10 {
            return;
        }
        if let Some(x) = a.lu().solve(&rhs) {
            if h.contains(&x, 1e-9) && !vertices.iter().any(|v| (v - &x).norm() < 1e-8) {
                vertices.push(x);
            }
        }
    });
    if vertices.len() < d + 1 {
        return Err(Error::EmptyBody);
    }
    VPolytope::new(vertices, false)
}

/// Intersection of an H-polytope with the affine plane `offset + span(frame)`,
/// rewritten in the i coordinates of the frame. Returns `None` when a
/// constraint is trivially violated on the whole plane (empty section);
/// non-trivial emptiness is detected downstream by the Chebyshev LP.
pub fn section_hrep(h: &HPolytope, frame: &Frame, offset: &Vector) -> Result<Option<HPolytope>> {
    let n = h.dim();
    if frame.ambient_dim() != n || offset.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: frame.ambient_dim(),
        });
    }
    if frame.project(offset).amax() > 1e-10 {
        return Err(Error::InvalidInput(
            "section offset must be orthogonal to the section plane".into(),
        ));
    }
    let mut normals = Vec::new();
    let mut offsets = Vec::new();
    for (a, &b) in h.normals.iter().zip(&h.offsets) {
        let reduced = frame.project(a);
        let rhs = b - a.dot(offset);
        let len = reduced.norm();
        if len < 1e-12 {
            if rhs < -1e-12 {
                return Ok(None);
            }
            continue;
        }
        normals.push(reduced / len);
        offsets.push(rhs / len);
    }
    if normals.is_empty() {
        return Ok(None);
    }
    Ok(Some(HPolytope { normals, offsets }))
}

/// Indices of the convex hull of 2D points in counter-clockwise order
/// (Andrew's monotone chain; collinear points are dropped).
pub fn hull_2d(points: &[Vector]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| {
        points[a][0]
            .total_cmp(&points[b][0])
            .then(points[a][1].total_cmp(&points[b][1]))
    });
    idx.dedup_by(|&mut a, &mut b| (&points[a] - &points[b]).norm() < 1e-12);
    if idx.len() < 3 {
        return idx;
    }
    let cross = |o: usize, a: usize, b: usize| -> f64 {
        (points[a][0] - points[o][0]) * (points[b][1] - points[o][1])
            - (points[a][1] - points[o][1]) * (points[b][0] - points[o][0])
    };
    let mut hull: Vec<usize> = Vec::with_capacity(2 * idx.len());
    for &i in &idx {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], i) <= 1e-14 {
            hull.pop();
        }
        hull.push(i);
    }
    let lower_len = hull.len() + 1;
    for &i in idx.iter().rev() {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], i) <= 1e-14
        {
            hull.pop();
        }
        hull.push(i);
    }
    hull.pop();
    hull
}

/// H-representation (unit outward normals) of the convex hull of 2D points.
/// Returns `None` when the hull is degenerate (< 3 vertices).
pub fn polygon_hrep(points: &[Vector]) -> Option<HPolytope> {
    let hull = hull_2d(points);
    if hull.len() < 3 {
        return None;
    }
    let mut normals = Vec::with_capacity(hull.len());
    let mut offsets = Vec::with_capacity(hull.len());
    for k in 0..hull.len() {
        let a = &points[hull[k]];
        let b = &points[hull[(k + 1) % hull.len()]];
        let d = b - a;
        let outward = vec_from(&[d[1], -d[0]]);
        let len = outward.norm();
        if len < 1e-14 {
            continue;
        }
        let u = outward / len;
        normals.push(u.clone());
        offsets.push(u.dot(a));
    }
    Some(HPolytope { normals, offsets })
}

/// Deterministic polytopal outer approximation of the unit ball: `count`
/// unit normals with offsets 1. The normal set is closed under negation so
/// the approximation is centrally symmetric.
pub fn ball_hpolytope(n: usize, count: usize) -> Result<HPolytope> {
    if n < 2 || n > 5 {
        return Err(Error::BadDimension(n));
    }
    let half = count.div_ceil(2).max(1);
    let mut normals = Vec::with_capacity(2 * half);
    match n {
        2 => {
            for k in 0..half {
                let t = std::f64::consts::PI * k as f64 / half as f64;
                normals.push(vec_from(&[t.cos(), t.sin()]));
            }
        }
        3 => {
            // Fibonacci spiral over the upper hemisphere
            let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
            for k in 0..half {
                let z = 1.0 - (2.0 * k as f64 + 1.0) / (2.0 * half as f64);
                let r = (1.0 - z * z).max(0.0).sqrt();
                let t = 2.0 * std::f64::consts::PI * k as f64 / golden;
                normals.push(vec_from(&[r * t.cos(), r * t.sin(), z]));
            }
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_BA11);
            for _ in 0..half {
                let raw = Vector::from_fn(n, |_, _| rng.sample::<f64, _>(StandardNormal));
                normals.push(raw.normalize());
            }
        }
    }
    let mirrored: Vec<Vector> = normals.iter().map(|u| -u).collect();
    normals.extend(mirrored);
    let offsets = vec![1.0; normals.len()];
    Ok(HPolytope { normals, offsets })
}
