//! Successive outer and inner radii by multi-start search over the
//! Grassmannian, closed forms for ellipsoids, and ellipsoid-gauge
//! generalized radii.
//!
//! The key algorithmic device for the inner section radius: for a fixed
//! subspace L the maximization over the plane offset x ∈ L⊥ *and* the in-plane
//! ball center is a single LP,
//!
//! ```text
//! max ρ   s.t.   a_k·x + (Fᵀa_k)·c + ρ·|Fᵀa_k| ≤ b_k   for every facet k,
//! ```
//!
//! which removes one whole nesting level from the defining min/max formulas.

use nalgebra::DMatrix;

use crate::bodies::{hrep_from_vrep, vrep_from_hrep, Body, Ellipsoid, HPolytope, VPolytope};
use crate::classical::{chebyshev_center, polygon_inradius};
use crate::error::{Error, Result};
use crate::linalg::{hash_f64s, Frame, Vector};
use crate::lp::{solve_lp, LpProblem};
use crate::meb::min_enclosing_ball;
use crate::optimize::{minimize_over_frames, SearchConfig};

/// Which side of the true optimum a numeric estimate is guaranteed to be on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSide {
    /// Estimate of a minimum over subspaces: the value is ≥ the true optimum.
    UpperBoundOfMin,
    /// Estimate of a maximum over subspaces: the value is ≤ the true optimum.
    LowerBoundOfMax,
}

impl BoundSide {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundSide::UpperBoundOfMin => "UpperBoundOfMin",
            BoundSide::LowerBoundOfMax => "LowerBoundOfMax",
        }
    }
}

/// One-sided numeric radius value with its witness subspace.
#[derive(Debug, Clone)]
pub struct RadiusEstimate {
    pub value: f64,
    pub witness_frame: Frame,
    /// Offset of the witness affine plane (zero for projections).
    pub witness_offset: Vector,
    pub side: BoundSide,
    pub starts_used: usize,
    pub converged: bool,
}

/// The three radius sequences of a body, index i = 1..n.
#[derive(Debug, Clone)]
pub struct RadiiProfile {
    pub outer: Vec<RadiusEstimate>,
    pub inner_section: Vec<RadiusEstimate>,
    pub inner_projection: Vec<RadiusEstimate>,
}

impl RadiiProfile {
    pub fn outer_at(&self, i: usize) -> &RadiusEstimate {
        &self.outer[i - 1]
    }
    pub fn inner_section_at(&self, i: usize) -> &RadiusEstimate {
        &self.inner_section[i - 1]
    }
    pub fn inner_projection_at(&self, i: usize) -> &RadiusEstimate {
        &self.inner_projection[i - 1]
    }
}

/// Pre-extracted evaluation data for a body.
struct BodyCtx {
    dim: usize,
    vertices: Option<Vec<Vector>>,
    hrep: Option<HPolytope>,
    /// Ellipsoid shape matrix A with E = center + A·B.
    shape: Option<DMatrix<f64>>,
    inv_shape: Option<DMatrix<f64>>,
    center: Vector,
}

impl BodyCtx {
    fn new(body: &Body, need_vertices: bool, need_hrep: bool) -> Result<Self> {
        let dim = body.dim();
        match body {
            Body::VPolytope(p) => Ok(BodyCtx {
                dim,
                vertices: Some(p.vertices.clone()),
                hrep: if need_hrep {
                    Some(hrep_from_vrep(p)?)
                } else {
                    None
                },
                shape: None,
                inv_shape: None,
                center: Vector::zeros(dim),
            }),
            Body::HPolytope(h) => Ok(BodyCtx {
                dim,
                vertices: if need_vertices {
                    Some(vrep_from_hrep(h)?.vertices)
                } else {
                    None
                },
                hrep: Some(h.clone()),
                shape: None,
                inv_shape: None,
                center: Vector::zeros(dim),
            }),
            Body::Ellipsoid(e) => {
                let a = e.shape_matrix();
                let inv = a.clone().try_inverse().ok_or_else(|| {
                    Error::InvalidInput("ellipsoid shape matrix is singular".into())
                })?;
                Ok(BodyCtx {
                    dim,
                    vertices: None,
                    hrep: None,
                    shape: Some(a),
                    inv_shape: Some(inv),
                    center: e.center.clone(),
                })
            }
        }
    }
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::UnsupportedDimension);
    }
    Ok(())
}

fn local_config(body: &Body, i: usize, tag: u64, config: &SearchConfig) -> SearchConfig {
    SearchConfig {
        seed: hash_f64s(
            body.content_hash() ^ tag.wrapping_mul(0x9E3779B97F4A7C15) ^ config.seed,
            [i as f64],
        ),
        ..*config
    }
}

fn sv_extremes(m: &DMatrix<f64>) -> (f64, f64) {
    let sv = m.clone().svd(false, false).singular_values;
    let hi = sv.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let lo = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    (hi, lo)
}

/// Circumradius of the projection of the body onto the frame's subspace.
fn projection_circumradius(ctx: &BodyCtx, frame: &Frame) -> f64 {
    if let Some(a) = &ctx.shape {
        let fa = frame.columns().transpose() * a;
        return sv_extremes(&fa).0;
    }
    let verts = ctx.vertices.as_ref().expect("polytope context has vertices");
    let projected: Vec<Vector> = verts.iter().map(|v| frame.project(v)).collect();
    min_enclosing_ball(&projected).radius
}

/// Inradius of the projection of the body onto the frame's subspace.
fn projection_inradius(ctx: &BodyCtx, frame: &Frame) -> Result<f64> {
    if let Some(a) = &ctx.shape {
        let fa = frame.columns().transpose() * a;
        return Ok(sv_extremes(&fa).1);
    }
    let verts = ctx.vertices.as_ref().expect("polytope context has vertices");
    let i = frame.sub_dim();
    let n = ctx.dim;
    let projected: Vec<Vector> = verts.iter().map(|v| frame.project(v)).collect();
    match i {
        1 => {
            let vals: Vec<f64> = projected.iter().map(|p| p[0]).collect();
            let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
            Ok((hi - lo) / 2.0)
        }
        2 => polygon_inradius(&projected),
        3 if n > 3 => {
            let p = VPolytope::new(projected, false)?;
            if !p.is_full_dimensional() {
                return Ok(0.0);
            }
            Ok(chebyshev_center(&hrep_from_vrep(&p)?)?.0)
        }
        _ => Err(Error::UnsupportedDimension),
    }
}

/// Best inscribed i-ball over all translates of the frame's subspace: one LP
/// per evaluation. Returns (radius, plane offset in ℝⁿ).
fn section_inradius(ctx: &BodyCtx, frame: &Frame) -> Result<(f64, Vector)> {
    let n = ctx.dim;
    let i = frame.sub_dim();
    if let (Some(_), Some(inv)) = (&ctx.shape, &ctx.inv_shape) {
        // central sections of an ellipsoid are inradius-maximal; the section
        // {z : zᵀ (FᵀMF) z ≤ 1} has inradius 1/√λ_max
        let g = inv * frame.columns();
        let (hi, _) = sv_extremes(&g);
        let radius = 1.0 / hi;
        let offset = &ctx.center - frame.embed(&frame.project(&ctx.center));
        return Ok((radius, offset));
    }
    let h = ctx.hrep.as_ref().expect("polytope context has an H-rep");
    let comp = frame.complement_matrix();
    let nvars = n + 1; // (n−i) offset coords + i center coords + ρ
    let mut normals = Vec::with_capacity(h.normals.len());
    for a in &h.normals {
        let mut row = Vector::zeros(nvars);
        let ya = comp.tr_mul(a);
        let ca = frame.project(a);
        if n > i {
            row.rows_mut(0, n - i).copy_from(&ya);
        }
        row.rows_mut(n - i, i).copy_from(&ca);
        row[n] = ca.norm();
        normals.push(row);
    }
    let mut objective = Vector::zeros(nvars);
    objective[n] = 1.0;
    let (value, x) = solve_lp(&LpProblem {
        objective,
        normals,
        offsets: h.offsets.clone(),
    })
    .map_err(|e| match e {
        Error::Infeasible => Error::EmptyBody,
        other => other,
    })?;
    let offset = &comp * x.rows(0, n - i).into_owned();
    Ok((value, offset))
}

/// Outer radius R_i(K): smallest circumradius of an i-dimensional projection.
/// The returned value is an upper bound on the true minimum.
pub fn outer_radius(body: &Body, i: usize, config: &SearchConfig) -> Result<RadiusEstimate> {
    outer_radius_with_starts(body, i, &[], config)
}

/// Same as [`outer_radius`], with extra start frames prepended.
pub fn outer_radius_with_starts(
    body: &Body,
    i: usize,
    extra_starts: &[Frame],
    config: &SearchConfig,
) -> Result<RadiusEstimate> {
    let n = body.dim();
    check_index(n, i)?;
    let ctx = BodyCtx::new(body, true, false)?;
    if let Some(p) = as_vpoly(body) {
        if !p.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
    }
    let cfg = local_config(body, i, 1, config);
    let objective = move |f: &Frame| projection_circumradius(&ctx, f);
    let res = minimize_over_frames(n, i, &objective, extra_starts, &cfg);
    Ok(RadiusEstimate {
        value: res.value,
        witness_frame: res.frame,
        witness_offset: Vector::zeros(n),
        side: BoundSide::UpperBoundOfMin,
        starts_used: res.starts_used,
        converged: res.converged,
    })
}

/// Inner section radius r_i(K): largest i-ball inside K over all i-planes.
/// The returned value is a lower bound on the true maximum.
pub fn inner_radius_section(body: &Body, i: usize, config: &SearchConfig) -> Result<RadiusEstimate> {
    inner_radius_section_with_starts(body, i, &[], config)
}

/// Same as [`inner_radius_section`], with extra start frames prepended (used
/// by construction pipelines that already know a good candidate plane).
pub fn inner_radius_section_with_starts(
    body: &Body,
    i: usize,
    extra_starts: &[Frame],
    config: &SearchConfig,
) -> Result<RadiusEstimate> {
    let n = body.dim();
    check_index(n, i)?;
    let ctx = BodyCtx::new(body, false, true)?;
    let cfg = local_config(body, i, 2, config);
    let objective = move |f: &Frame| match section_inradius(&ctx, f) {
        Ok((v, _)) => -v,
        Err(_) => f64::INFINITY,
    };
    let res = minimize_over_frames(n, i, &objective, extra_starts, &cfg);
    if !res.value.is_finite() {
        return Err(Error::EmptyBody);
    }
    // re-evaluate at the witness for the plane offset
    let ctx2 = BodyCtx::new(body, false, true)?;
    let (value, offset) = section_inradius(&ctx2, &res.frame)?;
    Ok(RadiusEstimate {
        value,
        witness_frame: res.frame,
        witness_offset: offset,
        side: BoundSide::LowerBoundOfMax,
        starts_used: res.starts_used,
        converged: res.converged,
    })
}

/// Inner projection radius r̃_i(K): largest inradius of an i-dimensional
/// projection. The returned value is a lower bound on the true maximum.
pub fn inner_radius_projection(
    body: &Body,
    i: usize,
    config: &SearchConfig,
) -> Result<RadiusEstimate> {
    let n = body.dim();
    check_index(n, i)?;
    if !matches!(body, Body::Ellipsoid(_)) {
        // i = n reduces to the plain inradius; other polytope cases need an
        // i-dimensional facet enumeration, available for i ≤ 3
        if i == n {
            let est = inner_radius_section(body, n, config)?;
            return Ok(RadiusEstimate {
                witness_offset: Vector::zeros(n),
                ..est
            });
        }
        if i > 3 {
            return Err(Error::UnsupportedDimension);
        }
    }
    let ctx = BodyCtx::new(body, true, false)?;
    let cfg = local_config(body, i, 3, config);
    let objective = move |f: &Frame| match projection_inradius(&ctx, f) {
        Ok(v) => -v,
        Err(_) => f64::INFINITY,
    };
    let res = minimize_over_frames(n, i, &objective, &[], &cfg);
    Ok(RadiusEstimate {
        value: -res.value,
        witness_frame: res.frame,
        witness_offset: Vector::zeros(n),
        side: BoundSide::LowerBoundOfMax,
        starts_used: res.starts_used,
        converged: res.converged,
    })
}

fn as_vpoly(body: &Body) -> Option<&VPolytope> {
    match body {
        Body::VPolytope(p) => Some(p),
        _ => None,
    }
}

/// Full profile R_i, r_i, r̃_i for i = 1..n.
pub fn radii_profile(body: &Body, config: &SearchConfig) -> Result<RadiiProfile> {
    let n = body.dim();
    let mut outer = Vec::with_capacity(n);
    let mut inner_section = Vec::with_capacity(n);
    let mut inner_projection = Vec::with_capacity(n);
    for i in 1..=n {
        outer.push(outer_radius(body, i, config)?);
        inner_section.push(inner_radius_section(body, i, config)?);
        inner_projection.push(inner_radius_projection(body, i, config)?);
    }
    Ok(RadiiProfile {
        outer,
        inner_section,
        inner_projection,
    })
}

/// Closed-form radii of a centered ellipsoid with semiaxes σ₁ ≥ … ≥ σₙ:
/// r_i = r̃_i = σ_i and R_j = σ_{n−j+1}, hence R_{n−i+1} = r_i exactly.
pub fn ellipsoid_radii(e: &Ellipsoid) -> Result<RadiiProfile> {
    if !e.is_centered(1e-10) {
        return Err(Error::NotCentered);
    }
    let n = e.dim();
    let axis_frame = |axes: std::ops::Range<usize>| -> Frame {
        let cols: Vec<Vector> = axes.map(|k| e.orientation.column(k).into_owned()).collect();
        crate::linalg::orthonormalize(&cols).expect("orientation columns are orthonormal")
    };
    let mut outer = Vec::with_capacity(n);
    let mut inner_section = Vec::with_capacity(n);
    let mut inner_projection = Vec::with_capacity(n);
    for i in 1..=n {
        // projection onto the i smallest semiaxis directions
        outer.push(RadiusEstimate {
            value: e.semiaxes[n - i],
            witness_frame: axis_frame((n - i)..n),
            witness_offset: Vector::zeros(n),
            side: BoundSide::UpperBoundOfMin,
            starts_used: 0,
            converged: true,
        });
        // section/projection spanned by the i largest semiaxis directions
        let f = axis_frame(0..i);
        inner_section.push(RadiusEstimate {
            value: e.semiaxes[i - 1],
            witness_frame: f.clone(),
            witness_offset: Vector::zeros(n),
            side: BoundSide::LowerBoundOfMax,
            starts_used: 0,
            converged: true,
        });
        inner_projection.push(RadiusEstimate {
            value: e.semiaxes[i - 1],
            witness_frame: f,
            witness_offset: Vector::zeros(n),
            side: BoundSide::LowerBoundOfMax,
            starts_used: 0,
            converged: true,
        });
    }
    Ok(RadiiProfile {
        outer,
        inner_section,
        inner_projection,
    })
}

/// Apply the linear map taking `gauge` to the unit ball, then measure
/// Euclidean radii: by affine invariance this computes the gauge radii
/// (R_i(K, B), r_i(K, B)).
pub fn generalized_radii(
    body: &Body,
    gauge: &Ellipsoid,
    i: usize,
    config: &SearchConfig,
) -> Result<(RadiusEstimate, RadiusEstimate)> {
    let mapped = map_to_gauge_coordinates(body, gauge)?;
    let outer = outer_radius(&mapped, i, config)?;
    let inner = inner_radius_section(&mapped, i, config)?;
    Ok((outer, inner))
}

fn map_to_gauge_coordinates(body: &Body, gauge: &Ellipsoid) -> Result<Body> {
    if !gauge.is_centered(1e-10) {
        return Err(Error::NotCentered);
    }
    if gauge.dim() != body.dim() {
        return Err(Error::DimensionMismatch {
            expected: body.dim(),
            got: gauge.dim(),
        });
    }
    let a = gauge.shape_matrix();
    let inv = a
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::InvalidInput("gauge shape matrix is singular".into()))?;
    match body {
        Body::VPolytope(p) => {
            let vertices: Vec<Vector> = p.vertices.iter().map(|v| &inv * v).collect();
            Ok(Body::VPolytope(VPolytope::new(vertices, p.symmetric)?))
        }
        Body::HPolytope(h) => {
            // {x : aᵀx ≤ b} maps to {y : (Aᵀa)ᵀ y ≤ b}
            let normals: Vec<Vector> = h.normals.iter().map(|v| a.transpose() * v).collect();
            Ok(Body::HPolytope(HPolytope::new(normals, h.offsets.clone())?))
        }
        Body::Ellipsoid(e) => {
            let m = &inv * e.shape_matrix();
            let svd = m.svd(true, false);
            let u = svd.u.expect("svd with u requested");
            let mut semiaxes: Vec<f64> = svd.singular_values.iter().cloned().collect();
            semiaxes.sort_by(|x, y| y.total_cmp(x));
            Ok(Body::Ellipsoid(Ellipsoid::new(
                semiaxes,
                u,
                &inv * &e.center,
            )?))
        }
    }
}

/// Slack report for the John-ellipsoid bound on the gauge-radii quotient.
#[derive(Debug, Clone)]
pub struct MinkowskiReport {
    pub ratio: f64,
    pub bound: f64,
    pub slack: f64,
    pub outer: RadiusEstimate,
    pub inner: RadiusEstimate,
}

/// Over-estimate of R_{n−i+1}(K,B)/r_i(K,B) against the n√n / n / √n bound
/// selected by the symmetry of K and whether the gauge is a Euclidean ball.
pub fn minkowski_bound_check(
    body: &Body,
    gauge: &Ellipsoid,
    i: usize,
    config: &SearchConfig,
) -> Result<MinkowskiReport> {
    let n = body.dim();
    check_index(n, i)?;
    let mapped = map_to_gauge_coordinates(body, gauge)?;
    let outer = outer_radius(&mapped, n - i + 1, config)?;
    let inner = inner_radius_section(&mapped, i, config)?;
    let gauge_is_ball = gauge
        .semiaxes
        .windows(2)
        .all(|w| (w[0] - w[1]).abs() < 1e-12);
    let symmetric = body.is_symmetric();
    let nf = n as f64;
    let bound = match (gauge_is_ball, symmetric) {
        (true, true) => nf.sqrt(),
        (true, false) | (false, true) => nf,
        (false, false) => nf * nf.sqrt(),
    };
    let ratio = outer.value / inner.value;
    Ok(MinkowskiReport {
        ratio,
        bound,
        slack: bound - ratio,
        outer,
        inner,
    })
}
