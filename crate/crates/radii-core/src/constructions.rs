//! The constructive proofs as witness-producing procedures: hexagon and
//! square sections over a prescribed shadow disc, the diameter parallelogram,
//! the width trapezoid/box certificate, touching-point certificates for the
//! min-ball, the planar (R, D, r) slack, and the degree-four root behind the
//! 2.15063 quotient bound.
//!
//! Lifts into the body use the fiber midpoint h(p) = (t_min + t_max)/2, which
//! is continuous wherever the shadow point is interior, so the existence
//! arguments become plain bisections on a balance function.

use crate::bodies::{section_hrep, vrep_from_hrep, Body, HPolytope, VPolytope};
use crate::classical::{
    chebyshev_center, diameter, min_width, polygon_inradius, width_in_direction,
};
use crate::error::{Error, Result};
use crate::linalg::{orthonormalize, rotation_taking, vec_from, Frame, RigidMotion, Vector};
use crate::lp::{solve_eq_feasibility, solve_lp, LpProblem};
use crate::meb::{min_enclosing_ball, BallResult};
use crate::optimize::SearchConfig;
use crate::successive::{
    inner_radius_section_with_starts, outer_radius_with_starts, RadiusEstimate,
};

/// Interior shrink applied to the prescribed disc radius so that every
/// evaluated fiber is a genuine segment and the midpoint lift is continuous.
const DISC_SHRINK: f64 = 1e-9;
const BISECTION_DEPTH: usize = 60;

/// Six points of a planar central hexagonal section: planar half-vertices p,
/// lifted points q with q_k|L = p_k, all ±q_k in the body and coplanar.
#[derive(Debug, Clone)]
pub struct HexagonWitness {
    /// Hexagon half-vertices in the 2D coordinates of the shadow plane L.
    pub p: [Vector; 3],
    /// Lifted points in ℝ³.
    pub q: [Vector; 3],
    /// Unit normal of the section plane span{±q}.
    pub plane_normal: Vector,
    /// Distance of q₁ from span{q₂, q₃}.
    pub residual: f64,
}

/// Balanced inscribed square with lifts whose connecting segments intersect
/// in their midpoints.
#[derive(Debug, Clone)]
pub struct SquareWitness {
    pub p: [Vector; 2],
    pub q_plus: [Vector; 2],
    pub q_minus: [Vector; 2],
    pub balance_residual: f64,
}

/// Midpoint parallelogram spanned by the diameter and a projected diameter.
#[derive(Debug, Clone)]
pub struct ParallelogramWitness {
    /// Half diameter vector of the centered body.
    pub p: Vector,
    pub q1: Vector,
    pub q2: Vector,
    pub vertices: [Vector; 4],
    pub half_width: f64,
}

/// Box certificate from the minimal-width normalization.
#[derive(Debug, Clone)]
pub struct TrapezoidWitness {
    pub width: f64,
    pub section_width: f64,
    pub box_extent_x: [f64; 2],
    pub box_extent_y: [f64; 2],
    pub r2_upper: f64,
}

/// Contact points of the min-ball with convex coefficients expressing the
/// center.
#[derive(Debug, Clone)]
pub struct TouchingSet {
    pub indices: Vec<usize>,
    pub lambdas: Vec<f64>,
}

/// Fiber-midpoint lift machinery over a fixed shadow plane.
struct FiberLift<'a> {
    hrep: &'a HPolytope,
    frame: &'a Frame,
    normal: Vector,
}

impl<'a> FiberLift<'a> {
    fn new(hrep: &'a HPolytope, frame: &'a Frame) -> Result<Self> {
        if frame.ambient_dim() != 3 || frame.sub_dim() != 2 {
            return Err(Error::UnsupportedDimension);
        }
        let comp = frame.complement_matrix();
        Ok(FiberLift {
            hrep,
            frame,
            normal: comp.column(0).into_owned(),
        })
    }

    /// Height interval of the fiber over a 2D shadow point.
    fn fiber(&self, p2: &Vector) -> Option<(f64, f64)> {
        let base = self.frame.embed(p2);
        let mut lo = f64::NEG_INFINITY;
        let mut hi = f64::INFINITY;
        for (a, &b) in self.hrep.normals.iter().zip(&self.hrep.offsets) {
            let an = a.dot(&self.normal);
            let rhs = b - a.dot(&base);
            if an > 1e-12 {
                hi = hi.min(rhs / an);
            } else if an < -1e-12 {
                lo = lo.max(rhs / an);
            } else if rhs < -1e-9 {
                return None;
            }
        }
        if lo > hi + 1e-9 || !lo.is_finite() || !hi.is_finite() {
            return None;
        }
        let (lo, hi) = (lo.min(hi), hi.max(lo));
        Some((lo, hi))
    }

    fn mid_height(&self, p2: &Vector) -> Option<f64> {
        self.fiber(p2).map(|(lo, hi)| 0.5 * (lo + hi))
    }

    fn lift(&self, p2: &Vector) -> Option<Vector> {
        self.mid_height(p2)
            .map(|t| self.frame.embed(p2) + &self.normal * t)
    }
}

fn shadow_points(body: &Body, frame: &Frame) -> Result<Vec<Vector>> {
    Ok(body
        .to_vertices()?
        .iter()
        .map(|v| frame.project(v))
        .collect())
}

/// Shrunken disc radius after verifying r·(1−δ)·B ⊂ K|L about the origin.
fn checked_shadow_radius(body: &Body, frame: &Frame, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::InvalidInput("disc radius must be positive".into()));
    }
    let shadow = shadow_points(body, frame)?;
    let s0 = crate::classical::polygon_inradius_at_origin(&shadow).unwrap_or(0.0);
    let rho = r * (1.0 - DISC_SHRINK);
    if s0 < rho - 1e-12 {
        return Err(Error::DiscNotContained);
    }
    Ok(rho)
}

fn bisect_root(mut eval: impl FnMut(f64) -> Result<f64>, a0: f64, b0: f64) -> Result<(f64, f64)> {
    let fa0 = eval(a0)?;
    if fa0.abs() < 1e-12 {
        return Ok((a0, fa0));
    }
    let fb0 = eval(b0)?;
    if fb0.abs() < 1e-12 {
        return Ok((b0, fb0));
    }
    if fa0.signum() == fb0.signum() {
        return Err(Error::CertificateFailed(format!(
            "balance function does not change sign over the bracket ({fa0:.3e} vs {fb0:.3e})"
        )));
    }
    let (mut a, mut fa, mut b) = (a0, fa0, b0);
    for _ in 0..BISECTION_DEPTH {
        let m = 0.5 * (a + b);
        let fm = eval(m)?;
        if fm == 0.0 {
            return Ok((m, fm));
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    let root = 0.5 * (a + b);
    let f_root = eval(root)?;
    Ok((root, f_root))
}

/// Regular hexagonal section of a centrally symmetric 3-body over a disc of
/// radius r in the shadow plane: bisection on the fiber balance
/// f(θ) = h(p̄) + h(p̃) − h(p), which is antisymmetric under θ → θ + 180°.
pub fn hexagon_section(body: &Body, frame: &Frame, r: f64) -> Result<HexagonWitness> {
    if !body.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let hrep = body.to_hrep()?;
    let rho = checked_shadow_radius(body, frame, r)?;
    let lifter = FiberLift::new(&hrep, frame)?;
    let sixty = std::f64::consts::PI / 3.0;
    let point = |theta: f64| vec_from(&[rho * theta.cos(), rho * theta.sin()]);
    let balance = |theta: f64| -> Result<f64> {
        let t = lifter
            .mid_height(&point(theta))
            .ok_or(Error::DiscNotContained)?;
        let tbar = lifter
            .mid_height(&point(theta + sixty))
            .ok_or(Error::DiscNotContained)?;
        let ttil = lifter
            .mid_height(&point(theta - sixty))
            .ok_or(Error::DiscNotContained)?;
        Ok(tbar + ttil - t)
    };
    // central symmetry forces f(θ+π) = −f(θ); check before bracketing
    let f0 = balance(0.0)?;
    let fpi = balance(std::f64::consts::PI)?;
    if (f0 + fpi).abs() > 1e-7 * (1.0 + f0.abs()) {
        return Err(Error::CertificateFailed(
            "fiber balance is not antisymmetric over a half turn".into(),
        ));
    }
    let (theta, _) = bisect_root(balance, 0.0, std::f64::consts::PI)?;
    let p = [point(theta), point(theta + sixty), point(theta - sixty)];
    let mut q = Vec::with_capacity(3);
    for pk in &p {
        q.push(lifter.lift(pk).ok_or(Error::DiscNotContained)?);
    }
    for qk in &q {
        let neg = -qk;
        if !hrep.contains(qk, crate::tol().contact) || !hrep.contains(&neg, crate::tol().contact) {
            return Err(Error::CertificateFailed(
                "lifted hexagon point escapes the body".into(),
            ));
        }
    }
    let residual = coplanarity_residual(&q[0], &q[1], &q[2]);
    let plane_normal = plane_normal_of(&q[1], &q[2]).unwrap_or_else(|| lifter.normal.clone());
    Ok(HexagonWitness {
        p,
        q: [q[0].clone(), q[1].clone(), q[2].clone()],
        plane_normal,
        residual,
    })
}

fn coplanarity_residual(q1: &Vector, q2: &Vector, q3: &Vector) -> f64 {
    match orthonormalize(&[q2.clone(), q3.clone()]) {
        Ok(span) => (q1 - span.embed(&span.project(q1))).norm(),
        Err(_) => (q1 - q2 - q3).norm(),
    }
}

fn plane_normal_of(q2: &Vector, q3: &Vector) -> Option<Vector> {
    let c = q2.cross(q3);
    let norm = c.norm();
    if norm > 1e-12 {
        Some(c / norm)
    } else {
        None
    }
}

/// Balanced inscribed square for a general (not necessarily symmetric)
/// 3-body: bisection on g(θ) = [h(p) + h(−p)] − [h(p⁺) + h(−p⁺)] over a
/// quarter turn, where p⁺ is p rotated by 90°.
pub fn square_section(body: &Body, frame: &Frame, r: f64) -> Result<SquareWitness> {
    let hrep = body.to_hrep()?;
    let rho = checked_shadow_radius(body, frame, r)?;
    let lifter = FiberLift::new(&hrep, frame)?;
    let quarter = std::f64::consts::FRAC_PI_2;
    let point = |theta: f64| vec_from(&[rho * theta.cos(), rho * theta.sin()]);
    let pair_height = |theta: f64| -> Result<f64> {
        let a = lifter
            .mid_height(&point(theta))
            .ok_or(Error::DiscNotContained)?;
        let b = lifter
            .mid_height(&point(theta + std::f64::consts::PI))
            .ok_or(Error::DiscNotContained)?;
        Ok(a + b)
    };
    let balance =
        |theta: f64| -> Result<f64> { Ok(pair_height(theta)? - pair_height(theta + quarter)?) };
    let (theta, residual) = bisect_root(balance, 0.0, quarter)?;
    let p = [point(theta), point(theta + quarter)];
    let mut q_plus = Vec::with_capacity(2);
    let mut q_minus = Vec::with_capacity(2);
    for pk in &p {
        q_plus.push(lifter.lift(pk).ok_or(Error::DiscNotContained)?);
        q_minus.push(lifter.lift(&-pk).ok_or(Error::DiscNotContained)?);
    }
    for qk in q_plus.iter().chain(&q_minus) {
        if !hrep.contains(qk, crate::tol().contact) {
            return Err(Error::CertificateFailed(
                "lifted square point escapes the body".into(),
            ));
        }
    }
    Ok(SquareWitness {
        p,
        q_plus: [q_plus[0].clone(), q_plus[1].clone()],
        q_minus: [q_minus[0].clone(), q_minus[1].clone()],
        balance_residual: residual.abs(),
    })
}

/// Report of the hexagon-based lower bound on the planar section radius of a
/// centrally symmetric 3-body.
#[derive(Debug, Clone)]
pub struct SectionBoundReport {
    pub r_tilde: RadiusEstimate,
    /// Origin-centered inradius of the shadow at the witness plane.
    pub disc_radius: f64,
    pub hexagon: HexagonWitness,
    /// Plane of the hexagonal section (an r₂ witness).
    pub section_frame: Frame,
    /// Inradius about the origin of the hexagonal section: a certified lower
    /// bound for r₂(K).
    pub section_inradius: f64,
    pub r2: RadiusEstimate,
    /// Quotient r̃₂ / r₂ of the two estimates.
    pub ratio: f64,
}

/// Certify r₂(K) ≥ (√3/2) · r̃₂(K) on a symmetric 3-body by constructing the
/// hexagonal section at the r̃₂ witness plane.
pub fn symmetric_section_bound(body: &Body, config: &SearchConfig) -> Result<SectionBoundReport> {
    if body.dim() != 3 {
        return Err(Error::UnsupportedDimension);
    }
    if !body.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let r_tilde = crate::successive::inner_radius_projection(body, 2, config)?;
    let plane = r_tilde.witness_frame.clone();
    let shadow = shadow_points(body, &plane)?;
    let disc_radius =
        crate::classical::polygon_inradius_at_origin(&shadow).ok_or(Error::DiscNotContained)?;
    if disc_radius <= 0.0 {
        return Err(Error::DiscNotContained);
    }
    let hexagon = hexagon_section(body, &plane, disc_radius)?;
    // ring order of the central hexagon conv{±q}: q₃, q₁, q₂, −q₃, −q₁, −q₂
    let ring = [
        hexagon.q[2].clone(),
        hexagon.q[0].clone(),
        hexagon.q[1].clone(),
        -&hexagon.q[2],
        -&hexagon.q[0],
        -&hexagon.q[1],
    ];
    let mut section_inradius = f64::INFINITY;
    for k in 0..ring.len() {
        let d = segment_distance_to_origin(&ring[k], &ring[(k + 1) % ring.len()]);
        section_inradius = section_inradius.min(d);
    }
    let expected = 3.0f64.sqrt() / 2.0 * disc_radius;
    if section_inradius < expected - 1e-7 {
        return Err(Error::CertificateFailed(format!(
            "hexagonal section inradius {section_inradius} below (√3/2)·{disc_radius}"
        )));
    }
    let section_frame = orthonormalize(&[hexagon.q[1].clone(), hexagon.q[2].clone()])?;
    let r2 = inner_radius_section_with_starts(body, 2, &[section_frame.clone()], config)?;
    if r2.value < expected - 1e-6 {
        return Err(Error::CertificateFailed(
            "r₂ estimate fell below the certified hexagon bound".into(),
        ));
    }
    let ratio = r_tilde.value / r2.value;
    Ok(SectionBoundReport {
        r_tilde,
        disc_radius,
        hexagon,
        section_frame,
        section_inradius,
        r2,
        ratio,
    })
}

fn segment_distance_to_origin(a: &Vector, b: &Vector) -> f64 {
    let d = b - a;
    let len2 = d.norm_squared();
    if len2 < 1e-24 {
        return a.norm();
    }
    let t = (-a.dot(&d) / len2).clamp(0.0, 1.0);
    (a + d * t).norm()
}

/// Report of the diameter-parallelogram lower bound for r₂.
#[derive(Debug, Clone)]
pub struct ParallelogramReport {
    pub witness: ParallelogramWitness,
    /// Diameter of the shadow K|p⊥.
    pub proj_diameter: f64,
    /// half_width of the parallelogram = certified r₂ lower bound.
    pub certified_r2_lower: f64,
    pub r2: RadiusEstimate,
    pub outer_nm1: RadiusEstimate,
    /// 2√2·√((n−1)/n).
    pub chain_bound: f64,
    pub chain_ok: bool,
}

/// Build the midpoint parallelogram over the diameter of a V-polytope and
/// certify r₂(K) ≥ D(K|p⊥)/4, then evaluate the R_{n−1} ≤ 2√2·√((n−1)/n)·r₂
/// chain with one-sided estimates.
pub fn parallelogram_diameter_bound(
    body: &Body,
    config: &SearchConfig,
) -> Result<ParallelogramReport> {
    let Body::VPolytope(poly) = body else {
        return Err(Error::InvalidInput(
            "diameter parallelogram needs a V-polytope".into(),
        ));
    };
    let n = poly.dim();
    if n < 2 {
        return Err(Error::UnsupportedDimension);
    }
    let (_, (ia, ib)) = diameter(&poly.vertices)?;
    let center = (&poly.vertices[ia] + &poly.vertices[ib]) * 0.5;
    let verts: Vec<Vector> = poly.vertices.iter().map(|v| v - &center).collect();
    let p = verts[ia].clone();
    let p_hat = p.normalize();
    let perp = orthonormalize(&[p_hat])?.complement();
    let shadow: Vec<Vector> = verts.iter().map(|v| perp.project(v)).collect();
    let (proj_diameter, (k1, k2)) = diameter(&shadow)?;
    let (q1, q2) = (verts[k1].clone(), verts[k2].clone());
    let vertices = [
        (&p + &q1) * 0.5,
        (-&p + &q1) * 0.5,
        (&p + &q2) * 0.5,
        (-&p + &q2) * 0.5,
    ];
    // heights of the parallelogram with edge vectors u = p, w = (q1 − q2)/2
    let u = p.clone();
    let w = (&q1 - &q2) * 0.5;
    let h_u = (&w - &u * (w.dot(&u) / u.norm_squared())).norm();
    let h_w = if w.norm() > 1e-12 {
        (&u - &w * (u.dot(&w) / w.norm_squared())).norm()
    } else {
        0.0
    };
    let half_width = 0.5 * h_u.min(h_w);
    if half_width < proj_diameter / 4.0 - 1e-9 {
        return Err(Error::CertificateFailed(format!(
            "parallelogram half-width {half_width} below D(K|p⊥)/4 = {}",
            proj_diameter / 4.0
        )));
    }
    // opposite edges equal (parallelogram identity)
    let e1 = &vertices[0] - &vertices[2];
    let e2 = &vertices[1] - &vertices[3];
    if (e1 - e2).norm() > 1e-9 {
        return Err(Error::CertificateFailed(
            "midpoints do not span a parallelogram".into(),
        ));
    }
    // containment: midpoints of body points stay in the body
    if n <= 4 {
        let centered = VPolytope::new(verts.clone(), false)?;
        let hrep = crate::bodies::hrep_from_vrep(&centered)?;
        for v in &vertices {
            if !hrep.contains(v, crate::tol().contact) {
                return Err(Error::CertificateFailed(
                    "parallelogram vertex escapes the body".into(),
                ));
            }
        }
    }
    let centered_body = Body::VPolytope(VPolytope::new(verts, poly.symmetric)?);
    let plane = orthonormalize(&[u.clone(), w.clone()]).or_else(|_| {
        // w parallel to u: degenerate shadow; fall back to any plane through u
        let comp = orthonormalize(std::slice::from_ref(&u))?.complement();
        orthonormalize(&[u.clone(), comp.column(0)])
    })?;
    let r2 = inner_radius_section_with_starts(&centered_body, 2, &[plane], config)?;
    let outer_nm1 = outer_radius_with_starts(&centered_body, n - 1, &[perp], config)?;
    let chain_bound = 2.0 * 2.0f64.sqrt() * ((n as f64 - 1.0) / n as f64).sqrt();
    let chain_ok = outer_nm1.value <= chain_bound * r2.value + 1e-6;
    Ok(ParallelogramReport {
        witness: ParallelogramWitness {
            p,
            q1,
            q2,
            vertices,
            half_width,
        },
        proj_diameter,
        certified_r2_lower: half_width,
        r2,
        outer_nm1,
        chain_bound,
        chain_ok,
    })
}

/// Report of the width-box certificate for R₂.
#[derive(Debug, Clone)]
pub struct TrapezoidReport {
    pub witness: TrapezoidWitness,
    pub outer_2: RadiusEstimate,
    /// Inradius of the central width section K ∩ e₂⊥ (exact Chebyshev value).
    pub section_inradius: f64,
    pub inner_nm1: RadiusEstimate,
    /// 2√2·√n.
    pub chain_bound: f64,
    pub chain_ok: bool,
}

/// Normalize a V-polytope so its minimal-width chord lies on the e₂ axis,
/// box the e₁-e₂ shadow by 2ω′ × ω, and certify R₂ ≤ √(ω′² + ω²/4) ≤ √2·ω′.
pub fn trapezoid_width_bound(body: &Body, config: &SearchConfig) -> Result<TrapezoidReport> {
    let Body::VPolytope(poly) = body else {
        return Err(Error::InvalidInput("width box needs a V-polytope".into()));
    };
    let n = poly.dim();
    if !(3..=4).contains(&n) {
        return Err(Error::UnsupportedDimension);
    }
    let (_, u) = min_width(poly)?;
    let hrep = crate::bodies::hrep_from_vrep(poly)?;
    let (chord_len, chord_top) = longest_chord(&hrep, &u)?;
    let omega = width_in_direction(&poly.vertices, &u)?;
    if chord_len < omega - 1e-6 {
        return Err(Error::CertificateFailed(format!(
            "width chord ({chord_len}) shorter than the directional width ({omega}); \
             direction is not a double normal"
        )));
    }
    let mid = &chord_top - &u * (chord_len * 0.5);
    let mut e2 = Vector::zeros(n);
    e2[1] = 1.0;
    let motion = RigidMotion::translation_by(-mid).then(&rotation_taking(&u, &e2)?);
    let moved: Vec<Vector> = poly.vertices.iter().map(|v| motion.apply(v)).collect();
    let moved_poly = VPolytope::new(moved.clone(), false)?;
    let moved_hrep = crate::bodies::hrep_from_vrep(&moved_poly)?;

    // central width section S = K ∩ e₂⊥ in the complement coordinates
    let section_axes: Vec<usize> = (0..n).filter(|&k| k != 1).collect();
    let section_frame = Frame::coordinate(n, &section_axes);
    let section =
        section_hrep(&moved_hrep, &section_frame, &Vector::zeros(n))?.ok_or(Error::EmptyBody)?;
    let section_poly = vrep_from_hrep(&section)?;
    let (section_width, w_dir) = min_width(&section_poly)?;
    let (chord2_len, chord2_top) = longest_chord(&section, &w_dir)?;
    if chord2_len < section_width - 1e-6 {
        return Err(Error::CertificateFailed(
            "section width chord is not a double normal".into(),
        ));
    }
    // rotate inside e₂⊥ so the section chord is parallel to e₁
    let w_emb = section_frame.embed(&w_dir);
    let mut e1 = Vector::zeros(n);
    e1[0] = 1.0;
    let spin = rotation_taking(&w_emb, &e1)?;
    let final_verts: Vec<Vector> = moved.iter().map(|v| spin.apply(v)).collect();
    let x_top = spin.apply(&section_frame.embed(&chord2_top));
    let x_bot = spin.apply(&section_frame.embed(&(chord2_top.clone() - &w_dir * chord2_len)));
    let a = x_top[0];
    let b = -x_bot[0];
    if a < -1e-7 || b < -1e-7 {
        return Err(Error::CertificateFailed(
            "section chord does not straddle the width chord".into(),
        ));
    }
    let box_x = [-2.0 * b, 2.0 * a];
    let box_y = [-omega / 2.0, omega / 2.0];
    for v in &final_verts {
        if v[0] < box_x[0] - 1e-7
            || v[0] > box_x[1] + 1e-7
            || v[1] < box_y[0] - 1e-7
            || v[1] > box_y[1] + 1e-7
        {
            return Err(Error::CertificateFailed(format!(
                "shadow point ({}, {}) escapes the {}×{} box",
                v[0],
                v[1],
                box_x[1] - box_x[0],
                omega
            )));
        }
    }
    if omega > 2.0 * section_width + 1e-7 {
        return Err(Error::CertificateFailed(
            "width exceeds twice the section width".into(),
        ));
    }
    let r2_upper = (section_width.powi(2) + omega.powi(2) / 4.0).sqrt();
    let final_body = Body::VPolytope(VPolytope::new(final_verts, false)?);
    let outer_2 =
        outer_radius_with_starts(&final_body, 2, &[Frame::coordinate(n, &[0, 1])], config)?;
    if outer_2.value > 2.0f64.sqrt() * section_width + 1e-7 {
        return Err(Error::CertificateFailed("R₂ estimate exceeds √2·ω′".into()));
    }
    let (section_inradius, _) = chebyshev_center(&section)?;
    let inner_nm1 =
        inner_radius_section_with_starts(&final_body, n - 1, &[section_frame.clone()], config)?;
    let chain_bound = 2.0 * 2.0f64.sqrt() * (n as f64).sqrt();
    let chain_ok = outer_2.value <= chain_bound * inner_nm1.value + 1e-6;
    Ok(TrapezoidReport {
        witness: TrapezoidWitness {
            width: omega,
            section_width,
            box_extent_x: box_x,
            box_extent_y: box_y,
            r2_upper,
        },
        outer_2,
        section_inradius,
        inner_nm1,
        chain_bound,
        chain_ok,
    })
}

/// Longest chord of an H-polytope parallel to the unit direction u: one LP in
/// (x, s) maximizing s with x ∈ K and x − s·u ∈ K. Returns (length, top end).
fn longest_chord(h: &HPolytope, u: &Vector) -> Result<(f64, Vector)> {
    let n = h.dim();
    let mut normals = Vec::with_capacity(2 * h.normals.len());
    let mut offsets = Vec::with_capacity(2 * h.normals.len());
    for (a, &b) in h.normals.iter().zip(&h.offsets) {
        let mut top = Vector::zeros(n + 1);
        top.rows_mut(0, n).copy_from(a);
        normals.push(top);
        offsets.push(b);
        let mut bot = Vector::zeros(n + 1);
        bot.rows_mut(0, n).copy_from(a);
        bot[n] = -a.dot(u);
        normals.push(bot);
        offsets.push(b);
    }
    let mut objective = Vector::zeros(n + 1);
    objective[n] = 1.0;
    let (s, x) = solve_lp(&LpProblem {
        objective,
        normals,
        offsets,
    })?;
    Ok((s, x.rows(0, n).into_owned()))
}

/// Touching-point certificate: contact points of the min-ball whose convex
/// hull contains the center.
pub fn touching_points(body: &Body) -> Result<TouchingSet> {
    let Body::VPolytope(poly) = body else {
        return Err(Error::InvalidInput(
            "touching points need a V-polytope".into(),
        ));
    };
    touching_points_of(&poly.vertices).map(|(t, _)| t)
}

/// Internal form returning the min-ball as well.
pub fn touching_points_of(points: &[Vector]) -> Result<(TouchingSet, BallResult)> {
    let ball = min_enclosing_ball(points);
    let n = points[0].len();
    let contacts: Vec<usize> = (0..points.len())
        .filter(|&k| (&points[k] - &ball.center).norm() >= ball.radius - crate::tol().contact)
        .collect();
    // λ ≥ 0, Σλ = 1, Σλ·(p − center) = 0; the LP basis keeps ≤ n+1 nonzeros
    let cols: Vec<Vector> = contacts
        .iter()
        .map(|&k| {
            let c = &points[k] - &ball.center;
            let mut v = Vector::zeros(n + 1);
            v.rows_mut(0, n).copy_from(&c);
            v[n] = 1.0;
            v
        })
        .collect();
    let mut rhs = Vector::zeros(n + 1);
    rhs[n] = 1.0;
    let lambdas = solve_eq_feasibility(&cols, &rhs).ok_or_else(|| {
        Error::CertificateFailed("center is not in the hull of the contact points".into())
    })?;
    let mut indices = Vec::new();
    let mut weights = Vec::new();
    for (slot, lam) in lambdas.iter().enumerate() {
        if *lam > 1e-9 {
            indices.push(contacts[slot]);
            weights.push(*lam);
        }
    }
    // independent re-verification of the certificate
    let mut acc = Vector::zeros(n);
    let mut total = 0.0;
    for (&k, &lam) in indices.iter().zip(&weights) {
        acc += (&points[k] - &ball.center) * lam;
        total += lam;
    }
    if acc.norm() > 1e-9 || (total - 1.0).abs() > 1e-9 || indices.len() > n + 1 {
        return Err(Error::CertificateFailed(
            "touching certificate failed re-verification".into(),
        ));
    }
    Ok((
        TouchingSet {
            indices,
            lambdas: weights,
        },
        ball,
    ))
}

/// Root of g(t) = 4t − √2·√(t + 1 + √(1−2t)) on (0, 1/2] and its inverse:
/// the best lower bound on r₂(K)/R(S) and the 2.15063 quotient bound.
pub fn perelman_constant() -> (f64, f64) {
    let g = |t: f64| 4.0 * t - 2.0f64.sqrt() * (t + 1.0 + (1.0 - 2.0 * t).max(0.0).sqrt()).sqrt();
    let (mut a, mut b) = (1e-9, 0.5);
    debug_assert!(g(a) < 0.0 && g(b) > 0.0);
    for _ in 0..80 {
        let m = 0.5 * (a + b);
        if g(m) < 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    let t_star = 0.5 * (a + b);
    (t_star, 1.0 / t_star)
}

/// Slack of the planar complete-system inequality
/// 2R(2R + √(4R²−D²))·r − D²·√(4R²−D²) ≥ 0.
pub fn santalo_slack(big_r: f64, d: f64, r: f64) -> Result<f64> {
    if !(big_r > 0.0) || d < 0.0 || r < 0.0 {
        return Err(Error::InvalidTriple(
            "R must be positive, D and r nonnegative".into(),
        ));
    }
    if r > big_r + 1e-9 {
        return Err(Error::InvalidTriple(format!("r = {r} exceeds R = {big_r}")));
    }
    if d > 2.0 * big_r + 1e-9 {
        return Err(Error::InvalidTriple(format!(
            "D = {d} exceeds 2R = {}",
            2.0 * big_r
        )));
    }
    if d < big_r - 1e-9 {
        return Err(Error::InvalidTriple(format!("D = {d} below R = {big_r}")));
    }
    let root = (4.0 * big_r * big_r - d * d).max(0.0).sqrt();
    Ok(2.0 * big_r * (2.0 * big_r + root) * r - d * d * root)
}

/// Report of the full quotient pipeline on a 3-body.
#[derive(Debug, Clone)]
pub struct PerelmanReport {
    pub diameter: f64,
    /// R(S) = R(K|p⊥): circumradius of the shadow over the diameter direction.
    pub proj_circumradius: f64,
    pub triangle: TouchingSet,
    pub triangle_inradius: f64,
    pub triangle_diameter: f64,
    pub santalo_slack: f64,
    pub lemma_chain_ok: bool,
    pub r2: RadiusEstimate,
    pub outer_2: RadiusEstimate,
    pub ratio: f64,
    pub bound: f64,
    pub ok: bool,
}

/// Reproduce the quotient proof pipeline on a concrete 3-polytope: shadow over
/// the diameter direction, touching triangle S with R(S) = R(K|p⊥), the
/// planar slack on S, the lift chain r(S) ≤ r₂(K), and the final ratio
/// against 2.151.
pub fn perelman_pipeline(body: &Body, config: &SearchConfig) -> Result<PerelmanReport> {
    let Body::VPolytope(poly) = body else {
        return Err(Error::InvalidInput("pipeline needs a V-polytope".into()));
    };
    if poly.dim() != 3 {
        return Err(Error::UnsupportedDimension);
    }
    let (diam, (ia, ib)) = diameter(&poly.vertices)?;
    let origin = poly.vertices[ia].clone();
    let verts: Vec<Vector> = poly.vertices.iter().map(|v| v - &origin).collect();
    let p_hat = verts[ib].normalize();
    let perp = orthonormalize(&[p_hat])?.complement();
    let shadow: Vec<Vector> = verts.iter().map(|v| perp.project(v)).collect();
    let (triangle, ball) = touching_points_of(&shadow)?;
    let tri_pts: Vec<Vector> = triangle
        .indices
        .iter()
        .map(|&k| shadow[k].clone())
        .collect();
    let triangle_inradius = if tri_pts.len() >= 3 {
        polygon_inradius(&tri_pts)?
    } else {
        0.0
    };
    let triangle_diameter = if tri_pts.len() >= 2 {
        diameter(&tri_pts)?.0
    } else {
        0.0
    };
    let slack = santalo_slack(ball.radius, triangle_diameter, triangle_inradius)?;
    // the triple is assembled from contact-tolerance quantities, so the
    // equality manifold can dip a few 1e-7 below zero
    let slack_tol = 1e-6 * (1.0 + ball.radius.powi(3));
    if slack < -slack_tol {
        return Err(Error::CertificateFailed(format!(
            "planar slack is negative on the touching triangle ({slack:.3e})"
        )));
    }
    // lift the triangle into the body; its affine plane is an r₂ candidate
    let lifted: Vec<Vector> = triangle.indices.iter().map(|&k| verts[k].clone()).collect();
    let mut extra = Vec::new();
    if lifted.len() >= 3 {
        let d1 = &lifted[1] - &lifted[0];
        let d2 = &lifted[2] - &lifted[0];
        if let Ok(f) = orthonormalize(&[d1, d2]) {
            extra.push(f);
        }
    }
    let centered_body = Body::VPolytope(VPolytope::new(verts, false)?);
    let r2 = inner_radius_section_with_starts(&centered_body, 2, &extra, config)?;
    let lemma_chain_ok = triangle_inradius <= r2.value + 1e-9;
    let outer_2 = outer_radius_with_starts(&centered_body, 2, &[perp], config)?;
    let ratio = outer_2.value / r2.value;
    let bound = 2.151;
    Ok(PerelmanReport {
        diameter: diam,
        proj_circumradius: ball.radius,
        triangle,
        triangle_inradius,
        triangle_diameter,
        santalo_slack: slack,
        lemma_chain_ok,
        r2,
        outer_2,
        ratio,
        bound,
        ok: ratio <= bound + 1e-6,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{
        ball_hpolytope, make_antiprism_p, make_canonical, make_remark_simplex, random_polytope,
        Body, CanonicalKind,
    };
    use approx::assert_abs_diff_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn cfg(starts: usize) -> SearchConfig {
        SearchConfig {
            starts,
            ..Default::default()
        }
    }

    fn e12(n: usize) -> Frame {
        Frame::coordinate(n, &[0, 1])
    }

    #[test]
    fn hexagon_on_ball_approximation() {
        let ball = Body::HPolytope(ball_hpolytope(3, 80).unwrap());
        let w = hexagon_section(&ball, &e12(3), 0.95).unwrap();
        assert!(w.residual < 1e-7);
        for (pk, qk) in w.p.iter().zip(&w.q) {
            assert!((e12(3).project(qk) - pk).norm() < 1e-9);
            assert_abs_diff_eq!(pk.norm(), 0.95 * (1.0 - DISC_SHRINK), epsilon = 1e-12);
        }
    }

    #[test]
    fn hexagon_on_antiprism_matches_central_section() {
        let p = make_antiprism_p(0.01).unwrap();
        let w = hexagon_section(&p, &e12(3), 1.0 - 1e-6).unwrap();
        assert!(w.residual < 1e-7, "residual {}", w.residual);
        // lifted hexagon is a genuine interior section: heights stay inside
        // the ε slab
        for qk in &w.q {
            assert!(qk[2].abs() <= 0.0100001);
        }
    }

    #[test]
    fn hexagon_on_mirror_symmetric_cylinder_is_equatorial() {
        let mut verts = Vec::new();
        for k in 0..12 {
            let t = 2.0 * std::f64::consts::PI * k as f64 / 12.0;
            for z in [-1.0, 1.0] {
                verts.push(vec_from(&[t.cos(), t.sin(), z]));
            }
        }
        let body = Body::VPolytope(VPolytope::new(verts, true).unwrap());
        let w = hexagon_section(&body, &e12(3), 0.9).unwrap();
        for qk in &w.q {
            assert!(qk[2].abs() < 1e-9, "equatorial section expected");
        }
        assert!(w.residual < 1e-9);
    }

    #[test]
    fn hexagon_rejects_oversized_disc() {
        let p = make_antiprism_p(0.01).unwrap();
        assert!(matches!(
            hexagon_section(&p, &e12(3), 1.5),
            Err(Error::DiscNotContained)
        ));
    }

    #[test]
    fn hexagon_rejects_asymmetric_body() {
        let s = make_remark_simplex(0.01).unwrap();
        assert!(matches!(
            hexagon_section(&s, &e12(3), 0.5),
            Err(Error::NotSymmetric)
        ));
    }

    #[test]
    fn square_on_symmetric_body_balances_anywhere() {
        let cube = make_canonical(CanonicalKind::Cube, 3).unwrap();
        let w = square_section(&cube, &e12(3), 0.9).unwrap();
        assert!(w.balance_residual < 1e-9);
        let h1 = w.q_plus[0][2] + w.q_minus[0][2];
        let h2 = w.q_plus[1][2] + w.q_minus[1][2];
        assert!((h1 - h2).abs() < 1e-7);
    }

    #[test]
    fn square_on_remark_simplex() {
        let s = make_remark_simplex(0.01).unwrap();
        let w = square_section(&s, &e12(3), 0.7).unwrap();
        assert!(w.balance_residual < 1e-7);
        let h1 = w.q_plus[0][2] + w.q_minus[0][2];
        let h2 = w.q_plus[1][2] + w.q_minus[1][2];
        assert!((h1 - h2).abs() < 1e-7);
        // inscribed square geometry
        assert_abs_diff_eq!(w.p[0].dot(&w.p[1]), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn square_on_ball_has_zero_residual() {
        let ball = Body::HPolytope(ball_hpolytope(3, 80).unwrap());
        let w = square_section(&ball, &e12(3), 0.9).unwrap();
        assert!(w.balance_residual < 1e-9);
    }

    #[test]
    fn section_bound_on_antiprism_is_tight() {
        let p = make_antiprism_p(0.01).unwrap();
        let rep = symmetric_section_bound(&p, &cfg(64)).unwrap();
        assert!(rep.r_tilde.value >= 1.0 - 1e-6);
        assert!(rep.section_inradius >= 3.0f64.sqrt() / 2.0 - 1e-3);
        let expect = 2.0 / 3.0f64.sqrt();
        assert!((rep.ratio - expect).abs() < 1e-2, "ratio {}", rep.ratio);
    }

    #[test]
    fn section_bound_on_cube() {
        let cube = make_canonical(CanonicalKind::Cube, 3).unwrap();
        let rep = symmetric_section_bound(&cube, &cfg(48)).unwrap();
        // certified: r₂ ≥ (√3/2)·r̃₂ − tol
        assert!(rep.r2.value >= 3.0f64.sqrt() / 2.0 * rep.r_tilde.value - 1e-6);
    }

    #[test]
    fn parallelogram_bound_on_cube() {
        let cube = make_canonical(CanonicalKind::Cube, 3).unwrap();
        let rep = parallelogram_diameter_bound(&cube, &cfg(32)).unwrap();
        assert!(rep.witness.half_width >= rep.proj_diameter / 4.0 - 1e-9);
        assert!(rep.chain_ok);
        assert!(rep.r2.value >= rep.certified_r2_lower - 1e-9);
    }

    #[test]
    fn parallelogram_bound_on_simplex_and_randoms() {
        let s3 = make_canonical(CanonicalKind::RegularSimplex, 3).unwrap();
        let rep = parallelogram_diameter_bound(&s3, &cfg(32)).unwrap();
        assert!(rep.chain_ok);
        for seed in [1u64, 8] {
            let b = random_polytope(3, 10, false, seed).unwrap();
            let rep = parallelogram_diameter_bound(&b, &cfg(32)).unwrap();
            assert!(rep.chain_ok, "chain failed at seed {seed}");
            assert!(rep.r2.value >= rep.certified_r2_lower - 1e-9);
        }
    }

    #[test]
    fn parallelogram_on_symmetric_body() {
        // symmetric diameter is antipodal, so |q₁ − q₂| matches the shadow
        // diameter and both parallelogram heights agree
        let cross = make_canonical(CanonicalKind::Crosspolytope, 3).unwrap();
        let rep = parallelogram_diameter_bound(&cross, &cfg(16)).unwrap();
        assert!(rep.witness.half_width >= rep.proj_diameter / 4.0 - 1e-9);
    }

    #[test]
    fn trapezoid_bound_on_cube() {
        let cube = make_canonical(CanonicalKind::Cube, 3).unwrap();
        let rep = trapezoid_width_bound(&cube, &cfg(32)).unwrap();
        assert_abs_diff_eq!(rep.witness.width, 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(rep.witness.section_width, 2.0, epsilon = 1e-9);
        assert!(rep.outer_2.value <= 2.0f64.sqrt() * rep.witness.section_width + 1e-7);
        assert!(rep.chain_ok);
    }

    #[test]
    fn trapezoid_bound_on_simplex_and_randoms() {
        let s3 = make_canonical(CanonicalKind::RegularSimplex, 3).unwrap();
        let rep = trapezoid_width_bound(&s3, &cfg(32)).unwrap();
        assert!(rep.chain_ok);
        assert!(rep.witness.width <= 2.0 * rep.witness.section_width + 1e-7);
        for seed in [4u64, 13] {
            let b = random_polytope(3, 10, false, seed).unwrap();
            let rep = trapezoid_width_bound(&b, &cfg(32)).unwrap();
            assert!(rep.chain_ok, "chain failed at seed {seed}");
        }
    }

    #[test]
    fn touching_points_equilateral_triangle() {
        let t = make_canonical(CanonicalKind::RegularSimplex, 2).unwrap();
        let ts = touching_points(&t).unwrap();
        assert_eq!(ts.indices.len(), 3);
        for lam in &ts.lambdas {
            assert_abs_diff_eq!(*lam, 1.0 / 3.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn touching_points_segment_with_interior() {
        let body = Body::VPolytope(
            VPolytope::new(
                vec![
                    vec_from(&[1.0, 0.0]),
                    vec_from(&[-1.0, 0.0]),
                    vec_from(&[0.2, 0.1]),
                    vec_from(&[-0.3, -0.2]),
                ],
                false,
            )
            .unwrap(),
        );
        let ts = touching_points(&body).unwrap();
        assert_eq!(ts.indices, vec![0, 1]);
        for lam in &ts.lambdas {
            assert_abs_diff_eq!(*lam, 0.5, epsilon = 1e-9);
        }
    }

    #[test]
    fn touching_points_square_basic_support() {
        let sq = make_canonical(CanonicalKind::Cube, 2).unwrap();
        let ts = touching_points(&sq).unwrap();
        assert!(ts.indices.len() >= 2 && ts.indices.len() <= 3);
        let total: f64 = ts.lambdas.iter().sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn perelman_constant_values() {
        let t0 = std::time::Instant::now();
        let (t_star, bound) = perelman_constant();
        assert!(
            t0.elapsed().as_micros() < 1000,
            "must run in under a millisecond"
        );
        assert!((t_star - 0.46498).abs() < 1e-5, "t* = {t_star}");
        assert!((bound - 2.15063).abs() < 1e-4, "bound = {bound}");
        let g = |t: f64| 4.0 * t - 2.0f64.sqrt() * (t + 1.0 + (1.0 - 2.0 * t).sqrt()).sqrt();
        assert!(g(0.5) > 0.0);
        assert!(g(0.25) < 0.0);
    }

    #[test]
    fn santalo_equilateral_equality_and_disc() {
        let slack = santalo_slack(1.0, 3.0f64.sqrt(), 0.5).unwrap();
        assert_abs_diff_eq!(slack, 0.0, epsilon = 1e-9);
        let disc = santalo_slack(1.0, 2.0, 1.0).unwrap();
        assert_abs_diff_eq!(disc, 4.0, epsilon = 1e-12);
        assert!(santalo_slack(1.0, 2.5, 0.5).is_err());
        assert!(santalo_slack(1.0, 1.8, 1.2).is_err());
    }

    #[test]
    fn santalo_nonnegative_on_random_triangles() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut tested = 0;
        while tested < 100 {
            let pts: Vec<Vector> = (0..3)
                .map(|_| vec_from(&[rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)]))
                .collect();
            let area2 = ((pts[1][0] - pts[0][0]) * (pts[2][1] - pts[0][1])
                - (pts[1][1] - pts[0][1]) * (pts[2][0] - pts[0][0]))
                .abs();
            if area2 < 1e-3 {
                continue;
            }
            // exact planar functionals: min-ball radius, longest side, area/s
            let big_r = min_enclosing_ball(&pts).radius;
            let (d, _) = diameter(&pts).unwrap();
            let sides: f64 = (0..3).map(|k| (&pts[k] - &pts[(k + 1) % 3]).norm()).sum();
            let r = area2 / sides;
            let slack = santalo_slack(big_r, d, r).unwrap();
            assert!(slack >= -1e-9, "slack {slack}");
            tested += 1;
        }
    }

    #[test]
    fn lemma_projection_inradius_never_beats_body_inradius() {
        // random planar polygons embedded in ℝ³, projected to random planes
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut random_frame = |rng: &mut ChaCha8Rng| loop {
            let cols: Vec<Vector> = (0..2)
                .map(|_| {
                    vec_from(&[
                        rng.gen_range(-1.0..1.0),
                        rng.gen_range(-1.0..1.0),
                        rng.gen_range(-1.0..1.0),
                    ])
                })
                .collect();
            if let Ok(f) = orthonormalize(&cols) {
                break f;
            }
        };
        for trial in 0..50 {
            let m = rng.gen_range(4..9);
            let pts2: Vec<Vector> = (0..m)
                .map(|_| vec_from(&[rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)]))
                .collect();
            let r_body = polygon_inradius(&pts2).unwrap();
            if r_body < 1e-3 {
                continue;
            }
            let emb = random_frame(&mut rng);
            let pts3: Vec<Vector> = pts2.iter().map(|p| emb.embed(p)).collect();
            let plane = random_frame(&mut rng);
            let projected: Vec<Vector> = pts3.iter().map(|p| plane.project(p)).collect();
            let r_proj = polygon_inradius(&projected).unwrap();
            assert!(
                r_proj <= r_body + 1e-9,
                "trial {trial}: projection inradius {r_proj} exceeds body inradius {r_body}"
            );
        }
    }

    #[test]
    fn pipeline_on_simplex_and_ball() {
        let s3 = make_canonical(CanonicalKind::RegularSimplex, 3).unwrap();
        let rep = perelman_pipeline(&s3, &cfg(48)).unwrap();
        assert!(rep.ok, "ratio {}", rep.ratio);
        assert!(rep.lemma_chain_ok);
        assert!(rep.santalo_slack >= -1e-6);
        assert!(rep.ratio < 2.151);

        // ball-like body: ratio close to 1
        let ball_poly = {
            let h = ball_hpolytope(3, 80).unwrap();
            let v = vrep_from_hrep(&h).unwrap();
            Body::VPolytope(v)
        };
        let rep = perelman_pipeline(&ball_poly, &cfg(32)).unwrap();
        assert!(rep.ok);
        assert!((rep.ratio - 1.0).abs() < 0.1, "ratio {}", rep.ratio);
    }

    #[test]
    fn pipeline_campaign_small() {
        for seed in 0..20u64 {
            let b = random_polytope(3, 10, false, seed).unwrap();
            let rep = perelman_pipeline(&b, &cfg(32)).unwrap();
            assert!(rep.ok, "seed {seed}: ratio {}", rep.ratio);
            assert!(rep.santalo_slack >= -1e-6);
        }
    }
}
