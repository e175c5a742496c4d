//! The four classical radius functionals: circumradius R (via the min-ball),
//! inradius r (Chebyshev LP), diameter D and minimal width ω.

use crate::bodies::{hrep_from_vrep, HPolytope, VPolytope};
use crate::error::{Error, Result};
use crate::linalg::{frame_from_chart, hash_f64s, orthonormalize, Vector};
use crate::lp::{solve_lp, LpProblem};
use crate::optimize::nelder_mead;

/// Largest inscribed Euclidean ball of an H-polytope: returns (radius, center).
///
/// Solves max ρ s.t. a_k·c + ρ ≤ b_k over (c, ρ); with unit normals ρ is the
/// signed distance from c to the nearest facet plane, so a negative optimum
/// certifies emptiness.
pub fn chebyshev_center(h: &HPolytope) -> Result<(f64, Vector)> {
    let n = h.dim();
    let mut normals = Vec::with_capacity(h.normals.len());
    for a in &h.normals {
        let mut row = Vector::zeros(n + 1);
        row.rows_mut(0, n).copy_from(a);
        row[n] = 1.0;
        normals.push(row);
    }
    let mut objective = Vector::zeros(n + 1);
    objective[n] = 1.0;
    let (value, x) = solve_lp(&LpProblem {
        objective,
        normals,
        offsets: h.offsets.clone(),
    })?;
    if value < -crate::tol().lp {
        return Err(Error::EmptyBody);
    }
    Ok((value.max(0.0), x.rows(0, n).into_owned()))
}

/// Exact diameter by exhaustive pair scan; returns the lexicographically
/// smallest maximizing pair.
pub fn diameter(points: &[Vector]) -> Result<(f64, (usize, usize))> {
    if points.len() < 2 {
        return Err(Error::TooFewPoints);
    }
    let mut best = (f64::NEG_INFINITY, (0usize, 0usize));
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let d = (&points[i] - &points[j]).norm();
            if d > best.0 {
                best = (d, (i, j));
            }
        }
    }
    Ok(best)
}

/// Width of the point set in the unit direction `u`: max u·p − min u·p.
pub fn width_in_direction(points: &[Vector], u: &Vector) -> Result<f64> {
    if (u.norm() - 1.0).abs() > crate::tol().unit {
        return Err(Error::NotUnit);
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for p in points {
        let t = u.dot(p);
        lo = lo.min(t);
        hi = hi.max(t);
    }
    Ok(hi - lo)
}

/// Minimal width of a full-dimensional V-polytope (n ≤ 4) and an achieving
/// direction.
///
/// Candidates are the facet normals of the H-representation plus, in ℝ³, the
/// normalized cross products of edge direction pairs; each candidate is
/// refined by Nelder–Mead descent on the sphere. The result is always an
/// upper bound on the true minimal width; it is exact on polygons and on the
/// regression corpus.
pub fn min_width(p: &VPolytope) -> Result<(f64, Vector)> {
    let n = p.dim();
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    if n == 1 {
        let (d, _) = diameter(&p.vertices)?;
        return Ok((d, Vector::from_element(1, 1.0)));
    }
    let h = hrep_from_vrep(p)?;
    let mut candidates: Vec<Vector> = h.normals.clone();
    if n == 3 {
        let edges = polytope_edges(p, &h);
        for a in 0..edges.len() {
            for b in (a + 1)..edges.len() {
                let c = edges[a].cross(&edges[b]);
                let norm = c.norm();
                if norm > 1e-9 {
                    candidates.push(c / norm);
                }
            }
        }
    }
    // deduplicate up to sign
    let mut starts: Vec<Vector> = Vec::new();
    for c in candidates {
        if !starts
            .iter()
            .any(|s| (s - &c).norm() < 1e-9 || (s + &c).norm() < 1e-9)
        {
            starts.push(c);
        }
    }
    // top up with seeded directions so descent covers the sphere
    let seed = hash_f64s(0x77, p.vertices.iter().flat_map(|v| v.iter().copied()));
    let filler = crate::optimize::start_frames(n, 1, 64, seed);
    for f in filler {
        if starts.len() >= 64 {
            break;
        }
        starts.push(f.column(0));
    }

    let mut best: Option<(f64, Vector)> = None;
    for dir in &starts {
        let base = orthonormalize(std::slice::from_ref(dir))?;
        let mut eval = |params: &[f64]| {
            let f = frame_from_chart(&base, params);
            width_in_direction(&p.vertices, &f.column(0)).unwrap_or(f64::INFINITY)
        };
        let dim = n - 1;
        let (params, value, _) = nelder_mead(&mut eval, &vec![0.0; dim], 0.1, 200, 1e-9);
        let u = frame_from_chart(&base, &params).column(0);
        if best.as_ref().map_or(true, |(bv, _)| value < *bv) {
            best = Some((value, u));
        }
    }
    let (omega, u) = best.expect("candidate list is nonempty");
    Ok((omega, u))
}

/// Edge directions of a 3-polytope: vertex pairs lying on ≥ 2 common facets.
fn polytope_edges(p: &VPolytope, h: &HPolytope) -> Vec<Vector> {
    let tight: Vec<Vec<usize>> = p
        .vertices
        .iter()
        .map(|v| {
            h.normals
                .iter()
                .zip(&h.offsets)
                .enumerate()
                .filter(|(_, (a, &b))| (a.dot(v) - b).abs() <= 1e-8)
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let mut dirs = Vec::new();
    for i in 0..p.vertices.len() {
        for j in (i + 1)..p.vertices.len() {
            let shared = tight[i].iter().filter(|k| tight[j].contains(k)).count();
            if shared >= 2 {
                let d = &p.vertices[j] - &p.vertices[i];
                let norm = d.norm();
                if norm > 1e-12 {
                    dirs.push(d / norm);
                }
            }
        }
    }
    dirs
}

/// Inradius of the convex hull of 2D points about a free center; zero when the
/// hull is degenerate.
pub fn polygon_inradius(points2d: &[Vector]) -> Result<f64> {
    match crate::bodies::polygon_hrep(points2d) {
        Some(h) => Ok(chebyshev_center(&h)?.0),
        None => Ok(0.0),
    }
}

/// Inradius about the origin of the convex hull of 2D points: the minimum
/// distance from the origin to a hull edge line (negative offsets mean the
/// origin is outside).
pub fn polygon_inradius_at_origin(points2d: &[Vector]) -> Option<f64> {
    let h = crate::bodies::polygon_hrep(points2d)?;
    h.offsets.iter().cloned().reduce(f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{make_antiprism_p, make_canonical, random_polytope, Body, CanonicalKind};
    use crate::linalg::vec_from;
    use crate::meb::min_enclosing_ball;
    use approx::assert_abs_diff_eq;

    fn cube3() -> VPolytope {
        match make_canonical(CanonicalKind::Cube, 3).unwrap() {
            Body::VPolytope(p) => p,
            _ => unreachable!(),
        }
    }

    #[test]
    fn cube_chebyshev() {
        let (r, c) = chebyshev_center(&hrep_from_vrep(&cube3()).unwrap()).unwrap();
        assert_abs_diff_eq!(r, 1.0, epsilon = 1e-9);
        assert!(c.norm() < 1e-9);
    }

    #[test]
    fn right_triangle_chebyshev_matches_incircle_formula() {
        // x ≥ 0, y ≥ 0, x + y ≤ 1: legs a = b = 1, hypotenuse c = √2,
        // r = (a + b − c)/2
        let h = HPolytope::new(
            vec![
                vec_from(&[-1.0, 0.0]),
                vec_from(&[0.0, -1.0]),
                vec_from(&[1.0, 1.0]),
            ],
            vec![0.0, 0.0, 1.0 / 2.0f64.sqrt()],
        )
        .unwrap();
        let (r, c) = chebyshev_center(&h).unwrap();
        let expect = (2.0 - 2.0f64.sqrt()) / 2.0;
        assert_abs_diff_eq!(r, expect, epsilon = 1e-9);
        assert_abs_diff_eq!(c[0], expect, epsilon = 1e-9);
        assert_abs_diff_eq!(c[1], expect, epsilon = 1e-9);
    }

    #[test]
    fn empty_section_is_reported() {
        let h = HPolytope::new(
            vec![vec_from(&[1.0, 0.0]), vec_from(&[-1.0, 0.0])],
            vec![-1.0, -1.0],
        )
        .unwrap();
        assert!(matches!(chebyshev_center(&h), Err(Error::EmptyBody)));
    }

    #[test]
    fn chebyshev_radius_scales_linearly() {
        let h = hrep_from_vrep(&cube3()).unwrap();
        let (r1, _) = chebyshev_center(&h).unwrap();
        for lambda in [0.5, 2.0] {
            let scaled = HPolytope::new(
                h.normals.clone(),
                h.offsets.iter().map(|b| b * lambda).collect(),
            )
            .unwrap();
            let (r2, _) = chebyshev_center(&scaled).unwrap();
            assert_abs_diff_eq!(r2, lambda * r1, epsilon = 1e-9);
        }
    }

    #[test]
    fn cube_diameter() {
        let (d, _) = diameter(&cube3().vertices).unwrap();
        assert_abs_diff_eq!(d, 2.0 * 3.0f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn segment_diameter() {
        let (d, pair) = diameter(&[vec_from(&[0.0]), vec_from(&[1.0])]).unwrap();
        assert_eq!(d, 1.0);
        assert_eq!(pair, (0, 1));
    }

    #[test]
    fn antiprism_diameter_is_the_long_vertex_pair() {
        let Body::VPolytope(p) = make_antiprism_p(0.01).unwrap() else {
            panic!()
        };
        let (d, (i, j)) = diameter(&p.vertices).unwrap();
        let expect = 2.0 * vec_from(&[-2.0 / 3.0f64.sqrt(), 0.0, 0.01]).norm();
        assert_abs_diff_eq!(d, expect, epsilon = 1e-12);
        assert!((&p.vertices[i] + &p.vertices[j]).norm() < 1e-12, "antipodal pair");
    }

    #[test]
    fn width_of_cube_in_directions() {
        let verts = cube3().vertices;
        let e1 = vec_from(&[1.0, 0.0, 0.0]);
        assert_abs_diff_eq!(width_in_direction(&verts, &e1).unwrap(), 2.0, epsilon = 1e-12);
        let diag = vec_from(&[1.0, 1.0, 1.0]).normalize();
        assert_abs_diff_eq!(
            width_in_direction(&verts, &diag).unwrap(),
            2.0 * 3.0f64.sqrt(),
            epsilon = 1e-12
        );
        assert_eq!(
            width_in_direction(&[vec_from(&[2.0, 0.0, 0.0])], &e1).unwrap(),
            0.0
        );
        assert!(matches!(
            width_in_direction(&verts, &vec_from(&[1.0, 1.0, 1.0])),
            Err(Error::NotUnit)
        ));
    }

    #[test]
    fn min_width_of_cube() {
        let (w, dir) = min_width(&cube3()).unwrap();
        assert_abs_diff_eq!(w, 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(dir.amax(), 1.0, epsilon = 1e-6);
    }

    #[test]
    fn min_width_of_equilateral_triangle() {
        let Body::VPolytope(t) = make_canonical(CanonicalKind::RegularSimplex, 2).unwrap() else {
            panic!()
        };
        let (w, _) = min_width(&t).unwrap();
        assert_abs_diff_eq!(w, 1.5, epsilon = 1e-9);
    }

    #[test]
    fn min_width_rejects_degenerate() {
        let p = VPolytope::new(
            vec![
                vec_from(&[0.0, 0.0, 0.0]),
                vec_from(&[1.0, 0.0, 0.0]),
                vec_from(&[2.0, 0.0, 0.0]),
                vec_from(&[3.0, 0.0, 0.0]),
            ],
            false,
        )
        .unwrap();
        assert!(matches!(min_width(&p), Err(Error::NotFullDimensional)));
    }

    #[test]
    fn classic_radius_chain_on_random_bodies() {
        // 2R ≥ D ≥ ω ≥ 2r
        for seed in 0..6u64 {
            let Body::VPolytope(p) = random_polytope(3, 12, seed % 2 == 0, seed).unwrap() else {
                panic!()
            };
            let big_r = min_enclosing_ball(&p.vertices).radius;
            let (d, _) = diameter(&p.vertices).unwrap();
            let (w, _) = min_width(&p).unwrap();
            let (r, _) = chebyshev_center(&hrep_from_vrep(&p).unwrap()).unwrap();
            assert!(2.0 * big_r >= d - 1e-9);
            assert!(d >= w - 1e-9);
            assert!(w >= 2.0 * r - 1e-9);
        }
    }

    #[test]
    fn min_width_matches_sphere_grid_oracle() {
        // dense direction grid gives an upper bound that local descent must
        // match or beat on the regression corpus
        for seed in [2u64, 5, 9] {
            let Body::VPolytope(p) = random_polytope(3, 10, false, seed).unwrap() else {
                panic!()
            };
            let (w, _) = min_width(&p).unwrap();
            let mut grid_best = f64::INFINITY;
            let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
            let count = 4000;
            for k in 0..count {
                let z: f64 = 1.0 - (2.0 * k as f64 + 1.0) / count as f64;
                let rr = (1.0 - z * z).max(0.0).sqrt();
                let t = 2.0 * std::f64::consts::PI * k as f64 / golden;
                let u = vec_from(&[rr * t.cos(), rr * t.sin(), z]);
                grid_best = grid_best.min(width_in_direction(&p.vertices, &u).unwrap());
            }
            assert!(w <= grid_best + 1e-6, "width {w} vs grid {grid_best}");
        }
    }
}
