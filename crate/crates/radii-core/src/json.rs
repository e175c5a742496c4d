//! JSON schemas for bodies, radius estimates, witnesses and audit reports.
//!
//! Floats serialize with 17 significant digits (`{:.16e}`), which round-trips
//! every finite f64 exactly. Body input parsing reports the offending field
//! by name so the CLI can surface actionable errors.

use nalgebra::DMatrix;
use serde_json::{json, Map, Value};

use crate::audit::{AuditReport, CampaignReport};
use crate::bodies::{
    make_antiprism_p, make_canonical, make_remark_simplex, Body, CanonicalKind, Ellipsoid,
    VPolytope,
};
use crate::constructions::{
    HexagonWitness, ParallelogramReport, PerelmanReport, SectionBoundReport, SquareWitness,
    TouchingSet, TrapezoidReport,
};
use crate::error::{Error, Result};
use crate::linalg::{vec_from, Frame, Vector};
use crate::successive::{RadiiProfile, RadiusEstimate};

struct Sig17Formatter;

impl serde_json::ser::Formatter for Sig17Formatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serialize a JSON value with all floats at 17 significant digits.
pub fn to_string_17(value: &Value) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Sig17Formatter);
    serde::Serialize::serialize(value, &mut ser).expect("in-memory serialization cannot fail");
    String::from_utf8(out).expect("JSON output is UTF-8")
}

pub fn vector_json(v: &Vector) -> Value {
    Value::Array(v.iter().map(|&x| json!(x)).collect())
}

/// Matrix as an array of rows.
pub fn matrix_json(m: &DMatrix<f64>) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|r| Value::Array((0..m.ncols()).map(|c| json!(m[(r, c)])).collect()))
            .collect(),
    )
}

/// Frame as an array of orthonormal columns.
pub fn frame_json(f: &Frame) -> Value {
    Value::Array((0..f.sub_dim()).map(|k| vector_json(&f.column(k))).collect())
}

pub fn estimate_json(e: &RadiusEstimate) -> Value {
    json!({
        "value": e.value,
        "witness_frame": frame_json(&e.witness_frame),
        "witness_offset": vector_json(&e.witness_offset),
        "side": e.side.as_str(),
        "starts_used": e.starts_used,
        "converged": e.converged,
    })
}

pub fn profile_json(p: &RadiiProfile) -> Value {
    json!({
        "outer": p.outer.iter().map(estimate_json).collect::<Vec<_>>(),
        "inner_section": p.inner_section.iter().map(estimate_json).collect::<Vec<_>>(),
        "inner_projection": p.inner_projection.iter().map(estimate_json).collect::<Vec<_>>(),
    })
}

pub fn audit_json(rep: &AuditReport) -> Value {
    json!({
        "body_id": rep.body_id,
        "n": rep.n,
        "symmetric": rep.symmetric,
        "config": { "starts": rep.starts, "seed": rep.seed },
        "seconds": rep.seconds,
        "checks": rep.checks.iter().map(|c| json!({
            "check_id": c.check_id,
            "i": c.i,
            "numeric_ratio": c.numeric_ratio,
            "bound": c.bound,
            "slack": c.slack,
            "verdict": c.verdict.as_str(),
        })).collect::<Vec<_>>(),
    })
}

pub fn campaign_json(rep: &CampaignReport) -> Value {
    json!({
        "seconds": rep.seconds,
        "bodies_audited": rep.reports.len(),
        "failures": rep.failures.iter().map(|(id, e)| json!({"body_id": id, "error": e})).collect::<Vec<_>>(),
        "aggregates": rep.aggregates.iter().map(|a| json!({
            "check_id": a.check_id,
            "pass": a.pass,
            "inconclusive": a.inconclusive,
            "pass_rate": a.pass as f64 / (a.pass + a.inconclusive).max(1) as f64,
            "max_ratio": a.max_ratio,
            "max_ratio_body": a.max_ratio_body,
            "min_slack": a.min_slack,
        })).collect::<Vec<_>>(),
        "reports": rep.reports.iter().map(audit_json).collect::<Vec<_>>(),
    })
}

pub fn hexagon_json(w: &HexagonWitness) -> Value {
    json!({
        "p": w.p.iter().map(vector_json).collect::<Vec<_>>(),
        "q": w.q.iter().map(vector_json).collect::<Vec<_>>(),
        "plane_normal": vector_json(&w.plane_normal),
        "residual": w.residual,
    })
}

pub fn square_json(w: &SquareWitness) -> Value {
    json!({
        "p": w.p.iter().map(vector_json).collect::<Vec<_>>(),
        "q_plus": w.q_plus.iter().map(vector_json).collect::<Vec<_>>(),
        "q_minus": w.q_minus.iter().map(vector_json).collect::<Vec<_>>(),
        "balance_residual": w.balance_residual,
    })
}

pub fn section_bound_json(rep: &SectionBoundReport) -> Value {
    json!({
        "r_tilde": estimate_json(&rep.r_tilde),
        "disc_radius": rep.disc_radius,
        "hexagon": hexagon_json(&rep.hexagon),
        "section_frame": frame_json(&rep.section_frame),
        "section_inradius": rep.section_inradius,
        "r2": estimate_json(&rep.r2),
        "ratio": rep.ratio,
    })
}

pub fn parallelogram_json(rep: &ParallelogramReport) -> Value {
    json!({
        "witness": {
            "p": vector_json(&rep.witness.p),
            "q1": vector_json(&rep.witness.q1),
            "q2": vector_json(&rep.witness.q2),
            "vertices": rep.witness.vertices.iter().map(vector_json).collect::<Vec<_>>(),
            "half_width": rep.witness.half_width,
        },
        "proj_diameter": rep.proj_diameter,
        "certified_r2_lower": rep.certified_r2_lower,
        "r2": estimate_json(&rep.r2),
        "outer_nm1": estimate_json(&rep.outer_nm1),
        "chain_bound": rep.chain_bound,
        "chain_ok": rep.chain_ok,
    })
}

pub fn trapezoid_json(rep: &TrapezoidReport) -> Value {
    json!({
        "witness": {
            "width": rep.witness.width,
            "section_width": rep.witness.section_width,
            "box_extent_x": rep.witness.box_extent_x.to_vec(),
            "box_extent_y": rep.witness.box_extent_y.to_vec(),
            "r2_upper": rep.witness.r2_upper,
        },
        "outer_2": estimate_json(&rep.outer_2),
        "section_inradius": rep.section_inradius,
        "inner_nm1": estimate_json(&rep.inner_nm1),
        "chain_bound": rep.chain_bound,
        "chain_ok": rep.chain_ok,
    })
}

pub fn touching_json(t: &TouchingSet) -> Value {
    json!({
        "indices": t.indices,
        "lambdas": t.lambdas,
    })
}

pub fn perelman_report_json(rep: &PerelmanReport) -> Value {
    json!({
        "diameter": rep.diameter,
        "proj_circumradius": rep.proj_circumradius,
        "triangle": touching_json(&rep.triangle),
        "triangle_inradius": rep.triangle_inradius,
        "triangle_diameter": rep.triangle_diameter,
        "santalo_slack": rep.santalo_slack,
        "lemma_chain_ok": rep.lemma_chain_ok,
        "r2": estimate_json(&rep.r2),
        "outer_2": estimate_json(&rep.outer_2),
        "ratio": rep.ratio,
        "bound": rep.bound,
        "ok": rep.ok,
    })
}

fn field<'a>(map: &'a Map<String, Value>, name: &str) -> Result<&'a Value> {
    map.get(name)
        .ok_or_else(|| Error::InvalidInput(format!("missing field \"{name}\"")))
}

fn as_f64(v: &Value, name: &str) -> Result<f64> {
    v.as_f64()
        .ok_or_else(|| Error::InvalidInput(format!("field \"{name}\" must be a number")))
}

fn as_vector(v: &Value, name: &str) -> Result<Vector> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput(format!("field \"{name}\" must be an array")))?;
    let mut coords = Vec::with_capacity(arr.len());
    for x in arr {
        coords.push(as_f64(x, name)?);
    }
    Ok(vec_from(&coords))
}

/// Parse a body from the documented JSON schema.
pub fn body_from_json(value: &Value) -> Result<Body> {
    let map = value
        .as_object()
        .ok_or_else(|| Error::InvalidInput("body must be a JSON object".into()))?;
    let kind = field(map, "type")?
        .as_str()
        .ok_or_else(|| Error::InvalidInput("field \"type\" must be a string".into()))?;
    match kind {
        "vpolytope" => {
            let verts_value = field(map, "vertices")?
                .as_array()
                .ok_or_else(|| Error::InvalidInput("field \"vertices\" must be an array".into()))?;
            let mut vertices = Vec::with_capacity(verts_value.len());
            for v in verts_value {
                vertices.push(as_vector(v, "vertices")?);
            }
            let symmetric = field(map, "symmetric")?.as_bool().ok_or_else(|| {
                Error::InvalidInput("field \"symmetric\" must be a boolean".into())
            })?;
            Ok(Body::VPolytope(VPolytope::new(vertices, symmetric)?))
        }
        "ellipsoid" => {
            let semiaxes_value = field(map, "semiaxes")?
                .as_array()
                .ok_or_else(|| Error::InvalidInput("field \"semiaxes\" must be an array".into()))?;
            let mut semiaxes = Vec::with_capacity(semiaxes_value.len());
            for x in semiaxes_value {
                semiaxes.push(as_f64(x, "semiaxes")?);
            }
            let n = semiaxes.len();
            let rows_value = field(map, "rotation")?.as_array().ok_or_else(|| {
                Error::InvalidInput("field \"rotation\" must be an array of rows".into())
            })?;
            if rows_value.len() != n {
                return Err(Error::InvalidInput(format!(
                    "field \"rotation\" must have {n} rows"
                )));
            }
            let mut rotation = DMatrix::zeros(n, n);
            for (r, row) in rows_value.iter().enumerate() {
                let row = as_vector(row, "rotation")?;
                if row.len() != n {
                    return Err(Error::InvalidInput(format!(
                        "field \"rotation\" row {r} must have {n} entries"
                    )));
                }
                for c in 0..n {
                    rotation[(r, c)] = row[c];
                }
            }
            let center = as_vector(field(map, "center")?, "center")?;
            Ok(Body::Ellipsoid(Ellipsoid::new(semiaxes, rotation, center)?))
        }
        "canonical" => {
            let kind_str = field(map, "kind")?
                .as_str()
                .ok_or_else(|| Error::InvalidInput("field \"kind\" must be a string".into()))?;
            let kind = canonical_kind_from_str(kind_str)
                .map_err(|_| Error::InvalidInput(format!("field \"kind\" has unknown value \"{kind_str}\"")))?;
            let dim = field(map, "dim")?
                .as_u64()
                .ok_or_else(|| Error::InvalidInput("field \"dim\" must be an integer".into()))?;
            make_canonical(kind, dim as usize)
        }
        "antiprism_P" => {
            let eps = as_f64(field(map, "eps")?, "eps")?;
            make_antiprism_p(eps)
        }
        "remark_simplex" => {
            let eps = as_f64(field(map, "eps")?, "eps")?;
            make_remark_simplex(eps)
        }
        other => Err(Error::InvalidInput(format!(
            "field \"type\" has unknown value \"{other}\""
        ))),
    }
}

/// Emit a body in the documented JSON schema.
pub fn body_to_json(body: &Body) -> Value {
    match body {
        Body::VPolytope(p) => json!({
            "type": "vpolytope",
            "vertices": p.vertices.iter().map(vector_json).collect::<Vec<_>>(),
            "symmetric": p.symmetric,
        }),
        Body::HPolytope(h) => json!({
            "type": "hpolytope",
            "normals": h.normals.iter().map(vector_json).collect::<Vec<_>>(),
            "offsets": h.offsets,
        }),
        Body::Ellipsoid(e) => json!({
            "type": "ellipsoid",
            "semiaxes": e.semiaxes,
            "rotation": matrix_json(&e.orientation),
            "center": vector_json(&e.center),
        }),
    }
}

pub fn canonical_kind_from_str(s: &str) -> Result<CanonicalKind> {
    match s {
        "cube" => Ok(CanonicalKind::Cube),
        "ball" => Ok(CanonicalKind::Ball),
        "crosspolytope" => Ok(CanonicalKind::Crosspolytope),
        "regular_simplex" | "simplex" => Ok(CanonicalKind::RegularSimplex),
        other => Err(Error::InvalidInput(format!(
            "unknown canonical kind \"{other}\""
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_have_17_significant_digits_and_round_trip() {
        let x = std::f64::consts::SQRT_2;
        let s = to_string_17(&json!({ "v": x }));
        assert!(s.contains("1.4142135623730951e0"), "{s}");
        let parsed: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(parsed["v"].as_f64().unwrap(), x);
    }

    #[test]
    fn body_round_trip_vpolytope() {
        let body = make_canonical(CanonicalKind::Crosspolytope, 3).unwrap();
        let v = body_to_json(&body);
        let back = body_from_json(&v).unwrap();
        let Body::VPolytope(p) = back else { panic!() };
        assert_eq!(p.vertices.len(), 6);
        assert!(p.symmetric);
    }

    #[test]
    fn body_round_trip_ellipsoid() {
        let e = Ellipsoid::new(
            vec![2.0, 1.0],
            DMatrix::identity(2, 2),
            vec_from(&[0.0, 0.0]),
        )
        .unwrap();
        let v = body_to_json(&Body::Ellipsoid(e));
        let back = body_from_json(&v).unwrap();
        let Body::Ellipsoid(e2) = back else { panic!() };
        assert_eq!(e2.semiaxes, vec![2.0, 1.0]);
    }

    #[test]
    fn parse_canonical_and_special_bodies() {
        let cube = body_from_json(&json!({"type": "canonical", "kind": "cube", "dim": 3})).unwrap();
        assert_eq!(cube.dim(), 3);
        let p = body_from_json(&json!({"type": "antiprism_P", "eps": 0.01})).unwrap();
        assert!(p.is_symmetric());
        let s = body_from_json(&json!({"type": "remark_simplex", "eps": 0.02})).unwrap();
        assert!(!s.is_symmetric());
    }

    #[test]
    fn parse_errors_name_the_field() {
        let e = body_from_json(&json!({"type": "vpolytope", "symmetric": true})).unwrap_err();
        assert!(e.to_string().contains("vertices"), "{e}");
        let e = body_from_json(&json!({"type": "canonical", "kind": "dodecahedron", "dim": 3}))
            .unwrap_err();
        assert!(e.to_string().contains("kind"), "{e}");
        let e = body_from_json(&json!({"type": "nonsense"})).unwrap_err();
        assert!(e.to_string().contains("type"), "{e}");
    }
}
