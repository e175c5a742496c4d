//! Dense low-dimensional linear algebra: orthonormal frames, projections,
//! rigid motions and chart coordinates for subspace search.
//!
//! A subspace L of dimension i in ℝⁿ is represented by an explicit
//! column-orthonormal n×i matrix ([`Frame`]). Objectives over the set of
//! subspaces are evaluated on frames; the right O(i) redundancy of the
//! representation is harmless for the local optimizers built on top.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Euclidean point/direction in ℝⁿ, n ≤ 5.
pub type Vector = DVector<f64>;

/// Build a vector from a slice.
pub fn vec_from(coords: &[f64]) -> Vector {
    DVector::from_column_slice(coords)
}

/// Column-orthonormal n×i matrix representing an i-dimensional linear
/// subspace of ℝⁿ.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    cols: DMatrix<f64>,
}

impl Frame {
    /// Wrap an n×i matrix, verifying that the Gram matrix is the identity
    /// to within `Tolerances::orthonormal`.
    pub fn new(cols: DMatrix<f64>) -> Result<Self> {
        let gram = cols.transpose() * &cols;
        let i = gram.nrows();
        let dev = (&gram - DMatrix::<f64>::identity(i, i)).abs().max();
        if dev >= crate::tol().orthonormal {
            return Err(Error::InvalidInput(format!(
                "frame columns are not orthonormal (gram deviation {dev:.3e})"
            )));
        }
        if cols.ncols() == 0 || cols.ncols() > cols.nrows() {
            return Err(Error::InvalidInput(
                "frame must have 1 ≤ i ≤ n columns".into(),
            ));
        }
        Ok(Frame { cols })
    }

    pub fn ambient_dim(&self) -> usize {
        self.cols.nrows()
    }

    pub fn sub_dim(&self) -> usize {
        self.cols.ncols()
    }

    pub fn columns(&self) -> &DMatrix<f64> {
        &self.cols
    }

    pub fn column(&self, k: usize) -> Vector {
        self.cols.column(k).into_owned()
    }

    /// Coordinate frame spanned by the axes in `axes` (strictly increasing).
    pub fn coordinate(n: usize, axes: &[usize]) -> Frame {
        let mut m = DMatrix::zeros(n, axes.len());
        for (j, &a) in axes.iter().enumerate() {
            m[(a, j)] = 1.0;
        }
        Frame { cols: m }
    }

    /// Coordinates of `p` in the frame basis (orthogonal projection onto the
    /// subspace, expressed in i coordinates).
    pub fn project(&self, p: &Vector) -> Vector {
        self.cols.tr_mul(p)
    }

    /// Embed i-dimensional coordinates back into ℝⁿ.
    pub fn embed(&self, z: &Vector) -> Vector {
        &self.cols * z
    }

    /// Orthonormal basis of the orthogonal complement as an n×(n−i) matrix
    /// (zero columns when i = n), built deterministically by extending the
    /// frame with coordinate vectors.
    pub fn complement_matrix(&self) -> DMatrix<f64> {
        let n = self.ambient_dim();
        let i = self.sub_dim();
        if i == n {
            return DMatrix::zeros(n, 0);
        }
        let mut basis: Vec<Vector> = (0..i).map(|k| self.column(k)).collect();
        let mut comp: Vec<Vector> = Vec::with_capacity(n - i);
        for a in 0..n {
            if comp.len() == n - i {
                break;
            }
            let mut v = Vector::zeros(n);
            v[a] = 1.0;
            for b in &basis {
                let c = b.dot(&v);
                v -= b * c;
            }
            let norm = v.norm();
            if norm > 1e-7 {
                v /= norm;
                // second Gram-Schmidt pass for orthogonality at 1e-12
                for b in &basis {
                    let c = b.dot(&v);
                    v -= b * c;
                }
                v = v.normalize();
                basis.push(v.clone());
                comp.push(v);
            }
        }
        debug_assert_eq!(comp.len(), n - i);
        DMatrix::from_columns(&comp)
    }

    /// Complement as a frame; requires i < n.
    pub fn complement(&self) -> Frame {
        Frame {
            cols: self.complement_matrix(),
        }
    }

    /// Total-order comparison on column-major coordinates, used as the
    /// deterministic tie-break between equal-valued witness frames.
    pub fn lex_cmp(&self, other: &Frame) -> std::cmp::Ordering {
        for (a, b) in self.cols.iter().zip(other.cols.iter()) {
            let c = a.total_cmp(b);
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    }
}

/// Orientation-preserving orthogonal map plus translation.
#[derive(Debug, Clone)]
pub struct RigidMotion {
    pub rotation: DMatrix<f64>,
    pub translation: Vector,
}

impl RigidMotion {
    pub fn identity(n: usize) -> Self {
        RigidMotion {
            rotation: DMatrix::identity(n, n),
            translation: Vector::zeros(n),
        }
    }

    pub fn translation_by(t: Vector) -> Self {
        let n = t.len();
        RigidMotion {
            rotation: DMatrix::identity(n, n),
            translation: t,
        }
    }

    pub fn apply(&self, p: &Vector) -> Vector {
        &self.rotation * p + &self.translation
    }

    /// Compose: first apply `self`, then `next`.
    pub fn then(&self, next: &RigidMotion) -> RigidMotion {
        RigidMotion {
            rotation: &next.rotation * &self.rotation,
            translation: &next.rotation * &self.translation + &next.translation,
        }
    }
}

/// Gram–Schmidt orthonormalization of a linearly independent family.
///
/// Rank is checked through the smallest singular value of the input matrix
/// (tolerance `Tolerances::rank`); dependent input is rejected.
pub fn orthonormalize(vectors: &[Vector]) -> Result<Frame> {
    if vectors.is_empty() {
        return Err(Error::DependentInput);
    }
    let n = vectors[0].len();
    for v in vectors {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
    }
    let m = DMatrix::from_columns(vectors);
    let sv = m.clone().svd(false, false).singular_values;
    if sv.len() < vectors.len() || sv[sv.len() - 1] <= crate::tol().rank {
        return Err(Error::DependentInput);
    }
    let mut cols: Vec<Vector> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut w = v.clone();
        // two passes of modified Gram-Schmidt keep the Gram deviation < 1e-12
        for _ in 0..2 {
            for b in &cols {
                let c = b.dot(&w);
                w -= b * c;
            }
        }
        let norm = w.norm();
        if norm <= crate::tol().rank {
            return Err(Error::DependentInput);
        }
        cols.push(w / norm);
    }
    Ok(Frame {
        cols: DMatrix::from_columns(&cols),
    })
}

/// Project each point to its i-dimensional coordinates in `frame`.
pub fn project_points(points: &[Vector], frame: &Frame) -> Result<Vec<Vector>> {
    let n = frame.ambient_dim();
    points
        .iter()
        .map(|p| {
            if p.len() != n {
                Err(Error::DimensionMismatch {
                    expected: n,
                    got: p.len(),
                })
            } else {
                Ok(frame.project(p))
            }
        })
        .collect()
}

/// Rotation in the plane spanned by `u` and `v` taking `u` to `v`, with zero
/// translation and determinant +1.
///
/// The antipodal (and near-antipodal) case goes through an intermediate
/// direction built from the coordinate axis least aligned with `u`; ties are
/// broken by lowest axis index.
pub fn rotation_taking(u: &Vector, v: &Vector) -> Result<RigidMotion> {
    let n = u.len();
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.len(),
        });
    }
    let tu = crate::tol().unit;
    if (u.norm() - 1.0).abs() > tu || (v.norm() - 1.0).abs() > tu {
        return Err(Error::NotUnit);
    }
    let c = u.dot(v);
    if c < -1.0 + 1e-8 {
        // essentially antipodal: the single-plane formula would divide by a
        // cancelling norm, so compose two well-conditioned quarter-ish turns
        // through the coordinate axis least aligned with u
        let mut best_axis = 0usize;
        let mut best_abs = f64::INFINITY;
        for a in 0..n {
            if u[a].abs() < best_abs {
                best_abs = u[a].abs();
                best_axis = a;
            }
        }
        let mut e = Vector::zeros(n);
        e[best_axis] = 1.0;
        let mut m = &e - u * u.dot(&e);
        m = m.normalize();
        let r1 = plane_rotation(u, &m);
        let r2 = plane_rotation(&m, v);
        return Ok(RigidMotion {
            rotation: r2 * r1,
            translation: Vector::zeros(n),
        });
    }
    Ok(RigidMotion {
        rotation: plane_rotation(u, v),
        translation: Vector::zeros(n),
    })
}

/// Rotation matrix taking unit `u` to unit `v` inside span{u, v}; requires
/// u·v > -1 strictly (callers handle the antipodal case).
fn plane_rotation(u: &Vector, v: &Vector) -> DMatrix<f64> {
    let n = u.len();
    let c = u.dot(v).clamp(-1.0, 1.0);
    let w = v - u * c;
    let s = w.norm();
    if s < 1e-15 {
        return DMatrix::identity(n, n);
    }
    let wh = w / s;
    let mut r = DMatrix::identity(n, n);
    r += (u * u.transpose() + &wh * wh.transpose()) * (c - 1.0);
    r += (&wh * u.transpose() - u * wh.transpose()) * s;
    r
}

/// Retract tangent parameters at `base` to a nearby orthonormal frame.
///
/// `tangent_params` has length i·(n−i); entry (j, k) scales the j-th
/// complement direction added to the k-th frame column. The perturbed
/// columns are re-orthonormalized, so the output Gram matrix is the
/// identity for any parameter values.
pub fn frame_from_chart(base: &Frame, tangent_params: &[f64]) -> Frame {
    let n = base.ambient_dim();
    let i = base.sub_dim();
    debug_assert_eq!(tangent_params.len(), i * (n - i));
    if n == i {
        return base.clone();
    }
    let comp = base.complement();
    let mut cols: Vec<Vector> = Vec::with_capacity(i);
    for k in 0..i {
        let mut v = base.column(k);
        for j in 0..(n - i) {
            let t = tangent_params[k * (n - i) + j];
            v += comp.column(j) * t;
        }
        cols.push(v);
    }
    // bounded params keep the columns independent, so this cannot fail
    orthonormalize(&cols).expect("chart retraction produced dependent columns")
}

/// FNV-1a hash over f64 bit patterns; used to derive deterministic seeds.
pub fn hash_f64s(tag: u64, values: impl IntoIterator<Item = f64>) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325 ^ tag.wrapping_mul(0x100000001b3);
    for v in values {
        for b in v.to_bits().to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}
