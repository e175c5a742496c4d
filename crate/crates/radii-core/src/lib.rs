//! Computational engine for the successive inner and outer radii of convex
//! bodies in low dimension (n ≤ 5).
//!
//! The crate computes the three radius sequences of a convex body K:
//!
//! * outer radii `R_i(K)`: smallest circumradius of an orthogonal projection
//!   of K onto an i-dimensional subspace,
//! * inner section radii `r_i(K)`: largest radius of an i-dimensional ball
//!   contained in K (over all i-planes and offsets),
//! * inner projection radii `r̃_i(K)`: largest inradius of an i-dimensional
//!   orthogonal projection of K,
//!
//! together with executable constructive proofs (hexagon/square sections,
//! diameter parallelograms, width trapezoids, touching-point certificates)
//! and a catalog of classical inequalities with sound one-sided verdicts.
//!
//! All numeric searches over the Grassmannian are multi-start local
//! optimizations, so computed values are one-sided: outer radii are
//! over-estimates of a minimum, inner radii under-estimates of a maximum.
//! Downstream verdict logic never certifies a violation from estimates.

pub mod audit;
pub mod bodies;
pub mod classical;
pub mod constructions;
pub mod error;
pub mod json;
pub mod linalg;
pub mod lp;
pub mod meb;
pub mod optimize;
pub mod successive;

pub use error::Error;
pub use linalg::{Frame, RigidMotion, Vector};

/// Numeric tolerances used across the crate, fixed in one place.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Max-norm deviation of a frame Gram matrix from the identity.
    pub orthonormal: f64,
    /// Smallest singular value below which input vectors count as dependent.
    pub rank: f64,
    /// Allowed deviation of a "unit" vector from norm 1.
    pub unit: f64,
    /// Feasibility / reduced-cost tolerance of the LP solver.
    pub lp: f64,
    /// Slack when testing whether a point satisfies a facet constraint.
    pub facet: f64,
    /// Deduplication tolerance for facet (normal, offset) pairs.
    pub dedup: f64,
    /// Distance-from-sphere tolerance for min-ball support points.
    pub contact: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            orthonormal: 1e-12,
            rank: 1e-10,
            unit: 1e-10,
            lp: 1e-9,
            facet: 1e-9,
            dedup: 1e-8,
            contact: 1e-8,
        }
    }
}

/// Default tolerances as a constant-like accessor.
pub fn tol() -> Tolerances {
    Tolerances::default()
}
