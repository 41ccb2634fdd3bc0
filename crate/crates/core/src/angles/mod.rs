//! Dixmier and Friedrichs cosines between polyhedral cones.
//!
//! For cones the Dixmier cosine is
//!
//! ```text
//! c0(K1, K2) = sup { <x, y> : x ∈ K1 ∩ B, y ∈ K2 ∩ B }
//! ```
//!
//! and the Friedrichs cosine removes the common part first:
//! `c(K1, K2) = c0(K1 ∩ J⊖, K2 ∩ J⊖)` with `J = K1 ∩ K2`.
//!
//! Three evaluators of `c0` are provided. The oracle scans a sphere grid and
//! is only a lower bound; the iterative method is a monotone ascent that
//! converges to a local maximiser; the exact method enumerates face pairs and
//! their principal vectors (see `exact`).
//!
//! Throughout, `sup { <x, y> : y ∈ K ∩ B } = ||P_K x||`. Writing
//! `x = P_K x + q` with `q ∈ K⊖` and `q ⊥ P_K x`, any `y ∈ K ∩ B` has
//! `<x, y> = <P_K x, y> + <q, y> <= ||P_K x||`, with equality at
//! `y = P_K x / ||P_K x||` (or any `y` when the projection vanishes).

mod exact;
mod faces;
mod iterative;
mod oracle;

use serde::Serialize;

pub use exact::{cos_dixmier_exact, cos_dixmier_faces};
pub use faces::{enumerate_faces, FaceDescriptor};
pub use iterative::{cos_dixmier_iterative, default_starts, IterationTrace};
pub use oracle::{cos_dixmier_grid, cos_dixmier_oracle, ORACLE_MAX_DIM};

use crate::cone::PolyhedralCone;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::projection::project;

/// Which evaluator produced an [`AngleResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Iterative,
    Oracle,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::Iterative => "iterative",
            Method::Oracle => "oracle",
        })
    }
}

/// Unit vectors `x ∈ K1`, `y ∈ K2` realising the reported cosine.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub x: Vector,
    pub y: Vector,
}

#[derive(Debug, Clone)]
pub struct AngleResult {
    /// Cosine in `[0, 1]`.
    pub cosine: f64,
    /// `acos(cosine)` in `[0, π/2]`.
    pub angle: f64,
    /// Absent when a cone is `{0}` or when the value is only reached through
    /// the origin (every unit pair has negative inner product).
    pub certificate: Option<Certificate>,
    pub method: Method,
    /// `false` means the value is a lower bound (oracle semantics).
    pub attained: bool,
    /// Set when the exact evaluator was beaten by its cross-check.
    pub flagged: bool,
}

impl AngleResult {
    pub(crate) fn new(
        cosine: f64,
        certificate: Option<Certificate>,
        method: Method,
        attained: bool,
    ) -> Self {
        let cosine = cosine.clamp(0.0, 1.0);
        Self {
            cosine,
            angle: cosine.acos(),
            certificate,
            method,
            attained,
            flagged: false,
        }
    }

    pub(crate) fn zero(method: Method) -> Self {
        Self::new(0.0, None, method, true)
    }
}

fn same_dim(k1: &PolyhedralCone, k2: &PolyhedralCone) -> Result<()> {
    if k1.dim() == k2.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: k1.dim(),
            found: k2.dim(),
        })
    }
}

/// `sup { <x, y> : y ∈ K ∩ B } = ||P_K x||`.
pub fn support_width(k: &PolyhedralCone, x: &Vector) -> Result<f64> {
    Ok(project(k, x)?.point.norm())
}

/// The pair `(K1 ∩ J⊖, K2 ∩ J⊖)` with `J = K1 ∩ K2`, whose Dixmier cosine is
/// the Friedrichs cosine of `(K1, K2)`.
pub fn friedrichs_reduction(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
) -> Result<(PolyhedralCone, PolyhedralCone)> {
    same_dim(k1, k2)?;
    let common_polar = k1.intersect(k2)?.polar()?;
    Ok((k1.intersect(&common_polar)?, k2.intersect(&common_polar)?))
}

/// Friedrichs cosine `c0(K1 ∩ J⊖, K2 ∩ J⊖)` with `J = K1 ∩ K2`.
pub fn cos_friedrichs(k1: &PolyhedralCone, k2: &PolyhedralCone) -> Result<AngleResult> {
    let (a, b) = friedrichs_reduction(k1, k2)?;
    cos_dixmier_exact(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::ConeSpec;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn cone(dim: usize, gens: &[&[f64]]) -> PolyhedralCone {
        let spec = ConeSpec::new(dim, gens.iter().map(|g| g.to_vec()).collect());
        PolyhedralCone::from_spec(&spec, 1e-9).unwrap()
    }

    fn v(c: &[f64]) -> Vector {
        Vector::from_column_slice(c)
    }

    pub(super) fn orthant() -> PolyhedralCone {
        cone(2, &[&[1.0, 0.0], &[0.0, 1.0]])
    }

    pub(super) fn lower_halfplane() -> PolyhedralCone {
        cone(2, &[&[1.0, -1.0], &[-1.0, 1.0], &[-1.0, -1.0]])
    }

    #[test]
    fn support_width_examples() {
        assert_abs_diff_eq!(
            support_width(&orthant(), &v(&[-1.0, 2.0])).unwrap(),
            2.0,
            epsilon = 1e-14
        );
        let x = v(&[0.6, 0.8]);
        assert_abs_diff_eq!(support_width(&orthant(), &x).unwrap(), 1.0, epsilon = 1e-14);
        let ray = cone(2, &[&[1.0, 1.0]]);
        assert_abs_diff_eq!(
            support_width(&ray, &v(&[1.0, 0.0])).unwrap(),
            FRAC_1_SQRT_2,
            epsilon = 1e-14
        );
    }

    #[test]
    fn friedrichs_examples() {
        let c = cos_friedrichs(&orthant(), &lower_halfplane()).unwrap();
        assert_abs_diff_eq!(c.cosine, FRAC_1_SQRT_2, epsilon = 1e-12);

        // K = {x2 >= x1 >= 0}, M = R(1,0)
        let k = cone(2, &[&[0.0, 1.0], &[1.0, 1.0]]);
        let m = cone(2, &[&[1.0, 0.0], &[-1.0, 0.0]]);
        let kp = k.polar().unwrap();
        let mp = m.orthogonal_complement().unwrap();
        assert_abs_diff_eq!(
            cos_friedrichs(&kp, &mp).unwrap().cosine,
            0.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            cos_dixmier_exact(&kp, &mp).unwrap().cosine,
            1.0,
            epsilon = 1e-12
        );

        for k in [orthant(), lower_halfplane(), k] {
            assert_abs_diff_eq!(cos_friedrichs(&k, &k).unwrap().cosine, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn angle_matches_cosine() {
        let c = cos_dixmier_exact(&orthant(), &lower_halfplane()).unwrap();
        assert_abs_diff_eq!(c.angle.cos(), c.cosine, epsilon = 1e-12);
        assert_abs_diff_eq!(c.angle, std::f64::consts::FRAC_PI_4, epsilon = 1e-12);
    }
}
