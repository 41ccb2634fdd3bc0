//! Metric projection onto polyhedral cones.
//!
//! `P_K x` is computed in V-representation as `G λ` with `λ` the NNLS
//! solution of `min ||G λ - x||, λ >= 0`. The optimality conditions of that
//! problem are exactly `p ∈ K`, `x - p ⊥ p` and `x - p ∈ K⊖`, and the last
//! two give the Moreau decomposition `x = P_K x + P_{K⊖} x` for free.

use crate::cone::PolyhedralCone;
use crate::error::{Error, Result};
use crate::linalg::{check_finite, matrix_from_columns, solve_nnls, Vector, DEFAULT_TOL};

#[derive(Debug, Clone)]
pub struct ProjectionResult {
    /// `P_K x`
    pub point: Vector,
    /// `x - P_K x`, which lies in `K⊖`
    pub residual: Vector,
    /// `<P_K x, x - P_K x>`
    pub inner: f64,
}

pub fn project(k: &PolyhedralCone, x: &Vector) -> Result<ProjectionResult> {
    if x.len() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            found: x.len(),
        });
    }
    check_finite(x, "point")?;
    let point = if k.is_zero() {
        Vector::zeros(k.dim())
    } else {
        let g = matrix_from_columns(k.dim(), k.generators());
        let sol = solve_nnls(&g, x, DEFAULT_TOL)?;
        g * sol.lambda
    };
    let residual = x - &point;
    let inner = point.dot(&residual);
    Ok(ProjectionResult {
        point,
        residual,
        inner,
    })
}

/// Returns `(P_K x, P_{K⊖} x)`; the second part is the projection residual.
pub fn moreau_decompose(k: &PolyhedralCone, x: &Vector) -> Result<(Vector, Vector)> {
    let r = project(k, x)?;
    Ok((r.point, r.residual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::ConeSpec;
    use approx::assert_abs_diff_eq;

    fn v(c: &[f64]) -> Vector {
        Vector::from_column_slice(c)
    }

    fn cone(dim: usize, gens: &[&[f64]]) -> PolyhedralCone {
        let spec = ConeSpec::new(dim, gens.iter().map(|g| g.to_vec()).collect());
        PolyhedralCone::from_spec(&spec, 1e-9).unwrap()
    }

    #[test]
    fn orthant_clamp() {
        let k = cone(2, &[&[1.0, 0.0], &[0.0, 1.0]]);
        let r = project(&k, &v(&[-1.0, 2.0])).unwrap();
        assert_abs_diff_eq!(r.point, v(&[0.0, 2.0]), epsilon = 1e-14);
        let (p, q) = moreau_decompose(&k, &v(&[-1.0, 2.0])).unwrap();
        assert_abs_diff_eq!(p, v(&[0.0, 2.0]), epsilon = 1e-14);
        assert_abs_diff_eq!(q, v(&[-1.0, 0.0]), epsilon = 1e-14);
    }

    #[test]
    fn line_projection() {
        let k = cone(2, &[&[1.0, 1.0], &[-1.0, -1.0]]);
        let r = project(&k, &v(&[1.0, 0.0])).unwrap();
        assert_abs_diff_eq!(r.point, v(&[0.5, 0.5]), epsilon = 1e-14);
    }

    #[test]
    fn polar_point_projects_to_origin() {
        let k = cone(2, &[&[0.0, 1.0], &[1.0, 1.0]]);
        let x = v(&[0.0, -1.0]);
        assert!(k.polar().unwrap().contains(&x, 1e-9).unwrap());
        let (p, q) = moreau_decompose(&k, &x).unwrap();
        assert_abs_diff_eq!(p, v(&[0.0, 0.0]), epsilon = 1e-15);
        assert_abs_diff_eq!(q, v(&[0.0, -1.0]), epsilon = 1e-15);
    }

    #[test]
    fn brute_force_nearest_point_on_rays() {
        // Nearest point of cone{(0,1),(1,1)} to x, by scanning a fine ray
        // discretisation; compare with the NNLS projection.
        let k = cone(2, &[&[0.0, 1.0], &[1.0, 1.0]]);
        for x in [v(&[0.0, -1.0]), v(&[2.0, 0.5]), v(&[-1.0, 3.0])] {
            let mut best = x.norm();
            for i in 0..=20_000 {
                let t = std::f64::consts::FRAC_PI_4 * (i as f64) / 20_000.0;
                let dir = v(&[t.sin(), t.cos()]);
                let s = dir.dot(&x).max(0.0);
                best = best.min((&dir * s - &x).norm());
            }
            let r = project(&k, &x).unwrap();
            assert_abs_diff_eq!(r.residual.norm(), best, epsilon = 1e-8);
        }
    }

    #[test]
    fn member_is_fixed() {
        let k = cone(3, &[&[1.0, 0.0, 0.0], &[0.0, 1.0, 1.0]]);
        let x = v(&[2.0, 1.0, 1.0]);
        let (p, q) = moreau_decompose(&k, &x).unwrap();
        assert_abs_diff_eq!(p, x, epsilon = 1e-14);
        assert_abs_diff_eq!(q.norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn zero_cone_projection() {
        let k = PolyhedralCone::zero(2).unwrap();
        let r = project(&k, &v(&[3.0, 4.0])).unwrap();
        assert_eq!(r.point, v(&[0.0, 0.0]));
    }

    #[test]
    fn rejects_wrong_dimension() {
        let k = PolyhedralCone::zero(2).unwrap();
        assert!(matches!(
            project(&k, &v(&[1.0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
