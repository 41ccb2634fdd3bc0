//! Small dense linear-algebra kernel.
//!
//! Everything here works on tiny matrices (ambient dimension at most 8, a few
//! dozen columns), so the routines favour clarity and explicit tolerance
//! control over blocking or cache tricks.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

pub type Vector = DVector<f64>;
pub type Matrix = DMatrix<f64>;

/// Default activity/rank tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Largest `min(rows, cols)` accepted by [`svd_small`].
pub const SVD_MAX_MIN_DIM: usize = 16;

/// Thin singular value decomposition `A = U diag(s) V^T`, sorted so that
/// `singular_values` is nonincreasing.
#[derive(Debug, Clone)]
pub struct SvdResult {
    pub singular_values: Vec<f64>,
    pub left_vectors: Vec<Vector>,
    pub right_vectors: Vec<Vector>,
}

/// Solution of `min ||G lambda - x||` subject to `lambda >= 0`.
#[derive(Debug, Clone)]
pub struct NnlsSolution {
    pub lambda: Vector,
    pub residual: f64,
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol))
    }
}

pub(crate) fn check_finite(v: &Vector, what: &str) -> Result<()> {
    if v.iter().all(|c| c.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite(what.to_string()))
    }
}

/// Orthonormal basis of the span of `vectors`.
///
/// Modified Gram-Schmidt with one re-orthogonalisation pass, processing the
/// inputs in order; a vector whose residual falls below `tol` times its own
/// norm is treated as dependent. Output count is the numerical rank.
pub fn orthonormal_basis(vectors: &[Vector], tol: f64) -> Result<Vec<Vector>> {
    check_tol(tol)?;
    let Some(first) = vectors.first() else {
        return Ok(Vec::new());
    };
    let n = first.len();
    let mut basis: Vec<Vector> = Vec::new();
    for v in vectors {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        check_finite(v, "vector")?;
        if basis.len() == n {
            break;
        }
        if let Some(q) = orthogonalize(v, &basis, tol) {
            basis.push(q);
        }
    }
    Ok(basis)
}

/// Removes the components of `v` along the (orthonormal) `basis` and returns
/// the normalised remainder, or `None` if it is numerically zero.
fn orthogonalize(v: &Vector, basis: &[Vector], tol: f64) -> Option<Vector> {
    let norm = v.norm();
    if norm <= tol {
        return None;
    }
    let mut r = v.clone();
    for _ in 0..2 {
        for q in basis {
            let c = q.dot(&r);
            r.axpy(-c, q, 1.0);
        }
    }
    let rn = r.norm();
    if rn <= tol * norm.max(1.0) {
        None
    } else {
        Some(r / rn)
    }
}

/// Orthonormal basis of the row space of `rows`, chosen with pivoting: at each
/// step the row with the largest remaining residual is taken. Returns the
/// basis together with the indices of the pivot rows, in pivot order.
pub fn pivoted_row_basis(rows: &[Vector], tol: f64) -> (Vec<Vector>, Vec<usize>) {
    let Some(first) = rows.first() else {
        return (Vec::new(), Vec::new());
    };
    let n = first.len();
    let scale: Vec<f64> = rows
        .iter()
        .map(|r| r.norm().max(f64::MIN_POSITIVE))
        .collect();
    let mut residuals: Vec<Vector> = rows.to_vec();
    let mut basis: Vec<Vector> = Vec::new();
    let mut pivots = Vec::new();
    while basis.len() < n {
        let mut best: Option<(usize, f64)> = None;
        for (i, r) in residuals.iter().enumerate() {
            if pivots.contains(&i) {
                continue;
            }
            let rel = r.norm() / scale[i];
            if best.is_none_or(|(_, b)| rel > b) {
                best = Some((i, rel));
            }
        }
        let Some((idx, rel)) = best else { break };
        if rel <= tol {
            break;
        }
        let Some(q) = orthogonalize(&rows[idx], &basis, tol) else {
            break;
        };
        for r in residuals.iter_mut() {
            let c = q.dot(r);
            r.axpy(-c, &q, 1.0);
        }
        basis.push(q);
        pivots.push(idx);
    }
    (basis, pivots)
}

/// Orthonormal basis of `{x : <r, x> = 0 for every r in rows}` in `R^n`.
///
/// The complement is completed from the standard basis in index order, so an
/// empty row set yields exactly `e_1, ..., e_n`.
pub fn nullspace(rows: &[Vector], n: usize, tol: f64) -> Vec<Vector> {
    let (row_basis, _) = pivoted_row_basis(rows, tol);
    complete_basis(&row_basis, n, tol)
}

/// Extends an orthonormal set to an orthonormal basis of `R^n` and returns
/// only the added vectors.
pub fn complete_basis(basis: &[Vector], n: usize, tol: f64) -> Vec<Vector> {
    let mut all: Vec<Vector> = basis.to_vec();
    let mut added = Vec::new();
    for i in 0..n {
        if all.len() == n {
            break;
        }
        let e = Vector::from_fn(n, |j, _| if i == j { 1.0 } else { 0.0 });
        // Standard basis vectors nearly inside the span would produce a poorly
        // conditioned complement; require a solid residual.
        if let Some(q) = orthogonalize(&e, &all, tol.max(1e-6)) {
            all.push(q.clone());
            added.push(q);
        }
    }
    added
}

/// Numerical rank of a set of vectors.
pub fn rank(vectors: &[Vector], tol: f64) -> usize {
    pivoted_row_basis(vectors, tol).0.len()
}

/// Thin SVD of a small dense matrix.
pub fn svd_small(a: &Matrix) -> Result<SvdResult> {
    if a.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("matrix".into()));
    }
    let (r, c) = a.shape();
    let k = r.min(c);
    if k > SVD_MAX_MIN_DIM {
        return Err(Error::CapExceeded {
            what: "svd min dimension",
            count: k,
            cap: SVD_MAX_MIN_DIM,
        });
    }
    if k == 0 {
        return Ok(SvdResult {
            singular_values: Vec::new(),
            left_vectors: Vec::new(),
            right_vectors: Vec::new(),
        });
    }
    let svd = a
        .clone()
        .try_svd(true, true, f64::EPSILON, 10_000)
        .ok_or_else(|| Error::Numerical("svd did not converge".into()))?;
    let u = svd.u.expect("u requested");
    let v_t = svd.v_t.expect("v_t requested");
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&i, &j| {
        svd.singular_values[j]
            .partial_cmp(&svd.singular_values[i])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(i.cmp(&j))
    });
    Ok(SvdResult {
        singular_values: order
            .iter()
            .map(|&i| svd.singular_values[i].max(0.0))
            .collect(),
        left_vectors: order.iter().map(|&i| u.column(i).into_owned()).collect(),
        right_vectors: order.iter().map(|&i| v_t.row(i).transpose()).collect(),
    })
}

/// Builds the `n x m` matrix whose columns are `columns`.
pub fn matrix_from_columns(n: usize, columns: &[Vector]) -> Matrix {
    Matrix::from_fn(n, columns.len(), |i, j| columns[j][i])
}

/// Minimum-norm least-squares solution of `a z = b`.
fn least_squares(a: &Matrix, b: &Vector) -> Result<Vector> {
    if a.ncols() == 0 {
        return Ok(Vector::zeros(0));
    }
    let svd = a
        .clone()
        .try_svd(true, true, f64::EPSILON, 10_000)
        .ok_or_else(|| Error::Numerical("svd did not converge".into()))?;
    let smax = svd.singular_values.max();
    svd.solve(b, 1e-12 * smax.max(1.0))
        .map_err(|e| Error::Numerical(e.to_string()))
}

/// Nonnegative least squares by the Lawson-Hanson active-set method.
///
/// Entering columns are chosen by largest gradient component with index order
/// as tie-break. Passive subproblems use a minimum-norm SVD solve so that
/// parallel or opposite columns cannot make the iteration singular.
pub fn solve_nnls(g: &Matrix, x: &Vector, tol: f64) -> Result<NnlsSolution> {
    check_tol(tol)?;
    let (n, m) = g.shape();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    check_finite(x, "point")?;
    let mut lambda = Vector::zeros(m);
    if m == 0 {
        return Ok(NnlsSolution {
            lambda,
            residual: x.norm(),
        });
    }
    let gt = g.transpose();
    let thresh = tol * x.norm().max(1.0);
    let mut passive = vec![false; m];
    let mut blocked = vec![false; m];
    let max_outer = 3 * m + 10;

    for _ in 0..max_outer {
        let w = &gt * (x - g * &lambda);
        let mut entering: Option<usize> = None;
        for j in 0..m {
            if passive[j] || blocked[j] || w[j] <= thresh {
                continue;
            }
            if entering.is_none_or(|e| w[j] > w[e]) {
                entering = Some(j);
            }
        }
        let Some(j) = entering else { break };
        passive[j] = true;
        let before = lambda.clone();

        for _ in 0..=m {
            let idx: Vec<usize> = (0..m).filter(|&i| passive[i]).collect();
            let sub = g.select_columns(idx.iter());
            let z_sub = least_squares(&sub, x)?;
            if z_sub.iter().all(|&z| z > 0.0) {
                for (k, &i) in idx.iter().enumerate() {
                    lambda[i] = z_sub[k];
                }
                break;
            }
            let mut alpha = f64::INFINITY;
            let mut blocking = idx[0];
            for (k, &i) in idx.iter().enumerate() {
                if z_sub[k] <= 0.0 {
                    let denom = lambda[i] - z_sub[k];
                    let a = if denom > 0.0 { lambda[i] / denom } else { 0.0 };
                    if a < alpha {
                        alpha = a;
                        blocking = i;
                    }
                }
            }
            for (k, &i) in idx.iter().enumerate() {
                lambda[i] += alpha * (z_sub[k] - lambda[i]);
            }
            // Rounding can leave the blocking weight a tiny positive number.
            lambda[blocking] = 0.0;
            for &i in &idx {
                if lambda[i] <= 0.0 {
                    lambda[i] = 0.0;
                    passive[i] = false;
                }
            }
        }

        if (&lambda - &before).norm() == 0.0 {
            // The entering column could not carry positive weight: its
            // gradient component is numerical noise.
            blocked[j] = true;
            passive[j] = false;
        } else {
            blocked.iter_mut().for_each(|b| *b = false);
        }
    }
    let residual = (g * &lambda - x).norm();
    Ok(NnlsSolution { lambda, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn v(c: &[f64]) -> Vector {
        Vector::from_column_slice(c)
    }

    #[test]
    fn axis_scaling_basis() {
        let b = orthonormal_basis(&[v(&[2.0, 0.0]), v(&[0.0, 3.0])], 1e-9).unwrap();
        assert_eq!(b.len(), 2);
        assert_abs_diff_eq!(b[0], v(&[1.0, 0.0]), epsilon = 1e-15);
        assert_abs_diff_eq!(b[1], v(&[0.0, 1.0]), epsilon = 1e-15);
    }

    #[test]
    fn duplicate_direction_basis() {
        let b = orthonormal_basis(&[v(&[1.0, 1.0]), v(&[2.0, 2.0])], 1e-9).unwrap();
        assert_eq!(b.len(), 1);
        let s = 1.0 / 2f64.sqrt();
        assert_abs_diff_eq!(b[0], v(&[s, s]), epsilon = 1e-15);
    }

    #[test]
    fn triangular_basis_gram_identity() {
        let b = orthonormal_basis(
            &[
                v(&[1.0, 0.0, 0.0]),
                v(&[1.0, 1.0, 0.0]),
                v(&[1.0, 1.0, 1.0]),
            ],
            1e-9,
        )
        .unwrap();
        assert_eq!(b.len(), 3);
        let m = matrix_from_columns(3, &b);
        let gram = m.transpose() * &m;
        assert_abs_diff_eq!(gram, Matrix::identity(3, 3), epsilon = 1e-12);
    }

    #[test]
    fn basis_dimension_mismatch() {
        let err = orthonormal_basis(&[v(&[1.0, 0.0]), v(&[1.0])], 1e-9).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn svd_identity_and_zero() {
        let s = svd_small(&Matrix::identity(2, 2)).unwrap();
        assert_abs_diff_eq!(s.singular_values[0], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.singular_values[1], 1.0, epsilon = 1e-15);
        let z = svd_small(&Matrix::zeros(2, 2)).unwrap();
        assert_eq!(z.singular_values, vec![0.0, 0.0]);
    }

    #[test]
    fn svd_shear_identities() {
        // sigma1 * sigma2 = |det| = 1 and sigma1^2 + sigma2^2 = ||A||_F^2 = 3
        let a = Matrix::from_row_slice(2, 2, &[1.0, 1.0, 0.0, 1.0]);
        let s = svd_small(&a).unwrap();
        let (s1, s2) = (s.singular_values[0], s.singular_values[1]);
        assert!(s1 >= s2);
        assert_abs_diff_eq!(s1 * s2, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s1 * s1 + s2 * s2, 3.0, epsilon = 1e-12);
    }

    #[test]
    fn svd_rejects_nan() {
        let a = Matrix::from_row_slice(1, 2, &[f64::NAN, 1.0]);
        assert!(matches!(svd_small(&a), Err(Error::NonFinite(_))));
    }

    #[test]
    fn nnls_orthant_clamp() {
        let g = Matrix::identity(2, 2);
        let s = solve_nnls(&g, &v(&[-1.0, 2.0]), 1e-9).unwrap();
        assert_abs_diff_eq!(s.lambda, v(&[0.0, 2.0]), epsilon = 1e-14);
        assert_abs_diff_eq!(s.residual, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn nnls_line_projection() {
        let g = Matrix::from_column_slice(2, 1, &[1.0, 1.0]);
        let s = solve_nnls(&g, &v(&[1.0, 0.0]), 1e-9).unwrap();
        assert_abs_diff_eq!(s.lambda[0], 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(s.residual, 1.0 / 2f64.sqrt(), epsilon = 1e-14);
    }

    #[test]
    fn nnls_point_in_polar() {
        // (0,-1) has nonpositive inner product with both generators, so it
        // lies in the polar cone and the best nonnegative combination is 0.
        let g = Matrix::from_column_slice(2, 2, &[0.0, 1.0, 1.0, 1.0]);
        let x = v(&[0.0, -1.0]);
        for j in 0..2 {
            assert!(g.column(j).dot(&x) <= 0.0);
        }
        let s = solve_nnls(&g, &x, 1e-9).unwrap();
        assert_abs_diff_eq!(s.lambda, v(&[0.0, 0.0]), epsilon = 1e-15);
        assert_abs_diff_eq!(s.residual, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn nnls_opposite_columns() {
        let g = Matrix::from_column_slice(2, 3, &[1.0, 0.0, -1.0, 0.0, 0.0, 1.0]);
        let s = solve_nnls(&g, &v(&[-3.0, -2.0]), 1e-9).unwrap();
        assert_abs_diff_eq!(s.residual, 2.0, epsilon = 1e-12);
        assert!(s.lambda.iter().all(|&l| l >= 0.0));
    }

    #[test]
    fn nnls_dimension_mismatch() {
        let g = Matrix::identity(2, 2);
        assert!(matches!(
            solve_nnls(&g, &v(&[1.0]), 1e-9),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn nullspace_of_nothing_is_standard_basis() {
        let ns = nullspace(&[], 3, 1e-9);
        assert_eq!(ns.len(), 3);
        for (i, e) in ns.iter().enumerate() {
            assert_eq!(e[i], 1.0);
        }
    }

    #[test]
    fn nullspace_of_plane_normal() {
        let ns = nullspace(&[v(&[1.0, 1.0, 0.0])], 3, 1e-9);
        assert_eq!(ns.len(), 2);
        for q in &ns {
            assert_abs_diff_eq!(q.dot(&v(&[1.0, 1.0, 0.0])), 0.0, epsilon = 1e-15);
        }
    }
}
