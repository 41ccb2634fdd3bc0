//! Double description: generators of `{x : <a_i, x> <= 0}`.
//!
//! The cone splits into its lineality space `L = null(A)` and the pointed
//! cone `P ∩ L^⊥`. The pointed part is handled in coordinates of `L^⊥`, where
//! the constraint matrix has full column rank, by incremental constraint
//! insertion starting from a simplicial cone. Adjacency of extreme rays is
//! decided combinatorially from their zero sets.

use crate::error::{Error, Result};
use crate::linalg::{complete_basis, pivoted_row_basis, Matrix, Vector};

/// Row limit imposed by the `u128` zero-set encoding.
pub(crate) const MAX_ROWS: usize = 128;

/// V-representation produced by [`extreme_generators`].
#[derive(Debug, Clone)]
pub(crate) struct Generators {
    /// Orthonormal basis of the lineality space.
    pub lineality: Vec<Vector>,
    /// Unit extreme rays of the pointed part, each orthogonal to `lineality`.
    pub rays: Vec<Vector>,
}

struct Ray {
    v: Vector,
    zeros: u128,
}

/// Computes lineality basis and extreme rays of `{x in R^n : <r, x> <= 0}`.
pub(crate) fn extreme_generators(rows: &[Vector], n: usize, tol: f64) -> Result<Generators> {
    if rows.len() > MAX_ROWS {
        return Err(Error::CapExceeded {
            what: "constraint row",
            count: rows.len(),
            cap: MAX_ROWS,
        });
    }
    // Row space W spans L^⊥; its complement is the lineality space.
    let (row_basis, _) = pivoted_row_basis(rows, tol);
    let lineality = complete_basis(&row_basis, n, tol);
    let d = row_basis.len();
    if d == 0 {
        return Ok(Generators {
            lineality,
            rays: Vec::new(),
        });
    }

    // Reduced, normalised constraints in W-coordinates.
    let mut reduced: Vec<Vector> = Vec::new();
    for r in rows {
        let z = Vector::from_iterator(d, row_basis.iter().map(|w| w.dot(r)));
        let nz = z.norm();
        if nz <= tol {
            continue;
        }
        let z = z / nz;
        if reduced.iter().any(|q| q.dot(&z) > 1.0 - 1e-12) {
            continue;
        }
        reduced.push(z);
    }

    let (_, pivots) = pivoted_row_basis(&reduced, tol);
    if pivots.len() != d {
        return Err(Error::Numerical(format!(
            "constraint rank {} differs from row-space dimension {d}",
            pivots.len()
        )));
    }

    // Initial simplicial cone {z : B z <= 0}; its rays are the columns of -B^{-1}.
    let b = Matrix::from_fn(d, d, |i, j| reduced[pivots[i]][j]);
    let b_inv = b
        .try_inverse()
        .ok_or_else(|| Error::Numerical("singular initial constraint block".into()))?;
    let mut order: Vec<usize> = pivots.clone();
    order.extend((0..reduced.len()).filter(|i| !pivots.contains(i)));

    let mut rays: Vec<Ray> = (0..d)
        .map(|j| {
            let v = -b_inv.column(j).into_owned();
            let v = &v / v.norm();
            let zeros = (0..d)
                .filter(|&i| i != j)
                .fold(0u128, |acc, i| acc | (1u128 << i));
            Ray { v, zeros }
        })
        .collect();

    for (pos_in_order, &row_idx) in order.iter().enumerate().skip(d) {
        let a = &reduced[row_idx];
        let bit = 1u128 << pos_in_order;
        let vals: Vec<f64> = rays.iter().map(|r| a.dot(&r.v)).collect();
        let positive: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] > tol).collect();
        if positive.is_empty() {
            for (r, &s) in rays.iter_mut().zip(&vals) {
                if s.abs() <= tol {
                    r.zeros |= bit;
                }
            }
            continue;
        }
        let negative: Vec<usize> = (0..rays.len()).filter(|&i| vals[i] < -tol).collect();

        let mut created: Vec<Ray> = Vec::new();
        for &p in &positive {
            for &q in &negative {
                let common = rays[p].zeros & rays[q].zeros;
                if (common.count_ones() as usize) + 2 < d {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == q || (r.zeros & common) != common);
                if !adjacent {
                    continue;
                }
                let v = &rays[q].v * vals[p] - &rays[p].v * vals[q];
                let nv = v.norm();
                if nv <= tol {
                    continue;
                }
                created.push(Ray {
                    v: v / nv,
                    zeros: common | bit,
                });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (r, &s) in rays.into_iter().zip(&vals) {
            if s > tol {
                continue;
            }
            let zeros = if s.abs() <= tol {
                r.zeros | bit
            } else {
                r.zeros
            };
            next.push(Ray { v: r.v, zeros });
        }
        next.extend(created);
        rays = next;
    }

    let mut out: Vec<Vector> = Vec::with_capacity(rays.len());
    for r in rays {
        let mut full = Vector::zeros(n);
        for (k, w) in row_basis.iter().enumerate() {
            full.axpy(r.v[k], w, 1.0);
        }
        let full = &full / full.norm();
        if out.iter().any(|o| o.dot(&full) > 1.0 - 1e-10) {
            continue;
        }
        out.push(full);
    }
    Ok(Generators {
        lineality,
        rays: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn v(c: &[f64]) -> Vector {
        Vector::from_column_slice(c)
    }

    /// Brute force: every extreme ray of a pointed cone in R^3 is cut out by
    /// two independent active constraints.
    fn brute_force_rays_3d(rows: &[Vector]) -> Vec<Vector> {
        let mut out: Vec<Vector> = Vec::new();
        for i in 0..rows.len() {
            for j in (i + 1)..rows.len() {
                let c = rows[i].cross(&rows[j]);
                if c.norm() < 1e-9 {
                    continue;
                }
                for cand in [c.clone(), -c] {
                    let cand = &cand / cand.norm();
                    if rows.iter().all(|r| r.dot(&cand) <= 1e-9)
                        && !out.iter().any(|o| o.dot(&cand) > 1.0 - 1e-9)
                    {
                        out.push(cand);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn orthant_polar_rays() {
        let rows = vec![v(&[-1.0, 0.0]), v(&[0.0, -1.0])];
        let g = extreme_generators(&rows, 2, 1e-9).unwrap();
        assert!(g.lineality.is_empty());
        assert_eq!(g.rays.len(), 2);
        for r in &g.rays {
            assert!(r.iter().all(|&c| c >= -1e-15));
        }
    }

    #[test]
    fn halfplane_has_lineality() {
        let s = 1.0 / 2f64.sqrt();
        let g = extreme_generators(&[v(&[s, s])], 2, 1e-9).unwrap();
        assert_eq!(g.lineality.len(), 1);
        assert_abs_diff_eq!(g.lineality[0].dot(&v(&[s, s])), 0.0, epsilon = 1e-15);
        assert_eq!(g.rays.len(), 1);
        assert_abs_diff_eq!(g.rays[0], v(&[-s, -s]), epsilon = 1e-15);
    }

    #[test]
    fn empty_rows_give_full_space() {
        let g = extreme_generators(&[], 3, 1e-9).unwrap();
        assert_eq!(g.lineality.len(), 3);
        assert!(g.rays.is_empty());
    }

    #[test]
    fn opposite_rows_give_hyperplane() {
        let g = extreme_generators(&[v(&[0.0, 0.0, 1.0]), v(&[0.0, 0.0, -1.0])], 3, 1e-9).unwrap();
        assert_eq!(g.lineality.len(), 2);
        assert!(g.rays.is_empty());
    }

    #[test]
    fn pyramid_matches_brute_force() {
        // Square pyramid: x3 >= |x1|, x3 >= |x2|.
        let rows: Vec<Vector> = [
            [1.0, 0.0, -1.0],
            [-1.0, 0.0, -1.0],
            [0.0, 1.0, -1.0],
            [0.0, -1.0, -1.0],
            [1.0, 1.0, -3.0],
        ]
        .iter()
        .map(|r| {
            let x = v(r);
            &x / x.norm()
        })
        .collect();
        let g = extreme_generators(&rows, 3, 1e-9).unwrap();
        let bf = brute_force_rays_3d(&rows);
        assert_eq!(g.rays.len(), bf.len());
        for r in &g.rays {
            assert!(bf.iter().any(|b| b.dot(r) > 1.0 - 1e-12));
        }
    }

    #[test]
    fn too_many_rows() {
        let rows = vec![v(&[1.0, 0.0]); MAX_ROWS + 1];
        assert!(extreme_generators(&rows, 2, 1e-9).is_err());
    }
}
