//! Brute-force lower bound for the Dixmier cosine.
//!
//! Unit directions are laid out on a deterministic low-discrepancy grid of
//! the sphere of `span K1`, filtered by membership in `K1`, and scored by
//! `support_width(K2, x)`.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::cone::PolyhedralCone;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::projection::project;

use super::iterative::ascend;
use super::{same_dim, AngleResult, Certificate, Method};

/// Largest ambient dimension the sphere grids are used for.
pub const ORACLE_MAX_DIM: usize = 4;

const MEMBER_TOL: f64 = 1e-12;
const POLISH_COUNT: usize = 8;
const POLISH_ITERS: usize = 10_000;
const POLISH_TOL: f64 = 1e-15;

fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut r = 0.0;
    while i > 0 {
        r += f * (i % base) as f64;
        i /= base;
        f *= inv;
    }
    r
}

/// `samples` unit coordinate vectors on `S^{s-1}`, `s = span_dim`.
fn sphere_grid(span_dim: usize, samples: usize) -> Vec<Vec<f64>> {
    match span_dim {
        0 => Vec::new(),
        1 => vec![vec![1.0], vec![-1.0]],
        2 => (0..samples)
            .map(|i| {
                let t = 2.0 * PI * i as f64 / samples as f64;
                vec![t.cos(), t.sin()]
            })
            .collect(),
        3 => {
            let golden = PI * (3.0 - 5f64.sqrt());
            (0..samples)
                .map(|i| {
                    let z = 1.0 - (2 * i + 1) as f64 / samples as f64;
                    let r = (1.0 - z * z).max(0.0).sqrt();
                    let t = golden * i as f64;
                    vec![r * t.cos(), r * t.sin(), z]
                })
                .collect()
        }
        _ => (0..samples)
            .filter_map(|i| {
                let i = i as u64 + 1;
                let u: Vec<f64> = [2, 3, 5, 7]
                    .iter()
                    .map(|&b| radical_inverse(i, b))
                    .collect();
                let box_muller = |a: f64, b: f64| {
                    let r = (-2.0 * (1.0 - a).ln()).sqrt();
                    (r * (2.0 * PI * b).cos(), r * (2.0 * PI * b).sin())
                };
                let (g0, g1) = box_muller(u[0], u[1]);
                let (g2, g3) = box_muller(u[2], u[3]);
                let v = [g0, g1, g2, g3];
                let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
                (n > 1e-12).then(|| v.iter().map(|c| c / n).collect())
            })
            .collect(),
    }
}

/// `sup { <x, y> : y ∈ K2, ||y|| = 1 }` for unit `x`. When positive this is
/// `||P_K2 x||`; otherwise `x ∈ K2⊖` and, generators being unit vectors, the
/// supremum is attained at the best generator.
fn sphere_value(k2: &PolyhedralCone, x: &Vector) -> Result<f64> {
    if k2.contains_unchecked(x, MEMBER_TOL) {
        return Ok(x.norm());
    }
    let p = project(k2, x)?.point.norm();
    if p > 0.0 {
        return Ok(p);
    }
    Ok(best_generator(k2, x).map_or(f64::NEG_INFINITY, |(_, v)| v))
}

fn best_generator<'a>(k2: &'a PolyhedralCone, x: &Vector) -> Option<(&'a Vector, f64)> {
    k2.generators()
        .iter()
        .map(|g| (g, g.dot(x)))
        .max_by(|a, b| a.1.total_cmp(&b.1))
}

struct Scan {
    /// `(value, grid index, point)` sorted best first.
    ranked: Vec<(f64, usize, Vector)>,
}

fn scan(k1: &PolyhedralCone, k2: &PolyhedralCone, samples: usize) -> Result<Scan> {
    same_dim(k1, k2)?;
    if k1.dim() > ORACLE_MAX_DIM {
        return Err(Error::DimensionOutOfRange(k1.dim()));
    }
    if samples == 0 {
        return Err(Error::InvalidParams("samples must be positive".into()));
    }
    if k1.is_zero() || k2.is_zero() {
        return Ok(Scan { ranked: Vec::new() });
    }
    let basis = k1.span_basis();
    let grid = sphere_grid(basis.len(), samples);
    let scored: Result<Vec<Option<(f64, usize, Vector)>>> = grid
        .par_iter()
        .enumerate()
        .map(|(i, coords)| {
            let mut x = Vector::zeros(k1.dim());
            for (b, &c) in basis.iter().zip(coords) {
                x.axpy(c, b, 1.0);
            }
            if !k1.contains_unchecked(&x, MEMBER_TOL) {
                return Ok(None);
            }
            let value = sphere_value(k2, &x)?;
            Ok(Some((value, i, x)))
        })
        .collect();
    let mut ranked: Vec<_> = scored?.into_iter().flatten().collect();
    ranked.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
    Ok(Scan { ranked })
}

fn certificate(k2: &PolyhedralCone, x: Vector) -> Result<Option<Certificate>> {
    let p = project(k2, &x)?.point;
    let n = p.norm();
    Ok((n > 0.0).then(|| Certificate { x, y: p / n }))
}

/// Best grid value without local refinement, clamped at 0.
pub fn cos_dixmier_grid(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
    samples: usize,
) -> Result<AngleResult> {
    let scan = scan(k1, k2, samples)?;
    let Some((value, _, x)) = scan.ranked.into_iter().next() else {
        return Ok(AngleResult::new(0.0, None, Method::Oracle, false));
    };
    let cert = certificate(k2, x)?;
    Ok(AngleResult::new(value, cert, Method::Oracle, false))
}

/// Grid scan followed by alternating-projection polish of the best few grid
/// points. The value remains a lower bound: every reported pair is feasible.
pub fn cos_dixmier_oracle(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
    samples: usize,
) -> Result<AngleResult> {
    let scan = scan(k1, k2, samples)?;
    let mut best: Option<(f64, Option<Certificate>)> = None;
    for (value, _, x) in scan.ranked.into_iter().take(POLISH_COUNT) {
        // From a point of K2⊖ the ascent cannot move; restart it from the
        // projection onto K1 of the sphere maximiser in K2.
        let start = if value > 0.0 {
            Some(x.clone())
        } else {
            best_generator(k2, &x)
                .map(|(g, _)| project(k1, g))
                .transpose()?
                .map(|p| p.point)
                .filter(|p| p.norm() > 1e-12)
        };
        let run = match start {
            Some(s) => ascend(k1, k2, &s, POLISH_ITERS, POLISH_TOL, None)?,
            None => None,
        };
        let (v, cert) = match run {
            Some(run) if run.alpha >= value => {
                (run.alpha, run.y.map(|y| Certificate { x: run.x, y }))
            }
            _ => (value, certificate(k2, x)?),
        };
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, cert));
        }
    }
    let (value, cert) = best.unwrap_or((0.0, None));
    Ok(AngleResult::new(value, cert, Method::Oracle, false))
}
