//! Exact Dixmier cosine by face-pair enumeration.
//!
//! If `c0 > 0`, pick a maximising pair `(x*, y*)` whose minimal faces
//! `F1 ∋ x*`, `F2 ∋ y*` have smallest total dimension. Because `x*` is in the
//! relative interior of `F1`, it also maximises `<x, y*>` over the unit
//! sphere of `span F1` near `x*`, hence `x* ∝ P_{span F1} y*`, and likewise
//! `y* ∝ P_{span F2} x*`. With orthonormal bases `B1`, `B2` this says
//! `x* = B1 u`, `y* = B2 v` for a singular pair `(u, v)` of `B1^T B2` with
//! singular value `c0`. Minimality of the face pair forces the whole singular
//! subspace for that value to be feasible (otherwise one could slide along it
//! to a smaller face), so whatever basis the SVD returns for it contains
//! feasible vectors. Enumerating all face pairs and all singular triples
//! therefore finds the maximum; negative sphere maxima are clamped to 0.

use std::cmp::Ordering;

use crate::cone::PolyhedralCone;
use crate::error::Result;
use crate::linalg::{svd_small, Matrix, Vector, DEFAULT_TOL};

use super::faces::enumerate_faces;
use super::iterative::{ascend, cos_dixmier_iterative};
use super::{same_dim, AngleResult, Certificate, Method};

/// Membership slack for raw SVD candidates; polishing restores feasibility.
const CANDIDATE_SLACK: f64 = 1e-6;
const POLISH_ITERS: usize = 2000;
const POLISH_TOL: f64 = 1e-15;
const MAX_POLISHED: usize = 64;
const CROSS_CHECK_ITERS: usize = 200;
/// Disagreement with the cross-check beyond which a result is flagged.
pub const FLAG_GAP: f64 = 1e-4;

struct Candidate {
    value: f64,
    x: Vector,
    y: Vector,
}

fn lexicographic(a: &Vector, b: &Vector) -> Ordering {
    for (p, q) in a.iter().zip(b.iter()) {
        match p.partial_cmp(q) {
            Some(Ordering::Equal) | None => continue,
            Some(o) => return o,
        }
    }
    Ordering::Equal
}

fn combine(basis: &[Vector], coeffs: &Vector) -> Vector {
    let mut out = Vector::zeros(basis[0].len());
    for (b, &c) in basis.iter().zip(coeffs.iter()) {
        out.axpy(c, b, 1.0);
    }
    out
}

/// Dixmier cosine; returns 1 immediately when the cones share a nonzero
/// vector, otherwise defers to [`cos_dixmier_faces`].
pub fn cos_dixmier_exact(k1: &PolyhedralCone, k2: &PolyhedralCone) -> Result<AngleResult> {
    same_dim(k1, k2)?;
    if k1.is_zero() || k2.is_zero() {
        return Ok(AngleResult::zero(Method::Exact));
    }
    let common = k1.intersect(k2)?;
    if let Some(g) = common.generators().first() {
        let cert = Certificate {
            x: g.clone(),
            y: g.clone(),
        };
        return Ok(AngleResult::new(1.0, Some(cert), Method::Exact, true));
    }
    cos_dixmier_faces(k1, k2)
}

/// Dixmier cosine by face-pair enumeration alone, without the
/// nontrivial-intersection shortcut.
pub fn cos_dixmier_faces(k1: &PolyhedralCone, k2: &PolyhedralCone) -> Result<AngleResult> {
    same_dim(k1, k2)?;
    if k1.is_zero() || k2.is_zero() {
        return Ok(AngleResult::zero(Method::Exact));
    }
    let faces1 = enumerate_faces(k1, DEFAULT_TOL);
    let faces2 = enumerate_faces(k2, DEFAULT_TOL);

    let mut candidates: Vec<Candidate> = Vec::new();
    for f1 in &faces1 {
        for f2 in &faces2 {
            let (b1, b2) = (&f1.span_basis, &f2.span_basis);
            let m = Matrix::from_fn(b1.len(), b2.len(), |i, j| b1[i].dot(&b2[j]));
            let svd = svd_small(&m)?;
            for ((u, v), &sigma) in svd
                .left_vectors
                .iter()
                .zip(&svd.right_vectors)
                .zip(&svd.singular_values)
            {
                let x = combine(b1, u);
                let y = combine(b2, v);
                for sign in [1.0, -1.0] {
                    let (xs, ys) = (&x * sign, &y * sign);
                    if k1.contains_unchecked(&xs, CANDIDATE_SLACK)
                        && k2.contains_unchecked(&ys, CANDIDATE_SLACK)
                    {
                        candidates.push(Candidate {
                            value: sigma,
                            x: xs,
                            y: ys,
                        });
                    }
                }
            }
        }
    }
    candidates.sort_by(|a, b| {
        b.value
            .partial_cmp(&a.value)
            .unwrap_or(Ordering::Equal)
            .then_with(|| lexicographic(&a.x, &b.x))
            .then_with(|| lexicographic(&a.y, &b.y))
    });

    let mut best: Option<(f64, Option<Certificate>)> = None;
    for cand in candidates.iter().take(MAX_POLISHED) {
        if let Some((b, _)) = &best {
            if cand.value <= *b + 1e-12 {
                break;
            }
        }
        let Some(run) = ascend(k1, k2, &cand.x, POLISH_ITERS, POLISH_TOL, None)? else {
            continue;
        };
        if best.as_ref().is_none_or(|(b, _)| run.alpha > *b) {
            let cert = run.y.map(|y| Certificate { x: run.x, y });
            best = Some((run.alpha, cert));
        }
    }

    let (mut value, mut cert) = best.unwrap_or((0.0, None));
    let mut flagged = false;
    let (check, _) = cos_dixmier_iterative(k1, k2, &[], CROSS_CHECK_ITERS, 1e-13)?;
    if check.cosine > value {
        flagged = check.cosine > value + FLAG_GAP;
        value = check.cosine;
        cert = check.certificate;
    }
    let mut result = AngleResult::new(value, cert, Method::Exact, true);
    result.flagged = flagged;
    Ok(result)
}
