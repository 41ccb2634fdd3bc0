use crate::cone::PolyhedralCone;
use crate::error::Result;
use crate::linalg::Vector;
use crate::projection::project;

use super::{same_dim, AngleResult, Certificate, Method};

/// Iterates `x_k` of the ascent together with `α_k = ||P_K2 x_k||`.
#[derive(Debug, Clone, Default)]
pub struct IterationTrace {
    pub iterates: Vec<(Vector, f64)>,
    pub converged: bool,
}

pub(crate) struct Ascent {
    pub x: Vector,
    pub y: Option<Vector>,
    pub alpha: f64,
    pub converged: bool,
}

/// Alternating-projection ascent `x <- P_K1(P_K2 x) / ||.||` started from
/// `P_K1 x0`. Each step cannot decrease `α = ||P_K2 x||`: with
/// `y = P_K2 x / α` we have `||P_K1 y|| >= <x, y> = α` and then
/// `||P_K2 x'|| >= <x', y> = ||P_K1 y||`.
pub(crate) fn ascend(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
    x0: &Vector,
    max_iter: usize,
    tol: f64,
    mut trace: Option<&mut Vec<(Vector, f64)>>,
) -> Result<Option<Ascent>> {
    let p = project(k1, x0)?.point;
    let np = p.norm();
    if np <= 1e-12 * x0.norm().max(1.0) {
        return Ok(None);
    }
    let mut x = p / np;
    let mut q = project(k2, &x)?.point;
    let mut alpha = q.norm();
    if let Some(t) = trace.as_deref_mut() {
        t.push((x.clone(), alpha));
    }
    let mut converged = false;
    for _ in 0..max_iter {
        if alpha <= 0.0 {
            converged = true;
            break;
        }
        let y = &q / alpha;
        let r = project(k1, &y)?.point;
        let nr = r.norm();
        if nr <= 0.0 {
            converged = true;
            break;
        }
        let x_new = r / nr;
        let q_new = project(k2, &x_new)?.point;
        let alpha_new = q_new.norm();
        if alpha_new < alpha {
            // rounding-level decrease: we are at the fixed point
            converged = true;
            break;
        }
        let gain = alpha_new - alpha;
        x = x_new;
        q = q_new;
        alpha = alpha_new;
        if let Some(t) = trace.as_deref_mut() {
            t.push((x.clone(), alpha));
        }
        if gain < tol {
            converged = true;
            break;
        }
    }
    let y = (alpha > 0.0).then(|| &q / alpha);
    Ok(Some(Ascent {
        x,
        y,
        alpha,
        converged,
    }))
}

/// Generators of `K1` plus the normalised projections onto `K1` of the
/// generators of `K2`.
pub fn default_starts(k1: &PolyhedralCone, k2: &PolyhedralCone) -> Result<Vec<Vector>> {
    let mut starts: Vec<Vector> = k1.generators().to_vec();
    for g in k2.generators() {
        let p = project(k1, g)?.point;
        let n = p.norm();
        if n > 1e-12 {
            starts.push(p / n);
        }
    }
    Ok(starts)
}

/// Best value of the monotone ascent over all `starts` (or
/// [`default_starts`] when `starts` is empty). Stops a run once
/// `α_{k+1} - α_k < tol` or after `max_iter` steps; the returned trace is the
/// one of the winning start.
pub fn cos_dixmier_iterative(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
    starts: &[Vector],
    max_iter: usize,
    tol: f64,
) -> Result<(AngleResult, IterationTrace)> {
    same_dim(k1, k2)?;
    if k1.is_zero() || k2.is_zero() {
        let trace = IterationTrace {
            iterates: Vec::new(),
            converged: true,
        };
        return Ok((AngleResult::zero(Method::Iterative), trace));
    }
    let owned;
    let starts = if starts.is_empty() {
        owned = default_starts(k1, k2)?;
        &owned[..]
    } else {
        starts
    };

    let mut best: Option<(Ascent, IterationTrace)> = None;
    for s in starts {
        let mut iterates = Vec::new();
        let Some(run) = ascend(k1, k2, s, max_iter, tol, Some(&mut iterates))? else {
            continue;
        };
        if best.as_ref().is_none_or(|(b, _)| run.alpha > b.alpha) {
            let trace = IterationTrace {
                iterates,
                converged: run.converged,
            };
            best = Some((run, trace));
        }
    }
    Ok(match best {
        Some((run, trace)) => {
            let cert = run.y.map(|y| Certificate { x: run.x, y });
            (
                AngleResult::new(run.alpha, cert, Method::Iterative, true),
                trace,
            )
        }
        None => (
            AngleResult::zero(Method::Iterative),
            IterationTrace::default(),
        ),
    })
}
