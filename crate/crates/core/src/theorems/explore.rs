//! Randomised search for pairs of cones, not both linear, that satisfy every
//! hypothesis of the conical Solmon inequality.
//!
//! The search only gathers evidence. A hit is an instance that passes the
//! numerical hypothesis tests at the stated tolerances; zero hits settle
//! nothing.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cone::{ConeSpec, PolyhedralCone};
use crate::error::{Error, Result};
use crate::linalg::{Vector, DEFAULT_TOL};

use super::checks::{check_solmon_conical, solmon_hypotheses, SET_TOL};
use super::random::trial_rng;
use super::TheoremReport;

const SAMPLE_HITS: usize = 10;
const MAX_ATTEMPTS: usize = 64;

pub const EVIDENCE_NOTE: &str = "evidence only: hits are numerically verified instances at the \
     reported tolerances and zero hits do not resolve the question";

#[derive(Debug, Clone, Serialize)]
pub struct ExploreHit {
    pub trial: u64,
    pub first: ConeSpec,
    pub second: ConeSpec,
    pub report: TheoremReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExploreSummary {
    pub dim: usize,
    pub trials: u64,
    pub seed: u64,
    pub hits: usize,
    /// Trials stopped at each hypothesis, keyed by its name.
    pub first_failed_hypothesis: BTreeMap<String, usize>,
    pub sample_hits: Vec<ExploreHit>,
    pub note: &'static str,
}

fn lattice_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vector {
    loop {
        let v = Vector::from_fn(dim, |_, _| rng.random_range(-2i32..=2) as f64);
        if v.norm() > 0.0 {
            return v;
        }
    }
}

/// Between `counts.start()` and `counts.end()` lattice vectors.
fn lattice_vectors(rng: &mut ChaCha8Rng, dim: usize, counts: RangeInclusive<usize>) -> Vec<Vector> {
    let count = rng.random_range(counts);
    (0..count).map(|_| lattice_vector(rng, dim)).collect()
}

fn with_lineality(basis: &[Vector], rays: &[Vector]) -> Vec<Vector> {
    basis
        .iter()
        .flat_map(|b| [b.clone(), -b])
        .chain(rays.iter().cloned())
        .collect()
}

/// A pair of cones with small-integer generators, sharing lineality or rays
/// often enough that nontrivial intersections and coincident faces occur.
/// At least one of the two cones is not a linear subspace.
pub fn gen_structured_pair(
    dim: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(PolyhedralCone, PolyhedralCone)> {
    for _ in 0..MAX_ATTEMPTS {
        let shared = lattice_vectors(rng, dim, 0..=dim - 1);
        let rays1 = lattice_vectors(rng, dim, 0..=dim);
        let g1 = with_lineality(&shared, &rays1);
        let k1 = PolyhedralCone::from_generators(dim, &g1, DEFAULT_TOL)?;

        let k2 = match rng.random_range(0..5) {
            0 => {
                let own = lattice_vectors(rng, dim, 0..=dim - 1);
                let rays = lattice_vectors(rng, dim, 0..=dim);
                PolyhedralCone::from_generators(dim, &with_lineality(&own, &rays), DEFAULT_TOL)?
            }
            1 => {
                let rays = lattice_vectors(rng, dim, 0..=dim);
                PolyhedralCone::from_generators(dim, &with_lineality(&shared, &rays), DEFAULT_TOL)?
            }
            2 => {
                let mut rays: Vec<Vector> = rays1
                    .iter()
                    .filter(|_| rng.random_bool(0.5))
                    .cloned()
                    .collect();
                rays.extend(lattice_vectors(rng, dim, 0..=2));
                PolyhedralCone::from_generators(dim, &rays, DEFAULT_TOL)?
            }
            3 => k1.dual()?,
            _ => {
                let rays = lattice_vectors(rng, dim, 1..=dim);
                PolyhedralCone::from_generators(dim, &rays, DEFAULT_TOL)?.polar()?
            }
        };
        if !(k1.is_linear_subspace(SET_TOL) && k2.is_linear_subspace(SET_TOL)) {
            return Ok((k1, k2));
        }
    }
    Err(Error::Numerical(
        "could not draw a pair with a nonlinear cone".into(),
    ))
}

enum Outcome {
    Miss(String),
    Hit(Box<ExploreHit>),
}

fn run_trial(dim: usize, seed: u64, trial: u64) -> Result<Outcome> {
    let mut rng = trial_rng(seed, trial);
    let (k1, k2) = gen_structured_pair(dim, &mut rng)?;
    let hyps = solmon_hypotheses(&k1, &k2, true)?;
    if let Some((name, _)) = hyps.iter().find(|(_, holds)| !holds) {
        return Ok(Outcome::Miss(name.to_string()));
    }
    let report = check_solmon_conical(&k1, &k2)?;
    if let Some(h) = report.hypotheses.iter().find(|h| !h.holds) {
        return Ok(Outcome::Miss(format!("{} (reverification)", h.name)));
    }
    Ok(Outcome::Hit(Box::new(ExploreHit {
        trial,
        first: k1.to_spec(),
        second: k2.to_spec(),
        report,
    })))
}

/// Runs `trials` independent trials in dimension `dim`. Trial `i` draws from
/// ChaCha stream `i` of `seed`, so the summary does not depend on thread
/// scheduling.
pub fn explore_open_question(dim: usize, trials: u64, seed: u64) -> Result<ExploreSummary> {
    if !(2..=8).contains(&dim) {
        return Err(Error::InvalidParams(format!(
            "dim must be in [2, 8], got {dim}"
        )));
    }
    let outcomes: Vec<Outcome> = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(dim, seed, t))
        .collect::<Result<_>>()?;
    let mut first_failed_hypothesis = BTreeMap::new();
    let mut hits = 0;
    let mut sample_hits = Vec::new();
    for o in outcomes {
        match o {
            Outcome::Miss(name) => *first_failed_hypothesis.entry(name).or_insert(0) += 1,
            Outcome::Hit(h) => {
                hits += 1;
                if sample_hits.len() < SAMPLE_HITS {
                    sample_hits.push(*h);
                }
            }
        }
    }
    Ok(ExploreSummary {
        dim,
        trials,
        seed,
        hits,
        first_failed_hypothesis,
        sample_hits,
        note: EVIDENCE_NOTE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_trials() {
        let s = explore_open_question(3, 0, 1).unwrap();
        assert_eq!(s.hits, 0);
        assert!(s.first_failed_hypothesis.is_empty());
    }

    #[test]
    fn pairs_have_a_nonlinear_cone() {
        for t in 0..50 {
            let mut rng = trial_rng(9, t);
            let (a, b) = gen_structured_pair(3, &mut rng).unwrap();
            assert!(!(a.is_linear_subspace(1e-7) && b.is_linear_subspace(1e-7)));
        }
    }

    #[test]
    fn deterministic_summary() {
        let a = serde_json::to_string(&explore_open_question(2, 200, 5).unwrap()).unwrap();
        let b = serde_json::to_string(&explore_open_question(2, 200, 5).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn plane_has_no_hits_small() {
        assert_eq!(explore_open_question(2, 2000, 1).unwrap().hits, 0);
    }

    #[test]
    fn rejects_bad_dim() {
        assert!(explore_open_question(1, 10, 0).is_err());
    }
}
