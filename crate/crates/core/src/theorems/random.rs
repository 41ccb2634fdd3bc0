//! Deterministic random cones.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::cone::PolyhedralCone;
use crate::error::{Error, Result};
use crate::linalg::{Vector, DEFAULT_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomConeParams {
    /// Ambient dimension in `[2, 8]`.
    pub dim: usize,
    /// Number of raw generators in `[1, 32]`.
    pub generator_count: usize,
    pub seed: u64,
    /// Generate a random linear subspace of dimension in `[1, dim - 1]`.
    pub subspace_mode: bool,
    /// Keep every generator in an open halfspace so the cone is pointed.
    pub pointed: bool,
}

impl RandomConeParams {
    pub fn new(dim: usize, generator_count: usize, seed: u64) -> Self {
        Self {
            dim,
            generator_count,
            seed,
            subspace_mode: false,
            pointed: false,
        }
    }

    pub fn subspace(dim: usize, seed: u64) -> Self {
        Self {
            subspace_mode: true,
            ..Self::new(dim, 1, seed)
        }
    }

    pub fn pointed(dim: usize, generator_count: usize, seed: u64) -> Self {
        Self {
            pointed: true,
            ..Self::new(dim, generator_count, seed)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(2..=8).contains(&self.dim) {
            return Err(Error::InvalidParams(format!(
                "dim must be in [2, 8], got {}",
                self.dim
            )));
        }
        if !(1..=32).contains(&self.generator_count) {
            return Err(Error::InvalidParams(format!(
                "generator_count must be in [1, 32], got {}",
                self.generator_count
            )));
        }
        Ok(())
    }
}

/// ChaCha stream `index` of `seed`; streams are independent of each other
/// and of scheduling.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub(crate) fn gaussian(rng: &mut impl Rng, dim: usize) -> Vector {
    Vector::from_fn(dim, |_, _| StandardNormal.sample(rng))
}

pub(crate) fn unit_gaussian(rng: &mut impl Rng, dim: usize) -> Vector {
    loop {
        let v = gaussian(rng, dim);
        let n = v.norm();
        if n > 1e-6 {
            return v / n;
        }
    }
}

pub fn gen_random_cone(params: &RandomConeParams) -> Result<PolyhedralCone> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let dim = params.dim;
    if params.subspace_mode {
        let k = rng.random_range(1..dim);
        let basis: Vec<Vector> = (0..k).map(|_| gaussian(&mut rng, dim)).collect();
        return PolyhedralCone::span_of(dim, &basis, DEFAULT_TOL);
    }
    let gens: Vec<Vector> = if params.pointed {
        let axis = unit_gaussian(&mut rng, dim);
        (0..params.generator_count)
            .map(|_| unit_gaussian(&mut rng, dim) + &axis * 1.2)
            .collect()
    } else {
        (0..params.generator_count)
            .map(|_| gaussian(&mut rng, dim))
            .collect()
    };
    PolyhedralCone::from_generators(dim, &gens, DEFAULT_TOL)
}
