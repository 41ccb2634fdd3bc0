//! Polyhedral cones and the polar/dual calculus.
//!
//! A [`PolyhedralCone`] always carries both representations:
//!
//! * generators: unit extreme rays of the pointed part followed by `±b` for
//!   each lineality basis vector `b`;
//! * halfspaces: unit normals `a` with `<a, x> <= 0`, namely the facet
//!   normals plus `±c` for every vector `c` orthogonal to the span.
//!
//! Both are minimal, and the halfspace normals are exactly the generators of
//! the polar cone, so conversion in either direction is a single call into
//! the double description routine. The zero cone has no generators and the
//! halfspaces `±e_i`; the full space has generators `±e_i` and no halfspaces.

mod dd;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{check_finite, check_tol, orthonormal_basis, Vector, DEFAULT_TOL};

pub(crate) use dd::extreme_generators;

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 8;
/// Cap on canonical generator count (lineality pairs included).
pub const MAX_GENERATORS: usize = 32;
/// Cap on canonical halfspace count (equality pairs included).
pub const MAX_HALFSPACES: usize = 32;

/// Serializable ingestion form: `{"dim": n, "generators": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConeSpec {
    pub dim: usize,
    pub generators: Vec<Vec<f64>>,
}

impl ConeSpec {
    pub fn new(dim: usize, generators: Vec<Vec<f64>>) -> Self {
        Self { dim, generators }
    }

    /// Checks lengths and finiteness, naming the first offending generator.
    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 || self.dim > MAX_DIM {
            return Err(Error::DimensionOutOfRange(self.dim));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.len() != self.dim {
                return Err(Error::Parse(format!(
                    "generator {i} has length {}, expected {}",
                    g.len(),
                    self.dim
                )));
            }
            if let Some(j) = g.iter().position(|c| !c.is_finite()) {
                return Err(Error::Parse(format!(
                    "generator {i} entry {j} is not a finite number"
                )));
            }
        }
        Ok(())
    }
}

/// A closed convex polyhedral cone in `R^n` in double representation.
#[derive(Debug, Clone)]
pub struct PolyhedralCone {
    dim: usize,
    rays: Vec<Vector>,
    lineality: Vec<Vector>,
    polar_rays: Vec<Vector>,
    polar_lineality: Vec<Vector>,
    generators: Vec<Vector>,
    halfspaces: Vec<Vector>,
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        Err(Error::DimensionOutOfRange(dim))
    } else {
        Ok(())
    }
}

fn check_vectors(dim: usize, vs: &[Vector], what: &str) -> Result<()> {
    for v in vs {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        check_finite(v, what)?;
    }
    Ok(())
}

fn with_negatives(basis: &[Vector]) -> impl Iterator<Item = Vector> + '_ {
    basis.iter().flat_map(|b| [b.clone(), -b])
}

/// Unit-normalises, drops (numerically) zero vectors and merges parallel ones.
fn normalize_directions(vs: &[Vector], tol: f64) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for v in vs {
        let n = v.norm();
        if n <= tol {
            continue;
        }
        let u = v / n;
        if out.iter().any(|o| o.dot(&u) > 1.0 - 1e-12) {
            continue;
        }
        out.push(u);
    }
    out
}

impl PolyhedralCone {
    /// Canonical cone from a raw generator spec (zero vectors dropped, duplicate
    /// and redundant generators removed).
    pub fn from_spec(spec: &ConeSpec, tol: f64) -> Result<Self> {
        spec.validate()?;
        if spec.generators.len() > MAX_GENERATORS {
            return Err(Error::CapExceeded {
                what: "input generator",
                count: spec.generators.len(),
                cap: MAX_GENERATORS,
            });
        }
        let gens: Vec<Vector> = spec
            .generators
            .iter()
            .map(|g| Vector::from_column_slice(g))
            .collect();
        Self::from_generators(spec.dim, &gens, tol)
    }

    /// `cone(generators)`, canonicalised.
    pub fn from_generators(dim: usize, generators: &[Vector], tol: f64) -> Result<Self> {
        check_dim(dim)?;
        check_tol(tol)?;
        check_vectors(dim, generators, "generator")?;
        let gens = normalize_directions(generators, tol);
        let polar = extreme_generators(&gens, dim, tol)?;
        let normals: Vec<Vector> = polar
            .rays
            .iter()
            .cloned()
            .chain(with_negatives(&polar.lineality))
            .collect();
        let primal = extreme_generators(&normals, dim, tol)?;
        Self::assemble(
            dim,
            primal.rays,
            primal.lineality,
            polar.rays,
            polar.lineality,
        )
    }

    /// `{x : <a, x> <= 0 for every normal a}`, canonicalised.
    pub fn from_halfspaces(dim: usize, normals: &[Vector], tol: f64) -> Result<Self> {
        check_dim(dim)?;
        check_tol(tol)?;
        check_vectors(dim, normals, "halfspace normal")?;
        let normals = normalize_directions(normals, tol);
        let primal = extreme_generators(&normals, dim, tol)?;
        let gens: Vec<Vector> = primal
            .rays
            .iter()
            .cloned()
            .chain(with_negatives(&primal.lineality))
            .collect();
        let polar = extreme_generators(&gens, dim, tol)?;
        Self::assemble(
            dim,
            primal.rays,
            primal.lineality,
            polar.rays,
            polar.lineality,
        )
    }

    /// The linear subspace spanned by `vectors`.
    pub fn span_of(dim: usize, vectors: &[Vector], tol: f64) -> Result<Self> {
        check_dim(dim)?;
        check_vectors(dim, vectors, "vector")?;
        let basis = orthonormal_basis(vectors, tol)?;
        let gens: Vec<Vector> = with_negatives(&basis).collect();
        Self::from_generators(dim, &gens, tol)
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::from_generators(dim, &[], DEFAULT_TOL)
    }

    pub fn full(dim: usize) -> Result<Self> {
        Self::from_halfspaces(dim, &[], DEFAULT_TOL)
    }

    fn assemble(
        dim: usize,
        rays: Vec<Vector>,
        lineality: Vec<Vector>,
        polar_rays: Vec<Vector>,
        polar_lineality: Vec<Vector>,
    ) -> Result<Self> {
        let generators: Vec<Vector> = rays
            .iter()
            .cloned()
            .chain(with_negatives(&lineality))
            .collect();
        let halfspaces: Vec<Vector> = polar_rays
            .iter()
            .cloned()
            .chain(with_negatives(&polar_lineality))
            .collect();
        if generators.len() > MAX_GENERATORS {
            return Err(Error::CapExceeded {
                what: "generator",
                count: generators.len(),
                cap: MAX_GENERATORS,
            });
        }
        if halfspaces.len() > MAX_HALFSPACES {
            return Err(Error::CapExceeded {
                what: "facet",
                count: halfspaces.len(),
                cap: MAX_HALFSPACES,
            });
        }
        Ok(Self {
            dim,
            rays,
            lineality,
            polar_rays,
            polar_lineality,
            generators,
            halfspaces,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Extreme rays followed by `±` lineality basis vectors.
    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    /// Halfspace normals `a`, meaning `<a, x> <= 0`.
    pub fn halfspaces(&self) -> &[Vector] {
        &self.halfspaces
    }

    /// Unit extreme rays of the pointed part `K ∩ L^⊥`.
    pub fn extreme_rays(&self) -> &[Vector] {
        &self.rays
    }

    /// Orthonormal basis of `K ∩ (-K)`.
    pub fn lineality_space(&self) -> &[Vector] {
        &self.lineality
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.halfspaces.is_empty()
    }

    /// Orthonormal basis of the linear hull of the cone.
    pub fn span_basis(&self) -> Vec<Vector> {
        let mut basis = self.lineality.clone();
        let rest = orthonormal_basis(&self.rays, DEFAULT_TOL).unwrap_or_default();
        for r in rest {
            let mut q = r;
            for b in &basis {
                let c = b.dot(&q);
                q.axpy(-c, b, 1.0);
            }
            let nq = q.norm();
            if nq > 1e-9 {
                basis.push(q / nq);
            }
        }
        basis
    }

    /// Raw-generator spec of this cone, suitable for JSON emission.
    pub fn to_spec(&self) -> ConeSpec {
        ConeSpec {
            dim: self.dim,
            generators: self
                .generators
                .iter()
                .map(|g| g.iter().copied().collect())
                .collect(),
        }
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            })
        }
    }

    /// Polar cone `K⊖`: the generators of `K` become halfspace normals and the
    /// double description recovers the new generators.
    pub fn polar(&self) -> Result<Self> {
        Self::from_halfspaces(self.dim, &self.generators, DEFAULT_TOL)
    }

    /// Dual cone `K⊕ = -K⊖`.
    pub fn dual(&self) -> Result<Self> {
        Ok(self.polar()?.negate())
    }

    pub fn negate(&self) -> Self {
        let neg = |vs: &[Vector]| vs.iter().map(|v| -v).collect::<Vec<_>>();
        Self {
            dim: self.dim,
            rays: neg(&self.rays),
            lineality: neg(&self.lineality),
            polar_rays: neg(&self.polar_rays),
            polar_lineality: neg(&self.polar_lineality),
            generators: neg(&self.generators),
            halfspaces: neg(&self.halfspaces),
        }
    }

    /// Minkowski sum `K1 + K2`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let gens: Vec<Vector> = self
            .generators
            .iter()
            .chain(&other.generators)
            .cloned()
            .collect();
        Self::from_generators(self.dim, &gens, DEFAULT_TOL)
    }

    /// `K1 - K2 = K1 + (-K2)`.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.sum(&other.negate())
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let normals: Vec<Vector> = self
            .halfspaces
            .iter()
            .chain(&other.halfspaces)
            .cloned()
            .collect();
        Self::from_halfspaces(self.dim, &normals, DEFAULT_TOL)
    }

    /// Orthogonal complement of the linear hull, `K^⊥`.
    pub fn orthogonal_complement(&self) -> Result<Self> {
        let normals: Vec<Vector> = self
            .generators
            .iter()
            .flat_map(|g| [g.clone(), -g])
            .collect();
        Self::from_halfspaces(self.dim, &normals, DEFAULT_TOL)
    }

    /// H-representation membership: `<a, x> <= tol * ||x||` for every normal.
    pub fn contains(&self, x: &Vector, tol: f64) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        check_finite(x, "point")?;
        Ok(self.contains_unchecked(x, tol))
    }

    pub(crate) fn contains_unchecked(&self, x: &Vector, tol: f64) -> bool {
        let bound = tol * x.norm();
        self.halfspaces.iter().all(|a| a.dot(x) <= bound)
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Self, tol: f64) -> Result<bool> {
        self.same_dim(other)?;
        Ok(self
            .generators
            .iter()
            .all(|g| other.contains_unchecked(g, tol)))
    }

    /// `-g ∈ K` for every generator `g`.
    pub fn is_linear_subspace(&self, tol: f64) -> bool {
        self.generators
            .iter()
            .all(|g| self.contains_unchecked(&-g, tol))
    }

    /// Set equality by mutual generator inclusion.
    pub fn equals(&self, other: &Self, tol: f64) -> Result<bool> {
        Ok(self.is_subset_of(other, tol)? && other.is_subset_of(self, tol)?)
    }

    /// `K = R^n`, tested as `±e_i ∈ K` for all `i`.
    pub fn is_whole_space(&self, tol: f64) -> bool {
        (0..self.dim).all(|i| {
            let e = Vector::from_fn(self.dim, |j, _| if i == j { 1.0 } else { 0.0 });
            self.contains_unchecked(&e, tol) && self.contains_unchecked(&-e, tol)
        })
    }
}
