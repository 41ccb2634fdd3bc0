//! Dixmier and Friedrichs angles between polyhedral convex cones.

pub mod angles;
pub mod cli;
pub mod cone;
pub mod error;
pub mod linalg;
pub mod projection;
pub mod theorems;

pub use cone::{ConeSpec, PolyhedralCone};
pub use error::{Error, Result};
pub use linalg::{Matrix, Vector, DEFAULT_TOL};
