#![allow(dead_code)]

use cone_angles::theorems::{gen_random_cone, RandomConeParams};
use cone_angles::{PolyhedralCone, Vector};
use proptest::prelude::*;

#[derive(Debug, Clone, Copy)]
pub enum Shape {
    General,
    Pointed,
    Subspace,
}

pub fn build(dim: usize, count: usize, seed: u64, shape: Shape) -> PolyhedralCone {
    let params = match shape {
        Shape::General => RandomConeParams::new(dim, count, seed),
        Shape::Pointed => RandomConeParams::pointed(dim, count, seed),
        Shape::Subspace => RandomConeParams::subspace(dim, seed),
    };
    gen_random_cone(&params).expect("random cone")
}

pub fn shape() -> impl Strategy<Value = Shape> {
    prop_oneof![
        2 => Just(Shape::General),
        1 => Just(Shape::Pointed),
        1 => Just(Shape::Subspace),
    ]
}

/// A random cone in a dimension from `dims`.
pub fn cone_in(dims: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = PolyhedralCone> {
    (dims, 1usize..=6, any::<u64>(), shape())
        .prop_map(|(d, c, s, sh)| build(d, c.min(d + 2), s, sh))
}

/// Two random cones sharing a dimension from `dims`.
pub fn pair_in(
    dims: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (PolyhedralCone, PolyhedralCone)> {
    (
        dims,
        (1usize..=5, any::<u64>(), shape()),
        (1usize..=5, any::<u64>(), shape()),
    )
        .prop_map(|(d, (c1, s1, h1), (c2, s2, h2))| {
            (
                build(d, c1.min(d + 1), s1, h1),
                build(d, c2.min(d + 1), s2, h2),
            )
        })
}

pub fn vector(dim: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(-10.0f64..10.0, dim).prop_map(Vector::from_vec)
}

/// A cone together with a point of matching dimension.
pub fn cone_and_point(
    dims: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (PolyhedralCone, Vector)> {
    cone_in(dims).prop_flat_map(|k| {
        let d = k.dim();
        (Just(k), vector(d))
    })
}

/// Largest violated halfspace value of `y`.
pub fn violation(k: &PolyhedralCone, y: &Vector) -> f64 {
    k.halfspaces().iter().map(|a| a.dot(y)).fold(0.0, f64::max)
}
