mod common;

use common::{build, cone_and_point, cone_in, Shape};
use cone_angles::projection::project;
use cone_angles::{PolyhedralCone, Vector};
use proptest::prelude::*;

const SET_TOL: f64 = 1e-7;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn polar_involution(k in cone_in(2..=6)) {
        prop_assert!(k.polar().unwrap().polar().unwrap().equals(&k, SET_TOL).unwrap());
    }

    #[test]
    fn polar_of_intersection_is_sum_of_polars(
        (d, a, b) in (2usize..=4, 1usize..=5, 1usize..=5, any::<u64>(), any::<u64>())
            .prop_map(|(d, a, b, s, t)| (d, build(d, a, s, Shape::General), build(d, b, t, Shape::General)))
    ) {
        let lhs = a.intersect(&b).unwrap().polar().unwrap();
        let rhs = a.polar().unwrap().sum(&b.polar().unwrap()).unwrap();
        prop_assert_eq!(lhs.dim(), d);
        prop_assert!(lhs.equals(&rhs, SET_TOL).unwrap());
    }

    #[test]
    fn negation_commutes_with_polar(k in cone_in(2..=6)) {
        let lhs = k.negate().polar().unwrap();
        let rhs = k.polar().unwrap().negate();
        prop_assert!(lhs.equals(&rhs, SET_TOL).unwrap());
        prop_assert!(k.dual().unwrap().equals(&rhs, SET_TOL).unwrap());
    }

    #[test]
    fn representations_agree(k in cone_in(2..=6)) {
        for g in k.generators() {
            for a in k.halfspaces() {
                prop_assert!(a.dot(g) <= 1e-9);
            }
            prop_assert!((g.norm() - 1.0).abs() < 1e-12);
        }
        let rays = k.extreme_rays();
        for (i, g) in rays.iter().enumerate() {
            for h in &rays[i + 1..] {
                prop_assert!(g.dot(h) <= 1.0 - 1e-12);
            }
        }
        // lineality vectors are two-sided members
        for l in k.lineality_space() {
            prop_assert!(k.contains(l, 1e-9).unwrap() && k.contains(&-l, 1e-9).unwrap());
        }
    }

    #[test]
    fn membership_tests_agree((k, x) in cone_and_point(2..=6)) {
        let h_rep = k.contains(&x, 1e-9).unwrap();
        let v_rep = (&x - project(&k, &x).unwrap().point).norm() <= 1e-9 * (1.0 + x.norm());
        // points within rounding of the boundary may fall either way
        let margin = common::violation(&k, &x);
        if margin > 1e-6 * x.norm() || margin == 0.0 {
            prop_assert_eq!(h_rep, v_rep, "margin {}", margin);
        }
    }

    #[test]
    fn subspace_polar_and_dual_are_complement(seed in any::<u64>(), dim in 2usize..=6) {
        let m = build(dim, 1, seed, Shape::Subspace);
        let perp = m.orthogonal_complement().unwrap();
        prop_assert!(m.polar().unwrap().equals(&perp, SET_TOL).unwrap());
        prop_assert!(m.dual().unwrap().equals(&perp, SET_TOL).unwrap());
        prop_assert!(m.is_linear_subspace(SET_TOL));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sum_with_itself(k in cone_in(2..=6)) {
        prop_assert!(k.sum(&k).unwrap().equals(&k, SET_TOL).unwrap());
    }
}

#[test]
fn zero_and_full_encodings() {
    let z = PolyhedralCone::zero(3).unwrap();
    assert!(z.is_zero() && z.generators().is_empty());
    let f = z.polar().unwrap();
    assert!(f.is_full() && f.halfspaces().is_empty());
    assert!(f.polar().unwrap().is_zero());
    let x = Vector::from_column_slice(&[1.0, -2.0, 3.0]);
    assert!(f.contains(&x, 1e-9).unwrap() && !z.contains(&x, 1e-9).unwrap());
}
