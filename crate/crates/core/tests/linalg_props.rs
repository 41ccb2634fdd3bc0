use cone_angles::linalg::{orthonormal_basis, solve_nnls, svd_small};
use cone_angles::{Matrix, Vector};
use proptest::prelude::*;

fn vectors(dim: usize, count: usize) -> impl Strategy<Value = Vec<Vector>> {
    proptest::collection::vec(
        proptest::collection::vec(-5.0f64..5.0, dim).prop_map(Vector::from_vec),
        count,
    )
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-5.0f64..5.0, r * c)
            .prop_map(move |data| Matrix::from_vec(r, c, data))
    })
}

/// Columns drawn from a small pool so that parallel and repeated columns
/// occur often.
fn nnls_problem() -> impl Strategy<Value = (Matrix, Vector)> {
    (1usize..=8, 1usize..=32).prop_flat_map(|(n, m)| {
        (
            vectors(n, 4),
            proptest::collection::vec((0usize..8, -2.0f64..2.0), m),
            vectors(n, 1),
        )
            .prop_map(move |(pool, picks, x)| {
                let cols: Vec<Vector> = picks
                    .iter()
                    .enumerate()
                    .map(|(j, &(p, t))| {
                        if p < 4 {
                            &pool[p] * t
                        } else {
                            Vector::from_fn(n, |i, _| ((i * 7 + j * 3) % 5) as f64 - 2.0)
                        }
                    })
                    .collect();
                (Matrix::from_columns(&cols), x[0].clone())
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn orthonormal_basis_is_orthonormal(
        (dim, vs) in (1usize..=8).prop_flat_map(|d| (Just(d), (0usize..=10).prop_flat_map(move |c| vectors(d, c))))
    ) {
        let b = orthonormal_basis(&vs, 1e-9).unwrap();
        prop_assert!(b.len() <= dim);
        for (i, u) in b.iter().enumerate() {
            for (j, w) in b.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((u.dot(w) - want).abs() <= 1e-10);
            }
        }
        // every input vector lies in the span of the basis
        for v in &vs {
            let mut r = v.clone();
            for u in &b {
                r -= u * u.dot(v);
            }
            prop_assert!(r.norm() <= 1e-8 * (1.0 + v.norm()));
        }
    }

    #[test]
    fn svd_reconstructs(a in matrix()) {
        let svd = svd_small(&a).unwrap();
        let s = &svd.singular_values;
        prop_assert!(s.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(s.iter().all(|&x| x >= 0.0));
        let mut rebuilt = Matrix::zeros(a.nrows(), a.ncols());
        for ((u, v), &sigma) in svd.left_vectors.iter().zip(&svd.right_vectors).zip(s) {
            prop_assert!((u.norm() - 1.0).abs() <= 1e-12);
            prop_assert!((v.norm() - 1.0).abs() <= 1e-12);
            rebuilt += u * v.transpose() * sigma;
        }
        prop_assert!((&a - rebuilt).norm() <= 1e-10 * (1.0 + a.norm()));
    }

    #[test]
    fn nnls_satisfies_kkt((g, x) in nnls_problem()) {
        let sol = solve_nnls(&g, &x, 1e-9).unwrap();
        let grad = g.transpose() * (&g * &sol.lambda - &x);
        let tol = 1e-8 * (1.0 + g.norm() * x.norm());
        for (l, d) in sol.lambda.iter().zip(grad.iter()) {
            prop_assert!(*l >= 0.0);
            prop_assert!(*d >= -tol, "gradient {d} below -{tol}");
            prop_assert!((l * d).abs() <= tol, "slackness {}", l * d);
        }
    }
}
