//! Property tests over randomized operators and generator specs.

use ndarray::Array2;
use proptest::prelude::*;

use lindblad_fd::basis::SuNBasis;
use lindblad_fd::decomposition::decompose_with_basis;
use lindblad_fd::dynamics::{physicality_report, propagate, DensityMatrix};
use lindblad_fd::generator::{
    devectorize, liouvillian_direct, sandwich, vectorize, LindbladSpec,
};
use lindblad_fd::linalg::{dagger, frob_norm, trace, vec_norm, C64};

fn complex_matrix(n: usize) -> impl Strategy<Value = Array2<C64>> {
    prop::collection::vec(-3.0f64..3.0, 2 * n * n).prop_map(move |raw| {
        Array2::from_shape_fn((n, n), |(i, j)| {
            let base = 2 * (i * n + j);
            C64::new(raw[base], raw[base + 1])
        })
    })
}

fn hermitian_matrix(n: usize) -> impl Strategy<Value = Array2<C64>> {
    complex_matrix(n).prop_map(|g| (&g + &dagger(&g)).mapv(|z| 0.5 * z))
}

fn density_matrix(n: usize) -> impl Strategy<Value = DensityMatrix> {
    complex_matrix(n).prop_map(move |g| {
        let w = g.dot(&dagger(&g)) + Array2::<C64>::eye(n).mapv(|z| z * 1e-6);
        let norm = trace(&w).re;
        DensityMatrix::new(w.mapv(|z| z / norm)).expect("Wishart state")
    })
}

fn spec(n: usize, k: usize) -> impl Strategy<Value = LindbladSpec> {
    (
        hermitian_matrix(n),
        prop::collection::vec(complex_matrix(n), k),
    )
        .prop_map(|(h, l_ops)| LindbladSpec::new(h, l_ops, 1.0).expect("valid random spec"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn vectorization_roundtrip(n in 2usize..6, seedling in prop::collection::vec(-5.0f64..5.0, 72)) {
        let m = Array2::from_shape_fn((n, n), |(i, j)| {
            let idx = (2 * (i * n + j)) % seedling.len();
            C64::new(seedling[idx], seedling[(idx + 1) % seedling.len()])
        });
        let back = devectorize(&vectorize(&m)).unwrap();
        prop_assert!(frob_norm(&(&back - &m)) == 0.0);
    }

    #[test]
    fn vectorization_intertwines_sandwich((a, x, b) in (complex_matrix(3), complex_matrix(3), complex_matrix(3))) {
        let lhs = vectorize(&a.dot(&x).dot(&b));
        let rhs = sandwich(&a, &b).dot(&vectorize(&x));
        prop_assert!(vec_norm(&(&lhs - &rhs)) <= 1e-12 * (1.0 + vec_norm(&lhs)));
    }

    #[test]
    fn basis_expansion_is_lossless(x in complex_matrix(3)) {
        let basis = SuNBasis::new(3).unwrap();
        let alpha = basis.expand(&x).unwrap();
        let back = basis.reconstruct(&alpha).unwrap();
        prop_assert!(frob_norm(&(&back - &x)) <= 1e-12 * (1.0 + frob_norm(&x)));
    }

    #[test]
    fn liouvillian_preserves_trace_and_hermiticity(s in spec(3, 2), rho in hermitian_matrix(3)) {
        let m = liouvillian_direct(&s);
        let image = m.apply(&rho).unwrap();
        prop_assert!(trace(&image).norm() <= 1e-12 * (1.0 + frob_norm(&rho)));
        prop_assert!(frob_norm(&(&image - &dagger(&image))) <= 1e-11 * (1.0 + frob_norm(&image)));
    }

    #[test]
    fn canonical_split_reconstructs(s in spec(2, 3)) {
        let basis = SuNBasis::new(2).unwrap();
        let dec = decompose_with_basis(&s, &basis).unwrap();
        prop_assert!(dec.reconstruction_residual <= 1e-11);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn propagation_stays_physical(s in spec(2, 2), rho0 in density_matrix(2), t in 0.0f64..3.0) {
        let m = liouvillian_direct(&s);
        let rho_t = propagate(&m, &rho0, t).unwrap();
        let report = physicality_report(rho_t.matrix()).unwrap();
        prop_assert!(report.trace_deviation <= 1e-10);
        prop_assert!(report.hermiticity_residual <= 1e-10);
        prop_assert!(report.min_eigenvalue >= -1e-8);
    }

    #[test]
    fn semigroup_composition(s in spec(2, 1), rho0 in density_matrix(2), t1 in 0.0f64..1.5, t2 in 0.0f64..1.5) {
        let m = liouvillian_direct(&s);
        let one_shot = propagate(&m, &rho0, t1 + t2).unwrap();
        let stepped = propagate(&m, &propagate(&m, &rho0, t1).unwrap(), t2).unwrap();
        prop_assert!(frob_norm(&(one_shot.matrix() - stepped.matrix())) <= 1e-10);
    }
}
