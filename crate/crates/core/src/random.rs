//! Seeded random generation of specs, states, and symmetry transforms,
//! used by the randomized audits and the test corpus.

use ndarray::{Array1, Array2};
use ndarray_linalg::QR;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::dynamics::DensityMatrix;
use crate::generator::LindbladSpec;
use crate::linalg::{dagger, eye, trace, C64};
use crate::symmetry::SymmetryTransform;

/// Matrix with i.i.d. standard complex Gaussian entries,
/// (x + iy)/√2 with x, y ~ N(0, 1).
pub fn complex_gaussian_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> Array2<C64> {
    let mut m = Array2::zeros((rows, cols));
    for elem in m.iter_mut() {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        *elem = C64::new(re, im) / 2f64.sqrt();
    }
    m
}

/// Random Hermitian matrix (G + G†)/2 with complex Gaussian G.
pub fn random_hermitian<R: Rng>(n: usize, rng: &mut R) -> Array2<C64> {
    let g = complex_gaussian_matrix(n, n, rng);
    (&g + &dagger(&g)).mapv(|z| 0.5 * z)
}

/// Haar-distributed K×K unitary: QR of a complex Gaussian matrix with the
/// R diagonal phases absorbed into Q.
pub fn haar_unitary<R: Rng>(k: usize, rng: &mut R) -> Array2<C64> {
    if k == 0 {
        return Array2::zeros((0, 0));
    }
    let g = complex_gaussian_matrix(k, k, rng);
    let (mut q, r) = g.qr().expect("QR of a Gaussian matrix");
    for j in 0..k {
        let d = r[[j, j]];
        let phase = if d.norm() > 0.0 {
            d / d.norm()
        } else {
            C64::new(1.0, 0.0)
        };
        let mut col = q.column_mut(j);
        col.mapv_inplace(|z| z * phase);
    }
    q
}

/// Random Lindblad spec: Hermitian H and K complex Gaussian jump operators,
/// all with ħ = 1.
pub fn random_spec<R: Rng>(n: usize, k: usize, rng: &mut R) -> LindbladSpec {
    let h = random_hermitian(n, rng);
    let l_ops = (0..k)
        .map(|_| complex_gaussian_matrix(n, n, rng))
        .collect();
    LindbladSpec::new(h, l_ops, 1.0).expect("randomly generated spec is valid")
}

/// Random spec whose jump operators are all traceless.
pub fn random_traceless_spec<R: Rng>(n: usize, k: usize, rng: &mut R) -> LindbladSpec {
    let h = random_hermitian(n, rng);
    let l_ops = (0..k)
        .map(|_| {
            let g = complex_gaussian_matrix(n, n, rng);
            let shift = trace(&g) / (n as f64);
            &g - &eye(n).mapv(|z| z * shift)
        })
        .collect();
    LindbladSpec::new(h, l_ops, 1.0).expect("randomly generated spec is valid")
}

/// Random symmetry transform for K channels: Haar unitary mixing, shifts
/// β_k drawn uniformly from the unit disk, and b uniform in [−1, 1].
pub fn random_transform<R: Rng>(k: usize, rng: &mut R) -> SymmetryTransform {
    let w = haar_unitary(k, rng);
    let mut beta = Array1::zeros(k);
    for b in beta.iter_mut() {
        let r: f64 = rng.random::<f64>().sqrt();
        let phi: f64 = rng.random::<f64>() * std::f64::consts::TAU;
        *b = C64::new(r * phi.cos(), r * phi.sin());
    }
    let b_shift: f64 = rng.random::<f64>() * 2.0 - 1.0;
    SymmetryTransform::new(Some(w), beta, b_shift).expect("Haar matrix is unitary")
}

/// Random full-rank density matrix GG†/Tr(GG†).
pub fn random_density<R: Rng>(n: usize, rng: &mut R) -> DensityMatrix {
    let g = complex_gaussian_matrix(n, n, rng);
    let w = g.dot(&dagger(&g));
    let norm = trace(&w).re;
    let rho = w.mapv(|z| z / norm);
    DensityMatrix::new(rho).expect("Wishart matrix is a valid state")
}
