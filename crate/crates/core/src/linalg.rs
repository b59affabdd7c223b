//! Dense complex linear-algebra helpers used throughout the crate.
//!
//! Everything here operates on `ndarray::Array2<Complex64>` at desk scale
//! (Hilbert-space dimension N ≤ ~8, superoperators up to N²×N²); no sparse
//! or out-of-core paths.

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eigh, Solve, UPLO};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Complex unit i.
pub(crate) const I: C64 = C64::new(0.0, 1.0);

/// N×N identity matrix.
pub fn eye(n: usize) -> Array2<C64> {
    Array2::eye(n)
}

/// Conjugate transpose A†.
pub fn dagger(a: &Array2<C64>) -> Array2<C64> {
    a.t().mapv(|z| z.conj())
}

/// Matrix trace.
pub fn trace(a: &Array2<C64>) -> C64 {
    a.diag().sum()
}

/// Commutator [A, B] = AB − BA.
pub fn commutator(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
    a.dot(b) - b.dot(a)
}

/// Anticommutator {A, B} = AB + BA.
pub fn anticommutator(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
    a.dot(b) + b.dot(a)
}

/// Frobenius norm ‖A‖_F.
pub fn frob_norm(a: &Array2<C64>) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Frobenius norm of a real matrix.
pub fn frob_norm_real(a: &Array2<f64>) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Euclidean norm of a complex vector.
pub fn vec_norm(v: &Array1<C64>) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// ‖A − A†‖_F, the Hermiticity residual.
pub fn hermiticity_residual(a: &Array2<C64>) -> f64 {
    frob_norm(&(a - &dagger(a)))
}

/// Hermitian part (A + A†)/2.
pub fn hermitian_part(a: &Array2<C64>) -> Array2<C64> {
    (a + &dagger(a)).mapv(|z| 0.5 * z)
}

/// Kronecker product A ⊗ B.
pub fn kron(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    let mut out = Array2::zeros((ar * br, ac * bc));
    for i in 0..ar {
        for j in 0..ac {
            let aij = a[[i, j]];
            if aij == C64::new(0.0, 0.0) {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[[i * br + k, j * bc + l]] = aij * b[[k, l]];
                }
            }
        }
    }
    out
}

/// Eigendecomposition of a Hermitian matrix; eigenvalues ascending.
///
/// Only the lower triangle is referenced, so inputs that are Hermitian up to
/// rounding are handled without symmetrization.
pub fn eigh(a: &Array2<C64>) -> Result<(Array1<f64>, Array2<C64>)> {
    let (vals, vecs) = a.eigh(UPLO::Lower)?;
    Ok((vals, vecs))
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn eigvalsh(a: &Array2<C64>) -> Result<Array1<f64>> {
    Ok(eigh(a)?.0)
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eig_hermitian(a: &Array2<C64>) -> Result<f64> {
    let vals = eigvalsh(a)?;
    vals.first()
        .copied()
        .ok_or_else(|| Error::InvalidDimension("empty matrix has no eigenvalues".into()))
}

/// Eigenvalues of a real symmetric matrix, ascending.
pub fn eigvalsh_real(a: &Array2<f64>) -> Result<Array1<f64>> {
    let complex = a.mapv(|x| C64::new(x, 0.0));
    eigvalsh(&complex)
}

fn one_norm(a: &Array2<C64>) -> f64 {
    let (_, nc) = a.dim();
    (0..nc)
        .map(|j| a.column(j).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

// [13/13] Padé numerator/denominator coefficients.
const PADE13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];
const THETA13: f64 = 4.25;

/// Matrix exponential exp(A) by scaling-and-squaring with a fixed-order
/// [13/13] Padé approximant.
pub fn expm(a: &Array2<C64>) -> Result<Array2<C64>> {
    let (nr, nc) = a.dim();
    if nr != nc {
        return Err(Error::ShapeMismatch(format!(
            "expm requires a square matrix, got {nr}×{nc}"
        )));
    }
    if nr == 0 {
        return Ok(Array2::zeros((0, 0)));
    }

    let norm = one_norm(a);
    let s = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as i32
    } else {
        0
    };
    let scale = C64::new(0.5f64.powi(s), 0.0);
    let a_scaled = a.mapv(|z| z * scale);

    let id = eye(nr);
    let a2 = a_scaled.dot(&a_scaled);
    let a4 = a2.dot(&a2);
    let a6 = a2.dot(&a4);

    let b = |k: usize| C64::new(PADE13[k], 0.0);
    // U = A·(A6·(b13 A6 + b11 A4 + b9 A2) + b7 A6 + b5 A4 + b3 A2 + b1 I)
    let u_inner = a6.dot(&(&a6 * b(13) + &a4 * b(11) + &a2 * b(9)))
        + &a6 * b(7)
        + &a4 * b(5)
        + &a2 * b(3)
        + &id * b(1);
    let u = a_scaled.dot(&u_inner);
    // V = A6·(b12 A6 + b10 A4 + b8 A2) + b6 A6 + b4 A4 + b2 A2 + b0 I
    let v = a6.dot(&(&a6 * b(12) + &a4 * b(10) + &a2 * b(8)))
        + &a6 * b(6)
        + &a4 * b(4)
        + &a2 * b(2)
        + &id * b(0);

    // (V − U) X = (V + U), solved column by column.
    let lhs = &v - &u;
    let rhs = &v + &u;
    let mut result = Array2::zeros((nr, nr));
    let factorized = lhs.factorize()?;
    for j in 0..nr {
        let col = factorized.solve(&rhs.column(j).to_owned())?;
        result.column_mut(j).assign(&col);
    }

    for _ in 0..s {
        result = result.dot(&result);
    }
    Ok(result)
}

use ndarray_linalg::solve::Factorize;

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn kron_against_hand_computed_2x2() {
        let a = array![[c(1.0, 0.0), c(2.0, 0.0)], [c(3.0, 0.0), c(4.0, 0.0)]];
        let b = array![[c(0.0, 1.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, 1.0)]];
        let k = kron(&a, &b);
        assert_eq!(k[[0, 0]], c(0.0, 1.0));
        assert_eq!(k[[1, 1]], c(0.0, 1.0));
        assert_eq!(k[[0, 2]], c(0.0, 2.0));
        assert_eq!(k[[2, 0]], c(0.0, 3.0));
        assert_eq!(k[[3, 3]], c(0.0, 4.0));
        assert_eq!(k.dim(), (4, 4));
    }

    #[test]
    fn dagger_and_hermiticity() {
        let a = array![[c(1.0, 0.0), c(2.0, 3.0)], [c(2.0, -3.0), c(4.0, 0.0)]];
        assert!(hermiticity_residual(&a) < 1e-15);
        let b = array![[c(1.0, 0.0), c(2.0, 3.0)], [c(2.0, 3.0), c(4.0, 0.0)]];
        assert!(hermiticity_residual(&b) > 1.0);
    }

    #[test]
    fn expm_zero_is_identity() {
        let z: Array2<C64> = Array2::zeros((3, 3));
        let e = expm(&z).unwrap();
        assert!(frob_norm(&(&e - &eye(3))) < 1e-15);
    }

    #[test]
    fn expm_diagonal() {
        let a = array![[c(1.0, 2.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-0.5, 1.0)]];
        let e = expm(&a).unwrap();
        let e00 = c(1.0, 2.0).exp();
        let e11 = c(-0.5, 1.0).exp();
        assert!((e[[0, 0]] - e00).norm() < 1e-14);
        assert!((e[[1, 1]] - e11).norm() < 1e-14);
        assert!(e[[0, 1]].norm() < 1e-15);
    }

    #[test]
    fn expm_pauli_rotation() {
        // exp(iθσ₁) = cosθ·I + i sinθ·σ₁
        let theta = 0.731;
        let a = array![[c(0.0, 0.0), c(0.0, theta)], [c(0.0, theta), c(0.0, 0.0)]];
        let e = expm(&a).unwrap();
        let expected = array![
            [c(theta.cos(), 0.0), c(0.0, theta.sin())],
            [c(0.0, theta.sin()), c(theta.cos(), 0.0)]
        ];
        assert!(frob_norm(&(&e - &expected)) < 1e-14);
    }

    #[test]
    fn expm_large_norm_scaling() {
        // exp(A) with ‖A‖ ≫ θ₁₃ exercises the squaring phase: compare
        // against exp(A/2)².
        let a = array![
            [c(3.0, 1.0), c(-7.0, 2.0)],
            [c(4.0, -1.0), c(-2.0, 5.0)]
        ];
        let a_big = a.mapv(|z| z * c(6.0, 0.0));
        let e = expm(&a_big).unwrap();
        let half = a.mapv(|z| z * c(3.0, 0.0));
        let eh = expm(&half).unwrap();
        let e2 = eh.dot(&eh);
        let rel = frob_norm(&(&e - &e2)) / frob_norm(&e);
        assert!(rel < 1e-12, "rel = {rel}");
    }

    #[test]
    fn eigh_known_spectrum() {
        // [[2, -i], [i, 3]] has eigenvalues (5 ± √5)/2.
        let a = array![[c(2.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(3.0, 0.0)]];
        let vals = eigvalsh(&a).unwrap();
        let lo = (5.0 - 5f64.sqrt()) / 2.0;
        let hi = (5.0 + 5f64.sqrt()) / 2.0;
        assert!((vals[0] - lo).abs() < 1e-14);
        assert!((vals[1] - hi).abs() < 1e-14);
    }
}
