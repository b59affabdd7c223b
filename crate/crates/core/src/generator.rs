//! Lindblad generator specifications and their superoperator matrices.
//!
//! A generator dρ/dt = ℒ(ρ) is represented in two equivalent ways:
//!
//! ```text
//! ℒ_U(ρ)  = −(i/ħ)[Ĥ, ρ]
//! ℒ_NU(ρ) = (1/2ħ) Σ_k (2 L̂_k ρ L̂_k† − {L̂_k†L̂_k, ρ})
//! ```
//!
//! and, as an independent construction, through the cartesian split
//! L̂_k = Â_k + iB̂_k into Hermitian parts:
//!
//! ```text
//! ℒ₁(ρ) = −(1/2ħ) Σ_k ([Â_k, [Â_k, ρ]] + [B̂_k, [B̂_k, ρ]])
//! ℒ₂(ρ) = (1/4ħ) Σ_k {[L̂_k, L̂_k†], ρ}
//! ℒ₃(ρ) = (1/2ħ) Σ_k (L̂_k ρ L̂_k† − L̂_k† ρ L̂_k)
//! ```
//!
//! with ℒ_NU = ℒ₁ + ℒ₂ + ℒ₃. Note the 1/(2ħ) prefactor convention: rates
//! quoted in the more common convention (prefactor 1) must be rescaled by
//! the caller.
//!
//! Superoperators are stored as dense N²×N² matrices acting on
//! column-stacked vectorized operators, so vec(AXB) = (Bᵀ⊗A)vec(X).

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};
use crate::linalg::{
    commutator, dagger, eye, frob_norm, hermitian_part, kron, trace, C64, I,
};

/// Relative Hermiticity tolerance for Hamiltonian validation.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// A concrete generator in Lindblad form: dimension N, Hamiltonian Ĥ,
/// jump operators {L̂_k}, and the scale ħ entering the prefactors.
#[derive(Debug, Clone)]
pub struct LindbladSpec {
    h: Array2<C64>,
    l_ops: Vec<Array2<C64>>,
    hbar: f64,
}

impl LindbladSpec {
    /// Validate and build a spec. `h` must be square of dimension ≥ 2 and
    /// Hermitian within `1e−12·max(1, ‖H‖)`; it is symmetrized before
    /// storage. Every jump operator must be N×N. `hbar` must be positive.
    pub fn new(h: Array2<C64>, l_ops: Vec<Array2<C64>>, hbar: f64) -> Result<Self> {
        let (nr, nc) = h.dim();
        if nr != nc {
            return Err(Error::InvalidSpec(format!(
                "Hamiltonian must be square, got {nr}×{nc}"
            )));
        }
        if nr < 2 {
            return Err(Error::InvalidDimension(format!(
                "spec dimension must be ≥ 2, got {nr}"
            )));
        }
        if !(hbar > 0.0 && hbar.is_finite()) {
            return Err(Error::InvalidSpec(format!("hbar must be positive, got {hbar}")));
        }
        if h.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidSpec("Hamiltonian has non-finite entries".into()));
        }
        let defect = frob_norm(&(&h - &dagger(&h)));
        let scale = 1f64.max(frob_norm(&h));
        if defect > HERMITICITY_TOL * scale {
            return Err(Error::InvalidSpec(format!(
                "Hamiltonian is not Hermitian: ‖H − H†‖ = {defect:.3e} exceeds {:.3e}",
                HERMITICITY_TOL * scale
            )));
        }
        for (k, l) in l_ops.iter().enumerate() {
            if l.dim() != (nr, nr) {
                return Err(Error::InvalidSpec(format!(
                    "jump operator {k} has shape {:?}, expected ({nr}, {nr})",
                    l.dim()
                )));
            }
            if l.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::InvalidSpec(format!(
                    "jump operator {k} has non-finite entries"
                )));
            }
        }
        Ok(LindbladSpec {
            h: hermitian_part(&h),
            l_ops,
            hbar,
        })
    }

    /// Hilbert-space dimension N.
    pub fn dim(&self) -> usize {
        self.h.nrows()
    }

    /// The Hamiltonian Ĥ.
    pub fn hamiltonian(&self) -> &Array2<C64> {
        &self.h
    }

    /// The jump operators {L̂_k}.
    pub fn lindblad_ops(&self) -> &[Array2<C64>] {
        &self.l_ops
    }

    /// Number of jump operators K.
    pub fn num_channels(&self) -> usize {
        self.l_ops.len()
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Same jump operators with a replaced Hamiltonian.
    pub fn with_hamiltonian(&self, h: Array2<C64>) -> Result<Self> {
        LindbladSpec::new(h, self.l_ops.clone(), self.hbar)
    }
}

/// An N²×N² matrix acting on column-stacked vectorized operators.
#[derive(Debug, Clone)]
pub struct Superoperator {
    n: usize,
    m: Array2<C64>,
}

impl Superoperator {
    pub fn new(n: usize, m: Array2<C64>) -> Result<Self> {
        if m.dim() != (n * n, n * n) {
            return Err(Error::ShapeMismatch(format!(
                "superoperator for dimension {n} must be {0}×{0}, got {1:?}",
                n * n,
                m.dim()
            )));
        }
        Ok(Superoperator { n, m })
    }

    pub fn zero(n: usize) -> Self {
        Superoperator {
            n,
            m: Array2::zeros((n * n, n * n)),
        }
    }

    /// Underlying Hilbert-space dimension N.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Array2<C64> {
        &self.m
    }

    /// Apply to an operator: devectorize(M·vec(X)).
    pub fn apply(&self, x: &Array2<C64>) -> Result<Array2<C64>> {
        if x.dim() != (self.n, self.n) {
            return Err(Error::ShapeMismatch(format!(
                "operator has shape {:?}, superoperator expects ({n}, {n})",
                x.dim(),
                n = self.n
            )));
        }
        devectorize(&self.m.dot(&vectorize(x)))
    }

    /// Hilbert–Schmidt adjoint: the generator of the dual (Heisenberg)
    /// evolution, ⟨S̄(A), B⟩ = ⟨A, S(B)⟩ with ⟨B, A⟩ = Tr(B†A). In the
    /// column-stacking representation this is the conjugate transpose.
    pub fn hs_adjoint(&self) -> Superoperator {
        Superoperator {
            n: self.n,
            m: dagger(&self.m),
        }
    }

    /// Frobenius norm of the matrix representation.
    pub fn norm(&self) -> f64 {
        frob_norm(&self.m)
    }

    pub fn scaled(&self, factor: C64) -> Superoperator {
        Superoperator {
            n: self.n,
            m: self.m.mapv(|z| z * factor),
        }
    }
}

impl std::ops::Add for &Superoperator {
    type Output = Superoperator;
    fn add(self, rhs: &Superoperator) -> Superoperator {
        assert_eq!(self.n, rhs.n, "superoperator dimension mismatch");
        Superoperator {
            n: self.n,
            m: &self.m + &rhs.m,
        }
    }
}

impl std::ops::Sub for &Superoperator {
    type Output = Superoperator;
    fn sub(self, rhs: &Superoperator) -> Superoperator {
        assert_eq!(self.n, rhs.n, "superoperator dimension mismatch");
        Superoperator {
            n: self.n,
            m: &self.m - &rhs.m,
        }
    }
}

/// Column-stacking vectorization: vec(X)[i + N·j] = X[i, j].
pub fn vectorize(x: &Array2<C64>) -> Array1<C64> {
    let (nr, nc) = x.dim();
    let mut v = Array1::zeros(nr * nc);
    for j in 0..nc {
        for i in 0..nr {
            v[j * nr + i] = x[[i, j]];
        }
    }
    v
}

/// Inverse of [`vectorize`]; the length must be a perfect square.
pub fn devectorize(v: &Array1<C64>) -> Result<Array2<C64>> {
    let len = v.len();
    let n = (len as f64).sqrt().round() as usize;
    if n * n != len {
        return Err(Error::ShapeMismatch(format!(
            "vector of length {len} is not a vectorized square matrix"
        )));
    }
    let mut x = Array2::zeros((n, n));
    for j in 0..n {
        for i in 0..n {
            x[[i, j]] = v[j * n + i];
        }
    }
    Ok(x)
}

/// Superoperator of left multiplication X ↦ AX, i.e. 𝟙 ⊗ A.
pub fn left_mult(a: &Array2<C64>) -> Array2<C64> {
    kron(&eye(a.nrows()), a)
}

/// Superoperator of right multiplication X ↦ XB, i.e. Bᵀ ⊗ 𝟙.
pub fn right_mult(b: &Array2<C64>) -> Array2<C64> {
    kron(&b.t().to_owned(), &eye(b.nrows()))
}

/// Superoperator of the sandwich X ↦ AXB, i.e. Bᵀ ⊗ A.
pub fn sandwich(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
    kron(&b.t().to_owned(), a)
}

/// Superoperator of X ↦ [H, X].
pub fn commutator_super(h: &Array2<C64>) -> Array2<C64> {
    left_mult(h) - right_mult(h)
}

/// Superoperator of X ↦ {A, X}.
pub fn anticommutator_super(a: &Array2<C64>) -> Array2<C64> {
    left_mult(a) + right_mult(a)
}

/// Weighted sum of sandwich superoperators, Σ_ij w_ij (T_jᵀ ⊗ T_i),
/// i.e. the matrix of X ↦ Σ_ij w_ij T_i X T_j.
pub fn kron_sandwich_sum(weights: &Array2<C64>, t: &[Array2<C64>]) -> Array2<C64> {
    let n = t.first().map(|m| m.nrows()).unwrap_or(0);
    let m = t.len();
    let mut acc = Array2::zeros((n * n, n * n));
    for i in 0..m {
        for j in 0..m {
            let wij = weights[[i, j]];
            if wij.norm() == 0.0 {
                continue;
            }
            acc = acc + sandwich(&t[i], &t[j]).mapv(|z| z * wij);
        }
    }
    acc
}

/// Unitary and non-unitary parts of the Liouvillian, as separate matrices.
pub fn liouvillian_split(spec: &LindbladSpec) -> (Superoperator, Superoperator) {
    let n = spec.dim();
    let hbar = spec.hbar();
    let m_u = commutator_super(spec.hamiltonian()).mapv(|z| z * (-I / hbar));

    let mut m_nu: Array2<C64> = Array2::zeros((n * n, n * n));
    for l in spec.lindblad_ops() {
        let l_dag = dagger(l);
        let ldl = l_dag.dot(l);
        m_nu = m_nu + sandwich(l, &l_dag).mapv(|z| z * 2.0) - anticommutator_super(&ldl);
    }
    m_nu.mapv_inplace(|z| z / (2.0 * hbar));

    (
        Superoperator { n, m: m_u },
        Superoperator { n, m: m_nu },
    )
}

/// The full Liouvillian matrix of a spec,
/// ℒ = −(i/ħ)[Ĥ, ·] + (1/2ħ)Σ_k (2L̂_k·L̂_k† − {L̂_k†L̂_k, ·}).
pub fn liouvillian_direct(spec: &LindbladSpec) -> Superoperator {
    let (u, nu) = liouvillian_split(spec);
    &u + &nu
}

/// Cartesian decomposition of a generator: the Hermitian operator pairs
/// (Â_k, B̂_k) with L̂_k = Â_k + iB̂_k — the quantum Langevin force pairs
/// (√ħÂ_k, √ħB̂_k) — and the three superoperators ℒ₁, ℒ₂, ℒ₃.
#[derive(Debug, Clone)]
pub struct CartesianParts {
    pub a_ops: Vec<Array2<C64>>,
    pub b_ops: Vec<Array2<C64>>,
    pub l1: Superoperator,
    pub l2: Superoperator,
    pub l3: Superoperator,
}

/// Build the cartesian-split superoperators. Serves as an independent
/// construction of ℒ_NU: the sum ℒ₁+ℒ₂+ℒ₃ reproduces the direct form.
pub fn cartesian_parts(spec: &LindbladSpec) -> CartesianParts {
    let n = spec.dim();
    let hbar = spec.hbar();
    let half = C64::new(0.5, 0.0);

    let mut a_ops = Vec::with_capacity(spec.num_channels());
    let mut b_ops = Vec::with_capacity(spec.num_channels());
    let mut m1: Array2<C64> = Array2::zeros((n * n, n * n));
    let mut m2: Array2<C64> = Array2::zeros((n * n, n * n));
    let mut m3: Array2<C64> = Array2::zeros((n * n, n * n));

    for l in spec.lindblad_ops() {
        let l_dag = dagger(l);
        let a = (l + &l_dag).mapv(|z| z * half);
        let b = (l - &l_dag).mapv(|z| z * half / I);

        let ca = commutator_super(&a);
        let cb = commutator_super(&b);
        m1 = m1 - ca.dot(&ca) - cb.dot(&cb);

        m2 = m2 + anticommutator_super(&commutator(l, &l_dag)).mapv(|z| z * half);

        m3 = m3 + sandwich(l, &l_dag) - sandwich(&l_dag, l);

        a_ops.push(a);
        b_ops.push(b);
    }
    let pref = C64::new(1.0 / (2.0 * hbar), 0.0);
    CartesianParts {
        a_ops,
        b_ops,
        l1: Superoperator { n, m: m1.mapv(|z| z * pref) },
        l2: Superoperator { n, m: m2.mapv(|z| z * pref) },
        l3: Superoperator { n, m: m3.mapv(|z| z * pref) },
    }
}

/// Residual of the trace-preservation property: max over the supplied
/// operators of |Tr ℒ(X)| / ‖X‖.
pub fn trace_preservation_residual(s: &Superoperator, samples: &[Array2<C64>]) -> f64 {
    samples
        .iter()
        .map(|x| {
            let image = s.apply(x).expect("shape-conforming sample");
            trace(&image).norm() / frob_norm(x).max(1e-300)
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{expm, vec_norm};
    use crate::random::{complex_gaussian_matrix, random_hermitian, random_spec};
    use ndarray::array;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn sigma_minus() -> Array2<C64> {
        array![[c(0.0, 0.0), c(0.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]
    }

    #[test]
    fn vectorize_identity_column_stacking() {
        let v = vectorize(&eye(2));
        assert_eq!(v.to_vec(), vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
    }

    #[test]
    fn devectorize_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = complex_gaussian_matrix(3, 3, &mut rng);
        let back = devectorize(&vectorize(&x)).unwrap();
        assert!(frob_norm(&(&back - &x)) < 1e-15);
    }

    #[test]
    fn kron_identity_vec_of_product() {
        // vec(AXB) = (Bᵀ⊗A)vec(X) on random 2×2 triples.
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..20 {
            let a = complex_gaussian_matrix(2, 2, &mut rng);
            let x = complex_gaussian_matrix(2, 2, &mut rng);
            let b = complex_gaussian_matrix(2, 2, &mut rng);
            let lhs = vectorize(&a.dot(&x).dot(&b));
            let rhs = sandwich(&a, &b).dot(&vectorize(&x));
            assert!(vec_norm(&(&lhs - &rhs)) < 1e-13);
        }
    }

    #[test]
    fn unitary_only_generator() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let h = random_hermitian(3, &mut rng);
        let spec = LindbladSpec::new(h.clone(), vec![], 1.0).unwrap();
        let s = liouvillian_direct(&spec);
        let expected = commutator_super(&h).mapv(|z| z * (-I));
        assert!(frob_norm(&(s.matrix() - &expected)) < 1e-14);

        // exp(tM) preserves purity for a pure state.
        let psi = array![[c(1.0, 0.0)], [c(0.0, 0.0)], [c(0.0, 0.0)]];
        let rho = psi.dot(&dagger(&psi));
        let u = expm(&s.matrix().mapv(|z| z * 0.37)).unwrap();
        let rho_t = devectorize(&u.dot(&vectorize(&rho))).unwrap();
        let purity = trace(&rho_t.dot(&rho_t)).re;
        assert!((purity - 1.0).abs() < 1e-12);
    }

    #[test]
    fn trace_preservation_random_specs() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for n in 2..=5 {
            let spec = random_spec(n, 3, &mut rng);
            let s = liouvillian_direct(&spec);
            let samples: Vec<_> = (0..100)
                .map(|_| complex_gaussian_matrix(n, n, &mut rng))
                .collect();
            assert!(trace_preservation_residual(&s, &samples) <= 1e-12);
        }
    }

    #[test]
    fn hermiticity_preservation() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 2..=5 {
            let spec = random_spec(n, 2, &mut rng);
            let s = liouvillian_direct(&spec);
            for _ in 0..10 {
                let rho = random_hermitian(n, &mut rng);
                let image = s.apply(&rho).unwrap();
                assert!(frob_norm(&(&image - &dagger(&image))) < 1e-12);
            }
        }
    }

    #[test]
    fn qubit_damping_rates_fix_prefactor_convention() {
        // L̂ = √γσ₋, H = 0, rate convention from the 1/(2ħ) prefactor:
        // excited population decays at γ/ħ, coherences at γ/(2ħ).
        let gamma: f64 = 0.83;
        let hbar = 1.7;
        let l = sigma_minus().mapv(|z| z * c(gamma.sqrt(), 0.0));
        let spec = LindbladSpec::new(Array2::zeros((2, 2)), vec![l], hbar).unwrap();
        let s = liouvillian_direct(&spec);

        let rho0 = array![
            [c(0.6, 0.0), c(0.2, 0.1)],
            [c(0.2, -0.1), c(0.4, 0.0)]
        ];
        let t = 0.9;
        let u = expm(&s.matrix().mapv(|z| z * t)).unwrap();
        let rho_t = devectorize(&u.dot(&vectorize(&rho0))).unwrap();

        let pop = 0.6 * (-gamma * t / hbar).exp();
        let coh = c(0.2, 0.1) * (-gamma * t / (2.0 * hbar)).exp();
        assert!((rho_t[[0, 0]] - c(pop, 0.0)).norm() < 1e-13);
        assert!((rho_t[[0, 1]] - coh).norm() < 1e-13);
        // ⟨σ₃⟩ → −1: population settles in the lower state.
        assert!((rho_t[[1, 1]].re + rho_t[[0, 0]].re - 1.0).abs() < 1e-13);
    }

    #[test]
    fn cartesian_split_of_sigma_minus() {
        // σ₋ = (σ₁ − iσ₂)/2 → Â = σ₁/2, B̂ = −σ₂/2.
        let spec = LindbladSpec::new(Array2::zeros((2, 2)), vec![sigma_minus()], 1.0).unwrap();
        let parts = cartesian_parts(&spec);
        let sigma1 = array![[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]];
        let sigma2 = array![[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]];
        assert!(frob_norm(&(&parts.a_ops[0] - &sigma1.mapv(|z| z * 0.5))) < 1e-15);
        assert!(frob_norm(&(&parts.b_ops[0] + &sigma2.mapv(|z| z * 0.5))) < 1e-15);
    }

    #[test]
    fn hermitian_jump_kills_l3() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let l = random_hermitian(3, &mut rng);
        let spec = LindbladSpec::new(Array2::zeros((3, 3)), vec![l], 1.0).unwrap();
        let parts = cartesian_parts(&spec);
        assert!(parts.l3.norm() < 1e-13);
        for b in &parts.b_ops {
            assert!(frob_norm(b) < 1e-13);
        }
    }

    #[test]
    fn cartesian_oracle_matches_direct_nonunitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 2..=5 {
            for _ in 0..10 {
                let spec = random_spec(n, 3, &mut rng);
                let (_, m_nu) = liouvillian_split(&spec);
                let parts = cartesian_parts(&spec);
                let sum = &(&parts.l1 + &parts.l2) + &parts.l3;
                let rel = frob_norm(&(sum.matrix() - m_nu.matrix())) / m_nu.norm();
                assert!(rel <= 1e-12, "N={n} rel={rel}");

                // L̂_k = Â_k + iB̂_k.
                for ((a, b), l) in parts
                    .a_ops
                    .iter()
                    .zip(&parts.b_ops)
                    .zip(spec.lindblad_ops())
                {
                    let rebuilt = a + &b.mapv(|z| z * I);
                    assert!(frob_norm(&(&rebuilt - l)) <= 1e-13 * 1f64.max(frob_norm(l)));
                }
            }
        }
    }

    #[test]
    fn adjointness_of_cartesian_parts() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for n in 2..=4 {
            let spec = random_spec(n, 3, &mut rng);
            let parts = cartesian_parts(&spec);
            let d1 = frob_norm(&(parts.l1.hs_adjoint().matrix() - parts.l1.matrix()));
            let d2 = frob_norm(&(parts.l2.hs_adjoint().matrix() - parts.l2.matrix()));
            let d3 = frob_norm(&(parts.l3.hs_adjoint().matrix() + parts.l3.matrix()));
            let scale = 1f64.max(parts.l1.norm());
            assert!(d1 <= 1e-12 * scale);
            assert!(d2 <= 1e-12 * scale);
            assert!(d3 <= 1e-12 * scale);
        }
    }

    #[test]
    fn hs_adjoint_flips_unitary_part() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let h = random_hermitian(4, &mut rng);
        let spec = LindbladSpec::new(h, vec![], 1.0).unwrap();
        let s = liouvillian_direct(&spec);
        let flipped = s.hs_adjoint();
        assert!(frob_norm(&(flipped.matrix() + s.matrix())) < 1e-13);
    }

    #[test]
    fn hs_adjoint_pairing_identity() {
        // ⟨S̄(A), B⟩ = ⟨A, S(B)⟩ on random operators.
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let spec = random_spec(3, 2, &mut rng);
        let s = liouvillian_direct(&spec);
        let sbar = s.hs_adjoint();
        for _ in 0..10 {
            let a = complex_gaussian_matrix(3, 3, &mut rng);
            let b = complex_gaussian_matrix(3, 3, &mut rng);
            let lhs = trace(&dagger(&sbar.apply(&a).unwrap()).dot(&b));
            let rhs = trace(&dagger(&a).dot(&s.apply(&b).unwrap()));
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn apply_zero_and_linearity() {
        let mut rng = ChaCha8Rng::seed_from_u64(15);
        let z = Superoperator::zero(3);
        let rho = random_hermitian(3, &mut rng);
        assert!(frob_norm(&z.apply(&rho).unwrap()) == 0.0);

        let spec = random_spec(3, 2, &mut rng);
        let s = liouvillian_direct(&spec);
        let r1 = complex_gaussian_matrix(3, 3, &mut rng);
        let r2 = complex_gaussian_matrix(3, 3, &mut rng);
        let (a, b) = (c(0.7, -0.3), c(-1.2, 0.4));
        let lhs = s.apply(&(r1.mapv(|z| z * a) + r2.mapv(|z| z * b))).unwrap();
        let rhs = s.apply(&r1).unwrap().mapv(|z| z * a) + s.apply(&r2).unwrap().mapv(|z| z * b);
        assert!(frob_norm(&(&lhs - &rhs)) < 1e-13);
    }

    #[test]
    fn apply_unitary_part_is_commutator() {
        let mut rng = ChaCha8Rng::seed_from_u64(16);
        let h = random_hermitian(3, &mut rng);
        let spec = LindbladSpec::new(h.clone(), vec![], 2.0).unwrap();
        let (u, _) = liouvillian_split(&spec);
        let rho = random_hermitian(3, &mut rng);
        let expected = commutator(&h, &rho).mapv(|z| z * (-I / 2.0));
        assert!(frob_norm(&(&u.apply(&rho).unwrap() - &expected)) < 1e-13);
    }

    #[test]
    fn rejects_non_hermitian_hamiltonian() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let g = complex_gaussian_matrix(3, 3, &mut rng);
        assert!(matches!(
            LindbladSpec::new(g, vec![], 1.0),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn rejects_bad_jump_shape() {
        let l: Array2<C64> = Array2::zeros((3, 3));
        assert!(matches!(
            LindbladSpec::new(Array2::zeros((2, 2)), vec![l], 1.0),
            Err(Error::InvalidSpec(_))
        ));
    }
}
