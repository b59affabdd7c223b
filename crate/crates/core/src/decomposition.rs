//! Invariant fluctuation-dissipation form of a Lindblad generator.
//!
//! Expanding the jump operators in the su(N) operator basis,
//! L̂_k = Σ_ν α_ν^(k) T̂_ν, the positive semidefinite Hermitian matrix
//! Γ̃ = 𝔸𝔸† (𝔸 the N²×K matrix of expansion coefficients) splits into
//! real blocks
//!
//!   ħ·Re Γ̃ = [[D̃₀₀, 𝐃ᵀ], [𝐃, 𝔻]],   Im Γ̃ = [[0, 𝐂ᵀ], [−𝐂, ℂ]],
//!
//! with 𝔻 symmetric (diffusion) and ℂ antisymmetric (dissipation). These
//! two blocks, together with the unique internal Hamiltonian
//! Ĥ′ = Ĥ + Ĥ_C, determine the generator completely:
//!
//!   ℒ = ℒ′_U + ℒ₁ + ℒ₂ + ℒ₃′
//!
//!   ℒ′_U(ρ) = −(i/ħ)[Ĥ′, ρ]
//!   ℒ₁(ρ)   = −(1/2ħ²) Σ_ij 𝔻_ij [T̂_i, [T̂_j, ρ]]        (fluctuation)
//!   ℒ₂(ρ)   = (1/2ħ) Σ_l tr(iℂ𝕗ˡ) {T̂_l, ρ}               (dissipation)
//!   ℒ₃′(ρ)  = (1/ħ) Σ_ij iℂ_ij T̂_i ρ T̂_j                  (dissipation)
//!
//! D̃₀₀ and 𝐃 never enter: the evolution does not depend on them.
//! Wherever two algebraically equivalent routes exist (the two ℒ₂ forms,
//! the two Ĥ_C formulas) both are evaluated and cross-checked.

use ndarray::{Array1, Array2};

use crate::basis::SuNBasis;
use crate::error::{Error, Result};
use crate::generator::{
    anticommutator_super, commutator_super, kron_sandwich_sum, liouvillian_direct, LindbladSpec,
    Superoperator,
};
use crate::linalg::{dagger, eigvalsh, eye, frob_norm, frob_norm_real, trace, C64, I};

/// Agreement required between algebraically equivalent routes.
pub const CROSS_CHECK_TOL: f64 = 1e-12;
/// Relative residual beyond which a decomposition fails to reconstruct the
/// direct Liouvillian.
pub const RECONSTRUCTION_TOL: f64 = 1e-10;
/// Eigenvalues above −PSD_SLACK·scale count as nonnegative: Γ̃ = 𝔸𝔸† is PSD
/// up to rounding, and the slack guards eigensolver noise.
pub const PSD_SLACK: f64 = 1e-11;
/// Default classification cutoff, scaled by the magnitude of the blocks.
pub const CLASSIFY_TOL: f64 = 1e-10;

/// N²×K matrix whose k-th column holds the expansion coefficients of L̂_k.
#[derive(Debug, Clone)]
pub struct CoefficientMatrix {
    a: Array2<C64>,
}

impl CoefficientMatrix {
    pub fn matrix(&self) -> &Array2<C64> {
        &self.a
    }

    pub fn num_channels(&self) -> usize {
        self.a.ncols()
    }
}

/// Expand every jump operator of `spec` in `basis`. The reconstruction
/// Σ_ν α_ν T̂_ν = L̂_k is verified to 1e−12 for each column.
pub fn coefficient_matrix(spec: &LindbladSpec, basis: &SuNBasis) -> Result<CoefficientMatrix> {
    if spec.dim() != basis.dim() {
        return Err(Error::ShapeMismatch(format!(
            "spec dimension {} does not match basis dimension {}",
            spec.dim(),
            basis.dim()
        )));
    }
    let n2 = basis.dim() * basis.dim();
    let k = spec.num_channels();
    let mut a = Array2::zeros((n2, k));
    for (col, l) in spec.lindblad_ops().iter().enumerate() {
        let alpha = basis.expand(l)?;
        let back = basis.reconstruct(&alpha)?;
        let residual = frob_norm(&(&back - l));
        if residual > 1e-12 * 1f64.max(frob_norm(l)) {
            return Err(Error::InternalConsistency(format!(
                "basis expansion of jump operator {col} fails to reconstruct: residual {residual:.3e}"
            )));
        }
        for nu in 0..n2 {
            a[[nu, col]] = alpha[nu];
        }
    }
    Ok(CoefficientMatrix { a })
}

/// Γ̃ = 𝔸𝔸† and its block split.
#[derive(Debug, Clone)]
pub struct GammaBlocks {
    gamma: Array2<C64>,
    d00: f64,
    dvec: Array1<f64>,
    cvec: Array1<f64>,
    dblock: Array2<f64>,
    cblock: Array2<f64>,
    hbar: f64,
}

impl GammaBlocks {
    /// Γ̃ itself (N²×N², Hermitian).
    pub fn gamma(&self) -> &Array2<C64> {
        &self.gamma
    }

    /// D̃₀₀ = ħ Σ_k |α₀^(k)|².
    pub fn d00(&self) -> f64 {
        self.d00
    }

    /// The border vector 𝐃 of ħ·Re Γ̃.
    pub fn dvec(&self) -> &Array1<f64> {
        &self.dvec
    }

    /// The border vector 𝐂 of Im Γ̃.
    pub fn cvec(&self) -> &Array1<f64> {
        &self.cvec
    }

    /// Diffusion matrix 𝔻 (real symmetric).
    pub fn dblock(&self) -> &Array2<f64> {
        &self.dblock
    }

    /// Dissipation matrix ℂ (real antisymmetric).
    pub fn cblock(&self) -> &Array2<f64> {
        &self.cblock
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Algebra dimension N²−1 of the traceless sector.
    pub fn algebra_dim(&self) -> usize {
        self.dblock.nrows()
    }

    /// The Hermitian matrix 𝔻 + iħℂ — the lower-right principal block of
    /// ħΓ̃, whose positive semidefiniteness certifies realizability.
    pub fn positivity_block(&self) -> Array2<C64> {
        let m = self.algebra_dim();
        let mut block = Array2::zeros((m, m));
        for i in 0..m {
            for j in 0..m {
                block[[i, j]] = C64::new(self.dblock[[i, j]], self.hbar * self.cblock[[i, j]]);
            }
        }
        block
    }

    /// Blocks with every sector replaced by its transform under a basis
    /// change, keeping D̃₀₀ and ħ and reassembling Γ̃ from the new sectors.
    pub(crate) fn rebuild(
        old: &GammaBlocks,
        dblock: Array2<f64>,
        cblock: Array2<f64>,
        dvec: Array1<f64>,
        cvec: Array1<f64>,
    ) -> Result<Self> {
        let m = old.algebra_dim();
        if dblock.dim() != (m, m) || cblock.dim() != (m, m) || dvec.len() != m || cvec.len() != m {
            return Err(Error::ShapeMismatch(
                "rebuilt sectors must keep the algebra dimension".into(),
            ));
        }
        let hbar = old.hbar;
        let mut gamma = Array2::zeros((m + 1, m + 1));
        gamma[[0, 0]] = C64::new(old.d00 / hbar, 0.0);
        for i in 0..m {
            gamma[[0, i + 1]] = C64::new(dvec[i] / hbar, cvec[i]);
            gamma[[i + 1, 0]] = C64::new(dvec[i] / hbar, -cvec[i]);
            for j in 0..m {
                gamma[[i + 1, j + 1]] = C64::new(dblock[[i, j]] / hbar, cblock[[i, j]]);
            }
        }
        Ok(GammaBlocks {
            gamma,
            d00: old.d00,
            dvec,
            cvec,
            dblock,
            cblock,
            hbar,
        })
    }

    /// Assemble blocks directly from a diffusion and a dissipation matrix,
    /// without any generating set of jump operators. The border sectors are
    /// set to zero. Realizability (𝔻 + iħℂ ⪰ 0) is *not* assumed here;
    /// check it with [`positivity_report`].
    pub fn from_blocks(dblock: Array2<f64>, cblock: Array2<f64>, hbar: f64) -> Result<Self> {
        let m = dblock.nrows();
        if dblock.dim() != (m, m) || cblock.dim() != (m, m) {
            return Err(Error::ShapeMismatch(format!(
                "blocks must be square and equal-sized, got {:?} and {:?}",
                dblock.dim(),
                cblock.dim()
            )));
        }
        if !(hbar > 0.0 && hbar.is_finite()) {
            return Err(Error::InvalidSpec(format!("hbar must be positive, got {hbar}")));
        }
        let sym_defect = frob_norm_real(&(&dblock - &dblock.t()));
        if sym_defect > 1e-12 * 1f64.max(frob_norm_real(&dblock)) {
            return Err(Error::InvalidSpec(format!(
                "diffusion matrix must be symmetric; defect {sym_defect:.3e}"
            )));
        }
        let antisym_defect = frob_norm_real(&(&cblock + &cblock.t()));
        if antisym_defect > 1e-12 * 1f64.max(frob_norm_real(&cblock)) {
            return Err(Error::InvalidSpec(format!(
                "dissipation matrix must be antisymmetric; defect {antisym_defect:.3e}"
            )));
        }
        let mut gamma = Array2::zeros((m + 1, m + 1));
        for i in 0..m {
            for j in 0..m {
                gamma[[i + 1, j + 1]] = C64::new(dblock[[i, j]] / hbar, cblock[[i, j]]);
            }
        }
        Ok(GammaBlocks {
            gamma,
            d00: 0.0,
            dvec: Array1::zeros(m),
            cvec: Array1::zeros(m),
            dblock,
            cblock,
            hbar,
        })
    }
}

/// Γ̃ = 𝔸𝔸†, D̃ = ħ·Re Γ̃, C̃ = Im Γ̃, split per the block structure.
pub fn gamma_blocks(coeffs: &CoefficientMatrix, hbar: f64) -> GammaBlocks {
    let a = coeffs.matrix();
    let gamma = a.dot(&dagger(a));
    let n2 = gamma.nrows();
    let m = n2 - 1;

    let d00 = hbar * gamma[[0, 0]].re;
    let mut dvec = Array1::zeros(m);
    let mut cvec = Array1::zeros(m);
    for i in 0..m {
        dvec[i] = hbar * gamma[[0, i + 1]].re;
        cvec[i] = gamma[[0, i + 1]].im;
    }
    let mut dblock = Array2::zeros((m, m));
    let mut cblock = Array2::zeros((m, m));
    for i in 0..m {
        for j in 0..m {
            dblock[[i, j]] = hbar * gamma[[i + 1, j + 1]].re;
            cblock[[i, j]] = gamma[[i + 1, j + 1]].im;
        }
    }
    GammaBlocks {
        gamma,
        d00,
        dvec,
        cvec,
        dblock,
        cblock,
        hbar,
    }
}

/// The Hamiltonian Ĥ_C induced by the trace components of the jump
/// operators, computed both from the 𝐂 border vector,
/// Ĥ_C = √(2/N) Σ_i (𝐂)_i T̂_i, and from the trace formula
/// −(1/2iN) Σ_k (Tr(L̂_k)* L̂_k − Tr(L̂_k) L̂_k†). The two routes must agree
/// to 1e−12; the 𝐂-vector form is returned.
pub fn hamiltonian_hc(
    spec: &LindbladSpec,
    blocks: &GammaBlocks,
    basis: &SuNBasis,
) -> Result<Array2<C64>> {
    let n = basis.dim();
    let m = basis.algebra_dim();
    if blocks.algebra_dim() != m {
        return Err(Error::ShapeMismatch(format!(
            "blocks have algebra dimension {}, basis has {m}",
            blocks.algebra_dim()
        )));
    }
    let pref = (2.0 / n as f64).sqrt();
    let mut from_cvec: Array2<C64> = Array2::zeros((n, n));
    for i in 0..m {
        from_cvec = from_cvec + basis.traceless()[i].mapv(|z| z * (pref * blocks.cvec()[i]));
    }

    let mut from_traces: Array2<C64> = Array2::zeros((n, n));
    for l in spec.lindblad_ops() {
        let tr = trace(l);
        from_traces = from_traces + l.mapv(|z| z * tr.conj()) - dagger(l).mapv(|z| z * tr);
    }
    let from_traces = from_traces.mapv(|z| z * (-1.0 / (2.0 * I * n as f64)));

    let diff = frob_norm(&(&from_cvec - &from_traces));
    let scale = 1f64.max(frob_norm(&from_cvec));
    if diff > CROSS_CHECK_TOL * scale {
        return Err(Error::InternalConsistency(format!(
            "the two routes to the trace-induced Hamiltonian disagree by {diff:.3e}"
        )));
    }
    Ok(from_cvec)
}

/// The superoperators generated by the diffusion and dissipation blocks.
#[derive(Debug, Clone)]
pub struct FdSuperoperators {
    /// ℒ₁, the fluctuation part (double commutators weighted by 𝔻).
    pub l1: Superoperator,
    /// ℒ₂, the anticommutator part of the dissipation.
    pub l2: Superoperator,
    /// ℒ₃′, the sandwich part of the dissipation.
    pub l3p: Superoperator,
}

/// tr(iℂ𝕗ˡ) for every l (real by antisymmetry of ℂ and f).
pub fn dissipation_traces(cblock: &Array2<f64>, basis: &SuNBasis) -> Vec<f64> {
    let m = basis.algebra_dim();
    let f = basis.f();
    let mut out = vec![0.0; m];
    for l in 0..m {
        let mut acc = 0.0;
        for i in 0..m {
            for j in 0..m {
                acc -= cblock[[i, j]] * f[[i, j, l]];
            }
        }
        out[l] = acc;
    }
    out
}

fn weighted_product_sum(w: &Array2<C64>, t: &[Array2<C64>]) -> Array2<C64> {
    let n = t[0].nrows();
    let m = t.len();
    let mut acc = Array2::zeros((n, n));
    for i in 0..m {
        for j in 0..m {
            let wij = w[[i, j]];
            if wij.norm() == 0.0 {
                continue;
            }
            acc = acc + t[i].dot(&t[j]).mapv(|z| z * wij);
        }
    }
    acc
}

/// Build ℒ₁, ℒ₂, ℒ₃′ from the blocks. ℒ₂ is computed along both routes —
/// the anticommutator of Σ iℂ_ij T̂_iT̂_j and the tr(iℂ𝕗ˡ) contraction —
/// and the two must agree to 1e−12 (a mismatch signals a
/// structure-constant bug).
pub fn fd_superoperators(blocks: &GammaBlocks, basis: &SuNBasis) -> Result<FdSuperoperators> {
    let n = basis.dim();
    let m = basis.algebra_dim();
    if blocks.algebra_dim() != m {
        return Err(Error::ShapeMismatch(format!(
            "blocks have algebra dimension {}, basis has {m}",
            blocks.algebra_dim()
        )));
    }
    let hbar = blocks.hbar();
    let t = basis.traceless();

    let d_c = blocks.dblock().mapv(|x| C64::new(x, 0.0));
    let ic = blocks.cblock().mapv(|x| C64::new(0.0, x));

    // ℒ₁ = −(1/2ħ²) Σ 𝔻_ij [T_i,[T_j,·]]
    //    = −(1/2ħ²) (𝟙⊗S + Sᵀ⊗𝟙 − 2 Σ 𝔻_ij T_jᵀ⊗T_i),  S = Σ 𝔻_ij T_iT_j.
    let s_d = weighted_product_sum(&d_c, t);
    let k_d = kron_sandwich_sum(&d_c, t);
    let m_l1 = (anticommutator_super(&s_d) - k_d.mapv(|z| z * 2.0))
        .mapv(|z| z * C64::new(-1.0 / (2.0 * hbar * hbar), 0.0));

    // ℒ₂ route one: (1/2ħ) {G, ·} with G = Σ iℂ_ij T_iT_j.
    let g = weighted_product_sum(&ic, t);
    let m_l2_a = anticommutator_super(&g).mapv(|z| z * C64::new(1.0 / (2.0 * hbar), 0.0));

    // ℒ₂ route two: (1/2ħ) Σ_l tr(iℂ𝕗ˡ) {T_l, ·}.
    let traces = dissipation_traces(blocks.cblock(), basis);
    let mut g2: Array2<C64> = Array2::zeros((n, n));
    for l in 0..m {
        g2 = g2 + t[l].mapv(|z| z * traces[l]);
    }
    let m_l2_b = anticommutator_super(&g2).mapv(|z| z * C64::new(1.0 / (2.0 * hbar), 0.0));

    let diff = frob_norm(&(&m_l2_a - &m_l2_b));
    let scale = 1f64.max(frob_norm(&m_l2_a));
    if diff > CROSS_CHECK_TOL * scale {
        return Err(Error::InternalConsistency(format!(
            "the two dissipation-anticommutator routes disagree by {diff:.3e}"
        )));
    }

    // ℒ₃′ = (1/ħ) Σ iℂ_ij T_i·T_j.
    let m_l3p = kron_sandwich_sum(&ic, t).mapv(|z| z * C64::new(1.0 / hbar, 0.0));

    Ok(FdSuperoperators {
        l1: Superoperator::new(n, m_l1)?,
        l2: Superoperator::new(n, m_l2_a)?,
        l3p: Superoperator::new(n, m_l3p)?,
    })
}

/// The complete canonical split of a generator.
#[derive(Debug, Clone)]
pub struct FDDecomposition {
    /// Trace-induced Hamiltonian Ĥ_C.
    pub h_c: Array2<C64>,
    /// Unique internal Hamiltonian Ĥ′ = Ĥ + Ĥ_C.
    pub h_prime: Array2<C64>,
    /// ℒ′_U = −(i/ħ)[Ĥ′, ·].
    pub lu_prime: Superoperator,
    pub l1: Superoperator,
    pub l2: Superoperator,
    pub l3p: Superoperator,
    /// ℒ_fluc = ℒ₁.
    pub l_fluc: Superoperator,
    /// ℒ_diss = ℒ₂ + ℒ₃′.
    pub l_diss: Superoperator,
    /// ℒ′_NU = ℒ_fluc + ℒ_diss.
    pub l_nu_prime: Superoperator,
    pub blocks: GammaBlocks,
    /// ‖(ℒ′_U + ℒ′_NU) − ℒ_direct‖_F / ‖ℒ_direct‖_F.
    pub reconstruction_residual: f64,
}

impl FDDecomposition {
    /// Ĥ′ with its trace component projected out. The (Tr/N)𝟙 part is pure
    /// gauge (an 𝟙 shift of the Hamiltonian changes nothing); `h_prime`
    /// itself keeps it untouched for comparison across representations.
    pub fn h_prime_traceless(&self) -> Array2<C64> {
        let n = self.h_prime.nrows();
        let shift = trace(&self.h_prime) / n as f64;
        &self.h_prime - &eye(n).mapv(|z| z * shift)
    }
}

/// Decompose a spec, building the operator basis internally.
pub fn decompose(spec: &LindbladSpec) -> Result<FDDecomposition> {
    let basis = SuNBasis::new(spec.dim())?;
    decompose_with_basis(spec, &basis)
}

/// Decompose a spec against a caller-supplied basis (reusable across many
/// specs of the same dimension).
pub fn decompose_with_basis(spec: &LindbladSpec, basis: &SuNBasis) -> Result<FDDecomposition> {
    let hbar = spec.hbar();
    let coeffs = coefficient_matrix(spec, basis)?;
    let blocks = gamma_blocks(&coeffs, hbar);
    let h_c = hamiltonian_hc(spec, &blocks, basis)?;
    let fd = fd_superoperators(&blocks, basis)?;

    let h_prime = spec.hamiltonian() + &h_c;
    let lu_prime = Superoperator::new(
        spec.dim(),
        commutator_super(&h_prime).mapv(|z| z * (-I / hbar)),
    )?;

    let l_fluc = fd.l1.clone();
    let l_diss = &fd.l2 + &fd.l3p;
    let l_nu_prime = &l_fluc + &l_diss;

    let total = &lu_prime + &l_nu_prime;
    let direct = liouvillian_direct(spec);
    let norm_direct = direct.norm();
    let denom = if norm_direct > 0.0 { norm_direct } else { 1.0 };
    let residual = frob_norm(&(total.matrix() - direct.matrix())) / denom;
    if residual > RECONSTRUCTION_TOL {
        return Err(Error::InternalConsistency(format!(
            "canonical split fails to reconstruct the generator: relative residual {residual:.3e}"
        )));
    }

    Ok(FDDecomposition {
        h_c,
        h_prime,
        lu_prime,
        l1: fd.l1,
        l2: fd.l2,
        l3p: fd.l3p,
        l_fluc,
        l_diss,
        l_nu_prime,
        blocks,
        reconstruction_residual: residual,
    })
}

/// Semigroup class read off the dissipation structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QmsType {
    /// ℂ ≠ 0 with all tr(iℂ𝕗ˡ) = 0: dissipation without an anticommutator
    /// part. Impossible for qubits.
    TypeI,
    /// ℂ = 0: purely fluctuating non-unitary dynamics.
    TypeII,
    /// ℂ ≠ 0 with some tr(iℂ𝕗ˡ) ≠ 0: the generator cannot be a unital
    /// (Markov) semigroup.
    NonQmsCandidate,
}

impl std::fmt::Display for QmsType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QmsType::TypeI => write!(f, "type-i"),
            QmsType::TypeII => write!(f, "type-ii"),
            QmsType::NonQmsCandidate => write!(f, "non-QMS-candidate"),
        }
    }
}

/// Raw numbers and verdicts of the semigroup classification. Verdicts use
/// the stated tolerance; the raw values allow re-adjudication downstream.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    /// ‖ℒ′_NU(𝟙)‖_F — zero exactly for unital semigroups (the unitary part
    /// annihilates 𝟙 identically).
    pub unitality_residual: f64,
    pub unital: bool,
    /// tr(iℂ𝕗ˡ) for every l.
    pub l2_traces: Vec<f64>,
    pub max_l2_trace: f64,
    pub l2_zero: bool,
    pub c_norm: f64,
    pub d_norm: f64,
    pub label: QmsType,
    /// Eigenvalues of Γ̃, ascending.
    pub gamma_eigenvalues: Vec<f64>,
    /// Eigenvalues of 𝔻 + iħℂ, ascending.
    pub block_eigenvalues: Vec<f64>,
    /// Absolute cutoff used for the verdicts.
    pub tolerance: f64,
}

/// Classify the semigroup against the default cutoff 1e−10·max(1, ‖Γ̃‖).
pub fn classify(blocks: &GammaBlocks, basis: &SuNBasis) -> Result<ClassificationReport> {
    let scale = 1f64.max(frob_norm(blocks.gamma()));
    classify_with_tolerance(blocks, basis, CLASSIFY_TOL * scale)
}

/// Classify with an explicit absolute cutoff.
pub fn classify_with_tolerance(
    blocks: &GammaBlocks,
    basis: &SuNBasis,
    tolerance: f64,
) -> Result<ClassificationReport> {
    let fd = fd_superoperators(blocks, basis)?;
    let l_nu = &(&fd.l1 + &fd.l2) + &fd.l3p;
    let unitality_residual = frob_norm(&l_nu.apply(&eye(basis.dim()))?);

    let l2_traces = dissipation_traces(blocks.cblock(), basis);
    let max_l2_trace = l2_traces.iter().fold(0.0f64, |acc, t| acc.max(t.abs()));
    let c_norm = frob_norm_real(blocks.cblock());
    let d_norm = frob_norm_real(blocks.dblock());

    let l2_zero = max_l2_trace <= tolerance;
    let label = if c_norm <= tolerance {
        QmsType::TypeII
    } else if l2_zero {
        QmsType::TypeI
    } else {
        QmsType::NonQmsCandidate
    };

    let gamma_eigenvalues = eigvalsh(blocks.gamma())?.to_vec();
    let block_eigenvalues = eigvalsh(&blocks.positivity_block())?.to_vec();

    Ok(ClassificationReport {
        unitality_residual,
        unital: unitality_residual <= tolerance,
        l2_traces,
        max_l2_trace,
        l2_zero,
        c_norm,
        d_norm,
        label,
        gamma_eigenvalues,
        block_eigenvalues,
        tolerance,
    })
}

/// Positivity certificates for a set of blocks.
#[derive(Debug, Clone)]
pub struct PositivityReport {
    /// Eigenvalues of Γ̃, ascending.
    pub gamma_eigenvalues: Vec<f64>,
    pub gamma_min_eigenvalue: f64,
    /// Eigenvalues of 𝔻 + iħℂ, ascending.
    pub block_eigenvalues: Vec<f64>,
    pub block_min_eigenvalue: f64,
    pub d_norm: f64,
    pub c_norm: f64,
    /// 𝔻 + iħℂ ⪰ 0 up to the PSD slack: the blocks can come from a
    /// generator in Lindblad form.
    pub realizable: bool,
    /// False exactly when 𝔻 vanishes but ℂ does not — a combination no
    /// generator in Lindblad form can produce.
    pub diffusion_supports_dissipation: bool,
}

/// Check the positivity facts: Γ̃ ⪰ 0, 𝔻 + iħℂ ⪰ 0 (up to slack), and the
/// implication 𝔻 = 0 ⇒ ℂ = 0. Verdicts, not exceptions.
pub fn positivity_report(blocks: &GammaBlocks) -> Result<PositivityReport> {
    let gamma_eigenvalues = eigvalsh(blocks.gamma())?.to_vec();
    let gamma_min_eigenvalue = gamma_eigenvalues.first().copied().unwrap_or(0.0);

    let block = blocks.positivity_block();
    let block_eigenvalues = eigvalsh(&block)?.to_vec();
    let block_min_eigenvalue = block_eigenvalues.first().copied().unwrap_or(0.0);

    let d_norm = frob_norm_real(blocks.dblock());
    let c_norm = frob_norm_real(blocks.cblock());

    let scale = 1f64.max(frob_norm(&block));
    let realizable = block_min_eigenvalue >= -PSD_SLACK * scale;
    let tol = CLASSIFY_TOL * scale;
    let diffusion_supports_dissipation = !(d_norm <= tol && c_norm > tol);

    Ok(PositivityReport {
        gamma_eigenvalues,
        gamma_min_eigenvalue,
        block_eigenvalues,
        block_min_eigenvalue,
        d_norm,
        c_norm,
        realizable,
        diffusion_supports_dissipation,
    })
}

/// ℒ_U,C = −(i/ħ)[Ĥ_C, ·], the commutator piece that together with ℒ₃′
/// makes up the full (anti-self-adjoint) ℒ₃.
pub fn hc_commutator_super(h_c: &Array2<C64>, hbar: f64) -> Result<Superoperator> {
    Superoperator::new(h_c.nrows(), commutator_super(h_c).mapv(|z| z * (-I / hbar)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::cartesian_parts;
    use crate::random::{random_spec, random_traceless_spec};
    use ndarray::array;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn sigma_plus() -> Array2<C64> {
        array![[c(0.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]]
    }

    fn sigma_minus() -> Array2<C64> {
        array![[c(0.0, 0.0), c(0.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]
    }

    fn pauli(i: usize) -> Array2<C64> {
        match i {
            1 => array![[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]],
            2 => array![[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]],
            3 => array![[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]],
            _ => unreachable!(),
        }
    }

    fn infinite_temperature(gamma: f64) -> LindbladSpec {
        let g = gamma.sqrt();
        LindbladSpec::new(
            Array2::zeros((2, 2)),
            vec![
                sigma_plus().mapv(|z| z * g),
                sigma_minus().mapv(|z| z * g),
            ],
            1.0,
        )
        .unwrap()
    }

    fn depolarizing(gamma: f64) -> LindbladSpec {
        let g = (gamma / 2.0).sqrt();
        LindbladSpec::new(
            Array2::zeros((2, 2)),
            vec![pauli(1).mapv(|z| z * g), pauli(2).mapv(|z| z * g)],
            1.0,
        )
        .unwrap()
    }

    #[test]
    fn coefficient_matrix_identity_column() {
        let basis = SuNBasis::new(2).unwrap();
        let spec = LindbladSpec::new(Array2::zeros((2, 2)), vec![eye(2)], 1.0).unwrap();
        let coeffs = coefficient_matrix(&spec, &basis).unwrap();
        let a = coeffs.matrix();
        assert!((a[[0, 0]] - c(1.0, 0.0)).norm() < 1e-15);
        for nu in 1..4 {
            assert!(a[[nu, 0]].norm() < 1e-15);
        }
    }

    #[test]
    fn coefficient_matrix_sigma_plus_column() {
        let gamma: f64 = 2.1;
        let basis = SuNBasis::new(2).unwrap();
        let spec = LindbladSpec::new(
            Array2::zeros((2, 2)),
            vec![sigma_plus().mapv(|z| z * gamma.sqrt())],
            1.0,
        )
        .unwrap();
        let a = coefficient_matrix(&spec, &basis).unwrap();
        let col = a.matrix().column(0).to_owned();
        assert!((col[0]).norm() < 1e-15);
        assert!((col[1] - c(gamma.sqrt() / 2.0, 0.0)).norm() < 1e-15);
        assert!((col[2] - c(0.0, gamma.sqrt() / 2.0)).norm() < 1e-15);
        assert!((col[3]).norm() < 1e-15);
    }

    #[test]
    fn no_channels_gives_zero_gamma() {
        let basis = SuNBasis::new(2).unwrap();
        let spec = LindbladSpec::new(Array2::zeros((2, 2)), vec![], 1.0).unwrap();
        let coeffs = coefficient_matrix(&spec, &basis).unwrap();
        assert_eq!(coeffs.num_channels(), 0);
        let blocks = gamma_blocks(&coeffs, 1.0);
        assert!(frob_norm(blocks.gamma()) == 0.0);
        assert_eq!(blocks.d00(), 0.0);
        assert!(frob_norm_real(blocks.dblock()) == 0.0);
        assert!(frob_norm_real(blocks.cblock()) == 0.0);
    }

    #[test]
    fn infinite_temperature_blocks_match_known_form() {
        let gamma = 1.7;
        let basis = SuNBasis::new(2).unwrap();
        let spec = infinite_temperature(gamma);
        let coeffs = coefficient_matrix(&spec, &basis).unwrap();
        let blocks = gamma_blocks(&coeffs, 1.0);
        let expected = array![
            [gamma / 2.0, 0.0, 0.0],
            [0.0, gamma / 2.0, 0.0],
            [0.0, 0.0, 0.0]
        ];
        assert!(frob_norm_real(&(blocks.dblock() - &expected)) < 1e-13);
        assert!(frob_norm_real(blocks.cblock()) < 1e-13);
    }

    #[test]
    fn depolarizing_blocks_identical_to_damping_blocks() {
        let gamma = 0.9;
        let basis = SuNBasis::new(2).unwrap();
        let b1 = gamma_blocks(
            &coefficient_matrix(&infinite_temperature(gamma), &basis).unwrap(),
            1.0,
        );
        let b2 = gamma_blocks(
            &coefficient_matrix(&depolarizing(gamma), &basis).unwrap(),
            1.0,
        );
        assert!(frob_norm_real(&(b1.dblock() - b2.dblock())) < 1e-13);
        assert!(frob_norm_real(&(b1.cblock() - b2.cblock())) < 1e-13);
    }

    #[test]
    fn single_decay_channel_dissipation_sign() {
        // L̂ = √Γσ₋ has α = √Γ(0, 1/2, −i/2, 0), so
        // ℂ₁₂ = Im(α₁ α₂*) = Γ/4.
        let rate: f64 = 1.3;
        let basis = SuNBasis::new(2).unwrap();
        let spec = LindbladSpec::new(
            Array2::zeros((2, 2)),
            vec![sigma_minus().mapv(|z| z * rate.sqrt())],
            1.0,
        )
        .unwrap();
        let blocks = gamma_blocks(&coefficient_matrix(&spec, &basis).unwrap(), 1.0);
        assert!((blocks.cblock()[[0, 1]] - rate / 4.0).abs() < 1e-14);
        assert!((blocks.cblock()[[1, 0]] + rate / 4.0).abs() < 1e-14);
    }

    #[test]
    fn hc_vanishes_for_traceless_jumps() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let basis = SuNBasis::new(3).unwrap();
        let spec = random_traceless_spec(3, 4, &mut rng);
        let blocks = gamma_blocks(&coefficient_matrix(&spec, &basis).unwrap(), 1.0);
        let h_c = hamiltonian_hc(&spec, &blocks, &basis).unwrap();
        assert!(frob_norm(&h_c) < 1e-13);
    }

    #[test]
    fn hc_of_shifted_raising_operator() {
        // L̂ = √γσ₊ + β𝟙 with β real → Ĥ_C = −(β√γ/2)σ₂.
        let gamma: f64 = 1.9;
        let beta = 0.6;
        let basis = SuNBasis::new(2).unwrap();
        let l = sigma_plus().mapv(|z| z * gamma.sqrt()) + eye(2).mapv(|z| z * beta);
        let spec = LindbladSpec::new(Array2::zeros((2, 2)), vec![l], 1.0).unwrap();
        let blocks = gamma_blocks(&coefficient_matrix(&spec, &basis).unwrap(), 1.0);
        let h_c = hamiltonian_hc(&spec, &blocks, &basis).unwrap();
        let expected = pauli(2).mapv(|z| z * (-beta * gamma.sqrt() / 2.0));
        assert!(frob_norm(&(&h_c - &expected)) < 1e-13);
    }

    #[test]
    fn hc_zero_channels() {
        let basis = SuNBasis::new(2).unwrap();
        let spec = LindbladSpec::new(Array2::zeros((2, 2)), vec![], 1.0).unwrap();
        let blocks = gamma_blocks(&coefficient_matrix(&spec, &basis).unwrap(), 1.0);
        let h_c = hamiltonian_hc(&spec, &blocks, &basis).unwrap();
        assert!(frob_norm(&h_c) == 0.0);
    }

    #[test]
    fn zero_dissipation_kills_l2_l3p() {
        let basis = SuNBasis::new(2).unwrap();
        let spec = infinite_temperature(1.0);
        let blocks = gamma_blocks(&coefficient_matrix(&spec, &basis).unwrap(), 1.0);
        let fd = fd_superoperators(&blocks, &basis).unwrap();
        assert!(fd.l2.norm() < 1e-13);
        assert!(fd.l3p.norm() < 1e-13);
        assert!(fd.l1.norm() > 0.1);
    }

    #[test]
    fn qubit_fluctuation_superoperator_matches_double_commutators() {
        // 𝔻 = (γ/2)diag(1,1,0), ℂ = 0, ħ = 1 →
        // ℒ₁ = −(γ/4)([σ₁,[σ₁,·]] + [σ₂,[σ₂,·]]).
        let gamma = 1.25;
        let basis = SuNBasis::new(2).unwrap();
        let spec = infinite_temperature(gamma);
        let blocks = gamma_blocks(&coefficient_matrix(&spec, &basis).unwrap(), 1.0);
        let fd = fd_superoperators(&blocks, &basis).unwrap();

        let cs1 = commutator_super(&pauli(1));
        let cs2 = commutator_super(&pauli(2));
        let expected = (cs1.dot(&cs1) + cs2.dot(&cs2)).mapv(|z| z * (-gamma / 4.0));
        assert!(frob_norm(&(fd.l1.matrix() - &expected)) < 1e-13);
    }

    #[test]
    fn fd_superoperators_match_cartesian_oracle() {
        // ℒ₁+ℒ₂+ℒ₃′ = (ℒ₁ᶜ+ℒ₂ᶜ+ℒ₃ᶜ) + (i/ħ)[Ĥ_C, ·].
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let basis = SuNBasis::new(3).unwrap();
        for _ in 0..10 {
            let spec = random_spec(3, 3, &mut rng);
            let blocks = gamma_blocks(&coefficient_matrix(&spec, &basis).unwrap(), 1.0);
            let h_c = hamiltonian_hc(&spec, &blocks, &basis).unwrap();
            let fd = fd_superoperators(&blocks, &basis).unwrap();
            let parts = cartesian_parts(&spec);

            let lhs = &(&fd.l1 + &fd.l2) + &fd.l3p;
            let hc_comm = commutator_super(&h_c).mapv(|z| z * (I / spec.hbar()));
            let rhs_m =
                parts.l1.matrix() + parts.l2.matrix() + parts.l3.matrix() + &hc_comm;
            let rel = frob_norm(&(lhs.matrix() - &rhs_m)) / 1f64.max(frob_norm(&rhs_m));
            assert!(rel <= 1e-11, "rel = {rel}");
        }
    }

    #[test]
    fn decompose_traceless_leaves_hamiltonian_untouched() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let spec = random_traceless_spec(3, 4, &mut rng);
        let dec = decompose(&spec).unwrap();
        assert!(frob_norm(&dec.h_c) < 1e-12);
        assert!(frob_norm(&(&dec.h_prime - spec.hamiltonian())) < 1e-12);
    }

    #[test]
    fn decompose_shifted_jump_acquires_internal_hamiltonian() {
        // H = 0, L̂ = √γσ₊ + β𝟙 → Ĥ′ = −(β√γ/2)σ₂ ≠ 0.
        let gamma: f64 = 0.8;
        let beta = 0.5;
        let l = sigma_plus().mapv(|z| z * gamma.sqrt()) + eye(2).mapv(|z| z * beta);
        let spec = LindbladSpec::new(Array2::zeros((2, 2)), vec![l], 1.0).unwrap();
        let dec = decompose(&spec).unwrap();
        let expected = pauli(2).mapv(|z| z * (-beta * gamma.sqrt() / 2.0));
        assert!(frob_norm(&(&dec.h_prime - &expected)) < 1e-13);
        assert!(frob_norm(&dec.h_prime) > 0.1);
    }

    #[test]
    fn traceless_projection_of_h_prime() {
        let h = eye(2).mapv(|z| z * 3.0) + pauli(3).mapv(|z| z * 0.4);
        let spec = LindbladSpec::new(h, vec![], 1.0).unwrap();
        let dec = decompose(&spec).unwrap();
        // Raw H′ keeps the trace part, the projected one drops it.
        assert!((trace(&dec.h_prime).re - 6.0).abs() < 1e-14);
        let projected = dec.h_prime_traceless();
        assert!(trace(&projected).norm() < 1e-14);
        assert!(frob_norm(&(&projected - &pauli(3).mapv(|z| z * 0.4))) < 1e-14);
    }

    #[test]
    fn decompose_trivial_spec() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let h = crate::random::random_hermitian(2, &mut rng);
        let spec = LindbladSpec::new(h.clone(), vec![], 1.0).unwrap();
        let dec = decompose(&spec).unwrap();
        assert!(dec.l_nu_prime.norm() == 0.0);
        assert!(frob_norm(&(&dec.h_prime - &h)) < 1e-15);
    }

    #[test]
    fn reconstruction_identity_random_specs() {
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        for n in 2..=4 {
            let basis = SuNBasis::new(n).unwrap();
            for _ in 0..5 {
                let spec = random_spec(n, n, &mut rng);
                let dec = decompose_with_basis(&spec, &basis).unwrap();
                assert!(dec.reconstruction_residual <= 1e-11);
            }
        }
    }

    #[test]
    fn full_l3_is_anti_self_adjoint() {
        let mut rng = ChaCha8Rng::seed_from_u64(26);
        let spec = random_spec(3, 4, &mut rng);
        let dec = decompose(&spec).unwrap();
        let scale = 1f64.max(dec.l1.norm());

        let d1 = frob_norm(&(dec.l1.hs_adjoint().matrix() - dec.l1.matrix()));
        let d2 = frob_norm(&(dec.l2.hs_adjoint().matrix() - dec.l2.matrix()));
        assert!(d1 <= 1e-12 * scale);
        assert!(d2 <= 1e-12 * scale);

        let lu_c = hc_commutator_super(&dec.h_c, spec.hbar()).unwrap();
        let full_l3 = &dec.l3p + &lu_c;
        let d3 = frob_norm(&(full_l3.hs_adjoint().matrix() + full_l3.matrix()));
        assert!(d3 <= 1e-12 * 1f64.max(full_l3.norm()));
    }

    #[test]
    fn classify_depolarizing_is_type_ii_and_unital() {
        let basis = SuNBasis::new(2).unwrap();
        let spec = depolarizing(1.0);
        let blocks = gamma_blocks(&coefficient_matrix(&spec, &basis).unwrap(), 1.0);
        let report = classify(&blocks, &basis).unwrap();
        assert_eq!(report.label, QmsType::TypeII);
        assert!(report.unital);
        assert!(report.l2_zero);
    }

    #[test]
    fn classify_qubit_never_type_i() {
        // For N = 2 the traces tr(iℂ𝕗ˡ) determine ℂ completely, so a qubit
        // with ℂ ≠ 0 always has a nonzero trace: type-i cannot occur.
        let mut rng = ChaCha8Rng::seed_from_u64(27);
        let basis = SuNBasis::new(2).unwrap();
        for _ in 0..50 {
            let spec = random_spec(2, 3, &mut rng);
            let blocks = gamma_blocks(&coefficient_matrix(&spec, &basis).unwrap(), 1.0);
            let report = classify(&blocks, &basis).unwrap();
            assert_ne!(report.label, QmsType::TypeI);
        }
    }

    #[test]
    fn classify_trivial_generator() {
        let basis = SuNBasis::new(2).unwrap();
        let spec = LindbladSpec::new(Array2::zeros((2, 2)), vec![], 1.0).unwrap();
        let blocks = gamma_blocks(&coefficient_matrix(&spec, &basis).unwrap(), 1.0);
        let report = classify(&blocks, &basis).unwrap();
        assert_eq!(report.label, QmsType::TypeII);
        assert!(report.unital);
        assert!(report.c_norm == 0.0 && report.d_norm == 0.0);
    }

    #[test]
    fn positivity_spec_derived_blocks() {
        let mut rng = ChaCha8Rng::seed_from_u64(28);
        for n in 2..=4 {
            let basis = SuNBasis::new(n).unwrap();
            let spec = random_spec(n, 3, &mut rng);
            let blocks = gamma_blocks(&coefficient_matrix(&spec, &basis).unwrap(), 1.0);
            let report = positivity_report(&blocks).unwrap();
            let scale = 1f64.max(frob_norm(blocks.gamma()));
            assert!(report.gamma_min_eigenvalue >= -1e-11 * scale);
            assert!(report.realizable);
            assert!(report.diffusion_supports_dissipation);

            // Block structure: Γ̃ Hermitian, 𝔻 symmetric, ℂ antisymmetric.
            assert!(frob_norm(&(blocks.gamma() - &dagger(blocks.gamma()))) <= 1e-13 * scale);
            assert!(
                frob_norm_real(&(blocks.dblock() - &blocks.dblock().t())) <= 1e-13 * scale
            );
            assert!(
                frob_norm_real(&(blocks.cblock() + &blocks.cblock().t())) <= 1e-13 * scale
            );
        }
    }

    #[test]
    fn positivity_identity_multiples_have_no_blocks() {
        // Jump operators proportional to 𝟙: Re Γ̃ vanishes on the traceless
        // sector, hence 𝔻 = 0 and then ℂ = 0.
        let basis = SuNBasis::new(2).unwrap();
        let spec = LindbladSpec::new(
            Array2::zeros((2, 2)),
            vec![eye(2).mapv(|z| z * c(0.3, 0.7)), eye(2).mapv(|z| z * c(-1.1, 0.2))],
            1.0,
        )
        .unwrap();
        let blocks = gamma_blocks(&coefficient_matrix(&spec, &basis).unwrap(), 1.0);
        assert!(frob_norm_real(blocks.dblock()) < 1e-14);
        assert!(frob_norm_real(blocks.cblock()) < 1e-14);
        let report = positivity_report(&blocks).unwrap();
        assert!(report.diffusion_supports_dissipation);
    }

    #[test]
    fn positivity_rejects_dissipation_without_diffusion() {
        // Hand-crafted 𝔻 = 0, ℂ ≠ 0 cannot come from any generator in
        // Lindblad form: 𝔻 + iħℂ acquires a negative eigenvalue.
        let m = 3;
        let mut cblock = Array2::zeros((m, m));
        cblock[[0, 1]] = 0.4;
        cblock[[1, 0]] = -0.4;
        let blocks = GammaBlocks::from_blocks(Array2::zeros((m, m)), cblock, 1.0).unwrap();
        let report = positivity_report(&blocks).unwrap();
        assert!(report.block_min_eigenvalue < -0.3);
        assert!(!report.realizable);
        assert!(!report.diffusion_supports_dissipation);
    }

    #[test]
    fn qubit_dissipation_determinant_vanishes() {
        // N²−1 = 3 is odd, so det(ℂ) = 0 for the antisymmetric ℂ.
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..20 {
            let spec = random_spec(2, 2, &mut rng);
            let dec = decompose(&spec).unwrap();
            let cb = dec.blocks.cblock();
            let det = cb[[0, 0]] * (cb[[1, 1]] * cb[[2, 2]] - cb[[1, 2]] * cb[[2, 1]])
                - cb[[0, 1]] * (cb[[1, 0]] * cb[[2, 2]] - cb[[1, 2]] * cb[[2, 0]])
                + cb[[0, 2]] * (cb[[1, 0]] * cb[[2, 1]] - cb[[1, 1]] * cb[[2, 0]]);
            let scale = frob_norm_real(cb).powi(3).max(1e-300);
            assert!(det.abs() <= 1e-10 * scale);
        }
    }

    #[test]
    fn hand_crafted_blocks_accepted_by_fd_superoperators() {
        // Block-first workflow: what dynamics would these blocks generate?
        let basis = SuNBasis::new(2).unwrap();
        let dblock = Array2::from_diag(&ndarray::arr1(&[0.5, 0.5, 0.0]));
        let blocks = GammaBlocks::from_blocks(dblock, Array2::zeros((3, 3)), 1.0).unwrap();
        let fd = fd_superoperators(&blocks, &basis).unwrap();
        assert!(fd.l1.norm() > 0.1);
        assert!(fd.l2.norm() < 1e-14);
        assert!(fd.l3p.norm() < 1e-14);
    }

    #[test]
    fn from_blocks_rejects_asymmetric_input() {
        let mut d = Array2::zeros((3, 3));
        d[[0, 1]] = 1.0;
        assert!(GammaBlocks::from_blocks(d, Array2::zeros((3, 3)), 1.0).is_err());
    }
}
