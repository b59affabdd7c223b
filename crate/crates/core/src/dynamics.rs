//! Propagation of density matrices under a Liouvillian and trajectory-level
//! physicality checks.

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::generator::{devectorize, vectorize, Superoperator};
use crate::linalg::{dagger, expm, eye, frob_norm, kron, min_eig_hermitian, trace, C64};

/// Trace and Hermiticity tolerance for user-supplied states.
pub const STATE_TOL: f64 = 1e-12;
/// Eigenvalue slack for user-supplied states.
pub const STATE_EIG_SLACK: f64 = 1e-10;
/// Trace tolerance for propagated states.
pub const PROPAGATED_TRACE_TOL: f64 = 1e-10;
/// Eigenvalue slack for propagated states; exponentiation rounding at long
/// times is reported against this, never silently clipped.
pub const PROPAGATED_EIG_SLACK: f64 = 1e-8;

/// A validated density matrix: Hermitian, unit trace, positive up to slack.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    rho: Array2<C64>,
}

impl DensityMatrix {
    /// Validate against the strict (input-grade) tolerances.
    pub fn new(rho: Array2<C64>) -> Result<Self> {
        Self::with_tolerances(rho, STATE_TOL, STATE_EIG_SLACK)
    }

    /// Validate against caller-chosen trace/Hermiticity tolerance and
    /// negative-eigenvalue slack.
    pub fn with_tolerances(rho: Array2<C64>, tol: f64, eig_slack: f64) -> Result<Self> {
        let (nr, nc) = rho.dim();
        if nr != nc || nr == 0 {
            return Err(Error::ShapeMismatch(format!(
                "density matrix must be square and nonempty, got {nr}×{nc}"
            )));
        }
        if rho.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidSpec("state has non-finite entries".into()));
        }
        let report = physicality_report(&rho)?;
        if report.hermiticity_residual > tol {
            return Err(Error::InvalidSpec(format!(
                "state is not Hermitian: residual {:.3e}",
                report.hermiticity_residual
            )));
        }
        if report.trace_deviation > tol {
            return Err(Error::InvalidSpec(format!(
                "state trace deviates from 1 by {:.3e}",
                report.trace_deviation
            )));
        }
        if report.min_eigenvalue < -eig_slack {
            return Err(Error::InvalidSpec(format!(
                "state has negative eigenvalue {:.3e}",
                report.min_eigenvalue
            )));
        }
        Ok(DensityMatrix { rho })
    }

    /// The maximally mixed state 𝟙/N.
    pub fn maximally_mixed(n: usize) -> Self {
        DensityMatrix {
            rho: eye(n).mapv(|z| z / n as f64),
        }
    }

    /// Pure basis state |a⟩⟨a|.
    pub fn basis_state(n: usize, a: usize) -> Result<Self> {
        if a >= n {
            return Err(Error::InvalidDimension(format!(
                "basis index {a} out of range for dimension {n}"
            )));
        }
        let mut rho = Array2::zeros((n, n));
        rho[[a, a]] = C64::new(1.0, 0.0);
        Ok(DensityMatrix { rho })
    }

    pub fn matrix(&self) -> &Array2<C64> {
        &self.rho
    }

    pub fn dim(&self) -> usize {
        self.rho.nrows()
    }
}

/// Raw physicality diagnostics of a candidate state. No mutation, no
/// verdicts.
#[derive(Debug, Clone, Copy)]
pub struct PhysicalityReport {
    /// |Tr ρ − 1|.
    pub trace_deviation: f64,
    /// ‖ρ − ρ†‖_F.
    pub hermiticity_residual: f64,
    /// Smallest eigenvalue of the Hermitian part.
    pub min_eigenvalue: f64,
}

pub fn physicality_report(rho: &Array2<C64>) -> Result<PhysicalityReport> {
    let trace_deviation = (trace(rho) - C64::new(1.0, 0.0)).norm();
    let hermiticity_residual = frob_norm(&(rho - &dagger(rho)));
    let min_eigenvalue = min_eig_hermitian(rho)?;
    Ok(PhysicalityReport {
        trace_deviation,
        hermiticity_residual,
        min_eigenvalue,
    })
}

/// Propagate ρ₀ to time t ≥ 0: devectorize(exp(tM)·vec(ρ₀)).
///
/// The output is validated against the propagated-state tolerances
/// (trace within 1e−10, eigenvalues above −1e−8).
pub fn propagate(s: &Superoperator, rho0: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::Domain(format!(
            "the semigroup is defined for t ≥ 0, got t = {t}"
        )));
    }
    if rho0.dim() != s.dim() {
        return Err(Error::ShapeMismatch(format!(
            "state dimension {} does not match superoperator dimension {}",
            rho0.dim(),
            s.dim()
        )));
    }
    let propagator = expm(&s.matrix().mapv(|z| z * t))?;
    let rho_t = devectorize(&propagator.dot(&vectorize(rho0.matrix())))?;
    DensityMatrix::with_tolerances(rho_t, PROPAGATED_TRACE_TOL, PROPAGATED_EIG_SLACK)
        .map_err(|e| Error::InvariantViolation(format!("propagated state at t = {t}: {e}")))
}

/// Propagate along an ascending, nonnegative time grid, reusing one matrix
/// exponential per interval.
pub fn trajectory(
    s: &Superoperator,
    rho0: &DensityMatrix,
    times: &[f64],
) -> Result<Vec<DensityMatrix>> {
    if rho0.dim() != s.dim() {
        return Err(Error::ShapeMismatch(format!(
            "state dimension {} does not match superoperator dimension {}",
            rho0.dim(),
            s.dim()
        )));
    }
    let mut out = Vec::with_capacity(times.len());
    let mut prev_t: Option<f64> = None;
    let mut current = vectorize(rho0.matrix());
    for &t in times {
        if t.is_nan() || t < 0.0 {
            return Err(Error::Domain(format!("times must be ≥ 0, got {t}")));
        }
        if let Some(p) = prev_t {
            if t < p {
                return Err(Error::Domain(format!(
                    "times must be ascending, got {t} after {p}"
                )));
            }
        }
        let dt = t - prev_t.unwrap_or(0.0);
        if dt > 0.0 {
            let step = expm(&s.matrix().mapv(|z| z * dt))?;
            current = step.dot(&current);
        }
        let rho = devectorize(&current)?;
        let state = DensityMatrix::with_tolerances(rho, PROPAGATED_TRACE_TOL, PROPAGATED_EIG_SLACK)
            .map_err(|e| Error::InvariantViolation(format!("propagated state at t = {t}: {e}")))?;
        out.push(state);
        prev_t = Some(t);
    }
    Ok(out)
}

/// Choi matrix Σ_ab E_ab ⊗ Λ(E_ab) of the map Λ = exp(tM). Positive
/// semidefiniteness certifies complete positivity of the semigroup element.
pub fn choi_matrix(s: &Superoperator, t: f64) -> Result<Array2<C64>> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::Domain(format!(
            "the semigroup is defined for t ≥ 0, got t = {t}"
        )));
    }
    let n = s.dim();
    let propagator = expm(&s.matrix().mapv(|z| z * t))?;
    let mut choi = Array2::zeros((n * n, n * n));
    for a in 0..n {
        for b in 0..n {
            let mut e_ab: Array2<C64> = Array2::zeros((n, n));
            e_ab[[a, b]] = C64::new(1.0, 0.0);
            let image = devectorize(&propagator.dot(&vectorize(&e_ab)))?;
            choi = choi + kron(&e_ab, &image);
        }
    }
    Ok(choi)
}
