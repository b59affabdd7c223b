//! Orthogonal Hermitian operator basis of su(N) and its structure constants.
//!
//! The basis {T̂_ν}, ν = 0..N²−1, consists of T̂₀ = √(2/N)·𝟙 plus N²−1
//! traceless Hermitian matrices normalized so Tr(T̂_ν T̂_μ) = 2δ_νμ. For
//! N = 2 the traceless members are the Pauli matrices; for N = 3 they are
//! the Gell-Mann matrices up to the ordering fixed below.
//!
//! Ordering of the traceless members (fixed so tensors are deterministic):
//! first all symmetric pairs E_ab + E_ba with a < b in lexicographic (a, b)
//! order, then all antisymmetric pairs −i(E_ab − E_ba) in the same order,
//! then the diagonal members diag(1,…,1,−m,0,…)·√(2/(m(m+1))) for
//! m = 1..N−1.
//!
//! Products close as T̂_i T̂_j = (2/N)δ_ij·𝟙 + Σ_l (i f_ijl + d_ijl) T̂_l
//! with f totally antisymmetric and d totally symmetric.

use ndarray::{Array1, Array2, Array3};

use crate::error::{Error, Result};
use crate::linalg::{dagger, eye, frob_norm, trace, C64, I};

/// Tolerance for the imaginary residue of trace expressions that must be
/// real for a well-formed basis.
const IM_RESIDUE_TOL: f64 = 1e-13;
/// Orthogonality defect beyond which an input basis is rejected.
const ORTHO_TOL: f64 = 1e-10;

/// Orthogonal Hermitian operator basis for an N-dimensional Hilbert space,
/// together with the structure-constant tensors of its traceless sector.
#[derive(Debug, Clone)]
pub struct SuNBasis {
    n: usize,
    t0: Array2<C64>,
    t: Vec<Array2<C64>>,
    f: Array3<f64>,
    d: Array3<f64>,
}

impl SuNBasis {
    /// Build the generalized Gell-Mann basis for dimension `n ≥ 2`.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(format!(
                "operator basis requires dimension ≥ 2, got {n}"
            )));
        }
        let t = gell_mann_matrices(n);
        let (f, d) = structure_constants(&t)?;
        let t0 = eye(n).mapv(|z| z * C64::new((2.0 / n as f64).sqrt(), 0.0));
        Ok(SuNBasis { n, t0, t, f, d })
    }

    /// Assemble a basis from externally supplied traceless members
    /// (e.g. after an orthogonal basis rotation). Orthogonality,
    /// Hermiticity, and tracelessness are validated; the structure
    /// constants are recomputed from scratch.
    pub fn from_traceless(n: usize, t: Vec<Array2<C64>>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(format!(
                "operator basis requires dimension ≥ 2, got {n}"
            )));
        }
        if t.len() != n * n - 1 {
            return Err(Error::ShapeMismatch(format!(
                "expected {} traceless members for N = {n}, got {}",
                n * n - 1,
                t.len()
            )));
        }
        for (idx, m) in t.iter().enumerate() {
            if m.dim() != (n, n) {
                return Err(Error::ShapeMismatch(format!(
                    "basis member {idx} is {:?}, expected ({n}, {n})",
                    m.dim()
                )));
            }
            if frob_norm(&(m - &dagger(m))) > 1e-12 {
                return Err(Error::InconsistentBasis(format!(
                    "basis member {idx} is not Hermitian"
                )));
            }
            if trace(m).norm() > 1e-12 {
                return Err(Error::InconsistentBasis(format!(
                    "basis member {idx} is not traceless"
                )));
            }
        }
        let (f, d) = structure_constants(&t)?;
        let t0 = eye(n).mapv(|z| z * C64::new((2.0 / n as f64).sqrt(), 0.0));
        Ok(SuNBasis { n, t0, t, f, d })
    }

    /// Hilbert-space dimension N.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Number of traceless members, N²−1.
    pub fn algebra_dim(&self) -> usize {
        self.n * self.n - 1
    }

    /// T̂₀ = √(2/N)·𝟙.
    pub fn t0(&self) -> &Array2<C64> {
        &self.t0
    }

    /// The traceless members T̂₁..T̂_{N²−1}, in the fixed ordering.
    pub fn traceless(&self) -> &[Array2<C64>] {
        &self.t
    }

    /// Basis element by full index ν ∈ {0, …, N²−1}.
    pub fn element(&self, nu: usize) -> &Array2<C64> {
        if nu == 0 {
            &self.t0
        } else {
            &self.t[nu - 1]
        }
    }

    /// Totally antisymmetric structure constants, indexed by traceless
    /// positions (0-based): `f[[i, j, l]]` = f_{(i+1)(j+1)(l+1)}.
    pub fn f(&self) -> &Array3<f64> {
        &self.f
    }

    /// Totally symmetric structure constants, same indexing as `f`.
    pub fn d(&self) -> &Array3<f64> {
        &self.d
    }

    /// Adjoint-representation generators 𝕗ˡ with (𝕗ˡ)_ij = −i f_lij.
    /// Each is Hermitian because f is real and antisymmetric.
    pub fn adjoint_generators(&self) -> Vec<Array2<C64>> {
        adjoint_generators(&self.f)
    }

    /// Expansion coefficients α_ν = Tr(T̂_ν X)/2 of an N×N matrix.
    pub fn expand(&self, x: &Array2<C64>) -> Result<Array1<C64>> {
        if x.dim() != (self.n, self.n) {
            return Err(Error::ShapeMismatch(format!(
                "cannot expand a {:?} matrix in a dimension-{} basis",
                x.dim(),
                self.n
            )));
        }
        let m = self.algebra_dim();
        let mut alpha = Array1::zeros(m + 1);
        alpha[0] = trace(&self.t0.dot(x)) * 0.5;
        for (i, t_i) in self.t.iter().enumerate() {
            alpha[i + 1] = trace(&t_i.dot(x)) * 0.5;
        }
        Ok(alpha)
    }

    /// Worst product-closure residual over all pairs:
    /// max_ij ‖T̂_i T̂_j − (2/N)δ_ij 𝟙 − Σ_l (i f_ijl + d_ijl) T̂_l‖_F.
    pub fn max_closure_residual(&self) -> f64 {
        let n = self.n;
        let m = self.algebra_dim();
        let mut worst = 0.0f64;
        for i in 0..m {
            for j in 0..m {
                let mut rhs = if i == j {
                    eye(n).mapv(|z| z * C64::new(2.0 / n as f64, 0.0))
                } else {
                    Array2::zeros((n, n))
                };
                for l in 0..m {
                    let coeff =
                        I * C64::new(self.f[[i, j, l]], 0.0) + C64::new(self.d[[i, j, l]], 0.0);
                    rhs = rhs + self.t[l].mapv(|z| z * coeff);
                }
                let residual = frob_norm(&(&self.t[i].dot(&self.t[j]) - &rhs));
                worst = worst.max(residual);
            }
        }
        worst
    }

    /// Reassemble Σ_ν α_ν T̂_ν from expansion coefficients.
    pub fn reconstruct(&self, alpha: &Array1<C64>) -> Result<Array2<C64>> {
        let m = self.algebra_dim();
        if alpha.len() != m + 1 {
            return Err(Error::ShapeMismatch(format!(
                "coefficient vector has length {}, expected {}",
                alpha.len(),
                m + 1
            )));
        }
        let mut x = self.t0.mapv(|z| z * alpha[0]);
        for (i, t_i) in self.t.iter().enumerate() {
            x = x + t_i.mapv(|z| z * alpha[i + 1]);
        }
        Ok(x)
    }
}

fn unit_matrix(n: usize, a: usize, b: usize) -> Array2<C64> {
    let mut m = Array2::zeros((n, n));
    m[[a, b]] = C64::new(1.0, 0.0);
    m
}

/// The generalized Gell-Mann family in the documented ordering, each member
/// scaled so Tr(T̂_i²) = 2.
fn gell_mann_matrices(n: usize) -> Vec<Array2<C64>> {
    let mut out = Vec::with_capacity(n * n - 1);
    // Symmetric pairs: E_ab + E_ba, a < b.
    for a in 0..n {
        for b in (a + 1)..n {
            out.push(unit_matrix(n, a, b) + unit_matrix(n, b, a));
        }
    }
    // Antisymmetric pairs: −i(E_ab − E_ba), a < b.
    for a in 0..n {
        for b in (a + 1)..n {
            let m = unit_matrix(n, a, b) - unit_matrix(n, b, a);
            out.push(m.mapv(|z| -I * z));
        }
    }
    // Diagonal members: diag(1,…,1,−m,0,…)·√(2/(m(m+1))), m = 1..N−1.
    for m in 1..n {
        let norm = (2.0 / (m as f64 * (m as f64 + 1.0))).sqrt();
        let mut diag = Array2::zeros((n, n));
        for a in 0..m {
            diag[[a, a]] = C64::new(norm, 0.0);
        }
        diag[[m, m]] = C64::new(-(m as f64) * norm, 0.0);
        out.push(diag);
    }
    out
}

/// Structure constants of a traceless orthogonal basis:
/// f_ijl = Tr([T̂_i, T̂_j] T̂_l)/(4i) and d_ijl = Tr({T̂_i, T̂_j} T̂_l)/4.
///
/// The input is validated against Tr(T̂_i T̂_j) = 2δ_ij; imaginary residues
/// of the trace expressions are checked to be below 1e−13 and discarded.
pub fn structure_constants(t: &[Array2<C64>]) -> Result<(Array3<f64>, Array3<f64>)> {
    let m = t.len();
    for i in 0..m {
        for j in i..m {
            let overlap = trace(&t[i].dot(&t[j]));
            let expected = if i == j { 2.0 } else { 0.0 };
            if (overlap - C64::new(expected, 0.0)).norm() > ORTHO_TOL {
                return Err(Error::InconsistentBasis(format!(
                    "Tr(T_{i} T_{j}) = {overlap}, expected {expected}"
                )));
            }
        }
    }

    // Cache all products and their traces against basis members:
    // q[i][j][l] = Tr(T_i T_j T_l).
    let products: Vec<Vec<Array2<C64>>> = t
        .iter()
        .map(|ti| t.iter().map(|tj| ti.dot(tj)).collect())
        .collect();
    let mut q = vec![vec![vec![C64::new(0.0, 0.0); m]; m]; m];
    for i in 0..m {
        for j in 0..m {
            for l in 0..m {
                q[i][j][l] = trace(&products[i][j].dot(&t[l]));
            }
        }
    }

    let mut f = Array3::zeros((m, m, m));
    let mut d = Array3::zeros((m, m, m));
    for i in 0..m {
        for j in 0..m {
            for l in 0..m {
                let fc = (q[i][j][l] - q[j][i][l]) / (4.0 * I);
                let dc = (q[i][j][l] + q[j][i][l]) / 4.0;
                let scale = 1.0 + fc.norm().max(dc.norm());
                if fc.im.abs() > IM_RESIDUE_TOL * scale || dc.im.abs() > IM_RESIDUE_TOL * scale {
                    return Err(Error::InconsistentBasis(format!(
                        "structure constant ({i},{j},{l}) has imaginary residue \
                         f_im = {}, d_im = {}",
                        fc.im, dc.im
                    )));
                }
                f[[i, j, l]] = fc.re;
                d[[i, j, l]] = dc.re;
            }
        }
    }
    Ok((f, d))
}

/// Adjoint-representation generators from an antisymmetric f tensor:
/// (𝕗ˡ)_ij = −i f_lij.
pub fn adjoint_generators(f: &Array3<f64>) -> Vec<Array2<C64>> {
    let m = f.dim().0;
    (0..m)
        .map(|l| {
            let mut gen = Array2::zeros((m, m));
            for i in 0..m {
                for j in 0..m {
                    gen[[i, j]] = -I * C64::new(f[[l, i, j]], 0.0);
                }
            }
            gen
        })
        .collect()
}
