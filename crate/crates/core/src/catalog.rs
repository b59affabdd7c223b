//! Ready-made generator specs with known canonical forms, and the
//! Born–Markov/secular builder.
//!
//! The qubit factories reproduce the standard amplitude-damping and
//! depolarizing channels; the secular builder assembles a generator from a
//! system Hamiltonian, Hermitian coupling operators, and externally
//! supplied rate matrices γ(ω) and Lamb-shift coefficients S(ω), using the
//! energy eigenoperators of the system Hamiltonian. Rate matrices are
//! inputs here — deriving them from bath correlation functions is out of
//! scope.

use ndarray::{array, Array2};

use crate::error::{Error, Result};
use crate::generator::LindbladSpec;
use crate::linalg::{
    commutator, dagger, eigh, frob_norm, hermiticity_residual, min_eig_hermitian, trace, C64,
};

fn sigma(i: usize) -> Array2<C64> {
    let z = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let im = C64::new(0.0, 1.0);
    match i {
        1 => array![[z, one], [one, z]],
        2 => array![[z, -im], [im, z]],
        3 => array![[one, z], [z, -one]],
        _ => panic!("Pauli index out of range"),
    }
}

fn sigma_plus() -> Array2<C64> {
    (sigma(1) + sigma(2).mapv(|z| z * C64::new(0.0, 1.0))).mapv(|z| 0.5 * z)
}

fn sigma_minus() -> Array2<C64> {
    (sigma(1) - sigma(2).mapv(|z| z * C64::new(0.0, 1.0))).mapv(|z| 0.5 * z)
}

/// Thermal qubit channel: L̂₁ = √(Γn_th)σ̂₊, L̂₂ = √(Γ(n_th+1))σ̂₋, Ĥ = 0.
/// Use [`LindbladSpec::with_hamiltonian`] to add a level splitting.
pub fn qubit_thermal(rate: f64, n_th: f64) -> Result<LindbladSpec> {
    if rate < 0.0 || n_th < 0.0 {
        return Err(Error::InvalidSpec(format!(
            "rates must be nonnegative, got rate = {rate}, n_th = {n_th}"
        )));
    }
    let up = (rate * n_th).sqrt();
    let down = (rate * (n_th + 1.0)).sqrt();
    LindbladSpec::new(
        Array2::zeros((2, 2)),
        vec![
            sigma_plus().mapv(|z| z * up),
            sigma_minus().mapv(|z| z * down),
        ],
        1.0,
    )
}

/// Infinite-temperature limit of the thermal channel (n_th → ∞ with
/// Γn_th → γ): L̂ = {√γσ̂₊, √γσ̂₋}.
pub fn qubit_infinite_temperature(gamma: f64) -> Result<LindbladSpec> {
    if gamma < 0.0 {
        return Err(Error::InvalidSpec(format!(
            "rate must be nonnegative, got {gamma}"
        )));
    }
    let g = gamma.sqrt();
    LindbladSpec::new(
        Array2::zeros((2, 2)),
        vec![sigma_plus().mapv(|z| z * g), sigma_minus().mapv(|z| z * g)],
        1.0,
    )
}

/// Two-axis depolarizing channel: L̂′_i = √(γ/2)σ̂_i for i = 1, 2, Ĥ = 0.
/// Symmetry-equivalent to [`qubit_infinite_temperature`] at the same γ.
pub fn qubit_depolarizing(gamma: f64) -> Result<LindbladSpec> {
    if gamma < 0.0 {
        return Err(Error::InvalidSpec(format!(
            "rate must be nonnegative, got {gamma}"
        )));
    }
    let g = (gamma / 2.0).sqrt();
    LindbladSpec::new(
        Array2::zeros((2, 2)),
        vec![sigma(1).mapv(|z| z * g), sigma(2).mapv(|z| z * g)],
        1.0,
    )
}

/// Eigenvalue clusters of a Hermitian matrix: ascending means and the
/// corresponding spectral projectors. Eigenvalues are chained into one
/// cluster whenever consecutive values differ by at most `tol`.
fn eigen_clusters(h: &Array2<C64>, tol: f64) -> Result<(Vec<f64>, Vec<Array2<C64>>)> {
    let n = h.nrows();
    let (vals, vecs) = eigh(h)?;
    let mut means = Vec::new();
    let mut projectors: Vec<Array2<C64>> = Vec::new();
    let mut members: Vec<usize> = Vec::new();

    let flush = |members: &mut Vec<usize>,
                 means: &mut Vec<f64>,
                 projectors: &mut Vec<Array2<C64>>| {
        if members.is_empty() {
            return;
        }
        let mean = members.iter().map(|&i| vals[i]).sum::<f64>() / members.len() as f64;
        let mut p: Array2<C64> = Array2::zeros((n, n));
        for &i in members.iter() {
            let v = vecs.column(i).to_owned();
            for r in 0..n {
                for c in 0..n {
                    p[[r, c]] += v[r] * v[c].conj();
                }
            }
        }
        means.push(mean);
        projectors.push(p);
        members.clear();
    };

    for i in 0..n {
        if let Some(&last) = members.last() {
            if vals[i] - vals[last] > tol {
                flush(&mut members, &mut means, &mut projectors);
            }
        }
        members.push(i);
    }
    flush(&mut members, &mut means, &mut projectors);
    Ok((means, projectors))
}

/// Distinct Bohr frequencies of a clustered spectrum together with the
/// ordered cluster pairs (a, b) realizing ε_a − ε_b ≈ ω, chained within
/// `tol`.
fn bohr_frequencies(means: &[f64], tol: f64) -> Vec<(f64, Vec<(usize, usize)>)> {
    let mut raw: Vec<(f64, (usize, usize))> = Vec::new();
    for (a, &ea) in means.iter().enumerate() {
        for (b, &eb) in means.iter().enumerate() {
            raw.push((ea - eb, (a, b)));
        }
    }
    raw.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());

    let mut out: Vec<(f64, Vec<(usize, usize)>)> = Vec::new();
    let mut acc: Vec<(f64, (usize, usize))> = Vec::new();
    let flush = |acc: &mut Vec<(f64, (usize, usize))>,
                 out: &mut Vec<(f64, Vec<(usize, usize)>)>| {
        if acc.is_empty() {
            return;
        }
        let mean = acc.iter().map(|e| e.0).sum::<f64>() / acc.len() as f64;
        out.push((mean, acc.iter().map(|e| e.1).collect()));
        acc.clear();
    };
    for entry in raw {
        if let Some(last) = acc.last() {
            if entry.0 - last.0 > tol {
                flush(&mut acc, &mut out);
            }
        }
        acc.push(entry);
    }
    flush(&mut acc, &mut out);
    out
}

/// Frequency components of a Hermitian operator with respect to the Bohr
/// spectrum of `h_s`:
///
///   X(ω) = Σ_{ε_a − ε_b = ω} P_b X P_a,
///
/// so ω > 0 labels the component that lowers the energy by ω. Bohr
/// frequencies are grouped within `omega_tol`; components of negligible
/// norm are dropped. The returned list is ascending in ω and complete:
/// Σ_ω X(ω) = X.
pub fn energy_eigenoperators(
    h_s: &Array2<C64>,
    x: &Array2<C64>,
    omega_tol: f64,
) -> Result<Vec<(f64, Array2<C64>)>> {
    if omega_tol <= 0.0 {
        return Err(Error::Domain(format!(
            "omega_tol must be positive, got {omega_tol}"
        )));
    }
    if h_s.dim() != x.dim() {
        return Err(Error::ShapeMismatch(format!(
            "operator shape {:?} does not match Hamiltonian shape {:?}",
            x.dim(),
            h_s.dim()
        )));
    }
    validate_hermitian(h_s, "system Hamiltonian")?;
    validate_hermitian(x, "coupling operator")?;

    let components = frequency_components(h_s, x, omega_tol)?;
    let scale = 1f64.max(frob_norm(x));
    let mut sum: Array2<C64> = Array2::zeros(x.raw_dim());
    for (_, c) in &components {
        sum += c;
    }
    if frob_norm(&(&sum - x)) > 1e-12 * scale {
        return Err(Error::InternalConsistency(
            "frequency components do not sum back to the operator".into(),
        ));
    }
    Ok(components
        .into_iter()
        .filter(|(_, c)| frob_norm(c) > 1e-14 * scale)
        .collect())
}

/// All frequency components, including zero-norm ones (used by the secular
/// builder so every Bohr frequency stays addressable).
fn frequency_components(
    h_s: &Array2<C64>,
    x: &Array2<C64>,
    omega_tol: f64,
) -> Result<Vec<(f64, Array2<C64>)>> {
    let (means, projectors) = eigen_clusters(h_s, omega_tol)?;
    let freqs = bohr_frequencies(&means, omega_tol);
    let mut out = Vec::with_capacity(freqs.len());
    for (omega, pairs) in freqs {
        let mut component: Array2<C64> = Array2::zeros(x.raw_dim());
        for (a, b) in pairs {
            component = component + projectors[b].dot(x).dot(&projectors[a]);
        }
        out.push((omega, component));
    }
    Ok(out)
}

fn validate_hermitian(m: &Array2<C64>, what: &str) -> Result<()> {
    let defect = hermiticity_residual(m);
    if defect > 1e-12 * 1f64.max(frob_norm(m)) {
        return Err(Error::InvalidSpec(format!(
            "{what} is not Hermitian: ‖M − M†‖ = {defect:.3e}"
        )));
    }
    Ok(())
}

/// Inputs of the secular builder: system Hamiltonian, Hermitian coupling
/// operators, rate matrices γ(ω) (PSD, indexed by coupling pairs), and
/// Lamb-shift coefficient matrices S(ω) (Hermitian). Each ω must match a
/// Bohr frequency of the spectrum within `omega_tol`.
#[derive(Debug, Clone)]
pub struct SecularInput {
    pub h_s: Array2<C64>,
    pub couplings: Vec<Array2<C64>>,
    pub rates: Vec<(f64, Array2<f64>)>,
    pub lamb: Vec<(f64, Array2<C64>)>,
    pub omega_tol: f64,
    pub hbar: f64,
}

impl SecularInput {
    /// Validate shapes, Hermiticity of S(ω) and the couplings, and positive
    /// semidefiniteness of every γ(ω).
    pub fn validate(&self) -> Result<()> {
        let n = self.h_s.nrows();
        if self.h_s.dim() != (n, n) {
            return Err(Error::ShapeMismatch("system Hamiltonian must be square".into()));
        }
        validate_hermitian(&self.h_s, "system Hamiltonian")?;
        if self.omega_tol.is_nan() || self.omega_tol <= 0.0 {
            return Err(Error::Domain(format!(
                "omega_tol must be positive, got {}",
                self.omega_tol
            )));
        }
        if self.hbar.is_nan() || self.hbar <= 0.0 {
            return Err(Error::InvalidSpec(format!(
                "hbar must be positive, got {}",
                self.hbar
            )));
        }
        let nc = self.couplings.len();
        for (i, c) in self.couplings.iter().enumerate() {
            if c.dim() != (n, n) {
                return Err(Error::ShapeMismatch(format!(
                    "coupling {i} has shape {:?}, expected ({n}, {n})",
                    c.dim()
                )));
            }
            validate_hermitian(c, &format!("coupling {i}"))?;
        }
        for (omega, g) in &self.rates {
            if g.dim() != (nc, nc) {
                return Err(Error::ShapeMismatch(format!(
                    "rate matrix at ω = {omega} has shape {:?}, expected ({nc}, {nc})",
                    g.dim()
                )));
            }
            let gc = g.mapv(|x| C64::new(x, 0.0));
            let sym_defect = frob_norm(&(&gc - &dagger(&gc)));
            if sym_defect > 1e-11 * 1f64.max(frob_norm(&gc)) {
                return Err(Error::InvalidSpec(format!(
                    "rate matrix at ω = {omega} is not symmetric"
                )));
            }
            let min_eig = min_eig_hermitian(&gc)?;
            if min_eig < -1e-11 * 1f64.max(frob_norm(&gc)) {
                return Err(Error::InvalidSpec(format!(
                    "rate matrix at ω = {omega} has negative eigenvalue {min_eig:.3e}"
                )));
            }
        }
        for (omega, s) in &self.lamb {
            if s.dim() != (nc, nc) {
                return Err(Error::ShapeMismatch(format!(
                    "Lamb coefficient matrix at ω = {omega} has shape {:?}, expected ({nc}, {nc})",
                    s.dim()
                )));
            }
            validate_hermitian(s, &format!("Lamb coefficients at ω = {omega}"))?;
        }
        Ok(())
    }
}

/// Build the secular generator: jump operators from the diagonalized rate
/// matrices acting on the energy eigenoperators of the couplings, plus the
/// Lamb shift Ĥ_LS = Σ_{ω,i,j} S_ij(ω) T̂_i†(ω) T̂_j(ω). Returns the spec
/// (with Ĥ = Ĥ_S + Ĥ_LS) and Ĥ_LS itself.
///
/// Postconditions enforced here: every produced jump operator is traceless
/// to 1e−12 and [Ĥ_LS, Ĥ_S] = 0 to 1e−10 (relative); a violation of the
/// latter signals an inconsistent rate/degeneracy grouping.
pub fn secular_generator(input: &SecularInput) -> Result<(LindbladSpec, Array2<C64>)> {
    input.validate()?;
    let n = input.h_s.nrows();
    let nc = input.couplings.len();

    // Frequency components of every coupling on the shared Bohr grid.
    let per_coupling: Vec<Vec<(f64, Array2<C64>)>> = input
        .couplings
        .iter()
        .map(|c| frequency_components(&input.h_s, c, input.omega_tol))
        .collect::<Result<_>>()?;
    let grid: Vec<f64> = per_coupling
        .first()
        .map(|v| v.iter().map(|(w, _)| *w).collect())
        .unwrap_or_default();

    let find_freq = |omega: f64| -> Result<usize> {
        grid.iter()
            .enumerate()
            .filter(|(_, w)| (*w - omega).abs() <= input.omega_tol)
            .min_by(|a, b| {
                (a.1 - omega)
                    .abs()
                    .partial_cmp(&(b.1 - omega).abs())
                    .unwrap()
            })
            .map(|(idx, _)| idx)
            .ok_or_else(|| {
                Error::Domain(format!(
                    "ω = {omega} matches no Bohr frequency of the spectrum within {}",
                    input.omega_tol
                ))
            })
    };

    // Jump operators: diagonalize each γ(ω) = Σ_m λ_m u_m u_m† and emit
    // L̂_m = √λ_m Σ_i (u_m)_i T̂_i(ω).
    let mut l_ops: Vec<Array2<C64>> = Vec::new();
    for (omega, g) in &input.rates {
        let idx = find_freq(*omega)?;
        let gc = g.mapv(|x| C64::new(x, 0.0));
        let (vals, vecs) = eigh(&gc)?;
        let scale = 1f64.max(frob_norm(&gc));
        for m in 0..nc {
            let lambda = vals[m];
            if lambda <= 1e-14 * scale {
                continue;
            }
            let mut l: Array2<C64> = Array2::zeros((n, n));
            for i in 0..nc {
                l = l + per_coupling[i][idx].1.mapv(|z| z * vecs[[i, m]]);
            }
            let l = l.mapv(|z| z * lambda.sqrt());
            if frob_norm(&l) > 1e-14 {
                l_ops.push(l);
            }
        }
    }

    for (k, l) in l_ops.iter().enumerate() {
        let tr = trace(l).norm();
        if tr > 1e-12 * 1f64.max(frob_norm(l)) {
            return Err(Error::InternalConsistency(format!(
                "secular jump operator {k} has trace {tr:.3e}; couplings must be traceless"
            )));
        }
    }

    // Lamb shift.
    let mut h_ls: Array2<C64> = Array2::zeros((n, n));
    for (omega, s) in &input.lamb {
        let idx = find_freq(*omega)?;
        for i in 0..nc {
            for j in 0..nc {
                let sij = s[[i, j]];
                if sij.norm() == 0.0 {
                    continue;
                }
                let term = dagger(&per_coupling[i][idx].1).dot(&per_coupling[j][idx].1);
                h_ls = h_ls + term.mapv(|z| z * sij);
            }
        }
    }
    let comm = frob_norm(&commutator(&h_ls, &input.h_s));
    let comm_scale = 1f64.max(frob_norm(&h_ls) * frob_norm(&input.h_s));
    if comm > 1e-10 * comm_scale {
        return Err(Error::InternalConsistency(format!(
            "Lamb shift does not commute with the system Hamiltonian: ‖[H_LS, H_S]‖ = {comm:.3e} \
             (inconsistent rate/degeneracy grouping)"
        )));
    }

    let spec = LindbladSpec::new(&input.h_s + &h_ls, l_ops, input.hbar)?;
    Ok((spec, h_ls))
}

/// The worked qubit case of the secular builder: Ĥ_S = (ω₀/2)σ̂₃, a single
/// coupling σ̂₁, scalar rates γ(±ω₀) and Lamb coefficients S(±ω₀). The
/// +ω₀ entries drive the decay channel (σ̂₋), the −ω₀ entries the
/// excitation channel (σ̂₊).
pub fn secular_qubit_input(
    omega0: f64,
    gamma_down: f64,
    gamma_up: f64,
    s_down: f64,
    s_up: f64,
) -> SecularInput {
    SecularInput {
        h_s: sigma(3).mapv(|z| z * (omega0 / 2.0)),
        couplings: vec![sigma(1)],
        rates: vec![
            (omega0, array![[gamma_down]]),
            (-omega0, array![[gamma_up]]),
        ],
        lamb: vec![(omega0, array![[C64::new(s_down, 0.0)]]), (
            -omega0,
            array![[C64::new(s_up, 0.0)]],
        )],
        omega_tol: 1e-9 * omega0.abs().max(1.0),
        hbar: 1.0,
    }
}
