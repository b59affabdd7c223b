//! Invariant fluctuation-dissipation canonical form of finite-dimensional
//! Lindblad (GKSL) generators.
//!
//! Any generator dρ/dt = −(i/ħ)[Ĥ, ρ] + (1/2ħ)Σ_k(2L̂_kρL̂_k† − {L̂_k†L̂_k, ρ})
//! is rewritten in terms of two invariant real matrices — the symmetric
//! diffusion matrix 𝔻 and the antisymmetric dissipation matrix ℂ — plus a
//! unique internal Hamiltonian Ĥ′. These objects do not change under the
//! symmetries of the generator (unitary mixing of the jump operators and
//! inhomogeneous shifts with a compensating Hamiltonian), which the
//! [`symmetry`] module verifies numerically on arbitrary specs.
//!
//! Modules:
//! - [`basis`]: su(N) operator basis, structure constants, adjoint
//!   generators.
//! - [`generator`]: Lindblad specs, vectorization, Liouvillian matrices,
//!   cartesian-split oracle.
//! - [`decomposition`]: Γ̃ blocks, Ĥ_C/Ĥ′, canonical superoperators,
//!   classification, positivity certificates.
//! - [`symmetry`]: symmetry transforms, closed-form block shifts, and the
//!   randomized invariance audit.
//! - [`dynamics`]: matrix-exponential propagation and physicality checks.
//! - [`catalog`]: worked qubit channels and the Born–Markov/secular
//!   builder.
//! - [`io`]: JSON spec/state/report formats used by the CLI.
//!
//! Conventions fixed across the crate: column-stacking vectorization
//! (vec(AXB) = (Bᵀ⊗A)vec(X)); the 1/(2ħ) non-unitary prefactor (rates in
//! other conventions must be rescaled); basis ordering symmetric →
//! antisymmetric → diagonal.

pub mod basis;
pub mod catalog;
pub mod decomposition;
pub mod dynamics;
pub mod error;
pub mod generator;
pub mod io;
pub mod linalg;
pub mod random;
pub mod symmetry;

pub use basis::SuNBasis;
pub use decomposition::{
    classify, decompose, decompose_with_basis, positivity_report, ClassificationReport,
    FDDecomposition, GammaBlocks, PositivityReport, QmsType,
};
pub use dynamics::{physicality_report, propagate, trajectory, DensityMatrix};
pub use error::{Error, Result};
pub use generator::{liouvillian_direct, LindbladSpec, Superoperator};
pub use symmetry::{apply_transform, audit, AuditReport, SymmetryTransform};
