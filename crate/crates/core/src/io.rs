//! JSON file formats: generator specs, states, operator-basis dumps, and
//! result reports.
//!
//! Complex numbers are encoded as two-element arrays `[re, im]`; matrices
//! as row-major nested arrays. Every float in an emitted file is printed
//! with 17 significant digits, so parse → serialize round-trips are
//! lossless and byte-identical. Field ordering is the declaration order of
//! the structs below and never changes at runtime.

use std::collections::BTreeMap;
use std::io::Write;

use ndarray::{Array2, Array3};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::basis::SuNBasis;
use crate::decomposition::{ClassificationReport, FDDecomposition, PositivityReport};
use crate::dynamics::{DensityMatrix, PhysicalityReport};
use crate::error::{Error, Result};
use crate::generator::LindbladSpec;
use crate::linalg::{dagger, frob_norm, C64};
use crate::symmetry::AuditReport;

pub const FORMAT_VERSION: &str = "1";

/// Complex scalar as `[re, im]`.
pub type JsonComplex = [f64; 2];
/// Row-major complex matrix.
pub type JsonMatrix = Vec<Vec<JsonComplex>>;
/// Row-major real matrix.
pub type JsonRealMatrix = Vec<Vec<f64>>;

pub fn matrix_to_json(m: &Array2<C64>) -> JsonMatrix {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[[i, j]].re, m[[i, j]].im]).collect())
        .collect()
}

pub fn matrix_from_json(j: &JsonMatrix, field: &str) -> Result<Array2<C64>> {
    let rows = j.len();
    if rows == 0 {
        return Err(Error::parse(field, "matrix has no rows"));
    }
    let cols = j[0].len();
    let mut m = Array2::zeros((rows, cols));
    for (i, row) in j.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::parse(
                format!("{field}[{i}]"),
                format!("row has {} entries, expected {cols}", row.len()),
            ));
        }
        for (jdx, z) in row.iter().enumerate() {
            m[[i, jdx]] = C64::new(z[0], z[1]);
        }
    }
    Ok(m)
}

pub fn real_matrix_to_json(m: &Array2<f64>) -> JsonRealMatrix {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[[i, j]]).collect())
        .collect()
}

fn default_hbar() -> f64 {
    1.0
}

fn default_version() -> String {
    FORMAT_VERSION.to_string()
}

/// On-disk form of a generator spec.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpecFile {
    #[serde(default = "default_version")]
    pub version: String,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(default = "default_hbar")]
    pub hbar: f64,
    #[serde(rename = "H")]
    pub h: JsonMatrix,
    #[serde(rename = "L")]
    pub l: Vec<JsonMatrix>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

impl SpecFile {
    pub fn from_spec(spec: &LindbladSpec, metadata: BTreeMap<String, String>) -> Self {
        SpecFile {
            version: FORMAT_VERSION.to_string(),
            n: spec.dim(),
            hbar: spec.hbar(),
            h: matrix_to_json(spec.hamiltonian()),
            l: spec.lindblad_ops().iter().map(matrix_to_json).collect(),
            metadata,
        }
    }

    /// Validate field by field and build the spec.
    pub fn to_spec(&self) -> Result<LindbladSpec> {
        if self.version != FORMAT_VERSION {
            return Err(Error::parse(
                "version",
                format!("unsupported format version {:?}", self.version),
            ));
        }
        if self.n < 2 {
            return Err(Error::parse("N", format!("dimension must be ≥ 2, got {}", self.n)));
        }
        if !(self.hbar > 0.0 && self.hbar.is_finite()) {
            return Err(Error::parse(
                "hbar",
                format!("must be positive and finite, got {}", self.hbar),
            ));
        }
        let h = matrix_from_json(&self.h, "H")?;
        if h.dim() != (self.n, self.n) {
            return Err(Error::parse(
                "H",
                format!("shape {:?} does not match N = {}", h.dim(), self.n),
            ));
        }
        let defect = frob_norm(&(&h - &dagger(&h)));
        if defect > crate::generator::HERMITICITY_TOL * 1f64.max(frob_norm(&h)) {
            return Err(Error::parse(
                "H",
                format!("not Hermitian: ‖H − H†‖ = {defect:.3e}"),
            ));
        }
        let mut l_ops = Vec::with_capacity(self.l.len());
        for (k, lj) in self.l.iter().enumerate() {
            let field = format!("L[{k}]");
            let l = matrix_from_json(lj, &field)?;
            if l.dim() != (self.n, self.n) {
                return Err(Error::parse(
                    field,
                    format!("shape {:?} does not match N = {}", l.dim(), self.n),
                ));
            }
            l_ops.push(l);
        }
        LindbladSpec::new(h, l_ops, self.hbar)
    }
}

/// Parse a spec file from JSON text.
pub fn parse_spec(text: &str) -> Result<LindbladSpec> {
    parse_spec_file(text)?.to_spec()
}

pub fn parse_spec_file(text: &str) -> Result<SpecFile> {
    serde_json::from_str(text).map_err(|e| Error::parse("json", e.to_string()))
}

/// On-disk form of a density matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateFile {
    #[serde(default = "default_version")]
    pub version: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub rho: JsonMatrix,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

impl StateFile {
    pub fn from_state(state: &DensityMatrix, metadata: BTreeMap<String, String>) -> Self {
        StateFile {
            version: FORMAT_VERSION.to_string(),
            n: state.dim(),
            rho: matrix_to_json(state.matrix()),
            metadata,
        }
    }

    pub fn to_state(&self) -> Result<DensityMatrix> {
        if self.version != FORMAT_VERSION {
            return Err(Error::parse(
                "version",
                format!("unsupported format version {:?}", self.version),
            ));
        }
        let rho = matrix_from_json(&self.rho, "rho")?;
        if rho.dim() != (self.n, self.n) {
            return Err(Error::parse(
                "rho",
                format!("shape {:?} does not match N = {}", rho.dim(), self.n),
            ));
        }
        DensityMatrix::new(rho)
            .map_err(|e| Error::parse("rho", e.to_string()))
    }
}

pub fn parse_state(text: &str) -> Result<DensityMatrix> {
    let file: StateFile =
        serde_json::from_str(text).map_err(|e| Error::parse("json", e.to_string()))?;
    file.to_state()
}

/// Structure-constant tensor, dense for N ≤ 6 and sparse above.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "format", rename_all = "lowercase")]
pub enum TensorJson {
    Dense { data: Vec<Vec<Vec<f64>>> },
    Sparse { entries: Vec<(usize, usize, usize, f64)> },
}

impl TensorJson {
    pub fn from_tensor(t: &Array3<f64>, dense: bool) -> Self {
        let (a, b, c) = t.dim();
        if dense {
            let data = (0..a)
                .map(|i| {
                    (0..b)
                        .map(|j| (0..c).map(|l| t[[i, j, l]]).collect())
                        .collect()
                })
                .collect();
            TensorJson::Dense { data }
        } else {
            let mut entries = Vec::new();
            for i in 0..a {
                for j in 0..b {
                    for l in 0..c {
                        let v = t[[i, j, l]];
                        if v.abs() > 1e-14 {
                            entries.push((i, j, l, v));
                        }
                    }
                }
            }
            TensorJson::Sparse { entries }
        }
    }
}

/// `dump-basis` output: the basis matrices with their structure constants.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisFile {
    pub version: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub t0: JsonMatrix,
    pub t: Vec<JsonMatrix>,
    pub f: TensorJson,
    pub d: TensorJson,
}

impl BasisFile {
    pub fn from_basis(basis: &SuNBasis) -> Self {
        let dense = basis.dim() <= 6;
        BasisFile {
            version: FORMAT_VERSION.to_string(),
            n: basis.dim(),
            t0: matrix_to_json(basis.t0()),
            t: basis.traceless().iter().map(matrix_to_json).collect(),
            f: TensorJson::from_tensor(basis.f(), dense),
            d: TensorJson::from_tensor(basis.d(), dense),
        }
    }
}

/// Γ̃ block sectors in report form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BlocksJson {
    pub d00: f64,
    pub dvec: Vec<f64>,
    pub cvec: Vec<f64>,
    pub dblock: JsonRealMatrix,
    pub cblock: JsonRealMatrix,
}

impl BlocksJson {
    pub fn from_blocks(blocks: &crate::decomposition::GammaBlocks) -> Self {
        BlocksJson {
            d00: blocks.d00(),
            dvec: blocks.dvec().to_vec(),
            cvec: blocks.cvec().to_vec(),
            dblock: real_matrix_to_json(blocks.dblock()),
            cblock: real_matrix_to_json(blocks.cblock()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub unitality_residual: f64,
    pub unital: bool,
    pub l2_traces: Vec<f64>,
    pub max_l2_trace: f64,
    pub l2_zero: bool,
    pub c_norm: f64,
    pub d_norm: f64,
    pub label: String,
    pub gamma_eigenvalues: Vec<f64>,
    pub block_eigenvalues: Vec<f64>,
    pub tolerance: f64,
}

impl ClassificationJson {
    pub fn from_report(r: &ClassificationReport) -> Self {
        ClassificationJson {
            unitality_residual: r.unitality_residual,
            unital: r.unital,
            l2_traces: r.l2_traces.clone(),
            max_l2_trace: r.max_l2_trace,
            l2_zero: r.l2_zero,
            c_norm: r.c_norm,
            d_norm: r.d_norm,
            label: r.label.to_string(),
            gamma_eigenvalues: r.gamma_eigenvalues.clone(),
            block_eigenvalues: r.block_eigenvalues.clone(),
            tolerance: r.tolerance,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PositivityJson {
    pub gamma_eigenvalues: Vec<f64>,
    pub gamma_min_eigenvalue: f64,
    pub block_eigenvalues: Vec<f64>,
    pub block_min_eigenvalue: f64,
    pub d_norm: f64,
    pub c_norm: f64,
    pub realizable: bool,
    pub diffusion_supports_dissipation: bool,
}

impl PositivityJson {
    pub fn from_report(r: &PositivityReport) -> Self {
        PositivityJson {
            gamma_eigenvalues: r.gamma_eigenvalues.clone(),
            gamma_min_eigenvalue: r.gamma_min_eigenvalue,
            block_eigenvalues: r.block_eigenvalues.clone(),
            block_min_eigenvalue: r.block_min_eigenvalue,
            d_norm: r.d_norm,
            c_norm: r.c_norm,
            realizable: r.realizable,
            diffusion_supports_dissipation: r.diffusion_supports_dissipation,
        }
    }
}

/// One audited (spec, transform) trial.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AuditTrialJson {
    pub trial: usize,
    pub pass: bool,
    pub d_residual: f64,
    pub c_residual: f64,
    pub h_prime_residual: f64,
    pub h_prime_trace_delta: f64,
    pub l1_residual: f64,
    pub l2_residual: f64,
    pub l3p_residual: f64,
    pub total_residual: f64,
    pub d00_shift_residual: f64,
    pub dvec_shift_residual: f64,
    pub cvec_shift_residual: f64,
}

impl AuditTrialJson {
    pub fn from_report(trial: usize, r: &AuditReport) -> Self {
        AuditTrialJson {
            trial,
            pass: r.pass,
            d_residual: r.d_residual,
            c_residual: r.c_residual,
            h_prime_residual: r.h_prime_residual,
            h_prime_trace_delta: r.h_prime_trace_delta,
            l1_residual: r.l1_residual,
            l2_residual: r.l2_residual,
            l3p_residual: r.l3p_residual,
            total_residual: r.total_residual,
            d00_shift_residual: r.d00_shift_residual,
            dvec_shift_residual: r.dvec_shift_residual,
            cvec_shift_residual: r.cvec_shift_residual,
        }
    }
}

/// Randomized-audit table plus the worst residual per column.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AuditJson {
    pub seed: u64,
    pub trials: usize,
    pub tolerance: f64,
    pub shift_tolerance: f64,
    pub pass: bool,
    pub worst: AuditTrialJson,
    pub rows: Vec<AuditTrialJson>,
}

/// One propagated point of a trajectory.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrajectoryPointJson {
    pub t: f64,
    pub rho: JsonMatrix,
    pub trace_deviation: f64,
    pub hermiticity_residual: f64,
    pub min_eigenvalue: f64,
}

impl TrajectoryPointJson {
    pub fn new(t: f64, state: &DensityMatrix, phys: &PhysicalityReport) -> Self {
        TrajectoryPointJson {
            t,
            rho: matrix_to_json(state.matrix()),
            trace_deviation: phys.trace_deviation,
            hermiticity_residual: phys.hermiticity_residual,
            min_eigenvalue: phys.min_eigenvalue,
        }
    }
}

/// Top-level result report. Sections not produced by a given subcommand
/// stay `null`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportFile {
    pub version: String,
    pub input_sha256: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub hbar: f64,
    pub tolerances: BTreeMap<String, f64>,
    pub blocks: Option<BlocksJson>,
    pub h_c: Option<JsonMatrix>,
    pub h_prime: Option<JsonMatrix>,
    pub reconstruction_residual: Option<f64>,
    pub classification: Option<ClassificationJson>,
    pub positivity: Option<PositivityJson>,
    pub audit: Option<AuditJson>,
    pub trajectory: Option<Vec<TrajectoryPointJson>>,
}

impl ReportFile {
    /// Empty report skeleton with the standing tolerances embedded.
    pub fn skeleton(input_sha256: String, n: usize, hbar: f64) -> Self {
        let mut tolerances = BTreeMap::new();
        tolerances.insert(
            "reconstruction".to_string(),
            crate::decomposition::RECONSTRUCTION_TOL,
        );
        tolerances.insert(
            "cross_check".to_string(),
            crate::decomposition::CROSS_CHECK_TOL,
        );
        tolerances.insert("psd_slack".to_string(), crate::decomposition::PSD_SLACK);
        tolerances.insert("classify".to_string(), crate::decomposition::CLASSIFY_TOL);
        ReportFile {
            version: FORMAT_VERSION.to_string(),
            input_sha256,
            n,
            hbar,
            tolerances,
            blocks: None,
            h_c: None,
            h_prime: None,
            reconstruction_residual: None,
            classification: None,
            positivity: None,
            audit: None,
            trajectory: None,
        }
    }

    /// Fill the decomposition sections from a computed canonical form.
    pub fn with_decomposition(mut self, dec: &FDDecomposition) -> Self {
        self.blocks = Some(BlocksJson::from_blocks(&dec.blocks));
        self.h_c = Some(matrix_to_json(&dec.h_c));
        self.h_prime = Some(matrix_to_json(&dec.h_prime));
        self.reconstruction_residual = Some(dec.reconstruction_residual);
        self
    }
}

pub fn parse_report(text: &str) -> Result<ReportFile> {
    serde_json::from_str(text).map_err(|e| Error::parse("json", e.to_string()))
}

/// Formatter that prints every float with 17 significant digits (lossless
/// for f64) on top of the standard two-space pretty printer.
struct SciPretty<'a> {
    inner: serde_json::ser::PrettyFormatter<'a>,
}

impl serde_json::ser::Formatter for SciPretty<'_> {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }

    fn begin_array<W>(&mut self, writer: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        serde_json::ser::Formatter::begin_array(&mut self.inner, writer)
    }

    fn end_array<W>(&mut self, writer: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        serde_json::ser::Formatter::end_array(&mut self.inner, writer)
    }

    fn begin_array_value<W>(&mut self, writer: &mut W, first: bool) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        serde_json::ser::Formatter::begin_array_value(&mut self.inner, writer, first)
    }

    fn end_array_value<W>(&mut self, writer: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        serde_json::ser::Formatter::end_array_value(&mut self.inner, writer)
    }

    fn begin_object<W>(&mut self, writer: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        serde_json::ser::Formatter::begin_object(&mut self.inner, writer)
    }

    fn end_object<W>(&mut self, writer: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        serde_json::ser::Formatter::end_object(&mut self.inner, writer)
    }

    fn begin_object_key<W>(&mut self, writer: &mut W, first: bool) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        serde_json::ser::Formatter::begin_object_key(&mut self.inner, writer, first)
    }

    fn begin_object_value<W>(&mut self, writer: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        serde_json::ser::Formatter::begin_object_value(&mut self.inner, writer)
    }

    fn end_object_value<W>(&mut self, writer: &mut W) -> std::io::Result<()>
    where
        W: ?Sized + Write,
    {
        serde_json::ser::Formatter::end_object_value(&mut self.inner, writer)
    }
}

/// Serialize any of the file types above to deterministic, lossless JSON.
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut out = Vec::new();
    let formatter = SciPretty {
        inner: serde_json::ser::PrettyFormatter::new(),
    };
    let mut ser = serde_json::Serializer::with_formatter(&mut out, formatter);
    value
        .serialize(&mut ser)
        .map_err(|e| Error::parse("json", e.to_string()))?;
    String::from_utf8(out).map_err(|e| Error::parse("json", e.to_string()))
}

/// SHA-256 of raw input bytes, hex-encoded; echoed into reports so results
/// stay traceable to their inputs.
pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Parse a comma-separated, ascending list of nonnegative times.
pub fn parse_times(text: &str) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for (i, part) in text.split(',').enumerate() {
        let t: f64 = part
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("times[{i}]"), format!("not a number: {part:?}")))?;
        out.push(t);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::qubit_depolarizing;
    use crate::decomposition::{classify, decompose, positivity_report};
    use ndarray::array;

    fn minimal_spec_text() -> String {
        r#"{
            "version": "1",
            "N": 2,
            "H": [[[0.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
            "L": [[[[0.0, 0.0], [1.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]]
        }"#
        .to_string()
    }

    #[test]
    fn parse_minimal_spec() {
        let spec = parse_spec(&minimal_spec_text()).unwrap();
        assert_eq!(spec.dim(), 2);
        assert_eq!(spec.num_channels(), 1);
        assert_eq!(spec.hbar(), 1.0);
    }

    #[test]
    fn hermiticity_violation_names_the_field() {
        let text = r#"{
            "version": "1",
            "N": 2,
            "H": [[[0.0, 0.0], [0.001, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
            "L": []
        }"#;
        match parse_spec(text) {
            Err(Error::Parse { field, .. }) => assert_eq!(field, "H"),
            other => panic!("expected a parse error naming H, got {other:?}"),
        }
    }

    #[test]
    fn shape_violation_names_the_channel() {
        let text = r#"{
            "version": "1",
            "N": 2,
            "H": [[[0.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
            "L": [[[[0.0, 0.0]]]]
        }"#;
        match parse_spec(text) {
            Err(Error::Parse { field, .. }) => assert_eq!(field, "L[0]"),
            other => panic!("expected a parse error naming L[0], got {other:?}"),
        }
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(
            parse_spec("{not json"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn spec_roundtrip_through_json() {
        let spec = qubit_depolarizing(0.85).unwrap();
        let file = SpecFile::from_spec(&spec, BTreeMap::new());
        let text = to_json_string(&file).unwrap();
        let back = parse_spec(&text).unwrap();
        assert_eq!(back.dim(), spec.dim());
        for (a, b) in back.lindblad_ops().iter().zip(spec.lindblad_ops()) {
            assert_eq!(a, b);
        }
        // Normalization is idempotent byte for byte.
        let text2 = to_json_string(&SpecFile::from_spec(&back, BTreeMap::new())).unwrap();
        assert_eq!(text, text2);
    }

    #[test]
    fn report_roundtrip_is_lossless() {
        let spec = qubit_depolarizing(1.0).unwrap();
        let dec = decompose(&spec).unwrap();
        let basis = SuNBasis::new(2).unwrap();
        let classification = classify(&dec.blocks, &basis).unwrap();
        let positivity = positivity_report(&dec.blocks).unwrap();

        let mut report = ReportFile::skeleton(sha256_hex(b"input"), 2, 1.0)
            .with_decomposition(&dec);
        report.classification = Some(ClassificationJson::from_report(&classification));
        report.positivity = Some(PositivityJson::from_report(&positivity));

        let text = to_json_string(&report).unwrap();
        let parsed = parse_report(&text).unwrap();
        let text2 = to_json_string(&parsed).unwrap();
        assert_eq!(text, text2);

        // Specific float survives exactly, including an irrational one.
        let d = parsed.blocks.as_ref().unwrap().dblock[0][0];
        assert_eq!(d, dec.blocks.dblock()[[0, 0]]);
    }

    #[test]
    fn seventeen_digit_floats() {
        let text = to_json_string(&(1.0f64 / 3.0)).unwrap();
        assert_eq!(text, "3.3333333333333331e-1");
        let back: f64 = serde_json::from_str(&text).unwrap();
        assert_eq!(back, 1.0 / 3.0);
    }

    #[test]
    fn sha256_known_vector() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn parse_times_accepts_lists_and_rejects_garbage() {
        assert_eq!(parse_times("0,0.5,1.5").unwrap(), vec![0.0, 0.5, 1.5]);
        assert!(parse_times("0,abc").is_err());
    }

    #[test]
    fn state_file_roundtrip() {
        let rho = array![
            [C64::new(0.6, 0.0), C64::new(0.1, 0.2)],
            [C64::new(0.1, -0.2), C64::new(0.4, 0.0)]
        ];
        let state = DensityMatrix::new(rho).unwrap();
        let file = StateFile::from_state(&state, BTreeMap::new());
        let text = to_json_string(&file).unwrap();
        let back = parse_state(&text).unwrap();
        assert_eq!(back.matrix(), state.matrix());
    }

    #[test]
    fn basis_dump_has_dense_tensors_at_small_n() {
        let basis = SuNBasis::new(2).unwrap();
        let file = BasisFile::from_basis(&basis);
        match &file.f {
            TensorJson::Dense { data } => {
                assert_eq!(data.len(), 3);
                assert_eq!(data[0][1][2], 1.0); // f₁₂₃ = ε₁₂₃
            }
            _ => panic!("expected dense tensor at N = 2"),
        }
        let text = to_json_string(&file).unwrap();
        let parsed: BasisFile = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.t.len(), 3);
    }
}
