//! Command-line interface for the canonical fluctuation-dissipation form
//! of Lindblad generators.
//!
//! Exit codes: 0 success, 1 usage error, 2 numerical-invariant failure,
//! 3 parse failure. All randomness is seeded and the seed is logged to
//! stderr, so identical inputs and seed produce byte-identical reports.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lindblad_fd::basis::SuNBasis;
use lindblad_fd::catalog;
use lindblad_fd::decomposition::{classify, decompose, positivity_report};
use lindblad_fd::dynamics::physicality_report;
use lindblad_fd::error::Error as CoreError;
use lindblad_fd::generator::liouvillian_direct;
use lindblad_fd::io::{
    parse_spec, parse_state, sha256_hex, to_json_string, AuditJson, AuditTrialJson, BasisFile,
    BlocksJson, ClassificationJson, PositivityJson, ReportFile, SpecFile, TrajectoryPointJson,
};
use lindblad_fd::random::random_transform;
use lindblad_fd::symmetry::audit_with_basis;
use lindblad_fd::trajectory;

const EXIT_USAGE: i32 = 1;
const EXIT_INVARIANT: i32 = 2;
const EXIT_PARSE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "lindblad-fd",
    version,
    about = "Canonical fluctuation-dissipation form of Lindblad generators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the canonical split of a generator spec and report the
    /// diffusion/dissipation blocks, the internal Hamiltonian, the
    /// classification, and the positivity certificates.
    Decompose {
        /// Spec file path, or `-` for stdin.
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Randomized invariance audit: random unitary mixings and shifts are
    /// applied to the spec and every invariant object is compared.
    AuditSymmetry {
        /// Spec file path, or `-` for stdin.
        spec: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Relative tolerance on the invariant residuals.
        #[arg(long, default_value_t = 1e-11)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Semigroup classification and unitality report.
    Classify {
        /// Spec file path, or `-` for stdin.
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Propagate a state along a time grid and report physicality
    /// diagnostics for every point.
    Evolve {
        /// Spec file path, or `-` for stdin.
        spec: String,
        /// State file with the initial density matrix.
        #[arg(long)]
        rho0: PathBuf,
        /// Comma-separated ascending times, e.g. `0,0.5,1.0`.
        #[arg(long)]
        times: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a named example spec.
    #[command(allow_negative_numbers = true)]
    Catalog {
        /// One of: qubit-thermal, qubit-infinite-temperature,
        /// qubit-depolarizing, secular-qubit.
        name: String,
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long)]
        nth: Option<f64>,
        #[arg(long)]
        omega0: Option<f64>,
        #[arg(long)]
        gamma_down: Option<f64>,
        #[arg(long)]
        gamma_up: Option<f64>,
        #[arg(long)]
        lamb_down: Option<f64>,
        #[arg(long)]
        lamb_up: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the operator basis and structure constants for dimension N.
    DumpBasis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(()) => {}
        Err(err) => {
            eprintln!("error: {}", err.message);
            std::process::exit(err.code);
        }
    }
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let code = match &e {
            CoreError::Parse { .. } => EXIT_PARSE,
            CoreError::InternalConsistency(_) | CoreError::InvariantViolation(_) => EXIT_INVARIANT,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn read_input(path: &str) -> Result<Vec<u8>, CliError> {
    if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read(path)?)
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n"))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Decompose { spec, out } => cmd_decompose(&spec, out.as_deref()),
        Command::AuditSymmetry {
            spec,
            trials,
            seed,
            tol,
            out,
        } => cmd_audit(&spec, trials, seed, tol, out.as_deref()),
        Command::Classify { spec, out } => cmd_classify(&spec, out.as_deref()),
        Command::Evolve {
            spec,
            rho0,
            times,
            out,
        } => cmd_evolve(&spec, &rho0, &times, out.as_deref()),
        Command::Catalog {
            name,
            gamma,
            nth,
            omega0,
            gamma_down,
            gamma_up,
            lamb_down,
            lamb_up,
            out,
        } => cmd_catalog(
            &name, gamma, nth, omega0, gamma_down, gamma_up, lamb_down, lamb_up, out.as_deref(),
        ),
        Command::DumpBasis { n, out } => cmd_dump_basis(n, out.as_deref()),
    }
}

fn cmd_decompose(spec_path: &str, out: Option<&Path>) -> Result<(), CliError> {
    let bytes = read_input(spec_path)?;
    let text = String::from_utf8_lossy(&bytes);
    let spec = parse_spec(&text)?;
    let dec = decompose(&spec)?;
    let basis = SuNBasis::new(spec.dim())?;
    let classification = classify(&dec.blocks, &basis)?;
    let positivity = positivity_report(&dec.blocks)?;

    let mut report =
        ReportFile::skeleton(sha256_hex(&bytes), spec.dim(), spec.hbar()).with_decomposition(&dec);
    report.classification = Some(ClassificationJson::from_report(&classification));
    report.positivity = Some(PositivityJson::from_report(&positivity));
    emit(&to_json_string(&report)?, out)
}

fn cmd_classify(spec_path: &str, out: Option<&Path>) -> Result<(), CliError> {
    let bytes = read_input(spec_path)?;
    let text = String::from_utf8_lossy(&bytes);
    let spec = parse_spec(&text)?;
    let dec = decompose(&spec)?;
    let basis = SuNBasis::new(spec.dim())?;
    let classification = classify(&dec.blocks, &basis)?;
    let positivity = positivity_report(&dec.blocks)?;

    let mut report = ReportFile::skeleton(sha256_hex(&bytes), spec.dim(), spec.hbar());
    report.blocks = Some(BlocksJson::from_blocks(&dec.blocks));
    report.classification = Some(ClassificationJson::from_report(&classification));
    report.positivity = Some(PositivityJson::from_report(&positivity));
    emit(&to_json_string(&report)?, out)
}

fn cmd_audit(
    spec_path: &str,
    trials: usize,
    seed: u64,
    tol: f64,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let bytes = read_input(spec_path)?;
    let text = String::from_utf8_lossy(&bytes);
    let spec = parse_spec(&text)?;
    let basis = SuNBasis::new(spec.dim())?;
    eprintln!("audit-symmetry: seed = {seed}, trials = {trials}, tol = {tol:.1e}");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(trials);
    let shift_tol = lindblad_fd::symmetry::SHIFT_TOL;
    for trial in 0..trials {
        let t = random_transform(spec.num_channels(), &mut rng);
        let report = audit_with_basis(&spec, &t, tol, shift_tol, &basis)?;
        rows.push(AuditTrialJson::from_report(trial, &report));
    }

    let worst = worst_row(&rows);
    let passed = rows.iter().filter(|r| r.pass).count();
    let all_pass = passed == rows.len();

    println!("invariant            worst residual");
    println!("D                    {:.3e}", worst.d_residual);
    println!("C                    {:.3e}", worst.c_residual);
    println!("H' (trace-aligned)   {:.3e}", worst.h_prime_residual);
    println!("L1                   {:.3e}", worst.l1_residual);
    println!("L2                   {:.3e}", worst.l2_residual);
    println!("L3'                  {:.3e}", worst.l3p_residual);
    println!("L (total)            {:.3e}", worst.total_residual);
    println!("shift D00            {:.3e}", worst.d00_shift_residual);
    println!("shift Dvec           {:.3e}", worst.dvec_shift_residual);
    println!("shift Cvec           {:.3e}", worst.cvec_shift_residual);
    println!(
        "result: {} ({passed}/{} trials)",
        if all_pass { "PASS" } else { "FAIL" },
        rows.len()
    );

    let total = rows.len();
    if let Some(path) = out {
        let mut report = ReportFile::skeleton(sha256_hex(&bytes), spec.dim(), spec.hbar());
        report.audit = Some(AuditJson {
            seed,
            trials,
            tolerance: tol,
            shift_tolerance: shift_tol,
            pass: all_pass,
            worst,
            rows,
        });
        emit(&to_json_string(&report)?, Some(path))?;
    }

    if all_pass {
        Ok(())
    } else {
        Err(CliError {
            code: EXIT_INVARIANT,
            message: format!("invariance audit failed on {}/{total} trials", total - passed),
        })
    }
}

fn worst_row(rows: &[AuditTrialJson]) -> AuditTrialJson {
    let mut worst = AuditTrialJson {
        trial: 0,
        pass: rows.iter().all(|r| r.pass),
        d_residual: 0.0,
        c_residual: 0.0,
        h_prime_residual: 0.0,
        h_prime_trace_delta: 0.0,
        l1_residual: 0.0,
        l2_residual: 0.0,
        l3p_residual: 0.0,
        total_residual: 0.0,
        d00_shift_residual: 0.0,
        dvec_shift_residual: 0.0,
        cvec_shift_residual: 0.0,
    };
    for r in rows {
        worst.d_residual = worst.d_residual.max(r.d_residual);
        worst.c_residual = worst.c_residual.max(r.c_residual);
        worst.h_prime_residual = worst.h_prime_residual.max(r.h_prime_residual);
        worst.h_prime_trace_delta = worst.h_prime_trace_delta.max(r.h_prime_trace_delta.abs());
        worst.l1_residual = worst.l1_residual.max(r.l1_residual);
        worst.l2_residual = worst.l2_residual.max(r.l2_residual);
        worst.l3p_residual = worst.l3p_residual.max(r.l3p_residual);
        worst.total_residual = worst.total_residual.max(r.total_residual);
        worst.d00_shift_residual = worst.d00_shift_residual.max(r.d00_shift_residual);
        worst.dvec_shift_residual = worst.dvec_shift_residual.max(r.dvec_shift_residual);
        worst.cvec_shift_residual = worst.cvec_shift_residual.max(r.cvec_shift_residual);
    }
    worst
}

fn cmd_evolve(
    spec_path: &str,
    rho0_path: &Path,
    times_text: &str,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let bytes = read_input(spec_path)?;
    let text = String::from_utf8_lossy(&bytes);
    let spec = parse_spec(&text)?;
    let state_text = std::fs::read_to_string(rho0_path)?;
    let rho0 = parse_state(&state_text)?;
    let times =
        lindblad_fd::io::parse_times(times_text).map_err(|e| CliError::usage(e.to_string()))?;

    let liouvillian = liouvillian_direct(&spec);
    let states = trajectory(&liouvillian, &rho0, &times).map_err(CliError::from)?;
    let mut points = Vec::with_capacity(states.len());
    for (state, &t) in states.iter().zip(&times) {
        let phys = physicality_report(state.matrix())?;
        points.push(TrajectoryPointJson::new(t, state, &phys));
    }

    let mut report = ReportFile::skeleton(sha256_hex(&bytes), spec.dim(), spec.hbar());
    report.trajectory = Some(points);
    emit(&to_json_string(&report)?, out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_catalog(
    name: &str,
    gamma: Option<f64>,
    nth: Option<f64>,
    omega0: Option<f64>,
    gamma_down: Option<f64>,
    gamma_up: Option<f64>,
    lamb_down: Option<f64>,
    lamb_up: Option<f64>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let mut metadata = std::collections::BTreeMap::new();
    metadata.insert("catalog".to_string(), name.to_string());
    let fmt = |x: f64| format!("{x}");

    let spec = match name {
        "qubit-thermal" => {
            let g = gamma.ok_or_else(|| CliError::usage("qubit-thermal requires --gamma"))?;
            let n = nth.ok_or_else(|| CliError::usage("qubit-thermal requires --nth"))?;
            metadata.insert("gamma".to_string(), fmt(g));
            metadata.insert("nth".to_string(), fmt(n));
            catalog::qubit_thermal(g, n)?
        }
        "qubit-infinite-temperature" => {
            let g = gamma
                .ok_or_else(|| CliError::usage("qubit-infinite-temperature requires --gamma"))?;
            metadata.insert("gamma".to_string(), fmt(g));
            catalog::qubit_infinite_temperature(g)?
        }
        "qubit-depolarizing" => {
            let g = gamma.ok_or_else(|| CliError::usage("qubit-depolarizing requires --gamma"))?;
            metadata.insert("gamma".to_string(), fmt(g));
            catalog::qubit_depolarizing(g)?
        }
        "secular-qubit" => {
            let w0 = omega0.ok_or_else(|| CliError::usage("secular-qubit requires --omega0"))?;
            let gd = gamma_down.unwrap_or(0.0);
            let gu = gamma_up.unwrap_or(0.0);
            let sd = lamb_down.unwrap_or(0.0);
            let su = lamb_up.unwrap_or(0.0);
            metadata.insert("omega0".to_string(), fmt(w0));
            metadata.insert("gamma_down".to_string(), fmt(gd));
            metadata.insert("gamma_up".to_string(), fmt(gu));
            metadata.insert("lamb_down".to_string(), fmt(sd));
            metadata.insert("lamb_up".to_string(), fmt(su));
            let input = catalog::secular_qubit_input(w0, gd, gu, sd, su);
            let (spec, _) = catalog::secular_generator(&input)?;
            spec
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown catalog entry {other:?}; available: qubit-thermal, \
                 qubit-infinite-temperature, qubit-depolarizing, secular-qubit"
            )))
        }
    };

    let file = SpecFile::from_spec(&spec, metadata);
    emit(&to_json_string(&file)?, out)
}

fn cmd_dump_basis(n: usize, out: Option<&Path>) -> Result<(), CliError> {
    let basis = SuNBasis::new(n)?;
    let file = BasisFile::from_basis(&basis);
    emit(&to_json_string(&file)?, out)
}
