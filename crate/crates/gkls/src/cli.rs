//! JSON run configurations, batch execution, and CSV/JSON emission.
//!
//! The `gkls` binary is a thin wrapper over [`execute`]; everything here is
//! ordinary library code so runs can also be driven programmatically.
//!
//! Exit codes: 0 success, 2 configuration error, 3 physics/drift error,
//! 4 i/o error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64 as C64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, AlgebraKind};
use crate::dynamics::{
    gkls_field, oracle_velocity_with_audit, affine_content, DissipatorSet, FieldDecomposition,
    HamiltonianSpec,
};
use crate::error::{Error, Result};
use crate::integrator::{integrate_rk4, IntegratorConfig, Trajectory};
use crate::scenarios::{build_scenario, Scenario, SCENARIO_NAMES};
use crate::state_space::{check_physical, StatePoint, PHYSICAL_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_PHYSICS: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Exact header of trajectory CSV files.
pub const TRAJECTORY_HEADER: &str = "t,c1,c2,c3,r,residual";
/// Exact header of field-grid CSV files.
pub const GRID_HEADER: &str = "g1,g2,g3,f1,f2,f3,r,physical";

fn default_hbar() -> f64 {
    1.0
}
fn default_nu() -> f64 {
    2.0
}
fn default_gamma() -> f64 {
    1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemKind {
    Qbit,
    Gaussian,
}

impl SystemKind {
    pub fn algebra_kind(self) -> AlgebraKind {
        match self {
            SystemKind::Qbit => AlgebraKind::Qbit,
            SystemKind::Gaussian => AlgebraKind::Gaussian,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub name: String,
    #[serde(default = "default_nu")]
    pub nu: f64,
    #[serde(default = "default_gamma")]
    pub gamma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimeConfig {
    pub t0: f64,
    pub t1: f64,
    pub dt: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trajectory_csv: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field_grid_csv: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report_json: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    /// Inclusive [min, max] per axis.
    pub ranges: [[f64; 2]; 3],
    /// Sample counts per axis; a single sample sits at the range minimum.
    pub counts: [usize; 3],
}

/// One complete run description. Complex numbers are [re, im] pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub system: SystemKind,
    #[serde(default = "default_hbar")]
    pub hbar: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hamiltonian: Option<[f64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dissipators: Option<Vec<[[f64; 2]; 4]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scenario: Option<ScenarioConfig>,
    pub initial: [f64; 3],
    pub time: TimeConfig,
    #[serde(default)]
    pub outputs: OutputConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridConfig>,
}

impl RunConfig {
    pub fn kind(&self) -> AlgebraKind {
        self.system.algebra_kind()
    }

    pub fn initial_point(&self) -> StatePoint {
        StatePoint::new(self.kind(), self.initial)
    }

    pub fn integrator_config(&self) -> Result<IntegratorConfig> {
        IntegratorConfig::new(self.time.t0, self.time.t1, self.time.dt)
            .map_err(|e| Error::Config(format!("time: {e}")))
    }

    /// Semantic validation beyond the JSON schema.
    pub fn validate(&self) -> Result<()> {
        if !(self.hbar > 0.0) {
            return Err(Error::Config(format!(
                "hbar must be positive, got {}",
                self.hbar
            )));
        }
        match (&self.scenario, &self.hamiltonian) {
            (Some(_), Some(_)) => {
                return Err(Error::Config(
                    "give either `scenario` or `hamiltonian`+`dissipators`, not both".into(),
                ))
            }
            (None, None) => {
                return Err(Error::Config(
                    "one of `scenario` or `hamiltonian` is required".into(),
                ))
            }
            (Some(_), None) if self.dissipators.is_some() => {
                return Err(Error::Config(
                    "`dissipators` cannot be combined with `scenario`".into(),
                ))
            }
            _ => {}
        }
        let p = self.initial_point();
        if !check_physical(&p, PHYSICAL_TOL).ok {
            return Err(Error::Config(match self.system {
                SystemKind::Qbit => "initial state outside Bloch ball".into(),
                SystemKind::Gaussian => "initial state outside solid hyperboloid".into(),
            }));
        }
        self.integrator_config()?;
        if let Some(grid) = &self.grid {
            if grid.counts.iter().any(|&n| n == 0) {
                return Err(Error::Config("grid: counts must all be positive".into()));
            }
            for (axis, range) in grid.ranges.iter().enumerate() {
                if range[1] < range[0] {
                    return Err(Error::Config(format!(
                        "grid: axis {} range is reversed",
                        axis + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// The Hamiltonian, dissipator set and (when configured) scenario.
    pub fn build_system(&self) -> Result<(HamiltonianSpec, DissipatorSet, Option<Scenario>)> {
        let kind = self.kind();
        if let Some(sc) = &self.scenario {
            let s = build_scenario(&sc.name, sc.nu, sc.gamma, self.hbar)?;
            if s.kind != kind {
                return Err(Error::Config(format!(
                    "scenario `{}` belongs to the {:?} system",
                    sc.name, s.kind
                )));
            }
            return Ok((s.h, s.d.clone(), Some(s)));
        }
        let h = HamiltonianSpec::new(kind, self.hamiltonian.expect("validated"));
        let vs = self
            .dissipators
            .clone()
            .unwrap_or_default()
            .into_iter()
            .map(|entry| {
                AlgebraElement::new(kind, entry.map(|[re, im]| C64::new(re, im)))
            })
            .collect();
        let d = DissipatorSet::new(kind, vs, self.hbar)?;
        Ok((h, d, None))
    }

    pub fn field_decomposition(&self) -> Result<FieldDecomposition> {
        let (h, d, _) = self.build_system()?;
        gkls_field(&h, &d, self.hbar)
    }
}

/// Parses and validates a JSON run configuration.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let cfg: RunConfig =
        serde_json::from_str(text).map_err(|e| Error::Config(format!("malformed config: {e}")))?;
    cfg.validate()?;
    Ok(cfg)
}

/// Reads a configuration file and applies the `GKLS_HBAR` override.
pub fn load_config(path: &Path) -> Result<RunConfig> {
    let text = fs::read_to_string(path)?;
    let mut cfg: RunConfig = serde_json::from_str(&text)
        .map_err(|e| Error::Config(format!("malformed config: {e}")))?;
    if let Ok(raw) = std::env::var("GKLS_HBAR") {
        let hbar: f64 = raw
            .parse()
            .map_err(|_| Error::Config(format!("GKLS_HBAR is not a number: `{raw}`")))?;
        cfg.hbar = hbar;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Renders a trajectory as CSV with the stable `t,c1,c2,c3,r,residual`
/// schema and 17-significant-digit floats.
pub fn trajectory_csv(traj: &Trajectory) -> String {
    let mut out = String::with_capacity(64 * (traj.len() + 1));
    out.push_str(TRAJECTORY_HEADER);
    out.push('\n');
    for k in 0..traj.len() {
        let p = &traj.points[k];
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            fmt_f64(traj.times[k]),
            fmt_f64(p.coords[0]),
            fmt_f64(p.coords[1]),
            fmt_f64(p.coords[2]),
            fmt_f64(traj.purity[k]),
            fmt_f64(traj.residuals[k]),
        );
    }
    out
}

/// One sampled grid row.
#[derive(Debug, Clone, PartialEq)]
pub struct GridRow {
    pub coords: [f64; 3],
    pub velocity: [f64; 3],
    pub r: f64,
    pub physical: bool,
}

fn linspace(range: [f64; 2], n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![range[0]];
    }
    (0..n)
        .map(|i| range[0] + (range[1] - range[0]) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Samples Γ over the configured tensor grid.
pub fn sample_field_grid(cfg: &RunConfig) -> Result<Vec<GridRow>> {
    let grid = cfg
        .grid
        .as_ref()
        .ok_or_else(|| Error::Config("`grid` block is required for field sampling".into()))?;
    let fd = cfg.field_decomposition()?;
    let axes: Vec<Vec<f64>> = (0..3)
        .map(|i| linspace(grid.ranges[i], grid.counts[i]))
        .collect();
    let mut rows = Vec::with_capacity(grid.counts.iter().product());
    for &g1 in &axes[0] {
        for &g2 in &axes[1] {
            for &g3 in &axes[2] {
                let coords = [g1, g2, g3];
                let p = StatePoint::new(cfg.kind(), coords);
                rows.push(GridRow {
                    coords,
                    velocity: fd.gamma.eval(coords),
                    r: p.raw_leaf_radius(),
                    physical: check_physical(&p, 1e-12).ok,
                });
            }
        }
    }
    Ok(rows)
}

/// Renders grid rows with the stable `g1,g2,g3,f1,f2,f3,r,physical` schema.
pub fn grid_csv(rows: &[GridRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(GRID_HEADER);
    out.push('\n');
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            fmt_f64(row.coords[0]),
            fmt_f64(row.coords[1]),
            fmt_f64(row.coords[2]),
            fmt_f64(row.velocity[0]),
            fmt_f64(row.velocity[1]),
            fmt_f64(row.velocity[2]),
            fmt_f64(row.r),
            row.physical,
        );
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct AffineForm {
    pub a: [[f64; 3]; 3],
    pub c: [f64; 3],
}

impl AffineForm {
    fn from_parts(a: &Matrix3<f64>, c: &Vector3<f64>) -> Self {
        Self {
            a: [
                [a[(0, 0)], a[(0, 1)], a[(0, 2)]],
                [a[(1, 0)], a[(1, 1)], a[(1, 2)]],
                [a[(2, 0)], a[(2, 1)], a[(2, 2)]],
            ],
            c: [c[0], c[1], c[2]],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PartsReport {
    pub x_h: AffineForm,
    pub y_b: AffineForm,
    pub z_k: AffineForm,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditSummary {
    pub max_drift: f64,
    pub oracle_residual_initial: f64,
    pub steps: usize,
}

/// The `run` report: decomposition, spectral data and the invariant audit.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub system: SystemKind,
    pub hbar: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scenario: Option<String>,
    pub gamma: AffineForm,
    pub parts: PartsReport,
    /// Solution of A p = −c when A is invertible.
    pub fixed_point: Option<[f64; 3]>,
    /// Eigenvalues of A as [re, im], sorted by real then imaginary part.
    pub eigenvalues: Vec<[f64; 2]>,
    pub audit: AuditSummary,
}

fn solve_fixed_point(a: &Matrix3<f64>, c: &Vector3<f64>) -> Option<[f64; 3]> {
    let scale = a.iter().map(|x| x.abs()).fold(0.0, f64::max);
    if a.determinant().abs() <= 1e-12 * scale.powi(3).max(1e-300) {
        return None;
    }
    a.lu().solve(&(-c)).map(|p| [p[0], p[1], p[2]])
}

fn sorted_eigenvalues(a: &Matrix3<f64>) -> Vec<[f64; 2]> {
    let mut eigs: Vec<[f64; 2]> = a
        .complex_eigenvalues()
        .iter()
        .map(|z| [z.re, z.im])
        .collect();
    eigs.sort_by(|p, q| {
        p[0].partial_cmp(&q[0])
            .unwrap()
            .then(p[1].partial_cmp(&q[1]).unwrap())
    });
    eigs
}

/// Runs the configured system: builds Γ, integrates, writes the requested
/// outputs, and returns the report.
pub fn run(cfg: &RunConfig) -> Result<RunReport> {
    cfg.validate()?;
    let (h, d, scenario) = cfg.build_system()?;
    let fd = gkls_field(&h, &d, cfg.hbar)?;
    let icfg = cfg.integrator_config()?;
    let traj = integrate_rk4(&fd.gamma, &cfg.initial_point(), &icfg)?;

    let oracle = oracle_velocity_with_audit(&h, &d, &cfg.initial_point(), cfg.hbar)?;
    let direct = fd.gamma.eval(cfg.initial);
    let oracle_residual_initial = (0..3)
        .map(|i| (oracle.velocity[i] - direct[i]).abs())
        .fold(0.0, f64::max);

    let (a, c) = &fd.gamma_affine;
    let report = RunReport {
        system: cfg.system,
        hbar: cfg.hbar,
        scenario: scenario.map(|s| s.name.to_string()),
        gamma: AffineForm::from_parts(a, c),
        parts: PartsReport {
            x_h: affine_form_of(&fd.x_h),
            y_b: affine_form_of(&fd.y_b),
            z_k: affine_form_of(&fd.z_k),
        },
        fixed_point: solve_fixed_point(a, c),
        eigenvalues: sorted_eigenvalues(a),
        audit: AuditSummary {
            max_drift: traj.max_drift(),
            oracle_residual_initial,
            steps: traj.len() - 1,
        },
    };

    if let Some(path) = &cfg.outputs.trajectory_csv {
        fs::write(path, trajectory_csv(&traj))?;
    }
    if let Some(path) = &cfg.outputs.report_json {
        fs::write(path, serde_json::to_string_pretty(&report).expect("report is serializable"))?;
    }
    Ok(report)
}

fn affine_form_of(field: &crate::dynamics::Field) -> AffineForm {
    let (a, c) = affine_content(field);
    AffineForm::from_parts(&a, &c)
}

/// The `verify` report: generator/decomposition audit over probe points.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub system: SystemKind,
    pub hbar: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scenario: Option<String>,
    pub points_checked: usize,
    /// max |Γ(p) − L-generator velocity(p)| over the probes.
    pub oracle_residual: f64,
    /// max |trace-component velocity| over the probes.
    pub trace_velocity: f64,
    /// max |Γ(p) − (X_H + Y_b + Z_K)(p)|.
    pub decomposition_residual: f64,
    /// max |Γ(p) − (A p + c)|.
    pub affine_residual: f64,
    /// Entrywise mismatch against the scenario's known (A, c), when a
    /// scenario is configured.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_affine_residual: Option<f64>,
    pub ok: bool,
}

fn sample_physical_point(kind: AlgebraKind, rng: &mut ChaCha8Rng) -> StatePoint {
    match kind {
        AlgebraKind::Qbit => loop {
            let x: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
            if x.iter().map(|v| v * v).sum::<f64>() <= 0.95 {
                return StatePoint::new(kind, x);
            }
        },
        AlgebraKind::Gaussian => {
            let r = rng.gen_range(1.0..2.5);
            let tau: f64 = rng.gen_range(0.0..1.5);
            let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            StatePoint::gaussian(
                r * tau.cosh(),
                r * tau.sinh() * phi.cos(),
                r * tau.sinh() * phi.sin(),
            )
        }
    }
}

/// Audits the constructed field against the matrix-arithmetic generator at
/// the initial state plus 20 random physical probes.
pub fn verify(cfg: &RunConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    let (h, d, scenario) = cfg.build_system()?;
    let fd = gkls_field(&h, &d, cfg.hbar)?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x76657269);
    let mut probes = vec![cfg.initial_point()];
    for _ in 0..20 {
        probes.push(sample_physical_point(cfg.kind(), &mut rng));
    }

    let mut oracle_residual: f64 = 0.0;
    let mut trace_velocity: f64 = 0.0;
    let mut decomposition_residual: f64 = 0.0;
    let mut affine_residual: f64 = 0.0;
    for p in &probes {
        let audit = oracle_velocity_with_audit(&h, &d, p, cfg.hbar)?;
        let direct = fd.gamma.eval(p.coords);
        let x = fd.x_h.eval(p.coords);
        let y = fd.y_b.eval(p.coords);
        let z = fd.z_k.eval(p.coords);
        let affine = fd.affine_eval(p.coords);
        for i in 0..3 {
            oracle_residual = oracle_residual.max((audit.velocity[i] - direct[i]).abs());
            decomposition_residual =
                decomposition_residual.max((x[i] + y[i] + z[i] - direct[i]).abs());
            affine_residual = affine_residual.max((affine[i] - direct[i]).abs());
        }
        trace_velocity = trace_velocity.max(audit.trace_velocity.abs());
    }

    let expected_affine_residual = scenario.as_ref().map(|s| {
        let (a, c) = &fd.gamma_affine;
        let (ea, ec) = &s.expected_affine;
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            worst = worst.max((c[i] - ec[i]).abs());
            for j in 0..3 {
                worst = worst.max((a[(i, j)] - ea[(i, j)]).abs());
            }
        }
        worst
    });

    let ok = oracle_residual <= 1e-9
        && trace_velocity <= 1e-12
        && decomposition_residual <= 1e-10
        && affine_residual <= 1e-10
        && expected_affine_residual.is_none_or(|r| r <= 1e-12);

    let report = VerifyReport {
        system: cfg.system,
        hbar: cfg.hbar,
        scenario: scenario.map(|s| s.name.to_string()),
        points_checked: probes.len(),
        oracle_residual,
        trace_velocity,
        decomposition_residual,
        affine_residual,
        expected_affine_residual,
        ok,
    };
    if let Some(path) = &cfg.outputs.report_json {
        fs::write(path, serde_json::to_string_pretty(&report).expect("report is serializable"))?;
    }
    Ok(report)
}

#[derive(Parser)]
#[command(name = "gkls", version, about = "GKLS vector-field simulator for two-level and Gaussian systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate a configured system and write trajectory/report outputs.
    Run { config: PathBuf },
    /// Sample the GKLS field on the configured grid and emit CSV.
    Field { config: PathBuf },
    /// Inspect the built-in scenarios.
    Scenarios {
        #[command(subcommand)]
        action: ScenariosAction,
    },
    /// Run the generator/decomposition audit only.
    Verify { config: PathBuf },
}

#[derive(Subcommand)]
enum ScenariosAction {
    /// List the built-in scenario names.
    List,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) => EXIT_IO,
        Error::DriftViolation { .. }
        | Error::NonFinite(_)
        | Error::TracePreservation(_)
        | Error::CancellationResidual(_)
        | Error::NonCompletelyPositive(_) => EXIT_PHYSICS,
        _ => EXIT_CONFIG,
    }
}

/// Command-line entry point; returns the process exit code.
pub fn execute<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let outcome = match cli.command {
        Command::Run { config } => cmd_run(&config),
        Command::Field { config } => cmd_field(&config),
        Command::Scenarios { action: ScenariosAction::List } => {
            for name in SCENARIO_NAMES {
                println!("{name:<16} {}", Scenario::describe(name));
            }
            Ok(())
        }
        Command::Verify { config } => cmd_verify(&config),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("gkls: {e}");
            exit_code(&e)
        }
    }
}

fn cmd_run(path: &Path) -> Result<()> {
    let cfg = load_config(path)?;
    let report = run(&cfg)?;
    if cfg.outputs.report_json.is_none() {
        println!("{}", serde_json::to_string_pretty(&report).expect("report is serializable"));
    }
    Ok(())
}

fn cmd_field(path: &Path) -> Result<()> {
    let cfg = load_config(path)?;
    let rows = sample_field_grid(&cfg)?;
    let csv = grid_csv(&rows);
    match &cfg.outputs.field_grid_csv {
        Some(out) => fs::write(out, csv)?,
        None => print!("{csv}"),
    }
    Ok(())
}

fn cmd_verify(path: &Path) -> Result<()> {
    let cfg = load_config(path)?;
    let report = verify(&cfg)?;
    if cfg.outputs.report_json.is_none() {
        println!("{}", serde_json::to_string_pretty(&report).expect("report is serializable"));
    }
    if !report.ok {
        return Err(Error::CancellationResidual(
            report
                .oracle_residual
                .max(report.decomposition_residual)
                .max(report.affine_residual),
        ));
    }
    Ok(())
}
