//! Trajectory generation with invariant monitoring.
//!
//! Two routes are provided: classical fixed-step RK4 for arbitrary fields,
//! and exact integration of affine fields ṗ = Ap + c through the matrix
//! exponential of the homogenized 4×4 system. The built-in scenarios also
//! have closed-form solutions, exposed by [`scenario_solution`].

use nalgebra::{Matrix3, Matrix4, Vector3, Vector4};

use crate::dynamics::Field;
use crate::error::{Error, Result};
use crate::scenarios::Scenario;
use crate::state_space::{check_physical, StatePoint};

/// Fixed-step integration window and monitoring knobs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    pub t0: f64,
    pub t1: f64,
    pub dt: f64,
    /// Guaranteed cadence of the physicality monitor, in steps. The
    /// three-component state makes the check cheap, so it actually runs
    /// every step.
    pub monitor_every: usize,
    /// Largest tolerated violation of the physicality constraint.
    pub drift_tol: f64,
}

impl IntegratorConfig {
    pub fn new(t0: f64, t1: f64, dt: f64) -> Result<Self> {
        let cfg = Self {
            t0,
            t1,
            dt,
            monitor_every: 10,
            drift_tol: 1e-8,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.t1 > self.t0) {
            return Err(Error::InvalidIntegratorConfig(format!(
                "need t1 > t0, got t0 = {}, t1 = {}",
                self.t0, self.t1
            )));
        }
        if !(self.dt > 0.0) {
            return Err(Error::InvalidIntegratorConfig(format!(
                "need dt > 0, got {}",
                self.dt
            )));
        }
        if self.dt > self.t1 - self.t0 {
            return Err(Error::InvalidIntegratorConfig(format!(
                "dt = {} exceeds the window t1 - t0 = {}",
                self.dt,
                self.t1 - self.t0
            )));
        }
        if self.monitor_every == 0 {
            return Err(Error::InvalidIntegratorConfig(
                "monitor_every must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Time-stamped states with per-step invariant logs.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub points: Vec<StatePoint>,
    /// Leaf radius r at each step.
    pub purity: Vec<f64>,
    /// Signed physicality residual at each step (nonnegative inside the
    /// manifold).
    pub residuals: Vec<f64>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn last_point(&self) -> &StatePoint {
        self.points.last().expect("trajectory is never empty")
    }

    /// Worst physicality violation over the run (0 when the trajectory
    /// never left the manifold).
    pub fn max_drift(&self) -> f64 {
        self.residuals
            .iter()
            .map(|r| (-r).max(0.0))
            .fold(0.0, f64::max)
    }
}

fn record(traj: &mut Trajectory, t: f64, p: StatePoint, drift_tol: f64) -> Result<()> {
    if !p.coords.iter().all(|c| c.is_finite()) {
        return Err(Error::NonFinite(t));
    }
    let rep = check_physical(&p, drift_tol);
    if !rep.ok {
        return Err(Error::DriftViolation {
            t,
            residual: rep.residual,
            tol: drift_tol,
        });
    }
    traj.times.push(t);
    traj.purity.push(p.raw_leaf_radius());
    traj.residuals.push(rep.residual);
    traj.points.push(p);
    Ok(())
}

/// Classical fixed-step fourth-order Runge–Kutta integration of `field`.
///
/// Every stored point is checked against the physicality constraint; a
/// violation beyond `cfg.drift_tol` aborts with a diagnostic.
pub fn integrate_rk4(field: &Field, p0: &StatePoint, cfg: &IntegratorConfig) -> Result<Trajectory> {
    cfg.validate()?;
    if p0.kind != field.kind {
        return Err(Error::KindMismatch(field.kind, p0.kind));
    }
    check_physical(p0, cfg.drift_tol)
        .ok
        .then_some(())
        .ok_or_else(|| Error::NonPhysical("initial state".into()))?;

    let span = cfg.t1 - cfg.t0;
    let n_full = (span / cfg.dt).floor() as usize;
    let remainder = span - n_full as f64 * cfg.dt;
    let total = n_full + usize::from(remainder > 1e-12 * cfg.dt);

    let mut traj = Trajectory {
        times: Vec::with_capacity(total + 1),
        points: Vec::with_capacity(total + 1),
        purity: Vec::with_capacity(total + 1),
        residuals: Vec::with_capacity(total + 1),
    };

    let mut x = p0.coords;
    let mut t = cfg.t0;
    record(&mut traj, t, StatePoint::new(p0.kind, x), cfg.drift_tol)?;

    for step in 0..total {
        let h = if step < n_full { cfg.dt } else { remainder };
        let k1 = field.eval(x);
        let k2 = field.eval(advance(x, k1, 0.5 * h));
        let k3 = field.eval(advance(x, k2, 0.5 * h));
        let k4 = field.eval(advance(x, k3, h));
        for i in 0..3 {
            x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        t = if step + 1 == total {
            cfg.t1
        } else {
            cfg.t0 + (step + 1) as f64 * cfg.dt
        };
        record(&mut traj, t, StatePoint::new(p0.kind, x), cfg.drift_tol)?;
    }
    Ok(traj)
}

fn advance(x: [f64; 3], k: [f64; 3], h: f64) -> [f64; 3] {
    [x[0] + h * k[0], x[1] + h * k[1], x[2] + h * k[2]]
}

/// Exact flow of the affine system ṗ = Ap + c at the requested times.
///
/// The constant is absorbed by homogenizing to the 4×4 block
/// [[A, c], [0, 0]] whose exponential is evaluated by scaling-and-squaring
/// with a 13th-order Padé approximant.
pub fn integrate_exact_affine(
    a: &Matrix3<f64>,
    c: &Vector3<f64>,
    p0: &StatePoint,
    times: &[f64],
) -> Result<Trajectory> {
    if !a.iter().all(|x| x.is_finite()) || !c.iter().all(|x| x.is_finite()) {
        return Err(Error::NonFinite(f64::NAN));
    }
    if times.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidIntegratorConfig(
            "times must be strictly increasing".into(),
        ));
    }
    if times.first().is_some_and(|t| *t < 0.0) {
        return Err(Error::InvalidIntegratorConfig(
            "times must be nonnegative".into(),
        ));
    }

    let mut m = Matrix4::zeros();
    for i in 0..3 {
        for j in 0..3 {
            m[(i, j)] = a[(i, j)];
        }
        m[(i, 3)] = c[i];
    }
    let w0 = Vector4::new(p0.coords[0], p0.coords[1], p0.coords[2], 1.0);

    let mut traj = Trajectory {
        times: Vec::with_capacity(times.len()),
        points: Vec::with_capacity(times.len()),
        purity: Vec::with_capacity(times.len()),
        residuals: Vec::with_capacity(times.len()),
    };
    for &t in times {
        let w = (m * t).exp() * w0;
        let p = StatePoint::new(p0.kind, [w[0], w[1], w[2]]);
        if !p.coords.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite(t));
        }
        let rep = check_physical(&p, f64::INFINITY);
        traj.times.push(t);
        traj.purity.push(p.raw_leaf_radius());
        traj.residuals.push(rep.residual);
        traj.points.push(p);
    }
    Ok(traj)
}

/// Closed-form solution of a built-in scenario at time `t` from `p0`.
///
/// The common transverse block is the damped rotation
/// u(t) = e^{−γt/2}(u₀ cos 2t + w₀ sin 2t), w(t) = e^{−γt/2}(w₀ cos 2t − u₀ sin 2t)
/// for the oscillators (rotation rate 2ω = 2), and its (ν, γ) analogue for
/// the two-level systems.
pub fn scenario_solution(s: &Scenario, p0: &StatePoint, t: f64) -> Result<StatePoint> {
    if p0.kind != s.kind {
        return Err(Error::KindMismatch(s.kind, p0.kind));
    }
    let [a0, b0, c0] = p0.coords;
    let gamma = s.params.gamma;
    let nu = s.params.nu;
    match s.name {
        "qbit_dephasing" | "qbit_raising" => {
            let damp = (-gamma * t).exp();
            let (sin, cos) = (nu * t).sin_cos();
            let x1 = damp * (a0 * cos - b0 * sin);
            let x2 = damp * (b0 * cos + a0 * sin);
            let x3 = if s.name == "qbit_raising" {
                1.0 + (c0 - 1.0) * (-2.0 * gamma * t).exp()
            } else {
                c0
            };
            Ok(StatePoint::qbit(x1, x2, x3))
        }
        "osc_L1" | "osc_Kplus" => {
            let damp = (-0.5 * gamma * t).exp();
            let (sin, cos) = (2.0 * t).sin_cos();
            let y2 = damp * (b0 * cos + c0 * sin);
            let y3 = damp * (c0 * cos - b0 * sin);
            let y1 = if s.name == "osc_Kplus" {
                2.0 + (a0 - 2.0) * (-gamma * t).exp()
            } else {
                a0
            };
            Ok(StatePoint::gaussian(y1, y2, y3))
        }
        other => Err(Error::UnknownScenario(other.to_string())),
    }
}
