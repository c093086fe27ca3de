//! Built-in damped systems with fully known dynamics.
//!
//! Two two-level systems (Ĥ = ½ħν σ³ with dephasing or raising dissipation)
//! and two damped harmonic oscillators (Ĥ = 2L̂¹ at ω = 1, with an L̂¹ or a
//! K̂₊ jump operator). Each scenario carries the expected affine form of Γ
//! and its fixed-point set, so it can serve as a golden reference.

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64 as C64;

use crate::algebra::{AlgebraElement, AlgebraKind};
use crate::dynamics::{gkls_field, DissipatorSet, FieldDecomposition, HamiltonianSpec};
use crate::error::{Error, Result};
use crate::state_space::StatePoint;

/// Names accepted by [`build_scenario`], in presentation order.
pub const SCENARIO_NAMES: [&str; 4] = ["qbit_dephasing", "qbit_raising", "osc_L1", "osc_Kplus"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioParams {
    /// Two-level transition frequency (ignored by the oscillator scenarios).
    pub nu: f64,
    /// Damping parameter.
    pub gamma: f64,
    /// Oscillator frequency, fixed at 1.
    pub omega: f64,
}

/// A named system with its construction inputs and ground-truth dynamics.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: &'static str,
    pub kind: AlgebraKind,
    pub h: HamiltonianSpec,
    pub d: DissipatorSet,
    pub params: ScenarioParams,
    /// The known affine form (A, c) of Γ with ν, γ substituted.
    pub expected_affine: (Matrix3<f64>, Vector3<f64>),
    /// Representative points of the singular set of Γ.
    pub fixed_points: Vec<StatePoint>,
    hbar: f64,
}

impl Scenario {
    /// One-line description for listings.
    pub fn describe(name: &str) -> &'static str {
        match name {
            "qbit_dephasing" => "two-level atom with v̂₁ = √(γ/2) σ³ (pure dephasing)",
            "qbit_raising" => "two-level atom with v̂₁ = √(2γ) σ₊ (pumping to the north pole)",
            "osc_L1" => "harmonic oscillator with v̂₁ = (√γ/ħ) L̂¹",
            "osc_Kplus" => "harmonic oscillator with v̂₁ = √γ K̂₊",
            _ => "unknown",
        }
    }

    /// Builds Γ for this scenario.
    pub fn field(&self) -> Result<FieldDecomposition> {
        gkls_field(&self.h, &self.d, self.hbar)
    }

    /// Checks that the constructed Γ matches `expected_affine` entrywise and
    /// vanishes at every listed fixed point.
    pub fn verify(&self, tol: f64) -> Result<()> {
        let fd = self.field()?;
        let (a, c) = &fd.gamma_affine;
        let (ea, ec) = &self.expected_affine;
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            worst = worst.max((c[i] - ec[i]).abs());
            for j in 0..3 {
                worst = worst.max((a[(i, j)] - ea[(i, j)]).abs());
            }
        }
        if worst > tol {
            return Err(Error::CancellationResidual(worst));
        }
        for p in &self.fixed_points {
            let v = fd.gamma.eval(p.coords);
            let norm = v.iter().map(|x| x.abs()).fold(0.0, f64::max);
            if norm > tol {
                return Err(Error::CancellationResidual(norm));
            }
        }
        Ok(())
    }

    /// Euclidean distance from `p` to the advertised attractor set.
    pub fn attractor_distance(&self, p: &StatePoint) -> f64 {
        let [a, b, c] = p.coords;
        match self.name {
            // singular line (0, 0, x³)
            "qbit_dephasing" => (a * a + b * b).sqrt(),
            "qbit_raising" => (a * a + b * b + (c - 1.0) * (c - 1.0)).sqrt(),
            // singular line (y¹, 0, 0)
            "osc_L1" => (b * b + c * c).sqrt(),
            "osc_Kplus" => ((a - 2.0) * (a - 2.0) + b * b + c * c).sqrt(),
            _ => f64::NAN,
        }
    }
}

/// Builds one of the four named scenarios at the given parameters.
///
/// `nu` is used only by the two-level scenarios; the oscillators run at
/// ω = 1. The damping `gamma` must be nonnegative.
pub fn build_scenario(name: &str, nu: f64, gamma: f64, hbar: f64) -> Result<Scenario> {
    if gamma < 0.0 {
        return Err(Error::Config(format!(
            "damping parameter must be nonnegative, got gamma = {gamma}"
        )));
    }
    let params = ScenarioParams {
        nu,
        gamma,
        omega: 1.0,
    };
    let zero3 = Vector3::zeros();
    match name {
        "qbit_dephasing" => {
            let h = HamiltonianSpec::new(AlgebraKind::Qbit, [0.0, 0.0, 0.0, 0.5 * hbar * nu]);
            let v = AlgebraElement::real(AlgebraKind::Qbit, [0.0, 0.0, 0.0, (gamma / 2.0).sqrt()]);
            let d = DissipatorSet::new(AlgebraKind::Qbit, vec![v], hbar)?;
            let a = Matrix3::new(
                -gamma, -nu, 0.0, //
                nu, -gamma, 0.0, //
                0.0, 0.0, 0.0,
            );
            Ok(Scenario {
                name: "qbit_dephasing",
                kind: AlgebraKind::Qbit,
                h,
                d,
                params,
                expected_affine: (a, zero3),
                fixed_points: vec![
                    StatePoint::qbit(0.0, 0.0, 0.0),
                    StatePoint::qbit(0.0, 0.0, 0.5),
                    StatePoint::qbit(0.0, 0.0, 1.0),
                    StatePoint::qbit(0.0, 0.0, -1.0),
                ],
                hbar,
            })
        }
        "qbit_raising" => {
            let h = HamiltonianSpec::new(AlgebraKind::Qbit, [0.0, 0.0, 0.0, 0.5 * hbar * nu]);
            let s = 0.5 * (2.0 * gamma).sqrt();
            let v = AlgebraElement::new(
                AlgebraKind::Qbit,
                [
                    C64::new(0.0, 0.0),
                    C64::new(s, 0.0),
                    C64::new(0.0, s),
                    C64::new(0.0, 0.0),
                ],
            );
            let d = DissipatorSet::new(AlgebraKind::Qbit, vec![v], hbar)?;
            let a = Matrix3::new(
                -gamma, -nu, 0.0, //
                nu, -gamma, 0.0, //
                0.0, 0.0, -2.0 * gamma,
            );
            Ok(Scenario {
                name: "qbit_raising",
                kind: AlgebraKind::Qbit,
                h,
                d,
                params,
                expected_affine: (a, Vector3::new(0.0, 0.0, 2.0 * gamma)),
                fixed_points: vec![StatePoint::qbit(0.0, 0.0, 1.0)],
                hbar,
            })
        }
        "osc_L1" => {
            let h = HamiltonianSpec::new(AlgebraKind::Gaussian, [0.0, 2.0, 0.0, 0.0]);
            let v = AlgebraElement::real(
                AlgebraKind::Gaussian,
                [0.0, gamma.sqrt() / hbar, 0.0, 0.0],
            );
            let d = DissipatorSet::new(AlgebraKind::Gaussian, vec![v], hbar)?;
            let a = Matrix3::new(
                0.0, 0.0, 0.0, //
                0.0, -0.5 * gamma, 2.0, //
                0.0, -2.0, -0.5 * gamma,
            );
            Ok(Scenario {
                name: "osc_L1",
                kind: AlgebraKind::Gaussian,
                h,
                d,
                params,
                expected_affine: (a, zero3),
                fixed_points: vec![
                    StatePoint::gaussian(1.0, 0.0, 0.0),
                    StatePoint::gaussian(2.0, 0.0, 0.0),
                    StatePoint::gaussian(3.5, 0.0, 0.0),
                ],
                hbar,
            })
        }
        "osc_Kplus" => {
            let h = HamiltonianSpec::new(AlgebraKind::Gaussian, [0.0, 2.0, 0.0, 0.0]);
            let s = gamma.sqrt() / hbar;
            // K̂₊ = (1/iħ)(L̂³ + iL̂²) = (1/ħ)(L̂² − iL̂³)
            let v = AlgebraElement::new(
                AlgebraKind::Gaussian,
                [
                    C64::new(0.0, 0.0),
                    C64::new(0.0, 0.0),
                    C64::new(s, 0.0),
                    C64::new(0.0, -s),
                ],
            );
            let d = DissipatorSet::new(AlgebraKind::Gaussian, vec![v], hbar)?;
            let a = Matrix3::new(
                -gamma, 0.0, 0.0, //
                0.0, -0.5 * gamma, 2.0, //
                0.0, -2.0, -0.5 * gamma,
            );
            Ok(Scenario {
                name: "osc_Kplus",
                kind: AlgebraKind::Gaussian,
                h,
                d,
                params,
                expected_affine: (a, Vector3::new(2.0 * gamma, 0.0, 0.0)),
                fixed_points: vec![StatePoint::gaussian(2.0, 0.0, 0.0)],
                hbar,
            })
        }
        other => Err(Error::UnknownScenario(other.to_string())),
    }
}
