//! Flows of the GKLS (Lindblad) master equation on finite-dimensional state
//! manifolds: the Bloch ball for two-level systems and the solid hyperboloid
//! of second moments for Gaussian states.
//!
//! The dynamical vector field Γ is constructed in three named pieces,
//!
//! ```text
//! Γ = X_H + Y_b + Z_K
//! ```
//!
//! a Hamiltonian rotation tangent to the constant-purity leaves, a
//! gradient-like field transverse to the leaves but tangent to the pure
//! boundary, and a Choi–Kraus (jump) field that alone can change the purity
//! of a boundary state. The quadratic parts of `Y_b` and `Z_K` cancel, so Γ
//! is affine in Cartesian coordinates and can be integrated both by
//! fixed-step RK4 and exactly through the matrix exponential.
//!
//! ```
//! use gkls::integrator::{integrate_rk4, IntegratorConfig};
//! use gkls::scenarios::build_scenario;
//! use gkls::state_space::StatePoint;
//!
//! # fn main() -> gkls::Result<()> {
//! let scenario = build_scenario("osc_Kplus", 2.0, 1.0, 1.0)?;
//! let field = scenario.field()?;
//! let cfg = IntegratorConfig::new(0.0, 10.0, 1e-3)?;
//! let traj = integrate_rk4(&field.gamma, &StatePoint::gaussian(3.0, 0.0, 0.0), &cfg)?;
//! assert!(scenario.attractor_distance(traj.last_point()) < 1e-4);
//! # Ok(())
//! # }
//! ```
//!
//! Module map:
//!
//! * [`algebra`] — the Pauli and sl(2,ℝ) matrix bases, Lie/Jordan products,
//!   trace pairing, basis projection.
//! * [`state_space`] — Bloch ball and solid hyperboloid, charts, second
//!   moments, squeezing, density matrices, Wigner functions.
//! * [`dynamics`] — field construction, Kraus coefficient tables, the
//!   matrix-arithmetic reference generator, chart-level Riccati equations
//!   and leaf brackets.
//! * [`integrator`] — RK4 and exact-affine trajectory generation with
//!   invariant monitoring, closed-form scenario solutions.
//! * [`scenarios`] — the built-in damped two-level and damped-oscillator
//!   systems with their known fields, fixed points and solutions.
//! * [`cli`] — JSON run configurations, CSV/JSON emission, the `gkls`
//!   command-line entry points.

pub mod algebra;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod integrator;
pub mod quadrature;
pub mod scenarios;
pub mod state_space;

pub use algebra::{Algebra, AlgebraElement, AlgebraKind, Matrix2c, MetricG, StructureConstants};
pub use dynamics::{DissipatorSet, Field, FieldDecomposition, HamiltonianSpec, KrausMatrix};
pub use error::{Error, Result};
pub use integrator::{IntegratorConfig, Trajectory};
pub use scenarios::Scenario;
pub use state_space::{ChartValue, SecondMoments, StatePoint};
