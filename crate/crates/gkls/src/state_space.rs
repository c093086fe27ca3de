//! The physical parameter manifolds and their charts.
//!
//! A two-level state is a point of the Bloch ball |x| ≤ 1; a (zero-mean)
//! Gaussian state is a point of the solid hyperboloid
//! (y¹)² − (y²)² − (y³)² ≥ 1, y¹ > 0, built from the second moments by
//!
//! ```text
//! y¹ = (σ_p² + σ_q²)/ħ,   y² = 2σ_qp/ħ,   y³ = (σ_p² − σ_q²)/ħ.
//! ```
//!
//! Both manifolds are foliated by constant-purity leaves labelled by
//! r = |x| (ball) or r = √((y¹)² − (y²)² − (y³)²) (hyperboloid), with
//! Tr ρ̂² = (1 + r²)/2 and Tr ρ̂² = 1/r respectively.

use num_complex::Complex64 as C64;

use crate::algebra::{AlgebraKind, Matrix2c};
use crate::error::{Error, Result};

/// Default slack allowed on the physicality constraints; absorbs roundoff
/// from chart round trips and integrator steps.
pub const PHYSICAL_TOL: f64 = 1e-9;

/// Largest Laguerre order accepted by [`wigner_laguerre`].
pub const MAX_LAGUERRE_ORDER: usize = 50;

/// A point of the Bloch ball (`Qbit`) or the solid hyperboloid (`Gaussian`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatePoint {
    pub kind: AlgebraKind,
    pub coords: [f64; 3],
}

impl StatePoint {
    pub fn new(kind: AlgebraKind, coords: [f64; 3]) -> Self {
        Self { kind, coords }
    }

    pub fn qbit(x1: f64, x2: f64, x3: f64) -> Self {
        Self::new(AlgebraKind::Qbit, [x1, x2, x3])
    }

    pub fn gaussian(y1: f64, y2: f64, y3: f64) -> Self {
        Self::new(AlgebraKind::Gaussian, [y1, y2, y3])
    }

    /// Leaf radius without any physicality gate. NaN for a Gaussian point
    /// with negative Minkowski norm; callers that need a guarantee should
    /// use [`purity_r`].
    pub fn raw_leaf_radius(&self) -> f64 {
        let [a, b, c] = self.coords;
        match self.kind {
            AlgebraKind::Qbit => (a * a + b * b + c * c).sqrt(),
            AlgebraKind::Gaussian => (a * a - b * b - c * c).sqrt(),
        }
    }
}

/// Signed physicality check report.
#[derive(Debug, Clone, PartialEq)]
pub struct Physicality {
    pub ok: bool,
    /// Signed constraint residual: 1 − |x|² (ball) or
    /// (y¹)² − (y²)² − (y³)² − 1 (hyperboloid); nonnegative inside.
    pub residual: f64,
    pub detail: Option<String>,
}

/// Evaluates the defining constraint of the owning manifold.
pub fn check_physical(p: &StatePoint, tol: f64) -> Physicality {
    let [a, b, c] = p.coords;
    match p.kind {
        AlgebraKind::Qbit => {
            let residual = 1.0 - (a * a + b * b + c * c);
            let ok = residual >= -tol;
            Physicality {
                ok,
                residual,
                detail: (!ok).then(|| format!("Bloch vector norm² = {:.6} exceeds 1", 1.0 - residual)),
            }
        }
        AlgebraKind::Gaussian => {
            let residual = a * a - b * b - c * c - 1.0;
            let sheet_ok = a > 0.0;
            let ok = residual >= -tol && sheet_ok;
            let detail = if !sheet_ok {
                Some(format!("y¹ = {a:.6} is not on the upper sheet"))
            } else if !ok {
                Some(format!(
                    "Minkowski norm² = {:.6} is below 1",
                    residual + 1.0
                ))
            } else {
                None
            };
            Physicality { ok, residual, detail }
        }
    }
}

fn require_physical(p: &StatePoint) -> Result<()> {
    let report = check_physical(p, PHYSICAL_TOL);
    if !report.ok {
        return Err(Error::NonPhysical(
            report.detail.unwrap_or_else(|| "constraint violated".into()),
        ));
    }
    Ok(())
}

/// Purity parameter r of the leaf through `p`.
///
/// r ∈ [0, 1] on the ball with Tr ρ̂² = (1 + r²)/2, and r ∈ [1, ∞) on the
/// hyperboloid with Tr ρ̂² = 1/r.
pub fn purity_r(p: &StatePoint) -> Result<f64> {
    require_physical(p)?;
    let r = p.raw_leaf_radius();
    Ok(if r.is_nan() { 0.0 } else { r })
}

/// Second moments (σ_q², σ_p², σ_qp) of a zero-mean Gaussian state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondMoments {
    pub sq2: f64,
    pub sp2: f64,
    pub sqp: f64,
}

impl SecondMoments {
    pub fn new(sq2: f64, sp2: f64, sqp: f64) -> Self {
        Self { sq2, sp2, sqp }
    }

    /// σ_q²σ_p² − σ_qp², the Robertson–Schrödinger determinant.
    pub fn rs_determinant(&self) -> f64 {
        self.sq2 * self.sp2 - self.sqp * self.sqp
    }

    /// The purity parameter implied by the moments, r = 2√(det)/ħ.
    pub fn purity(&self, hbar: f64) -> f64 {
        2.0 * self.rs_determinant().sqrt() / hbar
    }

    pub fn validate(&self, hbar: f64) -> Result<()> {
        if !(self.sq2 > 0.0 && self.sp2 > 0.0) {
            return Err(Error::InvalidMoments(format!(
                "variances must be positive, got σ_q² = {}, σ_p² = {}",
                self.sq2, self.sp2
            )));
        }
        let det = self.rs_determinant();
        let bound = hbar * hbar / 4.0;
        if det < bound * (1.0 - 1e-12) {
            return Err(Error::InvalidMoments(format!(
                "Robertson–Schrödinger inequality violated: σ_q²σ_p² − σ_qp² = {det:.6e} < ħ²/4 = {bound:.6e}"
            )));
        }
        Ok(())
    }
}

/// Second moments → hyperboloid point.
pub fn moments_to_point(m: &SecondMoments, hbar: f64) -> Result<StatePoint> {
    m.validate(hbar)?;
    Ok(StatePoint::gaussian(
        (m.sp2 + m.sq2) / hbar,
        2.0 * m.sqp / hbar,
        (m.sp2 - m.sq2) / hbar,
    ))
}

/// Hyperboloid point → second moments.
pub fn point_to_moments(p: &StatePoint, hbar: f64) -> Result<SecondMoments> {
    if p.kind != AlgebraKind::Gaussian {
        return Err(Error::KindMismatch(AlgebraKind::Gaussian, p.kind));
    }
    require_physical(p)?;
    let [y1, y2, y3] = p.coords;
    if y1 <= y3.abs() {
        return Err(Error::InvalidMoments(format!(
            "cannot invert: y¹ = {y1} ≤ |y³| = {}",
            y3.abs()
        )));
    }
    Ok(SecondMoments::new(
        0.5 * hbar * (y1 - y3),
        0.5 * hbar * (y1 + y3),
        0.5 * hbar * y2,
    ))
}

/// Chart coordinate on a constant-purity leaf.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Chart {
    /// Stereographic projection from the north pole of a Bloch sphere,
    /// z = (x¹ − ix²)/(r − x³); undefined at x³ = r.
    StereoNorth(C64),
    /// Stereographic projection from the south pole,
    /// ζ = (x¹ + ix²)/(r + x³); undefined at x³ = −r.
    StereoSouth(C64),
    /// Upper-half-plane coordinate on a hyperboloid leaf,
    /// C = (y² + ir)/(y¹ − y³), Im C > 0.
    Siegel(C64),
    /// Hyperbolic squeezing parameters, y = r(cosh τ, sinh τ cos φ, sinh τ sin φ).
    Squeezing { tau: f64, phi: f64 },
}

impl Chart {
    pub fn name(&self) -> &'static str {
        match self {
            Chart::StereoNorth(_) => "stereo-north",
            Chart::StereoSouth(_) => "stereo-south",
            Chart::Siegel(_) => "siegel",
            Chart::Squeezing { .. } => "squeezing",
        }
    }
}

/// Chart selector for [`to_chart`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartKind {
    StereoNorth,
    StereoSouth,
    Siegel,
    Squeezing,
}

/// A chart coordinate together with its leaf label r.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartValue {
    pub chart: Chart,
    pub r: f64,
}

impl ChartValue {
    pub fn new(chart: Chart, r: f64) -> Self {
        Self { chart, r }
    }
}

const POLE_GUARD: f64 = 1e-12;

/// Leaf chart of a physical point.
pub fn to_chart(p: &StatePoint, which: ChartKind) -> Result<ChartValue> {
    require_physical(p)?;
    let r = p.raw_leaf_radius();
    let [a, b, c] = p.coords;
    let chart = match (p.kind, which) {
        (AlgebraKind::Qbit, ChartKind::StereoNorth) => {
            if r <= 0.0 {
                return Err(Error::SingularFoliation);
            }
            let den = r - c;
            if den.abs() <= POLE_GUARD * r {
                return Err(Error::ChartSingularity(
                    "stereo-north is undefined at the north pole x³ = r".into(),
                ));
            }
            Chart::StereoNorth(C64::new(a / den, -b / den))
        }
        (AlgebraKind::Qbit, ChartKind::StereoSouth) => {
            if r <= 0.0 {
                return Err(Error::SingularFoliation);
            }
            let den = r + c;
            if den.abs() <= POLE_GUARD * r {
                return Err(Error::ChartSingularity(
                    "stereo-south is undefined at the south pole x³ = -r".into(),
                ));
            }
            Chart::StereoSouth(C64::new(a / den, b / den))
        }
        (AlgebraKind::Gaussian, ChartKind::Siegel) => {
            // y¹ − y³ = 2σ_q²/ħ > 0 on the whole leaf, so no pole.
            let den = a - c;
            Chart::Siegel(C64::new(b / den, r / den))
        }
        (AlgebraKind::Gaussian, ChartKind::Squeezing) => {
            let rho = (b * b + c * c).sqrt();
            let tau = (rho / r).asinh();
            let phi = if rho > 0.0 { c.atan2(b) } else { 0.0 };
            Chart::Squeezing { tau, phi }
        }
        (kind, which) => {
            return Err(Error::WrongChart {
                expected: match kind {
                    AlgebraKind::Qbit => "stereo-north or stereo-south",
                    AlgebraKind::Gaussian => "siegel or squeezing",
                },
                got: match which {
                    ChartKind::StereoNorth => "stereo-north",
                    ChartKind::StereoSouth => "stereo-south",
                    ChartKind::Siegel => "siegel",
                    ChartKind::Squeezing => "squeezing",
                },
            })
        }
    };
    Ok(ChartValue::new(chart, r))
}

/// Inverse chart map.
pub fn from_chart(cv: &ChartValue) -> Result<StatePoint> {
    let r = cv.r;
    if !(r > 0.0) {
        return Err(Error::InvalidLeaf(r));
    }
    match cv.chart {
        Chart::StereoNorth(z) => {
            let den = 1.0 + z.norm_sqr();
            Ok(StatePoint::qbit(
                2.0 * r * z.re / den,
                -2.0 * r * z.im / den,
                r * (z.norm_sqr() - 1.0) / den,
            ))
        }
        Chart::StereoSouth(zeta) => {
            let den = 1.0 + zeta.norm_sqr();
            Ok(StatePoint::qbit(
                2.0 * r * zeta.re / den,
                2.0 * r * zeta.im / den,
                r * (1.0 - zeta.norm_sqr()) / den,
            ))
        }
        Chart::Siegel(cc) => {
            if cc.im <= 0.0 {
                return Err(Error::ChartSingularity(format!(
                    "Siegel coordinate must have positive imaginary part, got Im C = {}",
                    cc.im
                )));
            }
            let (x, y) = (cc.re, cc.im);
            let n2 = cc.norm_sqr();
            Ok(StatePoint::gaussian(
                r * (1.0 + n2) / (2.0 * y),
                r * x / y,
                r * (n2 - 1.0) / (2.0 * y),
            ))
        }
        Chart::Squeezing { tau, phi } => {
            if tau < 0.0 {
                return Err(Error::InvalidSqueezing(format!(
                    "squeezing magnitude must be nonnegative, got τ = {tau}"
                )));
            }
            Ok(StatePoint::gaussian(
                r * tau.cosh(),
                r * tau.sinh() * phi.cos(),
                r * tau.sinh() * phi.sin(),
            ))
        }
    }
}

/// Action of the squeezing group element (τ, φ) on a zero-correlation
/// fiducial set of moments on the leaf labelled r:
///
/// ```text
/// σ_q² = σ̃_q² (cosh τ − cos φ sinh τ)
/// σ_p² = σ̃_p² (cosh τ + cos φ sinh τ)
/// σ_qp = −(ħ r / 2) sin φ sinh τ
/// ```
pub fn apply_squeezing(
    fiducial: &SecondMoments,
    tau: f64,
    phi: f64,
    r: f64,
    hbar: f64,
) -> Result<SecondMoments> {
    if fiducial.sqp.abs() > 1e-12 * (1.0 + fiducial.sq2.abs() + fiducial.sp2.abs()) {
        return Err(Error::InvalidSqueezing(format!(
            "fiducial state must have zero correlation, got σ_qp = {}",
            fiducial.sqp
        )));
    }
    if tau < 0.0 {
        return Err(Error::InvalidSqueezing(format!(
            "squeezing magnitude must be nonnegative, got τ = {tau}"
        )));
    }
    fiducial.validate(hbar)?;
    let (ch, sh) = (tau.cosh(), tau.sinh());
    Ok(SecondMoments::new(
        fiducial.sq2 * (ch - phi.cos() * sh),
        fiducial.sp2 * (ch + phi.cos() * sh),
        -0.5 * hbar * r * phi.sin() * sh,
    ))
}

/// Density matrix of a two-level state in the north stereographic chart:
///
/// ```text
///            1     ⎛ ½(1−r) + ½(1+r) z̄z        r z        ⎞
/// ρ(z, r) = ―――――  ⎜                                       ⎟
///           1+z̄z  ⎝        r z̄          ½(1+r) + ½(1−r) z̄z ⎠
/// ```
pub fn density_matrix_qbit(z: C64, r: f64) -> Result<Matrix2c> {
    if !(r > 0.0 && r <= 1.0 + 1e-12) {
        return Err(Error::PurityOutOfRange(r));
    }
    let n2 = z.norm_sqr();
    let den = 1.0 + n2;
    let a = (0.5 * (1.0 - r) + 0.5 * (1.0 + r) * n2) / den;
    let d = (0.5 * (1.0 + r) + 0.5 * (1.0 - r) * n2) / den;
    let off = z * (r / den);
    Ok(Matrix2c::new(
        C64::new(a, 0.0),
        off,
        off.conj(),
        C64::new(d, 0.0),
    ))
}

fn moment_quadratic(q: f64, p: f64, m: &SecondMoments) -> f64 {
    m.sp2 * q * q - 2.0 * m.sqp * q * p + m.sq2 * p * p
}

fn check_purity_consistency(m: &SecondMoments, r: f64, hbar: f64) -> Result<()> {
    m.validate(hbar)?;
    let derived = m.purity(hbar);
    if (r - derived).abs() > 1e-9 * derived.max(1.0) {
        return Err(Error::InconsistentPurity { given: r, derived });
    }
    Ok(())
}

/// Gaussian Wigner quasi-distribution
/// W_r(q, p) = (πħr)⁻¹ exp{−(2/ħ²r²)(σ_p²q² − 2σ_qp qp + σ_q²p²)}.
pub fn wigner(q: f64, p: f64, m: &SecondMoments, r: f64, hbar: f64) -> Result<f64> {
    check_purity_consistency(m, r, hbar)?;
    let expo = -2.0 / (hbar * hbar * r * r) * moment_quadratic(q, p, m);
    Ok(expo.exp() / (std::f64::consts::PI * hbar * r))
}

/// Laguerre polynomial L_n(x) through the stable three-term recurrence.
pub fn laguerre(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut lm1 = 1.0;
    let mut l = 1.0 - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 - x) * l - kf * lm1) / (kf + 1.0);
        lm1 = l;
        l = next;
    }
    l
}

/// Laguerre–Gaussian Wigner family
/// W_n(q, p) = ((−1)ⁿ/(πħr)) e^{−I/2} L_n(I), with
/// I = (4/ħ²r²)(σ_p²q² − 2σ_qp qp + σ_q²p²); n = 0 recovers [`wigner`].
pub fn wigner_laguerre(
    q: f64,
    p: f64,
    m: &SecondMoments,
    r: f64,
    n: usize,
    hbar: f64,
) -> Result<f64> {
    if n > MAX_LAGUERRE_ORDER {
        return Err(Error::LaguerreOrder(n, MAX_LAGUERRE_ORDER));
    }
    check_purity_consistency(m, r, hbar)?;
    let i_val = 4.0 / (hbar * hbar * r * r) * moment_quadratic(q, p, m);
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign / (std::f64::consts::PI * hbar * r) * (-0.5 * i_val).exp() * laguerre(n, i_val))
}
