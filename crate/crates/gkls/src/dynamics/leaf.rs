//! Dynamics restricted to a constant-purity leaf: Riccati equations in the
//! complex charts, the leaf Poisson/Jordan brackets, and directional
//! derivatives of the foliation labels.

use num_complex::Complex64 as C64;

use crate::algebra::{Algebra, AlgebraKind};
use crate::error::{Error, Result};
use crate::state_space::{from_chart, purity_r, to_chart, Chart, ChartKind, ChartValue, StatePoint};

use super::{Field, HamiltonianSpec};

/// Chart-level Hamiltonian velocity on the leaf labelled `cv.r`.
///
/// Stereographic chart (two-level, H in the σ-basis):
///
/// ```text
/// ż = (i/rħ)[(H₁ + iH₂) z² − 2H₃ z − (H₁ − iH₂)]
/// ```
///
/// Siegel chart (Gaussian, with the quadratic-form coefficients
/// H₁ = (H̃₁+H̃₃)/2, H₂ = (H̃₁−H̃₃)/2, V = H̃₂/2 of the L̂-basis Hamiltonian):
///
/// ```text
/// Ċ = −(1/r)[H₁ C² + 2V C + H₂]
/// ```
pub fn riccati_rhs(h: &HamiltonianSpec, cv: &ChartValue, hbar: f64) -> Result<C64> {
    let poly = leaf_flow_polynomial(h, cv)?;
    Ok(match h.kind {
        AlgebraKind::Qbit => C64::new(0.0, 1.0 / (cv.r * hbar)) * poly,
        AlgebraKind::Gaussian => poly * C64::new(-1.0 / cv.r, 0.0),
    })
}

/// Chart-level gradient velocity; satisfies Y = −i·X with the Riccati
/// component, which is the complex structure acting on the leaf.
pub fn gradient_chart_rhs(h: &HamiltonianSpec, cv: &ChartValue, hbar: f64) -> Result<C64> {
    let poly = leaf_flow_polynomial(h, cv)?;
    Ok(match h.kind {
        AlgebraKind::Qbit => poly * C64::new(1.0 / (cv.r * hbar), 0.0),
        AlgebraKind::Gaussian => poly * C64::new(0.0, 1.0 / cv.r),
    })
}

/// The quadratic polynomial both leaf flows share.
fn leaf_flow_polynomial(h: &HamiltonianSpec, cv: &ChartValue) -> Result<C64> {
    if !(cv.r > 0.0) {
        return Err(Error::InvalidLeaf(cv.r));
    }
    match (h.kind, &cv.chart) {
        (AlgebraKind::Qbit, Chart::StereoNorth(z)) => {
            let [_, h1, h2, h3] = h.coeffs;
            let a = C64::new(h1, h2);
            let c = C64::new(h1, -h2);
            Ok(a * z * z - C64::new(2.0 * h3, 0.0) * z - c)
        }
        (AlgebraKind::Gaussian, Chart::Siegel(cc)) => {
            let [h1q, vq, h2q] = quadratic_form_coeffs(h);
            Ok(C64::new(h1q, 0.0) * cc * cc + C64::new(2.0 * vq, 0.0) * cc + C64::new(h2q, 0.0))
        }
        (AlgebraKind::Qbit, other) => Err(Error::WrongChart {
            expected: "stereo-north",
            got: other.name(),
        }),
        (AlgebraKind::Gaussian, other) => Err(Error::WrongChart {
            expected: "siegel",
            got: other.name(),
        }),
    }
}

/// (H₁, V, H₂) of ½[H₁p̂² + V(q̂p̂+p̂q̂) + H₂q̂²] from the L̂-basis coefficients.
fn quadratic_form_coeffs(h: &HamiltonianSpec) -> [f64; 3] {
    let [_, ht1, ht2, ht3] = h.coeffs;
    [0.5 * (ht1 + ht3), 0.5 * ht2, 0.5 * (ht1 - ht3)]
}

/// Both leaf brackets of the expectation functions f_a, f_b at `p`,
/// together with the residual against the chart-bivector evaluation.
#[derive(Debug, Clone, Copy)]
pub struct LeafBrackets {
    /// Algebraic Poisson bracket: −(1/r)·f of the Lie product (two-level)
    /// or +(1/r)·f of the Lie product (Gaussian).
    pub poisson: f64,
    /// Algebraic Jordan bracket: −f_{a⊙b} + (2/ħr²) f_a f_b (two-level) or
    /// ½ f_{a⊙b} − (4/ħr²) f_a f_b (Gaussian).
    pub jordan: f64,
    /// |algebraic − chart-bivector| for the Poisson bracket (the chart side
    /// is evaluated with finite-difference differentials).
    pub poisson_residual: f64,
    /// Same for the Jordan bracket.
    pub jordan_residual: f64,
}

/// Expectation function f_a of the observable with real coefficients `a`:
/// a₀ + a_k x^k on the ball, (ħ/2)a₀ + (ħ/4)a_k y^k on the hyperboloid.
pub fn expectation(kind: AlgebraKind, a: &[f64; 4], coords: [f64; 3], hbar: f64) -> f64 {
    let lin: f64 = (0..3).map(|k| a[k + 1] * coords[k]).sum();
    match kind {
        AlgebraKind::Qbit => a[0] + lin,
        AlgebraKind::Gaussian => 0.5 * hbar * a[0] + 0.25 * hbar * lin,
    }
}

const FD_STEP: f64 = 1e-6;

/// Wirtinger derivatives (∂_w f, ∂_w̄ f) of a real chart function by central
/// differences with step 1e-6·max(1, |coordinate|).
fn wirtinger<F: Fn(C64) -> f64>(f: &F, w: C64) -> (C64, C64) {
    let hu = FD_STEP * w.re.abs().max(1.0);
    let hv = FD_STEP * w.im.abs().max(1.0);
    let du = (f(w + C64::new(hu, 0.0)) - f(w - C64::new(hu, 0.0))) / (2.0 * hu);
    let dv = (f(w + C64::new(0.0, hv)) - f(w - C64::new(0.0, hv))) / (2.0 * hv);
    (
        C64::new(0.5 * du, -0.5 * dv),
        C64::new(0.5 * du, 0.5 * dv),
    )
}

/// Evaluates the leaf Poisson and Jordan brackets of f_a and f_b at `p`.
///
/// The returned values are the algebraic sides; the residuals compare them
/// against the Kähler bivectors written in the leaf chart. The bracket
/// identities hold for the traceless components of a and b (a constant a₀
/// offsets the Jordan comparison away from them).
pub fn leaf_brackets(
    a: &[f64; 4],
    b: &[f64; 4],
    p: &StatePoint,
    hbar: f64,
) -> Result<LeafBrackets> {
    let kind = p.kind;
    let r = purity_r(p)?;
    if r <= 0.0 {
        return Err(Error::SingularFoliation);
    }
    let alg = Algebra::new(kind, hbar);
    let ea = crate::algebra::AlgebraElement::real(kind, *a);
    let eb = crate::algebra::AlgebraElement::real(kind, *b);
    let lie = alg.lie_product(&ea, &eb)?;
    let jor = alg.jordan_product(&ea, &eb)?;
    let lie_coeffs: [f64; 4] = std::array::from_fn(|mu| lie.coeffs[mu].re);
    let jor_coeffs: [f64; 4] = std::array::from_fn(|mu| jor.coeffs[mu].re);

    let f_a = expectation(kind, a, p.coords, hbar);
    let f_b = expectation(kind, b, p.coords, hbar);
    let f_lie = expectation(kind, &lie_coeffs, p.coords, hbar);
    let f_jor = expectation(kind, &jor_coeffs, p.coords, hbar);

    let (poisson, jordan) = match kind {
        AlgebraKind::Qbit => (
            -f_lie / r,
            -f_jor + 2.0 / (hbar * r * r) * f_a * f_b,
        ),
        AlgebraKind::Gaussian => (
            f_lie / r,
            0.5 * f_jor - 4.0 / (hbar * r * r) * f_a * f_b,
        ),
    };

    // Chart side. The two-level leaf is covered by the two stereographic
    // charts; pick the one whose pole is farthest from p.
    let (chart_kind, chart_sign) = match kind {
        // The two-level bracket follows the ω(X_H,·) = −dH orientation, so
        // the leaf bivector enters with a minus sign to reproduce
        // −(1/r) f_[[a,b]]; the hyperboloid uses the opposite orientation.
        AlgebraKind::Qbit => (
            if p.coords[2] <= 0.0 {
                ChartKind::StereoNorth
            } else {
                ChartKind::StereoSouth
            },
            -1.0,
        ),
        AlgebraKind::Gaussian => (ChartKind::Siegel, 1.0),
    };
    let cv = to_chart(p, chart_kind)?;
    let w0 = match cv.chart {
        Chart::StereoNorth(z) | Chart::StereoSouth(z) | Chart::Siegel(z) => z,
        Chart::Squeezing { .. } => unreachable!(),
    };
    let rebuild = |w: C64| -> Chart {
        match cv.chart {
            Chart::StereoNorth(_) => Chart::StereoNorth(w),
            Chart::StereoSouth(_) => Chart::StereoSouth(w),
            Chart::Siegel(_) => Chart::Siegel(w),
            Chart::Squeezing { .. } => unreachable!(),
        }
    };
    let fa_chart = |w: C64| -> f64 {
        let q = from_chart(&ChartValue::new(rebuild(w), r)).expect("chart point");
        expectation(kind, a, q.coords, hbar)
    };
    let fb_chart = |w: C64| -> f64 {
        let q = from_chart(&ChartValue::new(rebuild(w), r)).expect("chart point");
        expectation(kind, b, q.coords, hbar)
    };
    let (da_w, da_wbar) = wirtinger(&fa_chart, w0);
    let (db_w, db_wbar) = wirtinger(&fb_chart, w0);

    let (lambda, gfac) = match kind {
        AlgebraKind::Qbit => {
            let s = (1.0 + w0.norm_sqr()).powi(2) / (r * r * hbar);
            (C64::new(0.0, -s), C64::new(-s, 0.0))
        }
        AlgebraKind::Gaussian => {
            let d = w0 - w0.conj();
            let s = (d * d).re * 2.0 / (hbar * r * r);
            (C64::new(0.0, s), C64::new(s, 0.0))
        }
    };
    let chart_poisson = chart_sign * (lambda * (da_wbar * db_w - da_w * db_wbar)).re;
    let chart_jordan = (gfac * (da_wbar * db_w + da_w * db_wbar)).re;

    Ok(LeafBrackets {
        poisson,
        jordan,
        poisson_residual: (poisson - chart_poisson).abs(),
        jordan_residual: (jordan - chart_jordan).abs(),
    })
}

/// Directional derivative of the foliation label along `field` at `p`:
/// of r = |x| on the ball, of the Casimir function
/// f_C = (ħ²/16)[(y¹)² − (y²)² − (y³)²] on the hyperboloid.
pub fn lie_derivative_purity(field: &Field, p: &StatePoint, hbar: f64) -> Result<f64> {
    let r = purity_r(p)?;
    if r <= 0.0 {
        return Err(Error::SingularFoliation);
    }
    let v = field.eval_point(p)?;
    let [a, b, c] = p.coords;
    Ok(match p.kind {
        AlgebraKind::Qbit => (a * v[0] + b * v[1] + c * v[2]) / r,
        AlgebraKind::Gaussian => {
            hbar * hbar / 8.0 * (a * v[0] - b * v[1] - c * v[2])
        }
    })
}
