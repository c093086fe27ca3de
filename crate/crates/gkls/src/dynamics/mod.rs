//! Construction of the GKLS vector field and its decomposition.
//!
//! For a Hamiltonian Ĥ = H_μ ê^μ and jump operators v̂_j the generator
//!
//! ```text
//! L(ξ̂) = −[[Ĥ, ξ̂]] − (ħ/2) V̂ ⊙ ξ̂ + Σ_j v̂_j ξ̂ v̂_j†,   V̂ = Σ_j v̂_j† v̂_j,
//! ```
//!
//! induces on the state manifold the affine field Γ = X_H + Y_b + Z_K: the
//! Hamiltonian rotation, a gradient-like field with b̂ = −(ħ/2)V̂ (two-level)
//! or b̂ = −ħV̂ (Gaussian), and the Choi–Kraus jump field. The quadratic
//! terms of Y_b and Z_K cancel, which is verified numerically whenever a
//! decomposition is built.

mod leaf;
mod oracle;

pub use leaf::{
    gradient_chart_rhs, leaf_brackets, lie_derivative_purity, riccati_rhs, LeafBrackets,
};
pub use oracle::{oracle_velocity, oracle_velocity_with_audit, OracleVelocity};

use std::sync::Arc;

use nalgebra::{Matrix3, Vector3};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, AlgebraElement, AlgebraKind, Matrix2c, MetricG, C64};
use crate::error::{Error, Result};
use crate::state_space::StatePoint;

/// Hamiltonian coefficients H_μ over the owning basis; H₀ never affects the
/// dynamics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamiltonianSpec {
    pub kind: AlgebraKind,
    pub coeffs: [f64; 4],
}

impl HamiltonianSpec {
    pub fn new(kind: AlgebraKind, coeffs: [f64; 4]) -> Self {
        assert!(
            coeffs.iter().all(|c| c.is_finite()),
            "Hamiltonian coefficients must be finite"
        );
        Self { kind, coeffs }
    }

    pub fn zero(kind: AlgebraKind) -> Self {
        Self::new(kind, [0.0; 4])
    }

    pub fn element(&self) -> AlgebraElement {
        AlgebraElement::real(self.kind, self.coeffs)
    }
}

/// A family of jump operators together with the derived V̂ = Σ v̂†v̂.
#[derive(Debug, Clone)]
pub struct DissipatorSet {
    pub kind: AlgebraKind,
    pub vs: Vec<AlgebraElement>,
    /// Σ v̂†v̂ projected to basis coefficients; self-adjoint by construction.
    pub v_total: AlgebraElement,
}

impl DissipatorSet {
    pub fn new(kind: AlgebraKind, vs: Vec<AlgebraElement>, hbar: f64) -> Result<Self> {
        let alg = Algebra::new(kind, hbar);
        let mut total = Matrix2c::zeros();
        for v in &vs {
            if v.kind != kind {
                return Err(Error::KindMismatch(kind, v.kind));
            }
            let m = alg.element_matrix(v)?;
            total += m.adjoint() * m;
        }
        let v_total = alg.project_element(&total);
        if !alg.is_observable(&v_total)? {
            return Err(Error::NonCompletelyPositive(
                (alg.dagger(&v_total)?.coeffs[0] - v_total.coeffs[0]).norm(),
            ));
        }
        Ok(Self { kind, vs, v_total })
    }

    pub fn empty(kind: AlgebraKind) -> Self {
        Self {
            kind,
            vs: Vec::new(),
            v_total: AlgebraElement::zero(kind),
        }
    }

    /// Real coefficients of V̂. For the Gaussian basis a self-adjoint matrix
    /// can still carry imaginary components on L̂², L̂³; such sets are outside
    /// the representable class and are rejected here.
    pub fn v_real(&self) -> Result<[f64; 4]> {
        let mut out = [0.0; 4];
        let mut imag: f64 = 0.0;
        for mu in 0..4 {
            out[mu] = self.v_total.coeffs[mu].re;
            imag = imag.max(self.v_total.coeffs[mu].im.abs());
        }
        if imag > 1e-10 * (1.0 + self.v_total.max_norm()) {
            return Err(Error::NonCompletelyPositive(imag));
        }
        Ok(out)
    }
}

/// Coefficient table of the completely positive map 𝒦(ξ̂) = Σ v̂ ξ̂ v̂† in the
/// owning basis: `k[eta][j]` is Tr{𝒦(σ̂^η)σ̂^j} for the two-level system and
/// `k[mu][j]` is 𝒦_μ{}^j = (1/2ħ) Σ Tr{v̂ L̂^α v̂† L̂^j} g_{αμ} for the
/// Gaussian one.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausMatrix {
    pub kind: AlgebraKind,
    pub k: [[f64; 4]; 4],
}

/// Evaluates the Kraus table by 2×2 matrix products and traces.
pub fn kraus_matrix(d: &DissipatorSet, hbar: f64) -> Result<KrausMatrix> {
    let alg = Algebra::new(d.kind, hbar);
    let basis = alg.basis_matrices();
    let g = alg.metric();
    let vms: Vec<Matrix2c> = d
        .vs
        .iter()
        .map(|v| alg.element_matrix(v))
        .collect::<Result<_>>()?;

    let mut k = [[0.0; 4]; 4];
    let mut worst_imag: f64 = 0.0;
    let mut scale: f64 = 1.0;
    for alpha in 0..4 {
        for j in 0..4 {
            let mut t = C64::new(0.0, 0.0);
            for vm in &vms {
                t += (vm * basis[alpha] * vm.adjoint() * basis[j]).trace();
            }
            worst_imag = worst_imag.max(t.im.abs());
            scale = scale.max(t.re.abs());
            k[alpha][j] = match d.kind {
                AlgebraKind::Qbit => t.re,
                AlgebraKind::Gaussian => g.g(alpha) * t.re / (2.0 * hbar),
            };
        }
    }
    if worst_imag > 1e-10 * scale {
        return Err(Error::NonCompletelyPositive(worst_imag));
    }
    Ok(KrausMatrix { kind: d.kind, k })
}

/// An evaluable vector field on the 3-dimensional state manifold.
#[derive(Clone)]
pub struct Field {
    pub kind: AlgebraKind,
    f: Arc<dyn Fn([f64; 3]) -> [f64; 3] + Send + Sync>,
}

impl Field {
    pub fn new<F>(kind: AlgebraKind, f: F) -> Self
    where
        F: Fn([f64; 3]) -> [f64; 3] + Send + Sync + 'static,
    {
        Self { kind, f: Arc::new(f) }
    }

    pub fn zero(kind: AlgebraKind) -> Self {
        Self::new(kind, |_| [0.0; 3])
    }

    /// Evaluates the defining formula at arbitrary coordinates.
    pub fn eval(&self, coords: [f64; 3]) -> [f64; 3] {
        (self.f)(coords)
    }

    /// Evaluates at a state point, enforcing the kind tag.
    pub fn eval_point(&self, p: &StatePoint) -> Result<[f64; 3]> {
        if p.kind != self.kind {
            return Err(Error::KindMismatch(self.kind, p.kind));
        }
        Ok(self.eval(p.coords))
    }
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Field").field("kind", &self.kind).finish()
    }
}

/// Hamiltonian vector field.
///
/// Two-level: X_H = (2/ħ) H × x. Gaussian: X_H = c^{kj}_l H_k y^l ∂_j, i.e.
///
/// ```text
/// X_H = −(y³H₂ − y²H₃) ∂₁ + (y¹H₃ + y³H₁) ∂₂ − (y¹H₂ + y²H₁) ∂₃.
/// ```
pub fn hamiltonian_field(h: &HamiltonianSpec, hbar: f64) -> Field {
    let hk = [h.coeffs[1], h.coeffs[2], h.coeffs[3]];
    match h.kind {
        AlgebraKind::Qbit => Field::new(h.kind, move |x| {
            let s = 2.0 / hbar;
            [
                s * (hk[1] * x[2] - hk[2] * x[1]),
                s * (hk[2] * x[0] - hk[0] * x[2]),
                s * (hk[0] * x[1] - hk[1] * x[0]),
            ]
        }),
        AlgebraKind::Gaussian => Field::new(h.kind, move |y| {
            [
                -(y[2] * hk[1] - y[1] * hk[2]),
                y[0] * hk[2] + y[2] * hk[0],
                -(y[0] * hk[1] + y[1] * hk[0]),
            ]
        }),
    }
}

/// Gradient-like vector field for the affine function with coefficients b:
/// Y_b = (2/ħ)(δ^{kl} − x^k x^l) b_k ∂_l (two-level) or
/// Y_b = (g^{kj} − y^k y^j) b_k ∂_j (Gaussian). b₀ does not enter.
pub fn gradient_like_field(kind: AlgebraKind, b: [f64; 4], hbar: f64) -> Field {
    let bk = [b[1], b[2], b[3]];
    let g = MetricG::for_kind(kind);
    let scale = match kind {
        AlgebraKind::Qbit => 2.0 / hbar,
        AlgebraKind::Gaussian => 1.0,
    };
    Field::new(kind, move |x| {
        let mut out = [0.0; 3];
        for l in 0..3 {
            let mut acc = 0.0;
            for k in 0..3 {
                let diag = if k == l { g.g(k + 1) } else { 0.0 };
                acc += (diag - x[k] * x[l]) * bk[k];
            }
            out[l] = scale * acc;
        }
        out
    })
}

/// Choi–Kraus (jump) vector field:
///
/// ```text
/// Z_K = ½ 𝒦^j_μ x^μ ∂_j − (V₀ + V_k x^k) x^j ∂_j          (two-level)
/// Z_K = (4/ħ) 𝒦_μ{}^j y^μ ∂_j − ħ(V₀/2 + V_k y^k) y^j ∂_j  (Gaussian)
/// ```
///
/// with x⁰ = 1 and y⁰ = 2 on the affine slice.
pub fn choi_kraus_field(d: &DissipatorSet, hbar: f64) -> Result<Field> {
    let km = kraus_matrix(d, hbar)?;
    let v = d.v_real()?;
    let kind = d.kind;
    let k = km.k;
    Ok(match kind {
        AlgebraKind::Qbit => Field::new(kind, move |x| {
            let f_v = v[0] + v[1] * x[0] + v[2] * x[1] + v[3] * x[2];
            let mut out = [0.0; 3];
            for j in 0..3 {
                let mut lin = k[0][j + 1];
                for mu in 0..3 {
                    lin += k[mu + 1][j + 1] * x[mu];
                }
                out[j] = 0.5 * lin - f_v * x[j];
            }
            out
        }),
        AlgebraKind::Gaussian => Field::new(kind, move |y| {
            let dilation = hbar * (0.5 * v[0] + v[1] * y[0] + v[2] * y[1] + v[3] * y[2]);
            let mut out = [0.0; 3];
            for j in 0..3 {
                let mut lin = 2.0 * k[0][j + 1];
                for mu in 0..3 {
                    lin += k[mu + 1][j + 1] * y[mu];
                }
                out[j] = 4.0 / hbar * lin - dilation * y[j];
            }
            out
        }),
    })
}

/// The three constructed parts of Γ and the extracted affine form
/// Γ(p) = A·p + c.
#[derive(Debug, Clone)]
pub struct FieldDecomposition {
    pub x_h: Field,
    pub y_b: Field,
    pub z_k: Field,
    pub gamma: Field,
    pub gamma_affine: (Matrix3<f64>, Vector3<f64>),
}

impl FieldDecomposition {
    /// Evaluates the affine form at arbitrary coordinates.
    pub fn affine_eval(&self, coords: [f64; 3]) -> [f64; 3] {
        let (a, c) = &self.gamma_affine;
        let v = a * Vector3::new(coords[0], coords[1], coords[2]) + c;
        [v[0], v[1], v[2]]
    }
}

/// Affine content (A, c) of a polynomial field: c from the value at the
/// origin, columns of A from symmetric differences at the unit vectors
/// (which cancel any quadratic part).
pub fn affine_content(field: &Field) -> (Matrix3<f64>, Vector3<f64>) {
    let c0 = field.eval([0.0; 3]);
    let mut a = Matrix3::zeros();
    for k in 0..3 {
        let mut plus = [0.0; 3];
        let mut minus = [0.0; 3];
        plus[k] = 1.0;
        minus[k] = -1.0;
        let fp = field.eval(plus);
        let fm = field.eval(minus);
        for j in 0..3 {
            a[(j, k)] = 0.5 * (fp[j] - fm[j]);
        }
    }
    (a, Vector3::new(c0[0], c0[1], c0[2]))
}

/// Builds Γ = X_H + Y_b + Z_K with b̂ = −(ħ/2)V̂ (two-level) or b̂ = −ħV̂
/// (Gaussian), extracts the affine form, and verifies at 20 probe points
/// that the quadratic parts of Y_b and Z_K cancelled.
pub fn gkls_field(h: &HamiltonianSpec, d: &DissipatorSet, hbar: f64) -> Result<FieldDecomposition> {
    if h.kind != d.kind {
        return Err(Error::KindMismatch(h.kind, d.kind));
    }
    let kind = h.kind;
    let v = d.v_real()?;
    let b_scale = match kind {
        AlgebraKind::Qbit => -0.5 * hbar,
        AlgebraKind::Gaussian => -hbar,
    };
    let b = [b_scale * v[0], b_scale * v[1], b_scale * v[2], b_scale * v[3]];

    let x_h = hamiltonian_field(h, hbar);
    let y_b = gradient_like_field(kind, b, hbar);
    let z_k = choi_kraus_field(d, hbar)?;

    let (xc, yc, zc) = (x_h.clone(), y_b.clone(), z_k.clone());
    let gamma = Field::new(kind, move |p| {
        let a = xc.eval(p);
        let b = yc.eval(p);
        let c = zc.eval(p);
        [a[0] + b[0] + c[0], a[1] + b[1] + c[1], a[2] + b[2] + c[2]]
    });

    let gamma_affine = affine_content(&gamma);

    // The extracted (A, c) must reproduce Γ everywhere; a residual here means
    // the quadratic parts failed to cancel.
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b6c73);
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 1.0;
    for _ in 0..20 {
        let p = [
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        ];
        let direct = gamma.eval(p);
        let (a, c) = &gamma_affine;
        let affine = a * Vector3::new(p[0], p[1], p[2]) + c;
        for j in 0..3 {
            worst = worst.max((direct[j] - affine[j]).abs());
            scale = scale.max(direct[j].abs());
        }
    }
    if worst > 1e-9 * scale {
        return Err(Error::CancellationResidual(worst));
    }

    Ok(FieldDecomposition {
        x_h,
        y_b,
        z_k,
        gamma,
        gamma_affine,
    })
}
