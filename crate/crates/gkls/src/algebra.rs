//! The two 2×2 operator algebras behind the simulator.
//!
//! A two-level system lives in the span of the Pauli matrices σ⁰..σ³; a
//! Gaussian second-moment system lives in the span of the quadratic operators
//! L̂⁰..L̂³, realized here as a non-unitary 2×2 matrix representation of
//! sl(2,ℝ) extended by the identity. Both spans close under the Lie product
//! `[[a,b]] = (i/ħ)(ab − ba)` and the Jordan product `a⊙b = (1/ħ)(ab + ba)`.
//!
//! Products are evaluated at matrix level and projected back onto basis
//! coefficients; the structure-constant tables are kept as an independent
//! cross-check (see the tests).

use nalgebra::Matrix2;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Complex 2×2 matrix, the common carrier for both operator bases.
pub type Matrix2c = Matrix2<C64>;

/// Selects the operator basis: Pauli matrices or the sl(2,ℝ) realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    /// Two-level system, basis σ⁰, σ¹, σ², σ³.
    Qbit,
    /// Gaussian second moments, basis L̂⁰, L̂¹, L̂², L̂³.
    Gaussian,
}

/// An element a = a_μ ê^μ of the complexified algebra.
///
/// Complex coefficients are allowed: dissipation operators such as σ₊ or K̂₊
/// are not observables but live in the same span.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgebraElement {
    pub kind: AlgebraKind,
    pub coeffs: [C64; 4],
}

impl AlgebraElement {
    pub fn new(kind: AlgebraKind, coeffs: [C64; 4]) -> Self {
        Self { kind, coeffs }
    }

    /// Element with real coefficients.
    pub fn real(kind: AlgebraKind, coeffs: [f64; 4]) -> Self {
        Self {
            kind,
            coeffs: coeffs.map(|c| C64::new(c, 0.0)),
        }
    }

    /// The μ-th basis element itself.
    pub fn basis(kind: AlgebraKind, mu: usize) -> Self {
        let mut coeffs = [C64::new(0.0, 0.0); 4];
        coeffs[mu] = C64::new(1.0, 0.0);
        Self { kind, coeffs }
    }

    pub fn zero(kind: AlgebraKind) -> Self {
        Self {
            kind,
            coeffs: [C64::new(0.0, 0.0); 4],
        }
    }

    /// Largest coefficient magnitude, used for tolerance scaling.
    pub fn max_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Diagonal pairing metric: the Kronecker δ for the Pauli basis and
/// diag(1, 1, −1, −1) for the sl(2,ℝ) basis. It is its own inverse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricG {
    pub diag: [f64; 4],
}

impl MetricG {
    pub fn for_kind(kind: AlgebraKind) -> Self {
        match kind {
            AlgebraKind::Qbit => MetricG {
                diag: [1.0, 1.0, 1.0, 1.0],
            },
            AlgebraKind::Gaussian => MetricG {
                diag: [1.0, 1.0, -1.0, -1.0],
            },
        }
    }

    #[inline]
    pub fn g(&self, mu: usize) -> f64 {
        self.diag[mu]
    }
}

/// Structure constants of the Lie product (`c`, antisymmetric in the upper
/// pair) and the Jordan product (`d`, symmetric in the upper pair), indexed
/// as `c[mu][nu][sigma]` for c^{μν}_σ.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    pub c: [[[f64; 4]; 4]; 4],
    pub d: [[[f64; 4]; 4]; 4],
}

impl StructureConstants {
    /// The closed-form tables for each basis.
    pub fn tabulated(kind: AlgebraKind, hbar: f64) -> Self {
        let mut c = [[[0.0; 4]; 4]; 4];
        let mut d = [[[0.0; 4]; 4]; 4];
        match kind {
            AlgebraKind::Qbit => {
                // [[σ^k, σ^j]] = -(2/ħ) ε^{kj}_l σ^l
                for k in 1..4 {
                    for j in 1..4 {
                        for l in 1..4 {
                            c[k][j][l] = -(2.0 / hbar) * levi_civita(k, j, l);
                        }
                    }
                }
                // σ^μ ⊙ σ^ν = (2/ħ)δ^{μν} σ⁰ for μ,ν both 0 or both spatial;
                // σ^μ ⊙ σ⁰ = σ⁰ ⊙ σ^μ = (2/ħ) σ^μ.
                for mu in 0..4 {
                    d[mu][mu][0] = 2.0 / hbar;
                    d[mu][0][mu] = 2.0 / hbar;
                    d[0][mu][mu] = 2.0 / hbar;
                }
                d[0][0][0] = 2.0 / hbar;
            }
            AlgebraKind::Gaussian => {
                // [[L̂¹,L̂²]] = L̂³, [[L̂²,L̂³]] = -L̂¹, [[L̂¹,L̂³]] = -L̂².
                c[1][2][3] = 1.0;
                c[2][1][3] = -1.0;
                c[2][3][1] = -1.0;
                c[3][2][1] = 1.0;
                c[1][3][2] = -1.0;
                c[3][1][2] = 1.0;
                // L̂^μ ⊙ L̂^ν = g^{μν} L̂⁰ on the diagonal blocks and
                // L̂^μ ⊙ L̂⁰ = L̂⁰ ⊙ L̂^μ = L̂^μ.
                let g = MetricG::for_kind(kind);
                for mu in 0..4 {
                    for nu in 0..4 {
                        if mu != 0 && nu != 0 {
                            d[mu][nu][0] = if mu == nu { g.g(mu) } else { 0.0 };
                        }
                    }
                    d[mu][0][mu] = 1.0;
                    d[0][mu][mu] = 1.0;
                }
                d[0][0][0] = 1.0;
            }
        }
        Self { c, d }
    }
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
        (2, 1, 3) | (3, 2, 1) | (1, 3, 2) => -1.0,
        _ => 0.0,
    }
}

/// Matrix realization of one of the two bases at a fixed ħ, together with
/// the product, pairing and projection operations.
///
/// All operations are pure; an `Algebra` can be shared freely across threads.
#[derive(Debug, Clone, Copy)]
pub struct Algebra {
    pub kind: AlgebraKind,
    pub hbar: f64,
}

impl Algebra {
    pub fn new(kind: AlgebraKind, hbar: f64) -> Self {
        assert!(hbar > 0.0, "hbar must be positive, got {hbar}");
        Self { kind, hbar }
    }

    /// The four basis matrices ê⁰..ê³.
    pub fn basis_matrices(&self) -> [Matrix2c; 4] {
        let z = C64::new(0.0, 0.0);
        let one = C64::new(1.0, 0.0);
        match self.kind {
            AlgebraKind::Qbit => {
                let i = C64::new(0.0, 1.0);
                [
                    Matrix2c::new(one, z, z, one),
                    Matrix2c::new(z, one, one, z),
                    Matrix2c::new(z, -i, i, z),
                    Matrix2c::new(one, z, z, -one),
                ]
            }
            AlgebraKind::Gaussian => {
                let h2 = C64::new(0.5 * self.hbar, 0.0);
                let ih2 = C64::new(0.0, 0.5 * self.hbar);
                [
                    Matrix2c::new(h2, z, z, h2),
                    Matrix2c::new(z, ih2, -ih2, z),
                    Matrix2c::new(ih2, z, z, -ih2),
                    Matrix2c::new(z, ih2, ih2, z),
                ]
            }
        }
    }

    pub fn basis_matrix(&self, mu: usize) -> Matrix2c {
        self.basis_matrices()[mu]
    }

    pub fn metric(&self) -> MetricG {
        MetricG::for_kind(self.kind)
    }

    pub fn structure_constants(&self) -> StructureConstants {
        StructureConstants::tabulated(self.kind, self.hbar)
    }

    fn check_kind(&self, a: &AlgebraElement) -> Result<()> {
        if a.kind != self.kind {
            return Err(Error::KindMismatch(self.kind, a.kind));
        }
        Ok(())
    }

    fn check_pair(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<()> {
        self.check_kind(a)?;
        self.check_kind(b)
    }

    /// Σ a_μ ê^μ as a complex 2×2 matrix.
    pub fn element_matrix(&self, a: &AlgebraElement) -> Result<Matrix2c> {
        self.check_kind(a)?;
        let basis = self.basis_matrices();
        let mut m = Matrix2c::zeros();
        for mu in 0..4 {
            m += basis[mu] * a.coeffs[mu];
        }
        Ok(m)
    }

    /// Inverts the basis expansion: coefficients a_μ with Σ a_μ ê^μ = m.
    ///
    /// Uses trace orthogonality: a_μ = ½ Tr{m σ^μ} for the Pauli basis and
    /// a_μ = (2/ħ²) g_{μν} Tr{m L̂^ν} for the sl(2,ℝ) basis.
    pub fn project_to_basis(&self, m: &Matrix2c) -> [C64; 4] {
        let basis = self.basis_matrices();
        let g = self.metric();
        let mut coeffs = [C64::new(0.0, 0.0); 4];
        for mu in 0..4 {
            let t = (m * basis[mu]).trace();
            coeffs[mu] = match self.kind {
                AlgebraKind::Qbit => 0.5 * t,
                AlgebraKind::Gaussian => 2.0 / (self.hbar * self.hbar) * g.g(mu) * t,
            };
        }
        coeffs
    }

    /// Projection packaged as an element.
    pub fn project_element(&self, m: &Matrix2c) -> AlgebraElement {
        AlgebraElement::new(self.kind, self.project_to_basis(m))
    }

    /// Lie product [[a, b]] = (i/ħ)(ab − ba).
    pub fn lie_product(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_pair(a, b)?;
        let ma = self.element_matrix(a)?;
        let mb = self.element_matrix(b)?;
        let comm = (ma * mb - mb * ma) * C64::new(0.0, 1.0 / self.hbar);
        Ok(self.project_element(&comm))
    }

    /// Jordan product a ⊙ b = (1/ħ)(ab + ba).
    pub fn jordan_product(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_pair(a, b)?;
        let ma = self.element_matrix(a)?;
        let mb = self.element_matrix(b)?;
        let anti = (ma * mb + mb * ma) * C64::new(1.0 / self.hbar, 0.0);
        Ok(self.project_element(&anti))
    }

    /// Conjugate transpose at matrix level, projected back to coefficients.
    pub fn dagger(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        let m = self.element_matrix(a)?;
        Ok(self.project_element(&m.adjoint()))
    }

    /// Plain trace pairing Tr{ab} (no dagger on the first slot).
    pub fn trace_pair(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<C64> {
        self.check_pair(a, b)?;
        let ma = self.element_matrix(a)?;
        let mb = self.element_matrix(b)?;
        Ok((ma * mb).trace())
    }

    /// An element is observable when it is self-adjoint as a matrix.
    pub fn is_observable(&self, a: &AlgebraElement) -> Result<bool> {
        let d = self.dagger(a)?;
        let diff: f64 = (0..4).map(|mu| (d.coeffs[mu] - a.coeffs[mu]).norm()).sum();
        Ok(diff <= 1e-12 * (1.0 + a.max_norm()))
    }
}
