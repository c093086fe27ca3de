//! Reference generator evaluated by raw 2×2 matrix arithmetic.
//!
//! This path never touches structure constants, Kraus tables or the field
//! formulas: it builds ξ̂ from the state coordinates, applies
//! L(ξ̂) = −(i/ħ)[Ĥ, ξ̂] − ½[V̂, ξ̂]₊ + Σ v̂ ξ̂ v̂† as matrices, and reads the
//! coordinate velocities back off traces. It is the ground truth the
//! constructed fields are audited against.

use crate::algebra::{Algebra, AlgebraKind, Matrix2c, C64};
use crate::error::{Error, Result};
use crate::state_space::StatePoint;

use super::{DissipatorSet, HamiltonianSpec};

/// Velocity plus the audit quantities every evaluation checks.
#[derive(Debug, Clone, Copy)]
pub struct OracleVelocity {
    pub velocity: [f64; 3],
    /// Velocity of the trace component (x⁰ or y⁰); zero for any generator of
    /// the GKLS form.
    pub trace_velocity: f64,
    /// Largest imaginary part seen in the coordinate velocities.
    pub imag_residual: f64,
}

/// Coordinate velocity at `p` by explicit matrix arithmetic.
pub fn oracle_velocity(
    h: &HamiltonianSpec,
    d: &DissipatorSet,
    p: &StatePoint,
    hbar: f64,
) -> Result<[f64; 3]> {
    Ok(oracle_velocity_with_audit(h, d, p, hbar)?.velocity)
}

/// As [`oracle_velocity`], returning the audit quantities as well.
pub fn oracle_velocity_with_audit(
    h: &HamiltonianSpec,
    d: &DissipatorSet,
    p: &StatePoint,
    hbar: f64,
) -> Result<OracleVelocity> {
    if h.kind != d.kind {
        return Err(Error::KindMismatch(h.kind, d.kind));
    }
    if h.kind != p.kind {
        return Err(Error::KindMismatch(h.kind, p.kind));
    }
    let kind = h.kind;
    let alg = Algebra::new(kind, hbar);
    let basis = alg.basis_matrices();
    let g = alg.metric();

    // ξ̂ from the coordinates: ρ̂ = ½ x^μ σ_μ with x⁰ = 1, or
    // ξ̂ = (1/2ħ) y^μ L_μ with y⁰ = 2 and L_μ = g_{μν} L̂^ν.
    let mut xi = Matrix2c::zeros();
    match kind {
        AlgebraKind::Qbit => {
            xi += basis[0] * C64::new(0.5, 0.0);
            for k in 0..3 {
                xi += basis[k + 1] * C64::new(0.5 * p.coords[k], 0.0);
            }
        }
        AlgebraKind::Gaussian => {
            xi += basis[0] * C64::new(2.0 * g.g(0) / (2.0 * hbar), 0.0);
            for k in 0..3 {
                xi += basis[k + 1] * C64::new(p.coords[k] * g.g(k + 1) / (2.0 * hbar), 0.0);
            }
        }
    }

    let hm = alg.element_matrix(&h.element())?;
    let mut gen = (hm * xi - xi * hm) * C64::new(0.0, -1.0 / hbar);
    let mut v_total = Matrix2c::zeros();
    for v in &d.vs {
        let vm = alg.element_matrix(v)?;
        v_total += vm.adjoint() * vm;
        gen += vm * xi * vm.adjoint();
    }
    gen -= (v_total * xi + xi * v_total) * C64::new(0.5, 0.0);

    let scale = 1.0 + gen.iter().map(|z| z.norm()).fold(0.0, f64::max);

    // Read the velocities back off the trace pairing.
    let mut velocity = [0.0; 3];
    let mut imag_residual: f64 = 0.0;
    let trace_velocity = match kind {
        AlgebraKind::Qbit => {
            for k in 0..3 {
                let t = (basis[k + 1] * gen).trace();
                velocity[k] = t.re;
                imag_residual = imag_residual.max(t.im.abs());
            }
            let t0 = (basis[0] * gen).trace();
            imag_residual = imag_residual.max(t0.im.abs());
            t0.re
        }
        AlgebraKind::Gaussian => {
            for k in 0..3 {
                let t = (basis[k + 1] * gen).trace() * C64::new(4.0 / hbar, 0.0);
                velocity[k] = t.re;
                imag_residual = imag_residual.max(t.im.abs());
            }
            let t0 = (basis[0] * gen).trace() * C64::new(4.0 / hbar, 0.0);
            imag_residual = imag_residual.max(t0.im.abs());
            t0.re
        }
    };

    if trace_velocity.abs() > 1e-12 * scale {
        return Err(Error::TracePreservation(trace_velocity));
    }
    if imag_residual > 1e-9 * scale {
        return Err(Error::NonCompletelyPositive(imag_residual));
    }

    Ok(OracleVelocity {
        velocity,
        trace_velocity,
        imag_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraElement;
    use approx::assert_abs_diff_eq;

    #[test]
    fn zero_system_is_stationary() {
        let h = HamiltonianSpec::zero(AlgebraKind::Qbit);
        let d = DissipatorSet::empty(AlgebraKind::Qbit);
        let v = oracle_velocity(&h, &d, &StatePoint::qbit(0.2, -0.1, 0.5), 1.0).unwrap();
        assert_eq!(v, [0.0, 0.0, 0.0]);
    }

    #[test]
    fn dephasing_velocity_at_boundary() {
        // ν = 2, γ = 1 at (1,0,0) gives (−1, 2, 0).
        let h = HamiltonianSpec::new(AlgebraKind::Qbit, [0.0, 0.0, 0.0, 1.0]);
        let v1 = AlgebraElement::real(AlgebraKind::Qbit, [0.0, 0.0, 0.0, (0.5f64).sqrt()]);
        let d = DissipatorSet::new(AlgebraKind::Qbit, vec![v1], 1.0).unwrap();
        let v = oracle_velocity(&h, &d, &StatePoint::qbit(1.0, 0.0, 0.0), 1.0).unwrap();
        assert_abs_diff_eq!(v[0], -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(v[1], 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(v[2], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn oscillator_kplus_is_stationary_at_attractor() {
        use num_complex::Complex64 as C64;
        let h = HamiltonianSpec::new(AlgebraKind::Gaussian, [0.0, 2.0, 0.0, 0.0]);
        let v1 = AlgebraElement::new(
            AlgebraKind::Gaussian,
            [
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
                C64::new(1.0, 0.0),
                C64::new(0.0, -1.0),
            ],
        );
        let d = DissipatorSet::new(AlgebraKind::Gaussian, vec![v1], 1.0).unwrap();
        let v = oracle_velocity(&h, &d, &StatePoint::gaussian(2.0, 0.0, 0.0), 1.0).unwrap();
        for j in 0..3 {
            assert_abs_diff_eq!(v[j], 0.0, epsilon = 1e-12);
        }
    }
}
