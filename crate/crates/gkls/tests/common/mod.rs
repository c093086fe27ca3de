//! Shared helpers for the integration suites: deterministic random draws of
//! systems and physical points.

use gkls::algebra::{AlgebraElement, AlgebraKind, C64};
use gkls::dynamics::{DissipatorSet, HamiltonianSpec};
use gkls::state_space::StatePoint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_hamiltonian(kind: AlgebraKind, rng: &mut ChaCha8Rng) -> HamiltonianSpec {
    HamiltonianSpec::new(kind, std::array::from_fn(|_| rng.gen_range(-1.5..1.5)))
}

/// Uniform point of the open Bloch ball, bounded away from the surface.
pub fn random_ball_point(rng: &mut ChaCha8Rng) -> StatePoint {
    loop {
        let x: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        if x.iter().map(|v| v * v).sum::<f64>() < 0.9 {
            return StatePoint::new(AlgebraKind::Qbit, x);
        }
    }
}

/// Point of the solid hyperboloid drawn leaf-by-leaf.
pub fn random_hyperboloid_point(rng: &mut ChaCha8Rng) -> StatePoint {
    let r = rng.gen_range(1.0..3.0);
    let tau: f64 = rng.gen_range(0.0..1.5);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    StatePoint::gaussian(
        r * tau.cosh(),
        r * tau.sinh() * phi.cos(),
        r * tau.sinh() * phi.sin(),
    )
}

pub fn random_point(kind: AlgebraKind, rng: &mut ChaCha8Rng) -> StatePoint {
    match kind {
        AlgebraKind::Qbit => random_ball_point(rng),
        AlgebraKind::Gaussian => random_hyperboloid_point(rng),
    }
}

fn random_c64(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// A random dissipator family (1–3 operators with complex coefficients).
///
/// Two-level operators are unrestricted. Gaussian operators are drawn from
/// the two invariant blocks of the non-unitary representation,
/// span{L̂⁰, L̂¹} and span{L̂², L̂³}; mixing the blocks inside one operator
/// puts the Choi–Kraus coefficient traces outside the real table the
/// construction is defined for (the builder rejects such sets).
pub fn random_dissipators(kind: AlgebraKind, rng: &mut ChaCha8Rng, hbar: f64) -> DissipatorSet {
    let count = rng.gen_range(1..=3);
    let mut vs = Vec::with_capacity(count);
    for _ in 0..count {
        let zero = C64::new(0.0, 0.0);
        let coeffs = match kind {
            AlgebraKind::Qbit => std::array::from_fn(|_| random_c64(rng)),
            AlgebraKind::Gaussian => {
                if rng.gen_bool(0.5) {
                    [random_c64(rng), random_c64(rng), zero, zero]
                } else {
                    [zero, zero, random_c64(rng), random_c64(rng)]
                }
            }
        };
        vs.push(AlgebraElement::new(kind, coeffs));
    }
    DissipatorSet::new(kind, vs, hbar).expect("drawn dissipator sets are representable")
}
