//! Poisson and Jordan brackets on the purity leaves.
//!
//! Expectation values f_a of observables close under two brackets on each
//! leaf: the Poisson bracket reproducing (∓1/r)·f of the Lie product and a
//! Jordan bracket combining f_{a⊙b} with f_a f_b. Both are checked here
//! against the Kähler bivectors written in the leaf charts.
//!
//! Run with: cargo run --example leaf_brackets

use gkls::dynamics::{gradient_like_field, hamiltonian_field, leaf_brackets, lie_derivative_purity, HamiltonianSpec};
use gkls::algebra::AlgebraKind;
use gkls::state_space::StatePoint;

fn main() {
    let hbar = 1.0;

    println!("=== Bloch-sphere brackets ===\n");
    let sigma1 = [0.0, 1.0, 0.0, 0.0];
    let sigma2 = [0.0, 0.0, 1.0, 0.0];
    let p = StatePoint::qbit(0.0, 0.0, 1.0);
    let lb = leaf_brackets(&sigma1, &sigma2, &p, hbar).expect("brackets");
    println!("at the north pole of the unit sphere:");
    println!("  {{f_σ¹, f_σ²}} = {:+.6}   (expected −(1/r) f_[[σ¹,σ²]] = +2/ħ)", lb.poisson);
    println!("  chart-bivector residual: {:.2e}", lb.poisson_residual);
    println!("  ⟨⟨f_σ¹, f_σ²⟩⟩ = {:+.6}, residual {:.2e}\n", lb.jordan, lb.jordan_residual);

    println!("=== Hyperboloid brackets ===\n");
    let l1 = [0.0, 1.0, 0.0, 0.0];
    let l2 = [0.0, 0.0, 1.0, 0.0];
    let p = StatePoint::gaussian(1.5, 0.5, 1.0);
    let lb = leaf_brackets(&l1, &l2, &p, hbar).expect("brackets");
    println!("at y = {:?}:", p.coords);
    println!("  {{f_L¹, f_L²}} = {:+.6}   (equals +(1/r) f_L³ = (ħ/4r) y³)", lb.poisson);
    println!("  chart-bivector residual: {:.2e}", lb.poisson_residual);
    println!("  ⟨⟨f_L¹, f_L²⟩⟩ = {:+.6}, residual {:.2e}\n", lb.jordan, lb.jordan_residual);

    println!("=== Leaf labels under the two flows ===\n");
    let h = HamiltonianSpec::new(AlgebraKind::Gaussian, [0.0, 2.0, -0.4, 0.7]);
    let xh = hamiltonian_field(&h, hbar);
    let b = [0.0, 0.8, -0.3, 0.5];
    let yb = gradient_like_field(AlgebraKind::Gaussian, b, hbar);

    for y in [[1.0, 0.0, 0.0], [2.0, 0.0, 0.0], [2.5, 1.0, -0.5]] {
        let p = StatePoint::gaussian(y[0], y[1], y[2]);
        let lx = lie_derivative_purity(&xh, &p, hbar).unwrap();
        let ly = lie_derivative_purity(&yb, &p, hbar).unwrap();
        println!(
            "y = ({:+.2}, {:+.2}, {:+.2}):  £_X_H f_C = {lx:+.2e},  £_Y_b f_C = {ly:+.5}",
            y[0], y[1], y[2]
        );
    }
    println!("\nX_H always conserves the Casimir; Y_b moves it except on the");
    println!("pure sheet r = 1, where the gradient-like flow is tangent.");
}
