//! The damped harmonic oscillator on the solid hyperboloid.
//!
//! Two dissipation channels for Ĥ = 2L̂¹ (ω = 1):
//!  * v̂₁ = (√γ/ħ) L̂¹ — second moments spiral onto the axis (y¹, 0, 0);
//!    pure coherent states at (1, 0, 0) are untouched.
//!  * v̂₁ = √γ K̂₊   — everything relaxes to the thermal-like point (2, 0, 0)
//!    with purity ½.
//!
//! Run with: cargo run --example oscillator_damping

use gkls::integrator::{integrate_exact_affine, integrate_rk4, IntegratorConfig};
use gkls::scenarios::build_scenario;
use gkls::state_space::{purity_r, StatePoint};

fn main() {
    for name in ["osc_L1", "osc_Kplus"] {
        let scenario = build_scenario(name, 2.0, 1.0, 1.0).expect("built-in scenario");
        let fd = scenario.field().expect("field construction");
        println!("=== {name} (γ = 1, ω = 1) ===");

        let p0 = StatePoint::gaussian(3.0, 1.0, 0.0);
        let cfg = IntegratorConfig::new(0.0, 8.0, 1e-3).expect("integrator config");
        let traj = integrate_rk4(&fd.gamma, &p0, &cfg).expect("integration");

        println!("t        y1        y2        y3        r       Tr rho^2");
        for k in (0..traj.len()).step_by(1000) {
            let p = &traj.points[k];
            println!(
                "{:5.2}  {:8.5}  {:+8.5}  {:+8.5}  {:7.5}  {:7.5}",
                traj.times[k],
                p.coords[0],
                p.coords[1],
                p.coords[2],
                traj.purity[k],
                1.0 / traj.purity[k]
            );
        }

        // Cross-check the last point against the exact affine flow.
        let (a, c) = &fd.gamma_affine;
        let exact = integrate_exact_affine(a, c, &p0, &[8.0]).expect("matrix exponential");
        let rk = traj.last_point();
        let ex = &exact.points[0];
        let err = (0..3)
            .map(|i| (rk.coords[i] - ex.coords[i]).abs())
            .fold(0.0, f64::max);
        println!("RK4 vs exact affine flow at t = 8: max error {err:.2e}");
        println!(
            "distance to the attractor set: {:.2e}\n",
            scenario.attractor_distance(rk)
        );
    }

    // The pure coherent state is a fixed point of the L̂¹ channel.
    let scenario = build_scenario("osc_L1", 2.0, 1.0, 1.0).expect("built-in scenario");
    let fd = scenario.field().expect("field construction");
    let vacuum = StatePoint::gaussian(1.0, 0.0, 0.0);
    let v = fd.gamma.eval(vacuum.coords);
    println!(
        "osc_L1 leaves the coherent state (1,0,0) alone: Γ = ({:+.1e}, {:+.1e}, {:+.1e}), r = {}",
        v[0],
        v[1],
        v[2],
        purity_r(&vacuum).unwrap()
    );
}
