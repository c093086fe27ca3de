//! Pumping a two-level atom to its excited pole.
//!
//! With v̂₁ = √(2γ) σ₊ the GKLS field has a unique fixed point at (0, 0, 1):
//! every Bloch vector converges there, re-purifying mixed states on the way.
//!
//! Run with: cargo run --example qbit_raising

use gkls::integrator::{integrate_rk4, scenario_solution, IntegratorConfig};
use gkls::scenarios::build_scenario;
use gkls::state_space::StatePoint;

fn main() {
    let scenario = build_scenario("qbit_raising", 2.0, 1.0, 1.0).expect("built-in scenario");
    let fd = scenario.field().expect("field construction");

    println!("=== Two-level raising (ν = 2, γ = 1) ===\n");
    let north = fd.gamma.eval([0.0, 0.0, 1.0]);
    println!(
        "Γ(0,0,1) = ({:+.1e}, {:+.1e}, {:+.1e})  — the north pole is stationary\n",
        north[0], north[1], north[2]
    );

    let starts = [
        StatePoint::qbit(0.0, 0.0, 0.0),
        StatePoint::qbit(0.8, 0.0, -0.5),
        StatePoint::qbit(-0.3, 0.6, 0.2),
    ];
    let cfg = IntegratorConfig::new(0.0, 6.0, 1e-3).expect("integrator config");
    for p0 in starts {
        let traj = integrate_rk4(&fd.gamma, &p0, &cfg).expect("integration");
        let end = traj.last_point();
        println!(
            "from ({:+.2}, {:+.2}, {:+.2}) → ({:+.6}, {:+.6}, {:+.6}), distance to pole {:.2e}",
            p0.coords[0],
            p0.coords[1],
            p0.coords[2],
            end.coords[0],
            end.coords[1],
            end.coords[2],
            scenario.attractor_distance(end),
        );
    }

    // Compare one trajectory against the closed-form solution.
    let p0 = StatePoint::qbit(0.5, -0.2, -0.4);
    let traj = integrate_rk4(&fd.gamma, &p0, &cfg).expect("integration");
    let mut worst: f64 = 0.0;
    for (k, t) in traj.times.iter().enumerate() {
        let exact = scenario_solution(&scenario, &p0, *t).expect("closed form");
        for i in 0..3 {
            worst = worst.max((exact.coords[i] - traj.points[k].coords[i]).abs());
        }
    }
    println!("\nRK4 vs closed form: max error {worst:.2e} over t ∈ [0, 6]");
}
