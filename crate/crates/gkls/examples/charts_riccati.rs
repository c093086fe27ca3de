//! Leaf charts and the Riccati form of Hamiltonian flow.
//!
//! On a constant-purity leaf the Hamiltonian dynamics becomes a complex
//! Riccati equation: in the stereographic coordinate z on a Bloch sphere and
//! in the Siegel upper-half-plane coordinate C on a hyperboloid sheet.
//!
//! Run with: cargo run --example charts_riccati

use gkls::algebra::AlgebraKind;
use gkls::dynamics::{hamiltonian_field, riccati_rhs, HamiltonianSpec};
use gkls::state_space::{from_chart, purity_r, to_chart, Chart, ChartKind, StatePoint};

fn main() {
    let hbar = 1.0;

    println!("=== Stereographic charts on the Bloch ball ===\n");
    let p = StatePoint::qbit(0.3, -0.4, 0.2);
    let r = purity_r(&p).unwrap();
    let north = to_chart(&p, ChartKind::StereoNorth).unwrap();
    let south = to_chart(&p, ChartKind::StereoSouth).unwrap();
    let (z, zeta) = match (north.chart, south.chart) {
        (Chart::StereoNorth(z), Chart::StereoSouth(zeta)) => (z, zeta),
        _ => unreachable!(),
    };
    println!("x = {:?}  (leaf r = {r:.4})", p.coords);
    println!("north chart: z = {z:.6}");
    println!("south chart: ζ = {zeta:.6}");
    println!("transition:  z·ζ = {:.6}  (equals 1 on the overlap)", z * zeta);
    let back = from_chart(&north).unwrap();
    println!("round trip through z: {:?}\n", back.coords);

    println!("=== Riccati flow vs the Cartesian field ===\n");
    // Two-level system with a generic Hamiltonian.
    let h = HamiltonianSpec::new(AlgebraKind::Qbit, [0.0, 0.7, -0.2, 1.1]);
    let xh = hamiltonian_field(&h, hbar);
    let v = xh.eval(p.coords);
    let ric = riccati_rhs(&h, &north, hbar).unwrap();
    println!("X_H(x)        = ({:+.5}, {:+.5}, {:+.5})", v[0], v[1], v[2]);
    println!("ż (on-leaf)   = {ric:.6}");
    // The chart velocity of the leaf-restricted flow X_H/r equals ż; check
    // by stepping the Cartesian flow and re-charting.
    let eps = 1e-7;
    let stepped = StatePoint::qbit(
        p.coords[0] + eps * v[0] / r,
        p.coords[1] + eps * v[1] / r,
        p.coords[2] + eps * v[2] / r,
    );
    let z1 = match to_chart(&stepped, ChartKind::StereoNorth).unwrap().chart {
        Chart::StereoNorth(z1) => z1,
        _ => unreachable!(),
    };
    println!("(z(t+ε)−z)/ε  = {:.6}\n", (z1 - z) / eps);

    println!("=== Siegel chart on a hyperboloid leaf ===\n");
    let p = StatePoint::gaussian(2.0, 1.0, 0.5);
    let r = purity_r(&p).unwrap();
    let cv = to_chart(&p, ChartKind::Siegel).unwrap();
    let c = match cv.chart {
        Chart::Siegel(c) => c,
        _ => unreachable!(),
    };
    println!("y = {:?}  (leaf r = {r:.4})", p.coords);
    println!("Siegel coordinate C = {c:.6}  (Im C > 0)");

    // Harmonic oscillator: the vacuum C = i on the r = 1 leaf is a fixed
    // point of Ċ = −(1/r)[H₁C² + 2VC + H₂].
    let h_osc = HamiltonianSpec::new(AlgebraKind::Gaussian, [0.0, 2.0, 0.0, 0.0]);
    let vac = to_chart(&StatePoint::gaussian(1.0, 0.0, 0.0), ChartKind::Siegel).unwrap();
    let c_dot = riccati_rhs(&h_osc, &vac, hbar).unwrap();
    println!("oscillator at the vacuum: Ċ = {c_dot:.2e} — stationary");
    let c_dot = riccati_rhs(&h_osc, &cv, hbar).unwrap();
    println!("oscillator at C above:    Ċ = {c_dot:.6}");
}
