//! Wigner quasi-distributions of Gaussian and Laguerre–Gaussian states.
//!
//! W_r peaks at 1/(πħr) and integrates to one; the Laguerre family W_n
//! shares the normalization while oscillating in sign for n ≥ 1.
//!
//! Run with: cargo run --example wigner_functions

use gkls::quadrature::integrate_2d;
use gkls::state_space::{
    moments_to_point, purity_r, wigner, wigner_laguerre, SecondMoments,
};

fn main() {
    let hbar = 1.0;
    // A squeezed, correlated mixed state.
    let m = SecondMoments::new(0.9, 0.8, 0.35);
    let p = moments_to_point(&m, hbar).expect("physical moments");
    let r = purity_r(&p).expect("purity");

    println!("=== Gaussian Wigner function ===\n");
    println!("moments: σ_q² = {}, σ_p² = {}, σ_qp = {}", m.sq2, m.sp2, m.sqp);
    println!("hyperboloid point y = {:?}, purity parameter r = {r:.5}", p.coords);
    println!("Tr ρ̂² = 1/r = {:.5}\n", 1.0 / r);

    let w00 = wigner(0.0, 0.0, &m, r, hbar).unwrap();
    println!("W(0,0) = {w00:.6}  (1/(πħr) = {:.6})", 1.0 / (std::f64::consts::PI * hbar * r));

    println!("\nq\\p     -1.0      0.0      1.0");
    for q in [-1.0, 0.0, 1.0] {
        let row: Vec<String> = [-1.0, 0.0, 1.0]
            .iter()
            .map(|&pp| format!("{:8.5}", wigner(q, pp, &m, r, hbar).unwrap()))
            .collect();
        println!("{q:+.1}  {}", row.join(" "));
    }

    let bq = 8.0 * m.sq2.sqrt();
    let bp = 8.0 * m.sp2.sqrt();
    let norm = integrate_2d(
        |q, pp| wigner(q, pp, &m, r, hbar).unwrap(),
        (-bq, bq),
        (-bp, bp),
        200,
    );
    println!("\n∬ W dq dp = {norm:.9}  (Gauss–Legendre 200×200 over ±8σ)");

    println!("\n=== Laguerre–Gaussian family ===\n");
    for n in 0..=3 {
        let w0 = wigner_laguerre(0.0, 0.0, &m, r, n, hbar).unwrap();
        let norm = integrate_2d(
            |q, pp| wigner_laguerre(q, pp, &m, r, n, hbar).unwrap(),
            (-bq, bq),
            (-bp, bp),
            200,
        );
        println!("n = {n}:  W_n(0,0) = {w0:+.6},  ∬ W_n = {norm:+.9}");
    }
    println!("\nn = 0 is the Gaussian case; higher n dip negative near the origin");
    println!("while keeping unit normalization.");
}
