//! Squeezing action on second moments.
//!
//! Starting from a correlation-free fiducial state on the leaf r, the
//! squeezing parameters (τ, φ) sweep out the whole leaf:
//! σ_q² and σ_p² are stretched oppositely while a correlation σ_qp appears,
//! and the purity parameter r never changes.
//!
//! Run with: cargo run --example squeezing_moments

use gkls::state_space::{
    apply_squeezing, moments_to_point, purity_r, to_chart, Chart, ChartKind, SecondMoments,
};

fn main() {
    let hbar = 1.0;
    let r = 1.5;
    // Fiducial on the leaf: symmetric, zero correlation, σ_q²σ_p² = ħ²r²/4.
    let fid = SecondMoments::new(0.5 * hbar * r, 0.5 * hbar * r, 0.0);
    println!("=== Squeezing a fiducial state on the r = {r} leaf ===\n");
    println!("fiducial: σ_q² = {}, σ_p² = {}, σ_qp = 0\n", fid.sq2, fid.sp2);

    println!("tau    phi      σ_q²      σ_p²      σ_qp        r");
    for (tau, phi) in [
        (0.0, 0.0),
        (0.5, 0.0),
        (1.0, 0.0),
        (1.0, std::f64::consts::FRAC_PI_2),
        (1.0, std::f64::consts::PI),
        (1.5, 2.0),
    ] {
        let m = apply_squeezing(&fid, tau, phi, r, hbar).expect("squeezing");
        let p = moments_to_point(&m, hbar).expect("physical");
        let r_out = purity_r(&p).expect("purity");
        println!(
            "{tau:4.2}  {phi:5.2}  {:8.5}  {:8.5}  {:+8.5}  {:7.5}",
            m.sq2, m.sp2, m.sqp, r_out
        );
    }

    // The hyperbolic chart reads the squeezing parameters back off a point.
    let m = apply_squeezing(&fid, 1.2, 0.7, r, hbar).expect("squeezing");
    let p = moments_to_point(&m, hbar).expect("physical");
    let cv = to_chart(&p, ChartKind::Squeezing).expect("chart");
    if let Chart::Squeezing { tau, phi } = cv.chart {
        println!("\npoint y = ({:+.4}, {:+.4}, {:+.4})", p.coords[0], p.coords[1], p.coords[2]);
        println!("hyperbolic chart reads τ = {tau:.4}, φ = {phi:+.4} on the leaf r = {:.4}", cv.r);
        println!("(the chart's angle convention differs from the moment action's φ)");
    }
}
