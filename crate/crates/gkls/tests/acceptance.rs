//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (run with `--nocapture` to see them).
//!
//! Every tolerance is pinned in the body of its criterion.

mod common;

use std::time::{Duration, Instant};

use gkls::algebra::{Algebra, AlgebraElement, AlgebraKind, C64};
use gkls::dynamics::{
    gkls_field, gradient_like_field, hamiltonian_field, lie_derivative_purity,
    oracle_velocity_with_audit, riccati_rhs,
};
use gkls::integrator::{integrate_rk4, IntegratorConfig};
use gkls::quadrature::integrate_2d;
use gkls::scenarios::{build_scenario, SCENARIO_NAMES};
use gkls::state_space::{
    from_chart, point_to_moments, purity_r, to_chart, wigner, wigner_laguerre, Chart, ChartKind,
    StatePoint,
};
use nalgebra::{Matrix3, Vector3};
use rand::Rng;

fn conclude(n: usize, desc: &str, started: Instant, budget_s: f64, failures: &[String]) {
    let elapsed = started.elapsed();
    let within = elapsed <= Duration::from_secs_f64(budget_s);
    let pass = failures.is_empty() && within;
    println!(
        "[{}] criterion {n}: {desc} ({:.3}s)",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    assert!(
        failures.is_empty(),
        "criterion {n} failed:\n{}",
        failures.join("\n")
    );
    assert!(
        within,
        "criterion {n} exceeded its {budget_s}s runtime budget: {elapsed:?}"
    );
}

fn max_affine_mismatch(
    got: &(Matrix3<f64>, Vector3<f64>),
    expect_a: [[f64; 3]; 3],
    expect_c: [f64; 3],
) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        worst = worst.max((got.1[i] - expect_c[i]).abs());
        for j in 0..3 {
            worst = worst.max((got.0[(i, j)] - expect_a[i][j]).abs());
        }
    }
    worst
}

#[test]
fn criterion_1_golden_field_reproduction() {
    let started = Instant::now();
    let tol = 1e-12;
    let mut failures = Vec::new();

    // Γ of the four built-in systems at ν = 2, γ = 1, ω = 1, frozen
    // literally here.
    let golden: [(&str, [[f64; 3]; 3], [f64; 3]); 4] = [
        (
            "qbit_dephasing",
            [[-1.0, -2.0, 0.0], [2.0, -1.0, 0.0], [0.0, 0.0, 0.0]],
            [0.0, 0.0, 0.0],
        ),
        (
            "qbit_raising",
            [[-1.0, -2.0, 0.0], [2.0, -1.0, 0.0], [0.0, 0.0, -2.0]],
            [0.0, 0.0, 2.0],
        ),
        (
            "osc_L1",
            [[0.0, 0.0, 0.0], [0.0, -0.5, 2.0], [0.0, -2.0, -0.5]],
            [0.0, 0.0, 0.0],
        ),
        (
            "osc_Kplus",
            [[-1.0, 0.0, 0.0], [0.0, -0.5, 2.0], [0.0, -2.0, -0.5]],
            [2.0, 0.0, 0.0],
        ),
    ];

    for (name, a, c) in golden {
        let s = build_scenario(name, 2.0, 1.0, 1.0).expect("scenario");
        let fd = gkls_field(&s.h, &s.d, 1.0).expect("field");
        let worst = max_affine_mismatch(&fd.gamma_affine, a, c);
        if worst > tol {
            failures.push(format!("{name}: affine mismatch {worst:.3e} > {tol:.0e}"));
        }
    }

    conclude(1, "golden field reproduction", started, 1.0, &failures);
}

#[test]
fn criterion_2_closed_form_trajectories() {
    let started = Instant::now();
    let tol = 1e-7;
    let mut failures = Vec::new();

    // The printed solutions, written out independently of the library:
    // damped rotations at rate γ (two-level, frequency ν) or γ/2
    // (oscillators, frequency 2), plus the known longitudinal relaxations.
    let closed_form = |name: &str, p0: [f64; 3], t: f64| -> [f64; 3] {
        let (nu, gamma) = (2.0, 1.0);
        match name {
            "qbit_dephasing" | "qbit_raising" => {
                let e = (-gamma * t).exp();
                let (s, c) = (nu * t).sin_cos();
                let x3 = if name == "qbit_raising" {
                    1.0 + (p0[2] - 1.0) * (-2.0 * gamma * t).exp()
                } else {
                    p0[2]
                };
                [e * (p0[0] * c - p0[1] * s), e * (p0[1] * c + p0[0] * s), x3]
            }
            _ => {
                let e = (-0.5 * gamma * t).exp();
                let (s, c) = (2.0 * t).sin_cos();
                let y1 = if name == "osc_Kplus" {
                    2.0 + (p0[0] - 2.0) * (-gamma * t).exp()
                } else {
                    p0[0]
                };
                [y1, e * (p0[1] * c + p0[2] * s), e * (p0[2] * c - p0[1] * s)]
            }
        }
    };

    let starts = |kind: AlgebraKind| -> Vec<StatePoint> {
        match kind {
            AlgebraKind::Qbit => vec![
                StatePoint::qbit(1.0, 0.0, 0.0),
                StatePoint::qbit(0.3, -0.5, 0.6),
            ],
            AlgebraKind::Gaussian => vec![
                StatePoint::gaussian(2.0, 1.0, 0.0),
                StatePoint::gaussian(3.0, -0.8, 1.1),
            ],
        }
    };

    for name in SCENARIO_NAMES {
        let s = build_scenario(name, 2.0, 1.0, 1.0).expect("scenario");
        let fd = s.field().expect("field");
        for p0 in starts(s.kind) {
            let cfg = IntegratorConfig::new(0.0, 5.0, 1e-3).expect("config");
            let traj = integrate_rk4(&fd.gamma, &p0, &cfg).expect("integration");
            let mut worst: f64 = 0.0;
            for (k, t) in traj.times.iter().enumerate() {
                let exact = closed_form(name, p0.coords, *t);
                for i in 0..3 {
                    worst = worst.max((exact[i] - traj.points[k].coords[i]).abs());
                }
            }
            if worst > tol {
                failures.push(format!(
                    "{name} from {:?}: max RK4-vs-closed-form error {worst:.3e} > {tol:.0e}",
                    p0.coords
                ));
            }
        }
    }

    conclude(2, "closed-form trajectory reproduction", started, 5.0, &failures);
}

#[test]
fn criterion_3_fixed_points_and_attractors() {
    let started = Instant::now();
    let field_tol = 1e-12;
    let dist_tol = 1e-5;
    let mut failures = Vec::new();
    let mut rng = common::rng(0x617474);

    // |Γ| at the advertised singular points.
    let stationary: [(&str, Vec<[f64; 3]>); 3] = [
        ("qbit_raising", vec![[0.0, 0.0, 1.0]]),
        ("osc_L1", vec![[1.0, 0.0, 0.0], [2.0, 0.0, 0.0], [3.0, 0.0, 0.0]]),
        ("osc_Kplus", vec![[2.0, 0.0, 0.0]]),
    ];
    for (name, points) in &stationary {
        let s = build_scenario(name, 2.0, 1.0, 1.0).expect("scenario");
        let fd = s.field().expect("field");
        for p in points {
            let v = fd.gamma.eval(*p);
            let norm = v.iter().map(|x| x.abs()).fold(0.0, f64::max);
            if norm > field_tol {
                failures.push(format!("{name}: |Γ{p:?}| = {norm:.3e} > {field_tol:.0e}"));
            }
        }
    }

    // The pure coherent state stays put under the L̂¹-damped oscillator.
    {
        let s = build_scenario("osc_L1", 2.0, 1.0, 1.0).expect("scenario");
        let fd = s.field().expect("field");
        let cfg = IntegratorConfig::new(0.0, 5.0, 1e-3).expect("config");
        let traj = integrate_rk4(&fd.gamma, &StatePoint::gaussian(1.0, 0.0, 0.0), &cfg)
            .expect("integration");
        let worst = traj
            .points
            .iter()
            .map(|p| s.attractor_distance(p).max((p.coords[0] - 1.0).abs()))
            .fold(0.0, f64::max);
        if worst > 1e-9 {
            failures.push(format!("osc_L1: (1,0,0) drifted by {worst:.3e}"));
        }
    }

    // Trajectory distance to the attractor set at t = 20/γ from 20 random
    // physical starts. The slowest contraction rate is γ/2, so starts are
    // drawn with transverse amplitude ≤ 0.2 to keep e^{−10}·ρ₀ within the
    // 1e-5 budget.
    for name in ["qbit_raising", "osc_L1", "osc_Kplus"] {
        let s = build_scenario(name, 2.0, 1.0, 1.0).expect("scenario");
        let fd = s.field().expect("field");
        let cfg = IntegratorConfig::new(0.0, 20.0, 5e-3).expect("config");
        let mut worst: f64 = 0.0;
        for _ in 0..20 {
            let p0 = match s.kind {
                AlgebraKind::Qbit => common::random_ball_point(&mut rng),
                AlgebraKind::Gaussian => {
                    let rho: f64 = rng.gen_range(0.0..0.2);
                    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                    let y1 = rng.gen_range((1.0 + rho * rho).sqrt() + 0.05..3.0);
                    StatePoint::gaussian(y1, rho * phi.cos(), rho * phi.sin())
                }
            };
            let traj = integrate_rk4(&fd.gamma, &p0, &cfg).expect("integration");
            worst = worst.max(s.attractor_distance(traj.last_point()));
        }
        if worst > dist_tol {
            failures.push(format!(
                "{name}: distance to attractor at t = 20/γ is {worst:.3e} > {dist_tol:.0e}"
            ));
        }
    }

    conclude(3, "fixed-point and attractor claims", started, 10.0, &failures);
}

#[test]
fn criterion_4_oracle_equivalence() {
    let started = Instant::now();
    let field_tol = 1e-9;
    let trace_tol = 1e-12;
    let hbar = 1.0;
    let mut failures = Vec::new();

    for kind in [AlgebraKind::Qbit, AlgebraKind::Gaussian] {
        let mut rng = common::rng(match kind {
            AlgebraKind::Qbit => 0x6f7261,
            AlgebraKind::Gaussian => 0x6f7262,
        });
        let mut worst_field: f64 = 0.0;
        let mut worst_trace: f64 = 0.0;
        for _ in 0..1000 {
            let h = common::random_hamiltonian(kind, &mut rng);
            let d = common::random_dissipators(kind, &mut rng, hbar);
            let p = common::random_point(kind, &mut rng);
            let fd = gkls_field(&h, &d, hbar).expect("decomposition");
            let direct = fd.gamma.eval(p.coords);
            let audit = oracle_velocity_with_audit(&h, &d, &p, hbar).expect("oracle");
            for i in 0..3 {
                worst_field = worst_field.max((direct[i] - audit.velocity[i]).abs());
            }
            worst_trace = worst_trace.max(audit.trace_velocity.abs());
        }
        if worst_field > field_tol {
            failures.push(format!(
                "{kind:?}: worst field-vs-generator residual {worst_field:.3e} > {field_tol:.0e}"
            ));
        }
        if worst_trace > trace_tol {
            failures.push(format!(
                "{kind:?}: worst trace-component velocity {worst_trace:.3e} > {trace_tol:.0e}"
            ));
        }
    }

    conclude(4, "matrix-generator oracle equivalence", started, 5.0, &failures);
}

#[test]
fn criterion_5_conservation_and_tangency() {
    let started = Instant::now();
    let tol = 1e-12;
    let hbar = 1.0;
    let mut failures = Vec::new();
    let mut rng = common::rng(0x636f6e);

    let mut worst_xh: f64 = 0.0;
    let mut worst_yb: f64 = 0.0;
    let mut worst_boundary: f64 = 0.0;
    for _ in 0..1000 {
        for kind in [AlgebraKind::Qbit, AlgebraKind::Gaussian] {
            // Hamiltonian flow conserves the leaf label.
            let h = common::random_hamiltonian(kind, &mut rng);
            let p = common::random_point(kind, &mut rng);
            let xh = hamiltonian_field(&h, hbar);
            worst_xh = worst_xh.max(lie_derivative_purity(&xh, &p, hbar).unwrap().abs());

            // Gradient-like flow matches its closed form off the boundary:
            // (2/ħr)(1−r²) b·x on the ball, (ħ²/8)(1−r²) b·y on the
            // hyperboloid.
            let b: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.5..1.5));
            let yb = gradient_like_field(kind, b, hbar);
            let got = lie_derivative_purity(&yb, &p, hbar).unwrap();
            let r = purity_r(&p).unwrap();
            let bdot: f64 = (0..3).map(|k| b[k + 1] * p.coords[k]).sum();
            let expect = match kind {
                AlgebraKind::Qbit => 2.0 / (hbar * r) * (1.0 - r * r) * bdot,
                AlgebraKind::Gaussian => hbar * hbar / 8.0 * (1.0 - r * r) * bdot,
            };
            worst_yb = worst_yb.max((got - expect).abs());

            // Tangency on the pure boundary r = 1.
            let boundary = match kind {
                AlgebraKind::Qbit => {
                    let theta: f64 = rng.gen_range(0.0..std::f64::consts::PI);
                    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                    StatePoint::qbit(
                        theta.sin() * phi.cos(),
                        theta.sin() * phi.sin(),
                        theta.cos(),
                    )
                }
                AlgebraKind::Gaussian => {
                    let tau: f64 = rng.gen_range(0.0..1.5);
                    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                    StatePoint::gaussian(
                        tau.cosh(),
                        tau.sinh() * phi.cos(),
                        tau.sinh() * phi.sin(),
                    )
                }
            };
            worst_boundary =
                worst_boundary.max(lie_derivative_purity(&yb, &boundary, hbar).unwrap().abs());
        }
    }
    if worst_xh > tol {
        failures.push(format!("£_X_H(label) residual {worst_xh:.3e} > {tol:.0e}"));
    }
    if worst_yb > tol {
        failures.push(format!("£_Y_b closed-form residual {worst_yb:.3e} > {tol:.0e}"));
    }
    if worst_boundary > tol {
        failures.push(format!(
            "boundary tangency residual {worst_boundary:.3e} > {tol:.0e}"
        ));
    }

    conclude(5, "conservation and boundary tangency", started, 10.0, &failures);
}

/// d(chart)/dt along a velocity `v` at `p`, by central differences of the
/// chart map.
fn chart_pushforward(p: &StatePoint, which: ChartKind, v: [f64; 3]) -> C64 {
    let mut total = C64::new(0.0, 0.0);
    for j in 0..3 {
        let h = 1e-6 * p.coords[j].abs().max(1.0);
        let mut plus = *p;
        let mut minus = *p;
        plus.coords[j] += h;
        minus.coords[j] -= h;
        let wp = chart_coord(&to_chart(&plus, which).unwrap().chart);
        let wm = chart_coord(&to_chart(&minus, which).unwrap().chart);
        total += (wp - wm) / (2.0 * h) * v[j];
    }
    total
}

fn chart_coord(c: &Chart) -> C64 {
    match c {
        Chart::StereoNorth(z) | Chart::StereoSouth(z) | Chart::Siegel(z) => *z,
        Chart::Squeezing { .. } => unreachable!(),
    }
}

#[test]
fn criterion_6_chart_consistency() {
    let started = Instant::now();
    let riccati_tol = 1e-6;
    let round_trip_tol = 1e-12;
    let hbar = 1.0;
    let mut failures = Vec::new();
    let mut rng = common::rng(0x726963);

    // Riccati velocity vs pushforward of the leaf-restricted Hamiltonian
    // field X_H/r (the on-leaf system the chart equations describe).
    let mut worst_q: f64 = 0.0;
    for _ in 0..200 {
        let h = common::random_hamiltonian(AlgebraKind::Qbit, &mut rng);
        let p = loop {
            let cand = common::random_ball_point(&mut rng);
            let r = cand.raw_leaf_radius();
            if r > 0.25 && cand.coords[2] < 0.3 * r {
                break cand;
            }
        };
        let r = purity_r(&p).unwrap();
        let xh = hamiltonian_field(&h, hbar).eval(p.coords);
        let leaf_velocity = [xh[0] / r, xh[1] / r, xh[2] / r];
        let push = chart_pushforward(&p, ChartKind::StereoNorth, leaf_velocity);
        let cv = to_chart(&p, ChartKind::StereoNorth).unwrap();
        let ric = riccati_rhs(&h, &cv, hbar).unwrap();
        worst_q = worst_q.max((push - ric).norm());
    }
    if worst_q > riccati_tol {
        failures.push(format!(
            "ball: Riccati-vs-pushforward residual {worst_q:.3e} > {riccati_tol:.0e}"
        ));
    }

    let mut worst_g: f64 = 0.0;
    for _ in 0..200 {
        let h = common::random_hamiltonian(AlgebraKind::Gaussian, &mut rng);
        let p = common::random_hyperboloid_point(&mut rng);
        let r = purity_r(&p).unwrap();
        let xh = hamiltonian_field(&h, hbar).eval(p.coords);
        let leaf_velocity = [xh[0] / r, xh[1] / r, xh[2] / r];
        let push = chart_pushforward(&p, ChartKind::Siegel, leaf_velocity);
        let cv = to_chart(&p, ChartKind::Siegel).unwrap();
        let ric = riccati_rhs(&h, &cv, hbar).unwrap();
        worst_g = worst_g.max((push - ric).norm());
    }
    if worst_g > riccati_tol {
        failures.push(format!(
            "hyperboloid: Riccati-vs-pushforward residual {worst_g:.3e} > {riccati_tol:.0e}"
        ));
    }

    // Chart round trips away from the declared singular loci.
    let mut worst_rt: f64 = 0.0;
    for _ in 0..1000 {
        let p = common::random_ball_point(&mut rng);
        let r = p.raw_leaf_radius();
        if r < 1e-3 {
            continue;
        }
        for (which, pole) in [
            (ChartKind::StereoNorth, r - p.coords[2]),
            (ChartKind::StereoSouth, r + p.coords[2]),
        ] {
            if pole > 1e-3 * r {
                let back = from_chart(&to_chart(&p, which).unwrap()).unwrap();
                for i in 0..3 {
                    worst_rt = worst_rt.max((back.coords[i] - p.coords[i]).abs());
                }
            }
        }
    }
    for _ in 0..1000 {
        let p = common::random_hyperboloid_point(&mut rng);
        for which in [ChartKind::Siegel, ChartKind::Squeezing] {
            let back = from_chart(&to_chart(&p, which).unwrap()).unwrap();
            for i in 0..3 {
                worst_rt = worst_rt.max((back.coords[i] - p.coords[i]).abs());
            }
        }
    }
    if worst_rt > round_trip_tol {
        failures.push(format!(
            "chart round-trip residual {worst_rt:.3e} > {round_trip_tol:.0e}"
        ));
    }

    conclude(6, "chart-level consistency", started, 10.0, &failures);
}

#[test]
fn criterion_7_algebra_suite() {
    let started = Instant::now();
    let tol = 1e-12;
    let affinity_tol = 1e-10;
    let mut failures = Vec::new();

    for kind in [AlgebraKind::Qbit, AlgebraKind::Gaussian] {
        let alg = Algebra::new(kind, 1.0);
        let g = alg.metric();

        // Trace orthogonality.
        for mu in 0..4 {
            for nu in 0..4 {
                let t = alg
                    .trace_pair(
                        &AlgebraElement::basis(kind, mu),
                        &AlgebraElement::basis(kind, nu),
                    )
                    .unwrap();
                let expect = match kind {
                    AlgebraKind::Qbit => {
                        if mu == nu {
                            2.0
                        } else {
                            0.0
                        }
                    }
                    AlgebraKind::Gaussian => {
                        if mu == nu {
                            0.5 * g.g(mu)
                        } else {
                            0.0
                        }
                    }
                };
                if (t.re - expect).abs() > tol || t.im.abs() > tol {
                    failures.push(format!("{kind:?}: Tr(e^{mu} e^{nu}) = {t} ≠ {expect}"));
                }
            }
        }

        // Jacobi and both Lie–Jordan compatibility identities on all triples.
        for mu in 0..4 {
            for nu in 0..4 {
                for sg in 0..4 {
                    let a = AlgebraElement::basis(kind, mu);
                    let b = AlgebraElement::basis(kind, nu);
                    let c = AlgebraElement::basis(kind, sg);
                    let jac = |x: &AlgebraElement, y: &AlgebraElement, z: &AlgebraElement| {
                        alg.lie_product(x, &alg.lie_product(y, z).unwrap()).unwrap()
                    };
                    let t1 = jac(&a, &b, &c);
                    let t2 = jac(&b, &c, &a);
                    let t3 = jac(&c, &a, &b);
                    let jac_res: f64 = (0..4)
                        .map(|s| (t1.coeffs[s] + t2.coeffs[s] + t3.coeffs[s]).norm())
                        .fold(0.0, f64::max);

                    let lhs = alg
                        .lie_product(&a, &alg.jordan_product(&b, &c).unwrap())
                        .unwrap();
                    let r1 = alg
                        .jordan_product(&alg.lie_product(&a, &b).unwrap(), &c)
                        .unwrap();
                    let r2 = alg
                        .jordan_product(&b, &alg.lie_product(&a, &c).unwrap())
                        .unwrap();
                    let leib_res: f64 = (0..4)
                        .map(|s| (lhs.coeffs[s] - r1.coeffs[s] - r2.coeffs[s]).norm())
                        .fold(0.0, f64::max);

                    let l1 = alg
                        .jordan_product(&alg.jordan_product(&a, &b).unwrap(), &c)
                        .unwrap();
                    let l2 = alg
                        .jordan_product(&a, &alg.jordan_product(&b, &c).unwrap())
                        .unwrap();
                    let rr = alg
                        .lie_product(&b, &alg.lie_product(&c, &a).unwrap())
                        .unwrap();
                    let assoc_res: f64 = (0..4)
                        .map(|s| (l1.coeffs[s] - l2.coeffs[s] - rr.coeffs[s]).norm())
                        .fold(0.0, f64::max);

                    let worst = jac_res.max(leib_res).max(assoc_res);
                    if worst > tol {
                        failures.push(format!(
                            "{kind:?}: identity residual {worst:.3e} on triple ({mu},{nu},{sg})"
                        ));
                    }
                }
            }
        }
    }

    // Gaussian pairing reproduces (ħ²/2) g^{μν} at ħ ≠ 1 too.
    {
        let hbar = 1.7;
        let alg = Algebra::new(AlgebraKind::Gaussian, hbar);
        let g = alg.metric();
        for mu in 0..4 {
            for nu in 0..4 {
                let t = alg
                    .trace_pair(
                        &AlgebraElement::basis(AlgebraKind::Gaussian, mu),
                        &AlgebraElement::basis(AlgebraKind::Gaussian, nu),
                    )
                    .unwrap();
                let expect = if mu == nu {
                    0.5 * hbar * hbar * g.g(mu)
                } else {
                    0.0
                };
                if (t.re - expect).abs() > tol {
                    failures.push(format!("ħ≠1: Tr(L^{mu} L^{nu}) = {t} ≠ {expect}"));
                }
            }
        }
    }

    // Affinity of Γ on random convex (and slightly extrapolated) mixes.
    let mut rng = common::rng(0x616666);
    for kind in [AlgebraKind::Qbit, AlgebraKind::Gaussian] {
        let h = common::random_hamiltonian(kind, &mut rng);
        let d = common::random_dissipators(kind, &mut rng, 1.0);
        let fd = gkls_field(&h, &d, 1.0).expect("decomposition");
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let p: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.5..1.5));
            let q: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.5..1.5));
            let alpha: f64 = rng.gen_range(-0.5..1.5);
            let mix = std::array::from_fn(|i| alpha * p[i] + (1.0 - alpha) * q[i]);
            let gm = fd.gamma.eval(mix);
            let gp = fd.gamma.eval(p);
            let gq = fd.gamma.eval(q);
            for i in 0..3 {
                worst = worst.max((gm[i] - alpha * gp[i] - (1.0 - alpha) * gq[i]).abs());
            }
        }
        if worst > affinity_tol {
            failures.push(format!(
                "{kind:?}: affinity residual {worst:.3e} > {affinity_tol:.0e}"
            ));
        }
    }

    conclude(7, "algebra identity suite", started, 10.0, &failures);
}

#[test]
fn criterion_8_wigner_checks() {
    let started = Instant::now();
    let hbar = 1.0;
    let norm_tol = 1e-6;
    let laguerre_norm_tol = 1e-5;
    let mut failures = Vec::new();
    let mut rng = common::rng(0x776967);

    // Peak value is exactly 1/(πħr).
    for _ in 0..10 {
        let p = common::random_hyperboloid_point(&mut rng);
        let r = purity_r(&p).unwrap();
        let m = point_to_moments(&p, hbar).unwrap();
        let w0 = wigner(0.0, 0.0, &m, r, hbar).unwrap();
        if w0 != 1.0 / (std::f64::consts::PI * hbar * r) {
            failures.push(format!("peak value {w0} differs from 1/(πħr)"));
        }
    }

    // Quadrature normalization of W_r for 10 random moment sets.
    for k in 0..10 {
        let p = common::random_hyperboloid_point(&mut rng);
        let r = purity_r(&p).unwrap();
        let m = point_to_moments(&p, hbar).unwrap();
        let bq = 8.0 * m.sq2.sqrt();
        let bp = 8.0 * m.sp2.sqrt();
        let int = integrate_2d(
            |q, pp| wigner(q, pp, &m, r, hbar).unwrap(),
            (-bq, bq),
            (-bp, bp),
            200,
        );
        if (int - 1.0).abs() > norm_tol {
            failures.push(format!(
                "set {k}: ∬W = {int} off unity by {:.3e} > {norm_tol:.0e}",
                (int - 1.0).abs()
            ));
        }
    }

    // Laguerre family normalization for n = 1, 2.
    let p = common::random_hyperboloid_point(&mut rng);
    let r = purity_r(&p).unwrap();
    let m = point_to_moments(&p, hbar).unwrap();
    for n in [1usize, 2] {
        let bq = 8.0 * m.sq2.sqrt();
        let bp = 8.0 * m.sp2.sqrt();
        let int = integrate_2d(
            |q, pp| wigner_laguerre(q, pp, &m, r, n, hbar).unwrap(),
            (-bq, bq),
            (-bp, bp),
            200,
        );
        if (int - 1.0).abs() > laguerre_norm_tol {
            failures.push(format!(
                "∬W_{n} = {int} off unity by {:.3e} > {laguerre_norm_tol:.0e}",
                (int - 1.0).abs()
            ));
        }
    }

    // n = 0 recovers the Gaussian Wigner function pointwise.
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let q = rng.gen_range(-2.0..2.0);
        let pp = rng.gen_range(-2.0..2.0);
        let a = wigner_laguerre(q, pp, &m, r, 0, hbar).unwrap();
        let b = wigner(q, pp, &m, r, hbar).unwrap();
        worst = worst.max((a - b).abs());
    }
    if worst > 1e-14 {
        failures.push(format!("W_0 vs W mismatch {worst:.3e} > 1e-14"));
    }

    conclude(8, "Wigner function checks", started, 10.0, &failures);
}
