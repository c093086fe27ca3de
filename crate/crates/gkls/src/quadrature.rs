//! Gauss–Legendre quadrature, used to audit phase-space normalizations.

/// Nodes and weights of the `n`-point Gauss–Legendre rule on [-1, 1].
///
/// Nodes are found by Newton iteration on the Legendre recurrence; this is
/// accurate to machine precision for the orders used here (a few hundred).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2, "need at least two nodes");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// P_n(x) and P_n'(x) via the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Tensor-product integral of `f` over the box `[ax, bx] × [ay, by]` with
/// an `n` × `n` Gauss–Legendre rule.
pub fn integrate_2d<F: Fn(f64, f64) -> f64>(f: F, (ax, bx): (f64, f64), (ay, by): (f64, f64), n: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(n);
    let cx = 0.5 * (bx - ax);
    let cy = 0.5 * (by - ay);
    let mut total = 0.0;
    for (xi, wi) in nodes.iter().zip(&weights) {
        let x = ax + cx * (xi + 1.0);
        let mut row = 0.0;
        for (yj, wj) in nodes.iter().zip(&weights) {
            let y = ay + cy * (yj + 1.0);
            row += wj * f(x, y);
        }
        total += wi * row;
    }
    total * cx * cy
}
