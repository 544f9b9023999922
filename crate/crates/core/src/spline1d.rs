//! Univariate cubic B-spline machinery: local knot windows, evaluation,
//! Boehm knot insertion, two-scale (bisection) refinement and Bernstein
//! extraction on a single span.
//!
//! Everything here is degree 3. A basis function is identified by its local
//! knot window of 5 knots; repeated knots encode reduced continuity
//! (simple knots give C2 functions, doubly repeated knots the C1 family,
//! and open boundaries carry quadruple knots).

/// Local knot window of a single cubic B-spline basis function.
pub type Window = [f64; 5];

/// Tolerance for comparing knot values. Knot coordinates in this crate are
/// dyadic rationals, so exact comparison would work; a tiny slack keeps the
/// code robust against accumulated arithmetic in derived windows.
pub const KNOT_EPS: f64 = 1e-9;

pub fn knots_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= KNOT_EPS
}

pub fn windows_eq(a: &Window, b: &Window) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| knots_eq(*x, *y))
}

/// Evaluates the cubic B-spline with knot window `w` at `t`, returning
/// `[value, d1, d2, d3]`. Evaluation is right-continuous: at a repeated
/// interior knot the limit from above is returned, except at the very end
/// of the support where the limit from below is used.
pub fn eval(w: &Window, t: f64) -> [f64; 4] {
    if t < w[0] - KNOT_EPS || t > w[4] + KNOT_EPS {
        return [0.0; 4];
    }
    // Degree-0 indicator functions on the 4 spans of the window, with the
    // half-open convention [w[i], w[i+1]) and a closed last nonzero span.
    let mut b0 = [0.0f64; 4];
    let t_end = w[4];
    for i in 0..4 {
        let lo = w[i];
        let hi = w[i + 1];
        if hi - lo <= KNOT_EPS {
            continue;
        }
        let inside = if knots_eq(t, t_end) || t > t_end {
            // right end: attribute to the last nonzero span
            knots_eq(hi, t_end)
        } else {
            t >= lo - KNOT_EPS && t < hi - KNOT_EPS
        };
        if inside {
            b0[i] = 1.0;
        }
    }
    // Cox-de Boor up the degrees, keeping each level for derivatives.
    let ratio = |num: f64, den: f64| if den.abs() <= KNOT_EPS { 0.0 } else { num / den };
    let mut b1 = [0.0f64; 3];
    for i in 0..3 {
        b1[i] = ratio(t - w[i], w[i + 1] - w[i]) * b0[i] + ratio(w[i + 2] - t, w[i + 2] - w[i + 1]) * b0[i + 1];
    }
    let mut b2 = [0.0f64; 2];
    for i in 0..2 {
        b2[i] = ratio(t - w[i], w[i + 2] - w[i]) * b1[i] + ratio(w[i + 3] - t, w[i + 3] - w[i + 1]) * b1[i + 1];
    }
    let b3 = ratio(t - w[0], w[3] - w[0]) * b2[0] + ratio(w[4] - t, w[4] - w[1]) * b2[1];

    // Derivative ladders: d/dt B_{i,k} = k/(w_{i+k}-w_i) B_{i,k-1} - k/(w_{i+k+1}-w_{i+1}) B_{i+1,k-1}
    let d1of2 = |bl: &[f64; 3], i: usize| -> f64 {
        2.0 * (ratio(1.0, w[i + 2] - w[i]) * bl[i] - ratio(1.0, w[i + 3] - w[i + 1]) * bl[i + 1])
    };
    let d2_0 = d1of2(&b1, 0);
    let d2_1 = d1of2(&b1, 1);
    let d1 = 3.0 * (ratio(1.0, w[3] - w[0]) * b2[0] - ratio(1.0, w[4] - w[1]) * b2[1]);
    let d2 = 3.0 * (ratio(1.0, w[3] - w[0]) * d2_0 - ratio(1.0, w[4] - w[1]) * d2_1);
    // second derivative of the quadratics via degree-1 ladder
    let d1of1 = |bl: &[f64; 4], i: usize| -> f64 {
        ratio(1.0, w[i + 1] - w[i]) * bl[i] - ratio(1.0, w[i + 2] - w[i + 1]) * bl[i + 1]
    };
    let dd2_0 = 2.0 * (ratio(1.0, w[2] - w[0]) * d1of1(&b0, 0) - ratio(1.0, w[3] - w[1]) * d1of1(&b0, 1));
    let dd2_1 = 2.0 * (ratio(1.0, w[3] - w[1]) * d1of1(&b0, 1) - ratio(1.0, w[4] - w[2]) * d1of1(&b0, 2));
    let d3 = 3.0 * (ratio(1.0, w[3] - w[0]) * dd2_0 - ratio(1.0, w[4] - w[1]) * dd2_1);
    [b3, d1, d2, d3]
}

/// Bernstein coefficients of the restriction of the window function to the
/// span `[a, b]`, which must be a (nonzero) knot span of the window's grid.
pub fn bezier_on_span(w: &Window, a: f64, b: f64) -> [f64; 4] {
    debug_assert!(b - a > KNOT_EPS);
    // Evaluate just inside the span so repeated knots resolve to the correct
    // polynomial piece, then shift the Taylor data back to `a`.
    let h = b - a;
    let [f, d1, d2, d3] = eval_in_span(w, a, b);
    [
        f,
        f + h / 3.0 * d1,
        f + 2.0 * h / 3.0 * d1 + h * h / 6.0 * d2,
        f + h * d1 + h * h / 2.0 * d2 + h * h * h / 6.0 * d3,
    ]
}

/// Taylor data of the window function at `a`, taken from the polynomial
/// piece on `(a, b)`.
fn eval_in_span(w: &Window, a: f64, b: f64) -> [f64; 4] {
    let m = 0.5 * (a + b);
    let [f, d1, d2, d3] = eval(w, m);
    // shift Taylor expansion from m back to a (cubic, exact)
    let h = a - m;
    [
        f + h * d1 + h * h / 2.0 * d2 + h * h * h / 6.0 * d3,
        d1 + h * d2 + h * h / 2.0 * d3,
        d2 + h * d3,
        d3,
    ]
}

/// A spline in a local space: `knots` of length `m` carry `m - 4` cubic
/// basis functions (consecutive windows); `coeffs` are their weights.
#[derive(Debug, Clone)]
pub struct LocalSpline {
    pub knots: Vec<f64>,
    pub coeffs: Vec<f64>,
}

impl LocalSpline {
    /// The spline that equals a single basis function with the given window.
    pub fn from_window(w: &Window) -> Self {
        LocalSpline { knots: w.to_vec(), coeffs: vec![1.0] }
    }

    /// Boehm insertion of a single knot `t` (interior to the support).
    pub fn insert_knot(&mut self, t: f64) {
        let m = self.knots.len();
        assert!(t > self.knots[0] - KNOT_EPS && t < self.knots[m - 1] + KNOT_EPS);
        // k: last index with knots[k] <= t
        let mut k = 0;
        for (i, &x) in self.knots.iter().enumerate() {
            if x <= t + KNOT_EPS {
                k = i;
            }
        }
        let n_new = m - 3; // functions after insertion
        let mut c_new = vec![0.0; n_new];
        let old = |i: isize| -> f64 {
            if i < 0 || i as usize >= self.coeffs.len() {
                0.0
            } else {
                self.coeffs[i as usize]
            }
        };
        for i in 0..n_new {
            let ii = i as isize;
            if i + 3 <= k {
                c_new[i] = old(ii);
            } else if i > k {
                c_new[i] = old(ii - 1);
            } else {
                let den = self.knots[i + 3] - self.knots[i];
                let alpha = if den.abs() <= KNOT_EPS { 0.0 } else { (t - self.knots[i]) / den };
                c_new[i] = alpha * old(ii) + (1.0 - alpha) * old(ii - 1);
            }
        }
        self.knots.insert(k + 1, t);
        self.coeffs = c_new;
    }

    pub fn window(&self, i: usize) -> Window {
        [
            self.knots[i],
            self.knots[i + 1],
            self.knots[i + 2],
            self.knots[i + 3],
            self.knots[i + 4],
        ]
    }

    pub fn value(&self, t: f64) -> f64 {
        (0..self.coeffs.len()).map(|i| self.coeffs[i] * eval(&self.window(i), t)[0]).sum()
    }
}

/// Two-scale relation: expresses the window function on the bisected grid.
/// Every nonzero span of the window is bisected; the midpoint is inserted
/// once for the C2 family and twice for the doubly-repeated C1 family
/// (`repeated`). Returns the children windows with their coefficients.
pub fn two_scale(w: &Window, repeated: bool) -> Vec<(Window, f64)> {
    let mut s = LocalSpline::from_window(w);
    let mut spans: Vec<(f64, f64)> = Vec::new();
    for i in 0..4 {
        if w[i + 1] - w[i] > KNOT_EPS && !spans.iter().any(|&(a, _)| knots_eq(a, w[i])) {
            spans.push((w[i], w[i + 1]));
        }
    }
    for &(a, b) in &spans {
        let mid = 0.5 * (a + b);
        s.insert_knot(mid);
        if repeated {
            s.insert_knot(mid);
        }
    }
    (0..s.coeffs.len())
        .filter(|&i| s.coeffs[i].abs() > 1e-14)
        .map(|i| (s.window(i), s.coeffs[i]))
        .collect()
}

/// Gauss-Legendre rule with `n` points on [0, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1 && n <= 64);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // initial guess on [-1, 1]
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre(n, x);
        nodes[n - 1 - i] = 0.5 * (x + 1.0);
        weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}
