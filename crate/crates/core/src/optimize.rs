//! Derivative-free minimisers for the low-dimensional radius problems.

const GOLDEN: f64 = 0.618_033_988_749_894_8;

/// Minimum of `f` on `[lo, hi]`: a uniform scan with `n` intervals picks the
/// best bracket, then golden-section search refines it. Returns `(x, f(x))`.
pub fn minimize_scalar(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> (f64, f64) {
    let n = n.max(2);
    let h = (hi - lo) / n as f64;
    let (mut best_i, mut best_v) = (0, f(lo));
    for i in 1..=n {
        let v = f(lo + i as f64 * h);
        if v < best_v {
            best_i = i;
            best_v = v;
        }
    }
    let mut a = (lo + (best_i as f64 - 1.0) * h).max(lo);
    let mut b = (lo + (best_i as f64 + 1.0) * h).min(hi);
    let mut c = b - GOLDEN * (b - a);
    let mut d = a + GOLDEN * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > 1e-14 * (1.0 + a.abs()) {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - GOLDEN * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + GOLDEN * (b - a);
            fd = f(d);
        }
    }
    // endpoints may beat the interior (monotone pieces)
    let mid = 0.5 * (a + b);
    [(mid, f(mid)), (lo + best_i as f64 * h, best_v)]
        .into_iter()
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .unwrap()
}

/// Minimum of `f` over a 2-D region, where `f` returns `None` outside the
/// region. Evaluates a `k x k` grid on a box around the current best point
/// and halves the box until its half-width drops below `tol`; the box spans
/// ten grid spacings on each side of the incumbent, so narrow corners of the
/// region are still resolved. Returns `(x, f(x))`.
pub fn minimize_2d_zoom(
    f: impl Fn([f64; 2]) -> Option<f64>,
    x0: [f64; 2],
    half_width: f64,
    tol: f64,
) -> ([f64; 2], f64) {
    const K: usize = 41;
    let mut x = x0;
    let mut fx = f(x).expect("start point inside region");
    let mut w = half_width;
    while w > tol {
        let h = 2.0 * w / (K - 1) as f64;
        let c = x;
        for i in 0..K {
            for j in 0..K {
                let y = [c[0] - w + i as f64 * h, c[1] - w + j as f64 * h];
                if let Some(fy) = f(y) {
                    if fy < fx {
                        x = y;
                        fx = fy;
                    }
                }
            }
        }
        w = 10.0 * h;
    }
    (x, fx)
}
