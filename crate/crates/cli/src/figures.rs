//! Grids behind the three density plots.

use symsep_core::par::{map_range, Exec};
use symsep_core::three_qubit::r_obs1_boundary;
use symsep_core::two_qubit::{max_negativity_su3, sas_boundary_r};
use symsep_core::Spectrum3;

use crate::error::{CliError, CliResult};
use crate::grid::{Figure, GridResult, Series};

const SLACK: f64 = 1e-12;

fn check_resolution(resolution: usize) -> CliResult<()> {
    if resolution < 2 {
        return Err(CliError::Usage(format!("resolution must be at least 2, got {resolution}")));
    }
    Ok(())
}

fn lattice(lo: f64, hi: f64, n: usize, i: usize) -> f64 {
    if i + 1 == n {
        hi
    } else {
        lo + (hi - lo) * i as f64 / (n - 1) as f64
    }
}

/// Rows in lattice order: `x` outer, `y` inner, points outside the region
/// (`value` returns `None`) dropped.
fn scan(
    x: (f64, f64),
    y: (f64, f64),
    n: usize,
    exec: Exec,
    value: impl Fn(f64, f64) -> Option<f64> + Sync + Send,
) -> Vec<(f64, f64, f64)> {
    map_range(exec, n, |i| {
        let xv = lattice(x.0, x.1, n, i);
        (0..n)
            .filter_map(|j| {
                let yv = lattice(y.0, y.1, n, j);
                value(xv, yv).map(|v| (xv, yv, v))
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Maximal negativity at `(tau3, tau2)` of the two-qubit simplex
/// `0 <= tau3 <= tau2`, `2 tau2 + tau3 <= 1`.
pub fn fig1_value(tau3: f64, tau2: f64) -> Option<f64> {
    if tau3 < -SLACK || tau2 < tau3 - SLACK || 2.0 * tau2 + tau3 > 1.0 + SLACK {
        return None;
    }
    let (t3, t2) = (tau3.max(0.0), tau2.max(tau3.max(0.0)));
    let t1 = (1.0 - t2 - t3).max(t2);
    Spectrum3::new([t1, t2, t3]).ok().map(|s| max_negativity_su3(&s))
}

/// The SAS edge `sqrt(tau2) + sqrt(tau3) = 1` as `(tau3, tau2)` pairs,
/// from `(1/9, 4/9)` to `(1/4, 1/4)`.
pub fn fig1_boundary(n: usize) -> Series {
    let rows = (0..n)
        .map(|i| {
            let t3 = lattice(1.0 / 9.0, 0.25, n, i);
            vec![t3, (1.0 - t3.sqrt()).powi(2)]
        })
        .collect();
    Series::new(&["tau3", "tau2"], rows)
}

pub fn fig1(resolution: usize, seed: u64, exec: Exec) -> CliResult<Figure> {
    check_resolution(resolution)?;
    let rows = scan((0.0, 1.0 / 3.0), (0.0, 0.5), resolution, exec, fig1_value);
    Ok(Figure {
        grid: GridResult::new(["tau3", "tau2"], rows, resolution, seed),
        boundary: fig1_boundary(resolution),
    })
}

/// `tau2` from `(tau3, r)`: the root of the radius relation with
/// `tau1 >= tau2`, accepted when `tau2 >= tau3` too (within `1e-9`).
pub fn fig2_tau2(tau3: f64, r: f64) -> Option<f64> {
    if !(-SLACK..=1.0 / 3.0 + SLACK).contains(&tau3) || r < 0.0 {
        return None;
    }
    let d = 2.0 * r * r - (1.0 - 3.0 * tau3).powi(2) / 3.0;
    if d < -1e-12 {
        return None;
    }
    let t2 = 0.5 * ((1.0 - tau3) - d.max(0.0).sqrt());
    let t1 = 1.0 - t2 - tau3;
    (t2 >= tau3 - 1e-9 && t1 >= t2 - 1e-9).then_some(t2)
}

/// Wedge `(1 - 3 tau3)/sqrt 6 <= r <= sqrt(2/3) (1 - 3 tau3)`.
pub fn fig2_value(tau3: f64, r: f64) -> Option<f64> {
    let lo = (1.0 - 3.0 * tau3) / 6f64.sqrt();
    let hi = (2.0f64 / 3.0).sqrt() * (1.0 - 3.0 * tau3);
    if r < lo - SLACK || r > hi + SLACK {
        return None;
    }
    let t2 = fig2_tau2(tau3, r)?;
    let t3 = tau3.max(0.0).min(t2);
    let t1 = (1.0 - t2 - t3).max(t2);
    Spectrum3::new([t1, t2, t3]).ok().map(|s| max_negativity_su3(&s))
}

/// The SAS edge in the `(tau3, r)` plane for `tau3` in `[1/9, 1/4]`; past
/// `1/4` the curve leaves the wedge (every spectrum there is SAS).
pub fn fig2_boundary(n: usize) -> Series {
    let rows = (0..n)
        .map(|i| {
            let t3 = lattice(1.0 / 9.0, 0.25, n, i);
            vec![t3, sas_boundary_r(t3).expect("inside domain")]
        })
        .collect();
    Series::new(&["tau3", "r"], rows)
}

pub fn fig2(resolution: usize, seed: u64, exec: Exec) -> CliResult<Figure> {
    check_resolution(resolution)?;
    let r_max = (2.0f64 / 3.0).sqrt();
    let rows = scan((0.0, 1.0 / 3.0), (0.0, r_max), resolution, exec, fig2_value);
    Ok(Figure {
        grid: GridResult::new(["tau3", "r"], rows, resolution, seed),
        boundary: fig2_boundary(resolution),
    })
}

/// 1 when some sorted spectrum with smallest eigenvalues `(tau3, tau4)` is
/// caught by the Dicke-mixture test, 0 otherwise; `None` off the projected
/// simplex `0 <= tau4 <= tau3`, `3 tau3 + tau4 <= 1`.
pub fn fig3_value(tau3: f64, tau4: f64) -> Option<f64> {
    if tau4 < -SLACK || tau3 < tau4 - SLACK || 3.0 * tau3 + tau4 > 1.0 + SLACK {
        return None;
    }
    let (t3, t4) = (tau3.max(0.0), tau4.max(0.0));
    // the smallest admissible tau2 is tau3
    let caught = t3 > 0.0 && t3 < 1.0 - t3 - t4 - (3.0 * t3 * t4).sqrt();
    Some(if caught { 1.0 } else { 0.0 })
}

/// Radius of the test's boundary over the valid part of the lattice, as
/// `(tau3, tau4, r)` rows.
pub fn fig3_boundary(n: usize, exec: Exec) -> Series {
    let rows = scan((0.0, 1.0 / 3.0), (0.0, 0.25), n, exec, |t3, t4| r_obs1_boundary(t3, t4).ok());
    Series::new(&["tau3", "tau4", "r"], rows.into_iter().map(|(a, b, c)| vec![a, b, c]).collect())
}

pub fn fig3(resolution: usize, seed: u64, exec: Exec) -> CliResult<Figure> {
    check_resolution(resolution)?;
    let rows = scan((0.0, 1.0 / 3.0), (0.0, 0.25), resolution, exec, fig3_value);
    Ok(Figure {
        grid: GridResult::new(["tau3", "tau4"], rows, resolution, seed),
        boundary: fig3_boundary(resolution, exec),
    })
}
