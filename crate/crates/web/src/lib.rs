//! Browser bindings for the `www/` demo page.
//!
//! Three operations, each returning a flat `Float64Array`:
//!
//! * [`theta_curve`]: the root `t1(z)` as `(z, re, im)` triples.
//! * [`sequence_zeros`]: certified-then-refined real zeros of the `m`-th
//!   coefficient of `D^(-alpha)`.
//! * [`dominant_spiral`]: the path of `f = A / t1^(m+1)` with a log-scaled
//!   radius, prefixed by `[crossings, delta_arg_f, expected, sturm_roots]`.
//!
//! The `*_impl` functions hold the logic so they can be tested natively.

use num_rational::BigRational;
use wasm_bindgen::prelude::*;

use queenpoly::genfun::{alpha_coeffs, pseq};
use queenpoly::locus::{approximate_zeros, certify_open_interval, crossing_count, partial_fractions, SWEEP_BUDGET};
use queenpoly::quartic::{refine_sweep, solve_quartet, track_curve, wrap_angle, z_max_admissible};
use queenpoly::Bound;

const SPIRAL_Z_LO: f64 = -1e16;

pub fn theta_curve_impl(z_min: f64, z_max: f64, budget: usize) -> Result<Vec<f64>, String> {
    let samples = track_curve(z_min, z_max, budget).map_err(|e| e.to_string())?;
    Ok(samples
        .iter()
        .flat_map(|s| [s.z, s.quartet.t1().re, s.quartet.t1().im])
        .collect())
}

pub fn sequence_zeros_impl(alpha: &str, m: usize) -> Result<Vec<f64>, String> {
    let alpha: BigRational = alpha.trim().parse().map_err(|_| format!("bad alpha {alpha:?}"))?;
    if m > 200 {
        return Err("m is capped at 200 in the demo".into());
    }
    let p = if alpha == BigRational::from_integer(1.into()) {
        pseq(m).pop().expect("nonempty")
    } else {
        alpha_coeffs(&alpha, m)
            .map_err(|e| e.to_string())?
            .integer_coeffs()
            .pop()
            .expect("nonempty")
    };
    Ok(approximate_zeros(&p, &Bound::NegInf, &Bound::PosInf, 40))
}

pub fn dominant_spiral_impl(m: usize) -> Result<Vec<f64>, String> {
    if m > 60 {
        return Err("m is capped at 60 in the demo".into());
    }
    let z_hi = z_max_admissible();
    let summary = crossing_count(m, SPIRAL_Z_LO, z_hi, SWEEP_BUDGET).map_err(|e| e.to_string())?;
    let sturm = certify_open_interval(m, "alpha=1", &pseq(m)[m]).roots_in_interval;

    let k = (m + 1) as f64;
    let points = refine_sweep(
        SPIRAL_Z_LO,
        z_hi,
        129,
        SWEEP_BUDGET,
        |z| {
            let q = solve_quartet(z)?;
            let a = partial_fractions(&q)?.a;
            Ok((q.theta, a.arg(), a.norm().ln() - k * q.r.ln()))
        },
        |a, b| {
            let d_arg = wrap_angle(b.1 - a.1) - k * wrap_angle(b.0 - a.0);
            d_arg.abs() < 0.05
        },
    )
    .map_err(|e| e.to_string())?;

    let mut out = vec![summary.count as f64, summary.delta_arg_f, summary.expected_delta, sturm as f64];
    let (mut theta, mut arg_a) = (points[0].1 .0, points[0].1 .1);
    let mut prev = points[0].1;
    for (z, cur) in &points {
        theta += wrap_angle(cur.0 - prev.0);
        arg_a += wrap_angle(cur.1 - prev.1);
        prev = *cur;
        let arg_f = arg_a - k * theta;
        // ln|f| ranges over many decades; asinh keeps the picture readable
        let radius = cur.2.asinh().max(0.0) + 1.0;
        out.extend([*z, radius * arg_f.cos(), radius * arg_f.sin()]);
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn theta_curve(z_min: f64, z_max: f64, budget: usize) -> Result<Vec<f64>, String> {
    theta_curve_impl(z_min, z_max, budget)
}

#[wasm_bindgen]
pub fn sequence_zeros(alpha: &str, m: usize) -> Result<Vec<f64>, String> {
    sequence_zeros_impl(alpha, m)
}

#[wasm_bindgen]
pub fn dominant_spiral(m: usize) -> Result<Vec<f64>, String> {
    dominant_spiral_impl(m)
}
