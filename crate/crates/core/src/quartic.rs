//! The four complex roots of `D(t, z)` for real `z < -9/4`.
//!
//! On that interval the roots form two conjugate pairs with distinct moduli.
//! They are labelled so that `t1`, `t3` lie in the upper half plane,
//! `t2 = conj(t1)`, `t4 = conj(t3)` and `|t1| < |t3|`. The polar data
//! `t1 = r e^{i theta}`, `t3 = rho e^{i phi}` is stored alongside.
//!
//! Roots come from Aberth iteration on the monic quartic followed by Newton
//! polishing, in `f64` or in double-double (`TwoFloat`).

use num_complex::Complex;
use serde::Serialize;
use twofloat::TwoFloat;

use crate::error::QuarticError;
use crate::real::{Precision, Real};

/// Right end of the admissible `z` interval.
pub const CRITICAL_Z: f64 = -2.25;
/// Width of the excluded band just below `-9/4`, where the pairs merge.
pub const GUARD_BAND: f64 = 1e-9;
/// Relative tolerance for matching a root with the conjugate of another.
pub const PAIRING_TOL: f64 = 1e-9;
/// Relative modulus gap below which `|t1| = |t3|` is reported as a tie.
pub const TIE_TOL: f64 = 1e-10;

const MAX_ITERATIONS: usize = 500;

/// Largest admissible `z`.
pub fn z_max_admissible() -> f64 {
    CRITICAL_Z - GUARD_BAND
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RootQuartet<T = f64> {
    pub z: f64,
    /// `[t1, t2, t3, t4]`
    pub t: [Complex<T>; 4],
    pub r: T,
    pub theta: T,
    pub rho: T,
    pub phi: T,
    /// `max |D(t_i, z)| / (1 + z^2 |t_i|^4)`
    pub residual: T,
}

impl<T: Real> RootQuartet<T> {
    pub fn t1(&self) -> Complex<T> {
        self.t[0]
    }
    pub fn t2(&self) -> Complex<T> {
        self.t[1]
    }
    pub fn t3(&self) -> Complex<T> {
        self.t[2]
    }
    pub fn t4(&self) -> Complex<T> {
        self.t[3]
    }

    pub fn to_f64(&self) -> RootQuartet<f64> {
        let c = |x: Complex<T>| Complex::new(x.re.to_f64(), x.im.to_f64());
        RootQuartet {
            z: self.z,
            t: self.t.map(c),
            r: self.r.to_f64(),
            theta: self.theta.to_f64(),
            rho: self.rho.to_f64(),
            phi: self.phi.to_f64(),
            residual: self.residual.to_f64(),
        }
    }

    /// Relabel the pairs so the larger-modulus pair comes first. Only
    /// useful to probe checks that depend on the labelling.
    pub fn swapped_pairs(&self) -> Self {
        Self {
            t: [self.t[2], self.t[3], self.t[0], self.t[1]],
            r: self.rho,
            theta: self.phi,
            rho: self.r,
            phi: self.theta,
            ..*self
        }
    }
}

/// Ascending coefficients of `D(t, z)` in `t`.
pub fn quartic_coeffs<T: Real>(z: f64) -> [T; 5] {
    let z = T::from_f64(z);
    let two = T::from_f64(2.0);
    [
        T::one(),
        T::from_f64(-14.0),
        T::from_f64(49.0) - two * z,
        -two * z - T::from_f64(36.0),
        z * z,
    ]
}

fn horner<T: Real>(coeffs: &[T], x: Complex<T>) -> Complex<T> {
    coeffs
        .iter()
        .rev()
        .fold(Complex::new(T::zero(), T::zero()), |acc, &c| acc * x + c)
}

fn derivative<T: Real>(coeffs: &[T; 5]) -> [T; 4] {
    [
        coeffs[1],
        coeffs[2] * T::from_f64(2.0),
        coeffs[3] * T::from_f64(3.0),
        coeffs[4] * T::from_f64(4.0),
    ]
}

/// `D(t, z)` at complex `t`.
pub fn eval_d<T: Real>(t: Complex<T>, z: f64) -> Complex<T> {
    horner(&quartic_coeffs::<T>(z), t)
}

/// `dD/dt` at complex `t`.
pub fn eval_dt<T: Real>(t: Complex<T>, z: f64) -> Complex<T> {
    horner(&derivative(&quartic_coeffs::<T>(z)), t)
}

/// Aberth iteration on a degree-4 polynomial, then two Newton steps per root.
fn aberth<T: Real>(coeffs: &[T; 5]) -> Option<[Complex<T>; 4]> {
    let lead = coeffs[4];
    let monic: [T; 5] = coeffs.map(|c| c / lead);
    let dmonic = derivative(&monic);
    let center = Complex::new(-monic[3] / T::from_f64(4.0), T::zero());
    let radius = horner(&monic, center).norm().powf(T::from_f64(0.25));
    let radius = if radius > T::zero() { radius } else { T::one() };
    let mut x: [Complex<T>; 4] = std::array::from_fn(|k| {
        let angle = T::from_f64(std::f64::consts::FRAC_PI_2 * k as f64 + 0.7);
        center + Complex::from_polar(radius, angle)
    });
    let tol = T::epsilon() * T::from_f64(8.0);
    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let mut worst = T::zero();
        for i in 0..4 {
            let p = horner(&monic, x[i]);
            let dp = horner(&dmonic, x[i]);
            if p.norm() == T::zero() {
                continue;
            }
            let w = p / dp;
            let repulsion = (0..4)
                .filter(|&j| j != i)
                .fold(Complex::new(T::zero(), T::zero()), |acc, j| {
                    acc + (x[i] - x[j]).inv()
                });
            let step = w / (Complex::new(T::one(), T::zero()) - w * repulsion);
            if !(step.re.is_finite() && step.im.is_finite()) {
                return None;
            }
            x[i] = x[i] - step;
            let rel = step.norm() / x[i].norm().max(T::min_positive_value());
            worst = worst.max(rel);
        }
        if worst <= tol {
            converged = true;
            break;
        }
    }
    for xi in x.iter_mut() {
        for _ in 0..2 {
            let p = horner(&monic, *xi);
            let dp = horner(&dmonic, *xi);
            let next = *xi - p / dp;
            if horner(&monic, next).norm() < p.norm() {
                *xi = next;
            }
        }
    }
    let finite = x.iter().all(|v| v.re.is_finite() && v.im.is_finite());
    (finite && (converged || scaled_residual_max(coeffs, &x) < T::from_f64(1e-10))).then_some(x)
}

fn scaled_residual_max<T: Real>(coeffs: &[T; 5], x: &[Complex<T>; 4]) -> T {
    x.iter()
        .map(|&t| {
            let n4 = t.norm().powi(4);
            horner(coeffs, t).norm() / (T::one() + coeffs[4] * n4)
        })
        .fold(T::zero(), T::max)
}

/// Solve and label the quartet at `z` in double precision.
pub fn solve_quartet(z: f64) -> Result<RootQuartet, QuarticError> {
    solve_quartet_in::<f64>(z)
}

/// Solve in the requested precision and round the result to `f64`.
pub fn solve_quartet_prec(z: f64, precision: Precision) -> Result<RootQuartet, QuarticError> {
    match precision {
        Precision::Double => solve_quartet_in::<f64>(z),
        Precision::High => solve_quartet_in::<TwoFloat>(z).map(|q| q.to_f64()),
    }
}

/// Solve and label the quartet at `z` in the scalar type `T`.
pub fn solve_quartet_in<T: Real>(z: f64) -> Result<RootQuartet<T>, QuarticError> {
    if !z.is_finite() || z > z_max_admissible() {
        return Err(QuarticError::Range {
            z,
            guard: GUARD_BAND,
        });
    }
    let coeffs = quartic_coeffs::<T>(z);
    let roots = aberth(&coeffs).ok_or(QuarticError::NoConvergence { z })?;
    let scale = roots.iter().map(|r| r.norm()).fold(T::zero(), T::max);
    let real_tol = T::from_f64(PAIRING_TOL) * scale;

    let (upper, lower): (Vec<_>, Vec<_>) = roots.iter().partition(|r| r.im > T::zero());
    if roots.iter().any(|r| r.im.abs() <= real_tol) || upper.len() != 2 || lower.len() != 2 {
        return Err(QuarticError::Pairing {
            z,
            detail: format!(
                "expected two roots in each open half plane, got {:?}",
                roots.map(|r| (r.re.to_f64(), r.im.to_f64()))
            ),
        });
    }
    // Match each upper root with the lower root closest to its conjugate.
    let d = |u: &Complex<T>, l: &Complex<T>| (*l - u.conj()).norm();
    let straight = d(&upper[0], &lower[0]).max(d(&upper[1], &lower[1]));
    let crossed = d(&upper[0], &lower[1]).max(d(&upper[1], &lower[0]));
    let (pairs, err) = if straight <= crossed {
        ([(upper[0], lower[0]), (upper[1], lower[1])], straight)
    } else {
        ([(upper[0], lower[1]), (upper[1], lower[0])], crossed)
    };
    if err > real_tol {
        return Err(QuarticError::Pairing {
            z,
            detail: format!("conjugate mismatch {:e}", err.to_f64()),
        });
    }
    let half = T::from_f64(0.5);
    let mut ups: Vec<Complex<T>> = pairs
        .iter()
        .map(|(u, l)| (*u + l.conj()) * half)
        .collect();
    ups.sort_by(|a, b| a.norm().partial_cmp(&b.norm()).expect("finite"));
    let (t1, t3) = (ups[0], ups[1]);
    let (r, rho) = (t1.norm(), t3.norm());
    if rho - r <= T::from_f64(TIE_TOL) * rho {
        return Err(QuarticError::ModulusTie {
            z,
            r: r.to_f64(),
            rho: rho.to_f64(),
        });
    }
    let t = [t1, t1.conj(), t3, t3.conj()];
    Ok(RootQuartet {
        z,
        t,
        r,
        theta: t1.arg(),
        rho,
        phi: t3.arg(),
        residual: scaled_residual_max(&coeffs, &t),
    })
}

/// Largest deviation of the elementary symmetric functions of the roots
/// from `(2z+36)/z^2`, `(49-2z)/z^2`, `14/z^2`, `1/z^2`.
pub fn vieta_residual<T: Real>(q: &RootQuartet<T>) -> T {
    let [a, b, c, d] = q.t;
    let e1 = a + b + c + d;
    let e2 = a * b + a * c + a * d + b * c + b * d + c * d;
    let e3 = a * b * c + a * b * d + a * c * d + b * c * d;
    let e4 = a * b * c * d;
    let z = T::from_f64(q.z);
    let z2 = z * z;
    let two = T::from_f64(2.0);
    let targets = [
        (two * z + T::from_f64(36.0)) / z2,
        (T::from_f64(49.0) - two * z) / z2,
        T::from_f64(14.0) / z2,
        T::one() / z2,
    ];
    [e1, e2, e3, e4]
        .iter()
        .zip(targets)
        .map(|(e, target)| (*e - target).norm())
        .fold(T::zero(), T::max)
}

/// Largest deviation in the polar forms of the first and third symmetric
/// functions and in `r rho = -1/z`.
pub fn angle_identities_residual<T: Real>(q: &RootQuartet<T>) -> T {
    let z = T::from_f64(q.z);
    let two = T::from_f64(2.0);
    let first = two * q.r * q.theta.cos() + two * q.rho * q.phi.cos()
        - (two * z + T::from_f64(36.0)) / (z * z);
    let third = two * q.r * q.phi.cos() + two * q.rho * q.theta.cos() + T::from_f64(14.0) / z;
    let product = q.r * q.rho + T::one() / z;
    first.abs().max(third.abs()).max(product.abs())
}

/// `i / sqrt(-z) - 2 e^{3 i pi / 4} / (-z)^{3/4}`.
pub fn t1_asymptotic(z: f64) -> Complex<f64> {
    let w = -z;
    let lead = Complex::new(0.0, 1.0 / w.sqrt());
    let corr = Complex::from_polar(2.0 / w.powf(0.75), 0.75 * std::f64::consts::PI);
    lead - corr
}

/// One point of a `z`-sweep.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CurveSample {
    pub z: f64,
    pub quartet: RootQuartet,
    /// Continuous branch of `Arg t1` along the sweep.
    pub unwrapped_theta: f64,
}

/// `v = ln(-9/4 - z)`, the sweep parameter. It maps `(-inf, -9/4)` onto the
/// whole real line and keeps both ends well resolved in floating point.
pub fn sweep_param(z: f64) -> f64 {
    (CRITICAL_Z - z).ln()
}

pub fn sweep_z(v: f64) -> f64 {
    CRITICAL_Z - v.exp()
}

#[derive(Clone, Copy, Debug)]
pub struct TrackOptions {
    /// Upper bound on the number of samples.
    pub budget: usize,
    /// Largest allowed `|delta theta|` between neighbours.
    pub max_theta_step: f64,
    /// Uniform samples in the sweep parameter before refinement.
    pub initial_points: usize,
    pub precision: Precision,
}

impl Default for TrackOptions {
    fn default() -> Self {
        Self {
            budget: 20_000,
            max_theta_step: 0.05,
            initial_points: 65,
            precision: Precision::Double,
        }
    }
}

/// Wrap an angle difference into `(-pi, pi]`.
pub fn wrap_angle(d: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut x = d % two_pi;
    if x > std::f64::consts::PI {
        x -= two_pi;
    } else if x <= -std::f64::consts::PI {
        x += two_pi;
    }
    x
}

/// Adaptive bisection in the sweep parameter.
///
/// Starts from `initial` uniform points on `[z_lo, z_hi]` and inserts
/// midpoints between neighbours rejected by `accept` until every pair is
/// accepted. Output is sorted by increasing `z`.
pub fn refine_sweep<S: Clone>(
    z_lo: f64,
    z_hi: f64,
    initial: usize,
    budget: usize,
    eval: impl Fn(f64) -> Result<S, QuarticError>,
    accept: impl Fn(&S, &S) -> bool,
) -> Result<Vec<(f64, S)>, QuarticError> {
    if !(z_lo < z_hi && z_hi <= z_max_admissible()) {
        return Err(QuarticError::InvalidSweep(format!(
            "need z_lo < z_hi <= {}, got [{z_lo}, {z_hi}]",
            z_max_admissible()
        )));
    }
    let initial = initial.max(2);
    if initial > budget {
        return Err(QuarticError::BudgetExceeded { budget });
    }
    let (v_lo, v_hi) = (sweep_param(z_lo), sweep_param(z_hi));
    let mut points: Vec<(f64, f64, S)> = Vec::with_capacity(initial);
    for k in 0..initial {
        // k = 0 -> z_lo, k = initial-1 -> z_hi, exactly.
        let z = match k {
            0 => z_lo,
            _ if k == initial - 1 => z_hi,
            _ => sweep_z(v_lo + (v_hi - v_lo) * k as f64 / (initial - 1) as f64),
        };
        points.push((sweep_param(z), z, eval(z)?));
    }
    loop {
        let mut next = Vec::with_capacity(points.len() * 2);
        let mut inserted = false;
        for w in points.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            next.push(a.clone());
            if !accept(&a.2, &b.2) {
                let v = 0.5 * (a.0 + b.0);
                let z = sweep_z(v);
                if !(z > a.1 && z < b.1) {
                    // The parameter gap can no longer be split.
                    return Err(QuarticError::BudgetExceeded { budget });
                }
                next.push((v, z, eval(z)?));
                inserted = true;
            }
        }
        next.push(points.last().expect("nonempty").clone());
        points = next;
        if points.len() > budget {
            return Err(QuarticError::BudgetExceeded { budget });
        }
        if !inserted {
            break;
        }
    }
    Ok(points.into_iter().map(|(_, z, s)| (z, s)).collect())
}

/// Sample `t1(z)` on `[z_lo, z_hi]` with the default step bound.
pub fn track_curve(z_lo: f64, z_hi: f64, budget: usize) -> Result<Vec<CurveSample>, QuarticError> {
    track_curve_with(
        z_lo,
        z_hi,
        &TrackOptions {
            budget,
            ..TrackOptions::default()
        },
    )
}

pub fn track_curve_with(
    z_lo: f64,
    z_hi: f64,
    opts: &TrackOptions,
) -> Result<Vec<CurveSample>, QuarticError> {
    let step = opts.max_theta_step.min(std::f64::consts::FRAC_PI_2);
    let points = refine_sweep(
        z_lo,
        z_hi,
        opts.initial_points,
        opts.budget,
        |z| solve_quartet_prec(z, opts.precision),
        |a, b| wrap_angle(b.theta - a.theta).abs() < step,
    )?;
    Ok(unwrap_theta(points.into_iter().map(|(_, q)| q)))
}

/// Attach the continuous branch of `theta` to a sequence of quartets.
pub fn unwrap_theta(quartets: impl IntoIterator<Item = RootQuartet>) -> Vec<CurveSample> {
    let mut out: Vec<CurveSample> = Vec::new();
    for q in quartets {
        let unwrapped_theta = match out.last() {
            None => q.theta,
            Some(prev) => prev.unwrapped_theta + wrap_angle(q.theta - prev.quartet.theta),
        };
        out.push(CurveSample {
            z: q.z,
            quartet: q,
            unwrapped_theta,
        });
    }
    out
}

/// `theta` strictly decreasing in `z` along the samples.
pub fn theta_strictly_decreasing(samples: &[CurveSample]) -> bool {
    samples
        .windows(2)
        .all(|w| w[0].z < w[1].z && w[0].unwrapped_theta > w[1].unwrapped_theta)
}
