//! Where the zeros of `P_m` are, checked three ways.
//!
//! 1. Exactly: Sturm counts of `P_m` on `(-inf, -9/4)` and on `[-9/4, inf)`.
//! 2. Numerically, through the partial-fraction closed form
//!    `-z^2 P_m(z) = sum_i A_i / t_i^{m+1}` over the roots of `D(t, z)`.
//! 3. Topologically: the dominant term `f = A / t1^{m+1}` is tracked along
//!    the sweep `z: -inf -> -9/4`; each time it meets the real axis with the
//!    opposite sign from the previous meeting, `P_m` changes sign.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::QuarticError;
use crate::exactpoly::{Bound, IntPoly, SturmChain};
use crate::genfun::{alpha_coeffs, pseq};
use crate::quartic::{
    refine_sweep, solve_quartet, solve_quartet_in, unwrap_theta, wrap_angle, CurveSample,
    RootQuartet, CRITICAL_Z, GUARD_BAND,
};
use crate::real::{Precision, Real};
use crate::tables::{build_table, TableKind};

/// Default sweep ends for argument tracking. The left end is far enough out
/// that `theta` is within 2e-4 of `pi/2`.
pub const SWEEP_Z_LO: f64 = -1e16;
pub const SWEEP_Z_HI: f64 = CRITICAL_Z - GUARD_BAND;
pub const SWEEP_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct PartialFractionData<T = f64> {
    pub z: f64,
    pub a: Complex<T>,
    pub b: Complex<T>,
    pub c: Complex<T>,
    pub d: Complex<T>,
}

/// `A_i = 1 / prod_{j != i} (t_i - t_j)`.
pub fn partial_fractions<T: Real>(q: &RootQuartet<T>) -> Result<PartialFractionData<T>, QuarticError> {
    let t = q.t;
    let scale = t.iter().map(|x| x.norm()).fold(T::zero(), T::max);
    let min_gap = T::from_f64(1e-9) * scale;
    let mut coef = [Complex::new(T::zero(), T::zero()); 4];
    for i in 0..4 {
        let mut prod = Complex::new(T::one(), T::zero());
        for j in 0..4 {
            if i != j {
                let diff = t[i] - t[j];
                if diff.norm() < min_gap {
                    return Err(QuarticError::DegenerateRoots { z: q.z });
                }
                prod = prod * diff;
            }
        }
        coef[i] = prod.inv();
    }
    Ok(PartialFractionData {
        z: q.z,
        a: coef[0],
        b: coef[1],
        c: coef[2],
        d: coef[3],
    })
}

/// `P_m(z)` from the closed form, with the imaginary part of the four-term
/// sum relative to its real part.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ClosedForm {
    pub value: f64,
    pub imag_residue: f64,
}

pub fn closed_form_value(m: usize, z: f64) -> Result<f64, QuarticError> {
    Ok(closed_form_with::<f64>(m, z)?.value)
}

pub fn closed_form_prec(m: usize, z: f64, precision: Precision) -> Result<ClosedForm, QuarticError> {
    match precision {
        Precision::Double => closed_form_with::<f64>(m, z),
        Precision::High => closed_form_with::<twofloat::TwoFloat>(m, z),
    }
}

pub fn closed_form_with<T: Real>(m: usize, z: f64) -> Result<ClosedForm, QuarticError> {
    let q = solve_quartet_in::<T>(z)?;
    let pf = partial_fractions(&q)?;
    let e = (m + 1) as i32;
    let term = |c: Complex<T>, t: Complex<T>| c / t.powi(e);
    let f = term(pf.a, q.t1());
    let g = term(pf.c, q.t3());
    let full = f + term(pf.b, q.t2()) + g + term(pf.d, q.t4());
    let two = T::from_f64(2.0);
    let sum = two * f.re + two * g.re;
    let zt = T::from_f64(z);
    let value = -sum / (zt * zt);
    let imag_residue = full.im.abs() / (full.re.abs().max(T::min_positive_value()));
    Ok(ClosedForm {
        value: value.to_f64(),
        imag_residue: imag_residue.to_f64(),
    })
}

/// `|A / t1^{m+1}| > |C / t3^{m+1}|`, compared in logs.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Dominance {
    pub holds: bool,
    /// `ln |A/t1^{m+1}| - ln |C/t3^{m+1}|`
    pub log_margin: f64,
}

pub fn dominance_check(m: usize, z: f64) -> Result<Dominance, QuarticError> {
    let q = solve_quartet(z)?;
    dominance_for(&q, m)
}

pub fn dominance_for(q: &RootQuartet, m: usize) -> Result<Dominance, QuarticError> {
    let pf = partial_fractions(q)?;
    let e = (m + 1) as f64;
    let lhs = pf.a.norm().ln() - e * q.r.ln();
    let rhs = pf.c.norm().ln() - e * q.rho.ln();
    let log_margin = lhs - rhs;
    Ok(Dominance {
        holds: log_margin > 0.0,
        log_margin,
    })
}

/// The default argument-tracking sweep with `|delta Arg A| < pi/8` and
/// `|delta theta| < pi/8` between neighbours.
pub fn locus_sweep(z_lo: f64, z_hi: f64, budget: usize) -> Result<Vec<CurveSample>, QuarticError> {
    let step = PI / 8.0;
    let points = refine_sweep(
        z_lo,
        z_hi,
        65,
        budget,
        |z| {
            let q = solve_quartet(z)?;
            let a = partial_fractions(&q)?.a;
            Ok((q, a.arg()))
        },
        |(qa, aa), (qb, ab)| {
            wrap_angle(ab - aa).abs() < step && wrap_angle(qb.theta - qa.theta).abs() < step
        },
    )?;
    Ok(unwrap_theta(points.into_iter().map(|(_, (q, _))| q)))
}

#[derive(Clone, Debug, Serialize)]
pub struct ArgChange {
    /// Unwrapped `Arg A(z_end) - Arg A(z_start)`.
    pub total: f64,
    pub start_arg: f64,
    pub end_arg: f64,
    pub start_z: f64,
    pub end_z: f64,
    /// `min |Arg A - pi/2|` along the sweep (A never on the positive
    /// imaginary axis).
    pub min_distance_from_i_axis: f64,
}

pub fn arg_change_a(sweep: &[CurveSample]) -> Result<ArgChange, QuarticError> {
    if sweep.len() < 2 {
        return Err(QuarticError::InvalidSweep("need at least two samples".into()));
    }
    let mut args = Vec::with_capacity(sweep.len());
    for s in sweep {
        args.push(partial_fractions(&s.quartet)?.a.arg());
    }
    let mut total = 0.0;
    for w in args.windows(2) {
        let d = wrap_angle(w[1] - w[0]);
        if d.abs() >= PI / 2.0 {
            return Err(QuarticError::InvalidSweep("Arg A step too large to unwrap".into()));
        }
        total += d;
    }
    let min_distance_from_i_axis = args
        .iter()
        .map(|a| wrap_angle(a - PI / 2.0).abs())
        .fold(f64::INFINITY, f64::min);
    Ok(ArgChange {
        total,
        start_arg: args[0],
        end_arg: *args.last().unwrap(),
        start_z: sweep[0].z,
        end_z: sweep.last().unwrap().z,
        min_distance_from_i_axis,
    })
}

/// A point where `f(t1(z))` is real.
#[derive(Clone, Debug, Serialize)]
pub struct AxisCrossing {
    pub z: f64,
    /// `f` lies on `k * pi`; its real part has sign `(-1)^k`.
    pub k: i64,
    /// Sign of `-z^2 P_m(z)` evaluated exactly at the crossing.
    pub exact_sign: i8,
}

impl AxisCrossing {
    pub fn f_sign(&self) -> i8 {
        if self.k.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Crossings {
    pub m: usize,
    /// Sign alternations between consecutive axis crossings; each one
    /// brackets a zero of `P_m`.
    pub count: usize,
    pub delta_arg_f: f64,
    pub expected_delta: f64,
    pub crossings: Vec<AxisCrossing>,
    pub samples: usize,
    /// Every crossing has `sign(Re f) = sign(-z^2 P_m(z))`.
    pub signs_agree: bool,
}

#[derive(Clone)]
struct FPoint {
    q: RootQuartet,
    arg_a: f64,
}

impl FPoint {
    fn at(z: f64) -> Result<Self, QuarticError> {
        let q = solve_quartet(z)?;
        let arg_a = partial_fractions(&q)?.a.arg();
        Ok(Self { q, arg_a })
    }

    /// Change of `Arg f` from `self` to `other`, assuming both `Arg A`
    /// and `theta` move by less than `pi`.
    fn delta_to(&self, other: &Self, m: usize) -> f64 {
        wrap_angle(other.arg_a - self.arg_a) - (m + 1) as f64 * wrap_angle(other.q.theta - self.q.theta)
    }
}

/// Track `Arg f` for `f = A / t1^{m+1}` over `[z_lo, z_hi]` and count the
/// sign alternations of its real-axis crossings.
pub fn crossing_count(m: usize, z_lo: f64, z_hi: f64, budget: usize) -> Result<Crossings, QuarticError> {
    let step = PI / (2.0 * (m + 3) as f64);
    let points = refine_sweep(z_lo, z_hi, 65, budget, FPoint::at, |a, b| {
        wrap_angle(b.arg_a - a.arg_a).abs() < step
            && wrap_angle(b.q.theta - a.q.theta).abs() < step
            && a.delta_to(b, m).abs() < step
    })?;
    let p_m = pseq(m).pop().expect("nonempty");

    let mut arg_f = points[0].1.arg_a - (m + 1) as f64 * points[0].1.q.theta;
    let start = arg_f;
    let mut crossings = Vec::new();
    for w in points.windows(2) {
        let (a, b) = (&w[0].1, &w[1].1);
        let next = arg_f + a.delta_to(b, m);
        // multiples of pi in the half-open step
        let (lo, hi) = if next > arg_f { (arg_f, next) } else { (next, arg_f) };
        let k_first = (lo / PI).floor() as i64 + 1;
        let k_last = (hi / PI).ceil() as i64 - 1;
        for k in k_first..=k_last {
            let target = k as f64 * PI;
            let z = locate_crossing(w[0].0, w[1].0, arg_f, a, target, m)?;
            crossings.push(AxisCrossing {
                z,
                k,
                exact_sign: exact_sign_of_scaled_p(&p_m, z),
            });
        }
        arg_f = next;
    }
    let count = crossings
        .windows(2)
        .filter(|w| w[0].f_sign() != w[1].f_sign())
        .count();
    let signs_agree = crossings.iter().all(|c| c.exact_sign == c.f_sign());
    Ok(Crossings {
        m,
        count,
        delta_arg_f: arg_f - start,
        expected_delta: m as f64 * PI / 2.0 + 3.0 * PI / 4.0,
        crossings,
        samples: points.len(),
        signs_agree,
    })
}

/// Bisect in the sweep parameter for `Arg f = target` inside one step.
fn locate_crossing(
    z_a: f64,
    z_b: f64,
    arg_at_a: f64,
    a: &FPoint,
    target: f64,
    m: usize,
) -> Result<f64, QuarticError> {
    use crate::quartic::{sweep_param, sweep_z};
    let side = |z: f64| -> Result<f64, QuarticError> {
        let p = FPoint::at(z)?;
        Ok(arg_at_a + a.delta_to(&p, m) - target)
    };
    let (mut lo, mut hi) = (sweep_param(z_a), sweep_param(z_b));
    let s_lo = side(z_a)?.signum();
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        let zm = sweep_z(mid);
        if zm <= z_a.min(z_b) || zm >= z_a.max(z_b) {
            break;
        }
        if side(zm)?.signum() == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(sweep_z(0.5 * (lo + hi)))
}

/// Sign of `-z^2 P(z)` at the exact rational value of `z`.
fn exact_sign_of_scaled_p(p: &IntPoly, z: f64) -> i8 {
    let zq = BigRational::from_float(z).expect("finite");
    let v = p.eval_rational(&zq);
    match v.cmp(&BigRational::zero()) {
        Ordering::Greater => -1,
        Ordering::Less => 1,
        Ordering::Equal => 0,
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PassFlags {
    /// All roots real, distinct and inside the target interval.
    pub located: bool,
    /// `deg <= floor(m/2)` (for the rook diagonal: `deg = m`).
    pub degree_bound: bool,
    /// The polynomial does not vanish at the interval endpoint.
    pub endpoint_nonzero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocusReport {
    pub m: usize,
    pub family: String,
    pub degree: usize,
    pub roots_in_interval: usize,
    pub roots_elsewhere: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crossings: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_arg_f: Option<f64>,
    pub pass: PassFlags,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl LocusReport {
    pub fn passed(&self) -> bool {
        self.pass.located && self.pass.degree_bound && self.pass.endpoint_nonzero
    }
}

fn degree_of(p: &IntPoly) -> usize {
    p.degree().unwrap_or(0)
}

/// Certify that every root of `p` lies in `(-inf, -9/4)`.
///
/// `(-inf, -9/4]` and `(-9/4, inf)` are counted by Sturm and the endpoint is
/// tested exactly.
pub fn certify_open_interval(m: usize, family: &str, p: &IntPoly) -> LocusReport {
    let start = Instant::now();
    let endpoint = Bound::finite(-9, 4);
    let chain = SturmChain::new(p).expect("sequence members are nonzero");
    let at_endpoint = match &endpoint {
        Bound::Finite(x) => p.eval_rational(x).is_zero(),
        _ => unreachable!(),
    };
    let left_closed = chain.count(&Bound::NegInf, &endpoint).expect("nonempty");
    let right_open = chain.count(&endpoint, &Bound::PosInf).expect("nonempty");
    let endpoint_roots = usize::from(at_endpoint);
    let roots_in_interval = left_closed - endpoint_roots;
    let roots_elsewhere = right_open + endpoint_roots;
    let degree = degree_of(p);
    LocusReport {
        m,
        family: family.to_string(),
        degree,
        roots_in_interval,
        roots_elsewhere,
        crossings: None,
        delta_arg_f: None,
        pass: PassFlags {
            located: roots_elsewhere == 0 && roots_in_interval == degree,
            degree_bound: degree <= m / 2,
            endpoint_nonzero: !at_endpoint,
        },
        timing_ms: Some(start.elapsed().as_secs_f64() * 1e3),
    }
}

/// Sturm certification of every `P_m`, `m <= m_max`.
pub fn theorem1_verify(m_max: usize) -> Vec<LocusReport> {
    let seq = pseq(m_max);
    seq.par_iter()
        .enumerate()
        .map(|(m, p)| certify_open_interval(m, "alpha=1", p))
        .collect()
}

/// The same certification for the coefficients of `D^(-alpha)`, after
/// clearing denominators.
pub fn conjecture_scan(alphas: &[BigRational], m_max: usize) -> Result<Vec<LocusReport>, crate::SeriesError> {
    let mut out = Vec::new();
    for alpha in alphas {
        let series = alpha_coeffs(alpha, m_max)?;
        let ints = series.integer_coeffs();
        let family = format!("alpha={alpha}");
        let reports: Vec<LocusReport> = ints
            .par_iter()
            .enumerate()
            .map(|(m, p)| certify_open_interval(m, &family, p))
            .collect();
        out.extend(reports);
    }
    Ok(out)
}

/// Certify that `P(m,m)` of the rook table has `m` roots in `(-inf, -4]`
/// and none in `(-4, inf)`.
pub fn rook_zero_check(m_max: usize) -> Vec<LocusReport> {
    let table = build_table(TableKind::Rook, m_max, m_max);
    let split = Bound::int(-4);
    (0..=m_max)
        .into_par_iter()
        .map(|m| {
            let start = Instant::now();
            let p = table.entry(m, m);
            let chain = SturmChain::new(p).expect("nonzero");
            let inside = chain.count(&Bound::NegInf, &split).expect("nonempty");
            let outside = chain.count(&split, &Bound::PosInf).expect("nonempty");
            let degree = degree_of(p);
            LocusReport {
                m,
                family: "rook-diagonal".into(),
                degree,
                roots_in_interval: inside,
                roots_elsewhere: outside,
                crossings: None,
                delta_arg_f: None,
                pass: PassFlags {
                    located: outside == 0 && inside == degree,
                    degree_bound: degree == m,
                    endpoint_nonzero: true,
                },
                timing_ms: Some(start.elapsed().as_secs_f64() * 1e3),
            }
        })
        .collect()
}

/// Approximate real zeros of `p` in `(lo, hi]`, each isolated by Sturm
/// bisection to width `2^-bits` and reported by interval midpoint.
pub fn approximate_zeros(p: &IntPoly, lo: &Bound, hi: &Bound, bits: u32) -> Vec<f64> {
    let Ok(chain) = SturmChain::new(p) else {
        return Vec::new();
    };
    let width = BigRational::new(BigInt::from(1), BigInt::from(2).pow(bits));
    chain
        .isolate(lo, hi, &width)
        .unwrap_or_default()
        .into_iter()
        .map(|(a, b)| ((a + b) / BigRational::from_integer(2.into())).to_f64().unwrap_or(f64::NAN))
        .collect()
}
