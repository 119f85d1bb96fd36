//! Acceptance gate: eleven end-to-end checks, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report is always printed. Exit
//! status is nonzero if any check fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use queenpoly::cli::default_alphas;
use queenpoly::exactpoly::discriminant;
use queenpoly::genfun::{alpha_coeffs, denominator, pseq};
use queenpoly::locus::{
    arg_change_a, closed_form_value, conjecture_scan, crossing_count, locus_sweep, rook_zero_check,
    theorem1_verify, SWEEP_BUDGET, SWEEP_Z_HI, SWEEP_Z_LO,
};
use queenpoly::quartic::{solve_quartet, t1_asymptotic};
use queenpoly::tables::{build_table, rook_diagonal_identity_holds, TableKind};
use queenpoly::IntPoly;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// `sum_k C(m,k)^2 4^(m-k) (z+4)^k`, the expansion of `z^m L_m(8/z + 1)`
/// from the closed-form sum of squared binomials for Legendre polynomials.
fn rook_diagonal_oracle(m: usize) -> IntPoly {
    let z4 = IntPoly::from_i64s(&[4, 1]);
    (0..=m).fold(IntPoly::zero(), |acc, k| {
        let c = binom(m as u64, k as u64).pow(2) * BigInt::from(4).pow((m - k) as u32);
        acc.add(&z4.pow(k).scale(&c))
    })
}

fn c1_legendre() -> Outcome {
    let table = build_table(TableKind::Rook, 20, 20);
    let bad: Vec<usize> = (0..=20)
        .filter(|&m| !rook_diagonal_identity_holds(&table, m) || *table.entry(m, m) != rook_diagonal_oracle(m))
        .collect();
    outcome(bad.is_empty(), format!("m = 0..20 exact, mismatches {bad:?}"))
}

fn c2_diagonal() -> Outcome {
    let table = build_table(TableKind::Queen, 12, 12);
    let series = alpha_coeffs(&BigRational::new(1.into(), 2.into()), 12).unwrap();
    let bad: Vec<usize> = (0..=12)
        .filter(|&m| series.coeffs()[m] != table.entry(m, m).to_rational())
        .collect();
    outcome(bad.is_empty(), format!("m = 0..12 exact, mismatches {bad:?}"))
}

fn c3_discriminant() -> Outcome {
    // expanded independently with a computer algebra system
    let expected = IntPoly::from_i64s(&[18662400, 1969920, -5492736, 172032, 458752, -65536]);
    let disc = discriminant(&denominator()).unwrap();
    outcome(disc == expected, format!("Disc_t D = {}", disc.pretty("z")))
}

fn c4_numerics() -> Outcome {
    let q10 = solve_quartet(-10.0).unwrap();
    let q3 = solve_quartet(-3.0).unwrap();
    let q5 = solve_quartet(-5.0).unwrap();
    let errs = [
        ((q10.theta - 0.55491).abs(), 1e-4),
        ((q3.theta - 0.206599).abs(), 1e-4),
        ((q5.theta - 0.37).abs(), 5e-3),
        ((q5.phi - 1.299).abs(), 5e-3),
    ];
    let pass = errs.iter().all(|(e, tol)| e < tol);
    outcome(
        pass,
        format!(
            "theta(-10)={:.6} theta(-3)={:.6} theta(-5)={:.5} phi(-5)={:.5}",
            q10.theta, q3.theta, q5.theta, q5.phi
        ),
    )
}

fn c5_certify() -> Outcome {
    let reports = theorem1_verify(100);
    let bad: Vec<usize> = reports
        .iter()
        .filter(|r| !(r.passed() && r.roots_in_interval == r.m / 2 && r.roots_elsewhere == 0))
        .map(|r| r.m)
        .collect();
    outcome(
        bad.is_empty() && reports.len() == 101,
        format!("{}/101 certified with floor(m/2) roots, failing {bad:?}", 101 - bad.len()),
    )
}

fn c6_closed_form() -> Outcome {
    let seq = pseq(30);
    let zs = [-2.5, -3.0, -5.0, -10.0, -100.0, -1e4];
    let mut worst = (0.0f64, 0usize, 0.0f64);
    let mut errors = Vec::new();
    for (m, p) in seq.iter().enumerate() {
        for &z in &zs {
            let exact = p.eval_rational(&BigRational::from_float(z).unwrap()).to_f64().unwrap();
            match closed_form_value(m, z) {
                Ok(v) => {
                    let rel = ((v - exact) / exact).abs();
                    if !(rel <= worst.0) {
                        worst = (rel, m, z);
                    }
                }
                Err(e) => errors.push(format!("m={m} z={z}: {e}")),
            }
        }
    }
    outcome(
        errors.is_empty() && worst.0 < 1e-8,
        format!("max rel err {:.2e} at m={} z={}; errors {errors:?}", worst.0, worst.1, worst.2),
    )
}

fn c7_crossings() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let sturm = theorem1_verify(20);
    for m in [0usize, 1, 2, 7, 20] {
        match crossing_count(m, SWEEP_Z_LO, SWEEP_Z_HI, SWEEP_BUDGET) {
            Ok(c) => {
                let err = (c.delta_arg_f - c.expected_delta).abs();
                let roots = sturm[m].roots_in_interval;
                let ok = err < 5e-2 && c.count >= m / 2 && c.count == roots && c.signs_agree;
                pass &= ok;
                parts.push(format!("m={m}: d={:.4} err={err:.1e} cross={} sturm={roots}", c.delta_arg_f, c.count));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("m={m}: {e}"));
            }
        }
    }
    outcome(pass, parts.join("; "))
}

fn c8_arg_a() -> Outcome {
    let result = locus_sweep(SWEEP_Z_LO, SWEEP_Z_HI, SWEEP_BUDGET).and_then(|s| arg_change_a(&s));
    match result {
        Ok(a) => {
            let e_start = (a.start_arg + 3.0 * PI / 4.0).abs();
            let e_end = (a.end_arg + PI / 2.0).abs();
            let e_total = (a.total - PI / 4.0).abs();
            let pass = e_start < 2e-2 && e_end < 2e-2 && e_total < 2e-2 && a.min_distance_from_i_axis > 1e-3;
            outcome(
                pass,
                format!(
                    "Arg A: start {:.5} (err {e_start:.1e}), end {:.5} (err {e_end:.1e}), total {:.5} (err {e_total:.1e})",
                    a.start_arg, a.end_arg, a.total
                ),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn c9_asymptotic() -> Outcome {
    let ratios: Vec<f64> = [-1e4, -1e6, -1e8]
        .iter()
        .map(|&z: &f64| {
            let t1 = solve_quartet(z).unwrap().t1();
            (t1 - t1_asymptotic(z)).norm() / (-z).powf(-0.75)
        })
        .collect();
    let pass = ratios.windows(2).all(|w| w[1] < w[0]);
    let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.3e}")).collect();
    outcome(pass, format!("error/|z|^(-3/4) = {}", shown.join(", ")))
}

fn c10_rook() -> Outcome {
    let reports = rook_zero_check(20);
    let bad: Vec<usize> = reports
        .iter()
        .skip(1)
        .filter(|r| !(r.passed() && r.roots_in_interval == r.m))
        .map(|r| r.m)
        .collect();
    outcome(bad.is_empty(), format!("m = 1..20, failing {bad:?}"))
}

fn c11_conjecture() -> Outcome {
    let alphas = default_alphas();
    match conjecture_scan(&alphas, 40) {
        Ok(reports) => {
            let failing: Vec<String> = reports
                .iter()
                .filter(|r| !r.passed())
                .map(|r| serde_json::to_string(r).unwrap())
                .collect();
            for f in &failing {
                println!("    counterexample: {f}");
            }
            outcome(
                reports.len() == alphas.len() * 41,
                format!("{} reports, {} not certified", reports.len(), failing.len()),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn main() -> ExitCode {
    let checks: [(&str, Duration, fn() -> Outcome); 11] = [
        ("legendre-identity", Duration::from_secs(5), c1_legendre),
        ("diagonal-gf", Duration::from_secs(5), c2_diagonal),
        ("discriminant", Duration::from_secs(1), c3_discriminant),
        ("root-angles", Duration::from_secs(1), c4_numerics),
        ("zeros-certified-m100", Duration::from_secs(120), c5_certify),
        ("closed-form", Duration::from_secs(10), c6_closed_form),
        ("argument-change", Duration::from_secs(60), c7_crossings),
        ("arg-a-limits", Duration::from_secs(30), c8_arg_a),
        ("t1-asymptotic", Duration::from_secs(1), c9_asymptotic),
        ("rook-diagonal-zeros", Duration::from_secs(10), c10_rook),
        ("alpha-scan", Duration::from_secs(120), c11_conjecture),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let elapsed = start.elapsed();
        let pass = o.pass && elapsed <= *limit;
        failed += usize::from(!pass);
        println!(
            "{} {:>2} {name}: {} [{:.2}s / {}s]",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {}/{} passed", checks.len() - failed, checks.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
