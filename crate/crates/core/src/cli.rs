//! Command-line front end.
//!
//! Every subcommand builds a [`Document`] and writes it as CSV or JSON to
//! stdout or `--out`. Exit status: 0 on success, 1 when a verification
//! suite finds a failure (a JSON failure record goes to stderr), 2 on usage
//! or input errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;
use serde_json::json;

use crate::exactpoly::{Bound, IntPoly};
use crate::export::{coefficient_cells, float_cell, Document};
use crate::genfun::{alpha_coeffs, pseq};
use crate::locus::{approximate_zeros, conjecture_scan, rook_zero_check, theorem1_verify, LocusReport};
use crate::quartic::{theta_strictly_decreasing, track_curve_with, z_max_admissible, TrackOptions};
use crate::real::Precision;
use crate::tables::{build_table, TableKind};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "queenpoly", version, about = "Rook/queen polynomial tables and zero-location checks")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Include wall-clock timings (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rook or queen polynomial table.
    Tables {
        #[arg(long, default_value_t = 5)]
        m_max: usize,
        /// Defaults to m-max.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = TableKind::Queen)]
        kind: TableKind,
    },
    /// P_0 .. P_m, the coefficients of 1/D(t, z).
    Pseq {
        #[arg(long, default_value_t = 10)]
        m_max: usize,
    },
    /// Coefficients of D(t, z)^(-alpha).
    Alpha {
        #[arg(long = "alpha", value_parser = parse_alpha, required = true)]
        alphas: Vec<BigRational>,
        #[arg(long, default_value_t = 10)]
        m_max: usize,
    },
    /// Isolate the real zeros of each sequence polynomial.
    Roots {
        #[arg(long, default_value_t = 10)]
        m_max: usize,
        /// Use the D^(-alpha) series instead of alpha = 1.
        #[arg(long, value_parser = parse_alpha)]
        alpha: Option<BigRational>,
        /// Isolating intervals are refined to width 2^-bits.
        #[arg(long, default_value_t = 30)]
        bits: u32,
    },
    /// Sample the root t1(z) along z_min <= z <= z_max.
    Curve {
        #[arg(long, default_value_t = -1e8, allow_hyphen_values = true)]
        z_min: f64,
        #[arg(long, default_value_t = -2.2500001, allow_hyphen_values = true)]
        z_max: f64,
        #[arg(long, default_value_t = 20_000)]
        grid_budget: usize,
        #[arg(long, value_enum, default_value_t = Precision::Double)]
        precision: Precision,
    },
    /// Sturm certification that every zero of P_m lies in (-inf, -9/4).
    Verify {
        #[arg(long, default_value_t = 100)]
        m_max: usize,
    },
    /// The same certification for D^(-alpha).
    Conjecture {
        #[arg(long = "alpha", value_parser = parse_alpha)]
        alphas: Vec<BigRational>,
        #[arg(long, default_value_t = 40)]
        m_max: usize,
    },
    /// Certify that the rook diagonal has all zeros in (-inf, -4].
    RookCheck {
        #[arg(long, default_value_t = 20)]
        m_max: usize,
    },
}

/// Parse `p/q` or an integer; must be positive.
pub fn parse_alpha(s: &str) -> Result<BigRational, String> {
    let q: BigRational = s.trim().parse().map_err(|_| format!("not a rational p/q: {s:?}"))?;
    if !q.is_positive() {
        return Err(format!("alpha must be positive, got {q}"));
    }
    Ok(q)
}

pub fn default_alphas() -> Vec<BigRational> {
    ["1/4", "1/2", "2", "3"]
        .iter()
        .map(|s| parse_alpha(s).expect("valid literal"))
        .collect()
}

/// Result of executing a config, before rendering.
pub struct Outcome {
    pub document: Document,
    /// Name of the suite and the failing records, if any.
    pub failure: Option<(String, Vec<serde_json::Value>)>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Parse arguments, execute and write; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(stdout, "{rendered}")
            } else {
                write!(stderr, "{rendered}")
            };
            return code;
        }
    };
    match run_config(&config, stdout) {
        Ok(outcome) => match outcome.failure {
            None => 0,
            Some((suite, records)) => {
                let record = json!({
                    "schema": crate::export::schema_id("failure"),
                    "suite": suite,
                    "failures": records,
                });
                let _ = writeln!(stderr, "{record}");
                1
            }
        },
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

/// Execute and render to `--out` or `stdout`.
pub fn run_config(config: &RunConfig, stdout: &mut dyn Write) -> Result<Outcome, CliError> {
    let outcome = execute(config)?;
    let doc = &outcome.document;
    match &config.out {
        Some(path) => {
            let mut f = BufWriter::new(File::create(path)?);
            render(doc, config.format, &mut f)?;
            f.flush()?;
        }
        None => render(doc, config.format, stdout)?,
    }
    Ok(outcome)
}

fn render(doc: &Document, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Csv => doc.write_csv(out),
        Format::Json => doc.write_json(out),
    }
}

pub fn execute(config: &RunConfig) -> Result<Outcome, CliError> {
    let ok = |document| Ok(Outcome { document, failure: None });
    match &config.command {
        Command::Tables { m_max, n_max, kind } => ok(tables_doc(*kind, *m_max, n_max.unwrap_or(*m_max))),
        Command::Pseq { m_max } => ok(pseq_doc(*m_max)),
        Command::Alpha { alphas, m_max } => ok(alpha_doc(alphas, *m_max)),
        Command::Roots { m_max, alpha, bits } => ok(roots_doc(*m_max, alpha.as_ref(), *bits)),
        Command::Curve {
            z_min,
            z_max,
            grid_budget,
            precision,
        } => curve_doc(*z_min, *z_max, *grid_budget, *precision),
        Command::Verify { m_max } => Ok(locus_outcome("verify", theorem1_verify(*m_max), config.timing)),
        Command::Conjecture { alphas, m_max } => {
            let alphas = if alphas.is_empty() { default_alphas() } else { alphas.clone() };
            let reports = conjecture_scan(&alphas, *m_max).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(locus_outcome("conjecture", reports, config.timing))
        }
        Command::RookCheck { m_max } => Ok(locus_outcome("rook-check", rook_zero_check(*m_max), config.timing)),
    }
}

#[derive(Serialize)]
struct PolyRecord<'a> {
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    degree: Option<usize>,
    coefficients: &'a IntPoly,
}

fn tables_doc(kind: TableKind, m_max: usize, n_max: usize) -> Document {
    let table = build_table(kind, m_max, n_max);
    let mut doc = Document::new(&format!("tables-{}", kind.name()), &["m", "n", "degree"]);
    for m in 0..=m_max {
        for n in 0..=n_max {
            let p = table.entry(m, n);
            let mut row = vec![m.to_string(), n.to_string(), degree_cell(p)];
            row.extend(coefficient_cells(p));
            doc.push(
                row,
                &PolyRecord {
                    m,
                    n: Some(n),
                    degree: p.degree(),
                    coefficients: p,
                },
            );
        }
    }
    doc.pad_coefficients(3, &[]);
    doc
}

fn degree_cell(p: &IntPoly) -> String {
    p.degree().map_or_else(|| "-1".into(), |d| d.to_string())
}

fn pseq_doc(m_max: usize) -> Document {
    let mut doc = Document::new("pseq", &["m", "degree", "poly"]);
    for (m, p) in pseq(m_max).iter().enumerate() {
        let mut row = vec![m.to_string(), degree_cell(p)];
        row.extend(coefficient_cells(p));
        row.push(p.pretty("z"));
        doc.push(
            row,
            &PolyRecord {
                m,
                n: None,
                degree: p.degree(),
                coefficients: p,
            },
        );
    }
    doc.pad_coefficients(2, &["poly"]);
    doc
}

fn alpha_doc(alphas: &[BigRational], m_max: usize) -> Document {
    #[derive(Serialize)]
    struct Rec<'a> {
        alpha: String,
        m: usize,
        degree: Option<usize>,
        coefficients: &'a crate::RatPoly,
    }
    let mut doc = Document::new("alpha", &["alpha", "m", "degree"]);
    for alpha in alphas {
        let series = alpha_coeffs(alpha, m_max).expect("alpha validated positive");
        for (m, p) in series.coeffs().iter().enumerate() {
            let mut row = vec![alpha.to_string(), m.to_string(), p.degree().map_or("-1".into(), |d| d.to_string())];
            row.extend(coefficient_cells(p));
            doc.push(
                row,
                &Rec {
                    alpha: alpha.to_string(),
                    m,
                    degree: p.degree(),
                    coefficients: p,
                },
            );
        }
    }
    doc.pad_coefficients(3, &[]);
    doc
}

fn roots_doc(m_max: usize, alpha: Option<&BigRational>, bits: u32) -> Document {
    #[derive(Serialize)]
    struct Rec {
        m: usize,
        index: usize,
        approx: f64,
    }
    let polys = match alpha {
        None => pseq(m_max),
        Some(a) => alpha_coeffs(a, m_max).expect("alpha validated positive").integer_coeffs(),
    };
    let mut doc = Document::new("roots", &["m", "index", "approx"]);
    for (m, p) in polys.iter().enumerate() {
        let zeros = approximate_zeros(p, &Bound::NegInf, &Bound::PosInf, bits);
        for (index, approx) in zeros.into_iter().enumerate() {
            doc.push(
                vec![m.to_string(), index.to_string(), float_cell(approx)],
                &Rec { m, index, approx },
            );
        }
    }
    doc
}

fn curve_doc(z_min: f64, z_max: f64, budget: usize, precision: Precision) -> Result<Outcome, CliError> {
    if !(z_min < z_max && z_max <= z_max_admissible()) {
        return Err(CliError::Usage(format!(
            "need z-min < z-max <= {} (got {z_min}, {z_max})",
            z_max_admissible()
        )));
    }
    let opts = TrackOptions {
        budget,
        precision,
        ..TrackOptions::default()
    };
    let samples = track_curve_with(z_min, z_max, &opts).map_err(|e| CliError::Usage(e.to_string()))?;
    #[derive(Serialize)]
    struct Rec {
        z: f64,
        re_t1: f64,
        im_t1: f64,
        theta: f64,
        phi: f64,
        abs_t1: f64,
        abs_t3: f64,
    }
    let mut doc = Document::new("curve", &["z", "re_t1", "im_t1", "theta", "phi", "abs_t1", "abs_t3"]);
    for s in &samples {
        let q = &s.quartet;
        let r = Rec {
            z: s.z,
            re_t1: q.t1().re,
            im_t1: q.t1().im,
            theta: s.unwrapped_theta,
            phi: q.phi,
            abs_t1: q.r,
            abs_t3: q.rho,
        };
        let row = [r.z, r.re_t1, r.im_t1, r.theta, r.phi, r.abs_t1, r.abs_t3]
            .map(float_cell)
            .to_vec();
        doc.push(row, &r);
    }
    let decreasing = theta_strictly_decreasing(&samples);
    doc.summary = Some(json!({ "samples": samples.len(), "theta_decreasing": decreasing }));
    let failure = (!decreasing).then(|| ("curve".to_string(), vec![json!({"theta_decreasing": false})]));
    Ok(Outcome { document: doc, failure })
}

fn locus_outcome(name: &str, mut reports: Vec<LocusReport>, timing: bool) -> Outcome {
    if !timing {
        for r in &mut reports {
            r.timing_ms = None;
        }
    }
    let mut columns = vec![
        "family",
        "m",
        "degree",
        "roots_in_interval",
        "roots_elsewhere",
        "located",
        "degree_bound",
        "endpoint_nonzero",
        "pass",
    ];
    if timing {
        columns.push("timing_ms");
    }
    let mut doc = Document::new(name, &columns);
    for r in &reports {
        let mut row = vec![
            r.family.clone(),
            r.m.to_string(),
            r.degree.to_string(),
            r.roots_in_interval.to_string(),
            r.roots_elsewhere.to_string(),
            r.pass.located.to_string(),
            r.pass.degree_bound.to_string(),
            r.pass.endpoint_nonzero.to_string(),
            r.passed().to_string(),
        ];
        if let Some(t) = r.timing_ms {
            row.push(format!("{t:.3}"));
        }
        doc.push(row, r);
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    doc.summary = Some(json!({ "total": reports.len(), "passed": passed }));
    let failures: Vec<_> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| serde_json::to_value(r).expect("serializable"))
        .collect();
    let failure = (!failures.is_empty()).then(|| (name.to_string(), failures));
    Outcome { document: doc, failure }
}
