//! Command-line front end: term files in, deterministic JSON/CSV out.
//!
//! Exit codes: 0 success, 1 no relation found (or a relation that does
//! not verify), 2 input error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebraic::{algebraic_telescoper, annihilates, series_solve, AlgebraicInput};
use crate::bounds::{
    algebraic_size_formulas, curve, default_r_cap, extremal_corollary, optimize_metric, Metric,
};
use crate::corpus;
use crate::hyperexp::{greek_params, validate, HyperexpTerm};
use crate::polyarith::rat::{parse_rat, rat_to_string};
use crate::polyarith::{parse_poly, BiPoly};
use crate::telescope::{
    region_scan, telescope_at, verify_relation, Mode, RegionReport, TelescopingRelation,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write output: {0}")]
    Write(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("in field '{field}': {msg}")]
    Field { field: String, msg: String },
    #[error("unknown built-in term '{0}'")]
    UnknownBuiltin(String),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    fn field(field: impl Into<String>, msg: impl ToString) -> Self {
        CliError::Field {
            field: field.into(),
            msg: msg.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FactorEntry {
    pub poly: String,
    pub exponent: String,
}

/// `{"c0": "...", "a": "...", "b": "...", "factors": [{"poly": "...", "exponent": "p/q"}]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermFile {
    pub c0: String,
    #[serde(default = "zero_str")]
    pub a: String,
    #[serde(default = "one_str")]
    pub b: String,
    #[serde(default)]
    pub factors: Vec<FactorEntry>,
}

fn zero_str() -> String {
    "0".into()
}

fn one_str() -> String {
    "1".into()
}

impl TermFile {
    pub fn to_term(&self) -> Result<HyperexpTerm, CliError> {
        let poly = |name: &str, s: &str| parse_poly(s).map_err(|e| CliError::field(name, e));
        let mut factors = Vec::new();
        for (k, f) in self.factors.iter().enumerate() {
            let p = poly(&format!("factors[{k}].poly"), &f.poly)?;
            let e = parse_rat(&f.exponent).ok_or_else(|| {
                CliError::field(format!("factors[{k}].exponent"), "not a rational number")
            })?;
            factors.push((p, e));
        }
        let term = HyperexpTerm::new(
            poly("c0", &self.c0)?,
            poly("a", &self.a)?,
            poly("b", &self.b)?,
            factors,
        )
        .map_err(|e| CliError::Invalid(e.to_string()))?;
        validate(&term).map_err(|e| CliError::Invalid(e.to_string()))?;
        Ok(term)
    }

    pub fn from_named(t: &corpus::NamedTerm) -> Self {
        TermFile {
            c0: t.c0.into(),
            a: t.a.into(),
            b: t.b.into(),
            factors: t
                .factors
                .iter()
                .map(|(p, e)| FactorEntry {
                    poly: (*p).into(),
                    exponent: (*e).into(),
                })
                .collect(),
        }
    }
}

/// Reads a term file, or a built-in term given as `builtin:<name>`.
pub fn load_term(source: &str) -> Result<HyperexpTerm, CliError> {
    if let Some(name) = source.strip_prefix("builtin:") {
        let t = corpus::by_name(name).ok_or_else(|| CliError::UnknownBuiltin(name.into()))?;
        return TermFile::from_named(t).to_term();
    }
    let text = read(Path::new(source))?;
    let tf: TermFile = serde_json::from_str(&text)?;
    tf.to_term()
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })
}

/// JSON form of a relation; polynomials as strings, graded-lex descending.
pub fn relation_to_json(rel: &TelescopingRelation) -> Value {
    json!({
        "order": rel.r,
        "degree": rel.d,
        "p": rel.p.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "q_num": rel.q_num.to_string(),
        "q_denom_power": rel.q_denom_power,
    })
}

pub fn relation_from_json(v: &Value) -> Result<TelescopingRelation, CliError> {
    let p = v["p"]
        .as_array()
        .ok_or_else(|| CliError::field("p", "expected a list of polynomials"))?
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let s = s
                .as_str()
                .ok_or_else(|| CliError::field(format!("p[{i}]"), "expected a string"))?;
            parse_poly(s).map_err(|e| CliError::field(format!("p[{i}]"), e))
        })
        .collect::<Result<Vec<BiPoly>, _>>()?;
    let q = v["q_num"]
        .as_str()
        .ok_or_else(|| CliError::field("q_num", "expected a string"))?;
    let q = parse_poly(q).map_err(|e| CliError::field("q_num", e))?;
    let k = v["q_denom_power"]
        .as_u64()
        .ok_or_else(|| CliError::field("q_denom_power", "expected a nonnegative integer"))?;
    TelescopingRelation::new(p, q, k as usize)
        .ok_or_else(|| CliError::Invalid("the telescoper must be nonzero and free of y".into()))
}

/// Writes the `r,d_min` table; orders without a feasible degree get an empty cell.
pub fn emit_region_csv(report: &RegionReport, sink: &mut impl Write) -> std::io::Result<()> {
    sink.write_all(report.to_csv().as_bytes())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Shaped,
    Naive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Order,
    Cost,
    Size,
    Tsize,
    Rec,
    Degree,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Metric {
        match m {
            MetricArg::Order => Metric::Order,
            MetricArg::Cost => Metric::Cost,
            MetricArg::Size => Metric::SizePq,
            MetricArg::Tsize => Metric::SizeP,
            MetricArg::Rec => Metric::RecOrder,
            MetricArg::Degree => Metric::Degree,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "telescoper",
    version,
    about = "Creative telescoping for bivariate hyperexponential terms"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural parameters of a term.
    Params { term: String },
    /// The order/degree bound curve.
    Curve { term: String },
    /// A verified relation of given order and degree.
    #[command(alias = "telescope")]
    Relation {
        term: String,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        degree: i64,
        #[arg(long, value_enum, default_value = "shaped")]
        mode: ModeArg,
        /// Override the number of trimmed diagonals.
        #[arg(long)]
        w: Option<i64>,
    },
    /// Least feasible degree per order.
    Region {
        term: String,
        #[arg(long, default_value_t = 1)]
        rmin: usize,
        #[arg(long)]
        rmax: usize,
        #[arg(long)]
        dmax: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// The order minimizing a cost or size measure along the curve.
    Optimize {
        term: String,
        #[arg(long, value_enum)]
        metric: MetricArg,
        #[arg(long)]
        rcap: Option<i64>,
    },
    /// Differential equation for a root of m(x, y) = 0.
    Algebraic {
        /// Minimal polynomial, e.g. "y^2 - x - 1".
        m: String,
        #[arg(long, allow_hyphen_values = true)]
        a0: String,
        /// Series order used for the annihilation check.
        #[arg(long, default_value_t = 40)]
        terms: usize,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        degree: Option<i64>,
    },
    /// Check a relation file against a term.
    Verify { term: String, relation: PathBuf },
}

/// Output text plus exit code.
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

fn ok(v: Value) -> Outcome {
    Outcome {
        text: pretty(&v),
        code: 0,
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn execute(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Params { term } => {
            let t = load_term(term)?;
            let warnings: Vec<String> = validate(&t)
                .map_err(|e| CliError::Invalid(e.to_string()))?
                .iter()
                .map(ToString::to_string)
                .collect();
            let mut v = serde_json::to_value(greek_params(&t))?;
            v["warnings"] = json!(warnings);
            Ok(ok(v))
        }
        Command::Curve { term } => {
            let gp = greek_params(&load_term(term)?);
            let c = curve(&gp);
            let (min_order, min_degree) = extremal_corollary(&gp);
            let mut v = serde_json::to_value(&c)?;
            v["min_order"] = json!(min_order);
            v["min_degree"] = json!(min_degree);
            Ok(ok(v))
        }
        Command::Relation {
            term,
            order,
            degree,
            mode,
            w,
        } => {
            let t = load_term(term)?;
            let mode = match mode {
                ModeArg::Shaped => Mode::Shaped,
                ModeArg::Naive => Mode::Naive,
            };
            match telescope_at(&t, *order, *degree, mode, *w)
                .map_err(|e| CliError::Invalid(e.to_string()))?
            {
                Some(rel) => Ok(ok(relation_to_json(&rel))),
                None => Ok(Outcome {
                    text: pretty(&json!({ "relation": null })),
                    code: 1,
                }),
            }
        }
        Command::Region {
            term,
            rmin,
            rmax,
            dmax,
            format,
        } => {
            if rmin > rmax || *rmin == 0 || *dmax < 0 {
                return Err(CliError::Invalid(
                    "need 1 ≤ rmin ≤ rmax and dmax ≥ 0".into(),
                ));
            }
            let t = load_term(term)?;
            let rep = region_scan(&t, (*rmin, *rmax), *dmax)
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            let text = match format {
                FormatArg::Csv => rep.to_csv(),
                FormatArg::Json => pretty(&serde_json::to_value(&rep)?),
            };
            Ok(Outcome { text, code: 0 })
        }
        Command::Optimize { term, metric, rcap } => {
            let gp = greek_params(&load_term(term)?);
            let m = Metric::from(*metric);
            let cap = rcap.unwrap_or_else(|| default_r_cap(&gp, m));
            let rep = optimize_metric(&gp, m, cap).map_err(|e| CliError::Invalid(e.to_string()))?;
            Ok(ok(serde_json::to_value(&rep)?))
        }
        Command::Algebraic {
            m,
            a0,
            terms,
            order,
            degree,
        } => algebraic(m, a0, *terms, *order, *degree),
        Command::Verify { term, relation } => {
            let t = load_term(term)?;
            let v: Value = serde_json::from_str(&read(relation)?)?;
            let rel = relation_from_json(&v)?;
            let good = verify_relation(&t, &rel);
            Ok(Outcome {
                text: pretty(&json!({ "verified": good })),
                code: if good { 0 } else { 1 },
            })
        }
    }
}

fn algebraic(
    m: &str,
    a0: &str,
    terms: usize,
    order: Option<usize>,
    degree: Option<i64>,
) -> Result<Outcome, CliError> {
    let mpoly = parse_poly(m).map_err(|e| CliError::field("m", e))?;
    let a0 = parse_rat(a0).ok_or_else(|| CliError::field("a0", "not a rational number"))?;
    let input = AlgebraicInput::new(mpoly, a0).map_err(|e| CliError::Invalid(e.to_string()))?;
    let (tx, ty) = input.taus();
    let sizes = algebraic_size_formulas(tx, ty).map_err(|e| CliError::Invalid(e.to_string()))?;
    let r = order.unwrap_or(sizes[0].0 as usize);
    let d = degree.unwrap_or(sizes[0].1);
    let series = series_solve(&input, terms);
    let rel = algebraic_telescoper(&input, r, d).map_err(|e| CliError::Invalid(e.to_string()))?;
    let mut v = json!({
        "tau_x": tx,
        "tau_y": ty,
        "predicted": sizes.iter().map(|(r, d)| json!({"order": r, "degree": d})).collect::<Vec<_>>(),
        "series": series.coeffs.iter().map(rat_to_string).collect::<Vec<_>>(),
    });
    let code = match rel {
        Some(rel) => {
            let ann = annihilates(&rel.p, &series).map_err(|e| CliError::Invalid(e.to_string()))?;
            v["relation"] = relation_to_json(&rel);
            v["annihilates"] = json!(ann);
            if ann {
                0
            } else {
                1
            }
        }
        None => {
            v["relation"] = Value::Null;
            1
        }
    };
    Ok(Outcome {
        text: pretty(&v),
        code,
    })
}

/// Parses arguments, runs, writes output, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    run_config(&cfg)
}

pub fn run_config(cfg: &RunConfig) -> i32 {
    let out = match execute(&cfg.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let written = match &cfg.output {
        Some(path) => std::fs::write(path, &out.text),
        None => std::io::stdout().write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return 2;
    }
    out.code
}

/// Human summary of a relation, used in docs and debugging.
pub fn describe_relation(rel: &TelescopingRelation) -> String {
    format!(
        "order {} degree {}: {}",
        rel.r,
        rel.d,
        rel.telescoper_string()
    )
}
