//! Table-producing commands behind the `regapprox` binary.
//!
//! Every command builds a [`Table`] and writes it once, as CSV or JSON.
//! CSV output starts with `# regapprox <command> <config as JSON>` and ends
//! with `# summary <JSON>`; numbers carry 17 significant digits.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::analysis::{
    clustered_grid, l2_error, lebesgue, sparsity_report, LebesgueReport, SparsityReport,
};
use crate::barycentric::{build_l1_form, build_l2_form, BarycentricForm};
use crate::basis::BasisKind;
use crate::error::{Error, Result};
use crate::quadrature::{gauss_rule, QuadratureRule};
use crate::regsolve::{filter_penalties, fit, FitResult, PenaltySpec, Solver};
use crate::signals::{read_samples, SampledFunction, Signal};

/// Relative tolerance for matching file samples to the Gauss nodes.
const NODE_MATCH_TOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "regapprox", version, about = "Regularized polynomial approximation on Gauss nodes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Gauss nodes and weights: columns j, x, w.
    Rule(RunArgs),
    /// Fit samples and report coefficients and errors.
    Fit(RunArgs),
    /// Fit noisy samples of a known signal.
    Denoise(RunArgs),
    /// Regularized Lebesgue constants over a range of degrees.
    Lebesgue(RunArgs),
    /// Nonzero counts of l1 coefficients over a range of degrees.
    Sparsity(RunArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Rule(_) => "rule",
            Command::Fit(_) => "fit",
            Command::Denoise(_) => "denoise",
            Command::Lebesgue(_) => "lebesgue",
            Command::Sparsity(_) => "sparsity",
        }
    }

    pub fn args(&self) -> &RunArgs {
        match self {
            Command::Rule(a)
            | Command::Fit(a)
            | Command::Denoise(a)
            | Command::Lebesgue(a)
            | Command::Sparsity(a) => a,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    L2,
    L1,
    BaryL2,
    BaryL1,
}

impl Method {
    fn solver(self) -> Solver {
        match self {
            Method::L2 | Method::BaryL2 => Solver::L2,
            Method::L1 | Method::BaryL1 => Solver::L1,
        }
    }

    fn is_bary(self) -> bool {
        matches!(self, Method::BaryL2 | Method::BaryL1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// `constant:<value>` or `filter`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MuMode {
    Constant(f64),
    Filter,
}

impl MuMode {
    pub fn penalty(self, degree: usize, lambda: f64) -> Result<PenaltySpec> {
        match self {
            MuMode::Constant(v) => PenaltySpec::constant(degree, lambda, v),
            MuMode::Filter => filter_penalties(degree, lambda),
        }
    }
}

impl FromStr for MuMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "filter" {
            return Ok(MuMode::Filter);
        }
        s.strip_prefix("constant:")
            .and_then(|v| v.parse().ok())
            .map(MuMode::Constant)
            .ok_or_else(|| Error::InvalidArgument(format!("bad --mu '{s}': use constant:<v> or filter")))
    }
}

impl Serialize for MuMode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MuMode::Constant(v) => s.serialize_str(&format!("constant:{}", fmt_num(*v))),
            MuMode::Filter => s.serialize_str("filter"),
        }
    }
}

/// Inclusive degree range `lo:hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for DegreeRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("bad range '{s}': use lo:hi with lo <= hi"));
        let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok(DegreeRange { lo, hi })
    }
}

/// `lo:hi:step` in log10 space: `λ = 10^lo, 10^(lo+step), …, ≤ 10^hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LambdaGrid {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl LambdaGrid {
    pub fn values(&self) -> Vec<f64> {
        let count = ((self.hi - self.lo) / self.step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|k| 10f64.powf(self.lo + k as f64 * self.step))
            .collect()
    }
}

impl FromStr for LambdaGrid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("bad --lambda-grid '{s}': use lo:hi:step"));
        let parts: Vec<f64> = s
            .split(':')
            .map(|p| p.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        match parts[..] {
            [lo, hi, step] if lo.is_finite() && hi >= lo && step > 0.0 && hi.is_finite() => {
                Ok(LambdaGrid { lo, hi, step })
            }
            _ => Err(bad()),
        }
    }
}

fn parse_snr(s: &str) -> Result<f64> {
    match s.to_ascii_lowercase().as_str() {
        "inf" | "+inf" | "infinity" | "none" => Ok(f64::INFINITY),
        other => other
            .parse::<f64>()
            .ok()
            .filter(|v| !v.is_nan())
            .ok_or_else(|| Error::InvalidArgument(format!("bad --snr-db '{s}'"))),
    }
}

/// Flags shared by all commands; each command reads the ones it needs.
#[derive(Debug, Clone, Args, Serialize)]
pub struct RunArgs {
    #[arg(long, default_value = "chebyshev1")]
    pub basis: BasisKind,
    /// Number of nodes minus one.
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<i64>,
    /// Polynomial degree; defaults per command.
    #[arg(long)]
    pub l: Option<usize>,
    /// Degree sweep `lo:hi` for lebesgue and sparsity.
    #[arg(long)]
    pub l_range: Option<DegreeRange>,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda_grid: Option<LambdaGrid>,
    /// `constant:<v>` or `filter`.
    #[arg(long)]
    pub mu: Option<MuMode>,
    #[arg(long, value_enum)]
    pub solver: Option<Method>,
    /// Builtin signal: oscillatory, gate, airy, exp, one, phi<k>.
    #[arg(long, conflicts_with = "input")]
    pub signal: Option<Signal>,
    /// Two-column CSV of samples at the Gauss nodes.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_parser = parse_snr, allow_negative_numbers = true)]
    #[serde(serialize_with = "ser_opt_num")]
    pub snr_db: Option<f64>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Points of the clustered evaluation grid.
    #[arg(long, default_value_t = 1001)]
    pub grid_size: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Destination file; not recorded in the output header.
    #[arg(long)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

fn ser_opt_num<S: Serializer>(v: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) if x.is_finite() => s.serialize_f64(*x),
        Some(x) => s.serialize_str(&fmt_num(*x)),
        None => s.serialize_none(),
    }
}

impl RunArgs {
    fn nodes(&self, default: usize) -> Result<usize> {
        match self.n {
            None => Ok(default),
            Some(n) if n < 0 => Err(Error::InvalidArgument("N must be nonnegative".to_string())),
            Some(n) => Ok(n as usize),
        }
    }

    fn lambdas(&self, default: f64) -> Result<Vec<f64>> {
        let out = match (&self.lambda_grid, self.lambda) {
            (Some(g), _) => g.values(),
            (None, Some(l)) => vec![l],
            (None, None) => vec![default],
        };
        if let Some(bad) = out.iter().find(|l| l.is_nan() || **l < 0.0 || l.is_infinite()) {
            return Err(Error::InvalidPenalty(format!("lambda must be finite and >= 0, got {bad}")));
        }
        Ok(out)
    }

    fn degrees(&self, default: DegreeRange) -> DegreeRange {
        match (self.l_range, self.l) {
            (Some(r), _) => r,
            (None, Some(l)) => DegreeRange { lo: l, hi: l },
            (None, None) => default,
        }
    }
}

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Bool(bool),
    Missing,
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Missing, Cell::Num)
    }
}

impl From<Option<bool>> for Cell {
    fn from(v: Option<bool>) -> Self {
        v.map_or(Cell::Missing, Cell::Bool)
    }
}

/// 17 significant digits; `inf`, `-inf`, `nan` for non-finite values.
pub fn fmt_num(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{v:.16e}")
    }
}

fn json_num(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or_else(|| Value::String(fmt_num(v)), Value::Number)
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Num(v) => fmt_num(*v),
            Cell::Bool(b) => b.to_string(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => json!(i),
            Cell::Num(v) => json_num(*v),
            Cell::Bool(b) => json!(b),
            Cell::Missing => Value::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub command: &'static str,
    pub config: Value,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: Map<String, Value>,
}

impl Table {
    fn new(command: &'static str, args: &RunArgs, columns: Vec<&'static str>) -> Result<Table> {
        let config = serde_json::to_value(args).map_err(|e| Error::Io(e.to_string()))?;
        Ok(Table {
            command,
            config,
            columns,
            rows: Vec::new(),
            summary: Map::new(),
        })
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Records a resolved parameter under `config.effective`.
    fn resolve(&mut self, key: &str, value: Value) {
        if let Value::Object(config) = &mut self.config {
            let entry = config
                .entry("effective")
                .or_insert_with(|| Value::Object(Map::new()));
            if let Value::Object(m) = entry {
                m.insert(key.to_string(), value);
            }
        }
    }

    fn note(&mut self, key: &str, value: impl Into<Cell>) {
        self.summary.insert(key.to_string(), value.into().json());
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        let i = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| &r[i]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# regapprox {} {}", self.command, self.config);
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        let _ = writeln!(out, "# summary {}", Value::Object(self.summary.clone()));
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(Cell::json).collect()))
            .collect();
        let doc = json!({
            "command": self.command,
            "config": self.config,
            "columns": self.columns,
            "rows": rows,
            "summary": self.summary,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

/// Fitted approximant, evaluated either as a series or in barycentric form.
enum Approximant {
    Series(FitResult),
    Bary(BarycentricForm),
}

impl Approximant {
    fn eval(&self, x: f64) -> Result<f64> {
        match self {
            Approximant::Series(f) => f.eval(x),
            Approximant::Bary(b) => Ok(b.eval(x)),
        }
    }
}

fn approximant(
    method: Method,
    fit_result: &FitResult,
    rule: &QuadratureRule,
    values: &[f64],
) -> Result<Approximant> {
    if !method.is_bary() {
        return Ok(Approximant::Series(fit_result.clone()));
    }
    if fit_result.degree != rule.n() {
        return Err(Error::InvalidArgument(format!(
            "barycentric solvers need L = N, got L = {} and N = {}",
            fit_result.degree,
            rule.n()
        )));
    }
    let form = match method {
        Method::BaryL2 => build_l2_form(rule, values, &fit_result.penalty)?,
        _ => build_l1_form(rule, values, &fit_result.penalty)?,
    };
    Ok(Approximant::Bary(form))
}

/// Samples on the rule nodes, from a builtin signal or a file.
fn samples(args: &RunArgs, rule: &QuadratureRule, default: Signal) -> Result<(SampledFunction, Option<Signal>)> {
    let Some(path) = &args.input else {
        let signal = args.signal.unwrap_or(default);
        return Ok((SampledFunction::from_signal(signal, rule.basis(), rule.nodes())?, Some(signal)));
    };
    let data = read_samples(path)?;
    crate::error::check_len("file samples", rule.len(), data.nodes().len())?;
    for (&x, &node) in data.nodes().iter().zip(rule.nodes()) {
        if (x - node).abs() > NODE_MATCH_TOL * node.abs().max(1.0) {
            return Err(Error::InvalidSamples(format!(
                "sample abscissa {x} is not the Gauss node {node}"
            )));
        }
    }
    Ok((data, None))
}

fn grid_values(signal: Signal, basis: BasisKind, grid: &[f64]) -> Result<Vec<f64>> {
    grid.iter().map(|&x| signal.eval(basis, x)).collect()
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn check_degree(l: usize, n: usize) -> Result<()> {
    if l > 2 * n + 1 {
        return Err(Error::DegreeTooLarge { degree: l, nodes: n + 1 });
    }
    Ok(())
}

pub fn cmd_rule(args: &RunArgs) -> Result<Table> {
    let n = args.nodes(1)?;
    let rule = gauss_rule(args.basis, n)?;
    let mut t = Table::new("rule", args, vec!["j", "x", "w"])?;
    for (j, (&x, &w)) in rule.nodes().iter().zip(rule.weights()).enumerate() {
        t.push(vec![j.into(), x.into(), w.into()]);
    }
    t.note("measure", rule.weights().iter().sum::<f64>());
    Ok(t)
}

pub fn cmd_fit(args: &RunArgs) -> Result<Table> {
    let n = args.nodes(100)?;
    let l = args.l.unwrap_or(n);
    check_degree(l, n)?;
    let lambda = args.lambdas(0.0)?[0];
    let method = args.solver.unwrap_or(Method::L2);
    let rule = gauss_rule(args.basis, n)?;
    let (data, signal) = samples(args, &rule, Signal::Oscillatory)?;
    let penalty = args.mu.unwrap_or(MuMode::Constant(1.0)).penalty(l, lambda)?;
    let result = fit(args.basis, l, &rule, data.values(), &penalty, method.solver())?;
    let approx = approximant(method, &result, &rule, data.values())?;

    let mut t = Table::new("fit", args, vec!["l", "alpha", "beta"])?;
    t.resolve("n", json!(n));
    t.resolve("l", json!(l));
    t.resolve("lambda", json_num(lambda));
    t.resolve("mu", json!(args.mu.unwrap_or(MuMode::Constant(1.0))));
    t.resolve("solver", json!(method));
    for (i, (&a, &b)) in result.alpha.iter().zip(&result.beta).enumerate() {
        t.push(vec![i.into(), a.into(), b.into()]);
    }
    let at_nodes = rule
        .nodes()
        .iter()
        .map(|&x| approx.eval(x))
        .collect::<Result<Vec<_>>>()?;
    t.note("l2_error", l2_error(&rule, data.values(), &at_nodes)?);
    if let Some(signal) = signal {
        let grid = clustered_grid(args.grid_size.max(2));
        let truth = grid_values(signal, args.basis, &grid)?;
        let fitted = grid.iter().map(|&x| approx.eval(x)).collect::<Result<Vec<_>>>()?;
        t.note("uniform_error", max_abs_diff(&truth, &fitted));
    }
    t.note("nnz_beta", result.beta.iter().filter(|b| **b != 0.0).count());
    Ok(t)
}

pub fn cmd_denoise(args: &RunArgs) -> Result<Table> {
    let n = args.nodes(100)?;
    let l = args.l.unwrap_or(30);
    check_degree(l, n)?;
    let method = args.solver.unwrap_or(Method::L1);
    let mu = args.mu.unwrap_or(MuMode::Filter);
    let snr_db = args.snr_db.unwrap_or(10.0);
    let rule = gauss_rule(args.basis, n)?;
    let (clean, signal) = samples(args, &rule, Signal::Gate)?;
    let noisy = clean.with_noise(snr_db, args.seed)?;
    let noisy_error = l2_error(&rule, clean.values(), noisy.values())?;

    let grid = clustered_grid(args.grid_size.max(2));
    let truth = match signal {
        Some(s) => grid_values(s, args.basis, &grid)?,
        // File input: the interpolant of the clean samples stands in for the truth.
        None => {
            let form = build_l2_form(&rule, clean.values(), &PenaltySpec::none(n))?;
            grid.iter().map(|&x| form.eval(x)).collect()
        }
    };

    let run = |lambda: f64| -> Result<(Approximant, f64, f64)> {
        let penalty = mu.penalty(l, lambda)?;
        let result = fit(args.basis, l, &rule, noisy.values(), &penalty, method.solver())?;
        let approx = approximant(method, &result, &rule, noisy.values())?;
        let at_nodes = rule
            .nodes()
            .iter()
            .map(|&x| approx.eval(x))
            .collect::<Result<Vec<_>>>()?;
        let err = l2_error(&rule, clean.values(), &at_nodes)?;
        let fitted = grid.iter().map(|&x| approx.eval(x)).collect::<Result<Vec<_>>>()?;
        let uniform = max_abs_diff(&truth, &fitted);
        Ok((approx, err, uniform))
    };

    let lambdas = args.lambdas(0.1)?;
    let sigma = match noisy.provenance() {
        crate::signals::Provenance::Noisy { sigma, .. } => *sigma,
        _ => 0.0,
    };

    let columns = if args.lambda_grid.is_some() {
        vec!["lambda", "l2_error", "uniform_error"]
    } else {
        vec!["x", "f_true", "f_noisy_interp", "p"]
    };
    let mut t = Table::new("denoise", args, columns)?;
    t.resolve("n", json!(n));
    t.resolve("l", json!(l));
    t.resolve("mu", json!(mu));
    t.resolve("solver", json!(method));
    t.resolve("snr_db", json_num(snr_db));
    if args.lambda_grid.is_some() {
        let mut best = (f64::INFINITY, f64::NAN);
        for &lambda in &lambdas {
            let (_, err, uniform) = run(lambda)?;
            if err < best.0 {
                best = (err, lambda);
            }
            t.push(vec![lambda.into(), err.into(), uniform.into()]);
        }
        t.note("best_lambda", best.1);
        t.note("best_l2_error", best.0);
    } else {
        t.resolve("lambda", json_num(lambdas[0]));
        let (approx, err, uniform) = run(lambdas[0])?;
        let interp = build_l2_form(&rule, noisy.values(), &PenaltySpec::none(n))?;
        for (&x, &f) in grid.iter().zip(&truth) {
            t.push(vec![x.into(), f.into(), interp.eval(x).into(), approx.eval(x)?.into()]);
        }
        t.note("l2_error_fit", err);
        t.note("uniform_error_fit", uniform);
    }
    t.note("l2_error_noisy", noisy_error);
    t.note("sigma", sigma);
    t.note("seed", Cell::Int(args.seed as i64));
    Ok(t)
}

pub fn cmd_lebesgue(args: &RunArgs) -> Result<Table> {
    let degrees = args.degrees(DegreeRange { lo: 1, hi: 60 });
    let lambdas = args.lambdas(0.0)?;
    let mu = args.mu.unwrap_or(MuMode::Constant(1.0));
    let mut t = Table::new("lebesgue", args, vec!["L", "lambda", "value", "bound", "asymptote"])?;
    t.resolve("mu", json!(mu));
    let mut violations = Vec::new();
    for l in degrees.lo..=degrees.hi {
        for &lambda in &lambdas {
            let penalty = mu.penalty(l, lambda)?;
            let r: LebesgueReport = lebesgue(args.basis, l, &penalty)?;
            let asserted = args.basis == BasisKind::ChebyshevFirstKind && penalty.is_constant();
            if let (true, Some(b)) = (asserted, r.bound) {
                if r.value > b {
                    violations.push(format!("L={l} lambda={lambda}: {} > {b}", r.value));
                }
            }
            t.push(vec![l.into(), lambda.into(), r.value.into(), r.bound.into(), r.asymptote.into()]);
        }
    }
    if !violations.is_empty() {
        return Err(Error::Assertion(format!(
            "Lebesgue constant above its bound: {}",
            violations.join("; ")
        )));
    }
    Ok(t)
}

pub fn cmd_sparsity(args: &RunArgs) -> Result<Table> {
    let degrees = args.degrees(DegreeRange { lo: 1, hi: 60 });
    let n = args.nodes(degrees.hi.max(100))?;
    check_degree(degrees.hi, n)?;
    let lambdas = args.lambdas(0.1)?;
    let mu = args.mu.unwrap_or(MuMode::Constant(1.0));
    let rule = gauss_rule(args.basis, n)?;
    let (data, _) = samples(args, &rule, Signal::Oscillatory)?;
    let mut t = Table::new(
        "sparsity",
        args,
        vec![
            "L",
            "lambda",
            "nnz_beta",
            "nnz_alpha",
            "occurrences",
            "identity_holds",
            "bound_holds",
            "unregularized_holds",
        ],
    )?;
    t.resolve("n", json!(n));
    t.resolve("mu", json!(mu));
    let mut failures = Vec::new();
    for l in degrees.lo..=degrees.hi {
        for &lambda in &lambdas {
            let penalty = mu.penalty(l, lambda)?;
            let result = fit(args.basis, l, &rule, data.values(), &penalty, Solver::L1)?;
            let r: SparsityReport = sparsity_report(&result.alpha, &result.beta, 0.0, lambda)?;
            if !r.identity_holds || !r.bound_holds || r.unregularized_holds == Some(false) {
                failures.push(format!("L={l} lambda={lambda}"));
            }
            t.push(vec![
                l.into(),
                lambda.into(),
                r.nnz_beta.into(),
                r.nnz_alpha.into(),
                r.zero_beta_nonzero_alpha.into(),
                r.identity_holds.into(),
                r.bound_holds.into(),
                r.unregularized_holds.into(),
            ]);
        }
    }
    if !failures.is_empty() {
        return Err(Error::Assertion(format!(
            "sparsity identities failed at {}",
            failures.join(", ")
        )));
    }
    Ok(t)
}

pub fn run_command(command: &Command) -> Result<Table> {
    match command {
        Command::Rule(a) => cmd_rule(a),
        Command::Fit(a) => cmd_fit(a),
        Command::Denoise(a) => cmd_denoise(a),
        Command::Lebesgue(a) => cmd_lebesgue(a),
        Command::Sparsity(a) => cmd_sparsity(a),
    }
}

/// Runs the command and writes its table to `--output` or stdout.
pub fn execute(cli: &Cli) -> Result<()> {
    let table = run_command(&cli.command)?;
    let args = cli.command.args();
    let text = table.render(args.format);
    match &args.output {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
