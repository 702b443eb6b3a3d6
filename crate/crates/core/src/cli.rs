//! Command-line front end.
//!
//! Every subcommand builds a report: a list of flat-ish records that is
//! rendered as text, one JSON object, or TSV. JSON and TSV come from the
//! same records, so their numeric payloads are identical.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::harmonic::{build_table, cross_check_integer_means, find_doublets, key_rows};
use crate::number::{ContinuedFraction, QuadraticSurd, Rational};
use crate::quadratic::{generalized_gm, metallic_mean, solve_quadratic, LinearSign, QuadraticSpec};
use crate::triangles::{diophantus_triple, table_one, RowSolutions, SideSelection};
use crate::trinomial::{
    solve_euler, solve_gm_general, solve_stakhov, solve_trinomial, EulerMode, LowerExponent,
    Root, RootSet, SolverConfig, StakhovVariant, TrinomialSpec,
};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(name = "metallic", version, about = "Generalized golden means, metallic means and related tables")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Fractional digits in rendered decimals (truncated, never rounded).
    #[arg(long, global = true, default_value_t = 10,
          value_parser = clap::value_parser!(u64).range(1..=crate::number::MAX_DECIMAL_DIGITS as u64))]
    digits: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for LinearSign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Plus => LinearSign::Plus,
            SignArg::Minus => LinearSign::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LowerArg {
    One,
    #[value(name = "n-1")]
    NMinusOne,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    A,
    B,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Direct,
    Constrained,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Both,
}

fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("invalid rational `{s}`"))?;
    let den: BigInt = den.parse().map_err(|_| format!("invalid rational `{s}`"))?;
    if den == BigInt::from(0) {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Rational::new(num, den))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Roots of x^n + x = m/2
    Solve {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Roots of x^n ± p·x^e = m/2 with e = 1 or n-1
    Mmf {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
        #[arg(long, value_enum)]
        sign: SignArg,
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value = "one")]
        lower: LowerArg,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Positive root of x^n + x = 1 (a) or x^n + x^(n-1) = 1 (b)
    Stakhov {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum)]
        variant: VariantArg,
    },
    /// Real b with (a + b^n)/n = x
    Euler {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        a: Rational,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        x: Rational,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
    /// Positive root of x^2 - p·x - q = 0
    Metallic {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        q: Rational,
        #[arg(long)]
        cf_terms: Option<usize>,
    },
    /// Rows of the generalized golden mean table
    Table1 {
        #[arg(long)]
        rows: u64,
        #[arg(long, value_enum, default_value = "both")]
        side: SideArg,
    },
    /// Diophantus triangles (2N+1, 2N(N+1), 2N(N+1)+1)
    Diophantus {
        #[arg(long)]
        count: u64,
    },
    /// Harmonic multiplication table, its doublets or its key
    Harmonic {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..=10_000))]
        size: u64,
        #[arg(long, conflicts_with = "key")]
        doublets: bool,
        #[arg(long)]
        key: Option<u64>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the selected subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: rendered, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: rendered },
            };
        }
    };
    match execute(&cli) {
        Ok(report) => Outcome {
            code: EXIT_OK,
            stdout: report.render(cli.format),
            stderr: String::new(),
        },
        Err(err) => err.into(),
    }
}

struct Report {
    command: &'static str,
    inputs: Map<String, Value>,
    results: Vec<Map<String, Value>>,
    text: Vec<String>,
}

impl Report {
    fn new(command: &'static str, inputs: Value) -> Self {
        let inputs = match inputs {
            Value::Object(map) => map,
            _ => Map::new(),
        };
        Report { command, inputs, results: Vec::new(), text: Vec::new() }
    }

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => {
                let mut out = self.text.join("\n");
                out.push('\n');
                out
            }
            OutputFormat::Json => {
                let doc = json!({
                    "command": self.command,
                    "inputs": self.inputs,
                    "results": self.results,
                    "errors": [],
                });
                let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
                out.push('\n');
                out
            }
            OutputFormat::Tsv => self.render_tsv(),
        }
    }

    fn render_tsv(&self) -> String {
        let rows: Vec<Vec<(String, String)>> = self
            .results
            .iter()
            .map(|rec| {
                let mut cells = Vec::new();
                for (k, v) in rec {
                    flatten(k, v, &mut cells);
                }
                cells
            })
            .collect();
        let mut columns: Vec<String> = Vec::new();
        for row in &rows {
            for (k, _) in row {
                if !columns.contains(k) {
                    columns.push(k.clone());
                }
            }
        }
        let mut out = columns.join("\t");
        out.push('\n');
        for row in &rows {
            let line: Vec<&str> = columns
                .iter()
                .map(|c| row.iter().find(|(k, _)| k == c).map_or("", |(_, v)| v.as_str()))
                .collect();
            out.push_str(&line.join("\t"));
            out.push('\n');
        }
        out
    }
}

fn flatten(key: &str, value: &Value, out: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&format!("{key}.{k}"), v, out);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{key}.{i}"), v, out);
            }
        }
        Value::Null => out.push((key.to_string(), String::new())),
        Value::String(s) => out.push((key.to_string(), s.replace(['\t', '\n'], " "))),
        other => out.push((key.to_string(), other.to_string())),
    }
}

fn big_int(v: &BigInt) -> Value {
    v.to_i64().map(Value::from).unwrap_or_else(|| Value::String(v.to_string()))
}

fn big_uint(v: &BigUint) -> Value {
    v.to_u64().map(Value::from).unwrap_or_else(|| Value::String(v.to_string()))
}

fn surd_json(s: &QuadraticSurd) -> Value {
    json!({
        "a_num": big_int(s.rat().numer()),
        "a_den": big_int(s.rat().denom()),
        "b_num": big_int(s.coeff().numer()),
        "b_den": big_int(s.coeff().denom()),
        "d": s.radicand(),
    })
}

/// Exact truncated expansion of a binary64 value.
fn float_decimal(v: f64, digits: usize) -> String {
    match Rational::from_float(v) {
        Some(r) => QuadraticSurd::from_rational(r).to_decimal(digits),
        None => v.to_string(),
    }
}

fn config(tol: Option<f64>) -> Result<SolverConfig> {
    let mut cfg = SolverConfig::default();
    if let Some(t) = tol {
        cfg.tolerance = t;
    }
    cfg.validate()?;
    Ok(cfg)
}

struct RootLine<'a> {
    label: String,
    root: &'a Root,
    exact: Option<&'a QuadraticSurd>,
    satisfactory: Option<bool>,
}

/// Labels roots x1, x2, … from the largest down and attaches exact values
/// (given largest first) when the counts agree.
fn root_lines<'a>(
    prefix: &str,
    set: &'a RootSet,
    exact: &'a [QuadraticSurd],
    mark_satisfactory: bool,
) -> Vec<RootLine<'a>> {
    let positive = set.positive().map(|r| r.value);
    let attach = exact.len() == set.roots.len();
    set.roots
        .iter()
        .rev()
        .enumerate()
        .map(|(i, root)| RootLine {
            label: format!("{prefix}{}", i + 1),
            root,
            exact: if attach { exact.get(i) } else { None },
            satisfactory: mark_satisfactory.then(|| Some(root.value) == positive),
        })
        .collect()
}

fn push_roots(report: &mut Report, lines: &[RootLine<'_>], digits: usize, extra: &Map<String, Value>) {
    for line in lines {
        let decimal = match line.exact {
            Some(s) => s.to_decimal(digits),
            None => float_decimal(line.root.value, digits),
        };
        let mut rec = Map::new();
        rec.insert("label".into(), json!(line.label));
        rec.insert("value".into(), json!(line.root.value));
        rec.insert("decimal".into(), json!(decimal));
        rec.insert("bracket".into(), json!([line.root.bracket.0, line.root.bracket.1]));
        rec.insert("residual".into(), json!(line.root.residual));
        rec.insert("iterations".into(), json!(line.root.iterations));
        if let Some(sat) = line.satisfactory {
            rec.insert("satisfactory".into(), json!(sat));
        }
        if let Some(s) = line.exact {
            rec.insert("exact".into(), surd_json(s));
            rec.insert("exact_form".into(), json!(s.to_string()));
        }
        for (k, v) in extra {
            rec.insert(k.clone(), v.clone());
        }
        report.results.push(rec);

        let mut text = format!("{} = {decimal}", line.label);
        if line.satisfactory == Some(true) {
            text.push_str(" (satisfactory)");
        }
        if let Some(s) = line.exact {
            text.push_str(&format!("  exact: {s}"));
        }
        report.text.push(text);
    }
}

fn exact_pair(p: u64, m: u64, sign: LinearSign) -> Result<Vec<QuadraticSurd>> {
    let q = Rational::new(BigInt::from(m), BigInt::from(2));
    let pair = solve_quadratic(&QuadraticSpec::new(p, q, sign)?)?;
    Ok(vec![pair.x1, pair.x2])
}

fn execute(cli: &Cli) -> Result<Report> {
    let digits = cli.digits as usize;
    match &cli.command {
        Command::Solve { n, m, tol } => {
            let cfg = config(*tol)?;
            let set = solve_gm_general(*n, *m, &cfg)?;
            let mut report = Report::new(
                "solve",
                json!({ "n": n, "m": m, "tol": cfg.tolerance, "digits": digits }),
            );
            report.text.push(format!("x^{n} + x = {m}/2"));
            let mut extra = Map::new();
            let exact = if *n == 2 {
                let gm = generalized_gm(*m)?;
                extra.insert("r".into(), json!(gm.r));
                report.text.push(format!("r = {}", gm.r));
                vec![gm.roots.x1, gm.roots.x2]
            } else {
                Vec::new()
            };
            let lines = root_lines("x", &set, &exact, true);
            push_roots(&mut report, &lines, digits, &extra);
            Ok(report)
        }
        Command::Mmf { n, p, sign, m, lower, tol } => {
            let cfg = config(*tol)?;
            let lower = match lower {
                LowerArg::One => LowerExponent::One,
                LowerArg::NMinusOne => LowerExponent::NMinusOne,
            };
            let spec = TrinomialSpec::new(*n, *p, (*sign).into(), *m, lower)?;
            let set = solve_trinomial(&spec, &cfg)?;
            let mut report = Report::new(
                "mmf",
                json!({
                    "n": n, "p": p, "sign": spec.sign().as_str(), "m": m,
                    "lower": lower.as_str(), "tol": cfg.tolerance, "digits": digits,
                }),
            );
            let op = if spec.sign() == LinearSign::Plus { '+' } else { '-' };
            let e = match lower {
                LowerExponent::One => "x".to_string(),
                LowerExponent::NMinusOne => format!("x^{}", n - 1),
            };
            report.text.push(format!("x^{n} {op} {p}·{e} = {m}/2"));
            let exact = if *n == 2 { exact_pair(*p, *m, spec.sign())? } else { Vec::new() };
            let lines = root_lines("x", &set, &exact, false);
            push_roots(&mut report, &lines, digits, &Map::new());
            Ok(report)
        }
        Command::Stakhov { n, variant } => {
            let variant = match variant {
                VariantArg::A => StakhovVariant::A,
                VariantArg::B => StakhovVariant::B,
            };
            let (name, equation) = match variant {
                StakhovVariant::A => ("a", format!("x^{n} + x = 1")),
                StakhovVariant::B => ("b", format!("x^{n} + x^{} = 1", n - 1)),
            };
            let x = solve_stakhov(*n, variant, &SolverConfig::default())?;
            let decimal = float_decimal(x, digits);
            let mut report = Report::new("stakhov", json!({ "n": n, "variant": name, "digits": digits }));
            let mut rec = Map::new();
            rec.insert("value".into(), json!(x));
            rec.insert("decimal".into(), json!(decimal));
            report.results.push(rec);
            report.text.push(equation);
            report.text.push(format!("x = {decimal}"));
            Ok(report)
        }
        Command::Euler { a, n, x, mode } => {
            let mode = match mode {
                ModeArg::Direct => EulerMode::Direct,
                ModeArg::Constrained => EulerMode::Constrained,
            };
            let set = solve_euler(a, *n, x, mode, &SolverConfig::default())?;
            let mode_name = match mode {
                EulerMode::Direct => "direct",
                EulerMode::Constrained => "constrained",
            };
            let mut report = Report::new(
                "euler",
                json!({
                    "a": a.to_string(), "n": n, "x": x.to_string(),
                    "mode": mode_name, "digits": digits,
                }),
            );
            report.text.push(match mode {
                EulerMode::Direct => format!("({a} + b^{n})/{n} = {x}"),
                EulerMode::Constrained => format!("(b + b^{n})/{n} = {x}"),
            });
            if set.roots.is_empty() {
                report.text.push("no real solutions".into());
            }
            let lines = root_lines("b", &set, &[], false);
            push_roots(&mut report, &lines, digits, &Map::new());
            Ok(report)
        }
        Command::Metallic { p, q, cf_terms } => {
            let value = metallic_mean(*p, q)?;
            let decimal = value.to_decimal(digits);
            let mut report = Report::new(
                "metallic",
                json!({ "p": p, "q": q.to_string(), "cf_terms": cf_terms, "digits": digits }),
            );
            let mut rec = Map::new();
            rec.insert("value".into(), json!(value.to_f64()));
            rec.insert("decimal".into(), json!(decimal));
            rec.insert("exact".into(), surd_json(&value));
            rec.insert("exact_form".into(), json!(value.to_string()));
            report.text.push(format!("x^2 - {p}·x - {q} = 0"));
            report.text.push(format!("x = {decimal}  exact: {value}"));
            if let Some(k) = cf_terms {
                let cf = ContinuedFraction::of(&value, *k)?;
                rec.insert(
                    "cf".into(),
                    json!({
                        "initial": cf.initial_terms().iter().map(big_uint).collect::<Vec<_>>(),
                        "period": cf.periodic_part().iter().map(big_uint).collect::<Vec<_>>(),
                        "truncated": cf.is_truncated(),
                    }),
                );
                report.text.push(format!("continued fraction: {cf}"));
            }
            report.results.push(rec);
            Ok(report)
        }
        Command::Table1 { rows, side } => {
            let selection = match side {
                SideArg::Left => SideSelection::Left,
                SideArg::Right => SideSelection::Right,
                SideArg::Both => SideSelection::Both,
            };
            let table = table_one(*rows, selection)?;
            let side_name = match side {
                SideArg::Left => "left",
                SideArg::Right => "right",
                SideArg::Both => "both",
            };
            let mut report = Report::new("table1", json!({ "rows": rows, "side": side_name }));
            for row in &table {
                let (x1, x2, text_roots) = match &row.solutions {
                    RowSolutions::Integers(a, b) => (
                        json!(a),
                        json!(b),
                        format!("{a}^2 + {b}^2 = {}  ({a} + {b})^2 = {}", row.h, (a + b) * (a + b)),
                    ),
                    RowSolutions::Surds(pair) => (
                        json!(pair.x1.to_string()),
                        json!(pair.x2.to_string()),
                        format!("x1^2 + x2^2 = {}  (|x1| + |x2|)^2 = {}", row.h, row.r),
                    ),
                };
                let mut rec = Map::new();
                rec.insert("side".into(), json!(row.side.as_str()));
                rec.insert("index".into(), json!(row.index));
                rec.insert("x1".into(), x1);
                rec.insert("x2".into(), x2);
                rec.insert("h".into(), json!(row.h));
                rec.insert("m".into(), json!(row.m));
                rec.insert("r".into(), json!(row.r));
                report.results.push(rec);
                report.text.push(format!(
                    "{:<5} {:>3}. {text_roots}  h = {}  m = {}  √r = √{}",
                    row.side.as_str(),
                    row.index,
                    row.h,
                    row.m,
                    row.r
                ));
            }
            Ok(report)
        }
        Command::Diophantus { count } => {
            let mut report = Report::new("diophantus", json!({ "count": count }));
            for n in 0..*count {
                let t = diophantus_triple(n);
                let mut rec = Map::new();
                rec.insert("a".into(), big_uint(&t.a));
                rec.insert("b".into(), big_uint(&t.b));
                rec.insert("c".into(), big_uint(&t.c));
                report.results.push(rec);
                report.text.push(format!("{}^2 = {}^2 + {}^2", t.c, t.b, t.a));
            }
            Ok(report)
        }
        Command::Harmonic { size, doublets, key } => {
            let table = build_table(*size as usize)?;
            let mut report = Report::new(
                "harmonic",
                json!({ "size": size, "doublets": doublets, "key": key }),
            );
            if let Some(k_max) = key {
                for row in key_rows(*k_max) {
                    let mut rec = Map::new();
                    rec.insert("k".into(), json!(row.k));
                    rec.insert("square_plus".into(), json!(row.square_plus));
                    rec.insert("product".into(), json!(row.product));
                    report.results.push(rec);
                    report.text.push(format!(
                        "({k} × {k}) + {k} = {}   {k} × {} = {}",
                        row.square_plus,
                        row.k + 1,
                        row.product,
                        k = row.k
                    ));
                }
            } else if *doublets {
                let pairs = cross_check_integer_means(&table)?;
                for (d, (q, pair)) in find_doublets(&table).iter().zip(pairs) {
                    let mut rec = Map::new();
                    rec.insert("q".into(), json!(q));
                    rec.insert("k".into(), json!(d.k));
                    rec.insert("positions".into(), json!(d.positions));
                    rec.insert("pair".into(), json!([pair.0, pair.1]));
                    report.results.push(rec);
                    report.text.push(format!(
                        "{q}-{q} at ({},{}) and ({},{})  integer metallic mean ({}, {})",
                        d.positions[0].0, d.positions[0].1, d.positions[1].0, d.positions[1].1, pair.0, pair.1
                    ));
                }
            } else {
                let width = table.get(table.size() - 1, table.size() - 1).unwrap_or(0).to_string().len();
                for (i, row) in table.cells().iter().enumerate() {
                    let mut rec = Map::new();
                    rec.insert("row".into(), json!(i));
                    rec.insert("cells".into(), json!(row));
                    report.results.push(rec);
                    let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                    report.text.push(cells.join(" "));
                }
            }
            Ok(report)
        }
    }
}

impl From<Error> for Outcome {
    fn from(err: Error) -> Self {
        Outcome {
            code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: format!("error: {}: {}\n", err.reason(), err),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &str) -> Outcome {
        run(std::iter::once("metallic").chain(args.split_whitespace()))
    }

    #[test]
    fn solve_golden_text() {
        let out = run_args("solve --n 2 --m 2 --digits 7 --format text");
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("x1 = 0.6180339 (satisfactory)"), "{}", out.stdout);
        assert!(out.stdout.contains("x2 = -1.6180339"));
        assert!(out.stdout.contains("r = 5"));
        assert!(out.stdout.contains("(-1 + √5)/2"));
    }

    #[test]
    fn diophantus_tsv() {
        let out = run_args("diophantus --count 7 --format tsv");
        assert_eq!(out.code, 0);
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert_eq!(lines[0], "a\tb\tc");
        assert_eq!(*lines.last().unwrap(), "13\t84\t85");
        assert_eq!(lines.len(), 8);
    }

    #[test]
    fn degenerate_exit_code() {
        let out = run_args("mmf --n 1 --p 1 --sign minus --m 4");
        assert_eq!(out.code, 2);
        assert!(out.stdout.is_empty());
        assert!(out.stderr.starts_with("error: degenerate-identity:"));
        assert_eq!(out.stderr.lines().count(), 1);
    }

    #[test]
    fn usage_errors() {
        let out = run_args("frobnicate");
        assert_eq!(out.code, 1);
        assert!(out.stdout.is_empty());
        let out = run_args("solve --n 2 --m 2 --bogus");
        assert_eq!(out.code, 1);
        let out = run_args("solve --n 2");
        assert_eq!(out.code, 1);
        let out = run_args("harmonic --doublets --key 3");
        assert_eq!(out.code, 1);
        let out = run_args("solve --n 2 --m 2 --digits 0");
        assert_eq!(out.code, 1);
        let out = run_args("--help");
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("solve"));
    }

    #[test]
    fn domain_errors() {
        let out = run_args("euler --a 3 --n 2 --x 1 --mode direct");
        assert_eq!(out.code, 2);
        assert!(out.stderr.starts_with("error: no-real-root:"));
        let out = run_args("metallic --p 1 --q -1");
        assert_eq!(out.code, 2);
        assert!(out.stderr.starts_with("error: invalid-parameter:"));
    }

    #[test]
    fn json_document_shape() {
        let out = run_args("solve --n 2 --m 2 --format json");
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        let obj = doc.as_object().unwrap();
        let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        assert_eq!(keys, ["command", "inputs", "results", "errors"]);
        let first = &doc["results"][0];
        assert_eq!(first["exact"], json!({"a_num": -1, "a_den": 2, "b_num": 1, "b_den": 2, "d": 5}));
        assert_eq!(first["satisfactory"], json!(true));
        assert_eq!(first["decimal"], json!("0.6180339887"));
        assert_eq!(first["bracket"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn other_subcommands_run() {
        for args in [
            "mmf --n 3 --p 2 --sign minus --m 1",
            "mmf --n 4 --p 1 --sign plus --m 2 --lower n-1",
            "stakhov --n 3 --variant b",
            "euler --a 1/3 --n 3 --x -2 --mode constrained",
            "metallic --p 3 --q 1 --cf-terms 20",
            "table1 --rows 6 --side both",
            "harmonic --size 10",
            "harmonic --size 10 --doublets",
            "harmonic --key 9",
        ] {
            for fmt in ["text", "json", "tsv"] {
                let out = run_args(&format!("{args} --format {fmt}"));
                assert_eq!(out.code, 0, "{args}: {}", out.stderr);
                assert!(!out.stdout.is_empty());
            }
        }
    }

    #[test]
    fn metallic_output() {
        let out = run_args("metallic --p 2 --q 1 --cf-terms 10 --digits 7");
        assert!(out.stdout.contains("x = 2.4142135  exact: 1 + √2"), "{}", out.stdout);
        assert!(out.stdout.contains("continued fraction: [2; (2)]"));
    }

    #[test]
    fn harmonic_key_text() {
        let out = run_args("harmonic --key 9");
        assert!(out.stdout.contains("(7 × 7) + 7 = 56   7 × 8 = 56"));
        assert!(out.stdout.contains("(9 × 9) + 9 = 90"));
    }

    #[test]
    fn stakhov_output() {
        let out = run_args("stakhov --n 3 --variant a");
        assert!(out.stdout.contains("x = 0.6823278038"), "{}", out.stdout);
    }

    #[test]
    fn deterministic() {
        let a = run_args("solve --n 5 --m 7 --format json");
        let b = run_args("solve --n 5 --m 7 --format json");
        assert_eq!(a, b);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("2/4").unwrap(), Rational::new(1.into(), 2.into()));
        assert_eq!(parse_rational("-3").unwrap(), Rational::from_integer((-3).into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
