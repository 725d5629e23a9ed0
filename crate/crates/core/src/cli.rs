//! Command-line front end: `compute`, `sweep` and `verify`.
//!
//! Exit codes: 0 on success, 1 on argument or I/O errors, 2 when `verify`
//! finds a deviation above tolerance.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::analytic::{self, CorrelationReport};
use crate::angular::TwiceJ;
use crate::error::{Error, Result};
use crate::oracle::{self, GridSpec};
use crate::states::Su2InvariantState;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "su2-discord", version, about = "Quantum discord of SU(2)-invariant spin-j x spin-1/2 states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every measure at a single (2j, F) point.
    Compute(ComputeArgs),
    /// Tabulate measures over a grid of F for several spins.
    Sweep(SweepArgs),
    /// Check the closed-form discord against brute-force measurement optimization.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Twice the spin of the larger subsystem (2j >= 1).
    #[arg(long = "two-j")]
    pub two_j: u32,
    /// Weight of the J = j - 1/2 multiplet, in [0, 1].
    #[arg(long = "f")]
    pub f: f64,
    #[arg(long, value_enum, default_value_t = ComputeFormat::Text)]
    pub format: ComputeFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComputeFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFormat {
    Csv,
    Json,
}

/// Columns a sweep can emit, in output order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Mutual,
    Classical,
    Discord,
    #[value(name = "discord_large_j")]
    DiscordLargeJ,
    Eof,
    Negativity,
}

impl Quantity {
    pub const DEFAULT: [Quantity; 5] = [
        Quantity::Mutual,
        Quantity::Classical,
        Quantity::Discord,
        Quantity::Eof,
        Quantity::Negativity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::Mutual => "mutual",
            Quantity::Classical => "classical",
            Quantity::Discord => "discord",
            Quantity::DiscordLargeJ => "discord_large_j",
            Quantity::Eof => "eof",
            Quantity::Negativity => "negativity",
        }
    }

    pub fn evaluate(self, s: &Su2InvariantState) -> f64 {
        match self {
            Quantity::Mutual => analytic::mutual_information(s),
            Quantity::Classical => analytic::classical_correlations(s),
            Quantity::Discord => analytic::quantum_discord(s),
            Quantity::DiscordLargeJ => analytic::discord_large_j(s),
            Quantity::Eof => analytic::entanglement_of_formation(s),
            Quantity::Negativity => oracle::negativity(&s.build_product_basis()),
        }
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Comma-separated list of 2j values.
    #[arg(long = "two-j", value_delimiter = ',', required = true)]
    pub two_j: Vec<u32>,
    #[arg(long, default_value_t = 0.0)]
    pub f_start: f64,
    #[arg(long, default_value_t = 1.0)]
    pub f_end: f64,
    #[arg(long, default_value_t = 101)]
    pub f_steps: usize,
    /// Comma-separated subset of columns (default: all but discord_large_j).
    #[arg(long, value_enum, value_delimiter = ',')]
    pub quantities: Option<Vec<Quantity>>,
    #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
    pub format: SweepFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "two-j", value_delimiter = ',', default_values_t = [1u32, 2, 3, 4, 9])]
    pub two_j: Vec<u32>,
    #[arg(long, default_value_t = 11)]
    pub f_steps: usize,
    /// Polar rings of the measurement grid; the azimuthal count is twice this.
    #[arg(long, default_value_t = 64)]
    pub grid: usize,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

/// Validated sweep parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub two_j_list: Vec<TwiceJ>,
    pub f_start: f64,
    pub f_end: f64,
    pub f_steps: usize,
    pub quantities: Vec<Quantity>,
    pub format: SweepFormat,
    pub out: Option<PathBuf>,
}

impl SweepConfig {
    pub fn from_args(args: &SweepArgs) -> Result<Self> {
        let two_j_list = args
            .two_j
            .iter()
            .map(|&v| TwiceJ::new(v))
            .collect::<Result<Vec<_>>>()?;
        let in_unit = |x: f64| (0.0..=1.0).contains(&x);
        if !in_unit(args.f_start) || !in_unit(args.f_end) || args.f_start > args.f_end {
            return Err(Error::InvalidArgument(format!(
                "need 0 <= f-start <= f-end <= 1, got [{}, {}]",
                args.f_start, args.f_end
            )));
        }
        if args.f_steps < 2 {
            return Err(Error::InvalidArgument("f-steps must be at least 2".into()));
        }
        let mut quantities = args.quantities.clone().unwrap_or_else(|| Quantity::DEFAULT.to_vec());
        quantities.sort();
        quantities.dedup();
        Ok(Self {
            two_j_list,
            f_start: args.f_start,
            f_end: args.f_end,
            f_steps: args.f_steps,
            quantities,
            format: args.format,
            out: args.out.clone(),
        })
    }

    pub fn f_grid(&self) -> Vec<f64> {
        linspace(self.f_start, self.f_end, self.f_steps)
    }

    pub fn header(&self) -> Vec<&'static str> {
        ["two_j", "F"]
            .into_iter()
            .chain(self.quantities.iter().map(|q| q.name()))
            .collect()
    }
}

/// `steps` evenly spaced points with both endpoints hit exactly.
pub fn linspace(start: f64, end: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![start],
        _ => (0..steps)
            .map(|i| {
                if i == steps - 1 {
                    end
                } else {
                    start + (end - start) * i as f64 / (steps - 1) as f64
                }
            })
            .collect(),
    }
}

/// Formats with 15 significant digits, fixed notation for moderate
/// exponents and scientific otherwise; trailing zeros are trimmed.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        let fixed = format!("{x:.decimals$}");
        if fixed.contains('.') {
            fixed.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            fixed
        }
    } else {
        let mantissa = if mantissa.contains('.') {
            mantissa.trim_end_matches('0').trim_end_matches('.')
        } else {
            mantissa
        };
        format!("{mantissa}e{exp}")
    }
}

fn round_sig(x: f64) -> f64 {
    format_number(x).parse().unwrap_or(x)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub two_j: u32,
    #[serde(rename = "F")]
    pub f: f64,
    #[serde(flatten)]
    pub values: std::collections::BTreeMap<&'static str, f64>,
}

/// Evaluates the sweep; rows come back ordered by `(2j, F)`.
pub fn run_sweep(config: &SweepConfig) -> Vec<SweepRow> {
    let mut js = config.two_j_list.clone();
    js.sort();
    let fs = config.f_grid();
    let points: Vec<(TwiceJ, f64)> = js
        .iter()
        .flat_map(|&j| fs.iter().map(move |&f| (j, f)))
        .collect();
    points
        .par_iter()
        .map(|&(j, f)| {
            let s = Su2InvariantState::new(j, f).expect("validated grid");
            SweepRow {
                two_j: j.get(),
                f,
                values: config.quantities.iter().map(|&q| (q.name(), q.evaluate(&s))).collect(),
            }
        })
        .collect()
}

pub fn render_csv(config: &SweepConfig, rows: &[SweepRow]) -> String {
    let mut out = config.header().join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.two_j.to_string());
        out.push(',');
        out.push_str(&format_number(row.f));
        for q in &config.quantities {
            out.push(',');
            out.push_str(&format_number(row.values[q.name()]));
        }
        out.push('\n');
    }
    out
}

pub fn render_json(rows: &[SweepRow]) -> String {
    let rounded: Vec<SweepRow> = rows
        .iter()
        .map(|r| SweepRow {
            two_j: r.two_j,
            f: round_sig(r.f),
            values: r.values.iter().map(|(&k, &v)| (k, round_sig(v))).collect(),
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&rounded).expect("rows serialize");
    s.push('\n');
    s
}

fn render_report_text(r: &CorrelationReport) -> String {
    let rows = [
        ("two_j", r.two_j.to_string()),
        ("F", format_number(r.f)),
        ("mutual", format_number(r.mutual)),
        ("classical", format_number(r.classical)),
        ("discord", format_number(r.discord)),
        ("eof", format_number(r.eof)),
        ("negativity", format_number(r.negativity)),
    ];
    rows.iter().map(|(k, v)| format!("{k:<12}{v}\n")).collect()
}

fn render_report_json(r: &CorrelationReport) -> String {
    let rounded = CorrelationReport {
        two_j: r.two_j,
        f: round_sig(r.f),
        mutual: round_sig(r.mutual),
        classical: round_sig(r.classical),
        discord: round_sig(r.discord),
        eof: round_sig(r.eof),
        negativity: round_sig(r.negativity),
    };
    let mut s = serde_json::to_string_pretty(&rounded).expect("report serializes");
    s.push('\n');
    s
}

/// Per-spin verification summary.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyLine {
    pub two_j: u32,
    pub max_deviation: f64,
    pub max_spread: f64,
}

pub fn run_verify(two_j: &[TwiceJ], f_steps: usize, grid: GridSpec) -> Result<Vec<VerifyLine>> {
    let fs = linspace(0.0, 1.0, f_steps);
    two_j
        .iter()
        .map(|&j| {
            let mut max_deviation = 0.0f64;
            let mut max_spread = 0.0f64;
            for &f in &fs {
                let s = Su2InvariantState::new(j, f)?;
                let numeric = oracle::numeric_discord_with(&s.build_product_basis(), grid)?;
                max_deviation = max_deviation.max((numeric.discord - analytic::quantum_discord(&s)).abs());
                max_spread = max_spread.max(numeric.minimization.spread);
            }
            Ok(VerifyLine {
                two_j: j.get(),
                max_deviation,
                max_spread,
            })
        })
        .collect()
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::InvalidArgument(format!("cannot write output: {e}"))),
    }
}

fn compute(args: &ComputeArgs, stdout: &mut dyn Write) -> Result<i32> {
    let s = Su2InvariantState::from_two_j(args.two_j, args.f)?;
    let report = CorrelationReport::evaluate(&s);
    let text = match args.format {
        ComputeFormat::Text => render_report_text(&report),
        ComputeFormat::Json => render_report_json(&report),
    };
    emit(&args.out, &text, stdout)?;
    Ok(EXIT_OK)
}

fn sweep(args: &SweepArgs, stdout: &mut dyn Write) -> Result<i32> {
    let config = SweepConfig::from_args(args)?;
    let rows = run_sweep(&config);
    let text = match config.format {
        SweepFormat::Csv => render_csv(&config, &rows),
        SweepFormat::Json => render_json(&rows),
    };
    emit(&config.out, &text, stdout)?;
    Ok(EXIT_OK)
}

fn verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<i32> {
    if !(args.tol > 0.0) {
        return Err(Error::InvalidArgument("tol must be positive".into()));
    }
    if args.f_steps < 2 {
        return Err(Error::InvalidArgument("f-steps must be at least 2".into()));
    }
    let js = args.two_j.iter().map(|&v| TwiceJ::new(v)).collect::<Result<Vec<_>>>()?;
    let grid = GridSpec::square(args.grid)?;
    let lines = run_verify(&js, args.f_steps, grid)?;
    let mut text = format!(
        "grid {}x{}, {} F points, tolerance {:e}\n",
        grid.n_theta, grid.n_phi, args.f_steps, args.tol
    );
    let mut ok = true;
    for line in &lines {
        let pass = line.max_deviation <= args.tol;
        ok &= pass;
        text.push_str(&format!(
            "2j={:<4} max|D_numeric - D_closed|={:.3e}  landscape spread={:.3e}  {}\n",
            line.two_j,
            line.max_deviation,
            line.max_spread,
            if pass { "ok" } else { "FAIL" }
        ));
    }
    text.push_str(if ok { "verification passed\n" } else { "verification FAILED\n" });
    emit(&None, &text, stdout)?;
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Compute(a) => compute(a, stdout),
        Command::Sweep(a) => sweep(a, stdout),
        Command::Verify(a) => verify(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("su2-discord").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(0.5), "0.5");
        assert_eq!(format_number(0.874_185_416_306_088_9), "0.874185416306089");
        assert_eq!(format_number(2.0 / 3.0), "0.666666666666667");
        assert_eq!(format_number(1.234e-7), "1.234e-7");
        assert_eq!(format_number(-2.220446049250313e-16), "-2.22044604925031e-16");
        assert_eq!(format_number(123.456), "123.456");
        for x in [0.1, 1.0 / 3.0, 7.77e-9, 42.0, 0.01] {
            let back: f64 = format_number(x).parse().unwrap();
            assert!((back - x).abs() <= 1e-14 * x.abs());
        }
    }

    #[test]
    fn linspace_hits_endpoints() {
        let g = linspace(0.0, 1.0, 11);
        assert_eq!(g.len(), 11);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[10], 1.0);
        assert_eq!(g[5], 0.5);
        assert_eq!(linspace(0.2, 0.2, 3), vec![0.2, 0.2, 0.2]);
    }

    #[test]
    fn sweep_config_validation() {
        let base = || SweepArgs {
            two_j: vec![1],
            f_start: 0.0,
            f_end: 1.0,
            f_steps: 5,
            quantities: None,
            format: SweepFormat::Csv,
            out: None,
        };
        assert!(SweepConfig::from_args(&base()).is_ok());
        assert!(SweepConfig::from_args(&SweepArgs { two_j: vec![0], ..base() }).is_err());
        assert!(SweepConfig::from_args(&SweepArgs { f_start: 0.8, f_end: 0.2, ..base() }).is_err());
        assert!(SweepConfig::from_args(&SweepArgs { f_end: 1.2, ..base() }).is_err());
        assert!(SweepConfig::from_args(&SweepArgs { f_steps: 1, ..base() }).is_err());
        let c = SweepConfig::from_args(&SweepArgs {
            quantities: Some(vec![Quantity::Eof, Quantity::Discord, Quantity::Eof]),
            ..base()
        })
        .unwrap();
        assert_eq!(c.header(), vec!["two_j", "F", "discord", "eof"]);
        let c = SweepConfig::from_args(&base()).unwrap();
        assert_eq!(c.header().join(","), "two_j,F,mutual,classical,discord,eof,negativity");
    }

    #[test]
    fn compute_singlet_text_and_json() {
        let (code, out, _) = run_capture(&["compute", "--two-j", "1", "--f", "1.0"]);
        assert_eq!(code, 0);
        assert!(out.contains("discord     1\n"), "{out}");
        let (code, out, _) = run_capture(&["compute", "--two-j", "1", "--f", "1.0", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["discord"].as_f64().unwrap() - 1.0).abs() < 1e-12);
        assert!((v["eof"].as_f64().unwrap() - 1.0).abs() < 1e-12);
        assert!((v["negativity"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn compute_rejects_bad_input() {
        assert_eq!(run_capture(&["compute", "--two-j", "1", "--f", "1.5"]).0, 1);
        assert_eq!(run_capture(&["compute", "--two-j", "0", "--f", "0.5"]).0, 1);
        assert_eq!(run_capture(&["compute", "--two-j", "x", "--f", "0.5"]).0, 1);
        assert_eq!(run_capture(&["frobnicate"]).0, 1);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn sweep_csv_shape() {
        let (code, out, _) = run_capture(&["sweep", "--two-j", "3,1", "--f-steps", "5", "--quantities", "discord,eof"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "two_j,F,discord,eof");
        assert_eq!(lines.len(), 1 + 2 * 5);
        assert!(lines[1].starts_with("1,0,"));
        assert!(lines[10].starts_with("3,1,"));
    }

    #[test]
    fn sweep_json() {
        let (code, out, _) = run_capture(&["sweep", "--two-j", "1", "--f-steps", "3", "--format", "json", "--quantities", "discord_large_j"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows[1].get("discord_large_j").is_some());
        assert_eq!(rows[2]["F"], 1.0);
    }

    #[test]
    fn verify_rejects_non_positive_tolerance() {
        assert_eq!(run_capture(&["verify", "--tol", "0"]).0, 1);
        assert_eq!(run_capture(&["verify", "--grid", "4"]).0, 1);
    }
}
