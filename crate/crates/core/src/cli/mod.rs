//! `lagasym` command-line front end.
//!
//! Every subcommand renders its whole output in memory first, so an error
//! never leaves a partial file behind and repeated runs are byte-identical.

mod coeffs;
mod parse;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::buchholz::{ExpansionError, HalfPlane};
use crate::numerics::{
    compare_grid, eval_bessel_series, goal_slopes_ranked, laguerre_oracle, outer_slope, perron_slope, ratio_rows,
    ratio_slope, write_comparison_csv, ComparisonRow, CsvError, CutComplex, Evaluator, GoalTable, GoalTruncation,
    NumericsError, OuterForm, OuterTable, PerronTable,
};
use crate::ratio::{ExpVariant, RatioSpec};

pub use coeffs::{coefficient_table, CoeffEntry, CoeffTable, Family};
pub use parse::{parse_exact_rational, parse_n_list};

/// Environment variable for the default output directory.
pub const OUT_DIR_ENV: &str = "LAGASYM_OUT_DIR";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Serialize(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] CsvError),
}

impl CliError {
    /// 2 for configuration problems, 3 for numerical-consistency failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io { .. } => 2,
            CliError::Numerics(NumericsError::Domain(_)) => 2,
            CliError::Numerics(_) => 3,
            CliError::Expansion(ExpansionError::Invalid(_)) => 2,
            CliError::Expansion(_) => 3,
            CliError::Serialize(_) | CliError::Csv(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            2 => "config",
            _ => "numerical",
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({
            "error": self.kind(),
            "exit_code": self.exit_code(),
            "message": self.to_string(),
        })
        .to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum HalfPlaneArg {
    Upper,
    Lower,
    #[default]
    Auto,
}

impl HalfPlaneArg {
    fn choice(self) -> Option<HalfPlane> {
        match self {
            HalfPlaneArg::Upper => Some(HalfPlane::Upper),
            HalfPlaneArg::Lower => Some(HalfPlane::Lower),
            HalfPlaneArg::Auto => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum ExpVariantArg {
    N,
    #[default]
    Kappa,
}

impl From<ExpVariantArg> for ExpVariant {
    fn from(v: ExpVariantArg) -> Self {
        match v {
            ExpVariantArg::N => ExpVariant::N,
            ExpVariantArg::Kappa => ExpVariant::Kappa,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EvalMethod {
    Oracle,
    Series,
    Goal,
    GoalStaggered,
    Outer,
    Perron,
}

#[derive(Debug, Parser)]
#[command(name = "lagasym", version, about = "Laguerre asymptotic expansions: exact coefficients and numerical checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output file; `-` for stdout. Defaults to a file in $LAGASYM_OUT_DIR or `.`.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, ignore_case = true)]
    pub format: Option<Format>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact coefficient tables.
    Coeffs(CoeffsArgs),
    /// Evaluate one expansion on a grid of (n, z).
    Eval(EvalArgs),
    /// Oracle, convergent series and the expansion forms side by side.
    Compare(CompareArgs),
    /// Ratio expansion against the oracle ratio.
    Ratio(RatioArgs),
    /// Fitted log-log error slopes against the predicted orders.
    Slopes(SlopesArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CoeffsArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub family: Family,
    /// Largest coefficient index.
    #[arg(long, default_value_t = 4)]
    pub order: usize,
    /// Keep α, β, j symbolic even when values are given.
    #[arg(long)]
    pub symbolic: bool,
    /// Exact value substituted for α (decimal or p/q).
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub j: Option<String>,
    /// Phase convention for BHAT; `auto` writes odd coefficients in √(−z).
    #[arg(long, value_enum, ignore_case = true, default_value_t = HalfPlaneArg::Auto)]
    pub half_plane: HalfPlaneArg,
    #[arg(long, value_enum, ignore_case = true, default_value_t = ExpVariantArg::Kappa)]
    pub exp_variant: ExpVariantArg,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[arg(long, value_enum, ignore_case = true, default_value_t = EvalMethod::Outer)]
    pub method: EvalMethod,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub alpha: f64,
    /// Comma-separated complex points such as `-1,1+2i,3`.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
    pub z: Vec<CutComplex>,
    /// Strictly increasing degrees, comma-separated.
    #[arg(long, value_parser = parse_n_list, required = true)]
    pub n: NList,
    #[arg(long, default_value_t = 4)]
    pub d: usize,
    #[arg(long, value_enum, ignore_case = true, default_value_t = HalfPlaneArg::Auto)]
    pub half_plane: HalfPlaneArg,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
    pub z: Vec<CutComplex>,
    #[arg(long, value_parser = parse_n_list, required = true)]
    pub n: NList,
    #[arg(long, default_value_t = 4)]
    pub d: usize,
}

#[derive(Debug, Clone, Args)]
pub struct RatioArgs {
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub beta: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub j: f64,
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
    pub z: Vec<CutComplex>,
    #[arg(long, value_parser = parse_n_list, required = true)]
    pub n: NList,
    #[arg(long, default_value_t = 4)]
    pub d: usize,
    #[arg(long, value_enum, ignore_case = true, default_value_t = ExpVariantArg::Kappa)]
    pub exp_variant: ExpVariantArg,
}

#[derive(Debug, Clone, Args)]
pub struct SlopesArgs {
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.3)]
    pub alpha: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.5)]
    pub beta: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub j: f64,
    #[arg(long, allow_hyphen_values = true, default_value = "-2")]
    pub z: CutComplex,
    #[arg(long, value_parser = parse_n_list, default_value = "50,100,200,400,800")]
    pub n: NList,
    /// Largest truncation index; every d in 1..=d is fitted.
    #[arg(long, default_value_t = 4)]
    pub d: usize,
    #[arg(long, value_enum, ignore_case = true, default_value_t = ExpVariantArg::Kappa)]
    pub exp_variant: ExpVariantArg,
}

/// A validated, strictly increasing list of degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NList(pub Vec<u64>);

/// Where the rendered output goes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Output {
    Stdout,
    File(PathBuf),
}

/// A validated command together with its output target.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: ValidCommand,
    pub output: Output,
    pub format: Format,
}

#[derive(Debug, Clone)]
pub enum ValidCommand {
    Coeffs(CoeffsArgs),
    Eval(EvalArgs),
    Compare(CompareArgs),
    Ratio(RatioArgs),
    Slopes(SlopesArgs),
}

fn check_alpha(name: &str, v: f64) -> Result<(), CliError> {
    if v > -1.0 && v.is_finite() {
        Ok(())
    } else {
        Err(CliError::Config(format!("--{name} must exceed -1, got {v}")))
    }
}

fn check_cut_grid(zs: &[CutComplex]) -> Result<(), CliError> {
    match zs.iter().find(|z| z.on_positive_axis()) {
        Some(z) => Err(CliError::Config(format!("grid point {z} lies on [0, ∞)"))),
        None => Ok(()),
    }
}

fn check_d(d: usize) -> Result<(), CliError> {
    if d == 0 {
        return Err(CliError::Config("--d must be at least 1".into()));
    }
    Ok(())
}

impl RunConfig {
    /// Validate parsed arguments; `out_dir` is the default output directory.
    pub fn from_cli(cli: Cli, out_dir: Option<&Path>) -> Result<Self, CliError> {
        let (command, stem, default_format) = match cli.command {
            Command::Coeffs(a) => {
                let stem = format!("coeffs_{}_{}", a.family.name().to_lowercase(), a.order);
                (ValidCommand::Coeffs(a), stem, Format::Json)
            }
            Command::Eval(a) => {
                check_alpha("alpha", a.alpha)?;
                match a.method {
                    EvalMethod::Outer | EvalMethod::Perron => {
                        check_cut_grid(&a.z)?;
                        check_d(a.d)?;
                    }
                    EvalMethod::Goal | EvalMethod::GoalStaggered => {
                        if a.z.iter().any(|z| z.is_zero()) {
                            return Err(CliError::Config("the cosine/sine form needs z ≠ 0".into()));
                        }
                    }
                    EvalMethod::Oracle | EvalMethod::Series => {}
                }
                (ValidCommand::Eval(a), "eval".to_string(), Format::Csv)
            }
            Command::Compare(a) => {
                check_alpha("alpha", a.alpha)?;
                (ValidCommand::Compare(a), "compare".to_string(), Format::Csv)
            }
            Command::Ratio(a) => {
                check_alpha("alpha", a.alpha)?;
                check_alpha("beta", a.beta)?;
                check_cut_grid(&a.z)?;
                check_d(a.d)?;
                if a.n.0.first() == Some(&0) {
                    return Err(CliError::Config("the ratio form needs n ≥ 1".into()));
                }
                (ValidCommand::Ratio(a), "ratio".to_string(), Format::Csv)
            }
            Command::Slopes(a) => {
                check_alpha("alpha", a.alpha)?;
                check_alpha("beta", a.beta)?;
                check_cut_grid(std::slice::from_ref(&a.z))?;
                check_d(a.d)?;
                if a.n.0.len() < 2 || a.n.0[0] == 0 {
                    return Err(CliError::Config("slopes need at least two positive degrees".into()));
                }
                (ValidCommand::Slopes(a), "slopes".to_string(), Format::Csv)
            }
        };
        let format = cli.format.unwrap_or(default_format);
        let output = match cli.out {
            Some(p) if p.as_os_str() == "-" => Output::Stdout,
            Some(p) => Output::File(p),
            None => Output::File(
                out_dir
                    .unwrap_or_else(|| Path::new("."))
                    .join(format!("{stem}.{}", format.extension())),
            ),
        };
        Ok(RunConfig { command, output, format })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SlopeRow {
    pub evaluator: Evaluator,
    pub d: usize,
    pub fitted_slope: f64,
    pub predicted_slope: f64,
}

fn render_rows<T: Serialize>(rows: &[T], format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_vec_pretty(rows)?;
            s.push(b'\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r).map_err(CsvError::from)?;
            }
            w.into_inner().map_err(|e| CliError::Csv(CsvError::Io(e.into_error())))
        }
    }
}

fn eval_rows(a: &EvalArgs) -> Result<Vec<ComparisonRow>, CliError> {
    let goal = match a.method {
        EvalMethod::Goal => Some(GoalTable::new(a.d, GoalTruncation::Equal)?),
        EvalMethod::GoalStaggered => Some(GoalTable::new(a.d, GoalTruncation::Staggered)?),
        _ => None,
    };
    let outer = matches!(a.method, EvalMethod::Outer).then(|| OuterTable::new(a.d)).transpose()?;
    let perron = matches!(a.method, EvalMethod::Perron).then(|| PerronTable::new(a.d)).transpose()?;
    let mut rows = Vec::new();
    for &z in &a.z {
        for &n in &a.n.0 {
            let oracle = laguerre_oracle(n, a.alpha, z)?;
            let (r, d) = match a.method {
                EvalMethod::Oracle => (
                    crate::numerics::EvalResult {
                        value: oracle.into(),
                        est_error: 0.0,
                        method: crate::numerics::Method::OracleRecurrence,
                    },
                    None,
                ),
                EvalMethod::Series => (eval_bessel_series(n, a.alpha, z, None)?, None),
                EvalMethod::Goal | EvalMethod::GoalStaggered => {
                    (goal.as_ref().expect("table built above").eval(n, a.alpha, z)?, Some(a.d))
                }
                EvalMethod::Outer => (
                    outer
                        .as_ref()
                        .expect("table built above")
                        .eval(n, a.alpha, z, OuterForm::Raw(a.half_plane.choice()))?,
                    Some(a.d),
                ),
                EvalMethod::Perron => (perron.as_ref().expect("table built above").eval(n, a.alpha, z)?, Some(a.d)),
            };
            rows.push(ComparisonRow {
                method: r.method.name(),
                n,
                alpha: a.alpha,
                beta: None,
                j: None,
                re_z: z.re,
                im_z: z.im,
                d,
                re_value: r.value.re,
                im_value: r.value.im,
                rel_err_vs_oracle: Some(r.rel_err(oracle)),
                est_error: r.est_error,
            });
        }
    }
    Ok(rows)
}

fn slope_rows(a: &SlopesArgs) -> Result<Vec<SlopeRow>, CliError> {
    let ns = &a.n.0;
    let mut rows = Vec::new();
    let mut push = |r: crate::numerics::SlopeReport| {
        rows.push(SlopeRow {
            evaluator: r.evaluator,
            d: r.d,
            fitted_slope: r.fitted_slope,
            predicted_slope: r.predicted_slope,
        })
    };
    for d in 1..=a.d {
        push(outer_slope(a.alpha, a.z, d, ns)?);
        push(perron_slope(a.alpha, a.z, d, ns)?);
        if a.j.fract() == 0.0 {
            let spec = RatioSpec {
                alpha: a.alpha,
                beta: a.beta,
                j: a.j,
                d,
            };
            push(ratio_slope(&spec, a.z, ns, a.exp_variant.into())?);
        }
        for r in goal_slopes_ranked(a.alpha, a.z, d, ns)? {
            push(r);
        }
    }
    Ok(rows)
}

/// Render the output of a validated command.
pub fn render(config: &RunConfig) -> Result<Vec<u8>, CliError> {
    match &config.command {
        ValidCommand::Coeffs(a) => {
            let table = coefficient_table(a)?;
            match config.format {
                Format::Json => {
                    let mut s = serde_json::to_vec_pretty(&table)?;
                    s.push(b'\n');
                    Ok(s)
                }
                Format::Csv => render_rows(&table.csv_rows(), Format::Csv),
            }
        }
        ValidCommand::Eval(a) => render_rows(&eval_rows(a)?, config.format),
        ValidCommand::Compare(a) => {
            let rows = compare_grid(a.alpha, &a.z, &a.n.0, a.d)?;
            match config.format {
                Format::Csv => {
                    let mut buf = Vec::new();
                    write_comparison_csv(&rows, &mut buf)?;
                    Ok(buf)
                }
                Format::Json => render_rows(&rows, Format::Json),
            }
        }
        ValidCommand::Ratio(a) => {
            let spec = RatioSpec {
                alpha: a.alpha,
                beta: a.beta,
                j: a.j,
                d: a.d,
            };
            render_rows(&ratio_rows(&spec, &a.z, &a.n.0, a.exp_variant.into())?, config.format)
        }
        ValidCommand::Slopes(a) => render_rows(&slope_rows(a)?, config.format),
    }
}

/// Render and write; returns where the output went.
pub fn run(config: &RunConfig) -> Result<Output, CliError> {
    let bytes = render(config)?;
    match &config.output {
        Output::Stdout => {
            std::io::stdout().write_all(&bytes).map_err(|source| CliError::Io {
                path: "-".into(),
                source,
            })?;
        }
        Output::File(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
                    path: dir.display().to_string(),
                    source,
                })?;
            }
            std::fs::write(p, &bytes).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?;
        }
    }
    Ok(config.output.clone())
}

/// Parse, validate and run; the returned value is the process exit code.
pub fn main_with_args<I, T>(args: I, out_dir: Option<&Path>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let err = CliError::Config(e.to_string().trim().to_string());
            eprintln!("{}", err.to_json());
            return err.exit_code();
        }
    };
    match RunConfig::from_cli(cli, out_dir).and_then(|c| run(&c)) {
        Ok(Output::File(p)) => {
            eprintln!("wrote {}", p.display());
            0
        }
        Ok(Output::Stdout) => 0,
        Err(e) => {
            eprintln!("{}", e.to_json());
            e.exit_code()
        }
    }
}

pub fn main_from_env() -> i32 {
    let dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from);
    main_with_args(std::env::args_os(), dir.as_deref())
}
