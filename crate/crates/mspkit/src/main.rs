use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mspkit::format;
use mspkit::verify::{self, DEFAULT_SEED};
use mspkit_core::msp::{self, MspCache, MspKind};
use mspkit_core::series::{self, EgfCoeffs};
use mspkit_core::stirling::{NumberKind, NumberTable};
use mspkit_core::{ptypes, BigInt, BigRational, LaurentX1};
use serde_json::json;

const DEFAULT_MAX_N: u32 = 30;

#[derive(Parser)]
#[command(
    name = "mspkit",
    version,
    about = "Stirling-type polynomial families, number tables and EGF reversion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Polynomial families.
    #[command(subcommand)]
    Msp(MspCmd),
    /// Integer Stirling-type tables.
    #[command(subcommand)]
    Stirling(StirlingCmd),
    /// Exponential generating function operations.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Partition types.
    #[command(subcommand)]
    Ptypes(PtypesCmd),
    /// The identity suite.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum MspCmd {
    /// One polynomial, or a whole generation when --k is omitted.
    Gen {
        #[arg(long, value_parser = parse_kind)]
        kind: MspKind,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: PolyFormat,
    },
    /// LaTeX table of S(n,k) and B(n,k) for generations 1..=max-n.
    Table {
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
}

#[derive(Subcommand)]
enum StirlingCmd {
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },
}

#[derive(Args)]
struct SeriesInput {
    /// Comma-separated f_1, f_2, ... as integers or p/q.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
    /// Number of coefficients; the input is truncated or padded with zeros.
    #[arg(long)]
    order: Option<u32>,
}

#[derive(Subcommand)]
enum SeriesCmd {
    /// Compositional inverse. Exits 1 if the selected paths disagree.
    Revert {
        #[command(flatten)]
        input: SeriesInput,
        #[arg(long, value_enum, default_value = "all")]
        path: RevertPath,
    },
    /// f(g(x)) with f and g given by their coefficients.
    Compose {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        order: Option<u32>,
    },
    /// Rows of exp(t f(x)), or of the inverse transform with --inverse.
    ExpTransform {
        #[command(flatten)]
        input: SeriesInput,
        #[arg(long)]
        inverse: bool,
    },
}

#[derive(Subcommand)]
enum PtypesCmd {
    /// Partition types of weight N and length K.
    List { n: u32, k: u32 },
}

#[derive(Subcommand)]
enum VerifyCmd {
    Run {
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        /// Include wall times, which makes the report nondeterministic.
        #[arg(long)]
        timings: bool,
    },
    /// Print the check ids.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    S1,
    S2,
    C,
    Assoc,
    Lah,
    LahUnsigned,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RevertPath {
    Msp,
    Comtet,
    Oracle,
    All,
}

fn parse_kind(s: &str) -> Result<MspKind, String> {
    MspKind::from_symbol(s).ok_or_else(|| {
        let valid: Vec<_> = MspKind::ALL.iter().map(|k| k.symbol()).collect();
        format!("expected one of {}", valid.join(", "))
    })
}

/// Failure of the requested computation itself, as opposed to bad input.
#[derive(Debug)]
struct CheckFailed(String);

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CheckFailed {}

fn max_n() -> Result<u32> {
    match std::env::var("MSPKIT_MAX_N") {
        Ok(v) => v
            .parse()
            .with_context(|| format!("MSPKIT_MAX_N={v} is not a number")),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn cap(n: u32) -> Result<()> {
    let limit = max_n()?;
    if n > limit {
        bail!("n = {n} exceeds the limit {limit}; raise MSPKIT_MAX_N to allow it");
    }
    Ok(())
}

fn render(l: &LaurentX1, f: PolyFormat) -> String {
    match f {
        PolyFormat::Text => l.to_string(),
        PolyFormat::Json => format::laurent_to_json(l),
        PolyFormat::Latex => format::latex_laurent(l),
    }
}

fn msp_gen(kind: MspKind, n: u32, k: Option<u32>, f: PolyFormat) -> Result<String> {
    cap(n)?;
    if kind == MspKind::CompleteBell {
        if k.is_some_and(|k| k != 0) {
            bail!("Bn takes no --k");
        }
        return Ok(render(&msp::generate(kind, n, 0)?, f));
    }
    if let Some(k) = k {
        return Ok(render(&msp::generate(kind, n, k)?, f));
    }
    let mut cache = MspCache::new();
    let mut entries = Vec::new();
    for k in 1..=n {
        entries.push((k, cache.get(kind, n, k)?.clone()));
    }
    Ok(match f {
        PolyFormat::Json => json!(entries
            .iter()
            .map(|(k, l)| json!({"n": n, "k": k, "poly": format::laurent_to_value(l)}))
            .collect::<Vec<_>>())
        .to_string(),
        _ => entries
            .iter()
            .map(|(k, l)| format!("{kind}({n},{k}) = {}", render(l, f)))
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn msp_table(n_max: u32) -> Result<String> {
    cap(n_max)?;
    let mut cache = MspCache::new();
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let mut row = Vec::new();
        for k in 1..=n {
            row.push((
                cache.poly(MspKind::FirstKind, n, k)?,
                cache.poly(MspKind::SecondKind, n, k)?,
            ));
        }
        rows.push(row);
    }
    Ok(format::latex_table(&rows).trim_end().to_string())
}

fn stirling_table(kind: TableKind, n: u32, f: TableFormat) -> Result<String> {
    cap(n)?;
    let kind = match kind {
        TableKind::S1 => NumberKind::S1,
        TableKind::S2 => NumberKind::S2,
        TableKind::C => NumberKind::Cycle,
        TableKind::Assoc => NumberKind::AssocS2,
        TableKind::Lah => NumberKind::Lah,
        TableKind::LahUnsigned => NumberKind::LahUnsigned,
    };
    let t = NumberTable::new(kind, n);
    Ok(match f {
        TableFormat::Text => format::table_text(&t),
        TableFormat::Csv => format::table_csv(&t),
        TableFormat::Json => format::table_json(&t).to_string(),
    }
    .trim_end()
    .to_string())
}

fn read_series(coeffs: &str, order: Option<u32>) -> Result<EgfCoeffs> {
    let mut c = format::parse_rational_list(coeffs)?;
    if let Some(order) = order {
        cap(order)?;
        c.resize(order as usize, BigRational::from_integer(BigInt::from(0)));
    }
    cap(c.len() as u32)?;
    Ok(EgfCoeffs::new(c)?)
}

fn strings(f: &EgfCoeffs) -> Vec<String> {
    format::rationals_to_strings(f.as_slice())
}

fn series_revert(input: &SeriesInput, path: RevertPath) -> Result<String> {
    let f = read_series(&input.coeffs, input.order)?;
    let mut cache = MspCache::new();
    let mut results = Vec::new();
    if matches!(path, RevertPath::Msp | RevertPath::All) {
        results.push(("msp", series::revert_msp_with(&mut cache, &f)?));
    }
    if matches!(path, RevertPath::Comtet | RevertPath::All) {
        results.push(("comtet", series::revert_comtet_with(&mut cache, &f)?));
    }
    if matches!(path, RevertPath::Oracle | RevertPath::All) {
        results.push(("oracle", series::revert_oracle(&f)?));
    }
    let (first_name, first) = &results[0];
    for (name, other) in &results[1..] {
        if other != first {
            return Err(CheckFailed(format!(
                "reversion paths disagree: {first_name} gives {:?}, {name} gives {:?}",
                strings(first),
                strings(other)
            ))
            .into());
        }
    }
    Ok(json!({ "inverse": strings(first) }).to_string())
}

fn series_compose(f: &str, g: &str, order: Option<u32>) -> Result<String> {
    let f = read_series(f, order)?;
    let g = read_series(g, order)?;
    let h = series::egf_compose(&f, &g)?;
    Ok(json!({ "composition": strings(&h) }).to_string())
}

fn series_exp_transform(input: &SeriesInput, inverse: bool) -> Result<String> {
    let f = read_series(&input.coeffs, input.order)?;
    let order = f.order();
    let rows = if inverse {
        series::exp_transform_inverse(&f, order)?
    } else {
        series::exp_transform(&f, order)?
    };
    let rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| format::rationals_to_strings(r.coeffs()))
        .collect();
    Ok(json!({ "rows": rows }).to_string())
}

fn ptypes_list(n: u32, k: u32) -> Result<String> {
    cap(n)?;
    Ok(ptypes::enumerate(n, k)
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n"))
}

fn verify_run(
    n: u32,
    only: Option<&[String]>,
    seed: u64,
    format: ReportFormat,
    timings: bool,
) -> Result<String> {
    cap(n)?;
    let report = verify::run_suite(n, only, seed, &mut MspCache::new())?;
    let out = match format {
        ReportFormat::Text => report.to_text(timings).trim_end().to_string(),
        ReportFormat::Json => report.to_json(timings).to_string(),
    };
    if report.passed() {
        Ok(out)
    } else {
        println!("{out}");
        Err(CheckFailed(format!(
            "{} of {} checks failed",
            report.failures(),
            report.results.len()
        ))
        .into())
    }
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Msp(MspCmd::Gen { kind, n, k, format }) => msp_gen(kind, n, k, format),
        Command::Msp(MspCmd::Table { max_n }) => msp_table(max_n),
        Command::Stirling(StirlingCmd::Table { kind, n, format }) => {
            stirling_table(kind, n, format)
        }
        Command::Series(SeriesCmd::Revert { input, path }) => series_revert(&input, path),
        Command::Series(SeriesCmd::Compose { f, g, order }) => series_compose(&f, &g, order),
        Command::Series(SeriesCmd::ExpTransform { input, inverse }) => {
            series_exp_transform(&input, inverse)
        }
        Command::Ptypes(PtypesCmd::List { n, k }) => ptypes_list(n, k),
        Command::Verify(VerifyCmd::Run {
            max_n,
            only,
            seed,
            format,
            timings,
        }) => verify_run(max_n, only.as_deref(), seed, format, timings),
        Command::Verify(VerifyCmd::List) => Ok(verify::check_ids().join("\n")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) if e.is::<CheckFailed>() => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
