use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ccc_spectra::analysis::analyze;
use ccc_spectra::classify::classify;
use ccc_spectra::closed_form::{ClosedFormSource, Formulas};
use ccc_spectra::family::FamilySpec;
use ccc_spectra::figures::{check_figure, Figure};
use ccc_spectra::sweep::{parse_range, run_sweep, to_csv, to_json, SweepRow, SweepSpec};
use ccc_spectra::verify::{verify, Scope};
use ccc_spectra::{Error, Result};

#[derive(Parser)]
#[command(
    name = "ccc-spectra",
    version,
    about = "CN-spectra and energies of commuting conjugacy class graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Brute-force analysis of one instance, checked against its closed form.
    Analyze {
        /// e.g. `dihedral:n=7`, `unm:n=3,m=5`, `central_ext:base=q8,m=2`
        spec: String,
    },
    /// One row per instance of a family template.
    Sweep {
        /// Template such as `dihedral:n=*` or `unm:n=3,m=*`
        #[arg(long)]
        family: String,
        /// Values for `*`, inclusive: `a..b`
        #[arg(long)]
        range: Option<String>,
        #[arg(long, default_value_t = 1)]
        step: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Add an `oracle` column comparing against the closed forms.
        #[arg(long)]
        oracle: bool,
    },
    /// Run the verification harness; exit status 0 iff clean.
    Verify {
        #[arg(default_value = "quick")]
        scope: String,
    },
    /// Regenerate the data behind an energy-curve preset.
    Figure {
        /// fig1..fig8
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(rows: &[SweepRow], format: Format, oracle: bool) -> Result<String> {
    match format {
        Format::Csv => to_csv(rows, oracle),
        Format::Json => Ok(serde_json::to_string_pretty(&to_json(rows)).expect("json") + "\n"),
    }
}

fn cmd_analyze(spec: &str) -> Result<bool> {
    let spec: FamilySpec = spec.parse()?;
    let a = analyze(&spec)?;
    let c = classify(&a.report);
    let mut ok = a.exact_verified && a.structure_matches_prediction() != Some(false);
    let cf = Formulas.closed_form(&spec);
    let mut out = serde_json::json!({
        "group": spec.group_name(),
        "spec": spec.to_string(),
        "order": a.order,
        "center": a.center_size,
        "quotient": a.quotient,
        "structure": a.decomposition.to_string(),
        "exact_verified": a.exact_verified,
        "energy": a.report.to_json(),
        "classification": c,
    });
    match &cf {
        Ok(cf) => {
            out["closed_form"] = cf.to_json();
            if cf.realizable {
                let agree = cf.le_cn == a.report.le_cn
                    && cf.le_plus_cn == a.report.le_plus_cn
                    && cf.cnl_spec.as_ref() == Some(&a.report.spectra.cnl)
                    && cf.cnsl_spec.as_ref() == Some(&a.report.spectra.cnsl);
                out["closed_form_agrees"] = agree.into();
                ok &= agree;
                if !agree {
                    eprintln!("mismatch against {}", cf.source);
                }
            }
        }
        Err(e) => out["closed_form_error"] = e.to_string().into(),
    }
    println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    Ok(ok)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze { spec } => cmd_analyze(&spec),
        Command::Sweep {
            family,
            range,
            step,
            out,
            format,
            oracle,
        } => {
            let range = range.map(|r| parse_range(&r, step)).transpose()?;
            let s = SweepSpec::parse(&family, range, oracle)?;
            let rows = run_sweep(&s)?;
            write_out(out.as_ref(), &render(&rows, format, oracle)?)?;
            let failed = rows.iter().filter(|r| r.data.is_err()).count();
            if failed > 0 {
                eprintln!("{failed} of {} rows failed", rows.len());
            }
            Ok(true)
        }
        Command::Verify { scope } => {
            let report = verify(scope.parse::<Scope>()?, &Formulas);
            print!("{}", report.render());
            Ok(report.is_clean())
        }
        Command::Figure { name, out, format } => {
            let fig: Figure = name.parse()?;
            let rows = fig.rows();
            write_out(out.as_ref(), &render(&rows, format, false)?)?;
            let (points, bad) = check_figure(fig, &rows);
            for m in &bad {
                eprintln!("FAIL {m}");
            }
            eprintln!(
                "{} ({}): {}/{} plotted points match",
                fig,
                fig.title(),
                points - bad.len(),
                points
            );
            Ok(bad.is_empty())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
