mod config;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use config::{Config, Format};
use lseries_lab::audit::{nonvanishing_survey_with, run_audit, survey_csv, unit_interval_grid, AuditConfig};
use lseries_lab::cgeom::{appendix_expectations, verify_appendix_against, ExpectedCheck};
use lseries_lab::characters::{
    enumerate_characters, enumerate_real_characters, CharValue, DirichletCharacter,
};
use lseries_lab::complex::{format_complex, parse_complex};
use lseries_lab::lseries::{evaluate_with, scan_csv, scan_zeros_with, HurwitzConfig, LPoint};
use lseries_lab::rotation::{pappus_check, pappus_csv};

/// Dirichlet L-series laboratory: characters, L-values, zero scans and
/// finite-truncation checks of the series identities.
#[derive(Debug, Parser)]
#[command(name = "lseries-lab", version)]
struct Cli {
    /// Output format [default: table, or `format` from the config file].
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Euler–Maclaurin error target for L-values.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Spacing of the σ grid used by zero scans.
    #[arg(long = "grid-step", global = true)]
    grid_step: Option<f64>,
    /// Bisection width used to refine sign changes.
    #[arg(long = "scan-tol", global = true)]
    scan_tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the Dirichlet characters of a modulus.
    Characters {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        q: u64,
        /// Only the real characters.
        #[arg(long)]
        real: bool,
    },
    /// Evaluate or scan L(s, χ).
    Lfun {
        #[command(subcommand)]
        command: LfunCommand,
    },
    /// Complex bilinear geometry.
    Geom {
        #[command(subcommand)]
        command: GeomCommand,
    },
    /// Rotation-solid identity V = 2πηS.
    Pappus {
        #[command(subcommand)]
        command: PappusCommand,
    },
    /// Run every claim check for one character and point.
    Audit {
        #[command(flatten)]
        chi: Selector,
        #[arg(short = 's', allow_hyphen_values = true, value_parser = parse_point)]
        s: LPoint,
        /// Increasing truncations, comma separated [default: N/100, N/10, N].
        #[arg(short = 'N', value_delimiter = ',', value_parser = parse_truncation)]
        n: Vec<u64>,
    },
    /// Zero scans of every real non-principal character up to a modulus.
    Survey {
        #[arg(long = "qmax", value_parser = clap::value_parser!(u64).range(1..))]
        q_max: u64,
    },
}

#[derive(Debug, Subcommand)]
enum LfunCommand {
    /// L(s, χ) with its method and error estimate.
    Eval {
        #[command(flatten)]
        chi: Selector,
        /// The point s, e.g. `0.5`, `0.5+14.1i`, `2-i`.
        #[arg(short = 's', allow_hyphen_values = true, value_parser = parse_point)]
        s: LPoint,
    },
    /// Sample L(σ, χ) on a grid in (0, 1); exits 1 if the sign changes.
    Scan {
        #[command(flatten)]
        chi: Selector,
        #[arg(long)]
        lo: Option<f64>,
        #[arg(long)]
        hi: Option<f64>,
    },
}

#[derive(Debug, Subcommand)]
enum GeomCommand {
    /// Recompute the worked triangle examples; exits 1 on any mismatch.
    VerifyAppendix {
        /// JSON file of expected values replacing the built-in table.
        #[arg(long)]
        expected: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum PappusCommand {
    /// Compare V_N with 2π η_N S_N for the step profile of the partial sum.
    Check {
        #[command(flatten)]
        chi: Selector,
        #[arg(short = 's', allow_hyphen_values = true, value_parser = parse_point)]
        s: LPoint,
        /// Truncations, comma separated [default: the configured N].
        #[arg(short = 'N', value_delimiter = ',', value_parser = parse_truncation)]
        n: Vec<u64>,
    },
}

/// A character is named by its modulus and its position in the enumeration.
#[derive(Debug, Args)]
struct Selector {
    #[arg(short = 'q', value_parser = clap::value_parser!(u64).range(1..))]
    q: u64,
    /// Index into the real characters of modulus q (principal first).
    #[arg(short = 'k', default_value_t = 0)]
    k: usize,
    /// Index into all characters of modulus q instead of the real ones.
    #[arg(long)]
    all: bool,
}

impl Selector {
    fn resolve(&self) -> Result<DirichletCharacter> {
        let mut chars = if self.all {
            enumerate_characters(self.q)
        } else {
            enumerate_real_characters(self.q)
        };
        if self.k >= chars.len() {
            bail!(
                "modulus {} has {} {}characters, index {} is out of range",
                self.q,
                chars.len(),
                if self.all { "" } else { "real " },
                self.k
            );
        }
        Ok(chars.swap_remove(self.k))
    }
}

fn parse_point(text: &str) -> Result<LPoint, String> {
    let z = parse_complex(text).map_err(|e| e.to_string())?;
    let p = LPoint::from(z);
    if !p.is_finite() {
        return Err(format!("s must be finite, got {text:?}"));
    }
    Ok(p)
}

fn parse_truncation(text: &str) -> Result<u64, String> {
    match text.trim().parse::<u64>() {
        Ok(0) => Err("truncations must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(format!("{text:?}: {e}")),
    }
}

struct Ctx {
    cfg: Config,
}

impl Ctx {
    fn hurwitz(&self) -> HurwitzConfig {
        HurwitzConfig {
            tol: self.cfg.hurwitz_tol,
            ..HurwitzConfig::default()
        }
    }
}

/// What a command found: success, or a reportable finding (exit 1).
#[derive(Debug, PartialEq, Eq)]
enum Outcome {
    Clean,
    Finding,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Finding) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let mut cfg = Config::from_env()?;
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if let Some(t) = cli.tol {
        cfg.hurwitz_tol = t;
    }
    if let Some(g) = cli.grid_step {
        cfg.grid_step = g;
    }
    if let Some(t) = cli.scan_tol {
        cfg.scan_tol = t;
    }
    cfg.validate()?;
    let ctx = Ctx { cfg };
    let (text, outcome) = match cli.command {
        Command::Characters { q, real } => (characters(&ctx, q, real)?, Outcome::Clean),
        Command::Lfun { command: LfunCommand::Eval { chi, s } } => (lfun_eval(&ctx, &chi, s)?, Outcome::Clean),
        Command::Lfun { command: LfunCommand::Scan { chi, lo, hi } } => lfun_scan(&ctx, &chi, lo, hi)?,
        Command::Geom { command: GeomCommand::VerifyAppendix { expected } } => verify(&ctx, expected)?,
        Command::Pappus { command: PappusCommand::Check { chi, s, n } } => (pappus(&ctx, &chi, s, n)?, Outcome::Clean),
        Command::Audit { chi, s, n } => (audit(&ctx, &chi, s, n)?, Outcome::Clean),
        Command::Survey { q_max } => survey(&ctx, q_max)?,
    };
    let mut out = std::io::stdout().lock();
    let written = out.write_all(text.as_bytes()).and_then(|()| {
        if text.ends_with('\n') {
            Ok(())
        } else {
            out.write_all(b"\n")
        }
    });
    match written {
        // a closed reader (e.g. `| head`) is not an error of ours
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(outcome),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn csv_text(headers: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers)?;
    for r in rows {
        w.write_record(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn emit(format: Format, headers: &[&str], rows: &[Vec<String>], json: impl FnOnce() -> Result<String>) -> Result<String> {
    match format {
        Format::Json => json(),
        Format::Csv => csv_text(headers, rows),
        Format::Table => Ok(table::render(headers, rows)),
    }
}

fn value_text(v: CharValue) -> String {
    match v.as_real() {
        Some(r) => r.to_string(),
        None => match v {
            CharValue::Root { order, exp } => format!("e({exp}/{order})"),
            CharValue::Zero => "0".into(),
        },
    }
}

fn characters(ctx: &Ctx, q: u64, real: bool) -> Result<String> {
    let chars = if real {
        enumerate_real_characters(q)
    } else {
        enumerate_characters(q)
    };
    let headers = ["index", "q", "principal", "real", "conductor", "primitive", "values"];
    let rows: Vec<Vec<String>> = chars
        .iter()
        .enumerate()
        .map(|(i, c)| {
            vec![
                i.to_string(),
                q.to_string(),
                c.is_principal().to_string(),
                c.is_real().to_string(),
                c.conductor().to_string(),
                c.is_primitive().to_string(),
                c.values().iter().map(|&v| value_text(v)).collect::<Vec<_>>().join(" "),
            ]
        })
        .collect();
    emit(ctx.cfg.format, &headers, &rows, || {
        to_json(&chars.iter().map(|c| c.to_json()).collect::<Vec<_>>())
    })
}

fn lfun_eval(ctx: &Ctx, sel: &Selector, s: LPoint) -> Result<String> {
    let chi = sel.resolve()?;
    let e = evaluate_with(&chi, s, &ctx.hurwitz())?;
    let json_value = json!({
        "q": sel.q,
        "char_index": sel.k,
        "s": s,
        "value": { "re": e.value.re, "im": e.value.im },
        "method": e.method,
        "n_used": e.n_used,
        "err_estimate": e.err_estimate,
    });
    let method = serde_json::to_value(e.method)?.as_str().unwrap_or_default().to_string();
    let fields = [
        ("q", sel.q.to_string()),
        ("char_index", sel.k.to_string()),
        ("s", format_complex(s.to_complex())),
        ("L_value", format_complex(e.value)),
        ("method", method),
        ("n_used", e.n_used.to_string()),
        ("err_estimate", format!("{:e}", e.err_estimate)),
    ];
    match ctx.cfg.format {
        Format::Json => to_json(&json_value),
        Format::Csv => {
            let headers: Vec<&str> = fields.iter().map(|f| f.0).collect();
            csv_text(&headers, &[fields.iter().map(|f| f.1.clone()).collect()])
        }
        Format::Table => Ok(table::pairs(&fields)),
    }
}

fn lfun_scan(ctx: &Ctx, sel: &Selector, lo: Option<f64>, hi: Option<f64>) -> Result<(String, Outcome)> {
    let chi = sel.resolve()?;
    let step = ctx.cfg.grid_step;
    let (lo, hi, points) = match (lo, hi) {
        (None, None) => unit_interval_grid(step)?,
        (lo, hi) => {
            let lo = lo.unwrap_or(step);
            let hi = hi.unwrap_or(1.0 - step);
            if !(lo < hi) {
                bail!("--lo must be below --hi");
            }
            (lo, hi, ((hi - lo) / step).round() as usize + 1)
        }
    };
    let scan = scan_zeros_with(&chi, lo, hi, points, ctx.cfg.scan_tol, &ctx.hurwitz())?;
    let outcome = if scan.found_zero() {
        Outcome::Finding
    } else {
        Outcome::Clean
    };
    let text = match ctx.cfg.format {
        Format::Json => to_json(&json!({
            "q": sel.q,
            "char_index": sel.k,
            "sigma_lo": lo,
            "sigma_hi": hi,
            "grid_points": points,
            "sign_changes": scan.sign_changes(),
            "min_abs": scan.min_abs,
            "argmin_sigma": scan.argmin_sigma,
            "brackets": scan.brackets,
            "samples": scan.samples,
        }))?,
        Format::Csv => scan_csv([(sel.q, sel.k, &scan)]),
        Format::Table => {
            let mut t = table::pairs(&[
                ("q", sel.q.to_string()),
                ("char_index", sel.k.to_string()),
                ("grid", format!("{points} points on [{lo}, {hi}]")),
                ("min |L|", format!("{:e} at σ = {}", scan.min_abs, scan.argmin_sigma)),
                ("sign changes", scan.sign_changes().to_string()),
            ]);
            if scan.found_zero() {
                let rows: Vec<Vec<String>> = scan
                    .brackets
                    .iter()
                    .map(|b| {
                        vec![
                            b.lo.to_string(),
                            b.hi.to_string(),
                            b.root.map_or_else(|| "-".into(), |r| r.to_string()),
                        ]
                    })
                    .collect();
                t.push('\n');
                t.push_str(&table::render(&["lo", "hi", "root"], &rows));
            }
            t
        }
    };
    Ok((text, outcome))
}

fn verify(ctx: &Ctx, expected: Option<PathBuf>) -> Result<(String, Outcome)> {
    let table_in: Vec<ExpectedCheck> = match expected {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .with_context(|| format!("reading {}", path.display()))?;
            serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?
        }
        None => appendix_expectations(),
    };
    let report = verify_appendix_against(&table_in);
    let outcome = if report.all_pass() {
        Outcome::Clean
    } else {
        Outcome::Finding
    };
    let headers = ["example", "quantity", "expected", "computed", "residual", "status"];
    let rows: Vec<Vec<String>> = report
        .checks
        .iter()
        .map(|c| {
            vec![
                c.example.to_string(),
                c.quantity.clone(),
                c.expected.clone(),
                c.computed.clone(),
                format!("{:e}", c.residual),
                if c.pass { "PASS" } else { "FAIL" }.into(),
            ]
        })
        .collect();
    let mut text = emit(ctx.cfg.format, &headers, &rows, || to_json(&report.checks))?;
    if ctx.cfg.format == Format::Table {
        let failed = report.checks.iter().filter(|c| !c.pass).count();
        text.push_str(&format!("\n{} checks, {failed} failed\n", report.checks.len()));
    }
    Ok((text, outcome))
}

fn pappus(ctx: &Ctx, sel: &Selector, s: LPoint, truncations: Vec<u64>) -> Result<String> {
    let chi = sel.resolve()?;
    let truncations = if truncations.is_empty() {
        vec![ctx.cfg.default_n]
    } else {
        truncations
    };
    let reports = truncations
        .iter()
        .map(|&n| pappus_check(&chi, s, n).with_context(|| format!("N = {n}")))
        .collect::<Result<Vec<_>>>()?;
    match ctx.cfg.format {
        Format::Json => to_json(&reports),
        Format::Csv => Ok(pappus_csv(&reports)),
        Format::Table => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        format_complex(r.area),
                        format_complex(r.volume),
                        format_complex(r.xi),
                        format_complex(r.eta),
                        format!("{:e}", r.rel_residual),
                    ]
                })
                .collect();
            Ok(table::render(&["N", "S", "V", "xi", "eta", "rel_residual"], &rows))
        }
    }
}

fn audit(ctx: &Ctx, sel: &Selector, s: LPoint, truncations: Vec<u64>) -> Result<String> {
    let chi = sel.resolve()?;
    let truncations = if truncations.is_empty() {
        let n = ctx.cfg.default_n;
        let mut t: Vec<u64> = [n / 100, n / 10, n].into_iter().filter(|&m| m > 0).collect();
        t.dedup();
        t
    } else {
        truncations
    };
    let cfg = AuditConfig {
        grid_step: ctx.cfg.grid_step,
        scan_tol: ctx.cfg.scan_tol,
        hurwitz: ctx.hurwitz(),
        ..AuditConfig::default()
    };
    let results = run_audit(&chi, Some(sel.k), s, &truncations, &cfg)?;
    let headers = ["claim_id", "verdict", "note"];
    let rows: Vec<Vec<String>> = results
        .iter()
        .map(|r| vec![r.claim_id.as_str().into(), r.verdict.as_str().into(), r.note.clone()])
        .collect();
    emit(ctx.cfg.format, &headers, &rows, || to_json(&results))
}

fn survey(ctx: &Ctx, q_max: u64) -> Result<(String, Outcome)> {
    let rows = nonvanishing_survey_with(q_max, ctx.cfg.grid_step, ctx.cfg.scan_tol, &ctx.hurwitz())?;
    let outcome = if rows.iter().any(|r| r.sign_changes > 0) {
        Outcome::Finding
    } else {
        Outcome::Clean
    };
    let text = match ctx.cfg.format {
        Format::Json => to_json(&rows)?,
        Format::Csv => survey_csv(&rows),
        Format::Table => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.q.to_string(),
                        r.char_index.to_string(),
                        r.conductor.to_string(),
                        r.primitive.to_string(),
                        format!("{:.6e}", r.min_abs),
                        r.argmin_sigma.to_string(),
                        r.sign_changes.to_string(),
                    ]
                })
                .collect();
            table::render(
                &["q", "char_index", "conductor", "primitive", "min_abs_L", "argmin_sigma", "sign_changes"],
                &body,
            )
        }
    };
    Ok((text, outcome))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn point_parsing() {
        assert_eq!(parse_point("0.5").unwrap(), LPoint::real(0.5));
        assert_eq!(parse_point("0.5-2i").unwrap(), LPoint::new(0.5, -2.0));
        assert!(parse_point("inf").is_err());
        assert!(parse_point("x").is_err());
    }
}
