//! Command-line front end: exact deficit computation, composition and
//! iteration in one and two variables, diagonal substitution, the seeded
//! verification suites, and the fixed worked examples — with text or
//! JSON output and stable exit codes (0 success, 1 verification failure,
//! 2 usage or parse error, 3 resource cap).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use deficitlab_core::{
    compose, compose_uni_bi_capped, deficit1, deficit2, diag_subst_bi, diag_subst_uni,
    format_poly1, format_poly2, iterate_capped, parse_poly1, parse_poly2, run_suite,
    worked_examples, ContextSpec, Error, FieldContext, FixtureOutcome, Result, SuiteCaps,
    SuiteReport, TheoremId, DEFAULT_COEFF_CAP,
};

#[derive(Parser)]
#[command(
    name = "deficitlab",
    version,
    about = "Exact F-deficit calculator and verification rig for polynomial composition laws"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Deficit of a univariate polynomial over a field pair
    Deficit {
        /// Field pair spec, e.g. "Q(sqrt 2)", "Q[t]", "GF(3^2)", "Z<Q"
        #[arg(long)]
        field: String,
        /// Polynomial in x
        poly: String,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
        /// Also write the JSON report to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Part-deficit of a bivariate polynomial (by homogeneous parts)
    Deficit2 {
        #[arg(long)]
        field: String,
        /// Polynomial in x and y
        poly: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compose two univariate polynomials and report all three deficits
    Compose {
        #[arg(long)]
        field: String,
        /// Outer polynomial p
        p: String,
        /// Inner polynomial q
        q: String,
        #[arg(long)]
        json: bool,
        /// Cap on the coefficient count of the result
        #[arg(long, default_value_t = DEFAULT_COEFF_CAP)]
        max_coeffs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Substitute a bivariate polynomial into a univariate one
    Compose2 {
        #[arg(long)]
        field: String,
        /// Outer univariate polynomial p
        p: String,
        /// Inner bivariate polynomial q
        q: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_COEFF_CAP)]
        max_coeffs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// r-fold self-composition of a univariate polynomial
    Iterate {
        #[arg(long)]
        field: String,
        /// Base polynomial p
        p: String,
        /// Iteration count (r >= 1)
        r: u32,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_COEFF_CAP)]
        max_coeffs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Substitute the same polynomial for both variables of a bivariate one
    Diag {
        #[arg(long)]
        field: String,
        /// Bivariate polynomial p(x, y)
        p: String,
        /// Replacement (univariate or bivariate) used for both variables
        q: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run seeded verification suites for the composition laws
    Verify {
        /// Statement id (e.g. T1, ITER_INEQ) or "all" (the default)
        target: Option<String>,
        /// Run on this field spec instead of the statement's default plan
        #[arg(long)]
        field: Option<String>,
        /// Master seed (default: DEFICITLAB_SEED env var, else 0)
        #[arg(long)]
        seed: Option<u64>,
        /// Trials per suite (default: the plan's own counts, else 1000)
        #[arg(long)]
        trials: Option<u64>,
        /// Also replay the fixed worked examples
        #[arg(long)]
        examples: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay the fixed worked examples and report each outcome
    Examples {
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::DegreeOverflow { .. } => 3,
        _ => 2,
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("DEFICITLAB_SEED") {
        Ok(text) => text.trim().parse().map_err(|_| Error::RejectSpec {
            reason: format!("DEFICITLAB_SEED must be an unsigned integer, got '{text}'"),
        }),
        Err(_) => Ok(0),
    }
}

/// Prints the command's result (text or JSON to stdout), optionally
/// writing the JSON form to a file as well.
fn emit<T: Serialize>(value: &T, text: &str, json: bool, out: Option<&Path>) -> Result<()> {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        );
    } else {
        println!("{text}");
    }
    if let Some(path) = out {
        let rendered = serde_json::to_string_pretty(value).expect("reports serialize");
        std::fs::write(path, rendered + "\n").map_err(|err| Error::RejectSpec {
            reason: format!("cannot write {}: {err}", path.display()),
        })?;
    }
    Ok(())
}

fn index_text(index: Option<usize>) -> String {
    match index {
        Some(k) => k.to_string(),
        None => "none".to_string(),
    }
}

#[derive(Serialize)]
struct DeficitOutput {
    field: String,
    p: String,
    #[serde(flatten)]
    report: deficitlab_core::DeficitReport,
}

#[derive(Serialize)]
struct ComposeOutput {
    field: String,
    p: String,
    q: String,
    composed: String,
    deficit_p: usize,
    deficit_q: usize,
    deficit_composed: usize,
}

#[derive(Serialize)]
struct IterateOutput {
    field: String,
    p: String,
    r: u32,
    composed: String,
    deficit_p: usize,
    deficit_composed: usize,
}

#[derive(Serialize)]
struct VerifyOutput {
    suites: Vec<SuiteReport>,
    fixtures: Vec<FixtureOutcome>,
    blocking_counterexamples: u64,
    empirical_counterexamples: u64,
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Deficit {
            field,
            poly,
            json,
            out,
        } => {
            let ctx = FieldContext::parse_spec(&field)?;
            let p = parse_poly1(&ctx, &poly)?;
            let report = deficit1(&ctx, &p)?;
            let rendered = format_poly1(&ctx, &p)?;
            let text = format!(
                "p = {rendered}\ndegree = {}\nin_F = {}\ntop_non_F_index = {}\ndeficit = {}",
                report.degree,
                report.in_f,
                index_text(report.top_non_f_index),
                report.deficit
            );
            let output = DeficitOutput {
                field: ctx.name(),
                p: rendered,
                report,
            };
            emit(&output, &text, json, out.as_deref())?;
            Ok(0)
        }
        Command::Deficit2 {
            field,
            poly,
            json,
            out,
        } => {
            let ctx = FieldContext::parse_spec(&field)?;
            let p = parse_poly2(&ctx, &poly)?;
            let report = deficit2(&ctx, &p)?;
            let rendered = format_poly2(&ctx, &p)?;
            let text = format!(
                "p = {rendered}\ntotal_degree = {}\nin_F = {}\ntop_non_F_index = {}\ndeficit = {}",
                report.degree,
                report.in_f,
                index_text(report.top_non_f_index),
                report.deficit
            );
            let output = DeficitOutput {
                field: ctx.name(),
                p: rendered,
                report,
            };
            emit(&output, &text, json, out.as_deref())?;
            Ok(0)
        }
        Command::Compose {
            field,
            p,
            q,
            json,
            max_coeffs,
            out,
        } => {
            let ctx = FieldContext::parse_spec(&field)?;
            let p = parse_poly1(&ctx, &p)?;
            let q = parse_poly1(&ctx, &q)?;
            if let (Ok(n), Ok(m)) = (p.degree(), q.degree()) {
                let needed = n
                    .checked_mul(m)
                    .and_then(|d| d.checked_add(1))
                    .unwrap_or(usize::MAX);
                if needed > max_coeffs {
                    return Err(Error::DegreeOverflow {
                        needed,
                        cap: max_coeffs,
                    });
                }
            }
            let composed = compose(&ctx, &p, &q)?;
            let output = ComposeOutput {
                field: ctx.name(),
                p: format_poly1(&ctx, &p)?,
                q: format_poly1(&ctx, &q)?,
                composed: format_poly1(&ctx, &composed)?,
                deficit_p: deficit1(&ctx, &p)?.deficit,
                deficit_q: deficit1(&ctx, &q)?.deficit,
                deficit_composed: deficit1(&ctx, &composed)?.deficit,
            };
            let text = format!(
                "p = {}\nq = {}\ncomposed = {}\ndeficit_p = {}\ndeficit_q = {}\ndeficit_composed = {}",
                output.p,
                output.q,
                output.composed,
                output.deficit_p,
                output.deficit_q,
                output.deficit_composed
            );
            emit(&output, &text, json, out.as_deref())?;
            Ok(0)
        }
        Command::Compose2 {
            field,
            p,
            q,
            json,
            max_coeffs,
            out,
        } => {
            let ctx = FieldContext::parse_spec(&field)?;
            let p = parse_poly1(&ctx, &p)?;
            let q = parse_poly2(&ctx, &q)?;
            let composed = compose_uni_bi_capped(&ctx, &p, &q, max_coeffs)?;
            let output = ComposeOutput {
                field: ctx.name(),
                p: format_poly1(&ctx, &p)?,
                q: format_poly2(&ctx, &q)?,
                composed: format_poly2(&ctx, &composed)?,
                deficit_p: deficit1(&ctx, &p)?.deficit,
                deficit_q: deficit2(&ctx, &q)?.deficit,
                deficit_composed: deficit2(&ctx, &composed)?.deficit,
            };
            let text = format!(
                "p = {}\nq = {}\ncomposed = {}\ndeficit_p = {}\ndeficit_q = {}\ndeficit_composed = {}",
                output.p,
                output.q,
                output.composed,
                output.deficit_p,
                output.deficit_q,
                output.deficit_composed
            );
            emit(&output, &text, json, out.as_deref())?;
            Ok(0)
        }
        Command::Iterate {
            field,
            p,
            r,
            json,
            max_coeffs,
            out,
        } => {
            let ctx = FieldContext::parse_spec(&field)?;
            if r == 0 {
                return Err(Error::RejectSpec {
                    reason: "iteration count r must be at least 1".to_string(),
                });
            }
            let p = parse_poly1(&ctx, &p)?;
            let composed = iterate_capped(&ctx, &p, r, max_coeffs)?;
            let output = IterateOutput {
                field: ctx.name(),
                p: format_poly1(&ctx, &p)?,
                r,
                composed: format_poly1(&ctx, &composed)?,
                deficit_p: deficit1(&ctx, &p)?.deficit,
                deficit_composed: deficit1(&ctx, &composed)?.deficit,
            };
            let text = format!(
                "p = {}\nr = {}\ncomposed = {}\ndeficit_p = {}\ndeficit_composed = {}",
                output.p, output.r, output.composed, output.deficit_p, output.deficit_composed
            );
            emit(&output, &text, json, out.as_deref())?;
            Ok(0)
        }
        Command::Diag {
            field,
            p,
            q,
            json,
            out,
        } => {
            let ctx = FieldContext::parse_spec(&field)?;
            let p = parse_poly2(&ctx, &p)?;
            let (q_text, composed_text, deficit_q, deficit_composed) = match parse_poly1(&ctx, &q) {
                Ok(q1) => {
                    let composed = diag_subst_uni(&ctx, &p, &q1)?;
                    (
                        format_poly1(&ctx, &q1)?,
                        format_poly1(&ctx, &composed)?,
                        deficit1(&ctx, &q1)?.deficit,
                        deficit1(&ctx, &composed)?.deficit,
                    )
                }
                Err(Error::ArityViolation { .. }) => {
                    let q2 = parse_poly2(&ctx, &q)?;
                    let composed = diag_subst_bi(&ctx, &p, &q2)?;
                    (
                        format_poly2(&ctx, &q2)?,
                        format_poly2(&ctx, &composed)?,
                        deficit2(&ctx, &q2)?.deficit,
                        deficit2(&ctx, &composed)?.deficit,
                    )
                }
                Err(other) => return Err(other),
            };
            let output = ComposeOutput {
                field: ctx.name(),
                p: format_poly2(&ctx, &p)?,
                q: q_text,
                composed: composed_text,
                deficit_p: deficit2(&ctx, &p)?.deficit,
                deficit_q,
                deficit_composed,
            };
            let text = format!(
                "p = {}\nq = {}\ncomposed = {}\ndeficit_p = {}\ndeficit_q = {}\ndeficit_composed = {}",
                output.p,
                output.q,
                output.composed,
                output.deficit_p,
                output.deficit_q,
                output.deficit_composed
            );
            emit(&output, &text, json, out.as_deref())?;
            Ok(0)
        }
        Command::Verify {
            target,
            field,
            seed,
            trials,
            examples,
            json,
            out,
        } => run_verify(target, field, seed, trials, examples, json, out.as_deref()),
        Command::Examples { json, out } => {
            let fixtures = worked_examples()?;
            let failures = fixtures.iter().filter(|f| !f.passed).count();
            let text = render_fixtures(&fixtures);
            emit(&fixtures, &text, json, out.as_deref())?;
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}

fn render_fixtures(fixtures: &[FixtureOutcome]) -> String {
    let mut lines: Vec<String> = fixtures
        .iter()
        .map(|f| {
            format!(
                "{} {} — {}",
                if f.passed { "PASS" } else { "FAIL" },
                f.name,
                f.detail
            )
        })
        .collect();
    let failures = fixtures.iter().filter(|f| !f.passed).count();
    lines.push(format!("{} fixtures, {} failed", fixtures.len(), failures));
    lines.join("\n")
}

fn render_suite(report: &SuiteReport) -> String {
    let mut text = format!(
        "{} on {}: {} trials, {} confirms, {} vacuous, {} counterexamples [seed {}, {} ms]",
        report.theorem,
        report.context,
        report.trials,
        report.confirms,
        report.vacuous,
        report.counterexamples.len(),
        report.seed,
        report.runtime_ms
    );
    for record in &report.counterexamples {
        text.push_str(&format!(
            "\n  counterexample at trial {} (seed {}): {}",
            record.trial,
            record.seed,
            record.inputs.join(", ")
        ));
    }
    text
}

fn run_verify(
    target: Option<String>,
    field: Option<String>,
    seed: Option<u64>,
    trials: Option<u64>,
    examples: bool,
    json: bool,
    out: Option<&Path>,
) -> Result<u8> {
    let seed = resolve_seed(seed)?;
    let caps = SuiteCaps::default();
    let mut suites = Vec::new();

    // With --examples and no explicit target, only the fixtures replay.
    let run_suites = target.is_some() || !examples;
    if run_suites {
        let target = target.as_deref().unwrap_or("all");
        if target.eq_ignore_ascii_case("all") {
            for entry in deficitlab_core::default_suite_plan() {
                let ctx = FieldContext::parse_spec(entry.field)?;
                let n = trials.unwrap_or(entry.trials);
                suites.push(run_suite(&ctx, entry.id, n, seed, caps)?);
            }
        } else {
            let id: TheoremId = target.parse()?;
            let n = trials.unwrap_or(1000);
            match &field {
                Some(spec) => {
                    let ctx = FieldContext::parse_spec(spec)?;
                    suites.push(run_suite(&ctx, id, n, seed, caps)?);
                }
                None => {
                    for entry in deficitlab_core::default_suite_plan()
                        .into_iter()
                        .filter(|e| e.id == id)
                    {
                        let ctx = FieldContext::parse_spec(entry.field)?;
                        suites.push(run_suite(
                            &ctx,
                            id,
                            trials.unwrap_or(entry.trials),
                            seed,
                            caps,
                        )?);
                    }
                }
            }
        }
    }

    let fixtures = if examples {
        worked_examples()?
    } else {
        Vec::new()
    };

    let mut blocking = 0u64;
    let mut empirical = 0u64;
    for report in &suites {
        let ctx = FieldContext::parse_spec(&report.context)?;
        let is_set = matches!(ctx.spec(), ContextSpec::SetContext { .. });
        let count = report.counterexamples.len() as u64;
        if is_set {
            empirical += count;
        } else {
            blocking += count;
        }
    }
    let failed_fixtures = fixtures.iter().filter(|f| !f.passed).count() as u64;

    let mut text_parts: Vec<String> = suites.iter().map(render_suite).collect();
    if !fixtures.is_empty() {
        text_parts.push(render_fixtures(&fixtures));
    }
    text_parts.push(format!(
        "{} suites, {} blocking counterexamples ({} empirical, non-blocking); {} fixtures, {} failed",
        suites.len(),
        blocking,
        empirical,
        fixtures.len(),
        failed_fixtures
    ));
    let text = text_parts.join("\n");
    let output = VerifyOutput {
        suites,
        fixtures,
        blocking_counterexamples: blocking,
        empirical_counterexamples: empirical,
    };
    emit(&output, &text, json, out)?;
    Ok(if blocking + failed_fixtures == 0 {
        0
    } else {
        1
    })
}
