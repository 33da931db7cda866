//! Command execution for the `skyline` binary.
//!
//! [`run`] writes everything to the given sinks and returns the exit
//! status: 0 on success, 1 when a verification check fails, 2 on bad input.

use std::io::{self, Write};

use serde_json::json;
use skyline::derivation::DerivedFamily;
use skyline::involution::{classify, phi_trace, render_classified};
use skyline::verify::{bender_knuth_check, verify_family, VerificationReport};
use skyline::{
    derived_fillings, enumerate_ssf, key_combinatorial, key_recursive, Composition, Error, Filling,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Recursive,
    Combinatorial,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Enumerate {
        alpha: Composition,
    },
    Key {
        alpha: Composition,
        method: Method,
    },
    Involution {
        alpha: Composition,
        filling: Filling,
        r: usize,
        t: u32,
        trace: bool,
    },
    Derive {
        alpha: Composition,
        filling: Filling,
    },
    Verify {
        max_n: usize,
        max_part: usize,
    },
    BenderKnuth {
        alpha: Composition,
        r: usize,
        t: u32,
    },
}

/// Parses a filling from its text or JSON form.
pub fn parse_filling(text: &str) -> skyline::Result<Filling> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("filling JSON: {e}")))
    } else {
        text.parse()
    }
}

/// Parses a filling given inline as one argument per row, entries
/// separated by commas or spaces, `-` for an empty row. A single argument
/// holding JSON or several lines is parsed as a whole.
pub fn parse_inline_filling(args: &[String]) -> skyline::Result<Filling> {
    if let [single] = args {
        if single.contains('\n') || single.trim_start().starts_with('{') {
            return parse_filling(single);
        }
    }
    if args.is_empty() {
        return Err(Error::Parse("no filling given".into()));
    }
    let text: String = args
        .iter()
        .map(|a| format!("{}\n", a.replace(',', " ")))
        .collect();
    text.parse()
}

fn to_json(value: impl Into<serde_json::Value>) -> String {
    serde_json::to_string_pretty(&value.into()).expect("serializable")
}

fn check_shape(alpha: &Composition, f: &Filling) -> skyline::Result<()> {
    if f.shape() != alpha {
        return Err(Error::ShapeMismatch {
            expected: alpha.to_string(),
            found: f.shape().to_string(),
        });
    }
    f.ensure_semistandard()
}

/// Executes `cmd`, writing results to `out` and diagnostics to `err`.
pub fn run(cmd: &Command, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cmd, json, out, err) {
        Ok(code) => code,
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

enum Failure {
    Input(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn execute(
    cmd: &Command,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    match cmd {
        Command::Enumerate { alpha } => {
            let all = enumerate_ssf(alpha);
            if json {
                let value = json!({"alpha": alpha, "count": all.len(), "fillings": all});
                writeln!(out, "{}", to_json(value))?;
            } else {
                for f in &all {
                    writeln!(out, "{f}")?;
                }
                writeln!(out, "count: {}", all.len())?;
            }
            Ok(EXIT_OK)
        }
        Command::Key { alpha, method } => key(alpha, *method, json, out),
        Command::Involution {
            alpha,
            filling,
            r,
            t,
            trace,
        } => {
            check_shape(alpha, filling)?;
            let steps = phi_trace(filling, *r, *t)?;
            let image = steps.last().expect("trace is never empty");
            if json {
                let mut value = json!({"image": image});
                if *trace {
                    value["trace"] = json!(steps);
                }
                writeln!(out, "{}", to_json(value))?;
            } else if *trace {
                let blocks = steps
                    .iter()
                    .map(|f| Ok(render_classified(f, &classify(f, *t)?)))
                    .collect::<skyline::Result<Vec<_>>>()?;
                write!(out, "{}", blocks.join("\n"))?;
            } else {
                write!(out, "{image}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Derive { alpha, filling } => {
            let family = derived_fillings(filling, alpha)?;
            if json {
                writeln!(out, "{}", to_json(json!(family)))?;
            } else {
                write_family(&family, out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { max_n, max_part } => {
            let reports = verify_family(*max_n, *max_part)?;
            for rep in &reports {
                writeln!(err, "time {} {} ms", rep.alpha, rep.elapsed_ms)?;
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if json {
                let value = json!({
                    "compositions": reports.len(),
                    "failures": failed,
                    "reports": reports,
                });
                writeln!(out, "{}", to_json(value))?;
            } else {
                write_summary(&reports, out)?;
            }
            Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
        }
        Command::BenderKnuth { alpha, r, t } => {
            let report = bender_knuth_check(alpha, *r, *t)?;
            if json {
                writeln!(out, "{}", to_json(json!(report)))?;
            } else {
                writeln!(
                    out,
                    "alpha: {alpha}  r: {r}  t: {t}  fillings: {}",
                    report.ssf_count
                )?;
                write_checks(&report, out)?;
            }
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
    }
}

fn key(
    alpha: &Composition,
    method: Method,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let recursive =
        matches!(method, Method::Recursive | Method::Both).then(|| key_recursive(alpha));
    let combinatorial =
        matches!(method, Method::Combinatorial | Method::Both).then(|| key_combinatorial(alpha));
    let equal = match (&recursive, &combinatorial) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    if json {
        let mut value = json!({"alpha": alpha});
        if let Some(p) = &recursive {
            value["recursive"] = json!(p.to_string());
        }
        if let Some(p) = &combinatorial {
            value["combinatorial"] = json!(p.to_string());
        }
        if let Some(eq) = equal {
            value["equal"] = json!(eq);
        }
        writeln!(out, "{}", to_json(value))?;
    } else {
        for p in recursive.iter().chain(&combinatorial) {
            writeln!(out, "{p}")?;
        }
        if let Some(eq) = equal {
            writeln!(out, "{}", if eq { "EQUAL" } else { "DIFFER" })?;
        }
    }
    Ok(if equal == Some(false) {
        EXIT_FAILED
    } else {
        EXIT_OK
    })
}

fn write_family(family: &DerivedFamily, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "r: {}", family.r)?;
    writeln!(out, "m: {}", family.m())?;
    for (k, f) in family.members.iter().enumerate() {
        writeln!(out)?;
        writeln!(out, "F{k}:")?;
        write!(out, "{f}")?;
    }
    Ok(())
}

fn write_checks(report: &VerificationReport, out: &mut dyn Write) -> io::Result<()> {
    for check in &report.checks {
        writeln!(
            out,
            "{} {}",
            if check.pass { "PASS" } else { "FAIL" },
            check.name
        )?;
        if let Some(w) = &check.witness {
            let text = serde_json::to_string(w).expect("serializable");
            writeln!(out, "  witness: {text}")?;
        }
    }
    Ok(())
}

fn write_summary(reports: &[VerificationReport], out: &mut dyn Write) -> io::Result<()> {
    let width = reports
        .iter()
        .map(|r| r.alpha.to_string().len())
        .max()
        .unwrap_or(0)
        .max("alpha".len());
    writeln!(
        out,
        "{:<width$}  {:>8}  {:>6}  status",
        "alpha", "fillings", "checks"
    )?;
    for rep in reports {
        writeln!(
            out,
            "{:<width$}  {:>8}  {:>6}  {}",
            rep.alpha.to_string(),
            rep.ssf_count,
            rep.checks.len(),
            if rep.passed() { "ok" } else { "FAIL" }
        )?;
        for check in rep.failures() {
            writeln!(out, "    failed: {}", check.name)?;
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "compositions: {}  failures: {failed}", reports.len())
}
