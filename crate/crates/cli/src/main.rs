use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use skyline::{Composition, Filling};
use skyline_cli::{parse_filling, parse_inline_filling, run, Command, Method, EXIT_INPUT};

/// Semistandard skyline fillings, their involutions and key polynomials.
#[derive(Parser)]
#[command(name = "skyline", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Recursive,
    Combinatorial,
    Both,
}

#[derive(Args)]
struct FillingInput {
    /// Read the filling from a file (text or JSON form).
    #[arg(long)]
    file: Option<PathBuf>,
    /// Filling rows given inline, one argument per row, e.g. `-- 1 2,2,1 - 4,3`.
    #[arg(last = true)]
    rows: Vec<String>,
}

#[derive(Subcommand)]
enum Sub {
    /// List SSF(alpha) in canonical order.
    Enumerate { alpha: String },
    /// Compute the key polynomial of alpha.
    Key {
        alpha: String,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
    },
    /// Apply phi_{r,t} to a filling of shape alpha.
    Involution {
        alpha: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: u32,
        /// Print every intermediate filling with free (*) and pseudo-free (~) marks.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        input: FillingInput,
    },
    /// Derived fillings in SSF(alpha) of a filling of the swapped shape.
    Derive {
        alpha: String,
        #[command(flatten)]
        input: FillingInput,
    },
    /// Run every check over all compositions up to the given bounds.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_part: usize,
    },
    /// Compare phi with the classical Bender-Knuth move.
    BenderKnuth {
        alpha: String,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: u32,
    },
}

fn read_filling(input: &FillingInput) -> Result<Filling, String> {
    let parsed = match (&input.file, input.rows.is_empty()) {
        (Some(path), true) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_filling(&text)
        }
        (None, false) => parse_inline_filling(&input.rows),
        (Some(_), false) => return Err("give the filling either with --file or after --".into()),
        (None, true) => return Err("no filling given: use --file or list rows after --".into()),
    };
    parsed.map_err(|e| e.to_string())
}

fn alpha(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: skyline::Error| e.to_string())
}

fn build(sub: &Sub) -> Result<Command, String> {
    Ok(match sub {
        Sub::Enumerate { alpha: a } => Command::Enumerate { alpha: alpha(a)? },
        Sub::Key { alpha: a, method } => Command::Key {
            alpha: alpha(a)?,
            method: match method {
                MethodArg::Recursive => Method::Recursive,
                MethodArg::Combinatorial => Method::Combinatorial,
                MethodArg::Both => Method::Both,
            },
        },
        Sub::Involution {
            alpha: a,
            r,
            t,
            trace,
            input,
        } => Command::Involution {
            alpha: alpha(a)?,
            filling: read_filling(input)?,
            r: *r,
            t: *t,
            trace: *trace,
        },
        Sub::Derive { alpha: a, input } => Command::Derive {
            alpha: alpha(a)?,
            filling: read_filling(input)?,
        },
        Sub::Verify { max_n, max_part } => Command::Verify {
            max_n: *max_n,
            max_part: *max_part,
        },
        Sub::BenderKnuth { alpha: a, r, t } => Command::BenderKnuth {
            alpha: alpha(a)?,
            r: *r,
            t: *t,
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match build(&cli.command) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = run(&command, cli.json, &mut out, &mut io::stderr());
    let _ = out.flush();
    ExitCode::from(code as u8)
}
