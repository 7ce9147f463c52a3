//! Command implementations behind the `qudit` binary.
//!
//! Exit status contract: `0` success, `1` verification failure, `2` usage or
//! range error. Data goes to stdout, diagnostics to stderr.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qudit_core::render::{self, OutputFormat};
use qudit_core::{
    basis_ket, bell_state, completeness_sum, projector, run_verify, superpose, symbolic_ket,
    symbolic_projector, AmplitudeQ2, Error, DEFAULT_D_CAP,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Environment variable holding the verification cap on `--max-d`.
pub const CAP_ENV: &str = "QUDIT_D_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "qudit",
    version,
    about = "Exact qudit kets, projectors and Bell states"
)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Append decimal approximations (display only)
    #[arg(long, global = true)]
    pub approx: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Computational basis ket |x>, or the symbolic ket in x
    Basis(LevelArgs),
    /// Projector |x><x|, or the symbolic diagonal projector
    Projector(LevelArgs),
    /// Check every identity for d = 1..=max-d plus the Bell suite
    Verify {
        #[arg(long = "max-d")]
        max_d: usize,
        /// Upper bound on --max-d
        #[arg(long, env = CAP_ENV, default_value_t = DEFAULT_D_CAP)]
        cap: usize,
    },
    /// Bell state B_xy via CNOT (H x I), compared with the closed form
    Bell {
        #[arg(long)]
        x: u64,
        #[arg(long)]
        y: u64,
    },
    /// Superposition sum_x a_x |x> and its normalization
    Superpose {
        #[arg(long)]
        d: usize,
        /// Comma-separated amplitude literals, e.g. "3/5,4/5i"
        #[arg(long, allow_hyphen_values = true)]
        amps: String,
    },
    /// Sum of all basis projectors of a d-level system
    Completeness {
        #[arg(long)]
        d: usize,
    },
}

#[derive(Debug, Args)]
pub struct LevelArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(
        long,
        required_unless_present = "symbolic",
        conflicts_with = "symbolic"
    )]
    pub x: Option<usize>,
    #[arg(long)]
    pub symbolic: bool,
}

/// Rendered result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub status: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            status: EXIT_OK,
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

/// Runs a parsed command. Errors are range or usage errors (exit 2).
pub fn run(cli: &Cli) -> Result<Outcome, Error> {
    let fmt = cli.format;
    let approx = cli.approx;
    let out = match &cli.command {
        Command::Basis(args) => basis(args, fmt, approx)?,
        Command::Projector(args) => projector_cmd(args, fmt, approx)?,
        Command::Verify { max_d, cap } => {
            let report = run_verify(*max_d, *cap)?;
            let stdout = match fmt {
                OutputFormat::Text => report.to_text(),
                OutputFormat::Json => pretty(&report.to_json()),
                OutputFormat::Latex => report.to_latex(),
            };
            let status = if report.overall {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            return Ok(Outcome { stdout, status });
        }
        Command::Bell { x, y } => {
            let state = bell_state(*x, *y)?;
            match fmt {
                OutputFormat::Text => render::bell_text(&state, approx)?,
                OutputFormat::Json => pretty(&render::bell_json(&state, approx)?),
                OutputFormat::Latex => render::bell_latex(&state)?,
            }
        }
        Command::Superpose { d, amps } => {
            let amps = amps
                .split(',')
                .map(str::parse::<AmplitudeQ2>)
                .collect::<Result<Vec<_>, _>>()?;
            let s = superpose(*d, amps)?;
            match fmt {
                OutputFormat::Text => render::superposition_text(&s, approx),
                OutputFormat::Json => pretty(&render::superposition_json(&s, approx)),
                OutputFormat::Latex => render::superposition_latex(&s),
            }
        }
        Command::Completeness { d } => {
            let sum = completeness_sum(*d)?;
            match fmt {
                OutputFormat::Text => render::matrix_text(&sum, approx),
                OutputFormat::Json => {
                    let mut v = render::matrix_json(&sum, approx);
                    v["d"] = json!(d);
                    v["is_identity"] = json!(sum.is_identity());
                    pretty(&v)
                }
                OutputFormat::Latex => render::matrix_latex(&sum),
            }
        }
    };
    Ok(Outcome::ok(out))
}

fn basis(args: &LevelArgs, fmt: OutputFormat, approx: bool) -> Result<String, Error> {
    if args.symbolic {
        let ket = symbolic_ket(args.d)?;
        return Ok(match fmt {
            OutputFormat::Text => render::symbolic_ket_text(&ket),
            OutputFormat::Json => pretty(&render::symbolic_ket_json(&ket)),
            OutputFormat::Latex => render::symbolic_ket_latex(&ket)?,
        });
    }
    let x = args.x.expect("clap requires --x unless --symbolic");
    let ket = basis_ket(args.d, x)?;
    Ok(match fmt {
        OutputFormat::Text => render::ket_text(&ket, approx),
        OutputFormat::Json => pretty(&render::ket_json(&ket, Some(x), approx)),
        OutputFormat::Latex => render::ket_latex(&ket),
    })
}

fn projector_cmd(args: &LevelArgs, fmt: OutputFormat, approx: bool) -> Result<String, Error> {
    if args.symbolic {
        let p = symbolic_projector(args.d)?;
        return Ok(match fmt {
            OutputFormat::Text => render::symbolic_projector_text(&p),
            OutputFormat::Json => pretty(&render::symbolic_projector_json(&p)),
            OutputFormat::Latex => render::symbolic_projector_latex(&p)?,
        });
    }
    let x = args.x.expect("clap requires --x unless --symbolic");
    let p = projector(args.d, x)?;
    Ok(match fmt {
        OutputFormat::Text => render::matrix_text(p.matrix(), approx),
        OutputFormat::Json => {
            let mut v = render::matrix_json(p.matrix(), approx);
            v["d"] = json!(p.d());
            v["x"] = json!(x);
            v["trace"] = json!(p.trace().to_string());
            pretty(&v)
        }
        OutputFormat::Latex => render::matrix_latex(p.matrix()),
    })
}
