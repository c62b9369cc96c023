//! `plane-ag`: encode, decode, simulate, trace and tabulate decoding radii.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 decoded word failed verification.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use plane_ag::code::Code;
use plane_ag::decoder::{decode, DecodeResult, Status};
use plane_ag::gf::Elem;
use plane_ag::io::{format_vector, parse_vector, CodeSpec, IoError};
use plane_ag::sim::{simulate, Execution};
use plane_ag::trace;

#[derive(Parser, Debug)]
#[command(
    name = "plane-ag",
    version,
    about = "Interpolation decoding of one-point plane-curve codes"
)]
struct Cli {
    #[command(flatten)]
    code: CodeArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CodeArgs {
    /// JSON code config ({"type":"hermitian",...} or {"type":"mk",...}).
    #[arg(long, global = true, conflicts_with = "hermitian_q")]
    code: Option<PathBuf>,
    /// Hermitian code over GF(q^2) on all q^3 affine points, in canonical order.
    #[arg(long, global = true)]
    hermitian_q: Option<u32>,
    /// Message degree bound u (with --hermitian-q).
    #[arg(long, global = true)]
    u: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Message file (k symbols, increasing nongap order) -> codeword file.
    Encode {
        #[arg(long = "in")]
        input: PathBuf,
        /// Defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Received-vector file -> message file; prints a status line on stderr.
    Decode {
        #[arg(long = "in")]
        input: PathBuf,
        /// Defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the decoding trace here.
        #[arg(long)]
        trace_out: Option<PathBuf>,
    },
    /// Monte-Carlo runs with random messages and errors of exact weight.
    Simulate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Number of symbol errors per trial.
        #[arg(long)]
        weight: usize,
        /// Run trials one after another instead of in parallel.
        #[arg(long)]
        sequential: bool,
        /// Write the report here as well as to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decode and print the per-weight trace of the Groebner bases.
    Trace {
        #[arg(long = "in")]
        input: PathBuf,
        /// Defaults to stdout.
        #[arg(long, alias = "trace-out")]
        out: Option<PathBuf>,
    },
    /// Table of d_u for every nongap u < n.
    Radius {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_code(args: &CodeArgs, need_u: bool) -> Result<Code> {
    let spec = match (&args.code, args.hermitian_q) {
        (Some(path), _) => {
            if args.u.is_some() {
                bail!("--u cannot be combined with --code; set \"u\" in the config");
            }
            let text = read(path)?;
            CodeSpec::from_json(&text).map_err(|e| located(path, e))?
        }
        (None, Some(q)) => {
            let u = match (args.u, need_u) {
                (Some(u), _) => u,
                // the radius table ignores u; any valid value builds the point set
                (None, false) => 1,
                (None, true) => bail!("--hermitian-q requires --u"),
            };
            CodeSpec::Hermitian { q, u, points: None }
        }
        (None, None) => bail!("specify the code with --code <file> or --hermitian-q <q> --u <u>"),
    };
    Ok(spec.build()?)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn located(path: &Path, e: IoError) -> anyhow::Error {
    match e {
        IoError::Parse { .. } => anyhow!("{}:{e}", path.display()),
        other => anyhow!("{}: {other}", path.display()),
    }
}

fn read_vector(code: &Code, path: &Path, len: usize) -> Result<Vec<Elem>> {
    let text = read(path)?;
    parse_vector(code.field(), &text, Some(len)).map_err(|e| located(path, e))
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn status_code(r: &DecodeResult) -> u8 {
    match r.status {
        Status::FailedVerification => 2,
        _ => 0,
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Encode { input, out } => {
            let code = load_code(&cli.code, true)?;
            let msg = read_vector(&code, &input, code.dimension())?;
            let c = code.encode(&msg)?;
            emit(out.as_deref(), &(format_vector(code.field(), &c) + "\n"))?;
            Ok(0)
        }
        Command::Decode {
            input,
            out,
            trace_out,
        } => {
            let code = load_code(&cli.code, true)?;
            let v = read_vector(&code, &input, code.len())?;
            let result = match trace_out {
                Some(path) => {
                    let (text, r) = trace::render(&code, &v)?;
                    emit(Some(&path), &text)?;
                    r
                }
                None => decode(&code, &v)?,
            };
            emit(
                out.as_deref(),
                &(format_vector(code.field(), &result.message) + "\n"),
            )?;
            eprintln!("status {} distance={}", result.status, result.distance);
            Ok(status_code(&result))
        }
        Command::Simulate {
            seed,
            trials,
            weight,
            sequential,
            out,
        } => {
            let code = load_code(&cli.code, true)?;
            let exec = if sequential {
                Execution::Sequential
            } else {
                Execution::default()
            };
            let report = simulate(&code, seed, trials, weight, exec)?;
            let summary = report.summary(&code);
            print!("{summary}");
            if let Some(p) = out {
                emit(Some(&p), &summary)?;
            }
            // timings vary run to run, so they stay out of the report proper
            eprintln!("mean-decode-time {:?}", report.mean_decode_time());
            Ok(0)
        }
        Command::Trace { input, out } => {
            let code = load_code(&cli.code, true)?;
            let v = read_vector(&code, &input, code.len())?;
            let (text, result) = trace::render(&code, &v)?;
            emit(out.as_deref(), &text)?;
            Ok(status_code(&result))
        }
        Command::Radius { out } => {
            let code = load_code(&cli.code, false)?;
            let sg = code.curve().semigroup();
            let n = code.len();
            let mut text = format!(
                "# plane-ag radius: <{},{}>, n={n}\n\
                 # rows cover nongap u < n only; gap u (remapped in some published plots) are omitted\n\
                 u d_u\n",
                sg.a(),
                sg.b()
            );
            for u in sg.nongaps().take_while(|&u| (u as usize) < n) {
                text.push_str(&format!("{u} {}\n", code.radius_at(u)));
            }
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
