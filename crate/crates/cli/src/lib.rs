//! The `tropic` command line: reads curves, fans and certificates as JSON,
//! runs one operation and writes a JSON (or DOT) report.
//!
//! Exit codes: 0 when the operation succeeds or the checked property holds,
//! 1 when a check fails or the input is rejected by the library, 2 on usage
//! and parse errors.

pub mod dot;
mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use tropic_core::degeneration::{self, RealizationCertificate};
use tropic_core::lattice::ValidationConfig;
use tropic_core::{defspace, num, refine, wellspaced, Fan, TropicalCurve};

#[derive(Parser, Debug)]
#[command(name = "tropic", version, about = "Exact tools for embedded tropical curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
    /// Mark the fan as a trusted complete fan; large trusted fans are not validated.
    #[arg(long, global = true)]
    trust_fan: bool,
    /// Exit 1 from `defcone` when the curve is superabundant.
    #[arg(long, global = true)]
    expect_ordinary: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate the curve and check balancing.
    Check { curve: PathBuf },
    /// First Betti number of the underlying graph.
    Genus { curve: PathBuf },
    /// The fan spanned by the ray directions.
    Recession { curve: PathBuf },
    /// Weighted outgoing directions at a vertex.
    Star {
        curve: PathBuf,
        #[arg(long)]
        vertex: String,
    },
    /// Add a point at infinity to every ray.
    Compactify { curve: PathBuf },
    /// Subdivide the curve so that every edge and ray lies in one cone of the fan.
    Subdivide {
        curve: PathBuf,
        #[arg(long)]
        fan: PathBuf,
    },
    /// Scale the curve so every length/weight ratio is an integer.
    Rescale { curve: PathBuf },
    /// Equations and dimension of the cone of curves of the same combinatorial type.
    Defcone {
        curve: PathBuf,
        /// Also compute the dual cone and the Hilbert basis of its monoid.
        #[arg(long)]
        hilbert: bool,
    },
    /// Compare the deformation dimension with the expected one; exit 1 if larger.
    Superabundant { curve: PathBuf },
    /// Well-spacedness of a genus-one curve; exit 1 if it fails.
    Wellspaced { curve: PathBuf },
    /// Build a realization certificate against a complete fan.
    Certify {
        curve: PathBuf,
        #[arg(long)]
        fan: PathBuf,
    },
    /// Re-check every identity recorded in a certificate.
    VerifyCert { certificate: PathBuf },
    /// Run every check on the fixture set (`TROPIC_FIXTURES` or the built-in fixtures).
    Selftest,
}

enum Failure {
    Usage(String),
    Parse(String),
    Library(tropic_core::Error),
}

impl From<tropic_core::Error> for Failure {
    fn from(e: tropic_core::Error) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Parse(_) => 2,
            Failure::Library(_) => 1,
        }
    }

    fn report(&self) -> Value {
        match self {
            Failure::Usage(m) => json!({ "error": m, "kind": "usage" }),
            Failure::Parse(m) => json!({ "error": m, "kind": "parse" }),
            Failure::Library(e) => json!({ "error": e.to_string(), "kind": e.kind() }),
        }
    }
}

struct Outcome {
    text: String,
    code: i32,
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

fn report<T: Serialize>(v: &T, ok: bool) -> Outcome {
    Outcome {
        text: to_json(v),
        code: if ok { 0 } else { 1 },
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn read_curve(path: &Path) -> Result<TropicalCurve, Failure> {
    read_json(path)
}

fn read_valid_curve(path: &Path) -> Result<TropicalCurve, Failure> {
    let c = read_curve(path)?;
    c.require_valid()?;
    Ok(c)
}

fn read_fan(path: &Path, trust: bool) -> Result<Fan, Failure> {
    let mut f: Fan = read_json(path)?;
    if trust {
        f.set_trusted_complete(true);
    }
    let r = f.validate(&ValidationConfig::default());
    if let Some(v) = r.violation {
        return Err(tropic_core::Error::InvalidFan(v.to_string()).into());
    }
    Ok(f)
}

fn dot_only(cmd: &str) -> Failure {
    Failure::Usage(format!("--emit dot is not supported by {cmd}"))
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let dot = cli.emit == Emit::Dot;
    match &cli.command {
        Command::Check { curve } => {
            let c = read_curve(curve)?;
            let validation = c.validate();
            let balance = if validation.valid { Some(c.balancing()?) } else { None };
            let balanced = balance.as_ref().is_some_and(|b| b.balanced);
            if dot {
                c.require_valid()?;
                return Ok(Outcome {
                    text: dot::emit_dot(&c),
                    code: if balanced { 0 } else { 1 },
                });
            }
            let body = json!({
                "valid": validation.valid,
                "violations": validation.violations,
                "balanced": balanced,
                "defects": balance.map(|b| b.defects).unwrap_or_default(),
            });
            Ok(report(&body, validation.valid && balanced))
        }
        Command::Genus { curve } => {
            if dot {
                return Err(dot_only("genus"));
            }
            let c = read_valid_curve(curve)?;
            Ok(report(&json!({ "genus": c.genus() }), true))
        }
        Command::Recession { curve } => {
            if dot {
                return Err(dot_only("recession"));
            }
            let c = read_valid_curve(curve)?;
            Ok(report(&c.recession_fan(), true))
        }
        Command::Star { curve, vertex } => {
            if dot {
                return Err(dot_only("star"));
            }
            let c = read_valid_curve(curve)?;
            Ok(report(&c.star(vertex)?, true))
        }
        Command::Compactify { curve } => {
            let c = read_valid_curve(curve)?.compactify();
            if dot {
                return Ok(Outcome {
                    text: dot::emit_dot_compactified(&c),
                    code: 0,
                });
            }
            Ok(report(&c, true))
        }
        Command::Subdivide { curve, fan } => {
            let c = read_valid_curve(curve)?;
            let f = read_fan(fan, cli.trust_fan)?;
            let rec = refine::subdivide_along_fan(&c, &f)?;
            if dot {
                return Ok(Outcome {
                    text: dot::emit_dot(&rec.output),
                    code: 0,
                });
            }
            Ok(report(&rec, true))
        }
        Command::Rescale { curve } => {
            let c = read_valid_curve(curve)?;
            let (hat, n) = refine::rescale_integral(&c)?;
            if dot {
                return Ok(Outcome {
                    text: dot::emit_dot(&hat),
                    code: 0,
                });
            }
            #[derive(Serialize)]
            struct Rescaled {
                curve: TropicalCurve,
                #[serde(with = "num::integer")]
                multiplier: num::BigInt,
            }
            Ok(report(
                &Rescaled {
                    curve: hat,
                    multiplier: n,
                },
                true,
            ))
        }
        Command::Defcone { curve, hilbert } => {
            if dot {
                return Err(dot_only("defcone"));
            }
            let c = read_valid_curve(curve)?;
            let r = defspace::defcone_report(&c)?;
            let ok = !(cli.expect_ordinary && r.excess > 0);
            let mut body = serde_json::to_value(&r).expect("serializable");
            if *hilbert {
                let t = defspace::combinatorial_type(&c)?;
                body["basic_monoid"] = serde_json::to_value(defspace::basic_monoid(&t, true)).expect("serializable");
            }
            Ok(report(&body, ok))
        }
        Command::Superabundant { curve } => {
            if dot {
                return Err(dot_only("superabundant"));
            }
            let c = read_valid_curve(curve)?;
            let s = defspace::is_superabundant(&c)?;
            Ok(report(&s, !s.superabundant))
        }
        Command::Wellspaced { curve } => {
            if dot {
                return Err(dot_only("wellspaced"));
            }
            let c = read_valid_curve(curve)?;
            let w = wellspaced::well_spaced(&c)?;
            Ok(report(&w, w.well_spaced))
        }
        Command::Certify { curve, fan } => {
            let c = read_valid_curve(curve)?;
            let f = read_fan(fan, cli.trust_fan)?;
            let cert = degeneration::certify(&c, &f)?;
            if dot {
                return Ok(Outcome {
                    text: dot::emit_dot(&cert.curve),
                    code: 0,
                });
            }
            Ok(report(&cert, true))
        }
        Command::VerifyCert { certificate } => {
            if dot {
                return Err(dot_only("verify-cert"));
            }
            let cert: RealizationCertificate = read_json(certificate)?;
            let r = degeneration::verify_certificate(&cert);
            Ok(report(&r, r.valid))
        }
        Command::Selftest => {
            if dot {
                return Err(dot_only("selftest"));
            }
            let dir = std::env::var_os("TROPIC_FIXTURES").map(PathBuf::from);
            let r = selftest::run(dir.as_deref()).map_err(Failure::Parse)?;
            Ok(report(&r, r.passed))
        }
    }
}

fn emit(cli_out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match cli_out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("stdout: {e}"))),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let _ = write!(stderr, "{e}");
            let f = Failure::Usage(e.kind().to_string());
            let _ = stdout.write_all(to_json(&f.report()).as_bytes());
            return f.code();
        }
    };
    let result = execute(&cli).and_then(|o| emit(cli.out.as_deref(), &o.text, stdout).map(|()| o.code));
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = stdout.write_all(to_json(&f.report()).as_bytes());
            f.code()
        }
    }
}
