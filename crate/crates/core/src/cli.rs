//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when an asserted property fails (or an audit
//! check fails), 2 on input errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{builtin, FiniteB1Algebra};
use crate::audit::audit;
use crate::decompose::{
    evans_report, laskerian_check, minimalize, radical_decomposition, weak_decompose,
};
use crate::error::Error;
use crate::format::{parse_algebra, write_algebra};
use crate::ideal::{enumeration_bound, Ideal};
use crate::report::{
    AnalysisReport, AssocPayload, BuiltinPayload, DecomposePayload, EvansPayload, IdealsPayload,
    LaskerianPayload, NilPayload, Payload, SpectrumPayload, ValidatePayload,
};
use crate::spectrum::{nilradical, IdealLattice};
use crate::ENGINE_VERSION;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    #[value(alias = "json-like")]
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "b1a",
    version,
    about = "Ideals, spectra and decompositions of finite B1-algebras"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Worker threads (output is identical for every value).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

/// `ALGEBRA` is a `.b1a` file path or `builtin:<name>`.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms.
    Validate { algebra: PathBuf },
    /// List all ideals in canonical order.
    Ideals {
        algebra: PathBuf,
        #[arg(long)]
        saturated: bool,
    },
    /// Primes, minimal and maximal ideals, associated primes, zero divisors.
    Spectrum { algebra: PathBuf },
    /// The nilradical r({0}).
    Nil { algebra: PathBuf },
    /// Associated primes with their witnesses.
    Assoc { algebra: PathBuf },
    /// Write a saturated radical ideal as an intersection of saturated primes.
    Decompose {
        algebra: PathBuf,
        /// Comma-separated element labels.
        #[arg(long)]
        ideal: String,
        /// Drop redundant components.
        #[arg(long)]
        minimal: bool,
        /// Decompose r(I) for a saturated I that need not be radical.
        #[arg(long)]
        radical: bool,
    },
    /// Is every saturated ideal a finite intersection of saturated primary ideals?
    Laskerian {
        algebra: PathBuf,
        /// Exit with 1 when the algebra is not laskerian.
        #[arg(long)]
        assert_laskerian: bool,
    },
    /// Evans reports for one ideal, or every saturated proper ideal.
    Evans {
        algebra: PathBuf,
        #[arg(long)]
        ideal: Option<String>,
        /// Exit with 1 when any report fails.
        #[arg(long)]
        assert_evans: bool,
    },
    /// Re-verify every structural theorem on this algebra.
    Audit { algebra: PathBuf },
    /// Print a builtin algebra (b1, trivial, example-6-2, chain-<n>, bool-<k>).
    Builtin { name: String },
}

/// Captured result of one CLI invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn load(path: &PathBuf) -> Result<(String, FiniteB1Algebra), Error> {
    let shown = path.display().to_string();
    if let Some(name) = shown.strip_prefix("builtin:") {
        return Ok((shown.clone(), builtin(name)?));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("cannot read {shown}: {e}"),
    })?;
    Ok((shown, parse_algebra(&text)?))
}

fn source_of(path: &PathBuf) -> Option<String> {
    let shown = path.display().to_string();
    match shown.strip_prefix("builtin:") {
        Some(name) => builtin(name).ok().map(|a| write_algebra(&a)),
        None => std::fs::read_to_string(path).ok(),
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
        {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Outcome::input_error(e),
        },
        None => execute(&cli),
    }
}

fn emit(format: OutputFormat, report: AnalysisReport, code: i32) -> Outcome {
    Outcome {
        code,
        stdout: match format {
            OutputFormat::Text => report.to_text(),
            OutputFormat::Json => report.to_json(),
        },
        stderr: String::new(),
    }
}

fn execute(cli: &Cli) -> Outcome {
    let report = |command: &str, algebra: String, result: Payload| AnalysisReport {
        command: command.to_string(),
        algebra,
        engine_version: ENGINE_VERSION.to_string(),
        result,
    };
    let bound = enumeration_bound();
    macro_rules! tri {
        ($e:expr) => {
            match $e {
                Ok(v) => v,
                Err(e) => return Outcome::input_error(e),
            }
        };
    }

    match &cli.command {
        Command::Validate { algebra } => match load(algebra) {
            Ok((name, alg)) => emit(
                cli.format,
                report(
                    "validate",
                    name,
                    Payload::Validate(ValidatePayload::valid(&alg)),
                ),
                0,
            ),
            Err(Error::Axioms(ax)) => {
                // Recover labels for the witness rendering.
                let names = source_of(algebra)
                    .and_then(|s| {
                        s.lines()
                            .map(|l| l.split('#').next().unwrap_or("").trim())
                            .find_map(|l| l.strip_prefix("elements").map(str::to_string))
                    })
                    .map(|l| l.split_whitespace().map(String::from).collect::<Vec<_>>())
                    .unwrap_or_default();
                let payload = ValidatePayload::invalid(&names, &ax);
                emit(
                    cli.format,
                    report(
                        "validate",
                        algebra.display().to_string(),
                        Payload::Validate(payload),
                    ),
                    2,
                )
            }
            Err(e) => Outcome::input_error(e),
        },
        Command::Ideals { algebra, saturated } => {
            let (name, alg) = tri!(load(algebra));
            let lattice = tri!(IdealLattice::new(&alg, bound));
            let payload = IdealsPayload::new(&alg, lattice.entries(), *saturated);
            emit(
                cli.format,
                report("ideals", name, Payload::Ideals(payload)),
                0,
            )
        }
        Command::Spectrum { algebra } => {
            let (name, alg) = tri!(load(algebra));
            let lattice = tri!(IdealLattice::new(&alg, bound));
            let s = tri!(lattice.spectrum());
            let payload = SpectrumPayload::new(&alg, &s);
            emit(
                cli.format,
                report("spectrum", name, Payload::Spectrum(payload)),
                0,
            )
        }
        Command::Nil { algebra } => {
            let (name, alg) = tri!(load(algebra));
            let payload = NilPayload {
                nilradical: nilradical(&alg).format(&alg),
            };
            emit(cli.format, report("nil", name, Payload::Nil(payload)), 0)
        }
        Command::Assoc { algebra } => {
            let (name, alg) = tri!(load(algebra));
            let lattice = tri!(IdealLattice::new(&alg, bound));
            let ass = tri!(lattice.associated_primes());
            let payload = AssocPayload::new(&alg, &ass);
            emit(
                cli.format,
                report("assoc", name, Payload::Assoc(payload)),
                0,
            )
        }
        Command::Decompose {
            algebra,
            ideal,
            minimal,
            radical,
        } => {
            let (name, alg) = tri!(load(algebra));
            let i = tri!(Ideal::parse(&alg, ideal));
            let mut d = if *radical {
                tri!(radical_decomposition(&alg, &i))
            } else {
                tri!(weak_decompose(&alg, &i))
            };
            if *minimal {
                d = minimalize(&alg, &d);
            }
            let payload = DecomposePayload::new(&alg, &d);
            emit(
                cli.format,
                report("decompose", name, Payload::Decompose(payload)),
                0,
            )
        }
        Command::Laskerian {
            algebra,
            assert_laskerian,
        } => {
            let (name, alg) = tri!(load(algebra));
            let lattice = tri!(IdealLattice::new(&alg, bound));
            let r = laskerian_check(&lattice);
            let code = if *assert_laskerian && !r.laskerian {
                1
            } else {
                0
            };
            let payload = LaskerianPayload::new(&alg, &r);
            emit(
                cli.format,
                report("laskerian", name, Payload::Laskerian(payload)),
                code,
            )
        }
        Command::Evans {
            algebra,
            ideal,
            assert_evans,
        } => {
            let (name, alg) = tri!(load(algebra));
            let targets = match ideal {
                Some(labels) => vec![tri!(Ideal::parse(&alg, labels))],
                None => tri!(IdealLattice::new(&alg, bound)).proper_saturated_ideals(),
            };
            let mut reports = Vec::with_capacity(targets.len());
            for t in &targets {
                reports.push(tri!(evans_report(&alg, t)));
            }
            let payload = EvansPayload::new(&alg, &reports);
            let code = if *assert_evans && !payload.passed {
                1
            } else {
                0
            };
            emit(
                cli.format,
                report("evans", name, Payload::Evans(payload)),
                code,
            )
        }
        Command::Audit { algebra } => {
            let (name, alg) = tri!(load(algebra));
            let lattice = tri!(IdealLattice::new(&alg, bound));
            let r = audit(&lattice);
            let code = if r.passed { 0 } else { 1 };
            emit(
                cli.format,
                report("audit", name, Payload::Audit(r.into())),
                code,
            )
        }
        Command::Builtin { name } => {
            let alg = tri!(builtin(name));
            let payload = BuiltinPayload {
                name: name.clone(),
                order: alg.order(),
                source: write_algebra(&alg),
            };
            emit(
                cli.format,
                report(
                    "builtin",
                    format!("builtin:{name}"),
                    Payload::Builtin(payload),
                ),
                0,
            )
        }
    }
}
