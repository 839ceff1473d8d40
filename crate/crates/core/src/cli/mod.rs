//! Command-line front end.
//!
//! Subcommands: `exact`, `table`, `mc`, `round`, `compare`. Output goes to
//! the `out` writer as text, JSON (sorted keys, floats with six decimals,
//! rationals as `"p/q"`) or CSV; diagnostics go to `err`.
//!
//! Exit codes: 0 success, 1 usage error, 2 internal invariant violation.
//!
//! Randomized commands take `--seed`; without it the `QDLG_SEED` environment
//! variable is used, and failing that seed 0.

mod render;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{compare_claims, enumerate_exact, paper_case_table};
use crate::attacks::{EveStrategy, Route, Selection};
use crate::protocol::{
    run_round, run_session, ComparisonRule, Conventions, RoundConfig, RoundMode,
};
use crate::qcore::{LabelingConvention, PauliCode, RandomSource};
use crate::Error;

use render::{Format, Output};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVARIANT: i32 = 2;

const DEFAULT_SEED: u64 = 0;
const SEED_ENV: &str = "QDLG_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "qdialog",
    version,
    about = "Quantum dialogue eavesdropping analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact detection probabilities by exhaustive enumeration
    Exact(ExactArgs),
    /// The intercept-attack case table under strict bookkeeping
    Table(FormatArg),
    /// Monte Carlo session statistics
    Mc(McArgs),
    /// Transcript of a single round
    Round(RoundArgs),
    /// Side-by-side report of the disputed averages
    Compare(FormatArg),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AttackKind {
    None,
    Intercept,
    Disturb,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RouteArg {
    B2a,
    A2b,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SelectionArg {
    Fixed,
    Uniform4,
    CoinIz,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LabelsArg {
    Oe,
    Pp,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CompareArg {
    StrictPaper,
    Converted,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Message,
    Control,
}

#[derive(Debug, Args)]
struct AttackArgs {
    #[arg(long, value_enum, default_value = "none")]
    attack: AttackKind,
    /// Channel leg Eve acts on [default: b2a for intercept, a2b for disturb]
    #[arg(long, value_enum)]
    route: Option<RouteArg>,
    /// Fixed disturbance operator bits, e.g. 11 (implies --selection fixed)
    #[arg(long, value_name = "BB")]
    uv: Option<String>,
    /// Disturbance operator selection [default: uniform4, or fixed with --uv]
    #[arg(long, value_enum)]
    selection: Option<SelectionArg>,
}

#[derive(Debug, Args)]
struct ConventionArgs {
    #[arg(long = "outcome-labels", value_enum, default_value = "oe")]
    outcome_labels: LabelsArg,
    #[arg(long = "expected-labels", value_enum, default_value = "oe")]
    expected_labels: LabelsArg,
    #[arg(long, value_enum, default_value = "converted")]
    compare: CompareArg,
}

#[derive(Debug, Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Args)]
struct ExactArgs {
    #[command(flatten)]
    attack: AttackArgs,
    #[command(flatten)]
    conventions: ConventionArgs,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct McArgs {
    #[command(flatten)]
    attack: AttackArgs,
    #[command(flatten)]
    conventions: ConventionArgs,
    #[arg(long, default_value_t = 100_000)]
    rounds: u64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long = "control-fraction", default_value_t = 1.0)]
    control_fraction: f64,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct RoundArgs {
    #[command(flatten)]
    attack: AttackArgs,
    #[command(flatten)]
    conventions: ConventionArgs,
    /// Round bits in the order i j k l, e.g. 1001
    #[arg(long, value_name = "IJKL")]
    bits: String,
    #[arg(long, value_enum, default_value = "control")]
    mode: ModeArg,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    format: FormatArg,
}

fn labels(arg: LabelsArg) -> LabelingConvention {
    match arg {
        LabelsArg::Oe => LabelingConvention::OperatorEncoding,
        LabelsArg::Pp => LabelingConvention::ParityPhase,
    }
}

impl ConventionArgs {
    fn resolve(&self) -> Conventions {
        let comparison = match self.compare {
            CompareArg::StrictPaper => ComparisonRule::StrictPaper,
            CompareArg::Converted => ComparisonRule::Converted,
        };
        Conventions::new(
            labels(self.outcome_labels),
            labels(self.expected_labels),
            comparison,
        )
    }
}

fn parse_bits(s: &str, n: usize, flag: &str) -> Result<Vec<u8>, Error> {
    let bits: Option<Vec<u8>> = s
        .chars()
        .map(|c| match c {
            '0' => Some(0),
            '1' => Some(1),
            _ => None,
        })
        .collect();
    match bits {
        Some(b) if b.len() == n => Ok(b),
        _ => Err(Error::Usage(format!(
            "{flag} expects {n} binary digits, got {s:?}"
        ))),
    }
}

impl AttackArgs {
    fn resolve(&self) -> Result<EveStrategy, Error> {
        let route = self.route.map(|r| match r {
            RouteArg::B2a => Route::BtoA,
            RouteArg::A2b => Route::AtoB,
        });
        let fixed = self
            .uv
            .as_deref()
            .map(|s| parse_bits(s, 2, "--uv").map(|b| PauliCode::new(b[0], b[1])))
            .transpose()?;
        match self.attack {
            AttackKind::None | AttackKind::Intercept
                if fixed.is_some() || self.selection.is_some() =>
            {
                Err(Error::Usage(
                    "--uv and --selection apply only to --attack disturb".into(),
                ))
            }
            AttackKind::None if route.is_some() => {
                Err(Error::Usage("--route needs an active attack".into()))
            }
            AttackKind::None => Ok(EveStrategy::Passive),
            AttackKind::Intercept => Ok(EveStrategy::InterceptMeasure {
                route: route.unwrap_or(Route::BtoA),
            }),
            AttackKind::Disturb => {
                let selection = match (self.selection, fixed) {
                    (Some(SelectionArg::Fixed) | None, Some(code)) => Selection::Fixed(code),
                    (Some(SelectionArg::Fixed), None) => {
                        return Err(Error::Usage("--selection fixed requires --uv".into()))
                    }
                    (Some(_), Some(_)) => {
                        return Err(Error::Usage(
                            "--uv is only valid with --selection fixed".into(),
                        ))
                    }
                    (Some(SelectionArg::CoinIz), None) => Selection::CoinIZ,
                    (Some(SelectionArg::Uniform4) | None, None) => Selection::UniformAll4,
                };
                Ok(EveStrategy::DisturbPauli {
                    route: route.unwrap_or(Route::AtoB),
                    selection,
                })
            }
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Error> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Usage(format!("{SEED_ENV}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn execute(command: &Command, argv: &[String]) -> Result<(Output, Format), Error> {
    let echo = argv.iter().skip(1).cloned().collect::<Vec<_>>();
    match command {
        Command::Exact(a) => {
            let attack = a.attack.resolve()?;
            let report = enumerate_exact(attack, a.conventions.resolve());
            Ok((Output::detection(echo, &report), a.format.format))
        }
        Command::Table(f) => Ok((Output::detection(echo, &paper_case_table()), f.format)),
        Command::Compare(f) => Ok((Output::claims(echo, &compare_claims()), f.format)),
        Command::Mc(a) => {
            let attack = a.attack.resolve()?;
            let conventions = a.conventions.resolve();
            let seed = resolve_seed(a.seed)?;
            let rand = RandomSource::new(seed);
            let bits = rand.child(u64::MAX);
            let stats = run_session(
                a.rounds,
                a.control_fraction,
                &bits,
                attack,
                conventions,
                &rand,
            )?;
            let exact = enumerate_exact(attack, conventions).average;
            Ok((
                Output::session(echo, attack, conventions, &stats, exact),
                a.format.format,
            ))
        }
        Command::Round(a) => {
            let attack = a.attack.resolve()?;
            let b = parse_bits(&a.bits, 4, "--bits")?;
            let seed = resolve_seed(a.seed)?;
            let config = RoundConfig {
                alice_bits: PauliCode::new(b[0], b[1]),
                bob_bits: PauliCode::new(b[2], b[3]),
                mode: match a.mode {
                    ModeArg::Message => RoundMode::Message,
                    ModeArg::Control => RoundMode::Control,
                },
                conventions: a.conventions.resolve(),
            };
            let transcript = run_round(config, attack, &mut RandomSource::new(seed));
            transcript.validate()?;
            Ok((
                Output::round(echo, attack, seed, &transcript),
                a.format.format,
            ))
        }
    }
}

/// Parses `argv` (program name first), runs the command and writes its
/// output. Returns the process exit code.
pub fn run<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli.command, argv) {
        Ok((output, format)) => match output.render(format) {
            Ok(text) => {
                if out.write_all(text.as_bytes()).is_err() {
                    return EXIT_INVARIANT;
                }
                EXIT_OK
            }
            Err(e) => {
                let _ = writeln!(err, "error: failed to render output: {e}");
                EXIT_INVARIANT
            }
        },
        Err(Error::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            EXIT_USAGE
        }
        Err(e @ Error::Invariant(_)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVARIANT
        }
    }
}
