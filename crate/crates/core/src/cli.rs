//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when verification finds a mismatch, 2 on any
//! input or validation error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::expansion::{commutative_expand, quantum_expand, verify_against_oracle, ExpansionError};
use crate::io::{parse_arc, parse_seed, parse_surface, surface_to_json, InputError};
use crate::qalgebra::{ExponentVector, QCoeff};
use crate::seeds::{QuantumSeed, SeedError};
use crate::snakegraph::{SnakeError, SnakeGraph};
use crate::surface::{validate_arc, ArcId, CrossingSequence, SurfaceError, Triangulation};
use crate::valuation::{compute_valuation, omega, CrossingMultiplicities, ValuationError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qsnake", version, about = "Quantum Laurent expansions of cluster variables via snake graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Inputs {
    /// Surface file, or inline JSON
    #[arg(long)]
    pub surface: String,
    /// Seed file with Btilde and Lambda, or inline JSON (default: principal coefficients and quantization)
    #[arg(long)]
    pub seed: Option<String>,
    /// Emit one plain record per line
    #[arg(long)]
    pub machine: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Laurent expansion of an arc
    Expand {
        #[command(flatten)]
        inputs: Inputs,
        /// Arc file, or inline JSON
        #[arg(long)]
        arc: String,
        /// Quantum expansion instead of the commutative one
        #[arg(long)]
        quantum: bool,
        /// Also list every perfect matching with its exponent and valuation
        #[arg(long)]
        audit: bool,
    },
    /// Compare the expansion with the mutation oracle
    Verify {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        arc: String,
        /// Comma-separated flip directions, e.g. 0,1,0
        #[arg(long, value_delimiter = ',', required = true)]
        flips: Vec<usize>,
        /// Slot holding the arc after the flips (default: the last flip)
        #[arg(long)]
        slot: Option<usize>,
    },
    /// Perfect matchings with labels, heights and valuations
    Matchings {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        arc: String,
    },
    /// Valuation and Omega values on every matching
    Valuation {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        arc: String,
    },
    /// Flip an internal arc and print the new surface
    Flip {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        tau: usize,
    },
    /// Validate a seed and print its compatibility scalar
    CheckSeed {
        /// Seed file, or inline JSON
        #[arg(long)]
        seed: String,
        /// Also check the exchange matrix against this surface
        #[arg(long)]
        surface: Option<String>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Snake(#[from] SnakeError),
    #[error(transparent)]
    Valuation(#[from] ValuationError),
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error("{0}")]
    Usage(String),
    #[error("write failed: {0}")]
    Output(#[from] std::io::Error),
}

fn read_source(arg: &str) -> Result<String, CliError> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|source| CliError::Read { path: arg.to_string(), source })
}

fn load_surface(arg: &str) -> Result<Triangulation, CliError> {
    Ok(parse_surface(&read_source(arg)?)?)
}

fn load_arc(arg: &str) -> Result<CrossingSequence, CliError> {
    Ok(parse_arc(&read_source(arg)?)?)
}

fn load_seed(arg: Option<&str>, t: &Triangulation) -> Result<QuantumSeed, CliError> {
    match arg {
        Some(a) => Ok(parse_seed(&read_source(a)?)?),
        None => Ok(QuantumSeed::principal(&t.signed_adjacency(), None)?),
    }
}

fn machine_coeff(c: &QCoeff) -> String {
    c.terms().map(|(p, v)| format!("{p},{v}")).collect::<Vec<_>>().join(",")
}

fn csv(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn labels(g: &SnakeGraph, m: &crate::snakegraph::Matching) -> String {
    g.ordered_edge_labels(m).iter().map(|(_, l)| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(CliError::Output(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Expand { inputs, arc, quantum, audit } => {
            let t = load_surface(&inputs.surface)?;
            let gamma = load_arc(arc)?;
            let seed = load_seed(inputs.seed.as_deref(), &t)?;
            if *quantum {
                let x = quantum_expand(&t, &gamma, &seed)?;
                if inputs.machine {
                    for (e, c) in x.value.terms().rev() {
                        writeln!(out, "{};{}", csv(e.coords()), machine_coeff(c))?;
                    }
                } else {
                    writeln!(out, "{}", x.value)?;
                }
                if *audit {
                    for entry in &x.audit {
                        writeln!(out, "{} a={} v={}", entry.matching, entry.exponent, entry.v)?;
                    }
                }
            } else {
                let x = commutative_expand(&t, &gamma, seed.btilde())?;
                if inputs.machine {
                    for (e, c) in x.terms().rev() {
                        writeln!(out, "{};0,{c}", csv(e.coords()))?;
                    }
                } else {
                    writeln!(out, "{x}")?;
                }
                if *audit {
                    for entry in quantum_expand(&t, &gamma, &seed)?.audit {
                        writeln!(out, "{} a={}", entry.matching, entry.exponent)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { inputs, arc, flips, slot } => {
            let t = load_surface(&inputs.surface)?;
            let gamma = load_arc(arc)?;
            let seed = load_seed(inputs.seed.as_deref(), &t)?;
            let slot = match slot.or(flips.last().copied()) {
                Some(s) => s,
                None => return Err(CliError::Usage("--slot is required when no flips are given".into())),
            };
            let report = verify_against_oracle(&t, &seed, flips, &gamma, slot)?;
            match report.first_difference() {
                None => {
                    writeln!(out, "ok {}", report.expansion)?;
                    Ok(EXIT_OK)
                }
                Some((e, a, b)) => {
                    writeln!(out, "mismatch at X^{e}: expansion {a}, oracle {b}")?;
                    writeln!(out, "expansion: {}", report.expansion)?;
                    writeln!(out, "oracle:    {}", report.oracle)?;
                    Ok(EXIT_MISMATCH)
                }
            }
        }
        Command::Matchings { inputs, arc } => {
            let t = load_surface(&inputs.surface)?;
            let gamma = load_arc(arc)?;
            let seed = load_seed(inputs.seed.as_deref(), &t)?;
            let valid = validate_arc(&t, &gamma)?;
            let g = SnakeGraph::from_validated(&t, &valid);
            let v = compute_valuation(&g, &valid.crossings, seed.d())?;
            if !inputs.machine {
                write!(out, "{g}")?;
            }
            for (m, value) in v.iter() {
                let h = g.height_exponent(m, t.n_internal());
                if inputs.machine {
                    writeln!(out, "{m};{};{};{value}", labels(&g, m).replace(' ', ","), csv(&h))?;
                } else {
                    writeln!(out, "{m} labels [{}] height {} v {value}", labels(&g, m), ExponentVector::new(h))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Valuation { inputs, arc } => {
            let t = load_surface(&inputs.surface)?;
            let gamma = load_arc(arc)?;
            let seed = load_seed(inputs.seed.as_deref(), &t)?;
            let valid = validate_arc(&t, &gamma)?;
            let g = SnakeGraph::from_validated(&t, &valid);
            let v = compute_valuation(&g, &valid.crossings, seed.d())?;
            let mult = CrossingMultiplicities::new(&valid.crossings);
            for (m, value) in v.iter() {
                let table: Vec<String> = (0..g.n_tiles())
                    .filter(|&s| g.can_twist(m, s))
                    .map(|s| omega(&g, &mult, s, m, seed.d()).map(|o| format!("{}:{o}", s + 1)))
                    .collect::<Result<_, _>>()?;
                if inputs.machine {
                    writeln!(out, "{m};{value};{}", table.join(","))?;
                } else {
                    writeln!(out, "{m} v {value} omega {}", table.join(" "))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Flip { inputs, tau } => {
            let t = load_surface(&inputs.surface)?;
            let (flipped, _) = t.flip(ArcId(*tau))?;
            writeln!(out, "{}", surface_to_json(&flipped))?;
            if !inputs.machine {
                for row in flipped.signed_adjacency() {
                    writeln!(out, "{}", csv(&row))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::CheckSeed { seed, surface } => {
            let seed = parse_seed(&read_source(seed)?)?;
            if let Some(s) = surface {
                let t = load_surface(s)?;
                if seed.btilde().exchange() != t.signed_adjacency() {
                    return Err(CliError::Usage(
                        "exchange matrix differs from the signed adjacency matrix of the surface".into(),
                    ));
                }
            }
            writeln!(out, "d = {}", seed.d())?;
            Ok(EXIT_OK)
        }
    }
}
