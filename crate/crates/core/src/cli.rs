//! Command-line front end. JSON in, JSON or DOT out.
//!
//! Exit status is 0 on success, 1 on a domain error (reported on stderr as
//! `{"error": {"code": ..., "message": ...}}`) and 2 on a usage error.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{classify, classify_parabolic, profile_of};
use crate::degeneration::{closure_set, covers, leq_deg, move_closure, poset};
use crate::error::{Error, Result};
use crate::fforacle::{census, invariance_check};
use crate::linalg::{format_rational, Matrix};
use crate::melnikov::{melnikov_leq, n_sigma, rank_matrix};
use crate::normalform::{entry_datum, genericity, normal_form, semiinvariant, weight, SemiinvariantDatum};
use crate::olp::{enumerate, Involution, OrientedLinkPattern};
use crate::quiver::{
    hom_dim, indecomposable, krull_schmidt, rep_of_matrix, zwara_leq, BoundQuiverRep, DimensionVector,
    IndecomposableId,
};

#[derive(Parser, Debug)]
#[command(name = "borel-orbits", version, about = "Borel orbits of nilpotent matrices in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A JSON input: a file path, or `-` for standard input.
#[derive(Args, Debug)]
struct Input {
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a 2-nilpotent matrix by its oriented link pattern.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Block sizes for a parabolic classification, e.g. 2,1.
        #[arg(long, value_delimiter = ',')]
        parabolic: Option<Vec<usize>>,
        /// Include the intersection profile.
        #[arg(long)]
        profile: bool,
    },
    /// List every oriented link pattern on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Hasse diagram of the degeneration order.
    Poset {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Shorthand for --format dot.
        #[arg(long)]
        dot: bool,
    },
    /// Covering pairs of the degeneration order.
    Covers {
        #[arg(long)]
        n: usize,
    },
    /// Orbit closure of a pattern.
    Closure {
        #[command(flatten)]
        input: Input,
        /// Generate the closure by local moves instead of the order.
        #[arg(long)]
        moves: bool,
    },
    /// Whether the second pattern lies in the closure of the first.
    Leq {
        upper: String,
        lower: String,
        /// Decide with Hom dimensions instead of the counting statistics.
        #[arg(long)]
        hom: bool,
    },
    /// Rank matrices and their order on involutions.
    Melnikov {
        #[command(subcommand)]
        command: MelnikovCommand,
    },
    /// Quiver representations.
    Rep {
        #[command(subcommand)]
        command: RepCommand,
    },
    /// Generic normal forms and semiinvariants.
    Nf {
        #[command(subcommand)]
        command: NfCommand,
    },
    /// Finite-field orbit census.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum MelnikovCommand {
    /// Rank matrix of an involution (`{"n", "cycles"}`) or of a strictly
    /// upper-triangular matrix.
    RankMatrix {
        #[command(flatten)]
        input: Input,
    },
    /// `sigma_prime ≼ sigma`.
    Leq { sigma_prime: String, sigma: String },
}

#[derive(Args, Debug)]
struct RepShape {
    /// Vertex count, needed for indecomposable names.
    #[arg(long)]
    n: Option<usize>,
    /// Dimension vector for matrix input, e.g. 1,2,3 (default 1..n).
    #[arg(long, value_delimiter = ',')]
    dims: Option<Vec<usize>>,
}

#[derive(Subcommand, Debug)]
enum RepCommand {
    /// dim Hom(X, Y).
    HomDim {
        x: String,
        y: String,
        #[command(flatten)]
        shape: RepShape,
    },
    /// Krull-Schmidt multiplicities.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        shape: RepShape,
    },
}

#[derive(Subcommand, Debug)]
enum NfCommand {
    /// Corner minors and the genericity verdict.
    Check {
        #[command(flatten)]
        input: Input,
    },
    /// Normal form H and conjugator g.
    Compute {
        #[command(flatten)]
        input: Input,
    },
    /// Evaluate a determinantal semiinvariant and its weight.
    Semiinv {
        #[command(flatten)]
        input: Input,
        /// Datum JSON file `{"a", "b", "P"}`.
        #[arg(long, conflicts_with = "entry", required_unless_present = "entry")]
        datum: Option<String>,
        /// Use the entry-recovery datum for (i, j), e.g. 3,1.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        entry: Option<Vec<usize>>,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Orbit count and labels over F_q.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        /// Full JSON with representatives instead of a one-line summary.
        #[arg(long)]
        json: bool,
    },
    /// Check that the intersection profile is an orbit invariant.
    Invariance {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn read_text(&mut self, path: &str) -> Result<String> {
        if path == "-" {
            if self.stdin_used {
                return Err(Error::Io("standard input can be read only once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| Error::Io(format!("stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
        }
    }

    fn read_json<T: DeserializeOwned>(&mut self, path: &str) -> Result<T> {
        let text = self.read_text(path)?;
        serde_json::from_str(&text).map_err(|e| match path {
            "-" => Error::Parse(format!("stdin: {e}")),
            _ => Error::Parse(format!("{path}: {e}")),
        })
    }

    fn read_value(&mut self, path: &str) -> Result<Value> {
        self.read_json(path)
    }
}

fn from_value<T: DeserializeOwned>(v: Value, what: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable output")
}

/// A representation given as a representation, a matrix, or an
/// indecomposable name.
fn read_rep(io: &mut Io, path: &str, shape: &RepShape) -> Result<BoundQuiverRep> {
    let v = io.read_value(path)?;
    if v.get("loop").is_some() {
        return from_value(v, path);
    }
    if v.get("kind").is_some() {
        let id: IndecomposableId = from_value(v, path)?;
        let n = shape
            .n
            .ok_or_else(|| Error::Parse("indecomposable input needs --n".into()))?;
        return indecomposable(id, n);
    }
    let a: Matrix = from_value(v, path)?;
    let dims = match &shape.dims {
        Some(d) => DimensionVector(d.clone()),
        None => DimensionVector::flag(a.rows()),
    };
    rep_of_matrix(&a, &dims)
}

fn exec(command: Command, io: &mut Io) -> Result<String> {
    let out = match command {
        Command::Classify { input, parabolic, profile } => {
            let a: Matrix = io.read_json(&input.input)?;
            let mut out = match parabolic {
                Some(blocks) => serde_json::to_value(classify_parabolic(&a, &blocks)?),
                None => serde_json::to_value(classify(&a)?),
            }
            .expect("serializable");
            if profile {
                out["profile"] = serde_json::to_value(profile_of(&a)?.grid()).expect("serializable");
            }
            to_json(&out)
        }
        Command::Enumerate { n } => to_json(&enumerate(n)?),
        Command::Poset { n, format, dot } => {
            let p = poset(n)?;
            match (format, dot) {
                (Format::Dot, _) | (_, true) => return Ok(p.to_dot()),
                _ => to_json(&p),
            }
        }
        Command::Covers { n } => {
            let pairs: Vec<Value> = covers(n)?.iter().map(|(u, l)| json!({"upper": u, "lower": l})).collect();
            to_json(&pairs)
        }
        Command::Closure { input, moves } => {
            let p: OrientedLinkPattern = io.read_json(&input.input)?;
            to_json(&if moves { move_closure(&p)? } else { closure_set(&p)? })
        }
        Command::Leq { upper, lower, hom } => {
            let u: OrientedLinkPattern = io.read_json(&upper)?;
            let l: OrientedLinkPattern = io.read_json(&lower)?;
            let leq = if hom { zwara_leq(&u, &l)? } else { leq_deg(&u, &l)? };
            to_json(&json!({ "leq": leq }))
        }
        Command::Melnikov { command } => match command {
            MelnikovCommand::RankMatrix { input } => {
                let v = io.read_value(&input.input)?;
                let u: Matrix = if v.get("cycles").is_some() {
                    n_sigma(&from_value::<Involution>(v, &input.input)?)
                } else {
                    from_value(v, &input.input)?
                };
                to_json(&rank_matrix(&u)?)
            }
            MelnikovCommand::Leq { sigma_prime, sigma } => {
                let sp: Involution = io.read_json(&sigma_prime)?;
                let s: Involution = io.read_json(&sigma)?;
                to_json(&json!({ "leq": melnikov_leq(&sp, &s)? }))
            }
        },
        Command::Rep { command } => match command {
            RepCommand::HomDim { x, y, shape } => {
                let x = read_rep(io, &x, &shape)?;
                let y = read_rep(io, &y, &shape)?;
                to_json(&json!({ "hom_dim": hom_dim(&x, &y)? }))
            }
            RepCommand::Decompose { input, shape } => {
                let m = read_rep(io, &input.input, &shape)?;
                let d = krull_schmidt(&m)?;
                let summands: Vec<Value> = d
                    .summands()
                    .into_iter()
                    .map(|(id, mult)| json!({ "summand": id, "multiplicity": mult }))
                    .collect();
                let mut out = json!({ "n": d.n(), "summands": summands });
                if let Some(p) = d.to_pattern() {
                    out["pattern"] = serde_json::to_value(p).expect("serializable");
                }
                to_json(&out)
            }
        },
        Command::Nf { command } => match command {
            NfCommand::Check { input } => to_json(&genericity(&io.read_json(&input.input)?)?),
            NfCommand::Compute { input } => {
                let nf = normal_form(&io.read_json(&input.input)?)?;
                to_json(&json!({ "H": nf.h, "g": nf.g }))
            }
            NfCommand::Semiinv { input, datum, entry } => {
                let a: Matrix = io.read_json(&input.input)?;
                let datum: SemiinvariantDatum = match (datum, entry) {
                    (Some(path), _) => io.read_json(&path)?,
                    (None, Some(ij)) if ij.len() == 2 => entry_datum(ij[0], ij[1], a.rows())?,
                    _ => return Err(Error::Parse("--entry takes two indices i,j".into())),
                };
                let value = semiinvariant(&a, &datum)?;
                to_json(&json!({ "value": format_rational(&value), "weight": weight(&datum, a.rows())? }))
            }
        },
        Command::Oracle { command } => match command {
            OracleCommand::Census { n, q, json } => {
                let c = census(n, q)?;
                if json {
                    to_json(&c)
                } else {
                    to_json(&json!({
                        "n": c.n,
                        "q": c.q,
                        "orbit_count": c.orbit_count,
                        "nilpotent_count": c.nilpotent_count,
                        "group_order": c.group_order,
                    }))
                }
            }
            OracleCommand::Invariance { n, q } => to_json(&invariance_check(n, q)?),
        },
    };
    Ok(out + "\n")
}

/// Runs the command line with explicit streams; returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    let mut io = Io { stdin, stdin_used: false };
    match exec(cli.command, &mut io) {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            0
        }
        Err(e) => {
            let body = json!({ "error": { "code": e.code(), "message": e.to_string() } });
            let _ = writeln!(stderr, "{body}");
            1
        }
    }
}
