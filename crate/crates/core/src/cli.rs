//! Command-line driver. Exit status: 0 success, 1 a check failed, 2 usage
//! error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{nahm_character, poly_to_string, recursion_check, shifted_character_check, CharacterJson};
use crate::cocycle::{verify_cocycle, verify_nu_hat, LatticeElement, DEFAULT_WINDOW};
use crate::error::{Error, Result};
use crate::lattice::{Family, RootSystem, RootSystemKind};
use crate::modes::{verify_commutator_forms, verify_pair_lemma, verify_simple_pairing_lemma};
use crate::report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Root systems are named `A <n>` for A_{2n-1}, `D <n>` for D_n, and `E6`.
#[derive(Debug, Parser)]
#[command(name = "twisted-principal", version, about = "Twisted principal subspaces: root data, cocycles, characters")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Check {
    Cocycle,
    Nuhat,
    Pairs,
    Simple,
    Recursion,
    Shifted,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots, ν-orbits of simple roots, orbit representatives.
    Roots {
        /// `A <n>` (A_{2n-1}), `D <n>`, or `E6`
        #[arg(num_args = 1..=2, required = true)]
        kind: Vec<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The charge matrix A and the exponents a_j.
    Matrix {
        #[arg(num_args = 1..=2, required = true)]
        kind: Vec<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The multigraded character χ′ to q-degree `--order`.
    Character {
        #[arg(num_args = 1..=2, required = true)]
        kind: Vec<String>,
        #[arg(long)]
        order: usize,
        /// 1-based label of the simple root (an orbit representative) to shift by
        #[arg(long)]
        shift: Option<usize>,
        /// Also solve the recursions and check residuals
        #[arg(long)]
        check_recursion: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run verification suites.
    Verify {
        #[arg(num_args = 1..=2, required = true)]
        kind: Vec<String>,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        checks: Vec<Check>,
        /// Coordinate bound of the lattice window for cocycle checks
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: i64,
        /// q-degree used by the recursion and shifted checks
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

pub fn parse_kind(words: &[String]) -> Result<RootSystemKind> {
    let bad = || Error::Config(format!("cannot parse root system {:?}; use `A <n>`, `D <n>` or `E6`", words.join(" ")));
    let (family, n) = match words {
        [one] if one.eq_ignore_ascii_case("e6") => return Ok(RootSystemKind::e6()),
        [f, n] => (f.as_str(), n.parse::<u32>().map_err(|_| bad())?),
        _ => return Err(bad()),
    };
    match family {
        "A" | "a" => RootSystemKind::a_odd(n),
        "D" | "d" => RootSystemKind::d(n),
        "E" | "e" if n == 6 => Ok(RootSystemKind::e6()),
        _ => Err(bad()),
    }
}

/// Pretty JSON with keys in sorted order, so that re-parsing and
/// re-serializing reproduces the same bytes.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("serializable");
    serde_json::to_string_pretty(&value).expect("serializable")
}

fn header(rs: &RootSystem) -> Value {
    json!({ "kind": rs.kind().family().label(), "n": rs.kind().n() })
}

fn labels(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn roots(rs: &RootSystem, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    let orbits: Vec<Vec<usize>> = rs.simple_orbits().iter().map(|o| labels(o)).collect();
    let reps = labels(rs.orbit_representatives());
    match format {
        Format::Json => {
            let roots: Vec<Value> = (0..rs.num_positive())
                .map(|i| {
                    json!({
                        "coords": rs.root_coords(i),
                        "ambient": rs.positive_roots()[i].coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "nu": rs.nu_root(i),
                        "fixed": rs.is_fixed_root(i),
                    })
                })
                .collect();
            let mut v = header(rs);
            v["positive_roots"] = Value::from(roots);
            v["simple_orbits"] = json!(orbits);
            v["orbit_representatives"] = json!(reps);
            writeln!(out, "{}", to_json(&v))
        }
        Format::Text => {
            writeln!(out, "{}: {} positive roots", rs.kind(), rs.num_positive())?;
            for i in 0..rs.num_positive() {
                let nu = rs.nu_root(i);
                let tag = if nu == i { "fixed".to_string() } else { format!("ν ↦ #{nu}") };
                writeln!(out, "  #{i:<3} {}  {}  {tag}", LatticeElement::root(rs, i), rs.positive_roots()[i])?;
            }
            writeln!(out, "ν-orbits of simple roots: {orbits:?}")?;
            writeln!(out, "orbit representatives: {reps:?}")
        }
    }
}

fn matrix(rs: &RootSystem, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    let a = rs.charge_matrix();
    match format {
        Format::Json => {
            let mut v = header(rs);
            v["matrix"] = json!(a.entries);
            v["a"] = json!(a.a);
            writeln!(out, "{}", to_json(&v))
        }
        Format::Text => {
            writeln!(out, "{} charge matrix (rows/columns: α_{:?})", rs.kind(), labels(rs.orbit_representatives()))?;
            for row in &a.entries {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                writeln!(out, "  [{} ]", cells.join(""))?;
            }
            writeln!(out, "a = {:?}", a.a)
        }
    }
}

fn report_output(reports: &[Report], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", to_json(&reports)),
        Format::Text => {
            for r in reports {
                writeln!(out, "{r}")?;
            }
            Ok(())
        }
    }
}

fn status(reports: &[Report]) -> i32 {
    if reports.iter().all(|r| r.pass) {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn shift_index(rs: &RootSystem, label: Option<usize>) -> Result<Option<usize>> {
    match label {
        None => Ok(None),
        Some(l) if l >= 1 && rs.orbit_position(l - 1).is_some() => Ok(Some(l - 1)),
        Some(l) => Err(Error::Config(format!(
            "--shift {l} is not an orbit representative of {}; choose from {:?}",
            rs.kind(),
            labels(rs.orbit_representatives())
        ))),
    }
}

pub fn run_reports(rs: &RootSystem, checks: &[Check], window: i64, order: usize) -> Vec<Report> {
    let mut selected: Vec<Check> = if checks.contains(&Check::All) {
        vec![Check::Cocycle, Check::Nuhat, Check::Pairs, Check::Simple, Check::Recursion, Check::Shifted]
    } else {
        checks.to_vec()
    };
    selected.sort();
    selected.dedup();
    let mut reports = Vec::new();
    for c in selected {
        match c {
            Check::Cocycle => reports.push(verify_cocycle(rs, window)),
            Check::Nuhat => reports.push(verify_nu_hat(rs, window)),
            Check::Pairs => {
                reports.push(verify_pair_lemma(rs));
                reports.push(verify_commutator_forms(rs));
            }
            Check::Simple => reports.push(verify_simple_pairing_lemma(rs)),
            Check::Recursion => reports.push(recursion_check(rs, order)),
            Check::Shifted => {
                for &i in rs.orbit_representatives() {
                    reports.push(shifted_character_check(rs, i, order).expect("orbit representative"));
                }
            }
            Check::All => unreachable!(),
        }
    }
    reports
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::Config(format!("write failed: {e}"));
    match &cli.command {
        Command::Roots { kind, format } => {
            let rs = RootSystem::new(parse_kind(kind)?);
            roots(&rs, *format, out).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Matrix { kind, format } => {
            let rs = RootSystem::new(parse_kind(kind)?);
            matrix(&rs, *format, out).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Character { kind, order, shift, check_recursion, format } => {
            let rs = RootSystem::new(parse_kind(kind)?);
            let shift = shift_index(&rs, *shift)?;
            let series = nahm_character(&rs, *order, shift)?;
            let reports = if *check_recursion { vec![recursion_check(&rs, *order)] } else { Vec::new() };
            match format {
                Format::Json => {
                    let ch = CharacterJson::new(rs.kind(), shift, &series);
                    let text = if *check_recursion {
                        to_json(&json!({ "character": ch, "reports": reports }))
                    } else {
                        to_json(&ch)
                    };
                    writeln!(out, "{text}").map_err(io)?;
                }
                Format::Text => {
                    let shifted = shift.map_or(String::new(), |i| format!(", shifted by α_{}", i + 1));
                    writeln!(out, "{} character to q^{order}{shifted}", rs.kind()).map_err(io)?;
                    writeln!(out, "{series}").map_err(io)?;
                    writeln!(out, "x = 1: {}", poly_to_string(&series.specialize_x1())).map_err(io)?;
                    report_output(&reports, Format::Text, out).map_err(io)?;
                }
            }
            Ok(status(&reports))
        }
        Command::Verify { kind, checks, window, order, format } => {
            let rs = RootSystem::new(parse_kind(kind)?);
            if *window < 1 {
                return Err(Error::Config(format!("--window must be at least 1, got {window}")));
            }
            let reports = run_reports(&rs, checks, *window, *order);
            report_output(&reports, *format, out).map_err(io)?;
            Ok(status(&reports))
        }
    }
}

/// Runs a parsed command, writing results to `out` and errors to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            }
        }
    }
}

/// The command-line spelling of a root system, inverse to [`parse_kind`].
pub fn describe_kind_syntax(kind: RootSystemKind) -> String {
    match kind.family() {
        Family::AOdd => format!("A {}", kind.n()),
        Family::D => format!("D {}", kind.n()),
        Family::E6 => "E6".to_string(),
    }
}
