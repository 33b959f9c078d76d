//! Command-line front end: computes, verifies and serializes Ext tables.
//!
//! [`run`] parses arguments and returns the exit code together with the text
//! destined for standard output and standard error, so the binary is a thin
//! wrapper and tests can drive it in-process.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sln_ext::clifford::{conjugation_twist, orbit_stabilizer, twist_unit};
use sln_ext::tables::{
    conjecture_table, ramanujan_sum, theorem2_oracle_table, theorem2_table, verify, CaseTag,
    ExtTable, VerifyReport,
};
use sln_ext::{Error, LatticeSpec};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Case {
    Ramified,
    Unramified,
}

impl From<Case> for CaseTag {
    fn from(c: Case) -> Self {
        match c {
            Case::Ramified => CaseTag::Ramified,
            Case::Unramified => CaseTag::Unramified,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sln-ext",
    version,
    about = "Exact Ext-dimension tables for SL_n principal series"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the Ext table for SL_n.
    Table {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "ramified")]
        case: Case,
        /// Compute from projector ranks instead of the closed form.
        #[arg(long)]
        oracle: bool,
        /// Index of the first constituent; selects the column b - a.
        #[arg(long, requires = "b", allow_hyphen_values = true)]
        a: Option<i64>,
        /// Index of the second constituent.
        #[arg(long, requires = "a", allow_hyphen_values = true)]
        b: Option<i64>,
        /// Select the single column j = b - a.
        #[arg(long, conflicts_with_all = ["a", "b"], allow_hyphen_values = true)]
        j: Option<i64>,
    },
    /// Cross-check all pipelines and the Euler-Poincare identity.
    Verify {
        #[arg(long)]
        n: u32,
    },
    /// Emit the Euler-Poincare vector and its Ramanujan-sum cross-check.
    Ep {
        #[arg(long)]
        n: u32,
    },
    /// Orbit size and stabilizer of phi under S_n.
    Orbit {
        #[arg(long)]
        n: u32,
    },
    /// Shift of the extension exponent under conjugation by d·e_1.
    Twist {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Generic table for a lattice given as JSON {rank, order, action}.
    Conjecture {
        #[arg(long, value_name = "FILE")]
        action: PathBuf,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(code: u8, message: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// A header plus rows, rendered as CSV or a Markdown table.
struct Grid {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Grid {
    fn csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| {
                    if c.contains(',') {
                        format!("\"{c}\"")
                    } else {
                        c.clone()
                    }
                })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn md(&self) -> String {
        let mut out = format!("| {} |\n", self.header.join(" | "));
        out.push('|');
        out.push_str(&"---|".repeat(self.header.len()));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!("| {} |\n", row.join(" | ")));
        }
        out
    }
}

fn render<T: Serialize>(value: &T, grid: impl FnOnce() -> Grid, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(value).expect("serializable") + "\n",
        Format::Csv => grid().csv(),
        Format::Md => grid().md(),
    }
}

fn render_table(t: &ExtTable, format: Format) -> String {
    match format {
        Format::Json => t.to_json() + "\n",
        Format::Csv => t.to_csv(),
        Format::Md => t.to_markdown(),
    }
}

#[derive(Serialize)]
struct ColumnOut {
    n: u32,
    case: String,
    j: u32,
    dims: Vec<u64>,
    ep: i64,
    provenance: String,
}

#[derive(Serialize)]
struct EpOut {
    n: u32,
    ep: Vec<i64>,
    ramanujan: Vec<i64>,
    agree: bool,
}

#[derive(Serialize)]
struct OrbitOut {
    n: u32,
    orbit_size: usize,
    stabilizer_order: usize,
    generators: Vec<String>,
    stabilizer: Vec<String>,
}

#[derive(Serialize)]
struct TwistOut {
    n: u32,
    d: i64,
    twist: u32,
    unit: u32,
}

fn core_error(err: Error) -> (u8, String) {
    let code = match err {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    };
    (code, err.to_string())
}

fn execute(cli: &Cli) -> Result<(u8, String), (u8, String)> {
    let format = cli.format;
    match &cli.command {
        Command::Table {
            n,
            case,
            oracle,
            a,
            b,
            j,
        } => {
            let table = if *oracle {
                theorem2_oracle_table(*n, (*case).into())
            } else {
                theorem2_table(*n, (*case).into())
            }
            .map_err(core_error)?;
            let column = match (a, b, j) {
                (Some(a), Some(b), _) => Some(b - a),
                (_, _, Some(j)) => Some(*j),
                _ => None,
            };
            let Some(j) = column else {
                return Ok((EXIT_OK, render_table(&table, format)));
            };
            let j = j.rem_euclid(*n as i64);
            let out = ColumnOut {
                n: *n,
                case: table.case().to_string(),
                j: j as u32,
                dims: table.column(j),
                ep: table.ep_vector()[j as usize],
                provenance: table.provenance().to_string(),
            };
            let grid = || Grid {
                header: vec!["r", "dim"],
                rows: out
                    .dims
                    .iter()
                    .enumerate()
                    .map(|(r, d)| vec![r.to_string(), d.to_string()])
                    .collect(),
            };
            Ok((EXIT_OK, render(&out, grid, format)))
        }
        Command::Verify { n } => {
            let report = verify(*n).map_err(core_error)?;
            let code = if report.ok() { EXIT_OK } else { EXIT_MISMATCH };
            Ok((code, render_verify(&report, format)))
        }
        Command::Ep { n } => {
            let table = theorem2_table(*n, CaseTag::Ramified).map_err(core_error)?;
            let ep = table.ep_vector();
            let ramanujan = (0..*n as i64)
                .map(|j| ramanujan_sum(*n, j))
                .collect::<Result<Vec<_>, _>>()
                .map_err(core_error)?;
            let agree = ep == ramanujan && ep.iter().sum::<i64>() == 0;
            let out = EpOut {
                n: *n,
                ep,
                ramanujan,
                agree,
            };
            let grid = || Grid {
                header: vec!["j", "ep", "ramanujan"],
                rows: (0..out.ep.len())
                    .map(|j| {
                        vec![
                            j.to_string(),
                            out.ep[j].to_string(),
                            out.ramanujan[j].to_string(),
                        ]
                    })
                    .collect(),
            };
            let code = if agree { EXIT_OK } else { EXIT_MISMATCH };
            Ok((code, render(&out, grid, format)))
        }
        Command::Orbit { n } => {
            let o = orbit_stabilizer(*n).map_err(core_error)?;
            let out = OrbitOut {
                n: o.n,
                orbit_size: o.orbit_size,
                stabilizer_order: o.stabilizer.len(),
                generators: vec![o.generator.cycle_notation()],
                stabilizer: o.stabilizer.iter().map(|p| p.cycle_notation()).collect(),
            };
            let grid = || Grid {
                header: vec!["n", "orbit_size", "stabilizer_order", "generator"],
                rows: vec![vec![
                    out.n.to_string(),
                    out.orbit_size.to_string(),
                    out.stabilizer_order.to_string(),
                    out.generators.join(" "),
                ]],
            };
            Ok((EXIT_OK, render(&out, grid, format)))
        }
        Command::Twist { n, d } => {
            let twist = conjugation_twist(*n, *d).map_err(core_error)?;
            let unit = twist_unit(*n).map_err(core_error)?;
            let out = TwistOut {
                n: *n,
                d: *d,
                twist,
                unit,
            };
            let grid = || Grid {
                header: vec!["n", "d", "twist", "unit"],
                rows: vec![vec![
                    out.n.to_string(),
                    out.d.to_string(),
                    out.twist.to_string(),
                    out.unit.to_string(),
                ]],
            };
            Ok((EXIT_OK, render(&out, grid, format)))
        }
        Command::Conjecture { action } => {
            let text = std::fs::read_to_string(action)
                .map_err(|e| (EXIT_USAGE, format!("cannot read {}: {e}", action.display())))?;
            let lattice = LatticeSpec::from_json(&text)
                .and_then(|spec| spec.to_lattice())
                .map_err(core_error)?;
            let table = conjecture_table(&lattice).map_err(core_error)?;
            Ok((EXIT_OK, render_table(&table, format)))
        }
    }
}

fn render_verify(report: &VerifyReport, format: Format) -> String {
    let grid = || Grid {
        header: vec!["pipeline", "r", "j", "expected", "found"],
        rows: report
            .mismatches
            .iter()
            .map(|m| {
                vec![
                    m.pipeline.to_string(),
                    m.r.map_or_else(String::new, |r| r.to_string()),
                    m.j.to_string(),
                    m.expected.to_string(),
                    m.found.to_string(),
                ]
            })
            .collect(),
    };
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => grid().csv(),
        Format::Md => {
            let mut out = format!(
                "n = {}: {} cells checked across {}; {}\n",
                report.n,
                report.cells_checked,
                report.pipelines.join(", "),
                if report.ok() { "all agree" } else { "MISMATCH" }
            );
            if !report.mismatches.is_empty() {
                out.push('\n');
                out.push_str(&grid().md());
            }
            for v in &report.invariant_violations {
                out.push_str(&format!("- {v}\n"));
            }
            out
        }
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
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let (code, text) = match execute(&cli) {
        Ok(v) => v,
        Err((code, message)) => return Outcome::failure(code, message),
    };
    match &cli.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome::failure(EXIT_USAGE, format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome {
            code,
            stdout: text,
            stderr: String::new(),
        },
    }
}
