//! Command-line front end. The `gengraph` binary is a thin wrapper over [`run`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::generator_graph::GeneratorGraph;
use crate::metric_dim::{
    is_resolving, metric_dimension_bruteforce, metric_dimension_formula, MetricBasis,
    DEFAULT_EXACT_CAP,
};
use crate::report;
use crate::topo_indices::compute_index_report;
use crate::verify::verify_range;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gengraph",
    version,
    about = "Generator graphs of cyclic groups: indices, metric dimension and formula checks"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Topological indices of Γ(Z_n), brute force against closed form
    Indices {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// One row per n. CSV columns, in order:
    /// n, phi, edges, diameter, wiener, gutman, harmonic, randic, sombor, metric_dimension.
    /// Index values are brute force; floats use 12 significant digits.
    Table {
        #[arg(long = "from")]
        from: u64,
        #[arg(long = "to")]
        to: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// Run every check over a range; exits 1 if any check fails
    Verify {
        #[arg(long = "from")]
        from: u64,
        #[arg(long = "to")]
        to: u64,
        /// Largest n for the exhaustive metric-dimension search
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        mdim_cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// Export Γ(Z_n) (vertices: generators first, then non-generators, each ascending)
    Graph {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// Metric dimension of Γ(Z_n): closed form, exact search within the cap
    Mdim {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        mdim_cap: usize,
        /// Include the distance-representation table of the basis
        #[arg(long)]
        representations: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Debug, Args)]
struct Out {
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
    Edgelist,
}

enum Failure {
    Usage(String),
    Checks(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn unsupported(cmd: &str, f: Format) -> Failure {
    let name = f.to_possible_value().expect("named").get_name().to_string();
    Failure::Usage(format!("format `{name}` is not supported by `{cmd}`"))
}

fn check_range(from: u64, to: u64) -> Result<(), Failure> {
    if from < 2 || from > to {
        return Err(Failure::Usage(format!(
            "invalid range [{from}, {to}]: need 2 <= from <= to"
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct MdimOutput {
    n: u64,
    generator_count: u64,
    formula: u64,
    exact: Option<MetricBasis>,
    /// basis as group elements
    basis_elements: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    representations: Option<Vec<Vec<u32>>>,
}

fn execute(cli: Cli) -> Result<(String, Option<PathBuf>), Failure> {
    match cli.command {
        Command::Indices { n, format, out } => {
            let r = compute_index_report(n)?;
            let body = match format {
                Format::Text => report::index_report_text(&r),
                Format::Json => report::index_report_json(&r),
                Format::Csv => report::index_report_csv(std::slice::from_ref(&r)),
                f => return Err(unsupported("indices", f)),
            };
            Ok((body, out.out))
        }
        Command::Table {
            from,
            to,
            format,
            out,
        } => {
            check_range(from, to)?;
            let rows = report::table_rows(from, to)?;
            let body = match format {
                Format::Csv => report::table_csv(&rows),
                Format::Json => report::table_json(&rows),
                Format::Text => report::table_text(&rows),
                f => return Err(unsupported("table", f)),
            };
            Ok((body, out.out))
        }
        Command::Verify {
            from,
            to,
            mdim_cap,
            format,
            out,
        } => {
            check_range(from, to)?;
            let summary = verify_range(from, to, mdim_cap)?;
            let body = match format {
                Format::Text => summary.to_text(),
                Format::Json => serde_json::to_string_pretty(&summary).expect("serializes") + "\n",
                f => return Err(unsupported("verify", f)),
            };
            if summary.is_success() {
                Ok((body, out.out))
            } else {
                write_output(&body, out.out.as_ref()).map_err(Failure::Usage)?;
                Err(Failure::Checks(format!(
                    "{} check(s) failed",
                    summary.totals.failed
                )))
            }
        }
        Command::Graph { n, format, out } => {
            let gg = GeneratorGraph::new(n)?;
            let body = match format {
                Format::Edgelist => gg.to_edge_list(),
                Format::Dot => gg.to_dot(),
                f => return Err(unsupported("graph", f)),
            };
            Ok((body, out.out))
        }
        Command::Mdim {
            n,
            mdim_cap,
            representations,
            format,
            out,
        } => {
            let gg = GeneratorGraph::new(n)?;
            let formula = metric_dimension_formula(n)?;
            let exact = if n as usize <= mdim_cap {
                Some(metric_dimension_bruteforce(gg.graph(), mdim_cap)?)
            } else {
                None
            };
            let basis_elements = exact
                .as_ref()
                .map(|b| {
                    b.basis
                        .iter()
                        .map(|&v| gg.element_of(v))
                        .collect::<Result<_, _>>()
                })
                .transpose()?;
            let table = match (&exact, representations) {
                (Some(b), true) => Some(is_resolving(gg.graph(), &b.basis)?.representations),
                _ => None,
            };
            let o = MdimOutput {
                n,
                generator_count: gg.generator_count(),
                formula,
                exact,
                basis_elements,
                representations: table,
            };
            let body = match format {
                Format::Json => serde_json::to_string_pretty(&o).expect("serializes") + "\n",
                Format::Text => mdim_text(&gg, &o),
                f => return Err(unsupported("mdim", f)),
            };
            Ok((body, out.out))
        }
    }
}

fn mdim_text(gg: &GeneratorGraph, o: &MdimOutput) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    writeln!(
        s,
        "Z_{}: |S| = {}, closed form dim = {}",
        o.n, o.generator_count, o.formula
    )
    .unwrap();
    match (&o.exact, &o.basis_elements) {
        (Some(b), Some(elems)) => {
            let verdict = if b.dimension as u64 == o.formula {
                "agrees"
            } else {
                "DISAGREES"
            };
            writeln!(
                s,
                "exact search: dim = {} ({verdict}), basis elements {:?}",
                b.dimension, elems
            )
            .unwrap();
        }
        _ => writeln!(s, "exact search skipped: n exceeds the cap").unwrap(),
    }
    if let Some(table) = &o.representations {
        for (v, r) in table.iter().enumerate() {
            let x = gg.element_of(v).expect("vertex in range");
            writeln!(s, "  r({x}) = {r:?}").unwrap();
        }
    }
    s
}

fn write_output(body: &str, path: Option<&PathBuf>) -> Result<(), String> {
    match path {
        Some(p) => {
            std::fs::write(p, body).map_err(|e| format!("cannot write {}: {e}", p.display()))
        }
        None => Ok(()),
    }
}

/// Parses `args` (program name first) and runs the command, writing results to
/// `stdout` (or `--out`) and diagnostics to `stderr`. Returns the exit code:
/// 0 success, 1 check failure, 2 usage error.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli) {
        Ok((body, None)) => {
            let _ = stdout.write_all(body.as_bytes());
            EXIT_OK
        }
        Ok((body, Some(path))) => match write_output(&body, Some(&path)) {
            Ok(()) => EXIT_OK,
            Err(msg) => {
                let _ = writeln!(stderr, "error: {msg}");
                EXIT_USAGE
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Checks(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_CHECK_FAILED
        }
    }
}
