use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sgb::graph::{assemble_matrix, build_star_decomposition, graph_stats};
use sgb::group::CyclicGroupSpec;
use sgb::report::{build_rows, format_sig9, render, Format, ReportRequest};
use sgb::spectral::{closed_form_spectrum, energies, numeric_means, numeric_spectrum, SpectrumKind};
use sgb::verify::run_verify;
use sgb::Error;

#[derive(Parser)]
#[command(name = "sgb", version, about = "Subgroup generating bipartite graphs of cyclic groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep a family (or every order) and write one row per group.
    Report {
        #[arg(long, value_enum, default_value_t = FamilyArg::All)]
        family: FamilyArg,
        /// Primes for p, as `2`, `2,3,5` or `2..13`.
        #[arg(long)]
        p: Option<String>,
        /// Primes for q, same syntax as --p.
        #[arg(long)]
        q: Option<String>,
        /// Exponents for the pn family.
        #[arg(long)]
        n: Option<String>,
        /// Upper bound on the group order (default 50 for `all`).
        #[arg(long)]
        max_order: Option<u64>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every check group over orders 1..=max-order.
    Verify {
        #[arg(long, default_value_t = 30)]
        max_order: u64,
        /// Jacobi tolerance and absolute eigenvalue tolerance.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Print the exact spectrum of one group.
    Spectrum {
        #[arg(long)]
        order: u64,
        #[arg(long, value_enum, ignore_case = true, default_value_t = KindArg::A)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = SpectrumFormat::Text)]
        format: SpectrumFormat,
        /// Add a column of Jacobi eigenvalues from the dense matrix.
        #[arg(long)]
        numeric: bool,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Write the dense matrix to PATH.
        #[arg(long, value_name = "PATH")]
        dump: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Pn,
    Pq,
    P2q,
    P2q2,
    All,
}

impl FamilyArg {
    fn name(self) -> &'static str {
        match self {
            Self::Pn => "pn",
            Self::Pq => "pq",
            Self::P2q => "p2q",
            Self::P2q2 => "p2q2",
            Self::All => "all",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectrumFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "A")]
    A,
    #[value(name = "L")]
    L,
    #[value(name = "Q")]
    Q,
    #[value(name = "CN")]
    CN,
}

impl From<KindArg> for SpectrumKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::A => SpectrumKind::A,
            KindArg::L => SpectrumKind::L,
            KindArg::Q => SpectrumKind::Q,
            KindArg::CN => SpectrumKind::CN,
        }
    }
}

enum Failure {
    Verification,
    Usage(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Report { family, p, q, n, max_order, format, out } => {
            let request = ReportRequest { family: Some(family.name().into()), p, q, n, max_order };
            let format = match format {
                ReportFormat::Csv => Format::Csv,
                ReportFormat::Json => Format::Json,
            };
            report(&request, format, out)
        }
        Command::Verify { max_order, tol } => verify(max_order, tol),
        Command::Spectrum { order, kind, format, numeric, tol, dump } => {
            spectrum(order, kind.into(), format, numeric, tol, dump)
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("sgb: {e}");
            ExitCode::from(2)
        }
    }
}

fn io_error(path: &std::path::Path, e: io::Error) -> Failure {
    Failure::Usage(Error::Usage(format!("cannot write {}: {e}", path.display())))
}

fn emit(text: &str, out: Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(&path, text).map_err(|e| io_error(&path, e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(Error::Usage(format!("cannot write to stdout: {e}")))),
    }
}

fn report(request: &ReportRequest, format: Format, out: Option<PathBuf>) -> Result<(), Failure> {
    let rows = build_rows(request)?;
    emit(&render(&rows, format)?, out)
}

fn verify(max_order: u64, tol: f64) -> Result<(), Failure> {
    let report = run_verify(max_order, tol)?;
    println!("{report}");
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct Term {
    value: String,
    multiplicity: u128,
    decimal: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    numeric: Option<f64>,
}

#[derive(Serialize)]
struct SpectrumDoc {
    order: u64,
    kind: &'static str,
    vertex_count: u128,
    edge_count: u128,
    energy: f64,
    spectrum: Vec<Term>,
}

fn spectrum(
    order: u64,
    kind: SpectrumKind,
    format: SpectrumFormat,
    numeric: bool,
    tol: f64,
    dump: Option<PathBuf>,
) -> Result<(), Failure> {
    let decomp = build_star_decomposition(&CyclicGroupSpec::new(order)?)?;
    let exact = closed_form_spectrum(&decomp, kind);
    let matrix = if numeric || dump.is_some() { Some(assemble_matrix(&decomp, kind.matrix_kind())?) } else { None };
    if let (Some(path), Some(m)) = (&dump, &matrix) {
        fs::write(path, m.to_text()).map_err(|e| io_error(path, e))?;
    }
    let means = match (&matrix, numeric) {
        (Some(m), true) => {
            let values = numeric_spectrum(m, tol)?;
            Some(numeric_means(&exact, &values).expect("dense matrix has one eigenvalue per vertex"))
        }
        _ => None,
    };
    let text = match format {
        SpectrumFormat::Text => match &means {
            None => format!("{}\n", exact.render()),
            Some(means) => {
                exact.pairs().iter().zip(means).map(|((v, m), x)| format!("({v})^{m}\t{}\n", format_sig9(*x))).collect()
            }
        },
        SpectrumFormat::Json => {
            let report = energies(&decomp)?;
            let energy = match kind {
                SpectrumKind::A => report.e,
                SpectrumKind::L => report.le,
                SpectrumKind::Q => report.le_plus,
                SpectrumKind::CN => report.e_cn,
            };
            let spectrum = exact
                .pairs()
                .iter()
                .enumerate()
                .map(|(i, (v, m))| Term {
                    value: v.to_string(),
                    multiplicity: *m,
                    decimal: v.to_f64(),
                    numeric: means.as_ref().map(|means| means[i]),
                })
                .collect();
            let stats = graph_stats(&decomp);
            let doc = SpectrumDoc {
                order,
                kind: kind.as_str(),
                vertex_count: stats.vertex_count,
                edge_count: stats.edge_count,
                energy,
                spectrum,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
            s.push('\n');
            s
        }
    };
    emit(&text, None)
}
