//! `polymap`: analyze signed rotation systems from the command line.
//!
//! Exit codes: 0 success, 1 the checked property fails, 2 bad input,
//! 3 a search budget was exceeded.

mod report;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polymap_core::curvature::scan_light;
use polymap_core::discharging::run_discharge;
use polymap_core::format::{parse_map_file, serialize_map_file, MapFile};
use polymap_core::generators;
use polymap_core::transfer::{
    find_stuck, is_n_transferable, longest_path_bound, transferability, TransferDigraph,
    DEFAULT_SEARCH_BUDGET, DEFAULT_STATE_BUDGET,
};
use polymap_core::validity::check_polyhedral;
use polymap_core::{topology, DischargeError, Graph, MapTopology, NVerdict, TransferError};
use serde_json::json;

use report::Report;

#[derive(Parser)]
#[command(
    name = "polymap",
    version,
    about = "Polyhedral maps on closed surfaces"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Maximum number of path states per transfer digraph.
    #[arg(long, default_value_t = DEFAULT_STATE_BUDGET, global = true)]
    budget: usize,
    /// Reserved; every operation is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Input {
    /// Map file, or `-` for stdin.
    file: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Topology, validity, curvature and light vertices.
    Analyze(Input),
    /// Polyhedral-map check; exits 0 iff the map is polyhedral.
    Check(Input),
    /// Run the discharging rules and audit the resulting charges.
    Discharge {
        #[command(flatten)]
        input: Input,
        /// Include every individual transfer.
        #[arg(long)]
        ledger: bool,
    },
    /// Path transferability of the underlying graph.
    Transfer {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "sweep", required_unless_present = "sweep")]
        n: Option<usize>,
        #[arg(long)]
        sweep: bool,
        /// Largest n to sweep; defaults to the longest path length.
        #[arg(long, requires = "sweep")]
        max_n: Option<usize>,
    },
    /// Search for an n-path whose head cannot move.
    Stuck {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
        /// Vertex label to search around.
        #[arg(long)]
        anchor: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        search_budget: u64,
    },
    /// Print a generated map.
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Lattice dimensions for the torus and Klein bottle families.
        params: Vec<usize>,
        #[arg(long)]
        truncate: bool,
    },
    /// Write the transfer digraph on n-paths in DOT format.
    ExportDigraph {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    HexTorus,
    TriTorus,
    K7Torus,
    HexKlein,
    Tetrahedron,
}

enum Failure {
    Input(String),
    Property(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Property(_) => 1,
            Failure::Input(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Property(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<TransferError> for Failure {
    fn from(e: TransferError) -> Self {
        match e {
            TransferError::Budget { .. } | TransferError::SearchBudget { .. } => {
                Failure::Budget(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// What a command produced: a report, and whether the property it checks held.
struct Outcome {
    report: Report,
    code: u8,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome { report, code: 0 }
    }
}

fn read_map(input: &Input) -> Result<MapFile, Failure> {
    let text = if input.file.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&input.file)
            .map_err(|e| Failure::Input(format!("{}: {e}", input.file.display())))?
    };
    parse_map_file(&text).map_err(|e| Failure::Input(e.to_string()))
}

fn load(input: &Input) -> Result<(MapFile, MapTopology), Failure> {
    let file = read_map(input)?;
    let top = topology(&file.map);
    Ok((file, top))
}

fn join(sections: Vec<(&str, Report)>) -> Report {
    let mut json = serde_json::Map::new();
    let mut text = String::new();
    for (name, r) in sections {
        json.insert(name.to_string(), r.json);
        text.push_str(&r.text);
    }
    Report {
        json: json.into(),
        text,
    }
}

fn analyze(input: &Input) -> Result<Outcome, Failure> {
    let (file, top) = load(input)?;
    let validity = check_polyhedral(&top).map_err(|e| Failure::Property(e.to_string()))?;
    let scan = scan_light(&top, &validity);
    Ok(Outcome::ok(join(vec![
        (
            "topology",
            report::topology_section(&top, file.surface.as_deref()),
        ),
        ("validity", report::validity_section(&validity)),
        ("curvature", report::curvature_section(&top)),
        ("light", report::light_section(&top, &scan)),
    ])))
}

fn check(input: &Input) -> Result<Outcome, Failure> {
    let (_, top) = load(input)?;
    let validity = check_polyhedral(&top).map_err(|e| Failure::Property(e.to_string()))?;
    let code = if validity.polyhedral { 0 } else { 1 };
    Ok(Outcome {
        report: join(vec![("validity", report::validity_section(&validity))]),
        code,
    })
}

fn discharge(input: &Input, ledger: bool) -> Result<Outcome, Failure> {
    let (_, top) = load(input)?;
    let run = run_discharge(&top).map_err(|e| match e {
        DischargeError::SameFaceBothSides { .. } => Failure::Property(e.to_string()),
        _ => Failure::Property(format!("internal error: {e}")),
    })?;
    let code = if run.audit.hard_failure() { 1 } else { 0 };
    Ok(Outcome {
        report: join(vec![(
            "discharge",
            report::discharge_section(&top, &run, ledger),
        )]),
        code,
    })
}

fn transfer(
    input: &Input,
    n: Option<usize>,
    max_n: Option<usize>,
    budget: usize,
) -> Result<Outcome, Failure> {
    let (file, _) = load(input)?;
    let graph = Graph::from_rotation_system(&file.map);
    match n {
        Some(0) => Err(TransferError::ZeroLength.into()),
        Some(n) => {
            let verdict = is_n_transferable(&graph, n, budget)?;
            let code = match verdict {
                NVerdict::Transferable { .. } => 0,
                _ => 1,
            };
            Ok(Outcome {
                report: report::single_n(n, &verdict),
                code,
            })
        }
        None => {
            let max_n = match max_n {
                Some(m) => m,
                None => longest_path_bound(&graph, DEFAULT_SEARCH_BUDGET)?,
            };
            let result = transferability(&graph, max_n, budget);
            let code = if result.truncated { 3 } else { 0 };
            Ok(Outcome {
                report: report::sweep(&result),
                code,
            })
        }
    }
}

fn stuck(
    input: &Input,
    n: usize,
    anchor: Option<&str>,
    search_budget: u64,
) -> Result<Outcome, Failure> {
    let (file, top) = load(input)?;
    let anchor = anchor
        .map(|a| {
            file.map
                .vertex_by_label(a)
                .ok_or_else(|| Failure::Input(format!("no vertex labelled `{a}`")))
        })
        .transpose()?;
    let graph = Graph::from_rotation_system(&file.map);
    let witness = find_stuck(&graph, n, anchor, search_budget)?;
    let code = if witness.is_some() { 0 } else { 1 };
    Ok(Outcome {
        report: report::stuck(&top, n, witness.as_ref()),
        code,
    })
}

fn generate(family: Family, params: &[usize], truncate: bool) -> Result<Outcome, Failure> {
    let dims = || match params {
        [p, q] => Ok((*p, *q)),
        _ => Err(Failure::Input(format!(
            "expected two lattice dimensions, got {}",
            params.len()
        ))),
    };
    let no_params = || {
        if params.is_empty() {
            Ok(())
        } else {
            Err(Failure::Input("this family takes no parameters".into()))
        }
    };
    let bad = |e: polymap_core::MapError| Failure::Input(e.to_string());
    let (map, surface) = match family {
        Family::HexTorus => {
            let (p, q) = dims()?;
            (generators::hex_torus(p, q).map_err(bad)?, "torus")
        }
        Family::TriTorus => {
            let (p, q) = dims()?;
            (generators::tri_torus(p, q).map_err(bad)?, "torus")
        }
        Family::HexKlein => {
            let (p, q) = dims()?;
            (generators::hex_klein(p, q).map_err(bad)?, "klein bottle")
        }
        Family::K7Torus => {
            no_params()?;
            (generators::k7_torus(), "torus")
        }
        Family::Tetrahedron => {
            no_params()?;
            (generators::tetrahedron(), "sphere")
        }
    };
    let map = if truncate {
        generators::truncate(&map)
    } else {
        map
    };
    let text = serialize_map_file(&MapFile {
        surface: Some(surface.to_string()),
        map,
    });
    Ok(Outcome::ok(Report {
        json: json!({ "map": text }),
        text,
    }))
}

fn export_digraph(input: &Input, n: usize, budget: usize) -> Result<Outcome, Failure> {
    let (file, _) = load(input)?;
    if n == 0 {
        return Err(TransferError::ZeroLength.into());
    }
    let graph = Graph::from_rotation_system(&file.map);
    let digraph = TransferDigraph::build(&graph, n, budget)?;
    let dot = digraph.to_dot(Some(file.map.labels()));
    Ok(Outcome::ok(Report {
        json: json!({ "dot": dot }),
        text: dot,
    }))
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Analyze(input) => analyze(input),
        Command::Check(input) => check(input),
        Command::Discharge { input, ledger } => discharge(input, *ledger),
        Command::Transfer {
            input, n, max_n, ..
        } => transfer(input, *n, *max_n, cli.budget),
        Command::Stuck {
            input,
            n,
            anchor,
            search_budget,
        } => stuck(input, *n, anchor.as_deref(), *search_budget),
        Command::Gen {
            family,
            params,
            truncate,
        } => generate(*family, params, *truncate),
        Command::ExportDigraph { input, n } => export_digraph(input, *n, cli.budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let out = match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&outcome.report.json).expect("valid json") + "\n"
                }
                Format::Text => outcome.report.text,
            };
            // A closed pipe downstream is not an error worth reporting.
            let _ = io::stdout().write_all(out.as_bytes());
            ExitCode::from(outcome.code)
        }
        Err(failure) => {
            match cli.format {
                Format::Json => {
                    let body = json!({ "error": failure.message(), "exit_code": failure.code() });
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&body).expect("valid json")
                    );
                }
                Format::Text => eprintln!("error: {}", failure.message()),
            }
            ExitCode::from(failure.code())
        }
    }
}
