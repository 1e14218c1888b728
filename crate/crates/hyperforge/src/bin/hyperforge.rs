//! Command-line front end.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails,
//! 2 for usage errors and invalid input, 3 when a size limit is exceeded.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hyperforge::constructions::{check_b1, check_b2, halving_geometry, truncation_is_bipartite};
use hyperforge::group::{coset_geometry, todd_coxeter, Word};
use hyperforge::io::{diagram_to_dot, read_document, read_geometry, write_output, Document};
use hyperforge::toroid::{build_cubic_toroid, verify_family, ToroidParams};
use hyperforge::{Error, IncidenceGeometry, Limits, Presentation};

#[derive(Parser)]
#[command(name = "hyperforge", version, about = "Incidence geometries, coset enumeration and halving of hypertopes")]
struct Cli {
    /// Maximum number of cosets (overrides HYPERFORGE_MAX_COSETS).
    #[arg(long, global = true)]
    max_cosets: Option<usize>,
    /// Maximum number of flags visited by flag scans.
    #[arg(long, global = true)]
    max_flags: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a geometry and write it as JSON.
    Build {
        #[command(subcommand)]
        source: BuildSource,
    },
    /// Apply the halving construction at a leaf.
    Halve {
        /// Input geometry.
        input: PathBuf,
        /// The leaf, as `i,j`.
        #[arg(long, value_parser = parse_pair)]
        leaf: (usize, usize),
        /// Skip the precondition checks.
        #[arg(long)]
        force: bool,
        /// Output file (standard output when absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check properties of a geometry; prints a JSON report.
    Check {
        /// Input geometry.
        input: PathBuf,
        /// Comma-separated properties: geometry, connected, firm, thin, rc,
        /// ft, b1:i:j, b2:i:j, bipartite:i:j.
        #[arg(long, value_delimiter = ',', required = true)]
        props: Vec<String>,
    },
    /// Enumerate the cosets of a subgroup and write the table as CSV.
    Enumerate {
        /// Presentation file.
        #[arg(long)]
        presentation: PathBuf,
        /// Subgroup generators: words separated by `;`, letters by `,`
        /// (for example `1;2;3`). Empty for the trivial subgroup.
        #[arg(long, default_value = "")]
        subgroup: String,
        /// Output file (standard output when absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the diagram of a geometry or presented group as DOT.
    Diagram {
        /// A geometry or a presentation.
        input: PathBuf,
        /// Output file (standard output when absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify the cubic toroid family for one parameter cell.
    VerifyFamily {
        /// Dimension of the torus (at least 3); the rank is n + 1.
        #[arg(long)]
        n: usize,
        /// Number of non-zero lattice coordinates: 1, 2 or n.
        #[arg(long)]
        k: usize,
        /// Lattice step (at least 2).
        #[arg(long)]
        s: usize,
        /// 0 (toroid), 1 (halved) or 2 (halved twice).
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=2))]
        depth: u8,
        /// Also write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BuildSource {
    /// The cubic toroid with parameters n, k, s.
    Toroid {
        /// Dimension of the torus (at least 3); the rank is n + 1.
        #[arg(long)]
        n: usize,
        /// Number of non-zero lattice coordinates: 1, 2 or n.
        #[arg(long)]
        k: usize,
        /// Lattice step (at least 2).
        #[arg(long)]
        s: usize,
        /// Output file (standard output when absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The coset geometry of a presented group.
    Coset {
        /// Presentation file.
        presentation: PathBuf,
        /// Output file (standard output when absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Validate a geometry file and write it in canonical form.
    File {
        /// Geometry file.
        input: PathBuf,
        /// Output file (standard output when absent).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected i,j but got {s:?}"))?;
    Ok((a.trim().parse().map_err(|e| format!("{e}"))?, b.trim().parse().map_err(|e| format!("{e}"))?))
}

fn parse_words(s: &str) -> Result<Vec<Word>, Error> {
    s.split(';')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| {
            w.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|e| Error::InvalidPresentation(format!("{x:?}: {e}"))))
                .collect()
        })
        .collect()
}

/// Either a hard error or a completed run with a pass/fail verdict.
type Outcome = Result<bool, Error>;

fn load_presentation(path: &Path) -> Result<Presentation, Error> {
    match read_document(path)? {
        Document::Presentation(p) => Ok(p),
        Document::Geometry(_) => Err(Error::InvalidPresentation(format!("{} holds a geometry", path.display()))),
    }
}

fn check(g: &IncidenceGeometry, props: &[String], limits: &Limits) -> Outcome {
    let mut report: BTreeMap<String, bool> = BTreeMap::new();
    for prop in props {
        let parts: Vec<&str> = prop.trim().split(':').collect();
        let leaf = || -> Result<(usize, usize), Error> {
            if parts.len() != 3 {
                return Err(Error::PreconditionFailed(format!("{prop:?} needs the form name:i:j")));
            }
            let p = |x: &str| x.parse::<usize>().map_err(|e| Error::PreconditionFailed(format!("{prop:?}: {e}")));
            Ok((p(parts[1])?, p(parts[2])?))
        };
        let value = match parts[0] {
            "geometry" => g.flag_report(limits.max_flags)?.is_geometry,
            "connected" => g.is_connected(),
            "firm" => g.flag_report(limits.max_flags)?.firm,
            "thin" => g.is_thin(limits.max_flags)?,
            "rc" => g.is_residually_connected(limits.max_flags)?,
            "ft" => g.is_flag_transitive(None, limits.max_chambers)?,
            "b1" => check_b1(g, leaf()?)?,
            "b2" => check_b2(g, leaf()?)?,
            "bipartite" => truncation_is_bipartite(g, leaf()?)?,
            other => return Err(Error::PreconditionFailed(format!("unknown property {other:?}"))),
        };
        report.insert(prop.trim().to_string(), value);
    }
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(report.values().all(|&v| v))
}

fn run(cli: Cli) -> Outcome {
    let mut limits = Limits::default();
    if let Some(c) = cli.max_cosets {
        limits.max_cosets = c;
    }
    if let Some(f) = cli.max_flags {
        limits.max_flags = f;
    }
    match cli.command {
        Command::Build { source } => {
            let (g, output) = match source {
                BuildSource::Toroid { n, k, s, output } => {
                    let t = build_cubic_toroid(&ToroidParams::new(n, k, s)?, &limits)?;
                    (t.coset.geometry, output)
                }
                BuildSource::Coset { presentation, output } => {
                    let group = hyperforge::group::regular_group(&load_presentation(&presentation)?, &limits)?;
                    (coset_geometry(&group)?.geometry, output)
                }
                BuildSource::File { input, output } => (read_geometry(&input)?, output),
            };
            write_output(output.as_deref(), &format!("{}\n", g.to_json()))?;
            Ok(true)
        }
        Command::Halve { input, leaf, force, output } => {
            let h = halving_geometry(&read_geometry(&input)?, leaf, force)?;
            write_output(output.as_deref(), &format!("{}\n", h.to_json()))?;
            Ok(true)
        }
        Command::Check { input, props } => check(&read_geometry(&input)?, &props, &limits),
        Command::Enumerate { presentation, subgroup, output } => {
            let table = todd_coxeter(&load_presentation(&presentation)?, &parse_words(&subgroup)?, limits.max_cosets)?;
            write_output(output.as_deref(), &table.to_csv())?;
            Ok(true)
        }
        Command::Diagram { input, output } => {
            let diagram = match read_document(&input)? {
                Document::Geometry(g) => g.buekenhout_diagram(limits.max_flags)?,
                Document::Presentation(p) => {
                    let c = coset_geometry(&hyperforge::group::regular_group(&p, &limits)?)?;
                    c.geometry.buekenhout_diagram_at_chamber(&c.base_chamber())
                }
            };
            write_output(output.as_deref(), &diagram_to_dot(&diagram))?;
            Ok(true)
        }
        Command::VerifyFamily { n, k, s, depth, json } => {
            let report = verify_family(&ToroidParams::new(n, k, s)?, depth as usize, &limits)?;
            print!("{}", report.to_table());
            if let Some(path) = json {
                write_output(Some(&path), &format!("{}\n", report.to_json()))?;
            }
            Ok(report.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Overflow { .. } | Error::SizeLimitExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
