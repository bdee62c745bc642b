use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hypermap::io::{parse, serialize};
use hypermap::{
    are_isomorphic, colored_to_tau, export_dot, parse_color_permutation, random_flag_hypermap,
    run_property_suite, sigma_to_colored, sigma_to_tau, tau_to_sigma, CellRef, CellType,
    ColoredGraph, Document, Error, SuiteConfig,
};

/// Hypermaps in flag, half-edge and colored-graph form, with partial duality.
#[derive(Parser)]
#[command(name = "hypermap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file parses and describes a valid structure.
    Validate { file: PathBuf },
    /// Print cell counts and surface invariants.
    Info { file: PathBuf },
    /// Partial dual with respect to some cells of one type.
    Dual(DualArgs),
    /// Convert a document to another model.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Format,
    },
    /// List the bubbles spanned by a set of colors.
    Bubbles {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        colors: Vec<usize>,
    },
    /// Test two documents for isomorphism (exit 0 if isomorphic, 1 if not).
    Iso { first: PathBuf, second: PathBuf },
    /// Random flag hypermap from three uniform perfect matchings.
    Random {
        #[arg(long)]
        flags: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        connected: bool,
    },
    /// Graphviz rendering of the colored graph.
    ExportDot { file: PathBuf },
    /// Permute colors inside chosen bubbles of a colored graph.
    Recolor {
        file: PathBuf,
        /// Colors spanning the bubbles, e.g. `0,1,2`.
        #[arg(long, value_delimiter = ',', required = true)]
        colors: Vec<usize>,
        /// Canonical ids of the bubbles to recolor.
        #[arg(long, value_delimiter = ',', required = true)]
        bubbles: Vec<usize>,
        /// Color permutation in cycle notation on `0..=D`, e.g. `(0 1 2)`.
        #[arg(long)]
        perm: String,
    },
    /// Run the randomized property suite.
    Suite {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        seed: u64,
        /// Print the machine-readable summary instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("selection").required(true).args(["cells", "all"])))]
struct DualArgs {
    file: PathBuf,
    #[arg(long = "type", value_parser = parse_cell_type)]
    cell_type: CellType,
    /// Canonical ids (smallest element) of the cells.
    #[arg(long, value_delimiter = ',')]
    cells: Vec<usize>,
    #[arg(long)]
    all: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Sigma,
    Tau,
    Colored,
}

fn parse_cell_type(s: &str) -> Result<CellType, String> {
    s.parse::<CellType>().map_err(|e| e.to_string())
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Validation { .. }
            | Error::InvalidHypermap(_)
            | Error::NotOrientable
            | Error::NotInvariant { .. }
            | Error::DomainMismatch { .. }
            | Error::BadDimension { .. }
            | Error::GenerationFailed { .. } => Failure::Domain(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<Document, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| match Failure::from(e) {
        Failure::Domain(m) => Failure::Domain(format!("{}: {m}", path.display())),
        Failure::Usage(m) => Failure::Usage(format!("{}: {m}", path.display())),
    })
}

fn to_colored(doc: Document) -> ColoredGraph {
    match doc {
        Document::Sigma(hm) => sigma_to_colored(&hm),
        Document::Tau(hm) => ColoredGraph::from(hm),
        Document::Colored(g) => g,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn info(doc: &Document) -> Result<String, Failure> {
    let mut lines = vec![format!("format: {}", doc.format_name())];
    let flags = match doc {
        Document::Sigma(hm) => {
            lines.push(format!("n: {}", hm.n_halfedges()));
            Some(sigma_to_tau(hm))
        }
        Document::Tau(hm) => {
            lines.push(format!("n: {}", hm.n_flags()));
            Some(hm.clone())
        }
        Document::Colored(g) => {
            lines.push(format!("n: {}", g.n_vertices()));
            lines.push(format!("colors: {}", g.n_colors()));
            if g.dimension() == 2 {
                Some(colored_to_tau(g)?)
            } else {
                lines.push(format!("connected: {}", yes_no(g.is_connected())));
                lines.push(format!("bipartite: {}", yes_no(g.is_bipartite())));
                for k in 1..g.n_colors() {
                    let count = g.all_bubbles(k)?.len();
                    lines.push(format!("bubbles with {k} colors: {count}"));
                }
                None
            }
        }
    };
    if let Some(hm) = flags {
        lines.push(format!("vertices: {}", hm.cell_count(CellType::Vertex)));
        lines.push(format!(
            "hyperedges: {}",
            hm.cell_count(CellType::Hyperedge)
        ));
        lines.push(format!("faces: {}", hm.cell_count(CellType::Face)));
        lines.push(format!(
            "euler_characteristic: {}",
            hm.euler_characteristic()
        ));
        lines.push(format!("orientable: {}", yes_no(hm.is_orientable())));
        let surfaces = hm.genus_info();
        if surfaces.len() == 1 {
            lines.push(format!("surface: {}", surfaces[0]));
        } else {
            for (k, s) in surfaces.iter().enumerate() {
                lines.push(format!("component {}: {s}", k + 1));
            }
        }
        lines.push(format!("connected: {}", yes_no(hm.is_connected())));
        lines.push(format!("is_map: {}", yes_no(hm.is_map())));
    }
    Ok(lines.join("\n") + "\n")
}

fn dual(args: &DualArgs) -> Outcome {
    let t = args.cell_type;
    let doc = read(&args.file)?;
    let refs = |ids: Vec<usize>| -> Vec<CellRef> {
        ids.into_iter().map(|id| CellRef::new(t, id)).collect()
    };
    let out: Document = match doc {
        Document::Tau(hm) => {
            let ids = if args.all {
                hm.cells(t).iter().map(|c| c.cell.id).collect()
            } else {
                args.cells.clone()
            };
            hm.partial_dual(t, &refs(ids))?.into()
        }
        Document::Sigma(hm) => {
            let ids = if args.all {
                hm.cells(t).iter().map(|c| c.cell.id).collect()
            } else {
                args.cells.clone()
            };
            hm.partial_dual(t, &refs(ids))?.into()
        }
        Document::Colored(g) => {
            if g.dimension() != 2 {
                return Err(Error::BadDimension {
                    expected: 2,
                    found: g.dimension(),
                }
                .into());
            }
            let (a, b) = t.colors();
            let ids: Vec<usize> = if args.all {
                g.bubbles(&[a, b])?.iter().map(|b| b.canonical_id).collect()
            } else {
                args.cells.clone()
            };
            g.swap_colors_in_bubbles(a, b, &ids)?.into()
        }
    };
    Ok(serialize(&out))
}

fn convert(doc: Document, to: Format) -> Outcome {
    let out: Document = match (doc, to) {
        (doc @ Document::Sigma(_), Format::Sigma)
        | (doc @ Document::Tau(_), Format::Tau)
        | (doc @ Document::Colored(_), Format::Colored) => doc,
        (Document::Sigma(hm), Format::Tau) => sigma_to_tau(&hm).into(),
        (Document::Sigma(hm), Format::Colored) => sigma_to_colored(&hm).into(),
        (Document::Tau(hm), Format::Sigma) => tau_to_sigma(&hm)?.hypermap.into(),
        (Document::Tau(hm), Format::Colored) => ColoredGraph::from(hm).into(),
        (Document::Colored(g), Format::Tau) => colored_to_tau(&g)?.into(),
        (Document::Colored(g), Format::Sigma) => {
            tau_to_sigma(&colored_to_tau(&g)?)?.hypermap.into()
        }
    };
    Ok(serialize(&out))
}

fn bubbles(doc: Document, colors: &[usize]) -> Outcome {
    let g = to_colored(doc);
    let mut out = String::new();
    for b in g.bubbles(colors)? {
        let vertices: Vec<String> = b.vertices.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("{}: {}\n", b.canonical_id, vertices.join(" ")));
    }
    Ok(out)
}

fn iso(first: &Path, second: &Path) -> Outcome {
    let g1 = to_colored(read(first)?);
    let g2 = to_colored(read(second)?);
    if g1.n_colors() != g2.n_colors() {
        return Err(Failure::Domain(format!(
            "not isomorphic: {} colors vs {}",
            g1.n_colors(),
            g2.n_colors()
        )));
    }
    match are_isomorphic(&g1, &g2)? {
        Some(phi) => Ok(format!("isomorphic\nmapping: {}\n", phi)),
        None => Err(Failure::Domain("not isomorphic".into())),
    }
}

fn recolor(doc: Document, colors: &[usize], ids: &[usize], perm: &str) -> Outcome {
    let g = to_colored(doc);
    let pi = parse_color_permutation(perm, g.n_colors())?;
    Ok(serialize(&g.recolor_bubbles(colors, ids, &pi)?.into()))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { file } => {
            let doc = read(&file)?;
            Ok(format!("valid {} document\n", doc.format_name()))
        }
        Command::Info { file } => info(&read(&file)?),
        Command::Dual(args) => dual(&args),
        Command::Convert { file, to } => convert(read(&file)?, to),
        Command::Bubbles { file, colors } => bubbles(read(&file)?, &colors),
        Command::Iso { first, second } => iso(&first, &second),
        Command::Random {
            flags,
            seed,
            connected,
        } => Ok(serialize(
            &random_flag_hypermap(flags, seed, connected)?.into(),
        )),
        Command::ExportDot { file } => Ok(export_dot(&to_colored(read(&file)?))),
        Command::Recolor {
            file,
            colors,
            bubbles,
            perm,
        } => recolor(read(&file)?, &colors, &bubbles, &perm),
        Command::Suite {
            count,
            max_size,
            seed,
            json,
        } => {
            let report = run_property_suite(SuiteConfig {
                count,
                max_size,
                seed,
            });
            let text = if json {
                report.summary_json() + "\n"
            } else {
                report.to_text()
            };
            if report.passed() {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::Domain(format!(
                    "{} property failures",
                    report.failures.len()
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
