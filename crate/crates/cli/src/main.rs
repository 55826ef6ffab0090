use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use distres_core::catalog::CatalogEntry;
use distres_core::io::json::PartitionRecord;
use distres_core::io::{parse_graph6, serialize_graph6, to_dot};
use distres_core::{
    are_isomorphic, distance_partition, distance_sequence, is_edge_transitive, is_growth_regular,
    is_semisymmetric, is_vertex_transitive, product, residual, verify, Error, Graph, ProductKind,
    TheoremId, VerifyOptions, VertexSet, CATALOG,
};

#[derive(Parser)]
#[command(
    name = "distres",
    version,
    about = "Distance partitions and distance-residual graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the distance partition of a graph from a root set.
    Partition {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        root: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Print the distance-residual graph and its distance from the root.
    Residual {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        root: Vec<usize>,
        /// Write the host graph as DOT with the residual highlighted.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Print the distance sequence from a root set.
    Sequence {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        root: Vec<usize>,
    },
    /// Build a product graph; the first graph is the outer factor.
    Product {
        #[arg(long, value_parser = parse_kind)]
        kind: ProductKind,
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List or generate named graphs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Test a structural property.
    Check {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        prop: Property,
    },
    /// Compare closed-form residuals with brute force on random instances.
    Verify {
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
        #[arg(long)]
        trials: usize,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Test two graphs for isomorphism; exits 1 when they differ.
    Iso { first: PathBuf, second: PathBuf },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Gen {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Vt,
    Et,
    Semisym,
    GrowthRegular,
}

fn parse_kind(s: &str) -> Result<ProductKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    /// Bad arguments: exit code 2.
    Usage(String),
    /// Valid request that cannot be satisfied: exit code 1.
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownGraph(_) | Error::InvalidParams { .. } | Error::UnknownTheorem(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Domain(other.to_string()),
        }
    }
}

type CliResult = Result<ExitCode, Failure>;

fn io_error(path: &Path, e: std::io::Error) -> Failure {
    Failure::Domain(format!("{}: {e}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let line = text.strip_suffix('\n').unwrap_or(&text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    parse_graph6(line).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io_error(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn root_set(g: &Graph, root: Vec<usize>) -> Result<VertexSet, Failure> {
    Ok(VertexSet::new(root, g.order())?)
}

fn join(ids: &[usize]) -> String {
    ids.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Partition { input, root, json } => {
            let g = read_graph(&input)?;
            let root = root_set(&g, root)?;
            if json {
                let record = PartitionRecord::compute(&g, &root)?;
                println!(
                    "{}",
                    serde_json::to_string(&record).expect("record serializes")
                );
            } else {
                let p = distance_partition(&g, &root)?;
                for (d, class) in p.classes.iter().enumerate() {
                    println!("{d}: {}", join(class.as_slice()));
                }
            }
        }
        Command::Residual {
            input,
            root,
            dot,
            json,
        } => {
            let g = read_graph(&input)?;
            let root = root_set(&g, root)?;
            let res = residual(&g, &root)?;
            if let Some(path) = dot {
                let highlight = VertexSet::new(res.origin.clone(), g.order())?;
                fs::write(&path, to_dot(&g, Some(&highlight))).map_err(|e| io_error(&path, e))?;
            }
            if json {
                let record = PartitionRecord::compute(&g, &root)?;
                println!(
                    "{}",
                    serde_json::to_string(&record).expect("record serializes")
                );
            } else {
                println!("d_R {}", res.d_r);
                println!("vertices {}", join(&res.origin));
                println!("graph6 {}", serialize_graph6(&res.residual)?);
            }
        }
        Command::Sequence { input, root } => {
            let g = read_graph(&input)?;
            let root = root_set(&g, root)?;
            println!("{}", join(&distance_sequence(&g, &root)?.0));
        }
        Command::Product {
            kind,
            first,
            second,
            out,
        } => {
            let g = read_graph(&first)?;
            let h = read_graph(&second)?;
            let p = product(kind, &g, &h);
            write_or_print(out.as_deref(), &format!("{}\n", serialize_graph6(&p)?))?;
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for info in CATALOG {
                    let params = if info.params.is_empty() {
                        "-".to_string()
                    } else {
                        info.params.join(",")
                    };
                    println!("{}\t{params}\t{}", info.name, info.summary);
                }
            }
            CatalogAction::Gen { name, params, out } => {
                let g = CatalogEntry::new(&name, &params)?.generate()?;
                write_or_print(out.as_deref(), &format!("{}\n", serialize_graph6(&g)?))?;
            }
        },
        Command::Check { graph, prop } => {
            let g = read_graph(&graph)?;
            let holds = match prop {
                Property::Vt => is_vertex_transitive(&g),
                Property::Et => is_edge_transitive(&g)?,
                Property::Semisym => is_semisymmetric(&g),
                Property::GrowthRegular => is_growth_regular(&g)?,
            };
            println!("{holds}");
        }
        Command::Verify {
            theorem,
            trials,
            max_n,
            seed,
            jobs,
            json,
        } => {
            if trials == 0 || max_n == 0 || jobs == Some(0) {
                return Err(Failure::Usage(
                    "--trials, --max-n and --jobs must be positive".into(),
                ));
            }
            let report = verify(&VerifyOptions {
                theorem,
                trials,
                max_n,
                seed,
                jobs,
            });
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
            } else {
                print!("{report}");
            }
            eprintln!("elapsed {:.3}s", report.elapsed.as_secs_f64());
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Iso { first, second } => {
            let g = read_graph(&first)?;
            let h = read_graph(&second)?;
            match are_isomorphic(&g, &h).mapping {
                Some(mapping) => println!("{}", join(&mapping)),
                None => {
                    println!("not isomorphic");
                    return Ok(ExitCode::from(1));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            eprintln!("{}", rendered.lines().next().unwrap_or("invalid arguments"));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
