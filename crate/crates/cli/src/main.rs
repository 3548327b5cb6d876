//! `resdist` — exact resistance distances on balanced digraphs.
//!
//! Exit codes: 0 all checks passed, 1 a mathematical violation or identity
//! mismatch was found, 2 input or usage error. Code 1 is reserved for the
//! mathematics so that conjecture searches stay scriptable.

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use resdist_core::checks::{self, CheckStatus};
use resdist_core::digraph::Digraph;
use resdist_core::generators::{
    self, directed_cycle, seeded_balanced, seeded_cactus, BalancedSpec, CactusSpec,
};
use resdist_core::linalg::{self, LinalgError};
use resdist_core::oracle::{self, ForestConstraint};
use resdist_core::resistance::{self, ResistanceError, ResistanceReport};

mod render;

use render::NumberStyle;

#[derive(Parser)]
#[command(
    name = "resdist",
    version,
    about = "Exact resistance distances, spanning-forest identities, and r <= d checks on balanced digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a graph: Laplacian pseudoinverse, resistance and distance
    /// matrices, kappa, cactus flag, and all r > d violations
    Analyze {
        /// Edge-list file ("n m" header, then one "u v" line per edge)
        file: PathBuf,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
        /// Render rationals as fixed-point decimals with this many digits
        /// (marked with "~"; verdicts still use exact values)
        #[arg(long, value_name = "DIGITS")]
        decimal: Option<usize>,
        /// Override the dimension guard (dense exact inversion is cubic)
        #[arg(long)]
        force: bool,
    },
    /// Run the full invariant suite on a graph, one line per check
    Verify {
        /// Edge-list file
        file: PathBuf,
    },
    /// Generate seeded random graphs and report any r > d violation
    Search {
        /// How many graphs to generate
        #[arg(long)]
        graphs: usize,
        /// Largest vertex count per graph
        #[arg(long = "max-n")]
        max_n: usize,
        /// Base seed; graph k uses seed + k
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Graph family to draw from
        #[arg(long, value_enum)]
        family: Family,
    },
    /// Write a generated graph as an edge list on standard output
    #[command(subcommand)]
    Gen(GenCommand),
    /// Cross-check determinant counts against brute-force enumeration
    Oracle {
        /// Edge-list file (within the enumeration guards)
        file: PathBuf,
        #[command(flatten)]
        quantity: OracleQuantity,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Random directed cacti (r <= d is a theorem here)
    Cactus,
    /// Random balanced strongly connected digraphs (r <= d is open here)
    General,
}

#[derive(Subcommand)]
enum GenCommand {
    /// The directed cycle 1 -> 2 -> ... -> n -> 1
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Random directed cactus: cycles attached at shared vertices
    Cactus {
        /// Number of cycles
        #[arg(long)]
        cycles: usize,
        /// Largest cycle length
        #[arg(long = "max-len", default_value_t = 5)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random balanced digraph: Hamiltonian cycle plus edge-disjoint overlays
    Balanced {
        /// Vertex count
        #[arg(long)]
        n: usize,
        /// How many overlay cycles to attempt
        #[arg(long)]
        overlays: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest overlay cycle length (defaults to n)
        #[arg(long = "max-len")]
        max_len: Option<usize>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct OracleQuantity {
    /// Compare det(L[{i,j}ᶜ,{i,j}ᶜ]) with the two-tree forest count
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    pair: Option<Vec<usize>>,
    /// Compare det(L[{i}ᶜ,{i}ᶜ]) with the rooted spanning tree count
    #[arg(long, value_name = "I")]
    root: Option<usize>,
}

/// Input/usage failure (exit 2), as opposed to a mathematical violation
/// (exit 1), which is returned as a normal `ExitCode`.
struct UsageError(String);

impl<E: Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    // die quietly on a closed pipe (e.g. `resdist analyze ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, UsageError> {
    match command {
        Command::Analyze {
            file,
            json,
            decimal,
            force,
        } => cmd_analyze(&file, json, decimal, force),
        Command::Verify { file } => cmd_verify(&file),
        Command::Search {
            graphs,
            max_n,
            seed,
            family,
        } => cmd_search(graphs, max_n, seed, family),
        Command::Gen(gen) => cmd_gen(gen),
        Command::Oracle { file, quantity } => cmd_oracle(&file, &quantity),
    }
}

fn load_graph(file: &PathBuf) -> Result<Digraph, UsageError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| UsageError(format!("{}: {e}", file.display())))?;
    Ok(Digraph::parse_edge_list(&text).map_err(|e| format!("{}: {e}", file.display()))?)
}

fn cmd_analyze(
    file: &PathBuf,
    json: bool,
    decimal: Option<usize>,
    force: bool,
) -> Result<ExitCode, UsageError> {
    let g = load_graph(file)?;
    let report = if force {
        resistance::analyze_unguarded(&g)?
    } else {
        match resistance::analyze(&g) {
            Err(ResistanceError::Linalg(LinalgError::SizeGuard { n, limit })) => {
                return Err(UsageError(format!(
                    "graph has {n} vertices, above the dense-solve guard of {limit}; rerun with --force"
                )))
            }
            other => other?,
        }
    };
    if json {
        println!("{}", report.to_json_string());
    } else {
        let style = match decimal {
            Some(digits) => NumberStyle::Decimal(digits),
            None => NumberStyle::Exact,
        };
        print_report(&report, style);
    }
    Ok(violation_exit(&report))
}

fn violation_exit(report: &ResistanceReport) -> ExitCode {
    if report.r_le_d {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_report(report: &ResistanceReport, style: NumberStyle) {
    println!("n: {}", report.graph.n());
    println!("kappa: {}", report.kappa);
    println!("cactus: {}", report.is_cactus);
    println!("Moore-Penrose inverse of the Laplacian:");
    print!("{}", render::rat_matrix(&report.pinv, style));
    println!("Resistance matrix R:");
    print!("{}", render::rat_matrix(&report.resistance, style));
    println!("Distance matrix D:");
    print!("{}", render::int_matrix(&report.distance));
    let class = if report.is_cactus {
        "theorem class: directed cactus"
    } else {
        "conjecture class: balanced strongly connected, not a cactus"
    };
    if report.r_le_d {
        println!("resistance <= distance: PASS ({class})");
    } else {
        println!("resistance <= distance: FAIL ({class})");
        for v in &report.violations {
            println!(
                "  violation: r_{}{} = {} > d_{}{} = {}",
                v.i,
                v.j,
                linalg::format_rational(&v.resistance),
                v.i,
                v.j,
                v.distance
            );
        }
    }
}

fn cmd_verify(file: &PathBuf) -> Result<ExitCode, UsageError> {
    let g = load_graph(file)?;
    let vr = checks::verify(&g)?;
    for check in &vr.checks {
        let tag = match check.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "SKIP",
        };
        println!("{tag} {} — {}", check.name, check.detail);
    }
    Ok(if vr.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_search(
    graphs: usize,
    max_n: usize,
    seed: u64,
    family: Family,
) -> Result<ExitCode, UsageError> {
    if graphs == 0 {
        return Err(UsageError("--graphs must be at least 1".into()));
    }
    if max_n < 2 {
        return Err(UsageError("--max-n must be at least 2".into()));
    }
    let mut violating_pairs = 0usize;
    let mut violating_graphs = 0usize;
    let mut first_offender: Option<(u64, Digraph, ResistanceReport)> = None;
    let mut largest = 0usize;
    for k in 0..graphs {
        let graph_seed = seed.wrapping_add(k as u64);
        let g = match family {
            Family::Cactus => seeded_cactus(graph_seed, max_n),
            Family::General => seeded_balanced(graph_seed, max_n),
        };
        largest = largest.max(g.n());
        let report = resistance::analyze(&g)?;
        if !report.violations.is_empty() {
            violating_pairs += report.violations.len();
            violating_graphs += 1;
            if first_offender.is_none() {
                first_offender = Some((graph_seed, g, report));
            }
        }
    }
    let family_name = match family {
        Family::Cactus => "cactus",
        Family::General => "general",
    };
    println!("family: {family_name}");
    println!("graphs: {graphs} (base seed {seed}, max n {max_n}, largest n {largest})");
    println!("violating graphs: {violating_graphs}");
    println!("violating pairs: {violating_pairs}");
    if let Some((graph_seed, g, report)) = &first_offender {
        println!("first violating graph (seed {graph_seed}):");
        print!("{}", edge_list_text(g, &format!("seed {graph_seed}")));
        for v in &report.violations {
            println!(
                "  r_{}{} = {} > d_{}{} = {}",
                v.i,
                v.j,
                linalg::format_rational(&v.resistance),
                v.i,
                v.j,
                v.distance
            );
        }
    }
    Ok(if violating_pairs > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn edge_list_text(g: &Digraph, comment: &str) -> String {
    let mut out = format!("# {comment}\n{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn cmd_gen(gen: GenCommand) -> Result<ExitCode, UsageError> {
    let (g, comment) = match gen {
        GenCommand::Cycle { n } => (directed_cycle(n)?, format!("gen cycle --n {n}")),
        GenCommand::Cactus {
            cycles,
            max_len,
            seed,
        } => {
            let spec = CactusSpec {
                seed,
                cycles,
                max_cycle_len: max_len,
            };
            (
                generators::random_directed_cactus(&spec)?,
                format!("gen cactus --cycles {cycles} --max-len {max_len} --seed {seed}"),
            )
        }
        GenCommand::Balanced {
            n,
            overlays,
            seed,
            max_len,
        } => {
            let max_cycle_len = max_len.unwrap_or(n.max(2));
            let spec = BalancedSpec {
                seed,
                n,
                overlays,
                max_cycle_len,
            };
            (
                generators::random_balanced_digraph(&spec)?,
                format!("gen balanced --n {n} --overlays {overlays} --seed {seed}"),
            )
        }
    };
    print!("{}", edge_list_text(&g, &comment));
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(file: &PathBuf, quantity: &OracleQuantity) -> Result<ExitCode, UsageError> {
    let g = load_graph(file)?;
    let (label, det_route, enum_route) = if let Some(root) = quantity.root {
        let trees = oracle::enumerate_rooted_spanning_trees(&g, root)?;
        let delta = std::collections::BTreeSet::from([root]);
        let minor = g.laplacian().complement_minor(&delta, &delta)?;
        let det = linalg::determinant_int(&minor)?;
        (format!("spanning trees rooted at {root}"), det, trees.len())
    } else {
        let pair = quantity.pair.as_ref().expect("clap enforces one quantity");
        let (i, j) = (pair[0], pair[1]);
        let det = resistance::two_forest_count(&g, i, j)?;
        let forests =
            oracle::enumerate_two_tree_forests(&g, &ForestConstraint::new([i, j], [i, j]))?;
        (
            format!("two-tree forests rooted at {{{i}, {j}}}"),
            det,
            forests.len(),
        )
    };
    println!("quantity: {label}");
    println!("determinant: {det_route}");
    println!("enumeration: {enum_route}");
    let matches = det_route == num_bigint::BigInt::from(enum_route as u64);
    println!("match: {}", if matches { "yes" } else { "NO" });
    Ok(if matches {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
