use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use arrgraph::actions::{
    find_block_violation, induce_action, quotient_action, ActionOnSets, BlockSystem,
};
use arrgraph::arrangement::{
    build_arrangement_graph, build_cayley_graph, h_vertex_map, p_vertex_map, q_vertex_map,
};
use arrgraph::aut::automorphism_group;
use arrgraph::config::Config;
use arrgraph::connection::{ConnectionKind, ConnectionSet};
use arrgraph::error::Error;
use arrgraph::graph::Graph;
use arrgraph::indsets::{max_independent_sets, DeltaFamily, MisMode};
use arrgraph::perm::symmetric_generators;
use arrgraph::suite::{probe_conjecture, run_full_suite, Status};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Arrangement graphs, Cayley graphs on S_n, and their automorphism groups.
///
/// Limits can be raised with ARRGRAPH_ENUM_THRESHOLD, ARRGRAPH_NODE_BUDGET,
/// ARRGRAPH_VERTEX_GUARD, ARRGRAPH_ENUMERATE_GUARD and ARRGRAPH_WORKERS.
#[derive(Parser)]
#[command(name = "arrgraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and write it as an edge list, DOT or graphdoc JSON
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Order of the automorphism group of a graph file
    Aut {
        file: PathBuf,
        /// Print generators in 1-based one-line form
        #[arg(long)]
        generators: bool,
        /// Print the canonical certificate in hex
        #[arg(long)]
        certificate: bool,
    },
    /// Maximum independent sets of a graph file
    Mis {
        file: PathBuf,
        /// List every maximum independent set
        #[arg(long)]
        all: bool,
        /// Maximum cliques instead (independent sets of the complement)
        #[arg(long)]
        clique: bool,
    },
    /// Row and column block systems of Aut(A(n,k,k)) on the Delta_ij
    Blocks {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run every check for n up to --n-max and print a summary
    Verify {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        /// Also compute |Aut(A(6,1,1))| and |Aut(A(6,2,2))|
        #[arg(long)]
        extended: bool,
        /// Write the JSON report here
        #[arg(long)]
        report: Option<PathBuf>,
        /// Write the plain-text summary here
        #[arg(long)]
        summary: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Compare Aut(Cay(S_n,F_k)) with the candidate group
    Conjecture {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// A(n,k,r): k-tuples of distinct elements of [n], adjacent when they differ in r places
    Arrangement {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Cay(S_n, S) for S = transpositions, derangements or fixed:K
    Cayley {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        set: ConnectionKind,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Graphdoc)]
    format: Format,
    /// Output file; the graph goes to stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Dot,
    Graphdoc,
}

enum Failure {
    Invalid(String),
    Budget(String),
    Claims(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

/// Text for stdout plus files to write once everything succeeded.
#[derive(Default)]
struct Output {
    stdout: String,
    stderr: String,
    files: Vec<(PathBuf, String)>,
}

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
    Ok(Graph::parse(&text)?)
}

fn render_set(graph: &Graph, set: &[usize]) -> String {
    let labels: Vec<String> = set.iter().map(|&v| graph.labels().render(v)).collect();
    format!("{{{}}}", labels.join(" "))
}

fn gen(family: GenFamily, config: &Config) -> Result<Output, Failure> {
    let (graph, output) = match family {
        GenFamily::Arrangement { n, k, r, output } => (
            build_arrangement_graph(n, k, r, config.vertex_guard)?,
            output,
        ),
        GenFamily::Cayley { n, set, output } => {
            let set = ConnectionSet::new(n, set)?;
            (build_cayley_graph(&set, config.vertex_guard)?, output)
        }
    };
    let text = match output.format {
        Format::Edgelist => graph.to_edge_list(),
        Format::Dot => graph.to_dot(),
        Format::Graphdoc => graph.to_graphdoc(),
    };
    let counts = format!(
        "{} vertices, {} edges\n",
        graph.vertex_count(),
        graph.edge_count()
    );
    Ok(match output.out {
        Some(path) => Output {
            stdout: counts,
            files: vec![(path, text)],
            ..Output::default()
        },
        None => Output {
            stdout: text,
            stderr: counts,
            ..Output::default()
        },
    })
}

fn aut(
    file: &PathBuf,
    generators: bool,
    certificate: bool,
    config: &Config,
) -> Result<Output, Failure> {
    let graph = read_graph(file)?;
    let result = automorphism_group(&graph, config.node_budget)?;
    let mut out = format!("order {}\n", result.order);
    if generators {
        let _ = writeln!(out, "generators {}", result.generators.len());
        for g in &result.generators {
            let _ = writeln!(out, "{g}");
        }
    }
    if certificate {
        let _ = writeln!(out, "certificate {}", result.certificate_hex());
    }
    Ok(Output {
        stdout: out,
        ..Output::default()
    })
}

fn mis(file: &PathBuf, all: bool, clique: bool, config: &Config) -> Result<Output, Failure> {
    let graph = read_graph(file)?;
    let target = if clique {
        graph.complement()
    } else {
        graph.clone()
    };
    let mode = if all {
        MisMode::EnumerateAll
    } else {
        MisMode::SizeOnly
    };
    let result = max_independent_sets(&target, mode, config.enumerate_guard)?;
    let mut out = format!("size {}\n", result.size);
    if let Some(sets) = result.sets {
        let _ = writeln!(out, "count {}", sets.len());
        for s in &sets {
            let _ = writeln!(out, "{}", render_set(&graph, s));
        }
    }
    Ok(Output {
        stdout: out,
        ..Output::default()
    })
}

fn describe_system(
    out: &mut String,
    name: &str,
    action: &ActionOnSets,
    system: &BlockSystem,
    family: &DeltaFamily,
) -> Result<bool, Failure> {
    let violation = find_block_violation(action, system)?;
    let size = system.blocks[0].len();
    let _ = writeln!(
        out,
        "{name}: {} blocks of size {size}, block system: {}",
        system.blocks.len(),
        violation.is_none()
    );
    let blocks: Vec<String> = system
        .labeled(|i| family.label(i))
        .iter()
        .map(|b| format!("{{{}}}", b.join(" ")))
        .collect();
    let _ = writeln!(out, "  {}", blocks.join(" "));
    if let Some(v) = &violation {
        let image: Vec<String> = v.image.iter().map(|&i| family.label(i)).collect();
        let _ = writeln!(
            out,
            "  generator {} sends block {} to {{{}}}, which meets block {} without equalling it",
            v.mover + 1,
            v.block + 1,
            image.join(" "),
            v.overlapping_block + 1
        );
    }
    Ok(violation.is_none())
}

fn blocks(n: usize, k: usize, config: &Config) -> Result<Output, Failure> {
    if n <= 2 {
        return Err(Failure::Invalid(format!("need n > 2, got {n}")));
    }
    let graph = build_arrangement_graph(n, k, k, config.vertex_guard)?;
    let group = automorphism_group(&graph, config.node_budget)?;
    let family = DeltaFamily::new(n, k)?;
    let action = induce_action(&group.generators, family.sets())?;
    let rows = BlockSystem::new(family.rows());
    let columns = BlockSystem::new(family.columns());
    let mut out = format!(
        "A({n},{k},{k}): |Aut| = {}, {} sets Delta_ij\n",
        group.order,
        family.sets().len()
    );
    let rows_ok = describe_system(&mut out, "Sigma (rows)", &action, &rows, &family)?;
    describe_system(&mut out, "Sigma' (columns)", &action, &columns, &family)?;
    if rows_ok {
        let q = quotient_action(&action, &rows)?;
        let _ = writeln!(
            out,
            "quotient by rows: order {}, kernel order {}",
            q.order, q.kernel_order
        );
    }
    if k == n {
        let mut pq = Vec::new();
        for g in symmetric_generators(n) {
            pq.push(p_vertex_map(&g, n)?);
            pq.push(q_vertex_map(&g, n)?);
        }
        let pq = induce_action(&pq, family.sets())?;
        let _ = writeln!(out, "under P(S_n) x Q(S_n):");
        describe_system(&mut out, "Sigma (rows)", &pq, &rows, &family)?;
        describe_system(&mut out, "Sigma' (columns)", &pq, &columns, &family)?;
        let h = induce_action(&[h_vertex_map(n)?], family.sets())?;
        let _ = writeln!(out, "under <h>:");
        describe_system(&mut out, "Sigma (rows)", &h, &rows, &family)?;
        describe_system(&mut out, "Sigma' (columns)", &h, &columns, &family)?;
    }
    Ok(Output {
        stdout: out,
        ..Output::default()
    })
}

fn verify(
    n_max: usize,
    extended: bool,
    report: Option<PathBuf>,
    summary: Option<PathBuf>,
    workers: Option<usize>,
    mut config: Config,
) -> Result<Output, Failure> {
    if let Some(w) = workers {
        config.workers = w;
    }
    config.report_path = report.or(config.report_path);
    config.summary_path = summary.or(config.summary_path);
    let result = run_full_suite(n_max, extended, &config)?;
    let table = result.summary_table();
    let mut files = Vec::new();
    if let Some(path) = &config.report_path {
        files.push((path.clone(), result.to_json() + "\n"));
    }
    if let Some(path) = &config.summary_path {
        files.push((path.clone(), table.clone()));
    }
    let output = Output {
        stdout: table,
        files,
        ..Output::default()
    };
    if result.all_expected_pass() {
        Ok(output)
    } else {
        write_files(&output.files)?;
        print!("{}", output.stdout);
        Err(Failure::Claims(format!(
            "{} claims failed",
            result.totals.fail
        )))
    }
}

fn conjecture(n: usize, k: usize, config: &Config) -> Result<Output, Failure> {
    if n <= 2 || k + 2 > n {
        return Err(Failure::Invalid(format!(
            "need n > 2 and k <= n-2, got ({n},{k})"
        )));
    }
    let report = probe_conjecture(n, k, config);
    let text = serde_json::to_string_pretty(&report).expect("plain data") + "\n";
    match report.status {
        Status::Pass | Status::Exploratory => Ok(Output {
            stdout: text,
            ..Output::default()
        }),
        Status::Inconclusive => {
            print!("{text}");
            Err(Failure::Budget(format!("({n},{k}) did not finish")))
        }
        Status::Fail => {
            print!("{text}");
            match report.computed.get("error").and_then(|e| e.as_str()) {
                Some(e) => Err(Failure::Budget(e.to_string())),
                None => Err(Failure::Claims(format!(
                    "({n},{k}) disagrees with the expected order"
                ))),
            }
        }
    }
}

fn write_files(files: &[(PathBuf, String)]) -> Result<(), Failure> {
    for (path, text) in files {
        fs::write(path, text)
            .map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let config = Config::from_env()?;
    match cli.command {
        Command::Gen { family } => gen(family, &config),
        Command::Aut {
            file,
            generators,
            certificate,
        } => aut(&file, generators, certificate, &config),
        Command::Mis { file, all, clique } => mis(&file, all, clique, &config),
        Command::Blocks { n, k } => blocks(n, k, &config),
        Command::Verify {
            n_max,
            extended,
            report,
            summary,
            workers,
        } => verify(n_max, extended, report, summary, workers, config),
        Command::Conjecture { n, k } => conjecture(n, k, &config),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(cli).and_then(|out| {
        write_files(&out.files)?;
        Ok(out)
    });
    match outcome {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Claims(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}
