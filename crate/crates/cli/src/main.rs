use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use sierpinski_core::formulas::Limits;
use sierpinski_core::verify::{self, CheckParam, CorpusSpec, Family};
use sierpinski_core::{
    build_direct, chromatic_number, clique_number, domination_number, enumerate_gamma_sets,
    independence_number, vertex_cover_number, xi_with_witness, BaseGraph, SolverBudget, VertexSet,
    DEFAULT_VERTEX_BUDGET,
};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Generalized Sierpinski graphs: construction, exact invariants, and
/// formula verification.
#[derive(Parser)]
#[command(name = "sierpinski", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build S(G,t) from a base-graph edge list.
    Gen {
        /// Base graph edge-list file.
        #[arg(long = "in")]
        input: PathBuf,
        /// Construction depth t >= 1.
        #[arg(long)]
        t: u32,
        /// Emit DOT with word labels instead of an edge list.
        #[arg(long)]
        dot: bool,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Display vertices 1-indexed (DOT labels).
        #[arg(long)]
        one_indexed: bool,
        /// Refuse to build more than this many vertices.
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        max_vertices: usize,
    },
    /// Exact invariants of a graph file: chi, omega, beta, alpha,
    /// gamma, xi, the gamma-set count, leaves and supports.
    Params {
        #[arg(long = "in")]
        input: PathBuf,
        /// Wall-clock budget per solver invocation.
        #[arg(long, default_value_t = 300)]
        budget_seconds: u64,
    },
    /// Verify the closed formulas against the exact solvers over a
    /// graph family. Exit code 1 when any check mismatches.
    Verify {
        /// all-connected | trees | stars | cycles | completes | files
        #[arg(long)]
        family: String,
        /// Max order (max leaf count r for stars).
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        t_min: u32,
        #[arg(long, default_value_t = 2)]
        t_max: u32,
        /// Checks to run (default: all). Repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
        /// Graph files for --family files. Repeatable.
        #[arg(long = "in")]
        inputs: Vec<PathBuf>,
        #[arg(long, default_value_t = 300)]
        budget_seconds: u64,
        /// Write the machine-readable key-value report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Refuse to build S(G,t) with more than this many vertices.
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        max_vertices: usize,
        /// Hand S(G,t) to the exact solvers only up to this order.
        #[arg(long, default_value_t = 200)]
        solve_vertices: usize,
    },
    /// List all minimum dominating sets, lexicographically.
    GammaSets {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 300)]
        budget_seconds: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Gen { input, t, dot, out, one_indexed, max_vertices } => {
            let g = read_graph(&input)?;
            let sg = build_direct(&g, t, max_vertices)?;
            let text = if dot { sg.to_dot(one_indexed) } else { sg.to_edge_list() };
            match out {
                Some(path) => fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Params { input, budget_seconds } => {
            let g = read_graph(&input)?;
            print_params(&g, &SolverBudget::with_seconds(budget_seconds));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::GammaSets { input, budget_seconds } => {
            let g = read_graph(&input)?;
            let budget = SolverBudget::with_seconds(budget_seconds);
            match enumerate_gamma_sets(&g, &budget) {
                Ok(family) => {
                    println!("gamma={}", family.gamma);
                    println!("count={}", family.sets.len());
                    for set in &family.sets {
                        println!("{}", join(set));
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    println!("gamma=resource");
                    eprintln!("resource: {e}");
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Cmd::Verify {
            family,
            max_n,
            t_min,
            t_max,
            params,
            inputs,
            budget_seconds,
            out,
            max_vertices,
            solve_vertices,
        } => {
            let family = parse_family(&family, max_n, &inputs)?;
            let mut checks = Vec::new();
            for name in &params {
                let p = CheckParam::parse(name)
                    .with_context(|| format!("unknown --param {name:?}"))?;
                checks.push(p);
            }
            if t_min < 1 || t_max < t_min {
                bail!("need 1 <= t-min <= t-max");
            }
            let spec = CorpusSpec {
                family,
                t_min,
                t_max,
                params: checks,
                limits: Limits {
                    budget: SolverBudget::with_seconds(budget_seconds),
                    build_vertices: max_vertices,
                    solve_vertices,
                },
            };
            let report = verify::run(&spec);
            print!("{}", report.to_table());
            if let Some(path) = out {
                fs::write(&path, report.to_kv())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if report.mismatches() > 0 {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn read_graph(path: &Path) -> Result<BaseGraph> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    BaseGraph::parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_family(name: &str, max_n: usize, inputs: &[PathBuf]) -> Result<Family> {
    Ok(match name {
        "all-connected" => Family::AllConnected { max_n },
        "trees" => Family::Trees { max_n },
        "stars" => Family::Stars { max_r: max_n },
        "cycles" => Family::Cycles { max_n },
        "completes" => Family::Completes { max_n },
        "files" => {
            if inputs.is_empty() {
                bail!("--family files needs at least one --in FILE");
            }
            let mut graphs = Vec::new();
            for path in inputs {
                let id = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| path.display().to_string());
                graphs.push((id, read_graph(path)?));
            }
            Family::Files(graphs)
        }
        other => bail!(
            "unknown family {other:?} (expected all-connected, trees, stars, cycles, completes, files)"
        ),
    })
}

fn join(set: &VertexSet) -> String {
    set.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_params(g: &BaseGraph, budget: &SolverBudget) {
    println!("n={}", g.order());
    println!("m={}", g.size());
    println!("connected={}", g.is_connected());
    println!("tree={}", g.is_tree());
    println!("leaves={}", join(&g.leaves()));
    let info = g.supports();
    println!("supports={}", join(&info.set));
    let eps: Vec<String> = info
        .set
        .iter()
        .map(|v| format!("{v}:{}", info.eps[v]))
        .collect();
    println!("eps={}", eps.join(" "));

    match chromatic_number(g, budget) {
        Ok(c) => {
            println!("chi={}", c.num_colors);
            println!(
                "chi_witness={}",
                c.colors.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
            );
        }
        Err(e) => println!("chi=resource ({e})"),
    }
    match clique_number(g, budget) {
        Ok((v, w)) => {
            println!("omega={v}");
            println!("omega_witness={}", join(&w));
        }
        Err(e) => println!("omega=resource ({e})"),
    }
    match vertex_cover_number(g, budget) {
        Ok((v, w)) => {
            println!("beta={v}");
            println!("beta_witness={}", join(&w));
        }
        Err(e) => println!("beta=resource ({e})"),
    }
    match independence_number(g, budget) {
        Ok((v, w)) => {
            println!("alpha={v}");
            println!("alpha_witness={}", join(&w));
        }
        Err(e) => println!("alpha=resource ({e})"),
    }
    match domination_number(g, budget) {
        Ok((v, w)) => {
            println!("gamma={v}");
            println!("gamma_witness={}", join(&w));
        }
        Err(e) => println!("gamma=resource ({e})"),
    }
    match enumerate_gamma_sets(g, budget) {
        Ok(family) => println!("gamma_sets={}", family.sets.len()),
        Err(e) => println!("gamma_sets=resource ({e})"),
    }
    match xi_with_witness(g, budget) {
        Ok(cert) => {
            println!("xi={}", cert.xi);
            println!("xi_d={}", join(&cert.d));
            println!("xi_d_prime={}", join(&cert.d_prime));
        }
        Err(e) => println!("xi=resource ({e})"),
    }
}
