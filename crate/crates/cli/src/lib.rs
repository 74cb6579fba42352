//! The `crep` command line: build the library's graphs, verify circle sets
//! against a target multigraph, run feasibility probes, certify the
//! inconsistency of symmetric configurations, and render circle sets.
//!
//! Exit codes: 0 on success, 1 when a verification or certification does
//! not hold, 2 on usage errors (including unreadable or malformed inputs).

use std::collections::HashMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use crep_core::chains::{contradiction_certificate, ConfigKind};
use crep_core::geom::set_epsilon;
use crep_core::graphs::{
    build_base_multigraph_m, build_counterexample_68, build_mini_bigadget_octahedral,
    build_mini_gadget_octahedral, build_octahedron, CounterexampleVariant, PlaneMultigraph,
};
use crep_core::representation::{render_svg_file, verify_representation, CircleSet};
use crep_core::solver::{build_constraint_system, solve_feasibility, Assignment, SolveResult, SystemKind};

#[derive(Parser)]
#[command(
    name = "crep",
    version,
    about = "Circle representations of 4-regular planar multigraphs: builders, verifier, feasibility probes and certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph, print its validation report, write graph JSON
    Build {
        /// One of: octahedron, mini-gadget, mini-bigadget, m, counterexample68
        target: String,
        /// Gadget family for counterexample68: gadget | bigadget
        #[arg(long, default_value = "gadget")]
        variant: String,
        /// Output file for the graph JSON (stdout if omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify that a circle set represents a graph
    Verify {
        /// Circle-set JSON file
        #[arg(long)]
        circles: PathBuf,
        /// Graph JSON file
        #[arg(long)]
        graph: PathBuf,
    },
    /// Run the multistart feasibility solver on a constraint system
    Solve {
        /// One of: induced, symmetric, single-chain
        #[arg(long)]
        system: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        restarts: u32,
        #[arg(long, default_value_t = 2000)]
        iters: u32,
        /// Output file for the assignment JSON
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the contradiction certificate on a symmetric assignment
    Certify {
        /// Assignment JSON file (as written by `solve`)
        #[arg(long)]
        assignment: PathBuf,
        /// Relative tangency tolerance gate
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Render a circle set to SVG
    Render {
        /// Circle-set JSON file
        #[arg(long)]
        circles: PathBuf,
        /// Output SVG file
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// Runs the CLI on the given argument list and returns the process exit
/// code. The `CREP_EPS` environment variable overrides the global geometric
/// tolerance for the whole invocation.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    if let Ok(raw) = std::env::var("CREP_EPS") {
        match raw.parse::<f64>() {
            Ok(eps) if eps.is_finite() && eps > 0.0 => set_epsilon(eps),
            _ => {
                eprintln!("error: CREP_EPS must be a positive number, got {raw:?}");
                return 2;
            }
        }
    }
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Build {
            target,
            variant,
            output,
        } => cmd_build(&target, &variant, output.as_deref()),
        Command::Verify { circles, graph } => cmd_verify(&circles, &graph),
        Command::Solve {
            system,
            seed,
            restarts,
            iters,
            output,
        } => cmd_solve(&system, seed, restarts, iters, output.as_deref()),
        Command::Certify { assignment, tol } => cmd_certify(&assignment, tol),
        Command::Render { circles, output } => cmd_render(&circles, &output),
    }
}

fn cmd_build(target: &str, variant: &str, output: Option<&Path>) -> Result<i32> {
    let (graph, notes): (PlaneMultigraph, Vec<String>) = match target {
        "octahedron" => (build_octahedron(), vec![]),
        "mini-gadget" => {
            let (g, attach) = build_mini_gadget_octahedral();
            (g, vec![format!("attach: {attach}")])
        }
        "mini-bigadget" => {
            let (g, a, b) = build_mini_bigadget_octahedral();
            (g, vec![format!("attach: {a} {b}")])
        }
        "m" => {
            let (g, labels) = build_base_multigraph_m();
            (g, vec![format!("red vertices: {}", labels.red.join(" "))])
        }
        "counterexample68" => {
            let v = CounterexampleVariant::parse(variant)
                .ok_or_else(|| anyhow!("unknown variant {variant:?} (use gadget or bigadget)"))?;
            let (g, instances) = build_counterexample_68(v);
            let mut notes = Vec::new();
            for inst in &instances {
                notes.push(format!(
                    "gadget-subgraph at {}: v1={} v2={} w1={} w2={}",
                    inst.w, inst.v1, inst.v2, inst.w1, inst.w2
                ));
            }
            (g, notes)
        }
        other => bail!("unknown build target {other:?}"),
    };
    let json = graph.to_json_string();
    let report = graph.validate();
    match output {
        Some(path) => {
            std::fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
            println!("{report}");
            for note in notes {
                println!("{note}");
            }
            println!("wrote {}", path.display());
        }
        None => {
            println!("{json}");
            eprintln!("{report}");
            for note in notes {
                eprintln!("{note}");
            }
        }
    }
    Ok(0)
}

fn cmd_verify(circles: &Path, graph: &Path) -> Result<i32> {
    let cs = CircleSet::from_json_str(
        &std::fs::read_to_string(circles)
            .with_context(|| format!("reading {}", circles.display()))?,
    )
    .map_err(|e| anyhow!("{}: {e}", circles.display()))?;
    let target = PlaneMultigraph::from_json_str(
        &std::fs::read_to_string(graph).with_context(|| format!("reading {}", graph.display()))?,
    )
    .map_err(|e| anyhow!("{}: {e}", graph.display()))?;
    let report = verify_representation(&cs, &target);
    println!("{report}");
    Ok(if report.ok { 0 } else { 1 })
}

fn cmd_solve(
    system: &str,
    seed: u64,
    restarts: u32,
    iters: u32,
    output: Option<&Path>,
) -> Result<i32> {
    let kind = SystemKind::parse(system).map_err(|e| anyhow!("{e}"))?;
    let sys = build_constraint_system(kind);
    let result = solve_feasibility(&sys, seed, restarts, iters);
    println!(
        "system={} seed={} restarts_used={} iters={} residual={:.6e}",
        result.system, result.seed, result.restarts_used, iters, result.residual
    );
    if let Some(path) = output {
        let json = serde_json::to_string_pretty(&result)?;
        std::fs::write(path, json).with_context(|| format!("writing {}", path.display()))?;
        println!("wrote {}", path.display());
    }
    Ok(0)
}

fn cmd_certify(assignment: &Path, tol: f64) -> Result<i32> {
    let raw = std::fs::read_to_string(assignment)
        .with_context(|| format!("reading {}", assignment.display()))?;
    // Accept either a full solve result or a bare assignment.
    let a: Assignment = match serde_json::from_str::<SolveResult>(&raw) {
        Ok(result) => result.best,
        Err(_) => serde_json::from_str(&raw)
            .map_err(|e| anyhow!("{}: not an assignment file: {e}", assignment.display()))?,
    };
    let cfg = a
        .to_octuple(ConfigKind::Symmetric)
        .map_err(|e| anyhow!("invalid configuration: {e}"))?;
    match contradiction_certificate(&cfg, tol) {
        Ok(report) => {
            println!(
                "m_top={:.9} m_bottom={:.9} monotonicity_bound={:.9} nesting_bound={:.9}",
                report.m_top, report.m_bottom, report.monotonicity_bound, report.nesting_bound
            );
            println!("violated {}", report.violated);
            println!("conflict magnitude {:.9}", report.magnitude);
            Ok(if report.magnitude > 0.0 { 0 } else { 1 })
        }
        Err(e) => {
            println!("certificate preconditions not met: {e}");
            Ok(1)
        }
    }
}

fn cmd_render(circles: &Path, output: &Path) -> Result<i32> {
    let cs = CircleSet::from_json_str(
        &std::fs::read_to_string(circles)
            .with_context(|| format!("reading {}", circles.display()))?,
    )
    .map_err(|e| anyhow!("{}: {e}", circles.display()))?;
    render_svg_file(&cs, output).map_err(|e| anyhow!("{}: {e}", output.display()))?;
    println!("wrote {}", output.display());
    Ok(0)
}

/// Convenience for tests: a name → name map from a verification mapping.
pub fn mapping_as_pairs(map: &HashMap<String, String>) -> Vec<(String, String)> {
    let mut pairs: Vec<(String, String)> = map
        .iter()
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    pairs.sort();
    pairs
}
