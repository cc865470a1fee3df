//! Command-line interface for the twisted-duality toolkit.

use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use twual::action::apply;
use twual::search::{census, classify, family, reduce_to_oeb, stabilizers, CensusOptions};
use twual::{
    DiagramForm, EdgeOp, GroupElement, LabeledRibbonGraph, Permutation, RibbonElement,
};

#[derive(Parser)]
#[command(name = "twual", about = "Twisted duals of ribbon graphs: apply, classify, search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Graph in end-label form, e.g. "[1, -3, 2, 1, 2, -3]"; several
    /// bracketed tuples mean several vertices.
    graph: String,
    /// Treat the graph argument as a file to read instead.
    #[arg(long)]
    file: bool,
    /// Structured JSON output.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Apply edge operations (with an optional edge permutation) to a graph.
    Apply {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated operations, one per edge, e.g. "tdt,td,d".
        #[arg(long)]
        gamma: Option<String>,
        /// Apply one operation to every edge: 1, t, d, td, dt, or tdt.
        #[arg(long)]
        uniform: Option<String>,
        /// Edge permutation in cycle notation, e.g. "(1 2 3)".
        #[arg(long)]
        pi: Option<String>,
    },
    /// Report the four self-twuality flags and the invariants.
    Classify {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Vertex, edge, face counts, Euler characteristic, orientability, genus.
    Invariants {
        #[command(flatten)]
        input: GraphInput,
    },
    /// All group elements fixing the labeled graph.
    Stabilizers {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Canonical representatives of chord diagrams on k chords.
    Enumerate {
        k: usize,
        /// Print the class count only.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// The self-trial census over all n-edge graphs.
    Census {
        n: usize,
        /// Worker threads for the scan.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Resume from the checkpoint file if present.
        #[arg(long)]
        resume: bool,
        /// Write records to this file (its .ckpt sibling holds the cursor).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow n > 7 (the scan grows as 3^n per bouquet class).
        #[arg(long)]
        unbounded: bool,
        #[arg(long)]
        json: bool,
    },
    /// The 3k-edge chain bouquet, its operation vector, and its self-trial image.
    Family {
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// An orientable bouquet in the graph's orbit, with the operations reaching it.
    Reduce {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Test two graphs for isomorphism and print a witness.
    Iso {
        a: String,
        b: String,
        #[arg(long)]
        file: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
struct CliError(String);

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

#[derive(Serialize)]
struct InvariantRecord {
    n: usize,
    vertices: Vec<Vec<i32>>,
    #[serde(rename = "V")]
    v: usize,
    #[serde(rename = "E")]
    e: usize,
    #[serde(rename = "F")]
    f: usize,
    euler: i64,
    orientable: bool,
    genus: i64,
}

fn invariant_record(g: &LabeledRibbonGraph) -> InvariantRecord {
    let inv = g.invariants();
    InvariantRecord {
        n: g.edge_count(),
        vertices: g.vertices().to_vec(),
        v: inv.vertices,
        e: inv.edges,
        f: inv.faces,
        euler: inv.euler,
        orientable: inv.orientable,
        genus: inv.genus,
    }
}

fn read_graph(input: &str, from_file: bool) -> Result<LabeledRibbonGraph, CliError> {
    let text = if from_file {
        fs::read_to_string(input).map_err(|e| CliError(format!("cannot read {input}: {e}")))?
    } else {
        input.to_string()
    };
    Ok(LabeledRibbonGraph::parse(&text)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Apply { input, gamma, uniform, pi } => {
            let g = read_graph(&input.graph, input.file)?;
            let n = g.edge_count();
            let gamma = match (gamma, uniform) {
                (Some(_), Some(_)) => {
                    return Err(CliError("--gamma and --uniform are mutually exclusive".into()))
                }
                (Some(list), None) => RibbonElement::parse(&list)?,
                (None, Some(op)) => RibbonElement::uniform(EdgeOp::parse(&op)?, n),
                (None, None) => RibbonElement::identity(n),
            };
            let pi = match pi {
                Some(text) => Permutation::parse_cycles(&text, n)?,
                None => Permutation::identity(n),
            };
            let element = GroupElement::new(gamma, pi)?;
            let image = apply(&element, &g)?;
            if input.json {
                println!("{}", serde_json::json!({ "graph": image.to_text() }));
            } else {
                println!("{image}");
            }
        }
        Command::Classify { input } => {
            let g = read_graph(&input.graph, input.file)?;
            let flags = classify(&g);
            if input.json {
                let record = serde_json::json!({
                    "flags": flags,
                    "invariants": invariant_record(&g),
                });
                println!("{record}");
            } else {
                println!(
                    "dual={} petrial={} wilsonial={} trial={}",
                    yes_no(flags.self_dual),
                    yes_no(flags.self_petrial),
                    yes_no(flags.self_wilsonial),
                    yes_no(flags.self_trial)
                );
                print_invariants_text(&g);
            }
        }
        Command::Invariants { input } => {
            let g = read_graph(&input.graph, input.file)?;
            if input.json {
                if g.is_connected() {
                    println!("{}", serde_json::to_string(&invariant_record(&g))?);
                } else {
                    let records: Vec<InvariantRecord> = g
                        .components()
                        .iter()
                        .map(|(c, _)| invariant_record(c))
                        .collect();
                    println!("{}", serde_json::to_string(&records)?);
                }
            } else {
                print_invariants_text(&g);
            }
        }
        Command::Stabilizers { input } => {
            let g = read_graph(&input.graph, input.file)?;
            let stab = stabilizers(&g);
            if input.json {
                let items: Vec<serde_json::Value> = stab
                    .elements
                    .iter()
                    .map(|el| {
                        serde_json::json!({
                            "gamma": format!("{}", el.gamma),
                            "pi": el.pi.to_cycle_string(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::json!({ "count": items.len(), "elements": items }));
            } else {
                for el in &stab.elements {
                    println!("({}, {})", el.gamma, el.pi.to_cycle_string());
                }
                println!("count: {}", stab.elements.len());
            }
        }
        Command::Enumerate { k, count, json } => {
            let reps = twual::enumerate::oebs_up_to_iso(k);
            if count {
                println!("{}", reps.len());
            } else if json {
                let items: Vec<String> = reps
                    .iter()
                    .map(|d| d.convert(DiagramForm::EndLabel).to_string())
                    .collect();
                println!("{}", serde_json::json!({ "count": items.len(), "classes": items }));
            } else {
                for d in &reps {
                    println!("{}", d.convert(DiagramForm::EndLabel));
                }
            }
        }
        Command::Census { n, jobs, resume, out, unbounded, json } => {
            if n == 0 || (n > 7 && !unbounded) {
                return Err(CliError(
                    "census expects 1 <= n <= 7; pass --unbounded to go larger".into(),
                ));
            }
            let checkpoint = out
                .as_ref()
                .map(|p| p.with_extension("ckpt"))
                .or_else(|| resume.then(|| PathBuf::from(format!("census-n{n}.ckpt"))));
            let opts = CensusOptions { jobs, checkpoint, resume, progress: !json };
            let entries = census(n, &opts);
            let records: Vec<_> = entries.iter().map(|e| e.to_record()).collect();
            let rendered = if json {
                serde_json::json!({ "n": n, "classes": records.len(), "entries": records })
                    .to_string()
            } else {
                let mut text = String::new();
                for r in &records {
                    text.push_str(&format!(
                        "n={} graph={} seed={} alpha={} sigma={}\n",
                        r.n, r.graph, r.seed_oeb, r.alpha, r.sigma
                    ));
                }
                text.push_str(&format!("classes: {}", records.len()));
                text
            };
            println!("{rendered}");
            if let Some(path) = out {
                fs::write(&path, format!("{rendered}\n"))
                    .map_err(|e| CliError(format!("cannot write {}: {e}", path.display())))?;
            }
        }
        Command::Family { k, json } => {
            if k == 0 {
                return Err(CliError("family expects k >= 1".into()));
            }
            let (h, alpha, g) = family(k);
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "h": h.to_text(),
                        "alpha": format!("{alpha}"),
                        "g": g.to_text(),
                    })
                );
            } else {
                println!("H = {h}");
                println!("alpha = {alpha}");
                println!("G = {g}");
            }
        }
        Command::Reduce { input } => {
            let g = read_graph(&input.graph, input.file)?;
            let (diagram, alpha) = reduce_to_oeb(&g)?;
            let oeb = diagram.convert(DiagramForm::EndLabel);
            if input.json {
                println!(
                    "{}",
                    serde_json::json!({ "oeb": oeb.to_string(), "alpha": format!("{alpha}") })
                );
            } else {
                println!("oeb = {oeb}");
                println!("alpha = {alpha}");
            }
        }
        Command::Iso { a, b, file, json } => {
            let ga = read_graph(&a, file)?;
            let gb = read_graph(&b, file)?;
            match ga.iso(&gb) {
                Some(witness) => {
                    let bijection = witness.edge_bijection.to_cycle_string();
                    if json {
                        println!(
                            "{}",
                            serde_json::json!({ "isomorphic": true, "edge_bijection": bijection })
                        );
                    } else {
                        println!("isomorphic via {bijection}");
                    }
                }
                None => {
                    if json {
                        println!("{}", serde_json::json!({ "isomorphic": false }));
                    } else {
                        println!("not isomorphic");
                    }
                }
            }
        }
    }
    Ok(())
}

fn print_invariants_text(g: &LabeledRibbonGraph) {
    if g.is_connected() {
        let i = g.invariants();
        println!(
            "V={} E={} F={} euler={} orientable={} genus={}",
            i.vertices,
            i.edges,
            i.faces,
            i.euler,
            yes_no(i.orientable),
            i.genus
        );
    } else {
        for (idx, (c, _)) in g.components().iter().enumerate() {
            let i = c.invariants();
            println!(
                "component {}: V={} E={} F={} euler={} orientable={} genus={}",
                idx + 1,
                i.vertices,
                i.edges,
                i.faces,
                i.euler,
                yes_no(i.orientable),
                i.genus
            );
        }
    }
}

// Exit codes: 0 success, 1 usage or input error, 2 internal invariant
// violation (a bug, never expected).
fn main() -> ExitCode {
    let cli = Cli::parse();
    match catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CliError(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(_) => {
            eprintln!("internal error: invariant violated");
            ExitCode::from(2)
        }
    }
}
