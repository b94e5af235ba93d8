//! Command-line front end: translate sequent proofs, reduce and normalize
//! nets, list generator sequences, run Gröbner computations, and drive the
//! verification suites. Data goes to stdout, diagnostics to stderr; exit
//! code 0 means success or all-pass, 1 a verification failure, 2 a usage or
//! parse error.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use proofnet_ideals::groebner::{buchberger_es, buchberger_standard};
use proofnet_ideals::netideal::{
    self, combine_conclusions, generator_sequence, link_generators, order_gamma, order_n,
    order_zero, sim_graph, Sabotage,
};
use proofnet_ideals::polyring::VarOrder;
use proofnet_ideals::proofnet::{apply_steps, normalize, ProofStructure, SequentProof};
use proofnet_ideals::roofgraph::falling_roofs;
use proofnet_ideals::verify::{run_suites, Suite};

#[derive(Parser)]
#[command(name = "proofnet-ideals", version, about = "Proof nets as polynomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderKind {
    Zero,
    Gamma,
    N,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Std,
    Es,
    Roofs,
}

#[derive(Args)]
struct OrderArgs {
    /// Monomial order: persistent-path order, a reduction-sequence order, or
    /// the normal-form order
    #[arg(long, value_enum, default_value = "zero")]
    order: OrderKind,
    /// Redex selectors for the gamma order, e.g. "0" or "0,0,1"
    #[arg(long, value_delimiter = ',')]
    steps: Vec<usize>,
    /// Par-combine multiple conclusions before computing
    #[arg(long)]
    combine: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Translate a sequent-proof JSON file into a proof-structure JSON file
    Translate {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reduce one redex or normalize; emits structure, variable map and trace
    Reduce {
        file: PathBuf,
        /// Index into the deterministic redex list
        #[arg(long, conflicts_with = "normalize")]
        redex: Option<usize>,
        /// Reduce until cut-free
        #[arg(long)]
        normalize: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the generator sequence of the net ideal under a monomial order
    Ideal {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Run a Gröbner-basis computation on the generator sequence
    Groebner {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "es")]
        algo: Algo,
        #[command(flatten)]
        order: OrderArgs,
        /// Write the falling-roofs graph as DOT (solid live, dotted dead)
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run verification suites over reference nets and a random corpus
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of nets (reference nets included); 0 runs nothing
        #[arg(long, default_value_t = 25)]
        count: usize,
        /// Mis-pair one compound axiom/cut generator to demonstrate that the
        /// checks are non-vacuous
        #[arg(long)]
        sabotage: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

fn fail_usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn read_structure(path: &PathBuf) -> Result<ProofStructure, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    ProofStructure::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_or_print(output: &Option<PathBuf>, data: &str) -> Result<(), String> {
    match output {
        Some(path) => fs::write(path, data).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            println!("{data}");
            Ok(())
        }
    }
}

fn resolve_order(
    net: &ProofStructure,
    args: &OrderArgs,
) -> Result<(ProofStructure, VarOrder), String> {
    let net = if args.combine {
        combine_conclusions(net).map_err(|e| e.to_string())?
    } else {
        net.clone()
    };
    let order = match args.order {
        OrderKind::Zero => order_zero(&net).map_err(|e| e.to_string())?,
        OrderKind::N => order_n(&net).map_err(|e| e.to_string())?,
        OrderKind::Gamma => {
            if args.steps.is_empty() {
                return Err("--order gamma requires --steps".into());
            }
            let red = apply_steps(&net, &args.steps).map_err(|e| e.to_string())?;
            order_gamma(&net, &red.map).map_err(|e| e.to_string())?
        }
    };
    Ok((net, order))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Translate { file, output } => {
            let text = match fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => return fail_usage(format!("{}: {e}", file.display())),
            };
            let proof = match SequentProof::from_json(&text) {
                Ok(p) => p,
                Err(e) => return fail_usage(e),
            };
            let net = match proofnet_ideals::proofnet::translate(&proof) {
                Ok(n) => n,
                Err(e) => return fail_usage(e),
            };
            eprintln!(
                "translated: {} nodes, {} edges, {} conclusions",
                net.node_count(),
                net.edge_count(),
                net.conclusion_edges().len()
            );
            match write_or_print(&output, &net.to_json()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail_usage(e),
            }
        }
        Command::Reduce { file, redex, normalize: do_normalize, format, output } => {
            let net = match read_structure(&file) {
                Ok(n) => n,
                Err(e) => return fail_usage(e),
            };
            let result = if do_normalize {
                normalize(&net)
            } else {
                match redex {
                    Some(i) => apply_steps(&net, &[i]),
                    None => return fail_usage("pass --redex <index> or --normalize"),
                }
            };
            let norm = match result {
                Ok(n) => n,
                Err(e) => return fail_usage(e),
            };
            let rendered = match format {
                OutputFormat::Dot => norm.result.to_dot(),
                OutputFormat::Json | OutputFormat::Text => {
                    let trace: Vec<String> = norm.trace.iter().map(|r| r.to_string()).collect();
                    format!(
                        "{{\n\"structure\": {},\n\"varmap\": {},\n\"trace\": {}\n}}",
                        norm.result.to_json(),
                        norm.map.to_json(),
                        serde_json::to_string(&trace).expect("strings serialize"),
                    )
                }
            };
            match write_or_print(&output, &rendered) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail_usage(e),
            }
        }
        Command::Ideal { file, order, format } => {
            let net = match read_structure(&file) {
                Ok(n) => n,
                Err(e) => return fail_usage(e),
            };
            let (net, var_order) = match resolve_order(&net, &order) {
                Ok(x) => x,
                Err(e) => return fail_usage(e),
            };
            let seq = match generator_sequence(&net, &var_order) {
                Ok(s) => s,
                Err(e) => return fail_usage(e),
            };
            let name = netideal::namer(&net);
            let links = link_generators(&net).link_of_pair();
            let annotate = |p: &proofnet_ideals::polyring::Polynomial| {
                p.as_difference().and_then(|(a, b)| {
                    let key = if a <= b { (a, b) } else { (b, a) };
                    links.get(&key).copied()
                })
            };
            match format {
                OutputFormat::Json => {
                    let items: Vec<serde_json::Value> = seq
                        .iter()
                        .map(|p| {
                            let link = annotate(p);
                            serde_json::json!({
                                "poly": p.display_with(Some(&var_order), &name),
                                "link": link.map(|(id, _)| id.0),
                                "kind": link.map(|(_, k)| k.as_str()),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&items).expect("json"));
                }
                _ => {
                    for p in &seq {
                        match annotate(p) {
                            Some((id, kind)) => println!(
                                "{}\t# link n{} ({})",
                                p.display_with(Some(&var_order), &name),
                                id.0,
                                kind.as_str()
                            ),
                            None => println!("{}", p.display_with(Some(&var_order), &name)),
                        }
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Command::Groebner { file, algo, order, dot } => {
            let net = match read_structure(&file) {
                Ok(n) => n,
                Err(e) => return fail_usage(e),
            };
            let (net, var_order) = match resolve_order(&net, &order) {
                Ok(x) => x,
                Err(e) => return fail_usage(e),
            };
            let name = netideal::namer(&net);
            let result: Result<Vec<proofnet_ideals::polyring::Polynomial>, String> = match algo {
                Algo::Std => {
                    let seq = generator_sequence(&net, &var_order).map_err(|e| e.to_string());
                    seq.and_then(|s| {
                        buchberger_standard(&s, &var_order)
                            .map(|b| b.polys)
                            .map_err(|e| e.to_string())
                    })
                }
                Algo::Es => {
                    let seq = generator_sequence(&net, &var_order).map_err(|e| e.to_string());
                    seq.and_then(|s| {
                        buchberger_es(&s, &var_order).map(|b| b.polys).map_err(|e| e.to_string())
                    })
                }
                Algo::Roofs => sim_graph(&net, &var_order)
                    .map_err(|e| e.to_string())
                    .and_then(|g| falling_roofs(&g).map_err(|e| e.to_string()))
                    .and_then(|n| {
                        if let Some(path) = &dot {
                            fs::write(path, n.to_dot(&name))
                                .map_err(|e| format!("{}: {e}", path.display()))?;
                        }
                        Ok(n.binomials())
                    }),
            };
            match result {
                Ok(polys) => {
                    for p in &polys {
                        println!("{}", p.display_with(Some(&var_order), &name));
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => fail_usage(e),
            }
        }
        Command::Verify { suite, seed, count, sabotage, jobs, format } => {
            let suites = match Suite::parse(&suite) {
                Some(s) => s,
                None => return fail_usage(format!("unknown suite {suite:?}")),
            };
            let sabotage = if sabotage {
                Sabotage::MispairFirstCompoundAxiom
            } else {
                Sabotage::None
            };
            let reports = run_suites(&suites, seed, count, sabotage, jobs.max(1));
            let mut all_pass = true;
            for r in &reports {
                all_pass &= r.pass;
                match format {
                    OutputFormat::Json => println!("{}", r.to_json()),
                    _ => println!("{}", r.line()),
                }
            }
            let theorems: BTreeSet<&str> = reports.iter().map(|r| r.theorem).collect();
            eprintln!(
                "{} checks across {} theorems: {}",
                reports.len(),
                theorems.len(),
                if all_pass { "all pass" } else { "FAILURES present" }
            );
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
