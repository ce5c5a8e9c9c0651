use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crosscap::bounds::{bounds_jones_knot, bounds_jones_link, BoundInterval, DiagramFacts};
use crosscap::diagram::{Diagram, Orientation};
use crosscap::generators::{inflate_twist, pretzel, trivalent_graph_link, RotationSystem};
use crosscap::harness::{
    analyze, format_table1, load_census, reproduce_table1, run_batch, summary_table, write_jsonl,
    BatchConfig, CrosscapReport, Verdict,
};
use crosscap::jones::jones_with_cap;

#[derive(Parser)]
#[command(name = "crosscap", version, about = "Crosscap numbers and Jones bounds from PD codes")]
struct Cli {
    /// Largest diagram the Jones computation accepts.
    #[arg(long, global = true, default_value_t = crosscap::jones::DEFAULT_CROSSING_CAP)]
    crossing_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one diagram.
    Compute {
        #[arg(long)]
        pd: String,
        #[arg(long)]
        name: Option<String>,
        /// Print the report as one JSON object.
        #[arg(long)]
        json: bool,
    },
    /// Bound intervals for one diagram.
    Bounds {
        #[arg(long)]
        pd: String,
        /// Only the intervals read off the Jones polynomial; skips the search.
        #[arg(long)]
        jones_only: bool,
    },
    /// Run every census record and write one JSON line per record.
    Batch {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Reproduce the width-one Jones table from a census.
    Table1 {
        #[arg(long)]
        input: PathBuf,
    },
    /// Print the PD code of a generated diagram.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Alternating pretzel, e.g. `pretzel 3,3,4`.
    Pretzel {
        #[arg(value_delimiter = ',', allow_negative_numbers = true)]
        twists: Vec<i64>,
    },
    /// Add `extra` crossings to the twist region through `crossing`.
    Inflate { pd: String, crossing: usize, extra: usize },
    /// Ribbon link of a trivalent graph; one twist count for all edges or one per edge.
    Trivalent {
        graph: PathBuf,
        #[arg(value_delimiter = ',', allow_negative_numbers = true)]
        twists: Vec<i64>,
    },
}

const INPUT_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, cli.crossing_cap) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

fn verdict_code(failed: bool) -> ExitCode {
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn parse(pd: &str) -> Result<Diagram, String> {
    Diagram::parse_pd(pd).map_err(|e| e.to_string())
}

fn run(command: Command, crossing_cap: usize) -> Result<ExitCode, String> {
    let config = BatchConfig { crossing_cap, ..BatchConfig::from_env()? };
    match command {
        Command::Compute { pd, name, json } => {
            let d = parse(&pd)?;
            let rep = analyze(name.as_deref().unwrap_or("input"), &d, &config);
            if json {
                println!("{}", serde_json::to_string(&rep).map_err(|e| e.to_string())?);
            } else {
                print_report(&rep);
            }
            Ok(verdict_code(rep.verdict == Verdict::Fail))
        }
        Command::Bounds { pd, jones_only } => {
            let d = parse(&pd)?;
            let bounds = if jones_only {
                let facts = DiagramFacts::of(&d);
                let j = jones_with_cap(&d, &Orientation::default_for(&d), config.crossing_cap)
                    .map_err(|e| e.to_string())?;
                println!("T = {}  span = {}", j.t_k, j.span_t);
                jones_bounds(&facts, j.t_k, j.span_t)
            } else {
                let rep = analyze("input", &d, &config);
                if let Some(c) = rep.crosscap {
                    println!("crosscap = {c}");
                }
                rep.bounds
            };
            for b in &bounds {
                print_bound(b);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Batch { input, output } => {
            let census = load_census(&input).map_err(|e| e.to_string())?;
            for e in &census.errors {
                eprintln!("row {}: {}", e.row, e.message);
            }
            let reports = run_batch(&census.records, &config);
            let file = File::create(&output).map_err(|e| format!("{}: {e}", output.display()))?;
            write_jsonl(&reports, BufWriter::new(file)).map_err(|e| e.to_string())?;
            print!("{}", summary_table(&reports));
            Ok(verdict_code(reports.iter().any(|r| r.verdict == Verdict::Fail)))
        }
        Command::Table1 { input } => {
            let census = load_census(&input).map_err(|e| e.to_string())?;
            let rows = reproduce_table1(&census, &config).map_err(|e| e.to_string())?;
            let rows: Vec<_> = rows.into_iter().map(|(row, _)| row).collect();
            print!("{}", format_table1(&rows));
            Ok(verdict_code(rows.iter().any(|r| !r.pass)))
        }
        Command::Generate { family } => {
            let d = match family {
                Family::Pretzel { twists } => pretzel(&twists).map_err(|e| e.to_string())?,
                Family::Inflate { pd, crossing, extra } => {
                    inflate_twist(&parse(&pd)?, crossing, extra).map_err(|e| e.to_string())?
                }
                Family::Trivalent { graph, twists } => {
                    let g = RotationSystem::load(&graph).map_err(|e| e.to_string())?;
                    let twists = match twists.as_slice() {
                        [n] => vec![*n; g.edge_count()],
                        _ => twists,
                    };
                    trivalent_graph_link(&g, &twists).map_err(|e| e.to_string())?
                }
            };
            println!("{d}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn jones_bounds(f: &DiagramFacts, t_k: u64, span: u64) -> Vec<BoundInterval> {
    let alt = (f.connected && f.alternating && f.reduced, "not a connected reduced alternating diagram");
    let not_torus = (!f.torus_2p, "standard (2,p) torus diagram");
    vec![
        bounds_jones_link(t_k, f.k).require(&[alt, (f.prime, "diagram is not prime"), not_torus]),
        bounds_jones_knot(t_k, span).require(&[(f.k == 1, "not a knot"), alt, not_torus]),
    ]
}

fn print_bound(b: &BoundInterval) {
    match &b.reason {
        None => println!("{:<15} [{}, {}]", format!("{:?}", b.source), b.lower, b.upper),
        Some(why) => println!("{:<15} [{}, {}] not applicable: {why}", format!("{:?}", b.source), b.lower, b.upper),
    }
}

fn print_report(r: &CrosscapReport) {
    let f = &r.facts;
    println!("{}: c = {}, k = {}, t = {}", r.name, f.c, f.k, f.t);
    println!(
        "alternating {}, reduced {}, prime {}, twist-reduced {}, adequate {}, (2,p) torus {}",
        f.alternating, f.reduced, f.prime, f.twist_reduced, f.adequate, f.torus_2p
    );
    if let Some(j) = &r.jones {
        println!("jones (A) = {j}");
    }
    if let (Some(t), Some(s)) = (r.t_k, r.span_t) {
        println!("T = {t}, span = {s}");
    }
    for b in &r.bounds {
        print_bound(b);
    }
    if let Some(ak) = &r.ak {
        println!(
            "max chi = {} ({}), crosscap = {}{}",
            ak.max_chi,
            if ak.nonorientable_at_max { "non-orientable witness" } else { "orientable only" },
            ak.crosscap,
            ak.genus.map_or(String::new(), |g| format!(", genus = {g}"))
        );
        for w in &ak.witnesses {
            let kind = if w.orientable { "orientable" } else { "non-orientable" };
            println!("  witness {} ({kind})", w.state);
        }
    }
    for n in &r.notes {
        println!("note: {n}");
    }
    println!("verdict: {}", r.verdict.as_str());
}
