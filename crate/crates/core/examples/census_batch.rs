//! Batch run over a census CSV, writing JSON lines and printing the summary
//! table. Defaults to the bundled census.
//!
//!     cargo run --release --example census_batch -- data/census.csv /tmp/census.jsonl

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use crosscap::harness::{load_census, run_batch, summary_table, write_jsonl, BatchConfig, Verdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let input = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/census.csv"));
    let census = load_census(&input)?;
    for e in &census.errors {
        eprintln!("skipped row {}: {}", e.row, e.message);
    }
    let reports = run_batch(&census.records, &BatchConfig::from_env()?);
    if let Some(out) = args.next() {
        write_jsonl(&reports, BufWriter::new(File::create(out)?))?;
    }
    print!("{}", summary_table(&reports));
    for r in reports.iter().filter(|r| r.verdict == Verdict::Fail) {
        println!("{}: {}", r.name, r.notes.join("; "));
    }
    Ok(())
}
