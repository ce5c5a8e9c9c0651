//! Batch runs over a census of diagrams: loading, per-record reports with
//! verdicts, and the width-one Jones table.

pub mod census;
pub mod report;
pub mod table1;

pub use census::{load_census, normalize_name, read_census, Census, CensusError, CensusRecord, RowError};
pub use report::{
    analyze, analyze_record, run_batch, summary_table, write_jsonl, BatchConfig, CrosscapReport, Verdict,
};
pub use table1::{format_table1, reproduce_table1, MissingKnots, Table1Row, TABLE1};

/// Environment variable overriding the search node budget.
pub const BUDGET_ENV: &str = "CROSSCAP_BUDGET";

impl BatchConfig {
    /// Default configuration with the node budget taken from
    /// `CROSSCAP_BUDGET` when it is set to a positive integer.
    pub fn from_env() -> Result<Self, String> {
        let mut cfg = BatchConfig::default();
        if let Ok(v) = std::env::var(BUDGET_ENV) {
            cfg.search.node_budget = parse_budget(&v)?;
        }
        Ok(cfg)
    }
}

pub fn parse_budget(v: &str) -> Result<u64, String> {
    match v.trim().replace('_', "").parse::<u64>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("{BUDGET_ENV} must be a positive integer, got {v:?}")),
    }
}
