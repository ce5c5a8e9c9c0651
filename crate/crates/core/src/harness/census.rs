use std::fs::File;
use std::io::Read;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::diagram::Diagram;

pub const HEADER: [&str; 5] = ["name", "pd", "known_crosscap", "known_lower", "known_upper"];

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("census file not found: {0}")]
    MissingFile(String),
    #[error("bad header {found:?}, expected {expected}", expected = HEADER.join(","))]
    BadHeader { found: Vec<String> },
    #[error("reading census: {0}")]
    Io(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub name: String,
    pub pd: String,
    pub diagram: Diagram,
    pub known_crosscap: Option<i64>,
    pub known_bounds: Option<(i64, i64)>,
}

/// A row that could not be turned into a record. Rows are numbered from 1
/// for the first line after the header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowError {
    pub row: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct Census {
    pub records: Vec<CensusRecord>,
    pub errors: Vec<RowError>,
}

impl Census {
    pub fn get(&self, name: &str) -> Option<&CensusRecord> {
        let want = normalize_name(name);
        self.records.iter().find(|r| normalize_name(&r.name) == want)
    }
}

#[derive(Deserialize)]
struct Row {
    name: String,
    pd: String,
    known_crosscap: Option<i64>,
    known_lower: Option<i64>,
    known_upper: Option<i64>,
}

/// Names like `12a_0636` and `12a_636` refer to the same knot.
pub fn normalize_name(name: &str) -> String {
    match name.split_once('_') {
        Some((family, index)) => {
            let digits = index.trim_start_matches('0');
            format!("{family}_{}", if digits.is_empty() { "0" } else { digits })
        }
        None => name.to_string(),
    }
}

pub fn load_census(path: &Path) -> Result<Census, CensusError> {
    let file = File::open(path).map_err(|_| CensusError::MissingFile(path.display().to_string()))?;
    read_census(file)
}

pub fn read_census<R: Read>(input: R) -> Result<Census, CensusError> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
    let header = reader.headers().map_err(|e| CensusError::Io(e.to_string()))?;
    if header.iter().ne(HEADER) {
        return Err(CensusError::BadHeader { found: header.iter().map(String::from).collect() });
    }
    let mut census = Census::default();
    for (i, row) in reader.deserialize::<Row>().enumerate() {
        let row_no = i + 1;
        let fail = |message: String| RowError { row: row_no, message };
        let row = match row {
            Ok(r) => r,
            Err(e) => {
                census.errors.push(fail(e.to_string()));
                continue;
            }
        };
        let diagram = match Diagram::parse_pd(&row.pd) {
            Ok(d) if d.is_connected() => d,
            Ok(_) => {
                census.errors.push(fail(format!("{}: diagram is not connected", row.name)));
                continue;
            }
            Err(e) => {
                census.errors.push(fail(format!("{}: {e}", row.name)));
                continue;
            }
        };
        let known_bounds = match (row.known_lower, row.known_upper) {
            (Some(l), Some(u)) => Some((l, u)),
            (None, None) => None,
            _ => {
                census.errors.push(fail(format!("{}: only one of known_lower/known_upper", row.name)));
                continue;
            }
        };
        census.records.push(CensusRecord {
            name: row.name,
            pd: row.pd,
            diagram,
            known_crosscap: row.known_crosscap,
            known_bounds,
        });
    }
    Ok(census)
}
