use serde::Serialize;
use thiserror::Error;

use super::census::Census;
use super::report::{analyze_record, BatchConfig, CrosscapReport};
use crate::bounds::BoundSource;

/// Alternating knots through 12 crossings whose Jones bound has width one,
/// grouped by the value of T. All have crosscap number 3.
pub const TABLE1: [(u64, &[&str]); 3] = [
    (
        6,
        &[
            "10_85", "10_93", "10_100", "11a_279", "11a_293", "11a_313", "11a_323", "11a_330",
            "11a_346", "12a_0970", "12a_0984", "12a_1017", "12a_1095", "12a_1107", "12a_1114",
            "12a_1171", "12a_1179", "12a_1205", "12a_1220", "12a_1240", "12a_1247",
        ],
    ),
    (5, &["11a_74", "11a_97", "11a_223", "11a_250", "11a_259", "12a_0636", "12a_0753", "12a_0827", "12a_0845", "12a_1031", "12a_1142"]),
    (4, &["11a_263", "11a_338", "12a_0641", "12a_1243", "12a_1285"]),
];

pub const TABLE1_CROSSCAP: i64 = 3;

#[derive(Debug, Error)]
#[error("census is missing {} table knots: {}", .0.len(), .0.join(", "))]
pub struct MissingKnots(pub Vec<String>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub name: String,
    pub expected_t: u64,
    pub t_k: Option<u64>,
    pub lower: Option<i64>,
    pub upper: Option<i64>,
    pub crosscap: Option<i64>,
    pub pass: bool,
}

pub fn table1_names() -> impl Iterator<Item = (&'static str, u64)> {
    TABLE1.iter().flat_map(|(t, names)| names.iter().map(move |n| (*n, *t)))
}

/// Recomputes every table entry from the census. A row passes when T
/// matches, the Jones knot bound has lower end 3, and the search finds
/// crosscap 3.
pub fn reproduce_table1(census: &Census, config: &BatchConfig) -> Result<Vec<(Table1Row, CrosscapReport)>, MissingKnots> {
    use rayon::prelude::*;
    let mut found = Vec::new();
    let mut missing = Vec::new();
    for (name, t) in table1_names() {
        match census.get(name) {
            Some(r) => found.push((name, t, r)),
            None => missing.push(name.to_string()),
        }
    }
    if !missing.is_empty() {
        return Err(MissingKnots(missing));
    }
    Ok(found
        .par_iter()
        .map(|&(name, expected_t, record)| {
            let rep = analyze_record(record, config);
            let b = rep.bound(BoundSource::JonesKnot).filter(|b| b.applicable);
            let row = Table1Row {
                name: name.to_string(),
                expected_t,
                t_k: rep.t_k,
                lower: b.map(|b| b.lower),
                upper: b.map(|b| b.upper),
                crosscap: rep.crosscap,
                pass: rep.t_k == Some(expected_t)
                    && b.map(|b| b.lower) == Some(TABLE1_CROSSCAP)
                    && rep.crosscap == Some(TABLE1_CROSSCAP),
            };
            (row, rep)
        })
        .collect())
}

pub fn format_table1(rows: &[Table1Row]) -> String {
    let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
    let mut s = format!("{:<10} {:>4} {:>4} {:>7} {:>3}  {}\n", "knot", "T", "got", "bound", "C", "result");
    for r in rows {
        s.push_str(&format!(
            "{:<10} {:>4} {:>4} {:>7} {:>3}  {}\n",
            r.name,
            r.expected_t,
            opt(r.t_k.map(|x| x as i64)),
            format!("[{},{}]", opt(r.lower), opt(r.upper)),
            opt(r.crosscap),
            if r.pass { "PASS" } else { "FAIL" }
        ));
    }
    let passed = rows.iter().filter(|r| r.pass).count();
    s.push_str(&format!("{passed}/{} rows reproduced\n", rows.len()));
    s
}
