use std::fmt::Write as _;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use super::census::CensusRecord;
use crate::adams_kindred::{ak_search, AkResult, SearchConfig};
use crate::bounds::{all_bounds, BoundInterval, BoundSource, DiagramFacts};
use crate::diagram::{Diagram, Orientation};
use crate::jones::{jones_with_cap, JonesData, DEFAULT_CROSSING_CAP};
use crate::surfaces::is_orientable;

/// Bumped whenever a field of [`CrosscapReport`] changes meaning.
pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BatchConfig {
    pub search: SearchConfig,
    pub crossing_cap: usize,
}

impl Default for BatchConfig {
    fn default() -> Self {
        BatchConfig { search: SearchConfig::default(), crossing_cap: DEFAULT_CROSSING_CAP }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// The exact crosscap agrees with an independent exact value (a known
    /// census value or a closed bound interval).
    #[serde(rename = "EXACT-AGREE")]
    ExactAgree,
    /// Every check passes but nothing independent pins the value.
    #[serde(rename = "CONSISTENT")]
    Consistent,
    #[serde(rename = "FAIL")]
    Fail,
    /// No exact crosscap: non-alternating diagram, budget exhausted, or
    /// too large.
    #[serde(rename = "SKIPPED")]
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::ExactAgree => "EXACT-AGREE",
            Verdict::Consistent => "CONSISTENT",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AkSummary {
    pub max_chi: i64,
    pub nonorientable_at_max: bool,
    pub crosscap: i64,
    pub genus: Option<i64>,
    pub witnesses: Vec<Witness>,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub state: String,
    pub orientable: bool,
}

impl AkSummary {
    fn new(d: &Diagram, r: &AkResult) -> Self {
        AkSummary {
            max_chi: r.max_chi,
            nonorientable_at_max: r.nonorientable_at_max,
            crosscap: r.crosscap,
            genus: r.genus,
            witnesses: r
                .witness_states
                .iter()
                .map(|s| Witness { state: s.letters(), orientable: is_orientable(d, s).unwrap_or(false) })
                .collect(),
            nodes: r.stats.nodes,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrosscapReport {
    pub schema: u32,
    pub name: String,
    #[serde(flatten)]
    pub facts: DiagramFacts,
    pub t_k: Option<u64>,
    pub span_t: Option<u64>,
    pub jones: Option<String>,
    pub bounds: Vec<BoundInterval>,
    pub ak: Option<AkSummary>,
    pub crosscap: Option<i64>,
    pub known_crosscap: Option<i64>,
    pub known_bounds: Option<(i64, i64)>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl CrosscapReport {
    pub fn bound(&self, source: BoundSource) -> Option<&BoundInterval> {
        self.bounds.iter().find(|b| b.source == source)
    }
}

pub fn run_batch(records: &[CensusRecord], config: &BatchConfig) -> Vec<CrosscapReport> {
    records.par_iter().map(|r| analyze_record(r, config)).collect()
}

pub fn analyze_record(r: &CensusRecord, config: &BatchConfig) -> CrosscapReport {
    let mut rep = analyze(&r.name, &r.diagram, config);
    rep.known_crosscap = r.known_crosscap;
    rep.known_bounds = r.known_bounds;
    judge(&mut rep);
    rep
}

/// Runs the full pipeline on one diagram. The verdict only reflects
/// internal checks; census data is compared in [`analyze_record`].
pub fn analyze(name: &str, d: &Diagram, config: &BatchConfig) -> CrosscapReport {
    let facts = DiagramFacts::of(d);
    let mut notes = Vec::new();
    let jones: Option<JonesData> =
        match jones_with_cap(d, &Orientation::default_for(d), config.crossing_cap) {
            Ok(j) => Some(j),
            Err(e) => {
                notes.push(format!("jones: {e}"));
                None
            }
        };
    let ak = if facts.alternating && facts.connected {
        match ak_search(d, &config.search) {
            Ok(r) => Some(r),
            Err(e) => {
                notes.push(format!("ak: {e}"));
                None
            }
        }
    } else {
        notes.push("ak: not a connected alternating diagram".into());
        None
    };
    let genus = ak.as_ref().and_then(|a| a.genus).map(|g| g as u64);
    let bounds = match &jones {
        Some(j) => all_bounds(&facts, j.t_k, j.span_t, genus),
        None => Vec::new(),
    };
    let mut rep = CrosscapReport {
        schema: REPORT_SCHEMA,
        name: name.to_string(),
        facts,
        t_k: jones.as_ref().map(|j| j.t_k),
        span_t: jones.as_ref().map(|j| j.span_t),
        jones: jones.as_ref().map(|j| j.jones_a.to_string()),
        bounds,
        crosscap: ak.as_ref().map(|a| a.crosscap),
        ak: ak.as_ref().map(|a| AkSummary::new(d, a)),
        known_crosscap: None,
        known_bounds: None,
        verdict: Verdict::Skipped,
        notes,
    };
    judge(&mut rep);
    rep
}

fn judge(rep: &mut CrosscapReport) {
    rep.notes.retain(|n| !n.starts_with("check: "));
    let mut failures = Vec::new();
    let f = &rep.facts;
    if let (Some(t_k), Some(span)) = (rep.t_k, rep.span_t) {
        if f.connected && f.alternating && f.reduced && span != f.c as u64 {
            failures.push(format!("span {span} differs from crossing count {}", f.c));
        }
        if f.alternating && f.prime && f.twist_reduced && !f.torus_2p && t_k != f.t as u64 {
            failures.push(format!("T = {t_k} differs from twist number {}", f.t));
        }
    }
    let mut exact_witness = false;
    if let Some(c) = rep.crosscap {
        for b in rep.bounds.iter().filter(|b| b.applicable) {
            if !b.contains(c) {
                failures.push(format!("crosscap {c} outside {:?} [{}, {}]", b.source, b.lower, b.upper));
            } else if b.is_exact() {
                exact_witness = true;
            }
        }
        if let Some(k) = rep.known_crosscap {
            if k == c {
                exact_witness = true;
            } else {
                failures.push(format!("crosscap {c} but census says {k}"));
            }
        }
        if let Some((lo, hi)) = rep.known_bounds {
            if c < lo || c > hi {
                failures.push(format!("crosscap {c} outside census range [{lo}, {hi}]"));
            }
            if lo == hi && lo == c {
                exact_witness = true;
            }
        }
    }
    rep.verdict = if !failures.is_empty() {
        Verdict::Fail
    } else if rep.crosscap.is_none() {
        Verdict::Skipped
    } else if exact_witness {
        Verdict::ExactAgree
    } else {
        Verdict::Consistent
    };
    rep.notes.extend(failures.into_iter().map(|m| format!("check: {m}")));
}

pub fn write_jsonl<W: Write>(reports: &[CrosscapReport], mut out: W) -> io::Result<()> {
    for r in reports {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Fixed-width summary, one line per record plus verdict totals.
pub fn summary_table(reports: &[CrosscapReport]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<12} {:>3} {:>2} {:>3} {:>4} {:>5} {:>8} {:>8} {:>5}  verdict",
        "name", "c", "k", "t", "T", "span", "jones", "twist", "C"
    );
    let show = |b: Option<&BoundInterval>| match b {
        Some(b) if b.applicable => format!("[{},{}]", b.lower, b.upper),
        _ => "-".into(),
    };
    let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
    for r in reports {
        let jones_bound = r.bound(BoundSource::JonesKnot).filter(|b| b.applicable).or(r.bound(BoundSource::JonesLink));
        let _ = writeln!(
            s,
            "{:<12} {:>3} {:>2} {:>3} {:>4} {:>5} {:>8} {:>8} {:>5}  {}",
            r.name,
            r.facts.c,
            r.facts.k,
            r.facts.t,
            opt(r.t_k.map(|x| x as i64)),
            opt(r.span_t.map(|x| x as i64)),
            show(jones_bound),
            show(r.bound(BoundSource::TwistNumber)),
            opt(r.crosscap),
            r.verdict.as_str()
        );
    }
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let _ = writeln!(
        s,
        "{} records: {} exact-agree, {} consistent, {} skipped, {} fail",
        reports.len(),
        count(Verdict::ExactAgree),
        count(Verdict::Consistent),
        count(Verdict::Skipped),
        count(Verdict::Fail)
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;
    use crate::harness::census::read_census;

    #[test]
    fn figure_eight_record() {
        let d = Diagram::parse_pd(FIGURE_EIGHT).unwrap();
        let rep = analyze("4_1", &d, &BatchConfig::default());
        assert_eq!((rep.t_k, rep.span_t, rep.crosscap), (Some(2), Some(4), Some(2)));
        let b = rep.bound(BoundSource::JonesKnot).unwrap();
        assert_eq!((b.lower, b.upper, b.applicable), (2, 2, true));
        assert_eq!(rep.verdict, Verdict::ExactAgree);
    }

    #[test]
    fn torus_knot_bounds_are_flagged() {
        let d = Diagram::parse_pd("X(2,8,3,7) X(4,10,5,9) X(6,2,7,1) X(8,4,9,3) X(10,6,1,5)").unwrap();
        let rep = analyze("5_1", &d, &BatchConfig::default());
        assert!(rep.facts.torus_2p);
        for s in [BoundSource::JonesLink, BoundSource::JonesKnot] {
            let b = rep.bound(s).unwrap();
            assert!(!b.applicable);
            assert_eq!(b.reason.as_deref(), Some("standard (2,p) torus diagram"));
        }
        assert_eq!(rep.crosscap, Some(1));
    }

    #[test]
    fn non_alternating_is_skipped() {
        let d = Diagram::parse_pd(EIGHT_19).unwrap();
        let rep = analyze("8_19", &d, &BatchConfig::default());
        assert_eq!(rep.verdict, Verdict::Skipped);
        assert!(rep.t_k.is_some());
    }

    #[test]
    fn wrong_census_value_fails() {
        let text = format!(
            "name,pd,known_crosscap,known_lower,known_upper\n4_1,\"{FIGURE_EIGHT}\",3,,\n"
        );
        let census = read_census(text.as_bytes()).unwrap();
        let reps = run_batch(&census.records, &BatchConfig::default());
        assert_eq!(reps[0].verdict, Verdict::Fail);
        assert!(reps[0].notes.iter().any(|n| n.contains("census says 3")));
    }

    #[test]
    fn budget_exhaustion_is_recorded() {
        let d = Diagram::parse_pd(EIGHT_18).unwrap();
        let cfg = BatchConfig { search: SearchConfig { node_budget: 1 }, ..BatchConfig::default() };
        let rep = analyze("8_18", &d, &cfg);
        assert_eq!(rep.verdict, Verdict::Skipped);
        assert!(rep.notes.iter().any(|n| n.contains("budget")));
    }

    #[test]
    fn jsonl_is_deterministic() {
        let census = read_census(
            format!("name,pd,known_crosscap,known_lower,known_upper\na,\"{TREFOIL}\",,,\nb,\"{EIGHT_18}\",,,\n")
                .as_bytes(),
        )
        .unwrap();
        let render = || {
            let mut buf = Vec::new();
            write_jsonl(&run_batch(&census.records, &BatchConfig::default()), &mut buf).unwrap();
            buf
        };
        let first = render();
        assert_eq!(first, render());
        let text = String::from_utf8(first).unwrap();
        assert_eq!(text.lines().count(), 2);
        let v: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        assert_eq!(v["verdict"], "EXACT-AGREE");
        assert_eq!(v["schema"], 1);
    }
}
