//! Every bound interval for a diagram, with the hypothesis that fails when
//! one does not apply. The default is the pretzel P(7,7,7), whose long twist
//! regions bring in the adequate-diagram bounds.

use crosscap::adams_kindred::{ak_search, SearchConfig};
use crosscap::bounds::{all_bounds, crosscap_pretzel, DiagramFacts};
use crosscap::diagram::{Diagram, Orientation};
use crosscap::generators::pretzel;
use crosscap::jones::jones_with_cap;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = match std::env::args().nth(1) {
        Some(pd) => Diagram::parse_pd(&pd)?,
        None => pretzel(&[7, 7, 7])?,
    };
    let facts = DiagramFacts::of(&d);
    // the default cap of 20 crossings would refuse P(7,7,7)
    let j = jones_with_cap(&d, &Orientation::default_for(&d), 40)?;
    let ak = ak_search(&d, &SearchConfig::default()).ok();
    println!("{facts:?}");
    println!("T {}  span {}", j.t_k, j.span_t);
    for b in all_bounds(&facts, j.t_k, j.span_t, ak.as_ref().and_then(|a| a.genus).map(|g| g as u64)) {
        let status = b.reason.as_deref().unwrap_or("applies");
        println!("{:<15} [{}, {}]  {status}", format!("{:?}", b.source), b.lower, b.upper);
    }
    if let Some(ak) = ak {
        println!("crosscap from the state search: {}", ak.crosscap);
    }
    if std::env::args().len() == 1 {
        println!("pretzel formula: {}", crosscap_pretzel(&[7, 7, 7])?);
    }
    Ok(())
}
