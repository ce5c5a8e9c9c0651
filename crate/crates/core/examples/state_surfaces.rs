//! State-surface search on an alternating diagram: largest Euler
//! characteristic, the witnesses reaching it, and the crosscap number.
//!
//!     cargo run --example state_surfaces -- "<pd code>"

use crosscap::adams_kindred::{ak_search, SearchConfig};
use crosscap::diagram::{Diagram, Smoothing};
use crosscap::surfaces::{surface_summary, KauffmanState};

// 10_3
const DEFAULT: &str = "X(2,10,3,9) X(4,17,5,18) X(6,15,7,16) X(8,4,9,3) X(10,2,11,1) \
X(12,20,13,19) X(14,7,15,8) X(16,5,17,6) X(18,14,19,13) X(20,12,1,11)";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pd = std::env::args().nth(1).unwrap_or_else(|| DEFAULT.to_string());
    let d = Diagram::parse_pd(&pd)?;
    let r = ak_search(&d, &SearchConfig::default())?;
    println!("max chi {} over {} search nodes", r.max_chi, r.stats.nodes);
    for w in &r.witness_states {
        let s = surface_summary(&d, w)?;
        println!("  {}  circles {}  chi {}  orientable {}", w.letters(), s.circles, s.chi, s.orientable);
    }
    println!("crosscap {}", r.crosscap);
    if let Some(g) = r.genus {
        println!("genus {g} (only orientable surfaces reach the maximum)");
    }
    let all_a = KauffmanState::uniform(d.crossing_count(), Smoothing::A);
    println!("all-A surface: {:?}", surface_summary(&d, &all_a)?);
    Ok(())
}
