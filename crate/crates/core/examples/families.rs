//! The generated families: alternating pretzels, links from trivalent
//! planar graphs, and twist-region inflation of 10_3.

use crosscap::adams_kindred::{ak_search, SearchConfig};
use crosscap::bounds::{crosscap_pretzel, crosscap_trivalent};
use crosscap::diagram::Diagram;
use crosscap::generators::{inflate_twist, pretzel, trivalent_graph_link, RotationSystem};

const K4: &str = "0: 0 1 2\n1: 3 0 5\n2: 4 1 3\n3: 5 2 4\n";
const TEN_3: &str = "X(2,10,3,9) X(4,17,5,18) X(6,15,7,16) X(8,4,9,3) X(10,2,11,1) \
X(12,20,13,19) X(14,7,15,8) X(16,5,17,6) X(18,14,19,13) X(20,12,1,11)";

fn crosscap(d: &Diagram) -> i64 {
    ak_search(d, &SearchConfig::default()).expect("search").crosscap
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in [[3, 3, 3].as_slice(), &[3, 3, 4], &[3, 5, 5, 4], &[5, 5, 5, 5, 3]] {
        let d = pretzel(p)?;
        println!("P{p:?}: c {}  search {}  formula {}", d.crossing_count(), crosscap(&d), crosscap_pretzel(p)?);
    }

    let g = RotationSystem::parse(K4)?;
    let d = trivalent_graph_link(&g, &[3; 6])?;
    let ak = ak_search(&d, &SearchConfig::default())?;
    let eps = if ak.nonorientable_at_max { 2 } else { 3 };
    println!(
        "K4 with 3 twists per edge: c {}  t {}  search {}  formula {}",
        d.crossing_count(),
        d.twist_regions().len(),
        ak.crosscap,
        crosscap_trivalent(d.twist_regions().len(), eps, d.components())
    );

    let mut d = Diagram::parse_pd(TEN_3)?;
    for generation in 1..=2 {
        // one crossing per twist region; inflating keeps the regions apart
        let reps: Vec<usize> = d.twist_regions().iter().map(|r| r.crossings[0]).collect();
        for &x in reps.iter().rev() {
            d = inflate_twist(&d, x, 2)?;
        }
        println!("10_3 generation {generation}: c {}  t {}  crosscap {}", d.crossing_count(), d.twist_regions().len(), crosscap(&d));
    }
    Ok(())
}
