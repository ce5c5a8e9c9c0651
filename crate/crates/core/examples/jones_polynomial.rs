//! Kauffman bracket and Jones polynomial of a PD code, with the two
//! quantities the crosscap bounds are read from.
//!
//!     cargo run --example jones_polynomial -- "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"

use crosscap::diagram::{Diagram, Orientation};
use crosscap::jones::{bracket, jones};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pd = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)".to_string());
    let d = Diagram::parse_pd(&pd)?;
    let j = jones(&d, &Orientation::default_for(&d))?;
    println!("crossings {}, components {}, writhe {}", d.crossing_count(), d.components(), j.writhe);
    println!("<D>  = {}", bracket(&d)?);
    println!("V(A) = {}", j.jones_a);
    if let Some(vt) = &j.jones_t {
        println!("V(t) = {vt}");
    }
    println!("span {}  T {}", j.span_t, j.t_k);
    Ok(())
}
