//! Jones polynomials, twist regions, state surfaces and crosscap numbers of
//! link diagrams given as PD codes.
//!
//! ```
//! use crosscap::adams_kindred::{ak_search, SearchConfig};
//! use crosscap::diagram::{Diagram, Orientation};
//! use crosscap::jones::jones;
//!
//! let d = Diagram::parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
//! let j = jones(&d, &Orientation::default_for(&d)).unwrap();
//! let ak = ak_search(&d, &SearchConfig::default()).unwrap();
//! assert_eq!((j.t_k, j.span_t, ak.crosscap), (2, 4, 2));
//! ```

pub mod adams_kindred;
pub mod bounds;
pub mod diagram;
pub mod generators;
pub mod harness;
pub mod jones;
pub mod laurent;
pub mod surfaces;
