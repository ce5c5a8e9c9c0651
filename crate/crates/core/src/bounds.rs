//! Crosscap bounds as plain arithmetic, plus the diagram checks that decide
//! whether each one applies.

use serde::Serialize;
use thiserror::Error;

use crate::diagram::Diagram;
use crate::surfaces::is_adequate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("need at least 2 twist regions, got {0}")]
    BadTwistCount(usize),
    #[error("pretzel with two or more even tangles is a link, not a knot")]
    NotAKnot,
    #[error("pretzel formula needs at least 3 tangles, each with more than 2 crossings")]
    BadPretzel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BoundSource {
    /// Jones coefficients, any number of components.
    JonesLink,
    /// Jones coefficients and span, knots.
    JonesKnot,
    /// Twist number of a prime twist-reduced alternating diagram.
    TwistNumber,
    /// Jones coefficients, adequate diagrams with long twist regions.
    AdequateJones,
    /// Twist number, diagrams with long twist regions.
    AdequateTwist,
    /// Half the crossing number.
    CrossingNumber,
    /// Twice the orientable genus plus one.
    Genus,
    ConnectSum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundInterval {
    pub lower: i64,
    pub upper: i64,
    pub source: BoundSource,
    pub applicable: bool,
    /// Why the hypotheses fail, when they do.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl BoundInterval {
    fn new(lower: i64, upper: i64, source: BoundSource) -> Self {
        BoundInterval { lower, upper, source, applicable: true, reason: None }
    }

    pub fn contains(&self, value: i64) -> bool {
        self.lower <= value && value <= self.upper
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    /// Marks the interval inapplicable unless every check passes; the first
    /// failing check becomes the reason.
    pub fn require(mut self, checks: &[(bool, &str)]) -> Self {
        if let Some((_, why)) = checks.iter().find(|(ok, _)| !ok) {
            self.applicable = false;
            self.reason.get_or_insert_with(|| why.to_string());
        }
        self
    }
}

fn ceil_div(a: u64, b: u64) -> i64 {
    a.div_ceil(b) as i64
}

pub fn bounds_jones_link(t_k: u64, k: usize) -> BoundInterval {
    let k = k as i64;
    BoundInterval::new(ceil_div(t_k, 3) + 2 - k, t_k as i64 + 2 - k, BoundSource::JonesLink)
        .require(&[(t_k >= 1, "T is 0")])
}

pub fn bounds_jones_knot(t_k: u64, span: u64) -> BoundInterval {
    let upper = (t_k as i64 + 1).min(span as i64 / 2);
    BoundInterval::new(ceil_div(t_k, 3) + 1, upper, BoundSource::JonesKnot)
        .require(&[(t_k >= 1, "T is 0")])
}

pub fn bounds_twist(t: usize, k: usize) -> Result<BoundInterval, BoundsError> {
    if t < 2 {
        return Err(BoundsError::BadTwistCount(t));
    }
    let (t, k) = (t as i64, k as i64);
    Ok(BoundInterval::new((t + 2) / 3 + 2 - k, t + 2 - k, BoundSource::TwistNumber))
}

pub fn upper_crossing(c: usize) -> i64 {
    c as i64 / 2
}

pub fn upper_clark(g: u64) -> i64 {
    2 * g as i64 + 1
}

pub fn bounds_adequate(t_k: u64, k: usize) -> BoundInterval {
    let k = k as i64;
    BoundInterval::new(ceil_div(t_k, 6) + 2 - k, 3 * t_k as i64 - k - 1, BoundSource::AdequateJones)
}

pub fn bounds_adequate_twist(t: usize, k: usize) -> Result<BoundInterval, BoundsError> {
    let mut b = bounds_twist(t, k)?;
    b.source = BoundSource::AdequateTwist;
    Ok(b)
}

/// `epsilon` is 2 when the surface of the graph is non-orientable, 3
/// otherwise.
pub fn crosscap_trivalent(t: usize, epsilon: i64, k: usize) -> i64 {
    ceil_div(t as u64, 3) + epsilon - k as i64
}

/// Crosscap number of the alternating pretzel knot `P(p_1, ..., p_N)`.
/// All-odd entries with `N` even give a two-component link and are
/// rejected.
pub fn crosscap_pretzel(p: &[i64]) -> Result<i64, BoundsError> {
    if p.len() < 3 || p.iter().any(|x| x.abs() <= 2) {
        return Err(BoundsError::BadPretzel);
    }
    let n = p.len() as i64;
    match p.iter().filter(|x| *x % 2 == 0).count() {
        0 if n % 2 == 1 => Ok(n),
        1 => Ok(n - 1),
        _ => Err(BoundsError::NotAKnot),
    }
}

pub fn connect_sum_lower(c1: i64, c2: i64) -> i64 {
    c1 + c2 - 1
}

/// Diagram predicates the bound hypotheses are stated in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramFacts {
    pub k: usize,
    pub c: usize,
    pub t: usize,
    pub connected: bool,
    pub alternating: bool,
    /// No nugatory crossings.
    pub reduced: bool,
    pub prime: bool,
    pub twist_reduced: bool,
    pub adequate: bool,
    /// Connected reduced alternating diagram whose crossings form a single
    /// twist region: the standard picture of a (2, p) torus link.
    pub torus_2p: bool,
    pub shortest_twist_region: usize,
}

impl DiagramFacts {
    pub fn of(d: &Diagram) -> Self {
        let connected = d.is_connected();
        let regions = d.twist_regions();
        let t = regions.len();
        let alternating = d.is_alternating();
        let reduced = d.nugatory_crossings().is_empty();
        let prime = connected && d.is_prime_diagram().unwrap_or(false);
        let twist_reduced = connected && d.is_twist_reduced().unwrap_or(false);
        DiagramFacts {
            k: d.components(),
            c: d.crossing_count(),
            t,
            connected,
            alternating,
            reduced,
            prime,
            twist_reduced,
            adequate: is_adequate(d),
            torus_2p: connected && alternating && reduced && t == 1,
            shortest_twist_region: regions.iter().map(|r| r.len()).min().unwrap_or(0),
        }
    }
}

/// Every bound the diagram and its Jones data can feed, each flagged with
/// whether its hypotheses hold. `genus` is the orientable genus when known.
pub fn all_bounds(f: &DiagramFacts, t_k: u64, span_t: u64, genus: Option<u64>) -> Vec<BoundInterval> {
    let alt = (f.connected && f.alternating && f.reduced, "not a connected reduced alternating diagram");
    let not_torus = (!f.torus_2p, "standard (2,p) torus diagram");
    let knot = (f.k == 1, "not a knot");
    let prime = (f.prime, "diagram is not prime");
    let twist_reduced = (f.twist_reduced, "diagram is not twist-reduced");
    let two_regions = (f.t >= 2, "fewer than 2 twist regions");
    let long_regions = (f.shortest_twist_region >= 6, "a twist region has fewer than 6 crossings");
    let connected = (f.connected, "diagram is not connected");

    let mut out = vec![
        bounds_jones_link(t_k, f.k).require(&[alt, prime, not_torus]),
        bounds_jones_knot(t_k, span_t).require(&[knot, alt, not_torus]),
    ];
    // t >= 2 is part of the hypotheses; below that the interval is reported
    // with the arithmetic of t = 2 and flagged.
    let twist = bounds_twist(f.t.max(2), f.k).expect("t >= 2");
    out.push(twist.require(&[two_regions, alt, prime, twist_reduced]));
    let adequate_twist = bounds_adequate_twist(f.t.max(2), f.k).expect("t >= 2");
    out.push(adequate_twist.require(&[two_regions, connected, twist_reduced, long_regions]));
    out.push(bounds_adequate(t_k, f.k).require(&[
        two_regions,
        connected,
        twist_reduced,
        long_regions,
        (f.adequate, "diagram is not adequate"),
    ]));
    out.push(
        BoundInterval::new(1, upper_crossing(f.c), BoundSource::CrossingNumber)
            .require(&[knot, alt, (f.c >= 1, "no crossings")]),
    );
    if let Some(g) = genus {
        out.push(BoundInterval::new(1, upper_clark(g), BoundSource::Genus).require(&[knot]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;

    fn pair(b: &BoundInterval) -> (i64, i64) {
        (b.lower, b.upper)
    }

    #[test]
    fn jones_link_arithmetic() {
        assert_eq!(pair(&bounds_jones_link(6, 1)), (3, 7));
        assert!(bounds_jones_link(6, 1).contains(3));
        let zero = bounds_jones_link(0, 1);
        assert_eq!(pair(&zero), (1, 1));
        assert!(!zero.applicable);
        assert_eq!(pair(&bounds_jones_link(5, 2)), (2, 5));
    }

    #[test]
    fn jones_knot_arithmetic() {
        assert_eq!(pair(&bounds_jones_knot(10, 10)), (5, 5));
        assert_eq!(pair(&bounds_jones_knot(13, 13)), (6, 6));
        assert_eq!(pair(&bounds_jones_knot(2, 4)), (2, 2));
    }

    #[test]
    fn twist_arithmetic() {
        assert_eq!(pair(&bounds_twist(2, 1).unwrap()), (2, 3));
        assert_eq!(pair(&bounds_twist(3, 1).unwrap()), (2, 4));
        assert_eq!(pair(&bounds_twist(2, 2).unwrap()), (1, 2));
        assert_eq!(bounds_twist(1, 1), Err(BoundsError::BadTwistCount(1)));
        assert_eq!(pair(&bounds_adequate_twist(6, 1).unwrap()), (3, 7));
        assert_eq!(pair(&bounds_adequate_twist(4, 2).unwrap()), (2, 4));
    }

    #[test]
    fn single_value_formulas() {
        assert_eq!((upper_crossing(10), upper_crossing(13), upper_crossing(3)), (5, 6, 1));
        assert_eq!((upper_clark(0), upper_clark(1), upper_clark(2)), (1, 3, 5));
        assert_eq!(pair(&bounds_adequate(6, 1)), (2, 16));
        assert_eq!(pair(&bounds_adequate(2, 1)), (2, 4));
        assert_eq!(crosscap_trivalent(3, 2, 1), 2);
        assert_eq!(crosscap_trivalent(3, 3, 1), 3);
        assert_eq!((connect_sum_lower(2, 2), connect_sum_lower(1, 1), connect_sum_lower(3, 5)), (3, 1, 7));
    }

    #[test]
    fn pretzel_formula() {
        assert_eq!(crosscap_pretzel(&[3, 3, 3]), Ok(3));
        assert_eq!(crosscap_pretzel(&[3, 3, 4]), Ok(2));
        assert_eq!(crosscap_pretzel(&[-3, -3, -4, -5]), Ok(3));
        assert_eq!(crosscap_pretzel(&[3, 4, 4]), Err(BoundsError::NotAKnot));
        assert_eq!(crosscap_pretzel(&[3, 3]), Err(BoundsError::BadPretzel));
    }

    #[test]
    fn well_formed_for_all_t() {
        for t in 0..200u64 {
            for k in 1..4 {
                let b = bounds_jones_link(t, k);
                assert!(b.lower <= b.upper);
            }
        }
    }

    #[test]
    fn facts_of_small_diagrams() {
        let t = DiagramFacts::of(&Diagram::parse_pd(TREFOIL).unwrap());
        assert!(t.torus_2p && t.prime && t.alternating);
        let f = DiagramFacts::of(&Diagram::parse_pd(FIGURE_EIGHT).unwrap());
        assert!(!f.torus_2p && f.twist_reduced && f.adequate);
        assert_eq!((f.t, f.shortest_twist_region), (2, 2));
        let bounds = all_bounds(&f, 2, 4, Some(1));
        let knot = bounds.iter().find(|b| b.source == BoundSource::JonesKnot).unwrap();
        assert!(knot.applicable && knot.is_exact() && knot.lower == 2);
        let adequate = bounds.iter().find(|b| b.source == BoundSource::AdequateJones).unwrap();
        assert!(!adequate.applicable);
        assert_eq!(adequate.reason.as_deref(), Some("a twist region has fewer than 6 crossings"));
    }
}
