//! Link diagrams as planar 4-valent combinatorial maps.
//!
//! A diagram is a list of crossings in PD form. Each crossing lists four arc
//! labels counterclockwise, starting from an understrand endpoint; slots 0
//! and 2 hold the understrand, slots 1 and 3 the overstrand. Every arc label
//! appears in exactly two slots, which gives the edge pairing of the map; the
//! counterclockwise slot order is its rotation system.
//!
//! Half-edges are called darts and are encoded as `4 * crossing + slot`.

mod faces;
mod moves;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use faces::{Checkerboard, Face, TwistRegion};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed PD code: {0}")]
    MalformedCode(String),
    #[error("bad arc labels: {0}")]
    BadLabels(String),
    #[error("PD code does not describe a planar diagram")]
    NonPlanar,
    #[error("diagram is not connected")]
    Disconnected,
    #[error("diagram has no crossings and no components")]
    Empty,
    #[error("no crossing with index {0}")]
    NoSuchCrossing(usize),
    #[error("no arc labelled {0}")]
    NoSuchArc(u32),
    #[error("orientation has {got} entries but the diagram has {expected} components")]
    OrientationLength { expected: usize, got: usize },
}

/// One of the two smoothings of a crossing.
///
/// With slots `(a, b, c, d)`, the A-smoothing joins `a`-`b` and `c`-`d`, the
/// B-smoothing joins `a`-`d` and `b`-`c`. The A-smoothing merges the two
/// regions swept when the overstrand is turned counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Smoothing {
    A,
    B,
}

impl Smoothing {
    pub fn flip(self) -> Smoothing {
        match self {
            Smoothing::A => Smoothing::B,
            Smoothing::B => Smoothing::A,
        }
    }

    /// The slot joined to `slot` by this smoothing.
    #[inline]
    pub fn partner_slot(self, slot: usize) -> usize {
        match self {
            Smoothing::A => slot ^ 1,
            Smoothing::B => 3 - slot,
        }
    }

    /// The smoothing that closes off the corner between slots `slot - 1` and
    /// `slot` (indices mod 4).
    #[inline]
    pub fn cutting_corner_before(slot: usize) -> Smoothing {
        if slot % 2 == 1 {
            Smoothing::A
        } else {
            Smoothing::B
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KinkSign {
    Positive,
    Negative,
}

/// A crossing: four arc labels in counterclockwise order from an
/// understrand endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub index: usize,
    pub slots: [u32; 4],
}

/// Per-component traversal direction, as a list of reversal flags relative to
/// the default orientation returned by [`Diagram::link_components`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Orientation(pub Vec<bool>);

impl Orientation {
    pub fn default_for(d: &Diagram) -> Self {
        Orientation(vec![false; d.components()])
    }

    /// All orientations with the first component fixed; these represent the
    /// `2^(k-1)` classes up to reversing everything.
    pub fn classes(d: &Diagram) -> Vec<Orientation> {
        let k = d.components();
        if k == 0 {
            return vec![Orientation(Vec::new())];
        }
        (0..1u64 << (k - 1))
            .map(|bits| Orientation((0..k).map(|i| i > 0 && bits >> (i - 1) & 1 == 1).collect()))
            .collect()
    }
}

/// How a crossing is traversed under a given orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingStrands {
    /// Slot where the understrand enters (0 or 2).
    pub under_in: usize,
    /// Slot where the overstrand enters (1 or 3).
    pub over_in: usize,
    pub under_component: usize,
    pub over_component: usize,
}

impl CrossingStrands {
    pub fn sign(&self) -> i32 {
        let over = if self.over_in == 3 { 1 } else { -1 };
        let under = if self.under_in == 0 { 1 } else { -1 };
        over * under
    }

    /// The oriented (Seifert) smoothing: A at positive crossings, B at
    /// negative ones.
    pub fn seifert_smoothing(&self) -> Smoothing {
        if self.sign() > 0 {
            Smoothing::A
        } else {
            Smoothing::B
        }
    }
}

/// A link component traced through the crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkComponent {
    /// Darts through which the component enters crossings, in traversal
    /// order. Empty for a crossing-free circle.
    pub entries: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    unknots: usize,
    /// `partner[d]` is the other dart carrying the same label as `d`.
    partner: Vec<usize>,
}

impl Diagram {
    /// Validates labels and planarity.
    pub fn new(slots: Vec<[u32; 4]>, unknot_components: usize) -> Result<Self, DiagramError> {
        let d = Self::from_slots_unchecked(slots, unknot_components)?;
        if !d.euler_holds() {
            return Err(DiagramError::NonPlanar);
        }
        Ok(d)
    }

    /// Checks labels only; used internally where planarity is guaranteed by
    /// construction.
    pub(crate) fn from_slots_unchecked(
        slots: Vec<[u32; 4]>,
        unknot_components: usize,
    ) -> Result<Self, DiagramError> {
        if slots.is_empty() && unknot_components == 0 {
            return Err(DiagramError::Empty);
        }
        let c = slots.len();
        let arcs = 2 * c;
        let mut first = vec![usize::MAX; arcs + 1];
        let mut partner = vec![usize::MAX; 4 * c];
        for (x, quad) in slots.iter().enumerate() {
            for (s, &label) in quad.iter().enumerate() {
                let l = label as usize;
                if l == 0 || l > arcs {
                    return Err(DiagramError::BadLabels(format!(
                        "label {label} outside 1..={arcs}"
                    )));
                }
                let dart = 4 * x + s;
                match first[l] {
                    usize::MAX => first[l] = dart,
                    other if partner[other] == usize::MAX => {
                        partner[other] = dart;
                        partner[dart] = other;
                    }
                    _ => {
                        return Err(DiagramError::BadLabels(format!(
                            "label {label} appears more than twice"
                        )))
                    }
                }
            }
        }
        if let Some(l) = (1..=arcs).find(|&l| first[l] == usize::MAX || partner[first[l]] == usize::MAX) {
            return Err(DiagramError::BadLabels(format!("label {l} does not appear exactly twice")));
        }
        let crossings = slots
            .into_iter()
            .enumerate()
            .map(|(index, slots)| Crossing { index, slots })
            .collect();
        Ok(Diagram { crossings, unknots: unknot_components, partner })
    }

    /// `n` disjoint crossing-free circles.
    pub fn unlink(n: usize) -> Result<Self, DiagramError> {
        Self::new(Vec::new(), n)
    }

    pub fn parse_pd(text: &str) -> Result<Self, DiagramError> {
        let (slots, unknots) = parse_terms(text)?;
        Self::new(slots, unknots)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn unknot_components(&self) -> usize {
        self.unknots
    }

    pub fn slots(&self) -> Vec<[u32; 4]> {
        self.crossings.iter().map(|c| c.slots).collect()
    }

    #[inline]
    pub fn label(&self, dart: usize) -> u32 {
        self.crossings[dart / 4].slots[dart % 4]
    }

    /// The other end of the arc leaving `dart`.
    #[inline]
    pub fn opposite(&self, dart: usize) -> usize {
        self.partner[dart]
    }

    /// The two darts carrying `label`.
    pub fn arc_darts(&self, label: u32) -> Option<(usize, usize)> {
        (0..self.partner.len())
            .find(|&d| self.label(d) == label)
            .map(|d| (d, self.partner[d]))
    }

    /// Connected components of the underlying 4-valent graph, as crossing
    /// index lists. Crossing-free circles are not included.
    pub fn map_components(&self) -> Vec<Vec<usize>> {
        let c = self.crossing_count();
        let mut seen = vec![false; c];
        let mut out = Vec::new();
        for start in 0..c {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(x) = stack.pop() {
                comp.push(x);
                for s in 0..4 {
                    let y = self.partner[4 * x + s] / 4;
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// One connected piece on the sphere: either a single crossing-free circle
    /// or a connected map with no extra circles.
    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            self.unknots == 1
        } else {
            self.unknots == 0 && self.map_components().len() == 1
        }
    }

    pub(crate) fn require_connected(&self) -> Result<(), DiagramError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(DiagramError::Disconnected)
        }
    }

    fn euler_holds(&self) -> bool {
        let comps = self.map_components();
        let mut comp_of = vec![0; self.crossing_count()];
        for (i, comp) in comps.iter().enumerate() {
            for &x in comp {
                comp_of[x] = i;
            }
        }
        let mut face_count = vec![0usize; comps.len()];
        for f in self.face_orbits() {
            face_count[comp_of[f[0] / 4]] += 1;
        }
        comps.iter().zip(face_count).all(|(comp, f)| f == comp.len() + 2)
    }

    /// Link components with their default orientation. Components that pass
    /// under some crossing enter the first such crossing through slot 0.
    /// Crossing-free circles come last.
    pub fn link_components(&self) -> Vec<LinkComponent> {
        let c = self.crossing_count();
        let mut seen = vec![false; 4 * c];
        let mut out = Vec::new();
        for x in 0..c {
            for s in [0, 2, 1, 3] {
                let start = 4 * x + s;
                if seen[start] {
                    continue;
                }
                let mut entries = Vec::new();
                let mut d = start;
                loop {
                    seen[d] = true;
                    seen[d ^ 2] = true;
                    entries.push(d);
                    d = self.partner[d ^ 2];
                    if d == start {
                        break;
                    }
                }
                out.push(LinkComponent { entries });
            }
        }
        out.extend((0..self.unknots).map(|_| LinkComponent { entries: Vec::new() }));
        out
    }

    /// Number of link components, including crossing-free circles.
    pub fn components(&self) -> usize {
        self.link_components().len()
    }

    /// Strand directions at every crossing under `orientation`.
    pub fn strands(&self, orientation: &Orientation) -> Result<Vec<CrossingStrands>, DiagramError> {
        let comps = self.link_components();
        if orientation.0.len() != comps.len() {
            return Err(DiagramError::OrientationLength {
                expected: comps.len(),
                got: orientation.0.len(),
            });
        }
        let c = self.crossing_count();
        let mut out = vec![
            CrossingStrands { under_in: 0, over_in: 1, under_component: 0, over_component: 0 };
            c
        ];
        for (i, comp) in comps.iter().enumerate() {
            let flip = orientation.0[i];
            for &d in &comp.entries {
                let (x, s) = (d / 4, d % 4);
                let entry = if flip { s ^ 2 } else { s };
                if s % 2 == 0 {
                    out[x].under_in = entry;
                    out[x].under_component = i;
                } else {
                    out[x].over_in = entry;
                    out[x].over_component = i;
                }
            }
        }
        Ok(out)
    }

    pub fn writhe(&self, orientation: &Orientation) -> Result<i32, DiagramError> {
        Ok(self.strands(orientation)?.iter().map(CrossingStrands::sign).sum())
    }

    /// True iff every component alternates over, under, over, ... along its
    /// length.
    pub fn is_alternating(&self) -> bool {
        self.link_components().iter().all(|comp| {
            let n = comp.entries.len();
            (0..n).all(|i| comp.entries[i] % 2 != comp.entries[(i + 1) % n] % 2)
        })
    }

    /// Face orbits of the rotation system: `phi(d) = rot(opposite(d))`. A dart
    /// `4x + s` in an orbit marks the corner between slots `s - 1` and `s` of
    /// crossing `x`.
    pub(crate) fn face_orbits(&self) -> Vec<Vec<usize>> {
        let n = self.partner.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                orbit.push(d);
                let o = self.partner[d];
                d = (o & !3) | ((o + 1) & 3);
            }
            out.push(orbit);
        }
        out
    }
}

fn parse_terms(text: &str) -> Result<(Vec<[u32; 4]>, usize), DiagramError> {
    let bad = |msg: &str| DiagramError::MalformedCode(format!("{msg} in {text:?}"));
    let compact: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty code"));
    }
    let mut pos = 0;
    let mut unknots = 0;
    let mut slots = Vec::new();
    let read_args = |pos: &mut usize| -> Result<Vec<u32>, DiagramError> {
        if compact.get(*pos) != Some(&'(') {
            return Err(bad("expected '('"));
        }
        *pos += 1;
        let close = compact[*pos..]
            .iter()
            .position(|&c| c == ')')
            .ok_or_else(|| bad("unclosed '('"))?;
        let inner: String = compact[*pos..*pos + close].iter().collect();
        *pos += close + 1;
        inner
            .split(',')
            .map(|t| t.parse::<u32>().map_err(|_| bad("expected a non-negative integer")))
            .collect()
    };
    while pos < compact.len() {
        let head = compact[pos];
        pos += 1;
        match head {
            'U' if slots.is_empty() && unknots == 0 => {
                let args = read_args(&mut pos)?;
                if args.len() != 1 || args[0] == 0 {
                    return Err(bad("U(n) takes one positive integer"));
                }
                unknots = args[0] as usize;
            }
            'X' => {
                let args = read_args(&mut pos)?;
                let quad: [u32; 4] = args.try_into().map_err(|_| bad("X takes four labels"))?;
                if quad.contains(&0) {
                    return Err(bad("arc labels are positive"));
                }
                slots.push(quad);
            }
            _ => return Err(bad("unexpected term")),
        }
    }
    Ok((slots, unknots))
}

impl FromStr for Diagram {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Diagram::parse_pd(s)
    }
}

/// Canonical PD text: an optional `U(n)` term followed by the crossings in
/// index order.
impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        if self.unknots > 0 {
            terms.push(format!("U({})", self.unknots));
        }
        for c in &self.crossings {
            let [a, b, x, y] = c.slots;
            terms.push(format!("X({a},{b},{x},{y})"));
        }
        f.write_str(&terms.join(" "))
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn parses_kink_and_trefoil() {
        let k = Diagram::parse_pd(KINK).unwrap();
        assert_eq!(k.crossing_count(), 1);
        assert_eq!(k.face_orbits().len(), 3);
        let t = Diagram::parse_pd(TREFOIL).unwrap();
        assert_eq!(t.crossing_count(), 3);
        assert_eq!(t.face_orbits().len(), 5);
    }

    #[test]
    fn doubled_quad_is_not_planar() {
        // Face tracing gives two 4-gons, but a 2-crossing map needs 4 faces.
        assert_eq!(Diagram::parse_pd("X(1,2,3,4) X(1,2,3,4)"), Err(DiagramError::NonPlanar));
    }

    #[test]
    fn label_errors() {
        assert!(matches!(Diagram::parse_pd("X(1,2,3,3)"), Err(DiagramError::BadLabels(_))));
        assert!(matches!(Diagram::parse_pd("X(1,1,1,2)"), Err(DiagramError::BadLabels(_))));
        assert!(matches!(Diagram::parse_pd("X(1,2,2,5)"), Err(DiagramError::BadLabels(_))));
    }

    #[test]
    fn grammar_errors() {
        for bad in ["", "X(1,2,2)", "Y(1,2,2,1)", "X(1,2,2,1", "X(0,1,1,2)", "X(1,2,2,1) U(1)", "U(0)", "X(a,b,c,d)"] {
            assert!(
                matches!(Diagram::parse_pd(bad), Err(DiagramError::MalformedCode(_))),
                "{bad:?} should be malformed"
            );
        }
    }

    #[test]
    fn unknot_prefix() {
        let u = Diagram::parse_pd("U(1)").unwrap();
        assert_eq!(u.crossing_count(), 0);
        assert_eq!(u.components(), 1);
        assert!(u.is_connected());
        let split = Diagram::parse_pd("U(1) X(1,2,2,1)").unwrap();
        assert_eq!(split.components(), 2);
        assert!(!split.is_connected());
        assert_eq!(split.to_string(), "U(1) X(1,2,2,1)");
    }

    #[test]
    fn component_counts() {
        assert_eq!(Diagram::parse_pd(TREFOIL).unwrap().components(), 1);
        assert_eq!(Diagram::parse_pd(HOPF).unwrap().components(), 2);
        assert_eq!(Diagram::unlink(1).unwrap().components(), 1);
        assert_eq!(Diagram::parse_pd(GRANNY).unwrap().components(), 1);
    }

    #[test]
    fn alternation() {
        assert!(Diagram::parse_pd(TREFOIL).unwrap().is_alternating());
        assert!(Diagram::parse_pd(FIGURE_EIGHT).unwrap().is_alternating());
        assert!(!Diagram::parse_pd(EIGHT_19).unwrap().is_alternating());
        assert!(Diagram::parse_pd(EIGHT_18).unwrap().is_alternating());
    }

    #[test]
    fn writhe_of_standard_trefoil_is_negative() {
        // over strand runs from slot 1 to slot 3 at every crossing
        let t = Diagram::parse_pd(TREFOIL).unwrap();
        assert_eq!(t.writhe(&Orientation::default_for(&t)).unwrap(), -3);
        let k = Diagram::parse_pd(KINK).unwrap();
        assert_eq!(k.writhe(&Orientation::default_for(&k)).unwrap(), -1);
    }

    #[test]
    fn hopf_writhe_depends_on_relative_orientation() {
        let h = Diagram::parse_pd(HOPF).unwrap();
        let classes = Orientation::classes(&h);
        assert_eq!(classes.len(), 2);
        let w: Vec<i32> = classes.iter().map(|o| h.writhe(o).unwrap()).collect();
        assert_eq!(w[0], -w[1]);
        assert_eq!(w[0].abs(), 2);
    }

    #[test]
    fn display_round_trip() {
        for code in [KINK, TREFOIL, FIGURE_EIGHT, HOPF, GRANNY, "U(2)"] {
            let d = Diagram::parse_pd(code).unwrap();
            assert_eq!(Diagram::parse_pd(&d.to_string()).unwrap(), d);
        }
        let spaced = Diagram::parse_pd("X( 1, 2 ,2,1 )").unwrap();
        assert_eq!(spaced.to_string(), KINK);
    }
}
