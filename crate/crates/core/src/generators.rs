//! PD codes for pretzel links, inflated twist regions and links built
//! from planar trivalent graphs.
//!
//! All constructions go through one builder: a planar graph given as a
//! rotation system is thickened to a ribbon, and each edge band gets a
//! stack of half-twists. A band is drawn running upward from its first
//! endpoint; its crossings have the `/` strand over, so every corner of the
//! ribbon joins an over end to an under end and the result alternates.
//! Negative twist counts give the mirror image.

use std::path::Path;

use thiserror::Error;

use crate::diagram::{Diagram, DiagramError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("twist counts mix signs; the pretzel would not be alternating")]
    MixedSigns,
    #[error("need at least 3 tangles, got {0}")]
    TooFewTangles(usize),
    #[error("twist count 0 on edge {0}")]
    ZeroTwist(usize),
    #[error("graph is not planar")]
    NotPlanar,
    #[error("vertex {0} has degree {1}, expected 3")]
    NotTrivalent(usize, usize),
    #[error("bad graph: {0}")]
    BadGraph(String),
    #[error("expected {expected} twist counts, got {got}")]
    TwistCount { expected: usize, got: usize },
    #[error("extra crossings must be even and positive, got {0}")]
    BadExtra(usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// A graph embedded in the sphere: for each vertex, the edges at it in
/// counterclockwise order. Every edge id `0..E` appears exactly twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    pub rotation: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(rotation: Vec<Vec<usize>>) -> Result<Self, GenError> {
        let edges = rotation.iter().flatten().copied().max().map_or(0, |m| m + 1);
        let mut seen = vec![0; edges];
        for &e in rotation.iter().flatten() {
            seen[e] += 1;
        }
        if let Some(e) = seen.iter().position(|&n| n != 2) {
            return Err(GenError::BadGraph(format!("edge {e} does not have exactly two ends")));
        }
        if edges == 0 {
            return Err(GenError::BadGraph("no edges".into()));
        }
        Ok(RotationSystem { rotation })
    }

    /// Text form: one line per vertex, `v: e1 e2 e3`, edges counterclockwise.
    /// Vertices must be numbered `0..V` in order; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, GenError> {
        let mut rotation = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (v, rest) = line
                .split_once(':')
                .ok_or_else(|| GenError::BadGraph(format!("missing ':' in {line:?}")))?;
            let v: usize = v.trim().parse().map_err(|_| GenError::BadGraph(format!("bad vertex {v:?}")))?;
            if v != rotation.len() {
                return Err(GenError::BadGraph(format!("vertex {v} out of order")));
            }
            let edges = rest
                .split_whitespace()
                .map(|e| e.parse().map_err(|_| GenError::BadGraph(format!("bad edge {e:?}"))))
                .collect::<Result<Vec<usize>, _>>()?;
            rotation.push(edges);
        }
        Self::new(rotation)
    }

    pub fn load(path: &Path) -> Result<Self, GenError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| GenError::BadGraph(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Half-edge `(vertex, position)` pairs for each edge, first end first.
    fn ends(&self) -> Vec<[(usize, usize); 2]> {
        let mut ends = vec![[(usize::MAX, 0); 2]; self.edge_count()];
        for (v, list) in self.rotation.iter().enumerate() {
            for (i, &e) in list.iter().enumerate() {
                let slot = if ends[e][0].0 == usize::MAX { 0 } else { 1 };
                ends[e][slot] = (v, i);
            }
        }
        ends
    }

    /// Connected and `V - E + F = 2` for the faces of the rotation system.
    pub fn is_planar(&self) -> bool {
        let ends = self.ends();
        let other = |v: usize, i: usize| -> (usize, usize) {
            let e = self.rotation[v][i];
            if ends[e][0] == (v, i) {
                ends[e][1]
            } else {
                ends[e][0]
            }
        };
        let mut seen: Vec<Vec<bool>> = self.rotation.iter().map(|l| vec![false; l.len()]).collect();
        let mut faces = 0;
        for v in 0..self.vertex_count() {
            for i in 0..self.rotation[v].len() {
                if seen[v][i] {
                    continue;
                }
                faces += 1;
                let (mut w, mut j) = (v, i);
                while !seen[w][j] {
                    seen[w][j] = true;
                    let (x, k) = other(w, j);
                    (w, j) = (x, (k + 1) % self.rotation[x].len());
                }
            }
        }
        let connected = {
            let mut comp = vec![false; self.vertex_count()];
            let mut stack = vec![0];
            comp[0] = true;
            while let Some(v) = stack.pop() {
                for i in 0..self.rotation[v].len() {
                    let (w, _) = other(v, i);
                    if !comp[w] {
                        comp[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.iter().all(|&b| b)
        };
        connected && self.vertex_count() + faces == self.edge_count() + 2
    }
}

// Dart slots of a band crossing emitted as X(SE, NE, NW, SW).
const SE: usize = 0;
const NE: usize = 1;
const NW: usize = 2;
const SW: usize = 3;

/// Boundary of a thickened planar graph with `twists[e]` half-twists in the
/// band of edge `e`.
pub fn ribbon_link(graph: &RotationSystem, twists: &[i64]) -> Result<Diagram, GenError> {
    let edges = graph.edge_count();
    if twists.len() != edges {
        return Err(GenError::TwistCount { expected: edges, got: twists.len() });
    }
    if let Some(e) = twists.iter().position(|&n| n == 0) {
        return Err(GenError::ZeroTwist(e));
    }
    if twists.iter().any(|&n| n > 0) && twists.iter().any(|&n| n < 0) {
        return Err(GenError::MixedSigns);
    }
    if !graph.is_planar() {
        return Err(GenError::NotPlanar);
    }
    let mut base = Vec::with_capacity(edges);
    let mut c = 0;
    for &n in twists {
        base.push(c);
        c += n.unsigned_abs() as usize;
    }
    let dart = |e: usize, j: usize, slot: usize| 4 * (base[e] + j) + slot;
    let mut labels = vec![0u32; 4 * c];
    let mut next = 0;
    let mut connect = |a: usize, b: usize| {
        next += 1;
        labels[a] = next;
        labels[b] = next;
    };
    for (e, &n) in twists.iter().enumerate() {
        for j in 1..n.unsigned_abs() as usize {
            connect(dart(e, j - 1, NW), dart(e, j, SW));
            connect(dart(e, j - 1, NE), dart(e, j, SE));
        }
    }
    let ends = graph.ends();
    let top = |e: usize| twists[e].unsigned_abs() as usize - 1;
    // left and right band ends, seen from the vertex looking along the edge
    let sides = |v: usize, i: usize| -> (usize, usize) {
        let e = graph.rotation[v][i];
        if ends[e][0] == (v, i) {
            (dart(e, 0, SW), dart(e, 0, SE))
        } else {
            (dart(e, top(e), NE), dart(e, top(e), NW))
        }
    };
    for (v, list) in graph.rotation.iter().enumerate() {
        let d = list.len();
        for i in 0..d {
            connect(sides(v, i).0, sides(v, (i + 1) % d).1);
        }
    }
    let slots: Vec<[u32; 4]> = labels.chunks(4).map(|q| [q[0], q[1], q[2], q[3]]).collect();
    let mut out = Diagram::new(slots, 0)?.normalized();
    if twists[0] < 0 {
        out = out.mirror().normalized();
    }
    debug_assert!(out.is_alternating());
    Ok(out)
}

/// The standard diagram of the pretzel link `P(p_1, ..., p_N)`: `N`
/// vertical twist tangles side by side. All entries must share a sign.
pub fn pretzel(p: &[i64]) -> Result<Diagram, GenError> {
    let n = p.len();
    if n < 3 {
        return Err(GenError::TooFewTangles(n));
    }
    let graph = RotationSystem::new(vec![(0..n).collect(), (0..n).rev().collect()])?;
    let d = ribbon_link(&graph, p)?;
    assert!(d.is_alternating(), "pretzel construction must alternate");
    Ok(d)
}

/// Boundary of a trivalent planar graph's neighbourhood with the given
/// half-twists on each edge.
pub fn trivalent_graph_link(graph: &RotationSystem, twists: &[i64]) -> Result<Diagram, GenError> {
    if let Some((v, l)) = graph.rotation.iter().enumerate().find(|(_, l)| l.len() != 3) {
        return Err(GenError::NotTrivalent(v, l.len()));
    }
    let d = ribbon_link(graph, twists)?;
    assert!(d.is_alternating(), "ribbon construction must alternate");
    Ok(d)
}

/// Replaces `crossing` by `1 + extra` crossings twisted the same way, lined
/// up with a bigon at that crossing when there is one, so the number of
/// twist regions does not change.
pub fn inflate_twist(d: &Diagram, crossing: usize, extra: usize) -> Result<Diagram, GenError> {
    let c = d.crossing_count();
    if crossing >= c {
        return Err(DiagramError::NoSuchCrossing(crossing).into());
    }
    if extra == 0 || extra % 2 == 1 {
        return Err(GenError::BadExtra(extra));
    }
    // A bigon at the corner before an even slot lies along the vertical
    // axis of the first frame; before an odd slot, along the second.
    let bigon_before_odd = d
        .faces()
        .iter()
        .filter(|f| f.is_proper_bigon())
        .flat_map(|f| f.corners.clone())
        .find(|k| k.crossing == crossing)
        .map(|k| (k.after_slot + 1) % 4 % 2 == 1)
        .unwrap_or(false);
    let old = d.crossings()[crossing].slots;
    // frame position of each original slot, and how each stacked crossing
    // is written so its under strand stays the original one
    type Emit = fn([u32; 4]) -> [u32; 4];
    let (frame, emit): ([usize; 4], Emit) = if bigon_before_odd {
        // SW=0, SE=1, NE=2, NW=3
        ([SW, SE, NE, NW], |q| [q[SW], q[SE], q[NE], q[NW]])
    } else {
        // SE=0, NE=1, NW=2, SW=3
        ([SE, NE, NW, SW], |q| [q[SE], q[NE], q[NW], q[SW]])
    };
    let n = 1 + extra;
    let mut stack = vec![[0u32; 4]; n];
    let mut next = 2 * c as u32;
    for j in 1..n {
        next += 1;
        stack[j - 1][NW] = next;
        stack[j][SW] = next;
        next += 1;
        stack[j - 1][NE] = next;
        stack[j][SE] = next;
    }
    for s in 0..4 {
        let pos = frame[s];
        let j = if pos == SE || pos == SW { 0 } else { n - 1 };
        stack[j][pos] = old[s];
    }
    let mut slots = d.slots();
    slots.remove(crossing);
    slots.extend(stack.into_iter().map(emit));
    Ok(Diagram::new(slots, d.unknot_components())?.normalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;
    use crate::diagram::Orientation;

    const THETA: &str = "0: 0 1 2\n1: 2 1 0\n";
    const K4: &str = "# centre, then the outer triangle\n0: 0 1 2\n1: 3 0 5\n2: 4 1 3\n3: 5 2 4\n";

    #[test]
    fn pretzel_333() {
        let d = pretzel(&[3, 3, 3]).unwrap();
        assert_eq!(d.crossing_count(), 9);
        assert_eq!(d.twist_regions().len(), 3);
        assert!(d.is_alternating());
        assert_eq!(d.components(), 1);
        assert_eq!(d.is_twist_reduced(), Ok(true));
        let s = d.strands(&Orientation::default_for(&d)).unwrap();
        assert!(s.iter().all(|x| x.under_in == 0));
    }

    #[test]
    fn pretzel_component_counts() {
        let d = pretzel(&[3, 3, 4]).unwrap();
        assert_eq!((d.crossing_count(), d.components()), (10, 1));
        assert_eq!(pretzel(&[2, 2, 2]).unwrap().components(), 3);
        assert_eq!(pretzel(&[3, 4, 4]).unwrap().components(), 2);
    }

    #[test]
    fn pretzel_errors() {
        assert_eq!(pretzel(&[3, -3, 3]), Err(GenError::MixedSigns));
        assert_eq!(pretzel(&[3, 3]), Err(GenError::TooFewTangles(2)));
        assert_eq!(pretzel(&[3, 0, 3]), Err(GenError::ZeroTwist(1)));
    }

    #[test]
    fn negative_pretzel_is_the_mirror() {
        let p = pretzel(&[3, 3, 3]).unwrap();
        let m = pretzel(&[-3, -3, -3]).unwrap();
        let o = Orientation::default_for(&p);
        assert_eq!(p.writhe(&o).unwrap(), -m.writhe(&o).unwrap());
        assert!(m.is_alternating());
    }

    #[test]
    fn separated_single_crossings_are_not_twist_reduced() {
        // the two 1-tangles can be flyped together
        let d = pretzel(&[1, 2, 1, 2]).unwrap();
        assert_eq!(d.crossing_count(), 6);
        assert_eq!(d.is_twist_reduced(), Ok(false));
        assert_eq!(pretzel(&[2, 1, 1, 2]).unwrap().is_twist_reduced(), Ok(true));
    }

    #[test]
    fn theta_graph_is_the_pretzel() {
        let theta = RotationSystem::parse(THETA).unwrap();
        assert_eq!(trivalent_graph_link(&theta, &[3, 3, 3]).unwrap(), pretzel(&[3, 3, 3]).unwrap());
        assert_eq!(trivalent_graph_link(&theta, &[3, 3, 4]).unwrap(), pretzel(&[3, 3, 4]).unwrap());
    }

    #[test]
    fn k4_link() {
        let k4 = RotationSystem::parse(K4).unwrap();
        assert!(k4.is_planar());
        let d = trivalent_graph_link(&k4, &[3; 6]).unwrap();
        assert_eq!(d.crossing_count(), 18);
        assert_eq!(d.twist_regions().len(), 6);
        assert!(d.is_alternating());
        assert_eq!(d.is_prime_diagram(), Ok(true));
        assert_eq!(d.is_twist_reduced(), Ok(true));
    }

    #[test]
    fn graph_errors() {
        // K4 with two edge ends swapped at one vertex embeds on a torus
        let bad = RotationSystem::parse("0: 0 2 1\n1: 3 0 5\n2: 4 1 3\n3: 5 2 4\n").unwrap();
        assert!(!bad.is_planar());
        assert_eq!(trivalent_graph_link(&bad, &[3; 6]), Err(GenError::NotPlanar));
        let square = RotationSystem::parse("0: 0 1\n1: 1 2\n2: 2 3\n3: 3 0\n").unwrap();
        assert_eq!(trivalent_graph_link(&square, &[3; 4]), Err(GenError::NotTrivalent(0, 2)));
        assert!(RotationSystem::parse("0: 0 1\n").is_err());
        let theta = RotationSystem::parse(THETA).unwrap();
        assert_eq!(
            trivalent_graph_link(&theta, &[3, 3]),
            Err(GenError::TwistCount { expected: 3, got: 2 })
        );
    }

    #[test]
    fn inflating_keeps_twist_regions() {
        let t = Diagram::parse_pd(TREFOIL).unwrap();
        let big = inflate_twist(&t, 0, 2).unwrap();
        assert_eq!(big.crossing_count(), 5);
        assert_eq!(big.twist_regions().len(), 1);
        assert!(big.is_alternating());

        let f = Diagram::parse_pd(FIGURE_EIGHT).unwrap();
        for x in 0..4 {
            let g = inflate_twist(&f, x, 2).unwrap();
            assert_eq!(g.crossing_count(), 6);
            assert_eq!(g.twist_regions().len(), 2, "crossing {x}");
            assert!(g.is_alternating());
        }
        assert_eq!(inflate_twist(&f, 0, 3), Err(GenError::BadExtra(3)));
        assert_eq!(inflate_twist(&f, 9, 2), Err(GenError::Diagram(DiagramError::NoSuchCrossing(9))));
    }

    #[test]
    fn inflating_a_bigon_free_crossing() {
        let d = Diagram::parse_pd(EIGHT_18).unwrap();
        let g = inflate_twist(&d, 3, 4).unwrap();
        assert_eq!(g.crossing_count(), 12);
        assert_eq!(g.twist_regions().len(), 8);
        assert!(g.is_alternating());
    }
}
