//! Kauffman states and the state surfaces built from them.

use serde::Serialize;

use crate::diagram::{Diagram, DiagramError, Orientation, Smoothing};

/// One smoothing per crossing, indexed by crossing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KauffmanState(pub Vec<Smoothing>);

impl KauffmanState {
    pub fn uniform(c: usize, s: Smoothing) -> Self {
        KauffmanState(vec![s; c])
    }

    /// Bit `i` set means crossing `i` is B-smoothed.
    pub fn from_mask(c: usize, mask: u64) -> Self {
        KauffmanState(
            (0..c)
                .map(|i| if mask >> i & 1 == 1 { Smoothing::B } else { Smoothing::A })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, s: Smoothing) -> usize {
        self.0.iter().filter(|&&x| x == s).count()
    }

    /// Compact text form, one letter per crossing, e.g. `ABBA`.
    pub fn letters(&self) -> String {
        self.0
            .iter()
            .map(|s| match s {
                Smoothing::A => 'A',
                Smoothing::B => 'B',
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceSummary {
    pub circles: usize,
    pub chi: i64,
    pub orientable: bool,
    pub k: usize,
    /// `2 - chi - k`; the crosscap number of the surface when it is
    /// non-orientable, twice its genus otherwise.
    pub crosscap_of_surface: i64,
}

/// Union-find over darts after smoothing: each class is one state circle.
pub(crate) struct CircleTrace {
    parent: Vec<usize>,
    pub circles: usize,
}

impl CircleTrace {
    pub(crate) fn new(d: &Diagram, state: &[Smoothing]) -> Self {
        let n = 4 * d.crossing_count();
        let mut t = CircleTrace { parent: (0..n).collect(), circles: 0 };
        for (x, s) in state.iter().enumerate() {
            for slot in [0, 2] {
                t.union(4 * x + slot, 4 * x + s.partner_slot(slot));
            }
        }
        for dart in 0..n {
            t.union(dart, d.opposite(dart));
        }
        t.circles = (0..n).filter(|&i| t.find(i) == i).count() + d.unknot_components();
        t
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }

    /// True when the band at crossing `x` has both ends on one circle.
    pub(crate) fn self_touching(&mut self, x: usize) -> bool {
        self.find(4 * x) == self.find(4 * x + 2)
    }
}

fn check_len(d: &Diagram, state: &KauffmanState) {
    assert_eq!(state.len(), d.crossing_count(), "state does not match diagram");
}

/// Number of circles after smoothing every crossing, including the
/// diagram's crossing-free circles.
pub fn state_circles(d: &Diagram, state: &KauffmanState) -> usize {
    check_len(d, state);
    CircleTrace::new(d, &state.0).circles
}

/// The oriented-smoothing state for every orientation class, deduplicated
/// and sorted.
pub fn seifert_states(d: &Diagram) -> Vec<KauffmanState> {
    let mut out: Vec<KauffmanState> = Orientation::classes(d)
        .iter()
        .map(|o| {
            let strands = d.strands(o).expect("orientation classes have the right length");
            KauffmanState(strands.iter().map(|s| s.seifert_smoothing()).collect())
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// A state surface of a connected diagram is orientable exactly when its
/// state is the Seifert state of some orientation.
pub fn is_orientable(d: &Diagram, state: &KauffmanState) -> Result<bool, DiagramError> {
    d.require_connected()?;
    check_len(d, state);
    Ok(seifert_states(d).contains(state))
}

/// Independent check: the surface is orientable iff the state graph
/// (circles joined by one edge per crossing) is bipartite.
pub fn state_graph_bipartite(d: &Diagram, state: &KauffmanState) -> bool {
    check_len(d, state);
    let mut trace = CircleTrace::new(d, &state.0);
    let c = d.crossing_count();
    let roots: Vec<usize> = (0..4 * c).map(|i| trace.find(i)).collect();
    let mut adj: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    for x in 0..c {
        let (u, v) = (roots[4 * x], roots[4 * x + 2]);
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut side: std::collections::HashMap<usize, bool> = Default::default();
    let mut vertices: Vec<usize> = adj.keys().copied().collect();
    vertices.sort_unstable();
    for start in vertices {
        if side.contains_key(&start) {
            continue;
        }
        side.insert(start, false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let su = side[&u];
            for &v in &adj[&u] {
                match side.get(&v) {
                    None => {
                        side.insert(v, !su);
                        stack.push(v);
                    }
                    Some(&sv) if sv == su => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

pub fn surface_summary(d: &Diagram, state: &KauffmanState) -> Result<SurfaceSummary, DiagramError> {
    let orientable = is_orientable(d, state)?;
    let circles = state_circles(d, state);
    let chi = circles as i64 - d.crossing_count() as i64;
    let k = d.components();
    Ok(SurfaceSummary { circles, chi, orientable, k, crosscap_of_surface: 2 - chi - k as i64 })
}

/// Neither the all-A nor the all-B state has a band with both ends on the
/// same circle.
pub fn is_adequate(d: &Diagram) -> bool {
    is_state_adequate(d, Smoothing::A) && is_state_adequate(d, Smoothing::B)
}

pub fn is_state_adequate(d: &Diagram, which: Smoothing) -> bool {
    let c = d.crossing_count();
    let mut trace = CircleTrace::new(d, &vec![which; c]);
    (0..c).all(|x| !trace.self_touching(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;

    fn all_states(d: &Diagram) -> impl Iterator<Item = KauffmanState> + '_ {
        let c = d.crossing_count();
        (0..1u64 << c).map(move |m| KauffmanState::from_mask(c, m))
    }

    #[test]
    fn trefoil_circles() {
        let t = Diagram::parse_pd(TREFOIL).unwrap();
        let max = all_states(&t).map(|s| state_circles(&t, &s)).max().unwrap();
        assert_eq!(max, 3);
        let seifert = seifert_states(&t);
        assert_eq!(seifert.len(), 1);
        assert_eq!(state_circles(&t, &seifert[0]), 2);
        let best = all_states(&t).find(|s| state_circles(&t, s) == 3).unwrap();
        assert_eq!(is_orientable(&t, &best), Ok(false));
        let sum = surface_summary(&t, &best).unwrap();
        assert_eq!((sum.circles, sum.chi, sum.orientable, sum.k, sum.crosscap_of_surface), (3, 0, false, 1, 1));
    }

    #[test]
    fn figure_eight_seifert_surface() {
        let f = Diagram::parse_pd(FIGURE_EIGHT).unwrap();
        let s = &seifert_states(&f)[0];
        let sum = surface_summary(&f, s).unwrap();
        assert_eq!((sum.circles, sum.chi, sum.orientable), (3, -1, true));
        assert_eq!(sum.crosscap_of_surface, 2);
    }

    #[test]
    fn kink_states() {
        let k = Diagram::parse_pd(KINK).unwrap();
        let seifert = seifert_states(&k);
        assert_eq!(seifert.len(), 1);
        assert_eq!(state_circles(&k, &seifert[0]), 2);
        let other = KauffmanState(vec![seifert[0].0[0].flip()]);
        assert_eq!(state_circles(&k, &other), 1);
        assert_eq!(is_orientable(&k, &other), Ok(false));
        assert!(!is_adequate(&k));
    }

    #[test]
    fn hopf_has_two_seifert_states() {
        let h = Diagram::parse_pd(HOPF).unwrap();
        assert_eq!(seifert_states(&h).len(), 2);
    }

    #[test]
    fn disconnected_rejected() {
        let d = Diagram::parse_pd("U(1) X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let s = KauffmanState::uniform(3, Smoothing::A);
        assert_eq!(is_orientable(&d, &s), Err(DiagramError::Disconnected));
    }

    #[test]
    fn orientability_agrees_with_bipartite_oracle() {
        for code in [TREFOIL, FIGURE_EIGHT, EIGHT_18, EIGHT_19, HOPF, GRANNY, KINK] {
            let d = Diagram::parse_pd(code).unwrap();
            let c = d.crossing_count() as i64;
            let mut orientable = 0;
            for s in all_states(&d) {
                let o = is_orientable(&d, &s).unwrap();
                assert_eq!(o, state_graph_bipartite(&d, &s), "{code} {}", s.letters());
                let sum = surface_summary(&d, &s).unwrap();
                assert_eq!(sum.chi, sum.circles as i64 - c);
                assert!(sum.circles >= 1 && sum.circles as i64 <= c + 1);
                if o {
                    orientable += 1;
                    assert_eq!(sum.crosscap_of_surface.rem_euclid(2), 0);
                    assert!(sum.crosscap_of_surface >= 0);
                }
            }
            assert_eq!(orientable, seifert_states(&d).len(), "{code}");
        }
    }

    #[test]
    fn adequacy() {
        for code in [TREFOIL, FIGURE_EIGHT, EIGHT_18, HOPF] {
            assert!(is_adequate(&Diagram::parse_pd(code).unwrap()), "{code}");
        }
        assert!(!is_adequate(&Diagram::parse_pd(EIGHT_19).unwrap()));
    }
}
