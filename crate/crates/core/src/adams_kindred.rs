//! Branching search for maximal-Euler-characteristic state surfaces of
//! alternating diagrams, and the crosscap number read off from it.
//!
//! The search resolves crossings in batches chosen from the smallest faces
//! of the partially smoothed diagram:
//!
//! * a monogon is always cut off as a state circle;
//! * with bigons present, each twist region containing bigons gives one
//!   branch in which all of its bigons become circles;
//! * otherwise each triangle gives two branches, one making it a circle and
//!   one resolving its three crossings the other way.
//!
//! Partial states are memoised exactly (which crossings are resolved and
//! how), so different orders reaching the same partial state are explored
//! once.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{Diagram, Face, Smoothing};
use crate::surfaces::{seifert_states, CircleTrace, KauffmanState};

pub const DEFAULT_NODE_BUDGET: u64 = 5_000_000;
/// States are stored as 64-bit masks.
pub const MAX_CROSSINGS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AkError {
    #[error("diagram is not connected")]
    NotConnected,
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("search exceeded its budget of {0} nodes")]
    SearchBudgetExceeded(u64),
    #[error("diagram has {0} crossings; at most {MAX_CROSSINGS} are supported")]
    TooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { node_budget: DEFAULT_NODE_BUDGET }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
    pub memo_hits: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AkResult {
    pub max_circles: usize,
    pub max_chi: i64,
    pub nonorientable_at_max: bool,
    /// At most one orientable and one non-orientable state reaching
    /// `max_chi`, as `A`/`B` strings.
    pub witness_states: Vec<KauffmanState>,
    pub stats: SearchStats,
    pub k: usize,
    pub crosscap: i64,
    pub genus: Option<i64>,
}

/// Smallest face size and all faces of that size.
pub fn min_mgon(d: &Diagram) -> Option<(usize, Vec<Face>)> {
    d.min_face()
}

pub fn ak_search(d: &Diagram, config: &SearchConfig) -> Result<AkResult, AkError> {
    let c = d.crossing_count();
    if c > MAX_CROSSINGS {
        return Err(AkError::TooLarge(c));
    }
    if !d.is_connected() {
        return Err(AkError::NotConnected);
    }
    if !d.is_alternating() {
        return Err(AkError::NotAlternating);
    }
    let seifert: HashSet<u64> = seifert_states(d).iter().map(mask_of).collect();
    let mut s = Search {
        d,
        c,
        full: if c == 64 { u64::MAX } else { (1u64 << c) - 1 },
        seifert,
        memo: HashSet::new(),
        budget: config.node_budget,
        stats: SearchStats::default(),
        best: 0,
        orientable: None,
        nonorientable: None,
    };
    s.visit(0, 0)?;
    let k = d.components();
    let max_chi = s.best as i64 - c as i64;
    let nonorientable_at_max = s.nonorientable.is_some();
    let mut witness_states = Vec::new();
    witness_states.extend(s.orientable.map(|m| KauffmanState::from_mask(c, m)));
    witness_states.extend(s.nonorientable.map(|m| KauffmanState::from_mask(c, m)));
    let base = 2 - max_chi - k as i64;
    let (crosscap, genus) = if nonorientable_at_max { (base, None) } else { (base + 1, Some(base / 2)) };
    Ok(AkResult {
        max_circles: s.best,
        max_chi,
        nonorientable_at_max,
        witness_states,
        stats: s.stats,
        k,
        crosscap,
        genus,
    })
}

/// The crosscap number of the alternating link drawn by `d`.
pub fn crosscap_alternating(d: &Diagram, config: &SearchConfig) -> Result<AkResult, AkError> {
    ak_search(d, config)
}

/// Maximum Euler characteristic over all `2^c` states and whether a
/// non-orientable state reaches it. Reference for tests.
pub fn exhaustive_max_chi(d: &Diagram) -> (i64, bool) {
    let c = d.crossing_count();
    assert!(c <= 24, "exhaustive search is limited to 24 crossings");
    let seifert: HashSet<u64> = seifert_states(d).iter().map(mask_of).collect();
    let mut best = (0, false);
    for mask in 0..1u64 << c {
        let circles = CircleTrace::new(d, &KauffmanState::from_mask(c, mask).0).circles;
        let non = !seifert.contains(&mask);
        if circles > best.0 {
            best = (circles, non);
        } else if circles == best.0 {
            best.1 |= non;
        }
    }
    (best.0 as i64 - c as i64, best.1)
}

fn mask_of(s: &KauffmanState) -> u64 {
    s.0.iter()
        .enumerate()
        .filter(|(_, &x)| x == Smoothing::B)
        .fold(0, |m, (i, _)| m | 1 << i)
}

struct Search<'a> {
    d: &'a Diagram,
    c: usize,
    full: u64,
    seifert: HashSet<u64>,
    memo: HashSet<(u64, u64)>,
    budget: u64,
    stats: SearchStats,
    best: usize,
    orientable: Option<u64>,
    nonorientable: Option<u64>,
}

type Demand = Vec<(usize, Smoothing)>;

impl Search<'_> {
    fn visit(&mut self, resolved: u64, choice: u64) -> Result<(), AkError> {
        if !self.memo.insert((resolved, choice)) {
            self.stats.memo_hits += 1;
            return Ok(());
        }
        self.stats.nodes += 1;
        if self.stats.nodes > self.budget {
            return Err(AkError::SearchBudgetExceeded(self.budget));
        }
        if resolved == self.full {
            self.leaf(choice);
            return Ok(());
        }
        for demand in self.branches(resolved, choice) {
            for (r, ch) in expand(&demand, resolved, choice) {
                self.visit(r, ch)?;
            }
        }
        Ok(())
    }

    fn leaf(&mut self, choice: u64) {
        self.stats.leaves += 1;
        let circles = CircleTrace::new(self.d, &KauffmanState::from_mask(self.c, choice).0).circles;
        if circles > self.best {
            self.best = circles;
            self.orientable = None;
            self.nonorientable = None;
        }
        if circles == self.best {
            let slot = if self.seifert.contains(&choice) {
                &mut self.orientable
            } else {
                &mut self.nonorientable
            };
            slot.get_or_insert(choice);
        }
    }

    /// Faces of the diagram left after smoothing the resolved crossings, as
    /// dart orbits. Dart `4x + s` stands for the corner before slot `s`.
    fn residual_faces(&self, resolved: u64, choice: u64) -> Vec<Vec<usize>> {
        let d = self.d;
        let ropp = |dart: usize| -> usize {
            let mut o = d.opposite(dart);
            loop {
                let y = o / 4;
                if resolved >> y & 1 == 0 {
                    return o;
                }
                let sm = if choice >> y & 1 == 1 { Smoothing::B } else { Smoothing::A };
                o = d.opposite(4 * y + sm.partner_slot(o % 4));
            }
        };
        let n = 4 * self.c;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || resolved >> (start / 4) & 1 == 1 {
                continue;
            }
            let mut orbit = Vec::new();
            let mut e = start;
            while !seen[e] {
                seen[e] = true;
                orbit.push(e);
                let o = ropp(e);
                e = (o & !3) | ((o + 1) & 3);
            }
            out.push(orbit);
        }
        out
    }

    fn branches(&self, resolved: u64, choice: u64) -> Vec<Demand> {
        let faces = self.residual_faces(resolved, choice);
        let m = faces.iter().map(Vec::len).min().expect("unresolved crossings have faces");
        let cut = |f: &[usize]| -> Demand {
            f.iter().map(|&e| (e / 4, Smoothing::cutting_corner_before(e % 4))).collect()
        };
        let mut out: Vec<Demand> = Vec::new();
        match m {
            1 => {
                let f = faces.iter().find(|f| f.len() == 1).unwrap();
                out.push(cut(f));
            }
            2 => {
                let bigons: Vec<&Vec<usize>> = faces.iter().filter(|f| f.len() == 2).collect();
                for group in bigon_groups(&bigons) {
                    out.push(group.iter().flat_map(|f| cut(f)).collect());
                }
            }
            3 => {
                for f in faces.iter().filter(|f| f.len() == 3) {
                    let demand = cut(f);
                    if consistent(&demand) {
                        let flipped = demand.iter().map(|&(x, s)| (x, s.flip())).collect();
                        out.push(demand);
                        out.push(flipped);
                    }
                }
            }
            _ => {}
        }
        if out.is_empty() {
            // No usable small face; branch on one crossing both ways.
            let x = faces.iter().find(|f| f.len() == m).unwrap()[0] / 4;
            out.push(vec![(x, Smoothing::A)]);
            out.push(vec![(x, Smoothing::B)]);
        }
        let mut seen = HashSet::new();
        out.retain(|d| {
            let mut key = d.clone();
            key.sort_unstable();
            key.dedup();
            seen.insert(key)
        });
        out
    }
}

/// Bigons grouped by shared crossings; each group is a twist region of the
/// residual diagram.
fn bigon_groups<'f>(bigons: &[&'f Vec<usize>]) -> Vec<Vec<&'f Vec<usize>>> {
    let n = bigons.len();
    let mut group = (0..n).collect::<Vec<_>>();
    fn root(g: &mut [usize], mut i: usize) -> usize {
        while g[i] != i {
            g[i] = g[g[i]];
            i = g[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            let share = bigons[i].iter().any(|a| bigons[j].iter().any(|b| a / 4 == b / 4));
            if share {
                let (a, b) = (root(&mut group, i), root(&mut group, j));
                group[a.max(b)] = a.min(b);
            }
        }
    }
    let mut out: Vec<Vec<&Vec<usize>>> = Vec::new();
    let mut index_of = vec![usize::MAX; n];
    for (i, &bigon) in bigons.iter().enumerate() {
        let r = root(&mut group, i);
        if index_of[r] == usize::MAX {
            index_of[r] = out.len();
            out.push(Vec::new());
        }
        out[index_of[r]].push(bigon);
    }
    out
}

fn consistent(demand: &Demand) -> bool {
    demand.iter().all(|&(x, s)| demand.iter().all(|&(y, t)| x != y || s == t))
}

/// Applies a demand. A crossing asked for both smoothings is left free and
/// both options become separate children.
fn expand(demand: &Demand, resolved: u64, choice: u64) -> Vec<(u64, u64)> {
    let mut fixed: Vec<(usize, Smoothing)> = Vec::new();
    let mut free: Vec<usize> = Vec::new();
    for &(x, s) in demand {
        if free.contains(&x) {
            continue;
        }
        match fixed.iter().position(|&(y, _)| y == x) {
            Some(i) if fixed[i].1 != s => {
                fixed.remove(i);
                free.push(x);
            }
            Some(_) => {}
            None => fixed.push((x, s)),
        }
    }
    let mut r = resolved;
    let mut ch = choice;
    for (x, s) in fixed {
        r |= 1 << x;
        if s == Smoothing::B {
            ch |= 1 << x;
        }
    }
    let mut out = vec![(r, ch)];
    for x in free {
        out = out
            .into_iter()
            .flat_map(|(r, ch)| [(r | 1 << x, ch), (r | 1 << x, ch | 1 << x)])
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;

    fn run(code: &str) -> AkResult {
        ak_search(&Diagram::parse_pd(code).unwrap(), &SearchConfig::default()).unwrap()
    }

    #[test]
    fn figure_eight() {
        let r = run(FIGURE_EIGHT);
        assert_eq!((r.max_chi, r.nonorientable_at_max, r.crosscap), (-1, true, 2));
        // both kinds of surface reach the maximum
        assert_eq!(r.witness_states.len(), 2);
    }

    #[test]
    fn trefoil() {
        let r = run(TREFOIL);
        assert_eq!((r.max_chi, r.nonorientable_at_max, r.crosscap, r.genus), (0, true, 1, None));
    }

    #[test]
    fn kink_and_unknot() {
        let r = run(KINK);
        assert_eq!((r.max_chi, r.crosscap), (1, 1));
        assert_eq!(r.genus, Some(0));
        let u = ak_search(&Diagram::unlink(1).unwrap(), &SearchConfig::default()).unwrap();
        assert_eq!((u.max_chi, u.crosscap, u.genus), (1, 1, Some(0)));
    }

    #[test]
    fn hopf_link() {
        let r = run(HOPF);
        assert_eq!(r.k, 2);
        assert_eq!(r.max_chi, 0);
    }

    #[test]
    fn matches_exhaustive_search() {
        for code in [TREFOIL, FIGURE_EIGHT, EIGHT_18, HOPF, GRANNY, KINK] {
            let d = Diagram::parse_pd(code).unwrap();
            let r = ak_search(&d, &SearchConfig::default()).unwrap();
            assert_eq!((r.max_chi, r.nonorientable_at_max), exhaustive_max_chi(&d), "{code}");
        }
    }

    #[test]
    fn witnesses_reach_the_maximum() {
        let d = Diagram::parse_pd(EIGHT_18).unwrap();
        let r = ak_search(&d, &SearchConfig::default()).unwrap();
        for w in &r.witness_states {
            assert_eq!(CircleTrace::new(&d, &w.0).circles as i64 - 8, r.max_chi);
        }
    }

    #[test]
    fn errors() {
        let cfg = SearchConfig::default();
        assert_eq!(ak_search(&Diagram::parse_pd(EIGHT_19).unwrap(), &cfg), Err(AkError::NotAlternating));
        let split = Diagram::parse_pd(TREFOIL).unwrap().with_extra_unknots(1);
        assert_eq!(ak_search(&split, &cfg), Err(AkError::NotConnected));
        let tight = SearchConfig { node_budget: 2 };
        assert_eq!(
            ak_search(&Diagram::parse_pd(EIGHT_18).unwrap(), &tight),
            Err(AkError::SearchBudgetExceeded(2))
        );
    }

    #[test]
    fn deterministic() {
        assert_eq!(run(EIGHT_18), run(EIGHT_18));
    }

    #[test]
    fn min_mgon_examples() {
        assert_eq!(min_mgon(&Diagram::parse_pd(KINK).unwrap()).unwrap().0, 1);
        let (m, inst) = min_mgon(&Diagram::parse_pd(FIGURE_EIGHT).unwrap()).unwrap();
        assert_eq!((m, inst.len()), (2, 2));
        assert_eq!(min_mgon(&Diagram::parse_pd(EIGHT_18).unwrap()).unwrap().0, 3);
    }
}
