//! Kauffman bracket and Jones polynomial.
//!
//! Conventions: `<unknot> = 1`, `<X> = A<A-smoothing> + A^-1<B-smoothing>`,
//! and a disjoint circle multiplies by `delta = -A^2 - A^-2`. The Jones
//! polynomial is `(-A)^(-3w) <D>` with `t = A^-4`.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{Diagram, DiagramError, Orientation, Smoothing};
use crate::laurent::{LaurentPoly, Var};
use crate::surfaces::{is_state_adequate, CircleTrace, KauffmanState};

pub const DEFAULT_CROSSING_CAP: usize = 20;
/// Largest diagram the exhaustive state sum accepts.
pub const STATE_SUM_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JonesError {
    #[error("diagram has {crossings} crossings, cap is {cap}")]
    TooLarge { crossings: usize, cap: usize },
    #[error("the all-{0:?} state is not adequate")]
    NotAdequate(Smoothing),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JonesData {
    #[serde(serialize_with = "as_text")]
    pub bracket_a: LaurentPoly,
    #[serde(serialize_with = "as_text")]
    pub jones_a: LaurentPoly,
    #[serde(serialize_with = "opt_as_text")]
    pub jones_t: Option<LaurentPoly>,
    pub t_k: u64,
    /// Span in `t`. The A-span of a Jones polynomial is always a multiple
    /// of 4, so this is an integer even for links.
    pub span_t: u64,
    pub writhe: i32,
}

fn as_text<S: serde::Serializer>(p: &LaurentPoly, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

fn opt_as_text<S: serde::Serializer>(p: &Option<LaurentPoly>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.collect_str(p),
        None => s.serialize_none(),
    }
}

pub fn bracket(d: &Diagram) -> Result<LaurentPoly, JonesError> {
    bracket_with_cap(d, DEFAULT_CROSSING_CAP)
}

/// Frontier evaluation of the state sum.
///
/// Crossings are added one at a time. The partial states are grouped by
/// how the open arc ends are joined up, and circles are counted as they
/// close, so each group only needs its polynomial.
pub fn bracket_with_cap(d: &Diagram, cap: usize) -> Result<LaurentPoly, JonesError> {
    let c = d.crossing_count();
    if c > cap {
        return Err(JonesError::TooLarge { crossings: c, cap });
    }
    let delta = LaurentPoly::loop_value();
    let extra = delta.pow(d.unknot_components() as u32);
    if c == 0 {
        return Ok(delta.pow(d.unknot_components() as u32 - 1));
    }
    let slots = d.slots();
    // key: sorted open pairs + whether a circle has closed yet
    type Key = (Vec<(u32, u32)>, bool);
    let mut layer: HashMap<Key, LaurentPoly> = HashMap::new();
    layer.insert((Vec::new(), false), LaurentPoly::one(Var::A));
    for x in frontier_order(&slots) {
        let quad = slots[x];
        let mut next: HashMap<Key, LaurentPoly> = HashMap::with_capacity(layer.len() * 2);
        for ((pairs, closed), poly) in &layer {
            for (choice, exp) in [(Smoothing::A, 1), (Smoothing::B, -1)] {
                let mut open: HashMap<u32, u32> = HashMap::with_capacity(pairs.len() * 2 + 4);
                for &(a, b) in pairs {
                    open.insert(a, b);
                    open.insert(b, a);
                }
                let mut loops = 0u32;
                for s in [0, 2] {
                    let (p, q) = (quad[s], quad[choice.partner_slot(s)]);
                    if join(&mut open, p, q) {
                        loops += 1;
                    }
                }
                let mut key: Vec<(u32, u32)> =
                    open.iter().filter(|(a, b)| a < b).map(|(&a, &b)| (a, b)).collect();
                key.sort_unstable();
                let factor_loops = if *closed { loops } else { loops.saturating_sub(1) };
                let mut term = poly.scalar_shift(1, exp);
                if factor_loops > 0 {
                    term = &term * &delta.pow(factor_loops);
                }
                next.entry((key, *closed || loops > 0))
                    .and_modify(|p| p.add_assign_ref(&term))
                    .or_insert(term);
            }
        }
        layer = next;
    }
    let mut out = LaurentPoly::zero(Var::A);
    for ((pairs, closed), poly) in layer {
        debug_assert!(pairs.is_empty() && closed);
        out.add_assign_ref(&poly);
    }
    Ok(&out * &extra)
}

/// Joins arc ends `p` and `q`; returns true if that closes a circle.
fn join(open: &mut HashMap<u32, u32>, p: u32, q: u32) -> bool {
    if p == q {
        // both ends of one arc meet at this crossing
        return true;
    }
    if open.get(&p) == Some(&q) {
        open.remove(&p);
        open.remove(&q);
        return true;
    }
    let ep = open.remove(&p).unwrap_or(p);
    if ep != p {
        open.remove(&ep);
    }
    let eq = open.remove(&q).unwrap_or(q);
    if eq != q {
        open.remove(&eq);
    }
    open.insert(ep, eq);
    open.insert(eq, ep);
    false
}

/// Greedy order keeping the set of half-used arcs small.
fn frontier_order(slots: &[[u32; 4]]) -> Vec<usize> {
    let c = slots.len();
    let mut used = vec![false; c];
    let mut seen: HashSet<u32> = HashSet::new();
    let mut order = Vec::with_capacity(c);
    for _ in 0..c {
        let best = (0..c)
            .filter(|&x| !used[x])
            .max_by_key(|&x| {
                let hits = slots[x].iter().filter(|l| seen.contains(l)).count();
                (hits, std::cmp::Reverse(x))
            })
            .unwrap();
        used[best] = true;
        seen.extend(slots[best]);
        order.push(best);
    }
    order
}

/// Exhaustive sum over all `2^c` states; the reference implementation.
pub fn bracket_state_sum(d: &Diagram) -> Result<LaurentPoly, JonesError> {
    let c = d.crossing_count();
    if c > STATE_SUM_CAP {
        return Err(JonesError::TooLarge { crossings: c, cap: STATE_SUM_CAP });
    }
    let mut tally: HashMap<(i64, usize), i64> = HashMap::new();
    for mask in 0..1u64 << c {
        let state = KauffmanState::from_mask(c, mask);
        let circles = CircleTrace::new(d, &state.0).circles;
        let b = mask.count_ones() as i64;
        *tally.entry((c as i64 - 2 * b, circles)).or_default() += 1;
    }
    let delta = LaurentPoly::loop_value();
    let mut out = LaurentPoly::zero(Var::A);
    let mut keys: Vec<_> = tally.keys().copied().collect();
    keys.sort_unstable();
    for (exp, circles) in keys {
        let n = tally[&(exp, circles)];
        out.add_assign_ref(&delta.pow(circles as u32 - 1).scalar_shift(n, exp));
    }
    Ok(out)
}

pub fn jones(d: &Diagram, orientation: &Orientation) -> Result<JonesData, JonesError> {
    jones_with_cap(d, orientation, DEFAULT_CROSSING_CAP)
}

pub fn jones_with_cap(
    d: &Diagram,
    orientation: &Orientation,
    cap: usize,
) -> Result<JonesData, JonesError> {
    let bracket_a = bracket_with_cap(d, cap)?;
    let writhe = d.writhe(orientation)?;
    jones_from_bracket(bracket_a, writhe)
}

pub(crate) fn jones_from_bracket(bracket_a: LaurentPoly, writhe: i32) -> Result<JonesData, JonesError> {
    let w = writhe as i64;
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let jones_a = bracket_a.scalar_shift(sign, -3 * w);
    let jones_t = jones_a.terms().all(|(e, _)| e % 4 == 0).then(|| {
        LaurentPoly::from_terms(Var::T, jones_a.terms().map(|(e, c)| (-e / 4, c.clone())))
    });
    let span_t = jones_a.span().map(|s| s / 4).unwrap_or(0);
    let mut data = JonesData { bracket_a, jones_a, jones_t, t_k: 0, span_t, writhe };
    data.t_k = t_k(&data);
    Ok(data)
}

/// `|second coefficient| + |penultimate coefficient|`, read on the A-lattice
/// of step 4. Zero when there are fewer than two lattice points.
pub fn t_k(j: &JonesData) -> u64 {
    t_k_of(&j.jones_a)
}

pub fn t_k_of(jones_a: &LaurentPoly) -> u64 {
    let (Some(hi), Some(lo)) = (jones_a.max_degree(), jones_a.min_degree()) else {
        return 0;
    };
    if hi - lo < 4 {
        return 0;
    }
    let abs = |c: BigInt| -> u64 { c.abs().try_into().expect("coefficient fits in u64") };
    abs(jones_a.coefficient_at(hi - 4)) + abs(jones_a.coefficient_at(lo + 4))
}

/// First Betti number of the reduced state graph of the all-A or all-B
/// state: circles as vertices, one edge per crossing, parallel edges merged.
pub fn beta_from_state_graph(d: &Diagram, which: Smoothing) -> Result<u64, JonesError> {
    if !is_state_adequate(d, which) {
        return Err(JonesError::NotAdequate(which));
    }
    let c = d.crossing_count();
    let mut trace = CircleTrace::new(d, &vec![which; c]);
    let mut edges: Vec<(usize, usize)> = (0..c)
        .map(|x| {
            let (u, v) = (trace.find(4 * x), trace.find(4 * x + 2));
            (u.min(v), u.max(v))
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let vertices = trace.circles - d.unknot_components();
    let components = d.map_components().len();
    Ok((edges.len() + components - vertices) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::*;
    use crate::diagram::KinkSign;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn jones_of(code: &str) -> JonesData {
        let d = Diagram::parse_pd(code).unwrap();
        jones(&d, &Orientation::default_for(&d)).unwrap()
    }

    #[test]
    fn unknot() {
        let u = Diagram::unlink(1).unwrap();
        assert_eq!(bracket(&u).unwrap(), LaurentPoly::one(Var::A));
        let j = jones(&u, &Orientation::default_for(&u)).unwrap();
        assert_eq!(j.jones_t, Some(LaurentPoly::one(Var::T)));
        assert_eq!((j.t_k, j.span_t), (0, 0));
        let two = Diagram::unlink(2).unwrap();
        assert_eq!(bracket(&two).unwrap(), LaurentPoly::loop_value());
    }

    #[test]
    fn kink_bracket_is_a_monomial() {
        let k = Diagram::parse_pd(KINK).unwrap();
        assert_eq!(bracket(&k).unwrap(), poly("-1*A^-3"));
        let p = Diagram::parse_pd("X(1,1,2,2)").unwrap();
        assert_eq!(bracket(&p).unwrap(), poly("-1*A^3"));
        assert_eq!(bracket_state_sum(&k).unwrap(), poly("-1*A^-3"));
    }

    #[test]
    fn trefoil() {
        let j = jones_of(TREFOIL);
        assert_eq!(j.writhe, -3);
        // negative writhe, so the left-handed trefoil: V = t^-1 + t^-3 - t^-4
        assert_eq!(j.jones_t, Some(poly("1*A^-1 + 1*A^-3 - 1*A^-4").with_var(Var::T)));
        assert_eq!((j.span_t, j.t_k), (3, 1));
        let d = Diagram::parse_pd(TREFOIL).unwrap();
        assert_eq!(bracket(&d).unwrap(), bracket_state_sum(&d).unwrap());
    }

    #[test]
    fn figure_eight() {
        let j = jones_of(FIGURE_EIGHT);
        let t = j.jones_t.clone().unwrap();
        assert_eq!(t, poly("1*A^2 - 1*A^1 + 1*A^0 - 1*A^-1 + 1*A^-2").with_var(Var::T));
        assert_eq!(t.substitute_power(-1), t);
        assert_eq!((j.span_t, j.t_k), (4, 2));
    }

    #[test]
    fn bracket_matches_state_sum() {
        for code in [TREFOIL, FIGURE_EIGHT, EIGHT_18, EIGHT_19, HOPF, GRANNY, KINK] {
            let d = Diagram::parse_pd(code).unwrap();
            assert_eq!(bracket(&d).unwrap(), bracket_state_sum(&d).unwrap(), "{code}");
            let e = d.with_extra_unknots(1);
            assert_eq!(bracket(&e).unwrap(), &bracket(&d).unwrap() * &LaurentPoly::loop_value());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let d = Diagram::parse_pd(EIGHT_18).unwrap();
        assert_eq!(
            bracket_with_cap(&d, 7),
            Err(JonesError::TooLarge { crossings: 8, cap: 7 })
        );
    }

    #[test]
    fn kinks_do_not_change_jones() {
        for code in [TREFOIL, FIGURE_EIGHT, HOPF] {
            let d = Diagram::parse_pd(code).unwrap();
            let base = jones(&d, &Orientation::default_for(&d)).unwrap().jones_a;
            for sign in [KinkSign::Positive, KinkSign::Negative] {
                let k = d.add_kink(1, sign).unwrap();
                assert_eq!(jones(&k, &Orientation::default_for(&k)).unwrap().jones_a, base);
            }
        }
    }

    #[test]
    fn mirror_inverts_a() {
        for code in [TREFOIL, EIGHT_19, GRANNY] {
            let d = Diagram::parse_pd(code).unwrap();
            let o = Orientation::default_for(&d);
            let j = jones(&d, &o).unwrap();
            let m = jones(&d.mirror(), &o).unwrap();
            assert_eq!(m.jones_a, j.jones_a.substitute_power(-1));
            assert_eq!(m.t_k, j.t_k);
        }
    }

    #[test]
    fn hopf_orientations() {
        let h = Diagram::parse_pd(HOPF).unwrap();
        let spans: Vec<(u64, u64)> = Orientation::classes(&h)
            .iter()
            .map(|o| {
                let j = jones(&h, o).unwrap();
                assert!(j.jones_t.is_none());
                (j.span_t, j.t_k)
            })
            .collect();
        // -t^(1/2) - t^(5/2) up to mirror: the middle lattice point is empty
        assert_eq!(spans, vec![(2, 0), (2, 0)]);
    }

    #[test]
    fn betti_numbers_add_up_to_t() {
        for code in [TREFOIL, FIGURE_EIGHT, EIGHT_18] {
            let d = Diagram::parse_pd(code).unwrap();
            let a = beta_from_state_graph(&d, Smoothing::A).unwrap();
            let b = beta_from_state_graph(&d, Smoothing::B).unwrap();
            assert_eq!(a + b, jones_of(code).t_k, "{code}");
        }
        let f = Diagram::parse_pd(FIGURE_EIGHT).unwrap();
        assert_eq!(beta_from_state_graph(&f, Smoothing::A), Ok(1));
        assert_eq!(beta_from_state_graph(&f, Smoothing::B), Ok(1));
        let k = Diagram::parse_pd(KINK).unwrap();
        assert!(matches!(beta_from_state_graph(&k, Smoothing::A), Err(JonesError::NotAdequate(_)))
            || matches!(beta_from_state_graph(&k, Smoothing::B), Err(JonesError::NotAdequate(_))));
    }
}
