use std::collections::{BTreeMap, HashMap};

use super::{Diagram, DiagramError};

/// A corner of a crossing: the sector swept counterclockwise from slot
/// `after_slot` to slot `after_slot + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub crossing: usize,
    pub after_slot: usize,
}

/// A complementary region of the diagram; an m-gon has m corners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub corners: Vec<Corner>,
    /// Arc labels along the boundary, one per corner.
    pub edges: Vec<u32>,
}

impl Face {
    pub fn size(&self) -> usize {
        self.corners.len()
    }

    /// A bigon whose two corners sit at different crossings.
    pub fn is_proper_bigon(&self) -> bool {
        self.size() == 2 && self.corners[0].crossing != self.corners[1].crossing
    }
}

/// A maximal chain of crossings joined end to end by bigons.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwistRegion {
    /// Crossing indices in chain order.
    pub crossings: Vec<usize>,
}

impl TwistRegion {
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }
}

/// Two-colouring of the faces and the two checkerboard graphs.
///
/// Every crossing is an edge in both graphs: it joins the two faces of one
/// colour meeting at its opposite corners.
#[derive(Debug, Clone)]
pub struct Checkerboard {
    pub face_color: Vec<bool>,
    /// `edges[color][crossing]` = the pair of faces of that colour joined by
    /// the crossing.
    pub edges: [Vec<(usize, usize)>; 2],
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

impl Diagram {
    /// All complementary regions, found by tracing the rotation system.
    pub fn faces(&self) -> Vec<Face> {
        self.face_orbits()
            .into_iter()
            .map(|orbit| Face {
                corners: orbit
                    .iter()
                    .map(|&d| Corner { crossing: d / 4, after_slot: (d + 3) % 4 })
                    .collect(),
                edges: orbit.iter().map(|&d| self.label(d)).collect(),
            })
            .collect()
    }

    /// `face_of[dart]`: index into [`Diagram::faces`] of the face containing
    /// the corner just clockwise of the dart.
    pub(crate) fn face_index_of_darts(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let orbits = self.face_orbits();
        let mut face_of = vec![0; 4 * self.crossing_count()];
        for (i, orbit) in orbits.iter().enumerate() {
            for &d in orbit {
                face_of[d] = i;
            }
        }
        (orbits, face_of)
    }

    /// Twist regions, ordered by their smallest crossing index. A crossing
    /// on no bigon forms a region by itself.
    pub fn twist_regions(&self) -> Vec<TwistRegion> {
        let c = self.crossing_count();
        let mut dsu = Dsu::new(c);
        let mut neighbours: Vec<Vec<usize>> = vec![Vec::new(); c];
        for orbit in self.face_orbits() {
            if orbit.len() == 2 {
                let (x, y) = (orbit[0] / 4, orbit[1] / 4);
                if x != y {
                    dsu.union(x, y);
                    neighbours[x].push(y);
                    neighbours[y].push(x);
                }
            }
        }
        for n in &mut neighbours {
            n.sort_unstable();
            n.dedup();
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..c {
            let root = dsu.find(x);
            groups.entry(root).or_default().push(x);
        }
        groups.into_values().map(|members| order_chain(&members, &neighbours)).collect()
    }

    /// Faces as a checkerboard, or `None` when the map is not 2-colourable
    /// (which cannot happen for a valid planar diagram).
    pub fn checkerboard(&self) -> Option<Checkerboard> {
        let (orbits, face_of) = self.face_index_of_darts();
        let n = orbits.len();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for d in 0..face_of.len() {
            let (f, g) = (face_of[d], face_of[self.opposite(d)]);
            adj[f].push(g);
            adj[g].push(f);
        }
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(f) = stack.pop() {
                let cf = color[f].unwrap();
                for &g in &adj[f] {
                    match color[g] {
                        None => {
                            color[g] = Some(!cf);
                            stack.push(g);
                        }
                        Some(cg) if cg == cf => return None,
                        _ => {}
                    }
                }
            }
        }
        let face_color: Vec<bool> = color.into_iter().map(Option::unwrap).collect();
        let mut edges: [Vec<(usize, usize)>; 2] = [Vec::new(), Vec::new()];
        for x in 0..self.crossing_count() {
            for s in 0..2 {
                let (f, g) = (face_of[4 * x + s], face_of[4 * x + s + 2]);
                edges[face_color[f] as usize].push((f, g));
            }
        }
        // `edges[color]` must be indexed by crossing; each crossing contributed
        // exactly one pair to each colour, in crossing order.
        Some(Checkerboard { face_color, edges })
    }

    /// A crossing is nugatory when one face meets it at two corners.
    pub fn nugatory_crossings(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for orbit in self.face_orbits() {
            let mut xs: Vec<usize> = orbit.iter().map(|d| d / 4).collect();
            xs.sort_unstable();
            for w in xs.windows(2) {
                if w[0] == w[1] {
                    out.push(w[0]);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// No nugatory crossing and no pair of edges whose removal splits the
    /// crossings into two nonempty sets.
    ///
    /// Two edges form such a cut exactly when two distinct faces both have
    /// them on their boundary, so face pairs are enumerated.
    pub fn is_prime_diagram(&self) -> Result<bool, DiagramError> {
        self.require_connected()?;
        if self.crossing_count() == 0 {
            return Ok(true);
        }
        if !self.nugatory_crossings().is_empty() {
            return Ok(false);
        }
        Ok(self.two_edge_cut().is_none())
    }

    /// A pair of arc labels forming a separating 2-edge cut, if any.
    pub fn two_edge_cut(&self) -> Option<(u32, u32)> {
        let (_, face_of) = self.face_index_of_darts();
        let mut shared: HashMap<(usize, usize), Vec<u32>> = HashMap::new();
        for d in 0..face_of.len() {
            let o = self.opposite(d);
            if d > o {
                continue;
            }
            let (f, g) = (face_of[d], face_of[o]);
            if f != g {
                shared.entry((f.min(g), f.max(g))).or_default().push(self.label(d));
            }
        }
        let mut keys: Vec<_> = shared.keys().copied().collect();
        keys.sort_unstable();
        for key in keys {
            let labels = &shared[&key];
            for i in 0..labels.len() {
                for j in i + 1..labels.len() {
                    if self.separates(labels[i], labels[j]) {
                        return Some((labels[i], labels[j]));
                    }
                }
            }
        }
        None
    }

    fn separates(&self, e1: u32, e2: u32) -> bool {
        let c = self.crossing_count();
        let mut seen = vec![false; c];
        seen[0] = true;
        let mut stack = vec![0];
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for s in 0..4 {
                let d = 4 * x + s;
                let l = self.label(d);
                if l == e1 || l == e2 {
                    continue;
                }
                let y = self.opposite(d) / 4;
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        reached < c
    }

    /// True iff, in both checkerboard graphs, any two parallel edges (two
    /// crossings joining the same pair of faces) lie in one twist region.
    ///
    /// A curve meeting the diagram in four edges runs through two crossings
    /// and two faces of one colour, so it exists exactly when those crossings
    /// are parallel in that colour's graph.
    pub fn is_twist_reduced(&self) -> Result<bool, DiagramError> {
        self.require_connected()?;
        if self.crossing_count() == 0 {
            return Ok(true);
        }
        let board = self.checkerboard().ok_or(DiagramError::NonPlanar)?;
        let mut region_of = vec![0; self.crossing_count()];
        for (i, r) in self.twist_regions().iter().enumerate() {
            for &x in &r.crossings {
                region_of[x] = i;
            }
        }
        for graph in &board.edges {
            let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
            for (x, &(u, v)) in graph.iter().enumerate() {
                if u == v {
                    continue;
                }
                let r = *owner.entry((u.min(v), u.max(v))).or_insert(region_of[x]);
                if r != region_of[x] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The smallest face size and every face of that size.
    pub fn min_face(&self) -> Option<(usize, Vec<Face>)> {
        let faces = self.faces();
        let m = faces.iter().map(Face::size).min()?;
        Some((m, faces.into_iter().filter(|f| f.size() == m).collect()))
    }
}

fn order_chain(members: &[usize], neighbours: &[Vec<usize>]) -> TwistRegion {
    if members.len() == 1 {
        return TwistRegion { crossings: members.to_vec() };
    }
    let start = members
        .iter()
        .copied()
        .find(|&x| neighbours[x].len() <= 1)
        .unwrap_or(members[0]);
    let mut order = vec![start];
    let mut visited = vec![start];
    let mut cur = start;
    while let Some(&next) = neighbours[cur].iter().find(|y| !visited.contains(y)) {
        order.push(next);
        visited.push(next);
        cur = next;
    }
    for &x in members {
        if !visited.contains(&x) {
            order.push(x);
        }
    }
    TwistRegion { crossings: order }
}
