use super::{Diagram, DiagramError, KinkSign, Orientation, Smoothing};

impl Diagram {
    /// Replaces crossing `crossing` by the given smoothing.
    ///
    /// Merged arcs take the smallest surviving old label, then labels are
    /// compacted to `1..=2(c-1)` in ascending order of those old labels.
    /// Arcs that close up into a crossing-free circle are counted in
    /// `unknot_components`.
    pub fn smooth(&self, crossing: usize, choice: Smoothing) -> Result<Diagram, DiagramError> {
        let c = self.crossing_count();
        if crossing >= c {
            return Err(DiagramError::NoSuchCrossing(crossing));
        }
        let q = self.crossings[crossing].slots;
        let mut parent: Vec<u32> = (0..=2 * c as u32).collect();
        fn find(p: &mut [u32], mut x: u32) -> u32 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        for s in [0, 2] {
            let t = choice.partner_slot(s);
            let (a, b) = (find(&mut parent, q[s]), find(&mut parent, q[t]));
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
        let rest: Vec<[u32; 4]> = self
            .crossings
            .iter()
            .filter(|x| x.index != crossing)
            .map(|x| x.slots)
            .collect();
        // smallest surviving label of every class that still touches a crossing
        let mut key = vec![u32::MAX; 2 * c + 1];
        for quad in &rest {
            for &l in quad {
                let r = find(&mut parent, l) as usize;
                key[r] = key[r].min(l);
            }
        }
        let mut circles = 0;
        let mut counted = Vec::new();
        for &l in &q {
            let r = find(&mut parent, l);
            if key[r as usize] == u32::MAX && !counted.contains(&r) {
                counted.push(r);
                circles += 1;
            }
        }
        let mut keys: Vec<u32> = key.iter().copied().filter(|&k| k != u32::MAX).collect();
        keys.sort_unstable();
        let rank = |k: u32| keys.binary_search(&k).unwrap() as u32 + 1;
        let slots: Vec<[u32; 4]> = rest
            .iter()
            .map(|quad| quad.map(|l| rank(key[find(&mut parent.clone(), l) as usize])))
            .collect();
        let out = Diagram::from_slots_unchecked(slots, self.unknots + circles)?;
        debug_assert!(out.euler_holds());
        Ok(out)
    }

    /// Adds a Reidemeister-I curl on arc `arc`, changing the writhe by the
    /// sign. On a crossing-free diagram, `arc = 1` names the first circle.
    pub fn add_kink(&self, arc: u32, sign: KinkSign) -> Result<Diagram, DiagramError> {
        let c = self.crossing_count();
        if c == 0 {
            if arc != 1 || self.unknots == 0 {
                return Err(DiagramError::NoSuchArc(arc));
            }
            let quad = match sign {
                KinkSign::Positive => [1, 1, 2, 2],
                KinkSign::Negative => [1, 2, 2, 1],
            };
            return Diagram::new(vec![quad], self.unknots - 1);
        }
        let (_, second) = self.arc_darts(arc).ok_or(DiagramError::NoSuchArc(arc))?;
        let n = 2 * c as u32;
        let (lp, tail) = (n + 1, n + 2);
        let mut slots = self.slots();
        slots[second / 4][second % 4] = tail;
        slots.push(match sign {
            KinkSign::Positive => [tail, arc, lp, lp],
            KinkSign::Negative => [arc, lp, lp, tail],
        });
        Diagram::new(slots, self.unknots)
    }

    /// Swaps over and under at every crossing.
    pub fn mirror(&self) -> Diagram {
        let slots = self.crossings.iter().map(|c| {
            let [a, b, x, y] = c.slots;
            [b, x, y, a]
        });
        Diagram::from_slots_unchecked(slots.collect(), self.unknots)
            .expect("mirroring preserves labels")
    }

    /// The same diagram plus `n` extra crossing-free circles.
    pub fn with_extra_unknots(&self, n: usize) -> Diagram {
        let mut d = self.clone();
        d.unknots += n;
        d
    }

    /// Relabels arcs consecutively along each component (in the default
    /// orientation) and rotates every crossing so that slot 0 is the
    /// incoming understrand.
    pub fn normalized(&self) -> Diagram {
        let c = self.crossing_count();
        let comps = self.link_components();
        let strands = self
            .strands(&Orientation::default_for(self))
            .expect("default orientation matches component count");
        let mut new_label = vec![0u32; 4 * c];
        let mut next = 1;
        for comp in &comps {
            for &d in &comp.entries {
                // the arc arriving at `d`
                new_label[d] = next;
                new_label[self.opposite(d)] = next;
                next += 1;
            }
        }
        let slots = (0..c)
            .map(|x| {
                let q = [0, 1, 2, 3].map(|s| new_label[4 * x + s]);
                if strands[x].under_in == 0 {
                    q
                } else {
                    [q[2], q[3], q[0], q[1]]
                }
            })
            .collect();
        Diagram::from_slots_unchecked(slots, self.unknots).expect("relabelling preserves pairing")
    }
}
