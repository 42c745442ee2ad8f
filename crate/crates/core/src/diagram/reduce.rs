use super::{ArcId, CrossingId, Diagram};

impl Diagram {
    /// Removes Reidemeister I kinks and Reidemeister II bigons until neither
    /// applies. Each move deletes crossings, so this terminates.
    pub fn reduce(&self) -> Diagram {
        let mut d = self.clone();
        loop {
            if let Some(next) = d.try_r1().or_else(|| d.try_r2()) {
                d = next;
            } else {
                return d;
            }
        }
    }

    /// A label occupying two cyclically adjacent slots of one crossing.
    fn try_r1(&self) -> Option<Diagram> {
        for (i, x) in self.crossings.iter().enumerate() {
            for p in 0..4 {
                let e = x.arcs[p];
                if e == x.arcs[(p + 1) % 4] {
                    let u = x.arcs[(p + 2) % 4];
                    let v = x.arcs[(p + 3) % 4];
                    return Some(self.remove_and_fuse(&[i], &[(u, e), (e, v)]));
                }
            }
        }
        None
    }

    /// Two crossings joined by arcs `e`, `f` that bound a bigon face, with `e`
    /// over at both ends and `f` under at both.
    fn try_r2(&self) -> Option<Diagram> {
        let ends = self.arc_ends();
        let slots_of = |arc: ArcId| {
            let e = ends[&arc];
            [e.tail, e.head]
        };
        let distinct = |x: CrossingId| {
            let a = self.crossings[x].arcs;
            (0..4).all(|i| (i + 1..4).all(|j| a[i] != a[j]))
        };
        for (xi, x) in self.crossings.iter().enumerate() {
            if !distinct(xi) {
                continue;
            }
            for p in 0..4 {
                let (e, f) = (x.arcs[p], x.arcs[(p + 1) % 4]);
                // other endpoint of e and of f
                let other = |arc: ArcId, here: (CrossingId, usize)| {
                    let s = slots_of(arc);
                    if s[0] == here {
                        s[1]
                    } else {
                        s[0]
                    }
                };
                let (ye, qe) = other(e, (xi, p));
                let (yf, qf) = other(f, (xi, (p + 1) % 4));
                if ye != yf || ye == xi || !distinct(ye) {
                    continue;
                }
                // bigon face: at Y, e follows f counterclockwise
                if qe != (qf + 1) % 4 {
                    continue;
                }
                // e over at both ends (odd slots) or under at both (even slots)
                if p % 2 != qe % 2 {
                    continue;
                }
                let y = &self.crossings[ye];
                let ((over, po, qo), (under, pu, qu)) = if p % 2 == 1 {
                    ((e, p, qe), (f, (p + 1) % 4, qf))
                } else {
                    ((f, (p + 1) % 4, qf), (e, p, qe))
                };
                let u1 = x.arcs[(po + 2) % 4];
                let u2 = y.arcs[(qo + 2) % 4];
                let v1 = x.arcs[(pu + 2) % 4];
                let v2 = y.arcs[(qu + 2) % 4];
                return Some(self.remove_and_fuse(
                    &[xi, ye],
                    &[(u1, over), (over, u2), (v1, under), (under, v2)],
                ));
            }
        }
        None
    }
}
