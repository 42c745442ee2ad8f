use std::collections::{BTreeMap, BTreeSet};

use super::{hopf_link, ArcId, Crossing, CrossingId, Diagram, DiagramError};

impl Diagram {
    /// Exchanges over and under at `x`. Labels are kept; the sign flips.
    pub fn switch_crossing(&self, x: CrossingId) -> Result<Diagram, DiagramError> {
        let c = *self.crossing(x)?;
        let mut crossings = self.crossings.clone();
        crossings[x] = c.switched();
        Ok(Diagram::from_parts(crossings, self.free_loops))
    }

    /// Oriented resolution at `x`: the incoming under arc joins the outgoing
    /// over arc and the incoming over arc joins the outgoing under arc.
    /// Each fused run keeps its minimal label.
    pub fn smooth_crossing(&self, x: CrossingId) -> Result<Diagram, DiagramError> {
        let c = *self.crossing(x)?;
        Ok(self.remove_and_fuse(&[x], &[(c.a(), c.over_out()), (c.over_in(), c.c())]))
    }

    /// Every crossing switched.
    pub fn mirror(&self) -> Diagram {
        Diagram::from_parts(
            self.crossings.iter().map(Crossing::switched).collect(),
            self.free_loops,
        )
    }

    /// Side-by-side union; `other`'s labels are shifted past ours.
    pub fn disjoint_union(&self, other: &Diagram) -> Diagram {
        let offset = self.max_arc();
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| x.relabeled(|a| a + offset)));
        Diagram::from_parts(crossings, self.free_loops + other.free_loops)
    }

    /// Connected sum of two knot diagrams, spliced at `arc1` of `self` and
    /// `arc2` of `other`. A crossingless unknot is the identity.
    pub fn connected_sum(
        &self,
        arc1: ArcId,
        other: &Diagram,
        arc2: ArcId,
    ) -> Result<Diagram, DiagramError> {
        for d in [self, other] {
            let n = d.component_count();
            if n != 1 {
                return Err(DiagramError::NotAKnot(n));
            }
        }
        if self.crossings.is_empty() {
            return Ok(other.clone());
        }
        if other.crossings.is_empty() {
            return Ok(self.clone());
        }
        self.splice(arc1, other, arc2)
    }

    /// Adds an unknotted circle clasping `arc` with linking number +1.
    pub fn meridian_link(&self, arc: ArcId) -> Result<Diagram, DiagramError> {
        let n = self.component_count();
        if n != 1 {
            return Err(DiagramError::NotAKnot(n));
        }
        let hopf = hopf_link();
        if self.crossings.is_empty() {
            return Ok(hopf);
        }
        // arc 1 of the Hopf template lies on its first component
        self.splice(arc, &hopf, 1)
    }

    /// Cuts `arc1` here and `arc2` in `other`, reconnecting tail-to-head
    /// across the two diagrams.
    pub(crate) fn splice(
        &self,
        arc1: ArcId,
        other: &Diagram,
        arc2: ArcId,
    ) -> Result<Diagram, DiagramError> {
        let ends1 = self.arc_ends();
        let e1 = *ends1.get(&arc1).ok_or(DiagramError::NoSuchArc(arc1))?;
        let ends2 = other.arc_ends();
        let e2 = *ends2.get(&arc2).ok_or(DiagramError::NoSuchArc(arc2))?;

        let offset = self.max_arc();
        let arc2 = arc2 + offset;
        let base = self.crossings.len();
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| x.relabeled(|a| a + offset)));
        // arc1 now runs from its old tail into other's head of arc2,
        // and arc2 runs from its old tail into our head of arc1
        let (hx, hs) = e2.head;
        crossings[base + hx].arcs[hs] = arc1;
        let (hx, hs) = e1.head;
        crossings[hx].arcs[hs] = arc2;
        Ok(Diagram::from_parts(
            crossings,
            self.free_loops + other.free_loops,
        ))
    }

    /// Deletes `removed` crossings, unions the label pairs in `joins` and
    /// relabels every fused run by its minimum. Runs left without any
    /// crossing become free loops.
    pub(crate) fn remove_and_fuse(
        &self,
        removed: &[CrossingId],
        joins: &[(ArcId, ArcId)],
    ) -> Diagram {
        let mut parent: BTreeMap<ArcId, ArcId> = BTreeMap::new();
        fn find(p: &mut BTreeMap<ArcId, ArcId>, a: ArcId) -> ArcId {
            let mut r = a;
            while let Some(&q) = p.get(&r) {
                if q == r {
                    break;
                }
                r = q;
            }
            p.insert(a, r);
            r
        }
        for &(u, v) in joins {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            // root is always the class minimum
            let (lo, hi) = if ru < rv { (ru, rv) } else { (rv, ru) };
            parent.insert(hi, lo);
            parent.insert(lo, lo);
        }
        let removed: BTreeSet<CrossingId> = removed.iter().copied().collect();
        let touched: BTreeSet<ArcId> = removed
            .iter()
            .flat_map(|&i| self.crossings[i].arcs)
            .map(|a| find(&mut parent, a))
            .collect();

        let crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(i))
            .map(|(_, x)| {
                let mut y = *x;
                for a in y.arcs.iter_mut() {
                    *a = find(&mut parent, *a);
                }
                y
            })
            .collect();
        let surviving: BTreeSet<ArcId> = crossings.iter().flat_map(|x| x.arcs).collect();
        let new_loops = touched.iter().filter(|r| !surviving.contains(r)).count();
        Diagram::from_parts(crossings, self.free_loops + new_loops)
    }
}
