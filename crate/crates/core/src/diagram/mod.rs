//! Oriented link diagrams in planar-diagram (PD) form.
//!
//! Each crossing lists its four incident arcs counterclockwise, starting at
//! the incoming understrand. Arcs are edges of the underlying 4-valent graph
//! and every label occurs exactly twice. Because a PD code cannot record a
//! crossingless circle, a [`Diagram`] also carries a count of free loops.

mod canonical;
mod generate;
mod moves;
mod parse;
mod reduce;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use generate::{braid_closure, hopf_link, random_braid_diagram, random_knot, torus2_diagram};
pub use parse::parse_pd;

/// Arc label. Labels are positive integers.
pub type ArcId = u32;

/// Index of a crossing within [`Diagram::crossings`].
pub type CrossingId = usize;

/// Index into [`Diagram::components`].
pub type ComponentId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("PD syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("arc {arc} occurs {count} times (expected 2)")]
    ArcMultiplicity { arc: ArcId, count: usize },
    #[error("arc label 0 is not allowed")]
    ZeroLabel,
    #[error("arc succession is not a bijection at arc {arc}")]
    Succession { arc: ArcId },
    #[error("over-strand orientation is ambiguous at arc {arc}")]
    AmbiguousOrientation { arc: ArcId },
    #[error("no crossing {0}")]
    NoSuchCrossing(CrossingId),
    #[error("no arc {0}")]
    NoSuchArc(ArcId),
    #[error("no component {0}")]
    NoSuchComponent(ComponentId),
    #[error("linking number needs two distinct components")]
    SameComponent,
    #[error("expected a knot diagram (1 component), found {0} components")]
    NotAKnot(usize),
    #[error("torus2_diagram needs m >= 1")]
    ZeroTwists,
    #[error("relabeling is not injective")]
    NonInjectiveRelabel,
}

/// Sign of a crossing: +1 when the incoming overstrand sits at slot `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossingSign {
    Positive,
    Negative,
}

impl CrossingSign {
    pub fn value(self) -> i64 {
        match self {
            CrossingSign::Positive => 1,
            CrossingSign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            CrossingSign::Positive => CrossingSign::Negative,
            CrossingSign::Negative => CrossingSign::Positive,
        }
    }
}

impl fmt::Display for CrossingSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrossingSign::Positive => "+",
            CrossingSign::Negative => "-",
        })
    }
}

/// One crossing `X(a, b, c, d)`: `a` enters on the understrand, `c` leaves on
/// it, and exactly one of `b`, `d` is the incoming overstrand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    arcs: [ArcId; 4],
    /// Slot (1 or 3) of the incoming over arc.
    over_in: u8,
}

impl Crossing {
    /// Builds a crossing whose incoming overstrand is at slot `d` (sign +1)
    /// or slot `b` (sign −1).
    pub fn new(arcs: [ArcId; 4], sign: CrossingSign) -> Self {
        let over_in = match sign {
            CrossingSign::Positive => 3,
            CrossingSign::Negative => 1,
        };
        Crossing { arcs, over_in }
    }

    pub fn arcs(&self) -> [ArcId; 4] {
        self.arcs
    }

    pub fn a(&self) -> ArcId {
        self.arcs[0]
    }

    pub fn b(&self) -> ArcId {
        self.arcs[1]
    }

    pub fn c(&self) -> ArcId {
        self.arcs[2]
    }

    pub fn d(&self) -> ArcId {
        self.arcs[3]
    }

    pub fn sign(&self) -> CrossingSign {
        if self.over_in == 3 {
            CrossingSign::Positive
        } else {
            CrossingSign::Negative
        }
    }

    pub fn over_in(&self) -> ArcId {
        self.arcs[self.over_in as usize]
    }

    pub fn over_out(&self) -> ArcId {
        self.arcs[(self.over_in as usize + 2) % 4]
    }

    /// True if an arc ending at `slot` enters this crossing there.
    fn is_head_slot(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in as usize
    }

    /// Same strands with over and under exchanged.
    pub fn switched(&self) -> Crossing {
        let [a, b, c, d] = self.arcs;
        if self.over_in == 3 {
            Crossing {
                arcs: [d, a, b, c],
                over_in: 1,
            }
        } else {
            Crossing {
                arcs: [b, c, d, a],
                over_in: 3,
            }
        }
    }

    fn relabeled(&self, f: impl Fn(ArcId) -> ArcId) -> Crossing {
        Crossing {
            arcs: self.arcs.map(f),
            over_in: self.over_in,
        }
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.arcs;
        write!(f, "X({a},{b},{c},{d})")
    }
}

/// Where an arc starts (`tail`) and ends (`head`), as (crossing, slot).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct ArcEnds {
    pub tail: (CrossingId, usize),
    pub head: (CrossingId, usize),
}

/// One link component: its arcs in traversal order. Free loops have no arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub arcs: Vec<ArcId>,
}

impl Component {
    pub fn is_free_loop(&self) -> bool {
        self.arcs.is_empty()
    }
}

/// An oriented link diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

impl Diagram {
    /// Validates and builds a diagram from oriented crossings.
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, DiagramError> {
        let d = Diagram {
            crossings,
            free_loops,
        };
        d.validate()?;
        Ok(d)
    }

    /// Diagram without validation, for moves that preserve validity.
    pub(crate) fn from_parts(crossings: Vec<Crossing>, free_loops: usize) -> Self {
        let d = Diagram {
            crossings,
            free_loops,
        };
        debug_assert!(d.validate().is_ok(), "invalid diagram produced: {d}");
        d
    }

    /// `n` crossingless circles.
    pub fn unlink(n: usize) -> Self {
        Diagram {
            crossings: Vec::new(),
            free_loops: n,
        }
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let mut seen: BTreeMap<ArcId, (usize, usize)> = BTreeMap::new();
        for x in &self.crossings {
            for (slot, &arc) in x.arcs.iter().enumerate() {
                if arc == 0 {
                    return Err(DiagramError::ZeroLabel);
                }
                let e = seen.entry(arc).or_insert((0, 0));
                if x.is_head_slot(slot) {
                    e.0 += 1;
                } else {
                    e.1 += 1;
                }
            }
        }
        for (&arc, &(heads, tails)) in &seen {
            if heads + tails != 2 {
                return Err(DiagramError::ArcMultiplicity {
                    arc,
                    count: heads + tails,
                });
            }
            if heads != 1 {
                return Err(DiagramError::Succession { arc });
            }
        }
        Ok(())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, x: CrossingId) -> Result<&Crossing, DiagramError> {
        self.crossings.get(x).ok_or(DiagramError::NoSuchCrossing(x))
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// All arc labels in ascending order.
    pub fn arcs(&self) -> Vec<ArcId> {
        let mut v: Vec<ArcId> = self.crossings.iter().flat_map(|x| x.arcs).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn max_arc(&self) -> ArcId {
        self.crossings
            .iter()
            .flat_map(|x| x.arcs)
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn arc_ends(&self) -> BTreeMap<ArcId, ArcEnds> {
        let mut heads = BTreeMap::new();
        let mut tails = BTreeMap::new();
        for (i, x) in self.crossings.iter().enumerate() {
            for (slot, &arc) in x.arcs.iter().enumerate() {
                if x.is_head_slot(slot) {
                    heads.insert(arc, (i, slot));
                } else {
                    tails.insert(arc, (i, slot));
                }
            }
        }
        heads
            .into_iter()
            .map(|(arc, head)| {
                (
                    arc,
                    ArcEnds {
                        tail: tails[&arc],
                        head,
                    },
                )
            })
            .collect()
    }

    /// The arc following `arc` along its component.
    pub(crate) fn next_arc(&self, ends: &BTreeMap<ArcId, ArcEnds>, arc: ArcId) -> ArcId {
        let (x, slot) = ends[&arc].head;
        self.crossings[x].arcs[(slot + 2) % 4]
    }

    /// Components ordered by their minimal arc label, each traversed along its
    /// orientation starting at that arc. Free loops come last.
    pub fn components(&self) -> Vec<Component> {
        let ends = self.arc_ends();
        let mut visited = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for &start in ends.keys() {
            if visited.contains(&start) {
                continue;
            }
            let mut arcs = Vec::new();
            let mut arc = start;
            loop {
                visited.insert(arc);
                arcs.push(arc);
                arc = self.next_arc(&ends, arc);
                if arc == start {
                    break;
                }
            }
            out.push(Component { arcs });
        }
        out.extend((0..self.free_loops).map(|_| Component { arcs: Vec::new() }));
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Map from arc label to component index.
    pub(crate) fn component_of_arcs(&self) -> BTreeMap<ArcId, ComponentId> {
        self.components()
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.arcs.iter().map(move |&a| (a, i)))
            .collect()
    }

    pub fn sign(&self, x: CrossingId) -> Result<CrossingSign, DiagramError> {
        Ok(self.crossing(x)?.sign())
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign().value()).sum()
    }

    /// Half the signed count of crossings between components `c1` and `c2`.
    pub fn linking_number(&self, c1: ComponentId, c2: ComponentId) -> Result<i64, DiagramError> {
        let n = self.component_count();
        for c in [c1, c2] {
            if c >= n {
                return Err(DiagramError::NoSuchComponent(c));
            }
        }
        if c1 == c2 {
            return Err(DiagramError::SameComponent);
        }
        let comp = self.component_of_arcs();
        let total: i64 = self
            .crossings
            .iter()
            .filter(|x| {
                let (u, o) = (comp[&x.a()], comp[&x.over_in()]);
                (u == c1 && o == c2) || (u == c2 && o == c1)
            })
            .map(|x| x.sign().value())
            .sum();
        debug_assert!(total % 2 == 0);
        Ok(total / 2)
    }

    /// Linking numbers of every pair `i < j` of components.
    pub fn linking_numbers(&self) -> Vec<((ComponentId, ComponentId), i64)> {
        let n = self.component_count();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                out.push(((i, j), self.linking_number(i, j).expect("valid components")));
            }
        }
        out
    }

    /// Number of connected pieces of the underlying 4-valent graph, each free
    /// loop counting as its own piece.
    pub fn pieces(&self) -> usize {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for ends in self.arc_ends().values() {
            let (a, b) = (
                find(&mut parent, ends.tail.0),
                find(&mut parent, ends.head.0),
            );
            parent[a] = b;
        }
        let roots = (0..n).filter(|&i| find(&mut parent, i) == i).count();
        roots + self.free_loops
    }

    /// PD text in the grammar accepted by [`parse_pd`].
    pub fn to_pd_string(&self) -> String {
        let mut items: Vec<String> = self.crossings.iter().map(|x| x.to_string()).collect();
        items.extend((0..self.free_loops).map(|_| "O".to_string()));
        items.join(";")
    }

    /// Applies an injective relabeling of arcs.
    pub fn relabeled(&self, f: impl Fn(ArcId) -> ArcId) -> Result<Diagram, DiagramError> {
        let arcs = self.arcs();
        let mut image: Vec<ArcId> = arcs.iter().map(|&a| f(a)).collect();
        image.sort_unstable();
        image.dedup();
        if image.len() != arcs.len() {
            return Err(DiagramError::NonInjectiveRelabel);
        }
        Diagram::new(
            self.crossings.iter().map(|x| x.relabeled(&f)).collect(),
            self.free_loops,
        )
    }
}

/// Displays the PD text; signs are not shown (see [`Diagram::canonical_code`]).
impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.crossings.is_empty() && self.free_loops == 0 {
            return f.write_str("(empty)");
        }
        f.write_str(&self.to_pd_string())
    }
}

impl std::str::FromStr for Diagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pd(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HOPF: &str = "X(2,3,4,1);X(3,2,1,4)";

    #[test]
    fn unknot_has_one_component() {
        let d = parse_pd("O").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.free_loops(), 1);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 0);
    }

    #[test]
    fn positive_hopf_by_hand() {
        let d = parse_pd(HOPF).unwrap();
        let comps = d.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].arcs, vec![1, 3]);
        assert_eq!(comps[1].arcs, vec![2, 4]);
        assert_eq!(d.sign(0).unwrap(), CrossingSign::Positive);
        assert_eq!(d.sign(1).unwrap(), CrossingSign::Positive);
        assert_eq!(d.linking_number(0, 1).unwrap(), 1);
        assert_eq!(d.linking_number(1, 0).unwrap(), 1);
    }

    #[test]
    fn mirrored_hopf_signs_negative() {
        let d = parse_pd(HOPF).unwrap().mirror();
        assert!(d
            .crossings()
            .iter()
            .all(|x| x.sign() == CrossingSign::Negative));
        assert_eq!(d.linking_number(0, 1).unwrap(), -1);
    }

    #[test]
    fn figure_eight_writhe_zero() {
        let d = parse_pd("X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)").unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 0);
        let signs: Vec<_> = d.crossings().iter().map(|x| x.sign().value()).collect();
        assert_eq!(signs.iter().filter(|&&s| s > 0).count(), 2);
    }

    #[test]
    fn unlink_linking_number_zero() {
        let d = parse_pd("O;O").unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.linking_number(0, 1).unwrap(), 0);
        assert_eq!(d.pieces(), 2);
    }

    #[test]
    fn linking_number_errors() {
        let d = parse_pd(HOPF).unwrap();
        assert_eq!(d.linking_number(0, 0), Err(DiagramError::SameComponent));
        assert_eq!(
            d.linking_number(0, 2),
            Err(DiagramError::NoSuchComponent(2))
        );
    }

    #[test]
    fn torus_writhe_and_components() {
        assert_eq!(torus2_diagram(3).unwrap().writhe(), 3);
        assert_eq!(torus2_diagram(3).unwrap().mirror().writhe(), -3);
        assert_eq!(torus2_diagram(3).unwrap().component_count(), 1);
        let t4 = torus2_diagram(4).unwrap();
        assert_eq!(t4.component_count(), 2);
        assert_eq!(t4.linking_number(0, 1).unwrap(), 2);
    }

    #[test]
    fn relabel_rejects_collisions() {
        let d = parse_pd(HOPF).unwrap();
        assert_eq!(d.relabeled(|_| 1), Err(DiagramError::NonInjectiveRelabel));
        let shifted = d.relabeled(|a| a + 10).unwrap();
        assert_eq!(shifted.arcs(), vec![11, 12, 13, 14]);
    }

    #[test]
    fn switched_crossing_flips_sign() {
        let x = Crossing::new([1, 2, 3, 4], CrossingSign::Positive);
        assert_eq!(x.switched().sign(), CrossingSign::Negative);
        assert_eq!(x.switched().switched(), x);
        let y = Crossing::new([1, 2, 3, 4], CrossingSign::Negative);
        assert_eq!(y.switched().sign(), CrossingSign::Positive);
        assert_eq!(y.switched().switched(), y);
    }
}
