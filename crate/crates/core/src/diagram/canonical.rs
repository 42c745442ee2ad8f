use std::collections::BTreeMap;
use std::fmt::Write;

use super::{ArcId, Diagram};

impl Diagram {
    /// Relabels arcs 1, 2, 3, ... walking components in order of their
    /// minimal label, each from that label along its orientation.
    pub fn canonical(&self) -> Diagram {
        let mut map: BTreeMap<ArcId, ArcId> = BTreeMap::new();
        for comp in self.components() {
            for a in comp.arcs {
                let next = map.len() as ArcId + 1;
                map.insert(a, next);
            }
        }
        Diagram::from_parts(
            self.crossings
                .iter()
                .map(|x| x.relabeled(|a| map[&a]))
                .collect(),
            self.free_loops,
        )
    }

    /// Deterministic serialization of [`Diagram::canonical`]: crossings in
    /// sorted order, each followed by its sign, then one `O` per free loop.
    pub fn canonical_code(&self) -> String {
        let c = self.canonical();
        let mut xs = c.crossings.clone();
        xs.sort_unstable();
        let mut out = String::with_capacity(xs.len() * 14 + c.free_loops * 2);
        for (i, x) in xs.iter().enumerate() {
            if i > 0 {
                out.push(';');
            }
            write!(out, "{x}{}", x.sign()).unwrap();
        }
        for i in 0..c.free_loops {
            if i > 0 || !xs.is_empty() {
                out.push(';');
            }
            out.push('O');
        }
        out
    }
}
