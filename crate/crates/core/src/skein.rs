//! Conway polynomials by the descending-diagram skein recursion.
//!
//! At every node the diagram is first reduced (R1/R2). Split diagrams give
//! 0, a lone free loop gives 1. Otherwise components are walked in order of
//! their minimal arc label, each from that arc; if every crossing is first
//! met on its overstrand the diagram is descending and presents an unlink.
//! Otherwise the first crossing met from below is switched and smoothed:
//!
//! ```text
//! ∇(L+) = ∇(L-) + z ∇(L0)        ∇(L-) = ∇(L+) - z ∇(L0)
//! ```
//!
//! The pair (crossings, crossings first met from below) strictly decreases
//! at every step.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use thiserror::Error;

use crate::diagram::{CrossingId, CrossingSign, Diagram, DiagramError};
use crate::poly::{Coeff, Poly};

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("skein recursion exceeded the node budget of {0}")]
    BudgetExceeded(u64),
    #[error("the empty diagram has no Conway polynomial")]
    EmptyDiagram,
    #[error("crossing {0} is negative; expected a positive crossing")]
    NotPositive(CrossingId),
    #[error("smoothing did not produce a two-component link")]
    NotTwoComponent,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SkeinStats {
    pub nodes_expanded: u64,
    pub cache_hits: u64,
}

/// Memo table, node budget and counters for one family of computations.
#[derive(Debug, Clone)]
pub struct SkeinContext<T> {
    memo: HashMap<String, Poly<T>>,
    node_budget: u64,
    stats: SkeinStats,
    reduce: bool,
}

impl<T: Coeff> Default for SkeinContext<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// First crossing met from below, plus the termination measure.
struct Walk {
    first_under: Option<CrossingId>,
    bad: usize,
    components: usize,
}

fn walk(d: &Diagram) -> Walk {
    let mut seen = vec![false; d.crossing_count()];
    let mut first_under = None;
    let mut bad = 0;
    let comps = d.components();
    let crossings = d.crossings();
    // head slot of each arc
    let mut head: BTreeMap<u32, (CrossingId, usize)> = BTreeMap::new();
    for (i, x) in crossings.iter().enumerate() {
        head.insert(x.a(), (i, 0));
        head.insert(
            x.over_in(),
            (
                i,
                if x.sign() == CrossingSign::Positive {
                    3
                } else {
                    1
                },
            ),
        );
    }
    for comp in &comps {
        for arc in &comp.arcs {
            let (x, slot) = head[arc];
            if !seen[x] {
                seen[x] = true;
                if slot == 0 {
                    bad += 1;
                    first_under.get_or_insert(x);
                }
            }
        }
    }
    Walk {
        first_under,
        bad,
        components: comps.len(),
    }
}

impl<T: Coeff> SkeinContext<T> {
    pub fn new() -> Self {
        Self::with_budget(DEFAULT_NODE_BUDGET)
    }

    pub fn with_budget(node_budget: u64) -> Self {
        SkeinContext {
            memo: HashMap::new(),
            node_budget,
            stats: SkeinStats::default(),
            reduce: true,
        }
    }

    /// A context that never applies Reidemeister reductions; slower, but an
    /// independent route for checking [`Diagram::reduce`].
    pub fn without_reduction() -> Self {
        SkeinContext {
            reduce: false,
            ..Self::new()
        }
    }

    pub fn stats(&self) -> SkeinStats {
        self.stats
    }

    pub fn node_budget(&self) -> u64 {
        self.node_budget
    }

    pub fn cached(&self) -> impl Iterator<Item = (&str, &Poly<T>)> {
        self.memo.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn clear(&mut self) {
        self.memo.clear();
        self.stats = SkeinStats::default();
    }

    /// The Conway polynomial of the link presented by `d`.
    pub fn conway(&mut self, d: &Diagram) -> Result<Poly<T>, SkeinError> {
        if d.crossing_count() == 0 && d.free_loops() == 0 {
            return Err(SkeinError::EmptyDiagram);
        }
        self.node(d, None)
    }

    fn node(&mut self, d: &Diagram, parent: Option<(usize, usize)>) -> Result<Poly<T>, SkeinError> {
        let d = if self.reduce { d.reduce() } else { d.clone() };
        if d.pieces() >= 2 {
            return Ok(Poly::zero());
        }
        if d.crossing_count() == 0 {
            return Ok(Poly::one());
        }
        let w = walk(&d);
        let measure = (d.crossing_count(), w.bad);
        if let Some(p) = parent {
            assert!(
                measure < p,
                "skein measure did not decrease: {measure:?} !< {p:?}"
            );
        }
        let key = d.canonical_code();
        if let Some(p) = self.memo.get(&key) {
            self.stats.cache_hits += 1;
            return Ok(p.clone());
        }
        self.stats.nodes_expanded += 1;
        if self.stats.nodes_expanded > self.node_budget {
            return Err(SkeinError::BudgetExceeded(self.node_budget));
        }
        let value = match w.first_under {
            None if w.components == 1 => Poly::one(),
            None => Poly::zero(),
            Some(x) => {
                let switched = self.node(&d.switch_crossing(x)?, Some(measure))?;
                let smoothed = self.node(&d.smooth_crossing(x)?, Some(measure))?.shift(1);
                match d.crossings()[x].sign() {
                    CrossingSign::Positive => &switched + &smoothed,
                    CrossingSign::Negative => &switched - &smoothed,
                }
            }
        };
        self.memo.insert(key, value.clone());
        Ok(value)
    }

    /// The `z^2` coefficient of a knot's Conway polynomial.
    pub fn a2(&mut self, d: &Diagram) -> Result<T, SkeinError> {
        let n = d.component_count();
        if n != 1 {
            return Err(DiagramError::NotAKnot(n).into());
        }
        Ok(self.conway(d)?.coeff(2))
    }

    /// `∇(L+) − ∇(L−) = z ∇(L0)` at crossing `x`.
    pub fn check_skein_identity(&mut self, d: &Diagram, x: CrossingId) -> Result<bool, SkeinError> {
        let other = d.switch_crossing(x)?;
        let (plus, minus) = match d.sign(x)? {
            CrossingSign::Positive => (d.clone(), other),
            CrossingSign::Negative => (other, d.clone()),
        };
        let lhs = &self.conway(&plus)? - &self.conway(&minus)?;
        let rhs = self.conway(&d.smooth_crossing(x)?)?.shift(1);
        Ok(lhs == rhs)
    }

    /// `a2(K+) − a2(K−) = lk(L0)` at a positive crossing `x` of a knot.
    pub fn check_a2_skein(&mut self, d_plus: &Diagram, x: CrossingId) -> Result<bool, SkeinError> {
        let n = d_plus.component_count();
        if n != 1 {
            return Err(DiagramError::NotAKnot(n).into());
        }
        if d_plus.sign(x)? != CrossingSign::Positive {
            return Err(SkeinError::NotPositive(x));
        }
        let smoothed = d_plus.smooth_crossing(x)?;
        if smoothed.component_count() != 2 {
            return Err(SkeinError::NotTwoComponent);
        }
        let lk = T::from_i64(smoothed.linking_number(0, 1)?).expect("linking number fits");
        let drop = self.a2(d_plus)? - self.a2(&d_plus.switch_crossing(x)?)?;
        Ok(drop == lk)
    }
}

/// `∇(T(2, m))` from `P(0) = 0`, `P(1) = 1`, `P(m) = z P(m−1) + P(m−2)`.
pub fn conway_torus2<T: Coeff>(m: usize) -> Poly<T> {
    let (mut prev, mut cur) = (Poly::zero(), Poly::one());
    if m == 0 {
        return prev;
    }
    for _ in 1..m {
        let next = &cur.shift(1) + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `∇(T(2, 2n+3) # T(−2, 2n+1))`. Knot polynomials are mirror-invariant, so
/// this is the product of the two torus polynomials.
pub fn conway_kn<T: Coeff>(n: usize) -> Poly<T> {
    &conway_torus2(2 * n + 3) * &conway_torus2(2 * n + 1)
}

/// Diagram of `T(2, 2n+3) # T(−2, 2n+1)` as a connected sum of braid closures.
pub fn kn_diagram(n: usize) -> Diagram {
    let a = crate::diagram::torus2_diagram(2 * n + 3).expect("m >= 1");
    let b = crate::diagram::torus2_diagram(2 * n + 1)
        .expect("m >= 1")
        .mirror();
    a.connected_sum(1, &b, 1).expect("both are knots")
}

/// Context with arbitrary-precision coefficients.
pub type BigSkeinContext = SkeinContext<BigInt>;
