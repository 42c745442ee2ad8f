use rand::Rng;

use super::{ArcId, Crossing, CrossingSign, Diagram, DiagramError};

/// Closure of a braid on `strands` strands. Generator `i` (1-based, positive)
/// crosses strand positions `i` and `i + 1` with a positive crossing; `-i` is
/// its inverse. Strands never touched by the word close up into free loops.
///
/// Strands run upward; a positive generator carries the lower-left strand
/// over to the upper right.
///
/// # Panics
/// If a generator index is 0 or not smaller than `strands`.
pub fn braid_closure(strands: usize, word: &[i32]) -> Diagram {
    let mut next: ArcId = 1;
    let mut fresh = || {
        let a = next;
        next += 1;
        a
    };
    let initial: Vec<ArcId> = (0..strands).map(|_| fresh()).collect();
    let mut cur = initial.clone();
    let mut crossings = Vec::with_capacity(word.len());
    for &g in word {
        let i = g.unsigned_abs() as usize;
        assert!(i >= 1 && i < strands, "generator {g} out of range");
        let (left, right) = (cur[i - 1], cur[i]);
        let (new_left, new_right) = (fresh(), fresh());
        // slots run counterclockwise from the incoming understrand
        let x = if g > 0 {
            // under: lower right -> upper left
            Crossing::new([right, new_right, new_left, left], CrossingSign::Positive)
        } else {
            // under: lower left -> upper right
            Crossing::new([left, right, new_right, new_left], CrossingSign::Negative)
        };
        crossings.push(x);
        cur[i - 1] = new_left;
        cur[i] = new_right;
    }
    let mut free_loops = 0;
    let close = |a: ArcId| cur.iter().position(|&c| c == a).map_or(a, |p| initial[p]);
    for x in crossings.iter_mut() {
        *x = x.relabeled(close);
    }
    for p in 0..strands {
        if cur[p] == initial[p] {
            free_loops += 1;
        }
    }
    Diagram::from_parts(crossings, free_loops).canonical()
}

/// Closure of the 2-strand braid with `m` positive crossings: the torus
/// knot or link T(2, m).
pub fn torus2_diagram(m: usize) -> Result<Diagram, DiagramError> {
    if m == 0 {
        return Err(DiagramError::ZeroTwists);
    }
    Ok(braid_closure(2, &vec![1; m]))
}

/// The positive Hopf link `X(2,3,4,1);X(3,2,1,4)`; arc 1 lies on component 0.
pub fn hopf_link() -> Diagram {
    Diagram::from_parts(
        vec![
            Crossing::new([2, 3, 4, 1], CrossingSign::Positive),
            Crossing::new([3, 2, 1, 4], CrossingSign::Positive),
        ],
        0,
    )
}

/// A random braid closure on 2 to 4 strands with between 1 and
/// `max_crossings` crossings.
pub fn random_braid_diagram<R: Rng + ?Sized>(rng: &mut R, max_crossings: usize) -> Diagram {
    let strands = rng.gen_range(2..=4);
    let len = rng.gen_range(1..=max_crossings.max(1));
    let word: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    braid_closure(strands, &word)
}

/// A random one-component braid closure with at least one crossing.
pub fn random_knot<R: Rng + ?Sized>(rng: &mut R, max_crossings: usize) -> Diagram {
    loop {
        let d = random_braid_diagram(rng, max_crossings);
        if d.crossing_count() > 0 && d.free_loops() == 0 && d.component_count() == 1 {
            return d;
        }
    }
}
