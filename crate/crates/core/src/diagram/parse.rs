use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{ArcId, Crossing, CrossingSign, Diagram, DiagramError};

/// Parses `item (';' item)*` with `item := X(int,int,int,int) | O`.
///
/// Over-strand directions are recovered from the understrand data by
/// propagation along each component. A component that never passes under
/// anything is oriented by label succession: its labels must form a
/// contiguous range and the outgoing over arc is the successor of the
/// incoming one.
pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let (tuples, free_loops) = tokenize(text)?;
    let crossings = orient(&tuples)?;
    Diagram::new(crossings, free_loops)
}

fn syntax(pos: usize, msg: impl Into<String>) -> DiagramError {
    DiagramError::Syntax {
        pos,
        msg: msg.into(),
    }
}

fn tokenize(text: &str) -> Result<(Vec<[ArcId; 4]>, usize), DiagramError> {
    let src = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < src.len() && src[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let expect = |pos: &mut usize, ch: u8| -> Result<(), DiagramError> {
        skip_ws(pos);
        if src.get(*pos) == Some(&ch) {
            *pos += 1;
            Ok(())
        } else {
            Err(syntax(*pos, format!("expected '{}'", ch as char)))
        }
    };
    let int = |pos: &mut usize| -> Result<ArcId, DiagramError> {
        skip_ws(pos);
        let start = *pos;
        while *pos < src.len() && src[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if start == *pos {
            return Err(syntax(start, "expected an arc label"));
        }
        text[start..*pos]
            .parse()
            .map_err(|_| syntax(start, "arc label out of range"))
    };

    let mut tuples = Vec::new();
    let mut free_loops = 0;
    loop {
        skip_ws(&mut pos);
        match src.get(pos) {
            Some(b'O') => {
                pos += 1;
                free_loops += 1;
            }
            Some(b'X') => {
                pos += 1;
                expect(&mut pos, b'(')?;
                let mut t = [0; 4];
                for (i, slot) in t.iter_mut().enumerate() {
                    if i > 0 {
                        expect(&mut pos, b',')?;
                    }
                    *slot = int(&mut pos)?;
                }
                expect(&mut pos, b')')?;
                tuples.push(t);
            }
            _ => return Err(syntax(pos, "expected 'X(' or 'O'")),
        }
        skip_ws(&mut pos);
        match src.get(pos) {
            None => break,
            Some(b';') => pos += 1,
            Some(_) => return Err(syntax(pos, "expected ';'")),
        }
    }
    Ok((tuples, free_loops))
}

/// Decides, for every crossing, which over slot (1 or 3) is incoming.
fn orient(tuples: &[[ArcId; 4]]) -> Result<Vec<Crossing>, DiagramError> {
    let mut occ: BTreeMap<ArcId, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, t) in tuples.iter().enumerate() {
        for (slot, &arc) in t.iter().enumerate() {
            if arc == 0 {
                return Err(DiagramError::ZeroLabel);
            }
            occ.entry(arc).or_default().push((i, slot));
        }
    }
    for (&arc, v) in &occ {
        if v.len() != 2 {
            return Err(DiagramError::ArcMultiplicity {
                arc,
                count: v.len(),
            });
        }
    }

    // Per crossing: Some(slot) of the incoming over arc once known.
    let mut over_in: Vec<Option<usize>> = vec![None; tuples.len()];
    // Whether an arc end (crossing, slot) is a head; under slots are fixed.
    let is_head = |over_in: &[Option<usize>], (x, slot): (usize, usize)| -> Option<bool> {
        match slot {
            0 => Some(true),
            2 => Some(false),
            _ => over_in[x].map(|s| s == slot),
        }
    };

    let mut queue: VecDeque<ArcId> = occ.keys().copied().collect();
    let resolve = |over_in: &mut Vec<Option<usize>>,
                   queue: &mut VecDeque<ArcId>|
     -> Result<(), DiagramError> {
        while let Some(arc) = queue.pop_front() {
            let ends = &occ[&arc];
            let (e0, e1) = (ends[0], ends[1]);
            match (is_head(over_in, e0), is_head(over_in, e1)) {
                (Some(h0), Some(h1)) => {
                    if h0 == h1 {
                        return Err(DiagramError::Succession { arc });
                    }
                }
                (Some(h), None) | (None, Some(h)) => {
                    let (x, slot) = if is_head(over_in, e0).is_none() {
                        e0
                    } else {
                        e1
                    };
                    // the unknown end is a head exactly when the known one is a tail
                    let in_slot = if h { (slot + 2) % 4 } else { slot };
                    over_in[x] = Some(in_slot);
                    let other = tuples[x][(slot + 2) % 4];
                    queue.push_back(other);
                    queue.push_back(arc);
                }
                (None, None) => {}
            }
        }
        Ok(())
    };
    resolve(&mut over_in, &mut queue)?;

    // Remaining crossings belong to components that only pass over.
    while let Some(x0) = over_in.iter().position(Option::is_none) {
        let start = tuples[x0][1];
        let cycle = over_cycle(tuples, &occ, start);
        let labels: BTreeSet<ArcId> = cycle.iter().copied().collect();
        let (lo, hi) = (*labels.first().unwrap(), *labels.last().unwrap());
        if (hi - lo) as usize + 1 != labels.len() || labels.len() < 3 {
            return Err(DiagramError::AmbiguousOrientation { arc: start });
        }
        let succ = |a: ArcId| if a == hi { lo } else { a + 1 };
        let (b, d) = (tuples[x0][1], tuples[x0][3]);
        over_in[x0] = Some(if succ(b) == d {
            1
        } else if succ(d) == b {
            3
        } else {
            return Err(DiagramError::AmbiguousOrientation { arc: b });
        });
        queue.push_back(b);
        queue.push_back(d);
        resolve(&mut over_in, &mut queue)?;
    }

    Ok(tuples
        .iter()
        .zip(over_in)
        .map(|(&t, s)| {
            let sign = if s == Some(3) {
                CrossingSign::Positive
            } else {
                CrossingSign::Negative
            };
            Crossing::new(t, sign)
        })
        .collect())
}

/// Arcs of the (unoriented) strand through `start`, walking straight across
/// crossings.
fn over_cycle(
    tuples: &[[ArcId; 4]],
    occ: &BTreeMap<ArcId, Vec<(usize, usize)>>,
    start: ArcId,
) -> Vec<ArcId> {
    let mut out = vec![start];
    let mut arc = start;
    let mut from = occ[&start][0];
    loop {
        let to = if occ[&arc][0] == from {
            occ[&arc][1]
        } else {
            occ[&arc][0]
        };
        let next = tuples[to.0][(to.1 + 2) % 4];
        if next == start {
            return out;
        }
        from = (to.0, (to.1 + 2) % 4);
        arc = next;
        out.push(arc);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_quadruple_use() {
        let err = parse_pd("X(1,2,3,4);X(1,2,3,4)").unwrap_err();
        assert!(matches!(err, DiagramError::Succession { .. }), "{err:?}");
    }

    #[test]
    fn rejects_bad_multiplicity() {
        let err = parse_pd("X(1,2,3,4)").unwrap_err();
        assert!(matches!(
            err,
            DiagramError::ArcMultiplicity { count: 1, .. }
        ));
        let err = parse_pd("X(1,1,1,1);X(2,3,2,3)").unwrap_err();
        assert!(matches!(
            err,
            DiagramError::ArcMultiplicity { arc: 1, count: 4 }
        ));
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert!(matches!(
            parse_pd(""),
            Err(DiagramError::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_pd("X(1,2,3)"),
            Err(DiagramError::Syntax { pos: 7, .. })
        ));
        assert!(matches!(
            parse_pd("O;"),
            Err(DiagramError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_pd("O O"),
            Err(DiagramError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_pd("Y(1,2,3,4)"),
            Err(DiagramError::Syntax { .. })
        ));
    }

    #[test]
    fn whitespace_is_ignored() {
        let d = parse_pd(" X( 2,3 ,4,1 ) ; X(3,2,1,4) ").unwrap();
        assert_eq!(d.crossing_count(), 2);
    }

    #[test]
    fn kink_orientations() {
        // positive and negative one-crossing kinks
        let pos = parse_pd("X(2,2,1,1)").unwrap();
        assert_eq!(pos.writhe(), 1);
        let neg = parse_pd("X(1,2,2,1)").unwrap();
        assert_eq!(neg.writhe(), -1);
    }

    #[test]
    fn over_only_component_uses_label_succession() {
        // arcs 3,4 never pass under; two labels cannot fix a direction
        let err = parse_pd("X(1,3,2,4);X(2,4,1,3)").unwrap_err();
        assert!(
            matches!(err, DiagramError::AmbiguousOrientation { .. }),
            "{err:?}"
        );
    }

    #[test]
    fn zero_label_rejected() {
        assert_eq!(parse_pd("X(0,1,0,1)"), Err(DiagramError::ZeroLabel));
    }
}
