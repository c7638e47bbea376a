use super::{FlatDiagram, Slot};

/// A crossingless piece glued onto a window of a diagram's boundary.
///
/// Local points `0..inputs` are attached to boundary points `at..at + inputs`
/// of the diagram being extended; local points `inputs..inputs + outputs`
/// become the new boundary points `at..at + outputs`. Slots use local indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct LocalPiece {
    pub inputs: usize,
    pub outputs: usize,
    pub slots: Vec<Slot>,
}

impl LocalPiece {
    pub fn new(inputs: usize, outputs: usize, slots: Vec<Slot>) -> Self {
        debug_assert_eq!(slots.len(), inputs + outputs);
        Self { inputs, outputs, slots }
    }

    /// Two new points joined by an undotted strand.
    pub fn cup() -> Self {
        Self::new(
            0,
            2,
            vec![Slot::Chord { to: 1, dotted: false }, Slot::Chord { to: 0, dotted: false }],
        )
    }

    /// Two existing points joined by an undotted strand.
    pub fn cap() -> Self {
        Self::new(
            2,
            0,
            vec![Slot::Chord { to: 1, dotted: false }, Slot::Chord { to: 0, dotted: false }],
        )
    }
}

#[derive(Clone, Copy)]
enum End {
    Tick,
    Point(usize),
}

enum Cursor {
    /// At an old boundary point, about to follow the old diagram's strand.
    Old(usize),
    /// At a local point, about to follow the piece's strand.
    Local(usize),
}

/// Glues `piece` onto `state` at boundary offset `at` and evaluates every
/// closed component. Returns the scalar sign and the reduced diagram, or
/// `None` when a relation kills the result.
pub(crate) fn compose(state: &FlatDiagram, at: usize, piece: &LocalPiece) -> Option<(i8, FlatDiagram)> {
    let old = state.slots();
    let n = old.len();
    let k = piece.inputs;
    let m = piece.outputs;
    debug_assert!(at + k <= n);
    let new_n = n - k + m;
    let glued = |p: usize| p >= at && p < at + k;
    let relabel = |p: usize| if p < at { p } else { p - k + m };
    let mut visited = vec![false; k];

    // Follows a strand until it leaves through a new boundary point or stops at a tick.
    let walk = |mut cur: Cursor, dotted: &mut bool, visited: &mut Vec<bool>, stop: Option<usize>| -> Option<End> {
        loop {
            match cur {
                Cursor::Old(p) => {
                    if glued(p) {
                        visited[p - at] = true;
                    }
                    match old[p] {
                        Slot::Tick => return Some(End::Tick),
                        Slot::Chord { to, dotted: d } => {
                            *dotted |= d;
                            let r = to as usize;
                            if !glued(r) {
                                return Some(End::Point(relabel(r)));
                            }
                            visited[r - at] = true;
                            cur = Cursor::Local(r - at);
                        }
                    }
                }
                Cursor::Local(l) => match piece.slots[l] {
                    Slot::Tick => return Some(End::Tick),
                    Slot::Chord { to, dotted: d } => {
                        *dotted |= d;
                        let l2 = to as usize;
                        if l2 >= k {
                            return Some(End::Point(at + l2 - k));
                        }
                        if stop == Some(l2) {
                            // back where we started: closed loop
                            return None;
                        }
                        cur = Cursor::Old(at + l2);
                    }
                },
            }
        }
    };

    let mut slots = vec![Slot::Tick; new_n];
    let mut sign = 1i8;
    for q in 0..new_n {
        let start = if q < at {
            Cursor::Old(q)
        } else if q < at + m {
            Cursor::Local(k + (q - at))
        } else {
            Cursor::Old(q + k - m)
        };
        let mut dotted = false;
        match walk(start, &mut dotted, &mut visited, None) {
            Some(End::Tick) => {
                if dotted {
                    return None;
                }
                slots[q] = Slot::Tick;
            }
            Some(End::Point(r)) => slots[q] = Slot::Chord { to: r as u32, dotted },
            None => unreachable!("paths from the boundary cannot close up"),
        }
    }

    for l in 0..k {
        if visited[l] {
            continue;
        }
        visited[l] = true;
        let mut dotted = false;
        // Forward along the old diagram's strand; a return to `l` closes a loop.
        match walk(Cursor::Old(at + l), &mut dotted, &mut visited, Some(l)) {
            None => {
                if !dotted {
                    return None;
                }
                sign = -sign;
            }
            Some(End::Tick) => {
                // Interior arc: finish the other half through the piece.
                match walk(Cursor::Local(l), &mut dotted, &mut visited, None) {
                    Some(End::Tick) => {
                        if dotted {
                            return None;
                        }
                    }
                    _ => unreachable!("unvisited component reached the boundary"),
                }
            }
            Some(End::Point(_)) => unreachable!("unvisited component reached the boundary"),
        }
    }

    Some((sign, FlatDiagram::from_slots(slots)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> FlatDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn cup_then_cap_is_identity() {
        let x = d("n=3; chords=(1,3)*; ticks=2");
        let (s, y) = compose(&x, 1, &LocalPiece::cup()).unwrap();
        assert_eq!(s, 1);
        assert_eq!(y, d("n=5; chords=(1,5)*,(2,3); ticks=4"));
        // zig-zag: cap the new strand's right end against the tick
        let (s, z) = compose(&y, 2, &LocalPiece::cap()).unwrap();
        assert_eq!(s, 1);
        assert_eq!(z, x);
    }

    #[test]
    fn loops_and_arcs() {
        let undotted = d("n=2; chords=(1,2); ticks=");
        let dotted = d("n=2; chords=(1,2)*; ticks=");
        let ticks = d("n=2; chords=; ticks=1,2");
        assert!(compose(&undotted, 0, &LocalPiece::cap()).is_none());
        assert_eq!(compose(&dotted, 0, &LocalPiece::cap()).unwrap().0, -1);
        assert_eq!(compose(&ticks, 0, &LocalPiece::cap()).unwrap(), (1, FlatDiagram::empty()));
        let one_tick = d("n=3; chords=(2,3)*; ticks=1");
        assert!(compose(&one_tick, 0, &LocalPiece::cap()).is_none());
        let joined = d("n=4; chords=(1,2)*,(3,4); ticks=");
        let (s, r) = compose(&joined, 1, &LocalPiece::cap()).unwrap();
        assert_eq!((s, r), (1, d("n=2; chords=(1,2)*; ticks=")));
    }
}
