use rand::seq::SliceRandom;
use rand::Rng;

use super::{CrossingKind, Dir, MorseWord, Rotation, Slice};
use crate::error::{Error, Result};

/// Side of a strand on which an R1 curl is drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A Reidemeister move located in a word. `slice` is an index into the slice
/// list: insertions go before that index (`0..=len`), removals and R3 act on
/// the slices starting there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// Curl on the strand at `position` of the cut below `slice`.
    R1 { slice: usize, position: usize, side: Side, kind: CrossingKind },
    /// Two opposite crossings between strands `position` and `position + 1`.
    R2 { slice: usize, position: usize, first: CrossingKind },
    /// Removes two cancelling crossings at `slice` and `slice + 1`.
    R2Remove { slice: usize },
    /// Slides the middle strand across the crossing at the other two.
    R3 { slice: usize },
}

fn inapplicable(msg: impl Into<String>) -> Error {
    Error::InapplicableMove(msg.into())
}

fn cut_width(word: &MorseWord, slice: usize) -> Result<Vec<Dir>> {
    if slice > word.slices().len() {
        return Err(Error::IndexOutOfRange { index: slice as i64, max: word.slices().len() as i64 });
    }
    Ok(word.cuts().swap_remove(slice))
}

pub fn apply_move(word: &MorseWord, mv: &Move) -> Result<MorseWord> {
    match *mv {
        Move::R1 { slice, position: p, side, kind } => {
            let dirs = cut_width(word, slice)?;
            if p == 0 || p > dirs.len() {
                return Err(Error::IndexOutOfRange { index: p as i64, max: dirs.len() as i64 });
            }
            let up = dirs[p - 1] == Dir::Up;
            let extra = match side {
                Side::Right => {
                    let rot = if up { Rotation::Cw } else { Rotation::Ccw };
                    [Slice::Cup(p + 1, rot), Slice::Cross(p, kind), Slice::Cap(p + 1)]
                }
                Side::Left => {
                    let rot = if up { Rotation::Ccw } else { Rotation::Cw };
                    [Slice::Cup(p, rot), Slice::Cross(p + 1, kind), Slice::Cap(p)]
                }
            };
            word.splice(slice, 0, &extra)
        }
        Move::R2 { slice, position: p, first } => {
            let dirs = cut_width(word, slice)?;
            if p == 0 || p + 1 > dirs.len() {
                return Err(inapplicable(format!("R2 at {p} needs two strands")));
            }
            word.splice(slice, 0, &[Slice::Cross(p, first), Slice::Cross(p, first.flipped())])
        }
        Move::R2Remove { slice } => match word.slices().get(slice..slice + 2) {
            Some(&[Slice::Cross(a, ka), Slice::Cross(b, kb)]) if a == b && ka != kb => word.splice(slice, 2, &[]),
            _ => Err(inapplicable(format!("no cancelling crossing pair at slice {slice}"))),
        },
        Move::R3 { slice } => {
            let Some(&[Slice::Cross(a, t1), Slice::Cross(b, t2), Slice::Cross(c, t3)]) = word.slices().get(slice..slice + 3)
            else {
                return Err(inapplicable(format!("slices at {slice} are not three crossings")));
            };
            if a != c || a.abs_diff(b) != 1 {
                return Err(inapplicable("crossings do not form a triangle"));
            }
            if t1 == t3 && t2 != t1 {
                return Err(inapplicable("no strand lies on top of the other two"));
            }
            word.splice(slice, 3, &[Slice::Cross(b, t3), Slice::Cross(a, t2), Slice::Cross(b, t1)])
        }
    }
}

/// Every move that [`apply_move`] accepts on `word`.
pub fn applicable_moves(word: &MorseWord) -> Vec<Move> {
    let kinds = [CrossingKind::Over, CrossingKind::Under];
    let mut out = Vec::new();
    for (slice, dirs) in word.cuts().iter().enumerate() {
        for position in 1..=dirs.len() {
            for side in [Side::Left, Side::Right] {
                for kind in kinds {
                    out.push(Move::R1 { slice, position, side, kind });
                }
            }
            if position < dirs.len() {
                for first in kinds {
                    out.push(Move::R2 { slice, position, first });
                }
            }
        }
        if apply_move(word, &Move::R2Remove { slice }).is_ok() {
            out.push(Move::R2Remove { slice });
        }
        if apply_move(word, &Move::R3 { slice }).is_ok() {
            out.push(Move::R3 { slice });
        }
    }
    out
}

/// Applies a uniformly chosen applicable move. Removals and R3 slides are
/// preferred when present so that long random walks do not only grow.
pub fn random_move<R: Rng + ?Sized>(word: &MorseWord, rng: &mut R) -> (Move, MorseWord) {
    let all = applicable_moves(word);
    let shrinking: Vec<Move> =
        all.iter().copied().filter(|m| matches!(m, Move::R2Remove { .. } | Move::R3 { .. })).collect();
    let pool = if !shrinking.is_empty() && rng.gen_bool(0.5) { &shrinking } else { &all };
    let mv = *pool.choose(rng).expect("R1 is always applicable on a nonempty cut");
    let next = apply_move(word, &mv).expect("listed moves apply");
    (mv, next)
}

fn crossing_at(word: &MorseWord, slice: usize) -> Result<(usize, CrossingKind)> {
    match word.slices().get(slice) {
        Some(&Slice::Cross(p, k)) => Ok((p, k)),
        _ => Err(inapplicable(format!("slice {slice} is not a crossing"))),
    }
}

/// Same word with the crossing at `slice` flipped.
pub fn switch_crossing(word: &MorseWord, slice: usize) -> Result<MorseWord> {
    let (p, k) = crossing_at(word, slice)?;
    word.splice(slice, 1, &[Slice::Cross(p, k.flipped())])
}

/// Oriented smoothing of the crossing at `slice`.
pub fn smooth_crossing(word: &MorseWord, slice: usize) -> Result<MorseWord> {
    let (p, _) = crossing_at(word, slice)?;
    let dirs = &word.cuts()[slice];
    if dirs[p - 1] == dirs[p] {
        return word.splice(slice, 1, &[]);
    }
    // After the crossing the left point carries the right strand's direction.
    let rot = if dirs[p] == Dir::Down { Rotation::Ccw } else { Rotation::Cw };
    word.splice(slice, 1, &[Slice::Cap(p), Slice::Cup(p, rot)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str) -> MorseWord {
        s.parse().unwrap()
    }

    #[test]
    fn r1_shapes() {
        let t = w("bottom 1 up;");
        let r = apply_move(&t, &Move::R1 { slice: 0, position: 1, side: Side::Right, kind: CrossingKind::Over }).unwrap();
        assert_eq!(r.to_string(), "bottom 1 up; cup 2 cw; x+ 1; cap 2;");
        let l = apply_move(&t, &Move::R1 { slice: 0, position: 1, side: Side::Left, kind: CrossingKind::Under }).unwrap();
        assert_eq!(l.to_string(), "bottom 1 up; cup 1 ccw; x- 2; cap 1;");
        let d = w("bottom 1 down;");
        for side in [Side::Left, Side::Right] {
            let m = Move::R1 { slice: 0, position: 1, side, kind: CrossingKind::Over };
            let x = apply_move(&d, &m).unwrap();
            assert_eq!(x.top(), vec![Dir::Down]);
            assert_eq!(x.component_count(), 1);
        }
    }

    #[test]
    fn r2_round_trip() {
        let t = w("bottom 2 up down;");
        let r = apply_move(&t, &Move::R2 { slice: 0, position: 1, first: CrossingKind::Over }).unwrap();
        assert_eq!(r.crossing_count(), 2);
        assert_eq!(apply_move(&r, &Move::R2Remove { slice: 0 }).unwrap(), t);
        assert!(apply_move(&t, &Move::R2Remove { slice: 0 }).is_err());
        assert!(apply_move(&w("bottom 1 up;"), &Move::R2 { slice: 0, position: 1, first: CrossingKind::Over }).is_err());
    }

    #[test]
    fn r3_validity() {
        let ok = w("bottom 3 up up up; x+ 1; x+ 2; x+ 1;");
        let moved = apply_move(&ok, &Move::R3 { slice: 0 }).unwrap();
        assert_eq!(moved.to_string(), "bottom 3 up up up; x+ 2; x+ 1; x+ 2;");
        assert_eq!(apply_move(&moved, &Move::R3 { slice: 0 }).unwrap(), ok);
        let mixed = w("bottom 3 up up up; x+ 1; x- 2; x- 1;");
        assert_eq!(
            apply_move(&mixed, &Move::R3 { slice: 0 }).unwrap().to_string(),
            "bottom 3 up up up; x- 2; x- 1; x+ 2;"
        );
        let cyclic = w("bottom 3 up up up; x+ 1; x- 2; x+ 1;");
        assert!(apply_move(&cyclic, &Move::R3 { slice: 0 }).is_err());
    }

    #[test]
    fn switch_and_smooth() {
        let t = w("bottom 2 up up; x+ 1;");
        assert_eq!(switch_crossing(&t, 0).unwrap().to_string(), "bottom 2 up up; x- 1;");
        assert_eq!(smooth_crossing(&t, 0).unwrap().to_string(), "bottom 2 up up;");
        let m = w("bottom 2 up down; x+ 1;");
        assert_eq!(smooth_crossing(&m, 0).unwrap().to_string(), "bottom 2 up down; cap 1; cup 1 ccw;");
        assert!(switch_crossing(&w("bottom 1 up; cup 2 cw;"), 0).is_err());
    }

    #[test]
    fn random_moves_keep_endpoints() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut t = w("bottom 1 up; cup 2 cw; x+ 1; x+ 1; x+ 1; cap 2;");
        for _ in 0..30 {
            let (_, next) = random_move(&t, &mut rng);
            assert_eq!(next.boundary_count(), 2);
            assert_eq!(next.component_count(), 1);
            t = next;
        }
    }
}
