use super::{Dir, MorseWord, Rotation, Slice, UnionFind};
use crate::error::{Error, Result};

/// Rotation numbers of the closed loops left after smoothing every crossing
/// along its orientation. Loops are embedded, so each entry is `+1`
/// (counterclockwise) or `-1` (clockwise).
///
/// Rotation is tallied in half turns at critical points: a cup counts `+1/2`
/// when traversed left to right, a cap `+1/2` when traversed right to left,
/// and the opposite senses count `-1/2`. A crossing whose strands run the same
/// way smooths into two vertical arcs with no critical points; otherwise it
/// smooths into a cap below and a cup above, each credited to its own loop.
pub fn smoothed_loop_rotations(t: &MorseWord) -> Vec<i32> {
    let mut uf = UnionFind::default();
    let mut half_turns: Vec<i32> = Vec::new();
    let mut boundary: Vec<bool> = Vec::new();
    let fresh = |uf: &mut UnionFind, half: &mut Vec<i32>, bd: &mut Vec<bool>, h: i32, on_boundary: bool| {
        let id = uf.make();
        half.push(h);
        bd.push(on_boundary);
        id
    };

    let mut ids: Vec<usize> = (0..t.bottom_count())
        .map(|_| fresh(&mut uf, &mut half_turns, &mut boundary, 0, true))
        .collect();
    let cuts = t.cuts();

    // One half turn for a cap whose left point carries direction `left`.
    let cap_turn = |left: Dir| if left == Dir::Up { -1 } else { 1 };

    for (i, &s) in t.slices().iter().enumerate() {
        let dirs = &cuts[i];
        match s {
            Slice::Cup(p, rot) => {
                let h = if rot == Rotation::Ccw { 1 } else { -1 };
                let c = fresh(&mut uf, &mut half_turns, &mut boundary, h, false);
                ids.splice(p - 1..p - 1, [c, c]);
            }
            Slice::Cap(p) => {
                let r = join(&mut uf, &mut half_turns, &mut boundary, ids[p - 1], ids[p]);
                half_turns[r] += cap_turn(dirs[p - 1]);
                ids.drain(p - 1..=p);
            }
            Slice::Cross(p, _) => {
                let (left, right) = (dirs[p - 1], dirs[p]);
                if left != right {
                    let r = join(&mut uf, &mut half_turns, &mut boundary, ids[p - 1], ids[p]);
                    half_turns[r] += cap_turn(left);
                    // The point above on the left continues the right strand.
                    let h = if right == Dir::Down { 1 } else { -1 };
                    let c = fresh(&mut uf, &mut half_turns, &mut boundary, h, false);
                    ids[p - 1] = c;
                    ids[p] = c;
                }
            }
        }
    }
    for &id in &ids {
        let r = uf.find(id);
        boundary[r] = true;
    }

    let mut out = Vec::new();
    for id in 0..half_turns.len() {
        if uf.find(id) == id && !boundary[id] {
            out.push(half_turns[id] / 2);
        }
    }
    out
}

fn join(uf: &mut UnionFind, half: &mut [i32], bd: &mut [bool], a: usize, b: usize) -> usize {
    let (ra, rb) = (uf.find(a), uf.find(b));
    if ra == rb {
        return ra;
    }
    let r = uf.union(ra, rb);
    let other = if r == ra { rb } else { ra };
    half[r] += half[other];
    bd[r] |= bd[other];
    r
}

/// Counterclockwise minus clockwise loops in the oriented smoothing of a
/// two-endpoint tangle.
pub fn turning_number(t: &MorseWord) -> Result<i32> {
    if t.boundary_count() != 2 {
        return Err(Error::EndpointCount { expected: "2".into(), found: t.boundary_count() });
    }
    Ok(smoothed_loop_rotations(t).iter().sum())
}
