//! Seeded random tangle generators used by the tests and the `check` command.

use rand::Rng;

use super::{braid_closure_components, braid_to_tangle, CrossingKind, Dir, MorseWord, Rotation, Slice};

/// Shape of a random Morse word.
#[derive(Clone, Debug)]
pub struct RandomShape {
    pub bottom: Vec<Dir>,
    /// Random slices before the word is closed off.
    pub steps: usize,
    pub max_width: usize,
    /// Width to cap down to at the end. Rounded up to the smallest width
    /// compatible with the bottom directions.
    pub top_width: usize,
}

impl RandomShape {
    /// One upward strand in and out: a long knot or link.
    pub fn long(steps: usize, max_width: usize) -> Self {
        Self { bottom: vec![Dir::Up], steps, max_width, top_width: 1 }
    }
}

fn random_dir<R: Rng + ?Sized>(rng: &mut R) -> Dir {
    if rng.gen_bool(0.5) {
        Dir::Up
    } else {
        Dir::Down
    }
}

fn random_kind<R: Rng + ?Sized>(rng: &mut R) -> CrossingKind {
    if rng.gen_bool(0.5) {
        CrossingKind::Over
    } else {
        CrossingKind::Under
    }
}

fn capable(dirs: &[Dir]) -> Vec<usize> {
    (1..dirs.len()).filter(|&p| dirs[p - 1] != dirs[p]).collect()
}

fn apply(dirs: &mut Vec<Dir>, s: Slice) {
    match s {
        Slice::Cup(p, Rotation::Ccw) => drop(dirs.splice(p - 1..p - 1, [Dir::Down, Dir::Up])),
        Slice::Cup(p, Rotation::Cw) => drop(dirs.splice(p - 1..p - 1, [Dir::Up, Dir::Down])),
        Slice::Cap(p) => drop(dirs.drain(p - 1..=p)),
        Slice::Cross(p, _) => dirs.swap(p - 1, p),
    }
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, shape: &RandomShape) -> MorseWord {
    let mut dirs = shape.bottom.clone();
    let mut slices = Vec::new();
    for _ in 0..shape.steps {
        let w = dirs.len();
        let caps = capable(&dirs);
        let s = match rng.gen_range(0..4) {
            0 if w + 2 <= shape.max_width => {
                let rot = if rng.gen_bool(0.5) { Rotation::Cw } else { Rotation::Ccw };
                Slice::Cup(rng.gen_range(1..=w + 1), rot)
            }
            1 if !caps.is_empty() => Slice::Cap(caps[rng.gen_range(0..caps.len())]),
            _ if w >= 2 => Slice::Cross(rng.gen_range(1..w), random_kind(rng)),
            _ if w + 2 <= shape.max_width => Slice::Cup(rng.gen_range(1..=w + 1), Rotation::Ccw),
            _ => continue,
        };
        apply(&mut dirs, s);
        slices.push(s);
    }
    let flux = dirs.iter().map(|d| if *d == Dir::Up { 1i64 } else { -1 }).sum::<i64>().unsigned_abs() as usize;
    let target = shape.top_width.max(flux);
    let target = target + (dirs.len() + target) % 2;
    while dirs.len() < target {
        let s = Slice::Cup(rng.gen_range(1..=dirs.len() + 1), Rotation::Cw);
        apply(&mut dirs, s);
        slices.push(s);
    }
    while dirs.len() > target {
        let caps = capable(&dirs);
        let s = Slice::Cap(caps[rng.gen_range(0..caps.len())]);
        apply(&mut dirs, s);
        slices.push(s);
    }
    MorseWord::new(shape.bottom.clone(), slices).expect("generator keeps words valid")
}

/// Random bottom directions of the given length.
pub fn random_bottom<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Dir> {
    (0..len).map(|_| random_dir(rng)).collect()
}

/// Random braid word on `strands` strands whose closure is a knot. The
/// length is raised to at least `strands - 1` and to the parity of a
/// `strands`-cycle when needed.
pub fn random_knot_braid<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> Vec<i32> {
    assert!(strands >= 1);
    if strands == 1 {
        return Vec::new();
    }
    let mut len = len.max(strands - 1);
    if len % 2 != (strands - 1) % 2 {
        len += 1;
    }
    loop {
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
        if braid_closure_components(&word, strands) == Ok(1) {
            return word;
        }
    }
}

/// A two-endpoint tangle whose closure is a single knot.
pub fn random_long_knot<R: Rng + ?Sized>(rng: &mut R, steps: usize, max_width: usize) -> MorseWord {
    loop {
        let t = random_word(rng, &RandomShape::long(steps, max_width));
        if t.component_count() == 1 {
            return t;
        }
    }
}

/// Long knot from a random knotted braid.
pub fn random_braid_knot<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> (Vec<i32>, MorseWord) {
    let word = random_knot_braid(rng, strands, len);
    let t = braid_to_tangle(&word, strands).expect("generators in range");
    (word, t)
}
