//! Oriented tangles in Morse position.
//!
//! A [`MorseWord`] is read bottom to top. Between slices the diagram meets a
//! horizontal cut in `width` points, numbered `1..=width` from the left. Every
//! point of a cut carries a direction ([`Dir::Up`] or [`Dir::Down`]); those
//! directions are declared at the bottom boundary and at every cup, and are
//! propagated through the word.
//!
//! As a disk, the tangle's boundary points are numbered clockwise from a
//! basepoint at the far left: first the top endpoints left to right, then the
//! bottom endpoints right to left.

mod braid;
mod moves;
mod parse;
pub mod random;
mod turning;

pub use braid::{braid_closure_components, braid_to_tangle, parse_braid};
pub use moves::{apply_move, applicable_moves, random_move, smooth_crossing, switch_crossing, Move, Side};
pub use turning::{smoothed_loop_rotations, turning_number};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    Up,
    Down,
}

impl Dir {
    pub fn reversed(self) -> Self {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
        }
    }
}

/// Sense in which a cup is traversed: `Ccw` runs along the bottom of the `U`
/// from left to right, `Cw` from right to left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rotation {
    Cw,
    Ccw,
}

/// Which strand is on top at a crossing slice. `Over` means the strand
/// entering from the lower left passes over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    Over,
    Under,
}

impl CrossingKind {
    pub fn flipped(self) -> Self {
        match self {
            CrossingKind::Over => CrossingKind::Under,
            CrossingKind::Under => CrossingKind::Over,
        }
    }
}

/// An elementary slice acting at a 1-based position of the current cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    /// New points at `pos, pos + 1` joined below the cut.
    Cup(usize, Rotation),
    /// Points `pos, pos + 1` joined above the cut.
    Cap(usize),
    /// Points `pos, pos + 1` exchange places.
    Cross(usize, CrossingKind),
}

impl Slice {
    pub fn pos(self) -> usize {
        match self {
            Slice::Cup(p, _) | Slice::Cap(p) | Slice::Cross(p, _) => p,
        }
    }
}

/// Directions of the two strands at a crossing slice, read at the bottom of
/// the slice. The "left" strand enters at the lower left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrientationPattern {
    BothUp,
    LeftDownRightUp,
    BothDown,
    LeftUpRightDown,
}

impl OrientationPattern {
    pub fn from_dirs(left: Dir, right: Dir) -> Self {
        match (left, right) {
            (Dir::Up, Dir::Up) => Self::BothUp,
            (Dir::Down, Dir::Up) => Self::LeftDownRightUp,
            (Dir::Down, Dir::Down) => Self::BothDown,
            (Dir::Up, Dir::Down) => Self::LeftUpRightDown,
        }
    }

    /// Quarter turns (counterclockwise) carrying the both-up picture onto
    /// this one.
    pub fn quarter_turns(self) -> usize {
        match self {
            Self::BothUp => 0,
            Self::LeftDownRightUp => 1,
            Self::BothDown => 2,
            Self::LeftUpRightDown => 3,
        }
    }

    pub fn all() -> [Self; 4] {
        [Self::BothUp, Self::LeftDownRightUp, Self::BothDown, Self::LeftUpRightDown]
    }

    pub fn dirs(self) -> (Dir, Dir) {
        match self {
            Self::BothUp => (Dir::Up, Dir::Up),
            Self::LeftDownRightUp => (Dir::Down, Dir::Up),
            Self::BothDown => (Dir::Down, Dir::Down),
            Self::LeftUpRightDown => (Dir::Up, Dir::Down),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrientedCrossing {
    /// Index of the slice in the word.
    pub slice: usize,
    pub pos: usize,
    pub kind: CrossingKind,
    pub sign: i8,
    pub pattern: OrientationPattern,
}

/// Crossing sign by the right-hand rule, anchored so that `Over` on two
/// upward strands is positive.
pub fn crossing_sign(kind: CrossingKind, pattern: OrientationPattern) -> i8 {
    let (l, r) = pattern.dirs();
    let left = match l {
        Dir::Up => (1, 1),
        Dir::Down => (-1, -1),
    };
    let right = match r {
        Dir::Up => (-1, 1),
        Dir::Down => (1, -1),
    };
    let (over, under) = match kind {
        CrossingKind::Over => (left, right),
        CrossingKind::Under => (right, left),
    };
    let z = over.0 * under.1 - over.1 * under.0;
    if z > 0 {
        1
    } else {
        -1
    }
}

/// The crossing kind that realizes `sign` for the given strand directions.
pub fn kind_for_sign(sign: i8, pattern: OrientationPattern) -> CrossingKind {
    if crossing_sign(CrossingKind::Over, pattern) == sign {
        CrossingKind::Over
    } else {
        CrossingKind::Under
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MorseWord {
    bottom: Vec<Dir>,
    slices: Vec<Slice>,
}

/// Validation failure at a slice index (`None` for the bottom declaration).
#[derive(Debug)]
pub(crate) struct SliceError {
    pub slice: Option<usize>,
    pub kind: SliceErrorKind,
    pub msg: String,
}

#[derive(Debug)]
pub(crate) enum SliceErrorKind {
    Width,
    Orientation,
}

fn step(dirs: &mut Vec<Dir>, s: Slice) -> std::result::Result<(), (SliceErrorKind, String)> {
    let w = dirs.len();
    match s {
        Slice::Cup(p, rot) => {
            if p == 0 || p > w + 1 {
                return Err((SliceErrorKind::Width, format!("cup at {p} outside 1..={}", w + 1)));
            }
            let pair = match rot {
                Rotation::Ccw => [Dir::Down, Dir::Up],
                Rotation::Cw => [Dir::Up, Dir::Down],
            };
            dirs.splice(p - 1..p - 1, pair);
        }
        Slice::Cap(p) => {
            if p == 0 || p + 1 > w {
                return Err((SliceErrorKind::Width, format!("cap at {p} needs points {p},{} of {w}", p + 1)));
            }
            if dirs[p - 1] == dirs[p] {
                return Err((
                    SliceErrorKind::Orientation,
                    format!("cap at {p} joins two {:?} strands", dirs[p - 1]),
                ));
            }
            dirs.drain(p - 1..=p);
        }
        Slice::Cross(p, _) => {
            if p == 0 || p + 1 > w {
                return Err((SliceErrorKind::Width, format!("crossing at {p} needs points {p},{} of {w}", p + 1)));
            }
            dirs.swap(p - 1, p);
        }
    }
    Ok(())
}

impl MorseWord {
    pub fn new(bottom: Vec<Dir>, slices: Vec<Slice>) -> Result<Self> {
        Self::validate(bottom, slices).map_err(|e| {
            let pos = e.slice.map_or(0, |i| i + 1);
            match e.kind {
                SliceErrorKind::Width => Error::Width { pos, msg: e.msg },
                SliceErrorKind::Orientation => Error::Orientation { pos, msg: e.msg },
            }
        })
    }

    pub(crate) fn validate(bottom: Vec<Dir>, slices: Vec<Slice>) -> std::result::Result<Self, SliceError> {
        let mut dirs = bottom.clone();
        for (i, &s) in slices.iter().enumerate() {
            step(&mut dirs, s).map_err(|(kind, msg)| SliceError { slice: Some(i), kind, msg })?;
        }
        if bottom.len() + dirs.len() > crate::diagram::MAX_POINTS {
            return Err(SliceError {
                slice: None,
                kind: SliceErrorKind::Width,
                msg: format!("{} boundary points exceed the supported maximum", bottom.len() + dirs.len()),
            });
        }
        Ok(Self { bottom, slices })
    }

    /// A bundle of `dirs.len()` vertical strands.
    pub fn identity(dirs: Vec<Dir>) -> Self {
        Self { bottom: dirs, slices: Vec::new() }
    }

    pub fn bottom(&self) -> &[Dir] {
        &self.bottom
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn bottom_count(&self) -> usize {
        self.bottom.len()
    }

    /// Directions at every cut, from the bottom boundary (index 0) to the top.
    pub fn cuts(&self) -> Vec<Vec<Dir>> {
        let mut out = Vec::with_capacity(self.slices.len() + 1);
        let mut dirs = self.bottom.clone();
        out.push(dirs.clone());
        for &s in &self.slices {
            step(&mut dirs, s).expect("validated word");
            out.push(dirs.clone());
        }
        out
    }

    pub fn top(&self) -> Vec<Dir> {
        self.cuts().pop().expect("at least one cut")
    }

    pub fn top_count(&self) -> usize {
        let mut w = self.bottom.len() as isize;
        for s in &self.slices {
            match s {
                Slice::Cup(..) => w += 2,
                Slice::Cap(_) => w -= 2,
                Slice::Cross(..) => {}
            }
        }
        w as usize
    }

    /// Endpoints on the boundary of the disk: top plus bottom.
    pub fn boundary_count(&self) -> usize {
        self.bottom.len() + self.top_count()
    }

    pub fn max_width(&self) -> usize {
        let mut w = self.bottom.len();
        let mut best = w;
        for s in &self.slices {
            match s {
                Slice::Cup(..) => w += 2,
                Slice::Cap(_) => w -= 2,
                Slice::Cross(..) => {}
            }
            best = best.max(w);
        }
        best
    }

    pub fn crossing_count(&self) -> usize {
        self.slices.iter().filter(|s| matches!(s, Slice::Cross(..))).count()
    }

    pub fn crossing_signs(&self) -> Vec<OrientedCrossing> {
        let cuts = self.cuts();
        self.slices
            .iter()
            .enumerate()
            .filter_map(|(i, s)| match *s {
                Slice::Cross(p, kind) => {
                    let pattern = OrientationPattern::from_dirs(cuts[i][p - 1], cuts[i][p]);
                    Some(OrientedCrossing { slice: i, pos: p, kind, sign: crossing_sign(kind, pattern), pattern })
                }
                _ => None,
            })
            .collect()
    }

    pub fn writhe(&self) -> i32 {
        self.crossing_signs().iter().map(|c| c.sign as i32).sum()
    }

    /// Number of connected components of the underlying curve (open strands
    /// and closed loops alike).
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::default();
        let mut ids: Vec<usize> = (0..self.bottom.len()).map(|_| uf.make()).collect();
        for &s in &self.slices {
            match s {
                Slice::Cup(p, _) => {
                    let c = uf.make();
                    ids.splice(p - 1..p - 1, [c, c]);
                }
                Slice::Cap(p) => {
                    uf.union(ids[p - 1], ids[p]);
                    ids.drain(p - 1..=p);
                }
                Slice::Cross(p, _) => ids.swap(p - 1, p),
            }
        }
        uf.roots()
    }

    /// Inserts `extra` before slice index `at`.
    pub(crate) fn splice(&self, at: usize, remove: usize, extra: &[Slice]) -> Result<Self> {
        let mut slices = self.slices.clone();
        slices.splice(at..at + remove, extra.iter().copied());
        MorseWord::new(self.bottom.clone(), slices)
    }

    /// Same word with every cup rotation and bottom direction reversed.
    pub fn reversed(&self) -> Self {
        let bottom = self.bottom.iter().map(|d| d.reversed()).collect();
        let slices = self
            .slices
            .iter()
            .map(|s| match *s {
                Slice::Cup(p, Rotation::Cw) => Slice::Cup(p, Rotation::Ccw),
                Slice::Cup(p, Rotation::Ccw) => Slice::Cup(p, Rotation::Cw),
                other => other,
            })
            .collect();
        Self { bottom, slices }
    }
}

#[derive(Default)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn make(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns the surviving root.
    pub fn union(&mut self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[rb] = ra;
        }
        ra
    }

    pub fn roots(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

impl fmt::Display for MorseWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bottom {}", self.bottom.len())?;
        for d in &self.bottom {
            f.write_str(match d {
                Dir::Up => " up",
                Dir::Down => " down",
            })?;
        }
        f.write_str(";")?;
        for s in &self.slices {
            match s {
                Slice::Cup(p, Rotation::Ccw) => write!(f, " cup {p} ccw;")?,
                Slice::Cup(p, Rotation::Cw) => write!(f, " cup {p} cw;")?,
                Slice::Cap(p) => write!(f, " cap {p};")?,
                Slice::Cross(p, CrossingKind::Over) => write!(f, " x+ {p};")?,
                Slice::Cross(p, CrossingKind::Under) => write!(f, " x- {p};")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MorseWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MorseWord({self})")
    }
}

impl FromStr for MorseWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse(s)
    }
}

/// Parses the tangle language; see the crate README for the grammar.
pub fn parse(text: &str) -> Result<MorseWord> {
    parse::parse(text)
}
