//! Crossing expansions and the two evaluators.
//!
//! A crossing slice is replaced by a weighted sum of crossingless pictures on
//! its four endpoints. Those pictures are stored as [`FlatDiagram`]s on four
//! points in disk order: top left, top right, bottom right, bottom left.
//!
//! [`evaluate_naive`] expands every crossing at once and returns an element of
//! the diagram space; [`evaluate_dp`] works slice by slice on coordinates in
//! the canonical basis of the quotient.

mod dp;
mod naive;

pub use dp::{delta_dp, evaluate_dp};
pub use naive::{delta_scalar, evaluate_naive, evaluate_naive_with, NaiveStats};

use crate::diagram::{expand_dots, DiagramVector, FlatDiagram, LocalPiece, Slot};
use crate::laurent::LaurentPoly;
use crate::tangle::OrientationPattern;

/// Which of the two equivalent expansions to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableForm {
    /// Seven undotted terms.
    Undotted,
    /// Five terms with dotted strands.
    Dotted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub coeff: LaurentPoly,
    pub resolution: FlatDiagram,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTable {
    pub sign: i8,
    pub pattern: OrientationPattern,
    pub form: TableForm,
    pub terms: Vec<ExpansionTerm>,
}

// Local points by angle, counterclockwise from the upper right.
const NE: usize = 0;
const NW: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

/// One resolution of the upward anchor crossing: chords (with dot flags) and
/// ticks, in angle labels.
struct Picture {
    chords: &'static [(usize, usize, bool)],
    ticks: &'static [usize],
}

const SMOOTH: Picture = Picture { chords: &[(NE, SE, false), (NW, SW, false)], ticks: &[] };
const FOUR_TICKS: Picture = Picture { chords: &[], ticks: &[NE, NW, SW, SE] };

fn undotted_base(sign: i8) -> Vec<(LaurentPoly, Picture)> {
    let q = LaurentPoly::q;
    let m = |c: i64, e: i32| LaurentPoly::monomial(c, e);
    vec![
        (if sign > 0 { q() } else { m(1, -1) }, SMOOTH),
        (m(1, 1), Picture { chords: &[(NW, SE, false)], ticks: &[NE, SW] }),
        (m(-1, 1), Picture { chords: &[(NE, SE, false)], ticks: &[NW, SW] }),
        (m(-1, 1), FOUR_TICKS),
        (m(1, -1), Picture { chords: &[(NE, SW, false)], ticks: &[NW, SE] }),
        (m(-1, -1), Picture { chords: &[(NW, SW, false)], ticks: &[NE, SE] }),
        (m(-1, -1), FOUR_TICKS),
    ]
}

fn dotted_base(sign: i8) -> Vec<(LaurentPoly, Picture)> {
    let m = |c: i64, e: i32| LaurentPoly::monomial(c, e);
    let both = Picture { chords: &[(NE, SE, true), (NW, SW, true)], ticks: &[] };
    let left = Picture { chords: &[(NW, SW, true)], ticks: &[NE, SE] };
    let right = Picture { chords: &[(NE, SE, true)], ticks: &[NW, SW] };
    let rising = Picture { chords: &[(NW, SE, true)], ticks: &[NE, SW] };
    let falling = Picture { chords: &[(NE, SW, true)], ticks: &[NW, SE] };
    let s = sign as i32;
    let z = m(1, 1) - m(1, -1);
    if sign > 0 {
        vec![(m(1, s), both), (z, left), (m(1, 1), rising), (m(1, -1), falling), (m(-1, -1), FOUR_TICKS)]
    } else {
        vec![(m(1, s), both), (-z, right), (m(1, -1), falling), (m(1, 1), rising), (m(-1, 1), FOUR_TICKS)]
    }
}

/// Disk index (0-based) of an angle label after `turns` quarter turns.
fn disk_index(angle: usize, turns: usize) -> usize {
    match (angle + turns) % 4 {
        NE => 1,
        NW => 0,
        SW => 3,
        _ => 2,
    }
}

fn place(p: &Picture, turns: usize) -> FlatDiagram {
    let chords: Vec<(usize, usize, bool)> = p
        .chords
        .iter()
        .map(|&(a, b, d)| (disk_index(a, turns) + 1, disk_index(b, turns) + 1, d))
        .collect();
    let ticks: Vec<usize> = p.ticks.iter().map(|&a| disk_index(a, turns) + 1).collect();
    FlatDiagram::new(4, &chords, &ticks).expect("table pictures are planar")
}

/// Expansion of a crossing of the given sign whose strands run as `pattern`.
pub fn table(sign: i8, pattern: OrientationPattern, form: TableForm) -> ExpansionTable {
    let base = match form {
        TableForm::Undotted => undotted_base(sign),
        TableForm::Dotted => dotted_base(sign),
    };
    let turns = pattern.quarter_turns();
    let terms = base
        .into_iter()
        .map(|(coeff, pic)| ExpansionTerm { coeff, resolution: place(&pic, turns) })
        .collect();
    ExpansionTable { sign, pattern, form, terms }
}

/// All sixteen tables: both signs, every orientation pattern, both forms.
pub fn base_tables() -> Vec<ExpansionTable> {
    let mut out = Vec::with_capacity(16);
    for form in [TableForm::Undotted, TableForm::Dotted] {
        for sign in [1, -1] {
            for p in OrientationPattern::all() {
                out.push(table(sign, p, form));
            }
        }
    }
    out
}

/// The smoothing that respects the strand orientations.
pub fn oriented_smoothing(pattern: OrientationPattern) -> FlatDiagram {
    place(&SMOOTH, pattern.quarter_turns())
}

impl ExpansionTable {
    /// The table as an element of the four-point diagram space, terms merged.
    pub fn to_vector(&self) -> DiagramVector {
        let mut v = DiagramVector::zero(4);
        for t in &self.terms {
            v.add_unchecked(t.resolution.clone(), &t.coeff);
        }
        v
    }

    /// Dotted strands rewritten in undotted terms.
    pub fn expanded(&self) -> DiagramVector {
        let mut v = DiagramVector::zero(4);
        for t in &self.terms {
            for (d, c) in expand_dots(&t.resolution).iter() {
                v.add_unchecked(d.clone(), &(c * &t.coeff));
            }
        }
        v
    }

    pub(crate) fn pieces(&self) -> Vec<(LaurentPoly, LocalPiece)> {
        self.terms.iter().map(|t| (t.coeff.clone(), crossing_piece(&t.resolution))).collect()
    }
}

/// Local piece for a four-point picture: inputs are the bottom left and
/// bottom right points, outputs the top left and top right.
fn crossing_piece(d: &FlatDiagram) -> LocalPiece {
    // disk index -> local index
    const LOCAL: [usize; 4] = [2, 3, 1, 0];
    const DISK: [usize; 4] = [3, 2, 0, 1];
    let slots = d.slots();
    let local = (0..4)
        .map(|l| match slots[DISK[l]] {
            Slot::Tick => Slot::Tick,
            Slot::Chord { to, dotted } => Slot::Chord { to: LOCAL[to as usize] as u32, dotted },
        })
        .collect();
    LocalPiece::new(2, 2, local)
}
