use super::{table, TableForm};
use crate::diagram::{compose, DiagramVector, FlatDiagram, LocalPiece, Slot};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::tangle::{crossing_sign, MorseWord, OrientationPattern, Slice};

/// Bookkeeping from a full expansion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NaiveStats {
    /// States before reduction: the product of the table sizes.
    pub terms: u128,
    /// States that reached the top without being killed.
    pub surviving: u64,
}

/// Diagram holding `bottom` vertical strands on the points (cut, then bottom
/// reversed).
pub(super) fn identity_state(bottom: usize) -> FlatDiagram {
    let n = 2 * bottom;
    let slots = (0..n)
        .map(|i| Slot::Chord { to: (n - 1 - i) as u32, dotted: false })
        .collect();
    FlatDiagram::from_slots(slots)
}

/// Per-slice options `(coefficient, piece, offset)`.
pub(super) fn slice_options(t: &MorseWord, form: TableForm) -> Vec<Vec<(LaurentPoly, LocalPiece, usize)>> {
    let cuts = t.cuts();
    t.slices()
        .iter()
        .enumerate()
        .map(|(i, &s)| match s {
            Slice::Cup(p, _) => vec![(LaurentPoly::one(), LocalPiece::cup(), p - 1)],
            Slice::Cap(p) => vec![(LaurentPoly::one(), LocalPiece::cap(), p - 1)],
            Slice::Cross(p, kind) => {
                let pattern = OrientationPattern::from_dirs(cuts[i][p - 1], cuts[i][p]);
                table(crossing_sign(kind, pattern), pattern, form)
                    .pieces()
                    .into_iter()
                    .map(|(c, piece)| (c, piece, p - 1))
                    .collect()
            }
        })
        .collect()
}

struct Walk<'a> {
    options: &'a [Vec<(LaurentPoly, LocalPiece, usize)>],
    /// Product of option counts strictly after each slice.
    tail: Vec<u128>,
    out: DiagramVector,
    stats: NaiveStats,
}

impl Walk<'_> {
    fn go(&mut self, i: usize, state: &FlatDiagram, coeff: &LaurentPoly) {
        let Some(opts) = self.options.get(i) else {
            self.stats.terms += 1;
            self.stats.surviving += 1;
            self.out.add_unchecked(state.clone(), coeff);
            return;
        };
        for (c, piece, at) in opts {
            match compose(state, *at, piece) {
                None => self.stats.terms += self.tail[i],
                Some((sign, next)) => {
                    let k = (coeff * c).scale(sign as i64);
                    self.go(i + 1, &next, &k);
                }
            }
        }
    }
}

/// Full state expansion with the 7-term tables.
pub fn evaluate_naive(t: &MorseWord) -> DiagramVector {
    evaluate_naive_with(t, TableForm::Undotted).0
}

/// Full state expansion with either table form. The dotted form may leave
/// dotted chords in the result.
pub fn evaluate_naive_with(t: &MorseWord, form: TableForm) -> (DiagramVector, NaiveStats) {
    let options = slice_options(t, form);
    let mut tail = vec![1u128; options.len()];
    for i in (0..options.len().saturating_sub(1)).rev() {
        tail[i] = tail[i + 1].saturating_mul(options[i + 1].len() as u128);
    }
    let mut walk = Walk { options: &options, tail, out: DiagramVector::zero(t.boundary_count()), stats: NaiveStats::default() };
    walk.go(0, &identity_state(t.bottom_count()), &LaurentPoly::one());
    (walk.out, walk.stats)
}

/// Sum of the coefficients of the expansion states in which the two
/// endpoints are joined to each other.
pub fn delta_scalar(t: &MorseWord) -> Result<LaurentPoly> {
    if t.boundary_count() != 2 {
        return Err(Error::EndpointCount { expected: "2".into(), found: t.boundary_count() });
    }
    let chord = FlatDiagram::new(2, &[(1, 2, false)], &[]).expect("valid");
    Ok(evaluate_naive(t).get(&chord))
}
