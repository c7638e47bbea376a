use std::collections::BTreeMap;

use super::naive::{identity_state, slice_options};
use super::TableForm;
use crate::diagram::{compose, rainbow, reduce, ClassVector, Subset};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::tangle::MorseWord;

/// Slice-by-slice evaluation in the canonical basis of the quotient.
///
/// The running state lives on the current cut followed by the bottom points
/// in reverse, so every slice acts on a contiguous window. Each basis vector
/// is glued to the slice (crossings through the dotted table) and the result
/// is reduced back to coordinates.
pub fn evaluate_dp(t: &MorseWord) -> ClassVector {
    let options = slice_options(t, TableForm::Dotted);
    let mut n = 2 * t.bottom_count();
    let mut state: BTreeMap<Subset, LaurentPoly> = BTreeMap::new();
    for (s, e) in reduce(&identity_state(t.bottom_count())) {
        *state.entry(s).or_default() += &LaurentPoly::from(e as i64);
    }

    for opts in &options {
        // table coefficients as small monomial lists
        let monos: Vec<Vec<(i64, i32)>> = opts
            .iter()
            .map(|(c, _, _)| c.terms().map(|(e, v)| (i64::try_from(v).expect("small table coefficient"), e)).collect())
            .collect();
        let n_out = n - opts[0].1.inputs + opts[0].1.outputs;
        let mut next: BTreeMap<Subset, LaurentPoly> = BTreeMap::new();
        for (s, c) in &state {
            let rep = rainbow(*s, n);
            for ((_, piece, at), mono) in opts.iter().zip(&monos) {
                let Some((sign, d)) = compose(&rep, *at, piece) else { continue };
                for (s2, e) in reduce(&d) {
                    let slot = next.entry(s2).or_default();
                    for &(k, exp) in mono {
                        slot.add_scaled(c, k * (sign * e) as i64, exp);
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        state = next;
        n = n_out;
    }

    let mut out = ClassVector::zero(n);
    for (s, c) in state {
        out.add_unchecked(s, &c);
    }
    out
}

/// The scalar `λ` with `T = λ · strand` in the two-point quotient, read off
/// the two coordinates, which must agree.
pub fn delta_dp(t: &MorseWord) -> Result<LaurentPoly> {
    if t.boundary_count() != 2 {
        return Err(Error::EndpointCount { expected: "2".into(), found: t.boundary_count() });
    }
    let v = evaluate_dp(t);
    let chord = v.get(Subset::from_bits(0b11));
    let empty = v.get(Subset::from_bits(0));
    if chord != empty {
        return Err(Error::Internal(format!("two-point coordinates disagree: {chord} vs {empty}")));
    }
    Ok(chord)
}
