use serde::Serialize;

use crate::diagram::{coordinates, ClassVector};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::statesum::{delta_dp, delta_scalar, evaluate_dp, evaluate_naive};
use crate::tangle::{smooth_crossing, switch_crossing, turning_number, MorseWord};

/// Raw state sum, turning number, and the normalized polynomial
/// `(-q)^(-tau) * delta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizedResult {
    pub delta: LaurentPoly,
    pub tau: i32,
    pub alexander: LaurentPoly,
}

impl NormalizedResult {
    fn new(delta: LaurentPoly, tau: i32) -> Self {
        let alexander = &delta * &LaurentPoly::neg_q_pow(-tau);
        Self { delta, tau, alexander }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Evaluator {
    Naive,
    #[default]
    Dp,
    /// Run both and fail on disagreement.
    Both,
}

fn need_two(t: &MorseWord) -> Result<()> {
    if t.boundary_count() != 2 {
        return Err(Error::EndpointCount { expected: "2".into(), found: t.boundary_count() });
    }
    Ok(())
}

pub fn alexander_polynomial(t: &MorseWord) -> Result<NormalizedResult> {
    alexander_with(t, Evaluator::Dp)
}

pub fn alexander_with(t: &MorseWord, evaluator: Evaluator) -> Result<NormalizedResult> {
    need_two(t)?;
    let delta = match evaluator {
        Evaluator::Naive => delta_scalar(t)?,
        Evaluator::Dp => delta_dp(t)?,
        Evaluator::Both => {
            let a = delta_scalar(t)?;
            let b = delta_dp(t)?;
            if a != b {
                return Err(Error::EvaluatorMismatch(format!("naive {a}, dp {b}")));
            }
            a
        }
    };
    Ok(NormalizedResult::new(delta, turning_number(t)?))
}

/// Image of `t` in the quotient on its boundary points. Invariant under R2
/// and R3 only; each R1 curl multiplies it by `-q` or `-q^-1`.
pub fn tangle_invariant(t: &MorseWord) -> Result<ClassVector> {
    tangle_invariant_with(t, Evaluator::Dp)
}

pub fn tangle_invariant_with(t: &MorseWord, evaluator: Evaluator) -> Result<ClassVector> {
    if t.boundary_count() % 2 == 1 {
        return Err(Error::EndpointCount { expected: "an even number of".into(), found: t.boundary_count() });
    }
    Ok(match evaluator {
        Evaluator::Dp => evaluate_dp(t),
        Evaluator::Naive => coordinates(&evaluate_naive(t)),
        Evaluator::Both => {
            let a = coordinates(&evaluate_naive(t));
            let b = evaluate_dp(t);
            if a != b {
                return Err(Error::EvaluatorMismatch(format!("naive\n{a}\ndp\n{b}")));
            }
            b
        }
    })
}

/// The three words of a skein relation at one crossing.
#[derive(Clone, Debug)]
pub struct SkeinTriple {
    pub plus: MorseWord,
    pub minus: MorseWord,
    pub zero: MorseWord,
}

/// Skein triple at the `crossing`-th crossing (0-based, bottom to top).
pub fn skein_triple(t: &MorseWord, crossing: usize) -> Result<SkeinTriple> {
    let signs = t.crossing_signs();
    let c = signs.get(crossing).ok_or(Error::IndexOutOfRange {
        index: crossing as i64,
        max: signs.len() as i64 - 1,
    })?;
    let other = switch_crossing(t, c.slice)?;
    let zero = smooth_crossing(t, c.slice)?;
    let (plus, minus) = if c.sign > 0 { (t.clone(), other) } else { (other, t.clone()) };
    Ok(SkeinTriple { plus, minus, zero })
}

/// Checks `T+ - T- = (q - q^-1) T0` at the given crossing: on the raw scalar
/// for two-endpoint tangles, on the full vector otherwise.
pub fn skein_triple_check(t: &MorseWord, crossing: usize) -> Result<bool> {
    let s = skein_triple(t, crossing)?;
    let z = LaurentPoly::z();
    if t.boundary_count() == 2 {
        let lhs = delta_dp(&s.plus)? - delta_dp(&s.minus)?;
        return Ok(lhs == &z * &delta_dp(&s.zero)?);
    }
    let lhs = tangle_invariant(&s.plus)?.sub(&tangle_invariant(&s.minus)?)?;
    Ok(lhs == tangle_invariant(&s.zero)?.scale(&z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::{apply_move, braid_to_tangle, CrossingKind, Move, Side};

    fn w(s: &str) -> MorseWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn known_values() {
        let unknot = alexander_polynomial(&w("bottom 1 up;")).unwrap();
        assert_eq!((unknot.delta.clone(), unknot.tau, unknot.alexander.clone()), (p("1"), 0, p("1")));
        let trefoil = alexander_with(&braid_to_tangle(&[1, 1, 1], 2).unwrap(), Evaluator::Both).unwrap();
        assert_eq!(trefoil.tau, -1);
        assert_eq!(trefoil.alexander, p("q^-2 - 1 + q^2"));
        assert_eq!(trefoil.delta, p("-q^-3 + q^-1 - q"));
        let fig8 = alexander_with(&braid_to_tangle(&[1, -2, 1, -2], 3).unwrap(), Evaluator::Both).unwrap();
        assert_eq!(fig8.alexander, p("-q^-2 + 3 - q^2"));
        assert!(alexander_polynomial(&w("bottom 2 up up;")).is_err());
    }

    #[test]
    fn normalization_identity() {
        let r = alexander_polynomial(&braid_to_tangle(&[1, 1, 2, -1, 2], 3).unwrap()).unwrap();
        assert_eq!(&r.alexander * &LaurentPoly::neg_q_pow(r.tau), r.delta);
    }

    #[test]
    fn r1_curls() {
        let strand = w("bottom 1 up;");
        let base = tangle_invariant(&strand).unwrap();
        for dir in ["up", "down"] {
            let t = w(&format!("bottom 1 {dir};"));
            for side in [Side::Left, Side::Right] {
                for kind in [CrossingKind::Over, CrossingKind::Under] {
                    let c = apply_move(&t, &Move::R1 { slice: 0, position: 1, side, kind }).unwrap();
                    let tau = turning_number(&c).unwrap();
                    let factor = if tau == -1 { p("-q^-1") } else { p("-q") };
                    assert_eq!(tau.abs(), 1);
                    assert_eq!(tangle_invariant(&c).unwrap(), base.scale(&factor), "{dir} {side:?} {kind:?}");
                    assert!(alexander_polynomial(&c).unwrap().alexander.is_one());
                }
            }
        }
    }

    #[test]
    fn skein_on_trefoil_and_unlink() {
        let trefoil = braid_to_tangle(&[1, 1, 1], 2).unwrap();
        for k in 0..3 {
            assert!(skein_triple_check(&trefoil, k).unwrap());
        }
        let r2 = apply_move(&w("bottom 1 up; cup 2 cw;"), &Move::R2 { slice: 1, position: 1, first: CrossingKind::Over })
            .unwrap()
            .splice(3, 0, &[crate::tangle::Slice::Cap(2)])
            .unwrap();
        assert!(skein_triple_check(&r2, 0).unwrap());
        let x = w("bottom 2 up down; x+ 1;");
        assert!(skein_triple_check(&x, 0).unwrap());
        assert!(skein_triple_check(&x, 1).is_err());
    }
}
