//! Alexander polynomials of braid closures from the reduced Burau
//! representation. Independent of the state sum; used to validate it.
//!
//! Matrix entries are Laurent polynomials in the Burau variable `t`, stored in
//! [`LaurentPoly`] with `q` read as `t`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::tangle::braid_closure_components;

#[derive(Clone, PartialEq, Eq)]
pub struct BurauMatrix {
    size: usize,
    entries: Vec<LaurentPoly>,
}

impl BurauMatrix {
    pub fn identity(size: usize) -> Self {
        let mut m = Self { size, entries: vec![LaurentPoly::zero(); size * size] };
        for i in 0..size {
            m.entries[i * size + i] = LaurentPoly::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry at 0-based row `r`, column `c`.
    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.size + c]
    }

    fn set(&mut self, r: usize, c: usize, v: LaurentPoly) {
        self.entries[r * self.size + c] = v;
    }

    /// Image of the generator `g` (negative for inverses) on `strands` strands.
    pub fn generator(g: i32, strands: usize) -> Result<Self> {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(Error::IndexOutOfRange { index: g as i64, max: strands as i64 - 1 });
        }
        let m = strands - 1;
        let mut b = Self::identity(m);
        let t = LaurentPoly::q;
        let t_inv = || LaurentPoly::monomial(1, -1);
        // 0-based index of the generator's diagonal entry
        let k = i - 1;
        if g > 0 {
            b.set(k, k, -t());
            if k > 0 {
                b.set(k - 1, k, t());
            }
            if k + 1 < m {
                b.set(k + 1, k, LaurentPoly::one());
            }
        } else {
            b.set(k, k, -t_inv());
            if k > 0 {
                b.set(k - 1, k, LaurentPoly::one());
            }
            if k + 1 < m {
                b.set(k + 1, k, t_inv());
            }
        }
        Ok(b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = Self { size: n, entries: vec![LaurentPoly::zero(); n * n] };
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * n + c] += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Determinant by expansion over column subsets, row by row.
    pub fn det(&self) -> LaurentPoly {
        let n = self.size;
        let mut acc = vec![LaurentPoly::zero(); 1 << n];
        acc[0] = LaurentPoly::one();
        for mask in 0usize..1 << n {
            if acc[mask].is_zero() {
                continue;
            }
            let row = mask.count_ones() as usize;
            if row == n {
                continue;
            }
            let cur = acc[mask].clone();
            for c in 0..n {
                if mask >> c & 1 == 1 {
                    continue;
                }
                let e = self.get(row, c);
                if e.is_zero() {
                    continue;
                }
                // sign of placing column c after the columns already used
                let above = (mask >> c).count_ones();
                let term = &cur * e;
                if above % 2 == 0 {
                    acc[mask | 1 << c] += &term;
                } else {
                    acc[mask | 1 << c] -= &term;
                }
            }
        }
        acc.pop().expect("nonempty")
    }

    fn identity_minus(&self) -> Self {
        let mut m = self.clone();
        for e in m.entries.iter_mut() {
            *e = -e.clone();
        }
        for i in 0..self.size {
            let d = m.get(i, i) + &LaurentPoly::one();
            m.set(i, i, d);
        }
        m
    }
}

impl fmt::Debug for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.size {
            if r > 0 {
                f.write_str("; ")?;
            }
            for c in 0..self.size {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        f.write_str("]")
    }
}

pub fn burau_reduced(word: &[i32], strands: usize) -> Result<BurauMatrix> {
    if strands == 0 {
        return Err(Error::IndexOutOfRange { index: 0, max: 1 });
    }
    let mut m = BurauMatrix::identity(strands - 1);
    for &g in word {
        m = m.mul(&BurauMatrix::generator(g, strands)?);
    }
    Ok(m)
}

/// `det(I - B) / (1 + t + ... + t^(n-1))`, the Alexander polynomial in `t`
/// up to a unit.
pub fn burau_alexander_raw(word: &[i32], strands: usize) -> Result<LaurentPoly> {
    let b = burau_reduced(word, strands)?;
    let d = b.identity_minus().det();
    let norm = LaurentPoly::from_terms((0..strands as i32).map(|e| (1, e)));
    d.div_exact(&norm)
        .ok_or_else(|| Error::Internal(format!("{d} is not divisible by {norm}")))
}

/// The unique `±q^k` multiple of `p(q^2)` that is symmetric under
/// `q -> q^-1` and equals 1 at `q = 1`.
pub fn normalize_knot(p_in_t: &LaurentPoly) -> Result<LaurentPoly> {
    let p = p_in_t.substitute_power(2);
    let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
        return Err(Error::Internal("zero polynomial cannot be normalized".into()));
    };
    let centered = p.shift(-(lo + hi) / 2);
    let v = centered.eval_at_one();
    if v == BigInt::one() {
        Ok(centered)
    } else if v == -BigInt::one() {
        Ok(-centered)
    } else {
        Err(Error::Internal(format!("value {v} at q = 1 is not a unit")))
    }
}

/// Conway-normalized Alexander polynomial of a knotted braid closure.
pub fn alexander_via_burau(word: &[i32], strands: usize) -> Result<LaurentPoly> {
    let comps = braid_closure_components(word, strands)?;
    if comps != 1 {
        return Err(Error::MultiComponent(comps));
    }
    normalize_knot(&burau_alexander_raw(word, strands)?)
}

/// Value on the positive Hopf link. One skein step at a crossing of the
/// two-crossing diagram gives Hopf minus unlink equal to `(q - q^-1)` times
/// the unknot, and the split unlink vanishes.
pub fn hopf_link_value() -> LaurentPoly {
    let unknot = LaurentPoly::one();
    let unlink = LaurentPoly::zero();
    unlink + LaurentPoly::z() * unknot
}

/// A knot given as a braid closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusKnot {
    pub name: &'static str,
    pub word: &'static [i32],
    pub strands: usize,
}

const fn knot(name: &'static str, word: &'static [i32], strands: usize) -> CorpusKnot {
    CorpusKnot { name, word, strands }
}

/// Prime knots up to eight crossings as braid closures, plus the unknot.
pub const KNOT_CORPUS: &[CorpusKnot] = &[
    knot("0_1", &[], 1),
    knot("3_1", &[1, 1, 1], 2),
    knot("4_1", &[1, -2, 1, -2], 3),
    knot("5_1", &[1, 1, 1, 1, 1], 2),
    knot("5_2", &[1, 1, 1, 2, -1, 2], 3),
    knot("6_1", &[1, 1, 2, -1, -3, 2, -3], 4),
    knot("6_2", &[1, 1, 1, -2, 1, -2], 3),
    knot("6_3", &[1, 1, -2, 1, -2, -2], 3),
    knot("7_1", &[1, 1, 1, 1, 1, 1, 1], 2),
    knot("7_3", &[1, 1, 1, 1, 1, 2, -1, 2], 3),
    knot("7_5", &[1, 1, 1, 1, 2, -1, 2, 2], 3),
    knot("8_19", &[1, 1, 1, 2, 1, 1, 1, 2], 3),
    knot("8_20", &[1, 1, 1, -2, -1, -1, -1, -2], 3),
];

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn burau_examples() {
        assert_eq!(burau_reduced(&[], 3).unwrap(), BurauMatrix::identity(2));
        assert_eq!(burau_reduced(&[1, -1], 2).unwrap(), BurauMatrix::identity(1));
        let cube = burau_reduced(&[1, 1, 1], 2).unwrap();
        assert_eq!(cube.get(0, 0), &p("-q^3"));
        assert!(burau_reduced(&[3], 3).is_err());
    }

    #[test]
    fn inverses_compose_to_identity() {
        for n in 2..=5 {
            for i in 1..n as i32 {
                assert_eq!(burau_reduced(&[i, -i], n).unwrap(), BurauMatrix::identity(n - 1));
                assert_eq!(burau_reduced(&[-i, i], n).unwrap(), BurauMatrix::identity(n - 1));
            }
        }
    }

    #[test]
    fn determinant_matches_permutation_expansion() {
        let m = burau_reduced(&[1, 2, -3, 2, 1], 4).unwrap();
        let n = m.size();
        let mut want = LaurentPoly::zero();
        for perm in itertools::Itertools::permutations(0..n, n) {
            let mut inv = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if perm[a] > perm[b] {
                        inv += 1;
                    }
                }
            }
            let mut term = LaurentPoly::one();
            for (r, &c) in perm.iter().enumerate() {
                term = &term * m.get(r, c);
            }
            want += &if inv % 2 == 0 { term } else { -term };
        }
        assert_eq!(m.det(), want);
    }

    #[test]
    fn known_knots() {
        assert_eq!(alexander_via_burau(&[], 1).unwrap(), LaurentPoly::one());
        assert_eq!(alexander_via_burau(&[1, 1, 1], 2).unwrap(), p("q^-2 - 1 + q^2"));
        assert_eq!(alexander_via_burau(&[1, -2, 1, -2], 3).unwrap(), p("-q^-2 + 3 - q^2"));
        assert_eq!(alexander_via_burau(&[1, 1, 1, 1, 1], 2).unwrap(), p("q^-4 - q^-2 + 1 - q^2 + q^4"));
        assert_eq!(alexander_via_burau(&[1, 1], 2), Err(Error::MultiComponent(2)));
    }

    #[test]
    fn corpus_entries_are_knots() {
        for k in KNOT_CORPUS {
            assert_eq!(braid_closure_components(k.word, k.strands), Ok(1), "{}", k.name);
            assert!(k.word.len() <= 8);
        }
        let by_name = |n: &str| KNOT_CORPUS.iter().find(|k| k.name == n).unwrap();
        let five_two = by_name("5_2");
        assert_eq!(alexander_via_burau(five_two.word, five_two.strands).unwrap(), p("2q^-2 - 3 + 2q^2"));
        let six_one = by_name("6_1");
        assert_eq!(alexander_via_burau(six_one.word, six_one.strands).unwrap(), p("-2q^-2 + 5 - 2q^2"));
        let eight_nineteen = by_name("8_19");
        assert_eq!(
            alexander_via_burau(eight_nineteen.word, eight_nineteen.strands).unwrap(),
            p("q^-6 - q^-4 + 1 - q^4 + q^6")
        );
    }

    #[test]
    fn hopf_value() {
        let h = hopf_link_value();
        assert_eq!(h, p("-q^-1 + q"));
        assert_eq!(h.invert_q(), -h.clone());
        assert_eq!(h.eval_at_one(), BigInt::zero());
    }

    fn arb_word(strands: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
        let g = (1..strands as i32, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i });
        prop::collection::vec(g, 0..max_len)
    }

    fn knot_word(seed: u64, strands: usize, len: usize) -> Vec<i32> {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        crate::tangle::random::random_knot_braid(&mut rng, strands, len)
    }

    proptest! {
        #[test]
        fn braid_relations(word in arb_word(5, 6), i in 1i32..4, j in 1i32..4) {
            let n = 5;
            let b = |w: &[i32]| burau_reduced(w, n).unwrap();
            let base = b(&word);
            // far commutativity
            if (i - j).abs() >= 2 {
                prop_assert_eq!(base.mul(&b(&[i, j])), base.mul(&b(&[j, i])));
            }
            // braid relation at i, i + 1
            prop_assert_eq!(base.mul(&b(&[i, i + 1, i])), base.mul(&b(&[i + 1, i, i + 1])));
            prop_assert_eq!(b(&[-i, -(i + 1), -i]), b(&[-(i + 1), -i, -(i + 1)]));
        }

        #[test]
        fn markov_stability(seed in any::<u64>(), len in 0usize..9, rot in 0usize..8, sign in any::<bool>()) {
            let n = 4;
            let word = knot_word(seed, n, len);
            let base = alexander_via_burau(&word, n).unwrap();
            let k = if word.is_empty() { 0 } else { rot % word.len() };
            let mut conj = word[k..].to_vec();
            conj.extend_from_slice(&word[..k]);
            prop_assert_eq!(&alexander_via_burau(&conj, n).unwrap(), &base);
            let mut stab = word.clone();
            stab.push(if sign { n as i32 } else { -(n as i32) });
            prop_assert_eq!(&alexander_via_burau(&stab, n + 1).unwrap(), &base);
        }

        #[test]
        fn normalization_is_unique(seed in any::<u64>(), len in 0usize..9) {
            let word = knot_word(seed, 4, len);
            let out = alexander_via_burau(&word, 4).unwrap();
            prop_assert_eq!(out.invert_q(), out.clone());
            prop_assert_eq!(out.eval_at_one(), BigInt::one());
            for k in -6..=6 {
                for s in [1i64, -1] {
                    let other = out.shift(k).scale(s);
                    if other != out {
                        prop_assert!(other.invert_q() != other || other.eval_at_one() != BigInt::one());
                    }
                }
            }
        }
    }
}
