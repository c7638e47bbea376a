//! Exact Laurent polynomials in one indeterminate `q` with arbitrary-precision
//! integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A finitely supported map `exponent -> coefficient`. Zero coefficients are
/// never stored, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff.into(), exp);
        p
    }

    /// The skein factor `q - q^-1`.
    pub fn z() -> Self {
        Self::from_terms([(1, 1), (-1, -1)])
    }

    /// `(-q)^k` for any integer `k`.
    pub fn neg_q_pow(k: i32) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(sign, k)
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (C, i32)>) -> Self {
        let mut p = Self::zero();
        for (c, e) in terms {
            p.add_term(c.into(), e);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// If `self` is a single term, returns it as `(coefficient, exponent)`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i32)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// Adds `coeff * q^exp` in place.
    pub fn add_term(&mut self, coeff: BigInt, exp: i32) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `coeff * q^exp * other` in place.
    pub fn add_scaled(&mut self, other: &LaurentPoly, coeff: i64, exp: i32) {
        if coeff == 0 {
            return;
        }
        let c = BigInt::from(coeff);
        for (e, v) in &other.terms {
            self.add_term(v * &c, e + exp);
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * &c)).collect(),
        }
    }

    /// Substitutes `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^k`. Used to pass from the Alexander variable `t` to
    /// `q` via `t = q^2`.
    pub fn substitute_power(&self, k: i32) -> Self {
        assert!(k != 0, "substitution q -> q^0 collapses the ring");
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`, the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division. Returns `None` unless `divisor` divides `self` in the
    /// Laurent ring `Z[q, q^-1]` with integer quotient coefficients.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_lo = divisor.min_exp()?;
        let d_hi = divisor.max_exp()?;
        let lead = divisor.terms[&d_hi].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Long division on the leading term; the remainder's span shrinks every
        // step and must vanish once it is narrower than the divisor.
        while let (Some(r_lo), Some(r_hi)) = (rem.min_exp(), rem.max_exp()) {
            if r_hi - r_lo < d_hi - d_lo {
                return None;
            }
            let rc = &rem.terms[&r_hi];
            if (rc % &lead) != BigInt::zero() {
                return None;
            }
            let c = rc / &lead;
            let e = r_hi - d_hi;
            for (de, dc) in &divisor.terms {
                rem.add_term(-(dc * &c), de + e);
            }
            quot.add_term(c, e);
        }
        Some(quot)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Canonical text: increasing exponent, e.g. `-q^-2 + 3 - q^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if *e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the canonical form and minor variations: terms in any order,
    /// optional `*` between coefficient and `q`, and free whitespace.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |pos: usize, msg: &str| Error::Syntax {
            pos,
            msg: format!("polynomial: {msg}"),
        };
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(err(0, "empty input"));
        }
        let mut out = LaurentPoly::zero();
        let mut i = 0;
        let mut first = true;
        while i < chars.len() {
            let start = chars[i].0;
            let mut sign = BigInt::one();
            match chars[i].1 {
                '+' => i += 1,
                '-' => {
                    sign = -sign;
                    i += 1;
                }
                _ if first => {}
                _ => return Err(err(start, "expected '+' or '-'")),
            }
            first = false;
            let digits_from = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[digits_from..i].iter().map(|(_, c)| *c).collect();
            let coeff = if digits.is_empty() {
                None
            } else {
                Some(digits.parse::<BigInt>().map_err(|_| err(start, "bad coefficient"))?)
            };
            if i < chars.len() && chars[i].1 == '*' {
                if coeff.is_none() {
                    return Err(err(chars[i].0, "'*' without coefficient"));
                }
                i += 1;
                if i >= chars.len() || chars[i].1 != 'q' {
                    return Err(err(start, "expected 'q' after '*'"));
                }
            }
            let mut exp = 0i32;
            if i < chars.len() && chars[i].1 == 'q' {
                i += 1;
                exp = 1;
                if i < chars.len() && chars[i].1 == '^' {
                    i += 1;
                    let e_from = i;
                    if i < chars.len() && chars[i].1 == '-' {
                        i += 1;
                    }
                    while i < chars.len() && chars[i].1.is_ascii_digit() {
                        i += 1;
                    }
                    let e: String = chars[e_from..i].iter().map(|(_, c)| *c).collect();
                    exp = e.parse().map_err(|_| err(start, "bad exponent"))?;
                }
            } else if coeff.is_none() {
                return Err(err(start, "expected a term"));
            }
            out.add_term(sign * coeff.unwrap_or_else(BigInt::one), exp);
        }
        Ok(out)
    }
}

/// JSON form `[[exponent, coefficient], ...]` sorted by exponent. A coefficient
/// outside the `i64` range is written as a decimal string.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&(e, v))?,
                None => seq.serialize_element(&(e, c.to_string()))?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Text(String),
        }
        let raw: Vec<(i32, Coeff)> = Vec::deserialize(deserializer)?;
        let mut out = LaurentPoly::zero();
        let mut last = None;
        for (e, c) in raw {
            if last.is_some_and(|l| l >= e) {
                return Err(de::Error::custom("exponents must be strictly increasing"));
            }
            last = Some(e);
            let c = match c {
                Coeff::Int(v) => BigInt::from(v),
                Coeff::Text(s) => s.parse().map_err(de::Error::custom)?,
            };
            if c.is_zero() {
                return Err(de::Error::custom("zero coefficient in canonical form"));
            }
            out.add_term(c, e);
        }
        Ok(out)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ca * cb, ea + eb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(c.clone(), *e);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(-c, *e);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}
