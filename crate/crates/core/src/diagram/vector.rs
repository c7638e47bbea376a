use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{FlatDiagram, MAX_POINTS};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// A subset of boundary points `{1..=n}`, stored as a bit mask (bit `i` is
/// point `i + 1`). Ordered by size, then lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// From 1-based points.
    pub fn from_points(points: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &p in points {
            if p == 0 || p > MAX_POINTS {
                return Err(Error::IndexOutOfRange { index: p as i64, max: MAX_POINTS as i64 });
            }
            bits |= 1 << (p - 1);
        }
        Ok(Self(bits))
    }

    /// 1-based points, increasing.
    pub fn points(self) -> Vec<usize> {
        (0..64).filter(|i| self.0 >> i & 1 == 1).map(|i| i + 1).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, point: usize) -> bool {
        (1..=64).contains(&point) && self.0 >> (point - 1) & 1 == 1
    }

    pub fn max_point(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// All even-cardinality subsets of `{1..=n}`, in [`Ord`] order.
    pub fn even_subsets(n: usize) -> Vec<Subset> {
        assert!(n <= 30, "enumerating 2^{n} subsets is not supported");
        let mut out: Vec<Subset> = (0u64..1 << n)
            .filter(|b| b.count_ones() % 2 == 0)
            .map(Subset)
            .collect();
        out.sort();
        out
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            // Lexicographic on increasing point lists: the first difference
            // decides, and whoever holds the lower differing point is smaller.
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A Laurent-weighted formal sum of diagrams sharing one boundary size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagramVector {
    n: usize,
    terms: BTreeMap<FlatDiagram, LaurentPoly>,
}

impl DiagramVector {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: FlatDiagram) -> Self {
        let mut v = Self::zero(d.boundary_count());
        v.terms.insert(d, LaurentPoly::one());
        v
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (FlatDiagram, LaurentPoly)>) -> Result<Self> {
        let mut v = Self::zero(n);
        for (d, c) in terms {
            v.add_term(d, &c)?;
        }
        Ok(v)
    }

    pub fn boundary_count(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, d: FlatDiagram, coeff: &LaurentPoly) -> Result<()> {
        if d.boundary_count() != self.n {
            return Err(Error::BoundaryMismatch { left: self.n, right: d.boundary_count() });
        }
        self.add_unchecked(d, coeff);
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, d: FlatDiagram, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn add_monomial(&mut self, d: FlatDiagram, coeff: i64, exp: i32) {
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(LaurentPoly::monomial(coeff, exp));
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_term(coeff.into(), exp);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn get(&self, d: &FlatDiagram) -> LaurentPoly {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FlatDiagram, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (d, v) in &self.terms {
            out.add_unchecked(d.clone(), &(v * c));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::BoundaryMismatch { left: self.n, right: other.n });
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_unchecked(d.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::from(-1)))
    }
}

impl fmt::Display for DiagramVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 (n={})", self.n);
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "({c}) [{d}]")?;
        }
        Ok(())
    }
}

/// Coordinates of an element of the quotient algebra on `n` points in the
/// canonical basis, keyed by even subsets of the boundary.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassVector {
    n: usize,
    coords: BTreeMap<Subset, LaurentPoly>,
}

impl ClassVector {
    pub fn zero(n: usize) -> Self {
        Self { n, coords: BTreeMap::new() }
    }

    pub fn basis(n: usize, s: Subset) -> Result<Self> {
        let mut v = Self::zero(n);
        v.add_coord(s, &LaurentPoly::one())?;
        Ok(v)
    }

    pub fn boundary_count(&self) -> usize {
        self.n
    }

    pub fn add_coord(&mut self, s: Subset, c: &LaurentPoly) -> Result<()> {
        if s.len() % 2 == 1 {
            return Err(Error::OddSubset(s.len()));
        }
        if s.max_point() > self.n {
            return Err(Error::IndexOutOfRange { index: s.max_point() as i64, max: self.n as i64 });
        }
        self.add_unchecked(s, c);
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, s: Subset, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coords.entry(s) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn get(&self, s: Subset) -> LaurentPoly {
        self.coords.get(&s).cloned().unwrap_or_default()
    }

    /// Nonzero coordinates in subset order.
    pub fn iter(&self) -> impl Iterator<Item = (Subset, &LaurentPoly)> + '_ {
        self.coords.iter().map(|(s, c)| (*s, c))
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (s, v) in &self.coords {
            out.add_unchecked(*s, &(v * c));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::BoundaryMismatch { left: self.n, right: other.n });
        }
        let mut out = self.clone();
        for (s, c) in &other.coords {
            out.add_unchecked(*s, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::from(-1)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("class vectors always serialize")
    }
}

/// One `S={i,j,...}: <poly>` line per nonzero coordinate.
impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.coords.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "S={s}: {c}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CoordJson {
    subset: Vec<usize>,
    value: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct ClassVectorJson {
    boundary_count: usize,
    coords: Vec<CoordJson>,
}

impl Serialize for ClassVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ClassVectorJson {
            boundary_count: self.n,
            coords: self
                .coords
                .iter()
                .map(|(s, c)| CoordJson { subset: s.points(), value: c.clone() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ClassVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = ClassVectorJson::deserialize(deserializer)?;
        let mut v = ClassVector::zero(j.boundary_count);
        for c in j.coords {
            let s = Subset::from_points(&c.subset).map_err(D::Error::custom)?;
            if c.value.is_zero() {
                return Err(D::Error::custom("zero coordinate"));
            }
            v.add_coord(s, &c.value).map_err(D::Error::custom)?;
        }
        Ok(v)
    }
}
