//! Crossingless diagrams in a disk and the two diagram algebras built on them.
//!
//! Boundary points are numbered `1..=n` clockwise starting just after the
//! basepoint, which sits at the far left of the disk. A strand either joins two
//! boundary points (a *chord*, optionally dotted) or runs from one boundary
//! point to an interior univalent vertex (a *tick*). Closed loops and strands
//! with both ends in the interior are evaluated away whenever diagrams are
//! glued, so they never appear in a stored [`FlatDiagram`]:
//!
//! * an undotted loop is zero, a loop carrying any dots is `-1`;
//! * an undotted interior arc is `1`, a dotted strand with an interior end is zero;
//! * a dotted strand is `strand - (two ticks)`, and two dots equal one dot.
//!
//! The quotient algebra additionally kills the sum of the two dotted perfect
//! matchings on four points (see [`saddle_element`]). Its space on `n` points
//! has the canonical basis [`canonical_rep`] indexed by even subsets of the
//! boundary; [`coordinates`] expresses any [`DiagramVector`] in that basis.

mod basis;
mod compose;
mod vector;

pub use basis::{
    canonical_rep, coordinates, coordinates_via_inner_products, enumerate_basis,
    enumerate_dotted_basis, expand_dots, glue_evaluate, inner_product, reconstruct, reduce,
    saddle_element,
};
pub(crate) use basis::rainbow;
pub(crate) use compose::{compose, LocalPiece};
pub use vector::{ClassVector, DiagramVector, Subset};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported boundary size; subsets are stored as `u64` bit masks.
pub const MAX_POINTS: usize = 64;

/// What a boundary point is attached to. Indices are 0-based internally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Tick,
    Chord { to: u32, dotted: bool },
}

/// A chord between boundary points `a < b` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Chord {
    pub a: usize,
    pub b: usize,
    pub dotted: bool,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlatDiagram {
    slots: Vec<Slot>,
}

impl FlatDiagram {
    /// Builds and validates a diagram from 1-based chords `(a, b, dotted)` and
    /// ticked points.
    pub fn new(n: usize, chords: &[(usize, usize, bool)], ticks: &[usize]) -> Result<Self> {
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints { max: MAX_POINTS, got: n });
        }
        let mut slots: Vec<Option<Slot>> = vec![None; n];
        let mut claim = |p: usize, s: Slot| -> Result<()> {
            if p == 0 || p > n {
                return Err(Error::InvalidDiagram(format!("point {p} outside 1..={n}")));
            }
            if slots[p - 1].replace(s).is_some() {
                return Err(Error::InvalidDiagram(format!("point {p} used twice")));
            }
            Ok(())
        };
        for &(a, b, dotted) in chords {
            if a == b {
                return Err(Error::InvalidDiagram(format!("chord ({a},{b}) is degenerate")));
            }
            claim(a, Slot::Chord { to: b.wrapping_sub(1) as u32, dotted })?;
            claim(b, Slot::Chord { to: a.wrapping_sub(1) as u32, dotted })?;
        }
        for &t in ticks {
            claim(t, Slot::Tick)?;
        }
        let slots = slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| Error::InvalidDiagram(format!("point {} is unattached", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        let d = Self { slots };
        let cs = d.chords();
        for (i, x) in cs.iter().enumerate() {
            for y in &cs[i + 1..] {
                if chords_cross(x, y) {
                    return Err(Error::InvalidDiagram(format!(
                        "chords ({},{}) and ({},{}) cross",
                        x.a, x.b, y.a, y.b
                    )));
                }
            }
        }
        Ok(d)
    }

    pub fn empty() -> Self {
        Self { slots: Vec::new() }
    }

    pub fn all_ticks(n: usize) -> Self {
        Self { slots: vec![Slot::Tick; n] }
    }

    /// Caller guarantees a valid planar diagram.
    pub(crate) fn from_slots(slots: Vec<Slot>) -> Self {
        debug_assert!(slots.iter().enumerate().all(|(i, s)| match *s {
            Slot::Tick => true,
            Slot::Chord { to, dotted } => {
                slots[to as usize] == Slot::Chord { to: i as u32, dotted }
            }
        }));
        Self { slots }
    }

    pub(crate) fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn boundary_count(&self) -> usize {
        self.slots.len()
    }

    /// Chords in increasing order of their first endpoint, 1-based.
    pub fn chords(&self) -> Vec<Chord> {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(i, s)| match *s {
                Slot::Chord { to, dotted } if (to as usize) > i => Some(Chord {
                    a: i + 1,
                    b: to as usize + 1,
                    dotted,
                }),
                _ => None,
            })
            .collect()
    }

    /// Ticked points, 1-based and increasing.
    pub fn ticks(&self) -> Vec<usize> {
        self.slots
            .iter()
            .enumerate()
            .filter(|(_, s)| matches!(s, Slot::Tick))
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn dot_count(&self) -> usize {
        self.chords().iter().filter(|c| c.dotted).count()
    }

    /// True when every chord is dotted, which makes this a dotted basis diagram.
    pub fn is_dotted_basis(&self) -> bool {
        self.slots
            .iter()
            .all(|s| !matches!(s, Slot::Chord { dotted: false, .. }))
    }

    /// The set of chord endpoints (dotted or not).
    pub fn chord_endpoints(&self) -> Subset {
        let mut bits = 0u64;
        for (i, s) in self.slots.iter().enumerate() {
            if matches!(s, Slot::Chord { .. }) {
                bits |= 1 << i;
            }
        }
        Subset::from_bits(bits)
    }

    /// Reflection fixing the basepoint: point `i` goes to `n + 1 - i`.
    pub fn mirror(&self) -> Self {
        let n = self.slots.len();
        let mut slots = vec![Slot::Tick; n];
        for (i, s) in self.slots.iter().enumerate() {
            slots[n - 1 - i] = match *s {
                Slot::Tick => Slot::Tick,
                Slot::Chord { to, dotted } => Slot::Chord {
                    to: (n - 1 - to as usize) as u32,
                    dotted,
                },
            };
        }
        Self { slots }
    }

    /// Same diagram with every chord dotted (or undotted).
    pub fn with_dots(&self, dotted: bool) -> Self {
        Self {
            slots: self
                .slots
                .iter()
                .map(|s| match *s {
                    Slot::Tick => Slot::Tick,
                    Slot::Chord { to, .. } => Slot::Chord { to, dotted },
                })
                .collect(),
        }
    }
}

fn chords_cross(x: &Chord, y: &Chord) -> bool {
    (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b)
}

impl fmt::Display for FlatDiagram {
    /// `n=4; chords=(1,4)*,(2,3)*; ticks=`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; chords=", self.boundary_count())?;
        for (i, c) in self.chords().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", c.a, c.b)?;
            if c.dotted {
                f.write_str("*")?;
            }
        }
        f.write_str("; ticks=")?;
        for (i, t) in self.ticks().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FlatDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for FlatDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let syntax = |msg: String| Error::Syntax { pos: 0, msg };
        let mut n = None;
        let mut chords = Vec::new();
        let mut ticks = Vec::new();
        for part in s.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| syntax(format!("expected key=value, got {part:?}")))?;
            let value: String = value.chars().filter(|c| !c.is_whitespace()).collect();
            match key.trim() {
                "n" => n = Some(value.parse::<usize>().map_err(|e| syntax(format!("n: {e}")))?),
                "chords" => {
                    let mut rest = value.as_str();
                    while !rest.is_empty() {
                        rest = rest.strip_prefix(',').unwrap_or(rest);
                        let body = rest
                            .strip_prefix('(')
                            .ok_or_else(|| syntax(format!("chord must start with '(' in {value:?}")))?;
                        let close = body.find(')').ok_or_else(|| syntax("unclosed chord".into()))?;
                        let (a, b) = body[..close]
                            .split_once(',')
                            .ok_or_else(|| syntax("chord needs two endpoints".into()))?;
                        let a = a.parse().map_err(|e| syntax(format!("chord endpoint: {e}")))?;
                        let b = b.parse().map_err(|e| syntax(format!("chord endpoint: {e}")))?;
                        rest = &body[close + 1..];
                        let dotted = rest.starts_with('*');
                        if dotted {
                            rest = &rest[1..];
                        }
                        chords.push((a, b, dotted));
                    }
                }
                "ticks" => {
                    for t in value.split(',').filter(|t| !t.is_empty()) {
                        ticks.push(t.parse().map_err(|e| syntax(format!("tick: {e}")))?);
                    }
                }
                other => return Err(syntax(format!("unknown key {other:?}"))),
            }
        }
        let n = n.ok_or_else(|| syntax("missing n=".into()))?;
        FlatDiagram::new(n, &chords, &ticks)
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    n: usize,
    chords: Vec<Chord>,
    ticks: Vec<usize>,
}

impl Serialize for FlatDiagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramJson {
            n: self.boundary_count(),
            chords: self.chords(),
            ticks: self.ticks(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FlatDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let j = DiagramJson::deserialize(deserializer)?;
        let chords: Vec<_> = j.chords.iter().map(|c| (c.a, c.b, c.dotted)).collect();
        FlatDiagram::new(j.n, &chords, &j.ticks).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> FlatDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn notation_round_trip() {
        let x = d("n=4; chords=(1,4)*,(2,3)*; ticks=");
        assert_eq!(x.to_string(), "n=4; chords=(1,4)*,(2,3)*; ticks=");
        let y = d("n=5; chords=(2,3); ticks=1,4,5");
        assert_eq!(y.to_string().parse::<FlatDiagram>().unwrap(), y);
        let json = serde_json::to_string(&y).unwrap();
        assert_eq!(serde_json::from_str::<FlatDiagram>(&json).unwrap(), y);
        assert_eq!(d("n=0; chords=; ticks=").boundary_count(), 0);
    }

    #[test]
    fn rejects_invalid_diagrams() {
        assert!("n=4; chords=(1,3),(2,4); ticks=".parse::<FlatDiagram>().is_err());
        assert!("n=3; chords=(1,2); ticks=".parse::<FlatDiagram>().is_err());
        assert!("n=2; chords=(1,2); ticks=1".parse::<FlatDiagram>().is_err());
        assert!("n=2; chords=(1,1); ticks=2".parse::<FlatDiagram>().is_err());
        assert!("n=2; chords=(1,3); ticks=2".parse::<FlatDiagram>().is_err());
        assert!("chords=(1,2); ticks=".parse::<FlatDiagram>().is_err());
        assert!(FlatDiagram::new(65, &[], &(1..=65).collect::<Vec<_>>()).is_err());
    }

    #[test]
    fn mirror_examples() {
        let t = d("n=2; chords=; ticks=1,2");
        assert_eq!(t.mirror(), t);
        let x = d("n=4; chords=(1,2); ticks=3,4");
        assert_eq!(x.mirror(), d("n=4; chords=(3,4); ticks=1,2"));
        let y = d("n=6; chords=(1,6)*,(3,4); ticks=2,5");
        assert_eq!(y.mirror().mirror(), y);
        assert_eq!(y.mirror(), d("n=6; chords=(1,6)*,(3,4); ticks=2,5"));
    }
}
