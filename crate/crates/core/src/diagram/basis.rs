use super::compose::{compose, LocalPiece};
use super::{ClassVector, DiagramVector, FlatDiagram, Slot, Subset, MAX_POINTS};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Partition function of `x` glued against the mirror image of `y`.
///
/// Gluing `x` to `mirror(y)` along the boundary circle identifies point `i` of
/// `x` with point `i` of `y`, so the closed picture is traced directly on
/// matching indices. For dotted basis diagrams the value is in `{-1, 0, 1}`.
pub fn glue_evaluate(x: &FlatDiagram, y: &FlatDiagram) -> Result<i8> {
    let n = x.boundary_count();
    if n != y.boundary_count() {
        return Err(Error::BoundaryMismatch { left: n, right: y.boundary_count() });
    }
    let outer = LocalPiece::new(n, 0, y.slots().to_vec());
    Ok(compose(x, 0, &outer).map_or(0, |(s, _)| s))
}

/// The bilinear form extending [`glue_evaluate`]. Coefficients are integer
/// Laurent polynomials, on which conjugation is the identity.
pub fn inner_product(v: &DiagramVector, w: &DiagramVector) -> Result<LaurentPoly> {
    if v.boundary_count() != w.boundary_count() {
        return Err(Error::BoundaryMismatch { left: v.boundary_count(), right: w.boundary_count() });
    }
    let mut acc = LaurentPoly::zero();
    for (x, a) in v.iter() {
        for (y, b) in w.iter() {
            let g = glue_evaluate(x, y)?;
            if g != 0 {
                acc += &(a * b).scale(g);
            }
        }
    }
    Ok(acc)
}

/// Rewrites every dotted chord as `chord - (two ticks)`.
pub fn expand_dots(d: &FlatDiagram) -> DiagramVector {
    let dotted: Vec<_> = d.chords().into_iter().filter(|c| c.dotted).collect();
    let mut out = DiagramVector::zero(d.boundary_count());
    for choice in 0u64..1 << dotted.len() {
        let mut slots = d.slots().to_vec();
        let mut sign = 1i64;
        for (j, c) in dotted.iter().enumerate() {
            let (a, b) = (c.a - 1, c.b - 1);
            if choice >> j & 1 == 1 {
                slots[a] = Slot::Tick;
                slots[b] = Slot::Tick;
                sign = -sign;
            } else {
                slots[a] = Slot::Chord { to: b as u32, dotted: false };
                slots[b] = Slot::Chord { to: a as u32, dotted: false };
            }
        }
        out.add_monomial(FlatDiagram::from_slots(slots), sign, 0);
    }
    out
}

/// All noncrossing partial matchings of `n` points with the unmatched points
/// ticked; there are Motzkin-many of them.
pub fn enumerate_basis(n: usize) -> Vec<FlatDiagram> {
    fn fill(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        // `lo` is either ticked, or matched with some `k` splitting the rest.
        let mut out = fill(lo + 1, hi);
        for k in lo + 1..hi {
            for inside in fill(lo + 1, k) {
                for outside in fill(k + 1, hi) {
                    let mut m = Vec::with_capacity(1 + inside.len() + outside.len());
                    m.push((lo, k));
                    m.extend_from_slice(&inside);
                    m.extend_from_slice(&outside);
                    out.push(m);
                }
            }
        }
        out
    }
    fill(0, n)
        .into_iter()
        .map(|m| {
            let mut slots = vec![Slot::Tick; n];
            for (a, b) in m {
                slots[a] = Slot::Chord { to: b as u32, dotted: false };
                slots[b] = Slot::Chord { to: a as u32, dotted: false };
            }
            FlatDiagram::from_slots(slots)
        })
        .collect()
}

/// [`enumerate_basis`] with every chord dotted.
pub fn enumerate_dotted_basis(n: usize) -> Vec<FlatDiagram> {
    enumerate_basis(n).iter().map(|d| d.with_dots(true)).collect()
}

/// The fixed representative of the class of dotted basis diagrams whose dotted
/// endpoints are `s`: the points of `s` matched as nested parentheses (first
/// with last, second with second-to-last, ...), everything else ticked.
pub fn canonical_rep(s: Subset, n: usize) -> Result<FlatDiagram> {
    if n > MAX_POINTS {
        return Err(Error::TooManyPoints { max: MAX_POINTS, got: n });
    }
    if s.len() % 2 == 1 {
        return Err(Error::OddSubset(s.len()));
    }
    if s.max_point() > n {
        return Err(Error::IndexOutOfRange { index: s.max_point() as i64, max: n as i64 });
    }
    Ok(rainbow(s, n))
}

pub(crate) fn rainbow(s: Subset, n: usize) -> FlatDiagram {
    let pts: Vec<usize> = (0..n).filter(|i| s.bits() >> i & 1 == 1).collect();
    let mut slots = vec![Slot::Tick; n];
    let len = pts.len();
    for i in 0..len / 2 {
        let (a, b) = (pts[i], pts[len - 1 - i]);
        slots[a] = Slot::Chord { to: b as u32, dotted: true };
        slots[b] = Slot::Chord { to: a as u32, dotted: true };
    }
    FlatDiagram::from_slots(slots)
}

/// Sign `e` with `D = e * canonical_rep(S)` in the quotient, for a perfect
/// dotted matching `partner` on the points of `S` (0-based; entries outside
/// `S` are ignored). Equal to `(-1)^(|S|/2) <D, C_S>`: the union of `D` and
/// `C_S` closes into dotted loops worth `-1` each.
fn sign_against_rainbow(bits: u64, partner: &[usize]) -> i8 {
    let pts: Vec<usize> = (0..partner.len()).filter(|i| bits >> i & 1 == 1).collect();
    let len = pts.len();
    let mut rank = vec![usize::MAX; partner.len()];
    for (r, &p) in pts.iter().enumerate() {
        rank[p] = r;
    }
    let mut seen = vec![false; len];
    let mut loops = 0usize;
    for start in 0..len {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut r = start;
        loop {
            seen[r] = true;
            let via_d = rank[partner[pts[r]]];
            seen[via_d] = true;
            r = len - 1 - via_d;
            if r == start {
                break;
            }
        }
    }
    if (len / 2 + loops).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Coordinates of a single diagram in the canonical basis. Undotted chords are
/// first split as `dotted chord + two ticks`; each resulting dotted basis
/// diagram then equals its class representative up to sign.
pub fn reduce(d: &FlatDiagram) -> Vec<(Subset, i8)> {
    let n = d.boundary_count();
    let mut partner = vec![usize::MAX; n];
    let mut base = 0u64;
    let mut undotted = Vec::new();
    for (i, s) in d.slots().iter().enumerate() {
        if let Slot::Chord { to, dotted } = *s {
            partner[i] = to as usize;
            if dotted {
                base |= 1 << i;
            } else if (to as usize) > i {
                undotted.push((i, to as usize));
            }
        }
    }
    let mut out = Vec::with_capacity(1 << undotted.len());
    for choice in 0u64..1 << undotted.len() {
        let mut bits = base;
        for (j, &(a, b)) in undotted.iter().enumerate() {
            if choice >> j & 1 == 1 {
                bits |= 1 << a | 1 << b;
            }
        }
        out.push((Subset::from_bits(bits), sign_against_rainbow(bits, &partner)));
    }
    out
}

/// Coordinates of the image of `v` in the quotient algebra.
pub fn coordinates(v: &DiagramVector) -> ClassVector {
    let mut out = ClassVector::zero(v.boundary_count());
    for (d, c) in v.iter() {
        for (s, e) in reduce(d) {
            out.add_unchecked(s, &c.scale(e));
        }
    }
    out
}

/// Same as [`coordinates`], computed as `c_S = (-1)^(|S|/2) <v, C_S>` over all
/// even subsets. Exponential in `n`; meant as a cross-check.
pub fn coordinates_via_inner_products(v: &DiagramVector) -> Result<ClassVector> {
    let n = v.boundary_count();
    let mut out = ClassVector::zero(n);
    for s in Subset::even_subsets(n) {
        let rep = DiagramVector::from_diagram(rainbow(s, n));
        let ip = inner_product(v, &rep)?;
        let sign = if s.len() / 2 % 2 == 0 { 1 } else { -1 };
        out.add_unchecked(s, &ip.scale(sign));
    }
    Ok(out)
}

/// `sum_S c_S * canonical_rep(S)`.
pub fn reconstruct(cv: &ClassVector) -> DiagramVector {
    let n = cv.boundary_count();
    let mut out = DiagramVector::zero(n);
    for (s, c) in cv.iter() {
        out.add_unchecked(rainbow(s, n), c);
    }
    out
}

/// The element of the four-point space whose vanishing defines the quotient:
/// the sum of the two dotted perfect matchings.
pub fn saddle_element() -> DiagramVector {
    let a = FlatDiagram::new(4, &[(1, 2, true), (3, 4, true)], &[]).expect("valid");
    let b = FlatDiagram::new(4, &[(1, 4, true), (2, 3, true)], &[]).expect("valid");
    let mut v = DiagramVector::from_diagram(a);
    v.add_unchecked(b, &LaurentPoly::one());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(s: &str) -> FlatDiagram {
        s.parse().unwrap()
    }

    fn set(p: &[usize]) -> Subset {
        Subset::from_points(p).unwrap()
    }

    /// Brute force: every involution-with-fixed-points on `n` points, keeping
    /// the noncrossing ones.
    fn brute_force_partial_matchings(n: usize) -> usize {
        fn go(free: &mut Vec<bool>, pairs: &mut Vec<(usize, usize)>, n: usize) -> usize {
            let Some(i) = free.iter().position(|f| *f) else {
                let ok = pairs.iter().all(|&(a, b)| {
                    pairs.iter().all(|&(c, e)| !((a < c && c < b && b < e) || (c < a && a < e && e < b)))
                });
                return ok as usize;
            };
            free[i] = false;
            let mut total = go(free, pairs, n);
            for j in i + 1..n {
                if free[j] {
                    free[j] = false;
                    pairs.push((i, j));
                    total += go(free, pairs, n);
                    pairs.pop();
                    free[j] = true;
                }
            }
            free[i] = true;
            total
        }
        go(&mut vec![true; n], &mut Vec::new(), n)
    }

    #[test]
    fn basis_counts_match_brute_force() {
        // Motzkin numbers
        let expected = [1usize, 1, 2, 4, 9, 21, 51, 127, 323];
        for (n, &m) in expected.iter().enumerate() {
            assert_eq!(brute_force_partial_matchings(n), m);
            assert_eq!(enumerate_basis(n).len(), m);
            assert_eq!(enumerate_dotted_basis(n).len(), m);
        }
        assert_eq!(enumerate_basis(0), vec![FlatDiagram::empty()]);
        let two = enumerate_basis(2);
        assert!(two.contains(&d("n=2; chords=(1,2); ticks=")));
        assert!(two.contains(&d("n=2; chords=; ticks=1,2")));
    }

    #[test]
    fn glue_examples() {
        let chord = d("n=2; chords=(1,2); ticks=");
        let dotted = d("n=2; chords=(1,2)*; ticks=");
        let ticks = d("n=2; chords=; ticks=1,2");
        assert_eq!(glue_evaluate(&chord, &chord), Ok(0));
        assert_eq!(glue_evaluate(&dotted, &dotted), Ok(-1));
        assert_eq!(glue_evaluate(&dotted, &ticks), Ok(0));
        assert_eq!(glue_evaluate(&chord, &ticks), Ok(1));
        assert_eq!(glue_evaluate(&ticks, &ticks), Ok(1));
        assert!(glue_evaluate(&chord, &FlatDiagram::all_ticks(4)).is_err());
    }

    #[test]
    fn expand_dots_examples() {
        let one = expand_dots(&d("n=2; chords=(1,2)*; ticks="));
        assert_eq!(one.len(), 2);
        assert_eq!(one.get(&d("n=2; chords=(1,2); ticks=")), LaurentPoly::one());
        assert_eq!(one.get(&d("n=2; chords=; ticks=1,2")), LaurentPoly::from(-1));
        let none = d("n=3; chords=(1,2); ticks=3");
        assert_eq!(expand_dots(&none), DiagramVector::from_diagram(none.clone()));
        let two = expand_dots(&d("n=4; chords=(1,2)*,(3,4)*; ticks="));
        assert_eq!(two.len(), 4);
        assert_eq!(two.get(&d("n=4; chords=(1,2),(3,4); ticks=")), LaurentPoly::one());
        assert_eq!(two.get(&d("n=4; chords=(3,4); ticks=1,2")), LaurentPoly::from(-1));
        assert_eq!(two.get(&d("n=4; chords=(1,2); ticks=3,4")), LaurentPoly::from(-1));
        assert_eq!(two.get(&FlatDiagram::all_ticks(4)), LaurentPoly::one());
    }

    #[test]
    fn canonical_rep_examples() {
        assert_eq!(canonical_rep(set(&[1, 2, 3, 4]), 4).unwrap(), d("n=4; chords=(1,4)*,(2,3)*; ticks="));
        assert_eq!(canonical_rep(Subset::EMPTY, 2).unwrap(), d("n=2; chords=; ticks=1,2"));
        assert_eq!(canonical_rep(set(&[1, 2]), 4).unwrap(), d("n=4; chords=(1,2)*; ticks=3,4"));
        assert_eq!(canonical_rep(set(&[1, 2, 3]), 4), Err(Error::OddSubset(3)));
        assert!(canonical_rep(set(&[1, 6]), 4).is_err());
    }

    #[test]
    fn coordinates_examples() {
        let chord = DiagramVector::from_diagram(d("n=2; chords=(1,2); ticks="));
        let c = coordinates(&chord);
        assert_eq!(c.len(), 2);
        assert_eq!(c.get(set(&[1, 2])), LaurentPoly::one());
        assert_eq!(c.get(Subset::EMPTY), LaurentPoly::one());

        let s = set(&[1, 3, 4, 6]);
        let rep = DiagramVector::from_diagram(canonical_rep(s, 6).unwrap());
        assert_eq!(coordinates(&rep), ClassVector::basis(6, s).unwrap());

        let side = DiagramVector::from_diagram(d("n=4; chords=(1,2)*,(3,4)*; ticks="));
        let c = coordinates(&side);
        assert_eq!(c.len(), 1);
        assert_eq!(c.get(set(&[1, 2, 3, 4])), LaurentPoly::from(-1));
    }

    #[test]
    fn saddle_is_negligible() {
        let x = saddle_element();
        assert!(coordinates(&x).is_zero());
        for y in enumerate_basis(4) {
            let ip = inner_product(&x, &DiagramVector::from_diagram(y)).unwrap();
            assert!(ip.is_zero());
        }
        assert!(inner_product(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn gram_matrix_is_signed_identity() {
        for n in [0, 1, 2, 3, 4, 5, 6] {
            let subsets = Subset::even_subsets(n);
            assert_eq!(subsets.len(), if n == 0 { 1 } else { 1 << (n - 1) });
            for &s in &subsets {
                for &t in &subsets {
                    let g = glue_evaluate(&canonical_rep(s, n).unwrap(), &canonical_rep(t, n).unwrap()).unwrap();
                    let want = if s != t { 0 } else if s.len() / 2 % 2 == 0 { 1 } else { -1 };
                    assert_eq!(g, want, "n={n} S={s} T={t}");
                }
            }
        }
    }

    #[test]
    fn dotted_basis_pairing_depends_only_on_endpoints() {
        for n in 0..=6 {
            let all = enumerate_dotted_basis(n);
            for x in &all {
                for y in &all {
                    let g = glue_evaluate(x, y).unwrap();
                    assert!((-1..=1).contains(&g));
                    assert_eq!(g != 0, x.chord_endpoints() == y.chord_endpoints(), "{x} vs {y}");
                }
            }
        }
    }

    #[test]
    fn equivalent_diagrams_differ_by_the_glue_sign() {
        for n in [4, 6] {
            let all = enumerate_dotted_basis(n);
            for x in &all {
                for y in all.iter().filter(|y| y.chord_endpoints() == x.chord_endpoints()) {
                    let s = x.chord_endpoints();
                    let cx = coordinates(&DiagramVector::from_diagram(x.clone()));
                    let cy = coordinates(&DiagramVector::from_diagram(y.clone()));
                    let k = if s.len() / 2 % 2 == 0 { 1 } else { -1 };
                    let e = glue_evaluate(x, y).unwrap() * k;
                    assert_eq!(cx, cy.scale(&LaurentPoly::from(e as i64)));
                }
            }
        }
    }

    fn arb_vector(n: usize) -> impl Strategy<Value = DiagramVector> {
        let basis = enumerate_basis(n);
        let len = basis.len();
        prop::collection::vec((0..len, any::<bool>(), -3i64..4, -2i32..3), 0..6).prop_map(move |picks| {
            let mut v = DiagramVector::zero(n);
            for (i, dot, c, e) in picks {
                let d = if dot { basis[i].with_dots(true) } else { basis[i].clone() };
                v.add_unchecked(d, &LaurentPoly::monomial(c, e));
            }
            v
        })
    }

    proptest! {
        #[test]
        fn coordinate_routes_agree(v in arb_vector(5)) {
            prop_assert_eq!(coordinates(&v), coordinates_via_inner_products(&v).unwrap());
        }

        #[test]
        fn coordinates_are_linear(v in arb_vector(4), w in arb_vector(4), a in -3i64..3, b in -2i32..2) {
            let sa = LaurentPoly::monomial(a, b);
            let sb = LaurentPoly::z();
            let lhs = coordinates(&v.scale(&sa).add(&w.scale(&sb)).unwrap());
            let rhs = coordinates(&v).scale(&sa).add(&coordinates(&w).scale(&sb)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reconstruction_round_trips(v in arb_vector(6)) {
            let c = coordinates(&v);
            prop_assert_eq!(coordinates(&reconstruct(&c)), c);
        }

        #[test]
        fn mirror_preserves_pairing(v in arb_vector(5), w in arb_vector(5)) {
            let mv = DiagramVector::from_terms(5, v.iter().map(|(d, c)| (d.mirror(), c.clone()))).unwrap();
            let mw = DiagramVector::from_terms(5, w.iter().map(|(d, c)| (d.mirror(), c.clone()))).unwrap();
            prop_assert_eq!(inner_product(&v, &w).unwrap(), inner_product(&mv, &mw).unwrap());
            prop_assert_eq!(inner_product(&v, &w).unwrap(), inner_product(&w, &v).unwrap());
        }
    }
}
