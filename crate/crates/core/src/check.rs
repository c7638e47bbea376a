//! Identity suite run by `tanglex check`.
//!
//! Each check returns a [`CheckResult`] with a short detail line. The building
//! blocks ([`r2_defect`], [`r3_pair`], [`gram_matrix`], ...) are public so the
//! integration tests can assert on the underlying values.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagram::{
    canonical_rep, coordinates, enumerate_basis, enumerate_dotted_basis, expand_dots, inner_product,
    saddle_element, DiagramVector, FlatDiagram, Subset,
};
use crate::error::Result;
use crate::invariant::{alexander_polynomial, tangle_invariant};
use crate::laurent::LaurentPoly;
use crate::statesum::{evaluate_naive, evaluate_naive_with, oriented_smoothing, table, TableForm};
use crate::tangle::random::random_long_knot;
use crate::tangle::{
    apply_move, crossing_sign, kind_for_sign, random_move, turning_number, CrossingKind, Dir, Move, MorseWord,
    OrientationPattern, Rotation, Side,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed, detail: detail.into() }
    }

    fn from_result(name: &str, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((ok, detail)) => Self::new(name, ok, detail),
            Err(e) => Self::new(name, false, format!("error: {e}")),
        }
    }
}

fn dir_name(d: Dir) -> &'static str {
    match d {
        Dir::Up => "up",
        Dir::Down => "down",
    }
}

fn two_strands(left: Dir, right: Dir) -> String {
    format!("bottom 2 {} {};", dir_name(left), dir_name(right))
}

fn word(text: &str) -> MorseWord {
    text.parse().expect("suite words are well formed")
}

/// Rewrites every dotted chord as undotted diagrams.
pub fn undot(v: &DiagramVector) -> DiagramVector {
    let mut out = DiagramVector::zero(v.boundary_count());
    for (d, c) in v.iter() {
        for (e, k) in expand_dots(d).iter() {
            out.add_unchecked(e.clone(), &(k * c));
        }
    }
    out
}

/// Skein relation on a single crossing with the given strand directions.
pub fn skein_pattern(pattern: OrientationPattern) -> Result<bool> {
    let (l, r) = pattern.dirs();
    let base = two_strands(l, r);
    let pos = word(&format!("{base} {} 1;", crossing_symbol(kind_for_sign(1, pattern))));
    let neg = word(&format!("{base} {} 1;", crossing_symbol(kind_for_sign(-1, pattern))));
    let lhs = tangle_invariant(&pos)?.sub(&tangle_invariant(&neg)?)?;
    let rhs = coordinates(&DiagramVector::from_diagram(oriented_smoothing(pattern))).scale(&LaurentPoly::z());
    Ok(lhs == rhs)
}

fn crossing_symbol(kind: CrossingKind) -> &'static str {
    match kind {
        CrossingKind::Over => "x+",
        CrossingKind::Under => "x-",
    }
}

/// The four curls on an upward strand with their factors and turning numbers.
pub fn r1_curls() -> Result<Vec<(Side, CrossingKind, LaurentPoly, i32)>> {
    let strand = word("bottom 1 up;");
    let base = tangle_invariant(&strand)?;
    let mut out = Vec::new();
    for side in [Side::Left, Side::Right] {
        for kind in [CrossingKind::Over, CrossingKind::Under] {
            let c = apply_move(&strand, &Move::R1 { slice: 0, position: 1, side, kind })?;
            let v = tangle_invariant(&c)?;
            let tau = turning_number(&c)?;
            let factor = [LaurentPoly::monomial(-1, -1), LaurentPoly::monomial(-1, 1)]
                .into_iter()
                .find(|f| base.scale(f) == v)
                .unwrap_or_else(LaurentPoly::zero);
            out.push((side, kind, factor, tau));
        }
    }
    Ok(out)
}

/// Two stacked opposite crossings on strands with the given directions,
/// minus the two plain strands, in the unquotiented diagram space.
pub fn r2_defect(left: Dir, right: Dir, first: CrossingKind) -> DiagramVector {
    let base = two_strands(left, right);
    let lhs = word(&format!("{base} {} 1; {} 1;", crossing_symbol(first), crossing_symbol(first.flipped())));
    evaluate_naive(&lhs).sub(&evaluate_naive(&word(&base))).expect("same boundary")
}

/// The same move turned sideways: a capped strand from the bottom and a
/// cupped strand from the top crossing twice, minus the two separated arcs.
pub fn r2_sideways_defect(bottom: [Dir; 2], cup: Rotation, first: CrossingKind) -> DiagramVector {
    let b = format!("bottom 2 {} {};", dir_name(bottom[0]), dir_name(bottom[1]));
    let rot = match cup {
        Rotation::Cw => "cw",
        Rotation::Ccw => "ccw",
    };
    let lhs = word(&format!(
        "{b} cup 2 {rot}; {} 1; {} 3; cap 2;",
        crossing_symbol(first),
        crossing_symbol(first.flipped())
    ));
    let rhs = word(&format!("{b} cap 1; cup 1 {rot};"));
    evaluate_naive(&lhs).sub(&evaluate_naive(&rhs)).expect("same boundary")
}

/// Every R2 variant handled by [`r2_defect`] and [`r2_sideways_defect`],
/// labelled, with its defect.
pub fn r2_variants() -> Vec<(String, DiagramVector)> {
    let mut out = Vec::new();
    let dirs = [(Dir::Up, Dir::Down), (Dir::Down, Dir::Up), (Dir::Up, Dir::Up), (Dir::Down, Dir::Down)];
    for (l, r) in dirs {
        for first in [CrossingKind::Over, CrossingKind::Under] {
            let label = format!("upright {} {} {}", dir_name(l), dir_name(r), crossing_symbol(first));
            out.push((label, r2_defect(l, r, first)));
        }
    }
    for (l, r) in &dirs[..2] {
        for cup in [Rotation::Cw, Rotation::Ccw] {
            for first in [CrossingKind::Over, CrossingKind::Under] {
                let label = format!("sideways {} {} {cup:?} {}", dir_name(*l), dir_name(*r), crossing_symbol(first));
                out.push((label, r2_sideways_defect([*l, *r], cup, first)));
            }
        }
    }
    out
}

/// Writes `v` as `k * saddle` for `k` in {1, -1, 0} when possible.
pub fn saddle_multiple(v: &DiagramVector) -> Option<i64> {
    let s = undot(&saddle_element());
    let v = undot(v);
    [1i64, -1, 0].into_iter().find(|&k| s.scale(&LaurentPoly::from(k)) == v)
}

/// Both sides of the braid-like R3 move on three strands with the given
/// directions and crossings `(t1, t2, t3)` on positions 1, 2, 1.
pub fn r3_pair(dirs: [Dir; 3], kinds: [CrossingKind; 3]) -> Result<(MorseWord, MorseWord)> {
    let text = format!(
        "bottom 3 {} {} {}; {} 1; {} 2; {} 1;",
        dir_name(dirs[0]),
        dir_name(dirs[1]),
        dir_name(dirs[2]),
        crossing_symbol(kinds[0]),
        crossing_symbol(kinds[1]),
        crossing_symbol(kinds[2]),
    );
    let lhs = word(&text);
    let rhs = apply_move(&lhs, &Move::R3 { slice: 0 })?;
    Ok((lhs, rhs))
}

/// Gram matrix of the canonical representatives on `n` points, rows and
/// columns in subset order.
pub fn gram_matrix(n: usize) -> Result<(Vec<Subset>, Vec<Vec<LaurentPoly>>)> {
    let subsets = Subset::even_subsets(n);
    let reps = subsets
        .iter()
        .map(|&s| canonical_rep(s, n).map(DiagramVector::from_diagram))
        .collect::<Result<Vec<_>>>()?;
    let rows = reps
        .iter()
        .map(|a| reps.iter().map(|b| inner_product(a, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok((subsets, rows))
}

/// True when the Gram matrix is diagonal with entries `(-1)^(|S|/2)`.
pub fn gram_is_signed_identity(n: usize) -> Result<bool> {
    let (subsets, rows) = gram_matrix(n)?;
    Ok(rows.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, x)| {
            let want = if i != j {
                0
            } else if subsets[i].len() / 2 % 2 == 0 {
                1
            } else {
                -1
            };
            *x == LaurentPoly::from(want)
        })
    }))
}

/// Motzkin numbers by the standard recurrence.
pub fn motzkin(n: usize) -> u64 {
    let mut m = vec![1u64, 1];
    for k in 2..=n {
        let mut v = m[k - 1];
        for i in 0..=k - 2 {
            v += m[i] * m[k - 2 - i];
        }
        m.push(v);
    }
    m[n]
}

/// Inner products of the saddle element with every basis diagram on 4 points.
pub fn saddle_pairings() -> Result<Vec<(FlatDiagram, LaurentPoly)>> {
    let s = saddle_element();
    enumerate_basis(4)
        .into_iter()
        .map(|y| Ok((y.clone(), inner_product(&s, &DiagramVector::from_diagram(y))?)))
        .collect()
}

/// Outcome of one fuzz trial.
#[derive(Clone, Debug)]
pub struct FuzzTrial {
    pub original: MorseWord,
    pub moved: MorseWord,
    pub moves: Vec<Move>,
    pub normalized_equal: bool,
    pub raw_law_holds: bool,
}

/// Random long knots with at most `max_crossings` crossings, perturbed by one
/// to four random moves. Deterministic in `seed`.
pub fn fuzz_trials(trials: usize, seed: u64, max_crossings: usize) -> Result<Vec<FuzzTrial>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    while out.len() < trials {
        let t = random_long_knot(&mut rng, 10, 4);
        if t.crossing_count() > max_crossings {
            continue;
        }
        let before = alexander_polynomial(&t)?;
        let mut moved = t.clone();
        let mut moves = Vec::new();
        for _ in 0..rand::Rng::gen_range(&mut rng, 1..=4) {
            let (m, next) = random_move(&moved, &mut rng);
            moves.push(m);
            moved = next;
        }
        let after = alexander_polynomial(&moved)?;
        let ratio = LaurentPoly::neg_q_pow(after.tau - before.tau);
        out.push(FuzzTrial {
            raw_law_holds: after.delta == &before.delta * &ratio,
            normalized_equal: after.alexander == before.alexander,
            original: t,
            moved,
            moves,
        });
    }
    Ok(out)
}

fn check_tables() -> CheckResult {
    let z = LaurentPoly::z();
    let mut ok = true;
    for p in OrientationPattern::all() {
        for form in [TableForm::Undotted, TableForm::Dotted] {
            let pos = table(1, p, form);
            let neg = table(-1, p, form);
            let diff = pos.expanded().sub(&neg.expanded()).expect("four points");
            ok &= diff == DiagramVector::from_diagram(oriented_smoothing(p)).scale(&z);
            ok &= pos.terms.len() == if form == TableForm::Undotted { 7 } else { 5 };
        }
        for sign in [1, -1] {
            ok &= table(sign, p, TableForm::Dotted).expanded() == table(sign, p, TableForm::Undotted).to_vector();
        }
    }
    CheckResult::new("crossing tables", ok, "7 and 5 terms; difference is z times the smoothing; dots expand to the 7-term form")
}

fn check_skein() -> CheckResult {
    let r = OrientationPattern::all()
        .into_iter()
        .map(skein_pattern)
        .collect::<Result<Vec<_>>>()
        .map(|v| (v.iter().all(|&b| b), "all four orientation patterns".to_string()));
    CheckResult::from_result("skein relation", r)
}

fn check_r1() -> CheckResult {
    let r = r1_curls().map(|curls| {
        let ok = curls.iter().all(|(_, _, f, tau)| {
            let want = if *tau == -1 { LaurentPoly::monomial(-1, -1) } else { LaurentPoly::monomial(-1, 1) };
            tau.abs() == 1 && *f == want
        });
        let detail = curls
            .iter()
            .map(|(side, kind, f, tau)| format!("{side:?}/{kind:?}: {f} (tau {tau})"))
            .collect::<Vec<_>>()
            .join(", ");
        (ok, detail)
    });
    CheckResult::from_result("R1 curls", r)
}

fn check_r2() -> CheckResult {
    let variants = r2_variants();
    let mut ok = true;
    let mut nonzero = Vec::new();
    for (_, d) in &variants {
        ok &= coordinates(d).is_zero();
        match saddle_multiple(d) {
            Some(0) => {}
            Some(k) => nonzero.push(k),
            None => ok = false,
        }
    }
    ok &= !nonzero.is_empty() && nonzero.iter().all(|&k| k == nonzero[0]);
    let detail = format!(
        "{} variants vanish in the quotient; {} have defect {} x saddle, the rest 0",
        variants.len(),
        nonzero.len(),
        nonzero.first().copied().unwrap_or(0)
    );
    CheckResult::new("R2 saddle defect", ok, detail)
}

fn check_r3() -> CheckResult {
    let r = (|| -> Result<(bool, String)> {
        let up = [Dir::Up; 3];
        let kinds = [CrossingKind::Over; 3];
        let (lhs, rhs) = r3_pair(up, kinds)?;
        let (a, sa) = evaluate_naive_with(&lhs, TableForm::Dotted);
        let (b, sb) = evaluate_naive_with(&rhs, TableForm::Dotted);
        let seven = evaluate_naive_with(&lhs, TableForm::Undotted).1.terms;
        let mut ok = sa.terms == 125 && sb.terms == 125 && seven == 343 && coordinates(&a) == coordinates(&b);
        let mut variants = 0;
        for bits in 0..8u8 {
            let dirs = [0, 1, 2].map(|i| if bits >> i & 1 == 0 { Dir::Up } else { Dir::Down });
            for kbits in 0..8u8 {
                let kinds = [0, 1, 2].map(|i| if kbits >> i & 1 == 0 { CrossingKind::Over } else { CrossingKind::Under });
                let Ok((l, r)) = r3_pair(dirs, kinds) else { continue };
                ok &= tangle_invariant(&l)? == tangle_invariant(&r)?;
                variants += 1;
            }
        }
        Ok((ok, format!(
            "{} and {} dotted terms ({seven} undotted); equal in the quotient; {variants} oriented variants",
            sa.terms, sb.terms
        )))
    })();
    CheckResult::from_result("R3", r)
}

fn check_negligible() -> CheckResult {
    let r = saddle_pairings().map(|p| {
        (p.len() == 9 && p.iter().all(|(_, x)| x.is_zero()), format!("{} basis diagrams on 4 points", p.len()))
    });
    CheckResult::from_result("saddle negligible", r)
}

fn check_gram() -> CheckResult {
    let r = [2, 4, 6]
        .into_iter()
        .map(gram_is_signed_identity)
        .collect::<Result<Vec<_>>>()
        .map(|v| (v.iter().all(|&b| b), "n = 2, 4, 6: diagonal with entries (-1)^(|S|/2)".to_string()));
    CheckResult::from_result("Gram matrix", r)
}

fn check_crossing_signs() -> CheckResult {
    let ok = OrientationPattern::all().into_iter().all(|p| {
        crossing_sign(kind_for_sign(1, p), p) == 1 && crossing_sign(kind_for_sign(-1, p), p) == -1
    });
    CheckResult::new("crossing signs", ok, "both kinds in every orientation pattern")
}

/// Dimension counts for `n = 1..=max_n`: classes of the quotient against
/// `2^(n-1)`, and basis diagrams of the diagram space against Motzkin numbers.
pub fn check_dims(max_n: usize) -> Vec<CheckResult> {
    (1..=max_n)
        .map(|n| {
            let classes = Subset::even_subsets(n).len();
            let covered = {
                let mut seen: Vec<Subset> = enumerate_dotted_basis(n).iter().map(|d| d.chord_endpoints()).collect();
                seen.sort();
                seen.dedup();
                seen.len()
            };
            let basis = enumerate_basis(n).len() as u64;
            let ok = classes == 1 << (n - 1) && covered == classes && basis == motzkin(n);
            CheckResult::new(
                format!("dims n={n}"),
                ok,
                format!("quotient {classes} (2^{} = {}), diagram basis {basis} (Motzkin {})", n - 1, 1u64 << (n - 1), motzkin(n)),
            )
        })
        .collect()
}

pub fn check_fuzz(trials: usize, seed: u64) -> CheckResult {
    let r = fuzz_trials(trials, seed, 8).map(|v| {
        let bad = v.iter().filter(|t| !(t.normalized_equal && t.raw_law_holds)).count();
        let moves: usize = v.iter().map(|t| t.moves.len()).sum();
        (bad == 0, format!("{} trials, {moves} moves, {bad} failures (seed {seed})", v.len()))
    });
    CheckResult::from_result("move invariance", r)
}

/// The fixed identities, without dimension counts or fuzzing.
pub fn identity_suite() -> Vec<CheckResult> {
    vec![
        check_crossing_signs(),
        check_tables(),
        check_skein(),
        check_r1(),
        check_r2(),
        check_r3(),
        check_negligible(),
        check_gram(),
    ]
}

/// Everything `tanglex check` runs.
pub fn full_suite(dims: usize, fuzz: usize, seed: u64) -> Vec<CheckResult> {
    let mut out = identity_suite();
    out.extend(check_dims(dims));
    if fuzz > 0 {
        out.push(check_fuzz(fuzz, seed));
    }
    out
}
