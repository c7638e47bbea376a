use tanglex::invariant::{alexander_with, Evaluator};
use tanglex::oracle::{alexander_via_burau, normalize_knot, burau_alexander_raw, KNOT_CORPUS};
use tanglex::tangle::braid_to_tangle;
use tanglex::LaurentPoly;

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

#[test]
fn state_sum_matches_burau_on_the_corpus() {
    for k in KNOT_CORPUS {
        let t = braid_to_tangle(k.word, k.strands).unwrap();
        let ev = if k.word.len() <= 6 { Evaluator::Both } else { Evaluator::Dp };
        let r = alexander_with(&t, ev).unwrap();
        assert_eq!(r.alexander, alexander_via_burau(k.word, k.strands).unwrap(), "{}", k.name);
        assert_eq!(&r.alexander * &LaurentPoly::neg_q_pow(r.tau), r.delta, "{}", k.name);
    }
}

#[test]
fn tabulated_values() {
    let want = [
        ("3_1", "q^-2 - 1 + q^2"),
        ("4_1", "-q^-2 + 3 - q^2"),
        ("5_1", "q^-4 - q^-2 + 1 - q^2 + q^4"),
        ("5_2", "2q^-2 - 3 + 2q^2"),
        ("6_1", "-2q^-2 + 5 - 2q^2"),
        ("6_2", "-q^-4 + 3q^-2 - 3 + 3q^2 - q^4"),
        ("6_3", "q^-4 - 3q^-2 + 5 - 3q^2 + q^4"),
        ("7_1", "q^-6 - q^-4 + q^-2 - 1 + q^2 - q^4 + q^6"),
        ("7_3", "2q^-4 - 3q^-2 + 3 - 3q^2 + 2q^4"),
        ("7_5", "2q^-4 - 4q^-2 + 5 - 4q^2 + 2q^4"),
        ("8_19", "q^-6 - q^-4 + 1 - q^4 + q^6"),
        ("8_20", "q^-4 - 2q^-2 + 3 - 2q^2 + q^4"),
    ];
    for (name, value) in want {
        let k = KNOT_CORPUS.iter().find(|k| k.name == name).unwrap();
        let t = braid_to_tangle(k.word, k.strands).unwrap();
        assert_eq!(alexander_with(&t, Evaluator::Dp).unwrap().alexander, p(value), "{name}");
    }
}

#[test]
fn mirror_images_agree() {
    for k in KNOT_CORPUS {
        let mirrored: Vec<i32> = k.word.iter().map(|g| -g).collect();
        let a = alexander_with(&braid_to_tangle(&mirrored, k.strands).unwrap(), Evaluator::Dp).unwrap();
        assert_eq!(a.alexander, alexander_via_burau(k.word, k.strands).unwrap(), "{}", k.name);
    }
}

#[test]
fn normalization_rejects_units_off_one() {
    let raw = burau_alexander_raw(&[1, 1, 1], 2).unwrap();
    assert_eq!(normalize_knot(&raw).unwrap(), p("q^-2 - 1 + q^2"));
    assert!(normalize_knot(&p("2")).is_err());
    assert!(normalize_knot(&LaurentPoly::zero()).is_err());
}
