//! The skein relation at each crossing of a knot diagram.
use tanglex::invariant::{alexander_polynomial, skein_triple, skein_triple_check};
use tanglex::tangle::braid_to_tangle;

fn main() {
    let t = braid_to_tangle(&[1, 1, 2, -1, 2], 3).unwrap();
    println!("tangle: {t}");
    for k in 0..t.crossing_count() {
        let s = skein_triple(&t, k).unwrap();
        let value = |w| alexander_polynomial(w).map(|r| r.delta.to_string()).unwrap_or_else(|e| e.to_string());
        println!("crossing {k}: D+ = {}, D- = {}, D0 = {}", value(&s.plus), value(&s.minus), value(&s.zero));
        assert!(skein_triple_check(&t, k).unwrap());
    }
}
