//! Alexander polynomials of bundled knots from the state sum, next to the
//! Burau determinant.
use std::time::Instant;

use tanglex::invariant::alexander_polynomial;
use tanglex::oracle::{alexander_via_burau, KNOT_CORPUS};
use tanglex::tangle::braid_to_tangle;

fn main() {
    for k in KNOT_CORPUS {
        let start = Instant::now();
        let r = alexander_polynomial(&braid_to_tangle(k.word, k.strands).unwrap()).unwrap();
        let took = start.elapsed();
        let oracle = alexander_via_burau(k.word, k.strands).unwrap();
        let verdict = if oracle == r.alexander { "agree" } else { "DISAGREE" };
        println!("{:>5}  tau {:>3}  {}  [{verdict}, {took:.1?}]", k.name, r.tau, r.alexander);
    }
}
