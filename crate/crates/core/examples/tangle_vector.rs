//! The vector-valued invariant of a tangle with more than two endpoints.
use tanglex::invariant::{tangle_invariant_with, Evaluator};
use tanglex::tangle::MorseWord;

fn main() {
    for text in [
        "bottom 2 up up;",
        "bottom 2 up up; x+ 1;",
        "bottom 2 up down; x+ 1; x+ 1; x+ 1;",
        "bottom 3 up up up; x+ 1; x+ 2; x+ 1;",
    ] {
        let t: MorseWord = text.parse().unwrap();
        let v = tangle_invariant_with(&t, Evaluator::Both).unwrap();
        println!("{text}\n{v}\n{}\n", v.to_json());
    }
}
