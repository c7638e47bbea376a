//! The 7-term and 5-term expansions of positive and negative crossings.
use tanglex::statesum::{table, TableForm};
use tanglex::tangle::OrientationPattern;

fn main() {
    for form in [TableForm::Undotted, TableForm::Dotted] {
        for sign in [1, -1] {
            let t = table(sign, OrientationPattern::BothUp, form);
            println!("sign {sign:+}, {form:?}, {} terms:", t.terms.len());
            for term in &t.terms {
                println!("  ({}) {}", term.coeff, term.resolution);
            }
        }
    }
    let rotated = table(1, OrientationPattern::LeftDownRightUp, TableForm::Dotted);
    println!("positive crossing, left strand down:");
    for term in &rotated.terms {
        println!("  ({}) {}", term.coeff, term.resolution);
    }
}
