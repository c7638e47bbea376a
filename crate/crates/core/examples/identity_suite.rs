//! Runs the identity suite with a small fuzz budget.
use tanglex::check::full_suite;

fn main() {
    let results = full_suite(6, 25, 1);
    for r in &results {
        println!("{} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail);
    }
    if results.iter().any(|r| !r.passed) {
        std::process::exit(1);
    }
}
