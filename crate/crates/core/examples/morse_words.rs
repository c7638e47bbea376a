//! Tangles as Morse words: parsing, braid closures, orientation data.
use tanglex::tangle::{braid_closure_components, braid_to_tangle, parse_braid, turning_number, MorseWord};

fn main() {
    let kink: MorseWord = "bottom 1 up; cup 2 cw; x+ 1; cap 2;".parse().unwrap();
    println!("{kink}");
    println!("  crossings {}, writhe {}, turning number {}", kink.crossing_count(), kink.writhe(), turning_number(&kink).unwrap());

    let word = parse_braid("1 -2 1 -2").unwrap();
    let t = braid_to_tangle(&word, 3).unwrap();
    println!("figure-eight braid {word:?} cut open:\n  {t}");
    println!("  components {}, boundary points {}", braid_closure_components(&word, 3).unwrap(), t.boundary_count());
    for c in t.crossing_signs() {
        println!("  slice {} sign {:+}", c.slice, c.sign);
    }

    match "bottom 2 up up; cap 1;".parse::<MorseWord>() {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
