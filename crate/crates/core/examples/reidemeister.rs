//! A random walk through Reidemeister moves keeps the normalized value fixed
//! while the raw state sum picks up powers of `-q`.
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tanglex::invariant::alexander_polynomial;
use tanglex::tangle::{braid_to_tangle, random_move};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut t = braid_to_tangle(&[1, 1, 1], 2).unwrap();
    let start = alexander_polynomial(&t).unwrap();
    println!("start: delta {} tau {} alexander {}", start.delta, start.tau, start.alexander);
    for step in 1..=8 {
        let (mv, next) = random_move(&t, &mut rng);
        t = next;
        let r = alexander_polynomial(&t).unwrap();
        println!("{step}: {mv:?}\n   {} crossings, delta {}, tau {}, alexander {}", t.crossing_count(), r.delta, r.tau, r.alexander);
        assert_eq!(r.alexander, start.alexander);
    }
}
