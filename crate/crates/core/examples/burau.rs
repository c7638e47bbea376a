//! Reduced Burau matrices and the determinant formula.
use tanglex::oracle::{alexander_via_burau, burau_alexander_raw, burau_reduced, hopf_link_value};

fn main() {
    let word = [1, -2, 1, -2];
    println!("B({word:?}) = {:?}", burau_reduced(&word, 3).unwrap());
    println!("det(I - B) / (1 + t + t^2) = {}", burau_alexander_raw(&word, 3).unwrap());
    println!("normalized: {}", alexander_via_burau(&word, 3).unwrap());
    println!("Hopf link value: {}", hopf_link_value());
}
