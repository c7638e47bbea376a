//! Exact Laurent polynomial arithmetic in `q`.
use tanglex::LaurentPoly;

fn main() {
    let z = LaurentPoly::z();
    let conway_trefoil = &(&z * &z) + &LaurentPoly::one();
    println!("z = {z}");
    println!("1 + z^2 = {conway_trefoil}");
    let p: LaurentPoly = "3q^-2 - q + 5q^4".parse().unwrap();
    println!("p = {p}, p(q^-1) = {}, p(1) = {}", p.invert_q(), p.eval_at_one());
    println!("p^3 = {}", p.pow(3));
    println!("(p^3) / p = {}", p.pow(3).div_exact(&p).unwrap());
    println!("json: {}", serde_json::to_string(&p).unwrap());
}
