//! Crossingless diagrams, gluing, and coordinates in the canonical basis.
use tanglex::diagram::{
    canonical_rep, coordinates, enumerate_basis, glue_evaluate, inner_product, saddle_element, DiagramVector,
    FlatDiagram, Subset,
};

fn main() {
    let strands: FlatDiagram = "n=4; chords=(1,4),(2,3); ticks=".parse().unwrap();
    let cupcap: FlatDiagram = "n=4; chords=(1,2),(3,4); ticks=".parse().unwrap();
    println!("<{strands}, {cupcap}> glues to {}", glue_evaluate(&strands, &cupcap).unwrap());

    println!("basis of the 4-point diagram space ({} diagrams):", enumerate_basis(4).len());
    for d in enumerate_basis(4) {
        println!("  {d}");
    }

    println!("coordinates of two parallel strands:\n{}", coordinates(&DiagramVector::from_diagram(strands)));

    let s = saddle_element();
    println!("saddle element: {s}");
    println!("its coordinates: {}", coordinates(&s));
    for points in [vec![], vec![1, 2], vec![1, 2, 3, 4]] {
        let sub = Subset::from_points(&points).unwrap();
        let rep = DiagramVector::from_diagram(canonical_rep(sub, 4).unwrap());
        println!("<saddle, C_{sub}> = {}", inner_product(&s, &rep).unwrap());
    }
}
