// Parse an edge list, then print degree statistics and signed triangles.

use std::error::Error;

use signed_laplacian::{degree_profile, parse_signed_graph, serialize_signed_graph, triangle_stats};

const BRIDGED: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/bridged.sg"));

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = parse_signed_graph(BRIDGED)?;
    println!("n = {}, m = {}, negative edges = {}", g.order(), g.size(), g.negative_edge_count());

    let p = degree_profile(&g);
    println!("vertex  d  d+  d-  net  m_j");
    for v in 0..g.order() {
        let avg2 = p.avg2(v).map_or("-".to_string(), |m| format!("{m:.2}"));
        println!("{:>6} {:>2} {:>3} {:>3} {:>4}  {avg2}", v + 1, p.degree[v], p.positive[v], p.negative[v], p.net[v]);
    }
    println!("s1 = {}, s2 = {}, s3 = {}", p.s1, p.s2, p.s3);

    let t = triangle_stats(&g);
    println!("triangles: {} positive, {} negative", t.positive, t.negative);

    // Serialization is canonical: parsing it back gives the same graph.
    let text = serialize_signed_graph(&g);
    assert_eq!(parse_signed_graph(&text)?, g);
    print!("{text}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
