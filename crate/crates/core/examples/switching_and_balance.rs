// Balance detection, switching, and switching equivalence.

use std::error::Error;

use signed_laplacian::balance::{bipartite_component_count, laplacian_rank};
use signed_laplacian::{
    balance_info, parse_signed_graph, spectral_radius_laplacian, switch, switching_equivalent, Sign, SwitchingFunction,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // A 4-cycle with two negative edges is balanced; one triangle with a
    // single negative edge is not.
    let g = parse_signed_graph("n 7\n1 2 -\n2 3 +\n3 4 -\n1 4 +\n5 6 +\n6 7 +\n5 7 -\n")?;
    let info = balance_info(&g);
    println!("components: {}, balanced: {}", info.component_count(), info.balanced_count());
    println!("rank L = n - b = {}", laplacian_rank(&g));
    println!("bipartite components: {}", bipartite_component_count(&g));

    let theta =
        SwitchingFunction::new(vec![Sign::Neg, Sign::Pos, Sign::Neg, Sign::Pos, Sign::Pos, Sign::Neg, Sign::Pos]);
    let h = switch(&g, &theta)?;
    println!("switched by θ = {theta}:");
    print!("{h}");
    println!("λmax before {:.6}, after {:.6}", spectral_radius_laplacian(&g)?, spectral_radius_laplacian(&h)?);

    let witness = switching_equivalent(&g, &h).ok_or("switching should be detected")?;
    assert_eq!(switch(&g, &witness)?, h);
    println!("recovered witness: {witness}");

    let flipped = g.resign(|e| if (e.u, e.v) == (0, 1) { e.sign.flip() } else { e.sign });
    println!("flip one edge: equivalent = {}", switching_equivalent(&g, &flipped).is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
