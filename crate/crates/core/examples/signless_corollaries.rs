// Bounds for the ordinary and signless Laplacians of an unsigned graph,
// obtained by signing every edge + or −.

use std::error::Error;

use signed_laplacian::bounds::{unsigned_corollaries, unsigned_corollaries_direct};
use signed_laplacian::spectra::sign_all;
use signed_laplacian::{parse_signed_graph, spectral_radius_laplacian, Sign};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // Wheel: a hub joined to a 5-cycle. The signs are ignored.
    let g = parse_signed_graph("n 6\n1 2 +\n1 3 +\n1 4 +\n1 5 +\n1 6 +\n2 3 +\n3 4 +\n4 5 +\n5 6 +\n2 6 +\n")?;
    let q = spectral_radius_laplacian(&sign_all(&g, Sign::Neg))?;
    let l = spectral_radius_laplacian(&sign_all(&g, Sign::Pos))?;
    println!("λmax(L) = {l:.4}, λmax(Q) = {q:.4}");

    let delegated = unsigned_corollaries(&g)?;
    let direct = unsigned_corollaries_direct(&g)?;
    for (a, b) in delegated.iter().zip(&direct) {
        match (a.get(), b.get()) {
            (Some(x), Some(y)) => {
                assert!((x - y).abs() < 1e-12);
                println!("{:<12} {:>8.4}  (target {})", a.id.as_str(), x, a.id.target().label());
            }
            _ => println!("{:<12} {:>8}  ({})", a.id.as_str(), "—", a.guard_reason().unwrap_or("")),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
