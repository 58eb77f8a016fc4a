// Laplacian spectrum of a signed graph, checked against the exact trace
// and Rayleigh-moment formulas.

use std::error::Error;

use signed_laplacian::spectra::{self, laplacian_trace_closed_form, rayleigh_moment, rayleigh_moment_by_product};
use signed_laplacian::{degree_profile, laplacian, parse_signed_graph, triangle_stats};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = parse_signed_graph("n 4\n1 2 +\n2 3 -\n3 4 +\n1 4 +\n1 3 -\n")?;
    let l = laplacian(&g);
    for row in l.rows() {
        println!("{row:?}");
    }

    let spectrum = spectra::laplacian_spectrum(&g)?;
    println!("eigenvalues: {:?}", spectrum.values());
    println!("λmax = {:.6}", spectrum.lambda_max());

    let p = degree_profile(&g);
    let t = triangle_stats(&g);
    for k in 1..=3 {
        let exact = spectra::trace_moment(&l, k)?;
        assert_eq!(exact, laplacian_trace_closed_form(&p, &t, k)?);
        println!("tr L^{k} = {exact}, Σλ^{k} = {:.6}", spectrum.power_sum(k as i32));
    }
    for k in 1..=3 {
        let n_k = rayleigh_moment(&g, k)?;
        assert_eq!(n_k, rayleigh_moment_by_product(&g, k)?);
        println!("jᵀL^{k}j = {n_k}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
