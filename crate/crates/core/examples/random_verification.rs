// Seeded random graphs checked against every bound and identity.

use std::error::Error;

use signed_laplacian::harness::{generate, verify, GeneratorConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = GeneratorConfig { n: 9, edge_prob: 0.4, neg_prob: 0.3, seed: 2024, require_connected: true };
    let g = generate(&cfg)?;
    println!("sample graph (seed {}):", cfg.seed);
    print!("{g}");

    let report = verify(&cfg, 100, 1e-9)?;
    print!("{}", report.summary());
    assert!(report.is_success());

    // Same seed, same graphs.
    assert_eq!(generate(&cfg)?, g);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
