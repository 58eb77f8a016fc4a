// Every bound in the catalog evaluated on one graph.

use std::error::Error;

use signed_laplacian::bounds::BoundId;
use signed_laplacian::{evaluate_all, parse_signed_graph, Direction};

const BRIDGED: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/bridged.sg"));

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = parse_signed_graph(BRIDGED)?;
    let e = evaluate_all(&g)?;
    println!("λmax(L(Σ)) = {:.4}", e.lambda_max());
    for r in &e.results {
        let entry = r.id.catalog_entry();
        match r.get() {
            Some(v) => {
                println!("{:<15} {:<6} {:>8.4}   {}", r.id.as_str(), r.direction().to_string(), v, entry.formula)
            }
            None => println!(
                "{:<15} {:<6} {:>8}   ({})",
                r.id.as_str(),
                r.direction().to_string(),
                "—",
                r.guard_reason().unwrap_or("")
            ),
        }
    }

    let violations = e.violations(1e-9);
    assert!(violations.is_empty());

    let best_lower = BoundId::signed()
        .filter_map(|id| e.get(id).get().filter(|_| id.direction() == Direction::Lower))
        .fold(f64::NEG_INFINITY, f64::max);
    let best_upper = BoundId::signed()
        .filter_map(|id| e.get(id).get().filter(|_| id.direction() == Direction::Upper))
        .fold(f64::INFINITY, f64::min);
    println!("{best_lower:.4} ≤ λmax ≤ {best_upper:.4}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
