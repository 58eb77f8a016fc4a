// Side-by-side tables over the bundled graphs, in Markdown and CSV.

use std::error::Error;
use std::fs;
use std::path::Path;

use signed_laplacian::harness::{report, ReportFormat, ReportOptions};
use signed_laplacian::parse_signed_graph;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let mut graphs = Vec::new();
    for name in ["k3p", "k3n", "k3m", "p3p", "star3", "bridged"] {
        let text = fs::read_to_string(dir.join(format!("{name}.sg")))?;
        graphs.push((name.to_string(), parse_signed_graph(&text)?));
    }

    print!("{}", report(&graphs, ReportOptions::default())?);
    println!();
    let csv = report(&graphs, ReportOptions { format: ReportFormat::Csv, full_precision: false })?;
    print!("{csv}");
    assert_eq!(csv.lines().count(), 1 + 3 * graphs.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
