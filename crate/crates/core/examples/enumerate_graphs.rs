//! Counts graphs of each order with the orderly generator and times the run.
//!
//! Usage: `cargo run --release --example enumerate_graphs -- 8`

use std::time::Instant;

use hereditary::gen::{enumerate_graphs, GenSpec};

fn main() -> hereditary::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    for n in 1..=max {
        let start = Instant::now();
        let graphs = enumerate_graphs(&GenSpec::order(n))?;
        println!("n={n}\tgraphs={}\t{:.2?}", graphs.len(), start.elapsed());
    }
    Ok(())
}
