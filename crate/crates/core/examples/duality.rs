//! Checks that the edge-apex obstructions of a complement-closed class are
//! the complements of its edge-add obstructions.
//!
//!     cargo run --release --example duality -- threshold 8

use hereditary::obstructions::duality_check;
use hereditary::HereditaryClass;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let class = HereditaryClass::parse(&args.next().unwrap_or_else(|| "split".into()))?;
    let n_max: usize = args.next().map_or(Ok(7), |s| s.parse())?;
    let outcome = duality_check(&class, n_max)?;
    println!("{class} through order {n_max}");
    println!("  edge-add obstructions  {}", outcome.edge_add.total());
    println!("  edge-apex obstructions {}", outcome.edge_apex.total());
    for (add, apex) in outcome.edge_add.graphs().zip(outcome.edge_apex.graphs()).take(5) {
        println!("  e.g. {add}  vs  {apex}");
    }
    match outcome.counterexample {
        None => println!("complements match"),
        Some(g) => println!("mismatch at {g}"),
    }
    Ok(())
}
