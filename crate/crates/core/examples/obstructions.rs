//! Minimal obstructions of a derived class, by order.
//!
//!     cargo run --release --example obstructions -- edge-add:split 8

use std::time::Instant;

use hereditary::obstructions::enumerate_spec;
use hereditary::operators::OperatorSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let spec = OperatorSpec::parse(&args.next().unwrap_or_else(|| "edge-add:split".into()))?;
    let n_max: usize = args.next().map_or(Ok(8), |s| s.parse())?;

    let start = Instant::now();
    let report = enumerate_spec(&spec, n_max)?;
    println!("{spec} through order {n_max} ({:.2?})", start.elapsed());
    for (n, keys) in report.per_order.iter().filter(|(_, k)| !k.is_empty()) {
        let shown: Vec<&str> = keys.iter().map(|k| k.as_str()).collect();
        println!("  n={n}: {:>3}  {}", keys.len(), shown.join(" "));
    }
    println!("total {}", report.total());
    match report.bound_used {
        Some(b) => println!("order bound {b}"),
        None => println!("no order bound"),
    }
    if let Some(family) = &report.cycle_family {
        println!("plus {family}");
    }
    Ok(())
}
