//! Operator-class membership with the edit sequence that reaches the base.
//!
//!     cargo run --example membership -- 'almost:chordal' Dhc

use hereditary::operators::OperatorSpec;
use hereditary::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let specs: Vec<OperatorSpec> = match args.next() {
        Some(s) => vec![OperatorSpec::parse(&s)?],
        None => [
            "split",
            "edge-add:split",
            "edge-apex:split",
            "vertex-apex:split",
            "split+add^1-edge^1",
            "almost:split",
        ]
        .iter()
        .map(|s| OperatorSpec::parse(s))
        .collect::<Result<_, _>>()?,
    };
    let graphs: Vec<Graph> = match args.next() {
        Some(s) => vec![Graph::from_graph6(&s)?],
        None => vec![Graph::cycle(5), Graph::cycle(4), Graph::cycle(6)],
    };
    for g in &graphs {
        println!("{g} (n={}, m={})", g.order(), g.edge_count());
        for spec in &specs {
            match spec.member(g) {
                Some(cert) => {
                    let reached = cert.apply(g)?;
                    println!("  {:<30} yes: {cert}  -> {reached}", spec.to_string());
                }
                None => println!("  {:<30} no", spec.to_string()),
            }
        }
    }
    Ok(())
}
