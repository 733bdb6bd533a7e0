//! Runs every built-in recognizer over all graphs of one order and prints
//! how many belong to each class.
//!
//!     cargo run --release --example recognize -- 7

use hereditary::classes::{GraphClass, HereditaryClass, PQParams};
use hereditary::gen::{enumerate_graphs, GenSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(6), |s| s.parse())?;
    let graphs = enumerate_graphs(&GenSpec::order(n))?;
    let classes = [
        HereditaryClass::Split,
        HereditaryClass::Threshold,
        HereditaryClass::Cograph,
        HereditaryClass::Chordal,
        HereditaryClass::PqSplit(PQParams::new(2, 1)),
        HereditaryClass::PqEdgeSplit(PQParams::new(1, 1)),
    ];
    println!("{} graphs on {n} vertices", graphs.len());
    for class in &classes {
        let members = graphs.iter().filter(|g| class.contains(g)).count();
        println!("  {:<18} {members}", class.name());
    }
    Ok(())
}
