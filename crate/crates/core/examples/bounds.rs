//! Order bounds for obstructions of operator classes, next to the largest
//! obstruction actually found.
//!
//!     cargo run --release --example bounds -- 8

use hereditary::gen::enumerate_levels;
use hereditary::obstructions::{bound_inputs, edge_add_bound_containing, enumerate_spec_in, operator_bound};
use hereditary::operators::OperatorSpec;
use hereditary::HereditaryClass;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max: usize = std::env::args().nth(1).map_or(Ok(7), |s| s.parse())?;
    let levels = enumerate_levels(n_max)?;

    for class in [
        HereditaryClass::Split,
        HereditaryClass::Threshold,
        HereditaryClass::Cograph,
    ] {
        let list = class.forbidden().expect("finite list");
        for (h, s) in list.iter().zip(bound_inputs(&list)) {
            println!(
                "{class}: obstructions containing {h} have at most {} vertices",
                edge_add_bound_containing(&s)
            );
        }
    }

    let specs = [
        "edge-add:split",
        "edge-apex:threshold",
        "vertex-apex:cograph",
        "almost:cograph",
        "chordal+add^1",
        "cograph+add^1-vertex^1",
    ];
    println!("\n{:<30} {:>6} {:>8} {:>6}", "class", "bound", "largest", "count");
    for text in specs {
        let spec = OperatorSpec::parse(text)?;
        let report = enumerate_spec_in(&spec, &levels)?;
        let bound = operator_bound(&spec).map_or("none".to_string(), |b| b.to_string());
        let largest = report.orders().max().map_or("-".to_string(), |n| n.to_string());
        println!("{spec:<30} {bound:>6} {largest:>8} {:>6}", report.total());
    }
    println!("(obstructions searched through order {n_max})");
    Ok(())
}
