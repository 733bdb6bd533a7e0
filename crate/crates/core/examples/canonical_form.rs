//! Reads graph6 strings and prints each canonical form, then groups them
//! into isomorphism classes.
//!
//!     cargo run --example canonical_form -- Ch CU 'C]'

use hereditary::{canonical_form, dedup, Graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        // three labellings of P4, and C4
        args = ["Ch", "CU", "CR", "Cr"].map(String::from).to_vec();
    }
    let graphs = args
        .iter()
        .map(|s| Graph::from_graph6(s))
        .collect::<Result<Vec<_>, _>>()?;
    for (text, g) in args.iter().zip(&graphs) {
        let form = canonical_form(g);
        println!(
            "{text:>8}  n={} m={}  canonical {}  labels {:?}",
            g.order(),
            g.edge_count(),
            form.key,
            form.perm
        );
    }
    let classes = dedup(graphs);
    println!("{} isomorphism classes", classes.len());
    Ok(())
}
