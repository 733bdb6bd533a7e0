//! Flats of a GF(q)-matroid and forbidden flats of matroid classes.
//!
//!     cargo run --release --example matroid_flats -- add:projective 2 4

use hereditary::matroid::{add_class_rank_bound, enumerate_forbidden_flats, GFqMatroid, MatroidClassSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let spec = MatroidClassSpec::parse(&args.next().unwrap_or_else(|| "add:no-three-point-line".into()))?;
    let q: u8 = args.next().map_or(Ok(2), |s| s.parse())?;
    let r_max: usize = args.next().map_or(Ok(4), |s| s.parse())?;

    let fano = GFqMatroid::full(2, 3)?;
    let lattice = fano.flats();
    for k in 0..=3 {
        println!("Fano plane: {} flats of rank {k}", lattice.of_rank(k).count());
    }

    let base = enumerate_forbidden_flats(spec.base(), q, r_max)?;
    println!("\nforbidden flats of {} over GF({q}), rank <= {r_max}:", spec.base());
    for m in &base {
        println!("  {m}  ({} elements, {} non-elements)", m.len(), m.non_element_count());
    }
    if matches!(spec, MatroidClassSpec::Add(_)) {
        println!("add-class rank bound {}", add_class_rank_bound(&base));
    }
    let flats = enumerate_forbidden_flats(&spec, q, r_max)?;
    println!("forbidden flats of {spec}:");
    for m in &flats {
        println!("  {m}  (rank {}, {} elements)", m.rank(), m.len());
    }
    Ok(())
}
