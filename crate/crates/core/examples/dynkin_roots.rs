//! Classify a quiver, list its positive roots and print its Coxeter data.
//!
//! `cargo run --example dynkin_roots -- D5 0110`

use stabq::{DynkinType, Quiver};

fn main() -> stabq::Result<()> {
    let mut args = std::env::args().skip(1);
    let ty: DynkinType = args.next().unwrap_or_else(|| "D5".into()).parse()?;
    let bits = args.next().unwrap_or_else(|| "0".repeat(ty.rank - 1));
    let q = Quiver::from_type(ty, &bits)?;

    println!("{} with orientation {bits}", q.classify());
    for a in q.arrows() {
        println!("  arrow {} -> {}", a.source + 1, a.target + 1);
    }
    let roots = q.positive_roots();
    println!(
        "{} positive roots (expected {}):",
        roots.len(),
        ty.root_count()
    );
    for d in &roots {
        println!("  {d}  q(d) = {}", q.euler_form(d, d)?);
    }

    println!(
        "sink order: {:?}",
        q.sink_order().iter().map(|i| i + 1).collect::<Vec<_>>()
    );
    println!("Coxeter matrix:");
    for row in q.coxeter_matrix() {
        println!("  {row:?}");
    }
    println!(
        "Coxeter order {} (Coxeter number {})",
        q.coxeter_order(),
        ty.coxeter_number()
    );
    for i in 0..q.vertex_count() {
        println!(
            "  P{} = {}   I{} = {}",
            i + 1,
            q.projective_dim(i),
            i + 1,
            q.injective_dim(i)
        );
    }
    Ok(())
}
