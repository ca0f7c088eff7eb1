//! Build an explicit indecomposable representation by reflection functors and
//! check that it is a brick.

use stabq::repr::{build_indecomposable, hom_basis, reflect_at_sink, simple_rep};
use stabq::{DimVector, Quiver};

fn main() -> stabq::Result<()> {
    let q = Quiver::e7_counterexample();
    let d = DimVector::from([1, 2, 3, 3, 2, 1, 1]);
    let m = build_indecomposable(&q, &d)?;
    println!("module of dimension {d}:");
    for (a, map) in q.arrows().iter().zip(m.maps()) {
        println!(
            "  {} -> {}: {}x{} matrix",
            a.source + 1,
            a.target + 1,
            map.rows(),
            map.cols()
        );
        for row in map.to_rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            println!("      [{}]", cells.join(" "));
        }
    }
    println!("dim End(M) = {}", hom_basis(&m, &m).dimension());

    // One reflection step by hand: vertex 1 is a sink of 2 -> 1.
    let small = Quiver::new(2, &[(2, 1)])?;
    let s2 = simple_rep(&small, 1)?;
    let (reflected, image) = reflect_at_sink(&small, 0, &s2)?;
    let arrow = reflected.arrows()[0];
    println!(
        "S^+ at the sink sends the simple [0,1] to {} on {} -> {}",
        image.dims(),
        arrow.source + 1,
        arrow.target + 1
    );
    Ok(())
}
