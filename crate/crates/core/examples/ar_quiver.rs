//! Knit the Auslander-Reiten quiver, print the tau orbits and one almost split
//! sequence. Pass `--dot` to print Graphviz instead.

use stabq::arquiver::knit;
use stabq::{DimVector, Quiver};

fn main() -> stabq::Result<()> {
    let q = Quiver::e7_counterexample();
    let ar = knit(&q)?;
    if std::env::args().any(|a| a == "--dot") {
        print!("{}", ar.to_dot());
        return Ok(());
    }
    println!(
        "{} vertices, {} arrows",
        ar.nodes().len(),
        ar.arrows().len()
    );

    for (k, p) in ar.nodes().iter().enumerate() {
        if !ar.is_projective(k) {
            continue;
        }
        // Walk the orbit of each projective through tau^{-1}.
        let mut orbit = vec![p.clone()];
        while let Some(next) = ar.nodes().iter().find(|x| ar.tau(x) == orbit.last()) {
            orbit.push(next.clone());
        }
        let shown: Vec<String> = orbit.iter().map(|d| d.to_string()).collect();
        println!("orbit: {}", shown.join(" "));
    }

    let m = DimVector::from([1, 1, 2, 2, 2, 1, 1]);
    let middle = ar.almost_split_middle(&m)?;
    let tau = ar.tau(&m).expect("not projective");
    let parts: Vec<String> = middle.iter().map(|d| d.to_string()).collect();
    println!("0 -> {tau} -> {} -> {m} -> 0", parts.join(" + "));
    println!("mesh violations: {}", ar.mesh_violations().len());
    Ok(())
}
