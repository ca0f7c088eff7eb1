//! The E7 quiver 2->1, 3->2, 4->3, 5->4, 6->5, 3->7 has no total stability
//! condition of the form theta/dim. Generates the system, solves it exactly
//! and prints a five-row infeasible subsystem with its multipliers.

use std::time::Instant;

use stabq::feasibility::{minimal_infeasible_subsystem, solve_strict, verify_certificate};
use stabq::stability::{generate_system, render_inequality};
use stabq::{Quiver, DEFAULT_SEED};

fn main() -> stabq::Result<()> {
    let start = Instant::now();
    let q = Quiver::e7_counterexample();
    let sys = generate_system(&q, DEFAULT_SEED)?;
    println!(
        "{} indecomposables, {} inequalities ({:.2?})",
        q.positive_roots().len(),
        sys.len(),
        start.elapsed()
    );

    let rows = sys.matrix();
    let result = solve_strict(&rows)?;
    let y = result.certificate().expect("the system is infeasible");
    println!("certificate verified: {}", verify_certificate(&rows, y));

    let mis = minimal_infeasible_subsystem(&rows)?;
    println!("minimal infeasible subsystem:");
    for (&i, k) in mis.indices.iter().zip(&mis.certificate) {
        let r = &sys.rows[i];
        println!(
            "  {k} x  {}    from {} < {}",
            render_inequality(&r.raw),
            r.e,
            r.d
        );
    }
    println!("done in {:.2?}", start.elapsed());
    Ok(())
}
