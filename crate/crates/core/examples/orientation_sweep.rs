//! Decide every orientation of a Dynkin type and print the CSV table.
//!
//! `cargo run --release --example orientation_sweep -- E6`

use stabq::cli::sweep_csv;
use stabq::DEFAULT_SEED;

fn main() {
    let ty = std::env::args().nth(1).unwrap_or_else(|| "D5".into());
    let ty = ty.parse().unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2);
    });
    match stabq::cli::sweep(ty, DEFAULT_SEED) {
        Ok(rows) => {
            print!("{}", sweep_csv(&rows));
            let bad = rows.iter().filter(|r| r.status == "infeasible").count();
            eprintln!("{ty}: {bad} of {} orientations infeasible", rows.len());
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(3);
        }
    }
}
