//! Generate the strict inequality system for a quiver and test a few thetas.

use stabq::stability::{generate_system, slope, verify_total, Theta};
use stabq::{DimVector, Quiver, DEFAULT_SEED};

fn main() -> stabq::Result<()> {
    let q = Quiver::from_type("A3".parse()?, "01")?;
    let sys = generate_system(&q, DEFAULT_SEED)?;
    println!(
        "{} inequalities ({} duplicates merged):",
        sys.len(),
        sys.duplicates
    );
    print!("{}", sys.to_text());

    for theta in [
        Theta::from_ints(&[0, 0, 0]),
        Theta::from_ints(&[3, 0, 1]),
        Theta::from_ints(&[0, 2, 1]),
    ] {
        let bad = verify_total(&theta, &sys)?;
        let values: Vec<String> = theta.0.iter().map(|x| x.to_string()).collect();
        println!("theta = ({}): {} violated", values.join(", "), bad.len());
        for v in bad {
            println!("    {} in {}: {} >= {}", v.e, v.d, v.slope_e, v.slope_d);
        }
    }
    let top = DimVector::from([1, 1, 1]);
    println!(
        "mu([1,1,1]) for theta (0,2,1) = {}",
        slope(&Theta::from_ints(&[0, 2, 1]), &top)?
    );
    Ok(())
}
