//! Which dimension vectors occur as submodules of an indecomposable module,
//! with an explicit embedding and a brute-force check over F_2.

use stabq::repr::{is_homomorphism, Indecomposables};
use stabq::submods::{oracle_sub_vectors, SubmoduleSearch, ORACLE_DIM_BOUND};
use stabq::{DimVector, Quiver, DEFAULT_SEED};

fn main() -> stabq::Result<()> {
    let q = Quiver::from_type("D4".parse()?, "010")?;
    let cat = Indecomposables::build(&q)?;
    let d = DimVector::from([1, 2, 1, 1]);
    let m = cat.get(&d).expect("a root");

    let search = SubmoduleSearch::new(&cat, m, DEFAULT_SEED);
    let subs = search.sub_dim_vectors();
    println!("sub-dimension vectors of {d}:");
    for e in &subs {
        let emb = search.find_submodule(e).expect("found during search");
        let parts: Vec<String> = emb.summands.iter().map(|s| s.to_string()).collect();
        let source = cat.get(&emb.summands[0]).expect("summand");
        let single = emb.summands.len() == 1 && is_homomorphism(source, m, &emb.map);
        println!(
            "  {e} = {}{}",
            parts.join(" + "),
            if single { "  (checked map)" } else { "" }
        );
    }

    let oracle = oracle_sub_vectors(m, 2, ORACLE_DIM_BOUND)?;
    println!("exhaustive search over F_2 agrees: {}", oracle == subs);
    Ok(())
}
