//! Randomized submodule search against exhaustive enumeration over small prime fields.

use stabq::repr::Indecomposables;
use stabq::submods::{oracle_sub_vectors, sub_dim_vectors, ORACLE_DIM_BOUND};
use stabq::{DynkinType, Quiver, DEFAULT_SEED};

fn compare(ty: &str, bits: &str, p: u64) -> usize {
    let ty: DynkinType = ty.parse().unwrap();
    let q = Quiver::from_type(ty, bits).unwrap();
    let cat = Indecomposables::build(&q).unwrap();
    let mut checked = 0;
    for m in cat.reps() {
        if m.total_dim() > ORACLE_DIM_BOUND as usize {
            continue;
        }
        let fast = sub_dim_vectors(&cat, m, DEFAULT_SEED);
        let slow = oracle_sub_vectors(m, p, ORACLE_DIM_BOUND).unwrap();
        assert_eq!(fast, slow, "{ty} {bits} p={p} M={}", m.dims());
        checked += 1;
    }
    checked
}

fn all_orientations(ty: &str, count: usize) {
    for bits in ty.parse::<DynkinType>().unwrap().orientations() {
        for p in [2, 3] {
            assert_eq!(compare(ty, &bits, p), count);
        }
    }
}

#[test]
fn a4() {
    all_orientations("A4", 10);
}

#[test]
fn a5() {
    all_orientations("A5", 15);
}

#[test]
fn d4() {
    all_orientations("D4", 12);
}

#[test]
fn d5() {
    // The highest root [1,2,2,1,1] has total 7, so every indecomposable is in range.
    all_orientations("D5", 20);
}
