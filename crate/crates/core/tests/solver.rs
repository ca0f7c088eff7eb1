use num_integer::Integer;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stabq::feasibility::{
    minimal_infeasible_subsystem, solve_strict, solve_strict_in, verify_certificate,
    verify_witness, FeasibilityResult,
};
use stabq::stability::{generate_system, verify_total, Theta};
use stabq::{Quiver, DEFAULT_SEED};

/// Fourier-Motzkin elimination for homogeneous strict systems `r . x > 0`.
/// Positive combinations keep strictness, so the system is feasible iff no
/// row survives once every variable is gone. Each row carries the set of
/// original rows it combines; after `k` eliminations any row built from more
/// than `k + 1` originals is redundant (Chernikov) and is dropped.
fn fm_feasible(rows: &[Vec<i64>]) -> bool {
    assert!(rows.len() <= 64);
    let dim = rows.first().map_or(0, Vec::len);
    let mut current: Vec<(Vec<i64>, u64)> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| (normalize(r.clone()), 1u64 << i))
        .collect();
    for k in 0..dim {
        if current.iter().any(|(r, _)| r.iter().all(|&x| x == 0)) {
            return false;
        }
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for entry in current {
            match entry.0[k].signum() {
                1 => pos.push(entry),
                -1 => neg.push(entry),
                _ => rest.push(entry),
            }
        }
        for (p, hp) in &pos {
            for (n, hn) in &neg {
                let history = hp | hn;
                if history.count_ones() as usize > k + 2 {
                    continue;
                }
                let (a, b) = (p[k], -n[k]);
                let combo: Vec<i64> = p.iter().zip(n).map(|(x, y)| b * x + a * y).collect();
                rest.push((normalize(combo), history));
            }
        }
        rest.sort();
        rest.dedup();
        current = rest;
    }
    current.is_empty()
}

fn normalize(r: Vec<i64>) -> Vec<i64> {
    let g = r.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        r.into_iter().map(|x| x / g).collect()
    } else {
        r
    }
}

fn random_system(rng: &mut ChaCha8Rng, max_rows: usize) -> (usize, Vec<Vec<i64>>) {
    let dim = rng.gen_range(1..=6);
    let m = rng.gen_range(1..=max_rows);
    let rows = (0..m)
        .map(|_| (0..dim).map(|_| rng.gen_range(-3..=3)).collect())
        .collect();
    (dim, rows)
}

#[test]
fn dichotomy_on_random_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let (mut feasible, mut infeasible) = (0, 0);
    for _ in 0..1000 {
        let (dim, rows) = random_system(&mut rng, 10);
        let result = solve_strict_in(dim, &rows).unwrap();
        let witness_ok = result.witness().is_some_and(|x| verify_witness(&rows, x));
        let cert_ok = result
            .certificate()
            .is_some_and(|y| verify_certificate(&rows, y));
        assert!(witness_ok ^ cert_ok, "{rows:?}");
        assert_eq!(witness_ok, fm_feasible(&rows), "{rows:?}");
        if witness_ok {
            feasible += 1;
        } else {
            infeasible += 1;
        }
    }
    // Both outcomes must actually be exercised.
    assert!(
        feasible > 50 && infeasible > 50,
        "{feasible} / {infeasible}"
    );
}

#[test]
fn fourier_motzkin_agrees_up_to_twelve_rows() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..300 {
        let (dim, rows) = random_system(&mut rng, 12);
        let result = solve_strict_in(dim, &rows).unwrap();
        assert_eq!(result.is_feasible(), fm_feasible(&rows), "{rows:?}");
    }
}

#[test]
fn minimal_subsystems_are_minimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen = 0;
    while seen < 100 {
        let (_, rows) = random_system(&mut rng, 10);
        if solve_strict(&rows).unwrap().is_feasible() {
            continue;
        }
        seen += 1;
        let mis = minimal_infeasible_subsystem(&rows).unwrap();
        let sub: Vec<Vec<i64>> = mis.indices.iter().map(|&i| rows[i].clone()).collect();
        assert!(verify_certificate(&sub, &mis.certificate));
        assert!(!fm_feasible(&sub));
        for drop in 0..sub.len() {
            let mut fewer = sub.clone();
            fewer.remove(drop);
            assert!(
                fewer.is_empty() || fm_feasible(&fewer),
                "{sub:?} minus {drop}"
            );
        }
    }
}

fn random_theta(rng: &mut ChaCha8Rng, n: usize) -> Theta {
    Theta(
        (0..n)
            .map(|_| BigRational::new(rng.gen_range(-20..=20).into(), rng.gen_range(1..=5).into()))
            .collect(),
    )
}

#[test]
fn shift_and_scale_invariance() {
    let q = Quiver::from_type("D5".parse().unwrap(), "0110").unwrap();
    let sys = generate_system(&q, DEFAULT_SEED).unwrap();
    let rows = sys.matrix();
    for r in &rows {
        assert_eq!(r.iter().sum::<i64>(), 0);
    }
    let FeasibilityResult::Witness(x) = solve_strict(&rows).unwrap() else {
        panic!("D5 should admit a total stability condition");
    };
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let theta = random_theta(&mut rng, 5);
        let c = BigRational::new(rng.gen_range(-50..=50).into(), rng.gen_range(1..=7).into());
        let k = BigRational::new(rng.gen_range(1..=50).into(), rng.gen_range(1..=7).into());

        let base: Vec<usize> = verify_total(&theta, &sys)
            .unwrap()
            .iter()
            .map(|v| v.index)
            .collect();
        let shifted = Theta(theta.0.iter().map(|t| t + &c).collect());
        let scaled = Theta(theta.0.iter().map(|t| t * &k).collect());
        let idx = |t: &Theta| -> Vec<usize> {
            verify_total(t, &sys)
                .unwrap()
                .iter()
                .map(|v| v.index)
                .collect()
        };
        assert_eq!(idx(&shifted), base);
        assert_eq!(idx(&scaled), base);

        let moved: Vec<BigRational> = x.iter().map(|v| v * &k + &c).collect();
        assert!(verify_witness(&rows, &moved));
        assert!(verify_total(&Theta(moved), &sys).unwrap().is_empty());
    }
}

#[test]
fn e7_minimal_subsystem_uses_the_smallest_modules() {
    let q = Quiver::e7_counterexample();
    let sys = generate_system(&q, DEFAULT_SEED).unwrap();
    let mis = minimal_infeasible_subsystem(&sys.matrix()).unwrap();
    let raws: Vec<Vec<i64>> = mis
        .indices
        .iter()
        .map(|&i| sys.rows[i].raw.clone())
        .collect();
    assert_eq!(
        raws,
        vec![
            vec![0, 0, -1, 1, 0, 0, 0],
            vec![0, -3, -1, 2, 0, 0, 2],
            vec![0, -4, -1, -1, 3, 0, 3],
            vec![-2, 5, 5, -2, -2, -2, -2],
            vec![4, 4, -2, -2, -2, 4, -6],
        ]
    );
    let ints: Vec<i64> = mis
        .certificate
        .iter()
        .map(|c| c.to_integer().try_into().unwrap())
        .collect();
    assert_eq!(ints, vec![2, 1, 1, 1, 1]);
}
