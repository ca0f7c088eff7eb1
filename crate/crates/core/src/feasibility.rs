//! Exact decision of strict homogeneous systems `r_i . x > 0`.
//!
//! By Gordan's theorem exactly one of the following holds: some `x` satisfies
//! every row strictly, or some nonzero `y >= 0` has `sum_i y_i r_i = 0`. Both are
//! read off one bounded linear program,
//!
//! ```text
//! maximize t  subject to  r_i . x >= t,  -B <= x_j <= B,  t >= 0,
//! ```
//!
//! solved with an exact rational simplex under Bland's rule. A positive optimum
//! gives the witness; a zero optimum gives the certificate as the dual
//! multipliers of the row constraints.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FeasibilityResult {
    /// Every row is strictly positive at this point.
    Witness(Vec<Q>),
    /// Nonnegative, nonzero, one entry per row, and `sum_i y_i r_i = 0`.
    Certificate(Vec<Q>),
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityResult::Witness(_))
    }

    pub fn witness(&self) -> Option<&[Q]> {
        match self {
            FeasibilityResult::Witness(x) => Some(x),
            FeasibilityResult::Certificate(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&[Q]> {
        match self {
            FeasibilityResult::Certificate(y) => Some(y),
            FeasibilityResult::Witness(_) => None,
        }
    }
}

fn qi(x: i64) -> Q {
    Q::from_integer(x.into())
}

fn dot(row: &[i64], x: &[Q]) -> Q {
    row.iter().zip(x).map(|(&c, v)| v * qi(c)).sum()
}

/// `r_i . x > 0` for every row, in exact arithmetic.
pub fn verify_witness(rows: &[Vec<i64>], x: &[Q]) -> bool {
    rows.iter()
        .all(|r| r.len() == x.len() && dot(r, x).is_positive())
}

/// `y >= 0`, `y != 0` and `sum_i y_i r_i = 0`, in exact arithmetic.
pub fn verify_certificate(rows: &[Vec<i64>], y: &[Q]) -> bool {
    if y.len() != rows.len() || y.iter().any(Signed::is_negative) || y.iter().all(Zero::is_zero) {
        return false;
    }
    let Some(width) = rows.first().map(Vec::len) else {
        return false;
    };
    if rows.iter().any(|r| r.len() != width) {
        return false;
    }
    (0..width).all(|j| {
        rows.iter()
            .zip(y)
            .map(|(r, yi)| yi * qi(r[j]))
            .sum::<Q>()
            .is_zero()
    })
}

/// Rescales a nonzero rational vector to coprime integers, keeping signs.
pub fn to_primitive_integers(v: &[Q]) -> Vec<Q> {
    let lcm = v
        .iter()
        .fold(num_bigint::BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<num_bigint::BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints
        .iter()
        .fold(num_bigint::BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|x| Q::from_integer(x / &g)).collect()
}

/// Dictionary-form simplex tableau: `basic_i = rhs_i - sum_j a_ij * nonbasic_j`,
/// objective `z = z0 + sum_j c_j * nonbasic_j`.
struct Tableau {
    a: Vec<Vec<Q>>,
    rhs: Vec<Q>,
    c: Vec<Q>,
    z0: Q,
    basic: Vec<usize>,
    nonbasic: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, e: usize) {
        let are = self.a[r][e].clone();
        let inv = are.recip();
        let cols = self.nonbasic.len();
        // new row r expresses the entering variable
        let mut new_row: Vec<Q> = self.a[r].iter().map(|x| x * &inv).collect();
        new_row[e] = inv.clone();
        let new_rhs = &self.rhs[r] * &inv;
        for i in 0..self.a.len() {
            if i == r {
                continue;
            }
            let aie = self.a[i][e].clone();
            if aie.is_zero() {
                continue;
            }
            for j in 0..cols {
                if j == e {
                    self.a[i][j] = -(&aie * &inv);
                } else if !new_row[j].is_zero() {
                    let delta = &aie * &new_row[j];
                    self.a[i][j] -= delta;
                }
            }
            let delta = &aie * &new_rhs;
            self.rhs[i] -= delta;
        }
        let ce = self.c[e].clone();
        if !ce.is_zero() {
            for j in 0..cols {
                if j == e {
                    self.c[j] = -(&ce * &inv);
                } else if !new_row[j].is_zero() {
                    let delta = &ce * &new_row[j];
                    self.c[j] -= delta;
                }
            }
            self.z0 += &ce * &new_rhs;
        }
        self.a[r] = new_row;
        self.rhs[r] = new_rhs;
        std::mem::swap(&mut self.basic[r], &mut self.nonbasic[e]);
    }

    /// Runs to optimality with Bland's rule. The programs built here are bounded.
    fn optimize(&mut self) {
        loop {
            let entering = (0..self.nonbasic.len())
                .filter(|&j| self.c[j].is_positive())
                .min_by_key(|&j| self.nonbasic[j]);
            let Some(e) = entering else {
                return;
            };
            let mut leave: Option<(usize, Q)> = None;
            for i in 0..self.a.len() {
                if !self.a[i][e].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.a[i][e];
                let better = match &leave {
                    None => true,
                    Some((k, best)) => {
                        ratio < *best || (ratio == *best && self.basic[i] < self.basic[*k])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let (r, _) = leave.expect("box constraints keep the program bounded");
            self.pivot(r, e);
        }
    }
}

struct LpOutcome {
    t: Q,
    x: Vec<Q>,
    row_duals: Vec<Q>,
}

/// `maximize t` subject to `r_i . x >= t`, `|x_j| <= bound`, `t >= 0`, with
/// `x = xp - xm`, `0 <= xp, xm <= bound`.
fn solve_lp(rows: &[Vec<i64>], n: usize, bound: &Q) -> LpOutcome {
    let m = rows.len();
    // variables: xp_0..xp_{n-1}, xm_0..xm_{n-1}, t, then slacks for the
    // m row constraints and the 2n box constraints
    let nvars = 2 * n + 1;
    let mut a = Vec::with_capacity(m + 2 * n);
    let mut rhs = Vec::with_capacity(m + 2 * n);
    for r in rows {
        let mut row = vec![Q::zero(); nvars];
        for j in 0..n {
            row[j] = qi(-r[j]);
            row[n + j] = qi(r[j]);
        }
        row[2 * n] = Q::one();
        a.push(row);
        rhs.push(Q::zero());
    }
    for j in 0..2 * n {
        let mut row = vec![Q::zero(); nvars];
        row[j] = Q::one();
        a.push(row);
        rhs.push(bound.clone());
    }
    let mut c = vec![Q::zero(); nvars];
    c[2 * n] = Q::one();
    let mut tab = Tableau {
        a,
        rhs,
        c,
        z0: Q::zero(),
        basic: (nvars..nvars + m + 2 * n).collect(),
        nonbasic: (0..nvars).collect(),
    };
    tab.optimize();

    let mut values = vec![Q::zero(); nvars];
    for (i, &v) in tab.basic.iter().enumerate() {
        if v < nvars {
            values[v] = tab.rhs[i].clone();
        }
    }
    let x = (0..n).map(|j| &values[j] - &values[n + j]).collect();
    let mut row_duals = vec![Q::zero(); m];
    for (j, &v) in tab.nonbasic.iter().enumerate() {
        if v >= nvars && v < nvars + m {
            row_duals[v - nvars] = -tab.c[j].clone();
        }
    }
    LpOutcome {
        t: tab.z0,
        x,
        row_duals,
    }
}

/// Decides `r_i . x > 0` over `dim` variables. An empty system is satisfied by `x = 0`.
pub fn solve_strict_in(dim: usize, rows: &[Vec<i64>]) -> Result<FeasibilityResult> {
    if let Some(r) = rows.iter().find(|r| r.len() != dim) {
        return Err(Error::LengthMismatch {
            expected: dim,
            got: r.len(),
        });
    }
    if let Some(k) = rows.iter().position(|r| r.iter().all(|&c| c == 0)) {
        let mut y = vec![Q::zero(); rows.len()];
        y[k] = Q::one();
        return Ok(FeasibilityResult::Certificate(y));
    }
    if rows.is_empty() {
        return Ok(FeasibilityResult::Witness(vec![Q::zero(); dim]));
    }
    if rows.len() <= ACTIVE_BATCH {
        return Ok(solve_dense(dim, rows));
    }
    solve_by_row_generation(dim, rows)
}

/// Rows added per round of row generation, and the size below which the
/// whole system goes to the simplex at once.
const ACTIVE_BATCH: usize = 48;

fn solve_dense(dim: usize, rows: &[Vec<i64>]) -> FeasibilityResult {
    let mut bound = Q::one();
    loop {
        let lp = solve_lp(rows, dim, &bound);
        if lp.t.is_positive() {
            let x = to_primitive_integers(&lp.x);
            debug_assert!(verify_witness(rows, &x));
            return FeasibilityResult::Witness(x);
        }
        if verify_certificate(rows, &lp.row_duals) {
            return FeasibilityResult::Certificate(to_primitive_integers(&lp.row_duals));
        }
        // Box multipliers took part in the dual identity; a larger box changes them.
        bound *= qi(2);
    }
}

/// Solves a growing subset of rows. A certificate for the subset is one for
/// the whole system after zero padding; a witness is accepted only once it
/// satisfies every row, otherwise the most violated rows join the subset.
fn solve_by_row_generation(dim: usize, rows: &[Vec<i64>]) -> Result<FeasibilityResult> {
    let mut active: Vec<usize> = (0..ACTIVE_BATCH).collect();
    let mut in_active = vec![false; rows.len()];
    for &i in &active {
        in_active[i] = true;
    }
    loop {
        let sub: Vec<Vec<i64>> = active.iter().map(|&i| rows[i].clone()).collect();
        match solve_dense(dim, &sub) {
            FeasibilityResult::Certificate(y_sub) => {
                let mut y = vec![Q::zero(); rows.len()];
                for (&i, v) in active.iter().zip(y_sub) {
                    y[i] = v;
                }
                return Ok(FeasibilityResult::Certificate(y));
            }
            FeasibilityResult::Witness(x) => {
                let mut violated: Vec<(Q, usize)> = rows
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| !in_active[i])
                    .map(|(i, r)| (dot(r, &x), i))
                    .filter(|(v, _)| !v.is_positive())
                    .collect();
                if violated.is_empty() {
                    return Ok(FeasibilityResult::Witness(x));
                }
                violated.sort();
                for (_, i) in violated.into_iter().take(ACTIVE_BATCH) {
                    in_active[i] = true;
                    active.push(i);
                }
            }
        }
    }
}

/// Decides `r_i . x > 0`; rows must be nonempty and of equal length.
pub fn solve_strict(rows: &[Vec<i64>]) -> Result<FeasibilityResult> {
    let dim = rows.first().map(Vec::len).ok_or(Error::EmptySystem)?;
    solve_strict_in(dim, rows)
}

/// Inclusion-minimal infeasible subsystem with a certificate supported on all of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfeasibleSubsystem {
    /// Row indices into the input, ascending.
    pub indices: Vec<usize>,
    /// Positive integer multipliers, aligned with `indices`.
    #[serde(serialize_with = "serialize_rationals")]
    pub certificate: Vec<Q>,
}

fn serialize_rationals<S: serde::Serializer>(
    v: &[Q],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// Finds the shortest infeasible prefix of `rows` by bisection, takes the
/// support of its certificate, then drops rows greedily, highest index first,
/// keeping each drop that leaves the rest infeasible. Earlier rows are thus
/// preferred.
pub fn minimal_infeasible_subsystem(rows: &[Vec<i64>]) -> Result<InfeasibleSubsystem> {
    let mut y = match solve_strict(rows)? {
        FeasibilityResult::Certificate(y) => y,
        FeasibilityResult::Witness(_) => return Err(Error::Feasible),
    };
    let (mut lo, mut hi) = (1, rows.len());
    while lo < hi {
        let mid = (lo + hi) / 2;
        match solve_strict(&rows[..mid])? {
            FeasibilityResult::Certificate(c) => {
                hi = mid;
                y = c;
            }
            FeasibilityResult::Witness(_) => lo = mid + 1,
        }
    }
    if y.len() != hi {
        y = solve_strict(&rows[..hi])?
            .certificate()
            .expect("prefix is infeasible")
            .to_vec();
    }
    let mut keep: Vec<usize> = (0..hi).filter(|&i| !y[i].is_zero()).collect();
    for &drop in keep.clone().iter().rev() {
        let trial: Vec<usize> = keep.iter().copied().filter(|&i| i != drop).collect();
        let sub: Vec<Vec<i64>> = trial.iter().map(|&i| rows[i].clone()).collect();
        if !sub.is_empty() && !solve_strict(&sub)?.is_feasible() {
            keep = trial;
        }
    }
    let sub: Vec<Vec<i64>> = keep.iter().map(|&i| rows[i].clone()).collect();
    let certificate = match solve_strict(&sub)? {
        FeasibilityResult::Certificate(c) => c,
        FeasibilityResult::Witness(_) => unreachable!("kept subset stays infeasible"),
    };
    debug_assert!(certificate.iter().all(Signed::is_positive));
    Ok(InfeasibleSubsystem {
        indices: keep,
        certificate,
    })
}

/// `{"status", "witness", "certificate", "mis"}` with rationals as strings.
pub fn result_json(
    result: &FeasibilityResult,
    mis: Option<&InfeasibleSubsystem>,
) -> serde_json::Value {
    let strings = |v: &[Q]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    serde_json::json!({
        "status": if result.is_feasible() { "feasible" } else { "infeasible" },
        "witness": result.witness().map(strings),
        "certificate": result.certificate().map(strings),
        "mis": mis.map(|m| m.indices.clone()),
    })
}
