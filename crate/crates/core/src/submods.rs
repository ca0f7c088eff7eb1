//! Dimension vectors of submodules of indecomposables.
//!
//! A module `N` with dimension vector `e` is a direct sum of indecomposables whose
//! roots add up to `e`, so `e` is a sub-dimension-vector of `M` exactly when one
//! of those direct sums admits an injective map into `M`. The search walks root
//! multisets depth first and drops any prefix whose direct sum already fails to
//! embed, since a restriction of an injection stays injective.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Field, Fp, Matrix, P61, Q};
use crate::quiver::DimVector;
use crate::repr::{
    find_injection_in, hom_basis, HomBasis, Indecomposables, Representation, RANK_TRIALS,
};

/// All `e` with `0 <= e <= d` coordinatewise, except `0` and `d`, in lexicographic order.
pub fn candidate_vectors(d: &DimVector) -> Vec<DimVector> {
    let mut out = vec![Vec::new()];
    for &c in &d.0 {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=c).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(DimVector)
        .filter(|e| !e.is_zero() && e != d)
        .collect()
}

/// All multisets of `roots` summing to `e`. Each multiset lists roots in the order
/// they appear in `roots`, so no multiset is produced twice.
pub fn root_decompositions(e: &DimVector, roots: &[DimVector]) -> Vec<Vec<DimVector>> {
    fn walk(
        rem: &DimVector,
        roots: &[DimVector],
        start: usize,
        cur: &mut Vec<DimVector>,
        out: &mut Vec<Vec<DimVector>>,
    ) {
        if rem.is_zero() {
            out.push(cur.clone());
            return;
        }
        for k in start..roots.len() {
            if let Some(next) = rem.checked_sub(&roots[k]) {
                cur.push(roots[k].clone());
                walk(&next, roots, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if !e.is_zero() {
        walk(e, roots, 0, &mut Vec::new(), &mut out);
    }
    out
}

struct Summand<'a> {
    rep: &'a Representation,
    basis: HomBasis,
    reduced: Vec<Vec<Matrix<Fp>>>,
}

/// Random `F_p` coefficients per chosen summand, one per Hom basis element.
type Coefficients = Vec<Vec<Fp>>;

/// Submodule search inside one module `M`, with per-root hom spaces cached.
pub struct SubmoduleSearch<'a> {
    catalog: &'a Indecomposables,
    target: &'a Representation,
    /// Roots that individually embed into `M`, largest total dimension first.
    summands: Vec<Summand<'a>>,
    seed: u64,
    /// Outcome of the injection test per multiset of summand indices. Prefixes
    /// recur across the candidate vectors of one target.
    tested: RefCell<HashMap<Vec<usize>, Option<Coefficients>>>,
}

/// A submodule certificate: the summands of `N` and an injective `N -> M`.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub summands: Vec<DimVector>,
    pub map: Vec<Matrix<Q>>,
}

fn stream_id(v: &DimVector, w: &DimVector) -> u64 {
    // FNV-1a over both vectors; only needs to be stable across runs.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for x in v.0.iter().chain([&u32::MAX]).chain(&w.0) {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

impl<'a> SubmoduleSearch<'a> {
    pub fn new(catalog: &'a Indecomposables, target: &'a Representation, seed: u64) -> Self {
        let d = target.dims();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream_id(d, d));
        let mut summands: Vec<Summand<'a>> = catalog
            .reps()
            .iter()
            .filter(|r| r.dims().le(d))
            .filter_map(|rep| {
                let basis = hom_basis(rep, target);
                find_injection_in(&basis, &mut rng)?;
                let reduced = basis.reduce();
                Some(Summand {
                    rep,
                    basis,
                    reduced,
                })
            })
            .collect();
        summands.sort_by(|a, b| {
            b.rep
                .dims()
                .total()
                .cmp(&a.rep.dims().total())
                .then_with(|| a.rep.dims().cmp(b.rep.dims()))
        });
        SubmoduleSearch {
            catalog,
            target,
            summands,
            seed,
            tested: RefCell::new(HashMap::new()),
        }
    }

    pub fn target(&self) -> &Representation {
        self.target
    }

    /// Roots that admit an injection into `M` on their own.
    pub fn embeddable_roots(&self) -> Vec<DimVector> {
        self.summands.iter().map(|s| s.rep.dims().clone()).collect()
    }

    fn column_count(&self, chosen: &[usize], v: usize) -> usize {
        chosen
            .iter()
            .map(|&k| self.summands[k].rep.dims().0[v] as usize)
            .sum()
    }

    /// Random coefficients making `sum of summands -> M` injective, if found.
    fn embed_prefix<R: Rng>(&self, chosen: &[usize], rng: &mut R) -> Option<Vec<Vec<Fp>>> {
        let n = self.target.dims().len();
        for _ in 0..RANK_TRIALS {
            let coeffs: Vec<Vec<Fp>> = chosen
                .iter()
                .map(|&k| {
                    (0..self.summands[k].reduced.len())
                        .map(|_| Fp(rng.gen_range(0..P61)))
                        .collect()
                })
                .collect();
            let ok = (0..n).all(|v| {
                let cols = self.column_count(chosen, v);
                if cols == 0 {
                    return true;
                }
                let rows = self.target.dims().0[v] as usize;
                let blocks: Vec<Matrix<Fp>> = chosen
                    .iter()
                    .zip(&coeffs)
                    .map(|(&k, c)| combine(&self.summands[k].reduced, c, v))
                    .collect();
                let refs: Vec<&Matrix<Fp>> = blocks.iter().collect();
                Matrix::hcat(rows, &refs).rank() == cols
            });
            if ok {
                return Some(coeffs);
            }
        }
        None
    }

    fn certify(&self, chosen: &[usize], coeffs: &[Vec<Fp>]) -> Embedding {
        let n = self.target.dims().len();
        let map: Vec<Matrix<Q>> = (0..n)
            .map(|v| {
                let rows = self.target.dims().0[v] as usize;
                let blocks: Vec<Matrix<Q>> = chosen
                    .iter()
                    .zip(coeffs)
                    .map(|(&k, c)| {
                        let exact: Vec<Q> = c.iter().map(|x| Q::from_integer(x.0.into())).collect();
                        combine(&self.summands[k].basis.elements, &exact, v)
                    })
                    .collect();
                let refs: Vec<&Matrix<Q>> = blocks.iter().collect();
                Matrix::hcat(rows, &refs)
            })
            .collect();
        for (v, f) in map.iter().enumerate() {
            assert_eq!(
                f.rank(),
                self.column_count(chosen, v),
                "mod-p injectivity lifts to the rationals"
            );
        }
        Embedding {
            summands: chosen
                .iter()
                .map(|&k| self.summands[k].rep.dims().clone())
                .collect(),
            map,
        }
    }

    /// An injection from some module of dimension vector `e` into `M`, if any.
    pub fn find_submodule(&self, e: &DimVector) -> Option<Embedding> {
        if e.is_zero() || !e.le(self.target.dims()) {
            return None;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream_id(self.target.dims(), e));
        let mut chosen = Vec::new();
        self.dfs(e, 0, &mut chosen, &mut rng)
    }

    fn dfs(
        &self,
        rem: &DimVector,
        start: usize,
        chosen: &mut Vec<usize>,
        rng: &mut ChaCha8Rng,
    ) -> Option<Embedding> {
        for k in start..self.summands.len() {
            let Some(next) = rem.checked_sub(self.summands[k].rep.dims()) else {
                continue;
            };
            chosen.push(k);
            let known = self.tested.borrow().get(chosen.as_slice()).cloned();
            let outcome = known.unwrap_or_else(|| {
                let fresh = self.embed_prefix(chosen, rng);
                self.tested
                    .borrow_mut()
                    .insert(chosen.clone(), fresh.clone());
                fresh
            });
            if let Some(coeffs) = outcome {
                if next.is_zero() {
                    let found = self.certify(chosen, &coeffs);
                    chosen.pop();
                    return Some(found);
                }
                if let Some(found) = self.dfs(&next, k, chosen, rng) {
                    chosen.pop();
                    return Some(found);
                }
            }
            chosen.pop();
        }
        None
    }

    pub fn is_subdimvector(&self, e: &DimVector) -> bool {
        self.find_submodule(e).is_some()
    }

    /// All proper nonzero sub-dimension-vectors of `M`.
    pub fn sub_dim_vectors(&self) -> BTreeSet<DimVector> {
        candidate_vectors(self.target.dims())
            .into_iter()
            .filter(|e| self.is_subdimvector(e))
            .collect()
    }

    pub fn catalog(&self) -> &Indecomposables {
        self.catalog
    }
}

fn combine<F: Field>(family: &[Vec<Matrix<F>>], coeffs: &[F], v: usize) -> Matrix<F> {
    let (r, c) = (family[0][v].rows(), family[0][v].cols());
    let mut acc = Matrix::zeros(r, c);
    for (f, x) in family.iter().zip(coeffs) {
        acc = acc.add(&f[v].scale(x));
    }
    acc
}

/// Whether some module of dimension vector `e` embeds into `m`.
pub fn is_subdimvector(
    catalog: &Indecomposables,
    m: &Representation,
    e: &DimVector,
    seed: u64,
) -> bool {
    SubmoduleSearch::new(catalog, m, seed).is_subdimvector(e)
}

pub fn sub_dim_vectors(
    catalog: &Indecomposables,
    m: &Representation,
    seed: u64,
) -> BTreeSet<DimVector> {
    SubmoduleSearch::new(catalog, m, seed).sub_dim_vectors()
}

/// Sub-dimension-vectors of every indecomposable of a quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubVectorTable {
    pub entries: BTreeMap<DimVector, BTreeSet<DimVector>>,
}

impl SubVectorTable {
    pub fn build(catalog: &Indecomposables, seed: u64) -> Self {
        let entries = catalog
            .reps()
            .par_iter()
            .map(|m| (m.dims().clone(), sub_dim_vectors(catalog, m, seed)))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        SubVectorTable { entries }
    }

    /// `{"d": ["e", ...]}` with comma separated coordinates.
    pub fn to_json(&self) -> serde_json::Value {
        let map: BTreeMap<String, Vec<String>> = self
            .entries
            .iter()
            .map(|(d, es)| (d.key(), es.iter().map(DimVector::key).collect()))
            .collect();
        serde_json::to_value(map).expect("table serializes")
    }
}

/// Default total-dimension bound for [`oracle_sub_vectors`].
pub const ORACLE_DIM_BOUND: u32 = 8;

/// Exact sub-dimension-vectors of the reduction of `m` modulo a small prime `p`,
/// by enumerating every arrow-stable tuple of subspaces.
pub fn oracle_sub_vectors(m: &Representation, p: u64, bound: u32) -> Result<BTreeSet<DimVector>> {
    let total = m.dims().total();
    if total > bound {
        return Err(Error::OracleBound { dim: total, bound });
    }
    let maps: Vec<Vec<Vec<u64>>> = m
        .maps()
        .iter()
        .map(|a| {
            a.to_rows()
                .iter()
                .map(|row| row.iter().map(|x| reduce_small(x, p)).collect())
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let dims: Vec<usize> = m.dims().0.iter().map(|&c| c as usize).collect();
    let subspaces: Vec<Vec<Vec<Vec<u64>>>> = dims.iter().map(|&k| all_subspaces(k, p)).collect();
    let arrows = m.quiver().arrows();

    let mut found = BTreeSet::new();
    let mut chosen: Vec<&Vec<Vec<u64>>> = Vec::with_capacity(dims.len());
    fn walk<'s>(
        v: usize,
        chosen: &mut Vec<&'s Vec<Vec<u64>>>,
        subspaces: &'s [Vec<Vec<Vec<u64>>>],
        arrows: &[crate::quiver::Arrow],
        maps: &[Vec<Vec<u64>>],
        p: u64,
        found: &mut BTreeSet<DimVector>,
    ) {
        if v == subspaces.len() {
            found.insert(DimVector(chosen.iter().map(|b| b.len() as u32).collect()));
            return;
        }
        for u in &subspaces[v] {
            chosen.push(u);
            let stable = arrows.iter().enumerate().all(|(k, a)| {
                if a.source.max(a.target) != v {
                    return true;
                }
                let (src, dst) = (chosen[a.source], chosen[a.target]);
                src.iter().all(|x| {
                    let image: Vec<u64> = maps[k]
                        .iter()
                        .map(|row| row.iter().zip(x).fold(0, |s, (r, y)| (s + r * y) % p))
                        .collect();
                    in_span(dst, &image, p)
                })
            });
            if stable {
                walk(v + 1, chosen, subspaces, arrows, maps, p, found);
            }
            chosen.pop();
        }
    }
    walk(0, &mut chosen, &subspaces, arrows, &maps, p, &mut found);
    found.remove(m.dims());
    found.retain(|e| !e.is_zero());
    Ok(found)
}

fn reduce_small(x: &Q, p: u64) -> Result<u64> {
    let pb = num_bigint::BigInt::from(p);
    let num = num_integer::Integer::mod_floor(x.numer(), &pb);
    let den = num_integer::Integer::mod_floor(x.denom(), &pb);
    if den.is_zero() {
        return Err(Error::BadPrime(p));
    }
    let num = u64::try_from(num).expect("small residue");
    let den = u64::try_from(den).expect("small residue");
    Ok(num * pow_mod(den, p - 2, p) % p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Row-reduced bases of every subspace of `F_p^k`.
fn all_subspaces(k: usize, p: u64) -> Vec<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    for r in 0..=k {
        for pivots in combinations(k, r) {
            // free entries: row i, columns after pivot i that are not pivots
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(i, &pc)| {
                    let pivots = &pivots;
                    (pc + 1..k)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (i, c))
                })
                .collect();
            let count = (p as usize).pow(free.len() as u32);
            for mut code in 0..count {
                let mut basis = vec![vec![0u64; k]; r];
                for (i, &pc) in pivots.iter().enumerate() {
                    basis[i][pc] = 1;
                }
                for &(i, c) in &free {
                    basis[i][c] = (code % p as usize) as u64;
                    code /= p as usize;
                }
                out.push(basis);
            }
        }
    }
    out
}

fn combinations(k: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    if k < r {
        return Vec::new();
    }
    let mut out = combinations(k - 1, r);
    for mut c in combinations(k - 1, r - 1) {
        c.push(k - 1);
        out.push(c);
    }
    out
}

fn in_span(basis: &[Vec<u64>], x: &[u64], p: u64) -> bool {
    rank_small(basis, p) == {
        let mut with = basis.to_vec();
        with.push(x.to_vec());
        rank_small(&with, p)
    }
}

fn rank_small(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for j in 0..cols {
            m[rank][j] = m[rank][j] * inv % p;
        }
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + p * p - f * m[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}
