//! Explicit representations over the rationals.
//!
//! Indecomposables are produced with BGP reflection functors, homomorphism
//! spaces are solved exactly, and injectivity of a generic homomorphism is
//! tested by evaluating random combinations over the prime field `2^61 - 1`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Field, Fp, Matrix, P61, Q};
use crate::quiver::{DimVector, Quiver};

/// Number of independent random evaluations in [`generic_rank`].
pub const RANK_TRIALS: usize = 5;

/// A representation: a space of dimension `dims[v]` per vertex and, for each
/// arrow `a: s -> t`, a `dims[t] x dims[s]` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    quiver: Quiver,
    dims: DimVector,
    maps: Vec<Matrix<Q>>,
}

impl Representation {
    pub fn new(quiver: Quiver, dims: DimVector, maps: Vec<Matrix<Q>>) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: quiver.vertex_count(),
                got: dims.len(),
            });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::LengthMismatch {
                expected: quiver.arrows().len(),
                got: maps.len(),
            });
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            let shape = (dims.0[a.target] as usize, dims.0[a.source] as usize);
            if (m.rows(), m.cols()) != shape {
                return Err(Error::Parse(format!(
                    "map on arrow {}->{} has shape {}x{}, expected {}x{}",
                    a.source + 1,
                    a.target + 1,
                    m.rows(),
                    m.cols(),
                    shape.0,
                    shape.1
                )));
            }
        }
        Ok(Representation { quiver, dims, maps })
    }

    pub fn zero(quiver: &Quiver) -> Self {
        let dims = DimVector::zero(quiver.vertex_count());
        let maps = quiver
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(0, 0))
            .collect();
        Representation {
            quiver: quiver.clone(),
            dims,
            maps,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix<Q>] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.total() as usize
    }

    fn dim(&self, v: usize) -> usize {
        self.dims.0[v] as usize
    }

    /// Direct sum with block diagonal maps.
    pub fn direct_sum(parts: &[&Representation]) -> Representation {
        let quiver = parts[0].quiver.clone();
        let n = quiver.vertex_count();
        let dims = DimVector(
            (0..n)
                .map(|v| parts.iter().map(|p| p.dims.0[v]).sum())
                .collect(),
        );
        let maps = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let mut m = Matrix::zeros(dims.0[a.target] as usize, dims.0[a.source] as usize);
                let (mut r0, mut c0) = (0, 0);
                for p in parts {
                    let block = &p.maps[k];
                    for i in 0..block.rows() {
                        for j in 0..block.cols() {
                            m.set(r0 + i, c0 + j, block.get(i, j).clone());
                        }
                    }
                    r0 += p.dim(a.target);
                    c0 += p.dim(a.source);
                }
                m
            })
            .collect();
        Representation { quiver, dims, maps }
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Json<'a> {
            dims: &'a [u32],
            maps: BTreeMap<String, Vec<Vec<String>>>,
        }
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let rows = m
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect())
                    .collect();
                (k.to_string(), rows)
            })
            .collect();
        serde_json::to_value(Json {
            dims: &self.dims.0,
            maps,
        })
        .expect("representation serializes")
    }
}

/// The simple representation at vertex `i`.
pub fn simple_rep(q: &Quiver, i: usize) -> Result<Representation> {
    let n = q.vertex_count();
    if i >= n {
        return Err(Error::VertexOutOfRange(i + 1));
    }
    let dims = DimVector::unit(n, i);
    let maps = q
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(dims.0[a.target] as usize, dims.0[a.source] as usize))
        .collect();
    Ok(Representation {
        quiver: q.clone(),
        dims,
        maps,
    })
}

/// Reflection functor `S_i^+` at a sink: the new space at `i` is the kernel of
/// the sum of all incoming maps.
pub fn reflect_at_sink(
    q: &Quiver,
    i: usize,
    r: &Representation,
) -> Result<(Quiver, Representation)> {
    if i >= q.vertex_count() {
        return Err(Error::VertexOutOfRange(i + 1));
    }
    if !q.is_sink(i) {
        return Err(Error::NotASink(i + 1));
    }
    let incoming: Vec<usize> = (0..q.arrows().len())
        .filter(|&k| q.arrows()[k].target == i)
        .collect();
    let blocks: Vec<&Matrix<Q>> = incoming.iter().map(|&k| &r.maps[k]).collect();
    let h = Matrix::hcat(r.dim(i), &blocks);
    if h.rank() != r.dim(i) {
        return Err(Error::SimpleSummand(i + 1));
    }
    let kernel = h.kernel_matrix();
    let new_dim = kernel.cols();
    let reflected = q.reflect(i);
    let mut maps = r.maps.clone();
    let mut off = 0;
    for &k in &incoming {
        let s = q.arrows()[k].source;
        maps[k] = kernel.submatrix(off..off + r.dim(s), 0..new_dim);
        off += r.dim(s);
    }
    let mut dims = r.dims.clone();
    dims.0[i] = new_dim as u32;
    Ok((
        reflected.clone(),
        Representation::new(reflected, dims, maps)?,
    ))
}

/// Reflection functor `S_i^-` at a source: the new space at `i` is the cokernel
/// of the sum of all outgoing maps.
pub fn reflect_at_source(
    q: &Quiver,
    i: usize,
    r: &Representation,
) -> Result<(Quiver, Representation)> {
    if i >= q.vertex_count() {
        return Err(Error::VertexOutOfRange(i + 1));
    }
    if !q.is_source(i) {
        return Err(Error::NotASource(i + 1));
    }
    let outgoing: Vec<usize> = (0..q.arrows().len())
        .filter(|&k| q.arrows()[k].source == i)
        .collect();
    let blocks: Vec<&Matrix<Q>> = outgoing.iter().map(|&k| &r.maps[k]).collect();
    let g = Matrix::vcat(r.dim(i), &blocks);
    if g.rank() != r.dim(i) {
        return Err(Error::SimpleSummand(i + 1));
    }
    let coker = g.left_kernel_matrix();
    let new_dim = coker.rows();
    let reflected = q.reflect(i);
    let mut maps = r.maps.clone();
    let mut off = 0;
    for &k in &outgoing {
        let t = q.arrows()[k].target;
        maps[k] = coker.submatrix(0..new_dim, off..off + r.dim(t));
        off += r.dim(t);
    }
    let mut dims = r.dims.clone();
    dims.0[i] = new_dim as u32;
    Ok((
        reflected.clone(),
        Representation::new(reflected, dims, maps)?,
    ))
}

/// Sequence of reflections taking `d` over `q` to a simple root: each step is
/// `(vertex, was_sink)` on the quiver current at that step.
///
/// Breadth-first search over (orientation, vector) states, moving only through
/// sinks and sources; neighbours are explored in vertex order so the result is
/// deterministic.
fn reduction_path(q: &Quiver, d: &DimVector) -> Option<(Vec<(usize, bool)>, usize)> {
    let n = q.vertex_count();
    type State = (Vec<bool>, Vec<i64>);
    let flips_of = |flips: &[bool], i: usize| -> Vec<bool> {
        q.arrows()
            .iter()
            .zip(flips)
            .map(|(a, &f)| {
                if a.source == i || a.target == i {
                    !f
                } else {
                    f
                }
            })
            .collect()
    };
    let quiver_of = |flips: &[bool]| -> Quiver {
        let arrows: Vec<(usize, usize)> = q
            .arrows()
            .iter()
            .zip(flips)
            .map(|(a, &f)| {
                if f {
                    (a.target + 1, a.source + 1)
                } else {
                    (a.source + 1, a.target + 1)
                }
            })
            .collect();
        Quiver::new(n, &arrows).expect("reorienting a tree keeps it Dynkin")
    };
    let simple = |v: &[i64]| v.iter().sum::<i64>() == 1;
    let start: State = (vec![false; q.arrows().len()], d.to_signed());
    let mut parent: HashMap<State, Option<(State, usize, bool)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        if simple(&state.1) {
            let target = state.1.iter().position(|&c| c == 1).expect("simple root");
            let mut path = Vec::new();
            let mut cur = state;
            while let Some(Some((prev, i, sink))) = parent.get(&cur).cloned() {
                path.push((i, sink));
                cur = prev;
            }
            path.reverse();
            return Some((path, target));
        }
        let cq = quiver_of(&state.0);
        for i in 0..n {
            let sink = cq.is_sink(i);
            if !sink && !cq.is_source(i) {
                continue;
            }
            let mut w = state.1.clone();
            w[i] -= cq.cartan_pairing(i, &state.1);
            if w.iter().any(|&c| c < 0) {
                continue;
            }
            let next = (flips_of(&state.0, i), w);
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((state.clone(), i, sink)));
                queue.push_back(next);
            }
        }
    }
    None
}

/// Explicit indecomposable with dimension vector `d`, built from a simple
/// representation by reflection functors.
pub fn build_indecomposable(q: &Quiver, d: &DimVector) -> Result<Representation> {
    if !q.is_positive_root(d) {
        return Err(Error::NotARoot(d.0.clone()));
    }
    let (path, target) = reduction_path(q, d).ok_or_else(|| Error::NotARoot(d.0.clone()))?;
    // Quivers along the path, forward.
    let mut quivers = vec![q.clone()];
    for &(i, _) in &path {
        let next = quivers.last().expect("nonempty").reflect(i);
        quivers.push(next);
    }
    let mut rep = simple_rep(quivers.last().expect("nonempty"), target)?;
    for (step, &(i, was_sink)) in path.iter().enumerate().rev() {
        let here = &quivers[step + 1];
        // A sink of quivers[step] is a source of quivers[step + 1], and vice versa.
        let (back, r) = if was_sink {
            reflect_at_source(here, i, &rep)?
        } else {
            reflect_at_sink(here, i, &rep)?
        };
        debug_assert_eq!(back, quivers[step]);
        rep = r;
    }
    debug_assert_eq!(&rep.dims, d);
    Ok(rep)
}

/// Basis of `Hom(N, M)`; each element holds one `dims_M[v] x dims_N[v]` matrix per vertex.
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub source_dims: DimVector,
    pub target_dims: DimVector,
    pub elements: Vec<Vec<Matrix<Q>>>,
}

impl HomBasis {
    pub fn dimension(&self) -> usize {
        self.elements.len()
    }

    /// Entrywise reduction modulo `2^61 - 1`.
    pub fn reduce(&self) -> Vec<Vec<Matrix<Fp>>> {
        self.elements
            .iter()
            .map(|f| {
                f.iter()
                    .map(|m| m.reduce().expect("denominator coprime to 2^61-1"))
                    .collect()
            })
            .collect()
    }
}

/// Solves the intertwiner equations `f_t N_a = M_a f_s` for every arrow `a: s -> t`.
pub fn hom_basis(n: &Representation, m: &Representation) -> HomBasis {
    let q = &n.quiver;
    let nv = q.vertex_count();
    let mut offsets = Vec::with_capacity(nv + 1);
    let mut total = 0;
    for v in 0..nv {
        offsets.push(total);
        total += m.dim(v) * n.dim(v);
    }
    let idx = |v: usize, r: usize, c: usize| offsets[v] + r * n.dim(v) + c;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (k, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let na = &n.maps[k];
        let ma = &m.maps[k];
        for i in 0..m.dim(t) {
            for j in 0..n.dim(s) {
                let mut row = vec![<Q as Field>::zero(); total];
                for kk in 0..n.dim(t) {
                    let c = na.get(kk, j);
                    if !Field::is_zero(c) {
                        row[idx(t, i, kk)] = row[idx(t, i, kk)].add(c);
                    }
                }
                for kk in 0..m.dim(s) {
                    let c = ma.get(i, kk);
                    if !Field::is_zero(c) {
                        row[idx(s, kk, j)] = row[idx(s, kk, j)].sub(c);
                    }
                }
                if row.iter().any(|x| !Field::is_zero(x)) {
                    rows.push(row);
                }
            }
        }
    }
    let solutions = if rows.is_empty() {
        (0..total)
            .map(|c| {
                let mut v = vec![<Q as Field>::zero(); total];
                v[c] = <Q as Field>::one();
                v
            })
            .collect()
    } else {
        Matrix::from_rows(rows).nullspace()
    };
    let elements = solutions
        .into_iter()
        .map(|x| {
            (0..nv)
                .map(|v| {
                    let mut f = Matrix::zeros(m.dim(v), n.dim(v));
                    for r in 0..m.dim(v) {
                        for c in 0..n.dim(v) {
                            f.set(r, c, x[idx(v, r, c)].clone());
                        }
                    }
                    f
                })
                .collect()
        })
        .collect();
    HomBasis {
        source_dims: n.dims.clone(),
        target_dims: m.dims.clone(),
        elements,
    }
}

fn combine<F: Field>(family: &[Vec<Matrix<F>>], coeffs: &[F], v: usize) -> Matrix<F> {
    let shape = (family[0][v].rows(), family[0][v].cols());
    let mut acc = Matrix::zeros(shape.0, shape.1);
    for (f, c) in family.iter().zip(coeffs) {
        acc = acc.add(&f[v].scale(c));
    }
    acc
}

fn rank_mod_p(family: &[Vec<Matrix<Fp>>], coeffs: &[Fp]) -> usize {
    (0..family[0].len())
        .map(|v| combine(family, coeffs, v).rank())
        .sum()
}

fn random_coeffs<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Vec<Fp> {
    (0..len).map(|_| Fp(rng.gen_range(0..P61))).collect()
}

/// Maximum rank of `sum_k lambda_k f_k`, over random `lambda` in [`RANK_TRIALS`] trials.
///
/// A trial reaching `min(dim N, dim M)` stops early. A smaller answer is wrong with
/// probability at most `(dim N / (2^61 - 1))^5`.
pub fn generic_rank<R: Rng + ?Sized>(family: &HomBasis, rng: &mut R) -> usize {
    if family.elements.is_empty() {
        return 0;
    }
    let reduced = family.reduce();
    let cap = family.source_dims.total().min(family.target_dims.total()) as usize;
    let mut best = 0;
    for _ in 0..RANK_TRIALS {
        let coeffs = random_coeffs(reduced.len(), rng);
        best = best.max(rank_mod_p(&reduced, &coeffs));
        if best >= cap {
            break;
        }
    }
    best
}

/// An injective homomorphism, as per-vertex rational matrices, if a random
/// combination of `Hom(N, M)` is injective. The returned map is re-checked exactly.
pub fn find_injection<R: Rng + ?Sized>(
    n: &Representation,
    m: &Representation,
    rng: &mut R,
) -> Option<Vec<Matrix<Q>>> {
    if !n.dims.le(&m.dims) {
        return None;
    }
    let basis = hom_basis(n, m);
    find_injection_in(&basis, rng)
}

pub(crate) fn find_injection_in<R: Rng + ?Sized>(
    basis: &HomBasis,
    rng: &mut R,
) -> Option<Vec<Matrix<Q>>> {
    let total = basis.source_dims.total() as usize;
    if total == 0 {
        return Some(Vec::new());
    }
    if basis.elements.is_empty() {
        return None;
    }
    let reduced = basis.reduce();
    for _ in 0..RANK_TRIALS {
        let coeffs = random_coeffs(reduced.len(), rng);
        if rank_mod_p(&reduced, &coeffs) == total {
            let exact: Vec<Q> = coeffs.iter().map(|c| Q::from_integer(c.0.into())).collect();
            let f: Vec<Matrix<Q>> = (0..basis.source_dims.len())
                .map(|v| combine(&basis.elements, &exact, v))
                .collect();
            let rank: usize = f.iter().map(Matrix::rank).sum();
            assert_eq!(rank, total, "mod-p full rank implies rational full rank");
            return Some(f);
        }
    }
    None
}

/// Whether some homomorphism `N -> M` is injective.
pub fn exists_injection<R: Rng + ?Sized>(
    n: &Representation,
    m: &Representation,
    rng: &mut R,
) -> bool {
    find_injection(n, m, rng).is_some()
}

/// Checks the intertwiner equations for a per-vertex family of matrices.
pub fn is_homomorphism(n: &Representation, m: &Representation, f: &[Matrix<Q>]) -> bool {
    n.quiver
        .arrows()
        .iter()
        .enumerate()
        .all(|(k, a)| f[a.target].mul(&n.maps[k]) == m.maps[k].mul(&f[a.source]))
}

/// All indecomposables of a quiver, one explicit representation per positive root.
#[derive(Clone, Debug)]
pub struct Indecomposables {
    quiver: Quiver,
    roots: Vec<DimVector>,
    reps: Vec<Representation>,
    index: HashMap<DimVector, usize>,
}

impl Indecomposables {
    pub fn build(q: &Quiver) -> Result<Self> {
        let roots = q.positive_roots();
        let reps = roots
            .iter()
            .map(|d| build_indecomposable(q, d))
            .collect::<Result<Vec<_>>>()?;
        let index = roots
            .iter()
            .enumerate()
            .map(|(k, d)| (d.clone(), k))
            .collect();
        Ok(Indecomposables {
            quiver: q.clone(),
            roots,
            reps,
            index,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn roots(&self) -> &[DimVector] {
        &self.roots
    }

    pub fn reps(&self) -> &[Representation] {
        &self.reps
    }

    pub fn index_of(&self, d: &DimVector) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub fn get(&self, d: &DimVector) -> Option<&Representation> {
        self.index_of(d).map(|k| &self.reps[k])
    }
}
