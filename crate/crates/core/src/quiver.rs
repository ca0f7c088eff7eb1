//! Quivers of simply-laced Dynkin type, their root systems and Coxeter transformations.
//!
//! Vertices are labelled `1..=n` in every external format and stored as
//! zero-based indices internally. An arrow `(s, t)` is a map `V_s -> V_t`
//! in a representation.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dimension vector of a representation (or a positive root), one entry per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<u32>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Coordinatewise `self <= other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DimVector)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.0.iter().map(|&c| c as i64).collect()
    }

    /// Converts back from a signed vector; `None` if any coordinate is negative.
    pub fn from_signed(v: &[i64]) -> Option<DimVector> {
        v.iter()
            .map(|&c| u32::try_from(c).ok())
            .collect::<Option<Vec<_>>>()
            .map(DimVector)
    }

    /// Comma separated coordinates, e.g. `1,1,2`.
    pub fn key(&self) -> String {
        self.0
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.key())
    }
}

impl From<Vec<u32>> for DimVector {
    fn from(v: Vec<u32>) -> Self {
        DimVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for DimVector {
    fn from(v: [u32; N]) -> Self {
        DimVector(v.to_vec())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(Error::InvalidQuiver(format!(
                "no Dynkin diagram {family:?}{rank}"
            )))
        }
    }

    /// Edges of the standard labelling, in the order used by orientation bit strings.
    ///
    /// `A_n` is the path `1 - 2 - ... - n`. `D_n` is the path `1 - ... - (n-1)`
    /// plus `(n-2) - n`. `E_n` is the path `1 - ... - (n-1)` plus `3 - n`, so that
    /// `E_7` has branch vertex 3 and branch tip 7.
    pub fn canonical_edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let mut edges = Vec::with_capacity(n.saturating_sub(1));
        match self.family {
            Family::A => {
                for i in 1..n {
                    edges.push((i, i + 1));
                }
            }
            Family::D => {
                for i in 1..n - 1 {
                    edges.push((i, i + 1));
                }
                edges.push((n - 2, n));
            }
            Family::E => {
                for i in 1..n - 1 {
                    edges.push((i, i + 1));
                }
                edges.push((3, n));
            }
        }
        edges
    }

    /// Number of positive roots.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
        }
    }

    pub fn coxeter_number(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n + 1,
            Family::D => 2 * n - 2,
            Family::E => match n {
                6 => 12,
                7 => 18,
                _ => 30,
            },
        }
    }

    /// All orientation bit strings, in increasing binary order.
    pub fn orientations(&self) -> Vec<String> {
        let m = self.rank - 1;
        (0..1u64 << m)
            .map(|k| {
                (0..m)
                    .map(|b| if k >> (m - 1 - b) & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl std::str::FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => {
                return Err(Error::InvalidQuiver(format!(
                    "unknown or non-simply-laced type {s:?}"
                )))
            }
        };
        let rank = chars
            .as_str()
            .trim_start_matches('_')
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad rank in type {s:?}")))?;
        DynkinType::new(family, rank)
    }
}

/// A directed arrow between zero-based vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
}

/// An oriented simply-laced Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    n: usize,
    arrows: Vec<Arrow>,
    dynkin: DynkinType,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum QuiverJson {
    Explicit {
        vertices: usize,
        arrows: Vec<[usize; 2]>,
    },
    Typed {
        #[serde(rename = "type")]
        ty: String,
        #[serde(default)]
        orientation: Option<String>,
    },
}

impl Quiver {
    /// Validates an explicit arrow list over vertices `1..=n`.
    pub fn new(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidQuiver("no vertices".into()));
        }
        let mut seen = HashSet::new();
        let mut stored = Vec::with_capacity(arrows.len());
        for &(s, t) in arrows {
            for v in [s, t] {
                if v == 0 || v > n {
                    return Err(Error::InvalidQuiver(format!("vertex {v} outside 1..={n}")));
                }
            }
            if s == t {
                return Err(Error::InvalidQuiver(format!("loop at vertex {s}")));
            }
            if !seen.insert((s.min(t), s.max(t))) {
                return Err(Error::InvalidQuiver(format!(
                    "multiple edges between {} and {}",
                    s.min(t),
                    s.max(t)
                )));
            }
            stored.push(Arrow {
                source: s - 1,
                target: t - 1,
            });
        }
        if stored.len() != n - 1 {
            return Err(Error::InvalidQuiver(format!(
                "not a tree: {} edges on {n} vertices",
                stored.len()
            )));
        }
        let dynkin = classify_graph(n, &stored)?;
        Ok(Quiver {
            n,
            arrows: stored,
            dynkin,
        })
    }

    /// Builds the standard labelling of `ty`; bit `k` of `orientation` orients the
    /// `k`-th canonical edge `(u, v)`, `u < v`: `'0'` is `u -> v`, `'1'` is `v -> u`.
    pub fn from_type(ty: DynkinType, orientation: &str) -> Result<Self> {
        let edges = ty.canonical_edges();
        let bits: Vec<char> = orientation.trim().chars().collect();
        if bits.len() != edges.len() {
            return Err(Error::Parse(format!(
                "orientation for {ty} needs {} bits, got {:?}",
                edges.len(),
                orientation
            )));
        }
        let arrows = edges
            .iter()
            .zip(&bits)
            .map(|(&(u, v), b)| match b {
                '0' => Ok((u, v)),
                '1' => Ok((v, u)),
                _ => Err(Error::Parse(format!("bad orientation bit {b:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Quiver::new(ty.rank, &arrows)
    }

    /// Parses either `{"vertices": n, "arrows": [[s,t],...]}` or
    /// `{"type": "E7", "orientation": "111110"}`.
    pub fn parse_json(text: &str) -> Result<Self> {
        let parsed: QuiverJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("quiver JSON: {e}")))?;
        match parsed {
            QuiverJson::Explicit { vertices, arrows } => {
                let arrows: Vec<_> = arrows.iter().map(|a| (a[0], a[1])).collect();
                Quiver::new(vertices, &arrows)
            }
            QuiverJson::Typed { ty, orientation } => {
                let ty: DynkinType = ty.parse()?;
                let bits = orientation.unwrap_or_else(|| "0".repeat(ty.rank - 1));
                Quiver::from_type(ty, &bits)
            }
        }
    }

    pub fn to_json(&self) -> String {
        let arrows = self
            .arrows
            .iter()
            .map(|a| [a.source + 1, a.target + 1])
            .collect();
        serde_json::to_string(&QuiverJson::Explicit {
            vertices: self.n,
            arrows,
        })
        .expect("quiver serializes")
    }

    /// The quiver of the running `E_7` example: `2->1, 3->2, 4->3, 5->4, 6->5, 3->7`.
    pub fn e7_counterexample() -> Self {
        Quiver::new(7, &[(2, 1), (3, 2), (4, 3), (5, 4), (6, 5), (3, 7)]).expect("valid E7 quiver")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn classify(&self) -> DynkinType {
        self.dynkin
    }

    pub fn is_sink(&self, i: usize) -> bool {
        self.arrows.iter().all(|a| a.source != i)
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.arrows.iter().all(|a| a.target != i)
    }

    /// Reverses every arrow incident to `i`, keeping arrow indices.
    pub fn reflect(&self, i: usize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                if a.source == i || a.target == i {
                    Arrow {
                        source: a.target,
                        target: a.source,
                    }
                } else {
                    *a
                }
            })
            .collect();
        Quiver {
            n: self.n,
            arrows,
            dynkin: self.dynkin,
        }
    }

    /// Orientation bit string relative to the canonical edge order, when the
    /// quiver uses the standard labelling of its type.
    pub fn orientation_bits(&self) -> Option<String> {
        let mut bits = String::new();
        for (u, v) in self.dynkin.canonical_edges() {
            let a = self.arrows.iter().find(|a| {
                (a.source + 1, a.target + 1) == (u, v) || (a.source + 1, a.target + 1) == (v, u)
            })?;
            bits.push(if a.source + 1 == u { '0' } else { '1' });
        }
        Some(bits)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: len,
            });
        }
        Ok(())
    }

    /// Euler form `<e,d> = sum_i e_i d_i - sum_{a: i->j} e_i d_j`.
    pub fn euler_form(&self, e: &DimVector, d: &DimVector) -> Result<i64> {
        self.check_len(e.len())?;
        self.check_len(d.len())?;
        Ok(self.euler_form_signed(&e.to_signed(), &d.to_signed()))
    }

    pub fn euler_form_signed(&self, e: &[i64], d: &[i64]) -> i64 {
        let diag: i64 = e.iter().zip(d).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows.iter().map(|a| e[a.source] * d[a.target]).sum();
        diag - off
    }

    /// Symmetric Cartan matrix `2I - adjacency`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let mut c = vec![vec![0i64; self.n]; self.n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for a in &self.arrows {
            c[a.source][a.target] -= 1;
            c[a.target][a.source] -= 1;
        }
        c
    }

    /// Cartan pairing of `v` with the simple root at `i`.
    pub fn cartan_pairing(&self, i: usize, v: &[i64]) -> i64 {
        let mut s = 2 * v[i];
        for a in &self.arrows {
            if a.source == i {
                s -= v[a.target];
            } else if a.target == i {
                s -= v[a.source];
            }
        }
        s
    }

    /// `s_i(v) = v - (v, alpha_i) alpha_i`.
    pub fn simple_reflection(&self, i: usize, v: &[i64]) -> Result<Vec<i64>> {
        if i >= self.n {
            return Err(Error::VertexOutOfRange(i + 1));
        }
        self.check_len(v.len())?;
        let mut out = v.to_vec();
        out[i] -= self.cartan_pairing(i, v);
        Ok(out)
    }

    /// Positive roots by breadth-first closure of the simple roots under simple
    /// reflections, sorted by total dimension and then lexicographically.
    pub fn positive_roots(&self) -> Vec<DimVector> {
        let n = self.n;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut v = vec![0i64; n];
            v[i] = 1;
            seen.insert(v.clone());
            queue.push_back(v);
        }
        let bound = self.dynkin.root_count();
        while let Some(v) = queue.pop_front() {
            for i in 0..n {
                let mut w = v.clone();
                w[i] -= self.cartan_pairing(i, &v);
                if w.iter().all(|&c| c >= 0) && !seen.contains(&w) {
                    assert_eq!(gcd_all(&w), 1, "root {w:?} is not primitive");
                    seen.insert(w.clone());
                    queue.push_back(w);
                }
            }
            assert!(seen.len() <= bound, "root closure exceeded {bound}");
        }
        let mut roots: Vec<DimVector> = seen
            .iter()
            .map(|v| DimVector::from_signed(v).expect("nonnegative"))
            .collect();
        roots.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.cmp(b)));
        roots
    }

    pub fn is_positive_root(&self, d: &DimVector) -> bool {
        // (d,d) = 2 characterizes real roots among nonzero vectors for positive definite forms.
        d.len() == self.n && !d.is_zero() && {
            let v = d.to_signed();
            2 * self.euler_form_signed(&v, &v) == 2
        }
    }

    /// Vertex order `i_1, ..., i_n` where each `i_k` is a sink of the quiver with
    /// `i_1..i_{k-1}` removed, smallest label first.
    pub fn sink_order(&self) -> Vec<usize> {
        let mut removed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        while order.len() < self.n {
            let next = (0..self.n)
                .find(|&i| {
                    !removed[i]
                        && self
                            .arrows
                            .iter()
                            .all(|a| a.source != i || removed[a.target])
                })
                .expect("a finite acyclic quiver has a sink");
            removed[next] = true;
            order.push(next);
        }
        order
    }

    /// Coxeter transformation on dimension vectors, `s_{i_n} ... s_{i_1}` over the
    /// sink order. For non-projective indecomposable `M`, `dim tau M = C dim M`.
    pub fn coxeter_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.n;
        let mut m = identity(n);
        for i in self.sink_order() {
            m = mat_mul(&self.reflection_matrix(i), &m);
        }
        m
    }

    fn reflection_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let n = self.n;
        let mut m = identity(n);
        let c = self.cartan_matrix();
        for j in 0..n {
            m[i][j] -= c[i][j];
        }
        m
    }

    /// Multiplicative order of the Coxeter matrix.
    pub fn coxeter_order(&self) -> usize {
        let c = self.coxeter_matrix();
        let id = identity(self.n);
        let mut p = c.clone();
        let mut k = 1;
        while p != id {
            p = mat_mul(&c, &p);
            k += 1;
            assert!(
                k <= 4 * self.n + 4,
                "Coxeter matrix of a Dynkin quiver has finite order"
            );
        }
        k
    }

    /// Dimension vector of the indecomposable projective at `i`: number of paths from `i`.
    pub fn projective_dim(&self, i: usize) -> DimVector {
        let mut d = vec![0u32; self.n];
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            d[v] += 1;
            stack.extend(
                self.arrows
                    .iter()
                    .filter(|a| a.source == v)
                    .map(|a| a.target),
            );
        }
        DimVector(d)
    }

    /// Dimension vector of the indecomposable injective at `i`: number of paths into `i`.
    pub fn injective_dim(&self, i: usize) -> DimVector {
        let mut d = vec![0u32; self.n];
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            d[v] += 1;
            stack.extend(
                self.arrows
                    .iter()
                    .filter(|a| a.target == v)
                    .map(|a| a.source),
            );
        }
        DimVector(d)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.dynkin)?;
        for (k, a) in self.arrows.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}->{}", a.source + 1, a.target + 1)?;
        }
        write!(f, "]")
    }
}

pub(crate) fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub(crate) fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub(crate) fn mat_vec(a: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0, |g, &x| num_integer::gcd(g, x))
}

fn classify_graph(n: usize, arrows: &[Arrow]) -> Result<DynkinType> {
    let mut adj = vec![Vec::new(); n];
    for a in arrows {
        adj[a.source].push(a.target);
        adj[a.target].push(a.source);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(Error::InvalidQuiver(format!(
            "disconnected: vertex {} unreachable from vertex 1",
            v + 1
        )));
    }
    let branches: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    if let Some(&v) = branches.iter().find(|&&v| adj[v].len() > 3) {
        return Err(Error::InvalidQuiver(format!(
            "not Dynkin: vertex {} has degree {}",
            v + 1,
            adj[v].len()
        )));
    }
    match branches.len() {
        0 => DynkinType::new(Family::A, n),
        1 => {
            let center = branches[0];
            let mut arms: Vec<usize> = adj[center]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (center, start, 1);
                    while adj[cur].len() == 2 {
                        let next = if adj[cur][0] == prev {
                            adj[cur][1]
                        } else {
                            adj[cur][0]
                        };
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, _) => DynkinType::new(Family::D, n),
                (1, 2, 2) => DynkinType::new(Family::E, 6),
                (1, 2, 3) => DynkinType::new(Family::E, 7),
                (1, 2, 4) => DynkinType::new(Family::E, 8),
                (a, b, c) => Err(Error::InvalidQuiver(format!(
                    "not Dynkin: branch arms of lengths {a}, {b}, {c}"
                ))),
            }
        }
        _ => Err(Error::InvalidQuiver(format!(
            "not Dynkin: {} branch vertices",
            branches.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::new(2, &[(2, 1)]).unwrap()
    }

    #[test]
    fn parses_e7_counterexample() {
        let q = Quiver::parse_json(
            r#"{"vertices": 7, "arrows": [[2,1],[3,2],[4,3],[5,4],[6,5],[3,7]]}"#,
        )
        .unwrap();
        assert_eq!(q, Quiver::e7_counterexample());
        assert_eq!(q.classify(), DynkinType::new(Family::E, 7).unwrap());
        assert_eq!(q.orientation_bits().as_deref(), Some("111110"));
        let typed = Quiver::parse_json(r#"{"type": "E7", "orientation": "111110"}"#).unwrap();
        assert_eq!(typed, q);
    }

    #[test]
    fn rejects_bad_graphs() {
        let multi = Quiver::new(2, &[(1, 2), (2, 1)]).unwrap_err().to_string();
        assert!(multi.contains("multiple edges"), "{multi}");
        let lp = Quiver::new(2, &[(1, 1)]).unwrap_err().to_string();
        assert!(lp.contains("loop"), "{lp}");
        let cyc = Quiver::new(3, &[(1, 2), (2, 3), (3, 1)])
            .unwrap_err()
            .to_string();
        assert!(cyc.contains("not a tree"), "{cyc}");
        let disc = Quiver::new(4, &[(1, 2), (2, 3), (1, 3)])
            .unwrap_err()
            .to_string();
        assert!(disc.contains("disconnected"), "{disc}");
        // affine D4~: star with four legs
        let star = Quiver::new(5, &[(1, 5), (2, 5), (3, 5), (4, 5)])
            .unwrap_err()
            .to_string();
        assert!(star.contains("degree 4"), "{star}");
        // E6~: arms 2,2,2
        let e6t = Quiver::new(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7)])
            .unwrap_err()
            .to_string();
        assert!(e6t.contains("arms"), "{e6t}");
    }

    #[test]
    fn classifies_small_types() {
        assert_eq!(a2().classify().to_string(), "A2");
        let a3 = Quiver::new(3, &[(1, 2), (3, 2)]).unwrap();
        assert_eq!(a3.classify().to_string(), "A3");
        let d4 = Quiver::new(4, &[(1, 2), (3, 2), (4, 2)]).unwrap();
        assert_eq!(d4.classify().to_string(), "D4");
        assert_eq!(Quiver::new(1, &[]).unwrap().classify().to_string(), "A1");
    }

    #[test]
    fn euler_form_examples() {
        let q = a2();
        assert_eq!(q.euler_form(&[0, 1].into(), &[1, 0].into()).unwrap(), -1);
        assert_eq!(q.euler_form(&[0, 0].into(), &[0, 0].into()).unwrap(), 0);
        let e7 = Quiver::e7_counterexample();
        let d: DimVector = [1, 1, 2, 2, 2, 1, 1].into();
        assert_eq!(e7.euler_form(&d, &d).unwrap(), 1);
        assert!(e7.euler_form(&[1, 0].into(), &d).is_err());
    }

    #[test]
    fn reflections() {
        let q = a2();
        assert_eq!(q.simple_reflection(0, &[1, 1]).unwrap(), vec![0, 1]);
        assert_eq!(q.simple_reflection(1, &[0, 1]).unwrap(), vec![0, -1]);
        assert!(q.simple_reflection(2, &[0, 1]).is_err());
    }

    #[test]
    fn root_counts() {
        let roots: BTreeSet<DimVector> = a2().positive_roots().into_iter().collect();
        let expected: BTreeSet<DimVector> = [[1, 0].into(), [0, 1].into(), [1, 1].into()]
            .into_iter()
            .collect();
        assert_eq!(roots, expected);
        assert_eq!(Quiver::e7_counterexample().positive_roots().len(), 63);
        let d4 = Quiver::new(4, &[(1, 2), (3, 2), (4, 2)]).unwrap();
        assert_eq!(d4.positive_roots().len(), 12);
    }

    #[test]
    fn coxeter_orders() {
        assert_eq!(a2().coxeter_order(), 3);
        assert_eq!(Quiver::e7_counterexample().coxeter_order(), 18);
    }

    #[test]
    fn projective_and_injective_dims() {
        let q = a2();
        assert_eq!(q.projective_dim(1), DimVector::from([1, 1]));
        assert_eq!(q.projective_dim(0), DimVector::from([1, 0]));
        assert_eq!(q.injective_dim(0), DimVector::from([1, 1]));
    }

    #[test]
    fn orientation_strings() {
        let ty: DynkinType = "A3".parse().unwrap();
        assert_eq!(ty.orientations(), vec!["00", "01", "10", "11"]);
        assert!("B3".parse::<DynkinType>().is_err());
        assert!("E9".parse::<DynkinType>().is_err());
        assert!("D3".parse::<DynkinType>().is_err());
    }
}
