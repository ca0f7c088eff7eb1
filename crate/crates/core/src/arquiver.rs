//! Auslander–Reiten quiver by knitting on dimension vectors.
//!
//! Starting from the indecomposable projectives and the irreducible maps between
//! them, each node `X` whose predecessors are all settled gets its outgoing
//! arrows, and (unless `X` is injective) its inverse translate
//! `tau^-1 X = sum of successors - X`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::{mat_vec, DimVector, Quiver};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArArrow {
    pub source: usize,
    pub target: usize,
    pub multiplicity: u32,
}

/// Knitted AR quiver. Nodes are indexed in the order knitting created them.
#[derive(Clone, Debug)]
pub struct ArQuiver {
    nodes: Vec<DimVector>,
    arrows: Vec<ArArrow>,
    /// `tau[k] = Some(j)` when node `k` is non-projective and `tau(node k) = node j`.
    tau: Vec<Option<usize>>,
    projective: Vec<bool>,
    injective: Vec<bool>,
    index: HashMap<DimVector, usize>,
}

/// Result of applying the Coxeter transformation to a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Translate {
    Module(DimVector),
    Projective,
}

/// `dim tau M` through the Coxeter matrix, or `Projective` when the image is not
/// a positive vector.
pub fn coxeter_translate(q: &Quiver, d: &DimVector) -> Result<Translate> {
    if !q.is_positive_root(d) {
        return Err(Error::NotARoot(d.0.clone()));
    }
    let image = mat_vec(&q.coxeter_matrix(), &d.to_signed());
    Ok(match DimVector::from_signed(&image) {
        Some(v) if !v.is_zero() => Translate::Module(v),
        _ => Translate::Projective,
    })
}

pub fn knit(q: &Quiver) -> Result<ArQuiver> {
    let n = q.vertex_count();
    let injectives: Vec<DimVector> = (0..n).map(|i| q.injective_dim(i)).collect();

    let mut nodes: Vec<DimVector> = (0..n).map(|i| q.projective_dim(i)).collect();
    let mut index: HashMap<DimVector, usize> = HashMap::new();
    for (k, d) in nodes.iter().enumerate() {
        index.insert(d.clone(), k);
    }
    // predecessors[k] / successors[k]: (node, multiplicity)
    let mut preds: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    let mut succs: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    // rad P_i = sum of P_j over arrows i -> j, so each arrow i -> j gives P_j -> P_i.
    for a in q.arrows() {
        preds[a.source].push((a.target, 1));
        succs[a.target].push((a.source, 1));
    }
    let mut tau: Vec<Option<usize>> = vec![None; n];
    let mut tau_inv: Vec<Option<usize>> = vec![None; n];
    let mut settled: Vec<bool> = vec![false; n];
    let mut projective = vec![true; n];

    while let Some(x) =
        (0..nodes.len()).find(|&k| !settled[k] && preds[k].iter().all(|&(p, _)| settled[p]))
    {
        settled[x] = true;
        // arrows X -> tau^-1 Z for each arrow Z -> X with Z non-injective
        for (z, mult) in preds[x].clone() {
            if let Some(y) = tau_inv[z] {
                succs[x].push((y, mult));
                preds[y].push((x, mult));
            }
        }
        if injectives.contains(&nodes[x]) {
            continue;
        }
        let mut next = nodes[x]
            .to_signed()
            .iter()
            .map(|c| -c)
            .collect::<Vec<i64>>();
        for &(s, mult) in &succs[x] {
            for (c, v) in next.iter_mut().zip(&nodes[s].0) {
                *c += mult as i64 * *v as i64;
            }
        }
        let dim = DimVector::from_signed(&next)
            .filter(|v| !v.is_zero() && q.is_positive_root(v))
            .ok_or_else(|| {
                Error::Knitting(format!(
                    "mesh at {} produced {:?}, not a positive root",
                    nodes[x], next
                ))
            })?;
        if index.contains_key(&dim) {
            return Err(Error::Knitting(format!("{dim} produced twice")));
        }
        let y = nodes.len();
        index.insert(dim.clone(), y);
        nodes.push(dim);
        preds.push(Vec::new());
        succs.push(Vec::new());
        tau.push(Some(x));
        tau_inv.push(None);
        tau_inv[x] = Some(y);
        settled.push(false);
        projective.push(false);
    }

    if let Some(k) = settled.iter().position(|s| !s) {
        return Err(Error::Knitting(format!("node {} never settled", nodes[k])));
    }
    let mut merged: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for (s, list) in succs.iter().enumerate() {
        for &(t, mult) in list {
            *merged.entry((s, t)).or_default() += mult;
        }
    }
    let arrows = merged
        .into_iter()
        .map(|((source, target), multiplicity)| ArArrow {
            source,
            target,
            multiplicity,
        })
        .collect();
    let injective = nodes.iter().map(|d| injectives.contains(d)).collect();
    Ok(ArQuiver {
        nodes,
        arrows,
        tau,
        projective,
        injective,
        index,
    })
}

impl ArQuiver {
    pub fn nodes(&self) -> &[DimVector] {
        &self.nodes
    }

    pub fn arrows(&self) -> &[ArArrow] {
        &self.arrows
    }

    pub fn node_index(&self, d: &DimVector) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub fn is_projective(&self, k: usize) -> bool {
        self.projective[k]
    }

    pub fn is_injective(&self, k: usize) -> bool {
        self.injective[k]
    }

    /// `tau` of a node, `None` on projectives.
    pub fn tau(&self, d: &DimVector) -> Option<&DimVector> {
        let k = self.node_index(d)?;
        self.tau[k].map(|j| &self.nodes[j])
    }

    /// Nodes with an arrow into `k`, with multiplicities.
    pub fn predecessors(&self, k: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.arrows
            .iter()
            .filter(move |a| a.target == k)
            .map(|a| (a.source, a.multiplicity))
    }

    pub fn multiplicity(&self, source: usize, target: usize) -> u32 {
        self.arrows
            .iter()
            .find(|a| a.source == source && a.target == target)
            .map_or(0, |a| a.multiplicity)
    }

    /// Middle term of the almost split sequence ending at `m`, one entry per
    /// indecomposable summand (repeated by multiplicity), sorted.
    pub fn almost_split_middle(&self, m: &DimVector) -> Result<Vec<DimVector>> {
        let k = self
            .node_index(m)
            .ok_or_else(|| Error::NotARoot(m.0.clone()))?;
        if self.projective[k] {
            return Err(Error::Projective);
        }
        let mut middle: Vec<DimVector> = self
            .predecessors(k)
            .flat_map(|(p, mult)| std::iter::repeat_n(self.nodes[p].clone(), mult as usize))
            .collect();
        middle.sort();
        Ok(middle)
    }

    /// Arrows that increase total dimension; irreducible maps between
    /// indecomposables are injective or surjective, so these are the injective ones.
    pub fn irreducible_inclusions(&self) -> Vec<(DimVector, DimVector)> {
        self.arrows
            .iter()
            .filter(|a| self.nodes[a.source].total() < self.nodes[a.target].total())
            .map(|a| (self.nodes[a.source].clone(), self.nodes[a.target].clone()))
            .collect()
    }

    /// Non-projective nodes where `tau M + M` differs from the sum over arrows into `M`.
    pub fn mesh_violations(&self) -> Vec<DimVector> {
        (0..self.nodes.len())
            .filter_map(|k| {
                let t = self.tau[k]?;
                let lhs = self.nodes[t].add(&self.nodes[k]);
                let mut rhs = DimVector::zero(lhs.len());
                for (p, mult) in self.predecessors(k) {
                    for _ in 0..mult {
                        rhs = rhs.add(&self.nodes[p]);
                    }
                }
                (lhs != rhs).then(|| self.nodes[k].clone())
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Arrow<'a> {
            source: &'a DimVector,
            target: &'a DimVector,
            multiplicity: u32,
        }
        #[derive(Serialize)]
        struct Json<'a> {
            nodes: &'a [DimVector],
            arrows: Vec<Arrow<'a>>,
            tau: Vec<[&'a DimVector; 2]>,
            projectives: Vec<&'a DimVector>,
            injectives: Vec<&'a DimVector>,
        }
        let json = Json {
            nodes: &self.nodes,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    source: &self.nodes[a.source],
                    target: &self.nodes[a.target],
                    multiplicity: a.multiplicity,
                })
                .collect(),
            tau: (0..self.nodes.len())
                .filter_map(|k| self.tau[k].map(|t| [&self.nodes[k], &self.nodes[t]]))
                .collect(),
            projectives: (0..self.nodes.len())
                .filter(|&k| self.projective[k])
                .map(|k| &self.nodes[k])
                .collect(),
            injectives: (0..self.nodes.len())
                .filter(|&k| self.injective[k])
                .map(|k| &self.nodes[k])
                .collect(),
        };
        serde_json::to_value(json).expect("AR quiver serializes")
    }

    /// Graphviz rendering; dashed edges are `tau`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ar {\n  rankdir=LR;\n");
        for (k, d) in self.nodes.iter().enumerate() {
            let shape = if self.projective[k] {
                "box"
            } else if self.injective[k] {
                "diamond"
            } else {
                "ellipse"
            };
            let _ = writeln!(out, "  n{k} [label=\"{}\", shape={shape}];", d.key());
        }
        for a in &self.arrows {
            let label = if a.multiplicity > 1 {
                format!(" [label=\"{}\"]", a.multiplicity)
            } else {
                String::new()
            };
            let _ = writeln!(out, "  n{} -> n{}{label};", a.source, a.target);
        }
        for (k, t) in self.tau.iter().enumerate() {
            if let Some(t) = t {
                let _ = writeln!(out, "  n{k} -> n{t} [style=dashed, constraint=false];");
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::new(2, &[(2, 1)]).unwrap()
    }

    #[test]
    fn knits_a2() {
        let ar = knit(&a2()).unwrap();
        let mut nodes = ar.nodes().to_vec();
        nodes.sort();
        assert_eq!(nodes, vec![[0, 1].into(), [1, 0].into(), [1, 1].into()]);
        assert_eq!(
            ar.irreducible_inclusions(),
            vec![(DimVector::from([1, 0]), DimVector::from([1, 1]))]
        );
        assert_eq!(ar.arrows().len(), 2);
        assert_eq!(ar.tau(&[0, 1].into()), Some(&DimVector::from([1, 0])));
        assert_eq!(ar.tau(&[1, 1].into()), None);
        assert_eq!(
            ar.almost_split_middle(&[0, 1].into()).unwrap(),
            vec![DimVector::from([1, 1])]
        );
        assert!(matches!(
            ar.almost_split_middle(&[1, 1].into()),
            Err(Error::Projective)
        ));
    }

    #[test]
    fn e7_almost_split_sequence() {
        let q = Quiver::e7_counterexample();
        let ar = knit(&q).unwrap();
        assert_eq!(ar.nodes().len(), 63);
        let m: DimVector = [1, 1, 2, 2, 2, 1, 1].into();
        assert_eq!(
            ar.almost_split_middle(&m).unwrap(),
            vec![[0, 0, 1, 1, 1, 0, 1].into(), [1, 2, 3, 3, 2, 1, 1].into()]
        );
        let tau_m = DimVector::from([0, 1, 2, 2, 1, 0, 1]);
        assert_eq!(ar.tau(&m), Some(&tau_m));
        assert_eq!(coxeter_translate(&q, &m).unwrap(), Translate::Module(tau_m));
        assert!(ar.mesh_violations().is_empty());
    }

    #[test]
    fn coxeter_translate_a2() {
        let q = a2();
        assert_eq!(
            coxeter_translate(&q, &[0, 1].into()).unwrap(),
            Translate::Module([1, 0].into())
        );
        assert_eq!(
            coxeter_translate(&q, &[1, 1].into()).unwrap(),
            Translate::Projective
        );
        assert!(coxeter_translate(&q, &[2, 1].into()).is_err());
    }

    #[test]
    fn exports() {
        let ar = knit(&a2()).unwrap();
        let json = ar.to_json();
        assert_eq!(json["nodes"].as_array().unwrap().len(), 3);
        assert_eq!(json["tau"], serde_json::json!([[[0, 1], [1, 0]]]));
        let dot = ar.to_dot();
        assert!(dot.starts_with("digraph ar {"));
        assert!(dot.contains("style=dashed"));
    }
}
