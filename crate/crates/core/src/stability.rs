//! Slope functions `mu = theta / dim` and the strict inequality system whose
//! solutions are exactly the `theta` making every indecomposable stable.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::quiver::{DimVector, Quiver};
use crate::repr::Indecomposables;
use crate::submods::SubVectorTable;

/// Linear functional `theta(y) = sum_i x_i y_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theta(pub Vec<Q>);

impl Theta {
    pub fn from_ints(v: &[i64]) -> Self {
        Theta(v.iter().map(|&x| Q::from_integer(x.into())).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, d: &DimVector) -> Q {
        self.0
            .iter()
            .zip(&d.0)
            .map(|(x, &y)| x * Q::from_integer(y.into()))
            .sum()
    }

    /// Parses a JSON array of rationals (`"3/2"`, `"-1"` or plain integers),
    /// optionally wrapped as `{"theta": [...]}`.
    pub fn parse_json(text: &str) -> Result<Theta> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("theta JSON: {e}")))?;
        let list = match &value {
            serde_json::Value::Object(map) => map.get("theta").cloned().unwrap_or_default(),
            other => other.clone(),
        };
        let items = list
            .as_array()
            .ok_or_else(|| Error::Parse("theta must be a JSON array".into()))?;
        items
            .iter()
            .map(|item| match item {
                serde_json::Value::String(s) => parse_rational(s),
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(|x| Q::from_integer(x.into()))
                    .ok_or_else(|| Error::Parse(format!("theta entry {n} is not an integer"))),
                other => Err(Error::Parse(format!("bad theta entry {other}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Theta)
    }
}

pub fn parse_rational(s: &str) -> Result<Q> {
    s.trim()
        .parse::<Q>()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))
}

/// `theta(d) / dim(d)`.
pub fn slope(theta: &Theta, d: &DimVector) -> Result<Q> {
    if d.is_zero() {
        return Err(Error::ZeroVector);
    }
    if theta.len() != d.len() {
        return Err(Error::LengthMismatch {
            expected: d.len(),
            got: theta.len(),
        });
    }
    Ok(theta.apply(d) / Q::from_integer(d.total().into()))
}

/// One strict inequality `row . x > 0`, equivalent to `mu(e) < mu(d)` for a
/// submodule dimension vector `e` of the indecomposable `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    /// Primitive row.
    pub row: Vec<i64>,
    /// `dim(e) * d - dim(d) * e` before dividing by the gcd.
    pub raw: Vec<i64>,
    pub d: DimVector,
    pub e: DimVector,
}

/// Builds the inequality for `mu(e) < mu(d)`.
pub fn inequality_for(e: &DimVector, d: &DimVector) -> Result<Inequality> {
    if e.len() != d.len() {
        return Err(Error::LengthMismatch {
            expected: d.len(),
            got: e.len(),
        });
    }
    if e.is_zero() || d.is_zero() {
        return Err(Error::ZeroVector);
    }
    let (te, td) = (e.total() as i64, d.total() as i64);
    let raw: Vec<i64> =
        d.0.iter()
            .zip(&e.0)
            .map(|(&di, &ei)| te * di as i64 - td * ei as i64)
            .collect();
    let g = raw.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        return Err(Error::DegenerateSlope);
    }
    let row = raw.iter().map(|x| x / g).collect();
    Ok(Inequality {
        row,
        raw,
        d: d.clone(),
        e: e.clone(),
    })
}

/// Deduplicated inequality system for one quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalitySystem {
    pub quiver: Quiver,
    pub rows: Vec<Inequality>,
    /// Pairs `(d, e)` whose primitive row was already present.
    pub duplicates: usize,
}

impl InequalitySystem {
    /// Orders pairs by `dim d`, then `d`, then `e`, and keeps the first pair of
    /// each primitive row.
    pub fn from_table(quiver: &Quiver, table: &SubVectorTable) -> Result<Self> {
        let mut pairs: Vec<(&DimVector, &DimVector)> = table
            .entries
            .iter()
            .flat_map(|(d, es)| es.iter().map(move |e| (d, e)))
            .collect();
        pairs.sort_by(|a, b| {
            a.0.total()
                .cmp(&b.0.total())
                .then_with(|| a.0.cmp(b.0))
                .then_with(|| a.1.cmp(b.1))
        });
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut rows = Vec::new();
        let mut duplicates = 0;
        for (d, e) in pairs {
            let ineq = inequality_for(e, d)?;
            if seen.contains_key(&ineq.row) {
                duplicates += 1;
                continue;
            }
            seen.insert(ineq.row.clone(), rows.len());
            rows.push(ineq);
        }
        Ok(InequalitySystem {
            quiver: quiver.clone(),
            rows,
            duplicates,
        })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.rows.iter().map(|r| r.row.clone()).collect()
    }

    pub fn position(&self, row: &[i64]) -> Option<usize> {
        let g = row.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g == 0 {
            return None;
        }
        let normalized: Vec<i64> = row.iter().map(|x| x / g).collect();
        self.rows.iter().position(|r| r.row == normalized)
    }

    /// `{"rows": [{"r": [...], "d": [...], "e": [...]}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Row<'a> {
            r: &'a [i64],
            d: &'a DimVector,
            e: &'a DimVector,
        }
        #[derive(Serialize)]
        struct Json<'a> {
            rows: Vec<Row<'a>>,
        }
        serde_json::to_value(Json {
            rows: self
                .rows
                .iter()
                .map(|r| Row {
                    r: &r.row,
                    d: &r.d,
                    e: &r.e,
                })
                .collect(),
        })
        .expect("system serializes")
    }

    /// One `0 < ...` line per row with the raw coefficients, annotated with the pair.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let _ = writeln!(out, "{}    # {} < {}", render_inequality(&r.raw), r.e, r.d);
        }
        out
    }
}

/// Renders `0 < c1x1 + c2x2 ...`, skipping zero terms and unit coefficients.
pub fn render_inequality(coeffs: &[i64]) -> String {
    let mut s = String::from("0 <");
    let mut first = true;
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.abs();
        let body = if mag == 1 {
            format!("x{}", i + 1)
        } else {
            format!("{mag}x{}", i + 1)
        };
        match (first, c < 0) {
            (true, false) => write!(s, " {body}"),
            (true, true) => write!(s, " -{body}"),
            (false, false) => write!(s, " + {body}"),
            (false, true) => write!(s, " - {body}"),
        }
        .expect("write to string");
        first = false;
    }
    if first {
        s.push_str(" 0");
    }
    s
}

/// Full pipeline from a quiver to its inequality system.
pub fn generate_system(q: &Quiver, seed: u64) -> Result<InequalitySystem> {
    let catalog = Indecomposables::build(q)?;
    let table = SubVectorTable::build(&catalog, seed);
    InequalitySystem::from_table(q, &table)
}

/// A row not strictly satisfied by `theta`, with the two slopes it compares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub d: DimVector,
    pub e: DimVector,
    pub slope_d: Q,
    pub slope_e: Q,
}

/// Violated rows; empty iff `theta / dim` is a total stability condition.
pub fn verify_total(theta: &Theta, sys: &InequalitySystem) -> Result<Vec<Violation>> {
    let n = sys.quiver.vertex_count();
    if theta.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: theta.len(),
        });
    }
    sys.rows
        .iter()
        .enumerate()
        .filter(|(_, r)| {
            let value: Q = r
                .row
                .iter()
                .zip(&theta.0)
                .map(|(&c, x)| x * Q::from_integer(c.into()))
                .sum();
            !value.is_positive()
        })
        .map(|(index, r)| {
            Ok(Violation {
                index,
                d: r.d.clone(),
                e: r.e.clone(),
                slope_d: slope(theta, &r.d)?,
                slope_e: slope(theta, &r.e)?,
            })
        })
        .collect()
}

/// Counts of rows per indecomposable, for reports.
pub fn rows_per_module(sys: &InequalitySystem) -> BTreeMap<DimVector, usize> {
    let mut out = BTreeMap::new();
    for r in &sys.rows {
        *out.entry(r.d.clone()).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_SEED;

    #[test]
    fn slopes() {
        let d: DimVector = [1, 1].into();
        assert_eq!(
            slope(&Theta::from_ints(&[1, 1]), &d).unwrap(),
            Q::from_integer(1.into())
        );
        assert_eq!(
            slope(&Theta::from_ints(&[0, 1]), &d).unwrap(),
            Q::new(1.into(), 2.into())
        );
        assert_eq!(
            slope(&Theta::from_ints(&[3, -1]), &[2, 2].into()).unwrap(),
            slope(&Theta::from_ints(&[3, -1]), &d).unwrap()
        );
        assert!(matches!(
            slope(&Theta::from_ints(&[0, 1]), &[0, 0].into()),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn inequality_examples() {
        let r =
            inequality_for(&[0, 0, 1, 0, 0, 0, 0].into(), &[0, 0, 1, 1, 0, 0, 0].into()).unwrap();
        assert_eq!(r.row, vec![0, 0, -1, 1, 0, 0, 0]);
        let r =
            inequality_for(&[0, 0, 1, 1, 1, 0, 1].into(), &[1, 1, 2, 2, 2, 1, 1].into()).unwrap();
        assert_eq!(r.raw, vec![4, 4, -2, -2, -2, 4, -6]);
        assert_eq!(r.row, vec![2, 2, -1, -1, -1, 2, -3]);
        assert_eq!(
            render_inequality(&r.raw),
            "0 < 4x1 + 4x2 - 2x3 - 2x4 - 2x5 + 4x6 - 6x7"
        );
        let r = inequality_for(&[1, 0].into(), &[1, 1].into()).unwrap();
        assert_eq!(r.row, vec![-1, 1]);
        assert_eq!(render_inequality(&r.raw), "0 < -x1 + x2");
        assert!(matches!(
            inequality_for(&[1, 1].into(), &[2, 2].into()),
            Err(Error::DegenerateSlope)
        ));
    }

    #[test]
    fn a2_system() {
        let q = Quiver::new(2, &[(2, 1)]).unwrap();
        let sys = generate_system(&q, DEFAULT_SEED).unwrap();
        assert_eq!(sys.matrix(), vec![vec![-1, 1]]);
        assert!(verify_total(&Theta::from_ints(&[0, 1]), &sys)
            .unwrap()
            .is_empty());
        let bad = verify_total(&Theta::from_ints(&[1, 0]), &sys).unwrap();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].e, DimVector::from([1, 0]));
        assert_eq!(
            sys.to_text().lines().next().unwrap(),
            "0 < -x1 + x2    # [1,0] < [1,1]"
        );
        assert!(verify_total(&Theta::from_ints(&[0, 1, 2]), &sys).is_err());
    }

    #[test]
    fn theta_parsing() {
        let t = Theta::parse_json(r#"["1/2", -3, "4"]"#).unwrap();
        assert_eq!(t.0[0], Q::new(1.into(), 2.into()));
        assert_eq!(
            Theta::parse_json(r#"{"theta": [0, 1]}"#).unwrap(),
            Theta::from_ints(&[0, 1])
        );
        assert!(Theta::parse_json(r#"["x"]"#).is_err());
        assert!(Theta::parse_json("{").is_err());
    }
}
