//! Hasse diagrams: cover relations of finite strict orders, refinement
//! diffs, and DOT / JSON output.

use std::collections::BTreeSet;
use std::fmt::{Display, Write as _};

use crate::error::{Error, Result};
use crate::orders::{dominance_compare, xi_compare, XiKind};
use crate::partitions::{enumerate, StandardSet};

/// Carriers up to this size are checked for irreflexivity and transitivity.
pub const ORDER_CHECK_LIMIT: usize = 200;

/// Largest `m` accepted by [`refinement_extra_edges`].
pub const MAX_REFINEMENT_M: usize = 12;

/// Cover relations (Hasse edges) over a finite carrier, as index pairs
/// `(smaller, larger)` into `nodes`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSet<T> {
    pub nodes: Vec<T>,
    pub edges: Vec<(usize, usize)>,
}

impl<T: Clone + PartialEq> CoverSet<T> {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_values(&self) -> impl Iterator<Item = (&T, &T)> {
        self.edges.iter().map(|&(a, b)| (&self.nodes[a], &self.nodes[b]))
    }

    pub fn contains_edge(&self, from: &T, to: &T) -> bool {
        self.edge_values().any(|(a, b)| a == from && b == to)
    }

    /// Edges of `self` that are not edges of `other`; `other` is matched by
    /// value so the carriers may be ordered differently.
    pub fn difference(&self, other: &CoverSet<T>) -> CoverSet<T> {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| !other.contains_edge(&self.nodes[a], &self.nodes[b]))
            .collect();
        CoverSet {
            nodes: self.nodes.clone(),
            edges,
        }
    }

    /// True when the edges form a single chain through every node.
    pub fn is_chain(&self) -> bool {
        let n = self.nodes.len();
        if self.edges.len() + 1 != n.max(1) {
            return false;
        }
        let mut out_deg = vec![0usize; n];
        let mut in_deg = vec![0usize; n];
        for &(a, b) in &self.edges {
            out_deg[a] += 1;
            in_deg[b] += 1;
        }
        out_deg.iter().all(|&d| d <= 1)
            && in_deg.iter().all(|&d| d <= 1)
            && in_deg.iter().filter(|&&d| d == 0).count() == 1.min(n)
    }
}

impl<T: Display> CoverSet<T> {
    /// `[[from, to], ...]` with the text encodings of the nodes.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.edges
                .iter()
                .map(|&(a, b)| {
                    serde_json::json!([self.nodes[a].to_string(), self.nodes[b].to_string()])
                })
                .collect(),
        )
    }

    /// DOT digraph, edges pointing from smaller to larger.
    pub fn to_dot(&self) -> String {
        dot(&self.nodes, &[(self, None)])
    }
}

/// Renders several edge layers over one node list. Edges of a layer with a
/// label carry an `order="<label>"` attribute.
pub fn dot<T: Display>(nodes: &[T], layers: &[(&CoverSet<T>, Option<&str>)]) -> String {
    let mut out = String::from("digraph {\n");
    for node in nodes {
        let _ = writeln!(out, "  \"{node}\";");
    }
    for (layer, label) in layers {
        for &(a, b) in &layer.edges {
            let _ = write!(out, "  \"{}\" -> \"{}\"", layer.nodes[a], layer.nodes[b]);
            if let Some(label) = label {
                let _ = write!(out, " [order=\"{label}\"]");
            }
            out.push_str(";\n");
        }
    }
    out.push_str("}\n");
    out
}

/// Computes the cover relations of `strict_less` on `carrier`.
///
/// For carriers of at most [`ORDER_CHECK_LIMIT`] elements the relation is
/// first checked to be irreflexive and transitive; a violation is reported
/// with a witness.
pub fn cover_relations<T, F>(carrier: &[T], mut strict_less: F) -> Result<CoverSet<T>>
where
    T: Clone + Display,
    F: FnMut(&T, &T) -> bool,
{
    let n = carrier.len();
    let less: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| strict_less(&carrier[i], &carrier[j])).collect())
        .collect();
    if n <= ORDER_CHECK_LIMIT {
        for i in 0..n {
            if less[i][i] {
                return Err(Error::NotAStrictOrder(format!("{} < {}", carrier[i], carrier[i])));
            }
            for j in 0..n {
                if !less[i][j] {
                    continue;
                }
                for k in 0..n {
                    if less[j][k] && !less[i][k] {
                        return Err(Error::NotAStrictOrder(format!(
                            "{} < {} < {} but not {} < {}",
                            carrier[i], carrier[j], carrier[k], carrier[i], carrier[k]
                        )));
                    }
                }
            }
        }
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if less[a][b] && !(0..n).any(|c| less[a][c] && less[c][b]) {
                edges.push((a, b));
            }
        }
    }
    Ok(CoverSet {
        nodes: carrier.to_vec(),
        edges,
    })
}

/// Hasse diagram of `(st_m, <)` for the dominance order.
pub fn dominance_hasse(m: usize) -> Result<CoverSet<StandardSet>> {
    let carrier = enumerate(m)?;
    cover_relations(&carrier, |a, b| {
        dominance_compare(a, b).map(|r| r.is_less()).unwrap_or(false)
    })
}

/// Hasse diagram of `(st_m, <_ξ)`; tied pairs are left incomparable.
pub fn xi_hasse(m: usize, kind: XiKind) -> Result<CoverSet<StandardSet>> {
    kind.validate()?;
    let carrier = enumerate(m)?;
    cover_relations(&carrier, |a, b| {
        xi_compare(kind, a, b).map(|r| r.is_less()).unwrap_or(false)
    })
}

/// Cover relations of `<_ξ` on `st_m` that are not cover relations of the
/// dominance order.
pub fn refinement_extra_edges(m: usize, kind: XiKind) -> Result<CoverSet<StandardSet>> {
    if m > MAX_REFINEMENT_M {
        return Err(Error::BoundExceeded {
            what: "m",
            value: m as i64,
            bound: MAX_REFINEMENT_M as i64,
        });
    }
    Ok(xi_hasse(m, kind)?.difference(&dominance_hasse(m)?))
}

/// Sorted edge list by value, for comparing diagrams built over different
/// carriers.
pub fn edge_set<T: Clone + Ord>(cover: &CoverSet<T>) -> BTreeSet<(T, T)> {
    cover
        .edges
        .iter()
        .map(|&(a, b)| (cover.nodes[a].clone(), cover.nodes[b].clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::Weight2;

    #[test]
    fn st2_single_edge() {
        let h = dominance_hasse(2).unwrap();
        assert_eq!(h.to_json(), serde_json::json!([["1,1", "2"]]));
        assert_eq!(h.to_dot(), "digraph {\n  \"2\";\n  \"1,1\";\n  \"1,1\" -> \"2\";\n}\n");
    }

    #[test]
    fn st5_is_a_chain() {
        let h = dominance_hasse(5).unwrap();
        assert_eq!(h.len(), 6);
        assert!(h.is_chain());
    }

    #[test]
    fn st7_mu_chain() {
        let h = xi_hasse(7, XiKind::Mu).unwrap();
        assert_eq!(h.len(), 14);
        assert!(h.is_chain());
    }

    #[test]
    fn rejects_non_transitive_relation() {
        let carrier = vec![0, 1, 2];
        let err = cover_relations(&carrier, |a, b| b - a == 1).unwrap_err();
        assert_eq!(err.to_string(), "relation is not a strict order: 0 < 1 < 2 but not 0 < 2");
        let err = cover_relations(&carrier, |a, b| a <= b).unwrap_err();
        assert!(matches!(err, Error::NotAStrictOrder(_)));
    }

    #[test]
    fn no_extra_edges_up_to_five() {
        for m in 0..=5 {
            for kind in [XiKind::Mu, XiKind::Nu, XiKind::Lambda(Weight2::new(-2, 3))] {
                assert!(refinement_extra_edges(m, kind).unwrap().is_empty());
            }
        }
        assert!(refinement_extra_edges(13, XiKind::Mu).is_err());
    }

    #[test]
    fn st8_lambda_depends_on_sign_of_sum() {
        let a = refinement_extra_edges(8, XiKind::Lambda(Weight2::new(-3, 1))).unwrap();
        let b = refinement_extra_edges(8, XiKind::Lambda(Weight2::new(-1, 3))).unwrap();
        assert_ne!(edge_set(&a), edge_set(&b));
    }
}
