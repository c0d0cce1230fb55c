//! Fixed-point weights and the intersection criterion for Białynicki-Birula
//! cells, with the toric case for lattice polygons.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orders::Weight2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPoint {
    pub id: String,
    pub phi: i64,
}

/// Fixed points with the weights `Φ(v)` of the line bundle fibres.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointTable {
    entries: Vec<FixedPoint>,
}

impl FixedPointTable {
    pub fn new(entries: Vec<FixedPoint>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for e in &entries {
            if !seen.insert(e.id.as_str()) {
                return Err(Error::DuplicateFixedPoint(e.id.clone()));
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[FixedPoint] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Result<&FixedPoint> {
        self.entries
            .iter()
            .find(|e| e.id == id)
            .ok_or_else(|| Error::UnknownFixedPoint(id.to_string()))
    }

    /// Entries by increasing `Φ`, ties broken by id.
    pub fn sorted_by_phi(&self) -> Vec<&FixedPoint> {
        let mut out: Vec<&FixedPoint> = self.entries.iter().collect();
        out.sort_by(|a, b| a.phi.cmp(&b.phi).then_with(|| a.id.cmp(&b.id)));
        out
    }

    /// Matrix of [`intersection_allowed`] over the entries sorted by `Φ`.
    pub fn allowed_mask(&self) -> IntersectionMask {
        let sorted = self.sorted_by_phi();
        let allowed = sorted
            .iter()
            .map(|v| sorted.iter().map(|w| allowed(v, w)).collect())
            .collect();
        IntersectionMask {
            ids: sorted.iter().map(|e| e.id.clone()).collect(),
            phis: sorted.iter().map(|e| e.phi).collect(),
            allowed,
        }
    }
}

fn allowed(v: &FixedPoint, w: &FixedPoint) -> bool {
    v.id == w.id || v.phi < w.phi
}

/// `X_v ∩ X^w` can be non-empty only if `v = w` or `Φ(v) < Φ(w)`.
pub fn intersection_allowed(table: &FixedPointTable, v: &str, w: &str) -> Result<bool> {
    Ok(allowed(table.get(v)?, table.get(w)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionMask {
    pub ids: Vec<String>,
    pub phis: Vec<i64>,
    pub allowed: Vec<Vec<bool>>,
}

impl IntersectionMask {
    pub fn is_upper_unitriangular(&self) -> bool {
        self.allowed.iter().enumerate().all(|(i, row)| {
            row[i] && row[..i].iter().all(|&a| !a)
        })
    }
}

pub type Point = (i64, i64);

fn cross(o: Point, a: Point, b: Point) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn primitive(v: Point) -> Point {
    let g = gcd(v.0, v.1);
    (v.0 / g, v.1 / g)
}

/// A convex lattice polygon with vertices listed counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<[i64; 2]>", into = "Vec<[i64; 2]>")]
pub struct LatticePolygon {
    vertices: Vec<Point>,
}

impl TryFrom<Vec<[i64; 2]>> for LatticePolygon {
    type Error = Error;

    fn try_from(v: Vec<[i64; 2]>) -> Result<Self> {
        Self::new(v.into_iter().map(|[x, y]| (x, y)).collect())
    }
}

impl From<LatticePolygon> for Vec<[i64; 2]> {
    fn from(p: LatticePolygon) -> Self {
        p.vertices.into_iter().map(|(x, y)| [x, y]).collect()
    }
}

impl LatticePolygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidPolygon(format!("{n} vertices, need at least 3")));
        }
        let distinct: BTreeSet<Point> = vertices.iter().copied().collect();
        if distinct.len() != n {
            return Err(Error::InvalidPolygon("repeated vertex".into()));
        }
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            for (j, &c) in vertices.iter().enumerate() {
                if j != i && j != (i + 1) % n && cross(a, b, c) <= 0 {
                    return Err(Error::InvalidPolygon(format!(
                        "vertex {c:?} is not strictly left of edge {a:?} -> {b:?}"
                    )));
                }
            }
        }
        Ok(Self { vertices })
    }

    /// Convex hull of a point set (monotone chain), dropping collinear points.
    pub fn convex_hull(points: &[Point]) -> Result<Self> {
        let mut pts: Vec<Point> = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        if pts.len() < 3 {
            return Self::new(pts);
        }
        let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
        for pass in 0..2 {
            let start = hull.len();
            let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 {
                Box::new(pts.iter())
            } else {
                Box::new(pts.iter().rev())
            };
            for &p in iter {
                while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                    hull.pop();
                }
                hull.push(p);
            }
            hull.pop();
        }
        Self::new(hull)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn translate(&self, (tx, ty): Point) -> Self {
        Self {
            vertices: self.vertices.iter().map(|&(x, y)| (x + tx, y + ty)).collect(),
        }
    }

    fn index_of(&self, v: Point) -> Result<usize> {
        self.vertices
            .iter()
            .position(|&p| p == v)
            .ok_or_else(|| Error::UnknownFixedPoint(vertex_id(v)))
    }

    /// `E_v`: the first lattice points on the two edges leaving `v`, towards
    /// the next and the previous vertex.
    pub fn edge_neighbors(&self, v: Point) -> Result<[Point; 2]> {
        let i = self.index_of(v)?;
        let n = self.vertices.len();
        let step = |w: Point| {
            let (dx, dy) = primitive((w.0 - v.0, w.1 - v.1));
            (v.0 + dx, v.1 + dy)
        };
        Ok([step(self.vertices[(i + 1) % n]), step(self.vertices[(i + n - 1) % n])])
    }

    /// Every vertex cone is unimodular.
    pub fn is_smooth(&self) -> bool {
        self.vertices.iter().all(|&v| {
            let [a, b] = self.edge_neighbors(v).expect("own vertex");
            let det = (a.0 - v.0) * (b.1 - v.1) - (a.1 - v.1) * (b.0 - v.0);
            det.abs() == 1
        })
    }
}

pub fn vertex_id((x, y): Point) -> String {
    format!("({x},{y})")
}

fn check_separating(p: &LatticePolygon, lambda: Weight2) -> Result<()> {
    let vs = p.vertices();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if lambda.dot(a) == lambda.dot(b) {
                return Err(Error::NonGenericWeight(
                    lambda.xi1,
                    lambda.xi2,
                    format!("vertices {} and {} tie", vertex_id(a), vertex_id(b)),
                ));
            }
        }
    }
    Ok(())
}

/// `Φ(v) = −⟨λ, v⟩` at each vertex.
pub fn toric_phi(p: &LatticePolygon, lambda: Weight2) -> Result<FixedPointTable> {
    check_separating(p, lambda)?;
    FixedPointTable::new(
        p.vertices()
            .iter()
            .map(|&v| FixedPoint {
                id: vertex_id(v),
                phi: -lambda.dot(v),
            })
            .collect(),
    )
}

/// `E_v` split by the sign of `⟨λ, α − v⟩`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CellSigns {
    pub up: Vec<Point>,
    pub down: Vec<Point>,
}

impl fmt::Display for CellSigns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |pts: &[Point]| pts.iter().map(|&p| vertex_id(p)).collect::<Vec<_>>().join(" ");
        write!(f, "up=[{}] down=[{}]", list(&self.up), list(&self.down))
    }
}

pub fn toric_cell_signs(p: &LatticePolygon, v: Point, lambda: Weight2) -> Result<CellSigns> {
    check_separating(p, lambda)?;
    let mut signs = CellSigns::default();
    for a in p.edge_neighbors(v)? {
        if lambda.dot((a.0 - v.0, a.1 - v.1)) > 0 {
            signs.up.push(a);
        } else {
            signs.down.push(a);
        }
    }
    Ok(signs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> LatticePolygon {
        LatticePolygon::new(vec![(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap()
    }

    fn fp(id: &str, phi: i64) -> FixedPoint {
        FixedPoint { id: id.into(), phi }
    }

    #[test]
    fn criterion() {
        let t = FixedPointTable::new(vec![fp("v", -3), fp("w", 0)]).unwrap();
        assert!(intersection_allowed(&t, "v", "v").unwrap());
        assert!(intersection_allowed(&t, "v", "w").unwrap());
        assert!(!intersection_allowed(&t, "w", "v").unwrap());
        assert!(matches!(intersection_allowed(&t, "x", "v"), Err(Error::UnknownFixedPoint(_))));
        assert!(FixedPointTable::new(vec![fp("v", 1), fp("v", 2)]).is_err());
    }

    #[test]
    fn square_phi() {
        let t = toric_phi(&square(), Weight2::new(1, 2)).unwrap();
        let phis: Vec<(&str, i64)> = t.entries().iter().map(|e| (e.id.as_str(), e.phi)).collect();
        assert_eq!(phis, [("(0,0)", 0), ("(1,0)", -1), ("(1,1)", -3), ("(0,1)", -2)]);
        let mask = t.allowed_mask();
        assert_eq!(mask.ids, ["(1,1)", "(0,1)", "(1,0)", "(0,0)"]);
        assert!(mask.is_upper_unitriangular());
        let err = toric_phi(&square(), Weight2::new(1, 1)).unwrap_err();
        assert!(err.to_string().contains("(1,0) and (0,1) tie"), "{err}");
    }

    #[test]
    fn square_signs() {
        let lam = Weight2::new(1, 2);
        let src = toric_cell_signs(&square(), (0, 0), lam).unwrap();
        assert_eq!(src.up.len(), 2);
        assert!(src.down.is_empty());
        let sink = toric_cell_signs(&square(), (1, 1), lam).unwrap();
        assert!(sink.up.is_empty());
        assert!(toric_cell_signs(&square(), (2, 2), lam).is_err());
    }

    #[test]
    fn polygon_validation() {
        assert!(LatticePolygon::new(vec![(0, 0), (1, 0)]).is_err());
        assert!(LatticePolygon::new(vec![(0, 0), (0, 1), (1, 1), (1, 0)]).is_err());
        assert!(LatticePolygon::new(vec![(0, 0), (1, 0), (2, 0), (0, 1)]).is_err());
        assert!(LatticePolygon::new(vec![(0, 0), (1, 0), (1, 0), (0, 1)]).is_err());
        // Pentagram: every turn is left but it winds twice.
        let star = vec![(0, 3), (-2, -3), (3, 1), (-3, 1), (2, -3)];
        assert!(LatticePolygon::new(star).is_err());
        let p: LatticePolygon = serde_json::from_str("[[0,0],[2,0],[0,2]]").unwrap();
        assert_eq!(p.edge_neighbors((0, 0)).unwrap(), [(1, 0), (0, 1)]);
        assert!(p.is_smooth());
        assert!(!LatticePolygon::new(vec![(0, 0), (2, 1), (1, 2)]).unwrap().is_smooth());
        assert!(square().is_smooth());
    }

    #[test]
    fn hull() {
        let h = LatticePolygon::convex_hull(&[(0, 0), (2, 0), (1, 0), (1, 1), (2, 2), (0, 2)]).unwrap();
        assert_eq!(h.vertices(), [(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert!(LatticePolygon::convex_hull(&[(0, 0), (1, 1), (2, 2)]).is_err());
    }
}
