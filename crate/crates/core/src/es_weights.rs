//! Torus weights on `Z³`, their admissibility conditions, and the weight
//! `Φ_{w''}` of the Plücker line bundle at a fixed point.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orders::parse_ints;
use crate::partitions::StandardSet;
use crate::triples::Triple;

/// An integer weight `(w0, w1, w2)` with `w0 + w1 + w2 = 0` and
/// `w0 < w1 < w2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Weight3 {
    w0: i64,
    w1: i64,
    w2: i64,
}

impl Weight3 {
    pub fn new(w0: i64, w1: i64, w2: i64) -> Result<Self> {
        let sum = w0 + w1 + w2;
        if sum != 0 {
            return Err(Error::NonZeroSum { w0, w1, w2, sum });
        }
        if !(w0 < w1 && w1 < w2) {
            return Err(Error::NotIncreasing { w0, w1, w2 });
        }
        Ok(Self { w0, w1, w2 })
    }

    pub fn coords(&self) -> [i64; 3] {
        [self.w0, self.w1, self.w2]
    }

    pub fn dot(&self, a: [i64; 3]) -> i64 {
        self.w0 * a[0] + self.w1 * a[1] + self.w2 * a[2]
    }
}

impl<'de> Deserialize<'de> for Weight3 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [w0, w1, w2] = <[i64; 3]>::deserialize(d)?;
        Self::new(w0, w1, w2).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Weight3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.w0, self.w1, self.w2)
    }
}

impl FromStr for Weight3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_ints(s)?[..] {
            [w0, w1, w2] => Self::new(w0, w1, w2),
            _ => Err(Error::Parse(format!("expected three integers, got {s:?}"))),
        }
    }
}

/// Admissibility of the weight `w` (plane factor) for `n` points:
/// `w0 − w2 < n(w1 − w2)` and `w0 − w1 < 0 < w2 − w1`.
pub fn validate_w(w: &Weight3, n: i64) -> bool {
    let [w0, w1, w2] = w.coords();
    w0 - w2 < n * (w1 - w2) && w0 - w1 < 0 && 0 < w2 - w1
}

/// Admissibility of the weight `w'` (point factor) for `n` points:
/// `w'0 − w'1 < 0 < w'2 − w'1` and `0 < w'1 − w'0 < n(w'2 − w'0)`.
pub fn validate_wprime(w: &Weight3, n: i64) -> bool {
    let [w0, w1, w2] = w.coords();
    w0 - w1 < 0 && 0 < w2 - w1 && 0 < w1 - w0 && w1 - w0 < n * (w2 - w0)
}

/// Which stratum of the projective plane a component is supported on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Point = 0,
    Line = 1,
    Plane = 2,
}

/// Lifts `α ∈ N²` to the degree-`d` simplex in `N³`:
/// plane `(α₁, α₂, d−|α|)`, line `(α₁, d−|α|, α₂)`, point `(d−|α|, α₁, α₂)`.
pub fn embed(slot: Slot, d: i64, (a1, a2): (i64, i64)) -> Result<[i64; 3]> {
    let rest = d - a1 - a2;
    if rest < 0 {
        return Err(Error::DegreeOverflow { a1, a2, d });
    }
    Ok(match slot {
        Slot::Plane => [a1, a2, rest],
        Slot::Line => [a1, rest, a2],
        Slot::Point => [rest, a1, a2],
    })
}

/// `⟨w, Δ_{<d}⟩`, summed over every `α ∈ N³` with `|α| < d`.
pub fn simplex_term(w: &Weight3, d: i64) -> i64 {
    let mut total = 0;
    for a0 in 0..d.max(0) {
        for a1 in 0..d - a0 {
            for a2 in 0..d - a0 - a1 {
                total += w.dot([a0, a1, a2]);
            }
        }
    }
    total
}

fn component_term(w: &Weight3, d: i64, slot: Slot, set: &StandardSet) -> Result<i64> {
    set.cells()
        .map(|cell| embed(slot, d, cell).map(|a| w.dot(a)))
        .sum()
}

/// `Φ_{w''}(Δ₂, Δ₁, Δ₀) = −⟨w'', Δ_{<d}⟩ − Σ_j ⟨w'', ι_j(Δ_j)⟩`.
///
/// The simplex term is evaluated literally; it vanishes because the simplex
/// is symmetric under permuting coordinates and `w''` sums to zero.
pub fn phi(w: &Weight3, d: i64, t: &Triple) -> Result<i64> {
    let n = t.total();
    if d < n as i64 {
        return Err(Error::DegreeTooSmall { d, n });
    }
    let simplex = simplex_term(w, d);
    debug_assert_eq!(simplex, 0);
    Ok(-simplex
        - component_term(w, d, Slot::Plane, &t.d2)?
        - component_term(w, d, Slot::Line, &t.d1)?
        - component_term(w, d, Slot::Point, &t.d0)?)
}

/// The size vector `(|Δ₀| − |Δ'₂|, |Δ₁| − |Δ'₁|, |Δ₂| − |Δ'₀|)` whose pairing
/// with `w''` is the coefficient of `d` in `Φ(ι(t')) − Φ(t)`.
pub fn leading_vector(a: &Triple, b: &Triple) -> Result<[i64; 3]> {
    let (l, r) = (a.total(), b.total());
    if l != r {
        return Err(Error::SizeMismatch { left: l, right: r });
    }
    let (a2, a1, a0) = a.sizes();
    let (b2, b1, b0) = b.sizes();
    let diff = |x: usize, y: usize| x as i64 - y as i64;
    Ok([diff(a0, b2), diff(a1, b1), diff(a2, b0)])
}

/// Sign of `Φ_{w''}(ι(t')) − Φ_{w''}(t)` for all sufficiently large `d`,
/// read off from the `d`-linear term. `Equal` means the difference does not
/// grow with `d`.
pub fn asymptotic_sign(w: &Weight3, a: &Triple, b: &Triple) -> Result<Ordering> {
    Ok(w.dot(leading_vector(a, b)?).cmp(&0))
}

/// `(−K−1, −K, 2K+1)`: `w2 − w1 ≫ w1 − w0`.
pub fn plane_heavy_weight(k: i64) -> Result<Weight3> {
    Weight3::new(-k - 1, -k, 2 * k + 1)
}

/// `(−2K−1, K, K+1)`: `w1 − w0 ≫ w2 − w1`.
pub fn point_heavy_weight(k: i64) -> Result<Weight3> {
    Weight3::new(-2 * k - 1, k, k + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w3(a: i64, b: i64, c: i64) -> Weight3 {
        Weight3::new(a, b, c).unwrap()
    }

    fn t(s: &str) -> Triple {
        s.parse().unwrap()
    }

    #[test]
    fn construction() {
        assert!(matches!(Weight3::new(1, 1, 1), Err(Error::NonZeroSum { sum: 3, .. })));
        assert!(matches!(Weight3::new(-5, 4, 1), Err(Error::NotIncreasing { .. })));
        assert!(matches!(Weight3::new(-2, 1, 1), Err(Error::NotIncreasing { .. })));
        assert_eq!("-7,2,5".parse::<Weight3>().unwrap(), w3(-7, 2, 5));
        let err = "1,2,3".parse::<Weight3>().unwrap_err();
        assert_eq!(err.to_string(), "weight (1, 2, 3) has coordinate sum 6, expected 0");
        assert!(serde_json::from_str::<Weight3>("[1,2,3]").is_err());
        assert_eq!(serde_json::from_str::<Weight3>("[-1,0,1]").unwrap(), w3(-1, 0, 1));
    }

    #[test]
    fn admissibility() {
        assert!(validate_w(&w3(-7, 2, 5), 2));
        assert!(!validate_w(&w3(-1, 0, 1), 2));
        assert!(validate_w(&w3(-3, 1, 2), 1));
        assert!(validate_wprime(&w3(-5, -2, 7), 2));
    }

    #[test]
    fn embeddings() {
        assert_eq!(embed(Slot::Plane, 1, (0, 0)).unwrap(), [0, 0, 1]);
        assert_eq!(embed(Slot::Point, 5, (1, 2)).unwrap(), [2, 1, 2]);
        assert_eq!(embed(Slot::Line, 3, (0, 0)).unwrap(), [0, 3, 0]);
        assert!(matches!(embed(Slot::Line, 2, (2, 1)), Err(Error::DegreeOverflow { d: 2, .. })));
        for d in 0..6 {
            for slot in [Slot::Point, Slot::Line, Slot::Plane] {
                let a = embed(slot, d, (0, d)).unwrap();
                assert_eq!(a.iter().sum::<i64>(), d);
            }
        }
    }

    #[test]
    fn phi_hand_values() {
        let w = w3(-1, 0, 1);
        assert_eq!(phi(&w, 1, &t("1|-|-")).unwrap(), -1);
        assert_eq!(phi(&w, 1, &t("-|1|-")).unwrap(), 0);
        assert_eq!(phi(&w, 1, &t("-|-|1")).unwrap(), 1);
        assert!(matches!(phi(&w, 1, &t("2|-|-")), Err(Error::DegreeTooSmall { d: 1, n: 2 })));
    }

    #[test]
    fn simplex_term_vanishes() {
        for d in 0..=8 {
            for w in [w3(-1, 0, 1), w3(-7, 2, 5), w3(-5, -2, 7), w3(-100, 1, 99)] {
                assert_eq!(simplex_term(&w, d), 0);
            }
        }
    }

    #[test]
    fn asymptotic_examples() {
        let x = t("-|1|-");
        assert_eq!(asymptotic_sign(&w3(-1, 0, 1), &x, &x).unwrap(), Ordering::Equal);
        let y = t("1|-|-");
        assert_eq!(asymptotic_sign(&w3(-7, 2, 5), &y, &y).unwrap(), Ordering::Greater);
        assert!(asymptotic_sign(&w3(-7, 2, 5), &y, &t("1,1|-|-")).is_err());
    }

    #[test]
    fn extreme_families_are_admissible_shapes() {
        for k in 1..50 {
            let a = plane_heavy_weight(k).unwrap();
            let b = point_heavy_weight(k).unwrap();
            let [a0, a1, a2] = a.coords();
            let [b0, b1, b2] = b.coords();
            assert!(a2 - a1 > a1 - a0);
            assert!(b1 - b0 > b2 - b1);
        }
    }
}
