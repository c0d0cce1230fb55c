//! Generic monomial staircases: the fixed point whose cell has maximal
//! dimension for a given torus weight.

use crate::error::{Error, Result};
use crate::orders::Weight2;
use crate::partitions::StandardSet;

fn check_u(u: Weight2) -> Result<()> {
    if u.xi1 < 0 && u.xi2 < 0 {
        Ok(())
    } else {
        Err(Error::InvalidUSigns(u.xi1, u.xi2))
    }
}

/// Outer corners of a staircase: the minimal cells of `N² \ Γ`.
pub fn outer_corners(set: &StandardSet) -> Vec<(i64, i64)> {
    let parts = set.parts();
    let mut corners = Vec::with_capacity(parts.len() + 1);
    let mut prev = usize::MAX;
    for (row, &len) in parts.iter().enumerate() {
        if len < prev {
            corners.push((len as i64, row as i64));
        }
        prev = len;
    }
    corners.push((0, parts.len() as i64));
    corners
}

/// The staircase `Γ` with `|Γ| = n` and `⟨u, α − β⟩ < 0` for every
/// `α ∉ Γ`, `β ∈ Γ`, found as the `n` cells with the largest `⟨u, ·⟩`.
///
/// Every cell outside the region `(α₁+1)(α₂+1) <= n+1` lies strictly below
/// `n + 1` others, so only that region is searched. Any two of its cells
/// sharing a value make `u` non-generic for `n`.
pub fn generic_staircase(u: Weight2, n: usize) -> Result<StandardSet> {
    check_u(u)?;
    let mut valued: Vec<(i64, (i64, i64))> = crate::orders::hyperbolic_region(n + 1)
        .into_iter()
        .map(|p| (u.dot(p), p))
        .collect();
    valued.sort_by(|a, b| b.cmp(a));
    if let Some(w) = valued.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::NonGenericWeight(
            u.xi1,
            u.xi2,
            format!("{:?} and {:?} tie at <u, .> = {}", w[0].1, w[1].1, w[0].0),
        ));
    }
    let gamma = StandardSet::from_cells(valued[..n].iter().map(|&(_, p)| p))
        .expect("top cells of a negative weight form a staircase");
    let lowest_inside = valued[..n].iter().map(|&(v, _)| v).min();
    let highest_outside = outer_corners(&gamma).into_iter().map(|p| u.dot(p)).max();
    if let (Some(inside), Some(outside)) = (lowest_inside, highest_outside) {
        assert!(outside < inside, "defining inequality fails for {gamma}");
    }
    Ok(gamma)
}

/// The cell sequence `(0,0), …, (0,m−1), (1,0), (0,m), (1,1), (0,m+1), …`,
/// listing block `a` row by row as `(a,k), (a−1,m+k), …, (0,am+k)` for
/// `k = 0..m`.
pub fn interleaved_sequence(m: usize, len: usize) -> Vec<(i64, i64)> {
    let m = m as i64;
    let mut seq: Vec<(i64, i64)> = (0..m).map(|k| (0, k)).collect();
    let mut block = 1;
    while seq.len() < len {
        for k in 0..m {
            for b in (0..=block).rev() {
                seq.push((b, (block - b) * m + k));
            }
        }
        block += 1;
    }
    seq.truncate(len);
    seq
}

/// Builds the generic staircase from the explicit interleaved sequence.
///
/// For `u₁ < u₂` the integer `m` satisfies `m − 1 < u₁/u₂ < m`; for `u₁ > u₂`
/// the construction is transposed.
pub fn generic_staircase_explicit(u: Weight2, n: usize) -> Result<StandardSet> {
    check_u(u)?;
    let transposed = u.xi1 > u.xi2;
    let (steep, shallow) = if transposed { (u.xi2, u.xi1) } else { (u.xi1, u.xi2) };
    let (num, den) = (steep.abs(), shallow.abs());
    if num % den == 0 {
        return Err(Error::NonGenericWeight(
            u.xi1,
            u.xi2,
            format!("coordinate ratio {num}/{den} is an integer"),
        ));
    }
    let m = (num / den + 1) as usize;
    let gamma = StandardSet::from_cells(interleaved_sequence(m, n))
        .expect("prefixes of the interleaved sequence are staircases");
    Ok(if transposed { gamma.transpose() } else { gamma })
}

/// The generic staircase of the punctual Hilbert scheme for `v₁, v₂ > 0`:
/// the vertical strip if `v₁ < v₂`, the horizontal strip otherwise.
pub fn generic_punctual(v: Weight2, n: usize) -> Result<StandardSet> {
    if v.xi1 <= 0 || v.xi2 <= 0 {
        return Err(Error::InvalidVSigns(v.xi1, v.xi2));
    }
    if v.xi1 == v.xi2 {
        return Err(Error::NonGenericWeight(v.xi1, v.xi2, "v1 = v2".into()));
    }
    let parts: Vec<i64> = if n == 0 {
        Vec::new()
    } else if v.xi1 < v.xi2 {
        vec![1; n]
    } else {
        vec![n as i64]
    };
    StandardSet::new(&parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ss(parts: &[i64]) -> StandardSet {
        StandardSet::new(parts).unwrap()
    }

    #[test]
    fn staircase_examples() {
        let u = Weight2::new(-5, -2);
        assert_eq!(generic_staircase(u, 4).unwrap(), ss(&[2, 1, 1]));
        let err = generic_staircase(Weight2::new(-1, -1), 4).unwrap_err();
        assert!(matches!(err, Error::NonGenericWeight(-1, -1, _)));
        assert!(err.to_string().contains("(1, 0) and (0, 1) tie"), "{err}");
        assert_eq!(generic_staircase(Weight2::new(-3, -7), 1).unwrap(), ss(&[1]));
        assert_eq!(generic_staircase(u, 0).unwrap(), StandardSet::empty());
        assert!(matches!(generic_staircase(Weight2::new(1, -1), 2), Err(Error::InvalidUSigns(1, -1))));
    }

    #[test]
    fn explicit_examples() {
        assert_eq!(generic_staircase_explicit(Weight2::new(-5, -2), 4).unwrap(), ss(&[2, 1, 1]));
        assert_eq!(generic_staircase_explicit(Weight2::new(-2, -5), 4).unwrap(), ss(&[2, 1, 1]).transpose());
        assert!(generic_staircase_explicit(Weight2::new(-6, -2), 4).is_err());
        assert!(generic_staircase_explicit(Weight2::new(-3, -3), 4).is_err());
        assert_eq!(interleaved_sequence(3, 9), [(0, 0), (0, 1), (0, 2), (1, 0), (0, 3), (1, 1), (0, 4), (1, 2), (0, 5)]);
    }

    #[test]
    fn punctual_examples() {
        assert_eq!(generic_punctual(Weight2::new(1, 2), 3).unwrap(), ss(&[1, 1, 1]));
        assert_eq!(generic_punctual(Weight2::new(2, 1), 3).unwrap(), ss(&[3]));
        assert_eq!(generic_punctual(Weight2::new(5, 9), 1).unwrap(), ss(&[1]));
        assert!(generic_punctual(Weight2::new(2, 2), 3).is_err());
        assert!(generic_punctual(Weight2::new(0, 2), 3).is_err());
    }

    #[test]
    fn corners() {
        assert_eq!(outer_corners(&ss(&[2, 1, 1])), [(2, 0), (1, 1), (0, 3)]);
        assert_eq!(outer_corners(&StandardSet::empty()), [(0, 0)]);
    }
}
