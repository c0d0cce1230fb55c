//! Dominance order and the weight-induced orders on `st_m`.
//!
//! For a weight `ξ` the order `≤_ξ` puts `Δ` below `Δ'` when
//! `⟨ξ, Δ⟩ >= ⟨ξ, Δ'⟩`: a larger pairing means a smaller element. The limit
//! weights `μ` (`μ₁ ≪ μ₂ < 0`) and `ν` (`0 < ν₁ ≪ ν₂`) are handled as exact
//! lexicographic comparisons of the moments rather than as numeric vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::StandardSet;

/// An integer weight vector `ξ = (ξ₁, ξ₂)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight2 {
    pub xi1: i64,
    pub xi2: i64,
}

impl Weight2 {
    pub const fn new(xi1: i64, xi2: i64) -> Self {
        Self { xi1, xi2 }
    }

    /// `⟨ξ, α⟩`
    pub fn dot(&self, (a1, a2): (i64, i64)) -> i64 {
        self.xi1 * a1 + self.xi2 * a2
    }

    /// `⟨ξ, Δ⟩ = Σ_{α∈Δ} ⟨ξ, α⟩`
    pub fn pair(&self, set: &StandardSet) -> i64 {
        let (s1, s2) = set.moments();
        self.xi1 * s1 + self.xi2 * s2
    }

    /// Checks the sign pattern `ξ₁ < 0 < ξ₂` required of `λ`.
    pub fn check_lambda(&self) -> Result<()> {
        if self.xi1 < 0 && self.xi2 > 0 {
            Ok(())
        } else {
            Err(Error::InvalidLambdaSigns(self.xi1, self.xi2))
        }
    }

    /// `(ξ₂, ξ₁)`
    pub fn swapped(&self) -> Self {
        Self::new(self.xi2, self.xi1)
    }
}

impl fmt::Display for Weight2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.xi1, self.xi2)
    }
}

impl std::str::FromStr for Weight2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = parse_ints(s)?;
        match coords[..] {
            [xi1, xi2] => Ok(Self::new(xi1, xi2)),
            _ => Err(Error::Parse(format!("expected two integers, got {s:?}"))),
        }
    }
}

pub(crate) fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer {tok:?} in {s:?}")))
        })
        .collect()
}

/// Outcome of comparing two elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderResult {
    Less,
    Greater,
    /// The two arguments are the same element.
    Equal,
    /// Distinct elements whose comparison keys coincide.
    Tied,
    Incomparable,
}

impl OrderResult {
    pub fn reverse(self) -> Self {
        match self {
            Self::Less => Self::Greater,
            Self::Greater => Self::Less,
            other => other,
        }
    }

    pub fn is_less(self) -> bool {
        self == Self::Less
    }

    fn from_keys<K: Ord>(same: bool, a: K, b: K) -> Self {
        if same {
            return Self::Equal;
        }
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Self::Less,
            std::cmp::Ordering::Greater => Self::Greater,
            std::cmp::Ordering::Equal => Self::Tied,
        }
    }
}

fn check_same_size(a: &StandardSet, b: &StandardSet) -> Result<()> {
    let (l, r) = (a.size(), b.size());
    if l == r {
        Ok(())
    } else {
        Err(Error::SizeMismatch { left: l, right: r })
    }
}

/// Returns `(all a_i <= b_i, all a_i >= b_i)` over the running prefix sums,
/// padding the shorter list with zeros.
fn prefix_relation(a: &[usize], b: &[usize]) -> (bool, bool) {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0usize, 0usize);
    let (mut le, mut ge) = (true, true);
    for i in 0..len {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        le &= sa <= sb;
        ge &= sa >= sb;
    }
    (le, ge)
}

/// Dominance comparison. Rows are summed from the bottom; the column
/// condition is evaluated independently and must agree.
pub fn dominance_compare(a: &StandardSet, b: &StandardSet) -> Result<OrderResult> {
    check_same_size(a, b)?;
    if a == b {
        return Ok(OrderResult::Equal);
    }
    let (rows_le, rows_ge) = prefix_relation(a.parts(), b.parts());
    // Leftmost-j-columns sums of `a` dominate those of `b` iff `a <= b`.
    let (cols_le, cols_ge) = prefix_relation(a.transpose().parts(), b.transpose().parts());
    assert_eq!(
        (rows_le, rows_ge),
        (cols_ge, cols_le),
        "row and column dominance disagree on {a} vs {b}"
    );
    Ok(match (rows_le, rows_ge) {
        (true, false) => OrderResult::Less,
        (false, true) => OrderResult::Greater,
        (false, false) => OrderResult::Incomparable,
        (true, true) => unreachable!("distinct partitions with equal prefix sums"),
    })
}

/// Which weight induces the order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XiKind {
    /// `μ₁ ≪ μ₂ < 0`
    Mu,
    /// `0 < ν₁ ≪ ν₂`
    Nu,
    /// `λ₁ < 0 < λ₂`
    Lambda(Weight2),
}

impl XiKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Mu => "mu",
            Self::Nu => "nu",
            Self::Lambda(_) => "lambda",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Lambda(l) => l.check_lambda(),
            _ => Ok(()),
        }
    }

    /// Ascending key: `Δ <_ξ Δ'` iff `key(Δ) < key(Δ')`.
    pub fn key(&self, set: &StandardSet) -> (i64, i64) {
        let (s1, s2) = set.moments();
        match self {
            Self::Mu => (s1, s2),
            Self::Nu => (-s2, -s1),
            Self::Lambda(l) => (-(l.xi1 * s1 + l.xi2 * s2), 0),
        }
    }
}

impl fmt::Display for XiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Lambda(l) => write!(f, "lambda({l})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Compares two staircases of equal size under `≤_ξ`.
pub fn xi_compare(kind: XiKind, a: &StandardSet, b: &StandardSet) -> Result<OrderResult> {
    check_same_size(a, b)?;
    kind.validate()?;
    Ok(OrderResult::from_keys(a == b, kind.key(a), kind.key(b)))
}

/// A lattice point `(α₁, α₂)`.
pub type Cell = (i64, i64);

/// All lattice points `(i, j)` with `(i + 1)(j + 1) <= bound`, i.e. the union
/// of all staircases of size `bound`.
pub fn hyperbolic_region(bound: usize) -> Vec<(i64, i64)> {
    let mut pts = Vec::new();
    for i in 0..bound {
        for j in 0..bound {
            if (i + 1) * (j + 1) <= bound {
                pts.push((i as i64, j as i64));
            }
        }
    }
    pts
}

/// Returns a pair `α ≠ β` in the union of all staircases of size `2n+1`
/// with `⟨λ, α⟩ = ⟨λ, β⟩`, if one exists.
pub fn lambda_tie_witness(lambda: Weight2, n: usize) -> Result<Option<(Cell, Cell)>> {
    lambda.check_lambda()?;
    let mut valued: Vec<(i64, (i64, i64))> = hyperbolic_region(2 * n + 1)
        .into_iter()
        .map(|p| (lambda.dot(p), p))
        .collect();
    valued.sort_unstable();
    Ok(valued
        .windows(2)
        .find(|w| w[0].0 == w[1].0)
        .map(|w| (w[0].1, w[1].1)))
}

/// Genericity of `λ` for `n` points: `⟨λ, α − β⟩ ≠ 0` for all distinct cells
/// of all staircases of size `2n + 1`.
pub fn is_generic_lambda(lambda: Weight2, n: usize) -> Result<bool> {
    Ok(lambda_tie_witness(lambda, n)?.is_none())
}

/// Checks that `⟨λ, ·⟩` separates every two staircases of size at most `n`
/// whose moment vectors differ. This is the condition under which `≤_λ` on
/// triples of total size `n` is a well-defined refinement; it is weaker than
/// [`is_generic_lambda`].
pub fn check_lambda_separates_moments(lambda: Weight2, n: usize) -> Result<()> {
    lambda.check_lambda()?;
    for m in 0..=n {
        let mut valued: Vec<(i64, (i64, i64), StandardSet)> = crate::partitions::enumerate(m)?
            .into_iter()
            .map(|d| (lambda.pair(&d), d.moments(), d))
            .collect();
        valued.sort_by_key(|x| (x.0, x.1));
        for w in valued.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 != w[1].1 {
                return Err(Error::NonGenericWeight(
                    lambda.xi1,
                    lambda.xi2,
                    format!("<lambda, {}> = <lambda, {}> = {}", w[0].2, w[1].2, w[0].0),
                ));
            }
        }
    }
    Ok(())
}
