//! Triples `(Δ₂, Δ₁, Δ₀)` labelling the cells of the Hilbert scheme of `n`
//! points in the projective plane, their grading, and the order `≤_λ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orders::{xi_compare, OrderResult, Weight2, XiKind};
use crate::partitions::{enumerate, StandardSet};

/// Largest `n` accepted by [`enumerate_triples`], [`basis`] and [`betti`].
pub const MAX_TRIPLE_N: usize = 12;

/// One cell label: the plane, line and point components.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Triple {
    pub d2: StandardSet,
    pub d1: StandardSet,
    pub d0: StandardSet,
}

impl Triple {
    pub fn new(d2: StandardSet, d1: StandardSet, d0: StandardSet) -> Self {
        Self { d2, d1, d0 }
    }

    /// `|Δ₂| + |Δ₁| + |Δ₀|`
    pub fn total(&self) -> usize {
        self.d2.size() + self.d1.size() + self.d0.size()
    }

    /// `(|Δ₂|, |Δ₁|, |Δ₀|)`
    pub fn sizes(&self) -> (usize, usize, usize) {
        (self.d2.size(), self.d1.size(), self.d0.size())
    }

    /// `(Δ₂, Δ₁, Δ₀) ↦ (Δ₀ᵗ, Δ₁ᵗ, Δ₂ᵗ)`
    pub fn iota(&self) -> Self {
        Self::new(self.d0.transpose(), self.d1.transpose(), self.d2.transpose())
    }

    /// `n + h(Δ₂) − w(Δ₀)`, the cohomological degree of the cell class.
    pub fn degree(&self) -> i64 {
        (self.total() + self.d2.height()) as i64 - self.d0.width() as i64
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}", self.d2, self.d1, self.d0)
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Triple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let comps: Vec<&str> = s.split('|').collect();
        match comps[..] {
            [d2, d1, d0] => Ok(Self::new(d2.parse()?, d1.parse()?, d0.parse()?)),
            _ => Err(Error::Parse(format!("expected \"D2|D1|D0\", got {s:?}"))),
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_TRIPLE_N {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n as i64,
            bound: MAX_TRIPLE_N as i64,
        });
    }
    Ok(())
}

fn check_totals(a: &Triple, b: &Triple) -> Result<()> {
    let (l, r) = (a.total(), b.total());
    if l == r {
        Ok(())
    } else {
        Err(Error::SizeMismatch { left: l, right: r })
    }
}

/// All triples of total size `n`, ordered by size composition
/// (`|Δ₂|` descending, then `|Δ₁|` descending) and then componentwise by the
/// canonical partition order.
pub fn enumerate_triples(n: usize) -> Result<Vec<Triple>> {
    check_n(n)?;
    let by_size: Vec<Vec<StandardSet>> = (0..=n).map(enumerate).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for n2 in (0..=n).rev() {
        for n1 in (0..=n - n2).rev() {
            let n0 = n - n2 - n1;
            for d2 in &by_size[n2] {
                for d1 in &by_size[n1] {
                    for d0 in &by_size[n0] {
                        out.push(Triple::new(d2.clone(), d1.clone(), d0.clone()));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `T^k`: the triples of total `n` and degree `k`.
pub fn basis(n: usize, k: i64) -> Result<Vec<Triple>> {
    check_n(n)?;
    let max = 2 * n as i64;
    if !(0..=max).contains(&k) {
        return Err(Error::DegreeOutOfRange { k, max });
    }
    Ok(enumerate_triples(n)?
        .into_iter()
        .filter(|t| t.degree() == k)
        .collect())
}

/// Betti numbers `b_0, …, b_{2n}`: the number of cells in each degree.
pub fn betti(n: usize) -> Result<Vec<usize>> {
    check_n(n)?;
    let mut counts = vec![0usize; 2 * n + 1];
    for t in enumerate_triples(n)? {
        counts[t.degree() as usize] += 1;
    }
    Ok(counts)
}

/// Compares two triples of equal total under `≤_λ`.
///
/// Triples whose `(|Δ₂|, |Δ₀|)` differ are compared by sizes alone: the one
/// with the larger plane part and smaller point part is below. Triples with
/// equal sizes are compared slot by slot under `μ`, `λ` and `ν`; they are
/// below each other only if no slot goes the other way and no slot is tied.
pub fn triple_compare(lambda: Weight2, a: &Triple, b: &Triple) -> Result<OrderResult> {
    check_totals(a, b)?;
    lambda.check_lambda()?;
    if a == b {
        return Ok(OrderResult::Equal);
    }
    let (a2, _, a0) = a.sizes();
    let (b2, _, b0) = b.sizes();
    if (a2, a0) != (b2, b0) {
        return Ok(if a2 >= b2 && a0 <= b0 {
            OrderResult::Less
        } else if a2 <= b2 && a0 >= b0 {
            OrderResult::Greater
        } else {
            OrderResult::Incomparable
        });
    }
    let slots = [
        xi_compare(XiKind::Mu, &a.d2, &b.d2)?,
        xi_compare(XiKind::Lambda(lambda), &a.d1, &b.d1)?,
        xi_compare(XiKind::Nu, &a.d0, &b.d0)?,
    ];
    Ok(combine_slots(&slots))
}

fn combine_slots(slots: &[OrderResult]) -> OrderResult {
    use OrderResult::*;
    let all = |allowed: &[OrderResult]| slots.iter().all(|s| allowed.contains(s));
    if all(&[Equal]) {
        Equal
    } else if all(&[Less, Equal]) {
        Less
    } else if all(&[Greater, Equal]) {
        Greater
    } else if all(&[Tied, Equal]) {
        Tied
    } else {
        Incomparable
    }
}

/// Outcome of testing `t ≤_λ t'` for every admissible `λ` at once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UniversalLeq {
    Less,
    Equal,
    NotLeqForSomeLambda,
}

impl UniversalLeq {
    pub fn holds(self) -> bool {
        self != Self::NotLeqForSomeLambda
    }
}

/// Decides `t ≤_λ t'` for all `λ₁ < 0 < λ₂` in closed form.
///
/// Only the middle slot depends on `λ`. On the open quadrant,
/// `λ₁(S1 − S1') + λ₂(S2 − S2') > 0` holds for every `λ` iff `S1 <= S1'` and
/// `S2 >= S2'` with the moment vectors distinct.
pub fn triple_leq_universal(a: &Triple, b: &Triple) -> Result<UniversalLeq> {
    check_totals(a, b)?;
    if a == b {
        return Ok(UniversalLeq::Equal);
    }
    let (a2, _, a0) = a.sizes();
    let (b2, _, b0) = b.sizes();
    let leq = if (a2, a0) != (b2, b0) {
        a2 >= b2 && a0 <= b0
    } else {
        let weak = |r: OrderResult| matches!(r, OrderResult::Less | OrderResult::Equal);
        let middle = a.d1 == b.d1 || {
            let (s1, s2) = a.d1.moments();
            let (t1, t2) = b.d1.moments();
            s1 <= t1 && s2 >= t2 && (s1, s2) != (t1, t2)
        };
        weak(xi_compare(XiKind::Mu, &a.d2, &b.d2)?) && middle && weak(xi_compare(XiKind::Nu, &a.d0, &b.d0)?)
    };
    Ok(if leq {
        UniversalLeq::Less
    } else {
        UniversalLeq::NotLeqForSomeLambda
    })
}
