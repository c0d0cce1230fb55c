//! Standard sets (staircases) in `N²`, stored as integer partitions.
//!
//! Row `j` of a staircase holds the cells `(i, j)` for `0 <= i < parts[j]`, so
//! the first coordinate `α₁` indexes columns and the second `α₂` indexes rows.
//! With that orientation the height is the number of parts and the width is
//! the largest part.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `m` accepted by [`enumerate`].
pub const MAX_ENUMERATE: usize = 40;

/// A finite downward-closed subset of `N²`, encoded by its weakly decreasing
/// row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct StandardSet {
    parts: Vec<usize>,
}

impl StandardSet {
    /// The empty staircase.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates a list of row lengths.
    pub fn new(parts: &[i64]) -> Result<Self> {
        for (index, &value) in parts.iter().enumerate() {
            if value <= 0 {
                return Err(Error::NonPositivePart { index, value });
            }
            if index > 0 && value > parts[index - 1] {
                return Err(Error::NotWeaklyDecreasing { index });
            }
        }
        Ok(Self {
            parts: parts.iter().map(|&p| p as usize).collect(),
        })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|Δ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `h(Δ)`, the number of rows.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    /// `w(Δ)`, the number of columns.
    pub fn width(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `(size, height, width)`
    pub fn shape_stats(&self) -> (usize, usize, usize) {
        (self.size(), self.height(), self.width())
    }

    /// Conjugate partition; reflects the cell set across the diagonal.
    pub fn transpose(&self) -> Self {
        let width = self.width();
        let parts = (0..width)
            .map(|col| self.parts.iter().take_while(|&&p| p > col).count())
            .collect();
        Self { parts }
    }

    /// `(S1, S2)` with `S1 = Σ α₁` and `S2 = Σ α₂` over the cells of `Δ`.
    ///
    /// The pairing with a weight `ξ` is `⟨ξ, Δ⟩ = ξ₁·S1 + ξ₂·S2`.
    pub fn moments(&self) -> (i64, i64) {
        self.parts
            .iter()
            .enumerate()
            .fold((0, 0), |(s1, s2), (row, &len)| {
                let len = len as i64;
                (s1 + len * (len - 1) / 2, s2 + row as i64 * len)
            })
    }

    /// Cells `(α₁, α₂)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(row, &len)| (0..len).map(move |col| (col as i64, row as i64)))
    }

    pub fn contains(&self, (a1, a2): (i64, i64)) -> bool {
        a1 >= 0 && a2 >= 0 && self.parts.get(a2 as usize).is_some_and(|&len| (a1 as usize) < len)
    }

    /// Builds the staircase from an arbitrary cell set, checking downward
    /// closure. Returns `None` if the set is not a staircase.
    pub fn from_cells<I: IntoIterator<Item = (i64, i64)>>(cells: I) -> Option<Self> {
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for (a1, a2) in cells {
            if a1 < 0 || a2 < 0 {
                return None;
            }
            let row = a2 as usize;
            if rows.len() <= row {
                rows.resize(row + 1, Vec::new());
            }
            rows[row].push(a1);
        }
        let mut parts = Vec::with_capacity(rows.len());
        for mut row in rows {
            row.sort_unstable();
            row.dedup();
            // Row must be exactly 0..len.
            if row.iter().enumerate().any(|(i, &c)| c != i as i64) {
                return None;
            }
            parts.push(row.len());
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Self { parts })
    }
}

impl fmt::Display for StandardSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for StandardSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for StandardSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad part {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&parts)
    }
}

impl TryFrom<Vec<i64>> for StandardSet {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        Self::new(&parts)
    }
}

impl From<StandardSet> for Vec<usize> {
    fn from(set: StandardSet) -> Self {
        set.parts
    }
}

/// All standard sets of size `m`, in reverse-lexicographic order of parts.
pub fn enumerate(m: usize) -> Result<Vec<StandardSet>> {
    if m > MAX_ENUMERATE {
        return Err(Error::BoundExceeded {
            what: "m",
            value: m as i64,
            bound: MAX_ENUMERATE as i64,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fill(m, m, &mut prefix, &mut out);
    Ok(out)
}

fn fill(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<StandardSet>) {
    if remaining == 0 {
        out.push(StandardSet::from_parts_unchecked(prefix.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        fill(remaining - part, part, prefix, out);
        prefix.pop();
    }
}
