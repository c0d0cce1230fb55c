//! Vanishing criterion for products of cell classes and the Poincaré pairing
//! mask over the cell basis `T^k`.
//!
//! A product `[t]·[t']` can be non-zero only if `t ≤_λ ι(t')` for every
//! admissible `λ`. The mask records where that condition holds; a `false`
//! entry proves the product vanishes, a `true` entry proves nothing.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orders::{check_lambda_separates_moments, OrderResult, Weight2};
use crate::triples::{basis, enumerate_triples, triple_compare, triple_leq_universal, Triple};

/// True unless the product `[a]·[b]` is forced to vanish.
pub fn may_be_nonzero(a: &Triple, b: &Triple) -> Result<bool> {
    Ok(triple_leq_universal(a, &b.iota())?.holds())
}

/// Orders `items` by a linear extension of `<_λ`. Among the currently minimal
/// elements the one with the smallest text encoding is taken first.
pub fn linear_extension(lambda: Weight2, items: &[Triple]) -> Result<Vec<Triple>> {
    lambda.check_lambda()?;
    let n = items.len();
    let mut below = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for i in 0..n {
        for j in 0..n {
            if triple_compare(lambda, &items[i], &items[j])? == OrderResult::Less {
                below[i].push(j);
                indegree[j] += 1;
            }
        }
    }
    let labels: Vec<String> = items.iter().map(Triple::to_string).collect();
    let mut ready: BTreeSet<(&str, usize)> = (0..n)
        .filter(|&i| indegree[i] == 0)
        .map(|i| (labels[i].as_str(), i))
        .collect();
    let mut out = Vec::with_capacity(n);
    while let Some((_, i)) = ready.pop_first() {
        out.push(items[i].clone());
        for &j in &below[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.insert((labels[j].as_str(), j));
            }
        }
    }
    if out.len() != n {
        return Err(Error::NotAStrictOrder(format!(
            "<_lambda has a cycle among T^k for lambda = ({lambda})"
        )));
    }
    Ok(out)
}

/// Boolean matrix over a numbering `t_1..t_d` of `T^k`; entry `(i, j)` masks
/// the product `[t_i]·[ι(t_j)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMask {
    pub n: usize,
    pub k: i64,
    pub rows: Vec<Triple>,
    pub cols: Vec<Triple>,
    pub allowed: Vec<Vec<bool>>,
}

impl PairingMask {
    /// Builds the mask for rows in the given order; columns are their images
    /// under `ι`.
    pub fn from_rows(n: usize, k: i64, rows: Vec<Triple>) -> Result<Self> {
        let cols: Vec<Triple> = rows.iter().map(Triple::iota).collect();
        let allowed = rows
            .iter()
            .map(|r| cols.iter().map(|c| may_be_nonzero(r, c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n,
            k,
            rows,
            cols,
            allowed,
        })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The finest split of `0..dim` into consecutive blocks with no allowed
    /// entry connecting two different blocks. Returns the block sizes.
    pub fn diagonal_blocks(&self) -> Vec<usize> {
        let d = self.dim();
        let mut blocks = Vec::new();
        let mut start = 0;
        for p in 0..d {
            let crosses = (0..=p).any(|i| (p + 1..d).any(|j| self.allowed[i][j] || self.allowed[j][i]));
            if !crosses {
                blocks.push(p + 1 - start);
                start = p + 1;
            }
        }
        blocks
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("\"\"");
        for c in &self.cols {
            let _ = write!(out, ",\"{c}\"");
        }
        out.push('\n');
        for (r, row) in self.rows.iter().zip(&self.allowed) {
            let _ = write!(out, "\"{r}\"");
            for &a in row {
                out.push_str(if a { ",1" } else { ",0" });
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            k: i64,
            rows: Vec<String>,
            cols: Vec<String>,
            allowed: &'a [Vec<bool>],
            blocks: Vec<usize>,
        }
        serde_json::to_value(Repr {
            n: self.n,
            k: self.k,
            rows: self.rows.iter().map(Triple::to_string).collect(),
            cols: self.cols.iter().map(Triple::to_string).collect(),
            allowed: &self.allowed,
            blocks: self.diagonal_blocks(),
        })
        .expect("mask serializes")
    }

    /// Grid of `1` (allowed) and `.` (forced zero) with block separators,
    /// followed by the row labels.
    pub fn to_ascii(&self) -> String {
        let blocks = self.diagonal_blocks();
        let mut cuts = BTreeSet::new();
        let mut acc = 0;
        for b in &blocks {
            acc += b;
            cuts.insert(acc);
        }
        cuts.remove(&self.dim());
        let width = self.dim() + cuts.len();
        let mut out = String::new();
        for (i, row) in self.allowed.iter().enumerate() {
            if cuts.contains(&i) {
                let _ = writeln!(out, "{}", "-".repeat(width));
            }
            for (j, &a) in row.iter().enumerate() {
                if cuts.contains(&j) {
                    out.push('|');
                }
                out.push(if a { '1' } else { '.' });
            }
            let _ = writeln!(out, "  t{} = {}", i + 1, self.rows[i]);
        }
        out
    }
}

/// The pairing mask of `T^k` against `ι(T^k)` with rows in a linear
/// extension of `<_λ`.
pub fn pairing_mask(n: usize, k: i64, lambda: Weight2) -> Result<PairingMask> {
    check_lambda_separates_moments(lambda, n)?;
    let rows = linear_extension(lambda, &basis(n, k)?)?;
    PairingMask::from_rows(n, k, rows)
}

/// Result of [`check_upper_triangular`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Triangularity {
    Pass {
        blocks: Vec<usize>,
    },
    Fail {
        i: usize,
        j: usize,
        row: Triple,
        col: Triple,
        reason: &'static str,
    },
}

impl Triangularity {
    pub fn passed(&self) -> bool {
        matches!(self, Self::Pass { .. })
    }
}

/// Checks that the mask has a true diagonal and nothing below it.
pub fn check_upper_triangular(mask: &PairingMask) -> Triangularity {
    let fail = |i: usize, j: usize, reason| Triangularity::Fail {
        i,
        j,
        row: mask.rows[i].clone(),
        col: mask.cols[j].clone(),
        reason,
    };
    for i in 0..mask.dim() {
        if !mask.allowed[i][i] {
            return fail(i, i, "diagonal entry is forced to vanish");
        }
        for j in 0..i {
            if mask.allowed[i][j] {
                return fail(i, j, "entry below the diagonal is not forced to vanish");
            }
        }
    }
    Triangularity::Pass {
        blocks: mask.diagonal_blocks(),
    }
}

/// Pairs `(t, t')` of total `n` where the criterion is not symmetric in the
/// two factors.
pub fn asymmetric_pairs(n: usize) -> Result<Vec<(Triple, Triple)>> {
    let all = enumerate_triples(n)?;
    let mut out = Vec::new();
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            if may_be_nonzero(a, b)? != may_be_nonzero(b, a)? {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}
