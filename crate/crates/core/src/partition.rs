//! Integer partitions, skew shapes and p-adic expansions.
//!
//! A [`Partition`] is stored as its weakly decreasing list of positive parts.
//! The same type is used for cycle types of permutations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_partitions`] unless a caller passes its own bound.
pub const DEFAULT_MAX_N: u32 = 60;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
    size: u64,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.last() == Some(&0) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from arbitrary non-negative parts: zeros are dropped
    /// and the rest sorted into decreasing order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&x| x > 0));
        let size = parts.iter().map(|&x| u64::from(x)).sum();
        Self { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Self::from_sorted(vec![1; n as usize])
    }

    /// The hook `(arm, 1^legs)`; `arm` must be at least 1.
    pub fn hook(arm: u32, legs: u32) -> Self {
        assert!(arm >= 1, "hook arm must be positive");
        let mut parts = Vec::with_capacity(legs as usize + 1);
        parts.push(arm);
        parts.extend(std::iter::repeat_n(1, legs as usize));
        Self::from_sorted(parts)
    }

    /// Concatenates blocks `(part, multiplicity)`, e.g. `[(5,1),(2,3)]` is `(5,2,2,2)`.
    /// Blocks with zero multiplicity are skipped.
    pub fn from_blocks(blocks: &[(u32, u32)]) -> Result<Self> {
        let mut parts = Vec::new();
        for &(part, mult) in blocks {
            parts.extend(std::iter::repeat_n(part, mult as usize));
        }
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Number of (non-zero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), reading missing parts as 0.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn largest_part(&self) -> u32 {
        self.part(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.largest_part() as usize;
        let mut out = vec![0u32; width];
        for &p in &self.parts {
            for slot in out.iter_mut().take(p as usize) {
                *slot += 1;
            }
        }
        Self::from_sorted(out)
    }

    /// True iff the diagram of `inner` lies inside the diagram of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// True for shapes of the form `(a, 1^b)`, including the empty partition.
    pub fn is_hook(&self) -> bool {
        self.parts.len() <= 1 || self.parts[1] == 1
    }

    /// `(count of 1s, count of 2s, ...)` indexed by part length, index 0 unused.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.largest_part() as usize + 1];
        for &p in &self.parts {
            m[p as usize] += 1;
        }
        m
    }

    /// Concatenation of the parts of two partitions, re-sorted.
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Self::from_unsorted(parts)
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", format_partition(self))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_partition(self))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Parses `"5,4"`, `"2^4,1"` or `"(3,2,1)"`. The empty string is the empty partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let malformed = |reason: &str| Error::MalformedPartition {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let trimmed = text.trim();
    let body = match (trimmed.strip_prefix('('), trimmed.strip_suffix(')')) {
        (Some(_), Some(_)) => &trimmed[1..trimmed.len() - 1],
        (None, None) => trimmed,
        _ => return Err(malformed("unbalanced parentheses")),
    };
    if body.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for token in body.split(',') {
        let token = token.trim();
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (b.trim(), Some(e.trim())),
            None => (token, None),
        };
        let part: u32 = base
            .parse()
            .map_err(|_| malformed(&format!("bad part {base:?}")))?;
        if part == 0 {
            return Err(malformed("parts must be positive"));
        }
        let count: u32 = match exp {
            Some(e) => e
                .parse()
                .map_err(|_| malformed(&format!("bad exponent {e:?}")))?,
            None => 1,
        };
        parts.extend(std::iter::repeat_n(part, count as usize));
    }
    Partition::new(parts)
}

/// Canonical text form: parts separated by commas, exponents expanded.
pub fn format_partition(p: &Partition) -> String {
    let mut s = String::new();
    for (i, part) in p.parts.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&part.to_string());
    }
    s
}

/// Every partition of `n` in reverse lexicographic order: `(n)` first, `(1^n)` last.
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    enumerate_partitions_within(n, DEFAULT_MAX_N)
}

pub fn enumerate_partitions_within(n: u32, bound: u32) -> Result<Vec<Partition>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n.into(),
            limit: bound.into(),
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn descend(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(prefix.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        descend(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// All partitions `k` with `[k] ⊆ [outer]` and `|k| = size`.
pub fn subpartitions(outer: &Partition, size: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    if size > outer.size() {
        return out;
    }
    let mut prefix = Vec::new();
    sub_descend(outer, 0, size, u32::MAX, &mut prefix, &mut out);
    out
}

fn sub_descend(
    outer: &Partition,
    row: usize,
    remaining: u64,
    cap: u32,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_sorted(prefix.clone()));
        return;
    }
    if row >= outer.len() {
        return;
    }
    let hi = outer.parts[row].min(cap).min(remaining.min(u64::from(u32::MAX)) as u32);
    for part in (1..=hi).rev() {
        let rest = remaining - u64::from(part);
        // remaining rows hold at most min(part, outer_i) each
        let room: u64 = outer.parts[row + 1..]
            .iter()
            .map(|&o| u64::from(o.min(part)))
            .sum();
        if rest > room {
            break;
        }
        prefix.push(part);
        sub_descend(outer, row + 1, rest, part, prefix, out);
        prefix.pop();
    }
}

/// Number of partitions of `n`, by Euler's pentagonal-number recurrence.
///
/// Independent of [`enumerate_partitions`]; used to cross-check it.
pub fn partition_count(n: u32) -> u128 {
    let n = n as usize;
    let mut table = vec![0i128; n + 1];
    table[0] = 1;
    for i in 1..=n {
        let mut acc: i128 = 0;
        for k in 1i64.. {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let g2 = (k * (3 * k + 1) / 2) as usize;
            let mut term = table[i - g1];
            if g2 <= i {
                term += table[i - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        table[i] = acc;
    }
    table[n] as u128
}

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// Base-`p` digits of `n`, least significant first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PAdicExpansion {
    prime: u64,
    digits: Vec<u64>,
}

impl PAdicExpansion {
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// `digits()[i]` is the coefficient of `p^i`.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().sum()
    }

    pub fn value(&self) -> u64 {
        self.digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.prime + d)
    }

    /// `Some(k)` when the expanded number is exactly `p^k`.
    pub fn prime_power_exponent(&self) -> Option<u32> {
        if self.digit_sum() == 1 {
            Some(self.digits.len() as u32 - 1)
        } else {
            None
        }
    }
}

pub fn p_adic(n: u64, p: u64) -> Result<PAdicExpansion> {
    require_odd_prime(p)?;
    if n == 0 {
        return Err(Error::InvalidParameter("p-adic expansion needs n >= 1".into()));
    }
    let mut digits = Vec::new();
    let mut m = n;
    while m > 0 {
        digits.push(m % p);
        m /= p;
    }
    Ok(PAdicExpansion { prime: p, digits })
}

/// The cells of `[outer \ inner]`, a skew Young diagram with at least one cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.parts,
                inner: inner.parts,
            });
        }
        if outer.size() == inner.size() {
            return Err(Error::EmptySkewShape {
                outer: outer.parts,
                inner: inner.parts,
            });
        }
        Ok(Self { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    /// `(row, column)` of each cell, 0-based, in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.size() as usize);
        for (r, &o) in self.outer.parts.iter().enumerate() {
            for c in self.inner.part(r)..o {
                cells.push((r, c as usize));
            }
        }
        cells
    }

    /// The straight shape this skew shape is a translate of, if any.
    pub fn as_translated_diagram(&self) -> Option<Partition> {
        diagram_of_cells(self.cells().into_iter().map(|(r, c)| (r as i64, c as i64)))
    }

    /// The straight shape the 180° rotation of this skew shape is a translate of, if any.
    pub fn as_rotated_diagram(&self) -> Option<Partition> {
        diagram_of_cells(
            self.cells()
                .into_iter()
                .map(|(r, c)| (-(r as i64), -(c as i64))),
        )
    }
}

/// Translates a cell set to the origin and returns the Young diagram it forms, if any.
fn diagram_of_cells(cells: impl Iterator<Item = (i64, i64)>) -> Option<Partition> {
    let cells: Vec<(i64, i64)> = cells.collect();
    let min_r = cells.iter().map(|c| c.0).min()?;
    let min_c = cells.iter().map(|c| c.1).min()?;
    let height = (cells.iter().map(|c| c.0).max()? - min_r + 1) as usize;
    let mut rows: Vec<Vec<i64>> = vec![Vec::new(); height];
    for (r, c) in cells {
        rows[(r - min_r) as usize].push(c - min_c);
    }
    let mut parts = Vec::with_capacity(height);
    for row in &mut rows {
        row.sort_unstable();
        // each row must be exactly 0..len
        if row.is_empty() || row.iter().enumerate().any(|(i, &c)| c != i as i64) {
            return None;
        }
        parts.push(row.len() as u32);
    }
    Partition::new(parts).ok()
}
