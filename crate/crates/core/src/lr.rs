//! Littlewood–Richardson coefficients by lattice-word fillings of skew shapes.
//!
//! Cells are filled in reading order: rows top to bottom, each row right to
//! left. Rows weakly increase left to right, columns strictly increase
//! downward, and the reading word must stay a lattice word. The only state a
//! later row depends on is the running content and the entries of the row
//! directly above, so completed rows are memoized on exactly that.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use parking_lot::Mutex;

use crate::character::{class_size, factorial, CharacterEvaluator};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, subpartitions, Partition, SkewShape};

/// Default cap on `|γ|` for [`lr_types`].
pub const DEFAULT_MAX_TYPE_CELLS: u64 = 30;

/// Largest `|λ|` the character-sum oracle accepts.
pub const ORACLE_MAX_SIZE: u64 = 12;

/// True iff every entry is good: it is 1, or strictly more `v-1` than `v` precede it.
pub fn is_good_sequence(seq: &[u32]) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &v in seq {
        if v == 0 {
            return false;
        }
        let v = v as usize;
        if counts.len() < v {
            counts.resize(v, 0);
        }
        if v > 1 && counts[v - 2] <= counts[v - 1] {
            return false;
        }
        counts[v - 1] += 1;
    }
    true
}

/// A filled skew shape; `rows[i]` holds the entries of row `i` left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrFilling {
    pub shape: SkewShape,
    pub rows: Vec<Vec<u32>>,
}

impl LrFilling {
    /// Entries read right to left, top to bottom.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }

    /// Content vector: how many 1s, 2s, ... appear.
    pub fn content(&self) -> Vec<u32> {
        let mut c: Vec<u32> = Vec::new();
        for v in self.rows.iter().flatten() {
            let v = *v as usize;
            if c.len() < v {
                c.resize(v, 0);
            }
            c[v - 1] += 1;
        }
        c
    }

    /// Checks the three filling conditions directly on the tableau.
    pub fn is_valid(&self) -> bool {
        let inner = self.shape.inner();
        let outer = self.shape.outer();
        if self.rows.len() != outer.len() {
            return false;
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() as u32 != outer.part(r) - inner.part(r) {
                return false;
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if r > 0 {
                for (k, &v) in row.iter().enumerate() {
                    let col = inner.part(r) as usize + k;
                    let above_start = inner.part(r - 1) as usize;
                    if col >= above_start && v <= self.rows[r - 1][col - above_start] {
                        return false;
                    }
                }
            }
        }
        is_good_sequence(&self.reading_word())
    }
}

/// Shape of the partially filled row directly above the current one.
#[derive(Clone, Copy)]
struct Above<'a> {
    start: u32,
    entries: &'a [u32],
}

impl Above<'_> {
    fn at(&self, col: u32) -> Option<u32> {
        col.checked_sub(self.start)
            .and_then(|k| self.entries.get(k as usize).copied())
    }
}

struct Filler<'a> {
    outer: &'a [u32],
    inner: Vec<u32>,
    content: Option<&'a [u32]>,
    /// 1-based rank of each row among the non-empty rows of the skew shape
    rank: Vec<u32>,
}

impl<'a> Filler<'a> {
    fn new(outer: &'a Partition, inner: &Partition, content: Option<&'a [u32]>) -> Self {
        let rows = outer.len();
        let inner: Vec<u32> = (0..rows).map(|i| inner.part(i)).collect();
        let mut rank = Vec::with_capacity(rows);
        let mut seen = 0;
        for (i, &start) in inner.iter().enumerate() {
            if outer.part(i) > start {
                seen += 1;
            }
            rank.push(seen);
        }
        Self {
            outer: outer.parts(),
            inner,
            content,
            rank,
        }
    }

    fn rows(&self) -> usize {
        self.outer.len()
    }

    fn above(&self, row: usize, prev: &'a [u32]) -> Above<'a> {
        Above {
            start: if row == 0 { 0 } else { self.inner[row - 1] },
            entries: prev,
        }
    }

    /// Calls `visit` once per legal filling of `row`, with the updated content.
    fn fill_row(
        &self,
        row: usize,
        above: Above<'_>,
        counts: &mut Vec<u32>,
        visit: &mut dyn FnMut(&mut Vec<u32>, &[u32]),
    ) {
        let width = (self.outer[row] - self.inner[row]) as usize;
        let mut entries = vec![0u32; width];
        self.fill_cell(row, width, above, counts, &mut entries, visit);
    }

    // `k` cells of the row (counted from the left) are still empty.
    fn fill_cell(
        &self,
        row: usize,
        k: usize,
        above: Above<'_>,
        counts: &mut Vec<u32>,
        entries: &mut Vec<u32>,
        visit: &mut dyn FnMut(&mut Vec<u32>, &[u32]),
    ) {
        if k == 0 {
            visit(counts, entries);
            return;
        }
        let idx = k - 1;
        let col = self.inner[row] + idx as u32;
        let max_value = match self.content {
            Some(c) => c.len() as u32,
            None => counts.len() as u32 + 1,
        };
        let hi = entries.get(idx + 1).copied().unwrap_or(max_value).min(max_value);
        let lo = above.at(col).map_or(1, |a| a + 1);
        for v in lo..=hi {
            let vi = v as usize - 1;
            if v > 1 && counts[vi - 1] <= counts.get(vi).copied().unwrap_or(0) {
                continue;
            }
            if let Some(c) = self.content {
                if counts[vi] >= c[vi] {
                    continue;
                }
            }
            debug_assert!(
                v <= self.rank[row],
                "entry {v} in non-empty row {} violates the row-rank bound",
                self.rank[row]
            );
            if counts.len() <= vi {
                counts.push(0);
            }
            counts[vi] += 1;
            entries[idx] = v;
            self.fill_cell(row, k - 1, above, counts, entries, visit);
            counts[vi] -= 1;
            if counts[vi] == 0 && vi + 1 == counts.len() && self.content.is_none() {
                counts.pop();
            }
        }
    }

    fn initial_counts(&self) -> Vec<u32> {
        match self.content {
            Some(c) => vec![0; c.len()],
            None => Vec::new(),
        }
    }

    fn count(&self) -> u64 {
        let mut memo = HashMap::new();
        let mut counts = self.initial_counts();
        self.count_from(0, &mut counts, &[], &mut memo)
    }

    fn count_from(
        &self,
        row: usize,
        counts: &mut Vec<u32>,
        prev: &[u32],
        memo: &mut HashMap<(usize, Vec<u32>, Vec<u32>), u64>,
    ) -> u64 {
        if row == self.rows() {
            return 1;
        }
        let key = (row, counts.clone(), prev.to_vec());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0u64;
        let above = self.above(row, prev);
        self.fill_row(row, above, counts, &mut |counts, entries| {
            total += self.count_from(row + 1, counts, entries, memo);
        });
        memo.insert(key, total);
        total
    }

    fn types(&self) -> BTreeSet<Partition> {
        let mut seen = HashSet::new();
        let mut out = BTreeSet::new();
        let mut counts = Vec::new();
        self.types_from(0, &mut counts, &[], &mut seen, &mut out);
        out
    }

    fn types_from(
        &self,
        row: usize,
        counts: &mut Vec<u32>,
        prev: &[u32],
        seen: &mut HashSet<(usize, Vec<u32>, Vec<u32>)>,
        out: &mut BTreeSet<Partition>,
    ) {
        if row == self.rows() {
            out.insert(Partition::from_sorted(counts.clone()));
            return;
        }
        if !seen.insert((row, counts.clone(), prev.to_vec())) {
            return;
        }
        let above = self.above(row, prev);
        self.fill_row(row, above, counts, &mut |counts, entries| {
            self.types_from(row + 1, counts, entries, seen, out);
        });
    }

    fn collect(&self, shape: &SkewShape) -> Vec<LrFilling> {
        let mut out = Vec::new();
        let mut counts = self.initial_counts();
        let mut rows = Vec::new();
        self.collect_from(0, &mut counts, &mut rows, shape, &mut out);
        out
    }

    fn collect_from(
        &self,
        row: usize,
        counts: &mut Vec<u32>,
        rows: &mut Vec<Vec<u32>>,
        shape: &SkewShape,
        out: &mut Vec<LrFilling>,
    ) {
        if row == self.rows() {
            out.push(LrFilling {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        let prev = rows.last().cloned().unwrap_or_default();
        let above = self.above(row, &prev);
        self.fill_row(row, above, counts, &mut |counts, entries| {
            rows.push(entries.to_vec());
            self.collect_from(row + 1, counts, rows, shape, out);
            rows.pop();
        });
    }
}

/// `c^λ_{μν}`: the number of LR fillings of `[λ \ μ]` of type `ν`.
///
/// Zero (not an error) when `μ` does not fit in `λ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() + nu.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: mu.size() + nu.size(),
        });
    }
    if !lambda.contains(mu) || !lambda.contains(nu) {
        return Ok(0);
    }
    if nu.is_empty() {
        return Ok(u64::from(lambda == mu));
    }
    Ok(Filler::new(lambda, mu, Some(nu.parts())).count())
}

/// Every LR filling of `γ` of type `ν`, listed explicitly.
pub fn lr_fillings(shape: &SkewShape, nu: &Partition) -> Result<Vec<LrFilling>> {
    if shape.size() != nu.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            found: nu.size(),
        });
    }
    Ok(Filler::new(shape.outer(), shape.inner(), Some(nu.parts())).collect(shape))
}

/// The set of types of all LR fillings of `γ`.
pub fn lr_types(shape: &SkewShape) -> Result<BTreeSet<Partition>> {
    lr_types_within(shape, DEFAULT_MAX_TYPE_CELLS)
}

pub fn lr_types_within(shape: &SkewShape, max_cells: u64) -> Result<BTreeSet<Partition>> {
    if shape.size() > max_cells {
        return Err(Error::BoundExceeded {
            what: "skew shape cells",
            value: shape.size(),
            limit: max_cells,
        });
    }
    Ok(Filler::new(shape.outer(), shape.inner(), None).types())
}

/// How many LR fillings a skew shape has, decided from its geometry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FillingClass {
    /// A translate of the diagram of the given partition.
    Straight(Partition),
    /// Its 180° rotation is a translate of the given diagram.
    RotatedStraight(Partition),
    Multiple,
}

pub fn unique_filling_classification(shape: &SkewShape) -> FillingClass {
    if let Some(nu) = shape.as_translated_diagram() {
        FillingClass::Straight(nu)
    } else if let Some(nu) = shape.as_rotated_diagram() {
        FillingClass::RotatedStraight(nu)
    } else {
        FillingClass::Multiple
    }
}

type PeelMap = Arc<Vec<(Partition, u64)>>;

/// Multiplicities of outer tensor products in restrictions to Young subgroups
/// `S_{m_1} × ... × S_{m_q}`, computed by peeling off the last factor with the
/// LR rule. Coefficient maps `κ ↦ c^λ_{κ μ}` are cached per `(λ, μ)` and shared
/// between calls and threads.
#[derive(Default)]
pub struct YoungRestriction {
    peel: Mutex<HashMap<(Partition, Partition), PeelMap>>,
}

impl YoungRestriction {
    pub fn new() -> Self {
        Self::default()
    }

    fn check_sizes(lambda: &Partition, factors: &[Partition]) -> Result<()> {
        let total: u64 = factors.iter().map(Partition::size).sum();
        if total != lambda.size() {
            return Err(Error::SizeMismatch {
                expected: lambda.size(),
                found: total,
            });
        }
        Ok(())
    }

    /// Non-zero `(κ, c^λ_{κ μ})` over `κ ⊢ |λ| - |μ|`.
    fn peel(&self, lambda: &Partition, mu: &Partition) -> PeelMap {
        let key = (lambda.clone(), mu.clone());
        if let Some(m) = self.peel.lock().get(&key) {
            return Arc::clone(m);
        }
        let mut out = Vec::new();
        if lambda.contains(mu) {
            for kappa in subpartitions(lambda, lambda.size() - mu.size()) {
                let c = Filler::new(lambda, &kappa, Some(mu.parts())).count();
                if c > 0 {
                    out.push((kappa, c));
                }
            }
        }
        let out = Arc::new(out);
        self.peel.lock().insert(key, Arc::clone(&out));
        out
    }

    /// Multiplicity of `χ^{μ_1} × ... × χ^{μ_q}` in the restriction of `χ^λ`.
    pub fn multiplicity(&self, lambda: &Partition, factors: &[Partition]) -> Result<BigUint> {
        Self::check_sizes(lambda, factors)?;
        let mut memo = HashMap::new();
        Ok(self.mult_rec(lambda, factors, &mut memo))
    }

    fn mult_rec(
        &self,
        lambda: &Partition,
        factors: &[Partition],
        memo: &mut HashMap<(Partition, usize), BigUint>,
    ) -> BigUint {
        match factors {
            [] => return BigUint::from(u8::from(lambda.is_empty())),
            [only] => return BigUint::from(u8::from(lambda == only)),
            [a, b] => {
                return BigUint::from(
                    lr_coefficient(lambda, a, b).expect("sizes checked by caller"),
                )
            }
            _ => {}
        }
        let key = (lambda.clone(), factors.len());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let (last, rest) = factors.split_last().expect("at least three factors");
        let mut total = BigUint::zero();
        for (kappa, c) in self.peel(lambda, last).iter() {
            let sub = self.mult_rec(kappa, rest, memo);
            total += sub * *c;
        }
        memo.insert(key, total.clone());
        total
    }

    /// Whether the multiplicity is non-zero; stops at the first contributing chain.
    pub fn is_positive(&self, lambda: &Partition, factors: &[Partition]) -> Result<bool> {
        Self::check_sizes(lambda, factors)?;
        if factors.iter().any(|f| !lambda.contains(f)) {
            return Ok(false);
        }
        let mut memo = HashMap::new();
        Ok(self.pos_rec(lambda, factors, &mut memo))
    }

    fn pos_rec(
        &self,
        lambda: &Partition,
        factors: &[Partition],
        memo: &mut HashMap<(Partition, usize), bool>,
    ) -> bool {
        match factors {
            [] => return lambda.is_empty(),
            [only] => return lambda == only,
            [a, b] => return lr_coefficient(lambda, a, b).expect("sizes checked") > 0,
            _ => {}
        }
        let key = (lambda.clone(), factors.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let (last, rest) = factors.split_last().expect("at least three factors");
        let found = self
            .peel(lambda, last)
            .iter()
            .any(|(kappa, _)| rest.iter().all(|f| kappa.contains(f)) && self.pos_rec(kappa, rest, memo));
        memo.insert(key, found);
        found
    }
}

/// Multiplicity of `χ^{μ_1} × ... × χ^{μ_q}` in `χ^λ` restricted to the Young subgroup.
pub fn iterated_lr_multiplicity(lambda: &Partition, factors: &[Partition]) -> Result<BigUint> {
    YoungRestriction::new().multiplicity(lambda, factors)
}

/// `⟨χ^λ↓, χ^μ × χ^ν⟩` over `S_m × S_{n-m}`, summed class by class from
/// character values. Independent of the filling enumeration.
pub fn restriction_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() + nu.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: mu.size() + nu.size(),
        });
    }
    if lambda.size() > ORACLE_MAX_SIZE {
        return Err(Error::BoundExceeded {
            what: "oracle size",
            value: lambda.size(),
            limit: ORACLE_MAX_SIZE,
        });
    }
    let chars = CharacterEvaluator::new();
    let mut sum = BigInt::zero();
    for alpha in enumerate_partitions(mu.size() as u32)? {
        let chi_mu = chars.character(mu, &alpha)?;
        if chi_mu.is_zero() {
            continue;
        }
        let size_alpha = BigInt::from(class_size(&alpha));
        for beta in enumerate_partitions(nu.size() as u32)? {
            let chi_nu = chars.character(nu, &beta)?;
            if chi_nu.is_zero() {
                continue;
            }
            let chi_lambda = chars.character(lambda, &alpha.union(&beta))?;
            sum += &size_alpha * BigInt::from(class_size(&beta)) * chi_lambda * &chi_mu * chi_nu;
        }
    }
    let order = BigInt::from(factorial(mu.size()) * factorial(nu.size()));
    let (q, r) = sum.div_rem(&order);
    if !r.is_zero() {
        return Err(Error::Inexact {
            numerator: sum.to_string(),
            denominator: order.to_string(),
        });
    }
    q.to_u64().ok_or_else(|| Error::InvalidParameter(format!("negative inner product {q}")))
}

/// `true` when `lr_types` of the shape has exactly one element.
pub fn has_unique_type(shape: &SkewShape) -> Result<bool> {
    Ok(lr_types(shape)?.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn skew(outer: &str, inner: &str) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    #[test]
    fn good_sequences() {
        assert!(is_good_sequence(&[1, 1, 2, 1, 2, 3]));
        assert!(!is_good_sequence(&[2]));
        assert!(!is_good_sequence(&[2, 1, 1]));
        assert!(!is_good_sequence(&[1, 2, 2]));
        assert!(is_good_sequence(&[]));
        assert!(!is_good_sequence(&[1, 0]));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(lr_coefficient(&p("7"), &p("3"), &p("4")).unwrap(), 1);
        assert_eq!(lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1")).unwrap(), 2);
        assert_eq!(lr_coefficient(&p("2,2"), &p("3"), &p("1")).unwrap(), 0);
        assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("")).unwrap(), 1);
        assert!(matches!(
            lr_coefficient(&p("3"), &p("1"), &p("1")),
            Err(Error::SizeMismatch { .. })
        ));
        let big = lr_coefficient(&p("5,3,2^5"), &p("3,2,1^4"), &p("4,1^5")).unwrap();
        assert!(big >= 1);
    }

    #[test]
    fn type_examples() {
        let t: Vec<_> = lr_types(&skew("2,2", "1")).unwrap().into_iter().collect();
        assert_eq!(t, vec![p("2,1")]);
        let t: Vec<_> = lr_types(&skew("2,1", "1")).unwrap().into_iter().collect();
        assert_eq!(t, vec![p("1,1"), p("2")]);
        let t: Vec<_> = lr_types(&skew("4,2,1", "")).unwrap().into_iter().collect();
        assert_eq!(t, vec![p("4,2,1")]);
    }

    #[test]
    fn type_bound() {
        let g = skew("20,11", "");
        assert!(matches!(lr_types(&g), Err(Error::BoundExceeded { .. })));
        assert_eq!(lr_types_within(&g, 31).unwrap().len(), 1);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            unique_filling_classification(&skew("2,2", "1")),
            FillingClass::RotatedStraight(p("2,1"))
        );
        assert_eq!(
            unique_filling_classification(&skew("5,4", "")),
            FillingClass::Straight(p("5,4"))
        );
        assert_eq!(
            unique_filling_classification(&skew("2,1", "1")),
            FillingClass::Multiple
        );
    }

    #[test]
    fn explicit_fillings_are_valid() {
        let g = skew("4,3,2", "2,1");
        for nu in enumerate_partitions(6).unwrap() {
            let fillings = lr_fillings(&g, &nu).unwrap();
            for f in &fillings {
                assert!(f.is_valid(), "{f:?}");
                assert_eq!(f.content(), nu.parts());
            }
            let c = lr_coefficient(&p("4,3,2"), &p("2,1"), &nu).unwrap();
            assert_eq!(fillings.len() as u64, c, "type {nu:?}");
        }
    }

    #[test]
    fn iterated_examples() {
        let m = iterated_lr_multiplicity(&p("6"), &[p("3"), p("3")]).unwrap();
        assert_eq!(m, BigUint::one());
        let m = iterated_lr_multiplicity(&p("3,2,1"), &[p("2,1"), p("2,1")]).unwrap();
        assert_eq!(m, BigUint::from(2u32));
        for prime in [3u32, 5] {
            let factors = vec![Partition::row(prime); prime as usize];
            let m = iterated_lr_multiplicity(&Partition::row(prime * prime), &factors).unwrap();
            assert_eq!(m, BigUint::one());
        }
        // restriction of (2,1) to S_1^3 contains the trivial character twice (its degree)
        let m = iterated_lr_multiplicity(&p("2,1"), &[p("1"), p("1"), p("1")]).unwrap();
        assert_eq!(m, BigUint::from(2u32));
        assert!(YoungRestriction::new()
            .is_positive(&p("3,2,1"), &[p("2"), p("2"), p("1,1")])
            .unwrap());
        assert!(!YoungRestriction::new()
            .is_positive(&p("6"), &[p("2"), p("2"), p("1,1")])
            .unwrap());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(restriction_oracle(&p("3,2,1"), &p("2,1"), &p("2,1")).unwrap(), 2);
        assert_eq!(restriction_oracle(&p("4"), &p("2"), &p("2")).unwrap(), 1);
        assert_eq!(restriction_oracle(&p("2,2"), &p("2"), &p("1,1")).unwrap(), 0);
        assert!(matches!(
            restriction_oracle(&p("13"), &p("6"), &p("7")),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
