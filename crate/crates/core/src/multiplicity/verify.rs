//! Verification drivers: zero sets of `f` against the predicted exceptions,
//! and the explicit `(λ; γ, δ)` constituent tables.

use std::sync::Arc;

use serde::Serialize;

use super::sets::in_delta;
use super::{MultiplicityReport, SylowMultiplicity};
use crate::character::CharacterEvaluator;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::lr::lr_coefficient;
use crate::partition::{p_adic, require_odd_prime, Partition};
use crate::sylow::distribution_within;

/// Expected exceptions for `p = 3`, `n ∈ {4, 6, 9, 10}`, as stated by the
/// classification. These are expectations to compare against, never inputs.
const EXPECTED_P3: &[(u64, &[&[u32]])] = &[
    (4, &[&[2, 2]]),
    (6, &[&[3, 2, 1]]),
    (
        9,
        &[
            &[8, 1],
            &[5, 4],
            &[4, 3, 2],
            &[3, 3, 2, 1],
            &[2, 2, 2, 2, 1],
            &[2, 1, 1, 1, 1, 1, 1, 1],
        ],
    ),
    (10, &[&[5, 5], &[2, 2, 2, 2, 2]]),
];

/// The predicted zero set of `f` on `P(n)`, in enumeration order.
pub fn expected_zero_set(p: u64, n: u64) -> Result<Vec<Partition>> {
    require_odd_prime(p)?;
    let mut out: Vec<Partition> = Vec::new();
    if p == 3 {
        if let Some((_, shapes)) = EXPECTED_P3.iter().find(|(m, _)| *m == n) {
            out = shapes
                .iter()
                .map(|s| Partition::new(s.to_vec()))
                .collect::<Result<_>>()?;
        }
    }
    if out.is_empty() && n >= p && p_adic(n, p)?.prime_power_exponent().is_some() {
        let m = n as u32;
        out.push(Partition::hook(m - 1, 1));
        out.push(Partition::hook(2, m - 2));
        out.dedup();
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroSetCheck {
    pub n: u64,
    pub scanned: usize,
    pub expected: Vec<Partition>,
    pub found: Vec<Partition>,
    pub pass: bool,
}

fn zero_set_check(report: &MultiplicityReport) -> Result<ZeroSetCheck> {
    let expected = expected_zero_set(report.prime, report.degree)?;
    let pass = report.zero_set == expected && report.degree_identity && report.conjugation_symmetry;
    Ok(ZeroSetCheck {
        n: report.degree,
        scanned: report.entries.len(),
        expected,
        found: report.zero_set.clone(),
        pass,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremAReport {
    pub p: u64,
    pub max_n: u64,
    pub rows: Vec<ZeroSetCheck>,
    pub pass: bool,
}

/// Compares zero sets with the prediction for every `1 ≤ n ≤ max_n`.
pub fn verify_theorem_a(p: u64, max_n: u64, limits: &Limits) -> Result<TheoremAReport> {
    require_odd_prime(p)?;
    limits.check_n(max_n)?;
    let chars = Arc::new(CharacterEvaluator::new());
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let dist = distribution_within(p, n, limits.max_n.into())?;
        let engine = SylowMultiplicity::from_distribution(&dist, Arc::clone(&chars));
        rows.push(zero_set_check(&MultiplicityReport::compute_with(&engine, limits)?)?);
    }
    Ok(TheoremAReport {
        p,
        max_n,
        pass: rows.iter().all(|r| r.pass),
        rows,
    })
}

/// The zero-set check at `n = p^k`.
pub fn verify_prime_power(p: u64, k: u32, limits: &Limits) -> Result<ZeroSetCheck> {
    require_odd_prime(p)?;
    let n = p
        .checked_pow(k)
        .ok_or_else(|| Error::InvalidParameter(format!("{p}^{k} is too large")))?;
    limits.check_n(n)?;
    zero_set_check(&MultiplicityReport::compute(p, n, limits)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    /// The shape of `λ` in terms of `m = p^k`.
    pub label: &'static str,
    pub lambda: Partition,
    pub gamma: Partition,
    pub delta: Partition,
}

/// `(part, multiplicity)` blocks as functions of `m`.
type Blocks = fn(i64) -> Vec<(i64, i64)>;

const TABLE: &[(&str, Blocks, Blocks, Blocks)] = &[
    ("(5,3,2^{m-4})", |m| vec![(5, 1), (3, 1), (2, m - 4)], |m| vec![(3, 1), (2, 1), (1, m - 5)], |m| vec![(4, 1), (1, m - 4)]),
    ("(6,2^{m-3})", |m| vec![(6, 1), (2, m - 3)], |m| vec![(3, 1), (2, 1), (1, m - 5)], |m| vec![(4, 1), (1, m - 4)]),
    ("(6,2^{m-4},1^2)", |m| vec![(6, 1), (2, m - 4), (1, 2)], |m| vec![(4, 1), (1, m - 4)], |m| vec![(3, 1), (1, m - 3)]),
    ("(5,3,2^{m-5},1^2)", |m| vec![(5, 1), (3, 1), (2, m - 5), (1, 2)], |m| vec![(3, 1), (2, 1), (1, m - 5)], |m| vec![(3, 1), (1, m - 3)]),
    ("(5,2^{m-3},1)", |m| vec![(5, 1), (2, m - 3), (1, 1)], |m| vec![(3, 1), (2, 1), (1, m - 5)], |m| vec![(3, 1), (1, m - 3)]),
    ("(3,3,2^{m-3})", |m| vec![(3, 2), (2, m - 3)], |m| vec![(2, 2), (1, m - 4)], |m| vec![(3, 1), (2, 1), (1, m - 5)]),
    ("(5,3,2^{m-4})", |m| vec![(5, 1), (3, 1), (2, m - 4)], |m| vec![(2, 2), (1, m - 4)], |m| vec![(3, 1), (2, 1), (1, m - 5)]),
    ("(4,4,2^{m-4})", |m| vec![(4, 2), (2, m - 4)], |m| vec![(3, 1), (2, 1), (1, m - 5)], |m| vec![(4, 1), (2, 1), (1, m - 6)]),
    ("(4,3,3,2^{m-5})", |m| vec![(4, 1), (3, 2), (2, m - 5)], |m| vec![(3, 1), (2, 1), (1, m - 5)], |m| vec![(4, 1), (2, 1), (1, m - 6)]),
    ("(3^4,2^{m-6})", |m| vec![(3, 4), (2, m - 6)], |m| vec![(3, 1), (2, 1), (1, m - 5)], |m| vec![(3, 1), (2, 2), (1, m - 7)]),
    ("(5,3,2^{m-5},1^2)", |m| vec![(5, 1), (3, 1), (2, m - 5), (1, 2)], |m| vec![(3, 1), (2, 1), (1, m - 5)], |m| vec![(3, 1), (1, m - 3)]),
    ("(4,4,2^{m-5},1^2)", |m| vec![(4, 2), (2, m - 5), (1, 2)], |m| vec![(3, 1), (2, 1), (1, m - 5)], |m| vec![(3, 1), (1, m - 3)]),
    ("(4,3,3,2^{m-6},1^2)", |m| vec![(4, 1), (3, 2), (2, m - 6), (1, 2)], |m| vec![(3, 1), (2, 1), (1, m - 5)], |m| vec![(3, 1), (1, m - 3)]),
    ("(4,3,2^{m-4},1)", |m| vec![(4, 1), (3, 1), (2, m - 4), (1, 1)], |m| vec![(3, 1), (2, 1), (1, m - 5)], |m| vec![(3, 1), (1, m - 3)]),
    ("(3^3,2^{m-5},1)", |m| vec![(3, 3), (2, m - 5), (1, 1)], |m| vec![(3, 1), (2, 1), (1, m - 5)], |m| vec![(3, 1), (1, m - 3)]),
    ("(3^4,2^{m-7},1^2)", |m| vec![(3, 4), (2, m - 7), (1, 2)], |m| vec![(3, 1), (2, 1), (1, m - 5)], |m| vec![(2, 3), (1, m - 6)]),
    ("(2^{m-1},1^2)", |m| vec![(2, m - 1), (1, 2)], |m| vec![(2, 2), (1, m - 4)], |m| vec![(2, 3), (1, m - 6)]),
    ("(3,2^{m-2},1)", |m| vec![(3, 1), (2, m - 2), (1, 1)], |m| vec![(3, 1), (1, m - 3)], |m| vec![(2, 2), (1, m - 4)]),
    ("(m-1,1^{m+1})", |m| vec![(m - 1, 1), (1, m + 1)], |m| vec![(m - 2, 1), (1, 2)], |m| vec![(1, m)]),
    ("(m-1,2,1^{m-1})", |m| vec![(m - 1, 1), (2, 1), (1, m - 1)], |m| vec![(m - 2, 1), (2, 1)], |m| vec![(1, m)]),
    ("(m,2,1^{m-2})", |m| vec![(m, 1), (2, 1), (1, m - 2)], |m| vec![(m - 2, 1), (2, 1)], |m| vec![(3, 1), (1, m - 3)]),
];

fn instantiate(label: &str, blocks: Vec<(i64, i64)>) -> Result<Partition> {
    let mut parts = Vec::new();
    for (part, mult) in blocks {
        if mult < 0 || (mult > 0 && part <= 0) {
            return Err(Error::InvalidParameter(format!(
                "{label} has no valid instance: block {part}^{mult}"
            )));
        }
        parts.extend(std::iter::repeat_n(part as u32, mult as usize));
    }
    Partition::new(parts).map_err(|e| Error::InvalidParameter(format!("{label}: {e}")))
}

/// The `(λ; γ, δ)` rows instantiated at `m`.
pub fn lemma_table_rows(m: u32) -> Result<Vec<TableRow>> {
    let mi = i64::from(m);
    TABLE
        .iter()
        .map(|&(label, lambda, gamma, delta)| {
            Ok(TableRow {
                label,
                lambda: instantiate(label, lambda(mi))?,
                gamma: instantiate(label, gamma(mi))?,
                delta: instantiate(label, delta(mi))?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCheck {
    pub row: TableRow,
    pub distinct: bool,
    pub in_delta: bool,
    pub coefficient: u64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub p: u64,
    pub k: u32,
    pub checks: Vec<TableCheck>,
    pub pass: bool,
}

/// Checks each row: `γ ≠ δ`, both in `Δ(p^k)`, and `c^λ_{γδ} ≥ 1`.
pub fn verify_lemma_tables(p: u64, k: u32, limits: &Limits) -> Result<TableReport> {
    require_odd_prime(p)?;
    let m = p
        .checked_pow(k)
        .filter(|&m| m <= u64::from(limits.max_n) / 2)
        .ok_or(Error::BoundExceeded {
            what: "2 p^k",
            value: 2u64.saturating_mul(p.saturating_pow(k)),
            limit: limits.max_n.into(),
        })?;
    let mut checks = Vec::new();
    for row in lemma_table_rows(m as u32)? {
        let distinct = row.gamma != row.delta;
        let in_d = in_delta(&row.gamma, p, k)? && in_delta(&row.delta, p, k)?;
        let coefficient = lr_coefficient(&row.lambda, &row.gamma, &row.delta)?;
        checks.push(TableCheck {
            pass: distinct && in_d && coefficient >= 1,
            row,
            distinct,
            in_delta: in_d,
            coefficient,
        });
    }
    Ok(TableReport {
        p,
        k,
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}
