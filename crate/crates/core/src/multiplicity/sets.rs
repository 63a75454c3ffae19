//! `Δ(p^k)`, `A(q, p^k)` and `D(q, p^k)`.
//!
//! `D(q, p^k)` holds the `λ ⊢ q p^k` whose restriction to `S_{p^k}^{×q}` has a
//! constituent `χ^{μ_1} × ... × χ^{μ_q}` with every `μ_i ∈ Δ(p^k)` and the
//! `μ_i` not all equal.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::lr::YoungRestriction;
use crate::partition::{enumerate_partitions_within, require_odd_prime, Partition};

fn prime_power(p: u64, k: u32) -> Result<u64> {
    require_odd_prime(p)?;
    p.checked_pow(k)
        .filter(|&v| v <= u64::from(u32::MAX))
        .ok_or_else(|| Error::InvalidParameter(format!("{p}^{k} is too large")))
}

fn check_q(q: u64, p: u64) -> Result<()> {
    if !(2..=p).contains(&q) {
        return Err(Error::InvalidParameter(format!(
            "q must lie in 2..={p}, got {q}"
        )));
    }
    Ok(())
}

fn check_size(lambda: &Partition, expected: u64) -> Result<()> {
    if lambda.size() != expected {
        return Err(Error::SizeMismatch {
            expected,
            found: lambda.size(),
        });
    }
    Ok(())
}

/// `λ ∈ Δ(p^k)`: `λ ⊢ p^k` other than `(p^k-1, 1)` and `(2, 1^{p^k-2})`.
pub fn in_delta(lambda: &Partition, p: u64, k: u32) -> Result<bool> {
    let m = prime_power(p, k)?;
    check_size(lambda, m)?;
    let m = m as u32;
    Ok(m < 3 || (*lambda != Partition::hook(m - 1, 1) && *lambda != Partition::hook(2, m - 2)))
}

/// `Δ(p^k)` in enumeration order.
pub fn delta_set(p: u64, k: u32, limits: &Limits) -> Result<Vec<Partition>> {
    let m = prime_power(p, k)?;
    limits.check_n(m)?;
    let all = enumerate_partitions_within(m as u32, limits.max_n)?;
    let mut out = Vec::with_capacity(all.len());
    for lambda in all {
        if in_delta(&lambda, p, k)? {
            out.push(lambda);
        }
    }
    Ok(out)
}

/// `λ ∈ A(q, p^k)`.
pub fn in_a(q: u64, p: u64, k: u32, lambda: &Partition) -> Result<bool> {
    let m = prime_power(p, k)?;
    check_q(q, p)?;
    let n = q * m;
    check_size(lambda, n)?;
    let n = n as u32;
    let mut excluded = vec![
        Partition::row(n),
        Partition::hook(n - 1, 1),
        Partition::hook(2, n - 2),
        Partition::column(n),
    ];
    if q == 2 {
        let m = m as u32;
        excluded.push(Partition::from_sorted(vec![m, m]));
        excluded.push(Partition::from_sorted(vec![2; m as usize]));
    }
    Ok(!excluded.contains(lambda))
}

/// Witness search for `D(q, p^k)`, sharing LR caches across partitions.
pub struct DSearch {
    q: u64,
    p: u64,
    k: u32,
    /// `Δ(p^k)` with `(p^k)` and `(1^{p^k})` moved to the front.
    delta: Vec<Partition>,
    max_tuples: u64,
    restriction: YoungRestriction,
}

impl DSearch {
    pub fn new(q: u64, p: u64, k: u32, limits: &Limits) -> Result<Self> {
        let m = prime_power(p, k)?;
        check_q(q, p)?;
        limits.check_n(q * m)?;
        let mut delta = delta_set(p, k, limits)?;
        // enumeration order puts the row first and the column last
        if let Some(column) = delta.pop() {
            delta.insert(1.min(delta.len()), column);
        }
        Ok(Self {
            q,
            p,
            k,
            delta,
            max_tuples: limits.max_search_tuples,
            restriction: YoungRestriction::new(),
        })
    }

    pub fn size(&self) -> u64 {
        self.q * self.p.pow(self.k)
    }

    /// A not-all-equal tuple over `Δ(p^k)`, weakly increasing in search order,
    /// certifying `λ ∈ D(q, p^k)`; `None` after exhausting all multisets.
    pub fn witness(&self, lambda: &Partition) -> Result<Option<Vec<Partition>>> {
        check_size(lambda, self.size())?;
        let candidates: Vec<&Partition> =
            self.delta.iter().filter(|mu| lambda.contains(mu)).collect();
        let mut idx = vec![0usize; self.q as usize];
        let mut tried = 0u64;
        if candidates.len() < 2 {
            return Ok(None);
        }
        loop {
            if idx.iter().any(|&i| i != idx[0]) {
                let tuple: Vec<Partition> = idx.iter().map(|&i| candidates[i].clone()).collect();
                if plausible(lambda, &tuple) {
                    tried += 1;
                    if tried > self.max_tuples {
                        return Err(Error::BoundExceeded {
                            what: "witness tuples",
                            value: tried,
                            limit: self.max_tuples,
                        });
                    }
                    if self.restriction.is_positive(lambda, &tuple)? {
                        return Ok(Some(tuple));
                    }
                }
            }
            if !next_multiset(&mut idx, candidates.len()) {
                return Ok(None);
            }
        }
    }

    pub fn contains(&self, lambda: &Partition) -> Result<bool> {
        Ok(self.witness(lambda)?.is_some())
    }
}

/// Necessary conditions for `s_λ` to occur in `Π s_{μ_i}`: the first row and
/// the number of rows of `λ` are bounded by the sums over the factors.
fn plausible(lambda: &Partition, tuple: &[Partition]) -> bool {
    let width: u64 = tuple.iter().map(|m| u64::from(m.largest_part())).sum();
    let height: usize = tuple.iter().map(Partition::len).sum();
    u64::from(lambda.largest_part()) <= width && lambda.len() <= height
}

/// Advances a weakly increasing index vector over `0..n`.
fn next_multiset(idx: &mut [usize], n: usize) -> bool {
    let Some(pos) = idx.iter().rposition(|&i| i + 1 < n) else {
        return false;
    };
    let v = idx[pos] + 1;
    for slot in &mut idx[pos..] {
        *slot = v;
    }
    true
}

/// `λ ∈ D(q, p^k)` with a witness tuple when it is.
pub fn in_d(q: u64, p: u64, k: u32, lambda: &Partition) -> Result<(bool, Option<Vec<Partition>>)> {
    let w = DSearch::new(q, p, k, &Limits::default())?.witness(lambda)?;
    Ok((w.is_some(), w))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub partition: Partition,
    pub tuple: Vec<Partition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetMembershipReport {
    pub q: u64,
    pub p: u64,
    pub k: u32,
    pub a_set: Vec<Partition>,
    pub d_set: Vec<Partition>,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DEqualsAReport {
    pub scanned: usize,
    pub equal: bool,
    /// In `A` but not `D`.
    pub a_minus_d: Vec<Partition>,
    /// In `D` but not `A`.
    pub d_minus_a: Vec<Partition>,
    pub sets: SetMembershipReport,
}

/// Scans `P(q p^k)` and compares `A(q, p^k)` with `D(q, p^k)`.
pub fn verify_d_equals_a(q: u64, p: u64, k: u32, limits: &Limits) -> Result<DEqualsAReport> {
    let search = DSearch::new(q, p, k, limits)?;
    let n = search.size();
    let all = enumerate_partitions_within(n as u32, limits.max_n)?;
    let rows = all
        .par_iter()
        .map(|lambda| Ok((in_a(q, p, k, lambda)?, search.witness(lambda)?)))
        .collect::<Result<Vec<_>>>()?;

    let mut sets = SetMembershipReport {
        q,
        p,
        k,
        a_set: Vec::new(),
        d_set: Vec::new(),
        witnesses: Vec::new(),
    };
    let mut a_minus_d = Vec::new();
    let mut d_minus_a = Vec::new();
    for (lambda, (in_a, witness)) in all.iter().zip(rows) {
        if in_a {
            sets.a_set.push(lambda.clone());
        }
        match witness {
            Some(tuple) => {
                sets.d_set.push(lambda.clone());
                sets.witnesses.push(Witness {
                    partition: lambda.clone(),
                    tuple,
                });
                if !in_a {
                    d_minus_a.push(lambda.clone());
                }
            }
            None if in_a => a_minus_d.push(lambda.clone()),
            None => {}
        }
    }
    Ok(DEqualsAReport {
        scanned: all.len(),
        equal: a_minus_d.is_empty() && d_minus_a.is_empty(),
        a_minus_d,
        d_minus_a,
        sets,
    })
}
