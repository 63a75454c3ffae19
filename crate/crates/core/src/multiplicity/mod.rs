//! `f(λ) = ⟨χ^λ↓_{P_n}, 1_{P_n}⟩`, the multiplicity of `χ^λ` in the permutation
//! character of `S_n` on the cosets of a Sylow p-subgroup.
//!
//! `f(λ) = |P_n|^{-1} Σ_t count(t) χ^λ(t)`, summed over the cycle types `t`
//! occurring in `P_n`. The sum must divide exactly; a remainder is reported
//! as [`Error::Inexact`] and always indicates a bug.

mod sets;
mod verify;

pub use sets::{
    delta_set, in_a, in_d, in_delta, verify_d_equals_a, DEqualsAReport, DSearch,
    SetMembershipReport, Witness,
};
pub use verify::{
    expected_zero_set, lemma_table_rows, verify_lemma_tables, verify_prime_power,
    verify_theorem_a, TableCheck, TableReport, TableRow, TheoremAReport, ZeroSetCheck,
};

use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::character::{factorial, CharacterEvaluator};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{enumerate_partitions_within, require_odd_prime, Partition};
use crate::sylow::{distribution_within, ClassDistribution};

/// Evaluates `f` for one `(p, n)`; cheap to share across threads.
pub struct SylowMultiplicity {
    prime: u64,
    degree: u64,
    classes: Vec<(Partition, BigInt)>,
    order: BigInt,
    chars: Arc<CharacterEvaluator>,
}

impl SylowMultiplicity {
    pub fn new(p: u64, n: u64) -> Result<Self> {
        Self::with_limits(p, n, &Limits::default())
    }

    pub fn with_limits(p: u64, n: u64, limits: &Limits) -> Result<Self> {
        require_odd_prime(p)?;
        limits.check_n(n)?;
        let dist = distribution_within(p, n, limits.max_n.into())?;
        Ok(Self::from_distribution(&dist, Arc::new(CharacterEvaluator::new())))
    }

    pub fn from_distribution(dist: &ClassDistribution, chars: Arc<CharacterEvaluator>) -> Self {
        Self {
            prime: dist.prime(),
            degree: dist.degree(),
            classes: dist
                .iter()
                .map(|(t, c)| (t, BigInt::from(c.clone())))
                .collect(),
            order: BigInt::from(dist.total()),
            chars,
        }
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn group_order(&self) -> BigUint {
        self.order.magnitude().clone()
    }

    pub fn characters(&self) -> &CharacterEvaluator {
        &self.chars
    }

    pub fn multiplicity(&self, lambda: &Partition) -> Result<BigUint> {
        if lambda.size() != self.degree {
            return Err(Error::SizeMismatch {
                expected: self.degree,
                found: lambda.size(),
            });
        }
        let mut sum = BigInt::zero();
        for (cycle_type, count) in &self.classes {
            sum += count * self.chars.character(lambda, cycle_type)?;
        }
        let (q, r) = sum.div_rem(&self.order);
        if !r.is_zero() || q.sign() == Sign::Minus {
            return Err(Error::Inexact {
                numerator: sum.to_string(),
                denominator: self.order.to_string(),
            });
        }
        Ok(q.magnitude().clone())
    }
}

/// `f(λ)` for `λ ⊢ n` and the Sylow p-subgroup `P_n`.
pub fn f(p: u64, n: u64, lambda: &Partition) -> Result<BigUint> {
    SylowMultiplicity::new(p, n)?.multiplicity(lambda)
}

/// `f` over all of `P(n)`, in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub prime: u64,
    pub degree: u64,
    pub entries: Vec<(Partition, BigUint)>,
    pub zero_set: Vec<Partition>,
    /// `Σ f(λ) χ^λ(1) == n! / |P_n|`
    pub degree_identity: bool,
    /// `f(λ) == f(λ')` for every `λ`
    pub conjugation_symmetry: bool,
}

#[derive(Serialize)]
struct EntryJson<'a> {
    partition: &'a Partition,
    multiplicity: String,
}

#[derive(Serialize)]
struct ChecksJson {
    degree_identity: bool,
    conjugation_symmetry: bool,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    prime: u64,
    degree: u64,
    entries: Vec<EntryJson<'a>>,
    zero_set: &'a [Partition],
    checks: ChecksJson,
}

impl MultiplicityReport {
    pub fn compute(p: u64, n: u64, limits: &Limits) -> Result<Self> {
        let engine = SylowMultiplicity::with_limits(p, n, limits)?;
        Self::compute_with(&engine, limits)
    }

    pub fn compute_with(engine: &SylowMultiplicity, limits: &Limits) -> Result<Self> {
        let n = engine.degree();
        limits.check_n(n)?;
        let partitions = enumerate_partitions_within(n as u32, limits.max_n)?;
        let values = partitions
            .par_iter()
            .map(|lambda| engine.multiplicity(lambda))
            .collect::<Result<Vec<_>>>()?;
        let entries: Vec<(Partition, BigUint)> = partitions.into_iter().zip(values).collect();

        let zero_set = entries
            .iter()
            .filter(|(_, m)| m.is_zero())
            .map(|(l, _)| l.clone())
            .collect();

        let index = factorial(n) / engine.group_order();
        let weighted: BigUint = entries
            .iter()
            .map(|(l, m)| m * engine.characters().degree(l))
            .sum();

        let lookup: std::collections::HashMap<&Partition, &BigUint> =
            entries.iter().map(|(l, m)| (l, m)).collect();
        let conjugation_symmetry = entries
            .iter()
            .all(|(l, m)| lookup.get(&l.conjugate()) == Some(&m));

        Ok(Self {
            prime: engine.prime(),
            degree: n,
            entries,
            zero_set,
            degree_identity: weighted == index,
            conjugation_symmetry,
        })
    }

    /// Number of constituents: partitions with `f(λ) > 0`.
    pub fn constituent_count(&self) -> usize {
        self.entries.len() - self.zero_set.len()
    }

    pub fn get(&self, lambda: &Partition) -> Option<&BigUint> {
        self.entries.iter().find(|(l, _)| l == lambda).map(|(_, m)| m)
    }

    /// Canonical JSON: integers as arrays, multiplicities as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let report = ReportJson {
            prime: self.prime,
            degree: self.degree,
            entries: self
                .entries
                .iter()
                .map(|(l, m)| EntryJson {
                    partition: l,
                    multiplicity: m.to_string(),
                })
                .collect(),
            zero_set: &self.zero_set,
            checks: ChecksJson {
                degree_identity: self.degree_identity,
                conjugation_symmetry: self.conjugation_symmetry,
            },
        };
        serde_json::to_value(report).expect("report serializes")
    }
}

/// Number of `λ ⊢ n` with `f(λ) > 0`.
pub fn constituent_count(p: u64, n: u64) -> Result<usize> {
    Ok(MultiplicityReport::compute(p, n, &Limits::default())?.constituent_count())
}
