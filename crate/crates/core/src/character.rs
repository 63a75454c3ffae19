//! Exact irreducible characters of the symmetric group.
//!
//! Values come from the Murnaghan–Nakayama rule, run on beta-sets (first-column
//! hook lengths): removing a rim hook of length `h` moves one bead from `b` to
//! `b - h`, and the leg length is the number of beads strictly in between.
//! Cycles are consumed largest first; once only fixed points remain the value
//! is the degree, taken from the hook-length formula.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use parking_lot::Mutex;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// One step of the rim-hook recursion: the shape left behind and the leg length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHookRemoval {
    pub remainder: Partition,
    pub leg_length: u32,
}

/// All ways of removing a rim hook of length `h` from `shape`.
pub fn rim_hook_removals(shape: &Partition, h: u32) -> Vec<RimHookRemoval> {
    let len = shape.len();
    // beta[i] = shape_i + (len - 1 - i), strictly decreasing
    let beta: Vec<u64> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &x)| u64::from(x) + (len - 1 - i) as u64)
        .collect();
    let h64 = u64::from(h);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < h64 {
            continue;
        }
        let target = b - h64;
        if beta.binary_search_by(|x| target.cmp(x)).is_ok() {
            continue;
        }
        let leg = beta.iter().filter(|&&x| x > target && x < b).count() as u32;
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (len - 1 - j) as u64) as u32)
            .filter(|&x| x > 0)
            .collect();
        out.push(RimHookRemoval {
            remainder: Partition::from_sorted(parts),
            leg_length: leg,
        });
    }
    out
}

/// `n!` as an unbounded integer.
pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Degree of the irreducible character labelled by `shape`, by the hook-length formula.
pub fn degree(shape: &Partition) -> BigUint {
    let conj = shape.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as u64 - j as u64 - 1;
            let leg = u64::from(conj.part(j)) - i as u64 - 1;
            hooks *= arm + leg + 1;
        }
    }
    let (q, r) = factorial(shape.size()).div_rem(&hooks);
    assert!(r.is_zero(), "hook product does not divide n! for {shape:?}");
    q
}

/// Order of the centralizer of a permutation with the given cycle type:
/// the product over cycle lengths `k` of `k^{m_k} m_k!`.
pub fn centralizer_order(cycle_type: &Partition) -> BigUint {
    cycle_type
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .fold(BigUint::one(), |acc, (k, &m)| {
            acc * BigUint::from(k as u64).pow(m) * factorial(m.into())
        })
}

/// Number of permutations of the given cycle type in `S_n`.
pub fn class_size(cycle_type: &Partition) -> BigUint {
    let (q, r) = factorial(cycle_type.size()).div_rem(&centralizer_order(cycle_type));
    assert!(r.is_zero());
    q
}

/// Memoizing character evaluator, safe to share between threads.
///
/// The memo is keyed on `(remaining shape, remaining non-trivial cycles)`.
/// Evaluations for the many cycle types of one Sylow subgroup share long
/// suffixes, so one evaluator should be reused across a whole scan.
#[derive(Default)]
pub struct CharacterEvaluator {
    values: Mutex<HashMap<(Partition, Vec<u32>), BigInt>>,
    degrees: Mutex<HashMap<Partition, BigUint>>,
}

impl CharacterEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// The character `χ^shape` at any permutation of the given cycle type.
    pub fn character(&self, shape: &Partition, cycle_type: &Partition) -> Result<BigInt> {
        if shape.size() != cycle_type.size() {
            return Err(Error::SizeMismatch {
                expected: shape.size(),
                found: cycle_type.size(),
            });
        }
        let cycles: Vec<u32> = cycle_type
            .parts()
            .iter()
            .copied()
            .filter(|&c| c > 1)
            .collect();
        Ok(self.eval(shape, &cycles))
    }

    pub fn degree(&self, shape: &Partition) -> BigUint {
        if let Some(d) = self.degrees.lock().get(shape) {
            return d.clone();
        }
        let d = degree(shape);
        self.degrees.lock().insert(shape.clone(), d.clone());
        d
    }

    fn eval(&self, shape: &Partition, cycles: &[u32]) -> BigInt {
        let Some((&h, rest)) = cycles.split_first() else {
            return BigInt::from(self.degree(shape));
        };
        let key = (shape.clone(), cycles.to_vec());
        if let Some(v) = self.values.lock().get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for removal in rim_hook_removals(shape, h) {
            let sub = self.eval(&removal.remainder, rest);
            if removal.leg_length % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.values.lock().insert(key, total.clone());
        total
    }
}

/// `χ^shape` at a permutation of the given cycle type, with a fresh memo.
pub fn mn_character(shape: &Partition, cycle_type: &Partition) -> Result<BigInt> {
    CharacterEvaluator::new().character(shape, cycle_type)
}
