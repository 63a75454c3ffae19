//! Cycle-type distributions of Sylow p-subgroups of `S_n`, `p` odd.
//!
//! `P_{p^k} = P_{p^{k-1}} ≀ C_p` and `P_n` is the direct product of `b_i` copies
//! of `P_{p^i}` over the base-`p` digits `b_i` of `n`. Every cycle of an
//! element of `P_n` has length a power of `p`, so a cycle type is stored as a
//! multiplicity vector `(m_0, m_1, ...)` counting cycles of length `p^i`.
//!
//! For the wreath step, an element `(g_1, ..., g_p; c)` with `c = 1` has the
//! disjoint union of the cycle types of the `g_i`. With `c` a generator of
//! `C_p` its cycles are those of the product `g_{c^{p-1}(1)} ... g_1`, each
//! stretched by a factor `p`. That product of `p` independent uniform
//! elements of `P_{p^{k-1}}` is itself uniform, so each type `t` of the base
//! group is hit `|P_{p^{k-1}}|^{p-1} · count(t)` times per non-trivial `c`.
//! The enumeration oracle below re-derives the same counts by brute force.

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{p_adic, require_odd_prime, Partition, DEFAULT_MAX_N};

/// Default cap on `p^k` for [`prime_power_distribution`].
pub const DEFAULT_MAX_PRIME_POWER: u64 = 243;

/// Largest group the enumeration oracle will build.
pub const ORACLE_MAX_ORDER: u64 = 1_000_000;

/// Exact number of elements of each cycle type in a Sylow p-subgroup of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDistribution {
    prime: u64,
    degree: u64,
    /// multiplicity vector over powers of `prime` -> element count
    counts: BTreeMap<Vec<u32>, BigUint>,
}

/// One row of the JSON rendering.
#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    #[serde(rename = "type")]
    pub cycle_type: Partition,
    pub count: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassDistributionJson {
    pub prime: u64,
    pub degree: u64,
    pub order: String,
    pub classes: Vec<ClassRecord>,
}

impl ClassDistribution {
    fn identity(prime: u64, degree: u64, levels: usize) -> Self {
        let mut key = vec![0u32; levels];
        if degree > 0 {
            key[0] = degree as u32;
        }
        let mut counts = BTreeMap::new();
        counts.insert(key, BigUint::one());
        Self {
            prime,
            degree,
            counts,
        }
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Group order: the sum of all counts.
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    fn to_partition(&self, key: &[u32]) -> Partition {
        let mut parts = Vec::new();
        let mut len = 1u64;
        let mut lens = Vec::with_capacity(key.len());
        for _ in key {
            lens.push(len as u32);
            len *= self.prime;
        }
        for (i, &m) in key.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(lens[i], m as usize));
        }
        Partition::from_sorted(parts)
    }

    fn key_of(&self, cycle_type: &Partition) -> Option<Vec<u32>> {
        let levels = self.counts.keys().next().map_or(1, Vec::len);
        key_for(self.prime, levels, cycle_type)
    }

    /// Count for one cycle type (zero if it does not occur).
    pub fn count(&self, cycle_type: &Partition) -> BigUint {
        self.key_of(cycle_type)
            .and_then(|k| self.counts.get(&k).cloned())
            .unwrap_or_default()
    }

    /// `(cycle type, count)` pairs, largest cycle types first.
    pub fn iter(&self) -> impl Iterator<Item = (Partition, &BigUint)> + '_ {
        let mut rows: Vec<(Partition, &BigUint)> = self
            .counts
            .iter()
            .map(|(k, v)| (self.to_partition(k), v))
            .collect();
        rows.sort_by(|a, b| b.0.cmp(&a.0));
        rows.into_iter()
    }

    pub fn to_json(&self) -> ClassDistributionJson {
        ClassDistributionJson {
            prime: self.prime,
            degree: self.degree,
            order: self.total().to_string(),
            classes: self
                .iter()
                .map(|(t, c)| ClassRecord {
                    cycle_type: t,
                    count: c.to_string(),
                })
                .collect(),
        }
    }

    fn pad(&self, levels: usize) -> BTreeMap<Vec<u32>, BigUint> {
        self.counts
            .iter()
            .map(|(k, v)| {
                let mut k = k.clone();
                k.resize(levels, 0);
                (k, v.clone())
            })
            .collect()
    }

    /// Distribution of the direct product on disjoint supports.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.prime, other.prime);
        let levels = self
            .counts
            .keys()
            .chain(other.counts.keys())
            .map(Vec::len)
            .max()
            .unwrap_or(1);
        let a = self.pad(levels);
        let b = other.pad(levels);
        let mut counts: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
        for (ka, va) in &a {
            for (kb, vb) in &b {
                let key: Vec<u32> = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
                *counts.entry(key).or_default() += va * vb;
            }
        }
        Self {
            prime: self.prime,
            degree: self.degree + other.degree,
            counts,
        }
    }
}

/// Multiplicity vector of a cycle type whose cycle lengths are all `p^i`, `i < levels`.
fn key_for(p: u64, levels: usize, cycle_type: &Partition) -> Option<Vec<u32>> {
    let mut key = vec![0u32; levels];
    for &c in cycle_type.parts() {
        let mut len = 1u64;
        let mut i = 0;
        while len < u64::from(c) {
            len *= p;
            i += 1;
        }
        if len != u64::from(c) || i >= levels {
            return None;
        }
        key[i] += 1;
    }
    Some(key)
}

/// Number of powers `p^i` with `p^i <= n`.
fn levels_for(p: u64, n: u64) -> usize {
    let mut levels = 1;
    let mut pk = p;
    while pk <= n {
        levels += 1;
        pk *= p;
    }
    levels
}

fn order_exponent(p: u64, n: u64) -> u32 {
    let mut e = 0;
    let mut pk = p;
    while pk <= n {
        e += n / pk;
        pk *= p;
    }
    e as u32
}

/// `|P_n| = p^{Σ_i ⌊n / p^i⌋}`.
pub fn sylow_order(p: u64, n: u64) -> BigUint {
    BigUint::from(p).pow(order_exponent(p, n))
}

pub fn prime_power_distribution(p: u64, k: u32) -> Result<ClassDistribution> {
    prime_power_distribution_within(p, k, DEFAULT_MAX_PRIME_POWER)
}

pub fn prime_power_distribution_within(p: u64, k: u32, max_degree: u64) -> Result<ClassDistribution> {
    require_odd_prime(p)?;
    let degree = p
        .checked_pow(k)
        .filter(|&d| d <= max_degree)
        .ok_or(Error::BoundExceeded {
            what: "p^k",
            value: p.saturating_pow(k),
            limit: max_degree,
        })?;
    let mut dist = ClassDistribution::identity(p, 1, 1);
    for level in 1..=k as usize {
        let base_order = dist.total();
        // top component trivial: p independent copies side by side
        let mut next = dist.clone();
        for _ in 1..p {
            next = next.product(&dist);
        }
        let mut counts = next.pad(level + 1);
        // top component one of the p-1 generators: every cycle stretched by p
        let weight = base_order.pow(p as u32 - 1) * (p - 1);
        for (key, count) in &dist.counts {
            let mut stretched = Vec::with_capacity(level + 1);
            stretched.push(0);
            stretched.extend_from_slice(key);
            stretched.resize(level + 1, 0);
            *counts.entry(stretched).or_default() += &weight * count;
        }
        dist = ClassDistribution {
            prime: p,
            degree: next.degree,
            counts,
        };
    }
    debug_assert_eq!(dist.degree, degree);
    Ok(dist)
}

pub fn distribution(p: u64, n: u64) -> Result<ClassDistribution> {
    distribution_within(p, n, u64::from(DEFAULT_MAX_N))
}

pub fn distribution_within(p: u64, n: u64, max_n: u64) -> Result<ClassDistribution> {
    require_odd_prime(p)?;
    if n > max_n {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n,
            limit: max_n,
        });
    }
    if n == 0 {
        return Ok(ClassDistribution::identity(p, 0, 1));
    }
    let digits = p_adic(n, p)?;
    let mut acc = ClassDistribution::identity(p, 0, 1);
    for (i, &b) in digits.digits().iter().enumerate() {
        if b == 0 {
            continue;
        }
        let block = prime_power_distribution_within(p, i as u32, u64::MAX)?;
        for _ in 0..b {
            acc = acc.product(&block);
        }
    }
    debug_assert!(acc.counts.values().all(|v| !v.is_zero()));
    Ok(acc)
}

/// A permutation of `0..n`, stored as its image list.
pub type Perm = Vec<u16>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    // (a ∘ b)(i) = a(b(i))
    b.iter().map(|&i| a[i as usize]).collect()
}

/// Cycle type of a permutation.
pub fn cycle_type(perm: &Perm) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i] as usize;
            len += 1;
        }
        lengths.push(len);
    }
    Partition::from_unsorted(lengths)
}

fn push_wreath_generators(p: usize, k: u32, offset: usize, n: usize, out: &mut Vec<Perm>) {
    if k == 0 {
        return;
    }
    let sub = p.pow(k - 1);
    push_wreath_generators(p, k - 1, offset, n, out);
    // cyclically shift the p sub-blocks of this block
    let mut top: Perm = (0..n as u16).collect();
    for j in 0..p {
        for t in 0..sub {
            top[offset + j * sub + t] = (offset + ((j + 1) % p) * sub + t) as u16;
        }
    }
    out.push(top);
}

/// Generators of a Sylow p-subgroup of `S_n`, block by block along the p-adic digits.
pub fn sylow_generators(p: u64, n: u64) -> Result<Vec<Perm>> {
    require_odd_prime(p)?;
    if n > u64::from(u16::MAX) {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n,
            limit: u16::MAX.into(),
        });
    }
    let mut gens = Vec::new();
    if n == 0 {
        return Ok(gens);
    }
    let mut offset = 0usize;
    for (i, &b) in p_adic(n, p)?.digits().iter().enumerate().rev() {
        for _ in 0..b {
            push_wreath_generators(p as usize, i as u32, offset, n as usize, &mut gens);
            offset += (p as usize).pow(i as u32);
        }
    }
    Ok(gens)
}

/// Every element of the Sylow subgroup generated by [`sylow_generators`].
pub fn sylow_elements(p: u64, n: u64) -> Result<Vec<Perm>> {
    require_odd_prime(p)?;
    let order = sylow_order(p, n);
    if order > BigUint::from(ORACLE_MAX_ORDER) {
        return Err(Error::BoundExceeded {
            what: "group order",
            value: u64::try_from(order).unwrap_or(u64::MAX),
            limit: ORACLE_MAX_ORDER,
        });
    }
    let gens = sylow_generators(p, n)?;
    let identity: Perm = (0..n as u16).collect();
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    let mut elements = Vec::new();
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let h = compose(s, &g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
        elements.push(g);
    }
    Ok(elements)
}

/// Cycle-type tally of the explicitly enumerated group.
pub fn enumeration_oracle(p: u64, n: u64) -> Result<ClassDistribution> {
    let levels = levels_for(p, n);
    let mut counts: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
    for g in sylow_elements(p, n)? {
        let key = key_for(p, levels, &cycle_type(&g)).expect("cycle lengths are powers of p");
        *counts.entry(key).or_default() += 1u32;
    }
    Ok(ClassDistribution {
        prime: p,
        degree: n,
        counts,
    })
}
