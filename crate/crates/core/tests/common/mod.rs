//! Brute-force reference implementations, deliberately naive and independent
//! of the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use sylowchar::character::mn_character;
use sylowchar::partition::Partition;
use sylowchar::sylow::{cycle_type, sylow_elements};

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Number of partitions of `n` via the coin-change recurrence.
pub fn partition_count_dp(n: usize) -> u128 {
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

/// All partitions of `n` by plain recursion (order unspecified).
pub fn all_partitions(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn is_lattice(word: &[u32]) -> bool {
    let mut counts = vec![0u32; word.iter().max().map_or(0, |&m| m as usize) + 1];
    for &v in word {
        counts[v as usize] += 1;
        if v > 1 && counts[v as usize] > counts[v as usize - 1] {
            return false;
        }
    }
    true
}

/// Contents of all LR fillings of `outer / inner`, found by trying every
/// assignment of entries `1..=rows` to the cells.
pub fn brute_lr_types(outer: &Partition, inner: &Partition) -> BTreeSet<Partition> {
    let mut cells = Vec::new();
    for r in 0..outer.len() {
        for c in inner.part(r)..outer.part(r) {
            cells.push((r, c));
        }
    }
    let max_entry = outer.len() as u32;
    let mut values = vec![1u32; cells.len()];
    let mut out = BTreeSet::new();
    loop {
        let at = |r: usize, c: u32| -> Option<u32> {
            cells.iter().position(|&x| x == (r, c)).map(|i| values[i])
        };
        let ok = cells.iter().enumerate().all(|(i, &(r, c))| {
            let v = values[i];
            let row_ok = c == 0 || at(r, c - 1).is_none_or(|left| left <= v);
            let col_ok = r == 0 || at(r - 1, c).is_none_or(|up| up < v);
            row_ok && col_ok
        });
        if ok {
            let mut word = Vec::new();
            for r in 0..outer.len() {
                for c in (inner.part(r)..outer.part(r)).rev() {
                    word.push(at(r, c).unwrap());
                }
            }
            if is_lattice(&word) {
                let mut content = vec![0u32; max_entry as usize];
                for v in &word {
                    content[*v as usize - 1] += 1;
                }
                out.insert(Partition::from_unsorted(content));
            }
        }
        let mut i = 0;
        loop {
            if i == values.len() {
                return out;
            }
            if values[i] < max_entry {
                values[i] += 1;
                break;
            }
            values[i] = 1;
            i += 1;
        }
    }
}

/// `f(λ)` by averaging `χ^λ` over an explicit list of the group's elements.
pub fn explicit_f(prime: u64, n: u64, lambda: &Partition) -> BigUint {
    let elements = sylow_elements(prime, n).unwrap();
    let mut sum = BigInt::from(0);
    for g in &elements {
        sum += mn_character(lambda, &cycle_type(g)).unwrap();
    }
    let order = BigInt::from(elements.len());
    assert_eq!(&sum % &order, BigInt::from(0), "group average is not integral");
    (sum / order).try_into().unwrap()
}
