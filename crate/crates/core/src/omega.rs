//! The part-shrinking operator `Ω_q : P(qn) → P((q-1)n)`.
//!
//! Every part is scaled by `(q-1)/q` with rounding decided by the q-residues:
//! parts `k q + x` (with `0 < x < q`) lose `k` or `k + 1`, and exactly
//! `ζ = Σx / q` of them lose the extra one. Those are the first `ζ` under the
//! order that ranks larger residues first and, among equal residues, later
//! (smaller) parts first. Multiples `r q` become `r (q-1)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A part of `λ` not divisible by `q`, written `k q + x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ResiduePart {
    pub k: u32,
    pub x: u32,
}

impl ResiduePart {
    pub fn value(&self, q: u32) -> u32 {
        self.k * q + self.x
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueDecomposition {
    pub q: u32,
    /// Non-divisible parts in weakly decreasing order.
    pub mu_parts: Vec<ResiduePart>,
    /// `r` for each divisible part `r q`, weakly decreasing.
    pub nu_parts: Vec<u32>,
    pub zeta: u32,
}

impl ResidueDecomposition {
    /// Reassembles the decomposed partition.
    pub fn reassemble(&self) -> Partition {
        let parts = self
            .mu_parts
            .iter()
            .map(|m| m.value(self.q))
            .chain(self.nu_parts.iter().map(|r| r * self.q))
            .collect();
        Partition::from_unsorted(parts)
    }

    /// Indices into `mu_parts` listed from the top of the order downwards:
    /// `i` precedes `j` iff `x_i > x_j`, or `x_i = x_j` and `i > j`.
    pub fn succ_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.mu_parts.len()).collect();
        order.sort_by(|&i, &j| {
            (self.mu_parts[j].x, j).cmp(&(self.mu_parts[i].x, i))
        });
        order
    }
}

fn check(lambda: &Partition, q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!("q must be at least 2, got {q}")));
    }
    if !lambda.size().is_multiple_of(u64::from(q)) {
        return Err(Error::NotDivisible {
            q: q.into(),
            size: lambda.size(),
        });
    }
    Ok(())
}

pub fn residue_decompose(lambda: &Partition, q: u32) -> Result<ResidueDecomposition> {
    check(lambda, q)?;
    let mut mu_parts = Vec::new();
    let mut nu_parts = Vec::new();
    for &part in lambda.parts() {
        if part % q == 0 {
            nu_parts.push(part / q);
        } else {
            mu_parts.push(ResiduePart {
                k: part / q,
                x: part % q,
            });
        }
    }
    let residue_sum: u64 = mu_parts.iter().map(|m| u64::from(m.x)).sum();
    // |λ| ≡ Σx (mod q), so this division is exact
    debug_assert_eq!(residue_sum % u64::from(q), 0);
    Ok(ResidueDecomposition {
        q,
        mu_parts,
        nu_parts,
        zeta: (residue_sum / u64::from(q)) as u32,
    })
}

/// `Ω_q(λ)`, a partition of `(q-1)|λ|/q`.
pub fn omega(lambda: &Partition, q: u32) -> Result<Partition> {
    Ok(omega_from(&residue_decompose(lambda, q)?))
}

pub fn omega_from(dec: &ResidueDecomposition) -> Partition {
    let zeta = dec.zeta as usize;
    let mut parts: Vec<u32> = dec
        .succ_order()
        .into_iter()
        .enumerate()
        .map(|(rank, i)| {
            let m = dec.mu_parts[i];
            let cut = if rank < zeta { m.k + 1 } else { m.k };
            m.value(dec.q) - cut
        })
        .collect();
    parts.extend(dec.nu_parts.iter().map(|r| r * (dec.q - 1)));
    Partition::from_unsorted(parts)
}
