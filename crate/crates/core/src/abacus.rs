//! β-sets and abacus displays on p runners: the engine behind p-cores,
//! p-weights, p-quotients and runner manipulation.
//!
//! Position `(i-1)p + j` lies in row `i`, runner `j`. Position `k` is
//! *higher* than `ℓ` when `k < ℓ`. The display of λ with `s` beads is the
//! β-set `{λ_i - i + s : 1 ≤ i ≤ s}`.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::prime::OddPrime;
use std::collections::BTreeSet;
use std::fmt;

/// An abacus display: a finite set of occupied positions on p runners.
///
/// Equality is bead-set equality at equal p (and hence equal bead count).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Abacus {
    p: OddPrime,
    beads: BTreeSet<u32>,
}

impl Abacus {
    pub fn new(p: OddPrime, beads: BTreeSet<u32>) -> Self {
        Abacus { p, beads }
    }

    /// Display of λ on `s` beads; needs `s ≥ len(λ)`.
    pub fn from_partition(lambda: &Partition, p: OddPrime, s: usize) -> Result<Self> {
        if s < lambda.len() {
            return Err(Error::TooFewBeads(s, lambda.len()));
        }
        let beads = (1..=s)
            .map(|i| lambda.part(i - 1) + (s - i) as u32)
            .collect();
        Ok(Abacus { p, beads })
    }

    /// Canonical display: the smallest multiple of p that is ≥ len(λ).
    pub fn canonical(lambda: &Partition, p: OddPrime) -> Self {
        let s = canonical_bead_count(lambda, p);
        Abacus::from_partition(lambda, p, s).expect("canonical bead count suffices")
    }

    pub fn prime(&self) -> OddPrime {
        self.p
    }

    pub fn beads(&self) -> &BTreeSet<u32> {
        &self.beads
    }

    pub fn bead_count(&self) -> usize {
        self.beads.len()
    }

    pub fn occupied(&self, position: u32) -> bool {
        self.beads.contains(&position)
    }

    /// The partition this display represents: each bead contributes a part
    /// equal to the number of vacant positions higher than it.
    pub fn to_partition(&self) -> Partition {
        let mut parts: Vec<u32> = self
            .beads
            .iter()
            .enumerate()
            .map(|(rank, &b)| b - rank as u32)
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("β-set reads off a partition")
    }

    /// Bead count on each runner; the counts sum to `s`.
    pub fn runner_bead_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.p.as_usize()];
        for &b in &self.beads {
            counts[(b % self.p.get()) as usize] += 1;
        }
        counts
    }

    /// Row indices (0-based) occupied on the given runner, ascending.
    pub fn runner_rows(&self, runner: u32) -> Vec<u32> {
        self.beads
            .iter()
            .filter(|&&b| b % self.p.get() == runner)
            .map(|&b| b / self.p.get())
            .collect()
    }

    /// Pushes every bead as high up as possible along its runner.
    pub fn pushed_up(&self) -> Abacus {
        let p = self.p.get();
        let mut beads = BTreeSet::new();
        for runner in 0..p {
            let n = self.runner_rows(runner).len() as u32;
            for row in 0..n {
                beads.insert(row * p + runner);
            }
        }
        Abacus { p: self.p, beads }
    }

    /// Total bead moves made by `pushed_up`; this is the p-weight.
    pub fn push_up_moves(&self) -> u64 {
        let mut moves = 0u64;
        for runner in 0..self.p.get() {
            for (target, row) in self.runner_rows(runner).into_iter().enumerate() {
                moves += (row as u64) - target as u64;
            }
        }
        moves
    }

    /// Swaps runners ℓ-1 and ℓ, for 1 ≤ ℓ ≤ p-1: beads at ap+ℓ-1 and ap+ℓ
    /// trade places row by row.
    pub fn swap_runners(&self, l: u32) -> Result<Abacus> {
        let p = self.p.get();
        if l < 1 || l > p - 1 {
            return Err(Error::BadRunnerIndex(l, p - 1));
        }
        let beads = self
            .beads
            .iter()
            .map(|&b| match b % p {
                r if r == l - 1 => b + 1,
                r if r == l => b - 1,
                _ => b,
            })
            .collect();
        Ok(Abacus { p: self.p, beads })
    }

    /// Re-displays with s+p beads: every bead shifts down one row and row 1
    /// fills up. Represents the same partition.
    pub fn add_full_row(&self) -> Abacus {
        let p = self.p.get();
        let mut beads: BTreeSet<u32> = self.beads.iter().map(|&b| b + p).collect();
        beads.extend(0..p);
        Abacus { p: self.p, beads }
    }

    /// The p-quotient with respect to this display: component i is the
    /// partition read off runner i as a single-runner abacus.
    pub fn quotient(&self) -> Vec<Partition> {
        (0..self.p.get())
            .map(|runner| {
                let mut parts: Vec<u32> = self
                    .runner_rows(runner)
                    .into_iter()
                    .enumerate()
                    .map(|(rank, row)| row - rank as u32)
                    .collect();
                parts.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(parts).expect("runner reads off a partition")
            })
            .collect()
    }

    /// ASCII debug dump, one row per line, `0` marking vacancies.
    pub fn ascii(&self) -> String {
        let p = self.p.get();
        let rows = self.beads.iter().max().map_or(1, |&m| m / p + 1);
        let mut out = String::new();
        for row in 0..rows {
            for runner in 0..p {
                out.push(if self.occupied(row * p + runner) {
                    '*'
                } else {
                    '-'
                });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Abacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Abacus(p={}, beads={:?})", self.p, self.beads)
    }
}

/// Smallest multiple of p that is ≥ len(λ).
pub fn canonical_bead_count(lambda: &Partition, p: OddPrime) -> usize {
    let p = p.as_usize();
    lambda.len().div_ceil(p) * p
}

/// κ_p(λ): push all beads up on any display and read the partition back.
pub fn p_core(lambda: &Partition, p: OddPrime) -> Partition {
    Abacus::canonical(lambda, p).pushed_up().to_partition()
}

/// ω_p(λ) = (|λ| - |κ_p(λ)|)/p, the number of bead moves.
pub fn p_weight(lambda: &Partition, p: OddPrime) -> u64 {
    Abacus::canonical(lambda, p).push_up_moves()
}

/// The p-quotient read off the display with `s` beads.
pub fn p_quotient(lambda: &Partition, p: OddPrime, s: usize) -> Result<Vec<Partition>> {
    Ok(Abacus::from_partition(lambda, p, s)?.quotient())
}

/// The p-quotient of the canonical display.
pub fn p_quotient_canonical(lambda: &Partition, p: OddPrime) -> Vec<Partition> {
    Abacus::canonical(lambda, p).quotient()
}

/// True when λ is its own p-core.
pub fn is_p_core(lambda: &Partition, p: OddPrime) -> bool {
    p_core(lambda, p) == *lambda
}
