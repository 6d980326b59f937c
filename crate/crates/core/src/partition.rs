//! Partitions, compositions and pairs: diagrams, hooks, residues and the
//! two dominance orders.
//!
//! Partitions are stored with no trailing zeros; the empty sequence is the
//! unique partition of 0. Node coordinates `(i, j)` are 1-based, matching
//! the usual matrix convention for Young diagrams.

use crate::error::{Error, Result};
use crate::prime::OddPrime;
use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Enumeration cap: operations that enumerate all partitions of `n` refuse
/// larger inputs instead of silently truncating.
pub const DEFAULT_SIZE_CAP: u64 = 64;

/// A partition: weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Errors unless the parts
    /// are weakly decreasing and positive (after the strip).
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Row `i` (0-based), read as 0 beyond the last part.
    #[inline]
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the number being partitioned.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&x| x as u64).sum()
    }

    /// The conjugate partition λ′: column lengths of [λ].
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            parts.push(self.parts.iter().filter(|&&x| x >= j as u32).count() as u32);
        }
        Partition { parts }
    }

    /// True when [μ] ⊆ [λ].
    pub fn contains(&self, mu: &Partition) -> bool {
        (0..mu.len()).all(|i| self.part(i) >= mu.part(i))
    }

    /// Pointwise sum; the sum of two partitions is again a partition.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts = (0..len).map(|i| self.part(i) + other.part(i)).collect();
        Partition { parts }
    }

    /// k·λ, scaling every part.
    pub fn scale(&self, k: u32) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        Partition {
            parts: self.parts.iter().map(|&x| x * k).collect(),
        }
    }

    /// Pointwise difference. Errors when some part would go negative or the
    /// difference fails to be weakly decreasing.
    pub fn checked_sub(&self, other: &Partition) -> Result<Partition> {
        if other.len() > self.len() {
            return Err(Error::NotSubtractable(self.len()));
        }
        let mut parts = Vec::with_capacity(self.len());
        for i in 0..self.len() {
            let b = other.part(i);
            if b > self.parts[i] {
                return Err(Error::NotSubtractable(i));
            }
            parts.push(self.parts[i] - b);
        }
        Partition::new(parts)
    }

    /// (1/k)·λ. Errors unless k divides every part.
    pub fn divide(&self, k: u32) -> Result<Partition> {
        let mut parts = Vec::with_capacity(self.len());
        for &x in &self.parts {
            if x % k != 0 {
                return Err(Error::NotDivisible(x, k));
            }
            parts.push(x / k);
        }
        Ok(Partition { parts })
    }

    /// Concatenation α#β, re-sorted decreasing when the input overlaps.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts: Vec<u32> = self
            .parts
            .iter()
            .chain(other.parts.iter())
            .copied()
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Hook length of the node `(i, j)` (1-based).
    pub fn hook_length(&self, i: usize, j: usize) -> Result<u32> {
        if i == 0 || j == 0 || j as u32 > self.part(i - 1) {
            return Err(Error::NodeOutsideDiagram(i, j));
        }
        let arm = self.part(i - 1) - j as u32;
        let leg = self.conjugate().part(j - 1) - i as u32;
        Ok(arm + leg + 1)
    }

    /// All nodes of [λ] in row-major order, 1-based.
    pub fn nodes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 1..=len as usize {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// Removable nodes: `(i, λ_i)` with `λ_i > λ_{i+1}` (1-based).
    pub fn removable_nodes(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&i| self.parts[i] > self.part(i + 1))
            .map(|i| (i + 1, self.parts[i] as usize))
            .collect()
    }

    /// Addable nodes: positions whose addition leaves a partition (1-based).
    pub fn addable_nodes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let here = self.part(i);
            if i == 0 || self.part(i - 1) > here {
                out.push((i + 1, here as usize + 1));
            }
        }
        out
    }

    /// Adds a single node; the caller guarantees the result is a partition.
    pub fn with_node(&self, i: usize, j: usize) -> Result<Partition> {
        let mut parts = self.parts.clone();
        if i == parts.len() + 1 {
            parts.push(0);
        }
        if i == 0 || i > parts.len() || parts[i - 1] + 1 != j as u32 {
            return Err(Error::NodeOutsideDiagram(i, j));
        }
        parts[i - 1] += 1;
        Partition::new(parts)
    }

    /// The usual dominance order on partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        let mut a = 0u64;
        let mut b = 0u64;
        for k in 0..self.len().max(other.len()) {
            a += self.part(k) as u64;
            b += other.part(k) as u64;
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A composition: arbitrary sequence of non-negative integers. Zeros are
/// permitted; `normalize` drops them.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    #[inline]
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&x| x as u64).sum()
    }

    /// Drops zero parts.
    pub fn normalize(&self) -> Composition {
        Composition {
            parts: self.parts.iter().copied().filter(|&x| x > 0).collect(),
        }
    }

    /// α + β, padding the shorter with the tail of the longer.
    pub fn add(&self, other: &Composition) -> Composition {
        let len = self.len().max(other.len());
        Composition {
            parts: (0..len).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }

    /// k·α.
    pub fn scale(&self, k: u32) -> Composition {
        Composition {
            parts: self.parts.iter().map(|&x| x * k).collect(),
        }
    }

    /// α − β pointwise, or `NotSubtractable`.
    pub fn subtract(&self, other: &Composition) -> Result<Composition> {
        let len = self.len().max(other.len());
        let mut parts = Vec::with_capacity(len);
        for i in 0..len {
            let (a, b) = (self.part(i), other.part(i));
            if b > a {
                return Err(Error::NotSubtractable(i));
            }
            parts.push(a - b);
        }
        Ok(Composition { parts })
    }

    /// (1/k)·α, or `NotDivisible`.
    pub fn divide(&self, k: u32) -> Result<Composition> {
        let mut parts = Vec::with_capacity(self.len());
        for &x in &self.parts {
            if x % k != 0 {
                return Err(Error::NotDivisible(x, k));
            }
            parts.push(x / k);
        }
        Ok(Composition { parts })
    }

    /// Re-sorts into a partition.
    pub fn into_partition(self) -> Partition {
        let mut parts: Vec<u32> = self.parts.into_iter().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted positive parts form a partition")
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition {
            parts: p.parts().to_vec(),
        }
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// A pair (λ|ζ) of partitions with |λ| + |ζ| = n.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PartitionPair {
    pub left: Partition,
    pub right: Partition,
}

impl PartitionPair {
    pub fn new(left: Partition, right: Partition) -> Self {
        PartitionPair { left, right }
    }

    pub fn size(&self) -> u64 {
        self.left.size() + self.right.size()
    }

    /// The dominance order on pairs: (λ|ζ) ⊵ (α|β) iff for all k ≥ 1
    /// both partial-sum conditions hold:
    /// Σ_{i≤k} λ_i ≥ Σ_{i≤k} α_i and |λ| + Σ_{i≤k} ζ_i ≥ |α| + Σ_{i≤k} β_i.
    pub fn dominates(&self, other: &PartitionPair) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        let mut a = 0u64;
        let mut b = 0u64;
        for k in 0..self.left.len().max(other.left.len()) {
            a += self.left.part(k) as u64;
            b += other.left.part(k) as u64;
            if a < b {
                return Ok(false);
            }
        }
        let mut a = self.left.size();
        let mut b = other.left.size();
        for k in 0..self.right.len().max(other.right.len()) {
            a += self.right.part(k) as u64;
            b += other.right.part(k) as u64;
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.left, self.right)
    }
}

/// Residue of the node `(i, j)` modulo p (1-based coordinates).
pub fn p_residue(i: usize, j: usize, p: OddPrime) -> u32 {
    let p = p.get() as i64;
    (((j as i64 - i as i64) % p + p) % p) as u32
}

/// p-content: for each residue class, the number of nodes of [λ] in it.
pub fn p_content(lambda: &Partition, p: OddPrime) -> Vec<u64> {
    let mut content = vec![0u64; p.as_usize()];
    for (i, j) in lambda.nodes() {
        content[p_residue(i, j, p) as usize] += 1;
    }
    content
}

/// ν_p(m): the largest ℓ with p^ℓ | m. Errors on m = 0.
pub fn p_valuation(m: u64, p: OddPrime) -> Result<u32> {
    if m == 0 {
        return Err(Error::ZeroInput);
    }
    let p = p.get() as u64;
    let mut m = m;
    let mut v = 0;
    while m.is_multiple_of(p) {
        m /= p;
        v += 1;
    }
    Ok(v)
}

/// All partitions of `n`, in the order produced by descending-first-part
/// recursion. Errors beyond the cap.
pub fn partitions_of(n: u64) -> Result<Vec<Partition>> {
    partitions_of_with_cap(n, DEFAULT_SIZE_CAP)
}

pub fn partitions_of_with_cap(n: u64, cap: u64) -> Result<Vec<Partition>> {
    if n > cap {
        return Err(Error::SizeCapExceeded(n, cap));
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(remaining: u64, max: u64, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        let mut part = max.min(remaining);
        while part >= 1 {
            stack.push(part as u32);
            rec(remaining - part, part, stack, out);
            stack.pop();
            part -= 1;
        }
    }
    rec(n, n, &mut stack, &mut out);
    Ok(out)
}

/// All pairs (λ|ζ) with |λ| + |ζ| = n.
pub fn partition_pairs_of(n: u64) -> Result<Vec<PartitionPair>> {
    let mut out = Vec::new();
    for a in 0..=n {
        for left in partitions_of(a)? {
            for right in partitions_of(n - a)? {
                out.push(PartitionPair::new(left.clone(), right));
            }
        }
    }
    Ok(out)
}
