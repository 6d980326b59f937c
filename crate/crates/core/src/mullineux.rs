//! The Mullineux map on p-regular partitions (M) and on p-restricted
//! partitions (m), together with p-regularization.
//!
//! M is computed through Mullineux symbols: repeatedly strip the p-rim,
//! recording per stage the pair (nodes removed, rows met); the image symbol
//! keeps the node counts and replaces each row count r by a - r + ε, with
//! ε = 1 exactly when p does not divide a. The image partition is rebuilt
//! from its symbol bottom-up. The restricted-side map is m(λ) = (M(λ'))'.

use crate::error::{Error, Result};
use crate::padic::{is_p_regular, is_p_restricted};
use crate::partition::Partition;
use crate::prime::OddPrime;

/// One stage of a Mullineux symbol: `a` nodes stripped from a partition
/// meeting `r` rows.
pub type SymbolColumn = (u32, u32);

/// Removes the p-rim of μ. Returns the leftover partition and the number of
/// nodes removed.
///
/// The p-rim is traversed from the top-right end of the rim; whenever a run
/// of p consecutive rim nodes completes, the traversal skips to the first
/// rim node of the next row. Row i holds the rim nodes in columns
/// max(μ_{i+1},1)..μ_i, so the nodes taken from row i number
/// min(μ_i - max(μ_{i+1},1) + 1, p - c) with c the run length carried in.
pub fn remove_p_rim(mu: &Partition, p: OddPrime) -> (Partition, u32) {
    let p = p.get();
    let parts = mu.parts();
    let mut remaining = Vec::with_capacity(parts.len());
    let mut removed = 0u32;
    let mut run = 0u32;
    for i in 0..parts.len() {
        let below = if i + 1 < parts.len() { parts[i + 1] } else { 0 };
        let rim_here = parts[i] - below.max(1) + 1;
        let take = rim_here.min(p - run);
        removed += take;
        run = (run + take) % p;
        remaining.push(parts[i] - take);
    }
    (
        Partition::new(remaining).expect("p-rim removal leaves a partition"),
        removed,
    )
}

/// The Mullineux symbol of a p-regular partition: columns (a_i, r_i).
pub fn mullineux_symbol(lambda: &Partition, p: OddPrime) -> Result<Vec<SymbolColumn>> {
    if !is_p_regular(lambda, p) {
        return Err(Error::NotRegular(p.get()));
    }
    let mut columns = Vec::new();
    let mut current = lambda.clone();
    while !current.is_empty() {
        let rows = current.len() as u32;
        let (rest, removed) = remove_p_rim(&current, p);
        columns.push((removed, rows));
        current = rest;
    }
    Ok(columns)
}

/// Inverse of one `remove_p_rim` stage: the unique partition with exactly
/// `rows` rows whose p-rim has `nodes` nodes and strips down to `inner`.
///
/// The search walks the rows top-down. Entering row j with run length c,
/// either the run completes inside the row (d_j = p - c, which forces
/// μ_{j+1} ≤ ν_j + 1) or the row runs out of rim nodes first (d_j < p - c,
/// which forces μ_{j+1} = ν_j + 1, reading μ_{r+1} = 0). Solutions are
/// verified by re-running the forward removal.
fn add_p_rim(inner: &Partition, nodes: u32, rows: u32, p: OddPrime) -> Option<Partition> {
    let rows = rows as usize;
    if rows == 0 || inner.len() > rows || nodes == 0 {
        return None;
    }
    let pv = p.get();

    #[derive(Clone, Copy)]
    enum Constraint {
        AtMost(u32),
        Exactly(u32),
    }

    struct Search<'a> {
        inner: &'a Partition,
        p: OddPrime,
        pv: u32,
        rows: usize,
        nodes: u32,
        taken: Vec<u32>,
    }

    impl Search<'_> {
        fn run(
            &mut self,
            j: usize,
            carry: u32,
            used: u32,
            constraint: Constraint,
        ) -> Option<Partition> {
            if j == self.rows {
                if used != self.nodes {
                    return None;
                }
                if let Constraint::Exactly(v) = constraint {
                    // the pinned row below the diagram is empty, forcing v = 1
                    if v != 1 {
                        return None;
                    }
                }
                let parts: Vec<u32> = (0..self.rows)
                    .map(|i| self.inner.part(i) + self.taken[i])
                    .collect();
                let candidate = Partition::new(parts).ok()?;
                let (stripped, removed) = remove_p_rim(&candidate, self.p);
                if candidate.len() == self.rows && removed == self.nodes && stripped == *self.inner
                {
                    return Some(candidate);
                }
                return None;
            }
            let rows_left = (self.rows - j - 1) as u32;
            let above = if j == 0 {
                u32::MAX
            } else {
                self.inner.part(j - 1) + self.taken[j - 1]
            };
            let try_d = |search: &mut Self, d: u32, next_carry: u32| -> Option<Partition> {
                if d == 0 || used + d + rows_left > search.nodes {
                    return None;
                }
                if used + d + rows_left * search.pv < search.nodes {
                    return None;
                }
                let mu_j = search.inner.part(j) + d;
                if mu_j > above {
                    return None;
                }
                match constraint {
                    Constraint::AtMost(v) if mu_j > v => return None,
                    Constraint::Exactly(v) if mu_j != v => return None,
                    _ => {}
                }
                search.taken[j] = d;
                let next = if next_carry == 0 {
                    Constraint::AtMost(search.inner.part(j) + 1)
                } else {
                    Constraint::Exactly(search.inner.part(j) + 1)
                };
                let found = search.run(j + 1, next_carry, used + d, next);
                search.taken[j] = 0;
                found
            };
            // run completes inside the row
            if let Some(hit) = try_d(self, self.pv - carry, 0) {
                return Some(hit);
            }
            // row exhausted before the run completes
            for d in 1..self.pv - carry {
                if let Some(hit) = try_d(self, d, carry + d) {
                    return Some(hit);
                }
            }
            None
        }
    }

    let mut search = Search {
        inner,
        p,
        pv,
        rows,
        nodes,
        taken: vec![0; rows],
    };
    search.run(0, 0, 0, Constraint::AtMost(u32::MAX))
}

/// Rebuilds a partition from a Mullineux symbol, innermost column first.
fn partition_from_symbol(columns: &[SymbolColumn], p: OddPrime) -> Partition {
    let mut current = Partition::empty();
    for &(nodes, rows) in columns.iter().rev() {
        current = add_p_rim(&current, nodes, rows, p)
            .expect("a Mullineux image symbol reconstructs to a partition");
    }
    current
}

/// M: the Mullineux map on p-regular partitions.
pub fn mullineux_regular(lambda: &Partition, p: OddPrime) -> Result<Partition> {
    let symbol = mullineux_symbol(lambda, p)?;
    let image: Vec<SymbolColumn> = symbol
        .into_iter()
        .map(|(a, r)| {
            let eps = u32::from(a % p.get() != 0);
            (a, a - r + eps)
        })
        .collect();
    Ok(partition_from_symbol(&image, p))
}

/// m: the Mullineux map on p-restricted partitions, m(λ) = (M(λ'))'.
pub fn mullineux_restricted(lambda: &Partition, p: OddPrime) -> Result<Partition> {
    if !is_p_restricted(lambda, p) {
        return Err(Error::NotRestricted(p.get()));
    }
    Ok(mullineux_regular(&lambda.conjugate(), p)?.conjugate())
}

/// p-regularization by the ladder algorithm: nodes slide up ladders of
/// slope (1, p-1) as far as they go.
pub fn regularize(alpha: &Partition, p: OddPrime) -> Partition {
    let step = p.get() as usize - 1;
    if alpha.is_empty() {
        return Partition::empty();
    }
    // ladder number of (i, j) is i + (p-1)(j-1); 1-based coordinates
    let max_ladder = alpha.len() + step * (alpha.part(0) as usize - 1);
    let mut on_ladder = vec![0usize; max_ladder + 1];
    for (i, j) in alpha.nodes() {
        on_ladder[i + step * (j - 1)] += 1;
    }
    let mut row_lengths = vec![0u32; max_ladder];
    for (ladder, &count) in on_ladder.iter().enumerate() {
        if count == 0 {
            continue;
        }
        // positions top-down: j = j_max, j_max-1, …; i = ladder - (p-1)(j-1)
        let j_max = (ladder - 1) / step + 1;
        for k in 0..count {
            let j = j_max - k;
            let i = ladder - step * (j - 1);
            row_lengths[i - 1] = row_lengths[i - 1].max(j as u32);
        }
    }
    Partition::new(row_lengths.into_iter().take_while(|&len| len > 0).collect())
        .expect("regularization yields a partition")
}
