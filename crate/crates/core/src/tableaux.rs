//! The signed Young Rule calculus: signed semistandard tableaux, Kostka
//! numbers, Littlewood-Richardson coefficients, and the counting identity
//! tying them together.
//!
//! A semistandard λ-tableau of type (α|β) fills [λ] with α_i entries i and
//! β_j entries j′ so that the unprimed entries occupy a subpartition shape
//! as an ordinary semistandard tableau (rows weak, columns strict) and the
//! primed entries fill the complementary skew shape conjugate-semistandard
//! (columns weak, rows strict).

use crate::error::{Error, Result};
use crate::partition::{partitions_of_with_cap, Partition, PartitionPair, DEFAULT_SIZE_CAP};
use num_bigint::BigUint;
use serde::Serialize;
use std::fmt;

/// A tableau entry: k or k′.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Entry {
    Plain(u32),
    Primed(u32),
}

impl Entry {
    /// Total order used only for deterministic output: 1 < 1′ < 2 < 2′ < ….
    fn order_key(self) -> u64 {
        match self {
            Entry::Plain(k) => 2 * k as u64,
            Entry::Primed(k) => 2 * k as u64 + 1,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Plain(k) => write!(f, "{k}"),
            Entry::Primed(k) => write!(f, "{k}'"),
        }
    }
}

impl Serialize for Entry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A filling of [λ] by unprimed and primed entries.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SignedTableau {
    shape: Partition,
    rows: Vec<Vec<Entry>>,
}

impl SignedTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    /// Node-to-entry list in row-major order, 1-based coordinates.
    pub fn node_entries(&self) -> Vec<((usize, usize), Entry)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                out.push(((i + 1, j + 1), e));
            }
        }
        out
    }

    fn order_key(&self) -> Vec<u64> {
        self.rows
            .iter()
            .flat_map(|row| row.iter().map(|e| e.order_key()))
            .collect()
    }
}

impl fmt::Display for SignedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Subpartitions of λ of the given size.
fn subpartitions_of_size(lambda: &Partition, size: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    fn rec(
        lambda: &Partition,
        row: usize,
        remaining: u64,
        stack: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::new(stack.clone()).expect("weakly decreasing by construction"));
            return;
        }
        if row >= lambda.len() {
            return;
        }
        let above = if row == 0 { u32::MAX } else { stack[row - 1] };
        let max_here = lambda
            .part(row)
            .min(above)
            .min(remaining.min(u32::MAX as u64) as u32);
        for part in (1..=max_here).rev() {
            stack.push(part);
            rec(lambda, row + 1, remaining - part as u64, stack, out);
            stack.pop();
        }
    }
    if size == 0 {
        return vec![Partition::empty()];
    }
    rec(lambda, 0, size, &mut stack, &mut out);
    out
}

/// Ordinary semistandard fillings of shape μ with content α, as row vectors.
fn ssyt_fillings(mu: &Partition, alpha: &Partition) -> Vec<Vec<Vec<u32>>> {
    let values = alpha.len();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); mu.len()];
    let mut used = vec![0u32; values];
    fn rec(
        mu: &Partition,
        alpha: &Partition,
        i: usize,
        j: usize,
        rows: &mut Vec<Vec<u32>>,
        used: &mut Vec<u32>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if i == mu.len() {
            out.push(rows.clone());
            return;
        }
        let (ni, nj) = if j + 1 < mu.part(i) as usize {
            (i, j + 1)
        } else {
            (i + 1, 0)
        };
        let min_row = if j > 0 { rows[i][j - 1] } else { 1 };
        let min_col = if i > 0 && j < mu.part(i - 1) as usize {
            rows[i - 1][j] + 1
        } else {
            1
        };
        for v in min_row.max(min_col)..=alpha.len() as u32 {
            if used[v as usize - 1] == alpha.part(v as usize - 1) {
                continue;
            }
            used[v as usize - 1] += 1;
            rows[i].push(v);
            rec(mu, alpha, ni, nj, rows, used, out);
            rows[i].pop();
            used[v as usize - 1] -= 1;
        }
    }
    if mu.is_empty() {
        return vec![vec![]];
    }
    rec(mu, alpha, 0, 0, &mut rows, &mut used, &mut out);
    out
}

/// Conjugate-semistandard fillings of the skew λ/μ with content β: weakly
/// increasing down columns, strictly increasing along rows. Returned as
/// values for the skew cells of each row, left to right.
fn conjugate_skew_fillings(
    lambda: &Partition,
    mu: &Partition,
    beta: &Partition,
) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); lambda.len()];
    let mut used = vec![0u32; beta.len()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        lambda: &Partition,
        mu: &Partition,
        beta: &Partition,
        i: usize,
        j: usize,
        rows: &mut Vec<Vec<u32>>,
        used: &mut Vec<u32>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if i == lambda.len() {
            out.push(rows.clone());
            return;
        }
        if j >= lambda.part(i) as usize {
            rec(
                lambda,
                mu,
                beta,
                i + 1,
                mu.part(i + 1) as usize,
                rows,
                used,
                out,
            );
            return;
        }
        let skew_offset = mu.part(i) as usize;
        let min_row = if j > skew_offset {
            rows[i][j - skew_offset - 1] + 1
        } else {
            1
        };
        let above_in_skew =
            i > 0 && j < lambda.part(i - 1) as usize && j >= mu.part(i - 1) as usize;
        let min_col = if above_in_skew {
            rows[i - 1][j - mu.part(i - 1) as usize]
        } else {
            1
        };
        for v in min_row.max(min_col)..=beta.len() as u32 {
            if used[v as usize - 1] == beta.part(v as usize - 1) {
                continue;
            }
            used[v as usize - 1] += 1;
            rows[i].push(v);
            rec(lambda, mu, beta, i, j + 1, rows, used, out);
            rows[i].pop();
            used[v as usize - 1] -= 1;
        }
    }
    if lambda.is_empty() {
        return vec![vec![]];
    }
    rec(
        lambda,
        mu,
        beta,
        0,
        mu.part(0) as usize,
        &mut rows,
        &mut used,
        &mut out,
    );
    out
}

/// All semistandard λ-tableaux of type (α|β), in the deterministic
/// row-major order with unprimed sorting before primed at equal value.
pub fn enumerate_signed(lambda: &Partition, kind: &PartitionPair) -> Result<Vec<SignedTableau>> {
    if lambda.size() != kind.size() {
        return Err(Error::SizeMismatch(lambda.size(), kind.size()));
    }
    let alpha = &kind.left;
    let beta = &kind.right;
    let mut tableaux = Vec::new();
    for mu in subpartitions_of_size(lambda, alpha.size()) {
        let inner = ssyt_fillings(&mu, alpha);
        if inner.is_empty() {
            continue;
        }
        let outer = conjugate_skew_fillings(lambda, &mu, beta);
        for plain in &inner {
            for primed in &outer {
                let rows: Vec<Vec<Entry>> = (0..lambda.len())
                    .map(|i| {
                        let mut row: Vec<Entry> = Vec::with_capacity(lambda.part(i) as usize);
                        if i < plain.len() {
                            row.extend(plain[i].iter().map(|&v| Entry::Plain(v)));
                        }
                        row.extend(primed[i].iter().map(|&v| Entry::Primed(v)));
                        row
                    })
                    .collect();
                tableaux.push(SignedTableau {
                    shape: lambda.clone(),
                    rows,
                });
            }
        }
    }
    tableaux.sort_by_key(|t| t.order_key());
    Ok(tableaux)
}

/// The number of semistandard λ-tableaux of type (α|β).
pub fn count_signed(lambda: &Partition, kind: &PartitionPair) -> Result<u64> {
    Ok(enumerate_signed(lambda, kind)?.len() as u64)
}

/// Kostka number y_{α,λ}: semistandard λ-tableaux of type α.
pub fn kostka(lambda: &Partition, alpha: &Partition) -> Result<u64> {
    count_signed(
        lambda,
        &PartitionPair::new(alpha.clone(), Partition::empty()),
    )
}

/// Littlewood-Richardson coefficient c^λ_{γ,ξ}: semistandard skew tableaux
/// of shape λ/γ and content ξ whose reverse reading word is a lattice word.
/// Incompatible shapes give 0.
pub fn lr_coefficient(gamma: &Partition, xi: &Partition, lambda: &Partition) -> u64 {
    if gamma.size() + xi.size() != lambda.size() || !lambda.contains(gamma) {
        return 0;
    }
    if xi.is_empty() {
        return 1;
    }
    // cells in reverse reading order: rows top to bottom, right to left
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for i in 0..lambda.len() {
        for j in (gamma.part(i) as usize..lambda.part(i) as usize).rev() {
            cells.push((i, j));
        }
    }
    let values = xi.len();
    let mut grid: Vec<Vec<u32>> = (0..lambda.len())
        .map(|i| vec![0; lambda.part(i) as usize])
        .collect();
    let mut counts = vec![0u32; values];
    fn rec(
        cells: &[(usize, usize)],
        k: usize,
        xi: &Partition,
        gamma: &Partition,
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        total: &mut u64,
    ) {
        if k == cells.len() {
            *total += 1;
            return;
        }
        let (i, j) = cells[k];
        // row weak increase: bounded by the right neighbour, filled earlier
        let right = if j + 1 < grid[i].len() {
            grid[i][j + 1]
        } else {
            xi.len() as u32
        };
        // column strict increase under the cell above when it is in the skew
        let above = if i > 0 && j >= gamma.part(i - 1) as usize && j < grid[i - 1].len() {
            grid[i - 1][j]
        } else {
            0
        };
        for v in above + 1..=right {
            let idx = v as usize - 1;
            if counts[idx] == xi.part(idx) {
                continue;
            }
            // lattice condition on the prefix
            if v > 1 && counts[idx] + 1 > counts[idx - 1] {
                continue;
            }
            counts[idx] += 1;
            grid[i][j] = v;
            rec(cells, k + 1, xi, gamma, grid, counts, total);
            grid[i][j] = 0;
            counts[idx] -= 1;
        }
    }
    let mut total = 0u64;
    rec(&cells, 0, xi, gamma, &mut grid, &mut counts, &mut total);
    total
}

/// dim S^λ by the hook length formula, n!/∏h.
pub fn specht_dimension(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let mut numerator = BigUint::from(1u32);
    for k in 1..=n {
        numerator *= BigUint::from(k);
    }
    let mut denominator = BigUint::from(1u32);
    for (i, j) in lambda.nodes() {
        denominator *= BigUint::from(
            lambda
                .hook_length(i, j)
                .expect("node taken from the diagram"),
        );
    }
    numerator / denominator
}

/// The right-hand side of the counting identity:
/// Σ_{γ⊢|α|, ξ⊢|β|} y_{α,γ}·y_{β,ξ′}·c^λ_{γ,ξ}.
pub fn counting_identity_rhs(lambda: &Partition, kind: &PartitionPair) -> Result<u64> {
    if lambda.size() != kind.size() {
        return Err(Error::SizeMismatch(lambda.size(), kind.size()));
    }
    let alpha = &kind.left;
    let beta = &kind.right;
    let mut total = 0u64;
    for gamma in partitions_of_with_cap(alpha.size(), DEFAULT_SIZE_CAP)? {
        let y_alpha = kostka(&gamma, alpha)?;
        if y_alpha == 0 {
            continue;
        }
        for xi in partitions_of_with_cap(beta.size(), DEFAULT_SIZE_CAP)? {
            let y_beta = kostka(&xi.conjugate(), beta)?;
            if y_beta == 0 {
                continue;
            }
            total += y_alpha * y_beta * lr_coefficient(&gamma, &xi, lambda);
        }
    }
    Ok(total)
}
