//! Shared test oracles, kept independent of the library paths they check:
//! rim-hook surgery on diagrams, the good-node recursion for the Mullineux
//! map, and an iterated-Pieri route to Littlewood-Richardson coefficients.
//
// Not every test binary uses every oracle.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spechtcalc::partition::{partitions_of, Partition};
use spechtcalc::OddPrime;
use std::collections::HashMap;

pub fn pt(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn p(p: u32) -> OddPrime {
    OddPrime::new(p).unwrap()
}

pub fn all_partitions_up_to(n: u64) -> Vec<Partition> {
    (0..=n).flat_map(|k| partitions_of(k).unwrap()).collect()
}

/// All labels (λ, μ) with |λ| + p|μ| = n.
pub fn signed_label_shapes(n: u64, prime: OddPrime) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    let pv = prime.get() as u64;
    for b in 0..=n / pv {
        for mu in partitions_of(b).unwrap() {
            for lambda in partitions_of(n - pv * b).unwrap() {
                out.push((lambda, mu.clone()));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------
// rim-hook surgery
// ---------------------------------------------------------------------

pub fn hook_length(lambda: &Partition, i: usize, j: usize) -> u32 {
    let conj = lambda.conjugate();
    lambda.part(i - 1) - j as u32 + conj.part(j - 1) - i as u32 + 1
}

/// Removes the rim hook cornered at node (i, j), 1-based.
pub fn remove_rim_hook(lambda: &Partition, i: usize, j: usize) -> Partition {
    let conj = lambda.conjugate();
    let last_row = conj.part(j - 1) as usize;
    let mut parts = Vec::new();
    for x in 1..=lambda.len() {
        let value = if x < i || x > last_row {
            lambda.part(x - 1)
        } else if x < last_row {
            lambda.part(x) - 1
        } else {
            j as u32 - 1
        };
        parts.push(value);
    }
    Partition::new(parts).expect("rim hook removal keeps a partition")
}

/// Nodes whose hook length is exactly p.
pub fn p_hook_corners(lambda: &Partition, prime: OddPrime) -> Vec<(usize, usize)> {
    lambda
        .nodes()
        .into_iter()
        .filter(|&(i, j)| hook_length(lambda, i, j) == prime.get())
        .collect()
}

/// Strips rim p-hooks in a random order until none is left.
pub fn random_core(lambda: &Partition, prime: OddPrime, seed: u64) -> Partition {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = lambda.clone();
    loop {
        let corners = p_hook_corners(&current, prime);
        match corners.choose(&mut rng) {
            None => return current,
            Some(&(i, j)) => current = remove_rim_hook(&current, i, j),
        }
    }
}

/// Strips every removable horizontal rim p-hook (leg 0), first match first.
pub fn strip_all_horizontal(lambda: &Partition, prime: OddPrime) -> Partition {
    let mut current = lambda.clone();
    'outer: loop {
        let conj = current.conjugate();
        for (i, j) in current.nodes() {
            if hook_length(&current, i, j) == prime.get() && conj.part(j - 1) as usize == i {
                current = remove_rim_hook(&current, i, j);
                continue 'outer;
            }
        }
        return current;
    }
}

/// Strips every removable vertical rim p-hook (arm 0).
pub fn strip_all_vertical(lambda: &Partition, prime: OddPrime) -> Partition {
    strip_all_horizontal(&lambda.conjugate(), prime).conjugate()
}

/// The Φ recipe read off the diagram directly: strip all vertical rim
/// p-hooks column by column from the rightmost column leftwards, counting
/// the hooks per column.
pub fn phi_by_column_stripping(
    lambda: &Partition,
    prime: OddPrime,
) -> spechtcalc::partition::PartitionPair {
    let mut current = lambda.clone();
    let columns = lambda.part(0) as usize;
    let mut counts = vec![0u32; columns];
    for j in (1..=columns).rev() {
        'strip: loop {
            let conj = current.conjugate();
            for i in 1..=conj.part(j - 1) as usize {
                // vertical hook cornered at (i, j): arm 0, leg p-1
                if current.part(i - 1) as usize == j && hook_length(&current, i, j) == prime.get() {
                    current = remove_rim_hook(&current, i, j);
                    counts[j - 1] += 1;
                    continue 'strip;
                }
            }
            break;
        }
    }
    let scaled: Vec<u32> = counts.iter().map(|&b| b * prime.get()).collect();
    spechtcalc::partition::PartitionPair::new(
        current,
        Partition::new(scaled).expect("column counts decrease weakly"),
    )
}

// ---------------------------------------------------------------------
// good-node description of the Mullineux map
// ---------------------------------------------------------------------

fn residue(i: usize, j: usize, prime: OddPrime) -> u32 {
    let p = prime.get() as i64;
    (((j as i64 - i as i64) % p + p) % p) as u32
}

/// Surviving removable (-) and addable (+) nodes of one residue after the
/// bottom-to-top signature reduction cancelling "-+" pairs.
type Nodes = Vec<(usize, usize)>;

fn reduced_signature(lambda: &Partition, x: u32, prime: OddPrime) -> (Nodes, Nodes) {
    let mut word: Vec<((usize, usize), bool)> = Vec::new();
    for (i, j) in lambda.removable_nodes() {
        if residue(i, j, prime) == x {
            word.push(((i, j), false));
        }
    }
    for (i, j) in lambda.addable_nodes() {
        if residue(i, j, prime) == x {
            word.push(((i, j), true));
        }
    }
    word.sort_by_key(|entry| std::cmp::Reverse(entry.0 .0));
    let mut minus_stack: Vec<(usize, usize)> = Vec::new();
    let mut plus_survivors: Vec<(usize, usize)> = Vec::new();
    for (node, is_plus) in word {
        if is_plus {
            if minus_stack.pop().is_none() {
                plus_survivors.push(node);
            }
        } else {
            minus_stack.push(node);
        }
    }
    (minus_stack, plus_survivors)
}

fn remove_node(lambda: &Partition, i: usize) -> Partition {
    let mut parts: Vec<u32> = lambda.parts().to_vec();
    parts[i - 1] -= 1;
    Partition::new(parts).expect("removing a removable node keeps a partition")
}

/// M on p-regular partitions via the good-node recursion: removing the good
/// x-node commutes with M up to negating the residue.
pub fn mullineux_by_good_nodes(lambda: &Partition, prime: OddPrime) -> Partition {
    if lambda.is_empty() {
        return Partition::empty();
    }
    for x in 0..prime.get() {
        let (minus, _) = reduced_signature(lambda, x, prime);
        if let Some(&(i, _)) = minus.first() {
            let inner = mullineux_by_good_nodes(&remove_node(lambda, i), prime);
            let mirrored = (prime.get() - x) % prime.get();
            let (_, plus) = reduced_signature(&inner, mirrored, prime);
            let &(i, j) = plus.last().expect("cogood node exists");
            return inner.with_node(i, j).expect("cogood node is addable");
        }
    }
    unreachable!("a non-empty p-regular partition has a good node");
}

// ---------------------------------------------------------------------
// iterated-Pieri route to LR coefficients
// ---------------------------------------------------------------------

/// All λ ⊇ ν with λ/ν a horizontal strip of k nodes.
pub fn horizontal_strip_extensions(nu: &Partition, k: u64) -> Vec<Partition> {
    let rows = nu.len() + 1;
    let mut out = Vec::new();
    let mut parts: Vec<u32> = Vec::new();
    fn rec(
        nu: &Partition,
        rows: usize,
        i: usize,
        left: u64,
        parts: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if i == rows {
            if left == 0 {
                out.push(Partition::new(parts.clone()).expect("rows are decreasing"));
            }
            return;
        }
        let lo = nu.part(i);
        // no two added nodes share a column: λ_i ≤ ν_{i-1}
        let strip_cap = if i == 0 { u32::MAX } else { nu.part(i - 1) };
        let shape_cap = if i == 0 { u32::MAX } else { parts[i - 1] };
        let hi = strip_cap
            .min(shape_cap)
            .min(lo.saturating_add(left.min(u32::MAX as u64) as u32));
        for v in lo..=hi {
            parts.push(v);
            rec(nu, rows, i + 1, left - (v - lo) as u64, parts, out);
            parts.pop();
        }
    }
    rec(nu, rows, 0, k, &mut parts, &mut out);
    out
}

/// Number of chains γ = ν^0 ⊆ … ⊆ ν^r = λ adding horizontal strips of the
/// given sizes in order.
pub fn strip_chain_count(gamma: &Partition, sizes: &[u32], lambda: &Partition) -> u64 {
    let mut state: HashMap<Partition, u64> = HashMap::new();
    state.insert(gamma.clone(), 1);
    for &k in sizes {
        let mut next: HashMap<Partition, u64> = HashMap::new();
        for (nu, count) in state {
            for ext in horizontal_strip_extensions(&nu, k as u64) {
                if lambda.contains(&ext) {
                    *next.entry(ext).or_insert(0) += count;
                }
            }
        }
        state = next;
    }
    state.get(lambda).copied().unwrap_or(0)
}

/// c^λ_{γ,ξ} by expanding s_γ·h_ξ over Schur functions and inverting the
/// unitriangular Kostka matrix along a linear extension of dominance.
pub fn lr_via_pieri(gamma: &Partition, xi: &Partition, lambda: &Partition) -> u64 {
    if gamma.size() + xi.size() != lambda.size() || !lambda.contains(gamma) {
        return 0;
    }
    let m = xi.size();
    let mut shapes = partitions_of(m).unwrap();
    shapes.sort_by(|a, b| b.parts().cmp(a.parts()));
    let mut coefficients: HashMap<Partition, i64> = HashMap::new();
    for nu in &shapes {
        let target = strip_chain_count(gamma, nu.parts(), lambda) as i64;
        let mut acc = target;
        for (known, &value) in &coefficients {
            let kostka = strip_chain_count(&Partition::empty(), nu.parts(), known) as i64;
            acc -= value * kostka;
        }
        coefficients.insert(nu.clone(), acc);
        if nu == xi {
            break;
        }
    }
    let c = coefficients[xi];
    assert!(c >= 0, "LR coefficients are non-negative");
    c as u64
}
