//! JM-partitions (two independent characterizations), the Φ map, Rouquier
//! blocks, adjacent pairs, and chains into Rouquier blocks.

use crate::abacus::{canonical_bead_count, is_p_core, p_core, p_weight, Abacus};
use crate::error::{Error, Result};
use crate::padic::{expand, is_p_regular, is_p_restricted};
use crate::partition::{p_residue, Partition, PartitionPair};
use crate::prime::OddPrime;
use serde::Serialize;
use std::collections::{HashMap, HashSet, VecDeque};

/// Hook-length characterization: λ is a JM-partition iff no nodes
/// (a,b), (a,y), (x,b) of [λ] satisfy ν_p(h(a,b)) > 0 together with
/// ν_p(h(x,b)) ≠ ν_p(h(a,b)) ≠ ν_p(h(a,y)).
pub fn is_jm_hook(lambda: &Partition, p: OddPrime) -> bool {
    let rows = lambda.len();
    if rows == 0 {
        return true;
    }
    let conj = lambda.conjugate();
    let pv = p.get() as u64;
    let valuation = |i: usize, j: usize| -> u32 {
        let mut h = (lambda.part(i) - j as u32 - 1 + conj.part(j) - i as u32) as u64;
        let mut v = 0;
        while h.is_multiple_of(pv) {
            h /= pv;
            v += 1;
        }
        v
    };
    // vals[i][j] with 0-based coordinates
    let vals: Vec<Vec<u32>> = (0..rows)
        .map(|i| {
            (0..lambda.part(i) as usize)
                .map(|j| valuation(i, j))
                .collect()
        })
        .collect();
    for i in 0..rows {
        for j in 0..lambda.part(i) as usize {
            let v0 = vals[i][j];
            if v0 == 0 {
                continue;
            }
            let row_differs = (0..lambda.part(i) as usize).any(|y| vals[i][y] != v0);
            if !row_differs {
                continue;
            }
            let col_differs = (0..conj.part(j) as usize).any(|x| vals[x][j] != v0);
            if col_differs {
                return false;
            }
        }
    }
    true
}

/// Outcome of the abacus characterization, with the runner pair and the two
/// possibly non-empty quotient components read from the canonical display.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JmWitness {
    pub is_jm: bool,
    pub i: Option<u32>,
    pub j: Option<u32>,
    pub quotient_i: Partition,
    pub quotient_j: Partition,
    /// Bead count of the display the witness was read from.
    pub beads: usize,
}

/// Finds a runner pair (i, j) on one display, scanning pairs in
/// lexicographic order, such that (1) every other quotient component is
/// empty, (2) below the highest vacancy on runner i everything off runner
/// i is vacant, (3) above the lowest bead on runner j everything off
/// runner j is occupied, and the two components are (4) p-regular
/// respectively (5) p-restricted JM-partitions.
fn display_witness(ab: &Abacus, p: OddPrime) -> Option<(u32, u32)> {
    let pv = p.get();
    let quotient = ab.quotient();
    let beads = ab.beads();
    let max_bead = beads.iter().max().copied();
    for i in 0..pv {
        // (2) with a0 the highest vacancy on runner i, every bead below
        // it must sit on runner i
        let rows_i = ab.runner_rows(i);
        let first_vacancy = (0..).find(|&a| !rows_i.contains(&a)).unwrap();
        let threshold = first_vacancy * pv + i;
        let f2 = match max_bead {
            None => true,
            Some(_) => beads
                .iter()
                .filter(|&&b| b > threshold)
                .all(|&b| b % pv == i),
        };
        if !f2 {
            continue;
        }
        for j in 0..pv {
            // (1) all other quotient components empty
            if (0..pv).any(|k| k != i && k != j && !quotient[k as usize].is_empty()) {
                continue;
            }
            // (3) below the lowest bead on runner j, every off-runner
            // position is occupied
            let rows_j = ab.runner_rows(j);
            let f3 = match rows_j.last() {
                None => true,
                Some(&last) => {
                    let lowest = last * pv + j;
                    (0..lowest).all(|pos| pos % pv == j || ab.occupied(pos))
                }
            };
            if !f3 {
                continue;
            }
            // (4), (5): the two components are regular/restricted JM
            if !is_p_regular(&quotient[i as usize], p)
                || !jm_abacus_recursive(&quotient[i as usize], p)
            {
                continue;
            }
            if !is_p_restricted(&quotient[j as usize], p)
                || !jm_abacus_recursive(&quotient[j as usize], p)
            {
                continue;
            }
            return Some((i, j));
        }
    }
    None
}

fn jm_abacus_recursive(lambda: &Partition, p: OddPrime) -> bool {
    if lambda.is_empty() {
        return true;
    }
    let base = canonical_bead_count(lambda, p);
    (base..base + p.as_usize()).all(|s| {
        let ab = Abacus::from_partition(lambda, p, s).expect("s >= len");
        display_witness(&ab, p).is_some()
    })
}

/// Abacus characterization: the runner conditions must admit a pair
/// (i, j) on every display; one cycle of p consecutive bead counts covers
/// all displays because adding a full row shifts every position uniformly.
pub fn is_jm_abacus(lambda: &Partition, p: OddPrime) -> JmWitness {
    if lambda.is_empty() {
        return JmWitness {
            is_jm: true,
            i: Some(0),
            j: Some(0),
            quotient_i: Partition::empty(),
            quotient_j: Partition::empty(),
            beads: 0,
        };
    }
    if !jm_abacus_recursive(lambda, p) {
        return JmWitness {
            is_jm: false,
            i: None,
            j: None,
            quotient_i: Partition::empty(),
            quotient_j: Partition::empty(),
            beads: canonical_bead_count(lambda, p),
        };
    }
    let canonical = Abacus::canonical(lambda, p);
    let (i, j) = display_witness(&canonical, p).expect("witness exists on the canonical display");
    let quotient = canonical.quotient();
    JmWitness {
        is_jm: true,
        i: Some(i),
        j: Some(j),
        quotient_i: quotient[i as usize].clone(),
        quotient_j: quotient[j as usize].clone(),
        beads: canonical.bead_count(),
    }
}

/// Φ(λ) = ((λ′(0))′ | λ′ − λ′(0)); total on partitions. The right
/// component carries the scaled partition pβ, every part divisible by p.
pub fn phi(lambda: &Partition, p: OddPrime) -> PartitionPair {
    let conj = lambda.conjugate();
    let head = expand(&conj, p).component(0);
    let p_beta = conj.checked_sub(&head).expect("λ′(0) is contained in λ′");
    PartitionPair::new(head.conjugate(), p_beta)
}

/// Φ read off the abacus witness: (κ_p(λ) + pλ^(i) | p(λ^(j))′).
/// Only JM-partitions admit this route.
pub fn phi_via_quotient(lambda: &Partition, p: OddPrime) -> Result<PartitionPair> {
    let witness = is_jm_abacus(lambda, p);
    if !witness.is_jm {
        return Err(Error::NotJm(p.get()));
    }
    let core = p_core(lambda, p);
    let left = core.add(&witness.quotient_i.scale(p.get()));
    let right = witness.quotient_j.conjugate().scale(p.get());
    Ok(PartitionPair::new(left, right))
}

/// A Rouquier block: the core admits a display where the bead count on
/// runner i+1 exceeds the count on runner i by at least w - 1, for all i.
/// One cycle of p consecutive bead counts decides this, since adding a full
/// row raises every count by one and keeps the gaps.
pub fn is_rouquier(core: &Partition, weight: u64, p: OddPrime) -> Result<bool> {
    if !is_p_core(core, p) {
        return Err(Error::NotACore(p.get()));
    }
    let need = weight as i64 - 1;
    let base = core.len();
    Ok((base..base + p.as_usize()).any(|s| {
        let counts = Abacus::from_partition(core, p, s)
            .expect("s >= len")
            .runner_bead_counts();
        counts.windows(2).all(|w| w[1] as i64 - w[0] as i64 >= need)
    }))
}

/// One induction step between adjacent JM-partitions: swapping runners
/// ℓ-1 and ℓ on a display where the swap is legal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjacencyStep {
    pub source: Partition,
    pub target: Partition,
    /// The right-hand runner of the swapped pair, 1 ≤ ℓ ≤ p-1.
    pub runner: u32,
    /// r, the number of nodes added; equals the bead-count difference.
    pub added: u64,
    /// p-residue of every added node: (ℓ - s) mod p.
    pub residue: u32,
    /// Bead count of the display the swap was performed on.
    pub beads: usize,
}

/// Performs the adjacency swap on the display with `s` beads (canonical
/// display when `None`). Legal when runner ℓ-1 carries
/// r ≥ 1 more beads than runner ℓ and the bead rows of runner ℓ all appear
/// on runner ℓ-1.
pub fn adjacent_successor(
    lambda: &Partition,
    p: OddPrime,
    runner: u32,
    beads: Option<usize>,
) -> Result<AdjacencyStep> {
    let pv = p.get();
    if runner < 1 || runner > pv - 1 {
        return Err(Error::BadRunnerIndex(runner, pv - 1));
    }
    let s = beads.unwrap_or_else(|| canonical_bead_count(lambda, p));
    let ab = Abacus::from_partition(lambda, p, s)?;
    let left_rows: HashSet<u32> = ab.runner_rows(runner - 1).into_iter().collect();
    let right_rows = ab.runner_rows(runner);
    if left_rows.len() <= right_rows.len() || !right_rows.iter().all(|r| left_rows.contains(r)) {
        return Err(Error::SwapNotLegal(runner));
    }
    let added = (left_rows.len() - right_rows.len()) as u64;
    let target = ab.swap_runners(runner)?.to_partition();
    let residue = p_residue(s, runner as usize, p);
    Ok(AdjacencyStep {
        source: lambda.clone(),
        target,
        runner,
        added,
        residue,
        beads: s,
    })
}

/// Search bounds for `rouquier_chain`: displays range over K extra rows of
/// beads, chains over at most 64 steps.
const CHAIN_EXTRA_ROWS: usize = 8;
const CHAIN_MAX_LEN: usize = 64;
const CHAIN_MAX_STATES: usize = 200_000;

fn chain_goal(lambda: &Partition, p: OddPrime) -> bool {
    let core = p_core(lambda, p);
    let weight = p_weight(lambda, p);
    is_rouquier(&core, weight, p).expect("p_core output is a core")
}

fn legal_moves(lambda: &Partition, p: OddPrime) -> Vec<AdjacencyStep> {
    let base = canonical_bead_count(lambda, p);
    let mut moves = Vec::new();
    for s in base..=base + CHAIN_EXTRA_ROWS * p.as_usize() {
        let Ok(ab) = Abacus::from_partition(lambda, p, s) else {
            continue;
        };
        for runner in 1..p.get() {
            if let Ok(step) = adjacent_successor(lambda, p, runner, Some(s)) {
                let counts = ab
                    .swap_runners(runner)
                    .expect("runner in range")
                    .runner_bead_counts();
                let min_gap = counts
                    .windows(2)
                    .map(|w| w[1] as i64 - w[0] as i64)
                    .min()
                    .unwrap_or(0);
                moves.push((min_gap, step));
            }
        }
    }
    // prefer moves that widen the smallest adjacent runner gap,
    // tie-breaking by runner then bead count
    moves.sort_by(|a, b| {
        b.0.cmp(&a.0)
            .then(a.1.runner.cmp(&b.1.runner))
            .then(a.1.beads.cmp(&b.1.beads))
    });
    moves.into_iter().map(|(_, step)| step).collect()
}

/// Breadth-first search for a chain of adjacent JM-partitions from λ into a
/// Rouquier block. The result is deterministic for the fixed bounds; the
/// empty chain is returned when λ's block is already Rouquier.
pub fn rouquier_chain(lambda: &Partition, p: OddPrime) -> Result<Vec<AdjacencyStep>> {
    if !is_jm_hook(lambda, p) {
        return Err(Error::NotJm(p.get()));
    }
    if chain_goal(lambda, p) {
        return Ok(Vec::new());
    }
    let mut visited: HashSet<Partition> = HashSet::new();
    let mut parents: HashMap<Partition, AdjacencyStep> = HashMap::new();
    let mut queue: VecDeque<(Partition, usize)> = VecDeque::new();
    visited.insert(lambda.clone());
    queue.push_back((lambda.clone(), 0));
    while let Some((state, depth)) = queue.pop_front() {
        if depth >= CHAIN_MAX_LEN || visited.len() > CHAIN_MAX_STATES {
            break;
        }
        for step in legal_moves(&state, p) {
            if visited.contains(&step.target) {
                continue;
            }
            visited.insert(step.target.clone());
            parents.insert(step.target.clone(), step.clone());
            if chain_goal(&step.target, p) {
                let mut chain = Vec::new();
                let mut cursor = step.target.clone();
                while cursor != *lambda {
                    let parent = parents[&cursor].clone();
                    cursor = parent.source.clone();
                    chain.push(parent);
                }
                chain.reverse();
                return Ok(chain);
            }
            queue.push_back((step.target.clone(), depth + 1));
        }
    }
    Err(Error::ChainNotFoundWithinBound)
}
