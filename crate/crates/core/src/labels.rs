//! Signed Young module labels (λ|pμ) and their invariants: the vertex
//! composition Ρ, normalizer and correspondent descriptors, the sign-twist
//! formula, block data, complexity, periodicity, and weight-1 resolutions.
//!
//! Descriptors are data, not group elements: normalizers, Sylow subgroups
//! and correspondents appear only as structured names.

use crate::abacus::{canonical_bead_count, is_p_core, p_core, Abacus};
use crate::error::{Error, Result};
use crate::mullineux::mullineux_restricted;
use crate::padic::{expand, is_p_restricted};
use crate::partition::{Composition, Partition};
use crate::prime::OddPrime;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;

/// The label (λ|pμ) of an indecomposable signed Young module; μ is stored
/// un-scaled.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedLabel {
    lambda: Partition,
    mu: Partition,
    p: OddPrime,
}

impl SignedLabel {
    pub fn new(lambda: Partition, mu: Partition, p: OddPrime) -> Self {
        SignedLabel { lambda, mu, p }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn scaled_mu(&self) -> Partition {
        self.mu.scale(self.p.get())
    }

    pub fn prime(&self) -> OddPrime {
        self.p
    }

    /// n = |λ| + p·|μ|.
    pub fn degree(&self) -> u64 {
        self.lambda.size() + self.p.get() as u64 * self.mu.size()
    }
}

impl fmt::Display for SignedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y({}|{}·{})", self.lambda, self.p, self.mu)
    }
}

impl Serialize for SignedLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SignedLabel", 4)?;
        s.serialize_field("lambda", &self.lambda)?;
        s.serialize_field("mu", &self.mu)?;
        s.serialize_field("mu_times_p", &self.scaled_mu())?;
        s.serialize_field("p", &self.p)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for SignedLabel {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            lambda: Partition,
            mu: Partition,
            p: OddPrime,
        }
        let raw = Raw::deserialize(deserializer)?;
        Ok(SignedLabel::new(raw.lambda, raw.mu, raw.p))
    }
}

/// One factor of N(ρ): S_{degree} ≀ S_{multiplicity}, with degree = p^i.
/// The level-0 factor is plain S_{multiplicity}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizerFactor {
    pub degree: u64,
    pub multiplicity: u64,
}

/// The Young/Green vertex data of Y(λ|pμ): the composition
/// ρ = (1^{n_0}, p^{n_1}, …, (p^r)^{n_r}) with n_i = |λ(i)| + |μ(i-1)|,
/// plus the shape of the normalizer N(ρ).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexDescriptor {
    pub rho: Composition,
    pub multiplicities: Vec<u64>,
    pub normalizer: Vec<NormalizerFactor>,
}

impl VertexDescriptor {
    /// p-rank of the fixed Sylow subgroup P_ρ: Σ_{i≥1} n_i·p^{i-1}.
    pub fn p_rank(&self, p: OddPrime) -> u64 {
        let mut rank = 0u64;
        let mut power = 1u64;
        for (i, &n) in self.multiplicities.iter().enumerate() {
            if i >= 1 {
                rank += n * power;
                power *= p.get() as u64;
            }
        }
        rank
    }

    /// Renders the normalizer like `S2 x (S3 wr S4) x S9 x S27`.
    pub fn normalizer_display(&self) -> String {
        let mut pieces = Vec::new();
        for f in &self.normalizer {
            if f.multiplicity == 0 {
                continue;
            }
            if f.degree == 1 {
                pieces.push(format!("S{}", f.multiplicity));
            } else if f.multiplicity == 1 {
                pieces.push(format!("S{}", f.degree));
            } else {
                pieces.push(format!("(S{} wr S{})", f.degree, f.multiplicity));
            }
        }
        if pieces.is_empty() {
            "S0".to_string()
        } else {
            pieces.join(" x ")
        }
    }
}

/// Ρ(λ|pμ) together with the normalizer shape.
pub fn rho(label: &SignedLabel) -> VertexDescriptor {
    let p = label.prime();
    let e_lambda = expand(label.lambda(), p);
    let e_mu = expand(label.mu(), p);
    let r = e_lambda.degree().max(e_mu.degree() + 1);
    let mut multiplicities = Vec::with_capacity(r + 1);
    for i in 0..=r {
        let from_lambda = e_lambda.component(i).size();
        let from_mu = if i == 0 {
            0
        } else {
            e_mu.component(i - 1).size()
        };
        multiplicities.push(from_lambda + from_mu);
    }
    let mut parts = Vec::new();
    let mut normalizer = Vec::new();
    let mut power = 1u64;
    for &n in &multiplicities {
        for _ in 0..n {
            parts.push(power as u32);
        }
        normalizer.push(NormalizerFactor {
            degree: power,
            multiplicity: n,
        });
        power *= p.get() as u64;
    }
    VertexDescriptor {
        rho: Composition::new(parts),
        multiplicities,
        normalizer,
    }
}

/// One tensor factor of the Young-Green correspondent
/// Y^{λ(0)} ⊠ R_p(λ(1)|μ(0)) ⊠ … ⊠ R_{p^r}(λ(r)|μ(r-1)).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrespondentFactor {
    pub level: u64,
    pub lambda_part: Partition,
    /// Absent on the level-0 factor, which carries only λ(0).
    pub mu_part: Option<Partition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrespondentDescriptor {
    pub factors: Vec<CorrespondentFactor>,
}

/// The Young-Green correspondent descriptor, aligned with the p-adic
/// expansions of λ and μ.
pub fn green_correspondent(label: &SignedLabel) -> CorrespondentDescriptor {
    let p = label.prime();
    let e_lambda = expand(label.lambda(), p);
    let e_mu = expand(label.mu(), p);
    let r = e_lambda.degree().max(e_mu.degree() + 1);
    let mut factors = vec![CorrespondentFactor {
        level: 1,
        lambda_part: e_lambda.component(0),
        mu_part: None,
    }];
    let mut power = 1u64;
    for i in 1..=r {
        power *= p.get() as u64;
        factors.push(CorrespondentFactor {
            level: power,
            lambda_part: e_lambda.component(i),
            mu_part: Some(e_mu.component(i - 1)),
        });
    }
    CorrespondentDescriptor { factors }
}

/// The sign-twist: Y(λ|pμ) ⊗ sgn ≅ Y(m(λ(0)) + pμ | λ - λ(0)).
pub fn twist(label: &SignedLabel) -> SignedLabel {
    let p = label.prime();
    let head = expand(label.lambda(), p).component(0);
    let twisted_head = mullineux_restricted(&head, p).expect("λ(0) is p-restricted");
    let new_lambda = twisted_head.add(&label.mu().scale(p.get()));
    let new_mu = label
        .lambda()
        .checked_sub(&head)
        .expect("λ(0) is contained in λ")
        .divide(p.get())
        .expect("λ - λ(0) has parts divisible by p");
    SignedLabel::new(new_lambda, new_mu, p)
}

/// Block data of Y(λ|pμ): the block is b_{κ_p(λ)}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockData {
    pub core: Partition,
    pub weight: u64,
}

pub fn block(label: &SignedLabel) -> BlockData {
    let core = p_core(label.lambda(), label.prime());
    let weight = (label.degree() - core.size()) / label.prime().get() as u64;
    BlockData { core, weight }
}

/// Complexity of Y(λ|pμ): |μ| + (|λ| - |λ(0)|)/p.
pub fn complexity(label: &SignedLabel) -> u64 {
    let p = label.prime();
    let head = expand(label.lambda(), p).component(0);
    label.mu().size() + (label.lambda().size() - head.size()) / p.get() as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Projective,
    Periodic,
    Aperiodic,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Classification::Projective => "projective",
            Classification::Periodic => "periodic",
            Classification::Aperiodic => "aperiodic",
        };
        write!(f, "{name}")
    }
}

/// Projective iff μ = ∅ and λ is p-restricted; periodic iff μ = (1) with λ
/// p-restricted, or μ = ∅ with λ = λ(0) + (p); aperiodic otherwise.
pub fn classify(label: &SignedLabel) -> Classification {
    let p = label.prime();
    let restricted = is_p_restricted(label.lambda(), p);
    if label.mu().is_empty() && restricted {
        return Classification::Projective;
    }
    if *label.mu() == Partition::new(vec![1]).unwrap() && restricted {
        return Classification::Periodic;
    }
    if label.mu().is_empty() {
        let head = expand(label.lambda(), p).component(0);
        let tail = label
            .lambda()
            .checked_sub(&head)
            .expect("λ(0) is contained in λ");
        if tail == Partition::new(vec![p.get()]).unwrap() {
            return Classification::Periodic;
        }
    }
    Classification::Aperiodic
}

/// Period 2p-2 of non-projective periodic labels; none otherwise.
pub fn period(label: &SignedLabel) -> Option<u32> {
    match classify(label) {
        Classification::Periodic => Some(2 * label.prime().get() - 2),
        _ => None,
    }
}

/// A Loewy descriptor in the Heller table: a single simple label D_ϱ, two
/// stacked layers, or the module itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HellerEntry {
    Simple(Partition),
    Layered { top: Partition, bottom: Partition },
    SelfModule,
}

/// Weight-1 data over a p-core: the p weight-1 partitions ϱ_0 ▷ … ▷ ϱ_{p-1},
/// one period of the minimal projective resolution of Y(core|p(1)), and the
/// Heller translates Ω^1, …, Ω^{2p-2}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionDescriptor {
    pub core: Partition,
    pub labels: Vec<Partition>,
    pub resolution: Vec<Partition>,
    pub heller: Vec<(u32, HellerEntry)>,
}

/// Enumerates the weight-1 block over `core` and instantiates the Ω table:
/// Ω^i two-layered for 1 ≤ i ≤ p-2 and p ≤ i ≤ 2p-3, Ω^{p-1} = D_{ϱ_1},
/// Ω^{2p-2} the module itself.
pub fn weight1_resolution(core: &Partition, p: OddPrime) -> Result<ResolutionDescriptor> {
    if !is_p_core(core, p) {
        return Err(Error::NotACore(p.get()));
    }
    let pv = p.get();
    let s = canonical_bead_count(core, p) + p.as_usize();
    let display = Abacus::from_partition(core, p, s)?;
    let mut labels = Vec::with_capacity(p.as_usize());
    for runner in 0..pv {
        let rows = display.runner_rows(runner);
        let lowest = *rows
            .last()
            .expect("every runner carries a bead at s >= len + p");
        let mut beads = display.beads().clone();
        beads.remove(&(lowest * pv + runner));
        beads.insert((lowest + 1) * pv + runner);
        labels.push(Abacus::new(p, beads).to_partition());
    }
    // ϱ_0 ▷ ϱ_1 ▷ … ▷ ϱ_{p-1}: the weight-1 labels are totally ordered
    labels.sort_by(|a, b| {
        if a == b {
            std::cmp::Ordering::Equal
        } else if a.dominates(b).expect("equal sizes") {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let k = p.as_usize() - 1;
    let mut resolution = Vec::with_capacity(2 * k);
    for d in 0..k {
        resolution.push(labels[k - d].clone());
    }
    for d in 0..k {
        resolution.push(labels[1 + d].clone());
    }
    let mut heller = Vec::new();
    for i in 1..=2 * pv - 2 {
        let entry = if i <= pv - 2 {
            HellerEntry::Layered {
                top: labels[(pv - 1 - i) as usize].clone(),
                bottom: labels[(pv - i) as usize].clone(),
            }
        } else if i == pv - 1 {
            HellerEntry::Simple(labels[1].clone())
        } else if i <= 2 * pv - 3 {
            HellerEntry::Layered {
                top: labels[(i - pv + 2) as usize].clone(),
                bottom: labels[(i - pv + 1) as usize].clone(),
            }
        } else {
            HellerEntry::SelfModule
        };
        heller.push((i, entry));
    }
    Ok(ResolutionDescriptor {
        core: core.clone(),
        labels,
        resolution,
        heller,
    })
}
