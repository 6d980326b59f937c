//! p-adic expansion of partitions and the regular/restricted predicates.
//!
//! Every partition decomposes uniquely as λ = Σ p^i·λ(i) with each λ(i)
//! p-restricted. λ(0) falls out of stripping horizontal rim p-hooks row by
//! row from the bottom; the rest recurses on (λ - λ(0))/p.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::prime::OddPrime;

/// The expansion λ(0), λ(1), …, λ(r); the last component is non-empty
/// unless λ = ∅ (in which case the list is the single component ∅).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PadicExpansion {
    components: Vec<Partition>,
    p: OddPrime,
}

impl PadicExpansion {
    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> Partition {
        self.components.get(i).cloned().unwrap_or_default()
    }

    /// r_λ, the index of the last component (0 for ∅).
    pub fn degree(&self) -> usize {
        self.components.len() - 1
    }

    pub fn prime(&self) -> OddPrime {
        self.p
    }
}

/// No p equal positive parts.
pub fn is_p_regular(lambda: &Partition, p: OddPrime) -> bool {
    let p = p.as_usize();
    let parts = lambda.parts();
    if parts.len() < p {
        return true;
    }
    !parts.windows(p).any(|w| w[0] == w[p - 1])
}

/// Successive differences all < p; equivalently the conjugate is p-regular.
pub fn is_p_restricted(lambda: &Partition, p: OddPrime) -> bool {
    (0..lambda.len()).all(|i| lambda.part(i) - lambda.part(i + 1) < p.get())
}

/// λ(0): strip horizontal rim p-hooks from the bottom row up; a hook comes
/// off row i only while λ_i - p ≥ λ_{i+1}, so the diagram stays a partition
/// at every step.
fn strip_horizontal(lambda: &Partition, p: OddPrime) -> Partition {
    let p = p.get();
    let mut parts = lambda.parts().to_vec();
    for i in (0..parts.len()).rev() {
        let below = if i + 1 < parts.len() { parts[i + 1] } else { 0 };
        while parts[i] >= p + below {
            parts[i] -= p;
        }
    }
    Partition::new(parts).expect("stripping keeps a partition")
}

/// The p-adic expansion of λ.
pub fn expand(lambda: &Partition, p: OddPrime) -> PadicExpansion {
    let mut components = Vec::new();
    let mut rest = lambda.clone();
    loop {
        let head = strip_horizontal(&rest, p);
        let diff = rest
            .checked_sub(&head)
            .expect("head is contained in the remainder");
        components.push(head);
        if diff.is_empty() {
            break;
        }
        rest = diff
            .divide(p.get())
            .expect("stripped rows come off in p-hooks");
    }
    PadicExpansion { components, p }
}

/// Σ p^i·λ(i). Errors when some component is not p-restricted.
pub fn reconstruct(expansion: &PadicExpansion) -> Result<Partition> {
    let p = expansion.p;
    let mut total = Partition::empty();
    let mut power = 1u32;
    for (i, component) in expansion.components.iter().enumerate() {
        if !is_p_restricted(component, p) {
            return Err(Error::InvalidExpansion(i));
        }
        total = total.add(&component.scale(power));
        if i + 1 < expansion.components.len() {
            power *= p.get();
        }
    }
    Ok(total)
}
