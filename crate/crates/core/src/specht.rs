//! The simple-Specht API: simplicity test, the signed-Young label of a
//! simple Specht module, and the aggregated invariant report.

use crate::error::{Error, Result};
use crate::jm::{is_jm_hook, phi};
use crate::labels::{
    block, classify, complexity, green_correspondent, period, rho, BlockData, Classification,
    CorrespondentDescriptor, SignedLabel, VertexDescriptor,
};
use crate::mullineux::regularize;
use crate::partition::Partition;
use crate::prime::OddPrime;
use serde::Serialize;

/// S^λ is simple iff λ is a JM-partition (odd p).
pub fn is_simple_specht(lambda: &Partition, p: OddPrime) -> bool {
    is_jm_hook(lambda, p)
}

/// The signed-Young label of a simple Specht module: S^λ ≅ Y(Φ(λ)).
pub fn signed_label(lambda: &Partition, p: OddPrime) -> Result<SignedLabel> {
    if !is_simple_specht(lambda, p) {
        return Err(Error::NotSimple);
    }
    let pair = phi(lambda, p);
    let mu = pair
        .right
        .divide(p.get())
        .expect("the right component of Φ has parts divisible by p");
    Ok(SignedLabel::new(pair.left, mu, p))
}

/// Everything this crate knows about S^λ in characteristic p.
#[derive(Clone, Debug, Serialize)]
pub struct SpechtReport {
    pub lambda: Partition,
    pub p: OddPrime,
    pub simple: bool,
    /// Present exactly when the module is simple.
    pub label: Option<SignedLabel>,
    /// α^R, naming the simple module D^{α^R} ≅ S^α when simple.
    pub regularization: Partition,
    pub block: BlockData,
    pub vertex: Option<VertexDescriptor>,
    pub correspondent: Option<CorrespondentDescriptor>,
    pub complexity: Option<u64>,
    pub classification: Option<Classification>,
    pub period: Option<u32>,
}

/// Aggregates simplicity, the Φ label, vertex data, complexity,
/// periodicity and the regularized name.
pub fn report(lambda: &Partition, p: OddPrime) -> SpechtReport {
    let simple = is_simple_specht(lambda, p);
    let label = simple.then(|| signed_label(lambda, p).expect("just checked simplicity"));
    let vertex = label.as_ref().map(rho);
    let correspondent = label.as_ref().map(green_correspondent);
    let cx = label.as_ref().map(complexity);
    let classification = label.as_ref().map(classify);
    let per = label.as_ref().and_then(period);
    let block_data = block(&SignedLabel::new(lambda.clone(), Partition::empty(), p));
    SpechtReport {
        lambda: lambda.clone(),
        p,
        simple,
        label,
        regularization: regularize(lambda, p),
        block: block_data,
        vertex,
        correspondent,
        complexity: cx,
        classification,
        period: per,
    }
}
