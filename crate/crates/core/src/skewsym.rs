//! Skew-symmetrizers A^(k): the projector tower built by the recursion
//!
//!   A^(1) = I,
//!   A^(k) = (1/k_q) A^(k−1) (q^(k−1) I − (k−1)_q R_{k−1}) A^(k−1)
//!
//! with A^(k−1) acting on the first k−1 factors. For involutive symmetries
//! the recursion is taken at q = 1 (classical coefficients).

use crate::braiding::{Braiding, SymmetryKind};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::scalar::{vars, Scalar};
use crate::tensor::TensorOperator;

/// The q-number k_q evaluated at a concrete q scalar.
pub(crate) fn q_num_at(q: &Scalar, k: u32) -> Scalar {
    if k == 0 {
        return Scalar::zero();
    }
    let mut acc = Scalar::zero();
    // k_q = q^{k-1} + q^{k-3} + … + q^{1-k}
    let mut e = k as i64 - 1;
    for _ in 0..k {
        acc = acc.add(&q.pow(e));
        e -= 2;
    }
    acc
}

/// Build A^(1)..A^(k_max) for a braiding given by its matrix and kind.
/// Used by braiding validation before a full `Braiding` exists.
pub(crate) fn raw_tower(
    r: &TensorOperator,
    kind: &SymmetryKind,
    k_max: u32,
) -> Result<Vec<TensorOperator>> {
    let n = r.dim_v();
    let mut ops = vec![TensorOperator::identity(n, 1)];
    for k in 2..=k_max {
        let prev = ops.last().unwrap();
        let prev_ext = prev.tensor_identity_right(1);
        let r_emb = r.embed_adjacent(k, k - 1)?;
        let middle = match kind {
            SymmetryKind::Involutive => {
                // (1/k)(I − (k−1) R_{k−1})
                TensorOperator::identity(n, k)
                    .sub(&r_emb.scale(&Scalar::from_int((k - 1) as i64)))
            }
            SymmetryKind::Hecke { q } => {
                // q^{k−1} I − (k−1)_q R_{k−1}
                TensorOperator::identity(n, k)
                    .scale(&q.pow((k - 1) as i64))
                    .sub(&r_emb.scale(&q_num_at(q, k - 1)))
            }
        };
        let denom = match kind {
            SymmetryKind::Involutive => Scalar::from_int(k as i64),
            SymmetryKind::Hecke { q } => q_num_at(q, k),
        };
        if denom.is_zero() {
            return Err(Error::Internal(format!(
                "division by a vanishing q-number at level {k}"
            )));
        }
        let next = prev_ext
            .mul(&middle)
            .mul(&prev_ext)
            .scale(&denom.inv());
        ops.push(next);
    }
    Ok(ops)
}

/// Symbolic rank with a specialization cross-check: the rank is recomputed
/// at seeded rational values of q (rank can only drop on specialization).
pub(crate) fn rank_checked(op: &TensorOperator) -> Result<usize> {
    let symbolic = op.rank();
    let mut gen = SplitMix64::new(0x5157_u64);
    let mut checked = 0;
    while checked < 2 {
        let qv = gen.next_q_value();
        let mut asn = std::collections::BTreeMap::new();
        asn.insert(vars::q_var(), qv.clone());
        match op.specialize(&asn) {
            Err(_) => continue, // pole at this sample; try the next one
            Ok(sp) => {
                let r = sp.rank();
                if r > symbolic {
                    return Err(Error::Internal(format!(
                        "rank cross-check failed: specialized rank {r} exceeds symbolic rank {symbolic}"
                    )));
                }
                if r != symbolic {
                    return Err(Error::Internal(format!(
                        "rank cross-check failed at q = {}/{}: {r} != {symbolic}",
                        qv.numer(),
                        qv.denom()
                    )));
                }
                checked += 1;
            }
        }
    }
    Ok(symbolic)
}

/// The tower A^(1)..A^(k_max) of a validated braiding, with ranks.
#[derive(Debug, Clone)]
pub struct SkewSymmetrizerTower {
    ops: Vec<TensorOperator>,
    ranks: Vec<usize>,
}

impl SkewSymmetrizerTower {
    pub fn build(b: &Braiding, k_max: u32) -> Result<Self> {
        let ops = raw_tower(b.r(), b.kind(), k_max)?;
        let ranks = ops.iter().map(rank_checked).collect::<Result<_>>()?;
        Ok(SkewSymmetrizerTower { ops, ranks })
    }

    /// A^(k), 1-based.
    pub fn op(&self, k: u32) -> &TensorOperator {
        &self.ops[(k - 1) as usize]
    }

    pub fn rank(&self, k: u32) -> usize {
        self.ranks[(k - 1) as usize]
    }

    pub fn len(&self) -> u32 {
        self.ops.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }
}

/// A^(k) for a validated braiding.
pub fn skew_symmetrizer(b: &Braiding, k: u32) -> Result<TensorOperator> {
    if k < 1 {
        return Err(Error::Position("skew-symmetrizer level must be >= 1".into()));
    }
    Ok(raw_tower(b.r(), b.kind(), k)?.pop().unwrap())
}
