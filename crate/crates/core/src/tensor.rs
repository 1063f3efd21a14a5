//! Exact sparse operators on tensor powers V^(⊗k).
//!
//! [`SparseOp`] is generic over the coefficient ring so the same machinery
//! serves numeric/symbolic matrices (entries [`Scalar`]) and matrices over
//! the free algebra (entries `FreeElement`, see [`crate::freealg`]). Basis
//! multi-indices are encoded base-n with position 1 most significant.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::scalar::Scalar;

/// Coefficient ring for sparse operators. `scale` multiplies by an element
/// of the ground field, which is central in every ring used here.
pub trait Coeff: Clone {
    fn add_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;
    fn is_zero(&self) -> bool;
}

impl Coeff for Scalar {
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scale(&self, s: &Scalar) -> Self {
        self.mul(s)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

/// Sparse matrix acting on V^(⊗arity), dim V = n. Absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseOp<T> {
    n: u32,
    arity: u32,
    entries: BTreeMap<(u32, u32), T>,
}

/// Exact matrix with scalar entries: the working representation of
/// braidings, skew-symmetrizers and trace matrices.
pub type TensorOperator = SparseOp<Scalar>;

/// Matrix over the free algebra (entries are noncommutative polynomials).
pub type NcMatrix<T> = SparseOp<T>;

impl<T: Coeff> SparseOp<T> {
    pub fn zero(n: u32, arity: u32) -> Self {
        SparseOp { n, arity, entries: BTreeMap::new() }
    }

    pub fn dim_v(&self) -> u32 {
        self.n
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    /// Total dimension n^arity of the space acted on.
    pub fn dim(&self) -> u32 {
        self.n.pow(self.arity)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: u32, col: u32) -> Option<&T> {
        self.entries.get(&(row, col))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &T)> {
        self.entries.iter()
    }

    pub fn set(&mut self, row: u32, col: u32, v: T) {
        debug_assert!(row < self.dim() && col < self.dim());
        if v.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), v);
        }
    }

    pub fn add_to(&mut self, row: u32, col: u32, v: T) {
        if v.is_zero() {
            return;
        }
        match self.entries.entry((row, col)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add_ref(&v);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.arity), (other.n, other.arity));
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_to(r, c, v.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SparseOp {
            n: self.n,
            arity: self.arity,
            entries: self
                .entries
                .iter()
                .map(|(&k, v)| (k, v.neg_ref()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return SparseOp::zero(self.n, self.arity);
        }
        SparseOp {
            n: self.n,
            arity: self.arity,
            entries: self.entries.iter().map(|(&k, v)| (k, v.scale(s))).collect(),
        }
    }

    /// Matrix product; entry order is preserved (left factor first), which
    /// matters for noncommutative coefficients.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.arity), (other.n, other.arity));
        let mut out = SparseOp::zero(self.n, self.arity);
        for (&(r, k), a) in &self.entries {
            for (&(_, c), b) in other.entries.range((k, 0)..=(k, u32::MAX)) {
                out.add_to(r, c, a.mul_ref(b));
            }
        }
        out
    }

    /// Product with a scalar-entried operator on the right.
    pub fn mul_scalar_op(&self, other: &TensorOperator) -> Self {
        assert_eq!((self.n, self.arity), (other.n, other.arity));
        let mut out = SparseOp::zero(self.n, self.arity);
        for (&(r, k), a) in &self.entries {
            for (&(_, c), b) in other.entries.range((k, 0)..=(k, u32::MAX)) {
                out.add_to(r, c, a.scale(b));
            }
        }
        out
    }

    /// Product with a scalar-entried operator on the left.
    pub fn lmul_scalar_op(&self, other: &TensorOperator) -> Self {
        assert_eq!((self.n, self.arity), (other.n, other.arity));
        let mut out = SparseOp::zero(self.n, self.arity);
        for (&(r, k), b) in &other.entries {
            for (&(_, c), a) in self.entries.range((k, 0)..=(k, u32::MAX)) {
                out.add_to(r, c, a.scale(b));
            }
        }
        out
    }

    /// Embed an arity-2 operator at adjacent positions (i, i+1) of a larger
    /// tensor power (1-based positions).
    pub fn embed_adjacent(&self, total_arity: u32, i: u32) -> Result<Self> {
        if self.arity != 2 {
            return Err(Error::Arity(format!(
                "embed_adjacent needs an arity-2 operator, got arity {}",
                self.arity
            )));
        }
        if i < 1 || i + 1 > total_arity {
            return Err(Error::Position(format!(
                "position {i} with total arity {total_arity}"
            )));
        }
        let n = self.n;
        let ctx = total_arity - 2;
        let mut out = SparseOp::zero(n, total_arity);
        let ctx_count = n.pow(ctx);
        for (&(r2, c2), v) in &self.entries {
            let (a, b) = (r2 / n, r2 % n);
            let (c, d) = (c2 / n, c2 % n);
            for ctx_idx in 0..ctx_count {
                let digits = decode(ctx_idx, n, ctx);
                let row = encode_with_pair(&digits, a, b, i, total_arity, n);
                let col = encode_with_pair(&digits, c, d, i, total_arity, n);
                out.set(row, col, v.clone());
            }
        }
        Ok(out)
    }

    /// Embed an arity-1 operator at position p of a larger tensor power.
    pub fn embed_single(&self, total_arity: u32, p: u32) -> Result<Self> {
        if self.arity != 1 {
            return Err(Error::Arity(format!(
                "embed_single needs an arity-1 operator, got arity {}",
                self.arity
            )));
        }
        if p < 1 || p > total_arity {
            return Err(Error::Position(format!(
                "position {p} with total arity {total_arity}"
            )));
        }
        let n = self.n;
        let ctx = total_arity - 1;
        let mut out = SparseOp::zero(n, total_arity);
        for (&(r1, c1), v) in &self.entries {
            for ctx_idx in 0..n.pow(ctx) {
                let digits = decode(ctx_idx, n, ctx);
                let row = encode_with_one(&digits, r1, p, total_arity, n);
                let col = encode_with_one(&digits, c1, p, total_arity, n);
                out.set(row, col, v.clone());
            }
        }
        Ok(out)
    }

    /// Tensor with the identity on `extra` further factors (on the right).
    pub fn tensor_identity_right(&self, extra: u32) -> Self {
        let n = self.n;
        let mut out = SparseOp::zero(n, self.arity + extra);
        let block = n.pow(extra);
        for (&(r, c), v) in &self.entries {
            for k in 0..block {
                out.set(r * block + k, c * block + k, v.clone());
            }
        }
        out
    }

    /// Weighted partial trace over `positions` (1-based, distinct): on each
    /// traced factor contract with the arity-1 weight matrix `d`, i.e.
    /// Tr_(p)(D_p · X). The result acts on the remaining factors; an arity-0
    /// result is a 1×1 operator (see [`SparseOp::as_single`]).
    pub fn r_trace(&self, positions: &[u32], d: &TensorOperator) -> Result<Self> {
        let mut sorted: Vec<u32> = positions.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != positions.len() {
            return Err(Error::Position("duplicate trace positions".into()));
        }
        for &p in &sorted {
            if p < 1 || p > self.arity {
                return Err(Error::Position(format!(
                    "trace position {p} with arity {}",
                    self.arity
                )));
            }
        }
        let mut acc = self.clone();
        // Trace highest positions first so lower indices stay valid.
        for &p in sorted.iter().rev() {
            acc = acc.trace_one(p, d)?;
        }
        Ok(acc)
    }

    fn trace_one(&self, p: u32, d: &TensorOperator) -> Result<Self> {
        let n = self.n;
        if d.n != n || d.arity != 1 {
            return Err(Error::Arity("trace weight matrix must have arity 1".into()));
        }
        let mut out = SparseOp::zero(n, self.arity - 1);
        for (&(r, c), v) in &self.entries {
            let rd = decode(r, n, self.arity);
            let cd = decode(c, n, self.arity);
            let s = rd[(p - 1) as usize];
            let t = cd[(p - 1) as usize];
            // Contribution D[t, s] · X[.. s .., .. t ..]
            if let Some(w) = d.entries.get(&(t, s)) {
                let mut rkeep = rd.clone();
                rkeep.remove((p - 1) as usize);
                let mut ckeep = cd.clone();
                ckeep.remove((p - 1) as usize);
                out.add_to(encode(&rkeep, n), encode(&ckeep, n), v.scale(w));
            }
        }
        Ok(out)
    }

    /// The single entry of an arity-0 operator.
    pub fn as_single(&self) -> Option<&T> {
        assert_eq!(self.arity, 0, "as_single requires arity 0");
        self.entries.get(&(0, 0))
    }

    pub fn map_entries<U: Coeff>(&self, f: impl Fn(&T) -> U) -> SparseOp<U> {
        let mut out = SparseOp::zero(self.n, self.arity);
        for (&(r, c), v) in &self.entries {
            out.set(r, c, f(v));
        }
        out
    }
}

impl TensorOperator {
    pub fn identity(n: u32, arity: u32) -> Self {
        let mut out = SparseOp::zero(n, arity);
        for i in 0..n.pow(arity) {
            out.set(i, i, Scalar::one());
        }
        out
    }

    /// The flip P on V⊗V (any position pair handled via embedding).
    pub fn flip(n: u32) -> Self {
        let mut out = SparseOp::zero(n, 2);
        for i in 0..n {
            for j in 0..n {
                out.set(i * n + j, j * n + i, Scalar::one());
            }
        }
        out
    }

    /// Rows of the operator as sparse vectors for elimination.
    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        let mut rows: BTreeMap<u32, SparseVec> = BTreeMap::new();
        for (&(r, c), v) in &self.entries {
            rows.entry(r).or_default().push((c as usize, v.clone()));
        }
        rows.into_values().collect()
    }

    pub fn rank(&self) -> usize {
        crate::linalg::rank(self.sparse_rows())
    }

    pub fn specialize(
        &self,
        assignment: &std::collections::BTreeMap<crate::scalar::VarId, num_rational::BigRational>,
    ) -> Result<Self> {
        let mut out = SparseOp::zero(self.n, self.arity);
        for (&(r, c), v) in &self.entries {
            out.set(r, c, v.specialize(assignment)?);
        }
        Ok(out)
    }
}

/// Decode a basis index into per-position digits (0-based), position 1 first.
pub fn decode(index: u32, n: u32, arity: u32) -> Vec<u32> {
    let mut digits = vec![0u32; arity as usize];
    let mut rem = index;
    for i in (0..arity as usize).rev() {
        digits[i] = rem % n;
        rem /= n;
    }
    digits
}

/// Encode per-position digits into a basis index.
pub fn encode(digits: &[u32], n: u32) -> u32 {
    digits.iter().fold(0, |acc, &d| acc * n + d)
}

fn encode_with_pair(ctx: &[u32], a: u32, b: u32, i: u32, total: u32, n: u32) -> u32 {
    let mut digits = Vec::with_capacity(total as usize);
    let mut ctx_iter = ctx.iter();
    for pos in 1..=total {
        if pos == i {
            digits.push(a);
        } else if pos == i + 1 {
            digits.push(b);
        } else {
            digits.push(*ctx_iter.next().unwrap());
        }
    }
    encode(&digits, n)
}

fn encode_with_one(ctx: &[u32], a: u32, p: u32, total: u32, n: u32) -> u32 {
    let mut digits = Vec::with_capacity(total as usize);
    let mut ctx_iter = ctx.iter();
    for pos in 1..=total {
        if pos == p {
            digits.push(a);
        } else {
            digits.push(*ctx_iter.next().unwrap());
        }
    }
    encode(&digits, n)
}
