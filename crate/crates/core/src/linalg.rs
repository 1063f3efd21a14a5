//! Sparse exact elimination over the scalar field.
//!
//! The reduced row-echelon [`Echelon`] accumulator is the single engine
//! behind skew-inverse solving, skew-symmetrizer ranks and ideal-membership
//! reduction. Rows are sparse (sorted index/value pairs); insertion order is
//! deterministic, so cached bases are reproducible bit-for-bit.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Debug, Clone, Default)]
pub struct Echelon {
    /// Rows in reduced echelon form, keyed by pivot column. Each row's first
    /// entry is its pivot with coefficient one; pivot columns of other rows
    /// are eliminated.
    rows: BTreeMap<usize, SparseVec>,
}

fn sub_scaled(row: &mut BTreeMap<usize, Scalar>, factor: &Scalar, other: &SparseVec) {
    for (j, c) in other {
        let delta = factor.mul(c);
        match row.entry(*j) {
            std::collections::btree_map::Entry::Vacant(e) => {
                let v = delta.neg();
                if !v.is_zero() {
                    e.insert(v);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().sub(&delta);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    /// Fully reduce `row` against the current basis; the result has no
    /// support on any pivot column.
    pub fn reduce(&self, row: SparseVec) -> SparseVec {
        let mut work: BTreeMap<usize, Scalar> = row.into_iter().collect();
        let mut cursor = 0usize;
        loop {
            let hit = work
                .range(cursor..)
                .find(|(j, _)| self.rows.contains_key(j))
                .map(|(j, c)| (*j, c.clone()));
            match hit {
                None => break,
                Some((j, c)) => {
                    sub_scaled(&mut work, &c, &self.rows[&j]);
                    debug_assert!(!work.contains_key(&j));
                    cursor = j;
                }
            }
        }
        work.into_iter().collect()
    }

    /// Insert a row, keeping reduced echelon form. Returns `true` when the
    /// row was independent (rank grew).
    pub fn insert(&mut self, row: SparseVec) -> bool {
        let reduced = self.reduce(row);
        if reduced.is_empty() {
            return false;
        }
        let (pivot, lead) = (reduced[0].0, reduced[0].1.clone());
        let inv = lead.inv();
        let normalized: SparseVec = reduced
            .into_iter()
            .map(|(j, c)| (j, c.mul(&inv)))
            .collect();
        // Eliminate the new pivot from existing rows.
        let affected: Vec<usize> = self
            .rows
            .iter()
            .filter(|(_, r)| r.iter().any(|(j, _)| *j == pivot))
            .map(|(p, _)| *p)
            .collect();
        for p in affected {
            let row = self.rows.get_mut(&p).unwrap();
            let factor = row
                .iter()
                .find(|(j, _)| *j == pivot)
                .map(|(_, c)| c.clone())
                .unwrap();
            let mut work: BTreeMap<usize, Scalar> = std::mem::take(row).into_iter().collect();
            sub_scaled(&mut work, &factor, &normalized);
            *row = work.into_iter().collect();
        }
        self.rows.insert(pivot, normalized);
        true
    }
}

/// Rank of a sparse matrix given as rows.
pub fn rank(rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Invert the n×n matrix whose rows are given as sparse vectors over
/// columns 0..n. Returns the inverse as a dense row-major table, or `None`
/// when the matrix is singular.
pub fn invert(n: usize, a: impl IntoIterator<Item = SparseVec>) -> Option<Vec<Vec<Scalar>>> {
    // Augment [A | I] row-wise, reduce, then read off the inverse.
    let mut e = Echelon::new();
    for (i, row) in a.into_iter().enumerate() {
        let mut aug = row;
        aug.push((n + i, Scalar::one()));
        e.insert(aug);
    }
    if e.rank() != n {
        return None;
    }
    // With full rank the pivots must be exactly 0..n.
    if e.pivots().take(n).ne(0..n) {
        return None;
    }
    let mut inv = vec![vec![Scalar::zero(); n]; n];
    for (pivot, row) in e.rows.iter() {
        for (j, c) in row {
            if *j >= n {
                inv[*pivot][*j - n] = c.clone();
            }
        }
    }
    Some(inv)
}
