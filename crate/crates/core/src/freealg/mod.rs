//! Free associative algebra on matrix generators over the scalar field,
//! with degree-filtered two-sided ideals and exact membership tests.

pub mod ideal;
pub mod pbw;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::scalar::Scalar;
use crate::tensor::Coeff;

pub use ideal::{Grading, IdealHandle, Membership, RelationSet, SliceKey, Strategy};

/// One generator symbol: display name plus a level (1 for constant algebras;
/// the u-degree for current algebras).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSymbol {
    pub name: String,
    pub level: u32,
}

/// An ordered generator alphabet. The index order is the tie-break order of
/// the graded-lexicographic word order, so it fixes echelon bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<GenSymbol>,
}

impl Alphabet {
    pub fn new(symbols: Vec<GenSymbol>) -> Arc<Self> {
        Arc::new(Alphabet { symbols })
    }

    /// N×N matrix alphabet `<prefix>_i_j` ordered row-major by (i, j).
    pub fn matrix(prefix: &str, n: u32) -> Arc<Self> {
        let mut symbols = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                symbols.push(GenSymbol { name: format!("{prefix}{i}{j}"), level: 1 });
            }
        }
        Alphabet::new(symbols)
    }

    /// Leveled matrix alphabet `<prefix><k>_i_j`, level-major then row-major.
    pub fn leveled_matrix(prefix: &str, n: u32, levels: u32) -> Arc<Self> {
        let mut symbols = Vec::new();
        for k in 1..=levels {
            for i in 1..=n {
                for j in 1..=n {
                    symbols.push(GenSymbol { name: format!("{prefix}{k}_{i}{j}"), level: k });
                }
            }
        }
        Alphabet::new(symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbol(&self, idx: u16) -> &GenSymbol {
        &self.symbols[idx as usize]
    }

    pub fn level(&self, idx: u16) -> u32 {
        self.symbols[idx as usize].level
    }

    pub fn max_level(&self) -> u32 {
        self.symbols.iter().map(|s| s.level).max().unwrap_or(0)
    }
}

/// A word in generator indices. Ordered graded-lexicographically: length
/// first, then letters left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u16>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(idx: u16) -> Self {
        Word(vec![idx])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn level(&self, alpha: &Alphabet) -> u32 {
        self.0.iter().map(|&i| alpha.level(i)).sum()
    }

    /// Letters sorted ascending: the commutative image of the word.
    pub fn sorted(&self) -> Word {
        let mut v = self.0.clone();
        v.sort_unstable();
        Word(v)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Element of the free algebra: finite scalar combination of words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeElement {
    alpha: Arc<Alphabet>,
    terms: BTreeMap<Word, Scalar>,
}

impl FreeElement {
    pub fn zero(alpha: Arc<Alphabet>) -> Self {
        FreeElement { alpha, terms: BTreeMap::new() }
    }

    pub fn constant(alpha: Arc<Alphabet>, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Word::empty(), c);
        }
        FreeElement { alpha, terms }
    }

    pub fn one(alpha: Arc<Alphabet>) -> Self {
        FreeElement::constant(alpha, Scalar::one())
    }

    pub fn generator(alpha: Arc<Alphabet>, idx: u16) -> Self {
        assert!((idx as usize) < alpha.len());
        let mut terms = BTreeMap::new();
        terms.insert(Word::single(idx), Scalar::one());
        FreeElement { alpha, terms }
    }

    pub fn from_terms(alpha: Arc<Alphabet>, it: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut out = FreeElement::zero(alpha);
        for (w, c) in it {
            out.add_term(w, c);
        }
        out
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alpha
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &FreeElement) -> FreeElement {
        debug_assert!(Arc::ptr_eq(&self.alpha, &other.alpha) || self.alpha == other.alpha);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> FreeElement {
        FreeElement {
            alpha: self.alpha.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &FreeElement) -> FreeElement {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FreeElement) -> FreeElement {
        debug_assert!(Arc::ptr_eq(&self.alpha, &other.alpha) || self.alpha == other.alpha);
        let mut out = FreeElement::zero(self.alpha.clone());
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca.mul(cb));
            }
        }
        out
    }

    pub fn scalar_mul(&self, s: &Scalar) -> FreeElement {
        if s.is_zero() {
            return FreeElement::zero(self.alpha.clone());
        }
        FreeElement {
            alpha: self.alpha.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.mul(s))).collect(),
        }
    }

    pub fn commutator(&self, other: &FreeElement) -> FreeElement {
        self.mul(other).sub(&other.mul(self))
    }

    /// Max word length.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Split into homogeneous components by word length.
    pub fn by_degree(&self) -> BTreeMap<usize, FreeElement> {
        let mut out: BTreeMap<usize, FreeElement> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.len())
                .or_insert_with(|| FreeElement::zero(self.alpha.clone()))
                .add_term(w.clone(), c.clone());
        }
        out
    }

    /// Split into homogeneous components by total level.
    pub fn by_level(&self) -> BTreeMap<u32, FreeElement> {
        let mut out: BTreeMap<u32, FreeElement> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.level(&self.alpha))
                .or_insert_with(|| FreeElement::zero(self.alpha.clone()))
                .add_term(w.clone(), c.clone());
        }
        out
    }

    /// Commutative image: letters of every word sorted.
    pub fn abelianized(&self) -> FreeElement {
        let mut out = FreeElement::zero(self.alpha.clone());
        for (w, c) in &self.terms {
            out.add_term(w.sorted(), c.clone());
        }
        out
    }

    /// Apply a scalar map to every coefficient (used for specialization).
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> crate::error::Result<Scalar>) -> crate::error::Result<FreeElement> {
        let mut out = FreeElement::zero(self.alpha.clone());
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }
}

impl Coeff for FreeElement {
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
        self.scalar_mul(s)
    }
    fn is_zero(&self) -> bool {
        FreeElement::is_zero(self)
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if w.is_empty() {
                write!(f, "({c})")?;
            } else {
                let word = w
                    .0
                    .iter()
                    .map(|&i| self.alpha.symbol(i).name.clone())
                    .collect::<Vec<_>>()
                    .join("*");
                if c.is_one() {
                    write!(f, "{word}")?;
                } else {
                    write!(f, "({c})*{word}")?;
                }
            }
        }
        Ok(())
    }
}

/// All words of exact length `d`, ascending.
pub fn words_of_degree(alpha: &Alphabet, d: usize) -> Vec<Word> {
    let g = alpha.len() as u64;
    let count = g.pow(d as u32);
    let mut out = Vec::with_capacity(count as usize);
    for mut idx in 0..count {
        let mut letters = vec![0u16; d];
        for slot in letters.iter_mut().rev() {
            *slot = (idx % g) as u16;
            idx /= g;
        }
        out.push(Word(letters));
    }
    out
}

/// All words of length ≤ d, by length then lexicographic.
pub fn words_of_degree_at_most(alpha: &Alphabet, d: usize) -> Vec<Word> {
    (0..=d).flat_map(|k| words_of_degree(alpha, k)).collect()
}

/// All words of exact total level `l`, deterministic order.
pub fn words_of_level(alpha: &Alphabet, l: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(alpha: &Alphabet, remaining: u32, stack: &mut Vec<u16>, out: &mut Vec<Word>) {
        if remaining == 0 {
            out.push(Word(stack.clone()));
            return;
        }
        for idx in 0..alpha.len() as u16 {
            let lv = alpha.level(idx);
            if lv <= remaining && lv > 0 {
                stack.push(idx);
                rec(alpha, remaining - lv, stack, out);
                stack.pop();
            }
        }
    }
    rec(alpha, l, &mut stack, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_order_is_graded_lex() {
        let a = Word(vec![0]);
        let b = Word(vec![3]);
        let c = Word(vec![0, 0]);
        assert!(a < b);
        assert!(b < c);
        assert!(Word(vec![0, 3]) < Word(vec![1, 0]));
    }

    #[test]
    fn arithmetic_and_degree() {
        let alpha = Alphabet::matrix("l", 2);
        let x = FreeElement::generator(alpha.clone(), 0);
        let y = FreeElement::generator(alpha.clone(), 3);
        let p = x.mul(&y).sub(&y.mul(&x));
        assert_eq!(p.degree(), 2);
        assert_eq!(p.num_terms(), 2);
        assert!(p.abelianized().is_zero());
        assert!(p.sub(&p).is_zero());
        let q = x.add(&y).mul(&x.add(&y));
        assert_eq!(q.num_terms(), 4);
    }

    #[test]
    fn level_decomposition() {
        let alpha = Alphabet::leveled_matrix("l", 2, 2);
        assert_eq!(alpha.len(), 8);
        // l1_11 has level 1, l2_11 level 2
        let a = FreeElement::generator(alpha.clone(), 0);
        let b = FreeElement::generator(alpha.clone(), 4);
        let s = a.mul(&a).add(&b);
        let by_level = s.by_level();
        assert_eq!(by_level.len(), 1);
        assert!(by_level.contains_key(&2));
        let t = a.add(&b);
        assert_eq!(t.by_level().len(), 2);
    }

    #[test]
    fn word_enumerations() {
        let alpha = Alphabet::matrix("l", 2);
        assert_eq!(words_of_degree(&alpha, 2).len(), 16);
        assert_eq!(words_of_degree_at_most(&alpha, 2).len(), 21);
        let leveled = Alphabet::leveled_matrix("l", 2, 3);
        // level 3 over 4 symbols per level: 4^3 + 2·4^2 + 4 = 100
        assert_eq!(words_of_level(&leveled, 3).len(), 100);
    }
}
