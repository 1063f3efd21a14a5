//! Degree-filtered two-sided ideals and exact membership.
//!
//! A slice of the ideal is the row space of { w₁ · r · w₂ } restricted to a
//! finite word window: the exact homogeneous component for quadratic
//! relation sets, the degree-≤-d filtration for quadratic-linear sets, and
//! the exact level component for level-graded sets. Membership reduces the
//! queried element against the cached reduced echelon basis of the slice.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_rational::BigRational;

use super::{words_of_degree, words_of_degree_at_most, words_of_level, Alphabet, FreeElement, Word};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::rng::SplitMix64;
use crate::scalar::{vars, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grading {
    HomogeneousQuadratic,
    QuadraticLinear,
    GradedByLevel,
}

/// The defining relations of one algebra.
#[derive(Debug, Clone)]
pub struct RelationSet {
    pub alphabet: Arc<Alphabet>,
    pub relations: Vec<FreeElement>,
    pub grading: Grading,
}

impl RelationSet {
    pub fn new(alphabet: Arc<Alphabet>, relations: Vec<FreeElement>, grading: Grading) -> Self {
        debug_assert!(relations.iter().all(|r| !r.is_zero()));
        RelationSet { alphabet, relations, grading }
    }
}

/// Membership strategy: exact elimination over Q(q), or the same reduction
/// at seeded rational specializations of q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    ExactSymbolic,
    RandomSpecialization { seed: u64, trials: u32 },
}

impl Strategy {
    pub fn label(&self) -> String {
        match self {
            Strategy::ExactSymbolic => "exact-symbolic".to_string(),
            Strategy::RandomSpecialization { seed, trials } => {
                format!("random-specialization(seed={seed},trials={trials})")
            }
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Strategy::ExactSymbolic => None,
            Strategy::RandomSpecialization { seed, .. } => Some(*seed),
        }
    }
}

/// Key of one cached slice basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SliceKey {
    /// Homogeneous degree-d component (quadratic sets).
    Homogeneous(usize),
    /// Degree-≤-d filtration component (quadratic-linear sets).
    Filtration(usize),
    /// Level-≤-l filtration component (leveled alphabets; current-algebra
    /// relations over a rational Baxterization mix adjacent levels, so the
    /// level slices are filtrations too).
    Level(u32),
}

/// Cache key: the slice plus the specialization point (canonical string
/// form of the trial value of q), if any.
type SliceCache = Mutex<HashMap<(SliceKey, Option<String>), Arc<SliceBasis>>>;

#[derive(Debug)]
struct SliceBasis {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    echelon: Echelon,
}

/// Outcome of a membership query.
#[derive(Debug, Clone)]
pub enum Membership {
    InIdeal,
    NotInIdeal { witness: String },
}

impl Membership {
    pub fn is_in(&self) -> bool {
        matches!(self, Membership::InIdeal)
    }
}

/// Degree-filtered ideal-membership engine with cached echelon bases.
#[derive(Debug)]
pub struct IdealHandle {
    relset: RelationSet,
    strategy: Strategy,
    monomial_cap: usize,
    cache: SliceCache,
}

pub const DEFAULT_MONOMIAL_CAP: usize = 200_000;

impl IdealHandle {
    pub fn new(relset: RelationSet, strategy: Strategy) -> Self {
        IdealHandle {
            relset,
            strategy,
            monomial_cap: DEFAULT_MONOMIAL_CAP,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relset
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn set_strategy(&mut self, s: Strategy) {
        self.strategy = s;
    }

    pub fn set_monomial_cap(&mut self, cap: usize) {
        self.monomial_cap = cap;
    }

    /// The natural slice key for an element, per the relation grading.
    pub fn slice_for(&self, x: &FreeElement) -> SliceKey {
        match self.relset.grading {
            Grading::HomogeneousQuadratic => SliceKey::Homogeneous(x.degree()),
            // +1 captures filtration elements whose defining products have a
            // cancelling top degree.
            Grading::QuadraticLinear => SliceKey::Filtration(x.degree() + 1),
            Grading::GradedByLevel => {
                SliceKey::Level(x.by_level().keys().max().copied().unwrap_or(0))
            }
        }
    }

    fn window_words(&self, key: SliceKey) -> Result<Vec<Word>> {
        let alpha = &self.relset.alphabet;
        let words = match key {
            SliceKey::Homogeneous(d) => words_of_degree(alpha, d),
            SliceKey::Filtration(d) => words_of_degree_at_most(alpha, d),
            SliceKey::Level(l) => (0..=l).flat_map(|k| words_of_level(alpha, k)).collect(),
        };
        if words.len() > self.monomial_cap {
            return Err(Error::Resource(format!(
                "slice {key:?} has {} monomials, cap is {}",
                words.len(),
                self.monomial_cap
            )));
        }
        Ok(words)
    }

    /// All products w₁·r·w₂ that meet the slice window.
    fn slice_products(&self, key: SliceKey) -> Result<Vec<FreeElement>> {
        let alpha = &self.relset.alphabet;
        let mut out = Vec::new();
        match key {
            SliceKey::Homogeneous(d) => {
                for r in &self.relset.relations {
                    let rd = r.degree();
                    if rd > d {
                        continue;
                    }
                    for left in 0..=(d - rd) {
                        let right = d - rd - left;
                        for w1 in words_of_degree(alpha, left) {
                            for w2 in words_of_degree(alpha, right) {
                                out.push(sandwich(alpha, &w1, r, &w2));
                            }
                        }
                    }
                }
            }
            SliceKey::Filtration(d) => {
                for r in &self.relset.relations {
                    let rd = r.degree();
                    if rd > d {
                        continue;
                    }
                    for total in 0..=(d - rd) {
                        for left in 0..=total {
                            let right = total - left;
                            for w1 in words_of_degree(alpha, left) {
                                for w2 in words_of_degree(alpha, right) {
                                    out.push(sandwich(alpha, &w1, r, &w2));
                                }
                            }
                        }
                    }
                }
            }
            SliceKey::Level(l) => {
                for r in &self.relset.relations {
                    let rl = r.by_level().keys().max().copied().unwrap_or(0);
                    if rl > l {
                        continue;
                    }
                    for budget in 0..=(l - rl) {
                        for left_level in 0..=budget {
                            let right_level = budget - left_level;
                            for w1 in words_of_level(alpha, left_level) {
                                for w2 in words_of_level(alpha, right_level) {
                                    out.push(sandwich(alpha, &w1, r, &w2));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn build_slice(&self, key: SliceKey, trial_q: Option<&BigRational>) -> Result<SliceBasis> {
        let words = self.window_words(key)?;
        let index: HashMap<Word, usize> =
            words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let mut echelon = Echelon::new();
        for p in self.slice_products(key)? {
            let p = match trial_q {
                None => p,
                Some(qv) => {
                    let mut asn = BTreeMap::new();
                    asn.insert(vars::q_var(), qv.clone());
                    p.map_coeffs(|c| c.specialize(&asn))?
                }
            };
            let mut row: Vec<(usize, Scalar)> = Vec::with_capacity(p.num_terms());
            for (w, c) in p.terms() {
                let col = *index.get(w).ok_or_else(|| {
                    Error::Internal(format!("word outside slice window {key:?}"))
                })?;
                row.push((col, c.clone()));
            }
            row.sort_by_key(|(j, _)| *j);
            echelon.insert(row);
        }
        Ok(SliceBasis { words, index, echelon })
    }

    fn slice(&self, key: SliceKey, trial: Option<&BigRational>) -> Result<Arc<SliceBasis>> {
        let cache_key = (key, trial.map(|qv| format!("{}/{}", qv.numer(), qv.denom())));
        {
            let cache = self.cache.lock().unwrap();
            if let Some(b) = cache.get(&cache_key) {
                return Ok(b.clone());
            }
        }
        let built = Arc::new(self.build_slice(key, trial)?);
        let mut cache = self.cache.lock().unwrap();
        Ok(cache.entry(cache_key).or_insert(built).clone())
    }

    /// Rank of the slice (dimension of the ideal's window component).
    pub fn component_rank(&self, key: SliceKey) -> Result<usize> {
        Ok(self.slice(key, None)?.echelon.rank())
    }

    /// Row-reduced basis of the slice, as free elements.
    pub fn ideal_component(&self, key: SliceKey) -> Result<Vec<FreeElement>> {
        let basis = self.slice(key, None)?;
        let alpha = self.relset.alphabet.clone();
        Ok(basis
            .echelon
            .rows()
            .map(|row| {
                FreeElement::from_terms(
                    alpha.clone(),
                    row.iter().map(|(j, c)| (basis.words[*j].clone(), c.clone())),
                )
            })
            .collect())
    }

    /// Membership with the handle's default strategy.
    pub fn membership(&self, x: &FreeElement) -> Result<Membership> {
        self.membership_with(x, self.strategy)
    }

    /// Membership at the natural slice of `x` with an explicit strategy.
    pub fn membership_with(&self, x: &FreeElement, strategy: Strategy) -> Result<Membership> {
        self.membership_at(x, self.slice_for(x), strategy)
    }

    /// Membership against a specific slice.
    pub fn membership_at(
        &self,
        x: &FreeElement,
        key: SliceKey,
        strategy: Strategy,
    ) -> Result<Membership> {
        if x.is_zero() {
            return Ok(Membership::InIdeal);
        }
        // Homogeneous ideals decompose; check each degree component against
        // its own slice. The filtration slices handle mixed elements whole.
        if self.relset.grading == Grading::HomogeneousQuadratic {
            let parts = x.by_degree();
            if parts.len() > 1 {
                for (d, part) in parts {
                    match self.membership_at(&part, SliceKey::Homogeneous(d), strategy)? {
                        Membership::InIdeal => {}
                        out => return Ok(out),
                    }
                }
                return Ok(Membership::InIdeal);
            }
        }

        match strategy {
            Strategy::ExactSymbolic => {
                let basis = self.slice(key, None)?;
                let remainder = reduce_element(&basis, x, None)?;
                Ok(match remainder {
                    None => Membership::InIdeal,
                    Some(rem) => Membership::NotInIdeal { witness: rem.to_string() },
                })
            }
            Strategy::RandomSpecialization { seed, trials } => {
                let mut gen = SplitMix64::new(seed);
                let mut done = 0u32;
                let mut trial_idx = 0u32;
                while done < trials {
                    let qv = gen.next_q_value();
                    trial_idx += 1;
                    if trial_idx > trials + 64 {
                        return Err(Error::Internal(
                            "could not find enough pole-free specialization points".into(),
                        ));
                    }
                    let mut asn = BTreeMap::new();
                    asn.insert(vars::q_var(), qv.clone());
                    let xq = match x.map_coeffs(|c| c.specialize(&asn)) {
                        Ok(v) => v,
                        Err(Error::Pole(_)) => continue,
                        Err(e) => return Err(e),
                    };
                    let basis = match self.slice(key, Some(&qv)) {
                        Ok(b) => b,
                        Err(Error::Pole(_)) => continue,
                        Err(e) => return Err(e),
                    };
                    if let Some(rem) = reduce_element(&basis, &xq, Some(&qv))? {
                        return Ok(Membership::NotInIdeal {
                            witness: format!(
                                "at q = {}/{}: {}",
                                qv.numer(),
                                qv.denom(),
                                rem
                            ),
                        });
                    }
                    done += 1;
                }
                Ok(Membership::InIdeal)
            }
        }
    }
}

fn sandwich(alpha: &Arc<Alphabet>, w1: &Word, r: &FreeElement, w2: &Word) -> FreeElement {
    FreeElement::from_terms(
        alpha.clone(),
        r.terms()
            .map(|(w, c)| (w1.concat(w).concat(w2), c.clone())),
    )
}

fn reduce_element(
    basis: &SliceBasis,
    x: &FreeElement,
    _trial: Option<&BigRational>,
) -> Result<Option<FreeElement>> {
    let mut row: Vec<(usize, Scalar)> = Vec::with_capacity(x.num_terms());
    for (w, c) in x.terms() {
        let col = *basis.index.get(w).ok_or_else(|| {
            Error::Internal(format!("queried element leaves the slice window: word {w:?}"))
        })?;
        row.push((col, c.clone()));
    }
    row.sort_by_key(|(j, _)| *j);
    let rem = basis.echelon.reduce(row);
    if rem.is_empty() {
        Ok(None)
    } else {
        Ok(Some(FreeElement::from_terms(
            x.alphabet().clone(),
            rem.into_iter().map(|(j, c)| (basis.words[j].clone(), c)),
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Alphabet;

    fn commutator_relations(n: u32) -> RelationSet {
        // the commutative quotient: [x_a, x_b] for a < b
        let alpha = Alphabet::matrix("x", n);
        let mut rels = Vec::new();
        for a in 0..alpha.len() as u16 {
            for b in (a + 1)..alpha.len() as u16 {
                let xa = FreeElement::generator(alpha.clone(), a);
                let xb = FreeElement::generator(alpha.clone(), b);
                rels.push(xa.commutator(&xb));
            }
        }
        RelationSet::new(alpha, rels, Grading::HomogeneousQuadratic)
    }

    #[test]
    fn relations_are_members_generators_are_not() {
        let rs = commutator_relations(2);
        let alpha = rs.alphabet.clone();
        let h = IdealHandle::new(rs, Strategy::ExactSymbolic);
        let r0 = h.relations().relations[0].clone();
        assert!(h.membership(&r0).unwrap().is_in());
        let g = FreeElement::generator(alpha, 0);
        assert!(!h.membership(&g).unwrap().is_in());
    }

    #[test]
    fn commutator_ideal_degree_two_rank() {
        // span{[x_a, x_b]} has rank C(4,2) = 6 at degree 2 for 4 letters
        let rs = commutator_relations(2);
        let h = IdealHandle::new(rs, Strategy::ExactSymbolic);
        assert_eq!(h.component_rank(SliceKey::Homogeneous(2)).unwrap(), 6);
        // quotient dimension 16 − 6 = 10 = dim Sym²
        let basis = h.ideal_component(SliceKey::Homogeneous(2)).unwrap();
        assert_eq!(basis.len(), 6);
    }

    #[test]
    fn membership_is_linear_and_two_sided() {
        let rs = commutator_relations(2);
        let alpha = rs.alphabet.clone();
        let h = IdealHandle::new(rs, Strategy::ExactSymbolic);
        let r0 = h.relations().relations[0].clone();
        let r1 = h.relations().relations[1].clone();
        let combo = r0.scalar_mul(&Scalar::q()).add(&r1.scalar_mul(&Scalar::from_int(-3)));
        assert!(h.membership(&combo).unwrap().is_in());
        for g in 0..4u16 {
            let gen = FreeElement::generator(alpha.clone(), g);
            assert!(h.membership(&gen.mul(&r0)).unwrap().is_in());
            assert!(h.membership(&r0.mul(&gen)).unwrap().is_in());
        }
        // a degree-3 element whose abelianization is nonzero is not a member
        let x = FreeElement::generator(alpha.clone(), 0);
        let cube = x.mul(&x).mul(&x);
        assert!(!h.membership(&cube).unwrap().is_in());
    }

    #[test]
    fn specialization_strategy_agrees_with_exact() {
        let rs = commutator_relations(2);
        let alpha = rs.alphabet.clone();
        let h = IdealHandle::new(rs, Strategy::ExactSymbolic);
        let x = FreeElement::generator(alpha.clone(), 1);
        let y = FreeElement::generator(alpha.clone(), 2);
        let member = x.commutator(&y).scalar_mul(&Scalar::q().pow(-2));
        let random = Strategy::RandomSpecialization { seed: 11, trials: 3 };
        assert!(h.membership_with(&member, random).unwrap().is_in());
        let non = x.mul(&y);
        assert!(!h.membership_with(&non, random).unwrap().is_in());
    }

    #[test]
    fn resource_cap_triggers() {
        let rs = commutator_relations(2);
        let mut h = IdealHandle::new(rs, Strategy::ExactSymbolic);
        h.set_monomial_cap(10);
        assert!(matches!(
            h.component_rank(SliceKey::Homogeneous(2)),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn mixed_degree_membership_decomposes() {
        let rs = commutator_relations(2);
        let alpha = rs.alphabet.clone();
        let h = IdealHandle::new(rs, Strategy::ExactSymbolic);
        let x = FreeElement::generator(alpha.clone(), 0);
        let y = FreeElement::generator(alpha.clone(), 1);
        let c2 = x.commutator(&y);
        let c3 = x.mul(&c2).sub(&c2.mul(&x)).add(&c2.mul(&x)); // degree-3 member
        let mixed = c2.add(&c3);
        assert!(h.membership(&mixed).unwrap().is_in());
    }
}
