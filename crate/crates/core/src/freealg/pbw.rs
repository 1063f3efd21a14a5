//! PBW normal form in U(gl(N)).
//!
//! Generators m_i^j are ordered row-major by (i, j); the rewrite
//! m_i^j m_k^l → m_k^l m_i^j + m_i^l δ_k^j − m_k^j δ_i^l sorts every word,
//! and terminates because each step lowers (length, inversion count).

use std::sync::Arc;

use super::{Alphabet, FreeElement, Word};
use crate::scalar::Scalar;

/// Letter index of m_i^j in the row-major matrix alphabet (0-based i, j).
fn letter(n: u32, i: u32, j: u32) -> u16 {
    (i * n + j) as u16
}

fn letter_ij(n: u32, idx: u16) -> (u32, u32) {
    ((idx as u32) / n, (idx as u32) % n)
}

/// The unique sorted-word normal form of an element of U(gl(N)) presented
/// on the row-major matrix alphabet.
pub fn normal_form(x: &FreeElement, n: u32) -> FreeElement {
    let alpha: Arc<Alphabet> = x.alphabet().clone();
    debug_assert_eq!(alpha.len() as u32, n * n);
    let mut out = FreeElement::zero(alpha.clone());
    let mut agenda: Vec<(Word, Scalar)> =
        x.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    while let Some((w, c)) = agenda.pop() {
        if c.is_zero() {
            continue;
        }
        match first_descent(&w) {
            None => out.add_term(w, c),
            Some(p) => {
                let a = w.0[p];
                let b = w.0[p + 1];
                let (i, j) = letter_ij(n, a);
                let (k, l) = letter_ij(n, b);
                // m_i^j m_k^l = m_k^l m_i^j + m_i^l δ_k^j − m_k^j δ_i^l
                let mut swapped = w.0.clone();
                swapped.swap(p, p + 1);
                agenda.push((Word(swapped), c.clone()));
                if k == j {
                    let mut merged = w.0.clone();
                    merged[p] = letter(n, i, l);
                    merged.remove(p + 1);
                    agenda.push((Word(merged), c.clone()));
                }
                if i == l {
                    let mut merged = w.0.clone();
                    merged[p] = letter(n, k, j);
                    merged.remove(p + 1);
                    agenda.push((Word(merged), c.neg()));
                }
            }
        }
    }
    out
}

fn first_descent(w: &Word) -> Option<usize> {
    w.0.windows(2).position(|pair| pair[0] > pair[1])
}

/// The defining commutation relation [m_i^j, m_k^l] − (m_i^l δ_k^j − m_k^j δ_i^l)
/// as a free element (0-based indices).
pub fn defining_relation(alpha: &Arc<Alphabet>, n: u32, i: u32, j: u32, k: u32, l: u32) -> FreeElement {
    let m = |a: u32, b: u32| FreeElement::generator(alpha.clone(), letter(n, a, b));
    let mut rel = m(i, j).mul(&m(k, l)).sub(&m(k, l).mul(&m(i, j)));
    if k == j {
        rel = rel.sub(&m(i, l));
    }
    if i == l {
        rel = rel.add(&m(k, j));
    }
    rel
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Alphabet;

    fn gen(alpha: &Arc<Alphabet>, n: u32, i: u32, j: u32) -> FreeElement {
        FreeElement::generator(alpha.clone(), letter(n, i, j))
    }

    #[test]
    fn sorted_words_are_fixed() {
        let alpha = Alphabet::matrix("m", 2);
        let x = gen(&alpha, 2, 0, 0);
        assert_eq!(normal_form(&x, 2), x);
        let sorted = gen(&alpha, 2, 0, 1).mul(&gen(&alpha, 2, 1, 0));
        assert_eq!(normal_form(&sorted, 2), sorted);
    }

    #[test]
    fn straightening_m21_m12() {
        // m_2^1 m_1^2 → m_1^2 m_2^1 + m_2^2 − m_1^1 (0-based: (1,0)(0,1))
        let alpha = Alphabet::matrix("m", 2);
        let x = gen(&alpha, 2, 1, 0).mul(&gen(&alpha, 2, 0, 1));
        let expect = gen(&alpha, 2, 0, 1)
            .mul(&gen(&alpha, 2, 1, 0))
            .add(&gen(&alpha, 2, 1, 1))
            .sub(&gen(&alpha, 2, 0, 0));
        assert_eq!(normal_form(&x, 2), expect);
    }

    #[test]
    fn commutator_of_equal_elements_vanishes() {
        let alpha = Alphabet::matrix("m", 2);
        let x = gen(&alpha, 2, 0, 0);
        assert!(normal_form(&x.commutator(&x), 2).is_zero());
    }

    #[test]
    fn normal_form_is_idempotent_and_kills_relations() {
        let n = 3;
        let alpha = Alphabet::matrix("m", n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let rel = defining_relation(&alpha, n, i, j, k, l);
                        let nf = normal_form(&rel, n);
                        assert!(nf.is_zero(), "relation ({i},{j},{k},{l}) -> {nf}");
                    }
                }
            }
        }
        // idempotence on a scrambled product
        let x = gen(&alpha, n, 2, 1)
            .mul(&gen(&alpha, n, 0, 2))
            .mul(&gen(&alpha, n, 1, 0));
        let nf = normal_form(&x, n);
        assert_eq!(normal_form(&nf, n), nf);
    }

    #[test]
    fn pbw_quotient_dimension_degree_two() {
        // the 16 products m_a m_b rewrite onto the 10 sorted degree-2 words
        let n = 2;
        let alpha = Alphabet::matrix("m", n);
        let mut sorted_words = std::collections::BTreeSet::new();
        for a in 0..4u16 {
            for b in 0..4u16 {
                let p = FreeElement::generator(alpha.clone(), a)
                    .mul(&FreeElement::generator(alpha.clone(), b));
                let nf = normal_form(&p, n);
                for (w, _) in nf.terms() {
                    if w.len() == 2 {
                        sorted_words.insert(w.clone());
                    }
                }
            }
        }
        assert_eq!(sorted_words.len(), 10);
    }
}
