//! The four constant-R algebra presentations: RTT, reflection-equation (RE),
//! its quadratic-linear variant, and U(gl(N)); generating matrices, defining
//! relations as free-algebra components, and overlined copies.

use std::sync::Arc;

use crate::braiding::Braiding;
use crate::error::{Error, Result};
use crate::freealg::{Alphabet, FreeElement, Grading, IdealHandle, RelationSet, Strategy};
use crate::scalar::Scalar;
use crate::tensor::{NcMatrix, SparseOp, TensorOperator};
use crate::DEFAULT_SPECIALIZATION_SEED;

pub use crate::freealg::ideal::Grading as IdealGrading;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    Rtt,
    Re,
    ModifiedRe,
    Ugl,
}

impl AlgebraKind {
    pub fn label(&self) -> &'static str {
        match self {
            AlgebraKind::Rtt => "rtt",
            AlgebraKind::Re => "re",
            AlgebraKind::ModifiedRe => "mre",
            AlgebraKind::Ugl => "ugl",
        }
    }
}

/// Matrix of free-algebra elements (entries of V^(⊗arity) operators).
pub type FreeMatrix = NcMatrix<FreeElement>;

/// Identity matrix over the free algebra.
pub fn nc_identity(alpha: &Arc<Alphabet>, n: u32, arity: u32) -> FreeMatrix {
    let mut out = SparseOp::zero(n, arity);
    for i in 0..n.pow(arity) {
        out.set(i, i, FreeElement::one(alpha.clone()));
    }
    out
}

/// Lift a scalar operator to a constant free matrix.
pub fn nc_from_scalar(alpha: &Arc<Alphabet>, op: &TensorOperator) -> FreeMatrix {
    op.map_entries(|s| FreeElement::constant(alpha.clone(), s.clone()))
}

/// One presented algebra: generating matrix plus the ideal of its defining
/// relations.
#[derive(Debug)]
pub struct AlgebraPresentation {
    kind: AlgebraKind,
    n: u32,
    braiding: Option<Braiding>,
    alphabet: Arc<Alphabet>,
    gen_matrix: FreeMatrix,
    ideal: IdealHandle,
}

impl AlgebraPresentation {
    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn braiding(&self) -> Option<&Braiding> {
        self.braiding.as_ref()
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// The N×N generating matrix (entries are single generators).
    pub fn gen_matrix(&self) -> &FreeMatrix {
        &self.gen_matrix
    }

    pub fn ideal(&self) -> &IdealHandle {
        &self.ideal
    }

    pub fn ideal_mut(&mut self) -> &mut IdealHandle {
        &mut self.ideal
    }

    /// The bi-rank m (degree of the characteristic polynomial); N for U(gl).
    pub fn birank(&self) -> u32 {
        self.braiding.as_ref().map(|b| b.birank()).unwrap_or(self.n)
    }

    /// Coefficient-field q: the Hecke parameter, 1 for involutive/U(gl).
    pub fn q_scalar(&self) -> Scalar {
        self.braiding
            .as_ref()
            .map(|b| b.q_scalar())
            .unwrap_or_else(Scalar::one)
    }

    /// Trace weight matrix: the braiding's D, or the identity for U(gl).
    pub fn trace_matrix(&self) -> TensorOperator {
        self.braiding
            .as_ref()
            .map(|b| b.d().clone())
            .unwrap_or_else(|| TensorOperator::identity(self.n, 1))
    }

    pub fn descriptor(&self) -> String {
        match &self.braiding {
            Some(b) => format!("{} over {}", self.kind.label(), b.descriptor()),
            None => format!("{}({})", self.kind.label(), self.n),
        }
    }
}

fn default_strategy(n: u32) -> Strategy {
    if n <= 2 {
        Strategy::ExactSymbolic
    } else {
        Strategy::RandomSpecialization { seed: DEFAULT_SPECIALIZATION_SEED, trials: 5 }
    }
}

/// Generating matrix as an arity-1 free matrix from a row-major alphabet.
fn generator_matrix(alpha: &Arc<Alphabet>, n: u32) -> FreeMatrix {
    let mut out = SparseOp::zero(n, 1);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, FreeElement::generator(alpha.clone(), (i * n + j) as u16));
        }
    }
    out
}

/// Extract the nonzero components of a relation matrix, ordered by entry.
fn relation_components(m: &FreeMatrix) -> Vec<FreeElement> {
    m.iter().map(|(_, v)| v.clone()).collect()
}

/// Present an algebra from a braiding (RTT, RE, ModifiedRE) or a bare
/// dimension (U(gl(N))).
pub fn present(kind: AlgebraKind, braiding: Option<&Braiding>, n: u32) -> Result<AlgebraPresentation> {
    match kind {
        AlgebraKind::Ugl => present_ugl(n),
        _ => {
            let b = braiding.ok_or_else(|| {
                Error::Internal(format!("{} requires a braiding", kind.label()))
            })?;
            match kind {
                AlgebraKind::Rtt => present_rtt(b),
                AlgebraKind::Re => present_re(b),
                AlgebraKind::ModifiedRe => present_mre(b),
                AlgebraKind::Ugl => unreachable!(),
            }
        }
    }
}

/// RTT: R T₁ T₂ − T₁ T₂ R = 0.
pub fn present_rtt(b: &Braiding) -> Result<AlgebraPresentation> {
    let n = b.n();
    let alpha = Alphabet::matrix("t", n);
    let t = generator_matrix(&alpha, n);
    let t1 = t.embed_single(2, 1)?;
    let t2 = t.embed_single(2, 2)?;
    let r = nc_from_scalar(&alpha, b.r());
    let rel = r.mul(&t1).mul(&t2).sub(&t1.mul(&t2).mul(&r));
    let relset = RelationSet::new(alpha.clone(), relation_components(&rel), Grading::HomogeneousQuadratic);
    Ok(AlgebraPresentation {
        kind: AlgebraKind::Rtt,
        n,
        braiding: Some(b.clone()),
        alphabet: alpha,
        gen_matrix: t,
        ideal: IdealHandle::new(relset, default_strategy(n)),
    })
}

/// RE: R L₁ R L₁ − L₁ R L₁ R = 0.
pub fn present_re(b: &Braiding) -> Result<AlgebraPresentation> {
    let n = b.n();
    let alpha = Alphabet::matrix("l", n);
    let l = generator_matrix(&alpha, n);
    let l1 = l.embed_single(2, 1)?;
    let r = nc_from_scalar(&alpha, b.r());
    let rel = r.mul(&l1).mul(&r).mul(&l1).sub(&l1.mul(&r).mul(&l1).mul(&r));
    let relset = RelationSet::new(alpha.clone(), relation_components(&rel), Grading::HomogeneousQuadratic);
    Ok(AlgebraPresentation {
        kind: AlgebraKind::Re,
        n,
        braiding: Some(b.clone()),
        alphabet: alpha,
        gen_matrix: l,
        ideal: IdealHandle::new(relset, default_strategy(n)),
    })
}

/// Quadratic-linear variant of RE: R ĥL₁ R ĥL₁ − ĥL₁ R ĥL₁ R = R ĥL₁ − ĥL₁ R.
pub fn present_mre(b: &Braiding) -> Result<AlgebraPresentation> {
    let n = b.n();
    let alpha = Alphabet::matrix("hl", n);
    let l = generator_matrix(&alpha, n);
    let l1 = l.embed_single(2, 1)?;
    let r = nc_from_scalar(&alpha, b.r());
    let quad = r.mul(&l1).mul(&r).mul(&l1).sub(&l1.mul(&r).mul(&l1).mul(&r));
    let lin = r.mul(&l1).sub(&l1.mul(&r));
    let rel = quad.sub(&lin);
    let relset = RelationSet::new(alpha.clone(), relation_components(&rel), Grading::QuadraticLinear);
    Ok(AlgebraPresentation {
        kind: AlgebraKind::ModifiedRe,
        n,
        braiding: Some(b.clone()),
        alphabet: alpha,
        gen_matrix: l,
        ideal: IdealHandle::new(relset, default_strategy(n)),
    })
}

/// U(gl(N)): P M₁ P M₁ − M₁ P M₁ P = P M₁ − M₁ P.
pub fn present_ugl(n: u32) -> Result<AlgebraPresentation> {
    let alpha = Alphabet::matrix("m", n);
    let m = generator_matrix(&alpha, n);
    let m1 = m.embed_single(2, 1)?;
    let p = nc_from_scalar(&alpha, &TensorOperator::flip(n));
    let quad = p.mul(&m1).mul(&p).mul(&m1).sub(&m1.mul(&p).mul(&m1).mul(&p));
    let lin = p.mul(&m1).sub(&m1.mul(&p));
    let rel = quad.sub(&lin);
    let relset = RelationSet::new(alpha.clone(), relation_components(&rel), Grading::QuadraticLinear);
    Ok(AlgebraPresentation {
        kind: AlgebraKind::Ugl,
        n,
        braiding: None,
        alphabet: alpha,
        gen_matrix: m,
        ideal: IdealHandle::new(relset, default_strategy(n)),
    })
}

/// The overlined copy of the generating matrix at slot k inside V^(⊗arity):
/// the base copy at position 1, conjugated up by R_{k−1} … R₁-style steps:
/// X_1̄ = X₁, X_k̄ = R_{k−1} X_{(k−1)‾} R⁻¹_{k−1}.
pub fn overlined_copy(
    gen: &FreeMatrix,
    b: &Braiding,
    k: u32,
    arity: u32,
) -> Result<FreeMatrix> {
    if k < 1 || k > arity {
        return Err(Error::Position(format!("overlined slot {k} with arity {arity}")));
    }
    let alpha_gen = match gen.iter().next() {
        Some((_, v)) => v.alphabet().clone(),
        None => return Err(Error::Internal("empty generating matrix".into())),
    };
    let mut acc = gen.embed_single(arity, 1)?;
    for step in 2..=k {
        let r = nc_from_scalar(&alpha_gen, &b.r().embed_adjacent(arity, step - 1)?);
        let r_inv = nc_from_scalar(&alpha_gen, &b.r_inv().embed_adjacent(arity, step - 1)?);
        acc = r.mul(&acc).mul(&r_inv);
    }
    Ok(acc)
}

/// Plain embedded copy X_k = I⊗…⊗X⊗…⊗I (used for RTT and U(gl)).
pub fn plain_copy(gen: &FreeMatrix, k: u32, arity: u32) -> Result<FreeMatrix> {
    gen.embed_single(arity, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{builtin_flip, builtin_hecke_standard};
    use crate::freealg::pbw;
    use crate::freealg::SliceKey;

    #[test]
    fn re_over_flip_relations_are_commutators() {
        let b = builtin_flip(2).unwrap();
        let a = present_re(&b).unwrap();
        // with the flip every nonzero component abelianizes to zero
        for r in &a.ideal().relations().relations {
            assert!(r.abelianized().is_zero());
            assert_eq!(r.degree(), 2);
        }
        // and the components span all pairwise commutators: rank C(4,2) = 6
        assert_eq!(a.ideal().component_rank(SliceKey::Homogeneous(2)).unwrap(), 6);
    }

    #[test]
    fn re_standard_n2_component_rank_six() {
        // free degree-2 slice has dimension 16; the quotient slice keeps the
        // classical dimension 10 = dim Sym²(gl(2)).
        let b = builtin_hecke_standard(2).unwrap();
        let a = present_re(&b).unwrap();
        assert_eq!(a.ideal().component_rank(SliceKey::Homogeneous(2)).unwrap(), 6);
    }

    #[test]
    fn rtt_standard_n2_component_rank_six() {
        let b = builtin_hecke_standard(2).unwrap();
        let a = present_rtt(&b).unwrap();
        assert_eq!(a.ideal().component_rank(SliceKey::Homogeneous(2)).unwrap(), 6);
    }

    #[test]
    fn ugl_components_match_footnote_relations() {
        // component ((a,b),(c,d)) equals the commutation relation with
        // (i,j,k,l) = (b,d,a,c)
        let n = 2u32;
        let a = present_ugl(n).unwrap();
        let alpha = a.alphabet().clone();
        let m1 = a.gen_matrix().embed_single(2, 1).unwrap();
        let p = nc_from_scalar(&alpha, &TensorOperator::flip(n));
        let rel = p.mul(&m1).mul(&p).mul(&m1)
            .sub(&m1.mul(&p).mul(&m1).mul(&p))
            .sub(&p.mul(&m1).sub(&m1.mul(&p)));
        for (&(row, col), v) in rel.iter() {
            let (aa, bb) = (row / n, row % n);
            let (cc, dd) = (col / n, col % n);
            let expect = pbw::defining_relation(&alpha, n, bb, dd, aa, cc);
            assert_eq!(v, &expect, "component ({aa},{bb}),({cc},{dd})");
        }
        // every relation has PBW normal form zero
        for r in &a.ideal().relations().relations {
            assert!(pbw::normal_form(r, n).is_zero());
        }
    }

    #[test]
    fn ugl_filtration_rank_and_pbw_dimension() {
        let a = present_ugl(2).unwrap();
        // filtration ≤ 2: span of the relations alone has rank 6, so the
        // quotient slice has dimension 21 − 6 = 15 = 1 + 4 + 10 (PBW)
        assert_eq!(a.ideal().component_rank(SliceKey::Filtration(2)).unwrap(), 6);
    }

    #[test]
    fn re_flip_quotient_dimensions_are_classical() {
        // dim of the degree-d quotient slice equals dim Sym^d(gl(N)):
        // C(N² + d − 1, d), for d <= 3 and N <= 3
        let sym_dim = |vars: usize, d: usize| -> usize {
            // C(vars + d − 1, d)
            let mut num = 1usize;
            let mut den = 1usize;
            for i in 0..d {
                num *= vars + d - 1 - i;
                den *= i + 1;
            }
            num / den
        };
        for n in [2u32, 3] {
            let b = builtin_flip(n).unwrap();
            let a = present_re(&b).unwrap();
            let g = (n * n) as usize;
            for d in [2usize, 3] {
                let free_dim = g.pow(d as u32);
                let rank = a.ideal().component_rank(SliceKey::Homogeneous(d)).unwrap();
                assert_eq!(
                    free_dim - rank,
                    sym_dim(g, d),
                    "quotient dimension at degree {d}, N = {n}"
                );
            }
        }
    }

    #[test]
    fn overlined_copy_base_and_flip() {
        let b = builtin_flip(2).unwrap();
        let a = present_re(&b).unwrap();
        let l1 = overlined_copy(a.gen_matrix(), &b, 1, 2).unwrap();
        assert_eq!(l1, a.gen_matrix().embed_single(2, 1).unwrap());
        // over the flip, the second overlined copy is the plain I⊗L
        let l2 = overlined_copy(a.gen_matrix(), &b, 2, 2).unwrap();
        assert_eq!(l2, a.gen_matrix().embed_single(2, 2).unwrap());
    }

    #[test]
    fn re_relations_in_overlined_form() {
        // R₁ L_1̄ L_2̄ − L_1̄ L_2̄ R₁ reproduces the defining components
        let b = builtin_hecke_standard(2).unwrap();
        let a = present_re(&b).unwrap();
        let alpha = a.alphabet().clone();
        let l1 = overlined_copy(a.gen_matrix(), &b, 1, 2).unwrap();
        let l2 = overlined_copy(a.gen_matrix(), &b, 2, 2).unwrap();
        let r = nc_from_scalar(&alpha, b.r());
        let lhs = r.mul(&l1).mul(&l2).sub(&l1.mul(&l2).mul(&r));
        // each entry must be a member of the RE ideal (each entry is a
        // scalar combination of the defining components)
        for (_, v) in lhs.iter() {
            assert!(a.ideal().membership(v).unwrap().is_in());
        }
    }

    #[test]
    fn propagated_relation_identity_arity_three() {
        // R_k L_k̄ L_{(k+1)‾} − L_k̄ L_{(k+1)‾} R_k ∈ ideal for k = 1, 2
        let b = builtin_hecke_standard(2).unwrap();
        let a = present_re(&b).unwrap();
        let alpha = a.alphabet().clone();
        for k in 1..=2u32 {
            let lk = overlined_copy(a.gen_matrix(), &b, k, 3).unwrap();
            let lk1 = overlined_copy(a.gen_matrix(), &b, k + 1, 3).unwrap();
            let r = nc_from_scalar(&alpha, &b.r().embed_adjacent(3, k).unwrap());
            let lhs = r.mul(&lk).mul(&lk1).sub(&lk.mul(&lk1).mul(&r));
            for (_, v) in lhs.iter() {
                assert!(a.ideal().membership(v).unwrap().is_in(), "k = {k}");
            }
        }
    }

    #[test]
    fn mre_degenerates_to_ugl_at_q_one() {
        // substituting q → 1 into the relation-matrix coefficients turns the
        // quadratic-linear RE variant into the U(gl(N)) relations, entrywise
        let n = 2u32;
        let b = builtin_hecke_standard(n).unwrap();
        let a = present_mre(&b).unwrap();
        let u = present_ugl(n).unwrap();
        let alpha = a.alphabet().clone();
        let l1 = a.gen_matrix().embed_single(2, 1).unwrap();
        let r = nc_from_scalar(&alpha, b.r());
        let rel = r.mul(&l1).mul(&r).mul(&l1)
            .sub(&l1.mul(&r).mul(&l1).mul(&r))
            .sub(&r.mul(&l1).sub(&l1.mul(&r)));

        let ualpha = u.alphabet().clone();
        let m1 = u.gen_matrix().embed_single(2, 1).unwrap();
        let p = nc_from_scalar(&ualpha, &TensorOperator::flip(n));
        let urel = p.mul(&m1).mul(&p).mul(&m1)
            .sub(&m1.mul(&p).mul(&m1).mul(&p))
            .sub(&p.mul(&m1).sub(&m1.mul(&p)));

        let one = num_rational::BigRational::from_integer(1.into());
        let mut asn = std::collections::BTreeMap::new();
        asn.insert(crate::scalar::vars::q_var(), one);
        for row in 0..(n * n) {
            for col in 0..(n * n) {
                let lim = rel
                    .get(row, col)
                    .map(|v| v.map_coeffs(|c| c.eval_unguarded(&asn)).unwrap());
                let expect = urel.get(row, col);
                // compare by word indices (alphabets differ only in names)
                let lim_terms: Vec<_> = lim
                    .iter()
                    .flat_map(|v| v.terms().map(|(w, c)| (w.clone(), c.clone())))
                    .collect();
                let exp_terms: Vec<_> = expect
                    .iter()
                    .flat_map(|v| v.terms().map(|(w, c)| (w.clone(), c.clone())))
                    .collect();
                assert_eq!(lim_terms, exp_terms, "component ({row},{col})");
            }
        }
    }
}
