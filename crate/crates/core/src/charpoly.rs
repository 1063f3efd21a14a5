//! Quantum symmetric functions and characteristic polynomials for the
//! constant-R algebras, with the verification drivers for the
//! Cayley-Hamilton identities, coefficient centrality, the power-sum /
//! quantum-power simplifications, and power-sum commutativity.

use std::time::Instant;

use crate::algebra::{nc_from_scalar, nc_identity, overlined_copy, plain_copy, AlgebraKind, AlgebraPresentation, FreeMatrix};
use crate::error::{Error, Result};
use crate::freealg::{pbw, FreeElement, Membership, Strategy};
use crate::report::{ReportItem, Verdict, VerificationReport};
use crate::scalar::Scalar;
use crate::skewsym;
use crate::tensor::TensorOperator;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymKind {
    Elementary,
    PowerSum,
}

/// A computed symmetric element of one presentation.
#[derive(Debug, Clone)]
pub struct SymmetricElement {
    pub kind: SymKind,
    pub k: u32,
    pub value: FreeElement,
}

/// The slot-k copy of the generating matrix used inside traces: overlined
/// (R-conjugated) for RE-type algebras, plain embedding for RTT and U(gl).
fn slot_copy(a: &AlgebraPresentation, k: u32, arity: u32) -> Result<FreeMatrix> {
    match a.kind() {
        AlgebraKind::Re | AlgebraKind::ModifiedRe => {
            overlined_copy(a.gen_matrix(), a.braiding().unwrap(), k, arity)
        }
        AlgebraKind::Rtt => plain_copy(a.gen_matrix(), k, arity),
        AlgebraKind::Ugl => plain_copy(a.gen_matrix(), k, arity),
    }
}

/// Skew-symmetrizer to use with a presentation: the braiding's tower, or the
/// classical (flip, q = 1) tower for U(gl).
fn symmetrizer(a: &AlgebraPresentation, k: u32) -> Result<TensorOperator> {
    match a.braiding() {
        Some(b) => skewsym::skew_symmetrizer(b, k),
        None => {
            let flip = crate::braiding::builtin_flip(a.n())?;
            skewsym::skew_symmetrizer(&flip, k)
        }
    }
}

/// e_k = Tr_{R(1..k)}(A^(k) X_1̄ … X_k̄), with e_0 = 1.
pub fn elementary_symmetric(a: &AlgebraPresentation, k: u32) -> Result<SymmetricElement> {
    let alpha = a.alphabet().clone();
    if k == 0 {
        return Ok(SymmetricElement { kind: SymKind::Elementary, k, value: FreeElement::one(alpha) });
    }
    let ak = symmetrizer(a, k)?;
    if ak.is_zero() {
        return Ok(SymmetricElement { kind: SymKind::Elementary, k, value: FreeElement::zero(alpha) });
    }
    let mut prod = nc_from_scalar(&alpha, &ak);
    for slot in 1..=k {
        prod = prod.mul(&slot_copy(a, slot, k)?);
    }
    let positions: Vec<u32> = (1..=k).collect();
    let traced = prod.r_trace(&positions, &a.trace_matrix())?;
    let value = traced.as_single().cloned().unwrap_or_else(|| FreeElement::zero(alpha));
    Ok(SymmetricElement { kind: SymKind::Elementary, k, value })
}

/// p_k = Tr_{R(1..k)}(R_{k−1} … R₁ X_1̄ … X_k̄).
pub fn power_sum(a: &AlgebraPresentation, k: u32) -> Result<SymmetricElement> {
    if k < 1 {
        return Err(Error::Position("power sums need k >= 1".into()));
    }
    let alpha = a.alphabet().clone();
    let r = match a.braiding() {
        Some(b) => b.r().clone(),
        None => TensorOperator::flip(a.n()),
    };
    let mut prod = nc_identity(&alpha, a.n(), k);
    for i in (1..k).rev() {
        prod = prod.mul(&nc_from_scalar(&alpha, &r.embed_adjacent(k, i)?));
    }
    for slot in 1..=k {
        prod = prod.mul(&slot_copy(a, slot, k)?);
    }
    let positions: Vec<u32> = (1..=k).collect();
    let traced = prod.r_trace(&positions, &a.trace_matrix())?;
    let value = traced.as_single().cloned().unwrap_or_else(|| FreeElement::zero(alpha));
    Ok(SymmetricElement { kind: SymKind::PowerSum, k, value })
}

/// p_k as Tr_R(X^k): the simplified route available in RE-type algebras.
pub fn power_sum_via_trace(a: &AlgebraPresentation, k: u32) -> Result<SymmetricElement> {
    let alpha = a.alphabet().clone();
    let mut power = a.gen_matrix().clone();
    for _ in 1..k {
        power = power.mul(a.gen_matrix());
    }
    let traced = power
        .lmul_scalar_op(&a.trace_matrix())
        .r_trace(&[1], &TensorOperator::identity(a.n(), 1))?;
    let value = traced.as_single().cloned().unwrap_or_else(|| FreeElement::zero(alpha));
    Ok(SymmetricElement { kind: SymKind::PowerSum, k, value })
}

/// Quantum power X^[k]: the partial R-trace over positions 2..k of the
/// ordered product of slot copies against the descending braid string
/// R_{k−1} … R₁, an N×N matrix; X^[0] = I, X^[1] = X.
///
/// The braid string contracts on the trace side of the copies (for the full
/// trace the two placements coincide; only this one reduces quantum powers
/// of RE matrices to ordinary powers).
pub fn quantum_power(a: &AlgebraPresentation, k: u32) -> Result<FreeMatrix> {
    let alpha = a.alphabet().clone();
    if k == 0 {
        return Ok(nc_identity(&alpha, a.n(), 1));
    }
    let r = match a.braiding() {
        Some(b) => b.r().clone(),
        None => TensorOperator::flip(a.n()),
    };
    let mut prod = nc_identity(&alpha, a.n(), k);
    for slot in 1..=k {
        prod = prod.mul(&slot_copy(a, slot, k)?);
    }
    for i in (1..k).rev() {
        prod = prod.mul(&nc_from_scalar(&alpha, &r.embed_adjacent(k, i)?));
    }
    let positions: Vec<u32> = (2..=k).collect();
    prod.r_trace(&positions, &a.trace_matrix())
}

/// Ordinary matrix power X^k of the generating matrix.
pub fn matrix_power(a: &AlgebraPresentation, k: u32) -> FreeMatrix {
    let alpha = a.alphabet().clone();
    let mut power = nc_identity(&alpha, a.n(), 1);
    for _ in 0..k {
        power = power.mul(a.gen_matrix());
    }
    power
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharPolyVariant {
    /// Q(t) = Σ (−q)^k t^(m−k) e_k(L) for the RE algebra.
    ReQ,
    /// Monic-normalized determinant-style polynomial of the quadratic-linear
    /// variant, with argument shifts (q² t − q), … down the factors.
    MreQhat,
    /// Classical-shift polynomial of U(gl(N)) with factors (t − j + 1)I − M_j.
    UglQcal,
}

/// A characteristic polynomial with free-algebra coefficients, stored by
/// ascending power of t; monic after normalization.
#[derive(Debug, Clone)]
pub struct CharacteristicPolynomial {
    pub variant: CharPolyVariant,
    pub coeffs: Vec<FreeElement>,
    /// Scalar leading coefficient before monic normalization.
    pub leading_before_normalization: Scalar,
}

impl CharacteristicPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs
            .last()
            .map(|c| {
                c.num_terms() == 1
                    && c.terms().next().map(|(w, s)| w.is_empty() && s.is_one()).unwrap_or(false)
            })
            .unwrap_or(false)
    }

    /// Substitute the generating matrix, powers on the left and coefficients
    /// multiplied on the right: Σ X^j · c_j.
    pub fn evaluate_right(&self, a: &AlgebraPresentation) -> FreeMatrix {
        let mut acc: FreeMatrix = crate::tensor::SparseOp::zero(a.n(), 1);
        for (j, c) in self.coeffs.iter().enumerate() {
            let pw = matrix_power(a, j as u32);
            acc = acc.add(&mul_free_right(&pw, c));
        }
        acc
    }

    /// Same with coefficients multiplied on the left: Σ c_j · X^j.
    pub fn evaluate_left(&self, a: &AlgebraPresentation) -> FreeMatrix {
        let mut acc: FreeMatrix = crate::tensor::SparseOp::zero(a.n(), 1);
        for (j, c) in self.coeffs.iter().enumerate() {
            let pw = matrix_power(a, j as u32);
            acc = acc.add(&mul_free_left(&pw, c));
        }
        acc
    }
}

impl std::fmt::Display for CharacteristicPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Entry-wise right multiplication by a free element.
pub fn mul_free_right(m: &FreeMatrix, c: &FreeElement) -> FreeMatrix {
    m.map_entries(|e| e.mul(c))
}

/// Entry-wise left multiplication by a free element.
pub fn mul_free_left(m: &FreeMatrix, c: &FreeElement) -> FreeMatrix {
    m.map_entries(|e| c.mul(e))
}

/// The characteristic polynomial of a presentation (RE, ModifiedRE, U(gl)).
pub fn characteristic_polynomial(a: &AlgebraPresentation) -> Result<CharacteristicPolynomial> {
    match a.kind() {
        AlgebraKind::Re => charpoly_re(a),
        AlgebraKind::ModifiedRe => charpoly_shifted(a, CharPolyVariant::MreQhat),
        AlgebraKind::Ugl => charpoly_shifted(a, CharPolyVariant::UglQcal),
        AlgebraKind::Rtt => Err(Error::Internal(
            "characteristic polynomial is defined for re, mre and ugl presentations".into(),
        )),
    }
}

fn charpoly_re(a: &AlgebraPresentation) -> Result<CharacteristicPolynomial> {
    let m = a.birank();
    let q = a.q_scalar();
    let mut coeffs = vec![FreeElement::zero(a.alphabet().clone()); (m + 1) as usize];
    for k in 0..=m {
        // coefficient of t^(m−k) is (−q)^k e_k
        let e = elementary_symmetric(a, k)?.value;
        let sign = q.neg().pow(k as i64);
        coeffs[(m - k) as usize] = e.scalar_mul(&sign);
    }
    Ok(CharacteristicPolynomial {
        variant: CharPolyVariant::ReQ,
        coeffs,
        leading_before_normalization: Scalar::one(),
    })
}

/// Matrix-valued polynomial in t: coefficient list of V^(⊗arity) matrices.
fn poly_mul(lhs: &[FreeMatrix], rhs: &[FreeMatrix], n: u32, arity: u32) -> Vec<FreeMatrix> {
    let mut out: Vec<FreeMatrix> =
        vec![crate::tensor::SparseOp::zero(n, arity); lhs.len() + rhs.len() - 1];
    for (i, a) in lhs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in rhs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&a.mul(b));
        }
    }
    out
}

/// Expand Tr_{R(1..m)}(A^(m) Π_j (α_j t + β_j I − X_j̄)) and normalize monic.
fn charpoly_shifted(
    a: &AlgebraPresentation,
    variant: CharPolyVariant,
) -> Result<CharacteristicPolynomial> {
    let m = a.birank();
    let n = a.n();
    let alpha = a.alphabet().clone();
    let am = symmetrizer(a, m)?;
    let id = nc_identity(&alpha, n, m);

    // factors: j-th factor is (α_j t + β_j) I − X_j̄ with
    //   mre: α_j = q^{2(j−1)}, β_j = −q^{j−1} (j−1)_q
    //   ugl: α_j = 1, β_j = −(j−1)
    let mut product: Vec<FreeMatrix> = vec![nc_from_scalar(&alpha, &am)];
    for j in 1..=m {
        let (alpha_j, beta_j) = match variant {
            CharPolyVariant::MreQhat => {
                let q = a.q_scalar();
                let qn = a
                    .braiding()
                    .map(|b| b.q_number(j - 1))
                    .unwrap_or_else(|| Scalar::from_int((j - 1) as i64));
                (q.pow(2 * (j as i64 - 1)), q.pow(j as i64 - 1).mul(&qn).neg())
            }
            CharPolyVariant::UglQcal => {
                (Scalar::one(), Scalar::from_int(-(j as i64 - 1)))
            }
            CharPolyVariant::ReQ => unreachable!(),
        };
        let xj = slot_copy(a, j, m)?;
        let factor = vec![
            id.scale(&beta_j).sub(&xj), // t^0 part
            id.scale(&alpha_j),         // t^1 part
        ];
        product = poly_mul(&product, &factor, n, m);
    }

    let positions: Vec<u32> = (1..=m).collect();
    let d = a.trace_matrix();
    let mut coeffs: Vec<FreeElement> = Vec::with_capacity(product.len());
    for mat in &product {
        let traced = mat.r_trace(&positions, &d)?;
        coeffs.push(
            traced
                .as_single()
                .cloned()
                .unwrap_or_else(|| FreeElement::zero(alpha.clone())),
        );
    }

    // Normalize monic by the scalar leading coefficient.
    let leading = coeffs.last().unwrap();
    let leading_scalar = match leading.terms().next() {
        Some((w, s)) if w.is_empty() && leading.num_terms() == 1 => s.clone(),
        _ => return Err(Error::Normalization),
    };
    if leading_scalar.is_zero() {
        return Err(Error::Normalization);
    }
    let inv = leading_scalar.inv();
    let coeffs = coeffs.iter().map(|c| c.scalar_mul(&inv)).collect();
    Ok(CharacteristicPolynomial {
        variant,
        coeffs,
        leading_before_normalization: leading_scalar,
    })
}

fn membership_verdict(m: &Membership) -> (Verdict, Option<String>) {
    match m {
        Membership::InIdeal => (Verdict::InIdeal, None),
        Membership::NotInIdeal { witness } => {
            (Verdict::NotInIdeal, Some(format!("remainder: {witness}")))
        }
    }
}

/// Check one free element: exact zero, PBW (for U(gl)), or ideal membership.
pub fn check_element(
    a: &AlgebraPresentation,
    x: &FreeElement,
    strategy: Strategy,
) -> Result<(Verdict, Option<String>, String)> {
    if x.is_zero() {
        return Ok((Verdict::ZeroExact, None, "free-algebra-zero".into()));
    }
    if a.kind() == AlgebraKind::Ugl {
        let nf = pbw::normal_form(x, a.n());
        return if nf.is_zero() {
            Ok((Verdict::InIdeal, None, "pbw-normal-form".into()))
        } else {
            Ok((
                Verdict::NotInIdeal,
                Some(format!("normal form: {nf}")),
                "pbw-normal-form".into(),
            ))
        };
    }
    let mem = a.ideal().membership_with(x, strategy)?;
    let (verdict, detail) = membership_verdict(&mem);
    Ok((verdict, detail, strategy.label()))
}

/// The Cayley-Hamilton identity: substitute the generating matrix into the
/// monic characteristic polynomial and check all N² entries.
pub fn verify_ch(a: &AlgebraPresentation, strategy: Option<Strategy>) -> Result<VerificationReport> {
    let strategy = strategy.unwrap_or(a.ideal().strategy());
    let cp = characteristic_polynomial(a)?;
    let value = cp.evaluate_right(a);
    let mut items = Vec::new();
    for i in 0..a.n() {
        for j in 0..a.n() {
            let start = Instant::now();
            let alpha = a.alphabet().clone();
            let zero = FreeElement::zero(alpha);
            let entry = value.get(i, j).unwrap_or(&zero);
            let (verdict, detail, strat) = check_element(a, entry, strategy)?;
            let mut item = ReportItem::new(format!("entry[{},{}]", i + 1, j + 1), verdict)
                .with_strategy(strat, strategy.seed())
                .with_degree(entry.degree())
                .timed(start);
            if let Some(d) = detail {
                item = item.with_detail(d);
            }
            items.push(item);
        }
    }
    Ok(VerificationReport::new(
        a.braiding().map(|b| b.descriptor()).unwrap_or_else(|| "none".into()),
        a.descriptor(),
        "Cayley-Hamilton identity",
        format!("cayley-hamilton/{}", a.kind().label()),
        items,
    ))
}

/// Centrality of e_k: [e_k, x_i^j] must lie in the ideal for every generator.
pub fn verify_centrality(a: &AlgebraPresentation, k: u32, strategy: Option<Strategy>) -> Result<VerificationReport> {
    if a.kind() != AlgebraKind::Re {
        return Err(Error::Internal("centrality driver applies to RE presentations".into()));
    }
    let strategy = strategy.unwrap_or(a.ideal().strategy());
    let e = elementary_symmetric(a, k)?.value;
    let mut items = Vec::new();
    for idx in 0..a.alphabet().len() as u16 {
        let start = Instant::now();
        let gen = FreeElement::generator(a.alphabet().clone(), idx);
        let comm = e.commutator(&gen);
        let (verdict, detail, strat) = check_element(a, &comm, strategy)?;
        let name = &a.alphabet().symbol(idx).name;
        let mut item = ReportItem::new(format!("[e{k},{name}]"), verdict)
            .with_strategy(strat, strategy.seed())
            .with_degree(comm.degree())
            .timed(start);
        if let Some(d) = detail {
            item = item.with_detail(d);
        }
        items.push(item);
    }
    Ok(VerificationReport::new(
        a.braiding().map(|b| b.descriptor()).unwrap_or_else(|| "none".into()),
        a.descriptor(),
        format!("centrality of e_{k}"),
        "centrality/re",
        items,
    ))
}

/// Commutativity of power sums: [p_j, p_k] in the ideal for j < k ≤ kmax.
pub fn verify_powersum_commutativity(
    a: &AlgebraPresentation,
    kmax: u32,
    strategy_low: Strategy,
    strategy_high: Strategy,
    high_degree_threshold: usize,
) -> Result<VerificationReport> {
    let mut sums = Vec::new();
    for k in 1..=kmax {
        sums.push(power_sum(a, k)?.value);
    }
    let mut items = Vec::new();
    for j in 1..=kmax {
        for k in (j + 1)..=kmax {
            let start = Instant::now();
            let comm = sums[(j - 1) as usize].commutator(&sums[(k - 1) as usize]);
            let strategy = if comm.degree() >= high_degree_threshold {
                strategy_high
            } else {
                strategy_low
            };
            let (verdict, detail, strat) = check_element(a, &comm, strategy)?;
            let mut item = ReportItem::new(format!("[p{j},p{k}]"), verdict)
                .with_strategy(strat, strategy.seed())
                .with_degree(comm.degree())
                .timed(start);
            if let Some(d) = detail {
                item = item.with_detail(d);
            }
            items.push(item);
        }
    }
    Ok(VerificationReport::new(
        a.braiding().map(|b| b.descriptor()).unwrap_or_else(|| "none".into()),
        a.descriptor(),
        format!("power-sum commutativity up to k = {kmax}"),
        format!("psum-commute/{}", a.kind().label()),
        items,
    ))
}

/// The simplification identities of RE presentations (p_k via the trace
/// route, quantum powers reducing to ordinary powers) as exact
/// free-algebra identities, plus the verification that the RTT analogues do
/// NOT reduce.
pub fn verify_simplifications(
    re: &AlgebraPresentation,
    rtt: &AlgebraPresentation,
    kmax: u32,
) -> Result<VerificationReport> {
    let mut items = Vec::new();
    for k in 1..=kmax {
        let start = Instant::now();
        let diff = power_sum(re, k)?.value.sub(&power_sum_via_trace(re, k)?.value);
        items.push(
            ReportItem::new(
                format!("re:p{k}-vs-trace"),
                if diff.is_zero() { Verdict::ZeroExact } else { Verdict::NonzeroWitness },
            )
            .with_degree(k as usize)
            .timed(start),
        );

        let start = Instant::now();
        let qp = quantum_power(re, k)?;
        let mp = matrix_power(re, k);
        items.push(
            ReportItem::new(
                format!("re:power[{k}]-vs-matrix-power"),
                if qp.sub(&mp).is_zero() { Verdict::ZeroExact } else { Verdict::NonzeroWitness },
            )
            .with_degree(k as usize)
            .timed(start),
        );
    }
    // RTT analogues must NOT reduce (nonzero free-algebra differences).
    let start = Instant::now();
    let diff = power_sum(rtt, 2)?.value.sub(&power_sum_via_trace(rtt, 2)?.value);
    items.push(
        ReportItem::new(
            "rtt:p2-vs-trace-differs",
            if diff.is_zero() { Verdict::NotInIdeal } else { Verdict::ZeroExact },
        )
        .with_detail(if diff.is_zero() {
            "expected a nonzero difference".into()
        } else {
            format!("difference has {} terms", diff.num_terms())
        })
        .timed(start),
    );
    let start = Instant::now();
    let diff = quantum_power(rtt, 2)?.sub(&matrix_power(rtt, 2));
    items.push(
        ReportItem::new(
            "rtt:power[2]-vs-matrix-power-differs",
            if diff.is_zero() { Verdict::NotInIdeal } else { Verdict::ZeroExact },
        )
        .timed(start),
    );
    Ok(VerificationReport::new(
        re.braiding().map(|b| b.descriptor()).unwrap_or_else(|| "none".into()),
        format!("{} / {}", re.descriptor(), rtt.descriptor()),
        "power-sum and quantum-power simplification",
        "simplifications/re-vs-rtt",
        items,
    ))
}
