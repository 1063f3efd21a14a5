//! Companion (second canonical) forms, Krylov-type matrices, and the
//! similarity verification C·X = X_can·C for the constant algebras, plus
//! the shifted-argument version for braided Yangians.

use std::sync::Arc;
use std::time::Instant;

use crate::algebra::AlgebraPresentation;
use crate::charpoly::{self, characteristic_polynomial};
use crate::error::{Error, Result};
use crate::freealg::{FreeElement, Strategy};
use crate::report::{ReportItem, Verdict, VerificationReport};
use crate::scalar::Scalar;
use crate::yangian::{CurrentPresentation, ScalarSeries};

/// How the similarity vector v is chosen: fresh central parameters, or a
/// concrete rational vector.
#[derive(Debug, Clone)]
pub enum VectorMode {
    Symbolic,
    Rational(Vec<Scalar>),
}

impl VectorMode {
    pub fn label(&self) -> String {
        match self {
            VectorMode::Symbolic => "symbolic".into(),
            VectorMode::Rational(v) => format!(
                "({})",
                v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
            ),
        }
    }

    /// The vector entries as scalars; symbolic mode adjoins v1..vN.
    pub fn entries(&self, n: u32) -> Result<Vec<Scalar>> {
        match self {
            VectorMode::Symbolic => {
                Ok((1..=n).map(|i| Scalar::param(&format!("v{i}"))).collect())
            }
            VectorMode::Rational(v) => {
                if v.len() != n as usize {
                    return Err(Error::Internal(format!(
                        "vector has {} entries, the algebra needs {n}",
                        v.len()
                    )));
                }
                if v.iter().all(|s| s.is_zero()) {
                    return Err(Error::ZeroVector);
                }
                Ok(v.clone())
            }
        }
    }
}

/// The constant-case companion form: subdiagonal of ones above, last row
/// (a_m, …, a_1), with a_k = −(−q)^k e_k for RE and a_k = −b_k for the
/// monic-normalized variants.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub size: u32,
    /// a_1..a_m (index k−1 holds a_k).
    pub entries: Vec<FreeElement>,
}

impl CanonicalForm {
    /// Dense m×m matrix over the free algebra; row i (0-based, i < m−1) has
    /// a one at column i+1, the last row is (a_m, …, a_1).
    pub fn to_rows(&self, alpha: &Arc<crate::freealg::Alphabet>) -> Vec<Vec<FreeElement>> {
        let m = self.size as usize;
        let mut rows = vec![vec![FreeElement::zero(alpha.clone()); m]; m];
        for i in 0..m - 1 {
            rows[i][i + 1] = FreeElement::one(alpha.clone());
        }
        for j in 0..m {
            // last row: column j holds a_{m−j}
            rows[m - 1][j] = self.entries[m - 1 - j].clone();
        }
        rows
    }
}

/// Companion entries from the monic characteristic polynomial: if it is
/// X^m + b_1 X^(m−1) + … + b_m, then a_k = −b_k.
pub fn canonical_form(a: &AlgebraPresentation) -> Result<CanonicalForm> {
    let cp = characteristic_polynomial(a)?;
    let m = cp.degree();
    let mut entries = Vec::with_capacity(m);
    for k in 1..=m {
        // b_k is the coefficient of t^(m−k)
        entries.push(cp.coeffs[m - k].neg());
    }
    Ok(CanonicalForm { size: m as u32, entries })
}

/// Krylov row stack: rows v, vX, …, vX^(m−1) (an m×N matrix over the free
/// algebra, v central).
pub fn krylov_rows(
    a: &AlgebraPresentation,
    v: &[Scalar],
    m: u32,
) -> Vec<Vec<FreeElement>> {
    let n = a.n() as usize;
    let alpha = a.alphabet().clone();
    let mut rows: Vec<Vec<FreeElement>> = Vec::with_capacity(m as usize);
    let first: Vec<FreeElement> = v
        .iter()
        .map(|s| FreeElement::constant(alpha.clone(), s.clone()))
        .collect();
    rows.push(first);
    for _ in 1..m {
        let prev = rows.last().unwrap();
        let mut next = vec![FreeElement::zero(alpha.clone()); n];
        for (j, slot) in next.iter_mut().enumerate() {
            for (i, p) in prev.iter().enumerate() {
                if let Some(entry) = a.gen_matrix().get(i as u32, j as u32) {
                    *slot = slot.add(&p.mul(entry));
                }
            }
        }
        rows.push(next);
    }
    rows
}

/// Verify C·X = X_can·C for a constant presentation: rows 1..m−1 of the
/// residual must vanish identically in the free algebra, and the last row
/// must lie in the defining ideal.
pub fn verify_similarity_constant(
    a: &AlgebraPresentation,
    v_mode: &VectorMode,
    strategy: Option<Strategy>,
) -> Result<VerificationReport> {
    let strategy = strategy.unwrap_or(a.ideal().strategy());
    let n = a.n() as usize;
    let m = a.birank() as usize;
    let alpha = a.alphabet().clone();
    let v = v_mode.entries(a.n())?;
    let c = krylov_rows(a, &v, m as u32);
    let can = canonical_form(a)?;
    let can_rows = can.to_rows(&alpha);

    let mut items = Vec::new();
    for row in 0..m {
        for col in 0..n {
            let start = Instant::now();
            // (C·X)[row,col]
            let mut lhs = FreeElement::zero(alpha.clone());
            for k in 0..n {
                if let Some(entry) = a.gen_matrix().get(k as u32, col as u32) {
                    lhs = lhs.add(&c[row][k].mul(entry));
                }
            }
            // (X_can·C)[row,col]
            let mut rhs = FreeElement::zero(alpha.clone());
            for k in 0..m {
                if !can_rows[row][k].is_zero() {
                    rhs = rhs.add(&can_rows[row][k].mul(&c[k][col]));
                }
            }
            let residual = lhs.sub(&rhs);
            let id = format!("row{}/col{}", row + 1, col + 1);
            let item = if row < m - 1 {
                // must vanish with no quotienting at all
                if residual.is_zero() {
                    ReportItem::new(id, Verdict::ZeroExact)
                } else {
                    ReportItem::new(id, Verdict::NonzeroWitness)
                        .with_detail(format!("free residual: {residual}"))
                }
            } else {
                let (verdict, detail, strat) = charpoly::check_element(a, &residual, strategy)?;
                let mut item = ReportItem::new(id, verdict)
                    .with_strategy(strat, strategy.seed())
                    .with_degree(residual.degree());
                if let Some(d) = detail {
                    item = item.with_detail(d);
                }
                item
            };
            items.push(item.timed(start));
        }
    }
    Ok(VerificationReport::new(
        a.braiding().map(|b| b.descriptor()).unwrap_or_else(|| "none".into()),
        format!("{} (v = {})", a.descriptor(), v_mode.label()),
        "companion-form similarity C·X = X_can·C",
        format!("ds-similarity/{}", a.kind().label()),
        items,
    ))
}

/// The last-row residual of the constant similarity equals the
/// left-coefficient Cayley-Hamilton combination contracted with v; exposed
/// for the equivalence-of-proofs check.
pub fn ch_contraction_residual(
    a: &AlgebraPresentation,
    v: &[Scalar],
) -> Result<Vec<FreeElement>> {
    let cp = characteristic_polynomial(a)?;
    let value = cp.evaluate_left(a);
    let alpha = a.alphabet().clone();
    let n = a.n() as usize;
    let mut out = vec![FreeElement::zero(alpha.clone()); n];
    for (col, slot) in out.iter_mut().enumerate() {
        for (i, vi) in v.iter().enumerate() {
            if let Some(entry) = value.get(i as u32, col as u32) {
                *slot = slot.add(&entry.scalar_mul(vi));
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Yangian (current-algebra) similarity
// ---------------------------------------------------------------------------

/// Companion form with series entries: ones on the subdiagonal, last column
/// (a_m(u), …, a_1(u)) top to bottom.
#[derive(Debug, Clone)]
pub struct SeriesCanonicalForm {
    pub size: u32,
    /// a_1(u)..a_m(u) (index k−1 holds a_k).
    pub entries: Vec<ScalarSeries>,
}

/// Companion entries for the current case, from the shifted elementary
/// symmetric series:
///   rational: a_k(u) = (−1)^(k+1) e_k(u+m−1)
///   hecke   : a_k(u) = −(−q)^k e_k(q^(2(m−1))u)
pub fn series_canonical_form(p: &CurrentPresentation) -> Result<SeriesCanonicalForm> {
    let m = p.birank();
    let mut entries = Vec::with_capacity(m as usize);
    for k in 1..=m {
        let ek = p.elementary_symmetric_series(k)?;
        let shifted = if p.is_rational() {
            let mut s = ek.shift_add(-(m as i64 - 1));
            if k % 2 == 0 {
                s = s.neg();
            }
            s
        } else {
            let q = p.q_scalar();
            let sign = q.neg().pow(k as i64).neg();
            ek.shift_mul(m as i64 - 1).scale(&sign)
        };
        entries.push(shifted);
    }
    Ok(SeriesCanonicalForm { size: m, entries })
}

/// Krylov column stack of the current case: columns v, L(u)v, and
/// X^[j](·)v at the argument shifts of the flavor.
pub fn series_krylov_columns(
    p: &CurrentPresentation,
    v: &[Scalar],
) -> Result<Vec<Vec<ScalarSeries>>> {
    let m = p.birank();
    let mut cols = Vec::with_capacity(m as usize);
    for j in 0..m {
        // column j+1 is X^[j] at argument (u + j − 1) [rational] or
        // q^(2(j−1))u [hecke], applied to v; j = 0 gives the constant v.
        let power = p.quantum_power_series(j)?;
        let shifted = if p.is_rational() {
            power.shift_add(-(j as i64 - 1))
        } else {
            power.shift_mul(j as i64 - 1)
        };
        cols.push(shifted.apply_to_vector(v));
    }
    Ok(cols)
}

/// Verify L(u)·C(u+1) = C(u)·L_can(u) (rational) or L(u)·C(q²u) = C(u)·L_can(u)
/// (hecke): columns 1..m−1 must agree exactly as truncated series; the
/// last-column residual coefficients go through graded membership.
pub fn verify_similarity_yangian(
    p: &CurrentPresentation,
    v_mode: &VectorMode,
    check_order: usize,
    strategy: Option<Strategy>,
) -> Result<VerificationReport> {
    let strategy = strategy.unwrap_or(p.ideal().strategy());
    let n = p.n() as usize;
    let m = p.birank() as usize;
    if check_order > p.truncation() {
        return Err(Error::InsufficientTruncation {
            requested: check_order,
            truncation: p.truncation(),
        });
    }
    let v = v_mode.entries(p.n())?;
    let gen = p.gen_series();
    let cols = series_krylov_columns(p, &v)?;
    let can = series_canonical_form(p)?;

    let mut items = Vec::new();
    for col in 0..m {
        // LHS column: L(u) · (C at shifted argument), column col
        let shifted_col: Vec<ScalarSeries> = cols[col]
            .iter()
            .map(|s| if p.is_rational() { s.shift_add(-1) } else { s.shift_mul(1) })
            .collect();
        let lhs: Vec<ScalarSeries> = (0..n)
            .map(|row| {
                let mut acc = ScalarSeries::zero(p.alphabet().clone(), p.truncation());
                for k in 0..n {
                    if let Some(entry_series) = gen.entry_series(row as u32, k as u32) {
                        acc = acc.add(&entry_series.mul(&shifted_col[k]));
                    }
                }
                acc
            })
            .collect();
        // RHS column: C(u) · L_can(u), column col
        let rhs: Vec<ScalarSeries> = (0..n)
            .map(|row| {
                if col < m - 1 {
                    // L_can column col has a single one at row col+1
                    cols[col + 1][row].clone()
                } else {
                    let mut acc = ScalarSeries::zero(p.alphabet().clone(), p.truncation());
                    for i in 0..m {
                        acc = acc.add(&cols[i][row].mul(&can.entries[m - 1 - i]));
                    }
                    acc
                }
            })
            .collect();

        for row in 0..n {
            let residual = lhs[row].sub(&rhs[row]);
            if col < m - 1 {
                let start = Instant::now();
                // exact series identity at every retained order
                let ok = residual.is_zero_through(p.truncation());
                items.push(
                    ReportItem::new(
                        format!("col{}/row{}", col + 1, row + 1),
                        if ok { Verdict::ZeroExact } else { Verdict::NonzeroWitness },
                    )
                    .timed(start),
                );
            } else {
                for order in 0..=check_order {
                    let start = Instant::now();
                    let coeff = residual.coeff(order);
                    let (verdict, detail, strat) =
                        crate::yangian::check_element_graded(p, &coeff, strategy)?;
                    let mut item = ReportItem::new(
                        format!("col{}/row{}/u^-{}", col + 1, row + 1, order),
                        verdict,
                    )
                    .with_strategy(strat, strategy.seed())
                    .with_order(order)
                    .timed(start);
                    if let Some(d) = detail {
                        item = item.with_detail(d);
                    }
                    items.push(item);
                }
            }
        }
    }
    Ok(VerificationReport::new(
        p.base_descriptor(),
        format!("{} (v = {})", p.descriptor(), v_mode.label()),
        "companion-form similarity for the generating series",
        format!("ds-similarity-yangian/{}", p.flavor_label()),
        items,
    ))
}
