//! Constant braidings: validation, classification, skew-inverse and trace
//! matrix, bi-rank probe, and Baxterized current R-matrices.
//!
//! A braiding R on V⊗V must satisfy the braid-form Yang-Baxter equation
//! R₁R₂R₁ = R₂R₁R₂ and be either involutive (R² = I) or Hecke
//! ((qI − R)(q⁻¹I + R) = 0 with q² ≠ 1). The skew-inverse Ψ is fixed by the
//! convention Tr₍₂₎(R₁₂ Ψ₂₃) = P₁₃, and the trace matrix is D = Tr₍₂₎ Ψ,
//! which makes Tr_R A := Tr(D·A) well-defined for any single matrix A.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;
use crate::skewsym;
use crate::tensor::{decode, TensorOperator};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymmetryKind {
    Involutive,
    Hecke { q: Scalar },
}

impl fmt::Display for SymmetryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryKind::Involutive => write!(f, "involutive"),
            SymmetryKind::Hecke { q } => write!(f, "hecke(q = {q})"),
        }
    }
}

/// A validated braiding together with its classification data.
#[derive(Debug, Clone)]
pub struct Braiding {
    n: u32,
    r: TensorOperator,
    kind: SymmetryKind,
    psi: TensorOperator,
    d: TensorOperator,
    birank: u32,
    name: String,
}

impl Braiding {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> &TensorOperator {
        &self.r
    }

    pub fn kind(&self) -> &SymmetryKind {
        &self.kind
    }

    pub fn psi(&self) -> &TensorOperator {
        &self.psi
    }

    /// Trace matrix D; the R-trace of a matrix A is Tr(D·A).
    pub fn d(&self) -> &TensorOperator {
        &self.d
    }

    pub fn birank(&self) -> u32 {
        self.birank
    }

    pub fn descriptor(&self) -> String {
        format!("{} (N = {}, {}, bi-rank ({}|0))", self.name, self.n, self.kind, self.birank)
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    /// The q of the coefficient formulas: the Hecke parameter, or 1 for
    /// involutive symmetries.
    pub fn q_scalar(&self) -> Scalar {
        match &self.kind {
            SymmetryKind::Involutive => Scalar::one(),
            SymmetryKind::Hecke { q } => q.clone(),
        }
    }

    /// k_q in the braiding's coefficient field.
    pub fn q_number(&self, k: u32) -> Scalar {
        match &self.kind {
            SymmetryKind::Involutive => Scalar::from_int(k as i64),
            SymmetryKind::Hecke { q } => skewsym::q_num_at(q, k),
        }
    }

    /// R⁻¹, from the defining relation of the kind.
    pub fn r_inv(&self) -> TensorOperator {
        match &self.kind {
            SymmetryKind::Involutive => self.r.clone(),
            SymmetryKind::Hecke { q } => {
                // R² = I + (q − q⁻¹) R, hence R⁻¹ = R − (q − q⁻¹) I
                let c = q.sub(&q.pow(-1));
                self.r
                    .sub(&TensorOperator::identity(self.n, 2).scale(&c))
            }
        }
    }

    /// The R-trace Tr_R over all positions of an arity-k operator.
    pub fn r_trace_full(&self, op: &TensorOperator) -> Result<Scalar> {
        let positions: Vec<u32> = (1..=op.arity()).collect();
        let t = op.r_trace(&positions, &self.d)?;
        Ok(t.as_single().cloned().unwrap_or_else(Scalar::zero))
    }
}

/// The built-in flip P for any N ≥ 1 (involutive, bi-rank (N|0)).
pub fn builtin_flip(n: u32) -> Result<Braiding> {
    let mut b = validate(TensorOperator::flip(n), None)?;
    b.set_name("flip");
    Ok(b)
}

/// The built-in standard Hecke symmetry: diagonal entries q, off-diagonal
/// flip part 1, strictly-upper (q − q⁻¹) part.
pub fn builtin_hecke_standard(n: u32) -> Result<Braiding> {
    let q = Scalar::q();
    let mut r = TensorOperator::zero(n, 2);
    for i in 0..n {
        r.set(i * n + i, i * n + i, q.clone());
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                // image of e_i⊗e_j contains e_j⊗e_i
                r.set(j * n + i, i * n + j, Scalar::one());
            }
            if i < j {
                // image of e_i⊗e_j keeps a (q − q⁻¹) e_i⊗e_j part
                r.set(i * n + j, i * n + j, q.sub(&q.pow(-1)));
            }
        }
    }
    let mut b = validate(r, Some(q))?;
    b.set_name("uq-gl");
    Ok(b)
}

/// Validate an arity-2 operator as a braiding: Yang-Baxter, classification,
/// skew-inverse, trace matrix and bi-rank probe, all exact.
pub fn validate(r: TensorOperator, claimed_q: Option<Scalar>) -> Result<Braiding> {
    if r.arity() != 2 {
        return Err(Error::Arity(format!(
            "a braiding must have arity 2, got {}",
            r.arity()
        )));
    }
    let n = r.dim_v();

    // Braid-form Yang-Baxter equation on V^(⊗3).
    let r1 = r.embed_adjacent(3, 1)?;
    let r2 = r.embed_adjacent(3, 2)?;
    let residual = r1.mul(&r2).mul(&r1).sub(&r2.mul(&r1).mul(&r2));
    if !residual.is_zero() {
        let (&(row, col), v) = residual.iter().next().unwrap();
        let rd = decode(row, n, 3);
        let cd = decode(col, n, 3);
        return Err(Error::NotYangBaxter {
            nonzero: residual.num_entries(),
            witness: format!(
                "[{}|{}] = {}",
                rd.iter().map(|d| (d + 1).to_string()).collect::<Vec<_>>().join(","),
                cd.iter().map(|d| (d + 1).to_string()).collect::<Vec<_>>().join(","),
                v
            ),
        });
    }

    // Classification.
    let id2 = TensorOperator::identity(n, 2);
    let kind = if r.mul(&r).sub(&id2).is_zero() {
        SymmetryKind::Involutive
    } else {
        let q = claimed_q.unwrap_or_else(Scalar::q);
        if q.pow(2).sub(&Scalar::one()).is_zero() || q.is_zero() {
            return Err(Error::NotSymmetry(format!(
                "Hecke parameter must satisfy q^2 != 1 and q != 0, got q = {q}"
            )));
        }
        let hecke = id2
            .scale(&q)
            .sub(&r)
            .mul(&id2.scale(&q.pow(-1)).add(&r));
        if !hecke.is_zero() {
            return Err(Error::NotSymmetry(
                "neither involutive (R^2 = I) nor Hecke ((qI - R)(q^-1 I + R) = 0)".into(),
            ));
        }
        SymmetryKind::Hecke { q }
    };

    let psi = skew_inverse(&r)?;
    let d = psi.r_trace(&[2], &TensorOperator::identity(n, 1))?;

    // Bi-rank (m|0) probe: A^(m) has rank 1 and A^(m+1) = 0.
    let tower = skewsym::raw_tower(&r, &kind, n + 1)?;
    let mut birank = None;
    for k in 2..=n + 1 {
        if tower[(k - 1) as usize].is_zero() {
            let rank_prev = skewsym::rank_checked(&tower[(k - 2) as usize])?;
            if rank_prev == 1 {
                birank = Some(k - 1);
            } else {
                return Err(Error::Birank(format!(
                    "A^({}) vanishes but A^({}) has rank {rank_prev}, not 1",
                    k,
                    k - 1
                )));
            }
            break;
        }
    }
    let birank = birank.ok_or_else(|| {
        Error::Birank(format!("no m <= {n} with rank A^(m) = 1 and A^(m+1) = 0"))
    })?;

    Ok(Braiding {
        n,
        r,
        kind,
        psi,
        d,
        birank,
        name: "custom".to_string(),
    })
}

/// Solve for the skew-inverse Ψ with Tr₍₂₎(R₁₂ Ψ₂₃) = P₁₃, where the trace
/// is the plain trace on the middle factor and P₁₃ flips factors 1 and 3.
pub fn skew_inverse(r: &TensorOperator) -> Result<TensorOperator> {
    let n = r.dim_v() as usize;
    // Componentwise the defining equation reads
    //   Σ_{t,s} R[(i1,t),(j1,s)] Ψ[(s,i3),(t,j3)] = δ_{i1,j3} δ_{i3,j1},
    // which for each fixed (i3,j3) is the same n²×n² system with matrix
    //   M[(i1,j1),(s,t)] = R[(i1,t),(j1,s)].
    let mut rows: Vec<linalg::SparseVec> = vec![Vec::new(); n * n];
    for (&(row, col), v) in r.iter() {
        let (i1, t) = ((row as usize) / n, (row as usize) % n);
        let (j1, s) = ((col as usize) / n, (col as usize) % n);
        rows[i1 * n + j1].push((s * n + t, v.clone()));
    }
    for row in rows.iter_mut() {
        row.sort_by_key(|(j, _)| *j);
    }
    let minv = linalg::invert(n * n, rows).ok_or(Error::NotSkewInvertible)?;
    // Ψ[(s,i3),(t,j3)] = M⁻¹[(s,t),(j3,i3)]
    let mut psi = TensorOperator::zero(n as u32, 2);
    for s in 0..n {
        for t in 0..n {
            for i3 in 0..n {
                for j3 in 0..n {
                    let v = &minv[s * n + t][j3 * n + i3];
                    if !v.is_zero() {
                        psi.set((s * n + i3) as u32, (t * n + j3) as u32, v.clone());
                    }
                }
            }
        }
    }
    debug_assert!(skew_inverse_residual(r, &psi).is_zero());
    Ok(psi)
}

/// Tr₍₂₎(R₁₂ Ψ₂₃) − P₁₃ on V^(⊗3), reduced to an arity-2 operator on
/// factors (1,3).
pub fn skew_inverse_residual(r: &TensorOperator, psi: &TensorOperator) -> TensorOperator {
    let n = r.dim_v();
    let r12 = r.embed_adjacent(3, 1).unwrap();
    let psi23 = psi.embed_adjacent(3, 2).unwrap();
    let traced = r12
        .mul(&psi23)
        .r_trace(&[2], &TensorOperator::identity(n, 1))
        .unwrap();
    traced.sub(&TensorOperator::flip(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GKind {
    /// g(u,v) = 1/(u−v); requires an involutive base.
    Rational,
    /// g(u,v) = (q−q⁻¹)u/(u−v); requires a Hecke base.
    Hecke,
}

/// A Baxterized current R-matrix R(u,v) = R − g(u,v) I, kept symbolic.
#[derive(Debug, Clone)]
pub struct CurrentRMatrix {
    base: Braiding,
    g_kind: GKind,
}

impl CurrentRMatrix {
    pub fn base(&self) -> &Braiding {
        &self.base
    }

    pub fn g_kind(&self) -> GKind {
        self.g_kind
    }

    /// Evaluate g(u,v) at scalar arguments.
    pub fn g(&self, u: &Scalar, v: &Scalar) -> Scalar {
        let diff = u.sub(v);
        match self.g_kind {
            GKind::Rational => diff.inv(),
            GKind::Hecke => {
                let q = self.base.q_scalar();
                q.sub(&q.pow(-1)).mul(u).div(&diff)
            }
        }
    }

    /// R(u,v) at scalar arguments, a concrete arity-2 operator.
    pub fn at(&self, u: &Scalar, v: &Scalar) -> TensorOperator {
        let n = self.base.n();
        self.base
            .r()
            .sub(&TensorOperator::identity(n, 2).scale(&self.g(u, v)))
    }
}

/// Baxterize a braiding into its current R-matrix.
pub fn baxterize(b: &Braiding) -> CurrentRMatrix {
    let g_kind = match b.kind() {
        SymmetryKind::Involutive => GKind::Rational,
        SymmetryKind::Hecke { .. } => GKind::Hecke,
    };
    CurrentRMatrix { base: b.clone(), g_kind }
}

pub mod file {
    //! Plain structured text for R-matrices: a header `rmatrix N=<n>`, then
    //! one line `i j k l <scalar-expression>` per nonzero entry, meaning
    //! R(e_k⊗e_l) has coefficient at e_i⊗e_j. Round-trips bit-exactly.

    use super::*;
    use crate::scalar::parse_scalar;

    pub fn parse(text: &str) -> Result<TensorOperator> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty R-matrix file".into()))?;
        let n: u32 = header
            .strip_prefix("rmatrix N=")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header line: {header:?}")))?;
        if n == 0 {
            return Err(Error::Parse("N must be positive".into()));
        }
        let mut op = TensorOperator::zero(n, 2);
        for line in lines {
            let mut parts = line.splitn(5, char::is_whitespace);
            let mut idx = [0u32; 4];
            for slot in idx.iter_mut() {
                let tok = parts
                    .next()
                    .ok_or_else(|| Error::Parse(format!("short entry line: {line:?}")))?;
                *slot = tok
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad index {tok:?} in line {line:?}")))?;
                if *slot < 1 || *slot > n {
                    return Err(Error::Parse(format!(
                        "index {} out of range 1..={} in line {:?}",
                        slot, n, line
                    )));
                }
            }
            let expr = parts
                .next()
                .ok_or_else(|| Error::Parse(format!("missing scalar expression: {line:?}")))?;
            let value = parse_scalar(expr)?;
            let [i, j, k, l] = idx;
            let row = (i - 1) * n + (j - 1);
            let col = (k - 1) * n + (l - 1);
            op.set(row, col, value);
        }
        Ok(op)
    }

    pub fn serialize(op: &TensorOperator) -> String {
        let n = op.dim_v();
        let mut out = format!("rmatrix N={n}\n");
        for (&(row, col), v) in op.iter() {
            let rd = decode(row, n, 2);
            let cd = decode(col, n, 2);
            out.push_str(&format!(
                "{} {} {} {} {}\n",
                rd[0] + 1,
                rd[1] + 1,
                cd[0] + 1,
                cd[1] + 1,
                v
            ));
        }
        out
    }
}
