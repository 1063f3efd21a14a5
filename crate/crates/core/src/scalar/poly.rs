//! Sparse multivariate polynomials over Q with exact gcd.
//!
//! Monomials are ordered graded-lexicographically with `q` (variable 0) as
//! the most significant variable; the order is total and fixed per process,
//! so leading terms and the monic normalization of denominators are
//! reproducible.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::vars::{self, VarId};

/// Exponent vector, sparse, sorted by variable id, exponents > 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: VarId, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v.0, exp)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.0
            .iter()
            .find(|&&(id, _)| id == v.0)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.0.iter().map(|&(id, _)| VarId(id))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0, self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Exact monomial division; `None` when some exponent would go negative.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut i = 0;
        for &(id, e) in &other.0 {
            while i < self.0.len() && self.0[i].0 < id {
                out.push(self.0[i]);
                i += 1;
            }
            if i >= self.0.len() || self.0[i].0 != id || self.0[i].1 < e {
                return None;
            }
            if self.0[i].1 > e {
                out.push((id, self.0[i].1 - e));
            }
            i += 1;
        }
        out.extend_from_slice(&self.0[i..]);
        Some(Monomial(out))
    }

    fn without(&self, v: VarId) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(id, _)| id != v.0).collect())
    }

    /// Componentwise minimum of exponents.
    pub fn gcd_pair(a: &Monomial, b: &Monomial) -> Monomial {
        let mut out = Vec::new();
        for &(id, e) in &a.0 {
            let other = b.degree_in(VarId(id));
            let shared = e.min(other);
            if shared > 0 {
                out.push((id, shared));
            }
        }
        Monomial(out)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then exponents compared
    /// variable-by-variable in ascending id order (so `q` dominates).
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(ida, ea)), Some(&(idb, eb))) => {
                    if ida == idb {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {
                                i += 1;
                                j += 1;
                            }
                            ord => return ord,
                        }
                    } else if ida < idb {
                        // self has positive exponent at the smaller var
                        return Ordering::Greater;
                    } else {
                        return Ordering::Less;
                    }
                }
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
            }
        }
    }
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: VarId) -> Self {
        Poly::monomial(Monomial::var(v, 1), BigRational::one())
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    fn insert_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division; `None` if `self` is not a multiple of `d`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&(BigRational::one() / c)));
        }
        let (dm, dc) = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.try_div(dm)?;
            let qc = rc / dc;
            let t = Poly::monomial(qm, qc);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Substitute rational values for a subset of the variables.
    pub fn specialize(&self, assignment: &BTreeMap<VarId, BigRational>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut residual = Vec::new();
            for &(id, e) in &m.0 {
                if let Some(val) = assignment.get(&VarId(id)) {
                    let mut p = BigRational::one();
                    for _ in 0..e {
                        p *= val;
                    }
                    coeff *= p;
                } else {
                    residual.push((id, e));
                }
            }
            out.insert_term(Monomial(residual), coeff);
        }
        out
    }

    /// Rational content: positive rational c with `self = c * primitive`,
    /// primitive having coprime integer coefficients and positive leading
    /// coefficient. Zero polynomial has content 0.
    fn rational_content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        content
    }

    /// Primitive part (coprime integer coefficients, positive leading coeff).
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let c = self.rational_content();
        self.scale(&(BigRational::one() / c))
    }

    /// View as univariate in `main` with `Poly` coefficients, dense by exponent.
    fn to_univar(&self, main: VarId) -> Vec<Poly> {
        let deg = self.degree_in(main) as usize;
        let mut coeffs = vec![Poly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.degree_in(main) as usize;
            coeffs[e].insert_term(m.without(main), c.clone());
        }
        coeffs
    }

    fn from_univar(main: VarId, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (e, p) in coeffs.iter().enumerate() {
            let xe = Poly::monomial(Monomial::var(main, e as u32), BigRational::one());
            out = out.add(&p.mul(&xe));
        }
        out
    }

    /// Greatest common monomial divisor of all terms.
    fn monomial_content(&self) -> Monomial {
        let mut iter = self.terms.keys();
        let mut acc = match iter.next() {
            None => return Monomial::one(),
            Some(m) => m.clone(),
        };
        for m in iter {
            if acc.is_one() {
                break;
            }
            let mut next = Vec::new();
            for &(id, e) in &acc.0 {
                let other = m.degree_in(VarId(id));
                let shared = e.min(other);
                if shared > 0 {
                    next.push((id, shared));
                }
            }
            acc = Monomial(next);
        }
        acc
    }

    /// The single variable of this polynomial, when there is exactly one.
    fn sole_var(&self) -> Option<VarId> {
        let mut found = None;
        for m in self.terms.keys() {
            for v in m.vars() {
                match found {
                    None => found = Some(v),
                    Some(f) if f == v => {}
                    Some(_) => return None,
                }
            }
        }
        found
    }

    /// Primitive gcd (positive leading rational coefficient). gcd(0,0) = 0.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        if a.as_constant().is_some() || b.as_constant().is_some() {
            return Poly::one();
        }
        if a == b {
            return a.primitive();
        }
        // Single-term fast path: the gcd is the common monomial part.
        if a.num_terms() == 1 || b.num_terms() == 1 {
            let shared = Monomial::gcd_pair(&a.monomial_content(), &b.monomial_content());
            return Poly::monomial(shared, BigRational::one());
        }
        // Univariate fast path: monic Euclid over Q.
        if let (Some(va), Some(vb)) = (a.sole_var(), b.sole_var()) {
            if va == vb {
                return univariate_gcd(a, b, va);
            }
        }
        let mut vars = a.vars();
        vars.extend(b.vars());
        let main = match vars.into_iter().next() {
            None => return Poly::one(),
            Some(v) => v,
        };
        if a.degree_in(main) == 0 || b.degree_in(main) == 0 {
            // One side is free of the main variable: gcd divides its content.
            let (free, other) = if a.degree_in(main) == 0 { (a, b) } else { (b, a) };
            let cont_other = other
                .to_univar(main)
                .iter()
                .fold(Poly::zero(), |acc, c| Poly::gcd(&acc, c));
            return Poly::gcd(free, &cont_other);
        }
        let au = a.to_univar(main);
        let bu = b.to_univar(main);
        let cont_a = au.iter().fold(Poly::zero(), |acc, c| Poly::gcd(&acc, c));
        let cont_b = bu.iter().fold(Poly::zero(), |acc, c| Poly::gcd(&acc, c));
        let prim_a: Vec<Poly> = au.iter().map(|c| c.exact_div(&cont_a).unwrap()).collect();
        let prim_b: Vec<Poly> = bu.iter().map(|c| c.exact_div(&cont_b).unwrap()).collect();
        let cont_g = Poly::gcd(&cont_a, &cont_b);

        // Primitive polynomial remainder sequence.
        let (mut f, mut g) = if prim_a.len() >= prim_b.len() {
            (prim_a, prim_b)
        } else {
            (prim_b, prim_a)
        };
        loop {
            let r = pseudo_rem(&f, &g);
            if r.iter().all(|c| c.is_zero()) {
                break;
            }
            f = g;
            g = primitive_univar(&r);
        }
        let prim_gcd = primitive_univar(&g);
        cont_g.mul(&Poly::from_univar(main, &prim_gcd)).primitive()
    }

    pub fn display(&self) -> PolyDisplay<'_> {
        PolyDisplay(self)
    }
}

fn trim_univar(v: &mut Vec<Poly>) {
    while v.len() > 1 && v.last().map(|p| p.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

/// Pseudo-remainder of f by g, both dense univariate with Poly coefficients.
fn pseudo_rem(f: &[Poly], g: &[Poly]) -> Vec<Poly> {
    let mut r: Vec<Poly> = f.to_vec();
    trim_univar(&mut r);
    let mut gg: Vec<Poly> = g.to_vec();
    trim_univar(&mut gg);
    let dg = gg.len() - 1;
    let lc_g = gg[dg].clone();
    loop {
        trim_univar(&mut r);
        let dr = r.len() - 1;
        if (r.len() == 1 && r[0].is_zero()) || dr < dg {
            return r;
        }
        let lead = r[dr].clone();
        // r := lc_g * r − lead * x^(dr−dg) * g
        for c in r.iter_mut() {
            *c = c.mul(&lc_g);
        }
        let shift = dr - dg;
        for (i, gc) in gg.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&lead.mul(gc));
        }
    }
}

fn primitive_univar(coeffs: &[Poly]) -> Vec<Poly> {
    let cont = coeffs.iter().fold(Poly::zero(), |acc, c| Poly::gcd(&acc, c));
    if cont.is_zero() {
        return coeffs.to_vec();
    }
    coeffs.iter().map(|c| c.exact_div(&cont).unwrap()).collect()
}

/// Monic Euclid over Q for two polynomials in the same single variable;
/// after stripping their common monomial part the low coefficients are
/// nonzero, which keeps the remainder chain short.
fn univariate_gcd(a: &Poly, b: &Poly, v: VarId) -> Poly {
    let strip = |p: &Poly| -> (u32, Vec<BigRational>) {
        let shift = p
            .terms
            .keys()
            .map(|m| m.degree_in(v))
            .min()
            .unwrap_or(0);
        let deg = p.degree_in(v);
        let mut dense = vec![BigRational::zero(); (deg - shift + 1) as usize];
        for (m, c) in &p.terms {
            dense[(m.degree_in(v) - shift) as usize] = c.clone();
        }
        (shift, dense)
    };
    let trim = |d: &mut Vec<BigRational>| {
        while d.len() > 1 && d.last().map(|c| c.is_zero()).unwrap_or(false) {
            d.pop();
        }
    };
    let is_zero_dense = |d: &[BigRational]| d.iter().all(|c| c.is_zero());
    let rem = |f: &[BigRational], g: &[BigRational]| -> Vec<BigRational> {
        let mut r = f.to_vec();
        let dg = g.len() - 1;
        let lc = &g[dg];
        loop {
            trim(&mut r);
            if r.len() <= dg || is_zero_dense(&r) {
                return r;
            }
            let dr = r.len() - 1;
            let factor = &r[dr] / lc;
            let shift = dr - dg;
            for (i, gc) in g.iter().enumerate() {
                let delta = gc * &factor;
                r[i + shift] -= delta;
            }
            r[dr] = BigRational::zero();
        }
    };
    let (sa, mut f) = strip(a);
    let (sb, mut g) = strip(b);
    let shared_shift = sa.min(sb);
    trim(&mut f);
    trim(&mut g);
    while !is_zero_dense(&g) {
        let r = rem(&f, &g);
        f = g;
        g = r;
    }
    let mut out = Poly::zero();
    for (e, c) in f.iter().enumerate() {
        out.insert_term(Monomial::var(v, e as u32 + shared_shift), c.clone());
    }
    out.primitive()
}

pub struct PolyDisplay<'a>(&'a Poly);

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        // Descending order: leading term first.
        for (idx, (m, c)) in self.0.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = abs.is_one();
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else {
                if !coeff_is_one {
                    write!(f, "{}*", format_rational(&abs))?;
                }
                let mut first = true;
                for &(id, e) in &m.0 {
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "{}", vars::name(VarId(id)))?;
                    } else {
                        write!(f, "{}^{}", vars::name(VarId(id)), e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
