//! Exact arithmetic over Q(q) and its extensions by central commuting
//! parameters.
//!
//! A [`Scalar`] is a reduced fraction of multivariate polynomials over Q in
//! `q` and any declared parameters. The stored form is canonical (gcd of
//! numerator and denominator is a unit, denominator monic in the global
//! graded-lexicographic order), so equality of scalars is representation
//! equality; this is the zero test every downstream elimination relies on.

pub mod parse;
pub mod poly;
pub mod vars;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
pub use parse::parse_scalar;
pub use poly::Poly;
pub use vars::VarId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    fn normalized(num: Poly, den: Poly) -> Scalar {
        assert!(!den.is_zero(), "scalar denominator must be nonzero");
        if num.is_zero() {
            return Scalar { num: Poly::zero(), den: Poly::one() };
        }
        let g = Poly::gcd(&num, &den);
        let num = num.exact_div(&g).unwrap();
        let den = den.exact_div(&g).unwrap();
        Scalar::monic(num, den)
    }

    /// Make the (already reduced) fraction's denominator monic.
    fn monic(mut num: Poly, mut den: Poly) -> Scalar {
        let lc = den.leading().unwrap().1.clone();
        if !lc.is_one() {
            let inv = BigRational::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Scalar { num, den }
    }

    pub fn zero() -> Scalar {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Scalar {
        Scalar { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar { num: Poly::from_int(n), den: Poly::one() }
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar { num: Poly::constant(r), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Scalar {
        Scalar { num: p, den: Poly::one() }
    }

    /// The deformation parameter q.
    pub fn q() -> Scalar {
        Scalar { num: Poly::var(vars::q_var()), den: Poly::one() }
    }

    /// A central commuting parameter, interned by name.
    pub fn param(name: &str) -> Scalar {
        Scalar { num: Poly::var(vars::intern(name)), den: Poly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if num.is_zero() {
                return Scalar::zero();
            }
            let g = Poly::gcd(&num, &self.den);
            return Scalar::monic(
                num.exact_div(&g).unwrap(),
                self.den.exact_div(&g).unwrap(),
            );
        }
        // Reduced-denominator addition: with g = gcd(d1, d2) the sum is
        // (n1·(d2/g) + n2·(d1/g)) / (d1·(d2/g)), and only factors of g can
        // still cancel.
        let g = Poly::gcd(&self.den, &other.den);
        let d2g = other.den.exact_div(&g).unwrap();
        let d1g = self.den.exact_div(&g).unwrap();
        let num = self.num.mul(&d2g).add(&other.num.mul(&d1g));
        if num.is_zero() {
            return Scalar::zero();
        }
        let g2 = Poly::gcd(&num, &g);
        let num = num.exact_div(&g2).unwrap();
        let den = self.den.mul(&d2g).exact_div(&g2).unwrap();
        Scalar::monic(num, den)
    }

    pub fn neg(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        // Cross-cancel before multiplying; products of reduced pairs stay
        // reduced.
        let g1 = Poly::gcd(&self.num, &other.den);
        let g2 = Poly::gcd(&other.num, &self.den);
        let num = self
            .num
            .exact_div(&g1)
            .unwrap()
            .mul(&other.num.exact_div(&g2).unwrap());
        let den = self
            .den
            .exact_div(&g2)
            .unwrap()
            .mul(&other.den.exact_div(&g1).unwrap());
        Scalar::monic(num, den)
    }

    /// Multiplicative inverse; panics on zero (callers guard).
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "cannot invert the zero scalar");
        Scalar::normalized(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: i64) -> Scalar {
        if e == 0 {
            return Scalar::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Substitute rational values for named parameters (and possibly q).
    ///
    /// Errors with [`Error::Genericity`] when q is assigned 0, 1 or −1 and
    /// with [`Error::Pole`] when the denominator vanishes.
    pub fn specialize(&self, assignment: &BTreeMap<VarId, BigRational>) -> Result<Scalar> {
        if let Some(qv) = assignment.get(&vars::q_var()) {
            if qv.is_zero() || qv.abs().is_one() {
                return Err(Error::Genericity(format!(
                    "{}/{}",
                    qv.numer(),
                    qv.denom()
                )));
            }
        }
        self.eval_unguarded(assignment)
    }

    /// Substitution without the genericity guard on q; still pole-checked.
    /// Used by limit tests (q → 1) that the public API deliberately forbids.
    pub fn eval_unguarded(&self, assignment: &BTreeMap<VarId, BigRational>) -> Result<Scalar> {
        let den = self.den.specialize(assignment);
        if den.is_zero() {
            let desc: Vec<String> = assignment
                .iter()
                .map(|(v, r)| format!("{} = {}/{}", vars::name(*v), r.numer(), r.denom()))
                .collect();
            return Err(Error::Pole(desc.join(", ")));
        }
        let num = self.num.specialize(assignment);
        Ok(Scalar::normalized(num, den))
    }

    /// Fully numeric value, if constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.display())
        } else {
            write!(f, "({})/({})", self.num.display(), self.den.display())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QNumberMode {
    Hecke,
    Classical,
}

/// The q-number k_q = (q^k − q^(−k))/(q − q^(−1)) in Hecke mode, or the
/// plain integer k in classical mode.
pub fn q_number(k: u32, mode: QNumberMode) -> Scalar {
    match mode {
        QNumberMode::Classical => Scalar::from_int(k as i64),
        QNumberMode::Hecke => {
            // (q^k − q^−k)/(q − q^−1) = (q^{2k} − 1)/(q^{k−1} (q^2 − 1))
            if k == 0 {
                return Scalar::zero();
            }
            let q = Scalar::q();
            q.pow(k as i64)
                .sub(&q.pow(-(k as i64)))
                .div(&q.sub(&q.pow(-1)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn big(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn q_number_basics() {
        assert!(q_number(0, QNumberMode::Hecke).is_zero());
        assert!(q_number(1, QNumberMode::Hecke).is_one());
        // 2_q = q + q^{-1}
        let q = Scalar::q();
        let expect = q.add(&q.pow(-1));
        assert_eq!(q_number(2, QNumberMode::Hecke), expect);
        assert_eq!(q_number(5, QNumberMode::Classical), Scalar::from_int(5));
    }

    #[test]
    fn q_number_product_identity() {
        // k_q * (q − q^{-1}) = q^k − q^{-k} for 0 ≤ k ≤ 12
        let q = Scalar::q();
        let d = q.sub(&q.pow(-1));
        for k in 0..=12u32 {
            let lhs = q_number(k, QNumberMode::Hecke).mul(&d);
            let rhs = q.pow(k as i64).sub(&q.pow(-(k as i64)));
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn specialize_q_number_three() {
        // Oracle: direct big-rational evaluation of (q^3 − q^{-3})/(q − q^{-1}) at q = 3.
        let q = big(3);
        let num = q.pow(3) - q.pow(-3);
        let den = &q - q.pow(-1);
        let expect = num / den;
        assert_eq!(expect, BigRational::new(BigInt::from(91), BigInt::from(9)));

        let mut asn = BTreeMap::new();
        asn.insert(vars::q_var(), big(3));
        let got = q_number(3, QNumberMode::Hecke).specialize(&asn).unwrap();
        assert_eq!(got.as_rational(), Some(expect));
    }

    #[test]
    fn specialize_simple_substitution() {
        let mut asn = BTreeMap::new();
        asn.insert(vars::q_var(), big(2));
        let x = Scalar::q().add(&Scalar::q().pow(-1));
        assert_eq!(
            x.specialize(&asn).unwrap().as_rational(),
            Some(BigRational::new(BigInt::from(5), BigInt::from(2)))
        );
    }

    #[test]
    fn specialize_pole_and_genericity() {
        let one_over_qm1 = Scalar::one().div(&Scalar::q().sub(&Scalar::one()));
        let mut at_two = BTreeMap::new();
        at_two.insert(vars::q_var(), big(2));
        assert!(one_over_qm1.specialize(&at_two).is_ok());

        let mut at_one = BTreeMap::new();
        at_one.insert(vars::q_var(), big(1));
        assert!(matches!(
            one_over_qm1.specialize(&at_one),
            Err(Error::Genericity(_))
        ));
        // Pole without the genericity trigger: 1/(q−2) at q = 2.
        let f = Scalar::one().div(&Scalar::q().sub(&Scalar::from_int(2)));
        assert!(matches!(f.specialize(&at_two), Err(Error::Pole(_))));
    }

    #[test]
    fn denominator_is_monic_canonical() {
        // (2q)/(2q^2+2) must store as q/(q^2+1)
        let x = Scalar::from_int(2)
            .mul(&Scalar::q())
            .div(&Scalar::from_int(2).mul(&Scalar::q().pow(2)).add(&Scalar::from_int(2)));
        assert_eq!(x.denominator().leading().unwrap().1, &BigRational::one());
        assert_eq!(format!("{x}"), "(q)/(q^2 + 1)");
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        // Small random elements of Q(q): sums of c * q^e with e in −2..=2.
        proptest::collection::vec((-4i64..=4, -2i64..=2), 1..4).prop_map(|terms| {
            let mut acc = Scalar::zero();
            for (c, e) in terms {
                acc = acc.add(&Scalar::from_int(c).mul(&Scalar::q().pow(e)));
            }
            acc
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            let assoc = a.add(&b).add(&c);
            let assoc2 = a.add(&b.add(&c));
            prop_assert_eq!(assoc, assoc2);
            let distr = a.mul(&b.add(&c));
            let distr2 = a.mul(&b).add(&a.mul(&c));
            prop_assert_eq!(distr, distr2);
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv()).is_one());
            }
        }

        #[test]
        fn zero_test_matches_specialization(a in arb_scalar(), b in arb_scalar()) {
            // x − y canonicalizes to zero iff it vanishes at sample points
            // (away from poles).
            let d = a.sub(&b);
            for qv in [2i64, 3, 5, 7] {
                let mut asn = BTreeMap::new();
                asn.insert(vars::q_var(), big(qv));
                if let Ok(v) = d.specialize(&asn) {
                    if d.is_zero() {
                        prop_assert!(v.is_zero());
                    }
                }
            }
        }
    }
}
