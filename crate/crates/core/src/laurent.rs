//! Sparse Laurent polynomials in one or two variables and constant-term
//! sequences `CT(Δ Kⁿ)`.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::transforms::Sequence;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unsupported number of variables {0} (must be 1 or 2)")]
    UnsupportedDimension(usize),
}

/// Exponents of `x` (and `y`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn zero(d: usize) -> Self {
        Self(alloc::vec![0; d])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl From<&[i64]> for ExponentVector {
    fn from(e: &[i64]) -> Self {
        Self(e.to_vec())
    }
}

/// Laurent polynomial with big-integer coefficients; zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    d: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

fn check_dim(d: usize) -> Result<(), LaurentError> {
    if d == 1 || d == 2 {
        Ok(())
    } else {
        Err(LaurentError::UnsupportedDimension(d))
    }
}

impl LaurentPoly {
    pub fn zero(d: usize) -> Result<Self, LaurentError> {
        check_dim(d)?;
        Ok(Self { d, terms: BTreeMap::new() })
    }

    /// Sums repeated exponents and drops zero coefficients.
    pub fn from_terms<I>(d: usize, terms: I) -> Result<Self, LaurentError>
    where
        I: IntoIterator<Item = (ExponentVector, BigInt)>,
    {
        let mut p = Self::zero(d)?;
        for (e, c) in terms {
            if e.len() != d {
                return Err(LaurentError::DimensionMismatch { expected: d, found: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Shorthand for small integer fixtures.
    pub fn from_i64(d: usize, terms: &[(&[i64], i64)]) -> Result<Self, LaurentError> {
        Self::from_terms(d, terms.iter().map(|(e, c)| (ExponentVector::from(*e), BigInt::from(*c))))
    }

    pub fn one(d: usize) -> Result<Self, LaurentError> {
        Self::from_terms(d, [(ExponentVector::zero(d), BigInt::one())])
    }

    fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, BigInt> {
        &self.terms
    }

    /// Number of stored monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Largest absolute exponent appearing in any monomial.
    pub fn max_abs_exponent(&self) -> i64 {
        self.terms
            .keys()
            .flat_map(|e| e.0.iter().map(|x| x.abs()))
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        const VARS: [&str; 2] = ["x", "y"];
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (v, &p) in VARS.iter().zip(&e.0) {
                match p {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

/// Exact product of two Laurent polynomials in the same variables.
pub fn lp_mul(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    if a.d != b.d {
        return Err(LaurentError::DimensionMismatch { expected: a.d, found: b.d });
    }
    let mut acc: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            *acc.entry(ea.add(eb)).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(LaurentPoly { d: a.d, terms: acc })
}

/// Coefficient of `x^e` (zero if absent).
pub fn coefficient(a: &LaurentPoly, e: &ExponentVector) -> Result<BigInt, LaurentError> {
    if e.len() != a.d {
        return Err(LaurentError::DimensionMismatch { expected: a.d, found: e.len() });
    }
    Ok(a.terms.get(e).cloned().unwrap_or_default())
}

/// The pair `(Δ, K)` whose constant terms `CT(Δ Kⁿ)` form a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CtSpec {
    delta: LaurentPoly,
    kernel: LaurentPoly,
}

impl CtSpec {
    pub fn new(delta: LaurentPoly, kernel: LaurentPoly) -> Result<Self, LaurentError> {
        if delta.d != kernel.d {
            return Err(LaurentError::DimensionMismatch { expected: delta.d, found: kernel.d });
        }
        Ok(Self { delta, kernel })
    }

    pub fn delta(&self) -> &LaurentPoly {
        &self.delta
    }

    pub fn kernel(&self) -> &LaurentPoly {
        &self.kernel
    }

    pub fn d(&self) -> usize {
        self.delta.d
    }
}

/// `CT(Δ Kⁿ)` for `n = 0..=n_max`, keeping `Δ Kⁿ` between steps.
pub fn ct_sequence(spec: &CtSpec, n_max: usize) -> Sequence {
    let zero = ExponentVector::zero(spec.d());
    let mut cur = spec.delta.clone();
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        out.push(cur.terms.get(&zero).cloned().unwrap_or_default());
        if n < n_max {
            cur = lp_mul(&cur, &spec.kernel).expect("dimensions checked by CtSpec::new");
        }
    }
    Sequence::new(out)
}

/// `Δ` for G2, with `x^{-2} y^{-3}` multiplied through.
pub fn g2_delta() -> LaurentPoly {
    let inner: [((i64, i64), i64); 12] = [
        ((2, 3), 1),
        ((1, 3), -1),
        ((-1, 2), 1),
        ((-2, 1), -1),
        ((-3, -1), 1),
        ((-3, -2), -1),
        ((-2, -3), 1),
        ((-1, -3), -1),
        ((1, -2), 1),
        ((2, -1), -1),
        ((3, 1), 1),
        ((3, 2), -1),
    ];
    LaurentPoly::from_terms(
        2,
        inner
            .iter()
            .map(|&((a, b), c)| (ExponentVector::new(alloc::vec![a - 2, b - 3]), BigInt::from(c))),
    )
    .expect("two variables")
}

/// `K = 1 + x + y + xy + 1/x + 1/y + 1/(xy)`
pub fn g2_kernel() -> LaurentPoly {
    LaurentPoly::from_i64(
        2,
        &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 1), (&[-1, 0], 1), (&[0, -1], 1), (&[-1, -1], 1)],
    )
    .expect("two variables")
}

/// `W = 1 - x^2/y + x^3 - x^2 y^2 + y^3 - y^2/x`
pub fn quadrant_w() -> LaurentPoly {
    LaurentPoly::from_i64(
        2,
        &[(&[0, 0], 1), (&[2, -1], -1), (&[3, 0], 1), (&[2, 2], -1), (&[0, 3], 1), (&[-1, 2], -1)],
    )
    .expect("two variables")
}

/// `K = k + x + y + 1/x + 1/y + x/y + y/x`
pub fn quadrant_kernel(k: i64) -> LaurentPoly {
    LaurentPoly::from_i64(
        2,
        &[(&[0, 0], k), (&[1, 0], 1), (&[0, 1], 1), (&[-1, 0], 1), (&[0, -1], 1), (&[1, -1], 1), (&[-1, 1], 1)],
    )
    .expect("two variables")
}

pub fn g2_spec() -> CtSpec {
    CtSpec::new(g2_delta(), g2_kernel()).expect("same dimension")
}

pub fn quadrant_spec(k: i64) -> CtSpec {
    CtSpec::new(quadrant_w(), quadrant_kernel(k)).expect("same dimension")
}

/// `Δ = 1 - x^{-2}`, `K = x + x^{-1}` (the character of the 2-dimensional
/// representation).
pub fn sl2_spec() -> CtSpec {
    let delta = LaurentPoly::from_i64(1, &[(&[0], 1), (&[-2], -1)]).expect("one variable");
    let kernel = LaurentPoly::from_i64(1, &[(&[1], 1), (&[-1], 1)]).expect("one variable");
    CtSpec::new(delta, kernel).expect("same dimension")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn ev(e: &[i64]) -> ExponentVector {
        ExponentVector::from(e)
    }

    #[test]
    fn binomial_square() {
        let a = LaurentPoly::from_i64(1, &[(&[1], 1), (&[-1], 1)]).unwrap();
        let sq = lp_mul(&a, &a).unwrap();
        assert_eq!(sq, LaurentPoly::from_i64(1, &[(&[2], 1), (&[0], 2), (&[-2], 1)]).unwrap());
        assert_eq!(coefficient(&sq, &ev(&[0])).unwrap(), BigInt::from(2));
        assert!(lp_mul(&a, &LaurentPoly::zero(1).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn dimension_checks() {
        let a = LaurentPoly::one(1).unwrap();
        let b = LaurentPoly::one(2).unwrap();
        assert!(lp_mul(&a, &b).is_err());
        assert!(coefficient(&a, &ev(&[0, 0])).is_err());
        assert!(CtSpec::new(a, b).is_err());
        assert!(LaurentPoly::zero(3).is_err());
    }

    #[test]
    fn cancelling_terms_are_dropped() {
        let p = LaurentPoly::from_i64(2, &[(&[1, 0], 3), (&[1, 0], -3), (&[0, 1], 2)]).unwrap();
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn fixture_constant_terms() {
        assert_eq!(coefficient(&g2_delta(), &ev(&[0, 0])).unwrap(), BigInt::one());
        assert_eq!(coefficient(&quadrant_w(), &ev(&[0, 0])).unwrap(), BigInt::one());
        let dk = lp_mul(&g2_delta(), &g2_kernel()).unwrap();
        assert!(coefficient(&dk, &ev(&[0, 0])).unwrap().is_zero());
    }

    #[test]
    fn octant_and_quadrant_rows() {
        assert_eq!(ct_sequence(&g2_spec(), 9), Sequence::from_i64(&[1, 0, 1, 1, 4, 10, 35, 120, 455, 1792]));
        assert_eq!(
            ct_sequence(&quadrant_spec(3), 8),
            Sequence::from_i64(&[1, 3, 11, 47, 225, 1173, 6529, 38265, 233795])
        );
    }

    #[test]
    fn sl2_catalan() {
        let s = ct_sequence(&sl2_spec(), 8);
        assert_eq!(s.every(2), Sequence::from_i64(&[1, 1, 2, 5, 14]));
    }

    #[test]
    fn support_grows_quadratically() {
        let mut cur = g2_delta();
        for n in 1..=12usize {
            cur = lp_mul(&cur, &g2_kernel()).unwrap();
            let side = 2 * (n as i64 + 5) + 1;
            assert!((cur.len() as i64) <= side * side);
        }
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(((-3i64..=3, -3i64..=3), -5i64..=5), 0..6).prop_map(|v| {
            LaurentPoly::from_terms(
                2,
                v.into_iter().map(|((a, b), c)| (ExponentVector::new(vec![a, b]), BigInt::from(c))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn commutative(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(lp_mul(&a, &b).unwrap(), lp_mul(&b, &a).unwrap());
        }

        #[test]
        fn associative(a in small_poly(), b in small_poly(), c in small_poly()) {
            let l = lp_mul(&lp_mul(&a, &b).unwrap(), &c).unwrap();
            let r = lp_mul(&a, &lp_mul(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }
    }
}
