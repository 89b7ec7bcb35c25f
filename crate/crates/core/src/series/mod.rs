//! Truncated formal power series with exact rational coefficients.
//!
//! A [`PowerSeries`] of order `N` stores `c_0..=c_N` and stands for
//! `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})`. Binary operations truncate to
//! the smaller order of their operands, so no coefficient that is reported
//! is ever a guess.

mod asymptotics;
mod closed_form;
mod hypergeom;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::holonomic::IntPoly;
use crate::transforms::Sequence;

pub use asymptotics::{asymptotic_estimate, AsymptoticReport, AsymptoticSample, T3_ASYMPTOTIC_CONSTANT};
pub use closed_form::{closed_form_series, verify_closed_form, ClosedForm, ClosedFormReport, CoefficientMismatch};
pub use hypergeom::{hypergeom_2f1, rf_to_series};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by a series with zero constant term")]
    DivisionByNonUnit,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroConstantTerm,
    #[error("rational power requires constant term 1")]
    ConstantTermNotOne,
    #[error("hypergeometric lower parameter {0} is a nonpositive integer")]
    InvalidLowerParameter(Rational),
    #[error("denominator vanishes at t = 0")]
    ZeroDenominatorAtOrigin,
    #[error("expected valuation at least {expected}, found {found}")]
    Valuation { expected: usize, found: usize },
    #[error("series order {order} is too small (need at least {needed})")]
    OrderTooSmall { order: usize, needed: usize },
}

/// Truncated power series `Σ c_n t^n + O(t^{N+1})` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Series whose coefficients are `coeffs`; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector: a series must know at least its constant term.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "power series needs at least one coefficient");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c t^k` truncated to the given order.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The identity series `t`.
    pub fn t(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    pub fn from_integers<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> Self {
        Self::new(it.into_iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    pub fn from_sequence(seq: &Sequence) -> Self {
        Self::from_integers(seq.terms())
    }

    pub fn from_poly(p: &IntPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in p.coeffs().iter().enumerate().take(order + 1) {
            s.coeffs[k] = Rational::from_integer(c.clone());
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self::new(self.coeffs[..=order].to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, or `None` if every known
    /// coefficient vanishes.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Term-wise derivative; the order drops by one (order 0 stays at 0
    /// with a zero coefficient).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term; the order grows by one.
    pub fn integrate(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push(c / Rational::from_integer(BigInt::from(k + 1)));
        }
        Self::new(out)
    }

    /// Multiplication by `t^k`; the order grows by `k`.
    pub fn mul_t_pow(&self, k: usize) -> Self {
        let mut out = vec![Rational::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Self::new(out)
    }

    /// Division by `t^k`, checking that the first `k` coefficients vanish.
    pub fn div_t_pow(&self, k: usize) -> Result<Self, SeriesError> {
        if let Some(v) = self.valuation() {
            if v < k {
                return Err(SeriesError::Valuation { expected: k, found: v });
            }
        }
        if k > self.order() {
            return Err(SeriesError::OrderTooSmall { order: self.order(), needed: k });
        }
        Ok(Self::new(self.coeffs[k..].to_vec()))
    }

    pub fn try_add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::new((0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect())
    }

    pub fn try_mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::DivisionByNonUnit);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(Self::new(out))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self.try_mul(&rhs.inverse()?))
    }

    /// `self(inner(t))`; the inner series must have zero constant term.
    ///
    /// With `v` the valuation of `inner`, the result is exact up to
    /// `t^{(order+1) v - 1}`, and never beyond the order of `inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let Some(v) = inner.valuation() else {
            return Ok(Self::constant(self.coeffs[0].clone(), inner.order()));
        };
        let n = inner.order().min((self.order() + 1) * v - 1);
        let inner = inner.truncate(n);
        let top = self.order().min(n / v);
        let mut acc = Self::constant(self.coeffs[top].clone(), n);
        for k in (0..top).rev() {
            acc = acc.try_mul(&inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Binomial-series expansion of `self^e`; requires constant term 1.
    ///
    /// Uses the coefficient recurrence of `a f' = e a' f`.
    pub fn rational_power(&self, e: &Rational) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let n = self.order();
        let mut f: Vec<Rational> = Vec::with_capacity(n + 1);
        f.push(Rational::one());
        for m in 1..=n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let w = e * Rational::from_integer(BigInt::from(k))
                    - Rational::from_integer(BigInt::from(m - k));
                acc += w * &self.coeffs[k] * &f[m - k];
            }
            f.push(acc / Rational::from_integer(BigInt::from(m)));
        }
        Ok(Self::new(f))
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*t^{k}")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        self.try_add(rhs)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        self.try_add(&-rhs)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        self.try_mul(rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Binary operation selector for [`ps_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    Div,
}

pub fn ps_arith(op: SeriesOp, a: &PowerSeries, b: &PowerSeries) -> Result<PowerSeries, SeriesError> {
    match op {
        SeriesOp::Add => Ok(a + b),
        SeriesOp::Mul => Ok(a * b),
        SeriesOp::Div => a.try_div(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> PowerSeries {
        PowerSeries::new(v.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn geometric_times_one_minus_t() {
        let geo = ints(&[1; 8]);
        let lin = ints(&[1, -1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(&geo * &lin, PowerSeries::one(7));
    }

    #[test]
    fn negative_binomial_from_division() {
        let cube = ints(&[1, -3, 3, -1, 0, 0, 0, 0]);
        let q = ps_arith(SeriesOp::Div, &PowerSeries::one(7), &cube).unwrap();
        assert_eq!(q, ints(&[1, 3, 6, 10, 15, 21, 28, 36]));
    }

    #[test]
    fn division_by_non_unit_fails() {
        assert_eq!(
            PowerSeries::one(3).try_div(&PowerSeries::t(3)),
            Err(SeriesError::DivisionByNonUnit)
        );
    }

    #[test]
    fn compose_geometric_with_t_squared() {
        let geo = ints(&[1; 9]);
        let t2 = PowerSeries::monomial(rat(1, 1), 2, 8);
        assert_eq!(geo.compose(&t2).unwrap(), ints(&[1, 0, 1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(geo.compose(&PowerSeries::one(8)), Err(SeriesError::NonzeroConstantTerm));
    }

    #[test]
    fn sqrt_one_plus_t() {
        let s = ints(&[1, 1, 0, 0]).rational_power(&rat(1, 2)).unwrap();
        assert_eq!(s.coeffs(), &[rat(1, 1), rat(1, 2), rat(-1, 8), rat(1, 16)]);
        let zero_pow = ints(&[1, 5, 7]).rational_power(&rat(0, 1)).unwrap();
        assert_eq!(zero_pow, PowerSeries::one(2));
        assert_eq!(ints(&[2, 1]).rational_power(&rat(1, 2)), Err(SeriesError::ConstantTermNotOne));
    }

    #[test]
    fn integrate_and_differentiate() {
        assert_eq!(PowerSeries::one(3).integrate(), PowerSeries::t(4));
        let a = ints(&[7, 1, 2, 3]);
        let back = a.derivative().integrate();
        assert_eq!(back, ints(&[0, 1, 2, 3]));
    }

    #[test]
    fn div_t_pow_checks_valuation() {
        let a = ints(&[0, 0, 3, 4]);
        assert_eq!(a.div_t_pow(2).unwrap(), ints(&[3, 4]));
        assert_eq!(a.div_t_pow(3), Err(SeriesError::Valuation { expected: 3, found: 2 }));
    }

    fn small_series(len: usize) -> impl Strategy<Value = PowerSeries> {
        proptest::collection::vec(-9i64..9, len).prop_map(|v| ints(&v))
    }

    proptest! {
        #[test]
        fn mul_then_div_round_trips(a in small_series(8), mut b in small_series(8), c0 in 1i64..5) {
            b.coeffs[0] = rat(c0, 1);
            prop_assert_eq!((&a * &b).try_div(&b).unwrap(), a);
        }

        #[test]
        fn rational_power_inverts(mut a in small_series(7)) {
            a.coeffs[0] = rat(1, 1);
            let q = a.rational_power(&rat(-1, 4)).unwrap();
            let q4 = &(&q * &q) * &(&q * &q);
            prop_assert_eq!(&q4 * &a, PowerSeries::one(6));
        }
    }
}
