use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{HolonomicError, IntPoly};
use crate::series::Rational;

/// Linear recurrence `Σ_j p_j(n) a(n+j) = 0` with integer polynomial
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PRecurrence {
    coeffs: Vec<IntPoly>,
}

impl PRecurrence {
    /// Builds a recurrence from `p_0..=p_r`; `p_r` must be nonzero.
    pub fn new(coeffs: Vec<IntPoly>) -> Result<Self, HolonomicError> {
        match coeffs.last() {
            None => Err(HolonomicError::EmptyRecurrence),
            Some(p) if p.is_zero() => Err(HolonomicError::ZeroLeadingCoefficient),
            Some(_) => Ok(Self { coeffs }),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn leading(&self) -> &IntPoly {
        &self.coeffs[self.order()]
    }

    /// Largest degree among the coefficient polynomials.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().filter_map(IntPoly::degree).max().unwrap_or(0)
    }

    /// Divides out the common integer content and makes the leading
    /// coefficient of `p_r` positive.
    pub fn normalized(&self) -> Self {
        let g = self
            .coeffs
            .iter()
            .fold(BigInt::zero(), |g, p| g.gcd(&p.content()));
        let g = if self.leading().leading().is_negative() { -g } else { g };
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|p| p.div_exact_int(&g).expect("content divides every coefficient"))
                .collect(),
        }
    }

    /// Same recurrence with `n` replaced by `n + by`.
    pub fn shift(&self, by: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|p| p.shift(by)).collect(),
        }
    }

    /// `Σ_j p_j(n) a(n+j)`; `a` must hold at least `n + r + 1` terms.
    pub fn residual(&self, a: &[BigInt], n: usize) -> BigInt {
        let nn = BigInt::from(n);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, p)| p.eval(&nn) * &a[n + j])
            .sum()
    }
}

impl fmt::Display for PRecurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, p) in self.coeffs.iter().enumerate() {
            if j > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({p}) a(n+{j})")?;
        }
        f.write_str(" = 0")
    }
}

fn leading_at(rec: &PRecurrence, n: usize) -> Result<BigInt, HolonomicError> {
    let lc = rec.leading().eval(&BigInt::from(n));
    if lc.is_zero() {
        Err(HolonomicError::LeadingVanishes(n))
    } else {
        Ok(lc)
    }
}

/// Extends `initial` to `n_max + 1` terms using `rec`.
///
/// Every division must be exact; a remainder is reported as an error
/// rather than switching to rationals (see [`unroll_rational`]).
pub fn unroll(rec: &PRecurrence, initial: &[BigInt], n_max: usize) -> Result<Vec<BigInt>, HolonomicError> {
    let r = rec.order();
    if initial.len() < r {
        return Err(HolonomicError::TooFewInitialTerms { needed: r, got: initial.len() });
    }
    let mut a: Vec<BigInt> = initial.iter().take(n_max + 1).cloned().collect();
    while a.len() <= n_max {
        let m = a.len();
        let n = m - r;
        let lc = leading_at(rec, n)?;
        let nn = BigInt::from(n);
        let s: BigInt = rec.coeffs[..r]
            .iter()
            .enumerate()
            .map(|(j, p)| p.eval(&nn) * &a[n + j])
            .sum();
        let (q, rem) = (-s).div_rem(&lc);
        if !rem.is_zero() {
            return Err(HolonomicError::InexactDivision(n));
        }
        a.push(q);
    }
    Ok(a)
}

/// Like [`unroll`] but over the rationals, for recurrences whose
/// solutions need not be integral.
pub fn unroll_rational(
    rec: &PRecurrence,
    initial: &[Rational],
    n_max: usize,
) -> Result<Vec<Rational>, HolonomicError> {
    let r = rec.order();
    if initial.len() < r {
        return Err(HolonomicError::TooFewInitialTerms { needed: r, got: initial.len() });
    }
    let mut a: Vec<Rational> = initial.iter().take(n_max + 1).cloned().collect();
    while a.len() <= n_max {
        let n = a.len() - r;
        let lc = leading_at(rec, n)?;
        let nn = Rational::from_integer(BigInt::from(n));
        let s: Rational = rec.coeffs[..r]
            .iter()
            .enumerate()
            .map(|(j, p)| p.eval_rational(&nn) * &a[n + j])
            .sum();
        a.push(-s / Rational::from_integer(lc));
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecurrenceCheck {
    /// All `equations` applicable instances hold.
    Satisfied { equations: usize },
    /// The instance at `n` is the first one that fails.
    Violated { n: usize, residual: BigInt },
}

impl RecurrenceCheck {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, RecurrenceCheck::Satisfied { .. })
    }
}

/// Checks `rec` at every `n` with `n + r < a.len()`.
pub fn check_recurrence(rec: &PRecurrence, a: &[BigInt]) -> Result<RecurrenceCheck, HolonomicError> {
    let r = rec.order();
    if a.len() <= r {
        return Err(HolonomicError::InsufficientData { len: a.len(), needed: r + 1 });
    }
    let equations = a.len() - r;
    for n in 0..equations {
        let res = rec.residual(a, n);
        if !res.is_zero() {
            return Ok(RecurrenceCheck::Violated { n, residual: res });
        }
    }
    Ok(RecurrenceCheck::Satisfied { equations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn fib() -> PRecurrence {
        PRecurrence::new(vec![IntPoly::from_i64(&[1]), IntPoly::from_i64(&[1]), IntPoly::from_i64(&[-1])]).unwrap()
    }

    #[test]
    fn fibonacci() {
        let a = unroll(&fib(), &ints(&[0, 1]), 10).unwrap();
        assert_eq!(a, ints(&[0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]));
        assert!(check_recurrence(&fib(), &a).unwrap().is_satisfied());
    }

    #[test]
    fn factorial_needs_exact_division() {
        // (n+1) a(n) - a(n+1) = 0 gives n!; the reverse direction does not divide.
        let fact = PRecurrence::new(vec![IntPoly::from_i64(&[1, 1]), IntPoly::from_i64(&[-1])]).unwrap();
        assert_eq!(unroll(&fact, &ints(&[1]), 5).unwrap(), ints(&[1, 1, 2, 6, 24, 120]));
        let inv = PRecurrence::new(vec![IntPoly::from_i64(&[1]), IntPoly::from_i64(&[-1, -1])]).unwrap();
        assert_eq!(unroll(&inv, &ints(&[1]), 3), Err(HolonomicError::InexactDivision(1)));
        let q = unroll_rational(&inv, &[Rational::from_integer(1.into())], 3).unwrap();
        assert_eq!(q[3], Rational::new(1.into(), 6.into()));
    }

    #[test]
    fn vanishing_leading_coefficient() {
        let rec = PRecurrence::new(vec![IntPoly::from_i64(&[2, -1]), IntPoly::from_i64(&[-2, 1])]).unwrap();
        assert_eq!(unroll(&rec, &ints(&[1]), 4), Err(HolonomicError::LeadingVanishes(2)));
    }

    #[test]
    fn violation_index() {
        let mut a = unroll(&fib(), &ints(&[0, 1]), 8).unwrap();
        a[5] += 1;
        assert_eq!(
            check_recurrence(&fib(), &a).unwrap(),
            RecurrenceCheck::Violated { n: 3, residual: BigInt::from(-1) }
        );
    }

    #[test]
    fn normalization() {
        let rec = PRecurrence::new(vec![IntPoly::from_i64(&[4, 2]), IntPoly::from_i64(&[-6])]).unwrap();
        let n = rec.normalized();
        assert_eq!(n.coeffs(), &[IntPoly::from_i64(&[-2, -1]), IntPoly::from_i64(&[3])]);
    }

    #[test]
    fn rejects_zero_leading() {
        assert_eq!(
            PRecurrence::new(vec![IntPoly::one(), IntPoly::zero()]),
            Err(HolonomicError::ZeroLeadingCoefficient)
        );
    }
}
