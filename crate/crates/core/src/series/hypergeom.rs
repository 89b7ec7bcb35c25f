use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{PowerSeries, Rational, SeriesError};
use crate::holonomic::IntPoly;

/// `2F1(a, b; c; inner)` truncated to the order of `inner`.
///
/// The inner argument must have zero constant term. Only the terms
/// `inner^k` with `k * valuation(inner) <= order` are summed.
pub fn hypergeom_2f1(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    inner: &PowerSeries,
) -> Result<PowerSeries, SeriesError> {
    if c.is_integer() && !c.is_positive() {
        return Err(SeriesError::InvalidLowerParameter(c.clone()));
    }
    if !inner.coeff(0).is_zero() {
        return Err(SeriesError::NonzeroConstantTerm);
    }
    let n = inner.order();
    let top = match inner.valuation() {
        Some(v) => n / v,
        None => 0,
    };
    let mut terms: Vec<Rational> = Vec::with_capacity(top + 1);
    terms.push(Rational::one());
    for k in 0..top {
        let kk = Rational::from_integer(BigInt::from(k));
        let next = &terms[k] * (a + &kk) * (b + &kk)
            / ((c + &kk) * (&kk + Rational::one()));
        terms.push(next);
    }
    PowerSeries::new(terms).compose(inner)
}

/// Expansion of `num / den` to order `order`; needs `den(0) != 0`.
pub fn rf_to_series(num: &IntPoly, den: &IntPoly, order: usize) -> Result<PowerSeries, SeriesError> {
    if den.coeff(0).is_zero() {
        return Err(SeriesError::ZeroDenominatorAtOrigin);
    }
    PowerSeries::from_poly(num, order).try_div(&PowerSeries::from_poly(den, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    #[test]
    fn first_coefficient_is_pochhammer_ratio() {
        let z = PowerSeries::t(4);
        let f = hypergeom_2f1(&rat(1, 3), &rat(2, 3), &rat(1, 1), &z).unwrap();
        assert_eq!(f.coeff(0), &rat(1, 1));
        assert_eq!(f.coeff(1), &rat(2, 9));
    }

    #[test]
    fn zero_argument_gives_one() {
        let f = hypergeom_2f1(&rat(1, 3), &rat(2, 3), &rat(1, 1), &PowerSeries::zero(6)).unwrap();
        assert_eq!(f, PowerSeries::one(6));
    }

    #[test]
    fn collapses_to_geometric() {
        let f = hypergeom_2f1(&rat(1, 1), &rat(1, 1), &rat(1, 1), &PowerSeries::t(6)).unwrap();
        assert_eq!(f.coeffs(), alloc::vec![rat(1, 1); 7].as_slice());
    }

    #[test]
    fn rejects_nonpositive_integer_c() {
        let err = hypergeom_2f1(&rat(1, 2), &rat(1, 2), &rat(-2, 1), &PowerSeries::t(3));
        assert_eq!(err, Err(SeriesError::InvalidLowerParameter(rat(-2, 1))));
    }

    #[test]
    fn rational_function_expansions() {
        let one_minus_t_sq = IntPoly::from_i64(&[1, -2, 1]);
        let s = rf_to_series(&IntPoly::one(), &one_minus_t_sq, 5).unwrap();
        assert_eq!(s.coeffs(), &[rat(1, 1), rat(2, 1), rat(3, 1), rat(4, 1), rat(5, 1), rat(6, 1)]);

        let p = IntPoly::from_i64(&[1, 15, 46, 66, 28]);
        let s = rf_to_series(&p, &IntPoly::one(), 6).unwrap();
        assert_eq!(s, PowerSeries::from_poly(&p, 6));

        assert_eq!(
            rf_to_series(&IntPoly::one(), &IntPoly::from_i64(&[0, 1]), 3),
            Err(SeriesError::ZeroDenominatorAtOrigin)
        );
    }
}
