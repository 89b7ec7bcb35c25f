use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{HolonomicError, IntPoly, PRecurrence, RationalFunction};
use crate::series::{rf_to_series, PowerSeries};

/// Linear differential operator `Σ_i c_i(t) ∂^i` with rational-function
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffOp {
    coeffs: Vec<RationalFunction>,
}

impl DiffOp {
    /// Trailing zero coefficients are dropped; the empty operator is zero.
    pub fn new(mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().is_some_and(RationalFunction::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_polys(coeffs: Vec<IntPoly>) -> Self {
        Self::new(coeffs.into_iter().map(RationalFunction::from_poly).collect())
    }

    /// Operator from integer coefficient lists, `c_i = coeffs[i]` ascending in `t`.
    pub fn from_i64(coeffs: &[&[i64]]) -> Self {
        Self::from_polys(coeffs.iter().map(|c| IntPoly::from_i64(c)).collect())
    }

    /// The derivation `∂`.
    pub fn d() -> Self {
        Self::from_i64(&[&[], &[1]])
    }

    /// Multiplication by `t`.
    pub fn t() -> Self {
        Self::from_i64(&[&[0, 1]])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order of the operator; the zero operator has order 0.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RationalFunction {
        self.coeffs.get(i).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn leading(&self) -> RationalFunction {
        self.coeff(self.order())
    }

    /// Integer polynomial coefficients, if every coefficient is a polynomial.
    pub fn polynomial_coeffs(&self) -> Option<Vec<IntPoly>> {
        self.coeffs.iter().map(RationalFunction::as_poly).collect()
    }

    pub fn scale(&self, f: &RationalFunction) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * f).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c}) D")?,
                _ => write!(f, "({c}) D^{i}")?,
            }
        }
        Ok(())
    }
}

fn binomial_row(i: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..i {
        let next = &row[k] * (i - k) / (k + 1);
        row.push(next);
    }
    row
}

/// Product `A·B`, using `∂^i ∘ f = Σ_k C(i,k) f^{(k)} ∂^{i-k}`.
pub fn diffop_mul(a: &DiffOp, b: &DiffOp) -> DiffOp {
    if a.is_zero() || b.is_zero() {
        return DiffOp::new(Vec::new());
    }
    let mut out = vec![RationalFunction::zero(); a.order() + b.order() + 1];
    // derivs[j][k] = k-th derivative of b_j
    let derivs: Vec<Vec<RationalFunction>> = b
        .coeffs
        .iter()
        .map(|bj| {
            let mut ds = vec![bj.clone()];
            for k in 0..a.order() {
                let next = ds[k].derivative();
                ds.push(next);
            }
            ds
        })
        .collect();
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        let binom = binomial_row(i);
        for (j, ds) in derivs.iter().enumerate() {
            for k in 0..=i {
                if ds[k].is_zero() {
                    continue;
                }
                let c = RationalFunction::constant(binom[k].clone().into());
                let term = &(ai * &ds[k]) * &c;
                let slot = &mut out[i - k + j];
                *slot = &*slot + &term;
            }
        }
    }
    DiffOp::new(out)
}

/// Multiplies on the left by the least common multiple of the
/// coefficient denominators and removes the integer content, so that
/// every coefficient becomes an integer polynomial.
pub fn clear_denominators(a: &DiffOp) -> DiffOp {
    let mut l = IntPoly::one();
    for c in &a.coeffs {
        let g = l.gcd(c.denom());
        l = (&l * c.denom()).div_exact(&g).expect("gcd divides the product");
    }
    let scaled: Vec<IntPoly> = a
        .coeffs
        .iter()
        .map(|c| {
            let f = &RationalFunction::from_poly(l.clone()) * c;
            f.as_poly().expect("lcm clears every denominator")
        })
        .collect();
    let content = scaled.iter().fold(BigInt::zero(), |g, p| g.gcd(&p.content()));
    DiffOp::from_polys(
        scaled
            .iter()
            .map(|p| if content.is_zero() { p.clone() } else { p.div_exact_int(&content).unwrap() })
            .collect(),
    )
}

/// `A(g)` as a truncated series; the result has order `N - order(A)`.
///
/// Every coefficient denominator must be nonzero at `t = 0`.
pub fn diffop_apply(a: &DiffOp, g: &PowerSeries) -> Result<PowerSeries, HolonomicError> {
    let m = a.order();
    let n = g.order();
    if n < m {
        return Err(crate::series::SeriesError::OrderTooSmall { order: n, needed: m }.into());
    }
    let out_order = n - m;
    let mut acc = PowerSeries::zero(out_order);
    let mut deriv = g.clone();
    for (i, c) in a.coeffs.iter().enumerate() {
        if i > 0 {
            deriv = deriv.derivative();
        }
        if c.is_zero() {
            continue;
        }
        let cs = rf_to_series(c.numer(), c.denom(), out_order)?;
        acc = &acc + &(&cs * &deriv.truncate(out_order));
    }
    Ok(acc)
}

fn falling(x: &IntPoly, i: usize) -> IntPoly {
    // x (x-1) ... (x-i+1)
    (0..i).fold(IntPoly::one(), |acc, k| &acc * &(x - &IntPoly::from_i64(&[k as i64])))
}

/// Recurrence for the coefficient sequence of the power-series
/// solutions of `A`, which must have integer polynomial coefficients.
///
/// `t^j ∂^i` shifts index by `i - j`; with `s_min` the smallest such shift
/// the recurrence is `Σ_ℓ p_ℓ(n) a(n+ℓ) = 0` where
/// `p_ℓ(n) = Σ_{i-j=ℓ+s_min} c_ij (n+ℓ)(n+ℓ-1)...(n+ℓ-i+1)`. It holds for all `n >= 0`.
pub fn ode_to_recurrence(a: &DiffOp) -> Result<PRecurrence, HolonomicError> {
    let polys = a.polynomial_coeffs().ok_or(HolonomicError::NonPolynomialCoefficient)?;
    let mut terms: Vec<(usize, usize, BigInt)> = Vec::new();
    for (i, p) in polys.iter().enumerate() {
        for (j, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.push((i, j, c.clone()));
            }
        }
    }
    if terms.is_empty() {
        return Err(HolonomicError::EmptyRecurrence);
    }
    let shifts = terms.iter().map(|&(i, j, _)| i as i64 - j as i64);
    let s_min = shifts.clone().min().unwrap();
    let s_max = shifts.max().unwrap();
    let width = (s_max - s_min) as usize;
    let mut coeffs = vec![IntPoly::zero(); width + 1];
    for (i, j, c) in terms {
        let l = (i as i64 - j as i64 - s_min) as usize;
        let x = IntPoly::from_i64(&[l as i64, 1]);
        let term = falling(&x, i).scale(&c);
        coeffs[l] = &coeffs[l] + &term;
    }
    // Cancellation can empty the top slots.
    while coeffs.len() > 1 && coeffs.last().is_some_and(IntPoly::is_zero) {
        coeffs.pop();
    }
    Ok(PRecurrence::new(coeffs)?.normalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomic::unroll;
    use crate::series::rat;

    #[test]
    fn leibniz_commutator() {
        let c = diffop_mul(&DiffOp::d(), &DiffOp::t()).sub(&diffop_mul(&DiffOp::t(), &DiffOp::d()));
        assert_eq!(c, DiffOp::from_i64(&[&[1]]));
    }

    #[test]
    fn derivative_of_constant() {
        let r = diffop_apply(&DiffOp::d(), &PowerSeries::one(5)).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.order(), 4);
    }

    #[test]
    fn exponential() {
        let op = DiffOp::from_i64(&[&[-1], &[1]]);
        let rec = ode_to_recurrence(&op).unwrap();
        assert_eq!(rec.coeffs(), &[IntPoly::from_i64(&[-1]), IntPoly::from_i64(&[1, 1])]);
        // (n+1)! a(n+1) = a(n) has 1/n! as solution; check through the series.
        let exp = PowerSeries::new((0..8u64).scan(rat(1, 1), |f, k| {
            let out = f.clone();
            *f = &*f / rat(k as i64 + 1, 1);
            Some(out)
        }).collect());
        assert!(diffop_apply(&op, &exp).unwrap().is_zero());
    }

    #[test]
    fn geometric_series_recurrence() {
        // (1 - t) y' - y = 0 has y = 1/(1-t)
        let op = DiffOp::from_i64(&[&[-1], &[1, -1]]);
        let rec = ode_to_recurrence(&op).unwrap();
        let a = unroll(&rec, &[BigInt::one()], 6).unwrap();
        assert!(a.iter().all(|x| x.is_one()));
    }

    #[test]
    fn clearing_denominators() {
        let half = RationalFunction::new(IntPoly::from_i64(&[1]), IntPoly::from_i64(&[0, 2]));
        let op = DiffOp::new(vec![half, RationalFunction::one()]);
        assert_eq!(clear_denominators(&op), DiffOp::from_i64(&[&[1], &[0, 2]]));
    }

    #[test]
    fn product_order_and_leading() {
        let a = DiffOp::from_i64(&[&[1], &[0, 1], &[0, 0, 1]]);
        let b = DiffOp::from_i64(&[&[2], &[1, 1]]);
        let p = diffop_mul(&a, &b);
        assert_eq!(p.order(), 3);
        assert_eq!(p.leading(), RationalFunction::from_poly(IntPoly::from_i64(&[0, 0, 1, 1])));
    }
}
