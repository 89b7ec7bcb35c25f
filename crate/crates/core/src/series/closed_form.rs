//! Closed-form generating functions built from `2F1` series, checked
//! coefficient-exactly against recurrence-generated reference terms.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use super::{hypergeom_2f1, rat, rf_to_series, PowerSeries, Rational, SeriesError};
use crate::holonomic::{fixtures, IntPoly};
use crate::reference;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosedForm {
    /// `(R1 2F1(1/3,2/3;2;φ) + R2 2F1(2/3,4/3;3;φ) + 5P) / (30 t^5)`
    T3HypergeometricSimple,
    /// `P/(30 t^5) ∫ S/(P^2 (t-1)^2) [U 2F1(1/3,2/3;1;φ) + V/(1-t)^3 2F1(4/3,5/3;2;φ)] dt`
    T3HypergeometricIntegral,
    /// Expression in `H = g2^{-1/4} 2F1(1/12,5/12;1;1728/J)` and `H'`.
    T3Weierstrass,
    /// Baxter generating function through `2F1(1/3,2/3;1;27x^2/(1-2x)^3)` and its derivative.
    BaxterGf,
    /// Equivalent Baxter form with `2F1(-2/3,2/3;1;·)` and `2F1(1/3,2/3;2;·)`.
    BaxterGfHypergeometric,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 5] = [
        ClosedForm::T3HypergeometricSimple,
        ClosedForm::T3HypergeometricIntegral,
        ClosedForm::T3Weierstrass,
        ClosedForm::BaxterGf,
        ClosedForm::BaxterGfHypergeometric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::T3HypergeometricSimple => "t3_hypergeometric_simple",
            ClosedForm::T3HypergeometricIntegral => "t3_hypergeometric_integral",
            ClosedForm::T3Weierstrass => "t3_weierstrass",
            ClosedForm::BaxterGf => "baxter_gf",
            ClosedForm::BaxterGfHypergeometric => "baxter_gf_hypergeometric",
        }
    }

    /// Power of `t` divided out at the end.
    fn prefactor_valuation(self) -> usize {
        match self {
            ClosedForm::T3HypergeometricSimple
            | ClosedForm::T3HypergeometricIntegral
            | ClosedForm::T3Weierstrass => 5,
            ClosedForm::BaxterGf | ClosedForm::BaxterGfHypergeometric => 2,
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosedForm {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        Self::ALL.into_iter().find(|c| c.name() == s).ok_or(())
    }
}

/// First coefficient where a closed form disagrees with its reference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientMismatch {
    pub index: usize,
    pub expected: BigInt,
    pub found: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormReport {
    pub form: ClosedForm,
    pub order: usize,
    /// Valuation of the numerator series before the `t^k` prefactor is divided out.
    pub numerator_valuation: Option<usize>,
    pub mismatch: Option<CoefficientMismatch>,
}

impl ClosedFormReport {
    pub fn is_success(&self) -> bool {
        self.mismatch.is_none()
    }
}

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

fn polys(factors: &[&[i64]]) -> IntPoly {
    factors.iter().fold(IntPoly::one(), |acc, f| &acc * &poly(f))
}

fn series_of(p: &IntPoly, order: usize) -> PowerSeries {
    PowerSeries::from_poly(p, order)
}

/// `27 (t+1) t^2 / (1-t)^3`
fn phi_t3(order: usize) -> Result<PowerSeries, SeriesError> {
    rf_to_series(&poly(&[0, 0, 27, 27]), &poly(&[1, -3, 3, -1]), order)
}

fn t3_simple_numerator(order: usize) -> Result<PowerSeries, SeriesError> {
    let phi = phi_t3(order)?;
    let f1 = hypergeom_2f1(&rat(1, 3), &rat(2, 3), &rat(2, 1), &phi)?;
    let f2 = hypergeom_2f1(&rat(2, 3), &rat(4, 3), &rat(3, 1), &phi)?;
    let r1 = rf_to_series(&polys(&[&[1, 1], &[1, 1], &[5, 60, 45, 214]]), &poly(&[-1, 1]), order)?;
    let r2 = rf_to_series(
        &polys(&[&[0, 0, 6], &[1, 1], &[1, 1], &[5, 74, 101]]),
        &poly(&[1, -2, 1]),
        order,
    )?;
    let p5 = series_of(&fixtures::p_poly(), order).scale(&rat(5, 1));
    Ok(&(&(&r1 * &f1) + &(&r2 * &f2)) + &p5)
}

fn t3_integral_numerator(order: usize) -> Result<PowerSeries, SeriesError> {
    let inner = order - 1;
    let phi = phi_t3(inner)?;
    let f1 = hypergeom_2f1(&rat(1, 3), &rat(2, 3), &rat(1, 1), &phi)?;
    let f2 = hypergeom_2f1(&rat(4, 3), &rat(5, 3), &rat(2, 1), &phi)?;
    let p = fixtures::p_poly();
    let s = polys(&[&[-1, 7], &[1, 1], &[1, 2], &[1, 2]]);
    let u = polys(&[&[-1, 11], &[-1, 15, -78, 46]]);
    let v = poly(&[-1, 29, -300, 1112, 1115, -13371, -6934, 11870]);
    let weight = rf_to_series(&s, &(&(&p * &p) * &poly(&[1, -2, 1])), inner)?;
    let v_term = rf_to_series(&v, &poly(&[1, -3, 3, -1]), inner)?;
    let bracket = &(&series_of(&u, inner) * &f1) + &(&v_term * &f2);
    let integral = (&weight * &bracket).integrate();
    Ok(&series_of(&p, order) * &integral)
}

fn t3_weierstrass_numerator(order: usize) -> Result<PowerSeries, SeriesError> {
    let m = order + 1;
    let quartic = poly(&[-1, 3, 21, 25]);
    let g2 = &poly(&[-1, 1]) * &quartic;
    let j_inv_num = polys(&[&[0, 0, 0, 0, 0, 0, 1728], &[1, -7], &[1, 2], &[1, 2], &[1, 1], &[1, 1], &[1, 1]]);
    let j_inv_den = &poly(&[-1, 1]).pow(3) * &quartic.pow(3);
    let z = rf_to_series(&j_inv_num, &j_inv_den, m)?;
    let f = hypergeom_2f1(&rat(1, 12), &rat(5, 12), &rat(1, 1), &z)?;
    let h = &series_of(&g2, m).rational_power(&rat(-1, 4))? * &f;
    let dh = h.derivative();
    let a = polys(&[&[59, 182, 155], &[1, 11]]);
    let b = polys(&[&[1, 231, 507, 341], &[1, 5]]);
    let bracket = &(&series_of(&a, order) * &h.truncate(order)) + &(&series_of(&b, order) * &dh);
    let front = polys(&[&[-1, 7], &[1, 2], &[1, 1]]);
    let p60 = series_of(&fixtures::p_poly(), order).scale(&rat(60, 1));
    Ok(&p60 + &(&series_of(&front, order) * &bracket))
}

/// `27 x^2 / (1-2x)^3`
fn phi_baxter(order: usize) -> Result<PowerSeries, SeriesError> {
    rf_to_series(&poly(&[0, 0, 27]), &poly(&[1, -6, 12, -8]), order)
}

fn baxter_numerator(order: usize) -> Result<PowerSeries, SeriesError> {
    let m = order + 1;
    let h = hypergeom_2f1(&rat(1, 3), &rat(2, 3), &rat(1, 1), &phi_baxter(m)?)?;
    let dh = h.derivative();
    let h = h.truncate(order);
    // (1+20x-8x^2)(1-2x) / (12(1+x)); a factor 12 in the numerator instead
    // leaves a pole at x = 0.
    let dh_weight = rf_to_series(&polys(&[&[1, 20, -8], &[1, -2]]), &poly(&[12, 12]), order)?;
    let inner = &h + &(&dh_weight * &dh);
    let front = rf_to_series(&polys(&[&[1, 1], &[1, 1], &[1, -8]]), &poly(&[1, -4, 4]), order)?;
    Ok(&(&front * &inner) - &series_of(&poly(&[1, -1, 3]), order))
}

fn baxter_hypergeometric_numerator(order: usize) -> Result<PowerSeries, SeriesError> {
    let phi = phi_baxter(order)?;
    let fa = hypergeom_2f1(&rat(-2, 3), &rat(2, 3), &rat(1, 1), &phi)?;
    let fb = hypergeom_2f1(&rat(1, 3), &rat(2, 3), &rat(2, 1), &phi)?;
    let wb = rf_to_series(&poly(&[0, -1, -11, 8]), &poly(&[1, -4, 4]), order)?;
    let sum = &(&series_of(&poly(&[-1, 1]), order) + &(&series_of(&poly(&[1, -2]), order) * &fa)) - &(&wb * &fb);
    // The leading -1 is folded in as -3x^2 before dividing by 3x^2.
    Ok(&sum - &series_of(&poly(&[0, 0, 3]), order))
}

fn numerator(form: ClosedForm, order: usize) -> Result<PowerSeries, SeriesError> {
    match form {
        ClosedForm::T3HypergeometricSimple => t3_simple_numerator(order),
        ClosedForm::T3HypergeometricIntegral => t3_integral_numerator(order),
        ClosedForm::T3Weierstrass => t3_weierstrass_numerator(order),
        ClosedForm::BaxterGf => baxter_numerator(order),
        ClosedForm::BaxterGfHypergeometric => baxter_hypergeometric_numerator(order),
    }
}

fn denominator_constant(form: ClosedForm) -> Rational {
    match form {
        ClosedForm::T3HypergeometricSimple | ClosedForm::T3HypergeometricIntegral => rat(30, 1),
        ClosedForm::T3Weierstrass => rat(360, 1),
        ClosedForm::BaxterGf | ClosedForm::BaxterGfHypergeometric => rat(3, 1),
    }
}

/// Generating-function coefficients `0..=order` of the named closed form.
pub fn closed_form_series(form: ClosedForm, order: usize) -> Result<(PowerSeries, Option<usize>), SeriesError> {
    let k = form.prefactor_valuation();
    let num = numerator(form, order + k)?;
    let val = num.valuation();
    let gf = num.div_t_pow(k)?.scale(&denominator_constant(form).recip());
    Ok((gf, val))
}

fn reference_terms(form: ClosedForm, order: usize) -> Vec<BigInt> {
    match form {
        ClosedForm::T3HypergeometricSimple
        | ClosedForm::T3HypergeometricIntegral
        | ClosedForm::T3Weierstrass => reference::t3_by_recurrence(order),
        ClosedForm::BaxterGf | ClosedForm::BaxterGfHypergeometric => reference::baxter_by_recurrence(order),
    }
}

/// Builds the named closed form to order `order` and compares it
/// coefficient by coefficient with the recurrence-generated reference.
pub fn verify_closed_form(form: ClosedForm, order: usize) -> Result<ClosedFormReport, SeriesError> {
    if order < 10 {
        return Err(SeriesError::OrderTooSmall { order, needed: 10 });
    }
    let (gf, numerator_valuation) = closed_form_series(form, order)?;
    let reference = reference_terms(form, order);
    let mismatch = reference
        .iter()
        .zip(gf.coeffs())
        .enumerate()
        .find(|(_, (e, f))| {
            let e = Rational::from_integer((*e).clone());
            &e != *f
        })
        .map(|(index, (e, f))| CoefficientMismatch {
            index,
            expected: e.clone(),
            found: f.clone(),
        });
    Ok(ClosedFormReport {
        form,
        order,
        numerator_valuation,
        mismatch,
    })
}
