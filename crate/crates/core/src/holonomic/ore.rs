//! Shift-operator algebra `Q(n)[S]` with `S f(n) = f(n+1) S`.

use alloc::vec;
use alloc::vec::Vec;

use super::{PRecurrence, RationalFunction};

/// `Σ_j c_j(n) S^j` with rational-function coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftOperator {
    coeffs: Vec<RationalFunction>,
}

impl ShiftOperator {
    pub fn new(mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().is_some_and(RationalFunction::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_recurrence(rec: &PRecurrence) -> Self {
        Self::new(rec.coeffs().iter().cloned().map(RationalFunction::from_poly).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    /// `self · other`
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![RationalFunction::zero(); self.order() + other.order() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let term = a * &b.shift(i as i64);
                out[i + j] = &out[i + j] + &term;
            }
        }
        Self::new(out)
    }
}

/// Right division in the shift algebra: returns `M` with `R2 = M · R1`,
/// or `None` when the remainder is nonzero.
pub fn shift_right_divide(r2: &PRecurrence, r1: &PRecurrence) -> Option<ShiftOperator> {
    let d1 = r1.order();
    if r2.order() < d1 {
        return None;
    }
    let divisor = ShiftOperator::from_recurrence(r1);
    let lc1 = divisor.coeffs[d1].clone();
    let mut rem = ShiftOperator::from_recurrence(r2).coeffs;
    let mut quot = vec![RationalFunction::zero(); r2.order() - d1 + 1];
    while rem.len() > d1 {
        let top = rem.len() - 1;
        let d = top - d1;
        let c = &rem[top] * &lc1.shift(d as i64).inv();
        for (j, p) in divisor.coeffs.iter().enumerate() {
            let t = &c * &p.shift(d as i64);
            rem[j + d] = &rem[j + d] - &t;
        }
        debug_assert!(rem[top].is_zero());
        quot[d] = c;
        while rem.last().is_some_and(RationalFunction::is_zero) {
            rem.pop();
        }
    }
    if rem.is_empty() {
        Some(ShiftOperator::new(quot))
    } else {
        None
    }
}
