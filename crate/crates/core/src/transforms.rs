//! Binomial transforms of integer sequences and of truncated generating
//! functions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::series::{PowerSeries, Rational};

/// Finite prefix `a(0..=n_max)` of an integer sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Sequence {
    terms: Vec<BigInt>,
}

impl Sequence {
    pub fn new(terms: Vec<BigInt>) -> Self {
        Self { terms }
    }

    pub fn from_i64(terms: &[i64]) -> Self {
        Self::new(terms.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<BigInt> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.terms.get(n)
    }

    /// First `len` terms (or all of them, if fewer).
    pub fn prefix(&self, len: usize) -> Self {
        Self::new(self.terms.iter().take(len).cloned().collect())
    }

    /// Terms at indices `0, step, 2 step, ...`.
    pub fn every(&self, step: usize) -> Self {
        Self::new(self.terms.iter().step_by(step.max(1)).cloned().collect())
    }
}

impl From<Vec<BigInt>> for Sequence {
    fn from(terms: Vec<BigInt>) -> Self {
        Self::new(terms)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// `b(n) = Σ_i k^{n-i} C(n,i) a(i)`; `k = 1` is the binomial transform and
/// `k = -1` its inverse.
pub fn bt_power(a: &Sequence, k: i64) -> Sequence {
    let k = BigInt::from(k);
    let mut row: Vec<BigInt> = Vec::with_capacity(a.len());
    let mut out = Vec::with_capacity(a.len());
    for n in 0..a.len() {
        // Pascal row n, updated in place from row n-1.
        row.push(BigInt::one());
        for i in (1..n).rev() {
            let prev = row[i - 1].clone();
            row[i] += prev;
        }
        let mut kp = BigInt::one();
        let mut s = BigInt::zero();
        for i in (0..=n).rev() {
            s += &kp * &row[i] * &a.terms[i];
            kp *= &k;
        }
        out.push(s);
    }
    Sequence::new(out)
}

/// `(1/(1-kt)) G(t/(1-kt))` to the order of `g`.
pub fn bt_series(g: &PowerSeries, k: i64) -> PowerSeries {
    let n = g.order();
    let kr = Rational::from_integer(BigInt::from(k));
    // 1/(1-kt) = Σ k^i t^i
    let mut geo = vec![Rational::one(); n + 1];
    for i in 1..=n {
        geo[i] = &geo[i - 1] * &kr;
    }
    let geo = PowerSeries::new(geo);
    let inner = &PowerSeries::t(n) * &geo;
    let composed = g.compose(&inner).expect("t/(1-kt) has zero constant term");
    &geo * &composed
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn transform_pairs() {
        let t3 = Sequence::from_i64(&[1, 0, 1, 1, 4, 10]);
        let e3 = Sequence::from_i64(&[1, 1, 2, 5, 15, 51]);
        assert_eq!(bt_power(&t3, 1), e3);
        assert_eq!(bt_power(&e3, -1), t3);
        let s0 = Sequence::from_i64(&[1, 0, 2, 2, 12, 30]);
        assert_eq!(bt_power(&s0, 2), Sequence::from_i64(&[1, 2, 6, 22, 92, 422]));
    }

    #[test]
    fn series_transform() {
        let t3 = Sequence::from_i64(&[1, 0, 1, 1, 4, 10, 35, 120, 455, 1792]);
        let e3 = Sequence::from_i64(&[1, 1, 2, 5, 15, 51, 191, 772, 3320, 15032]);
        let g = PowerSeries::from_sequence(&t3);
        assert_eq!(bt_series(&g, 1), PowerSeries::from_sequence(&e3));
        assert_eq!(bt_series(&g, 0), g);
    }

    fn small_seq() -> impl Strategy<Value = Sequence> {
        prop::collection::vec(-50i64..50, 1..12).prop_map(|v| Sequence::from_i64(&v))
    }

    proptest! {
        #[test]
        fn group_law(a in small_seq(), j in -3i64..=3, k in -3i64..=3) {
            prop_assert_eq!(bt_power(&bt_power(&a, j), k), bt_power(&a, j + k));
        }

        #[test]
        fn series_consistency(a in small_seq(), k in -3i64..=3) {
            let lhs = PowerSeries::from_sequence(&bt_power(&a, k));
            prop_assert_eq!(lhs, bt_series(&PowerSeries::from_sequence(&a), k));
        }

        #[test]
        fn series_inverse(a in small_seq(), k in -3i64..=3) {
            let g = PowerSeries::from_sequence(&a);
            prop_assert_eq!(bt_series(&bt_series(&g, k), -k), g);
        }
    }
}
