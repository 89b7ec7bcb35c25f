use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::linalg::integer_nullspace;
use super::{HolonomicError, IntPoly, PRecurrence};

/// Length needed to guess up to (`max_order`, `max_degree`) with at least
/// ten equations beyond the number of unknowns at every tried shape.
pub fn guess_length_needed(max_order: usize, max_degree: usize) -> usize {
    (max_order + 1) * (max_degree + 1) + max_order + 10
}

fn try_shape(a: &[BigInt], order: usize, degree: usize) -> Option<PRecurrence> {
    let unknowns = (order + 1) * (degree + 1);
    let rows: Vec<Vec<BigInt>> = (0..a.len() - order)
        .map(|n| {
            let mut powers = Vec::with_capacity(degree + 1);
            let mut p = BigInt::one();
            for _ in 0..=degree {
                powers.push(p.clone());
                p *= n;
            }
            let mut row = Vec::with_capacity(unknowns);
            for j in 0..=order {
                for pw in &powers {
                    row.push(pw * &a[n + j]);
                }
            }
            row
        })
        .collect();
    let kernel = integer_nullspace(rows, unknowns);
    kernel.into_iter().find_map(|v| {
        let coeffs: Vec<IntPoly> = v.chunks(degree + 1).map(|c| IntPoly::new(c.to_vec())).collect();
        if coeffs[0].is_zero() {
            return None;
        }
        PRecurrence::new(coeffs).ok().map(|r| r.normalized())
    })
}

/// Searches for the recurrence of least order, then least degree, that
/// annihilates every term of `a`.
///
/// Requires `a.len() >= guess_length_needed(max_order, max_degree)`, which
/// leaves at least ten surplus equations for every candidate shape.
pub fn guess_recurrence(
    a: &[BigInt],
    max_order: usize,
    max_degree: usize,
) -> Result<Option<PRecurrence>, HolonomicError> {
    let needed = guess_length_needed(max_order, max_degree);
    if a.len() < needed {
        return Err(HolonomicError::InsufficientData { len: a.len(), needed });
    }
    if a.iter().all(Zero::is_zero) {
        return Ok(None);
    }
    for order in 1..=max_order {
        for degree in 0..=max_degree {
            if let Some(rec) = try_shape(a, order, degree) {
                return Ok(Some(rec));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomic::{check_recurrence, unroll};
    use alloc::vec;

    fn ints(v: impl IntoIterator<Item = i64>) -> Vec<BigInt> {
        v.into_iter().map(BigInt::from).collect()
    }

    #[test]
    fn constant_sequence() {
        let rec = guess_recurrence(&ints([1; 20]), 1, 1).unwrap().unwrap();
        assert_eq!(rec.coeffs(), &[IntPoly::from_i64(&[-1]), IntPoly::from_i64(&[1])]);
    }

    #[test]
    fn catalan_numbers() {
        let cat = PRecurrence::new(vec![IntPoly::from_i64(&[2, 4]), IntPoly::from_i64(&[-2, -1])]).unwrap();
        let a = unroll(&cat, &ints([1]), 30).unwrap();
        let g = guess_recurrence(&a, 2, 2).unwrap().unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g, cat.normalized());
        assert!(check_recurrence(&g, &a).unwrap().is_satisfied());
    }

    #[test]
    fn too_short() {
        assert_eq!(
            guess_recurrence(&ints([1; 5]), 1, 1),
            Err(HolonomicError::InsufficientData { len: 5, needed: 15 })
        );
    }

    #[test]
    fn powers_of_two_plus_n() {
        // 2^n + n needs order 2 at degree 1; order 1 is impossible at any small degree.
        let a: Vec<BigInt> = (0..30).map(|n| (BigInt::one() << n) + n).collect();
        let g = guess_recurrence(&a, 2, 2).unwrap().unwrap();
        assert_eq!(g.order(), 2);
        assert!(check_recurrence(&g, &a).unwrap().is_satisfied());
    }
}
