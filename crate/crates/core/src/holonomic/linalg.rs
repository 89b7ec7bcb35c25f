//! Fraction-free row reduction over the integers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Basis of the right kernel of `rows` (each of length `ncols`) as
/// primitive integer vectors.
///
/// Rows are combined by cross-multiplication and kept primitive, so no
/// rational number is ever formed.
pub(crate) fn integer_nullspace(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        make_primitive(&mut rows[rank]);
        let prow = rows[rank].clone();
        let pv = &prow[col];
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in 0..ncols {
                row[c] = &row[c] * pv - &f * &prow[c];
            }
            make_primitive(row);
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }

    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let l = pivots
            .iter()
            .enumerate()
            .fold(BigInt::one(), |l, (i, &pc)| l.lcm(&rows[i][pc].abs()));
        let mut v = vec![BigInt::zero(); ncols];
        v[free] = l.clone();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -(&l * &rows[i][free]) / &rows[i][pc];
        }
        make_primitive(&mut v);
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn times(rows: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
        rows.iter()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    #[test]
    fn kernel_of_rank_two_matrix() {
        let a = m(&[&[1, 2, 3], &[2, 4, 7], &[3, 6, 10]]);
        let k = integer_nullspace(a.clone(), 3);
        assert_eq!(k.len(), 1);
        assert!(times(&a, &k[0]).iter().all(Zero::is_zero));
        assert_eq!(k[0], m(&[&[-2, 1, 0]])[0]);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let a = m(&[&[2, 1], &[1, 3]]);
        assert!(integer_nullspace(a, 2).is_empty());
    }

    #[test]
    fn wide_matrix() {
        let a = m(&[&[3, 5, 7, 11]]);
        let k = integer_nullspace(a.clone(), 4);
        assert_eq!(k.len(), 3);
        for v in &k {
            assert!(times(&a, v).iter().all(Zero::is_zero));
        }
    }
}
