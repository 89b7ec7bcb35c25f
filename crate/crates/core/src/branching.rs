//! Branching multiplicities for SL(3) ⊂ G2 and the identities they imply
//! between octant and quadrant walk counts.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::transforms::Sequence;
use crate::walks::{axis_sum, count_endpoints, excursions, octant_g2, quadrant_sl3, Axis};

/// Largest length accepted by [`verify_axis_excursions`].
pub const AXIS_MAX_N: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BranchingError {
    #[error("n = {n} exceeds the limit {max}")]
    TooLarge { n: usize, max: usize },
}

/// Multiplicities `m^{(r,s)}_{(p,q)}` for all indices `<= max_deg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingTable {
    max_deg: usize,
    data: Vec<i64>,
}

impl BranchingTable {
    fn index(&self, r: usize, s: usize, p: usize, q: usize) -> usize {
        let d = self.max_deg + 1;
        ((r * d + s) * d + p) * d + q
    }

    pub fn max_deg(&self) -> usize {
        self.max_deg
    }

    /// Multiplicity of `U(p,q)` in `V(r,s)`; zero outside the table.
    pub fn get(&self, r: usize, s: usize, p: usize, q: usize) -> i64 {
        if [r, s, p, q].iter().any(|&i| i > self.max_deg) {
            return 0;
        }
        self.data[self.index(r, s, p, q)]
    }

    /// First `(r, s)` where `m^{(r,s)}_{(0,0)} != [s = 0]`.
    pub fn trivial_invariant_violation(&self) -> Option<(usize, usize)> {
        let d = self.max_deg;
        (0..=d)
            .flat_map(|r| (0..=d).map(move |s| (r, s)))
            .find(|&(r, s)| self.get(r, s, 0, 0) != i64::from(s == 0))
    }

    /// Smallest stored multiplicity (all should be nonnegative).
    pub fn min_entry(&self) -> i64 {
        self.data.iter().copied().min().unwrap_or(0)
    }
}

/// Coefficients of
/// `[(1-X)^{-1} + xyY(1-xyY)^{-1}] / [(1-xX)(1-yX)(1-xY)(1-yY)]`
/// in `x^p y^q X^r Y^s`, all exponents up to `max_deg`.
///
/// With a minus sign in front of the second numerator term (see
/// [`expand_branching_gf_minus`]) the `Y` coefficient would be
/// `U(1,0) + U(0,1) - U(1,1)`; the plus sign gives the adjoint
/// `14 = 3 + 3 + 8`.
pub fn expand_branching_gf(max_deg: usize) -> BranchingTable {
    expand(max_deg, 1)
}

/// The same expansion with `- xyY(1-xyY)^{-1}` in the numerator. Produces
/// negative entries; kept so the two readings can be compared.
pub fn expand_branching_gf_minus(max_deg: usize) -> BranchingTable {
    expand(max_deg, -1)
}

fn expand(max_deg: usize, sign: i64) -> BranchingTable {
    let d = max_deg + 1;
    let idx = |r: usize, s: usize, p: usize, q: usize| ((r * d + s) * d + p) * d + q;
    // Denominator: x^{a+c} y^{b+d} X^{a+b} Y^{c+d} summed over a, b, c, d >= 0.
    let mut den = vec![0i64; d * d * d * d];
    for a in 0..d {
        for b in 0..d - a {
            for c in 0..d - a {
                for e in 0..(d - b).min(d - c) {
                    den[idx(a + b, c + e, a + c, b + e)] += 1;
                }
            }
        }
    }
    // Numerator terms: X^i (i >= 0) and sign * (xyY)^j (j >= 1).
    let mut out = vec![0i64; d * d * d * d];
    for r in 0..d {
        for s in 0..d {
            for p in 0..d {
                for q in 0..d {
                    let mut v: i64 = (0..=r).map(|i| den[idx(r - i, s, p, q)]).sum();
                    for j in 1..=s.min(p).min(q) {
                        v += sign * den[idx(r, s - j, p - j, q - j)];
                    }
                    out[idx(r, s, p, q)] = v;
                }
            }
        }
    }
    BranchingTable { max_deg, data: out }
}

/// Two sequences that should agree termwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub lhs: Sequence,
    pub rhs: Sequence,
}

impl Comparison {
    pub fn first_mismatch(&self) -> Option<usize> {
        let n = self.lhs.len().max(self.rhs.len());
        (0..n).find(|&i| self.lhs.get(i) != self.rhs.get(i))
    }

    pub fn holds(&self) -> bool {
        self.first_mismatch().is_none()
    }
}

/// Axis walks of `octant_g2(k)` against excursions of `quadrant_sl3(k+1)`.
pub fn verify_axis_excursions(k: u64, n_max: usize) -> Result<Comparison, BranchingError> {
    if n_max > AXIS_MAX_N {
        return Err(BranchingError::TooLarge { n: n_max, max: AXIS_MAX_N });
    }
    Ok(Comparison {
        lhs: axis_sum(&octant_g2(k), Axis::X, n_max),
        rhs: excursions(&quadrant_sl3(k + 1), n_max),
    })
}

/// Quadrant endpoint counts at `(p, q)` against the branching-weighted sum
/// of octant endpoint counts.
///
/// After `n` octant steps the weight `(r, s)` satisfies `r <= 2n` and
/// `s <= n`, so a table of degree `2 n_max` covers every endpoint.
pub fn verify_restriction(k: u64, p: usize, q: usize, n_max: usize) -> Comparison {
    verify_restriction_with(&expand_branching_gf(2 * n_max), k, p, q, n_max)
}

/// [`verify_restriction`] with a precomputed table.
pub fn verify_restriction_with(table: &BranchingTable, k: u64, p: usize, q: usize, n_max: usize) -> Comparison {
    let quad = count_endpoints(&quadrant_sl3(k + 1), n_max);
    let oct = count_endpoints(&octant_g2(k), n_max);
    let lhs = quad.iter().map(|t| t.get([p as i64, q as i64])).collect();
    let rhs = oct
        .iter()
        .map(|t| {
            t.counts
                .iter()
                .map(|(w, c)| c * table.get(w[0] as usize, w[1] as usize, p, q))
                .sum::<BigInt>()
        })
        .collect();
    Comparison { lhs: Sequence::new(lhs), rhs: Sequence::new(rhs) }
}

/// Octant endpoint counts for small lengths as polynomials in `k`.
///
/// Keys are tableau coordinates `(x, y)` with `x >= y`; the weight is
/// `(x - y, y)`. Coefficients are listed from `k^0` upward.
pub fn octant_polynomial_table(n: usize) -> Vec<((i64, i64), &'static [i64])> {
    match n {
        0 => vec![((0, 0), &[1][..])],
        1 => vec![((0, 0), &[0, 1][..]), ((1, 0), &[1][..])],
        2 => vec![
            ((0, 0), &[1, 0, 1][..]),
            ((1, 0), &[1, 2][..]),
            ((2, 0), &[1][..]),
            ((1, 1), &[1][..]),
        ],
        3 => vec![
            ((0, 0), &[1, 3, 0, 1][..]),
            ((1, 0), &[4, 3, 3][..]),
            ((2, 0), &[3, 3][..]),
            ((3, 0), &[1][..]),
            ((1, 1), &[2, 2][..]),
            ((2, 1), &[2][..]),
        ],
        _ => Vec::new(),
    }
}

/// Bottom-row sums `1, 1+k, 3+2k+k^2, 9+9k+3k^2+k^3`.
pub fn octant_bottom_row_sum(n: usize) -> &'static [i64] {
    match n {
        0 => &[1],
        1 => &[1, 1],
        2 => &[3, 2, 1],
        3 => &[9, 9, 3, 1],
        _ => &[],
    }
}

fn eval_poly(c: &[i64], k: i64) -> i64 {
    c.iter().rev().fold(0, |acc, &a| acc * k + a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolynomialMismatch {
    /// A table cell disagrees with the walk count at its weight.
    Cell { n: usize, cell: (i64, i64), k: i64, table: i64, walks: BigInt },
    /// The walk engine has a nonzero count at a weight with no table cell.
    Unmatched { n: usize, weight: (i64, i64), k: i64, walks: BigInt },
    /// The bottom-row sum formula disagrees with the table's bottom row.
    RowSum { n: usize, k: i64, formula: i64, table: i64 },
}

/// Evaluates the polynomial tables at `k = 0..=k_max` for lengths
/// `0..=n_max` (at most 3) and lists every disagreement.
pub fn octant_polynomials_check(n_max: usize, k_max: i64) -> Vec<PolynomialMismatch> {
    let n_max = n_max.min(3);
    let mut out = Vec::new();
    for k in 0..=k_max {
        let tables = count_endpoints(&octant_g2(k as u64), n_max);
        for (n, t) in tables.iter().enumerate() {
            let cells = octant_polynomial_table(n);
            for &((x, y), coeffs) in &cells {
                let expected = eval_poly(coeffs, k);
                let walks = t.get([x - y, y]);
                if walks != BigInt::from(expected) {
                    out.push(PolynomialMismatch::Cell { n, cell: (x, y), k, table: expected, walks });
                }
            }
            for (w, c) in &t.counts {
                let cell = (w[0] + w[1], w[1]);
                if !c.is_zero() && !cells.iter().any(|&(xy, _)| xy == cell) {
                    out.push(PolynomialMismatch::Unmatched { n, weight: (w[0], w[1]), k, walks: c.clone() });
                }
            }
            let row: i64 = cells.iter().filter(|((_, y), _)| *y == 0).map(|&(_, c)| eval_poly(c, k)).sum();
            let formula = eval_poly(octant_bottom_row_sum(n), k);
            if row != formula {
                out.push(PolynomialMismatch::RowSum { n, k, formula, table: row });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_multiplicities() {
        let t = expand_branching_gf(6);
        assert_eq!(t.get(0, 0, 0, 0), 1);
        assert_eq!(t.get(1, 0, 1, 0), 1);
        assert_eq!(t.get(1, 0, 0, 1), 1);
        assert_eq!(t.get(1, 0, 0, 0), 1);
        // adjoint 14 = 8 + 3 + 3
        assert_eq!(t.get(0, 1, 1, 1), 1);
        assert_eq!(t.get(0, 1, 1, 0), 1);
        assert_eq!(t.get(0, 1, 0, 1), 1);
        assert_eq!(t.trivial_invariant_violation(), None);
        assert!(t.min_entry() >= 0);
    }

    #[test]
    fn minus_sign_goes_negative() {
        let t = expand_branching_gf_minus(3);
        assert_eq!(t.get(0, 1, 1, 1), -1);
        assert_eq!(t.trivial_invariant_violation(), None);
    }

    #[test]
    fn dimensions_add_up() {
        // dim U(p,q) = (p+1)(q+1)(p+q+2)/2; dim V(1,0) = 7, V(0,1) = 14, V(2,0) = 27
        let t = expand_branching_gf(4);
        let dim = |r, s| -> i64 {
            let mut total = 0;
            for p in 0..=4 {
                for q in 0..=4 {
                    let du = ((p + 1) * (q + 1) * (p + q + 2) / 2) as i64;
                    total += t.get(r, s, p, q) * du;
                }
            }
            total
        };
        assert_eq!(dim(1, 0), 7);
        assert_eq!(dim(0, 1), 14);
        assert_eq!(dim(2, 0), 27);
        assert_eq!(dim(1, 1), 64);
        assert_eq!(dim(0, 2), 77);
    }

    #[test]
    fn axis_walks() {
        let c = verify_axis_excursions(2, 8).unwrap();
        assert!(c.holds());
        assert_eq!(c.lhs, Sequence::from_i64(&[1, 3, 11, 47, 225, 1173, 6529, 38265, 233795]));
        let baxter = verify_axis_excursions(1, 8).unwrap();
        assert!(baxter.holds());
        assert_eq!(baxter.rhs, Sequence::from_i64(&[1, 2, 6, 22, 92, 422, 2074, 10754, 58202]));
        assert_eq!(verify_axis_excursions(0, 3).unwrap().lhs.get(3), Some(&BigInt::from(9)));
        assert!(verify_axis_excursions(0, 15).is_err());
    }

    #[test]
    fn restriction_small_grid() {
        let table = expand_branching_gf(12);
        for (k, p, q) in [(0, 0, 0), (0, 1, 0), (1, 0, 1), (2, 1, 1)] {
            assert!(verify_restriction_with(&table, k, p, q, 6).holds(), "k={k} p={p} q={q}");
        }
    }

    #[test]
    fn polynomial_tables_low_lengths() {
        assert!(octant_polynomials_check(2, 4).is_empty());
    }
}
