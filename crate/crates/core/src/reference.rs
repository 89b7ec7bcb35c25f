//! Frozen reference rows and recurrence-generated reference terms.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::holonomic::{fixtures, unroll, IntPoly, PRecurrence};
use crate::transforms::Sequence;

/// Octant excursions with no zero step, `n = 0..=9`.
pub const T3_ROW: [i64; 10] = [1, 0, 1, 1, 4, 10, 35, 120, 455, 1792];
/// Octant excursions with one free zero step.
pub const E3_ROW: [i64; 10] = [1, 1, 2, 5, 15, 51, 191, 772, 3320, 15032];
/// Octant excursions with two free zero steps; `3`-noncrossing partitions
/// of `{1, ..., n+1}`.
pub const NC3_ROW: [i64; 10] = [1, 2, 5, 15, 52, 202, 859, 3930, 19095, 97566];
/// Quadrant excursions for `k = 0..=3` free zero steps.
pub const S0_ROW: [i64; 9] = [1, 0, 2, 2, 12, 30, 130, 462, 1946];
pub const S1_ROW: [i64; 9] = [1, 1, 3, 9, 33, 131, 561, 2535, 11971];
pub const S2_ROW: [i64; 9] = [1, 2, 6, 22, 92, 422, 2074, 10754, 58202];
pub const S3_ROW: [i64; 9] = [1, 3, 11, 47, 225, 1173, 6529, 38265, 233795];

/// Reference row by name: `t3`, `e3`, `nc3`, `s0`..`s3`.
pub fn row(name: &str) -> Option<Sequence> {
    let terms: &[i64] = match name {
        "t3" => &T3_ROW,
        "e3" => &E3_ROW,
        "nc3" => &NC3_ROW,
        "s0" => &S0_ROW,
        "s1" => &S1_ROW,
        "s2" => &S2_ROW,
        "s3" => &S3_ROW,
        _ => return None,
    };
    Some(Sequence::from_i64(terms))
}

pub const ROW_NAMES: [&str; 7] = ["t3", "e3", "nc3", "s0", "s1", "s2", "s3"];

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// `T3(0..=n)` from the order-3 recurrence.
pub fn t3_by_recurrence(n: usize) -> Vec<BigInt> {
    unroll(&fixtures::t3_rec(), &ints(&T3_ROW[..3]), n).expect("leading coefficient has no nonnegative root")
}

/// `(n+4)(n+5) B(n+2) = (7n^2+35n+40) B(n+1) + 8n(n+1) B(n)`
pub fn baxter_rec() -> PRecurrence {
    PRecurrence::new(alloc::vec![
        IntPoly::from_i64(&[0, -8, -8]),
        IntPoly::from_i64(&[-40, -35, -7]),
        IntPoly::product_of_shifts(1, &[4, 5]),
    ])
    .expect("nonzero leading coefficient")
}

/// Baxter numbers `B(0..=order)` with `B(0) = 0`, so `B(n+1)` is the
/// quadrant row with two free zero steps.
pub fn baxter_by_recurrence(order: usize) -> Vec<BigInt> {
    unroll(&baxter_rec(), &ints(&[0, 1]), order).expect("leading coefficient has no nonnegative root")
}
