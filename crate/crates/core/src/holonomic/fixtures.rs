//! Transcribed operators and recurrences for the octant and quadrant
//! sequences.
//!
//! Recurrence names: `t3_rec` (order 3, for T3), `e3_rec` (order 2, for
//! E3), `s3_rec` (order 2, for S3) and `uniform_rec` (order 4, for every
//! `S_k`, `k <= 3`). Differential operators: `L6`, `Q`, `L3`, `L2`, `L1`,
//! `e3_ode` and `s3_ode`.
//!
//! The E3 equation is inhomogeneous (`L E = 30`); `e3_ode` is `∂ L`,
//! which kills the constant. [`e3_ode_inhomogeneous`] keeps both parts.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{DiffOp, HolonomicError, IntPoly, PRecurrence, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    Recurrence(PRecurrence),
    Operator(DiffOp),
}

pub const RECURRENCE_NAMES: [&str; 4] = ["t3_rec", "e3_rec", "s3_rec", "uniform_rec"];
pub const OPERATOR_NAMES: [&str; 7] = ["L6", "Q", "L3", "L2", "L1", "e3_ode", "s3_ode"];
pub const POLYNOMIAL_NAMES: [&str; 3] = ["P", "P1", "P2"];

fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

fn prod(factors: &[&[i64]]) -> IntPoly {
    factors.iter().fold(IntPoly::one(), |acc, f| &acc * &poly(f))
}

fn rec(coeffs: Vec<IntPoly>) -> PRecurrence {
    PRecurrence::new(coeffs).expect("fixture has nonzero leading coefficient")
}

/// `P = 28t^4 + 66t^3 + 46t^2 + 15t + 1`
pub fn p_poly() -> IntPoly {
    poly(&[1, 15, 46, 66, 28])
}

pub fn p1_poly() -> IntPoly {
    poly(&[-9, -131, -90, 1592, 5744, 7560, 3136])
}

pub fn p2_poly() -> IntPoly {
    poly(&[
        -7, -244, -2663, -11138, -4560, 146508, 665620, 1498264, 2014088, 1626800, 719712, 131712,
    ])
}

/// `14(n+1)(n+2) a(n) + (n+2)(19n+75) a(n+1) + 2(n+2)(2n+11) a(n+2) - (n+8)(n+9) a(n+3) = 0`
pub fn t3_rec() -> PRecurrence {
    rec(vec![
        prod(&[&[14], &[1, 1], &[2, 1]]),
        prod(&[&[2, 1], &[75, 19]]),
        prod(&[&[2], &[2, 1], &[11, 2]]),
        prod(&[&[-1], &[8, 1], &[9, 1]]),
    ])
}

/// `8(n+3)(n+1) a(n) + (7n^2+53n+88) a(n+1) - (n+8)(n+7) a(n+2) = 0`
pub fn e3_rec() -> PRecurrence {
    rec(vec![
        prod(&[&[8], &[3, 1], &[1, 1]]),
        poly(&[88, 53, 7]),
        prod(&[&[-1], &[8, 1], &[7, 1]]),
    ])
}

/// `9(n+1)(n+4) a(n) - 2(5n^2+36n+61) a(n+1) + (n+5)(n+6) a(n+2) = 0`
pub fn s3_rec() -> PRecurrence {
    rec(vec![
        prod(&[&[9], &[1, 1], &[4, 1]]),
        prod(&[&[-2], &[61, 36, 5]]),
        prod(&[&[5, 1], &[6, 1]]),
    ])
}

/// Order-4 recurrence shared by `S_0..S_3`, with `k` substituted.
///
/// At `k = 3` the first two coefficients vanish identically.
pub fn uniform_rec(k: i64) -> PRecurrence {
    let c0 = (k - 3) * (k - 3) * (k - 2) * (k + 6);
    rec(vec![
        prod(&[&[c0], &[1, 1], &[2, 1]]),
        prod(&[&[-2 * (k - 3)], &[2, 1], &[-60 + 8 * k + 8 * k * k, -18 + 3 * k + 2 * k * k]]),
        poly(&[
            -342 - 174 * k + 114 * k * k,
            -195 - 70 * k + 54 * k * k,
            -27 - 6 * k + 6 * k * k,
        ]),
        prod(&[&[2], &[57 - 70 * k, 16 - 24 * k, 1 - 2 * k]]),
        prod(&[&[7, 1], &[8, 1]]),
    ])
}

pub fn l6() -> DiffOp {
    DiffOp::from_polys(vec![
        poly(&[0, 8064, 25200, 20160]),
        prod(&[&[36], &[-35, 16, 1646, 4540, 3360]]),
        prod(&[&[0, 36], &[-77, 54, 2442, 6100, 4200]]),
        prod(&[&[0, 0, 6], &[-273, 268, 7556, 17400, 11200]]),
        prod(&[&[0, 0, 0, 6], &[-61, 79, 1616, 3475, 2100]]),
        prod(&[&[0, 0, 0, 0, 3], &[1, 2], &[-11, 40, 211, 168]]),
        prod(&[&[0, 0, 0, 0, 0, 1], &[1, 1], &[-1, 7], &[1, 2], &[1, 2]]),
    ])
}

pub fn q() -> DiffOp {
    DiffOp::from_polys(vec![
        poly(&[30, 48]),
        prod(&[&[0, 6], &[7, 12]]),
        prod(&[&[0, 0, 1], &[13, 24]]),
        prod(&[&[0, 0, 0, 1], &[1, 2]]),
    ])
}

/// `t^2(2t+1)(7t-1)(t+1)`, the leading coefficient of `L3` and `L2`.
fn l3_leading() -> IntPoly {
    prod(&[&[0, 0, 1], &[1, 2], &[-1, 7], &[1, 1]])
}

pub fn l3() -> DiffOp {
    DiffOp::from_polys(vec![
        prod(&[&[0, 28], &[4, 3]]),
        poly(&[-42, 36, 338, 252]),
        prod(&[&[0, 2], &[1, 1], &[-7, 22, 63]]),
        l3_leading(),
    ])
}

pub fn l2() -> DiffOp {
    let p = p_poly();
    DiffOp::new(vec![
        RationalFunction::new(p2_poly(), &p * &p),
        RationalFunction::new(&prod(&[&[0, 1], &[1, 1]]) * &p1_poly(), p),
        RationalFunction::from_poly(l3_leading()),
    ])
}

/// `∂ - (P/t^5)'/(P/t^5) = ∂ - (tP' - 5P)/(tP)`
pub fn l1() -> DiffOp {
    let p = p_poly();
    let t = poly(&[0, 1]);
    let num = &(&t * &p.derivative()) - &p.scale(&BigInt::from(5));
    DiffOp::new(vec![-&RationalFunction::new(num, &t * &p), RationalFunction::one()])
}

/// `(L, c)` with `L E = c` for the generating function of E3.
pub fn e3_ode_inhomogeneous() -> (DiffOp, BigInt) {
    let op = DiffOp::from_polys(vec![
        prod(&[&[6], &[5, -7, -4]]),
        prod(&[&[0, 2], &[6, -23, -20]]),
        prod(&[&[0, 0, 1], &[1, 1], &[1, -8]]),
    ]);
    (op, BigInt::from(30))
}

pub fn e3_ode() -> DiffOp {
    super::diffop_mul(&DiffOp::d(), &e3_ode_inhomogeneous().0)
}

pub fn s3_ode() -> DiffOp {
    DiffOp::from_polys(vec![
        poly(&[72]),
        prod(&[&[4], &[-61, 117]]),
        prod(&[&[2], &[15, -184, 234]]),
        prod(&[&[0, 2], &[-6, 7], &[-1, 9]]),
        prod(&[&[0, 0, 1], &[-1, 1], &[-1, 9]]),
    ])
}

/// Looks up a recurrence or operator by name. `uniform_rec` needs `k`.
pub fn operator_fixture(name: &str, k: Option<i64>) -> Result<Fixture, HolonomicError> {
    Ok(match name {
        "t3_rec" => Fixture::Recurrence(t3_rec()),
        "e3_rec" => Fixture::Recurrence(e3_rec()),
        "s3_rec" => Fixture::Recurrence(s3_rec()),
        "uniform_rec" => Fixture::Recurrence(uniform_rec(k.ok_or(HolonomicError::MissingParameter("uniform_rec"))?)),
        "L6" => Fixture::Operator(l6()),
        "Q" => Fixture::Operator(q()),
        "L3" => Fixture::Operator(l3()),
        "L2" => Fixture::Operator(l2()),
        "L1" => Fixture::Operator(l1()),
        "e3_ode" => Fixture::Operator(e3_ode()),
        "s3_ode" => Fixture::Operator(s3_ode()),
        _ => return Err(HolonomicError::UnknownFixture(name.to_string())),
    })
}

pub fn polynomial_fixture(name: &str) -> Result<IntPoly, HolonomicError> {
    match name {
        "P" => Ok(p_poly()),
        "P1" => Ok(p1_poly()),
        "P2" => Ok(p2_poly()),
        _ => Err(HolonomicError::UnknownFixture(name.to_string())),
    }
}
