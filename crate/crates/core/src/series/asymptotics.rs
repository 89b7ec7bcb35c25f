use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Pow, ToPrimitive};

use crate::reference;

/// `4117715/864 * sqrt(3)/pi`, the limit of `T3(n) n^7 / 7^n`.
pub const T3_ASYMPTOTIC_CONSTANT: f64 = 4_117_715.0 / 864.0 * 1.732_050_807_568_877_2 / core::f64::consts::PI;

#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticSample {
    pub n: usize,
    pub r_n: f64,
    pub r_2n: f64,
    /// Richardson extrapolation `2 r_{2n} - r_n`.
    pub extrapolated: f64,
    /// `|extrapolated - C| / C`
    pub relative_deviation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticReport {
    pub constant: f64,
    pub samples: Vec<AsymptoticSample>,
    /// Whether `r_n` increases (or decreases) monotonically over every sampled index.
    pub monotone: bool,
}

/// `T3(n) n^7 / 7^n` from exact integers; the quotient is formed with 64
/// extra fractional bits before conversion, so only the final rounding is
/// inexact.
fn scaled_ratio(term: &BigInt, n: usize) -> f64 {
    let num = term * BigInt::from(n).pow(7u32);
    let den = BigInt::from(7).pow(n);
    let q: BigInt = (num << 64usize) / den;
    q.to_f64().unwrap_or(f64::NAN) / 18_446_744_073_709_551_616.0
}

/// Estimates the asymptotic constant of `T3` at each sample `n` using
/// terms up to `2n`. Samples below 100 are ignored.
pub fn asymptotic_estimate(samples: &[usize]) -> AsymptoticReport {
    let mut samples: Vec<usize> = samples.iter().copied().filter(|&n| n >= 100).collect();
    samples.sort_unstable();
    samples.dedup();
    let top = samples.last().map_or(0, |&n| 2 * n);
    let terms = reference::t3_by_recurrence(top);
    let c = T3_ASYMPTOTIC_CONSTANT;
    let rows: Vec<AsymptoticSample> = samples
        .iter()
        .map(|&n| {
            let r_n = scaled_ratio(&terms[n], n);
            let r_2n = scaled_ratio(&terms[2 * n], 2 * n);
            let extrapolated = 2.0 * r_2n - r_n;
            let dev = extrapolated - c;
            AsymptoticSample {
                n,
                r_n,
                r_2n,
                extrapolated,
                relative_deviation: if dev < 0.0 { -dev / c } else { dev / c },
            }
        })
        .collect();

    let mut path: Vec<(usize, f64)> = Vec::new();
    for row in &rows {
        path.push((row.n, row.r_n));
        path.push((2 * row.n, row.r_2n));
    }
    path.sort_by_key(|p| p.0);
    path.dedup_by_key(|p| p.0);
    let diffs: Vec<f64> = path.windows(2).map(|w| w[1].1 - w[0].1).collect();
    let monotone = diffs.iter().all(|&d| d >= 0.0) || diffs.iter().all(|&d| d <= 0.0);

    AsymptoticReport {
        constant: c,
        samples: rows,
        monotone,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_value() {
        assert!((T3_ASYMPTOTIC_CONSTANT - 2627.6).abs() < 0.05);
    }

    #[test]
    fn scaled_ratio_small_case() {
        // 49 * 2^7 / 7^2
        assert_eq!(scaled_ratio(&BigInt::from(49), 2), 128.0);
    }

    #[test]
    fn small_samples_are_dropped() {
        let r = asymptotic_estimate(&[10, 50]);
        assert!(r.samples.is_empty());
    }
}
