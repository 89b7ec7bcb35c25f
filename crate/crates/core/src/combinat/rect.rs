//! Three-row rectangular tableaux with strictly increasing rows and weakly
//! increasing columns, i.e. each entry occupies a vertical strip.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::CombinatError;
use crate::Guards;

/// Largest `n` accepted by [`quadrant_sum`].
pub const QUADRANT_SUM_MAX_N: usize = 10;

fn check_size(m: usize, content: &[usize]) -> Result<(), CombinatError> {
    let total: usize = content.iter().sum();
    if total != 3 * m {
        return Err(CombinatError::SizeMismatch { expected: 3 * m, found: total });
    }
    Ok(())
}

/// Count of fillings of the `3 x m` rectangle with `content[i]` copies of
/// `i + 1`, rows strictly increasing and columns weakly increasing.
///
/// Builds the chain of shapes `λ^(0) ⊂ λ^(1) ⊂ ...`, where each step adds a
/// vertical strip of size `content[i]`.
pub fn count_rect_tableaux(m: usize, content: &[usize]) -> Result<BigInt, CombinatError> {
    check_size(m, content)?;
    let mut cur: BTreeMap<[usize; 3], BigInt> = BTreeMap::new();
    cur.insert([0, 0, 0], BigInt::one());
    for &c in content {
        if c > 3 {
            return Ok(BigInt::zero());
        }
        let mut next: BTreeMap<[usize; 3], BigInt> = BTreeMap::new();
        for (shape, count) in &cur {
            for mask in 0u8..8 {
                if mask.count_ones() as usize != c {
                    continue;
                }
                let mut s = *shape;
                for (r, len) in s.iter_mut().enumerate() {
                    if mask & (1 << r) != 0 {
                        *len += 1;
                    }
                }
                if s[0] <= m && s[0] >= s[1] && s[1] >= s[2] {
                    *next.entry(s).or_insert_with(BigInt::zero) += count;
                }
            }
        }
        cur = next;
    }
    Ok(cur.get(&[m, m, m]).cloned().unwrap_or_default())
}

/// Same count as [`count_rect_tableaux`] by listing every assignment of
/// entries to rows and checking the columns. Guarded by `guards.max_columns`.
pub fn count_rect_tableaux_exhaustive(m: usize, content: &[usize], guards: &Guards) -> Result<BigInt, CombinatError> {
    check_size(m, content)?;
    if m > guards.max_columns {
        return Err(CombinatError::TooManyColumns { m, max: guards.max_columns });
    }
    if content.iter().any(|&c| c > 3) {
        return Ok(BigInt::zero());
    }
    // Rows strictly increase, so entry i sits in a set of rows of size content[i].
    let options: Vec<Vec<u8>> = content
        .iter()
        .map(|&c| (0u8..8).filter(|mask| mask.count_ones() as usize == c).collect())
        .collect();
    let mut rows: [Vec<usize>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    let mut count = 0u64;
    fn go(i: usize, options: &[Vec<u8>], m: usize, rows: &mut [Vec<usize>; 3], count: &mut u64) {
        if rows.iter().any(|r| r.len() > m) {
            return;
        }
        if i == options.len() {
            let columns_ok = (0..m).all(|c| rows[0][c] <= rows[1][c] && rows[1][c] <= rows[2][c]);
            if columns_ok {
                *count += 1;
            }
            return;
        }
        for &mask in &options[i] {
            for (r, row) in rows.iter_mut().enumerate() {
                if mask & (1 << r) != 0 {
                    row.push(i + 1);
                }
            }
            go(i + 1, options, m, rows, count);
            for (r, row) in rows.iter_mut().enumerate() {
                if mask & (1 << r) != 0 {
                    row.pop();
                }
            }
        }
    }
    go(0, &options, m, &mut rows, &mut count);
    Ok(BigInt::from(count))
}

/// The four multinomial-weighted sums over rectangular tableaux.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadrantVariant {
    /// Parts in `{1, 2}`; gives `S_0`.
    S0,
    /// Parts in `{0, 1, 2}`; gives `S_1`.
    S1a,
    /// Parts in `{1, 2, 3}`; gives `S_1`.
    S1b,
    /// Parts in `{0, 1, 2, 3}`; gives `S_2`.
    S2,
}

impl QuadrantVariant {
    pub const ALL: [QuadrantVariant; 4] = [Self::S0, Self::S1a, Self::S1b, Self::S2];

    fn parts(self) -> &'static [usize] {
        match self {
            Self::S0 => &[1, 2],
            Self::S1a => &[0, 1, 2],
            Self::S1b => &[1, 2, 3],
            Self::S2 => &[0, 1, 2, 3],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::S0 => "s0",
            Self::S1a => "s1a",
            Self::S1b => "s1b",
            Self::S2 => "s2",
        }
    }
}

impl FromStr for QuadrantVariant {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        Self::ALL.into_iter().find(|v| v.name() == s).ok_or(())
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Visits every way to write `n` as an ordered sum of `k` nonnegative parts.
fn for_each_composition(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(left: usize, k: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if acc.len() + 1 == k {
            acc.push(left);
            f(acc);
            acc.pop();
            return;
        }
        for x in 0..=left {
            acc.push(x);
            go(left - x, k, acc, f);
            acc.pop();
        }
    }
    go(n, k, &mut Vec::with_capacity(k), f);
}

/// `Σ multinomial(n; counts) |SST(3^m; content)|` over all ways of choosing
/// how many of the `n` parts take each allowed value.
pub fn quadrant_sum(variant: QuadrantVariant, n: usize) -> Result<BigInt, CombinatError> {
    quadrant_sum_by(variant, n, count_rect_tableaux)
}

/// [`quadrant_sum`] with every tableau count taken from
/// [`count_rect_tableaux_exhaustive`]; fails once some term needs more
/// than `guards.max_columns` columns.
pub fn quadrant_sum_exhaustive(variant: QuadrantVariant, n: usize, guards: &Guards) -> Result<BigInt, CombinatError> {
    quadrant_sum_by(variant, n, |m, c| count_rect_tableaux_exhaustive(m, c, guards))
}

fn quadrant_sum_by(
    variant: QuadrantVariant,
    n: usize,
    count: impl Fn(usize, &[usize]) -> Result<BigInt, CombinatError>,
) -> Result<BigInt, CombinatError> {
    if n > QUADRANT_SUM_MAX_N {
        return Err(CombinatError::TooLarge { n, max: QUADRANT_SUM_MAX_N });
    }
    let parts = variant.parts();
    let n_fact = factorial(n);
    let mut total = BigInt::zero();
    let mut err = None;
    for_each_composition(n, parts.len(), &mut |counts| {
        let size: usize = counts.iter().zip(parts).map(|(c, p)| c * p).sum();
        if size % 3 != 0 || err.is_some() {
            return;
        }
        let content: Vec<usize> = counts
            .iter()
            .zip(parts)
            .filter(|(_, &p)| p > 0)
            .flat_map(|(&c, &p)| vec![p; c])
            .collect();
        let multinomial = counts.iter().fold(n_fact.clone(), |acc, &c| acc / factorial(c));
        match count(size / 3, &content) {
            Ok(sst) => total += multinomial * sst,
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_column() {
        assert_eq!(count_rect_tableaux(1, &[1, 2]).unwrap(), BigInt::one());
        assert_eq!(count_rect_tableaux(1, &[2, 1]).unwrap(), BigInt::one());
        assert_eq!(count_rect_tableaux(1, &[1, 1]), Err(CombinatError::SizeMismatch { expected: 3, found: 2 }));
    }

    #[test]
    fn quadrant_values() {
        assert_eq!(quadrant_sum(QuadrantVariant::S0, 2).unwrap(), BigInt::from(2));
        assert_eq!(quadrant_sum(QuadrantVariant::S0, 4).unwrap(), BigInt::from(12));
        assert_eq!(quadrant_sum(QuadrantVariant::S1a, 3).unwrap(), BigInt::from(9));
        assert_eq!(quadrant_sum(QuadrantVariant::S1b, 3).unwrap(), BigInt::from(9));
        assert_eq!(quadrant_sum(QuadrantVariant::S2, 4).unwrap(), BigInt::from(92));
    }

    #[test]
    fn exhaustive_sums_within_guard() {
        let g = Guards::default();
        for v in QuadrantVariant::ALL {
            for n in 0..=4 {
                assert_eq!(quadrant_sum_exhaustive(v, n, &g).unwrap(), quadrant_sum(v, n).unwrap());
            }
        }
        assert!(matches!(
            quadrant_sum_exhaustive(QuadrantVariant::S2, 5, &g),
            Err(CombinatError::TooManyColumns { .. })
        ));
    }

    #[test]
    fn column_guard() {
        let c = [3; 5];
        assert_eq!(
            count_rect_tableaux_exhaustive(5, &c, &Guards::default()),
            Err(CombinatError::TooManyColumns { m: 5, max: 4 })
        );
        assert_eq!(count_rect_tableaux(5, &c).unwrap(), BigInt::one());
    }

    fn composition() -> impl Strategy<Value = Vec<usize>> {
        prop::collection::vec(0usize..=3, 1..9).prop_filter("size divisible by 3 and m <= 3", |v| {
            let s: usize = v.iter().sum();
            s % 3 == 0 && s / 3 <= 3
        })
    }

    proptest! {
        #[test]
        fn strip_chain_matches_exhaustive(c in composition()) {
            let m = c.iter().sum::<usize>() / 3;
            prop_assert_eq!(
                count_rect_tableaux(m, &c).unwrap(),
                count_rect_tableaux_exhaustive(m, &c, &Guards::default()).unwrap()
            );
        }

        #[test]
        fn reordering_invariance((c, shuffled) in composition().prop_flat_map(|c| (Just(c.clone()), Just(c).prop_shuffle()))) {
            let m = c.iter().sum::<usize>() / 3;
            let mut sorted = c.clone();
            sorted.sort_unstable();
            let g = Guards::default();
            let base = count_rect_tableaux_exhaustive(m, &c, &g).unwrap();
            prop_assert_eq!(&base, &count_rect_tableaux_exhaustive(m, &shuffled, &g).unwrap());
            prop_assert_eq!(&base, &count_rect_tableaux_exhaustive(m, &sorted, &g).unwrap());
        }
    }
}
