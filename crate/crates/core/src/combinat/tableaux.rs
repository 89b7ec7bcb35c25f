use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::CombinatError;
use crate::Guards;

/// Integer partition as weakly decreasing row lengths, without trailing zeros.
pub type Shape = Vec<usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableauKind {
    /// Move pairs (nothing, add), (remove, nothing), (add, remove).
    Hesitating,
    /// Move pairs (nothing, nothing), (add, nothing), (nothing, remove),
    /// (add, remove).
    Vacillating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Move {
    Nothing,
    Add(usize),
    Remove(usize),
}

fn apply(shape: &mut [usize], m: Move) -> bool {
    let h = shape.len();
    match m {
        Move::Nothing => true,
        Move::Add(r) => {
            if r < h && (r == 0 || shape[r - 1] > shape[r]) {
                shape[r] += 1;
                true
            } else {
                false
            }
        }
        Move::Remove(r) => {
            if r < h && shape[r] > 0 && (r + 1 == h || shape[r + 1] < shape[r]) {
                shape[r] -= 1;
                true
            } else {
                false
            }
        }
    }
}

fn move_pairs(kind: TableauKind, h: usize, exclude_row1_zero: bool) -> Vec<(Move, Move)> {
    let mut pairs = Vec::new();
    for r in 0..h {
        pairs.push((Move::Nothing, Move::Add(r)));
        pairs.push((Move::Remove(r), Move::Nothing));
        for s in 0..h {
            if exclude_row1_zero && r == 0 && s == 0 {
                continue;
            }
            pairs.push((Move::Add(r), Move::Remove(s)));
        }
    }
    if kind == TableauKind::Vacillating {
        pairs.push((Move::Nothing, Move::Nothing));
    }
    pairs
}

fn trimmed(shape: &[usize]) -> Shape {
    let len = shape.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
    shape[..len].to_vec()
}

/// Counts of tableau walks from the empty shape, by final shape, for
/// semilengths `0..=n`.
pub fn tableau_walk_endpoints(
    kind: TableauKind,
    n: usize,
    height: usize,
    exclude_row1_zero: bool,
    guards: &Guards,
) -> Result<Vec<BTreeMap<Shape, BigInt>>, CombinatError> {
    if !(1..=4).contains(&height) {
        return Err(CombinatError::UnsupportedHeight(height));
    }
    if n > guards.max_tableau_n {
        return Err(CombinatError::TooLarge { n, max: guards.max_tableau_n });
    }
    let pairs = move_pairs(kind, height, exclude_row1_zero);
    let mut cur: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    cur.insert(vec![0; height], BigInt::one());
    let mut out = Vec::with_capacity(n + 1);
    for len in 0..=n {
        if len > 0 {
            let mut next: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
            for (shape, c) in &cur {
                for &(a, b) in &pairs {
                    let mut s = shape.clone();
                    if apply(&mut s, a) && apply(&mut s, b) {
                        *next.entry(s).or_insert_with(BigInt::zero) += c;
                    }
                }
            }
            cur = next;
        }
        out.push(cur.iter().map(|(s, c)| (trimmed(s), c.clone())).collect());
    }
    Ok(out)
}

/// Number of tableau walks of semilength `n` from the empty shape to `shape`.
pub fn count_tableau_walks(
    kind: TableauKind,
    n: usize,
    height: usize,
    shape: &[usize],
    exclude_row1_zero: bool,
    guards: &Guards,
) -> Result<BigInt, CombinatError> {
    let target = trimmed(shape);
    if target.len() > height {
        return Err(CombinatError::ShapeTooTall);
    }
    let tables = tableau_walk_endpoints(kind, n, height, exclude_row1_zero, guards)?;
    Ok(tables[n].get(&target).cloned().unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(kind: TableauKind, n: usize, shape: &[usize], excl: bool) -> BigInt {
        count_tableau_walks(kind, n, 2, shape, excl, &Guards::default()).unwrap()
    }

    #[test]
    fn empty_shape_counts() {
        assert_eq!(count(TableauKind::Hesitating, 5, &[], false), BigInt::from(51));
        assert_eq!(count(TableauKind::Hesitating, 5, &[], true), BigInt::from(10));
        assert_eq!(count(TableauKind::Vacillating, 4, &[], false), BigInt::from(52));
    }

    #[test]
    fn height_one_hesitating_is_motzkin_like() {
        // Height 1: steps up, down and one level step (row-2 moves do not exist).
        let t = tableau_walk_endpoints(TableauKind::Hesitating, 6, 1, false, &Guards::default()).unwrap();
        let motzkin = [1, 1, 2, 4, 9, 21, 51];
        for (n, &m) in motzkin.iter().enumerate() {
            assert_eq!(t[n].get(&Vec::new()).cloned().unwrap_or_default(), BigInt::from(m));
        }
    }

    #[test]
    fn errors() {
        let g = Guards::default();
        assert_eq!(
            tableau_walk_endpoints(TableauKind::Hesitating, 3, 5, false, &g),
            Err(CombinatError::UnsupportedHeight(5))
        );
        assert_eq!(
            count_tableau_walks(TableauKind::Hesitating, 3, 2, &[2, 1, 1], false, &g),
            Err(CombinatError::ShapeTooTall)
        );
        assert!(tableau_walk_endpoints(TableauKind::Hesitating, 15, 2, false, &g).is_err());
    }
}
