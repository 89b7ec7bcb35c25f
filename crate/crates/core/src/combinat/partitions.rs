use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::CombinatError;
use crate::Guards;

/// Partition of `{1, ..., n}` into nonempty blocks, each sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// From a restricted growth string: `rgs[i]` is the block of `i + 1`.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let nb = rgs.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); nb];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        Self { n: rgs.len(), blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn has_singleton(&self) -> bool {
        self.blocks.iter().any(|b| b.len() == 1)
    }

    /// Standard representation: arcs join numerically adjacent elements
    /// of each block.
    pub fn arcs(&self) -> ArcDiagram {
        let mut arcs: Vec<(usize, usize)> =
            self.blocks.iter().flat_map(|b| b.windows(2).map(|w| (w[0], w[1]))).collect();
        arcs.sort_unstable();
        ArcDiagram { arcs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArcDiagram {
    arcs: Vec<(usize, usize)>,
}

impl ArcDiagram {
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Whether some `k` arcs satisfy `i_1 < ... < i_k < j_1 < ... < j_k`
    /// (or `i_k <= j_1` when `enhanced`).
    pub fn has_crossing(&self, k: usize, enhanced: bool) -> bool {
        if k == 0 {
            return true;
        }
        let mut chosen: Vec<(usize, usize)> = Vec::with_capacity(k);
        self.extend(0, k, enhanced, &mut chosen)
    }

    fn extend(&self, from: usize, k: usize, enhanced: bool, chosen: &mut Vec<(usize, usize)>) -> bool {
        if chosen.len() == k {
            let last_i = chosen[k - 1].0;
            let first_j = chosen[0].1;
            return if enhanced { last_i <= first_j } else { last_i < first_j };
        }
        for idx in from..self.arcs.len() {
            let (i, j) = self.arcs[idx];
            if let Some(&(pi, pj)) = chosen.last() {
                if !(pi < i && pj < j) {
                    continue;
                }
            }
            chosen.push((i, j));
            let found = self.extend(idx + 1, k, enhanced, chosen);
            chosen.pop();
            if found {
                return true;
            }
        }
        false
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PartitionFilter {
    pub forbid_singletons: bool,
    /// Reject partitions containing a `k`-crossing.
    pub max_crossing: Option<usize>,
    /// Reject partitions containing an enhanced `k`-crossing.
    pub max_enhanced_crossing: Option<usize>,
}

impl PartitionFilter {
    fn accepts(&self, p: &SetPartition) -> bool {
        if self.forbid_singletons && p.has_singleton() {
            return false;
        }
        let arcs = p.arcs();
        if self.max_crossing.is_some_and(|k| arcs.has_crossing(k, false)) {
            return false;
        }
        !self.max_enhanced_crossing.is_some_and(|k| arcs.has_crossing(k, true))
    }
}

/// Visits every restricted growth string of length `n`.
fn for_each_rgs(n: usize, mut f: impl FnMut(&[usize])) {
    if n == 0 {
        f(&[]);
        return;
    }
    let mut rgs = vec![0usize; n];
    loop {
        f(&rgs);
        // increment from the right
        let mut i = n - 1;
        loop {
            let bound = rgs[..i].iter().copied().max().map_or(0, |m| m + 1);
            if i > 0 && rgs[i] < bound {
                rgs[i] += 1;
                for r in rgs.iter_mut().skip(i + 1) {
                    *r = 0;
                }
                break;
            }
            if i <= 1 {
                return;
            }
            i -= 1;
        }
    }
}

/// Counts set partitions of `[n]` passing `filter` by listing all of them.
pub fn count_set_partitions(n: usize, filter: PartitionFilter, guards: &Guards) -> Result<BigInt, CombinatError> {
    if n > guards.max_n {
        return Err(CombinatError::TooLarge { n, max: guards.max_n });
    }
    let mut count = BigInt::zero();
    for_each_rgs(n, |rgs| {
        if filter.accepts(&SetPartition::from_rgs(rgs)) {
            count += 1;
        }
    });
    Ok(count)
}
