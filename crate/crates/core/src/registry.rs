//! Named sequences and the engines that can produce each of them.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::combinat::{
    count_set_partitions, quadrant_sum, CombinatError, PartitionFilter, QuadrantVariant,
};
use crate::holonomic::{fixtures, unroll, HolonomicError, PRecurrence};
use crate::laurent::{ct_sequence, g2_spec, quadrant_spec, sl2_spec};
use crate::reference;
use crate::transforms::{bt_power, Sequence};
use crate::walks::{excursions, halfline_sl2, octant_g2, quadrant_sl3, quadrant_sl3_vector, c2_spin};
use crate::Guards;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Engine {
    /// Lattice-walk transfer counts.
    Walk,
    /// Constant terms `CT(Δ Kⁿ)`.
    ConstantTerm,
    /// A P-recurrence unrolled from vendored initial terms.
    Recurrence,
    /// Binomial transform of a walk-computed sibling.
    Transform,
    /// Closed product formula or tableau sum.
    Formula,
    /// Exhaustive enumeration of set partitions.
    Oracle,
}

impl Engine {
    pub const ALL: [Engine; 6] = [
        Engine::Walk,
        Engine::ConstantTerm,
        Engine::Recurrence,
        Engine::Transform,
        Engine::Formula,
        Engine::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Walk => "walk",
            Engine::ConstantTerm => "ct",
            Engine::Recurrence => "rec",
            Engine::Transform => "bt",
            Engine::Formula => "formula",
            Engine::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = RegistryError;
    fn from_str(s: &str) -> Result<Self, RegistryError> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| RegistryError::UnknownEngine(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RegistryError {
    #[error("unknown sequence `{0}`")]
    UnknownSequence(String),
    #[error("unknown engine `{0}`")]
    UnknownEngine(String),
    #[error("sequence {sequence} has no `{engine}` engine")]
    EngineUnavailable { sequence: &'static str, engine: Engine },
    #[error(transparent)]
    Combinat(#[from] CombinatError),
    #[error(transparent)]
    Holonomic(#[from] HolonomicError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceInfo {
    pub name: &'static str,
    pub oeis: Option<&'static str>,
    pub description: &'static str,
    pub engines: &'static [Engine],
}

use Engine::*;

pub const SEQUENCES: [SequenceInfo; 10] = [
    SequenceInfo {
        name: "T3",
        oeis: Some("A059710"),
        description: "octant excursions, no zero step",
        engines: &[Walk, ConstantTerm, Recurrence, Oracle],
    },
    SequenceInfo {
        name: "E3",
        oeis: Some("A108307"),
        description: "octant excursions, one free zero step",
        engines: &[Walk, Recurrence, Transform, Oracle],
    },
    SequenceInfo {
        name: "NC3",
        oeis: Some("A108304"),
        description: "octant excursions, two free zero steps",
        engines: &[Walk, Transform, Oracle],
    },
    SequenceInfo {
        name: "S0",
        oeis: Some("A151366"),
        description: "quadrant excursions, no zero step",
        engines: &[Walk, ConstantTerm, Recurrence, Formula],
    },
    SequenceInfo {
        name: "S1",
        oeis: Some("A236408"),
        description: "quadrant excursions, one free zero step",
        engines: &[Walk, ConstantTerm, Recurrence, Transform, Formula],
    },
    SequenceInfo {
        name: "S2",
        oeis: Some("A001181"),
        description: "quadrant excursions, two free zero steps (Baxter numbers, shifted)",
        engines: &[Walk, ConstantTerm, Recurrence, Transform, Formula],
    },
    SequenceInfo {
        name: "S3",
        oeis: Some("A216947"),
        description: "quadrant excursions, three free zero steps",
        engines: &[Walk, ConstantTerm, Recurrence, Transform],
    },
    SequenceInfo {
        name: "catalan",
        oeis: Some("A000108"),
        description: "even-length half-line excursions",
        engines: &[Walk, ConstantTerm, Formula],
    },
    SequenceInfo {
        name: "catalan3d",
        oeis: Some("A005789"),
        description: "length-3n excursions of the SL(3) vector walk",
        engines: &[Walk, Formula],
    },
    SequenceInfo {
        name: "c2spin",
        oeis: Some("A005700"),
        description: "even-length excursions of the C2 spin walk",
        engines: &[Walk, Formula],
    },
];

/// Case-insensitive lookup by name or OEIS tag.
pub fn lookup(name: &str) -> Result<&'static SequenceInfo, RegistryError> {
    SEQUENCES
        .iter()
        .find(|s| s.name.eq_ignore_ascii_case(name) || s.oeis.is_some_and(|o| o.eq_ignore_ascii_case(name)))
        .ok_or_else(|| RegistryError::UnknownSequence(name.to_string()))
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn catalan(n: u64) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// `2 (3n)! / (n! (n+1)! (n+2)!)`
pub fn catalan3d(n: u64) -> BigInt {
    let f = |m: u64| (1..=m).fold(BigInt::one(), |acc, i| acc * i);
    BigInt::from(2) * f(3 * n) / (f(n) * f(n + 1) * f(n + 2))
}

/// `C_n C_{n+2} - C_{n+1}^2`
pub fn c2spin(n: u64) -> BigInt {
    catalan(n) * catalan(n + 2) - catalan(n + 1) * catalan(n + 1)
}

fn quadrant_k(name: &str) -> Option<u64> {
    match name {
        "S0" => Some(0),
        "S1" => Some(1),
        "S2" => Some(2),
        "S3" => Some(3),
        _ => None,
    }
}

fn quadrant_row(k: u64) -> &'static [i64] {
    match k {
        0 => &reference::S0_ROW,
        1 => &reference::S1_ROW,
        2 => &reference::S2_ROW,
        _ => &reference::S3_ROW,
    }
}

fn unrolled(rec: &PRecurrence, seed: &[i64], terms: usize) -> Result<Sequence, RegistryError> {
    let seed: Vec<BigInt> = seed.iter().map(|&x| BigInt::from(x)).collect();
    let mut a = unroll(rec, &seed, terms.saturating_sub(1))?;
    a.truncate(terms);
    Ok(Sequence::new(a))
}

fn partitions(n: usize, filter: PartitionFilter, guards: &Guards) -> Result<BigInt, RegistryError> {
    Ok(count_set_partitions(n, filter, guards)?)
}

/// The first `terms` terms of the named sequence by the given engine.
pub fn compute(name: &str, engine: Engine, terms: usize, guards: &Guards) -> Result<Sequence, RegistryError> {
    let info = lookup(name)?;
    if !info.engines.contains(&engine) {
        return Err(RegistryError::EngineUnavailable { sequence: info.name, engine });
    }
    if terms == 0 {
        return Ok(Sequence::new(Vec::new()));
    }
    let last = terms - 1;
    let no_singletons = PartitionFilter { forbid_singletons: true, max_enhanced_crossing: Some(3), ..Default::default() };
    let enhanced = PartitionFilter { max_enhanced_crossing: Some(3), ..Default::default() };
    let noncrossing = PartitionFilter { max_crossing: Some(3), ..Default::default() };
    let seq = match (info.name, engine) {
        ("T3", Walk) => excursions(&octant_g2(0), last),
        ("E3", Walk) => excursions(&octant_g2(1), last),
        ("NC3", Walk) => excursions(&octant_g2(2), last),
        ("T3", ConstantTerm) => ct_sequence(&g2_spec(), last),
        ("T3", Recurrence) => unrolled(&fixtures::t3_rec(), &reference::T3_ROW[..3], terms)?,
        ("E3", Recurrence) => unrolled(&fixtures::e3_rec(), &reference::E3_ROW[..2], terms)?,
        ("E3", Transform) => bt_power(&excursions(&octant_g2(0), last), 1),
        ("NC3", Transform) => bt_power(&excursions(&octant_g2(0), last), 2),
        ("T3", Oracle) => (0..terms).map(|n| partitions(n, no_singletons, guards)).collect::<Result<Vec<_>, _>>()?.into(),
        ("E3", Oracle) => (0..terms).map(|n| partitions(n, enhanced, guards)).collect::<Result<Vec<_>, _>>()?.into(),
        ("NC3", Oracle) => (0..terms).map(|n| partitions(n + 1, noncrossing, guards)).collect::<Result<Vec<_>, _>>()?.into(),
        (s, e) if quadrant_k(s).is_some() => {
            let k = quadrant_k(s).unwrap_or_default();
            match e {
                Walk => excursions(&quadrant_sl3(k), last),
                ConstantTerm => ct_sequence(&quadrant_spec(k as i64), last),
                Recurrence => unrolled(&fixtures::uniform_rec(k as i64), &quadrant_row(k)[..4], terms)?,
                Transform => bt_power(&excursions(&quadrant_sl3(0), last), k as i64),
                _ => {
                    let variant = match k {
                        0 => QuadrantVariant::S0,
                        1 => QuadrantVariant::S1a,
                        _ => QuadrantVariant::S2,
                    };
                    (0..terms).map(|n| quadrant_sum(variant, n)).collect::<Result<Vec<_>, _>>()?.into()
                }
            }
        }
        ("catalan", Walk) => excursions(&halfline_sl2(), 2 * last).every(2),
        ("catalan", ConstantTerm) => ct_sequence(&sl2_spec(), 2 * last).every(2),
        ("catalan", _) => (0..terms as u64).map(catalan).collect::<Vec<_>>().into(),
        ("catalan3d", Walk) => excursions(&quadrant_sl3_vector(), 3 * last).every(3),
        ("catalan3d", _) => (0..terms as u64).map(catalan3d).collect::<Vec<_>>().into(),
        ("c2spin", Walk) => excursions(&c2_spin(), 2 * last).every(2),
        ("c2spin", _) => (0..terms as u64).map(c2spin).collect::<Vec<_>>().into(),
        _ => return Err(RegistryError::EngineUnavailable { sequence: info.name, engine }),
    };
    Ok(seq.prefix(terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engines_agree_on_short_prefixes() {
        let g = Guards::default();
        for info in &SEQUENCES {
            let base = compute(info.name, info.engines[0], 8, &g).unwrap();
            assert_eq!(base.len(), 8);
            for &e in &info.engines[1..] {
                assert_eq!(compute(info.name, e, 8, &g).unwrap(), base, "{} via {e}", info.name);
            }
        }
    }

    #[test]
    fn lookup_by_alias() {
        assert_eq!(lookup("a108304").unwrap().name, "NC3");
        assert_eq!(lookup("t3").unwrap().name, "T3");
        assert!(matches!(lookup("T4"), Err(RegistryError::UnknownSequence(_))));
    }

    #[test]
    fn formulas() {
        assert_eq!(compute("catalan3d", Formula, 5, &Guards::default()).unwrap(), Sequence::from_i64(&[1, 1, 5, 42, 462]));
        assert_eq!(compute("c2spin", Formula, 5, &Guards::default()).unwrap(), Sequence::from_i64(&[1, 1, 3, 14, 84]));
    }

    #[test]
    fn missing_engine() {
        assert_eq!(
            compute("NC3", ConstantTerm, 3, &Guards::default()),
            Err(RegistryError::EngineUnavailable { sequence: "NC3", engine: ConstantTerm })
        );
        assert_eq!(compute("T3", Walk, 0, &Guards::default()).unwrap().len(), 0);
    }
}
