//! Endpoint-resolved enumeration of lattice walks in polyhedral domains
//! with position-dependent steps.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::transforms::Sequence;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("start position {0:?} lies outside the domain")]
    StartOutsideDomain([i64; 2]),
    #[error("constraint has all-zero coefficients")]
    DegenerateConstraint,
    #[error("step {0:?} has multiplicity zero")]
    ZeroMultiplicity([i64; 2]),
    #[error("unknown walk configuration `{0}`")]
    UnknownConfig(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `c·p >= bound`
    Ge,
    /// `c·p == bound`
    Eq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinearConstraint {
    pub coeffs: [i64; 2],
    pub bound: i64,
    pub relation: Relation,
}

impl LinearConstraint {
    pub fn ge(coeffs: [i64; 2], bound: i64) -> Self {
        Self { coeffs, bound, relation: Relation::Ge }
    }

    pub fn eq(coeffs: [i64; 2], bound: i64) -> Self {
        Self { coeffs, bound, relation: Relation::Eq }
    }

    pub fn holds(&self, p: [i64; 2]) -> bool {
        let v = self.coeffs[0] * p[0] + self.coeffs[1] * p[1];
        match self.relation {
            Relation::Ge => v >= self.bound,
            Relation::Eq => v == self.bound,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepRule {
    pub vector: [i64; 2],
    pub multiplicity: u64,
    /// The step is unavailable at positions satisfying every constraint
    /// listed here. Empty means always available.
    pub forbidden_when: Vec<LinearConstraint>,
}

impl StepRule {
    pub fn new(vector: [i64; 2]) -> Self {
        Self { vector, multiplicity: 1, forbidden_when: Vec::new() }
    }

    pub fn with_multiplicity(vector: [i64; 2], multiplicity: u64) -> Self {
        Self { vector, multiplicity, forbidden_when: Vec::new() }
    }

    pub fn forbidden_on(vector: [i64; 2], constraint: LinearConstraint) -> Self {
        Self { vector, multiplicity: 1, forbidden_when: vec![constraint] }
    }

    pub fn allowed_at(&self, p: [i64; 2]) -> bool {
        self.forbidden_when.is_empty() || !self.forbidden_when.iter().all(|c| c.holds(p))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WalkConfig {
    domain: Vec<LinearConstraint>,
    steps: Vec<StepRule>,
    start: [i64; 2],
}

impl WalkConfig {
    pub fn new(domain: Vec<LinearConstraint>, steps: Vec<StepRule>, start: [i64; 2]) -> Result<Self, WalkError> {
        let constraints = domain.iter().chain(steps.iter().flat_map(|s| s.forbidden_when.iter()));
        if constraints.clone().any(|c| c.coeffs == [0, 0]) {
            return Err(WalkError::DegenerateConstraint);
        }
        if let Some(s) = steps.iter().find(|s| s.multiplicity == 0) {
            return Err(WalkError::ZeroMultiplicity(s.vector));
        }
        let cfg = Self { domain, steps, start };
        if !cfg.in_domain(start) {
            return Err(WalkError::StartOutsideDomain(start));
        }
        Ok(cfg)
    }

    pub fn domain(&self) -> &[LinearConstraint] {
        &self.domain
    }

    pub fn steps(&self) -> &[StepRule] {
        &self.steps
    }

    pub fn start(&self) -> [i64; 2] {
        self.start
    }

    pub fn in_domain(&self, p: [i64; 2]) -> bool {
        self.domain.iter().all(|c| c.holds(p))
    }

    /// Sum of step multiplicities; the unrestricted walk count is its n-th power.
    pub fn total_multiplicity(&self) -> u64 {
        self.steps.iter().map(|s| s.multiplicity).sum()
    }
}

/// Walk counts of a fixed length, keyed by endpoint.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EndpointTable {
    pub length: usize,
    pub counts: BTreeMap<[i64; 2], BigInt>,
}

impl EndpointTable {
    pub fn get(&self, p: [i64; 2]) -> BigInt {
        self.counts.get(&p).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }
}

/// Tables for lengths `0..=n_max`.
pub fn count_endpoints(config: &WalkConfig, n_max: usize) -> Vec<EndpointTable> {
    let mut tables = Vec::with_capacity(n_max + 1);
    let mut cur: BTreeMap<[i64; 2], BigInt> = BTreeMap::new();
    cur.insert(config.start, BigInt::one());
    for length in 0..=n_max {
        if length > 0 {
            let mut next: BTreeMap<[i64; 2], BigInt> = BTreeMap::new();
            for (&p, c) in &cur {
                for step in &config.steps {
                    if !step.allowed_at(p) {
                        continue;
                    }
                    let q = [p[0] + step.vector[0], p[1] + step.vector[1]];
                    if !config.in_domain(q) {
                        continue;
                    }
                    let add = if step.multiplicity == 1 { c.clone() } else { c * step.multiplicity };
                    *next.entry(q).or_insert_with(BigInt::zero) += add;
                }
            }
            cur = next;
        }
        tables.push(EndpointTable { length, counts: cur.clone() });
    }
    tables
}

/// Number of walks returning to the start, for lengths `0..=n_max`.
pub fn excursions(config: &WalkConfig, n_max: usize) -> Sequence {
    let s = config.start;
    Sequence::new(count_endpoints(config, n_max).iter().map(|t| t.get(s)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Endpoints `(r, 0)`.
    X,
    /// Endpoints `(0, s)`.
    Y,
}

impl Axis {
    pub fn from_index(i: usize) -> Option<Self> {
        match i {
            0 => Some(Axis::X),
            1 => Some(Axis::Y),
            _ => None,
        }
    }
}

/// Number of walks ending on the given axis.
pub fn axis_sum(config: &WalkConfig, axis: Axis, n_max: usize) -> Sequence {
    let zero_coord = match axis {
        Axis::X => 1,
        Axis::Y => 0,
    };
    Sequence::new(
        count_endpoints(config, n_max)
            .iter()
            .map(|t| t.counts.iter().filter(|(p, _)| p[zero_coord] == 0).map(|(_, c)| c).sum())
            .collect(),
    )
}

pub const BUILTIN_NAMES: [&str; 7] = [
    "octant_g2",
    "quadrant_sl3",
    "halfline_sl2",
    "quadrant_sl3_vector",
    "c2_spin",
    "hesitating8",
    "vacillating9",
];

fn quadrant() -> Vec<LinearConstraint> {
    vec![LinearConstraint::ge([1, 0], 0), LinearConstraint::ge([0, 1], 0)]
}

/// `x >= y >= 0`
fn tableau_domain() -> Vec<LinearConstraint> {
    vec![LinearConstraint::ge([0, 1], 0), LinearConstraint::ge([1, -1], 0)]
}

fn plain(vectors: &[[i64; 2]]) -> Vec<StepRule> {
    vectors.iter().map(|&v| StepRule::new(v)).collect()
}

fn with_free_zero(mut steps: Vec<StepRule>, k: u64) -> Vec<StepRule> {
    if k > 0 {
        steps.push(StepRule::with_multiplicity([0, 0], k));
    }
    steps
}

/// G2 walks in weight coordinates with `k` extra trivial summands.
pub fn octant_g2(k: u64) -> WalkConfig {
    let mut steps = plain(&[[1, 0], [-1, 1], [-2, 1], [-1, 0], [1, -1], [2, -1]]);
    steps.push(StepRule::forbidden_on([0, 0], LinearConstraint::eq([1, 0], 0)));
    WalkConfig::new(quadrant(), with_free_zero(steps, k), [0, 0]).expect("valid builtin")
}

/// SL(3) walks for `V ⊕ V* ⊕ k C`.
pub fn quadrant_sl3(k: u64) -> WalkConfig {
    let steps = plain(&[[1, 0], [-1, 1], [0, -1], [-1, 0], [1, -1], [0, 1]]);
    WalkConfig::new(quadrant(), with_free_zero(steps, k), [0, 0]).expect("valid builtin")
}

pub fn quadrant_sl3_vector() -> WalkConfig {
    WalkConfig::new(quadrant(), plain(&[[1, 0], [-1, 1], [0, -1]]), [0, 0]).expect("valid builtin")
}

pub fn halfline_sl2() -> WalkConfig {
    let domain = vec![LinearConstraint::ge([1, 0], 0), LinearConstraint::eq([0, 1], 0)];
    WalkConfig::new(domain, plain(&[[1, 0], [-1, 0]]), [0, 0]).expect("valid builtin")
}

pub fn c2_spin() -> WalkConfig {
    WalkConfig::new(quadrant(), plain(&[[1, 0], [-1, 1], [1, -1], [-1, 0]]), [0, 0]).expect("valid builtin")
}

/// Height-2 hesitating tableaux as walks in `x >= y >= 0`.
///
/// Six shape-changing steps plus two zero steps: adding and removing a cell
/// in row 1 (always allowed) and in row 2 (not allowed on `x = y`).
pub fn hesitating8() -> WalkConfig {
    let mut steps = plain(&[[1, 0], [0, 1], [-1, 0], [0, -1], [1, -1], [-1, 1]]);
    steps.push(StepRule::new([0, 0]));
    steps.push(StepRule::forbidden_on([0, 0], LinearConstraint::eq([1, -1], 0)));
    WalkConfig::new(tableau_domain(), steps, [0, 0]).expect("valid builtin")
}

/// Height-2 vacillating tableaux with add-first move pairs: the hesitating
/// steps plus the do-nothing-twice step.
pub fn vacillating9() -> WalkConfig {
    let mut steps = hesitating8().steps;
    steps.push(StepRule::new([0, 0]));
    WalkConfig::new(tableau_domain(), steps, [0, 0]).expect("valid builtin")
}

/// Built-in configuration by name; `k` is used by `octant_g2` and `quadrant_sl3`.
pub fn builtin_config(name: &str, k: u64) -> Result<WalkConfig, WalkError> {
    Ok(match name {
        "octant_g2" => octant_g2(k),
        "quadrant_sl3" => quadrant_sl3(k),
        "halfline_sl2" => halfline_sl2(),
        "quadrant_sl3_vector" => quadrant_sl3_vector(),
        "c2_spin" => c2_spin(),
        "hesitating8" => hesitating8(),
        "vacillating9" => vacillating9(),
        _ => return Err(WalkError::UnknownConfig(name.to_string())),
    })
}

/// Exhaustive enumeration of every step word of length `n`, counted by
/// endpoint. Exponential; meant as an oracle for small `n`.
pub fn brute_force_endpoints(config: &WalkConfig, n: usize) -> BTreeMap<[i64; 2], BigInt> {
    fn go(cfg: &WalkConfig, p: [i64; 2], left: usize, weight: u64, out: &mut BTreeMap<[i64; 2], BigInt>) {
        if left == 0 {
            *out.entry(p).or_insert_with(BigInt::zero) += weight;
            return;
        }
        for step in &cfg.steps {
            let q = [p[0] + step.vector[0], p[1] + step.vector[1]];
            if step.allowed_at(p) && cfg.in_domain(q) {
                go(cfg, q, left - 1, weight * step.multiplicity, out);
            }
        }
    }
    let mut out = BTreeMap::new();
    go(config, config.start, n, 1, &mut out);
    out
}
