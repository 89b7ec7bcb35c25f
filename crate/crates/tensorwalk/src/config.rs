//! JSON forms of walk configurations, constant-term specs, recurrences and
//! operators. Integers may be given as JSON numbers or decimal strings and
//! are always written back as strings.

use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use tensorwalk_core::laurent::ExponentVector;
use tensorwalk_core::{
    CtSpec, DiffOp, IntPoly, LaurentPoly, LinearConstraint, PRecurrence, RationalFunction, Relation, StepRule,
    WalkConfig,
};

use crate::CliError;

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Str(String),
}

impl Num {
    pub fn to_bigint(&self) -> Result<BigInt, CliError> {
        match self {
            Num::Int(i) => Ok(BigInt::from(*i)),
            Num::Str(s) => s.trim().parse().map_err(|_| CliError::Usage(format!("`{s}` is not an integer"))),
        }
    }
}

impl From<&BigInt> for Num {
    fn from(b: &BigInt) -> Self {
        Num::Str(b.to_string())
    }
}

pub fn bigints(v: &[Num]) -> Result<Vec<BigInt>, CliError> {
    v.iter().map(Num::to_bigint).collect()
}

fn nums(v: &[BigInt]) -> Vec<Num> {
    v.iter().map(Num::from).collect()
}

#[derive(Clone, Copy, Debug, Default, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationJson {
    #[default]
    Ge,
    Eq,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintJson {
    pub coeffs: [i64; 2],
    pub bound: i64,
    #[serde(default)]
    pub relation: RelationJson,
}

fn one() -> u64 {
    1
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct StepJson {
    pub vector: [i64; 2],
    #[serde(default = "one")]
    pub multiplicity: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub forbidden_when: Vec<ConstraintJson>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct WalkConfigJson {
    pub domain: Vec<ConstraintJson>,
    pub steps: Vec<StepJson>,
    #[serde(default)]
    pub start: [i64; 2],
}

impl From<&ConstraintJson> for LinearConstraint {
    fn from(c: &ConstraintJson) -> Self {
        match c.relation {
            RelationJson::Ge => LinearConstraint::ge(c.coeffs, c.bound),
            RelationJson::Eq => LinearConstraint::eq(c.coeffs, c.bound),
        }
    }
}

impl From<&LinearConstraint> for ConstraintJson {
    fn from(c: &LinearConstraint) -> Self {
        let relation = match c.relation {
            Relation::Ge => RelationJson::Ge,
            Relation::Eq => RelationJson::Eq,
        };
        Self { coeffs: c.coeffs, bound: c.bound, relation }
    }
}

impl WalkConfigJson {
    pub fn build(&self) -> Result<WalkConfig, CliError> {
        let steps = self
            .steps
            .iter()
            .map(|s| StepRule {
                forbidden_when: s.forbidden_when.iter().map(Into::into).collect(),
                ..StepRule::with_multiplicity(s.vector, s.multiplicity)
            })
            .collect();
        let domain = self.domain.iter().map(Into::into).collect();
        Ok(WalkConfig::new(domain, steps, self.start)?)
    }
}

impl From<&WalkConfig> for WalkConfigJson {
    fn from(c: &WalkConfig) -> Self {
        Self {
            domain: c.domain().iter().map(Into::into).collect(),
            steps: c
                .steps()
                .iter()
                .map(|s| StepJson {
                    vector: s.vector,
                    multiplicity: s.multiplicity,
                    forbidden_when: s.forbidden_when.iter().map(Into::into).collect(),
                })
                .collect(),
            start: c.start(),
        }
    }
}

/// `{"vars": d, "delta": [[[e1, e2], c], ...], "kernel": [...]}`
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CtSpecJson {
    pub vars: usize,
    pub delta: Vec<(Vec<i64>, Num)>,
    pub kernel: Vec<(Vec<i64>, Num)>,
}

fn laurent(d: usize, terms: &[(Vec<i64>, Num)]) -> Result<LaurentPoly, CliError> {
    let terms = terms
        .iter()
        .map(|(e, c)| Ok((ExponentVector::new(e.clone()), c.to_bigint()?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(LaurentPoly::from_terms(d, terms)?)
}

fn laurent_terms(p: &LaurentPoly) -> Vec<(Vec<i64>, Num)> {
    p.terms().iter().map(|(e, c)| (e.entries().to_vec(), Num::from(c))).collect()
}

impl CtSpecJson {
    pub fn build(&self) -> Result<CtSpec, CliError> {
        Ok(CtSpec::new(laurent(self.vars, &self.delta)?, laurent(self.vars, &self.kernel)?)?)
    }
}

impl From<&CtSpec> for CtSpecJson {
    fn from(s: &CtSpec) -> Self {
        Self { vars: s.d(), delta: laurent_terms(s.delta()), kernel: laurent_terms(s.kernel()) }
    }
}

/// `Σ_i p_i(n) a(n+i) = 0` with each `p_i` an ascending coefficient list.
/// `order` and `text` are accepted so printed recurrences read back.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RecurrenceJson {
    pub coeffs: Vec<Vec<Num>>,
    #[serde(default, skip_serializing)]
    pub order: Option<usize>,
    #[serde(default, skip_serializing)]
    pub text: Option<String>,
}

impl RecurrenceJson {
    pub fn build(&self) -> Result<PRecurrence, CliError> {
        let coeffs = self.coeffs.iter().map(|c| Ok(IntPoly::new(bigints(c)?))).collect::<Result<_, CliError>>()?;
        Ok(PRecurrence::new(coeffs)?)
    }
}

impl From<&PRecurrence> for RecurrenceJson {
    fn from(r: &PRecurrence) -> Self {
        Self { coeffs: r.coeffs().iter().map(|p| nums(p.coeffs())).collect(), order: None, text: None }
    }
}

/// `Σ_i c_i(t) ∂^i`. Each coefficient is an ascending polynomial list or
/// a `{"numer", "denom"}` pair, the form operators are printed in.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorJson {
    pub coeffs: Vec<CoeffJson>,
    #[serde(default)]
    pub order: Option<usize>,
    #[serde(default)]
    pub text: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum CoeffJson {
    Poly(Vec<Num>),
    Ratio(RationalFunctionJson),
}

impl CoeffJson {
    fn build(&self) -> Result<RationalFunction, CliError> {
        Ok(match self {
            CoeffJson::Poly(p) => RationalFunction::from_poly(IntPoly::new(bigints(p)?)),
            CoeffJson::Ratio(f) => {
                let denom = match &f.denom {
                    Some(d) => IntPoly::new(bigints(d)?),
                    None => IntPoly::one(),
                };
                if denom.is_zero() {
                    return Err(CliError::Usage("operator coefficient has a zero denominator".into()));
                }
                RationalFunction::new(IntPoly::new(bigints(&f.numer)?), denom)
            }
        })
    }
}

impl OperatorJson {
    pub fn build(&self) -> Result<DiffOp, CliError> {
        Ok(DiffOp::new(self.coeffs.iter().map(CoeffJson::build).collect::<Result<_, _>>()?))
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RationalFunctionJson {
    pub numer: Vec<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denom: Option<Vec<Num>>,
}

impl From<&RationalFunction> for RationalFunctionJson {
    fn from(f: &RationalFunction) -> Self {
        let denom = (f.denom() != &IntPoly::one()).then(|| nums(f.denom().coeffs()));
        Self { numer: nums(f.numer().coeffs()), denom }
    }
}

pub fn operator_json(op: &DiffOp) -> Vec<RationalFunctionJson> {
    op.coeffs().iter().map(Into::into).collect()
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}
