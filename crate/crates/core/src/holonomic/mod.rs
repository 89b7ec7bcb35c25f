//! P-recurrences, linear differential operators and the operator fixtures.

mod diffop;
pub mod fixtures;
mod guess;
mod linalg;
mod ore;
mod poly;
mod recurrence;

pub use diffop::{clear_denominators, diffop_apply, diffop_mul, ode_to_recurrence, DiffOp};
pub use fixtures::{operator_fixture, polynomial_fixture, Fixture};
pub use guess::{guess_length_needed, guess_recurrence};
pub use ore::{shift_right_divide, ShiftOperator};
pub use poly::{IntPoly, RationalFunction};
pub use recurrence::{check_recurrence, unroll, unroll_rational, PRecurrence, RecurrenceCheck};

use crate::series::SeriesError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum HolonomicError {
    #[error("recurrence has no coefficients")]
    EmptyRecurrence,
    #[error("leading coefficient of the recurrence is identically zero")]
    ZeroLeadingCoefficient,
    #[error("leading coefficient vanishes at n = {0}")]
    LeadingVanishes(usize),
    #[error("inexact integer division while unrolling at n = {0}")]
    InexactDivision(usize),
    #[error("need at least {needed} initial terms, got {got}")]
    TooFewInitialTerms { needed: usize, got: usize },
    #[error("sequence of length {len} is too short (need {needed})")]
    InsufficientData { len: usize, needed: usize },
    #[error("operator has a non-polynomial coefficient")]
    NonPolynomialCoefficient,
    #[error("unknown fixture `{0}`")]
    UnknownFixture(alloc::string::String),
    #[error("fixture `{0}` needs an integer parameter k")]
    MissingParameter(&'static str),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
