//! Exact engines for the octant (G2) and quadrant (SL(3)) families of
//! tensor-invariant sequences.
//!
//! Every sequence handled here can be produced by more than one route:
//! walk enumeration, constant terms of Laurent polynomials, unrolled
//! P-recurrences, closed-form generating functions, and brute-force
//! combinatorial oracles. The [`regress`] module cross-checks them.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod branching;
pub mod combinat;
pub mod holonomic;
pub mod laurent;
pub mod reference;
pub mod registry;
pub mod regress;
pub mod series;
pub mod transforms;
pub mod walks;

pub use holonomic::{DiffOp, IntPoly, PRecurrence, RationalFunction};
pub use laurent::{CtSpec, ExponentVector, LaurentPoly};
pub use series::{PowerSeries, Rational};
pub use transforms::Sequence;
pub use walks::{EndpointTable, LinearConstraint, Relation, StepRule, WalkConfig};

/// Size limits for the exhaustive enumerations.
///
/// The defaults keep the oracle suite fast; callers that know what they
/// are doing may raise them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest ground-set size for set-partition and inversion-sequence
    /// enumeration.
    pub max_n: usize,
    /// Largest number of columns for exhaustive tableau filling.
    pub max_columns: usize,
    /// Largest semilength for tableau-walk enumeration.
    pub max_tableau_n: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Self {
            max_n: 12,
            max_columns: 4,
            max_tableau_n: 14,
        }
    }
}
