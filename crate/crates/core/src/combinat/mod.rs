//! Exhaustive combinatorial oracles: set partitions, inversion sequences,
//! tableau walks in the Young lattice and three-row rectangular tableaux.

mod inversions;
mod partitions;
mod rect;
mod tableaux;

pub use inversions::{count_inversion_sequences, InversionFilter, InversionSequence};
pub use partitions::{count_set_partitions, ArcDiagram, PartitionFilter, SetPartition};
pub use rect::{
    count_rect_tableaux, count_rect_tableaux_exhaustive, quadrant_sum, quadrant_sum_exhaustive, QuadrantVariant,
    QUADRANT_SUM_MAX_N,
};
pub use tableaux::{count_tableau_walks, tableau_walk_endpoints, Shape, TableauKind};

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CombinatError {
    #[error("n = {n} exceeds the enumeration guard {max}")]
    TooLarge { n: usize, max: usize },
    #[error("m = {m} columns exceeds the exhaustive-filling guard {max}")]
    TooManyColumns { m: usize, max: usize },
    #[error("height {0} is not supported (1 to 4)")]
    UnsupportedHeight(usize),
    #[error("content sums to {found}, expected {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("shape has more rows than the height allows")]
    ShapeTooTall,
}
