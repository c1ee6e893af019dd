//! Exact counting: Stirling and Raney numbers, the non-singleton partition
//! count, the memoized sweep-cover recurrence on ILD trees and reports
//! built on top of it.

mod numbers;
mod recurrence;
mod report;

use thiserror::Error;

pub use numbers::{binomial, catalan, count_nonsingleton, raney, stirling2, RaneyParams};
pub use recurrence::{
    l_delta, p_count, p_count_uncached, p_table, series_coefficients, PCounter, PTable,
};
pub use report::{
    catalan_index_offset, growth_report, raney_bound_report, raney_decomposition,
    raney_decomposition_check, BoundRow, DecompositionCheck, GrowthRow,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("C_{{{p},{r}}}({k}) is not an integer")]
    NonIntegerResult { p: usize, r: usize, k: usize },
}
