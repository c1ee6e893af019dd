//! Side-by-side counts on a truncated ILD tree: the recurrence, the
//! exhaustive oracle, and the recursive enumerator.

use num_bigint::BigUint;
use thiserror::Error;

use crate::count::{CountError, PCounter};
use crate::enumerate::{brute_force_covers, count_sweep_covers, EnumerateError};
use crate::tree::{build_ild_truncated, IldSpec, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiscrepancyError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyRow {
    pub n: usize,
    pub recurrence_count: BigUint,
    pub truncated_brute_force_count: usize,
    pub truncated_algorithm_count: usize,
}

impl DiscrepancyRow {
    pub fn agrees(&self) -> bool {
        self.recurrence_count == BigUint::from(self.truncated_brute_force_count)
    }
}

/// Counts covers of size `1..=n_max` on `build_ild_truncated(spec)` and sets
/// them beside `P_{delta,gamma}(n)`. Informational only.
pub fn discrepancy_report(
    spec: &IldSpec,
    n_max: usize,
) -> Result<Vec<DiscrepancyRow>, DiscrepancyError> {
    if n_max < 1 {
        return Err(EnumerateError::InvalidN(n_max).into());
    }
    let tree = build_ild_truncated(spec)?;
    let counter = PCounter::new();
    let algorithm = count_sweep_covers(&tree, n_max);
    (1..=n_max)
        .map(|n| {
            Ok(DiscrepancyRow {
                n,
                recurrence_count: counter.p(spec.delta, spec.gamma, n)?,
                truncated_brute_force_count: brute_force_covers(&tree, n)?.len(),
                truncated_algorithm_count: algorithm[n - 1],
            })
        })
        .collect()
}
