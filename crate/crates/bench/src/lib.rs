//! Shared fixtures for the criterion benches.

use sweepcover::{build_ild_truncated, IldSpec, Tree};

/// Truncated ILD tree deep enough for covers of size `n`.
pub fn ild_fixture(delta: usize, gamma: usize, n: usize) -> Tree {
    let spec = IldSpec::new(delta, gamma, n + 1).expect("bench parameters are valid");
    build_ild_truncated(&spec).expect("bench parameters are valid")
}
