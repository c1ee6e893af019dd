//! The sweep-cover count on ILD trees.
//!
//! ```text
//! P(1) = gamma + 1
//! P(n) = sum_{l=1}^{D-2} C(D,l) sum_{r=1}^{D-l} L(n-r, l) R(D-l, r)
//!        + L(n, D) + R(D, n)                                  (n >= 2)
//! L(n, i) = sum over compositions K of n into i parts of prod_j P(k_j)
//! ```
//!
//! `D` is the star out-degree and `R` the non-singleton partition count.
//! Values are exact and memoized per `(delta, gamma, n)`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::numbers::{binomial, count_nonsingleton};
use super::CountError;
use crate::enumerate::compositions;

/// Memo table shared by every `P` evaluation made through it. Safe to use
/// from several threads: concurrent writers always store the same value.
#[derive(Debug, Default)]
pub struct PCounter {
    memo: RwLock<HashMap<(usize, usize, usize), BigUint>>,
    nonsingleton: RwLock<HashMap<(usize, usize), BigUint>>,
}

fn check_params(delta: usize, n: usize) -> Result<(), CountError> {
    if delta < 2 {
        return Err(CountError::InvalidParams(format!(
            "delta must be at least 2, got {delta}"
        )));
    }
    if n < 1 {
        return Err(CountError::InvalidParams("n must be at least 1".into()));
    }
    Ok(())
}

impl PCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of cached `P` cells.
    pub fn cached(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    pub fn p(&self, delta: usize, gamma: usize, n: usize) -> Result<BigUint, CountError> {
        check_params(delta, n)?;
        Ok(self.p_unchecked(delta, gamma, n))
    }

    pub fn l_delta(
        &self,
        delta: usize,
        gamma: usize,
        n: usize,
        i: usize,
    ) -> Result<BigUint, CountError> {
        if delta < 2 {
            return Err(CountError::InvalidParams(format!(
                "delta must be at least 2, got {delta}"
            )));
        }
        if i < 1 {
            return Err(CountError::InvalidParams("i must be at least 1".into()));
        }
        Ok(self.l_unchecked(delta, gamma, n, i))
    }

    fn r(&self, n: usize, m: usize) -> BigUint {
        if let Some(v) = self.nonsingleton.read().expect("lock").get(&(n, m)) {
            return v.clone();
        }
        let v = count_nonsingleton(n, m);
        self.nonsingleton
            .write()
            .expect("lock")
            .insert((n, m), v.clone());
        v
    }

    fn p_unchecked(&self, delta: usize, gamma: usize, n: usize) -> BigUint {
        if n == 1 {
            return BigUint::from(gamma + 1);
        }
        let key = (delta, gamma, n);
        if let Some(v) = self.memo.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for l in 1..=delta.saturating_sub(2) {
            let mut inner = BigUint::zero();
            for r in 1..=delta - l {
                if r >= n {
                    break;
                }
                let rv = self.r(delta - l, r);
                if rv.is_zero() {
                    continue;
                }
                inner += self.l_unchecked(delta, gamma, n - r, l) * rv;
            }
            total += binomial(delta, l) * inner;
        }
        total += self.l_unchecked(delta, gamma, n, delta);
        total += self.r(delta, n);
        self.memo
            .write()
            .expect("memo lock")
            .insert(key, total.clone());
        total
    }

    fn l_unchecked(&self, delta: usize, gamma: usize, n: usize, i: usize) -> BigUint {
        if n == 0 || n < i {
            return BigUint::zero();
        }
        let mut sum = BigUint::zero();
        for parts in compositions(n, i) {
            let mut prod = BigUint::one();
            for k in parts {
                prod *= self.p_unchecked(delta, gamma, k);
            }
            sum += prod;
        }
        sum
    }
}

/// `P_{delta,gamma}(n)`, evaluated with a fresh memo table.
pub fn p_count(delta: usize, gamma: usize, n: usize) -> Result<BigUint, CountError> {
    PCounter::new().p(delta, gamma, n)
}

/// `L_delta(n, i)` for the given `gamma`.
pub fn l_delta(delta: usize, gamma: usize, n: usize, i: usize) -> Result<BigUint, CountError> {
    PCounter::new().l_delta(delta, gamma, n, i)
}

/// Direct evaluation without any cache. Exponential; kept as a reference
/// for the memoized path.
pub fn p_count_uncached(delta: usize, gamma: usize, n: usize) -> Result<BigUint, CountError> {
    check_params(delta, n)?;
    fn p(delta: usize, gamma: usize, n: usize) -> BigUint {
        if n == 1 {
            return BigUint::from(gamma + 1);
        }
        let l_of = |n: usize, i: usize| -> BigUint {
            if n == 0 || n < i {
                return BigUint::zero();
            }
            compositions(n, i)
                .map(|parts| {
                    parts
                        .into_iter()
                        .map(|k| p(delta, gamma, k))
                        .product::<BigUint>()
                })
                .sum()
        };
        let mut total = BigUint::zero();
        for l in 1..=delta.saturating_sub(2) {
            for r in 1..=delta - l {
                if r < n {
                    total += binomial(delta, l) * l_of(n - r, l) * count_nonsingleton(delta - l, r);
                }
            }
        }
        total + l_of(n, delta) + count_nonsingleton(delta, n)
    }
    Ok(p(delta, gamma, n))
}

/// Coefficients `[P(1), ..., P(n_max)]` of the generating function.
pub fn series_coefficients(
    delta: usize,
    gamma: usize,
    n_max: usize,
) -> Result<Vec<BigUint>, CountError> {
    if n_max < 1 {
        return Err(CountError::InvalidParams("n_max must be at least 1".into()));
    }
    let counter = PCounter::new();
    (1..=n_max).map(|n| counter.p(delta, gamma, n)).collect()
}

/// An exact grid of `P_{delta,gamma}(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PTable {
    pub gamma: usize,
    pub deltas: Vec<usize>,
    pub ns: Vec<usize>,
    /// `values[row][col]` is `P_{deltas[row], gamma}(ns[col])`.
    pub values: Vec<Vec<BigUint>>,
}

impl PTable {
    pub fn get(&self, delta: usize, n: usize) -> Option<&BigUint> {
        let row = self.deltas.iter().position(|&d| d == delta)?;
        let col = self.ns.iter().position(|&x| x == n)?;
        Some(&self.values[row][col])
    }
}

/// Computes every cell for `delta` in `deltas` and `n` in `ns`. Rows are
/// evaluated in parallel against one shared memo table.
pub fn p_table(
    deltas: std::ops::RangeInclusive<usize>,
    ns: std::ops::RangeInclusive<usize>,
    gamma: usize,
) -> Result<PTable, CountError> {
    if deltas.is_empty() || ns.is_empty() {
        return Err(CountError::InvalidParams("empty range".into()));
    }
    check_params(*deltas.start(), *ns.start())?;
    let counter = PCounter::new();
    let deltas: Vec<usize> = deltas.collect();
    let ns: Vec<usize> = ns.collect();
    let values = deltas
        .par_iter()
        .map(|&d| {
            ns.iter()
                .map(|&n| counter.p_unchecked(d, gamma, n))
                .collect()
        })
        .collect();
    Ok(PTable {
        gamma,
        deltas,
        ns,
        values,
    })
}
