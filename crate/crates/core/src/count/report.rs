//! Identity checks and diagnostic reports. Nothing here asserts a bound;
//! every comparison is computed and returned.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::numbers::{binomial, catalan, raney, RaneyParams};
use super::recurrence::PCounter;
use super::CountError;
use crate::enumerate::compositions;

/// Both sides of the Raney decomposition
/// `C_{p,r}(k) = sum_{l=1}^{r} C(r,l) sum_{H in O(k-1, l)} prod_j C_{p,1}(h_j + 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionCheck {
    pub p: usize,
    pub r: usize,
    pub k: usize,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub holds: bool,
}

pub fn raney_decomposition(p: usize, r: usize, k: usize) -> Result<DecompositionCheck, CountError> {
    if p < 1 || r < 1 || k < 1 {
        return Err(CountError::InvalidParams(format!(
            "decomposition needs p, r, k >= 1, got p={p}, r={r}, k={k}"
        )));
    }
    let lhs = raney(RaneyParams::new(p, r, k)?)?;
    let mut rhs = BigUint::zero();
    for l in 1..=r {
        let mut inner = BigUint::zero();
        for parts in compositions(k - 1, l) {
            let mut prod = BigUint::from(1u8);
            for h in parts {
                prod *= raney(RaneyParams::new(p, 1, h + 1)?)?;
            }
            inner += prod;
        }
        rhs += binomial(r, l) * inner;
    }
    let holds = lhs == rhs;
    Ok(DecompositionCheck {
        p,
        r,
        k,
        lhs,
        rhs,
        holds,
    })
}

/// Whether the Raney decomposition identity evaluates to equality.
pub fn raney_decomposition_check(p: usize, r: usize, k: usize) -> Result<bool, CountError> {
    Ok(raney_decomposition(p, r, k)?.holds)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRow {
    pub n: usize,
    pub p: BigUint,
    /// `C_{delta,1}(n + 1)`
    pub raney: BigUint,
    /// `p >= raney`
    pub inequality_holds: bool,
}

/// Compares `P_{delta,gamma}(n)` with `C_{delta,1}(n+1)` row by row.
pub fn raney_bound_report(
    delta: usize,
    gamma: usize,
    ns: std::ops::RangeInclusive<usize>,
) -> Result<Vec<BoundRow>, CountError> {
    let counter = PCounter::new();
    ns.map(|n| {
        let p = counter.p(delta, gamma, n)?;
        let raney = raney(RaneyParams::new(delta, 1, n + 1)?)?;
        let inequality_holds = p >= raney;
        Ok(BoundRow {
            n,
            p,
            raney,
            inequality_holds,
        })
    })
    .collect()
}

/// The shift `s` with `P_{2,gamma}(n) = catalan(n + s)` for every `n` in
/// range, searched over `-n_start..=2`. `None` if no shift fits.
pub fn catalan_index_offset(
    gamma: usize,
    ns: std::ops::RangeInclusive<usize>,
) -> Result<Option<i64>, CountError> {
    let counter = PCounter::new();
    let values: Vec<(usize, BigUint)> = ns
        .map(|n| counter.p(2, gamma, n).map(|p| (n, p)))
        .collect::<Result<_, _>>()?;
    let lowest = values.first().map_or(0, |(n, _)| *n as i64);
    Ok((-lowest..=2).find(|&shift| {
        values
            .iter()
            .all(|(n, p)| *p == catalan((*n as i64 + shift) as usize))
    }))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRow {
    pub n: usize,
    pub p: BigUint,
    /// `P(n) / P(n-1)`; absent for the first row or when `P(n-1)` is zero.
    pub ratio: Option<f64>,
    /// `P(n)^(1/n)`
    pub nth_root: f64,
}

/// Growth diagnostics for `n = 1..=n_max`.
pub fn growth_report(
    delta: usize,
    gamma: usize,
    n_max: usize,
) -> Result<Vec<GrowthRow>, CountError> {
    if n_max < 2 {
        return Err(CountError::InvalidParams("n_max must be at least 2".into()));
    }
    let counter = PCounter::new();
    let mut rows: Vec<GrowthRow> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let p = counter.p(delta, gamma, n)?;
        let pf = p.to_f64().unwrap_or(f64::INFINITY);
        let ratio = rows
            .last()
            .and_then(|prev: &GrowthRow| (!prev.p.is_zero()).then(|| ratio_f64(&p, &prev.p)));
        rows.push(GrowthRow {
            n,
            nth_root: pf.powf(1.0 / n as f64),
            p,
            ratio,
        });
    }
    Ok(rows)
}

fn ratio_f64(num: &BigUint, den: &BigUint) -> f64 {
    match (num.to_f64(), den.to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            // scale both down until they fit
            let shift = num.bits().max(den.bits()).saturating_sub(1000);
            let a = (num >> shift).to_f64().unwrap_or(f64::INFINITY);
            let b = (den >> shift).to_f64().unwrap_or(f64::INFINITY);
            a / b
        }
    }
}
