//! Exact combinatorial numbers: binomials, Stirling numbers of the second
//! kind, non-singleton partition counts and Raney numbers.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::CountError;

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Stirling number of the second kind: partitions of an `n`-set into `k`
/// non-empty blocks.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    if n == 0 {
        return BigUint::one();
    }
    if k == 0 {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            let grown = &row[j] * j;
            row[j] = grown + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    std::mem::take(&mut row[k])
}

fn stirling2_signed(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 {
        BigUint::zero()
    } else {
        stirling2(n as usize, k as usize)
    }
}

/// Number of ways to place `n` elements into `m` blocks of size at least 2,
/// from the alternating sum
/// `R(n,m) = sum_{s=n-m}^{n} C(n,s) (-1)^(n-s) S(s, s+m-n)`.
/// Terms with out-of-range Stirling arguments contribute zero.
pub fn count_nonsingleton(n: usize, m: usize) -> BigUint {
    let (ni, mi) = (n as i64, m as i64);
    let mut total = BigInt::zero();
    for s in (ni - mi).max(0)..=ni {
        let term = BigInt::from_biguint(
            Sign::Plus,
            binomial(n, s as usize) * stirling2_signed(s, s + mi - ni),
        );
        if (ni - s) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
        .to_biguint()
        .expect("non-singleton partition count is non-negative")
}

/// Parameters of the Raney number `C_{p,r}(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RaneyParams {
    pub p: usize,
    pub r: usize,
    pub k: usize,
}

impl RaneyParams {
    pub fn new(p: usize, r: usize, k: usize) -> Result<Self, CountError> {
        if p < 1 || r < 1 {
            return Err(CountError::InvalidParams(format!(
                "Raney numbers need p >= 1 and r >= 1, got p={p}, r={r}"
            )));
        }
        Ok(RaneyParams { p, r, k })
    }
}

/// `C_{p,r}(k) = r / (kp + r) * C(kp + r, k)`. The division must be exact.
pub fn raney(params: RaneyParams) -> Result<BigUint, CountError> {
    let RaneyParams { p, r, k } = params;
    if p < 1 || r < 1 {
        return Err(CountError::InvalidParams(format!(
            "Raney numbers need p >= 1 and r >= 1, got p={p}, r={r}"
        )));
    }
    let top = k * p + r;
    let numerator = binomial(top, k) * r;
    let (q, rem) = numerator.div_rem(&BigUint::from(top));
    if !rem.is_zero() {
        return Err(CountError::NonIntegerResult { p, r, k });
    }
    Ok(q)
}

/// The `k`-th Catalan number, as the Raney number `C_{2,1}(k)`.
pub fn catalan(k: usize) -> BigUint {
    raney(RaneyParams { p: 2, r: 1, k }).expect("Catalan numbers are integers")
}
