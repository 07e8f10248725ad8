//! Exact Krawtchouk values `P_k(i; n) = Σ_j (-1)^j C(i, j) C(n - i, k - j)`.
//!
//! Everything here is integer arithmetic. Binomials use `C(a, b) = 0` for
//! `b < 0` or `b > a`; only nonnegative upper arguments occur.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `C(a, b)` with the zero convention outside `0 ≤ b ≤ a`.
pub fn binomial(a: u64, b: i64) -> BigUint {
    if b < 0 || b as u64 > a {
        return BigUint::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigUint::one();
    for t in 0..b {
        acc *= a - t;
        acc /= t + 1;
    }
    acc
}

fn check_range(k: u64, i: u64, n: u64) -> Result<()> {
    if k > n || i > n {
        return Err(Error::InvalidParams(format!(
            "Krawtchouk arguments out of range: k={k}, i={i}, n={n}"
        )));
    }
    Ok(())
}

fn check_even(n: u64) -> Result<()> {
    if !n.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("length {n} must be even")));
    }
    Ok(())
}

/// `P_k(i; n)` by the defining alternating sum.
pub fn kraw_direct(k: u64, i: u64, n: u64) -> Result<BigInt> {
    check_range(k, i, n)?;
    // C(i, j) and C(n - i, k - j) are updated incrementally as j grows.
    let mut left = BigInt::one();
    let mut right = BigInt::from(binomial(n - i, k as i64));
    let mut sum = BigInt::zero();
    for j in 0..=k.min(i) {
        if j > 0 {
            left = left * (i - j + 1) / j;
            // C(n-i, k-j) = C(n-i, k-j+1) * (k-j+1) / (n-i-k+j)
            let upper = n - i;
            if k - j + 1 > upper {
                right = BigInt::from(binomial(upper, (k - j) as i64));
            } else {
                right = right * (k - j + 1) / (upper - (k - j));
            }
        }
        let term = &left * &right;
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

fn exact_div(num: BigInt, den: u64, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(Error::Inexact(format!(
            "{what}: remainder {r} dividing by {den}"
        )));
    }
    Ok(q)
}

/// `P_j(i; n)` for `i = 0..=n`, by the three-term recurrence in `i`
/// `(n - i) P(i + 1) = (n - 2j) P(i) - i P(i - 1)`.
///
/// Seeds are `P(0) = C(n, j)` and `P(1)` from the direct sum. The endpoint
/// `i = n`, where the recurrence would divide by zero, is computed directly.
pub fn kraw_column(j: u64, n: u64) -> Result<Vec<BigInt>> {
    check_range(j, 0, n)?;
    let mut col = Vec::with_capacity(n as usize + 1);
    col.push(BigInt::from(binomial(n, j as i64)));
    if n == 0 {
        return Ok(col);
    }
    col.push(kraw_direct(j, 1, n)?);
    let slope = n as i64 - 2 * j as i64;
    for i in 1..n.saturating_sub(1) {
        let num = &col[i as usize] * slope - &col[i as usize - 1] * i;
        col.push(exact_div(num, n - i, "Krawtchouk recurrence")?);
    }
    if n >= 2 {
        col.push(kraw_direct(j, n, n)?);
    }
    Ok(col)
}

/// `P_j(i; n)` for `j = 0..=n` at a fixed point `i`: the coefficients of
/// `(1 + X)^(n - i) (1 - X)^i`, via `(j + 1) P_{j+1} = (n - 2i) P_j - (n - j + 1) P_{j-1}`.
pub fn kraw_row(i: u64, n: u64) -> Result<Vec<BigInt>> {
    check_range(0, i, n)?;
    let mut row = Vec::with_capacity(n as usize + 1);
    row.push(BigInt::one());
    if n == 0 {
        return Ok(row);
    }
    let slope = n as i64 - 2 * i as i64;
    row.push(BigInt::from(slope));
    for j in 1..n {
        let num = &row[j as usize] * slope - &row[j as usize - 1] * (n - j + 1);
        row.push(exact_div(num, j + 1, "Krawtchouk row recurrence")?);
    }
    Ok(row)
}

/// Rows are cached for lengths up to this bound.
const ROW_CACHE_MAX_N: u64 = 1 << 12;

type RowCache = RwLock<HashMap<(u64, u64), Arc<Vec<BigInt>>>>;

fn row_cache() -> &'static RowCache {
    static CACHE: OnceLock<RowCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// [`kraw_row`] through a process-wide read-mostly cache.
pub fn cached_row(i: u64, n: u64) -> Result<Arc<Vec<BigInt>>> {
    if n > ROW_CACHE_MAX_N {
        return Ok(Arc::new(kraw_row(i, n)?));
    }
    if let Some(row) = row_cache().read().expect("cache poisoned").get(&(i, n)) {
        return Ok(Arc::clone(row));
    }
    let row = Arc::new(kraw_row(i, n)?);
    row_cache()
        .write()
        .expect("cache poisoned")
        .insert((i, n), Arc::clone(&row));
    Ok(row)
}

/// The central value `K(i, n) = P_{n/2}(i; n)` for even `n`.
pub fn central_k(i: u64, n: u64) -> Result<BigInt> {
    check_even(n)?;
    kraw_direct(n / 2, i, n)
}

/// `K(0..=n, n)` by the degenerate recurrence `(n - i) K(i + 1) = -i K(i - 1)`,
/// with `K(n, n)` computed directly.
pub fn central_column(n: u64) -> Result<Vec<BigInt>> {
    check_even(n)?;
    let mut col = Vec::with_capacity(n as usize + 1);
    col.push(BigInt::from(binomial(n, (n / 2) as i64)));
    if n == 0 {
        return Ok(col);
    }
    col.push(BigInt::zero());
    for i in 1..n - 1 {
        let num = -(&col[i as usize - 1] * i);
        col.push(exact_div(num, n - i, "central recurrence")?);
    }
    col.push(central_k(n, n)?);
    Ok(col)
}

/// Predicted sign of `K(i, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SignClass {
    Zero,
    Negative,
    Positive,
}

impl SignClass {
    pub fn of(value: &BigInt) -> Self {
        if value.is_zero() {
            SignClass::Zero
        } else if value.is_negative() {
            SignClass::Negative
        } else {
            SignClass::Positive
        }
    }
}

/// Zero for odd `i`, negative for `i ≡ 2 (mod 4)`, positive for `i ≡ 0 (mod 4)`.
pub fn sign_class(i: u64, n: u64) -> Result<SignClass> {
    check_even(n)?;
    check_range(0, i, n)?;
    Ok(match i % 4 {
        0 => SignClass::Positive,
        2 => SignClass::Negative,
        _ => SignClass::Zero,
    })
}
