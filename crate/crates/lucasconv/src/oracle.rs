//! Ground truth for the convolution sums `s_d(n;p,q;k)` by two independent
//! brute-force routes.
//!
//! `s_d(n) = sum over j_1+...+j_d = n of prod_i U_{k*j_i}`. The defining sum
//! ranges over nonnegative parts, but any part equal to zero kills its term
//! since `U_0 = 0`, so enumeration over positive compositions is exact
//! (unit-tested below at d = 2).
//!
//! `s_enum` walks the compositions directly and is the independent second
//! opinion at small sizes; `s_series` reads `s_d(n)` off as the coefficient
//! of `x^{n-d}` in `F_k(x)^d` via repeated integer convolution and is the
//! default oracle for sweeps.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::sequences::{LucasParams, SeqTable};
use crate::util::binomial;
use crate::{Error, Result};

/// Default cap on the number of enumerated compositions.
pub const DEFAULT_ENUM_BUDGET: u128 = 20_000_000;

/// `s_d(n;p,q;k)` by direct enumeration of positive compositions of `n`
/// into `d` parts (`C(n-1,d-1)` terms).
pub fn s_enum(params: &LucasParams, d: u32, n: u64, budget: u128) -> Result<BigInt> {
    assert!(d >= 1);
    if n < d as u64 {
        return Ok(BigInt::zero());
    }
    let count = binomial(n - 1, d as u64 - 1);
    if count > BigInt::from(budget) {
        let count = count.try_into().unwrap_or(u128::MAX);
        return Err(Error::BudgetExceeded { count, budget });
    }
    let mut table = SeqTable::new(params.clone());
    let mut total = BigInt::zero();
    let mut parts = vec![0u64; d as usize];
    compose(&mut table, &mut parts, 0, n, BigInt::one(), &mut total);
    Ok(total)
}

fn compose(
    table: &mut SeqTable,
    parts: &mut [u64],
    idx: usize,
    remaining: u64,
    product: BigInt,
    total: &mut BigInt,
) {
    let d = parts.len();
    if idx == d - 1 {
        parts[idx] = remaining;
        *total += product * table.strided_u(remaining);
        return;
    }
    // leave at least one unit for each later part
    let spare = remaining - (d - idx - 1) as u64;
    for j in 1..=spare {
        parts[idx] = j;
        let p = &product * table.strided_u(j);
        compose(table, parts, idx + 1, remaining - j, p, total);
    }
}

/// `s_d(n)` for all `n <= n_max`, via `d-1` self-convolutions of the integer
/// coefficient vector of `F_k(x)`.
pub fn s_series(params: &LucasParams, d: u32, n_max: u64) -> Vec<BigInt> {
    assert!(d >= 1);
    let len = (n_max as usize + 1).saturating_sub(d as usize);
    let mut out = vec![BigInt::zero(); n_max as usize + 1];
    if len == 0 {
        return out;
    }
    let mut table = SeqTable::new(params.clone());
    let f: Vec<BigInt> = (0..len).map(|m| table.strided_u(m as u64 + 1)).collect();
    let mut acc = f.clone();
    for _ in 1..d {
        acc = convolve(&acc, &f);
    }
    // s_d(n) = coefficient of x^{n-d} in F^d
    for (m, v) in acc.into_iter().enumerate() {
        out[m + d as usize] = v;
    }
    out
}

/// Single value `s_d(n)` through the series route.
pub fn s_series_at(params: &LucasParams, d: u32, n: u64) -> BigInt {
    s_series(params, d, n).pop().unwrap_or_default()
}

fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().min(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().take(n).enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().take(n - i).enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::strided_u;
    use crate::util::big;

    fn params(p: i64, q: i64, k: u32) -> LucasParams {
        LucasParams::new(p, q, k).unwrap()
    }

    fn enum_ok(params: &LucasParams, d: u32, n: u64) -> BigInt {
        s_enum(params, d, n, DEFAULT_ENUM_BUDGET).unwrap()
    }

    #[test]
    fn enum_examples() {
        assert_eq!(enum_ok(&params(1, -1, 1), 2, 3), big(2));
        assert_eq!(enum_ok(&params(3, 2, 2), 3, 2), big(0));
        assert_eq!(enum_ok(&params(1, -1, 1), 4, 5), big(4));
    }

    #[test]
    fn series_examples() {
        assert_eq!(s_series_at(&params(1, -1, 1), 2, 2), big(1));
        assert_eq!(s_series_at(&params(1, -1, 1), 5, 5), big(1));
        assert_eq!(s_series_at(&params(2, -1, 1), 2, 4), big(14));
    }

    // With U_0 = 0 every composition containing a zero part contributes
    // nothing, so summing over nonnegative parts equals summing over positive
    // ones. Spelled out at d = 2.
    #[test]
    fn zero_parts_vanish_d2() {
        let p = params(2, -1, 1);
        for n in 0..10u64 {
            let mut nonneg = BigInt::zero();
            for j1 in 0..=n {
                nonneg += strided_u(&p, j1) * strided_u(&p, n - j1);
            }
            assert_eq!(nonneg, enum_ok(&p, 2, n));
        }
    }

    #[test]
    fn enum_agrees_with_series() {
        for p in [params(1, -1, 1), params(2, -1, 1), params(3, 2, 2)] {
            for d in 1..=4u32 {
                let sweep = s_series(&p, d, 12);
                for n in 0..=12u64 {
                    assert_eq!(sweep[n as usize], enum_ok(&p, d, n), "d={d} n={n}");
                }
            }
        }
    }

    #[test]
    fn small_n_structure() {
        for p in [params(1, -1, 2), params(3, 2, 1)] {
            let uk = p.u_k();
            for d in 1..=5u32 {
                // s_d(n) = 0 below the diagonal, U_k^d on it
                for n in 1..d as u64 {
                    assert_eq!(s_series_at(&p, d, n), BigInt::zero());
                }
                assert_eq!(s_series_at(&p, d, d as u64), uk.pow(d));
                // s_d(d+1) = d * U_k^{d-1} * U_{2k}
                assert_eq!(
                    s_series_at(&p, d, d as u64 + 1),
                    big(d as i64) * uk.pow(d - 1) * strided_u(&p, 2)
                );
            }
            // s_1(n) = U_{nk}
            for n in 0..=15u64 {
                assert_eq!(s_series_at(&p, 1, n), strided_u(&p, n));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            s_enum(&params(1, -1, 1), 10, 60, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
