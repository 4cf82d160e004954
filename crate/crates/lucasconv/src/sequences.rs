//! Generalized Fibonacci numbers `U_n(p,q)` and Lucas numbers `V_n(p,q)`.
//!
//! Both satisfy the recurrence `x_n = p*x_{n-1} - q*x_{n-2}` with starting
//! values `U_0 = 0, U_1 = 1` and `V_0 = 2, V_1 = p`. The characteristic roots
//! are never materialized; everything stays in exact integers, so the
//! degenerate case `p^2 = 4q` is representable here (it is rejected later by
//! the derivation engine, which divides by `V_k^2 - 4q^k`).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::util::big;
use crate::{Error, Result};

/// The integer parameter triple `(p, q, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LucasParams {
    p: i64,
    q: i64,
    k: u32,
}

impl LucasParams {
    pub fn new(p: i64, q: i64, k: u32) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidStride);
        }
        Ok(LucasParams { p, q, k })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `U_k(p,q)`.
    pub fn u_k(&self) -> BigInt {
        lucas_u(self, self.k as u64)
    }

    /// `V_k(p,q)`.
    pub fn v_k(&self) -> BigInt {
        lucas_v(self, self.k as u64)
    }

    /// `q^k`.
    pub fn q_pow_k(&self) -> BigInt {
        big(self.q).pow(self.k)
    }

    /// `p^2 - 4q`, the discriminant of `x^2 - px + q`.
    pub fn discriminant(&self) -> BigInt {
        big(self.p) * big(self.p) - big(4) * big(self.q)
    }

    /// True when the derivation path is blocked: `p^2 = 4q` or `U_k = 0`.
    ///
    /// By the identity `V_k^2 - 4q^k = (p^2-4q) U_k^2` either condition makes
    /// the quantity `V_k^2 - 4q^k` vanish.
    pub fn is_degenerate(&self) -> bool {
        self.discriminant().is_zero() || self.u_k().is_zero()
    }
}

/// `U_n(p,q)` via the recurrence `U_0 = 0, U_1 = 1, U_n = p U_{n-1} - q U_{n-2}`.
///
/// For `p = 1, q = -1` this is the Fibonacci sequence.
pub fn lucas_u(params: &LucasParams, n: u64) -> BigInt {
    recurrence(params, n, BigInt::zero(), big(1))
}

/// `V_n(p,q)` via `V_0 = 2, V_1 = p, V_n = p V_{n-1} - q V_{n-2}`.
pub fn lucas_v(params: &LucasParams, n: u64) -> BigInt {
    recurrence(params, n, big(2), big(params.p))
}

/// `U_{n*k}(p,q)`, the k-strided subsequence appearing in every convolution sum.
pub fn strided_u(params: &LucasParams, n: u64) -> BigInt {
    lucas_u(params, n * params.k as u64)
}

fn recurrence(params: &LucasParams, n: u64, x0: BigInt, x1: BigInt) -> BigInt {
    if n == 0 {
        return x0;
    }
    let (p, q) = (big(params.p), big(params.q));
    let (mut prev, mut cur) = (x0, x1);
    for _ in 1..n {
        let next = &p * &cur - &q * &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Memoized `U_n` values for one parameter set. Verification sweeps query the
/// same indices repeatedly; the table grows on demand and entries are written
/// once.
#[derive(Clone, Debug)]
pub struct SeqTable {
    params: LucasParams,
    u: Vec<BigInt>,
}

impl SeqTable {
    pub fn new(params: LucasParams) -> Self {
        SeqTable {
            params,
            u: vec![BigInt::zero(), big(1)],
        }
    }

    pub fn params(&self) -> &LucasParams {
        &self.params
    }

    pub fn u(&mut self, n: u64) -> BigInt {
        let n = n as usize;
        let (p, q) = (big(self.params.p), big(self.params.q));
        while self.u.len() <= n {
            let m = self.u.len();
            let next = &p * &self.u[m - 1] - &q * &self.u[m - 2];
            self.u.push(next);
        }
        self.u[n].clone()
    }

    pub fn strided_u(&mut self, n: u64) -> BigInt {
        self.u(n * self.params.k as u64)
    }
}
