//! Dense polynomials in the index variable `n`, with coefficients in the
//! rational-function field of `U`, `V`, `Q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use crate::util::{binomial, rat, rat_of};
use crate::Result;

use super::ratfn::RationalFn;

/// Coefficient vector: index `t` holds the coefficient of `n^t`; trailing
/// zeros are trimmed, so `degree` is well-defined and equality structural.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyInN {
    coeffs: Vec<RationalFn>,
}

impl PolyInN {
    pub fn zero() -> Self {
        PolyInN::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<RationalFn>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolyInN { coeffs }
    }

    pub fn constant(c: RationalFn) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `n`.
    pub fn n() -> Self {
        Self::from_coeffs(vec![RationalFn::zero(), RationalFn::one()])
    }

    /// The linear factor `n + c`.
    pub fn n_plus(c: i64) -> Self {
        Self::from_coeffs(vec![RationalFn::int(c), RationalFn::one()])
    }

    /// `prod_{i in factors} (n + i)`.
    pub fn product_of_linear(factors: impl IntoIterator<Item = i64>) -> Self {
        let mut acc = Self::constant(RationalFn::one());
        for c in factors {
            acc = &acc * &Self::n_plus(c);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[RationalFn] {
        &self.coeffs
    }

    pub fn coeff(&self, t: usize) -> RationalFn {
        self.coeffs.get(t).cloned().unwrap_or_else(RationalFn::zero)
    }

    pub fn scale(&self, c: &RationalFn) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `p(n + t)` by binomial re-expansion; exact for any integer shift.
    pub fn shift(&self, t: i64) -> Self {
        if t == 0 || self.is_zero() {
            return self.clone();
        }
        let mut out = vec![RationalFn::zero(); self.coeffs.len()];
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // (n + t)^m = sum_i C(m,i) t^{m-i} n^i
            for i in 0..=m {
                let tpow = rat_of(crate::util::big(t).pow((m - i) as u32));
                let factor = RationalFn::constant(rat_of(binomial(m as u64, i as u64)) * tpow);
                out[i] = &out[i] + &(c * &factor);
            }
        }
        Self::from_coeffs(out)
    }

    /// Substitute numeric `(U, V, Q)`, leaving a polynomial in `n` over the
    /// rationals.
    pub fn substitute(
        &self,
        u: &BigRational,
        v: &BigRational,
        q: &BigRational,
    ) -> Result<Vec<BigRational>> {
        self.coeffs.iter().map(|c| c.eval(u, v, q)).collect()
    }

    /// Full numeric evaluation at integer `n` after substitution.
    pub fn eval_at(
        &self,
        u: &BigRational,
        v: &BigRational,
        q: &BigRational,
        n: i64,
    ) -> Result<BigRational> {
        let coeffs = self.substitute(u, v, q)?;
        Ok(eval_rational_poly(&coeffs, &rat(n)))
    }
}

/// Horner evaluation of a dense rational-coefficient polynomial.
pub fn eval_rational_poly(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

impl Add for &PolyInN {
    type Output = PolyInN;
    fn add(self, rhs: &PolyInN) -> PolyInN {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyInN::from_coeffs(
            (0..n)
                .map(|i| &self.coeff(i) + &rhs.coeff(i))
                .collect(),
        )
    }
}

impl Sub for &PolyInN {
    type Output = PolyInN;
    fn sub(self, rhs: &PolyInN) -> PolyInN {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyInN::from_coeffs(
            (0..n)
                .map(|i| &self.coeff(i) - &rhs.coeff(i))
                .collect(),
        )
    }
}

impl Mul for &PolyInN {
    type Output = PolyInN;
    fn mul(self, rhs: &PolyInN) -> PolyInN {
        if self.is_zero() || rhs.is_zero() {
            return PolyInN::zero();
        }
        let mut out = vec![RationalFn::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        PolyInN::from_coeffs(out)
    }
}

impl Neg for &PolyInN {
    type Output = PolyInN;
    fn neg(self) -> PolyInN {
        PolyInN::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for PolyInN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match t {
                0 => write!(f, "({})", c)?,
                1 => write!(f, "({})*n", c)?,
                _ => write!(f, "({})*n^{}", c, t)?,
            }
        }
        Ok(())
    }
}
