//! Truncated formal power series over exact rationals.
//!
//! A [`TruncatedSeries`] holds coefficients of `x^0 .. x^{N-1}` and nothing
//! beyond; every operation tracks the resulting truncation order so that a
//! derivative (which loses one coefficient) or a product of series with
//! different orders can never silently fake agreement past the point where
//! both sides are known.
//!
//! `fk_series` builds `F_k(x;p,q) = U_k / (1 - V_k x + q^k x^2)`, whose
//! coefficient of `x^{m}` is `U_{(m+1)k}`. `check_generating_function` and
//! `check_proposition` verify the differential identities satisfied by
//! `F_k` as exact coefficient-by-coefficient equalities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::sequences::LucasParams;
use crate::triangles::{alternating_power_sum_a, alternating_power_sum_b};
use crate::util::{big, factorial, rat, rat_of};
use crate::{Error, Result};

/// Dense power-series prefix: index `m` holds the coefficient of `x^m`;
/// coefficients at or beyond `order()` are unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        TruncatedSeries { coeffs }
    }

    /// A polynomial regarded as a series valid to the given order.
    pub fn from_poly(poly: &[BigRational], order: usize) -> Self {
        let mut coeffs: Vec<BigRational> = poly.iter().take(order).cloned().collect();
        coeffs.resize(order, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::from_poly(&[c], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, m: usize) -> Result<&BigRational> {
        self.coeffs.get(m).ok_or(Error::OrderUnderflow {
            requested: m + 1,
            valid: self.coeffs.len(),
        })
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.coeffs.len() {
            return Err(Error::OrderUnderflow {
                requested: order,
                valid: self.coeffs.len(),
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..order].to_vec(),
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..n).map(|m| &self.coeffs[m] + &other.coeffs[m]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..n).map(|m| &self.coeffs[m] - &other.coeffs[m]).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    /// Exact convolution, valid to the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Integer power by repeated squaring; `pow(0)` is the constant 1 at the
    /// same order.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = TruncatedSeries::constant(BigRational::one(), self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Termwise derivative; order drops by one.
    pub fn derivative(&self) -> Result<Self> {
        if self.coeffs.is_empty() {
            return Err(Error::OrderUnderflow { requested: 1, valid: 0 });
        }
        Ok(TruncatedSeries {
            coeffs: (1..self.coeffs.len())
                .map(|m| rat(m as i64) * &self.coeffs[m])
                .collect(),
        })
    }

    /// Equality on the common valid prefix.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..n] == other.coeffs[..n]
    }
}

/// `F_k(x;p,q)` to `N` coefficients: `c_m = U_{(m+1)k}`, generated by
/// `c_0 = U_k`, `c_1 = V_k U_k`, `c_m = V_k c_{m-1} - q^k c_{m-2}`.
pub fn fk_series(params: &LucasParams, n_terms: usize) -> TruncatedSeries {
    assert!(n_terms >= 1);
    let uk = params.u_k();
    let vk = params.v_k();
    let qk = params.q_pow_k();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(n_terms);
    coeffs.push(uk.clone());
    if n_terms > 1 {
        coeffs.push(&vk * &uk);
    }
    for m in 2..n_terms {
        let next = &vk * &coeffs[m - 1] - &qk * &coeffs[m - 2];
        coeffs.push(next);
    }
    TruncatedSeries::from_coeffs(coeffs.into_iter().map(rat_of).collect())
}

fn rat_pow(base: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// The quadratic `1 - V_k x + q^k x^2` as a series of the given order.
fn denominator_poly(params: &LucasParams, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_poly(
        &[rat(1), -rat_of(params.v_k()), rat_of(params.q_pow_k())],
        order,
    )
}

/// The linear factor `V_k - 2 q^k x` as a series of the given order.
fn b_poly(params: &LucasParams, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_poly(
        &[rat_of(params.v_k()), rat(-2) * rat_of(params.q_pow_k())],
        order,
    )
}

/// Checks `(1 - V_k x + q^k x^2) F' = (V_k - 2 q^k x) F` to the common order.
pub fn check_generating_function(params: &LucasParams, n_terms: usize) -> bool {
    assert!(n_terms >= 3);
    let f = fk_series(params, n_terms);
    let fp = f.derivative().expect("n_terms >= 3");
    let lhs = denominator_poly(params, fp.order()).mul(&fp);
    let rhs = b_poly(params, f.order()).mul(&f);
    lhs.agrees_with(&rhs)
}

/// Checks the order-`d` differential identity for `F_k`:
///
/// ```text
/// sum_{j=0..d} (4q^k)^{d-j} [sum_i (-1)^i C(j,i)(j+1-i)^d] A^j F^{j+1}
///   = sum_{j=1..d} ((-1)^{d-1} (2q^k)^{d-j} / (j-1)!) [sum_i (-1)^i C(j-1,i)(i+1)^{d-1}]
///       (V_k - 2q^k x)^j F^{(j)}
/// ```
///
/// with `A = (V_k^2 - 4q^k)/U_k`, compared coefficientwise to order
/// `n_terms - d - 1`. Fails with [`Error::ZeroUk`] when `U_k = 0`.
pub fn check_proposition(params: &LucasParams, d: u32, n_terms: usize) -> Result<bool> {
    assert!(d >= 1);
    assert!(n_terms > d as usize + 2);
    let uk = params.u_k();
    if uk.is_zero() {
        return Err(Error::ZeroUk);
    }
    let vk = rat_of(params.v_k());
    let qk = rat_of(params.q_pow_k());
    let a_const = (&vk * &vk - rat(4) * &qk) / rat_of(uk);

    let f = fk_series(params, n_terms);
    let compare_order = n_terms - d as usize - 1;

    let mut lhs = TruncatedSeries::constant(BigRational::zero(), n_terms);
    for j in 0..=d as u64 {
        let scalar = rat_of(big(4).pow((d as u64 - j) as u32))
            * rat_pow(&qk, (d as u64 - j) as u32)
            * rat_of(alternating_power_sum_a(j, d as u64))
            * rat_pow(&a_const, j as u32);
        lhs = lhs.add(&f.pow(j as u32 + 1).scale(&scalar));
    }

    let sign = if (d - 1) % 2 == 0 { rat(1) } else { rat(-1) };
    let mut rhs = TruncatedSeries::constant(BigRational::zero(), n_terms);
    let mut f_deriv = f.clone();
    for j in 1..=d as u64 {
        f_deriv = f_deriv.derivative()?;
        let scalar = sign.clone()
            * rat_of(big(2).pow((d as u64 - j) as u32))
            * rat_pow(&qk, (d as u64 - j) as u32)
            * rat_of(alternating_power_sum_b(j, d as u64))
            / rat_of(factorial(j - 1));
        let term = b_poly(params, f_deriv.order()).pow(j as u32).mul(&f_deriv);
        rhs = rhs.add(&term.scale(&scalar));
    }

    Ok(lhs.truncate(compare_order)?.agrees_with(&rhs.truncate(compare_order)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::strided_u;

    fn params(p: i64, q: i64, k: u32) -> LucasParams {
        LucasParams::new(p, q, k).unwrap()
    }

    fn ints(vals: &[i64]) -> Vec<BigRational> {
        vals.iter().map(|&v| rat(v)).collect()
    }

    #[test]
    fn fk_examples() {
        assert_eq!(fk_series(&params(1, -1, 1), 5).coeffs(), &ints(&[1, 1, 2, 3, 5])[..]);
        assert_eq!(fk_series(&params(3, 2, 2), 1).coeffs()[0], rat_of(params(3, 2, 2).u_k()));
        assert_eq!(fk_series(&params(1, -1, 2), 4).coeffs(), &ints(&[1, 3, 8, 21])[..]);
    }

    #[test]
    fn fk_matches_strided() {
        for p in [params(1, -1, 1), params(2, -1, 1), params(3, 2, 2)] {
            let f = fk_series(&p, 20);
            for m in 0..20 {
                assert_eq!(*f.coeff(m).unwrap(), rat_of(strided_u(&p, m as u64 + 1)));
            }
        }
    }

    #[test]
    fn mul_and_derivative() {
        let a = TruncatedSeries::from_poly(&ints(&[1, 1]), 3);
        let b = TruncatedSeries::from_poly(&ints(&[1, -1]), 3);
        assert_eq!(a.mul(&b).coeffs(), &ints(&[1, 0, -1])[..]);

        let s = TruncatedSeries::from_coeffs(ints(&[1, 1, 2, 3, 5]));
        let d = s.derivative().unwrap();
        assert_eq!(d.order(), 4);
        assert_eq!(d.coeffs(), &ints(&[1, 4, 9, 20])[..]);
    }

    #[test]
    fn square_coefficient_is_convolution() {
        // coefficient of x^3 in F^2 is s_2(5;1,-1;1)
        let f = fk_series(&params(1, -1, 1), 6);
        assert_eq!(*f.pow(2).coeff(3).unwrap(), rat(10));
    }

    #[test]
    fn denominator_clears_fk() {
        for p in [params(1, -1, 1), params(3, 2, 2)] {
            let f = fk_series(&p, 20);
            let prod = denominator_poly(&p, 20).mul(&f);
            let expect = TruncatedSeries::constant(rat_of(p.u_k()), 18);
            assert!(prod.truncate(18).unwrap().agrees_with(&expect));
        }
    }

    #[test]
    fn order_underflow_is_reported() {
        let s = TruncatedSeries::from_coeffs(ints(&[1, 2]));
        assert!(matches!(s.coeff(2), Err(Error::OrderUnderflow { .. })));
        assert!(matches!(s.truncate(5), Err(Error::OrderUnderflow { .. })));
    }

    #[test]
    fn generating_function_holds() {
        assert!(check_generating_function(&params(1, -1, 1), 20));
        assert!(check_generating_function(&params(2, -1, 1), 20));
        assert!(check_generating_function(&params(3, 2, 2), 20));
    }

    #[test]
    fn proposition_holds_on_matrix() {
        let matrix = [
            params(1, -1, 1),
            params(2, -1, 1),
            params(1, -1, 2),
            params(3, 2, 1),
            params(3, 2, 2),
        ];
        for p in &matrix {
            for d in 1..=6 {
                assert!(
                    check_proposition(p, d, 30).unwrap(),
                    "proposition failed at ({},{},{}), d={}",
                    p.p(),
                    p.q(),
                    p.k(),
                    d
                );
            }
        }
    }

    #[test]
    fn proposition_rejects_zero_uk() {
        // U_2(0,5) = 0
        assert!(matches!(
            check_proposition(&params(0, 5, 2), 1, 10),
            Err(Error::ZeroUk)
        ));
    }
}
