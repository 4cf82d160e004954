//! Reduction of a closed form onto the two-element basis
//! `{U_{nk}, U_{(n-1)k}}`.
//!
//! The strided subsequence satisfies `U_{(m+1)k} = V_k U_{mk} - q^k U_{(m-1)k}`,
//! so `U_{(m-1)k} = (V_k U_{mk} - U_{(m+1)k}) / q^k`. Applying this upward
//! from the deepest shift rewrites every `U_{(n-s)k}` with `s >= 2` and leaves
//! `s_D(n) = P0(n) U_{nk} + P1(n) U_{(n-1)k}` with plain rational-coefficient
//! polynomials `P0`, `P1`. At `p=1, q=-1, k=1` these are the classical
//! Fibonacci convolution formulas.

use num_rational::BigRational;
use num_traits::Zero;

use crate::sequences::LucasParams;
use crate::util::rat_of;
use crate::{Error, Result};

use super::emit::NumPoly;
use super::ClosedForm;

/// Rewrites `cf` at concrete parameters onto `{U_{nk}, U_{(n-1)k}}`.
/// Requires `q != 0` (the rewrite divides by `q^k`) and non-degenerate
/// parameters (the coefficients divide by `V_k^2 - 4q^k`).
pub fn reduce_to_fibonacci_basis(
    cf: &ClosedForm,
    params: &LucasParams,
) -> Result<(NumPoly, NumPoly)> {
    if params.q() == 0 {
        return Err(Error::ZeroQ);
    }
    if params.is_degenerate() {
        return Err(Error::DegenerateParams);
    }
    let u = rat_of(params.u_k());
    let v = rat_of(params.v_k());
    let q = rat_of(params.q_pow_k());

    // numeric coefficient polynomials on U_{(n-s)k}, s = 0..D-1
    let mut coeffs: Vec<NumPoly> = cf
        .terms()
        .iter()
        .map(|p| p.substitute(&u, &v, &q))
        .collect::<Result<_>>()?;

    // fold the deepest index up until only s = 0, 1 remain
    while coeffs.len() > 2 {
        let deep = coeffs.pop().unwrap();
        if deep.iter().all(|c| c.is_zero()) {
            continue;
        }
        let s = coeffs.len(); // the popped entry held U_{(n-s)k}
        debug_assert!(s >= 2);
        // U_{(n-s)k} = (V_k U_{(n-s+1)k} - U_{(n-s+2)k}) / q^k
        let scaled: NumPoly = deep.iter().map(|c| c / &q).collect();
        add_into(&mut coeffs[s - 1], &scale(&scaled, &v));
        add_into_neg(&mut coeffs[s - 2], &scaled);
    }
    coeffs.resize(2, NumPoly::new());
    let mut it = coeffs.into_iter();
    Ok((trim(it.next().unwrap()), trim(it.next().unwrap())))
}

fn scale(p: &NumPoly, c: &BigRational) -> NumPoly {
    p.iter().map(|x| x * c).collect()
}

fn add_into(dst: &mut NumPoly, src: &NumPoly) {
    if dst.len() < src.len() {
        dst.resize(src.len(), BigRational::zero());
    }
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        *d += s;
    }
}

fn add_into_neg(dst: &mut NumPoly, src: &NumPoly) {
    if dst.len() < src.len() {
        dst.resize(src.len(), BigRational::zero());
    }
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        *d -= s;
    }
}

fn trim(mut p: NumPoly) -> NumPoly {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Renders `P0(n) U_{nk} + P1(n) U_{(n-1)k}` as text; at the Fibonacci
/// parameters the basis reads `F_n`, `F_{n-1}`.
pub fn fib_basis_text(p0: &NumPoly, p1: &NumPoly, fibonacci_names: bool) -> String {
    let (b0, b1) = if fibonacci_names {
        ("F_n", "F_{n-1}")
    } else {
        ("U_{nk}", "U_{(n-1)k}")
    };
    format!(
        "({}) * {} + ({}) * {}",
        super::emit::poly_display(p0),
        b0,
        super::emit::poly_display(p1),
        b1
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::derive_closed_form;
    use crate::util::{big, rat};

    fn fib() -> LucasParams {
        LucasParams::new(1, -1, 1).unwrap()
    }

    fn nums(vals: &[(i64, i64)]) -> NumPoly {
        vals.iter()
            .map(|&(n, d)| BigRational::new(big(n), big(d)))
            .collect()
    }

    #[test]
    fn d2_two_term_form() {
        // s_2(n) = ((n-1) F_n + 2n F_{n-1}) / 5
        let (p0, p1) = reduce_to_fibonacci_basis(&derive_closed_form(2), &fib()).unwrap();
        assert_eq!(p0, nums(&[(-1, 5), (1, 5)]));
        assert_eq!(p1, nums(&[(0, 1), (2, 5)]));
    }

    #[test]
    fn d5_two_term_form() {
        // (1/(4!*5^4)) (5(n-1)(5n^3-5n^2-10n+24) F_n - 20n(5n^2-17) F_{n-1})
        let (p0, p1) = reduce_to_fibonacci_basis(&derive_closed_form(5), &fib()).unwrap();
        let c = rat(5) / rat(24 * 625);
        let expect0: NumPoly = expand(&[(-1, 1)], &[24, -10, -5, 5])
            .iter()
            .map(|x| x * &c)
            .collect();
        assert_eq!(p0, trim(expect0));
        let c = rat(-20) / rat(24 * 625);
        let expect1: NumPoly = expand(&[(0, 1)], &[-17, 0, 5]).iter().map(|x| x * &c).collect();
        assert_eq!(p1, trim(expect1));
    }

    #[test]
    fn d6_two_term_form() {
        // (1/(5!*5^4)) ((n-1)(5n^4-70n^3-65n^2+490n+264) F_n
        //              + 2n(5n^4+5n^2-226) F_{n-1})
        let (p0, p1) = reduce_to_fibonacci_basis(&derive_closed_form(6), &fib()).unwrap();
        let c = rat(1) / rat(120 * 625);
        let expect0: NumPoly = expand(&[(-1, 1)], &[264, 490, -65, -70, 5])
            .iter()
            .map(|x| x * &c)
            .collect();
        assert_eq!(p0, trim(expect0));
        let c = rat(2) / rat(120 * 625);
        let expect1: NumPoly = expand(&[(0, 1)], &[-226, 0, 5, 0, 5])
            .iter()
            .map(|x| x * &c)
            .collect();
        assert_eq!(p1, trim(expect1));
    }

    // (n + a/b 1st slot unused) helper: (linear factors) * poly
    fn expand(linears: &[(i64, i64)], poly: &[i64]) -> NumPoly {
        let mut acc: Vec<BigRational> = poly.iter().map(|&c| rat(c)).collect();
        for &(c0, c1) in linears {
            let lin = vec![rat(c0), rat(c1)];
            let mut out = vec![BigRational::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in lin.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            acc = out;
        }
        acc
    }

    #[test]
    fn basis_reduction_preserves_values() {
        let params = LucasParams::new(3, 2, 2).unwrap();
        let cf = derive_closed_form(4);
        let (p0, p1) = reduce_to_fibonacci_basis(&cf, &params).unwrap();
        let mut table = crate::sequences::SeqTable::new(params.clone());
        for n in 4..=25u64 {
            let direct = crate::engine::evaluate_closed_form(&cf, &params, n).unwrap();
            let reduced = super::super::emit::eval_poly(&p0, n as i64)
                * rat_of(table.strided_u(n))
                + super::super::emit::eval_poly(&p1, n as i64)
                    * rat_of(table.strided_u(n - 1));
            assert_eq!(direct, reduced);
        }
    }

    #[test]
    fn zero_q_rejected() {
        let params = LucasParams::new(3, 0, 1).unwrap();
        assert!(matches!(
            reduce_to_fibonacci_basis(&derive_closed_form(3), &params),
            Err(Error::ZeroQ)
        ));
    }

}
