//! Executable derivation of closed forms for the convolution sums.
//!
//! For each `d >= 1` there is an exact linear relation tying together
//! `s_1, ..., s_{d+1}`:
//!
//! ```text
//! sum_{j=0..d} (4Q)^{d-j} T_a(j,d) A^j s_{j+1}(n+j-d)
//!   = sum_{j=1..d} beta_j sum_{s=0..j} C(j,s) v_{d,j,s}(n) U_{(n+j-d-s)k}
//! ```
//!
//! with `A = (V^2-4Q)/U`, `T_a(j,d) = sum_i (-1)^i C(j,i)(j+1-i)^d`,
//! `beta_j = (-1)^{d-1} (2Q)^{d-j} T_b(j,d) / (j-1)!` and
//! `v_{d,j,s}(n) = (-2Q)^s V^{j-s} prod_{i=1..j}(n+j-d-s-i)`.
//!
//! The coefficient of `s_{d+1}(n)` is `d! A^d`, so the relation can be solved
//! for the top order: substituting the already-derived closed forms for
//! `s_1..s_d` and dividing by `d! A^d` yields the closed form for `s_{d+1}`.
//! Iterating from the base case `s_1(n) = U_{nk}` gives a finite algorithm
//! for every order.

mod emit;
mod fib;

pub use emit::{
    emit, emit_json, emit_latex, emit_text, eval_poly, parse_json, poly_display, term_views,
    EmitFormat, NumPoly, TermView,
};
pub use fib::{fib_basis_text, reduce_to_fibonacci_basis};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::oracle::s_series;
use crate::sequences::{LucasParams, SeqTable};
use crate::symbolic::{MultiPoly, PolyInN, RationalFn, Var};
use crate::triangles::{
    a_closed, a_rec, alternating_power_sum_a, alternating_power_sum_b, b_closed, b_rec,
};
use crate::util::{big, factorial, rat_of};
use crate::{Error, Result};

/// One left-hand term of the relation: `coeff * s_{j+1}(n + shift)`.
#[derive(Clone, Debug)]
pub struct LhsTerm {
    pub coeff: RationalFn,
    pub shift: i64,
}

/// The order-`d` relation among `s_1 .. s_{d+1}`.
///
/// `lhs[j]` pairs with `s_{j+1}(n + lhs[j].shift)`; `rhs[t]` is the collected
/// polynomial coefficient of `U_{(n-t)k}`, `t = 0..d`.
#[derive(Clone, Debug)]
pub struct TheoremRelation {
    pub d: u32,
    pub lhs: Vec<LhsTerm>,
    pub rhs: Vec<PolyInN>,
}

/// A derived identity `s_D(n) = sum_{s=0..D-1} terms[s](n) * U_{(n-s)k}`,
/// valid for `n >= D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    order: u32,
    terms: Vec<PolyInN>,
}

impl ClosedForm {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &[PolyInN] {
        &self.terms
    }

    pub(crate) fn from_parts(order: u32, terms: Vec<PolyInN>) -> Self {
        assert_eq!(terms.len(), order as usize);
        ClosedForm { order, terms }
    }
}

fn sym(v: Var) -> MultiPoly {
    MultiPoly::var(v)
}

/// `(V^2 - 4Q) / U`.
fn a_ratfn() -> RationalFn {
    let disc = &sym(Var::V).pow(2) - &sym(Var::Q).scale(&crate::util::rat(4));
    RationalFn::new(disc, sym(Var::U)).expect("U is not the zero polynomial")
}

/// Builds the order-`d` relation with the exact symbolic coefficients. The
/// inner alternating sums are computed directly and cross-asserted against
/// both routes through the coefficient triangles.
pub fn build_relation(d: u32) -> TheoremRelation {
    assert!(d >= 1);
    let du = d as u64;
    let a = a_ratfn();
    let q = RationalFn::from_poly(sym(Var::Q));

    let mut lhs = Vec::with_capacity(d as usize + 1);
    for j in 0..=du {
        let ta = alternating_power_sum_a(j, du);
        // T_a(j,d) * 4^{d-j} = a(j,d)
        debug_assert_eq!(&ta * big(4).pow((du - j) as u32), a_rec(j, du));
        debug_assert_eq!(&ta * big(4).pow((du - j) as u32), a_closed(j, du));
        let scalar = RationalFn::constant(rat_of(&ta * big(4).pow((du - j) as u32)));
        let coeff = &(&scalar * &q.pow((du - j) as u32)) * &a.pow(j as u32);
        lhs.push(LhsTerm {
            coeff,
            shift: j as i64 - d as i64,
        });
    }
    // the top coefficient is d! A^d
    debug_assert_eq!(
        lhs[d as usize].coeff,
        &RationalFn::constant(rat_of(factorial(du))) * &a.pow(d)
    );

    let v = RationalFn::from_poly(sym(Var::V));
    let sign = if (du - 1) % 2 == 0 { 1 } else { -1 };
    let mut rhs = vec![PolyInN::zero(); d as usize + 1];
    for j in 1..=du {
        let tb = alternating_power_sum_b(j, du);
        // (-1)^{d-1} (j-1)! b(j,d) = 2^{d-j} T_b(j,d)
        let check = big(sign) * factorial(j - 1) * b_rec(j, du);
        debug_assert_eq!(&tb * big(2).pow((du - j) as u32), check);
        debug_assert_eq!(big(sign) * factorial(j - 1) * b_closed(j, du), &tb * big(2).pow((du - j) as u32));
        let beta = &RationalFn::constant(
            BigRational::new(big(sign) * big(2).pow((du - j) as u32) * &tb, factorial(j - 1)),
        ) * &q.pow((du - j) as u32);
        for s in 0..=j {
            // U index (n+j-d-s)k collected as U_{(n-t)k}
            let t = (du - j + s) as usize;
            let v_factor = &RationalFn::constant(rat_of(big(-2).pow(s as u32)))
                * &(&q.pow(s as u32) * &v.pow((j - s) as u32));
            let binom = RationalFn::constant(rat_of(crate::util::binomial(j, s)));
            let scalar = &(&beta * &binom) * &v_factor;
            // prod_{i=1..j} (n+j-d-s-i) = prod_{i=1..j} (n - t - i)
            let poly = PolyInN::product_of_linear((1..=j as i64).map(|i| -(t as i64) - i));
            rhs[t] = &rhs[t] + &poly.scale(&scalar);
        }
    }

    TheoremRelation { d, lhs, rhs }
}

/// Derives the closed form for `s_D` symbolically, recursing through all
/// lower orders (each order is derived once and reused).
pub fn derive_closed_form(order: u32) -> ClosedForm {
    assert!(order >= 1);
    let mut forms: Vec<ClosedForm> = vec![ClosedForm::from_parts(
        1,
        vec![PolyInN::constant(RationalFn::one())],
    )];
    for d in 1..order {
        let rel = build_relation(d);
        // start from the right side, subtract the known lower orders
        let mut total = rel.rhs.clone();
        for (j, term) in rel.lhs.iter().take(d as usize).enumerate() {
            let lower = &forms[j]; // closed form of s_{j+1}
            for (s_prev, poly) in lower.terms().iter().enumerate() {
                // s_{j+1}(n+shift): U_{(n+shift-s')k} lands on basis index
                // t = -shift + s'
                let t = (d as usize - j) + s_prev;
                let moved = poly.shift(term.shift).scale(&term.coeff);
                total[t] = &total[t] - &moved;
            }
        }
        let lead_inv = rel.lhs[d as usize]
            .coeff
            .inverse()
            .expect("d! A^d is nonzero");
        let terms = total.into_iter().map(|p| p.scale(&lead_inv)).collect();
        forms.push(ClosedForm::from_parts(d + 1, terms));
    }
    forms.pop().expect("at least the base case")
}

/// Numeric values `(U_k, V_k, q^k)` for substitution, rejecting degenerate
/// parameters up front.
fn numeric_symbols(params: &LucasParams) -> Result<(BigRational, BigRational, BigRational)> {
    if params.is_degenerate() {
        return Err(Error::DegenerateParams);
    }
    Ok((
        rat_of(params.u_k()),
        rat_of(params.v_k()),
        rat_of(params.q_pow_k()),
    ))
}

/// Evaluates a closed form at concrete `(p,q,k)` and `n >= D`.
pub fn evaluate_closed_form(
    cf: &ClosedForm,
    params: &LucasParams,
    n: u64,
) -> Result<BigRational> {
    assert!(n >= cf.order as u64, "identities hold for n >= D");
    let (u, v, q) = numeric_symbols(params)?;
    let mut table = SeqTable::new(params.clone());
    let mut total = BigRational::zero();
    for (s, poly) in cf.terms.iter().enumerate() {
        let coeff = poly.eval_at(&u, &v, &q, n as i64)?;
        total += coeff * rat_of(table.strided_u(n - s as u64));
    }
    Ok(total)
}

/// Per-`n` record of closed-form value vs oracle value.
#[derive(Clone, Debug)]
pub struct VerificationEntry {
    pub n: u64,
    pub closed_form: BigRational,
    pub oracle: BigInt,
    pub matches: bool,
}

/// Outcome of sweeping a closed form against the series oracle.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub params: LucasParams,
    pub order: u32,
    pub entries: Vec<VerificationEntry>,
    pub pass: bool,
}

/// Compares `evaluate_closed_form` against the series oracle for every `n`
/// in `n_lo..=n_hi`. Pass requires exact equality and integrality at every
/// point; failures are recorded, not thrown.
pub fn verify_closed_form(
    cf: &ClosedForm,
    params: &LucasParams,
    n_lo: u64,
    n_hi: u64,
) -> Result<VerificationReport> {
    assert!(n_lo >= cf.order as u64);
    let oracle = s_series(params, cf.order, n_hi);
    let mut entries = Vec::new();
    let mut pass = true;
    for n in n_lo..=n_hi {
        let value = evaluate_closed_form(cf, params, n)?;
        let expected = &oracle[n as usize];
        let matches = value.is_integer() && value.to_integer() == *expected;
        pass &= matches;
        entries.push(VerificationEntry {
            n,
            closed_form: value,
            oracle: expected.clone(),
            matches,
        });
    }
    Ok(VerificationReport {
        params: params.clone(),
        order: cf.order,
        entries,
        pass,
    })
}

/// Numerically balances the order-`d` relation against oracle values of
/// `s_1..s_{d+1}`, independently of the elimination.
pub fn relation_balances(rel: &TheoremRelation, params: &LucasParams, n: u64) -> Result<bool> {
    assert!(n >= rel.d as u64);
    let (u, v, q) = numeric_symbols(params)?;
    let mut table = SeqTable::new(params.clone());

    let mut lhs_val = BigRational::zero();
    for (j, term) in rel.lhs.iter().enumerate() {
        let m = (n as i64 + term.shift) as u64;
        let s_val = crate::oracle::s_series_at(params, j as u32 + 1, m);
        lhs_val += term.coeff.eval(&u, &v, &q)? * rat_of(s_val);
    }

    let mut rhs_val = BigRational::zero();
    for (t, poly) in rel.rhs.iter().enumerate() {
        let coeff = poly.eval_at(&u, &v, &q, n as i64)?;
        rhs_val += coeff * rat_of(table.strided_u(n - t as u64));
    }
    Ok(lhs_val == rhs_val)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::rat;

    fn params(p: i64, q: i64, k: u32) -> LucasParams {
        LucasParams::new(p, q, k).unwrap()
    }

    fn matrix() -> Vec<LucasParams> {
        vec![
            params(1, -1, 1),
            params(2, -1, 1),
            params(1, -1, 2),
            params(3, 2, 1),
            params(3, 2, 2),
        ]
    }

    #[test]
    fn relation_d1_matches_hand_instance() {
        // 4Q s_1(n-1) + A s_2(n) = (n-1) V U_{nk} - 2(n-2) Q U_{(n-1)k}
        let rel = build_relation(1);
        assert_eq!(rel.lhs.len(), 2);
        let q = RationalFn::from_poly(MultiPoly::var(Var::Q));
        assert_eq!(rel.lhs[0].coeff, &RationalFn::int(4) * &q);
        assert_eq!(rel.lhs[0].shift, -1);
        assert_eq!(rel.lhs[1].coeff, a_ratfn());
        assert_eq!(rel.lhs[1].shift, 0);

        let v = RationalFn::from_poly(MultiPoly::var(Var::V));
        let expect_t0 = PolyInN::n_plus(-1).scale(&v);
        assert_eq!(rel.rhs[0], expect_t0);
        let expect_t1 = PolyInN::n_plus(-2).scale(&(&RationalFn::int(-2) * &q));
        assert_eq!(rel.rhs[1], expect_t1);
    }

    #[test]
    fn relation_d2_lhs_coefficients() {
        // 16Q^2, 12Q A, 2A^2 on s_1(n-2), s_2(n-1), s_3(n)
        let rel = build_relation(2);
        let q = RationalFn::from_poly(MultiPoly::var(Var::Q));
        let a = a_ratfn();
        assert_eq!(rel.lhs[0].coeff, &RationalFn::int(16) * &q.pow(2));
        assert_eq!(rel.lhs[1].coeff, &(&RationalFn::int(12) * &q) * &a);
        assert_eq!(rel.lhs[2].coeff, &RationalFn::int(2) * &a.pow(2));
        assert_eq!(rel.lhs[2].shift, 0);
        // rhs top corner, worked by hand: 4Q^2 (n-3)^2 on U_{(n-2)k}
        let expect_t2 =
            PolyInN::product_of_linear([-3, -3]).scale(&(&RationalFn::int(4) * &q.pow(2)));
        assert_eq!(rel.rhs[2], expect_t2);
    }

    #[test]
    fn lhs_top_is_factorial_times_a_pow() {
        for d in 1..=7u32 {
            let rel = build_relation(d);
            let expect = &RationalFn::constant(rat_of(factorial(d as u64))) * &a_ratfn().pow(d);
            assert_eq!(rel.lhs[d as usize].coeff, expect);
        }
    }

    #[test]
    fn derive_d2_is_the_known_identity() {
        // s_2(n) = (U/(V^2-4Q)) [ (n-1) V U_{nk} - 2n Q U_{(n-1)k} ]
        let cf = derive_closed_form(2);
        let u = RationalFn::from_poly(MultiPoly::var(Var::U));
        let v = RationalFn::from_poly(MultiPoly::var(Var::V));
        let q = RationalFn::from_poly(MultiPoly::var(Var::Q));
        let pref = &u / &RationalFn::from_poly(
            &MultiPoly::var(Var::V).pow(2) - &MultiPoly::var(Var::Q).scale(&rat(4)),
        );
        let t0 = PolyInN::n_plus(-1).scale(&(&pref * &v));
        let t1 = PolyInN::n().scale(&(&(&pref * &q) * &RationalFn::int(-2)));
        assert_eq!(cf.terms()[0], t0);
        assert_eq!(cf.terms()[1], t1);
    }

    #[test]
    fn evaluate_examples() {
        let fib = params(1, -1, 1);
        assert_eq!(evaluate_closed_form(&derive_closed_form(2), &fib, 3).unwrap(), rat(2));
        assert_eq!(evaluate_closed_form(&derive_closed_form(4), &fib, 5).unwrap(), rat(4));
        for p in matrix() {
            for order in 1..=5u32 {
                let cf = derive_closed_form(order);
                assert_eq!(
                    evaluate_closed_form(&cf, &p, order as u64).unwrap(),
                    rat_of(p.u_k().pow(order))
                );
            }
        }
    }

    #[test]
    fn degree_bound() {
        for order in 2..=6u32 {
            let cf = derive_closed_form(order);
            for poly in cf.terms() {
                assert_eq!(poly.degree(), Some(order as usize - 1));
            }
        }
    }

    #[test]
    fn verify_small_sweeps() {
        let cases = [
            (derive_closed_form(2), params(1, -1, 1), 2u64, 30u64),
            (derive_closed_form(3), params(2, -1, 1), 3, 25),
            (derive_closed_form(6), params(3, 2, 2), 6, 20),
        ];
        for (cf, p, lo, hi) in cases {
            let report = verify_closed_form(&cf, &p, lo, hi).unwrap();
            assert!(report.pass, "sweep failed for D={} at ({},{},{})", cf.order(), p.p(), p.q(), p.k());
        }
    }

    #[test]
    fn relation_balances_numerically() {
        for p in [params(1, -1, 1), params(3, 2, 2)] {
            for d in 1..=4u32 {
                let rel = build_relation(d);
                for n in d as u64..=20 {
                    assert!(relation_balances(&rel, &p, n).unwrap(), "d={d} n={n}");
                }
            }
        }
    }

    #[test]
    fn degenerate_parameters_rejected() {
        let cf = derive_closed_form(2);
        let deg = params(2, 1, 1); // p^2 = 4q
        assert!(matches!(
            evaluate_closed_form(&cf, &deg, 5),
            Err(Error::DegenerateParams)
        ));
    }
}
