//! The small exact symbolic ring the derivation engine computes in:
//! multivariate polynomials and rational functions in the three symbols
//! `U`, `V`, `Q` (standing for `U_k(p,q)`, `V_k(p,q)` and `q^k`), and
//! polynomials in `n` over that field.

mod poly;
mod polyn;
mod ratfn;

pub use poly::{MultiPoly, Var};
pub use polyn::{eval_rational_poly, PolyInN};
pub use ratfn::RationalFn;
