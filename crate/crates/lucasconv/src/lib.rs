//! Exact computation with convolution sums of generalized Fibonacci and
//! Lucas sequences.
//!
//! The crate generates the sequences `U_n(p,q)` and `V_n(p,q)`, computes the
//! coefficient triangles `a(l,d)` and `b(l,d)`, checks the generating-function
//! differential identities on truncated power series, and derives closed-form
//! identities
//!
//! ```text
//! s_D(n) = sum_s R_s(n) * U_{(n-s)k}
//! ```
//!
//! for the convolution sums `s_D(n;p,q;k)`, verifying every derived formula
//! against two independent brute-force oracles. All arithmetic is exact
//! (arbitrary-precision integers and rationals); no floating point anywhere.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod engine;
pub mod oracle;
pub mod sequences;
pub mod series;
pub mod symbolic;
pub mod triangles;
mod util;

pub use engine::{
    build_relation, derive_closed_form, evaluate_closed_form, reduce_to_fibonacci_basis,
    verify_closed_form, ClosedForm, TheoremRelation, VerificationReport,
};
pub use sequences::{lucas_u, lucas_v, strided_u, LucasParams, SeqTable};

/// Error type shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("stride k must be >= 1")]
    InvalidStride,
    #[error("degenerate parameters: p^2 = 4q or U_k = 0")]
    DegenerateParams,
    #[error("U_k(p,q) = 0 for the given parameters")]
    ZeroUk,
    #[error("q = 0: reduction onto the two-term basis divides by q^k")]
    ZeroQ,
    #[error("composition count {count} exceeds enumeration budget {budget}")]
    BudgetExceeded { count: u128, budget: u128 },
    #[error("series order underflow: requested order {requested}, valid to {valid}")]
    OrderUnderflow { requested: usize, valid: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("closed form does not factor as q^s * V^(D-1-s) * poly(n) inside the prefactor")]
    TermShape,
    #[error("invalid closed-form serialization: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
