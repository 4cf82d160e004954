//! Command-line front end. The heavy lifting lives in the library modules;
//! this module only parses arguments, dispatches and formats.
//!
//! Exit codes: 0 success (and verification pass), 1 verification failure,
//! 2 usage error, 3 degenerate-parameter rejection.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_traits::Signed;

use crate::engine::{
    self, build_relation, derive_closed_form, evaluate_closed_form, reduce_to_fibonacci_basis,
    relation_balances, verify_closed_form, EmitFormat,
};
use crate::oracle::{s_enum, s_series, DEFAULT_ENUM_BUDGET};
use crate::sequences::{lucas_u, lucas_v, LucasParams};
use crate::series::check_proposition;
use crate::triangles::{TriangleKind, TriangleTable};
use crate::Error;

#[derive(Parser, Debug)]
#[command(
    name = "lucasconv",
    about = "Convolution-sum identities for generalized Fibonacci and Lucas sequences",
    version
)]
pub struct Cli {
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    /// Recurrence parameter p (Fibonacci: 1)
    #[arg(long, default_value_t = 1)]
    pub p: i64,
    /// Recurrence parameter q (Fibonacci: -1)
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    pub q: i64,
    /// Stride k of the subsequence U_{nk}
    #[arg(long, default_value_t = 1)]
    pub k: u32,
}

impl ParamArgs {
    fn params(&self) -> Result<LucasParams, Error> {
        LucasParams::new(self.p, self.q, self.k)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print U_n and V_n values
    Seq {
        #[command(flatten)]
        params: ParamArgs,
        /// Largest index to print
        #[arg(long, default_value_t = 10)]
        nmax: u64,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Print the coefficient triangle a(l,d) or b(l,d)
    Triangle {
        /// Which triangle: a or b
        kind: String,
        /// Largest l and d
        #[arg(long, default_value_t = 6)]
        max: u64,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Brute-force convolution sums s_d(n)
    Conv {
        #[command(flatten)]
        params: ParamArgs,
        /// Convolution order d
        #[arg(long, default_value_t = 2)]
        d: u32,
        /// Largest n
        #[arg(long, default_value_t = 20)]
        nmax: u64,
        /// enum or series
        #[arg(long, default_value = "series")]
        method: String,
        /// Cap on enumerated compositions
        #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET)]
        budget: u128,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Derive the closed-form identity for s_D(n)
    Derive {
        #[command(flatten)]
        params: ParamArgs,
        /// Convolution order D
        #[arg(long = "D", default_value_t = 2)]
        order: u32,
        /// text, latex or json
        #[arg(long, default_value = "text")]
        format: String,
        /// Substitute the numeric (p,q,k) values into the coefficients
        #[arg(long)]
        numeric: bool,
        /// Reduce onto the {U_nk, U_(n-1)k} basis (numeric)
        #[arg(long)]
        fib_basis: bool,
    },
    /// Verify a derived identity against the oracle over a range of n
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        /// Convolution order D
        #[arg(long = "D", default_value_t = 2)]
        order: u32,
        /// Verify for n = D..=nmax
        #[arg(long, default_value_t = 40)]
        nmax: u64,
    },
    /// Check the generating-function differential identity on truncated series
    CheckProposition {
        /// Check d = 1..=dmax
        #[arg(long, default_value_t = 6)]
        dmax: u32,
        /// Truncation order
        #[arg(long = "N", default_value_t = 30)]
        n_terms: usize,
        /// Restrict to a single parameter set (default: built-in matrix)
        #[arg(long)]
        p: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<i64>,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Compare wall time of enumeration, series and closed-form evaluation
    Bench {
        #[command(flatten)]
        params: ParamArgs,
        /// Convolution order D
        #[arg(long = "D", default_value_t = 4)]
        order: u32,
        /// Largest n
        #[arg(long, default_value_t = 30)]
        nmax: u64,
        /// Cap on enumerated compositions
        #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET)]
        budget: u128,
    },
}

/// Built-in parameter matrix used by `check-proposition` when no explicit
/// parameters are given.
fn standard_matrix() -> Vec<LucasParams> {
    [(1, -1, 1), (2, -1, 1), (1, -1, 2), (3, 2, 1), (3, 2, 2)]
        .into_iter()
        .map(|(p, q, k)| LucasParams::new(p, q, k).expect("k >= 1"))
        .collect()
}

/// Runs a parsed invocation; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(&cli.command) {
        Ok((output, code)) => {
            let emitted = if let Some(path) = &cli.out {
                std::fs::write(path, output.as_bytes())
                    .map_err(|e| eprintln!("error: cannot write {}: {e}", path.display()))
                    .is_ok()
            } else {
                println!("{output}");
                true
            };
            if emitted {
                code
            } else {
                2
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::DegenerateParams | Error::ZeroUk | Error::ZeroQ => 3,
                _ => 2,
            }
        }
    }
}

fn execute(command: &Command) -> Result<(String, i32), Error> {
    match command {
        Command::Seq { params, nmax, format } => {
            let p = params.params()?;
            let rows: Vec<(u64, String, String)> = (0..=*nmax)
                .map(|n| (n, lucas_u(&p, n).to_string(), lucas_v(&p, n).to_string()))
                .collect();
            let out = match format.as_str() {
                "json" => serde_json::to_string_pretty(&serde_json::json!({
                    "p": p.p(), "q": p.q(), "k": p.k(),
                    "rows": rows.iter().map(|(n, u, v)| serde_json::json!({
                        "n": n, "U": u, "V": v
                    })).collect::<Vec<_>>(),
                }))
                .expect("serializable"),
                _ => {
                    let mut s = format!("{:>4} {:>20} {:>20}\n", "n", "U_n", "V_n");
                    for (n, u, v) in &rows {
                        let _ = writeln!(s, "{:>4} {:>20} {:>20}", n, u, v);
                    }
                    s.trim_end().to_string()
                }
            };
            Ok((out, 0))
        }
        Command::Triangle { kind, max, format } => {
            let kind = match kind.as_str() {
                "a" => TriangleKind::A,
                "b" => TriangleKind::B,
                other => {
                    return Err(Error::Serialization(format!(
                        "unknown triangle `{other}` (expected a or b)"
                    )))
                }
            };
            let table = TriangleTable::build(kind, *max, *max);
            let out = match format.as_str() {
                "json" => serde_json::to_string_pretty(&table.to_json()).expect("serializable"),
                _ => table.to_text().trim_end().to_string(),
            };
            Ok((out, 0))
        }
        Command::Conv {
            params,
            d,
            nmax,
            method,
            budget,
            format,
        } => {
            let p = params.params()?;
            let values: Vec<num_bigint::BigInt> = match method.as_str() {
                "enum" => (0..=*nmax)
                    .map(|n| s_enum(&p, *d, n, *budget))
                    .collect::<Result<_, _>>()?,
                _ => s_series(&p, *d, *nmax),
            };
            let out = match format.as_str() {
                "json" => serde_json::to_string_pretty(
                    &values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                )
                .expect("serializable"),
                _ => values
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            Ok((out, 0))
        }
        Command::Derive {
            params,
            order,
            format,
            numeric,
            fib_basis,
        } => {
            let cf = derive_closed_form(*order);
            if *fib_basis {
                let p = params.params()?;
                let (p0, p1) = reduce_to_fibonacci_basis(&cf, &p)?;
                let fib_names = p.p() == 1 && p.q() == -1 && p.k() == 1;
                let body = engine::fib_basis_text(&p0, &p1, fib_names);
                return Ok((format!("s_{}(n) = {}", order, body), 0));
            }
            if *numeric {
                let p = params.params()?;
                if p.is_degenerate() {
                    return Err(Error::DegenerateParams);
                }
                // specialize the factored view numerically, term by term
                let views = engine::term_views(&cf)?;
                let mut out = format!(
                    "s_{}(n;{},{};{}) with U_k={}, V_k={}, q^k={}:\n",
                    order,
                    p.p(),
                    p.q(),
                    p.k(),
                    p.u_k(),
                    p.v_k(),
                    p.q_pow_k()
                );
                for view in views {
                    let qpow = p.q_pow_k().pow(view.q_power);
                    let vpow = p.v_k().pow(view.v_power);
                    let _ = writeln!(
                        out,
                        "  ({}) * {} * U_{{(n-{})k}}",
                        engine::poly_display(&view.poly),
                        crate::util::rat_of(qpow * vpow),
                        view.s
                    );
                }
                return Ok((out.trim_end().to_string(), 0));
            }
            let format: EmitFormat = format
                .parse()
                .map_err(Error::Serialization)?;
            Ok((engine::emit(&cf, format)?, 0))
        }
        Command::Verify { params, order, nmax } => {
            let p = params.params()?;
            let cf = derive_closed_form(*order);
            let report = verify_closed_form(&cf, &p, *order as u64, *nmax)?;
            let mut out = String::new();
            for e in &report.entries {
                let _ = writeln!(
                    out,
                    "n={:<4} closed_form={:<24} oracle={:<24} {}",
                    e.n,
                    e.closed_form,
                    e.oracle,
                    if e.matches { "ok" } else { "MISMATCH" }
                );
            }
            let _ = write!(
                out,
                "D={} p={} q={} k={} n={}..{}: {}",
                report.order,
                p.p(),
                p.q(),
                p.k(),
                *order,
                nmax,
                if report.pass { "PASS" } else { "FAIL" }
            );
            Ok((out, if report.pass { 0 } else { 1 }))
        }
        Command::CheckProposition { dmax, n_terms, p, q, k } => {
            let sets = match (p, q, k) {
                (Some(p), Some(q), Some(k)) => vec![LucasParams::new(*p, *q, *k)?],
                (None, None, None) => standard_matrix(),
                _ => {
                    return Err(Error::Serialization(
                        "give all of --p, --q, --k or none".into(),
                    ))
                }
            };
            let mut out = String::new();
            let mut all = true;
            for params in &sets {
                for d in 1..=*dmax {
                    let ok = check_proposition(params, d, *n_terms)?;
                    all &= ok;
                    let _ = writeln!(
                        out,
                        "p={:<3} q={:<3} k={:<2} d={:<2} N={:<4} {}",
                        params.p(),
                        params.q(),
                        params.k(),
                        d,
                        n_terms,
                        if ok { "pass" } else { "FAIL" }
                    );
                }
            }
            let _ = write!(out, "overall: {}", if all { "PASS" } else { "FAIL" });
            Ok((out, if all { 0 } else { 1 }))
        }
        Command::Bench {
            params,
            order,
            nmax,
            budget,
        } => {
            let p = params.params()?;
            let mut out = String::from("method,D,n,nanoseconds,value-digits\n");
            let cf = derive_closed_form(*order);
            for n in *order as u64..=*nmax {
                let t = Instant::now();
                let enum_val = s_enum(&p, *order, n, *budget);
                let enum_ns = t.elapsed().as_nanos();
                if let Ok(v) = &enum_val {
                    let _ = writeln!(out, "enum,{},{},{},{}", order, n, enum_ns, digits(v));
                }

                let t = Instant::now();
                let series_val = crate::oracle::s_series_at(&p, *order, n);
                let _ = writeln!(
                    out,
                    "series,{},{},{},{}",
                    order,
                    n,
                    t.elapsed().as_nanos(),
                    digits(&series_val)
                );

                let t = Instant::now();
                let cf_val = evaluate_closed_form(&cf, &p, n)?;
                let _ = writeln!(
                    out,
                    "closed-form,{},{},{},{}",
                    order,
                    n,
                    t.elapsed().as_nanos(),
                    digits(&cf_val.to_integer())
                );
            }
            Ok((out.trim_end().to_string(), 0))
        }
    }
}

fn digits(v: &num_bigint::BigInt) -> usize {
    v.abs().to_string().len()
}

/// Extra surface used by tests: numerically balance a relation.
pub fn relation_balance_check(d: u32, p: i64, q: i64, k: u32, n: u64) -> Result<bool, Error> {
    let params = LucasParams::new(p, q, k)?;
    relation_balances(&build_relation(d), &params, n)
}
