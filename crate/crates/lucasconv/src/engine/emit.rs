//! Serialization of derived closed forms.
//!
//! Every term of a derived identity factors as
//! `prefactor * q^{sk} * V_k^{D-1-s} * poly(n) * U_{(n-s)k}` with
//! `prefactor = U_k^{D-1} / ((D-1)! (V_k^2 - 4q^k)^{D-1})` and `poly` a
//! polynomial in `n` with plain rational coefficients. The emitters extract
//! that shape once and render it as text, LaTeX or JSON; the JSON form parses
//! back to a structurally equal closed form.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::str::FromStr;

use crate::symbolic::{MultiPoly, PolyInN, RationalFn, Var};
use crate::util::{factorial, rat, rat_of};
use crate::{Error, Result};

use super::ClosedForm;

/// A polynomial in `n` over the plain rationals (coefficient of `n^t` at
/// index `t`).
pub type NumPoly = Vec<BigRational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmitFormat {
    Text,
    Latex,
    Json,
}

impl FromStr for EmitFormat {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "text" => Ok(EmitFormat::Text),
            "latex" => Ok(EmitFormat::Latex),
            "json" => Ok(EmitFormat::Json),
            other => Err(format!("unknown format `{other}` (expected text, latex or json)")),
        }
    }
}

/// One term of the factored view: `poly(n) * q^{sk} * V_k^{v_power} * U_{(n-s)k}`
/// inside the prefactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermView {
    pub s: u32,
    pub q_power: u32,
    pub v_power: u32,
    pub poly: NumPoly,
}

/// The prefactor `U^{u_power} / (factorial! * (V^2-4Q)^{disc_power})` as a
/// rational function.
fn prefactor(order: u32) -> RationalFn {
    let e = order - 1;
    let u = MultiPoly::var(Var::U).pow(e);
    let disc = (&MultiPoly::var(Var::V).pow(2) - &MultiPoly::var(Var::Q).scale(&rat(4))).pow(e);
    let den = disc.scale(&rat_of(factorial(e as u64)));
    RationalFn::new(u, den).expect("denominator nonzero")
}

/// Factors every term of `cf` through the common prefactor. Fails with
/// [`Error::TermShape`] if some coefficient does not reduce to a plain
/// rational after the division (no derived form does).
pub fn term_views(cf: &ClosedForm) -> Result<Vec<TermView>> {
    let pref = prefactor(cf.order());
    let mut out = Vec::with_capacity(cf.terms().len());
    for (s, poly) in cf.terms().iter().enumerate() {
        let s = s as u32;
        let v_power = cf.order() - 1 - s;
        let factor = &(&pref
            * &RationalFn::from_poly(MultiPoly::var(Var::Q).pow(s)))
            * &RationalFn::from_poly(MultiPoly::var(Var::V).pow(v_power));
        let mut coeffs = Vec::new();
        for c in poly.coeffs() {
            let reduced = c / &factor;
            match reduced.as_constant() {
                Some(v) => coeffs.push(v),
                None => return Err(Error::TermShape),
            }
        }
        while coeffs.last().map_or(false, |c: &BigRational| c.is_zero()) {
            coeffs.pop();
        }
        out.push(TermView {
            s,
            q_power: s,
            v_power,
            poly: coeffs,
        });
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct ClosedFormJson {
    #[serde(rename = "D")]
    order: u32,
    prefactor: PrefactorJson,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct PrefactorJson {
    u_power: u32,
    factorial: u32,
    disc_power: u32,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    s: u32,
    q_power: u32,
    v_power: u32,
    poly_n: Vec<String>,
}

/// Serializes a closed form in the requested format.
pub fn emit(cf: &ClosedForm, format: EmitFormat) -> Result<String> {
    match format {
        EmitFormat::Json => emit_json(cf),
        EmitFormat::Text => emit_text(cf),
        EmitFormat::Latex => emit_latex(cf),
    }
}

pub fn emit_json(cf: &ClosedForm) -> Result<String> {
    let views = term_views(cf)?;
    let doc = ClosedFormJson {
        order: cf.order(),
        prefactor: PrefactorJson {
            u_power: cf.order() - 1,
            factorial: cf.order() - 1,
            disc_power: cf.order() - 1,
        },
        terms: views
            .into_iter()
            .map(|t| TermJson {
                s: t.s,
                q_power: t.q_power,
                v_power: t.v_power,
                poly_n: t.poly.iter().map(|c| c.to_string()).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Serialization(e.to_string()))
}

/// Parses the JSON emitted by [`emit_json`] back into a closed form.
pub fn parse_json(input: &str) -> Result<ClosedForm> {
    let doc: ClosedFormJson =
        serde_json::from_str(input).map_err(|e| Error::Serialization(e.to_string()))?;
    if doc.order < 1 || doc.terms.len() != doc.order as usize {
        return Err(Error::Serialization(format!(
            "expected {} terms for D={}",
            doc.order, doc.order
        )));
    }
    let expected = PrefactorJson {
        u_power: doc.order - 1,
        factorial: doc.order - 1,
        disc_power: doc.order - 1,
    };
    if doc.prefactor.u_power != expected.u_power
        || doc.prefactor.factorial != expected.factorial
        || doc.prefactor.disc_power != expected.disc_power
    {
        return Err(Error::Serialization("unexpected prefactor powers".into()));
    }
    let pref = prefactor(doc.order);
    let mut terms = Vec::with_capacity(doc.terms.len());
    for (s, t) in doc.terms.iter().enumerate() {
        if t.s != s as u32 {
            return Err(Error::Serialization("terms out of order".into()));
        }
        let factor = &(&pref
            * &RationalFn::from_poly(MultiPoly::var(Var::Q).pow(t.q_power)))
            * &RationalFn::from_poly(MultiPoly::var(Var::V).pow(t.v_power));
        let coeffs: Vec<RationalFn> = t
            .poly_n
            .iter()
            .map(|txt| {
                BigRational::from_str(txt)
                    .map(|c| &RationalFn::constant(c) * &factor)
                    .map_err(|e| Error::Serialization(format!("bad rational `{txt}`: {e}")))
            })
            .collect::<Result<_>>()?;
        terms.push(PolyInN::from_coeffs(coeffs));
    }
    Ok(ClosedForm::from_parts(doc.order, terms))
}

fn poly_text(poly: &NumPoly, var: &str) -> String {
    if poly.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (t, c) in poly.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag.is_one() && t > 0;
        if !unit {
            out.push_str(&mag.to_string());
        }
        match t {
            0 => {}
            1 => {
                if !unit {
                    out.push('*');
                }
                out.push_str(var);
            }
            _ => {
                if !unit {
                    out.push('*');
                }
                out.push_str(&format!("{var}^{t}"));
            }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Human-readable rendering of a plain rational-coefficient polynomial in `n`.
pub fn poly_display(p: &NumPoly) -> String {
    poly_text(p, "n")
}

/// Horner evaluation of a [`NumPoly`] at integer `n`.
pub fn eval_poly(p: &NumPoly, n: i64) -> BigRational {
    crate::symbolic::eval_rational_poly(p, &rat(n))
}

pub fn emit_text(cf: &ClosedForm) -> Result<String> {
    if cf.order() == 1 {
        return Ok("s_1(n) = U_{nk}".into());
    }
    let views = term_views(cf)?;
    let e = cf.order() - 1;
    let mut out = format!(
        "s_{}(n) = U^{} / ({}! * (V^2 - 4*q^k)^{}) * [\n",
        cf.order(),
        e,
        e,
        e
    );
    for t in &views {
        let mut factors = Vec::new();
        factors.push(format!("({})", poly_text(&t.poly, "n")));
        if t.q_power > 0 {
            factors.push(if t.q_power == 1 {
                "q^k".into()
            } else {
                format!("q^{}k", t.q_power)
            });
        }
        if t.v_power > 0 {
            factors.push(if t.v_power == 1 {
                "V".into()
            } else {
                format!("V^{}", t.v_power)
            });
        }
        factors.push(format!("U_{{(n-{})k}}", t.s));
        out.push_str(&format!("  {}\n", factors.join(" * ")));
    }
    out.push(']');
    Ok(out)
}

pub fn emit_latex(cf: &ClosedForm) -> Result<String> {
    if cf.order() == 1 {
        return Ok("s_1(n;p,q;k) = U_{nk}(p,q)".into());
    }
    let views = term_views(cf)?;
    let e = cf.order() - 1;
    let mut out = format!(
        "s_{{{}}}(n;p,q;k) = \\frac{{U_k^{{{}}}(p,q)}}{{{}!\\,(V_k^2(p,q)-4q^k)^{{{}}}}}\\Bigl(\n",
        cf.order(),
        e,
        e,
        e
    );
    for (i, t) in views.iter().enumerate() {
        let lead = poly_latex_with_sign(&t.poly, i == 0);
        let mut line = lead;
        if t.q_power > 0 {
            line.push_str(&format!(
                "q^{{{}}}",
                if t.q_power == 1 {
                    "k".to_string()
                } else {
                    format!("{}k", t.q_power)
                }
            ));
        }
        if t.v_power > 0 {
            if t.v_power == 1 {
                line.push_str("V_k(p,q)");
            } else {
                line.push_str(&format!("V_k^{{{}}}(p,q)", t.v_power));
            }
        }
        let idx = if t.s == 0 {
            "nk".to_string()
        } else {
            format!("(n-{})k", t.s)
        };
        line.push_str(&format!("U_{{{}}}(p,q)", idx));
        out.push_str(&format!("  {}\\\\\n", line));
    }
    out.push_str("\\Bigr)");
    Ok(out)
}

/// `(poly)` with the overall sign hoisted out of the parentheses, so a term
/// renders as `-6q^k V_k^2 (...)` rather than `+(-6...)(...)`.
fn poly_latex_with_sign(poly: &NumPoly, first: bool) -> String {
    let negative = poly.last().map_or(false, |c| c.is_negative());
    let rendered: NumPoly = if negative {
        poly.iter().map(|c| -c).collect()
    } else {
        poly.clone()
    };
    let body = poly_text(&rendered, "n");
    let sign = if negative {
        "-"
    } else if first {
        ""
    } else {
        "+"
    };
    format!("{}\\bigl({}\\bigr)", sign, body)
}
