//! Multivariate polynomials in `U`, `V`, `Q` over exact rationals.
//!
//! Stored as a sorted map from exponent triples to nonzero coefficients, so a
//! polynomial has exactly one representation and equality is structural. The
//! monomial order is lexicographic with `U > V > Q`, which is also the order
//! used when canonicalizing rational functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::util::rat;

/// The three symbols, in lexicographic significance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    U = 0,
    V = 1,
    Q = 2,
}

pub(crate) type Exps = [u32; 3];

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    // invariant: no zero coefficients stored
    terms: BTreeMap<Exps, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(rat(1))
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0, 0, 0], c);
        }
        MultiPoly { terms }
    }

    pub fn int(c: i64) -> Self {
        MultiPoly::constant(rat(c))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial({
            let mut e = [0u32; 3];
            e[v as usize] = 1;
            e
        }, rat(1))
    }

    pub fn monomial(exps: Exps, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including 0).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v as usize]).max().unwrap_or(0)
    }

    /// Leading (largest-lex) exponent triple and coefficient.
    pub fn leading(&self) -> Option<(&Exps, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigRational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, u: &BigRational, v: &BigRational, q: &BigRational) -> BigRational {
        let vals = [u, v, q];
        let mut total = BigRational::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (x, &e) in vals.iter().zip(exps.iter()) {
                for _ in 0..e {
                    term *= *x;
                }
            }
            total += term;
        }
        total
    }

    fn insert_add(&mut self, exps: Exps, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Exact division; `None` when `self` is not a multiple of `div`.
    pub fn div_exact(&self, div: &MultiPoly) -> Option<MultiPoly> {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        let (dexps, dcoeff) = {
            let (e, c) = div.leading().unwrap();
            (*e, c.clone())
        };
        while let Some((rexps, rcoeff)) = rem.leading() {
            let mut qexps = [0u32; 3];
            for i in 0..3 {
                if rexps[i] < dexps[i] {
                    return None;
                }
                qexps[i] = rexps[i] - dexps[i];
            }
            let qcoeff = rcoeff / &dcoeff;
            let mono = MultiPoly::monomial(qexps, qcoeff);
            rem = &rem - &(&mono * div);
            quot = &quot + &mono;
        }
        Some(quot)
    }

    /// Greatest common divisor (up to a rational unit), by primitive
    /// pseudo-remainder sequences over one variable at a time.
    pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        let g = gcd_inner(a, b);
        normalize_unit(g)
    }
}

/// Scale so the leading coefficient is 1 (gcds are defined up to units).
fn normalize_unit(p: MultiPoly) -> MultiPoly {
    match p.leading() {
        None => p,
        Some((_, c)) => {
            let inv = rat(1) / c.clone();
            p.scale(&inv)
        }
    }
}

fn gcd_inner(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    // main variable: first symbol appearing in either operand
    let var = (0..3).find(|&i| {
        a.terms.keys().any(|e| e[i] > 0) || b.terms.keys().any(|e| e[i] > 0)
    });
    let var = match var {
        None => return MultiPoly::one(), // both nonzero constants
        Some(v) => v,
    };

    let fa = univar(a, var);
    let fb = univar(b, var);
    let ca = content(&fa);
    let cb = content(&fb);
    let pa = divide_coeffs(&fa, &ca);
    let pb = divide_coeffs(&fb, &cb);
    let cont_gcd = gcd_inner(&ca, &cb);

    let prim = primitive_prs(pa, pb, var);
    &collect(&prim, var) * &cont_gcd
}

/// Primitive pseudo-remainder sequence on univariate views (coefficients are
/// polynomials in the remaining symbols).
fn primitive_prs(mut f: Vec<MultiPoly>, mut g: Vec<MultiPoly>, var: usize) -> Vec<MultiPoly> {
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if g.len() == 1 {
            // nonzero constant (in the main variable) divides everything
            return vec![MultiPoly::one()];
        }
        let r = pseudo_rem(&f, &g, var);
        if r.is_empty() {
            return g;
        }
        let c = content(&r);
        f = g;
        g = divide_coeffs(&r, &c);
    }
}

/// Pseudo-remainder of `f` by `g` in the main variable; trailing zero
/// coefficients trimmed, empty vector means zero.
fn pseudo_rem(f: &[MultiPoly], g: &[MultiPoly], _var: usize) -> Vec<MultiPoly> {
    let dg = g.len() - 1;
    let lg = g.last().unwrap().clone();
    let mut r: Vec<MultiPoly> = f.to_vec();
    trim(&mut r);
    while !r.is_empty() && r.len() - 1 >= dg {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        // r := lg * r - lr * x^{dr-dg} * g
        for c in r.iter_mut() {
            *c = &*c * &lg;
        }
        for (i, gc) in g.iter().enumerate() {
            let idx = dr - dg + i;
            r[idx] = &r[idx] - &(&lr * gc);
        }
        trim(&mut r);
    }
    r
}

fn trim(v: &mut Vec<MultiPoly>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

/// Coefficient vector of `p` viewed as univariate in `var` (exponent of `var`
/// zeroed out of the coefficients).
fn univar(p: &MultiPoly, var: usize) -> Vec<MultiPoly> {
    let deg = p.terms.keys().map(|e| e[var]).max().unwrap_or(0);
    let mut coeffs = vec![MultiPoly::zero(); deg as usize + 1];
    for (exps, coeff) in &p.terms {
        let mut e = *exps;
        let d = e[var];
        e[var] = 0;
        coeffs[d as usize].insert_add(e, coeff.clone());
    }
    coeffs
}

fn collect(coeffs: &[MultiPoly], var: usize) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (d, c) in coeffs.iter().enumerate() {
        for (exps, coeff) in &c.terms {
            let mut e = *exps;
            e[var] = d as u32;
            out.insert_add(e, coeff.clone());
        }
    }
    out
}

fn content(coeffs: &[MultiPoly]) -> MultiPoly {
    let mut g = MultiPoly::zero();
    for c in coeffs {
        g = gcd_inner(&g, c);
        if g.as_constant().map_or(false, |c| c.is_one()) {
            break;
        }
    }
    normalize_unit(g)
}

fn divide_coeffs(coeffs: &[MultiPoly], div: &MultiPoly) -> Vec<MultiPoly> {
    coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                MultiPoly::zero()
            } else {
                c.div_exact(div).expect("content divides every coefficient")
            }
        })
        .collect()
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(*e, -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.insert_add(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["U", "V", "Q"];
        let mut first = true;
        // print in descending lex order
        for (exps, coeff) in self.terms.iter().rev() {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = exps.iter().all(|&e| e == 0);
            let unit = mag.is_one();
            if !unit || is_const {
                write!(f, "{}", mag)?;
            }
            let mut printed = !unit || is_const;
            for (name, &e) in names.iter().zip(exps.iter()) {
                if e == 0 {
                    continue;
                }
                if printed {
                    write!(f, "*")?;
                }
                printed = true;
                if e == 1 {
                    write!(f, "{}", name)?;
                } else {
                    write!(f, "{}^{}", name, e)?;
                }
            }
        }
        Ok(())
    }
}
