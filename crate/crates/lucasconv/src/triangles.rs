//! The integer coefficient triangles `a(l,d)` and `b(l,d)`.
//!
//! Each triangle has both a recurrence and a closed form; the two routes
//! validate each other. Triangle `a` drives the powers of `F_k` on the left
//! side of the differential identity, triangle `b` the derivatives on the
//! right side.
//!
//! `a(0,d) = 4^d`, `a(l,0) = 0` for `l >= 1`, and
//! `a(l,d) = 4(l+1) a(l,d-1) + l a(l-1,d-1)`.
//!
//! `b(1,d) = (-2)^{d-1}`, `b(l,1) = 0` for `l >= 2`, and
//! `b(l,d) = b(l-1,d-1) - 2l b(l,d-1)`. `b` is defined only for `l,d >= 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::util::{big, binomial, factorial, rat, rat_of};

/// Which triangle a [`TriangleTable`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleKind {
    A,
    B,
}

/// `a(l,d)` by recurrence.
pub fn a_rec(l: u64, d: u64) -> BigInt {
    if l > d {
        return BigInt::zero();
    }
    // row r of the dp is a(0..=r, r)
    let mut row = vec![BigInt::one()];
    for r in 1..=d {
        let mut next = vec![BigInt::zero(); r as usize + 1];
        for ll in 0..=r as usize {
            let keep = big(4 * (ll as i64 + 1)) * &row.get(ll).cloned().unwrap_or_default();
            let carry = if ll >= 1 {
                big(ll as i64) * &row[ll - 1]
            } else {
                BigInt::zero()
            };
            next[ll] = keep + carry;
        }
        row = next;
    }
    row.get(l as usize).cloned().unwrap_or_default()
}

/// `a(l,d)` by the closed form `4^{d-l} * sum_j (-1)^j C(l,j) (l+1-j)^d`.
///
/// For `l > d` the power `4^{d-l}` is a fraction; the whole expression is
/// evaluated in exact rationals and still comes out as the integer 0.
pub fn a_closed(l: u64, d: u64) -> BigInt {
    let pow4 = pow_rat(4, d as i64 - l as i64);
    let sum = alternating_power_sum_a(l, d);
    let v = pow4 * rat_of(sum);
    debug_assert!(v.is_integer());
    v.to_integer()
}

/// The integer sum `sum_{j=0..l} (-1)^j C(l,j) (l+1-j)^d`, i.e. `a(l,d) / 4^{d-l}`.
pub fn alternating_power_sum_a(l: u64, d: u64) -> BigInt {
    let mut sum = BigInt::zero();
    for j in 0..=l {
        let term = binomial(l, j) * big((l + 1 - j) as i64).pow(d as u32);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

/// `b(l,d)` by recurrence; requires `l,d >= 1`.
pub fn b_rec(l: u64, d: u64) -> BigInt {
    assert!(l >= 1 && d >= 1, "b(l,d) is defined for l,d >= 1");
    if l > d {
        return BigInt::zero();
    }
    // row r holds b(1..=r, r)
    let mut row = vec![BigInt::one()];
    for r in 2..=d {
        let mut next = vec![BigInt::zero(); r as usize];
        for i in 0..r as usize {
            let ll = i as i64 + 1;
            let prev_same = row.get(i).cloned().unwrap_or_default();
            let prev_lower = if i >= 1 { row[i - 1].clone() } else {
                // b(0, d-1) has no meaning; the l = 1 case is pinned by its base value
                BigInt::zero()
            };
            next[i] = if ll == 1 {
                big(-2) * prev_same
            } else {
                prev_lower - big(2 * ll) * prev_same
            };
        }
        row = next;
    }
    row.get(l as usize - 1).cloned().unwrap_or_default()
}

/// `b(l,d)` by the closed form
/// `((-1)^{d-1} 2^{d-l} / (l-1)!) * sum_j (-1)^j C(l-1,j) (j+1)^{d-1}`.
pub fn b_closed(l: u64, d: u64) -> BigInt {
    assert!(l >= 1 && d >= 1, "b(l,d) is defined for l,d >= 1");
    let sign = if (d - 1) % 2 == 0 { rat(1) } else { rat(-1) };
    let pow2 = pow_rat(2, d as i64 - l as i64);
    let sum = alternating_power_sum_b(l, d);
    let v = sign * pow2 * rat_of(sum) / rat_of(factorial(l - 1));
    debug_assert!(v.is_integer());
    v.to_integer()
}

/// The integer sum `sum_{j=0..l-1} (-1)^j C(l-1,j) (j+1)^{d-1}`, i.e.
/// `(-1)^{d-1} (l-1)! b(l,d) / 2^{d-l}`.
pub fn alternating_power_sum_b(l: u64, d: u64) -> BigInt {
    let mut sum = BigInt::zero();
    for j in 0..l {
        let term = binomial(l - 1, j) * big(j as i64 + 1).pow(d as u32 - 1);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum
}

fn pow_rat(base: i64, exp: i64) -> BigRational {
    let p = big(base).pow(exp.unsigned_abs() as u32);
    if exp >= 0 {
        rat_of(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// A rectangular block of either triangle, built row-by-row from the
/// recurrence. In debug builds every entry is cross-checked against the
/// closed form.
#[derive(Clone, Debug)]
pub struct TriangleTable {
    kind: TriangleKind,
    max_l: u64,
    max_d: u64,
    values: Vec<Vec<BigInt>>,
}

impl TriangleTable {
    pub fn build(kind: TriangleKind, max_l: u64, max_d: u64) -> Self {
        let lo = match kind {
            TriangleKind::A => 0,
            TriangleKind::B => 1,
        };
        let mut values = Vec::new();
        for d in lo..=max_d {
            let mut row = Vec::new();
            for l in lo..=max_l {
                let v = match kind {
                    TriangleKind::A => a_rec(l, d),
                    TriangleKind::B => b_rec(l, d),
                };
                debug_assert_eq!(
                    v,
                    match kind {
                        TriangleKind::A => a_closed(l, d),
                        TriangleKind::B => b_closed(l, d),
                    }
                );
                row.push(v);
            }
            values.push(row);
        }
        TriangleTable { kind, max_l, max_d, values }
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    /// Index origin is (0,0) for kind A and (1,1) for kind B.
    pub fn get(&self, l: u64, d: u64) -> &BigInt {
        assert!(l <= self.max_l && d <= self.max_d, "index outside the built block");
        let lo = match self.kind {
            TriangleKind::A => 0,
            TriangleKind::B => 1,
        };
        &self.values[(d - lo) as usize][(l - lo) as usize]
    }

    /// Aligned text rendering, rows indexed by d, columns by l.
    pub fn to_text(&self) -> String {
        let lo = match self.kind {
            TriangleKind::A => 0,
            TriangleKind::B => 1,
        };
        let width = self
            .values
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(2);
        let mut out = String::new();
        out.push_str(&format!("{:>4} |", "d\\l"));
        for l in lo..=self.max_l {
            out.push_str(&format!(" {:>width$}", l, width = width));
        }
        out.push('\n');
        out.push_str(&format!("-----+{}\n", "-".repeat((width + 1) * (self.max_l - lo + 1) as usize)));
        for (i, row) in self.values.iter().enumerate() {
            out.push_str(&format!("{:>4} |", i as u64 + lo));
            for v in row {
                out.push_str(&format!(" {:>width$}", v.to_string(), width = width));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let lo = match self.kind {
            TriangleKind::A => 0u64,
            TriangleKind::B => 1,
        };
        serde_json::json!({
            "kind": match self.kind { TriangleKind::A => "a", TriangleKind::B => "b" },
            "l_min": lo,
            "d_min": lo,
            "rows": self.values.iter().map(|row| {
                row.iter().map(|v| v.to_string()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_examples() {
        assert_eq!(a_rec(3, 4), big(240));
        assert_eq!(a_rec(5, 3), big(0));
        assert_eq!(a_rec(2, 6), big(154112));
        assert_eq!(a_closed(1, 2), big(12));
        assert_eq!(a_closed(0, 5), big(1024));
        assert_eq!(a_closed(6, 6), big(720));
    }

    #[test]
    fn b_examples() {
        assert_eq!(b_rec(3, 5), big(100));
        assert_eq!(b_rec(4, 2), big(0));
        assert_eq!(b_rec(2, 6), big(496));
        assert_eq!(b_closed(2, 4), big(28));
        assert_eq!(b_closed(1, 6), big(-32));
        assert_eq!(b_closed(5, 5), big(1));
    }

    #[test]
    fn diagonals_and_edges() {
        for d in 0..12u64 {
            assert_eq!(a_rec(d, d), factorial(d));
            assert_eq!(a_rec(0, d), big(4).pow(d as u32));
        }
        for d in 1..12u64 {
            assert_eq!(b_rec(d, d), big(1));
            assert_eq!(b_rec(1, d), big(-2).pow(d as u32 - 1));
        }
    }

    #[test]
    fn rec_matches_closed_in_range() {
        for l in 0..=15u64 {
            for d in 0..=15u64 {
                assert_eq!(a_rec(l, d), a_closed(l, d), "a({l},{d})");
                if l >= 1 && d >= 1 {
                    assert_eq!(b_rec(l, d), b_closed(l, d), "b({l},{d})");
                }
            }
        }
    }

    #[test]
    fn power_sums_cross_link() {
        // sum_i (-1)^i C(j,i) (j+1-i)^d == a(j,d) / 4^{d-j}
        // sum_i (-1)^i C(j-1,i) (i+1)^{d-1} == (-1)^{d-1} (j-1)! b(j,d) / 2^{d-j}
        for d in 1..=10u64 {
            for j in 0..=d {
                let lhs = alternating_power_sum_a(j, d) * big(4).pow((d - j) as u32);
                assert_eq!(lhs, a_rec(j, d));
                if j >= 1 {
                    let sign = if (d - 1) % 2 == 0 { big(1) } else { big(-1) };
                    let lhs = alternating_power_sum_b(j, d) * big(2).pow((d - j) as u32);
                    assert_eq!(lhs, sign * factorial(j - 1) * b_rec(j, d));
                }
            }
        }
    }

    #[test]
    fn table_lookup() {
        let a = TriangleTable::build(TriangleKind::A, 6, 6);
        assert_eq!(*a.get(4, 5), big(1440));
        let b = TriangleTable::build(TriangleKind::B, 6, 6);
        assert_eq!(*b.get(3, 6), big(-720));
        assert!(a.to_text().contains("154112"));
    }
}
