//! Verifies derived closed forms against the independent series oracle over
//! a parameter matrix and a range of n.

use lucasconv::{derive_closed_form, verify_closed_form, LucasParams};

fn main() {
    let matrix = [(1i64, -1i64, 1u32), (2, -1, 1), (1, -1, 2), (3, 2, 1), (3, 2, 2)];
    for order in 2..=6u32 {
        let cf = derive_closed_form(order);
        for (p, q, k) in matrix {
            let params = LucasParams::new(p, q, k).unwrap();
            let report = verify_closed_form(&cf, &params, order as u64, 40).unwrap();
            println!(
                "D={order} p={p:>2} q={q:>2} k={k}: n={}..40 {}",
                order,
                if report.pass { "PASS" } else { "FAIL" }
            );
            assert!(report.pass);
        }
    }
}
