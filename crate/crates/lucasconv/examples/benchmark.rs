//! Compares wall time of the three evaluation routes for s_D(n): brute-force
//! composition enumeration, series convolution and the closed form.

use std::time::Instant;

use lucasconv::oracle::{s_enum, s_series_at, DEFAULT_ENUM_BUDGET};
use lucasconv::{derive_closed_form, evaluate_closed_form, LucasParams};

fn main() {
    let params = LucasParams::new(1, -1, 1).unwrap();
    let order = 4u32;
    let cf = derive_closed_form(order);

    println!("{:>4} {:>14} {:>14} {:>14}", "n", "enum (us)", "series (us)", "closed (us)");
    for n in [10u64, 15, 20, 25, 30] {
        let t = Instant::now();
        let a = s_enum(&params, order, n, DEFAULT_ENUM_BUDGET).unwrap();
        let enum_us = t.elapsed().as_micros();

        let t = Instant::now();
        let b = s_series_at(&params, order, n);
        let series_us = t.elapsed().as_micros();

        let t = Instant::now();
        let c = evaluate_closed_form(&cf, &params, n).unwrap();
        let closed_us = t.elapsed().as_micros();

        assert_eq!(a, b);
        assert_eq!(c.to_integer(), b);
        println!("{n:>4} {enum_us:>14} {series_us:>14} {closed_us:>14}");
    }
}
