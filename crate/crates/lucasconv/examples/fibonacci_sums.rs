//! Specializes the derived identities to the Fibonacci numbers and prints
//! the classical two-term formulas on {F_n, F_(n-1)}.

use lucasconv::engine::fib_basis_text;
use lucasconv::{derive_closed_form, reduce_to_fibonacci_basis, LucasParams, SeqTable};

fn main() {
    let fib = LucasParams::new(1, -1, 1).unwrap();
    let mut table = SeqTable::new(fib.clone());

    for order in 2..=6u32 {
        let cf = derive_closed_form(order);
        let (p0, p1) = reduce_to_fibonacci_basis(&cf, &fib).unwrap();
        println!("s_{order}(n) = {}", fib_basis_text(&p0, &p1, true));

        // spot check against a direct convolution at n = order + 3
        let n = order as u64 + 3;
        let direct = lucasconv::oracle::s_series_at(&fib, order, n);
        let via_formula = lucasconv::engine::eval_poly(&p0, n as i64)
            * num_rational::BigRational::from_integer(table.strided_u(n))
            + lucasconv::engine::eval_poly(&p1, n as i64)
                * num_rational::BigRational::from_integer(table.strided_u(n - 1));
        assert_eq!(via_formula, num_rational::BigRational::from_integer(direct));
        println!("  checked at n = {n}");
    }
}
