//! Exercises the truncated-series layer: the generating function of the
//! strided subsequence and the differential identity behind the engine.

use lucasconv::series::{check_generating_function, check_proposition, fk_series};
use lucasconv::LucasParams;

fn main() {
    let params = LucasParams::new(1, -1, 1).unwrap();

    let f = fk_series(&params, 10);
    let coeffs: Vec<String> = (0..10).map(|m| f.coeff(m).unwrap().to_string()).collect();
    println!("F_k(x) coefficients (Fibonacci, k=1): {}", coeffs.join(", "));
    println!("generating function check: {}", check_generating_function(&params, 30));

    for (p, q, k) in [(1i64, -1i64, 1u32), (2, -1, 1), (3, 2, 2)] {
        let params = LucasParams::new(p, q, k).unwrap();
        for d in 1..=5u32 {
            let ok = check_proposition(&params, d, 30).unwrap();
            println!("differential identity d={d} at (p={p}, q={q}, k={k}): {ok}");
            assert!(ok);
        }
    }
}
