//! Prints Lucas-sequence values U_n(p,q) and V_n(p,q) for a few parameter
//! choices, including the strided subsequence U_{nk}.

use lucasconv::{lucas_u, lucas_v, LucasParams, SeqTable};

fn main() {
    for (label, p, q) in [("Fibonacci/Lucas", 1i64, -1i64), ("Pell", 2, -1)] {
        let params = LucasParams::new(p, q, 1).unwrap();
        println!("{label} (p={p}, q={q}):");
        println!("{:>4} {:>12} {:>12}", "n", "U_n", "V_n");
        for n in 0..=10u64 {
            println!(
                "{:>4} {:>12} {:>12}",
                n,
                lucas_u(&params, n),
                lucas_v(&params, n)
            );
        }
        println!();
    }

    // the even-indexed Fibonacci numbers via the stride k = 2
    let params = LucasParams::new(1, -1, 2).unwrap();
    let mut table = SeqTable::new(params);
    let strided: Vec<String> = (0..=8u64).map(|n| table.strided_u(n).to_string()).collect();
    println!("F_(2n) for n = 0..8: {}", strided.join(", "));
}
