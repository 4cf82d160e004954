//! Derives the closed-form identity for s_D(n) symbolically and prints it
//! in all three output formats.

use lucasconv::engine::{emit, EmitFormat};
use lucasconv::derive_closed_form;

fn main() {
    for order in 2..=4u32 {
        let cf = derive_closed_form(order);
        println!("=== D = {order}, text ===");
        println!("{}", emit(&cf, EmitFormat::Text).unwrap());
        println!("=== D = {order}, latex ===");
        println!("{}", emit(&cf, EmitFormat::Latex).unwrap());
        println!();
    }

    let cf = derive_closed_form(5);
    println!("=== D = 5, json ===");
    println!("{}", emit(&cf, EmitFormat::Json).unwrap());
}
