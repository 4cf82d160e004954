//! Builds both coefficient triangles and prints them, then shows that the
//! recurrence and the closed form agree entry by entry.

use lucasconv::triangles::{a_closed, a_rec, b_closed, b_rec, TriangleKind, TriangleTable};

fn main() {
    let a = TriangleTable::build(TriangleKind::A, 6, 6);
    println!("triangle a(l,d):\n{}", a.to_text());

    let b = TriangleTable::build(TriangleKind::B, 6, 6);
    println!("triangle b(l,d):\n{}", b.to_text());

    let mut checked = 0u32;
    for l in 0..=20u64 {
        for d in 0..=20u64 {
            assert_eq!(a_rec(l, d), a_closed(l, d));
            checked += 1;
            if l >= 1 && d >= 1 {
                assert_eq!(b_rec(l, d), b_closed(l, d));
                checked += 1;
            }
        }
    }
    println!("recurrence == closed form for {checked} entries");
}
