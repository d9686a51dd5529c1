//! Hermetic OEIS prefix checks, plus the row-colouring count that explains
//! one of the matches: colourings by n unlabelled colour pairs equal the
//! marked partition counts one parameter down.
//!
//!     cargo run --release --example oeis_prefixes

use bellmoves::series::{oeis_check, q_colourings, table, Method, Variant};

fn main() {
    for check in oeis_check() {
        println!("{} {}", if check.matches() { "pass" } else { "FAIL" }, check.sequence);
        println!("     {}", check.description);
        let shown: Vec<String> = check.computed.iter().map(|v| v.to_string()).collect();
        println!("     {}", shown.join(", "));
        assert!(check.matches());
    }

    println!();
    println!("row colourings Q(1,t)(n) against marked counts B_B_(t-1)(n-1):");
    let reference = table(Variant::BellB, 5, 3, Method::Recurrence).unwrap();
    for n in 1..=4u32 {
        let row: Vec<String> = (1..=6u64).map(|t| q_colourings(t, n).to_string()).collect();
        println!("  n={n}: {}", row.join(", "));
        for t in 1..=6u64 {
            assert_eq!(&q_colourings(t, n), reference.get(t - 1, n - 1));
        }
    }
    println!("colouring counts equal the marked table shifted by one");
}
