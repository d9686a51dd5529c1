//! Dobinski-type sums: each diagonal count is an infinite weighted series;
//! a finite partial sum with a rigorous tail bound below one half pins the
//! exact integer by rounding.
//!
//!     cargo run --release --example dobinski_rounding

use bellmoves::series::{dobinski, round_to_nearest, table, DobinskiVariant, Method};

fn main() {
    println!("{:<14} {:>3} {:>12} {:>14} {:>10}", "variant", "t", "rounds to", "table value", "bound");
    for variant in [
        DobinskiVariant::Bell,
        DobinskiVariant::BellPrime,
        DobinskiVariant::BellB,
        DobinskiVariant::BellBPrime,
    ] {
        let reference = table(variant.table_variant(), 12, 12, Method::Recurrence).unwrap();
        for t in [4, 8, 12] {
            let sum = dobinski(variant, t, 60).unwrap();
            let rounded = round_to_nearest(&sum.value);
            let expected = reference.diagonal(t);
            // render the bound's order of magnitude via its denominator size
            let digits = sum.bound.denom().to_string().len() as i64
                - sum.bound.numer().to_string().len() as i64;
            println!(
                "{:<14} {:>3} {:>12} {:>14} ~1e-{:<4}",
                format!("{variant:?}"),
                t,
                rounded.to_string(),
                expected.to_string(),
                digits
            );
            assert_eq!(&rounded, expected);
        }
    }
    println!("\nall partial sums round to the exact table values");
}
