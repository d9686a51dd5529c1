//! Generating functions against tables, and the identity list: EGFs for the
//! diagonal sequences, OGFs for fixed-block columns, and every numeric
//! identity the crate knows, checked exactly.
//!
//!     cargo run --release --example generating_functions

use bellmoves::series::{all_identities, egf_check, ogf_check, verify_identity, Variant};

fn main() {
    println!("exponential generating functions, order 12:");
    for variant in [Variant::Bell, Variant::BellPrime, Variant::BellB, Variant::BellBPrime] {
        let r = egf_check(variant, 12).unwrap();
        println!("  {} {}", if r.passed() { "pass" } else { "FAIL" }, r.what);
        assert!(r.passed());
    }

    println!("\nordinary generating functions, order 12:");
    for variant in [Variant::Stir, Variant::StirPrime, Variant::StirB, Variant::StirBPrime] {
        let n_lo = if matches!(variant, Variant::StirPrime | Variant::StirBPrime) { 2 } else { 0 };
        for n in n_lo..=5 {
            let r = ogf_check(variant, n, 12).unwrap();
            assert!(r.passed(), "{}", r.what);
        }
        println!("  pass ogf {} for all valid n <= 5", variant.name());
    }

    println!("\nidentities over t <= 10, n <= 6:");
    for name in all_identities() {
        let r = verify_identity(name, 10, 6);
        println!("  {} {:<30} ({})", if r.passed() { "pass" } else { "FAIL" }, r.name, r.range);
        assert!(r.passed(), "{:?}", r.failures);
    }
}
