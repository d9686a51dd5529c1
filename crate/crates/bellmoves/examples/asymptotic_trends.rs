//! Leading-term asymptotics checked as monotone trends: the exact counts,
//! divided by their predicted leading terms, approach 1 with strictly
//! shrinking deviation along the sampled parameter lists.
//!
//!     cargo run --release --example asymptotic_trends

use bellmoves::series::{lambert_w, AsymptoticReport};

fn main() {
    let report = AsymptoticReport::standard().unwrap();
    print!("{}", report.render());
    assert!(report.strictly_decreasing());
    println!("deviations strictly decrease along every list");

    println!();
    println!("Lambert W spot checks (w e^w = x):");
    for x in [1.0, std::f64::consts::E, 10.0, 60.0] {
        let w = lambert_w(x).unwrap();
        println!("  W({x:<6}) = {w:.12}   residual {:.2e}", (w * w.exp() - x).abs());
    }
}
