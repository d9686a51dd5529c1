//! The restriction chain on partitions of n reproduces, exactly, the
//! distribution of the insertion shape of a product of uniform
//! random-to-top shuffles.
//!
//!     cargo run --release --example fulman_chain

use bellmoves::algebra::format_rat;
use bellmoves::spectra::fulman_vs_rsk;

fn main() {
    for (n, t) in [(2, 1), (3, 2), (4, 4), (4, 6)] {
        let d = fulman_vs_rsk(n, t).unwrap();
        println!("n={n}, t={t}:");
        for (shape, p) in &d.chain {
            let q = &d.shuffle[shape];
            println!("  {:<10} chain {:<10} shapes {}", shape.to_string(), format_rat(p), format_rat(q));
        }
        assert!(d.agree);
        println!("  distributions agree exactly\n");
    }
}
