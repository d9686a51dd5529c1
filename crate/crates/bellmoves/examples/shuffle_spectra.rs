//! Exact eigenvalue verification for shuffle chains: the spectrum of each
//! transition matrix is the multiset of fixed-point counts divided by the
//! number of shuffles, certified by matching all |G| moments.
//!
//!     cargo run --release --example shuffle_spectra

use bellmoves::algebra::format_rat;
use bellmoves::shuffles::ShuffleFamily;
use bellmoves::spectra::verify_spectrum;
use bellmoves::structures::GroupFamily;

fn main() {
    let chains = [
        (GroupFamily::A, 3, 1, false),
        (GroupFamily::A, 3, 1, true),
        (GroupFamily::A, 4, 2, false),
        (GroupFamily::B, 2, 1, false),
        (GroupFamily::B, 2, 2, false),
        (GroupFamily::D, 3, 1, false),
        (GroupFamily::D, 3, 3, false),
        (GroupFamily::D, 3, 3, true),
    ];
    for (family, n, k, exclude) in chains {
        let chain = ShuffleFamily::new(family, n, k, exclude).unwrap();
        let report = verify_spectrum(&chain, 10_000).unwrap();
        let eigen: Vec<String> = report
            .predicted
            .iter()
            .map(|(v, m)| format!("{}^{m}", format_rat(v)))
            .collect();
        println!(
            "{family} n={n} k={k}{}: {} | spectrum {}",
            if exclude { " (identity excluded)" } else { "" },
            if report.verdict { "pass" } else { "FAIL" },
            eigen.join(" "),
        );
        assert!(report.verdict);
    }
    println!("\nall spectra certified by full moment comparison");
}
