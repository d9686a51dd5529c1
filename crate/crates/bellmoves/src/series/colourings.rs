//! Colourings of a row of boxes by paired colours, counted up to relabelling
//! of the pairs and swapping within each pair.

use crate::algebra::Int;
use num_traits::Zero;

/// Number of colourings of a `1 x t` row with colours from `n` unlabelled
/// pairs such that adjacent boxes never take colours from the same pair,
/// counted up to permuting the pairs and swapping the two colours within a
/// pair.
///
/// Enumeration is by canonical form: pairs are labelled in order of first
/// appearance, and within each pair the first-seen colour is side 0. Each
/// later use of an already-seen pair may take either side; a first use is
/// forced to side 0.
pub fn q_colourings(t: u64, n: u32) -> Int {
    assert!(t >= 1 && n >= 1, "q_colourings needs t >= 1 and n >= 1");
    fn rec(remaining: u64, last_pair: u32, used: u32, n: u32) -> Int {
        if remaining == 0 {
            return Int::from(1u32);
        }
        let mut total = Int::zero();
        for p in 1..=used {
            if p != last_pair {
                total += rec(remaining - 1, p, used, n) * Int::from(2u32);
            }
        }
        if used < n {
            total += rec(remaining - 1, used + 1, used + 1, n);
        }
        total
    }
    // box 1 takes pair 1, side 0
    rec(t - 1, 1, 1, n)
}
