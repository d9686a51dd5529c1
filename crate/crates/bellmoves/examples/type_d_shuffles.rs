//! Type D: cheating random-to-top shuffles versus two-corner move counts.
//! They agree for decks of two or more cards, and split in the documented
//! way on the one-card deck, where the group is trivial but the move graph
//! is not.
//!
//!     cargo run --release --example type_d_shuffles

use bellmoves::moves::d_move_count;
use bellmoves::shuffles::{count_identity_sequences, ShuffleFamily};
use bellmoves::structures::GroupFamily;

fn main() {
    for n in 2..=3usize {
        println!("n = {n}: cheating shuffle sequences vs move paths");
        println!("{:>3} {:>10} {:>10} {:>10} {:>10}", "t", "S", "M", "S'", "M'");
        let plain = ShuffleFamily::random_to_top(GroupFamily::D, n, false).unwrap();
        let primed = ShuffleFamily::random_to_top(GroupFamily::D, n, true).unwrap();
        for t in 0..=6u64 {
            let s = count_identity_sequences(&plain, t).unwrap();
            let m = d_move_count(n as u32, t, false).unwrap();
            let sp = count_identity_sequences(&primed, t).unwrap();
            let mp = d_move_count(n as u32, t, true).unwrap();
            assert_eq!(s, m);
            assert_eq!(sp, mp);
            println!("{t:>3} {s:>10} {m:>10} {sp:>10} {mp:>10}");
        }
        println!();
    }

    println!("n = 1: the counts must differ");
    println!("{:>3} {:>8} {:>8}", "t", "S", "M");
    let one = ShuffleFamily::random_to_top(GroupFamily::D, 1, false).unwrap();
    for t in 0..=10u64 {
        let s = count_identity_sequences(&one, t).unwrap();
        let m = d_move_count(1, t, false).unwrap();
        println!("{t:>3} {s:>8} {m:>8}");
    }
    println!("sequences stay at 1, move paths double every step");
}
