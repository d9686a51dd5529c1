//! The explicit bijection: every (marked) set partition of the time set
//! corresponds to a unique identity shuffle sequence whose lift times are
//! the blocks, with marks recording which lifts flip the card.
//!
//!     cargo run --release --example shuffle_bijection

use bellmoves::shuffles::{partition_to_sequence, sequence_to_partition};
use bellmoves::structures::{marked_partitions, set_partitions, ForcedMarkRule, GroupFamily, SpacingRule};

fn main() {
    let n = 3;
    println!("type A, deck of {n}: partitions of the four lift times");
    for p in set_partitions(4, n, SpacingRule::None) {
        let seq = partition_to_sequence(&p, GroupFamily::A, n).unwrap();
        let names: Vec<String> = seq.steps.iter().map(|&s| seq.step_name(s)).collect();
        println!("  {:<14} -> ({})", p.to_string(), names.join(", "));
        assert_eq!(sequence_to_partition(&seq).unwrap(), p);
    }

    println!();
    println!("type B, deck of 2: marks become flips");
    for p in marked_partitions(3, 2, ForcedMarkRule::None) {
        let seq = partition_to_sequence(&p, GroupFamily::B, 2).unwrap();
        let names: Vec<String> = seq.steps.iter().map(|&s| seq.step_name(s)).collect();
        println!("  {:<14} -> ({})", p.to_string(), names.join(", "));
        assert_eq!(sequence_to_partition(&seq).unwrap(), p);
    }

    println!();
    println!("every line round-tripped back to its partition");
}
