//! Box-move graphs up close: targets of single moves, diagonal
//! multiplicities, and the JSON export of a small graph.
//!
//!     cargo run --release --example move_graphs

use bellmoves::moves::{double_move_targets, move_targets, partition_move_graph};
use bellmoves::structures::{DoublePartition, Partition};

fn main() {
    let shape: Partition = "(2,1)".parse().unwrap();
    println!("moves out of {shape}:");
    for target in move_targets(&shape, false) {
        println!("  -> {target}");
    }
    println!("without the exceptional self-loop:");
    for target in move_targets(&shape, true) {
        println!("  -> {target}");
    }

    println!();
    let d = DoublePartition::row_first(2);
    println!("double-moves out of {d}:");
    for target in double_move_targets(&d, false) {
        println!("  -> {target}");
    }

    println!();
    println!("adjacency of the move graph on partitions of 3, as JSON:");
    println!("{}", partition_move_graph(3, false).to_json());
}
