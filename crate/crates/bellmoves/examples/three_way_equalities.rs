//! The headline equalities in types A and B: set-partition counts, shuffle
//! sequence counts and move-path counts agree cell by cell, each computed
//! by its own algorithm.
//!
//!     cargo run --release --example three_way_equalities

use bellmoves::series::{table, Method, Variant};

fn show(variant: Variant, t_max: u64, n_max: u32) {
    let enumerated = table(variant, t_max, n_max, Method::Enumeration).unwrap();
    let shuffled = table(variant, t_max, n_max, Method::ShuffleDp).unwrap();
    let moved = table(variant, t_max, n_max, Method::TransferMatrix).unwrap();

    println!("{}: partitions = shuffle sequences = move paths", variant.name());
    print!("{:>4}", "t\\n");
    for n in 0..=n_max {
        print!(" {n:>8}");
    }
    println!();
    for t in 0..=t_max {
        print!("{t:>4}");
        for n in 0..=n_max {
            let b = enumerated.get(t, n);
            assert_eq!(b, shuffled.get(t, n), "shuffle count differs at ({t},{n})");
            assert_eq!(b, moved.get(t, n), "move count differs at ({t},{n})");
            print!(" {:>8}", b.to_string());
        }
        println!();
    }
    println!();
}

fn main() {
    show(Variant::Bell, 7, 5);
    show(Variant::BellPrime, 7, 5);
    show(Variant::BellB, 6, 3);
    show(Variant::BellBPrime, 6, 3);
    println!("every cell verified three ways");
}
