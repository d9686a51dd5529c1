//! Why matching insertion shapes step by step cannot biject shuffle
//! sequences with move paths: a five-card shape trajectory of length eight
//! that a move path follows but no shuffle sequence realizes.
//!
//!     cargo run --release --example rsk_obstruction

use bellmoves::rsk::{bijection_check, search_trajectory, ShapeTrajectory};

fn main() {
    let trajectory = ShapeTrajectory::unreachable_example();
    println!("trajectory: {trajectory}");
    let sequences = search_trajectory(5, &trajectory).unwrap();
    println!("shuffle sequences realizing it: {}", sequences.len());
    println!("move paths along it:            {}", trajectory.move_path_count());
    assert!(sequences.is_empty());

    println!();
    for t in [6, 7, 8] {
        let report = bijection_check(5, t).unwrap();
        println!(
            "n=5 t={t}: {} trajectories, {} mismatches, marginals {} vs {}",
            report.trajectories,
            report.mismatches.len(),
            report.total_sequences,
            report.total_move_paths,
        );
        for m in &report.mismatches {
            println!("    {}: {} sequences, {} move paths", m.trajectory, m.sequences, m.move_paths);
        }
    }
    println!();
    println!("shapes agree in total but not trajectory by trajectory once t = 8");
}
