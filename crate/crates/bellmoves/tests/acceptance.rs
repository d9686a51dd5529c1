//! Acceptance suite: runs every criterion and prints one pass/fail line
//! each. The process exits nonzero if any criterion fails, so `cargo test`
//! treats this target like any other test.
//!
//! The same checks are reachable from the command line via
//! `bellmoves suite --all`.

fn main() {
    let results = bellmoves::suite::run(None, None);
    let mut all_passed = true;
    for r in &results {
        println!("{}", r.line());
        all_passed &= r.passed;
    }
    let passed = results.iter().filter(|r| r.passed).count();
    println!("{passed}/{} criteria passed", results.len());
    if !all_passed {
        std::process::exit(1);
    }
}
