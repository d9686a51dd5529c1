//! Integration tests of the command-line surface: argument handling, output
//! formats and exit codes.

use bellmoves::cli::run_from;

fn run(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["bellmoves".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let code = run_from(argv, &mut out);
    (code, String::from_utf8(out).expect("utf8 output"))
}

#[test]
fn count_matches_known_values() {
    let (code, out) = run(&["count", "--variant", "Bprime", "--t", "4", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "4");

    let (code, out) = run(&["count", "--variant", "Sdagger", "--t", "4", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "8");

    let (code, out) = run(&["count", "--variant", "Mddagger", "--t", "5", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "32");

    let (code, out) = run(&["count", "--variant", "stir", "--t", "4", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "7");
}

#[test]
fn unknown_variant_is_a_usage_error() {
    let (code, out) = run(&["count", "--variant", "Bogus", "--t", "1", "--n", "1"]);
    assert_eq!(code, 2);
    assert!(out.contains("unknown count variant"));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let (code, _) = run(&["count", "--no-such-flag"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn table_formats() {
    let (code, out) =
        run(&["table", "--variant", "stir", "--t-max", "3", "--n-max", "2", "--csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("t,n,value\n0,0,1\n"));
    assert!(out.contains("3,2,3"));

    let (code, out) =
        run(&["table", "--variant", "stir", "--t-max", "3", "--n-max", "2", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = out.trim().parse().unwrap();
    assert_eq!(v["rows"][3][2], "3");

    // a method that cannot fill the variant is rejected
    let (code, out) = run(&[
        "table",
        "--variant",
        "Mddagger",
        "--method",
        "enumeration",
        "--t-max",
        "2",
        "--n-max",
        "2",
    ]);
    assert_eq!(code, 2);
    assert!(out.contains("cannot be filled"));
}

#[test]
fn verify_single_identity() {
    let (code, out) = run(&["verify", "--identity", "bernhart", "--t-max", "5", "--n-max", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("pass bernhart"));

    let (code, out) = run(&["verify", "--identity", "bernhart", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = out.trim().parse().unwrap();
    assert_eq!(v["name"], "bernhart");
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);

    let (code, _) = run(&["verify", "--identity", "no-such-identity"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_all_identities() {
    let (code, out) = run(&["verify", "--all", "--t-max", "6", "--n-max", "4"]);
    assert_eq!(code, 0, "output:\n{out}");
    assert!(out.lines().count() >= 15);
}

#[test]
fn spectrum_json_report() {
    let (code, out) =
        run(&["spectrum", "--family", "A", "--n", "3", "--k", "1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = out.trim().parse().unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["predicted"][0][0], "1");
    assert_eq!(v["moments_checked"], 6);

    // resource cap surfaces as a usage error
    let (code, out) = run(&[
        "spectrum",
        "--family",
        "B",
        "--n",
        "5",
        "--max-group-order",
        "100",
    ]);
    assert_eq!(code, 2);
    assert!(out.contains("exceeds"));
}

#[test]
fn rsk_search_reports_the_obstruction() {
    let trajectory = "(5),(4,1),(3,2),(4,1),(3,2),(2,2,1),(3,2),(4,1),(5)";
    let (code, out) = run(&["rsk", "search", "--n", "5", "--trajectory", trajectory]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next().unwrap(), "0 sequences");

    let (code, out) =
        run(&["rsk", "search", "--n", "2", "--trajectory", "(2),(1,1),(2)", "--list", "--tree-json"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("1 sequences"));
    assert!(out.contains("[s2,s2]"));
    let tree_line = out.lines().last().unwrap();
    let v: serde_json::Value = tree_line.parse().unwrap();
    assert_eq!(v["deck"], "[1,2]");
}

#[test]
fn rsk_shape_and_check() {
    let (code, out) = run(&["rsk", "shape", "--perm", "[2,1,3]"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "(2,1)");

    let (code, out) = run(&["rsk", "check", "--n", "3", "--t", "3", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = out.trim().parse().unwrap();
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
    assert_eq!(v["total_sequences"], v["total_move_paths"]);
}

#[test]
fn series_commands() {
    let (code, out) = run(&["series", "egf", "--variant", "Bprime", "--order", "8"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("pass"));

    let (code, out) = run(&["series", "ogf", "--variant", "stirdagger", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("pass"));

    let (code, out) = run(&["series", "dobinski", "--variant", "B", "--t", "5", "--terms", "40"]);
    assert_eq!(code, 0);
    assert!(out.contains("rounds 52"));

    let (code, out) = run(&["series", "lambertw", "--x", "2.718281828459045"]);
    assert_eq!(code, 0);
    let w: f64 = out.trim().parse().unwrap();
    assert!((w - 1.0).abs() < 1e-12);

    let (code, out) = run(&["series", "qcolour", "--t", "3", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "2");

    let (code, out) = run(&["series", "oeis"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("pass")).count(), 6);
}

#[test]
fn suite_single_criterion() {
    std::env::set_var("BELLMOVES_THREADS", "1");
    let (code, out) = run(&["suite", "--only", "4"]);
    assert_eq!(code, 0, "output:\n{out}");
    assert!(out.contains("PASS [ 4]"));
    assert!(out.trim_end().ends_with("1/1 criteria passed"));

    let (code, _) = run(&["suite", "--only", "99"]);
    assert_eq!(code, 2);
}
