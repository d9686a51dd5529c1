//! The acceptance checks: every headline equality, eigenvalue theorem,
//! identity family, bound and trend, each runnable on its own and all
//! together. `bellmoves suite --all` and the `acceptance` integration test
//! both drive [`run`].
//!
//! Independent suite items may run on worker threads; results are always
//! reported in declaration order, and the `BELLMOVES_THREADS` environment
//! variable caps the parallelism.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num_traits::{One, Signed};

use crate::algebra::{pow2, rat_from_int, Int, Rat};
use crate::moves::{d_move_count, double_move_graph, partition_move_graph};
use crate::rsk::{bijection_check, search_trajectory, verify_move_step, ShapeTrajectory};
use crate::series::{
    dobinski, egf_check, ogf_check, oeis_check, q_colourings, round_to_nearest, table,
    verify_identity, AsymptoticReport, DobinskiVariant, IdentityName, Method, Variant,
};
use crate::shuffles::{count_identity_sequences, ShuffleFamily};
use crate::spectra::{fulman_vs_rsk, perm_char, verify_spectrum};
use crate::structures::{
    enumerate_group, marked_partitions, set_partitions, DoublePartition, ForcedMarkRule,
    GroupFamily, Partition, SpacingRule,
};
use crate::shuffles::{partition_to_sequence, sequence_to_partition};

/// Outcome of one suite item.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} [{:>2}] {:<28} {} ({:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.seconds
        )
    }
}

struct Criterion {
    id: u32,
    name: &'static str,
    run: fn() -> (bool, String),
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, name: "three-way-equality-type-a", run: three_way_type_a },
        Criterion { id: 2, name: "three-way-equality-type-b", run: three_way_type_b },
        Criterion { id: 3, name: "type-d-agreement-and-failure", run: type_d },
        Criterion { id: 4, name: "bijection-round-trip", run: bijection_round_trip },
        Criterion { id: 5, name: "spectrum-theorems", run: spectrum_theorems },
        Criterion { id: 6, name: "character-sum-oracle", run: character_sums },
        Criterion { id: 7, name: "identity-suite", run: identity_suite },
        Criterion { id: 8, name: "dobinski-rounding", run: dobinski_rounding },
        Criterion { id: 9, name: "rsk-obstruction", run: rsk_obstruction },
        Criterion { id: 10, name: "fulman-vs-rsk-shapes", run: fulman_shapes },
        Criterion { id: 11, name: "colourings-and-oeis", run: colourings_and_oeis },
        Criterion { id: 12, name: "asymptotic-trend", run: asymptotic_trend },
    ]
}

pub fn criterion_ids() -> Vec<u32> {
    criteria().iter().map(|c| c.id).collect()
}

/// Runs the selected criteria (all of them for `None`), in parallel up to
/// the thread cap, returning results in declaration order.
pub fn run(only: Option<u32>, threads: Option<usize>) -> Vec<CriterionResult> {
    let items: Vec<Criterion> =
        criteria().into_iter().filter(|c| only.is_none_or(|id| id == c.id)).collect();
    let workers = thread_count(threads, items.len());
    let results: Mutex<Vec<Option<CriterionResult>>> = Mutex::new(vec![None; items.len()]);
    let next = AtomicUsize::new(0);

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let item = &items[i];
                let start = Instant::now();
                let (passed, detail) = (item.run)();
                let result = CriterionResult {
                    id: item.id,
                    name: item.name,
                    passed,
                    detail,
                    seconds: start.elapsed().as_secs_f64(),
                };
                results.lock().expect("no panics while holding the lock")[i] = Some(result);
            });
        }
    });

    results
        .into_inner()
        .expect("all workers joined")
        .into_iter()
        .map(|r| r.expect("every item ran"))
        .collect()
}

fn thread_count(requested: Option<usize>, items: usize) -> usize {
    let cap = std::env::var("BELLMOVES_THREADS").ok().and_then(|v| v.parse::<usize>().ok());
    let hardware = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    requested.or(cap).unwrap_or(hardware).clamp(1, items.max(1))
}

// ------------------------------------------------------------------ helpers

fn check(failures: &mut Vec<String>, condition: bool, label: impl FnOnce() -> String) {
    if !condition {
        failures.push(label());
    }
}

fn summarize(failures: Vec<String>, ok_detail: String) -> (bool, String) {
    if failures.is_empty() {
        (true, ok_detail)
    } else {
        let shown = failures.iter().take(3).cloned().collect::<Vec<_>>().join("; ");
        (false, format!("{} failures: {shown}", failures.len()))
    }
}

// ---------------------------------------------------------------- criteria

/// Counts agree across enumeration, shuffle walks and move paths in type A,
/// plain and primed, over `t <= 7`, `n <= 5`.
fn three_way_type_a() -> (bool, String) {
    let mut failures = Vec::new();
    let mut cells = 0;
    for (variant, tag) in [(Variant::Bell, "plain"), (Variant::BellPrime, "primed")] {
        let enumerated = table(variant, 7, 5, Method::Enumeration).expect("valid");
        let shuffled = table(variant, 7, 5, Method::ShuffleDp).expect("valid");
        let moved = table(variant, 7, 5, Method::TransferMatrix).expect("valid");
        for t in 0..=7 {
            for n in 0..=5 {
                cells += 1;
                let b = enumerated.get(t, n);
                check(&mut failures, b == shuffled.get(t, n) && b == moved.get(t, n), || {
                    format!("{tag} t={t} n={n}")
                });
            }
        }
    }
    summarize(failures, format!("{cells} cells, three algorithms each"))
}

/// The marked analogues agree over `t <= 6`, `n <= 3`.
fn three_way_type_b() -> (bool, String) {
    let mut failures = Vec::new();
    let mut cells = 0;
    for (variant, tag) in [(Variant::BellB, "plain"), (Variant::BellBPrime, "primed")] {
        let enumerated = table(variant, 6, 3, Method::Enumeration).expect("valid");
        let shuffled = table(variant, 6, 3, Method::ShuffleDp).expect("valid");
        let moved = table(variant, 6, 3, Method::TransferMatrix).expect("valid");
        for t in 0..=6 {
            for n in 0..=3 {
                cells += 1;
                let b = enumerated.get(t, n);
                check(&mut failures, b == shuffled.get(t, n) && b == moved.get(t, n), || {
                    format!("{tag} t={t} n={n}")
                });
            }
        }
    }
    summarize(failures, format!("{cells} cells, three algorithms each"))
}

/// Cheating shuffles equal the two-corner move counts for `n >= 2`, while
/// the one-card deck separates them exactly as stated.
fn type_d() -> (bool, String) {
    let mut failures = Vec::new();
    for n in 2..=3usize {
        for exclude in [false, true] {
            let family = ShuffleFamily::random_to_top(GroupFamily::D, n, exclude).expect("valid");
            for t in 0..=6u64 {
                let s = count_identity_sequences(&family, t).expect("within cap");
                let m = d_move_count(n as u32, t, exclude).expect("n >= 1");
                check(&mut failures, s == m, || {
                    format!("n={n} t={t} excl={exclude}: {s} != {m}")
                });
            }
        }
    }
    // n = 1: the counts must disagree in the documented way
    let family = ShuffleFamily::random_to_top(GroupFamily::D, 1, false).expect("valid");
    let primed = ShuffleFamily::random_to_top(GroupFamily::D, 1, true).expect("valid");
    for t in 0..=10u64 {
        let s = count_identity_sequences(&family, t).expect("tiny");
        check(&mut failures, s == Int::one(), || format!("S_D_{t}(1) = {s} != 1"));
        let m = d_move_count(1, t, false).expect("n >= 1");
        check(&mut failures, m == pow2(t), || format!("M_D_{t}(1) = {m} != 2^{t}"));
        let sp = count_identity_sequences(&primed, t).expect("tiny");
        check(&mut failures, sp == Int::from((t == 0) as u64), || {
            format!("S_D'_{t}(1) = {sp}")
        });
        let mp = d_move_count(1, t, true).expect("n >= 1");
        check(&mut failures, mp == Int::one(), || format!("M_D'_{t}(1) = {mp} != 1"));
    }
    summarize(failures, "n=2,3 agree; n=1 splits as 1 vs 2^t".into())
}

/// The partition-to-sequence map inverts on every object, types A and B.
fn bijection_round_trip() -> (bool, String) {
    let mut failures = Vec::new();
    let mut objects = 0usize;
    for n in 1..=4usize {
        for t in 0..=6usize {
            for p in set_partitions(t, n, SpacingRule::None) {
                objects += 1;
                match partition_to_sequence(&p, GroupFamily::A, n) {
                    Ok(seq) => {
                        check(
                            &mut failures,
                            sequence_to_partition(&seq).ok().as_ref() == Some(&p),
                            || format!("A n={n} t={t} {p}"),
                        );
                    }
                    Err(e) => failures.push(format!("A n={n} t={t} {p}: {e}")),
                }
            }
            for p in marked_partitions(t, n, ForcedMarkRule::None) {
                objects += 1;
                match partition_to_sequence(&p, GroupFamily::B, n) {
                    Ok(seq) => {
                        check(
                            &mut failures,
                            sequence_to_partition(&seq).ok().as_ref() == Some(&p),
                            || format!("B n={n} t={t} {p}"),
                        );
                    }
                    Err(e) => failures.push(format!("B n={n} t={t} {p}: {e}")),
                }
            }
        }
    }
    summarize(failures, format!("{objects} round trips"))
}

/// Eigenvalue multisets certified by full moment comparison, for the plain
/// and identity-excluded chains of every stated family.
fn spectrum_theorems() -> (bool, String) {
    let mut failures = Vec::new();
    let mut chains = 0;
    let mut cases: Vec<(GroupFamily, usize, usize)> = Vec::new();
    for n in 1..=5usize {
        for k in [1, 2, n] {
            if k <= n {
                cases.push((GroupFamily::A, n, k));
            }
        }
    }
    for n in 1..=3usize {
        for k in [1, n] {
            cases.push((GroupFamily::B, n, k));
        }
    }
    for n in 2..=4usize {
        for k in [1, n] {
            cases.push((GroupFamily::D, n, k));
        }
    }
    cases.dedup();
    for (family, n, k) in cases {
        for exclude in [false, true] {
            let chain = ShuffleFamily::new(family, n, k, exclude).expect("valid");
            if exclude && chain.generators().is_empty() {
                // the lone type A k = n shuffle is the identity, so there
                // is no identity-excluded chain to test
                continue;
            }
            chains += 1;
            match verify_spectrum(&chain, 10_000) {
                Ok(report) => check(&mut failures, report.verdict, || {
                    format!("{family} n={n} k={k} excl={exclude}")
                }),
                Err(e) => failures.push(format!("{family} n={n} k={k} excl={exclude}: {e}")),
            }
        }
    }
    summarize(failures, format!("{chains} chains, all moments matched"))
}

/// Move counts against character sums: `M_t(n) |G| = sum fix(g)^t` with the
/// fixed-point counts of each type's one-box model, plain and primed.
fn character_sums() -> (bool, String) {
    let mut failures = Vec::new();
    let mut identities = 0;
    // type A over S_n
    for n in 1..=6usize {
        let elements = enumerate_group(GroupFamily::A, n).expect("n >= 1");
        let order = Int::from(elements.len());
        let fixes: Vec<Int> = elements
            .iter()
            .map(|g| perm_char(GroupFamily::A, n, 1, g).expect("member"))
            .collect();
        let graph_plain = partition_move_graph(n as u32, false);
        let graph_primed = partition_move_graph(n as u32, true);
        let row = Partition::row(n as u32);
        for t in 0..=8u64 {
            identities += 2;
            let m = graph_plain.path_count(&row, &row, t).expect("state known");
            let sum: Int = fixes.iter().map(|f| f.pow(t as u32)).sum();
            check(&mut failures, m * &order == sum, || format!("A plain n={n} t={t}"));
            let mp = graph_primed.path_count(&row, &row, t).expect("state known");
            let sum_primed: Int = fixes.iter().map(|f| (f - Int::one()).pow(t as u32)).sum();
            check(&mut failures, mp * &order == sum_primed, || format!("A primed n={n} t={t}"));
        }
    }
    // types B and D over the signed groups
    for family in [GroupFamily::B, GroupFamily::D] {
        for n in 1..=4usize {
            let elements = enumerate_group(family, n).expect("n >= 1");
            let order = Int::from(elements.len());
            let fixes: Vec<Int> =
                elements.iter().map(|g| perm_char(family, n, 1, g).expect("member")).collect();
            let start = DoublePartition::row_first(n as u32);
            let swapped = DoublePartition::new(Partition::empty(), Partition::row(n as u32));
            for primed in [false, true] {
                let graph = double_move_graph(n as u32, primed);
                for t in 0..=8u64 {
                    identities += 1;
                    let m = match family {
                        GroupFamily::B => graph.path_count(&start, &start, t).expect("state"),
                        GroupFamily::D => {
                            graph.path_count(&start, &start, t).expect("state")
                                + graph.path_count(&start, &swapped, t).expect("state")
                        }
                        GroupFamily::A => unreachable!(),
                    };
                    let offset = if primed { Int::one() } else { Int::from(0u32) };
                    let sum: Int = fixes.iter().map(|f| (f - &offset).pow(t as u32)).sum();
                    check(&mut failures, m * &order == sum, || {
                        format!("{family} primed={primed} n={n} t={t}")
                    });
                }
            }
        }
    }
    summarize(failures, format!("{identities} character-sum identities"))
}

/// Every stated identity, closed form, generating function and recurrence,
/// exactly, over the stated ranges.
fn identity_suite() -> (bool, String) {
    let mut failures = Vec::new();
    let mut checks = 0;
    for name in [
        IdentityName::Bernhart,
        IdentityName::SpacedStirling,
        IdentityName::BellInversion,
        IdentityName::BlocksMinSizeTwo,
        IdentityName::MarkedBernhart,
        IdentityName::MarkedSpacedStirling,
        IdentityName::MarkedInversion,
        IdentityName::MarkedBlocksMinSizeTwo,
        IdentityName::HalfExpAlternating,
        IdentityName::StirPrimeRecurrence,
        IdentityName::StirDaggerRecurrence,
        IdentityName::StirDaggerPrimeRecurrence,
        IdentityName::StirDaggerScaling,
    ] {
        checks += 1;
        let report = verify_identity(name, 10, 6);
        check(&mut failures, report.passed(), || {
            format!("{}: {}", report.name, report.failures.first().cloned().unwrap_or_default())
        });
    }
    // closed forms against the recurrence tables, t <= 12
    for variant in [Variant::Stir, Variant::StirPrime, Variant::StirB, Variant::StirBPrime] {
        checks += 1;
        let closed = table(variant, 12, 6, Method::ClosedForm).expect("valid");
        let recurrence = table(variant, 12, 6, Method::Recurrence).expect("valid");
        let agree = (0..=12u64)
            .all(|t| (0..=6u32).all(|n| closed.get(t, n) == recurrence.get(t, n)));
        check(&mut failures, agree, || format!("closed form vs table for {}", variant.name()));
    }
    // generating functions against the tables
    for variant in [Variant::Bell, Variant::BellPrime, Variant::BellB, Variant::BellBPrime] {
        checks += 1;
        match egf_check(variant, 12) {
            Ok(r) => check(&mut failures, r.passed(), || format!("{} mismatch", r.what)),
            Err(e) => failures.push(format!("egf {}: {e}", variant.name())),
        }
    }
    for variant in [Variant::Stir, Variant::StirPrime, Variant::StirB, Variant::StirBPrime] {
        let n_lo = if matches!(variant, Variant::StirPrime | Variant::StirBPrime) { 2 } else { 0 };
        for n in n_lo..=6u32 {
            checks += 1;
            match ogf_check(variant, n, 12) {
                Ok(r) => check(&mut failures, r.passed(), || format!("{} mismatch", r.what)),
                Err(e) => failures.push(format!("ogf {} n={n}: {e}", variant.name())),
            }
        }
    }
    summarize(failures, format!("{checks} identity families"))
}

/// The four Dobinski-type sums round to the exact integers for `t <= 12`
/// with 60 terms and a proven bound below one half.
fn dobinski_rounding() -> (bool, String) {
    let mut failures = Vec::new();
    let half = Rat::new(Int::one(), Int::from(2));
    for variant in [
        DobinskiVariant::Bell,
        DobinskiVariant::BellPrime,
        DobinskiVariant::BellB,
        DobinskiVariant::BellBPrime,
    ] {
        let reference = table(variant.table_variant(), 12, 12, Method::Recurrence).expect("valid");
        for t in 0..=12u64 {
            match dobinski(variant, t, 60) {
                Ok(sum) => {
                    check(&mut failures, sum.bound < half, || {
                        format!("{variant:?} t={t}: bound not below 1/2")
                    });
                    let expected = reference.diagonal(t);
                    let rounded = round_to_nearest(&sum.value);
                    check(&mut failures, &rounded == expected, || {
                        format!("{variant:?} t={t}: rounds to {rounded}, table {expected}")
                    });
                    let error = (sum.value.clone() - rat_from_int(expected.clone())).abs();
                    check(&mut failures, error < sum.bound, || {
                        format!("{variant:?} t={t}: enclosure violated")
                    });
                }
                Err(e) => failures.push(format!("{variant:?} t={t}: {e}")),
            }
        }
    }
    summarize(failures, "4 variants, t <= 12, 60 terms".into())
}

/// Shapes move correctly one step at a time, the counterexample trajectory
/// is unrealizable while its move path exists, and the trajectory-by-
/// trajectory comparison holds up to length 7 and breaks at length 8.
fn rsk_obstruction() -> (bool, String) {
    let mut failures = Vec::new();
    for n in 1..=4usize {
        for g in enumerate_group(GroupFamily::A, n).expect("n >= 1") {
            let p = g.to_permutation().expect("type A");
            for m in 1..=n {
                check(&mut failures, verify_move_step(&p, m), || {
                    format!("move step fails at tau={p}, m={m}")
                });
            }
        }
    }
    let trajectory = ShapeTrajectory::unreachable_example();
    match search_trajectory(5, &trajectory) {
        Ok(seqs) => check(&mut failures, seqs.is_empty(), || {
            format!("expected 0 sequences, found {}", seqs.len())
        }),
        Err(e) => failures.push(format!("search failed: {e}")),
    }
    check(&mut failures, trajectory.move_path_count() >= Int::one(), || {
        "expected at least one move path".into()
    });
    for t in 0..=7u64 {
        match bijection_check(5, t) {
            Ok(report) => check(&mut failures, report.agrees(), || {
                format!("n=5 t={t}: unexpected mismatch")
            }),
            Err(e) => failures.push(format!("bijection n=5 t={t}: {e}")),
        }
    }
    match bijection_check(5, 8) {
        Ok(report) => {
            check(&mut failures, !report.agrees(), || {
                "n=5 t=8: expected a trajectory-level disagreement".into()
            });
            check(&mut failures, report.total_sequences == report.total_move_paths, || {
                "n=5 t=8: marginal totals must still agree".into()
            });
        }
        Err(e) => failures.push(format!("bijection n=5 t=8: {e}")),
    }
    summarize(failures, "move steps, trajectory search, length-8 obstruction".into())
}

/// The restriction chain's distribution equals the insertion-shape
/// distribution of shuffle products, exactly, for `n <= 4`, `t <= 6`.
fn fulman_shapes() -> (bool, String) {
    let mut failures = Vec::new();
    let mut comparisons = 0;
    for n in 1..=4usize {
        for t in 0..=6u64 {
            comparisons += 1;
            match fulman_vs_rsk(n, t) {
                Ok(d) => check(&mut failures, d.agree, || format!("n={n} t={t}")),
                Err(e) => failures.push(format!("n={n} t={t}: {e}")),
            }
        }
    }
    summarize(failures, format!("{comparisons} distribution comparisons"))
}

/// Row colourings match the marked Bell numbers one parameter down, and the
/// embedded OEIS prefixes all match.
fn colourings_and_oeis() -> (bool, String) {
    let mut failures = Vec::new();
    let reference = table(Variant::BellB, 5, 3, Method::Recurrence).expect("valid");
    for t in 1..=6u64 {
        for n in 1..=4u32 {
            let q = q_colourings(t, n);
            let b = reference.get(t - 1, n - 1);
            check(&mut failures, &q == b, || format!("Q(1,{t})({n}) = {q} != {b}"));
        }
    }
    let checks = oeis_check();
    for c in &checks {
        check(&mut failures, c.matches(), || format!("{} prefix mismatch", c.sequence));
        check(&mut failures, c.expected.len() >= 10, || format!("{} short prefix", c.sequence));
    }
    summarize(failures, format!("24 colouring identities, {} OEIS prefixes", checks.len()))
}

/// Deviation from the predicted leading terms strictly decreases along the
/// sampled parameter lists.
fn asymptotic_trend() -> (bool, String) {
    match AsymptoticReport::standard() {
        Ok(report) => {
            if report.strictly_decreasing() {
                (true, "three deviation sequences strictly decrease".into())
            } else {
                (false, format!("non-monotone deviations:\n{}", report.render()))
            }
        }
        Err(e) => (false, format!("report failed: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_sequential() {
        assert_eq!(criterion_ids(), (1..=12).collect::<Vec<u32>>());
    }

    #[test]
    fn single_criterion_runs() {
        let results = run(Some(4), Some(1));
        assert_eq!(results.len(), 1);
        assert!(results[0].passed, "{}", results[0].detail);
        assert!(results[0].line().starts_with("PASS"));
    }
}
