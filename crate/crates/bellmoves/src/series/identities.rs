//! Exact verification of the numeric identities relating the count
//! families. Each check recomputes both sides by routes that do not share
//! the identity being tested; a report lists every failing cell, so a
//! falsified identity surfaces as data rather than a panic.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::{binomial, factorial, pow2, rat_from_int, Int, Rat};
use crate::moves::d_move_count;
use crate::shuffles::{count_identity_sequences, ShuffleFamily};
use crate::structures::{
    count_marked_partitions_exact, count_set_partitions_exact, for_each_set_partition,
    GroupFamily, SpacingRule,
};
use crate::{Error, Result};

use super::tables::{table, CountTable, Method, Variant};

/// The identities the suite can check, named by what they assert.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdentityName {
    /// `B'_t(n) + B'_{t-1}(n) = B_{t-1}(n-1)`.
    Bernhart,
    /// `stir'(t,n) + stir'(t-1,n)` counts spaced partitions into n blocks.
    SpacedStirling,
    /// `B'_t(t) = sum_s C(t,s) (-1)^(t-s) B_s(s)` and its inverse.
    BellInversion,
    /// `B'_t(t)` counts partitions with every block of size at least two.
    BlocksMinSizeTwo,
    /// `B_B'_t(n) + B_B'_{t-1}(n) = sum_s C(t-1,s) B_B_s(n-1)`.
    MarkedBernhart,
    /// `stir_B'(t,n) + stir_B'(t-1,n)` counts flip-marked spaced partitions.
    MarkedSpacedStirling,
    /// The binomial-inversion pair for the marked diagonal sequences.
    MarkedInversion,
    /// `B_B'_t(t)` counts evenly marked partitions with blocks of size >= 2.
    MarkedBlocksMinSizeTwo,
    /// `M_D'_t(n) + M_D'_{t-1}(n) = sum_s C(t-1,s) M_D_s(n-1)` for `n >= 2`.
    TypeDBernhart,
    /// `S_B_t(n) = S_D_t(n)` for `t < n`, and `S_B_t(t) + 1 = S_D_t(t)`.
    DaggerCheatAgreement,
    /// Truncated form of `sum_n (-1)^n C(n,j) / (2^n n!) = e^(-1/2) (-1)^j / (2^j j!)`.
    HalfExpAlternating,
    /// `stir'(t,n) = stir'(t-1,n-1) + (n-1) stir'(t-1,n)` for `n >= 3`.
    StirPrimeRecurrence,
    /// `stir_B(t,n) = stir_B(t-1,n-1) + 2n stir_B(t-1,n)`.
    StirDaggerRecurrence,
    /// `stir_B'(t,n) = stir_B'(t-1,n-1) + (2n-1) stir_B'(t-1,n)` for `n >= 3`.
    StirDaggerPrimeRecurrence,
    /// `stir_B(t,n) = 2^(t-n) stir(t,n)`.
    StirDaggerScaling,
}

impl IdentityName {
    pub fn name(self) -> &'static str {
        match self {
            IdentityName::Bernhart => "bernhart",
            IdentityName::SpacedStirling => "spaced-stirling",
            IdentityName::BellInversion => "bell-inversion",
            IdentityName::BlocksMinSizeTwo => "blocks-min-size-two",
            IdentityName::MarkedBernhart => "marked-bernhart",
            IdentityName::MarkedSpacedStirling => "marked-spaced-stirling",
            IdentityName::MarkedInversion => "marked-inversion",
            IdentityName::MarkedBlocksMinSizeTwo => "marked-blocks-min-size-two",
            IdentityName::TypeDBernhart => "type-d-bernhart",
            IdentityName::DaggerCheatAgreement => "dagger-cheat-agreement",
            IdentityName::HalfExpAlternating => "half-exp-alternating",
            IdentityName::StirPrimeRecurrence => "stir-prime-recurrence",
            IdentityName::StirDaggerRecurrence => "stir-dagger-recurrence",
            IdentityName::StirDaggerPrimeRecurrence => "stir-dagger-prime-recurrence",
            IdentityName::StirDaggerScaling => "stir-dagger-scaling",
        }
    }
}

pub fn all_identities() -> Vec<IdentityName> {
    vec![
        IdentityName::Bernhart,
        IdentityName::SpacedStirling,
        IdentityName::BellInversion,
        IdentityName::BlocksMinSizeTwo,
        IdentityName::MarkedBernhart,
        IdentityName::MarkedSpacedStirling,
        IdentityName::MarkedInversion,
        IdentityName::MarkedBlocksMinSizeTwo,
        IdentityName::TypeDBernhart,
        IdentityName::DaggerCheatAgreement,
        IdentityName::HalfExpAlternating,
        IdentityName::StirPrimeRecurrence,
        IdentityName::StirDaggerRecurrence,
        IdentityName::StirDaggerPrimeRecurrence,
        IdentityName::StirDaggerScaling,
    ]
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        all_identities()
            .into_iter()
            .find(|i| i.name() == s.trim())
            .ok_or_else(|| Error::invalid("identity", format!("unknown identity name {s:?}")))
    }
}

/// Result of checking one identity over a range; empty `failures` means the
/// identity held at every instance.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub name: String,
    pub range: String,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({
            "name": self.name,
            "range": self.range,
            "failures": self.failures,
        })
        .to_string()
    }
}

struct Checker {
    report: IdentityReport,
}

impl Checker {
    fn new(name: IdentityName, range: String) -> Self {
        Checker { report: IdentityReport { name: name.name().into(), range, failures: Vec::new() } }
    }

    fn expect_int(&mut self, at: String, lhs: &Int, rhs: &Int) {
        if lhs != rhs {
            self.report.failures.push(format!("{at}: {lhs} != {rhs}"));
        }
    }

    fn expect_rat(&mut self, at: String, lhs: &Rat, rhs: &Rat) {
        if lhs != rhs {
            self.report.failures.push(format!(
                "{at}: {} != {}",
                crate::algebra::format_rat(lhs),
                crate::algebra::format_rat(rhs)
            ));
        }
    }
}

/// Checks the named identity exactly over `t <= t_max`, `n <= n_max`
/// (ranges adapt per identity where the statement restricts them).
pub fn verify_identity(name: IdentityName, t_max: u64, n_max: u32) -> IdentityReport {
    match name {
        IdentityName::Bernhart => bernhart(t_max, n_max),
        IdentityName::SpacedStirling => spaced_stirling(t_max, n_max),
        IdentityName::BellInversion => {
            inversion(name, Variant::Bell, Variant::BellPrime, t_max)
        }
        IdentityName::BlocksMinSizeTwo => blocks_min_two(t_max, false),
        IdentityName::MarkedBernhart => marked_bernhart(t_max, n_max),
        IdentityName::MarkedSpacedStirling => marked_spaced_stirling(t_max, n_max),
        IdentityName::MarkedInversion => {
            inversion(name, Variant::BellB, Variant::BellBPrime, t_max)
        }
        IdentityName::MarkedBlocksMinSizeTwo => blocks_min_two(t_max, true),
        IdentityName::TypeDBernhart => type_d_bernhart(t_max, n_max),
        IdentityName::DaggerCheatAgreement => dagger_cheat_agreement(t_max.min(6), n_max.min(4)),
        IdentityName::HalfExpAlternating => half_exp_alternating(t_max),
        IdentityName::StirPrimeRecurrence => {
            stir_recurrence(name, Variant::StirPrime, t_max, n_max)
        }
        IdentityName::StirDaggerRecurrence => {
            stir_recurrence(name, Variant::StirB, t_max, n_max)
        }
        IdentityName::StirDaggerPrimeRecurrence => {
            stir_recurrence(name, Variant::StirBPrime, t_max, n_max)
        }
        IdentityName::StirDaggerScaling => stir_scaling(t_max, n_max),
    }
}

fn enumeration_table(variant: Variant, t_max: u64, n_max: u32) -> CountTable {
    table(variant, t_max, n_max, Method::Enumeration).expect("enumeration applies")
}

fn recurrence_table(variant: Variant, t_max: u64, n_max: u32) -> CountTable {
    table(variant, t_max, n_max, Method::Recurrence).expect("recurrence applies")
}

fn bernhart(t_max: u64, n_max: u32) -> IdentityReport {
    let mut c = Checker::new(IdentityName::Bernhart, format!("1<=t<={t_max}, 1<=n<={n_max}"));
    // both sides by enumeration, independent of the recurrence grids
    let bell = enumeration_table(Variant::Bell, t_max, n_max);
    let prime = enumeration_table(Variant::BellPrime, t_max, n_max);
    for t in 1..=t_max {
        for n in 1..=n_max {
            let lhs = prime.get(t, n) + prime.get(t - 1, n);
            c.expect_int(format!("t={t},n={n}"), &lhs, bell.get(t - 1, n - 1));
        }
    }
    c.report
}

/// The spaced interpretation needs `t >= 2`: the underlying bijection
/// deletes the element `t` from a block it shares with `1`, which for
/// `t = 1` would empty the block.
fn spaced_stirling(t_max: u64, n_max: u32) -> IdentityReport {
    let mut c =
        Checker::new(IdentityName::SpacedStirling, format!("2<=t<={t_max}, 0<=n<={n_max}"));
    let stir_prime = enumeration_table(Variant::StirPrime, t_max, n_max);
    for t in 2..=t_max {
        for n in 0..=n_max {
            let lhs = stir_prime.get(t, n) + stir_prime.get(t - 1, n);
            let rhs = count_set_partitions_exact(t as usize, n as usize, SpacingRule::Spaced);
            c.expect_int(format!("t={t},n={n}"), &lhs, &rhs);
        }
    }
    c.report
}

fn inversion(name: IdentityName, plain: Variant, primed: Variant, t_max: u64) -> IdentityReport {
    let mut c = Checker::new(name, format!("0<=t<={t_max}"));
    let n_cap = u32::try_from(t_max).expect("t_max fits");
    let plain = recurrence_table(plain, t_max, n_cap);
    let primed = recurrence_table(primed, t_max, n_cap);
    for t in 0..=t_max {
        // primed diagonal from the alternating sum of plain diagonals
        let mut alt = Int::zero();
        for s in 0..=t {
            let term = binomial(t, s as i64) * plain.diagonal(s);
            if (t - s) % 2 == 0 {
                alt += term;
            } else {
                alt -= term;
            }
        }
        c.expect_int(format!("t={t} alternating"), &alt, primed.diagonal(t));
        // plain diagonal from the positive sum of primed diagonals
        let mut fwd = Int::zero();
        for s in 0..=t {
            fwd += binomial(t, s as i64) * primed.diagonal(s);
        }
        c.expect_int(format!("t={t} forward"), &fwd, plain.diagonal(t));
    }
    c.report
}

/// Counts set partitions of `{1..t}` whose blocks all have at least two
/// elements; with `marked`, weights each by its even-mark assignments.
fn count_min_two(t: u64, marked: bool) -> Int {
    let mut total = Int::zero();
    for_each_set_partition(t as usize, t.max(1) as usize, SpacingRule::None, &mut |p| {
        if p.blocks().iter().any(|b| b.len() < 2) {
            return;
        }
        if marked {
            let mut ways = Int::one();
            for b in p.blocks() {
                ways <<= b.len() - 1;
            }
            total += ways;
        } else {
            total += 1;
        }
    });
    total
}

fn blocks_min_two(t_max: u64, marked: bool) -> IdentityReport {
    let (name, variant) = if marked {
        (IdentityName::MarkedBlocksMinSizeTwo, Variant::BellBPrime)
    } else {
        (IdentityName::BlocksMinSizeTwo, Variant::BellPrime)
    };
    let mut c = Checker::new(name, format!("0<=t<={t_max}"));
    let primed = recurrence_table(variant, t_max, u32::try_from(t_max).expect("fits"));
    for t in 0..=t_max {
        let rhs = count_min_two(t, marked);
        c.expect_int(format!("t={t}"), primed.diagonal(t), &rhs);
    }
    c.report
}

fn marked_bernhart(t_max: u64, n_max: u32) -> IdentityReport {
    let mut c =
        Checker::new(IdentityName::MarkedBernhart, format!("1<=t<={t_max}, 1<=n<={n_max}"));
    let bell_b = enumeration_table(Variant::BellB, t_max, n_max);
    let prime = enumeration_table(Variant::BellBPrime, t_max, n_max);
    for t in 1..=t_max {
        for n in 1..=n_max {
            let lhs = prime.get(t, n) + prime.get(t - 1, n);
            let mut rhs = Int::zero();
            for s in 0..t {
                rhs += binomial(t - 1, s as i64) * bell_b.get(s, n - 1);
            }
            c.expect_int(format!("t={t},n={n}"), &lhs, &rhs);
        }
    }
    c.report
}

/// Marked analogue of [`spaced_stirling`], with the same `t >= 2` boundary.
fn marked_spaced_stirling(t_max: u64, n_max: u32) -> IdentityReport {
    let mut c = Checker::new(
        IdentityName::MarkedSpacedStirling,
        format!("2<=t<={t_max}, 0<=n<={n_max}"),
    );
    let stir_bp = enumeration_table(Variant::StirBPrime, t_max, n_max);
    for t in 2..=t_max {
        for n in 0..=n_max {
            let lhs = stir_bp.get(t, n) + stir_bp.get(t - 1, n);
            let rhs = count_marked_partitions_exact(
                t as usize,
                n as usize,
                crate::structures::ForcedMarkRule::Flip,
            );
            c.expect_int(format!("t={t},n={n}"), &lhs, &rhs);
        }
    }
    c.report
}

/// The type D relative of the Bernhart recurrences, with the summand read
/// as the count one deck size down. The two-sided degenerate deck `n = 1`
/// is excluded: the walk below it has no meaning.
fn type_d_bernhart(t_max: u64, n_max: u32) -> IdentityReport {
    let n_max = n_max.min(4);
    let mut c =
        Checker::new(IdentityName::TypeDBernhart, format!("1<=t<={t_max}, 2<=n<={n_max}"));
    for n in 2..=n_max {
        for t in 1..=t_max {
            let lhs = d_move_count(n, t, true).expect("n >= 1")
                + d_move_count(n, t - 1, true).expect("n >= 1");
            let mut rhs = Int::zero();
            for s in 0..t {
                rhs += binomial(t - 1, s as i64) * d_move_count(n - 1, s, false).expect("n >= 1");
            }
            c.expect_int(format!("t={t},n={n}"), &lhs, &rhs);
        }
    }
    c.report
}

fn dagger_cheat_agreement(t_max: u64, n_max: u32) -> IdentityReport {
    let mut c = Checker::new(
        IdentityName::DaggerCheatAgreement,
        format!("t<={t_max}, 2<=n<={n_max}"),
    );
    for n in 2..=n_max as usize {
        let b = ShuffleFamily::random_to_top(GroupFamily::B, n, false).expect("valid");
        let d = ShuffleFamily::random_to_top(GroupFamily::D, n, false).expect("valid");
        for t in 0..=t_max.min(n as u64) {
            let sb = count_identity_sequences(&b, t).expect("within cap");
            let sd = count_identity_sequences(&d, t).expect("within cap");
            if t < n as u64 {
                c.expect_int(format!("t={t},n={n} (below diagonal)"), &sb, &sd);
            } else {
                c.expect_int(format!("t={t},n={n} (diagonal)"), &(sb + 1), &sd);
            }
        }
    }
    c.report
}

/// Both sides of the alternating identity truncated at `n <= N`: by an
/// index shift the partial sums agree exactly, which is the finite content
/// of the full statement.
fn half_exp_alternating(t_max: u64) -> IdentityReport {
    let cap = t_max.min(20);
    let truncation = cap + 12;
    let mut c = Checker::new(
        IdentityName::HalfExpAlternating,
        format!("0<=j<={cap}, partial sums to n<={truncation}"),
    );
    for j in 0..=cap {
        let mut lhs = Rat::zero();
        for n in j..=truncation {
            let term = rat_from_int(binomial(n, j as i64))
                / rat_from_int(pow2(n) * factorial(n));
            if n % 2 == 0 {
                lhs += term;
            } else {
                lhs -= term;
            }
        }
        let mut partial_exp = Rat::zero();
        for m in 0..=(truncation - j) {
            let term = Rat::one() / rat_from_int(pow2(m) * factorial(m));
            if m % 2 == 0 {
                partial_exp += term;
            } else {
                partial_exp -= term;
            }
        }
        let mut rhs = partial_exp / rat_from_int(pow2(j) * factorial(j));
        if j % 2 != 0 {
            rhs = -rhs;
        }
        c.expect_rat(format!("j={j}"), &lhs, &rhs);
    }
    c.report
}

fn stir_recurrence(name: IdentityName, variant: Variant, t_max: u64, n_max: u32) -> IdentityReport {
    // values come from grids that do not use the recurrence under test:
    // the scaling relation for stir_B, the Bernhart-style grids for the
    // primed families
    let (values, n_lo, coeff): (Box<dyn Fn(u64, u32) -> Int>, u32, fn(u32) -> u64) = match variant
    {
        Variant::StirPrime => {
            let t = recurrence_table(Variant::StirPrime, t_max, n_max);
            (Box::new(move |tt, n| t.get(tt, n).clone()), 3, |n| n as u64 - 1)
        }
        Variant::StirB => {
            let stir = recurrence_table(Variant::Stir, t_max, n_max);
            let scaled = move |tt: u64, n: u32| {
                let v = stir.get(tt, n);
                if v.is_zero() || tt < n as u64 {
                    Int::zero()
                } else {
                    v.clone() << (tt - n as u64) as usize
                }
            };
            (Box::new(scaled), 1, |n| 2 * n as u64)
        }
        Variant::StirBPrime => {
            let t = recurrence_table(Variant::StirBPrime, t_max, n_max);
            (Box::new(move |tt, n| t.get(tt, n).clone()), 3, |n| 2 * n as u64 - 1)
        }
        _ => unreachable!("recurrences exist for the three stirling variants"),
    };
    let mut c = Checker::new(name, format!("1<=t<={t_max}, {n_lo}<=n<={n_max}"));
    for t in 1..=t_max {
        for n in n_lo..=n_max {
            let rhs = values(t - 1, n - 1) + values(t - 1, n) * Int::from(coeff(n));
            c.expect_int(format!("t={t},n={n}"), &values(t, n), &rhs);
        }
    }
    c.report
}

fn stir_scaling(t_max: u64, n_max: u32) -> IdentityReport {
    let mut c =
        Checker::new(IdentityName::StirDaggerScaling, format!("0<=t<={t_max}, 0<=n<={n_max}"));
    let stir = recurrence_table(Variant::Stir, t_max, n_max);
    let stir_b = recurrence_table(Variant::StirB, t_max, n_max);
    for t in 0..=t_max {
        for n in 0..=n_max {
            let v = stir.get(t, n);
            let scaled = if v.is_zero() || t < n as u64 {
                Int::zero()
            } else {
                v.clone() << (t - n as u64) as usize
            };
            c.expect_int(format!("t={t},n={n}"), &scaled, stir_b.get(t, n));
        }
    }
    c.report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for i in all_identities() {
            assert_eq!(i.name().parse::<IdentityName>().unwrap(), i);
        }
        assert!("no-such-identity".parse::<IdentityName>().is_err());
    }

    #[test]
    fn bernhart_small() {
        let r = verify_identity(IdentityName::Bernhart, 6, 4);
        assert!(r.passed(), "failures: {:?}", r.failures);
    }

    #[test]
    fn bernhart_hand_instance() {
        // B'_4(4) + B'_3(4) = B_3(3): 4 + 1 = 5
        let prime = enumeration_table(Variant::BellPrime, 4, 4);
        assert_eq!(prime.get(4, 4) + prime.get(3, 4), crate::algebra::int(5));
    }

    #[test]
    fn spaced_and_min_two() {
        let r = verify_identity(IdentityName::SpacedStirling, 6, 4);
        assert!(r.passed(), "failures: {:?}", r.failures);
        let r = verify_identity(IdentityName::BlocksMinSizeTwo, 7, 7);
        assert!(r.passed(), "failures: {:?}", r.failures);
        // B'_4(4) = 4 partitions of {1..4} into blocks of size >= 2
        assert_eq!(count_min_two(4, false), crate::algebra::int(4));
    }

    #[test]
    fn inversions() {
        let r = verify_identity(IdentityName::BellInversion, 9, 0);
        assert!(r.passed(), "failures: {:?}", r.failures);
        let r = verify_identity(IdentityName::MarkedInversion, 9, 0);
        assert!(r.passed(), "failures: {:?}", r.failures);
    }

    #[test]
    fn marked_family() {
        let r = verify_identity(IdentityName::MarkedBernhart, 6, 3);
        assert!(r.passed(), "failures: {:?}", r.failures);
        let r = verify_identity(IdentityName::MarkedSpacedStirling, 6, 4);
        assert!(r.passed(), "failures: {:?}", r.failures);
        let r = verify_identity(IdentityName::MarkedBlocksMinSizeTwo, 7, 7);
        assert!(r.passed(), "failures: {:?}", r.failures);
    }

    #[test]
    fn marked_bernhart_base_instance() {
        // t = 1, n = 1: lhs = B_B'_1(1) + B_B'_0(1) = 0 + 1; rhs = B_B_0(0) = 1
        let r = verify_identity(IdentityName::MarkedBernhart, 1, 1);
        assert!(r.passed(), "failures: {:?}", r.failures);
    }

    #[test]
    fn type_d_and_cheat() {
        let r = verify_identity(IdentityName::TypeDBernhart, 6, 3);
        assert!(r.passed(), "failures: {:?}", r.failures);
        let r = verify_identity(IdentityName::DaggerCheatAgreement, 6, 4);
        assert!(r.passed(), "failures: {:?}", r.failures);
    }

    #[test]
    fn recurrences_and_scaling() {
        for name in [
            IdentityName::HalfExpAlternating,
            IdentityName::StirPrimeRecurrence,
            IdentityName::StirDaggerRecurrence,
            IdentityName::StirDaggerPrimeRecurrence,
            IdentityName::StirDaggerScaling,
        ] {
            let r = verify_identity(name, 8, 5);
            assert!(r.passed(), "{name}: {:?}", r.failures);
        }
    }

    #[test]
    fn report_json() {
        let r = verify_identity(IdentityName::Bernhart, 3, 2);
        let v: serde_json::Value = r.to_json().parse().unwrap();
        assert_eq!(v["name"], "bernhart");
        assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    }
}
